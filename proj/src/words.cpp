#include "symdyn/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>

namespace symdyn {

Symbol::Symbol(std::string name) : name_(std::move(name)) {
    if (name_.empty())
        throw std::invalid_argument("symbol name must be non-empty");
    for (unsigned char c : name_)
        if (std::isspace(c))
            throw std::invalid_argument("symbol name must not contain whitespace: '" + name_ + "'");
    if (name_.front() == '#')
        throw std::invalid_argument("symbol name must not start with '#': '" + name_ + "'");
}

Alphabet::Alphabet(std::vector<Symbol> symbols) {
    for (auto& s : symbols) {
        if (index_.count(s.name()))
            continue;
        index_.emplace(s.name(), symbols_.size());
        symbols_.push_back(std::move(s));
    }
}

std::size_t Alphabet::index_of(const Symbol& s) const {
    auto it = index_.find(s.name());
    if (it == index_.end())
        throw std::out_of_range("symbol '" + s.name() + "' is not in the alphabet");
    return it->second;
}

Word::Word(std::vector<Symbol> letters) : letters_(std::move(letters)) {
    if (letters_.empty())
        throw std::invalid_argument("a word must contain at least one letter");
}

Word Word::sub(std::size_t pos, std::size_t len) const {
    if (len == 0 || pos + len > letters_.size())
        throw std::out_of_range("subword range out of bounds");
    return Word(std::vector<Symbol>(letters_.begin() + pos, letters_.begin() + pos + len));
}

std::string Word::str() const {
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i)
            out += ' ';
        out += letters_[i].name();
    }
    return out;
}

FiniteWordSet::FiniteWordSet(std::vector<Word> words) {
    std::set<Word> seen;
    for (auto& w : words) {
        if (!seen.insert(w).second)
            continue;
        words_.push_back(std::move(w));
    }
    std::vector<Symbol> letters;
    std::set<Symbol> letter_seen;
    for (const auto& w : words_)
        for (const auto& s : w)
            if (letter_seen.insert(s).second)
                letters.push_back(s);
    alphabet_ = Alphabet(std::move(letters));
}

std::set<Word> FiniteWordSet::language(std::size_t n) const {
    if (n == 0)
        throw std::invalid_argument("language order must be positive");
    std::set<Word> out;
    for (const auto& w : words_)
        if (w.size() >= n)
            for (std::size_t i = 0; i + n <= w.size(); ++i)
                out.insert(w.sub(i, n));
    return out;
}

bool FiniteWordSet::operator==(const FiniteWordSet& other) const {
    if (words_.size() != other.words_.size())
        return false;
    std::set<Word> a(words_.begin(), words_.end());
    std::set<Word> b(other.words_.begin(), other.words_.end());
    return a == b;
}

std::set<Word> subwords(const FiniteWordSet& ws, std::size_t n) {
    return ws.language(n);
}

bool is_n_prolongeable(const LanguageSource& src, std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("prolongation order must be positive");
    auto ln = src.language(n);
    auto ln1 = src.language(n + 1);
    std::set<Word> left_extendable;  // w such that some a·w is in L_{n+1}
    std::set<Word> right_extendable; // w such that some w·b is in L_{n+1}
    for (const auto& w : ln1) {
        left_extendable.insert(w.sub(1, n));
        right_extendable.insert(w.sub(0, n));
    }
    for (const auto& w : ln)
        if (!left_extendable.count(w) || !right_extendable.count(w))
            return false;
    return true;
}

Projection::Projection(Alphabet source, Alphabet target, std::map<Symbol, Symbol> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    for (const auto& [from, to] : map_) {
        if (!source_.contains(from))
            throw std::invalid_argument("projection maps symbol '" + from.name() +
                                        "' outside its source alphabet");
        if (!target_.contains(to))
            throw std::invalid_argument("projection image '" + to.name() +
                                        "' is outside the target alphabet");
    }
    for (const auto& s : source_)
        if (!map_.count(s))
            throw std::invalid_argument("projection is not total: '" + s.name() + "' has no image");
}

Projection Projection::identity(const Alphabet& a) {
    std::map<Symbol, Symbol> m;
    for (const auto& s : a)
        m.emplace(s, s);
    return Projection(a, a, std::move(m));
}

const Symbol& Projection::operator()(const Symbol& s) const {
    auto it = map_.find(s);
    if (it == map_.end())
        throw std::out_of_range("projection is undefined on symbol '" + s.name() + "'");
    return it->second;
}

Word Projection::operator()(const Word& w) const {
    std::vector<Symbol> out;
    out.reserve(w.size());
    for (const auto& s : w)
        out.push_back((*this)(s));
    return Word(std::move(out));
}

FiniteWordSet Projection::operator()(const FiniteWordSet& ws) const {
    for (const auto& s : ws.alphabet())
        if (!source_.contains(s))
            throw std::invalid_argument("word set uses symbol '" + s.name() +
                                        "' outside the projection source alphabet");
    std::vector<Word> out;
    out.reserve(ws.words().size());
    for (const auto& w : ws.words())
        out.push_back((*this)(w));
    return FiniteWordSet(std::move(out));
}

bool Projection::is_bijective() const {
    if (source_.size() != target_.size())
        return false;
    std::set<Symbol> images;
    for (const auto& [from, to] : map_) {
        (void)from;
        images.insert(to);
    }
    return images.size() == target_.size();
}

Projection Projection::inverted() const {
    if (!is_bijective())
        throw std::invalid_argument("cannot invert a non-bijective projection");
    std::map<Symbol, Symbol> inv;
    for (const auto& [from, to] : map_)
        inv.emplace(to, from);
    return Projection(target_, source_, std::move(inv));
}

Projection compose(const Projection& outer, const Projection& inner) {
    std::map<Symbol, Symbol> m;
    for (const auto& [from, mid] : inner.mapping())
        m.emplace(from, outer(mid));
    return Projection(inner.source(), outer.target(), std::move(m));
}

FiniteWordSet apply_projection(const Projection& p, const FiniteWordSet& ws) {
    return p(ws);
}

namespace {

struct SearchContext {
    const FiniteWordSet* x;
    const FiniteWordSet* y;
    std::vector<std::vector<std::pair<std::size_t, bool>>> incident; // per letter: (other, this-is-first)
    std::set<std::pair<Symbol, Symbol>> l2y;
    std::set<Word> y_words;
    bool injective = false;
};

std::set<std::pair<Symbol, Symbol>> pair_set(const FiniteWordSet& ws) {
    std::set<std::pair<Symbol, Symbol>> out;
    for (const auto& w : ws.language(2))
        out.emplace(w[0], w[1]);
    return out;
}

std::optional<Projection> search_projection(const FiniteWordSet& x, const FiniteWordSet& y,
                                            bool injective,
                                            const std::vector<std::vector<std::size_t>>& candidates) {
    const auto& ax = x.alphabet();
    const auto& ay = y.alphabet();
    const std::size_t n = ax.size();

    // L_2 pairs of x as index pairs, grouped per letter for incremental checks.
    std::vector<std::vector<std::pair<std::size_t, bool>>> incident(n);
    for (const auto& w : x.language(2)) {
        std::size_t a = ax.index_of(w[0]);
        std::size_t b = ax.index_of(w[1]);
        incident[a].emplace_back(b, true);
        if (a != b)
            incident[b].emplace_back(a, false);
    }
    auto l2y = pair_set(y);
    std::set<Word> y_words(y.words().begin(), y.words().end());

    std::vector<std::size_t> assign(n, SIZE_MAX);
    std::vector<bool> used(ay.size(), false);

    // Words of x indexed by the highest-alphabet-index letter they contain:
    // once that letter is assigned the whole image word is known.
    std::vector<std::vector<std::size_t>> complete_at(n);
    for (std::size_t wi = 0; wi < x.words().size(); ++wi) {
        std::size_t hi = 0;
        for (const auto& s : x.words()[wi])
            hi = std::max(hi, ax.index_of(s));
        complete_at[hi].push_back(wi);
    }

    std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
        if (i == n) {
            std::set<Word> image;
            for (const auto& w : x.words()) {
                std::vector<Symbol> letters;
                letters.reserve(w.size());
                for (const auto& s : w)
                    letters.push_back(ay.at(assign[ax.index_of(s)]));
                image.insert(Word(std::move(letters)));
            }
            return image == y_words;
        }
        for (std::size_t cand : candidates[i]) {
            if (injective && used[cand])
                continue;
            assign[i] = cand;
            bool ok = true;
            for (const auto& [other, first] : incident[i]) {
                if (other != i && assign[other] == SIZE_MAX)
                    continue;
                const Symbol& ia = ay.at(assign[i]);
                const Symbol& ib = ay.at(assign[other]);
                bool found = first ? l2y.count({ia, ib}) != 0 : l2y.count({ib, ia}) != 0;
                if (!found) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                for (std::size_t wi : complete_at[i]) {
                    const Word& w = x.words()[wi];
                    std::vector<Symbol> letters;
                    letters.reserve(w.size());
                    for (const auto& s : w)
                        letters.push_back(ay.at(assign[ax.index_of(s)]));
                    if (!y_words.count(Word(std::move(letters)))) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) {
                if (injective)
                    used[cand] = true;
                if (dfs(i + 1))
                    return true;
                if (injective)
                    used[cand] = false;
            }
            assign[i] = SIZE_MAX;
        }
        return false;
    };

    if (!dfs(0))
        return std::nullopt;

    std::map<Symbol, Symbol> m;
    for (std::size_t i = 0; i < n; ++i)
        m.emplace(ax.at(i), ay.at(assign[i]));
    return Projection(ax, ay, std::move(m));
}

std::multiset<std::size_t> length_multiset(const FiniteWordSet& ws) {
    std::multiset<std::size_t> out;
    for (const auto& w : ws.words())
        out.insert(w.size());
    return out;
}

} // namespace

std::optional<Projection> find_projection(const FiniteWordSet& x, const FiniteWordSet& y) {
    if (x.empty() || y.empty()) {
        if (x.empty() && y.empty())
            return Projection(x.alphabet(), y.alphabet(), {});
        return std::nullopt;
    }
    if (x.alphabet().size() < y.alphabet().size())
        return std::nullopt;
    // A letterwise map preserves lengths, so the length sets must agree.
    std::set<std::size_t> lx, ly;
    for (const auto& w : x.words())
        lx.insert(w.size());
    for (const auto& w : y.words())
        ly.insert(w.size());
    if (lx != ly)
        return std::nullopt;

    std::vector<std::vector<std::size_t>> candidates(x.alphabet().size());
    for (std::size_t i = 0; i < x.alphabet().size(); ++i)
        for (std::size_t j = 0; j < y.alphabet().size(); ++j)
            candidates[i].push_back(j);
    return search_projection(x, y, /*injective=*/false, candidates);
}

std::optional<Projection> are_similar(const FiniteWordSet& x, const FiniteWordSet& y) {
    if (x.alphabet().size() != y.alphabet().size())
        return std::nullopt;
    if (x.words().size() != y.words().size())
        return std::nullopt;
    if (length_multiset(x) != length_multiset(y))
        return std::nullopt;

    const auto& ax = x.alphabet();
    const auto& ay = y.alphabet();

    // Renaming-invariant letter signature: per-word occurrence counts plus
    // distinct neighbour counts in the L_2 digraph.
    auto signature = [](const FiniteWordSet& ws, const Symbol& s) {
        std::vector<std::size_t> counts;
        for (const auto& w : ws.words()) {
            std::size_t c = 0;
            for (const auto& t : w)
                if (t == s)
                    ++c;
            counts.push_back(c);
        }
        std::sort(counts.begin(), counts.end());
        std::set<Symbol> lefts, rights;
        for (const auto& w : ws.language(2)) {
            if (w[0] == s)
                rights.insert(w[1]);
            if (w[1] == s)
                lefts.insert(w[0]);
        }
        counts.push_back(lefts.size());
        counts.push_back(rights.size());
        return counts;
    };

    std::vector<std::vector<std::size_t>> sig_y;
    for (const auto& t : ay)
        sig_y.push_back(signature(y, t));

    std::vector<std::vector<std::size_t>> candidates(ax.size());
    for (std::size_t i = 0; i < ax.size(); ++i) {
        auto sig = signature(x, ax.at(i));
        std::vector<std::size_t> cand;
        // Prefer the identically named letter so that are_similar(x, x)
        // returns the identity.
        for (std::size_t j = 0; j < ay.size(); ++j)
            if (ay.at(j) == ax.at(i) && sig_y[j] == sig)
                cand.push_back(j);
        for (std::size_t j = 0; j < ay.size(); ++j)
            if (!(ay.at(j) == ax.at(i)) && sig_y[j] == sig)
                cand.push_back(j);
        if (cand.empty())
            return std::nullopt;
        candidates[i] = std::move(cand);
    }
    return search_projection(x, y, /*injective=*/true, candidates);
}

} // namespace symdyn
