#include "symdyn/sft.hpp"

#include "symdyn/block_code.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

namespace symdyn {

namespace {

// All letter tuples of the given length, in alphabet order; the single
// empty tuple for length 0.
std::vector<std::vector<Symbol>> all_tuples(const Alphabet& a, std::size_t n) {
    std::vector<std::vector<Symbol>> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    if (a.empty())
        return out;
    std::vector<std::size_t> odo(n, 0);
    while (true) {
        std::vector<Symbol> t;
        t.reserve(n);
        for (std::size_t i : odo)
            t.push_back(a.at(i));
        out.push_back(std::move(t));
        std::size_t p = n;
        while (p > 0 && ++odo[p - 1] == a.size())
            odo[--p] = 0;
        if (p == 0)
            break;
    }
    return out;
}

TransitionGraph build_graph(const Alphabet& a, std::size_t s, const std::set<Word>& forbidden) {
    TransitionGraph g;
    if (a.empty())
        return g;

    std::vector<Word> verts;
    for (auto& t : all_tuples(a, s))
        verts.emplace_back(std::move(t));
    std::sort(verts.begin(), verts.end());
    std::map<Word, std::size_t> vid;
    for (std::size_t v = 0; v < verts.size(); ++v)
        vid.emplace(verts[v], v);

    struct Edge {
        std::size_t from, to;
        Word word;
    };
    std::vector<Edge> edges;
    for (auto& t : all_tuples(a, s + 1)) {
        Word w(std::move(t));
        if (forbidden.count(w))
            continue;
        const std::size_t from = vid.at(w.sub(0, s));
        const std::size_t to = vid.at(w.sub(1, s));
        edges.push_back({from, to, std::move(w)});
    }

    std::vector<char> alive(verts.size(), 1);
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<std::size_t> indeg(verts.size(), 0), outdeg(verts.size(), 0);
        for (const Edge& e : edges)
            if (alive[e.from] && alive[e.to]) {
                ++outdeg[e.from];
                ++indeg[e.to];
            }
        for (std::size_t v = 0; v < verts.size(); ++v)
            if (alive[v] && (indeg[v] == 0 || outdeg[v] == 0)) {
                alive[v] = 0;
                changed = true;
            }
    }

    std::vector<std::size_t> newid(verts.size(), 0);
    for (std::size_t v = 0; v < verts.size(); ++v)
        if (alive[v]) {
            newid[v] = g.vertices.size();
            g.vertices.push_back(verts[v]);
        }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& x, const Edge& y) { return x.word < y.word; });
    g.out.resize(g.vertices.size());
    g.in.resize(g.vertices.size());
    for (const Edge& e : edges) {
        if (!alive[e.from] || !alive[e.to])
            continue;
        g.edges.push_back(e.word);
        g.out[newid[e.from]].push_back(newid[e.to]);
        g.in[newid[e.to]].push_back(newid[e.from]);
    }
    return g;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    return a > cap - b ? cap : a + b;
}

std::vector<Symbol> occurring_letters(const Sft& sft) {
    std::vector<Symbol> out;
    for (const Word& w : sft.language(1))
        out.push_back(w.front());
    return out;
}

} // namespace

Sft::Sft(Alphabet alphabet, std::vector<Word> forbidden) {
    for (const Word& w : forbidden)
        for (const Symbol& s : w)
            if (!alphabet.contains(s))
                throw std::invalid_argument("forbidden word uses unknown symbol '" + s.name() +
                                            "'");

    std::set<Symbol> removed;
    for (const Word& w : forbidden)
        if (w.size() == 1)
            removed.insert(w.front());
    std::vector<Symbol> kept;
    for (const Symbol& s : alphabet)
        if (!removed.count(s))
            kept.push_back(s);
    alphabet_ = Alphabet(std::move(kept));

    std::vector<Word> words;
    for (Word& w : forbidden) {
        if (w.size() == 1)
            continue;
        const bool dead = std::any_of(w.begin(), w.end(),
                                      [&](const Symbol& s) { return removed.count(s) != 0; });
        if (!dead)
            words.push_back(std::move(w));
    }

    step_ = 1;
    for (const Word& w : words)
        step_ = std::max(step_, w.size() - 1);
    for (const Word& w : words) {
        const std::size_t missing = step_ + 1 - w.size();
        for (std::size_t left = 0; left <= missing; ++left) {
            for (const auto& x : all_tuples(alphabet_, left)) {
                for (const auto& y : all_tuples(alphabet_, missing - left)) {
                    std::vector<Symbol> padded = x;
                    padded.insert(padded.end(), w.begin(), w.end());
                    padded.insert(padded.end(), y.begin(), y.end());
                    forbidden_.insert(Word(std::move(padded)));
                }
            }
        }
    }

    graph_ = build_graph(alphabet_, step_, forbidden_);
}

std::set<Word> Sft::language(std::size_t n) const {
    if (n == 0)
        throw std::invalid_argument("language length must be positive");
    std::set<Word> out;
    if (graph_.vertices.empty())
        return out;
    if (n <= step_) {
        for (const Word& v : graph_.vertices)
            for (std::size_t p = 0; p + n <= v.size(); ++p)
                out.insert(v.sub(p, n));
        return out;
    }
    std::vector<Symbol> buf;
    const std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t v,
                                                                   std::size_t left) {
        if (left == 0) {
            out.insert(Word(buf));
            return;
        }
        for (std::size_t to : graph_.out[v]) {
            buf.push_back(graph_.vertices[to].back());
            walk(to, left - 1);
            buf.pop_back();
        }
    };
    for (std::size_t v = 0; v < graph_.vertices.size(); ++v) {
        buf = graph_.vertices[v].letters();
        walk(v, n - step_);
    }
    return out;
}

std::uint64_t Sft::language_count(std::size_t n) const {
    if (n == 0)
        throw std::invalid_argument("language length must be positive");
    if (graph_.vertices.empty())
        return 0;
    if (n <= step_)
        return language(n).size();
    // paths with n - S edges biject with words of length n
    std::vector<std::uint64_t> cur(graph_.vertices.size(), 1);
    for (std::size_t i = 0; i < n - step_; ++i) {
        std::vector<std::uint64_t> next(graph_.vertices.size(), 0);
        for (std::size_t v = 0; v < graph_.vertices.size(); ++v)
            for (std::size_t to : graph_.out[v])
                next[to] = sat_add(next[to], cur[v]);
        cur = std::move(next);
    }
    std::uint64_t total = 0;
    for (std::uint64_t c : cur)
        total = sat_add(total, c);
    return total;
}

Sft normalize_forbidden(Alphabet alphabet, std::vector<Word> forbidden) {
    return Sft(std::move(alphabet), std::move(forbidden));
}

std::set<Word> minimal_forbidden_words(const Sft& sft) {
    std::set<Word> out;
    const std::set<Word> l1 = sft.language(1);
    std::set<Word> prev = l1;
    for (std::size_t m = 2; m <= sft.step() + 2; ++m) {
        const std::set<Word> cur = sft.language(m);
        for (const Word& u : prev) {
            for (const Word& a : l1) {
                std::vector<Symbol> letters = u.letters();
                letters.push_back(a.front());
                Word w(std::move(letters));
                if (cur.count(w) || !prev.count(w.sub(1, m - 1)))
                    continue;
                if (m == sft.step() + 2)
                    throw std::logic_error("minimal forbidden word exceeds step bound");
                out.insert(std::move(w));
            }
        }
        prev = cur;
    }
    return out;
}

bool is_similarity_witness(const Sft& a, const Sft& b, const Projection& phi) {
    const std::size_t depth = std::max(a.step(), b.step()) + 1;
    std::set<Symbol> targets;
    for (const Word& w : b.language(1))
        targets.insert(w.front());
    std::set<Symbol> image;
    for (const Symbol& x : occurring_letters(a)) {
        if (!phi.source().contains(x))
            return false;
        const Symbol& y = phi(x);
        if (!targets.count(y) || !image.insert(y).second)
            return false;
    }
    if (image.size() != targets.size())
        return false;
    for (std::size_t n = 1; n <= depth; ++n) {
        std::set<Word> mapped;
        for (const Word& w : a.language(n))
            mapped.insert(phi(w));
        if (mapped != b.language(n))
            return false;
    }
    return true;
}

std::optional<Projection> sft_similar(const Sft& a, const Sft& b) {
    const std::size_t depth = std::max(a.step(), b.step()) + 1;
    std::vector<std::set<Word>> la(depth + 1), lb(depth + 1);
    for (std::size_t n = 1; n <= depth; ++n) {
        la[n] = a.language(n);
        lb[n] = b.language(n);
        if (la[n].size() != lb[n].size())
            return std::nullopt;
    }
    const std::vector<Symbol> xs = occurring_letters(a);
    const std::vector<Symbol> ys = occurring_letters(b);

    // positional occurrence counts across every L_n are renaming-invariant
    const auto signature = [&](const std::vector<std::set<Word>>& langs, const Symbol& s) {
        std::vector<std::size_t> sig;
        for (std::size_t n = 1; n <= depth; ++n)
            for (std::size_t p = 0; p < n; ++p) {
                std::size_t c = 0;
                for (const Word& w : langs[n])
                    c += w[p] == s ? 1 : 0;
                sig.push_back(c);
            }
        return sig;
    };
    std::map<Symbol, std::vector<std::size_t>> sig_b;
    for (const Symbol& y : ys)
        sig_b.emplace(y, signature(lb, y));
    std::map<Symbol, std::vector<Symbol>> candidates;
    for (const Symbol& x : xs) {
        const auto sx = signature(la, x);
        std::vector<Symbol> c;
        for (const Symbol& y : ys)
            if (sig_b.at(y) == sx)
                c.push_back(y);
        if (c.empty())
            return std::nullopt;
        auto self = std::find(c.begin(), c.end(), x);
        if (self != c.end())
            std::rotate(c.begin(), self, self + 1);
        candidates.emplace(x, std::move(c));
    }

    const auto pair_ok = [&](const Symbol& x1, const Symbol& x2, const Symbol& y1,
                             const Symbol& y2) {
        const bool in_a = la[2].count(Word({x1, x2})) != 0;
        const bool in_b = lb[2].count(Word({y1, y2})) != 0;
        return in_a == in_b;
    };
    std::map<Symbol, Symbol> assign;
    std::set<Symbol> used;
    const std::function<std::optional<Projection>(std::size_t)> go =
        [&](std::size_t i) -> std::optional<Projection> {
        if (i == xs.size()) {
            Projection phi(Alphabet(xs), Alphabet(ys), assign);
            if (is_similarity_witness(a, b, phi))
                return phi;
            return std::nullopt;
        }
        const Symbol& x = xs[i];
        for (const Symbol& y : candidates.at(x)) {
            if (used.count(y))
                continue;
            bool ok = pair_ok(x, x, y, y);
            for (auto it = assign.begin(); ok && it != assign.end(); ++it)
                ok = pair_ok(x, it->first, y, it->second) &&
                     pair_ok(it->first, x, it->second, y);
            if (!ok)
                continue;
            assign.emplace(x, y);
            used.insert(y);
            if (auto found = go(i + 1))
                return found;
            assign.erase(x);
            used.erase(y);
        }
        return std::nullopt;
    };
    return go(0);
}

Sft block_present_sft(const Sft& sft, std::size_t order) {
    if (order == 0)
        throw std::invalid_argument("block order must be positive");
    std::vector<Symbol> letters;
    for (const Word& w : sft.language(order))
        letters.push_back(block_letter(w));
    Alphabet blocks(std::move(letters));

    const std::size_t target_step = sft.step() + 1 > order ? sft.step() + 1 - order : 1;
    std::set<Word> realized;
    for (const Word& w : sft.language(order + target_step))
        realized.insert(higher_block_word(w, order));
    std::vector<Word> forbidden;
    for (auto& t : all_tuples(blocks, target_step + 1)) {
        Word w(std::move(t));
        if (!realized.count(w))
            forbidden.push_back(std::move(w));
    }
    return Sft(std::move(blocks), std::move(forbidden));
}

} // namespace symdyn
