#include "symdyn/relations.hpp"

#include "symdyn/block_code.hpp"
#include "symdyn/union_find.hpp"

#include <algorithm>
#include <string>

namespace symdyn {

Partition::Partition(Alphabet ground, std::vector<std::vector<Symbol>> classes)
    : ground_(std::move(ground)), classes_(std::move(classes)) {
    for (auto& cls : classes_) {
        if (cls.empty())
            throw std::invalid_argument("partition classes must be non-empty");
        std::sort(cls.begin(), cls.end());
        cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    }
    std::sort(classes_.begin(), classes_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::size_t covered = 0;
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        for (const Symbol& s : classes_[i]) {
            if (!ground_.contains(s))
                throw std::invalid_argument("partition class letter '" + s.name() +
                                            "' is not in the ground alphabet");
            if (!index_.emplace(s.name(), i).second)
                throw std::invalid_argument("letter '" + s.name() +
                                            "' appears in two partition classes");
            ++covered;
        }
    }
    if (covered != ground_.size())
        throw std::invalid_argument("partition classes do not cover the ground alphabet");
}

std::size_t Partition::class_index_of(const Symbol& s) const {
    auto it = index_.find(s.name());
    if (it == index_.end())
        throw std::out_of_range("letter '" + s.name() + "' is not in the partition ground");
    return it->second;
}

const std::vector<Symbol>& Partition::class_of(const Symbol& s) const {
    return classes_[class_index_of(s)];
}

bool Partition::same_class(const Symbol& a, const Symbol& b) const {
    return class_index_of(a) == class_index_of(b);
}

bool Partition::operator==(const Partition& other) const {
    return ground_ == other.ground_ && classes_ == other.classes_;
}

std::vector<Partition> letter_partitions(const LanguageSource& src, std::size_t order) {
    if (order == 0)
        throw std::invalid_argument("block order must be positive");

    std::vector<Symbol> letters;
    for (const Word& w : src.language(1))
        letters.push_back(w.front());
    Alphabet ground(letters);
    const std::size_t m = ground.size();

    // One union-find over (letter, level) states covers every k at once:
    // after shifting levels by k the edge set no longer depends on k, and
    // a ≡_k b becomes connectivity of (a, k) and (b, k).
    UnionFind uf(m * order);
    auto state = [m](std::size_t letter, std::size_t level) { return level * m + letter; };
    for (const Word& p : src.language(2)) {
        const std::size_t first = ground.index_of(p[0]);
        const std::size_t second = ground.index_of(p[1]);
        for (std::size_t level = 1; level < order; ++level)
            uf.unite(state(first, level), state(second, level - 1));
    }

    std::vector<Partition> out;
    out.reserve(order);
    for (std::size_t k = 0; k < order; ++k) {
        std::vector<std::vector<Symbol>> classes;
        std::unordered_map<std::size_t, std::size_t> class_of_root;
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t root = uf.find(state(i, k));
            auto [it, fresh] = class_of_root.emplace(root, classes.size());
            if (fresh)
                classes.emplace_back();
            classes[it->second].push_back(ground.at(i));
        }
        out.emplace_back(ground, std::move(classes));
    }
    return out;
}

Partition equivalence_k(const LanguageSource& src, std::size_t order, std::size_t k) {
    if (k >= order)
        throw std::out_of_range("relation index k must satisfy k < order");
    return letter_partitions(src, order)[k];
}

BlockPresentationCheck is_block_presentation(const LanguageSource& src, std::size_t order) {
    BlockPresentationCheck check{letter_partitions(src, order), std::nullopt};
    const Alphabet& ground = check.partitions.front().ground();
    for (std::size_t i = 0; i < ground.size() && !check.witness; ++i) {
        for (std::size_t j = i + 1; j < ground.size(); ++j) {
            const bool separated =
                std::any_of(check.partitions.begin(), check.partitions.end(),
                            [&](const Partition& p) {
                                return !p.same_class(ground.at(i), ground.at(j));
                            });
            if (!separated) {
                check.witness = std::make_pair(ground.at(i), ground.at(j));
                break;
            }
        }
    }
    return check;
}

not_block_presentation::not_block_presentation(Symbol a, Symbol b)
    : std::invalid_argument("not a block presentation: letters '" + a.name() + "' and '" +
                            b.name() + "' are never separated"),
      witness_(std::move(a), std::move(b)) {}

ClassTuple::ClassTuple(std::vector<Entry> entries) : entries_(std::move(entries)) {
    if (entries_.empty())
        throw std::invalid_argument("class tuples must have at least one entry");
}

namespace {

// A, B, ..., Z, AA, AB, ... by index.
std::string tuple_name(std::size_t i) {
    std::string s;
    ++i;
    while (i > 0) {
        --i;
        s.push_back(static_cast<char>('A' + i % 26));
        i /= 26;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

} // namespace

MaxPreimage max_preimage(const FiniteWordSet& ws, std::size_t order) {
    BlockPresentationCheck check = is_block_presentation(ws, order);
    if (!check.ok())
        throw not_block_presentation(check.witness->first, check.witness->second);

    const std::vector<Partition>& parts = check.partitions;
    const Alphabet& ground = parts.front().ground();
    const std::size_t m = ground.size();

    std::vector<std::set<std::size_t>> pred(m), succ(m);
    for (const Word& p : ws.language(2)) {
        const std::size_t first = ground.index_of(p[0]);
        const std::size_t second = ground.index_of(p[1]);
        succ[first].insert(second);
        pred[second].insert(first);
    }

    // Link a class of P_k to the class of P_{k+1} holding its predecessor
    // letters, and to the class of P_{k-1} holding its successor letters.
    // Empty neighbour sets give an absent link; a split across two classes
    // would contradict the defining relations.
    auto link = [&](const Partition& from, std::size_t c, const Partition& to,
                    const std::vector<std::set<std::size_t>>& nbrs) {
        std::optional<std::size_t> target;
        for (const Symbol& s : from.classes()[c]) {
            for (std::size_t n : nbrs[ground.index_of(s)]) {
                const std::size_t cls = to.class_index_of(ground.at(n));
                if (!target)
                    target = cls;
                else if (*target != cls)
                    throw std::logic_error("class neighbourhood spans two classes");
            }
        }
        return target;
    };
    std::vector<std::vector<std::optional<std::size_t>>> up(order), down(order);
    for (std::size_t k = 0; k < order; ++k) {
        const std::size_t count = parts[k].class_count();
        up[k].resize(count);
        down[k].resize(count);
        for (std::size_t c = 0; c < count; ++c) {
            if (k + 1 < order)
                up[k][c] = link(parts[k], c, parts[k + 1], pred);
            if (k > 0)
                down[k][c] = link(parts[k], c, parts[k - 1], succ);
        }
    }

    // Tuple for (k, c): entry k is class c of P_k, extended upward along
    // `up` and downward along `down`; once a link is absent the remaining
    // entries on that side stay empty.
    std::vector<ClassTuple> registry;
    std::vector<std::vector<std::size_t>> id_of(order);
    for (std::size_t k = 0; k < order; ++k) {
        id_of[k].resize(parts[k].class_count());
        for (std::size_t c = 0; c < parts[k].class_count(); ++c) {
            std::vector<ClassTuple::Entry> entries(order);
            entries[k] = parts[k].classes()[c];
            std::optional<std::size_t> cur = c;
            for (std::size_t j = k; j + 1 < order; ++j) {
                if (cur)
                    cur = up[j][*cur];
                if (cur)
                    entries[j + 1] = parts[j + 1].classes()[*cur];
            }
            cur = c;
            for (std::size_t j = k; j > 0; --j) {
                if (cur)
                    cur = down[j][*cur];
                if (cur)
                    entries[j - 1] = parts[j - 1].classes()[*cur];
            }
            ClassTuple tuple(std::move(entries));
            auto it = std::find(registry.begin(), registry.end(), tuple);
            if (it == registry.end()) {
                registry.push_back(std::move(tuple));
                it = std::prev(registry.end());
            }
            id_of[k][c] = static_cast<std::size_t>(it - registry.begin());
        }
    }

    // Decode every input word; tuples are named A, B, C, ... in order of
    // first appearance in the decoded words.
    std::vector<std::optional<Symbol>> names(registry.size());
    std::size_t named = 0;
    auto name_of = [&](std::size_t id) -> const Symbol& {
        if (!names[id])
            names[id] = Symbol(tuple_name(named++));
        return *names[id];
    };
    auto tuple_at = [&](std::size_t k, const Symbol& a) {
        return id_of[k][parts[k].class_index_of(a)];
    };
    std::vector<Word> decoded;
    decoded.reserve(ws.words().size());
    for (const Word& u : ws.words()) {
        std::vector<Symbol> out;
        out.reserve(u.size() + order - 1);
        for (const Symbol& a : u)
            out.push_back(name_of(tuple_at(0, a)));
        for (std::size_t k = 1; k < order; ++k)
            out.push_back(name_of(tuple_at(k, u.back())));
        decoded.emplace_back(std::move(out));
    }
    for (const auto& n : names)
        if (!n)
            throw std::logic_error("a class tuple never occurs in the decoded words");

    MaxPreimage mp;
    mp.order = order;
    mp.input = ws;
    mp.set = FiniteWordSet(std::move(decoded));
    mp.partitions = parts;

    for (std::size_t k = 0; k < order; ++k) {
        std::map<Symbol, Symbol> map;
        for (const Symbol& a : ws.alphabet())
            map.emplace(a, name_of(tuple_at(k, a)));
        mp.pi.emplace_back(ws.alphabet(), mp.set.alphabet(), std::move(map));
    }
    std::map<Word, Symbol> seen;
    for (const Symbol& a : ws.alphabet()) {
        std::vector<Symbol> block;
        for (std::size_t k = 0; k < order; ++k)
            block.push_back(mp.pi[k](a));
        Word code(std::move(block));
        if (!seen.emplace(code, a).second)
            throw std::logic_error("block coding of the maximal preimage is not injective");
        mp.coding.emplace(a, std::move(code));
    }
    for (std::size_t id = 0; id < registry.size(); ++id)
        mp.letters.emplace(*names[id], registry[id]);
    return mp;
}

std::optional<Projection> projection_to_preimage(const MaxPreimage& mp, const FiniteWordSet& other,
                                                 std::size_t order) {
    if (order != mp.order)
        throw std::invalid_argument("order does not match the maximal preimage");

    BlockPresentation blocks;
    try {
        blocks = block_present(other, order);
    } catch (const std::invalid_argument&) {
        return std::nullopt; // a word is too short to carry N-blocks
    }
    std::optional<Projection> beta = are_similar(mp.input, blocks.set);
    if (!beta)
        return std::nullopt;

    // psi reads the k-th letter out of the block that beta assigns to a.
    std::map<Symbol, Symbol> psi;
    for (const Symbol& a : mp.input.alphabet()) {
        const Word& block = blocks.coding.block((*beta)(a));
        for (std::size_t k = 0; k < order; ++k) {
            const Symbol& key = mp.pi.at(k)(a);
            auto [it, fresh] = psi.emplace(key, block[k]);
            if (!fresh && it->second != block[k])
                throw std::logic_error("projection onto the preimage is not well-defined");
        }
    }
    Projection proj(mp.set.alphabet(), other.alphabet(), std::move(psi));
    if (!(proj(mp.set) == other))
        throw std::logic_error("projection onto the preimage failed verification");
    return proj;
}

Projection induced_preimage_projection(const Projection& phi, const MaxPreimage& mp_x,
                                       const MaxPreimage& mp_y, std::size_t order) {
    if (order != mp_x.order || order != mp_y.order)
        throw std::invalid_argument("order does not match the maximal preimages");
    for (const Symbol& a : mp_x.input.alphabet())
        if (!phi.source().contains(a))
            throw std::invalid_argument("projection is not defined on the whole input alphabet");
    if (!(phi(mp_x.input) == mp_y.input))
        throw std::invalid_argument("projection does not carry the first input onto the second");

    std::map<Symbol, Symbol> map;
    for (const Symbol& a : mp_x.input.alphabet()) {
        for (std::size_t k = 0; k < order; ++k) {
            const Symbol& key = mp_x.pi.at(k)(a);
            const Symbol& value = mp_y.pi.at(k)(phi(a));
            auto [it, fresh] = map.emplace(key, value);
            if (!fresh && it->second != value)
                throw std::invalid_argument(
                    "projection does not induce a well-defined map between the maximal preimages");
        }
    }
    Projection out(mp_x.set.alphabet(), mp_y.set.alphabet(), std::move(map));
    if (!(out(mp_x.set) == mp_y.set))
        throw std::invalid_argument("induced map does not carry one maximal preimage onto the other");
    return out;
}

} // namespace symdyn
