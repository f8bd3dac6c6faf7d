#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "symdyn/block_code.hpp"
#include "symdyn/relations.hpp"

#include <random>
#include <stdexcept>

using namespace symdyn;
using testutil::W;
using testutil::WS;

namespace {

std::vector<Symbol> syms(std::initializer_list<const char*> names) {
    std::vector<Symbol> out;
    for (const char* n : names)
        out.emplace_back(n);
    return out;
}

} // namespace

TEST_CASE("partition canonical form") {
    Alphabet g = testutil::letters("abc");
    Partition p(g, {{Symbol("c"), Symbol("b")}, {Symbol("a")}});
    REQUIRE(p.class_count() == 2);
    CHECK(p.classes()[0] == syms({"a"})); // classes sorted by first element
    CHECK(p.classes()[1] == syms({"b", "c"}));
    CHECK(p.same_class(Symbol("b"), Symbol("c")));
    CHECK_FALSE(p.same_class(Symbol("a"), Symbol("c")));
    CHECK(p.class_index_of(Symbol("a")) == 0);
    CHECK(p == Partition(g, {{Symbol("a")}, {Symbol("b"), Symbol("c")}}));
    CHECK_THROWS_AS(Partition(g, {{Symbol("a")}}), std::invalid_argument); // misses b, c
    CHECK_THROWS_AS(Partition(g, {{Symbol("a")}, {Symbol("a")}, {Symbol("b"), Symbol("c")}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(p.class_index_of(Symbol("z")), std::out_of_range);
}

TEST_CASE("order one relations are singletons") {
    auto parts = letter_partitions(testutil::sample_v(), 1);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].class_count() == parts[0].ground().size());
}

TEST_CASE("golden relations on the digit word") {
    FiniteWordSet x = testutil::sample_digits();
    auto parts = letter_partitions(x, 2);
    REQUIRE(parts.size() == 2);
    const Alphabet& g = parts[0].ground();
    REQUIRE(g.size() == 11);

    Partition p0(g, {syms({"0", "3"}), syms({"1"}), syms({"2", "4"}), syms({"5"}),
                     syms({"6", "8"}), syms({"7"}), syms({"9"}), syms({"T"})});
    Partition p1(g, {syms({"0"}), syms({"1"}), syms({"2", "3"}), syms({"4"}), syms({"5", "8"}),
                     syms({"6", "7"}), syms({"9"}), syms({"T"})});
    CHECK(parts[0] == p0);
    CHECK(parts[1] == p1);
    CHECK(equivalence_k(x, 2, 0) == p0);
    CHECK(equivalence_k(x, 2, 1) == p1);
    CHECK_THROWS_AS(equivalence_k(x, 2, 2), std::out_of_range);
}

TEST_CASE("relations agree with the reachability oracle") {
    std::mt19937 rng(7u);
    for (int i = 0; i < 30; ++i) {
        FiniteWordSet w = testutil::random_word_set(rng, 4, 4, 10, 3);
        for (std::size_t order : {2u, 3u}) {
            auto parts = letter_partitions(w, order);
            const Alphabet& g = parts[0].ground();
            for (std::size_t k = 0; k < order; ++k)
                for (const Symbol& a : g)
                    for (const Symbol& b : g)
                        CHECK(parts[k].same_class(a, b) == oracles::equivalent(w, order, k, a, b));
        }
    }
}

TEST_CASE("block presentation test") {
    CHECK(is_block_presentation(testutil::sample_digits(), 2).ok());
    CHECK(is_block_presentation(block_present(testutil::sample_v(), 2).set, 2).ok());

    auto bad = is_block_presentation(testutil::sample_y(), 2);
    CHECK_FALSE(bad.ok());
    CHECK_FALSE(static_cast<bool>(bad));
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->first == Symbol("E"));
    CHECK(bad.witness->second == Symbol("F"));
}

TEST_CASE("max_preimage rejects non-presentations with the witness") {
    try {
        max_preimage(testutil::sample_y(), 2);
        FAIL("expected not_block_presentation");
    } catch (const not_block_presentation& e) {
        CHECK(e.witness().first == Symbol("E"));
        CHECK(e.witness().second == Symbol("F"));
    }
}

TEST_CASE("golden maximal preimage of the digit word") {
    MaxPreimage mp = max_preimage(testutil::sample_digits(), 2);
    CHECK(mp.order == 2);
    REQUIRE(mp.set.words().size() == 1);
    CHECK(mp.set.words()[0] == W("A B C D E A B A B C D E F G H G H D E"));

    const auto tup = [&](const char* name) { return mp.letters.at(Symbol(name)); };
    const auto entries = [&](std::initializer_list<const char*> e0,
                             std::initializer_list<const char*> e1) {
        return ClassTuple({syms(e0), syms(e1)});
    };
    REQUIRE(mp.letters.size() == 8);
    CHECK(tup("A") == entries({"1"}, {"2", "3"}));
    CHECK(tup("B") == entries({"0", "3"}, {"1"}));
    CHECK(tup("C") == entries({"5"}, {"0"}));
    CHECK(tup("D") == entries({"9"}, {"5", "8"}));
    CHECK(tup("E") == entries({"2", "4"}, {"9"}));
    CHECK(tup("F") == entries({"7"}, {"4"}));
    CHECK(tup("G") == entries({"T"}, {"6", "7"}));
    CHECK(tup("H") == entries({"6", "8"}, {"T"}));

    // pi_k sends a to the tuple whose k-th entry contains it
    REQUIRE(mp.pi.size() == 2);
    CHECK(mp.pi[0](Symbol("1")) == Symbol("A"));
    CHECK(mp.pi[0](Symbol("3")) == Symbol("B"));
    CHECK(mp.pi[1](Symbol("3")) == Symbol("A"));
    CHECK(mp.pi[1](Symbol("8")) == Symbol("D"));

    // the induced block coding reads 2-blocks off the decoded word
    CHECK(mp.coding.at(Symbol("1")) == W("A B"));
    CHECK(mp.coding.at(Symbol("0")) == W("B C"));
    CHECK(mp.coding.at(Symbol("T")) == W("G H"));

    // defining property: the 2-block image of the preimage is the input
    auto back = are_similar(block_present(mp.set, 2).set, mp.input);
    CHECK(back.has_value());
}

TEST_CASE("order one maximal preimage is a renaming") {
    FiniteWordSet x = WS({"aba", "bc"});
    MaxPreimage mp = max_preimage(x, 1);
    CHECK(are_similar(mp.set, x).has_value());
    CHECK(mp.letters.size() == x.alphabet().size());
}

TEST_CASE("round trip through random block images") {
    std::mt19937 rng(11u);
    for (int i = 0; i < 25; ++i) {
        FiniteWordSet w = testutil::random_word_set(rng, 4, 6, 10, 2);
        for (std::size_t n : {2u, 3u}) {
            FiniteWordSet image = block_present(w, n).set;
            CHECK(is_block_presentation(image, n).ok());
            MaxPreimage mp = max_preimage(image, n);
            CHECK(are_similar(block_present(mp.set, n).set, image).has_value());
        }
    }
}

TEST_CASE("projection onto a given preimage") {
    MaxPreimage mp = max_preimage(testutil::sample_digits(), 2);
    auto psi = projection_to_preimage(mp, testutil::sample_y(), 2);
    REQUIRE(psi.has_value());
    CHECK((*psi)(mp.set) == testutil::sample_y());
    CHECK((*psi)(Symbol("A")) == Symbol("D"));
    CHECK((*psi)(Symbol("B")) == Symbol("A"));
    CHECK((*psi)(Symbol("C")) == Symbol("E"));
    CHECK((*psi)(Symbol("D")) == Symbol("G"));
    CHECK((*psi)(Symbol("E")) == Symbol("B"));
    CHECK((*psi)(Symbol("F")) == Symbol("F"));
    CHECK((*psi)(Symbol("G")) == Symbol("H"));
    CHECK((*psi)(Symbol("H")) == Symbol("C"));

    CHECK_FALSE(projection_to_preimage(mp, WS({"ab"}), 2).has_value());
    CHECK_FALSE(projection_to_preimage(mp, WS({"a"}), 2).has_value()); // too short
    CHECK_THROWS_AS(projection_to_preimage(mp, testutil::sample_y(), 3), std::invalid_argument);
}

TEST_CASE("maximal preimage maps onto itself") {
    MaxPreimage mp = max_preimage(testutil::sample_digits(), 2);
    auto self = projection_to_preimage(mp, mp.set, 2);
    REQUIRE(self.has_value());
    CHECK(self->is_bijective());
}

TEST_CASE("induced projection between maximal preimages") {
    FiniteWordSet x = block_present(testutil::sample_v(), 2).set;

    // collapse c onto e in the base word and push through the 2-block coding
    std::map<Symbol, Symbol> base{{Symbol("a"), Symbol("a")}, {Symbol("b"), Symbol("b")},
                                  {Symbol("c"), Symbol("e")}, {Symbol("d"), Symbol("d")},
                                  {Symbol("e"), Symbol("e")}};
    std::vector<Symbol> collapsed;
    for (const Symbol& s : testutil::sample_v().words()[0])
        collapsed.push_back(base.at(s));
    FiniteWordSet y = block_present(FiniteWordSet({Word(collapsed)}), 2).set;

    std::map<Symbol, Symbol> block_map;
    for (const Symbol& s : x.alphabet()) {
        const Word b = block_present(testutil::sample_v(), 2).coding.block(s);
        block_map.emplace(s, block_letter(Word({base.at(b[0]), base.at(b[1])})));
    }
    Projection phi(x.alphabet(), y.alphabet(), block_map);
    REQUIRE(phi(x) == y);

    MaxPreimage mx = max_preimage(x, 2);
    MaxPreimage my = max_preimage(y, 2);
    Projection induced = induced_preimage_projection(phi, mx, my, 2);
    CHECK(induced(mx.set) == my.set);

    // identity transports to a bijection
    Projection id = Projection::identity(x.alphabet());
    CHECK(induced_preimage_projection(id, mx, mx, 2).is_bijective());

    CHECK_THROWS_AS(induced_preimage_projection(phi, mx, my, 3), std::invalid_argument);
}
