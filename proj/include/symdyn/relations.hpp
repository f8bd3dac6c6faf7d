#pragma once

#include "symdyn/words.hpp"

#include <map>
#include <optional>
#include <vector>

namespace symdyn {

/// Partition of a ground alphabet. Classes are stored sorted, ordered by
/// their smallest element, so equal partitions compare equal structurally.
class Partition {
public:
    Partition(Alphabet ground, std::vector<std::vector<Symbol>> classes);

    const Alphabet& ground() const noexcept { return ground_; }
    const std::vector<std::vector<Symbol>>& classes() const noexcept { return classes_; }
    std::size_t class_count() const noexcept { return classes_.size(); }

    std::size_t class_index_of(const Symbol& s) const;
    const std::vector<Symbol>& class_of(const Symbol& s) const;
    bool same_class(const Symbol& a, const Symbol& b) const;

    bool operator==(const Partition& other) const;

private:
    Alphabet ground_;
    std::vector<std::vector<Symbol>> classes_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// All relations ≡_0 … ≡_{N-1} on L_1(src) at block order N, in one pass.
/// a ≡_k b holds iff the states (a, 0) and (b, 0) are connected in the
/// layered graph with levels s in [-k, N-k) and an undirected edge between
/// (u, s) and (v, s-1) whenever uv lies in L_2(src). Shifting levels by k
/// makes the graph independent of k, so a single union-find over
/// (letter, level) pairs yields every partition: ≡_k reads components at
/// level k.
std::vector<Partition> letter_partitions(const LanguageSource& src, std::size_t order);

/// The single partition of L_1(src) under ≡_k. Requires 0 <= k < order.
Partition equivalence_k(const LanguageSource& src, std::size_t order, std::size_t k);

/// Outcome of the N-block-presentation test: yes, or no with the
/// lexicographically first pair of letters no ≡_k separates.
struct BlockPresentationCheck {
    std::vector<Partition> partitions;
    std::optional<std::pair<Symbol, Symbol>> witness;

    bool ok() const noexcept { return !witness.has_value(); }
    explicit operator bool() const noexcept { return ok(); }
};

/// X is an N-block presentation iff every pair of distinct letters is
/// separated by some ≡_k with k < N.
BlockPresentationCheck is_block_presentation(const LanguageSource& src, std::size_t order);

class not_block_presentation : public std::invalid_argument {
public:
    not_block_presentation(Symbol a, Symbol b);
    const std::pair<Symbol, Symbol>& witness() const noexcept { return witness_; }

private:
    std::pair<Symbol, Symbol> witness_;
};

/// One letter of a maximal preimage: an N-tuple whose k-th entry is either
/// a class of ≡_k or empty.
class ClassTuple {
public:
    using Entry = std::optional<std::vector<Symbol>>;

    explicit ClassTuple(std::vector<Entry> entries);

    std::size_t size() const noexcept { return entries_.size(); }
    const Entry& entry(std::size_t i) const { return entries_.at(i); }
    const std::vector<Entry>& entries() const noexcept { return entries_; }

    bool operator==(const ClassTuple&) const = default;

private:
    std::vector<Entry> entries_;
};

/// The maximal N-preimage of an N-block presentation, together with the
/// decoding data: the partitions P_0..P_{N-1}, the projections pi_k sending
/// an input letter to the unique tuple whose k-th entry contains it, and the
/// induced coding of input letters by N-blocks of preimage letters.
struct MaxPreimage {
    std::size_t order = 0;
    FiniteWordSet input;
    FiniteWordSet set;
    std::vector<Partition> partitions;
    std::vector<Projection> pi;
    std::map<Symbol, Word> coding;
    std::map<Symbol, ClassTuple> letters;
};

/// Constructs the maximal N-preimage. Throws not_block_presentation when
/// some pair of input letters is separated by no ≡_k.
MaxPreimage max_preimage(const FiniteWordSet& ws, std::size_t order);

/// If other is an N-preimage of mp.input (its N-block image is similar to
/// the input), returns the letter map psi with psi(mp.set) = other;
/// otherwise nullopt.
std::optional<Projection> projection_to_preimage(const MaxPreimage& mp, const FiniteWordSet& other,
                                                 std::size_t order);

/// Given phi with phi(mp_x.input) = mp_y.input, the induced projection
/// between the maximal preimages: c -> pi_k^y(phi(a)) for any (a, k) with
/// pi_k^x(a) = c. Throws std::invalid_argument if the map is ill-defined or
/// fails to carry mp_x.set onto mp_y.set.
Projection induced_preimage_projection(const Projection& phi, const MaxPreimage& mp_x,
                                       const MaxPreimage& mp_y, std::size_t order);

} // namespace symdyn
