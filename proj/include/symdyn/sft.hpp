#pragma once

#include "symdyn/words.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace symdyn {

/// De-Bruijn-style transition graph of an S-step SFT, trimmed so that every
/// vertex lies on a bi-infinite path. Vertices are then exactly L_S of the
/// subshift and edges exactly L_{S+1}.
struct TransitionGraph {
    std::vector<Word> vertices; // sorted
    std::vector<Word> edges;    // sorted; edge i joins the S-prefix to the S-suffix
    std::vector<std::vector<std::size_t>> out; // successor vertex ids
    std::vector<std::vector<std::size_t>> in;  // predecessor vertex ids
};

/// A subshift of finite type given by a forbidden language. Construction
/// normalizes: length-1 forbidden words delete their letter from the
/// alphabet, the remaining words are padded to the uniform length S+1
/// (S = max length - 1, at least 1) by taking all two-sided extensions,
/// and the transition graph is trimmed.
class Sft final : public LanguageSource {
public:
    Sft(Alphabet alphabet, std::vector<Word> forbidden);

    std::size_t step() const noexcept { return step_; }
    const std::set<Word>& forbidden() const noexcept { return forbidden_; }
    const TransitionGraph& graph() const noexcept { return graph_; }
    bool is_empty() const noexcept { return graph_.vertices.empty(); }

    const Alphabet& alphabet() const noexcept override { return alphabet_; }

    /// L_n of the subshift: factors of vertices for n <= S, path labels
    /// spanning n letters otherwise. Words not extendable to bi-infinite
    /// sequences never appear.
    std::set<Word> language(std::size_t n) const override;

    /// |L_n| by path counting; saturates at the largest uint64 value.
    std::uint64_t language_count(std::size_t n) const;

private:
    Alphabet alphabet_;
    std::size_t step_ = 1;
    std::set<Word> forbidden_;
    TransitionGraph graph_;
};

/// Constructor in function form.
Sft normalize_forbidden(Alphabet alphabet, std::vector<Word> forbidden);

/// All w with 2 <= |w| <= S+1 that are not in the language although both
/// maximal proper factors are. An S-step subshift has no longer minimal
/// forbidden word; that bound is asserted, not assumed.
std::set<Word> minimal_forbidden_words(const Sft& sft);

/// Bijection between occurring letters carrying L_n(a) onto L_n(b) for all
/// n; checking n <= max(S_a, S_b) + 1 is sufficient. Letters are tried in
/// sorted order with any same-named letter first, so similar inputs with
/// shared names prefer the identity-like witness.
std::optional<Projection> sft_similar(const Sft& a, const Sft& b);

/// True iff phi restricted to the occurring letters of a is a bijection
/// onto those of b with phi(L_n(a)) = L_n(b) for all n <= max(S_a, S_b) + 1.
bool is_similarity_witness(const Sft& a, const Sft& b, const Projection& phi);

/// The N-th higher-block presentation as an SFT over the letters [w],
/// w in L_N: with S' = max(1, S - N + 1), the forbidden words are the
/// length-(S'+1) block words realized by no word of L_{N+S'}.
Sft block_present_sft(const Sft& sft, std::size_t order);

} // namespace symdyn
