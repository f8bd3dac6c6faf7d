#pragma once

#include "symdyn/sft.hpp"

#include <optional>
#include <string>

namespace symdyn {

enum class NotConjugateReason {
    language_count_plateau,
    count_overshoot,
    similarity_failed_at_equal_counts,
};

std::string reason_string(NotConjugateReason reason);

enum class SizeCase { x_smaller, equal_counts, y_smaller };

/// Compares |L_{S_X}(X)| with |L_{S_Y}(Y)|.
SizeCase classify_case(const Sft& x, const Sft& y);

/// Outcome of the direct-conjugacy decision. When conjugate, `witness` maps
/// the occurring letters of the M-th block presentation of X bijectively
/// onto those of the N-th block presentation of Y, carrying the languages
/// across. When not, `reason` says which exit fired; `note` flags the
/// degenerate one-empty-input case. `count_computations` is the number of
/// language counts evaluated on the way to the decision.
struct ConjugacyDecision {
    bool conjugate = false;
    std::size_t m = 0;
    std::size_t n = 0;
    std::optional<Projection> witness;
    std::optional<NotConjugateReason> reason;
    std::string note;
    std::size_t count_computations = 0;
};

/// Decides whether X and Y are directly conjugate: whether some block
/// presentations Phi_M(X) and Phi_N(Y) are similar. Grows the block order
/// on the side with the smaller count |L_S| until the counts plateau
/// (periodic side, never catches up), overshoot, or meet; at equal counts
/// the answer is the similarity test. The cap bounds the growth loop;
/// hitting it throws std::runtime_error and is never reported as a
/// decision.
ConjugacyDecision decide_direct_conjugacy(const Sft& x, const Sft& y,
                                          std::size_t iteration_cap = 10000);

} // namespace symdyn
