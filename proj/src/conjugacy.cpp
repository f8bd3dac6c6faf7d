#include "symdyn/conjugacy.hpp"

#include <stdexcept>

namespace symdyn {

std::string reason_string(NotConjugateReason reason) {
    switch (reason) {
    case NotConjugateReason::language_count_plateau:
        return "language-count-plateau";
    case NotConjugateReason::count_overshoot:
        return "count-overshoot";
    case NotConjugateReason::similarity_failed_at_equal_counts:
        return "similarity-failed-at-equal-counts";
    }
    throw std::logic_error("unknown reason");
}

SizeCase classify_case(const Sft& x, const Sft& y) {
    const std::uint64_t cx = x.language_count(x.step());
    const std::uint64_t cy = y.language_count(y.step());
    if (cx < cy)
        return SizeCase::x_smaller;
    if (cy < cx)
        return SizeCase::y_smaller;
    return SizeCase::equal_counts;
}

ConjugacyDecision decide_direct_conjugacy(const Sft& x, const Sft& y,
                                          std::size_t iteration_cap) {
    ConjugacyDecision d;
    if (x.is_empty() && y.is_empty()) {
        d.conjugate = true;
        d.m = d.n = 1;
        d.witness = Projection(Alphabet{}, Alphabet{}, {});
        d.note = "both subshifts are empty";
        return d;
    }
    if (x.is_empty() != y.is_empty()) {
        // one side counts 0 forever, the other never drops to it
        d.conjugate = false;
        d.m = x.step();
        d.n = y.step();
        d.reason = NotConjugateReason::language_count_plateau;
        d.note = "exactly one of the subshifts is empty";
        return d;
    }

    const auto finish_at_equal_counts = [&](std::size_t m, std::size_t n) {
        d.m = m;
        d.n = n;
        const Sft bx = block_present_sft(x, m);
        const Sft by = block_present_sft(y, n);
        if (auto witness = sft_similar(bx, by)) {
            d.conjugate = true;
            d.witness = std::move(witness);
        } else {
            d.conjugate = false;
            d.reason = NotConjugateReason::similarity_failed_at_equal_counts;
        }
        return d;
    };

    const std::uint64_t cx = x.language_count(x.step());
    const std::uint64_t cy = y.language_count(y.step());
    d.count_computations = 2;
    if (cx == cy)
        return finish_at_equal_counts(x.step(), y.step());

    const bool x_smaller = cx < cy;
    const Sft& small = x_smaller ? x : y;
    const std::uint64_t target = x_smaller ? cy : cx;
    std::uint64_t prev = x_smaller ? cx : cy;
    for (std::size_t j = 1; j <= iteration_cap; ++j) {
        const std::uint64_t count = small.language_count(small.step() + j);
        ++d.count_computations;
        const std::size_t m = x_smaller ? x.step() + j : x.step();
        const std::size_t n = x_smaller ? y.step() : y.step() + j;
        if (count == prev) {
            d.conjugate = false;
            d.m = m;
            d.n = n;
            d.reason = NotConjugateReason::language_count_plateau;
            return d;
        }
        if (count == target)
            return finish_at_equal_counts(m, n);
        if (count > target) {
            d.conjugate = false;
            d.m = m;
            d.n = n;
            d.reason = NotConjugateReason::count_overshoot;
            return d;
        }
        prev = count;
    }
    throw std::runtime_error("direct-conjugacy iteration cap exceeded");
}

} // namespace symdyn
