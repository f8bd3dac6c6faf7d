#pragma once

#include "symdyn/words.hpp"

#include <map>

namespace symdyn {

/// Canonical name of the letter standing for an N-block: "[t1,t2,...,tN]".
Symbol block_letter(const Word& block);

/// The N-th higher-block image of w: letter i is the block w_[i, i+N-1].
/// Requires |w| >= N; the image has length |w| - N + 1.
Word higher_block_word(const Word& w, std::size_t order);

/// Bijection between the N-blocks of a language and their block letters.
struct BlockCoding {
    std::size_t order = 0;
    std::map<Word, Symbol> to_letter;
    std::map<Symbol, Word> from_letter;

    const Symbol& letter(const Word& block) const;
    const Word& block(const Symbol& letter) const;
};

struct BlockPresentation {
    FiniteWordSet set;
    BlockCoding coding;
};

/// The N-th higher-block presentation of a finite word set.
BlockPresentation block_present(const FiniteWordSet& ws, std::size_t order);

/// Language-level view of the N-th higher-block presentation of any source:
/// L_m of the view is the block encoding of L_{m+N-1} of the base.
/// Holds a reference to the base source; keep the base alive.
class BlockView final : public LanguageSource {
public:
    BlockView(const LanguageSource& base, std::size_t order);

    const Alphabet& alphabet() const noexcept override { return alphabet_; }
    std::set<Word> language(std::size_t n) const override;

private:
    const LanguageSource* base_;
    std::size_t order_;
    Alphabet alphabet_;
};

} // namespace symdyn
