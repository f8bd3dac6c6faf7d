#include "symdyn/block_code.hpp"

namespace symdyn {

Symbol block_letter(const Word& block) {
    std::string name = "[";
    for (std::size_t i = 0; i < block.size(); ++i) {
        if (i)
            name += ',';
        name += block[i].name();
    }
    name += ']';
    return Symbol(std::move(name));
}

Word higher_block_word(const Word& w, std::size_t order) {
    if (order == 0)
        throw std::invalid_argument("block order must be positive");
    if (w.size() < order)
        throw std::invalid_argument("word of length " + std::to_string(w.size()) +
                                    " is too short for block order " + std::to_string(order));
    std::vector<Symbol> letters;
    letters.reserve(w.size() - order + 1);
    for (std::size_t i = 0; i + order <= w.size(); ++i)
        letters.push_back(block_letter(w.sub(i, order)));
    return Word(std::move(letters));
}

const Symbol& BlockCoding::letter(const Word& blk) const {
    auto it = to_letter.find(blk);
    if (it == to_letter.end())
        throw std::out_of_range("block '" + blk.str() + "' is not part of the coding");
    return it->second;
}

const Word& BlockCoding::block(const Symbol& ltr) const {
    auto it = from_letter.find(ltr);
    if (it == from_letter.end())
        throw std::out_of_range("letter '" + ltr.name() + "' is not part of the coding");
    return it->second;
}

BlockPresentation block_present(const FiniteWordSet& ws, std::size_t order) {
    std::vector<Word> images;
    images.reserve(ws.words().size());
    for (const auto& w : ws.words())
        images.push_back(higher_block_word(w, order));

    BlockCoding coding;
    coding.order = order;
    for (const auto& blk : ws.language(order)) {
        Symbol s = block_letter(blk);
        coding.to_letter.emplace(blk, s);
        coding.from_letter.emplace(std::move(s), blk);
    }
    return BlockPresentation{FiniteWordSet(std::move(images)), std::move(coding)};
}

BlockView::BlockView(const LanguageSource& base, std::size_t order) : base_(&base), order_(order) {
    if (order == 0)
        throw std::invalid_argument("block order must be positive");
    std::vector<Symbol> letters;
    for (const auto& blk : base.language(order))
        letters.push_back(block_letter(blk));
    alphabet_ = Alphabet(std::move(letters));
}

std::set<Word> BlockView::language(std::size_t n) const {
    if (n == 0)
        throw std::invalid_argument("language order must be positive");
    std::set<Word> out;
    for (const auto& w : base_->language(n + order_ - 1))
        out.insert(higher_block_word(w, order_));
    return out;
}

} // namespace symdyn
