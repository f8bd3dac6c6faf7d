#pragma once

#include "symdyn/sft.hpp"
#include "symdyn/words.hpp"

#include <initializer_list>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace testutil {

// "b a b" -> word of tokens
inline symdyn::Word W(const std::string& spaced) {
    std::istringstream in(spaced);
    std::vector<symdyn::Symbol> letters;
    std::string token;
    while (in >> token)
        letters.emplace_back(token);
    return symdyn::Word(std::move(letters));
}

// "bab" -> word of one-character letters
inline symdyn::Word Wc(const std::string& chars) {
    std::vector<symdyn::Symbol> letters;
    for (char c : chars)
        letters.emplace_back(std::string(1, c));
    return symdyn::Word(std::move(letters));
}

inline symdyn::FiniteWordSet WS(std::initializer_list<std::string> words) {
    std::vector<symdyn::Word> out;
    for (const std::string& w : words)
        out.push_back(Wc(w));
    return symdyn::FiniteWordSet(std::move(out));
}

inline symdyn::Alphabet letters(const std::string& chars) {
    std::vector<symdyn::Symbol> out;
    for (char c : chars)
        out.emplace_back(std::string(1, c));
    return symdyn::Alphabet(std::move(out));
}

inline const symdyn::FiniteWordSet& sample_v() {
    static const symdyn::FiniteWordSet v = WS({"babecbababecbededecb"});
    return v;
}

inline const symdyn::FiniteWordSet& sample_digits() {
    static const symdyn::FiniteWordSet x =
        symdyn::FiniteWordSet({W("1 0 5 9 2 1 3 1 0 5 9 4 7 T 6 T 8 9")});
    return x;
}

inline const symdyn::FiniteWordSet& sample_y() {
    static const symdyn::FiniteWordSet y =
        symdyn::FiniteWordSet({W("D A E G B D A D A E G B F H C H C G B")});
    return y;
}

inline symdyn::Sft golden_mean() {
    return symdyn::Sft(letters("01"), {W("1 1")});
}

inline symdyn::Sft full_shift(const std::string& chars) {
    return symdyn::Sft(letters(chars), {});
}

inline symdyn::Sft period_two() {
    return symdyn::Sft(letters("01"), {W("0 1"), W("1 0")});
}

inline symdyn::FiniteWordSet random_word_set(std::mt19937& rng, std::size_t max_alphabet,
                                             std::size_t min_len, std::size_t max_len,
                                             std::size_t max_words) {
    const std::string pool = "abcde";
    std::uniform_int_distribution<std::size_t> alpha(1, max_alphabet);
    std::uniform_int_distribution<std::size_t> nwords(1, max_words);
    const std::size_t a = alpha(rng);
    std::uniform_int_distribution<std::size_t> letter(0, a - 1);
    std::uniform_int_distribution<std::size_t> length(min_len, max_len);
    std::vector<symdyn::Word> words;
    const std::size_t count = nwords(rng);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<symdyn::Symbol> w;
        const std::size_t len = length(rng);
        for (std::size_t j = 0; j < len; ++j)
            w.emplace_back(std::string(1, pool[letter(rng)]));
        words.emplace_back(std::move(w));
    }
    return symdyn::FiniteWordSet(std::move(words));
}

// random S-step SFT over digits; keeps drawing until nonempty when asked
inline symdyn::Sft random_sft(std::mt19937& rng, std::size_t max_alphabet, std::size_t max_step,
                              bool require_nonempty) {
    const std::string pool = "012";
    std::uniform_int_distribution<std::size_t> alpha(1, max_alphabet);
    std::uniform_int_distribution<std::size_t> steps(1, max_step);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (;;) {
        const std::size_t a = alpha(rng);
        const std::size_t s = steps(rng);
        const symdyn::Alphabet alphabet = letters(pool.substr(0, a));
        std::vector<symdyn::Word> forbidden;
        std::vector<std::size_t> cur(s + 1, 0);
        for (;;) {
            if (coin(rng) < 0.3) {
                std::vector<symdyn::Symbol> w;
                for (std::size_t i : cur)
                    w.push_back(alphabet.at(i));
                forbidden.emplace_back(std::move(w));
            }
            std::size_t p = s + 1;
            while (p > 0 && ++cur[p - 1] == a)
                cur[--p] = 0;
            if (p == 0)
                break;
        }
        symdyn::Sft sft(alphabet, std::move(forbidden));
        if (!require_nonempty || !sft.is_empty())
            return sft;
    }
}

} // namespace testutil
