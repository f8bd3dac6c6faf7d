#pragma once

#include "symdyn/sft.hpp"
#include "symdyn/words.hpp"

#include <stdexcept>
#include <string>

namespace symdyn {

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

enum class InputKind { word_set, sft };

/// Decides between the two text formats by the first keyed line:
/// "word:" against "alphabet:"/"forbidden:".
InputKind detect_format(const std::string& text);

/// Lines "word: s1 s2 ...". A token starting with '#' begins a comment.
FiniteWordSet parse_word_set(const std::string& text);

/// Words in input order, tokens joined by single spaces; reparses equal.
std::string serialize_word_set(const FiniteWordSet& ws);

/// One "alphabet: s1 s2 ..." line plus "forbidden: t1 t2 ..." lines.
Sft parse_sft(const std::string& text);

/// Alphabet line, then the normalized forbidden words in sorted order.
std::string serialize_sft(const Sft& sft);

std::string read_file(const std::string& path);

} // namespace symdyn
