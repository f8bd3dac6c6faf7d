#include "symdyn/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace symdyn {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r')
            raw.pop_back();
        std::istringstream line(raw);
        std::vector<std::string> tokens;
        std::string token;
        while (line >> token) {
            if (token.front() == '#')
                break;
            tokens.push_back(token);
        }
        if (!tokens.empty())
            out.push_back({number, std::move(tokens)});
    }
    return out;
}

std::string at_line(std::size_t number) { return "line " + std::to_string(number) + ": "; }

Word word_from(const Line& line) {
    std::vector<Symbol> letters;
    for (std::size_t i = 1; i < line.tokens.size(); ++i)
        letters.emplace_back(line.tokens[i]);
    return Word(std::move(letters));
}

} // namespace

InputKind detect_format(const std::string& text) {
    for (const Line& line : tokenize(text)) {
        const std::string& key = line.tokens.front();
        if (key == "word:")
            return InputKind::word_set;
        if (key == "alphabet:" || key == "forbidden:")
            return InputKind::sft;
        throw parse_error(at_line(line.number) + "unrecognized line key '" + key + "'");
    }
    throw parse_error("cannot determine input kind: no content");
}

FiniteWordSet parse_word_set(const std::string& text) {
    std::vector<Word> words;
    for (const Line& line : tokenize(text)) {
        if (line.tokens.front() != "word:")
            throw parse_error(at_line(line.number) + "expected 'word:'");
        if (line.tokens.size() == 1)
            throw parse_error(at_line(line.number) + "empty word");
        words.push_back(word_from(line));
    }
    return FiniteWordSet(std::move(words));
}

std::string serialize_word_set(const FiniteWordSet& ws) {
    std::string out;
    for (const Word& w : ws.words())
        out += "word: " + w.str() + "\n";
    return out;
}

Sft parse_sft(const std::string& text) {
    std::optional<std::vector<Symbol>> alphabet;
    std::vector<Word> forbidden;
    for (const Line& line : tokenize(text)) {
        const std::string& key = line.tokens.front();
        if (key == "alphabet:") {
            if (alphabet)
                throw parse_error(at_line(line.number) + "duplicate 'alphabet:' line");
            std::vector<Symbol> symbols;
            for (std::size_t i = 1; i < line.tokens.size(); ++i)
                symbols.emplace_back(line.tokens[i]);
            alphabet = std::move(symbols);
        } else if (key == "forbidden:") {
            if (line.tokens.size() == 1)
                throw parse_error(at_line(line.number) + "empty forbidden word");
            forbidden.push_back(word_from(line));
        } else {
            throw parse_error(at_line(line.number) + "expected 'alphabet:' or 'forbidden:'");
        }
    }
    if (!alphabet)
        throw parse_error("missing 'alphabet:' line");
    Alphabet a(std::move(*alphabet));
    for (const Word& w : forbidden)
        for (const Symbol& s : w)
            if (!a.contains(s))
                throw parse_error("forbidden word uses unknown symbol '" + s.name() + "'");
    return Sft(std::move(a), std::move(forbidden));
}

std::string serialize_sft(const Sft& sft) {
    std::string out = "alphabet:";
    for (const Symbol& s : sft.alphabet())
        out += " " + s.name();
    out += "\n";
    for (const Word& w : sft.forbidden())
        out += "forbidden: " + w.str() + "\n";
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace symdyn
