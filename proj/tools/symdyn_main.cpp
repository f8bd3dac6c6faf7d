#include "symdyn/block_code.hpp"
#include "symdyn/conjugacy.hpp"
#include "symdyn/io.hpp"
#include "symdyn/letter_graph.hpp"
#include "symdyn/relations.hpp"
#include "symdyn/sft.hpp"
#include "symdyn/words.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>
#include <optional>
#include <string>

using nlohmann::json;
using namespace symdyn;

namespace {

struct Input {
    InputKind kind;
    std::optional<FiniteWordSet> words;
    std::optional<Sft> sft;
};

Input load(const std::string& path) {
    const std::string text = read_file(path);
    Input in{detect_format(text), std::nullopt, std::nullopt};
    if (in.kind == InputKind::word_set)
        in.words = parse_word_set(text);
    else
        in.sft = parse_sft(text);
    return in;
}

FiniteWordSet load_words(const std::string& path) {
    Input in = load(path);
    if (in.kind != InputKind::word_set)
        throw std::invalid_argument("expected a word-set input: " + path);
    return std::move(*in.words);
}

Sft load_sft(const std::string& path) {
    Input in = load(path);
    if (in.kind != InputKind::sft)
        throw std::invalid_argument("expected an SFT input: " + path);
    return std::move(*in.sft);
}

const LanguageSource& source_of(const Input& in) {
    if (in.words)
        return *in.words;
    return *in.sft;
}

json json_word(const Word& w) {
    json a = json::array();
    for (const Symbol& s : w)
        a.push_back(s.name());
    return a;
}

template <class Words> json json_words(const Words& words) {
    json a = json::array();
    for (const Word& w : words)
        a.push_back(json_word(w));
    return a;
}

json json_alphabet(const Alphabet& a) {
    json out = json::array();
    for (const Symbol& s : a)
        out.push_back(s.name());
    return out;
}

json json_sft(const Sft& sft) {
    return json{{"alphabet", json_alphabet(sft.alphabet())},
                {"step", sft.step()},
                {"forbidden", json_words(sft.forbidden())}};
}

json json_projection(const Projection& p) {
    json o = json::object();
    for (const auto& [from, to] : p.mapping())
        o[from.name()] = to.name();
    return o;
}

json json_partition(const Partition& p) {
    json classes = json::array();
    for (const auto& cls : p.classes()) {
        json c = json::array();
        for (const Symbol& s : cls)
            c.push_back(s.name());
        classes.push_back(std::move(c));
    }
    return classes;
}

std::string class_text(const std::vector<Symbol>& cls) {
    std::string out = "{";
    for (std::size_t i = 0; i < cls.size(); ++i) {
        if (i)
            out += ",";
        out += cls[i].name();
    }
    return out + "}";
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_blockify(const std::string& path, std::size_t order, bool as_json) {
    Input in = load(path);
    if (in.kind == InputKind::word_set) {
        const BlockPresentation bp = block_present(*in.words, order);
        if (as_json)
            emit(json{{"verb", "blockify"},
                      {"order", order},
                      {"kind", "word-set"},
                      {"result", json_words(bp.set.words())}});
        else
            std::cout << serialize_word_set(bp.set);
    } else {
        const Sft out = block_present_sft(*in.sft, order);
        if (as_json)
            emit(json{{"verb", "blockify"},
                      {"order", order},
                      {"kind", "sft"},
                      {"result", json_sft(out)}});
        else
            std::cout << serialize_sft(out);
    }
    return 0;
}

int run_check_block(const std::string& path, std::size_t order, bool as_json) {
    const Input in = load(path);
    const BlockPresentationCheck check = is_block_presentation(source_of(in), order);
    if (as_json) {
        json j{{"verb", "check-block"}, {"order", order}, {"block_presentation", check.ok()}};
        j["witness"] = check.witness ? json::array({check.witness->first.name(),
                                                    check.witness->second.name()})
                                     : json();
        emit(j);
    } else if (check.ok()) {
        std::cout << "YES\n";
    } else {
        std::cout << "NO witness=" << check.witness->first.name() << ","
                  << check.witness->second.name() << "\n";
    }
    return 0;
}

int run_max_preimage(const std::string& path, std::size_t order, bool as_json) {
    const FiniteWordSet ws = load_words(path);
    const MaxPreimage mp = max_preimage(ws, order);
    if (as_json) {
        json letters = json::object();
        for (const auto& [name, tuple] : mp.letters) {
            json entries = json::array();
            for (const auto& entry : tuple.entries()) {
                if (!entry) {
                    entries.push_back(json());
                    continue;
                }
                json c = json::array();
                for (const Symbol& s : *entry)
                    c.push_back(s.name());
                entries.push_back(std::move(c));
            }
            letters[name.name()] = std::move(entries);
        }
        json coding = json::object();
        for (const auto& [letter, block] : mp.coding)
            coding[letter.name()] = json_word(block);
        json pi = json::array();
        for (const Projection& p : mp.pi)
            pi.push_back(json_projection(p));
        json partitions = json::array();
        for (const Partition& p : mp.partitions)
            partitions.push_back(json_partition(p));
        emit(json{{"verb", "max-preimage"},
                  {"order", order},
                  {"set", json_words(mp.set.words())},
                  {"letters", std::move(letters)},
                  {"coding", std::move(coding)},
                  {"pi", std::move(pi)},
                  {"partitions", std::move(partitions)}});
        return 0;
    }
    std::cout << serialize_word_set(mp.set);
    for (const auto& [name, tuple] : mp.letters) {
        std::cout << "letter " << name.name() << " :";
        for (std::size_t k = 0; k < tuple.size(); ++k) {
            const auto& entry = tuple.entry(k);
            std::cout << " p" << k << "=" << (entry ? class_text(*entry) : "{}");
        }
        std::cout << "\n";
    }
    return 0;
}

int run_letter_graph(const std::string& path, const std::string& letter, std::size_t order,
                     bool dot, bool as_json) {
    const Input in = load(path);
    const LetterGraph g = build_letter_graph(source_of(in), Symbol(letter), order);
    if (as_json) {
        json vertices = json::array();
        for (const auto& [layer, word] : g.vertices)
            vertices.push_back(json{{"layer", layer}, {"word", json_word(word)}});
        json edges = json::array();
        for (const auto& [a, b] : g.edges)
            edges.push_back(json::array({a, b}));
        json j{{"verb", "letter-graph"},
               {"letter", g.letter.name()},
               {"order", g.order},
               {"vertices", std::move(vertices)},
               {"edges", std::move(edges)},
               {"component", g.component},
               {"components", g.component_count}};
        if (dot)
            j["dot"] = export_dot(g);
        emit(j);
        return 0;
    }
    if (dot) {
        std::cout << export_dot(g);
        return 0;
    }
    std::cout << "letter: " << g.letter.name() << "\n";
    std::cout << "order: " << g.order << "\n";
    std::cout << "components: " << g.component_count << "\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        std::cout << "vertex " << v << ": (" << g.vertices[v].first << ", "
                  << g.vertices[v].second.str() << ") component=" << g.component[v] << "\n";
    for (const auto& [a, b] : g.edges)
        std::cout << "edge: " << a << " -- " << b << "\n";
    return 0;
}

int run_is_connected(const std::string& path, const std::string& letter, std::size_t order,
                     bool as_json) {
    const Input in = load(path);
    const LetterGraph g = build_letter_graph(source_of(in), Symbol(letter), order);
    if (as_json)
        emit(json{{"verb", "is-connected"},
                  {"letter", g.letter.name()},
                  {"order", g.order},
                  {"connected", is_connected(g)},
                  {"components", g.component_count}});
    else if (is_connected(g))
        std::cout << "CONNECTED\n";
    else
        std::cout << "NOT-CONNECTED components=" << g.component_count << "\n";
    return 0;
}

int run_language(const std::string& path, std::size_t n, bool as_json) {
    const Input in = load(path);
    const std::set<Word> words = source_of(in).language(n);
    if (as_json) {
        emit(json{{"verb", "language"}, {"n", n}, {"count", words.size()},
                  {"words", json_words(words)}});
        return 0;
    }
    for (const Word& w : words)
        std::cout << "word: " << w.str() << "\n";
    return 0;
}

int run_minimal_forbidden(const std::string& path, bool as_json) {
    const Sft sft = load_sft(path);
    const std::set<Word> words = minimal_forbidden_words(sft);
    if (as_json) {
        emit(json{{"verb", "minimal-forbidden"}, {"count", words.size()},
                  {"words", json_words(words)}});
        return 0;
    }
    for (const Word& w : words)
        std::cout << "word: " << w.str() << "\n";
    return 0;
}

int run_similar(const std::string& path_a, const std::string& path_b, bool as_json) {
    const Input a = load(path_a);
    const Input b = load(path_b);
    if (a.kind != b.kind)
        throw std::invalid_argument("similar needs two inputs of the same kind");
    const std::optional<Projection> witness =
        a.words ? are_similar(*a.words, *b.words) : sft_similar(*a.sft, *b.sft);
    if (as_json) {
        json j{{"verb", "similar"}, {"similar", witness.has_value()}};
        j["witness"] = witness ? json_projection(*witness) : json();
        emit(j);
        return 0;
    }
    if (!witness) {
        std::cout << "NOT-SIMILAR\n";
        return 0;
    }
    std::cout << "SIMILAR\n";
    for (const auto& [from, to] : witness->mapping())
        std::cout << from.name() << " -> " << to.name() << "\n";
    return 0;
}

int run_direct_conjugacy(const std::string& path_x, const std::string& path_y, bool as_json) {
    const Sft x = load_sft(path_x);
    const Sft y = load_sft(path_y);
    const ConjugacyDecision d = decide_direct_conjugacy(x, y);
    if (as_json) {
        json j{{"verb", "direct-conjugacy"},
               {"conjugate", d.conjugate},
               {"m", d.m},
               {"n", d.n},
               {"note", d.note},
               {"count_computations", d.count_computations}};
        j["witness"] = d.witness ? json_projection(*d.witness) : json();
        j["reason"] = d.reason ? json(reason_string(*d.reason)) : json();
        emit(j);
        return 0;
    }
    if (d.conjugate) {
        std::cout << "CONJUGATE M=" << d.m << " N=" << d.n << "\n";
        for (const auto& [from, to] : d.witness->mapping())
            std::cout << from.name() << " -> " << to.name() << "\n";
    } else {
        std::cout << "NOT-CONJUGATE reason=" << reason_string(*d.reason) << "\n";
    }
    if (!d.note.empty())
        std::cout << "note: " << d.note << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic dynamics toolkit: block presentations, preimages, letter graphs,"
                 " SFT languages and direct conjugacy"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::size_t order = 1;
    std::string letter;
    bool dot = false;
    std::string file1, file2;

    CLI::App* blockify = app.add_subcommand("blockify", "emit the N-th higher-block image");
    blockify->add_option("-n,--order", order, "block order N")->required();
    blockify->add_option("input", file1, "input file")->required()->check(CLI::ExistingFile);

    CLI::App* check_block = app.add_subcommand("check-block",
                                               "decide whether the input is an N-block presentation");
    check_block->add_option("-n,--order", order, "block order N")->required();
    check_block->add_option("input", file1, "input file")->required()->check(CLI::ExistingFile);

    CLI::App* max_pre = app.add_subcommand("max-preimage",
                                           "construct the maximal N-preimage of a word set");
    max_pre->add_option("-n,--order", order, "block order N")->required();
    max_pre->add_option("input", file1, "input file")->required()->check(CLI::ExistingFile);

    CLI::App* lgraph = app.add_subcommand("letter-graph", "build the graph of a letter");
    lgraph->add_option("-n,--order", order, "graph order N")->required();
    lgraph->add_option("--letter", letter, "letter token")->required();
    lgraph->add_flag("--dot", dot, "emit Graphviz text");
    lgraph->add_option("input", file1, "input file")->required()->check(CLI::ExistingFile);

    CLI::App* connected = app.add_subcommand("is-connected",
                                             "report connectivity of a letter's graph");
    connected->add_option("-n,--order", order, "graph order N")->required();
    connected->add_option("--letter", letter, "letter token")->required();
    connected->add_option("input", file1, "input file")->required()->check(CLI::ExistingFile);

    CLI::App* language = app.add_subcommand("language", "list all words of length n");
    language->add_option("-n,--order", order, "word length n")->required();
    language->add_option("input", file1, "input file")->required()->check(CLI::ExistingFile);

    CLI::App* minimal = app.add_subcommand("minimal-forbidden",
                                           "list the minimal forbidden words of an SFT");
    minimal->add_option("input", file1, "input file")->required()->check(CLI::ExistingFile);

    CLI::App* similar = app.add_subcommand("similar",
                                           "find a similarity between two inputs of one kind");
    similar->add_option("first", file1, "first input")->required()->check(CLI::ExistingFile);
    similar->add_option("second", file2, "second input")->required()->check(CLI::ExistingFile);

    CLI::App* conjugacy = app.add_subcommand("direct-conjugacy",
                                             "decide direct conjugacy of two SFTs");
    conjugacy->add_option("first", file1, "first SFT")->required()->check(CLI::ExistingFile);
    conjugacy->add_option("second", file2, "second SFT")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    const bool as_json = format == "json";
    try {
        if (blockify->parsed())
            return run_blockify(file1, order, as_json);
        if (check_block->parsed())
            return run_check_block(file1, order, as_json);
        if (max_pre->parsed())
            return run_max_preimage(file1, order, as_json);
        if (lgraph->parsed())
            return run_letter_graph(file1, letter, order, dot, as_json);
        if (connected->parsed())
            return run_is_connected(file1, letter, order, as_json);
        if (language->parsed())
            return run_language(file1, order, as_json);
        if (minimal->parsed())
            return run_minimal_forbidden(file1, as_json);
        if (similar->parsed())
            return run_similar(file1, file2, as_json);
        if (conjugacy->parsed())
            return run_direct_conjugacy(file1, file2, as_json);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "error: no command\n";
    return 2;
}
