#include "symdyn/letter_graph.hpp"

#include "symdyn/block_code.hpp"
#include "symdyn/union_find.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace symdyn {

LetterGraph build_letter_graph(const LanguageSource& src, const Symbol& letter,
                               std::size_t order) {
    if (order == 0)
        throw std::invalid_argument("graph order must be positive");

    std::vector<std::pair<std::size_t, Word>> vertices;
    for (const Word& u : src.language(order))
        for (std::size_t i = 0; i < order; ++i)
            if (u[i] == letter)
                vertices.emplace_back(i, u);
    std::sort(vertices.begin(), vertices.end());
    if (vertices.empty()) {
        for (const Word& u : src.language(1))
            if (u.front() == letter)
                throw std::invalid_argument("letter '" + letter.name() +
                                            "' occurs in no word of length " +
                                            std::to_string(order));
        throw std::invalid_argument("letter '" + letter.name() +
                                    "' does not occur in the language");
    }

    std::map<std::pair<std::size_t, Word>, std::size_t> id;
    for (std::size_t v = 0; v < vertices.size(); ++v)
        id.emplace(vertices[v], v);

    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (const Word& w : src.language(order + 1)) {
        for (std::size_t i = 1; i < order; ++i) {
            if (w[i] != letter)
                continue;
            const std::size_t a = id.at({i, w.sub(0, order)});
            const std::size_t b = id.at({i - 1, w.sub(1, order)});
            edges.emplace(std::min(a, b), std::max(a, b));
        }
    }

    UnionFind uf(vertices.size());
    for (const auto& [a, b] : edges)
        uf.unite(a, b);
    std::vector<std::size_t> component(vertices.size());
    std::map<std::size_t, std::size_t> component_of_root;
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        auto [it, fresh] = component_of_root.emplace(uf.find(v), component_of_root.size());
        component[v] = it->second;
    }

    return LetterGraph{letter,
                       order,
                       std::move(vertices),
                       {edges.begin(), edges.end()},
                       std::move(component),
                       component_of_root.size()};
}

bool is_connected(const LetterGraph& g) { return g.component_count == 1; }

bool is_n_connected(const LanguageSource& src, const Symbol& letter, std::size_t order) {
    return is_connected(build_letter_graph(src, letter, order));
}

bool is_maximal_preimage(const LanguageSource& src, std::size_t order) {
    for (const Word& u : src.language(1))
        if (!is_n_connected(src, u.front(), order))
            return false;
    return true;
}

bool check_preimage_composability(const LanguageSource& src, std::size_t k, std::size_t n) {
    if (k == 0 || n < k)
        throw std::invalid_argument("composability check needs N >= K >= 1");
    const BlockView view(src, k);
    const std::size_t order = n - k + 1;
    for (const Word& w : src.language(k))
        if (!is_n_connected(view, block_letter(w), order))
            return false;
    return true;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string vertex_label(const std::pair<std::size_t, Word>& v) {
    return std::to_string(v.first) + ":" + v.second.str();
}

} // namespace

std::string export_dot(const LetterGraph& g) {
    std::ostringstream out;
    out << "graph \"G[" << dot_escape(g.letter.name()) << "]^" << g.order << "\" {\n";
    out << "  node [shape=box];\n";
    for (std::size_t layer = 0; layer < g.order; ++layer) {
        std::string row;
        for (const auto& v : g.vertices)
            if (v.first == layer)
                row += " \"" + dot_escape(vertex_label(v)) + "\";";
        if (!row.empty())
            out << "  { rank=same;" << row << " }\n";
    }
    for (const auto& [a, b] : g.edges)
        out << "  \"" << dot_escape(vertex_label(g.vertices[a])) << "\" -- \""
            << dot_escape(vertex_label(g.vertices[b])) << "\";\n";
    out << "}\n";
    return out.str();
}

} // namespace symdyn
