#pragma once

#include "symdyn/words.hpp"

#include <string>
#include <utility>
#include <vector>

namespace symdyn {

/// The graph of a letter at order N: vertices are pointed words (i, u) with
/// u in L_N and u_i = a; every w in L_{N+1} with w_i = a for some 0 < i < N
/// contributes the edge {(i, w_[0,N-1]), (i-1, w_[1,N])}.
struct LetterGraph {
    Symbol letter;
    std::size_t order = 0;
    /// Sorted by (i, u); edges and component refer to positions here.
    std::vector<std::pair<std::size_t, Word>> vertices;
    /// Vertex index pairs, lower index first, sorted and deduplicated.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    /// Component id per vertex, components numbered by their first vertex.
    std::vector<std::size_t> component;
    std::size_t component_count = 0;
};

/// Errors when the letter does not occur in the language or occurs in no
/// word of length `order`.
LetterGraph build_letter_graph(const LanguageSource& src, const Symbol& letter,
                               std::size_t order);

bool is_connected(const LetterGraph& g);

/// component_count of the letter's graph at this order equals 1.
bool is_n_connected(const LanguageSource& src, const Symbol& letter, std::size_t order);

/// True iff every letter of L_1(src) is order-connected: the criterion for
/// src to be the maximal preimage of its order-th block image.
bool is_maximal_preimage(const LanguageSource& src, std::size_t order);

/// True iff for every w in L_K(src) the graph of [w] at order N-K+1 with
/// regard to the K-th block presentation of src is connected; then maximal
/// preimages of the N-th and K-th block images compose. Requires
/// N >= K >= 1; N == K holds vacuously (order-1 graphs).
bool check_preimage_composability(const LanguageSource& src, std::size_t k, std::size_t n);

/// Deterministic Graphviz text: one rank=same group per layer i, vertices
/// labeled "i:u" in sorted order, then sorted edges.
std::string export_dot(const LetterGraph& g);

} // namespace symdyn
