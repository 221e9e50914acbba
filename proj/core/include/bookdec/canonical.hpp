#pragma once

#include <string>
#include <vector>

#include "bookdec/graph.hpp"

namespace bookdec {

// Canonical labeling. Two graphs get the same code iff they are isomorphic;
// codes compare with plain std::string order. The code packs the vertex count
// and the relabeled lower-triangle adjacency bits, maximized over the
// permutations compatible with an equitable degree refinement.
struct CanonicalResult {
    Graph form;             // g relabeled into canonical order
    std::vector<int> perm;  // perm[old vertex] = canonical position
    std::string code;
};

CanonicalResult canonicalize(const Graph& g);
std::string canonical_code(const Graph& g);
Graph canonical_form(const Graph& g);

inline bool is_isomorphic(const Graph& a, const Graph& b) {
    return a.n() == b.n() && a.edge_count() == b.edge_count() &&
           canonical_code(a) == canonical_code(b);
}

}  // namespace bookdec
