#pragma once

#include <vector>

#include "bookdec/graph.hpp"
#include "bookdec/rational.hpp"

namespace bookdec {

// An embedding is an injective vertex map taking every edge of h to an edge of
// g (extra edges of g between image vertices are allowed). Subgraph copies are
// embeddings divided by |Aut(h)|: exact, since the division is always whole.
Int count_embeddings(const Graph& h, const Graph& g);
Int count_subgraphs(const Graph& h, const Graph& g);
Int automorphism_count(const Graph& h);
bool contains_subgraph(const Graph& h, const Graph& g);

int clique_number(const Graph& g);

// True when the automorphism group acts transitively on vertices. Complete and
// empty graphs short-circuit; otherwise one pinned embedding search per vertex.
bool is_vertex_transitive(const Graph& g);

}  // namespace bookdec
