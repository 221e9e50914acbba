#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bookdec/graph.hpp"

namespace bookdec {

// Filters applied during exhaustive generation. Cheap tests run first; clique
// and subgraph conditions are only reached by survivors.
struct Constraints {
    std::optional<int> edge_count;
    bool triangle_free = false;
    bool connected = false;
    std::optional<int> clique_at_most;   // omega(G) <= k, i.e. K_{k+1}-free
    std::optional<int> clique_exact;     // omega(G) == k
    std::vector<Graph> forbid;           // zero copies of each pattern
    std::vector<Graph> require;          // at least one copy of each pattern

    bool satisfied_by(const Graph& g) const;
    bool unconstrained() const;
};

// Exhaustive scans work on adjacency words: bit pair_slot(i,j) of the word is
// the edge (i,j). n <= 7 runs freely (2^21 graphs); n == 8 costs 2^28 and must
// be opted into; larger n is refused.
void check_enumeration_size(int n, bool allow8);

// Every labeled n-vertex graph passing the constraints, in increasing word
// order. Single-threaded and deterministic.
void for_each_labeled(int n, const Constraints& c,
                      const std::function<void(const Graph&)>& fn, bool allow8 = false);

// One canonical representative per isomorphism class passing the constraints,
// sorted by canonical code. Output is identical for every thread count.
std::vector<Graph> iso_classes(int n, const Constraints& c, int threads = 0,
                               bool allow8 = false);

// Unconstrained per-n class lists are cached for the lifetime of the process;
// the verification suites all filter this shared list.
const std::vector<Graph>& all_iso_classes(int n, int threads = 0, bool allow8 = false);

int effective_threads(int requested);

}  // namespace bookdec
