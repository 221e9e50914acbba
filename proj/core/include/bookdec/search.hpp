#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bookdec/constructions.hpp"
#include "bookdec/enumerate.hpp"
#include "bookdec/graph.hpp"
#include "bookdec/indices.hpp"
#include "bookdec/rational.hpp"

namespace bookdec {

// What to optimize: an index value or a subgraph count.
struct Objective {
    std::optional<IndexDef> index;
    std::optional<Graph> pattern;  // counted when index is absent
    std::string label;             // "index:M2" / "count:B_1(1,1)"

    static Objective for_index(const IndexDef& def);
    static Objective for_pattern(const Graph& h, const std::string& name);
    static Objective for_pattern(const BookPattern& b);

    Rat eval(const Graph& g) const;
};

struct SearchSpec {
    int n = 0;
    Constraints constraints;
    Objective objective;
    bool maximize = true;
    int threads = 0;   // 0 = hardware concurrency
    bool allow8 = false;
};

struct SearchReport {
    SearchSpec spec;
    bool empty = false;  // no graph satisfied the constraints
    Rat optimum;
    std::vector<std::string> witnesses;  // canonical graph6, in canonical-code order
    long long enumerated_count = 0;      // iso-classes satisfying the constraints
    long long total_classes = 0;         // iso-classes of order n
    std::optional<std::string> matched_construction;  // for the first matching witness
    double seconds = 0.0;                // wall time; never serialized
};

// Exhaustive exact optimization over all isomorphism classes of order spec.n.
// Deterministic: same report for every thread count.
SearchReport run_search(const SearchSpec& spec);

// Name a graph when it is isomorphic to one of the library constructions,
// using `construct` grammar ("turan:6,3", "kite:5,3", "doublestar:2,2", ...).
std::optional<std::string> match_construction(const Graph& g);

std::string search_json(const SearchReport& report, int indent = 2);
std::string search_csv(const SearchReport& report);
std::string search_text(const SearchReport& report);

}  // namespace bookdec
