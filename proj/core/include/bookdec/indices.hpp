#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bookdec/graph.hpp"
#include "bookdec/poly.hpp"
#include "bookdec/rational.hpp"

namespace bookdec {

// A degree-based index: the sum over edges of edge_poly(d(u), d(v)). The one
// exception is R0_r at r = 0, which degenerates to the vertex count and has no
// edge polynomial.
struct IndexDef {
    std::string name;    // canonical CLI name, e.g. "M2", "chi_r:2", "M_rs:2,1"
    std::string family;  // registry family the entry came from
    std::vector<int> params;
    bool vertex_count = false;  // R0_r:0 -> |V(G)|
    SymmetricPoly edge_poly;

    bool is_polynomial() const { return !vertex_count; }
    // Degree <= 2 in each variable and no x^2 y^2 term: the scope of the
    // K_4-free Turan-graph maximization sweep.
    bool small_degree_no_square_product() const;
    bool monotone_on_grid(int nmax = 20) const;
};

inline const std::vector<std::string>& registry_families() {
    static const std::vector<std::string> fams = {
        "M1", "F", "M2", "RM2", "HM1", "HM2", "HF", "EM1", "B1", "B2",
        "chi_r", "R0_r", "R_r", "M_rs"};
    return fams;
}

// Build one index. Parameter counts: chi_r/R0_r/R_r take one, M_rs takes two,
// the rest none. Exponents must be non-negative; R0_r additionally rejects
// nothing (r = 0 becomes the vertex-count special case).
IndexDef make_index(const std::string& family, const std::vector<int>& params = {});

// "M2", "chi_r:2", "M_rs:2,1", "R0_r:3"
IndexDef parse_index(std::string_view text);

// The ten fixed indices plus every parameterized entry with exponents in
// 1..param_max (M_rs over 1 <= s <= r <= param_max).
std::vector<IndexDef> registry_all(int param_max = 4);

Rat eval_edge_poly(const SymmetricPoly& f, const Graph& g);
Rat eval_index(const IndexDef& def, const Graph& g);

// Q(G) - Q(G - uv), computed from the edges incident to u or v only.
Rat delta_remove_edge(const IndexDef& def, const Graph& g, int u, int v);

// x^{r-1} + y^{r-1}: the edge form of the vertex sum of d(v)^r, r >= 1.
SymmetricPoly vertex_power_edge_poly(int r);

}  // namespace bookdec
