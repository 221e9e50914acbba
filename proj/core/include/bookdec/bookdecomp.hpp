#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "bookdec/constructions.hpp"
#include "bookdec/graph.hpp"
#include "bookdec/indices.hpp"
#include "bookdec/poly.hpp"
#include "bookdec/rational.hpp"

namespace bookdec {

// Number of surjections from an a-set onto a k-set.
// Conventions: surjections(0,0)=1, surjections(a,0)=0 for a>=1, 0 for k>a.
Int surjections(int a, int k);

// phi(a,t,p) = surjections(a,t+p) + surjections(a,t+p+1): the image of a
// function [a] -> N(u) either misses v or contains it.
Int phi(int a, int t, int p);

// Ordered signature (t,p,q): t pages, p leaves on the first endpoint,
// q leaves on the second.
using TupleKey = std::array<int, 3>;

struct WeightRow {
    BookPattern pattern;  // canonical, p <= q
    std::string graph6;
    Rat weight;
};

// Decomposition of an edge-polynomial index into generalized-book counts:
//   sum_{uv in E} f(d_u,d_v) = sum_B weight(B) * subgraph_count(B, G).
struct WeightTable {
    std::string index_name;
    SymmetricPoly poly;
    int max_deg = 0;  // per-variable degree bound; tuple support box

    // w-hat over all ordered (t,p,q) with t+p <= max_deg, t+q <= max_deg
    // (zeros included).
    std::map<TupleKey, Rat> ordered_weights;

    // One row per canonical pattern in the box (zeros included), sorted by
    // (vertex count, t, p, q).
    std::vector<WeightRow> rows;

    // Nonzero class weights only.
    std::map<BookPattern, Rat> class_weights;

    Rat ordered_weight_of(const TupleKey& key) const;
    Rat weight_of(const BookPattern& pattern) const;
    std::vector<BookPattern> patterns() const;  // one per row
};

WeightTable book_weights(const SymmetricPoly& f, const std::string& name);
WeightTable book_weights(const IndexDef& def);  // throws if not edge-polynomial

// Number of tuples (T,P,Q) of pairwise-disjoint vertex sets with
// |T|=t, T subset of N(u) cap N(v); |P|=p, P subset of N(u) minus {v} and T;
// |Q|=q, Q subset of N(v) minus {u}, T and P.  uv must be an edge.
Int tuple_count_closed(const Graph& g, int u, int v, int t, int p, int q);
// Same value by explicit subset enumeration (independent oracle).
Int tuple_count_enum(const Graph& g, int u, int v, int t, int p, int q);

// For each ordered signature (t,p,q): the number of tuples (u,v,T,P,Q) inside
// the pattern graph whose generated edge set {uv} + u x (T u P) + v x (T u Q)
// equals the pattern's edge set exactly.  Brute force on the abstract graph.
std::map<TupleKey, Int> spanning_tuple_multiplicities(const BookPattern& b);

// Exact subgraph counts for each pattern (embeddings / automorphisms).
std::map<BookPattern, Int> book_counts(const Graph& g, const std::vector<BookPattern>& patterns);

// sum_B weight(B) * count(B); counts may cover more patterns than the table.
Rat decompose_from_counts(const WeightTable& table, const std::map<BookPattern, Int>& counts);
// Convenience: count the table's patterns in g, then combine.
Rat decompose_eval(const WeightTable& table, const Graph& g);

// Emitters.  JSON rows: {"pattern":{"t":..,"p":..,"q":..},"graph6":..,
// "weight":"p/q"}, sorted by (vertex count, t, p, q).
std::string weight_table_json(const WeightTable& table, int indent = 2);
std::string weight_table_csv(const WeightTable& table);
std::string weight_table_text(const WeightTable& table);

}  // namespace bookdec
