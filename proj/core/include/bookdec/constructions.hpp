#pragma once

#include <compare>
#include <string>
#include <vector>

#include "bookdec/graph.hpp"
#include "bookdec/rational.hpp"

namespace bookdec {

// The triple (t,p,q) naming the generalized book B_t(p,q): an edge uv, t
// vertices joined to both ends, p pendant leaves at u, q at v. Canonical
// orientation keeps p <= q; B_t(p,q) and B_t(q,p) are one isomorphism class.
struct BookPattern {
    int t = 0, p = 0, q = 0;

    static BookPattern canonical(int t, int p, int q);
    int vertex_count() const { return t + p + q + 2; }
    int edge_count() const { return 2 * t + p + q + 1; }
    std::string label() const;  // "B_1(1,1)" style
    auto operator<=>(const BookPattern&) const = default;
};

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);                         // n >= 3
Graph star_graph(int n);                          // K_{1,n-1}
Graph complete_bipartite(int a, int b);
Graph complete_multipartite(const std::vector<int>& parts);
Graph turan_graph(int n, int k);                  // balanced k-partite, 1 <= k
Graph book_graph(int t, int p, int q);
Graph book_graph(const BookPattern& b);
Graph double_star(int p, int q);                  // book_graph(0,p,q)
Graph bull_graph();                               // book_graph(1,1,1)
Graph h5_graph();                                 // P_4 plus a vertex adjacent to all of it
Graph petersen_graph();

// K_a plus one vertex joined to b = m - C(a,2) clique vertices plus isolated
// rest; the maximizer candidate for fixed vertex and edge counts.
Graph quasi_clique(int n, int m);

// Clique (resp. arbitrary base graph) with a pendant path soaking up the
// remaining n - k (resp. n - |V(h)|) vertices.
Graph kite_graph(int n, int k);
Graph generalized_kite(int n, const Graph& h, int attach = 0);

// Orthogonality graph on the points of the projective plane over F_q: x ~ y
// iff x·y = 0 and x != y. C_4-free with q^2+q+1 vertices, q(q+1)^2/2 edges,
// degrees q (the q+1 self-orthogonal points) and q+1.
Graph polarity_graph(int q);  // q prime, q^2+q+1 <= 64

struct PolarityInfo {
    long long q = 0;
    long long n = 0;              // q^2+q+1
    long long absolute_points = 0;  // self-orthogonal, degree q
    Int edges;
    Int m1;  // sum of squared degrees
    Int m2;  // sum over edges of degree products
};
// Streaming computation without materializing the graph; q prime, n <= 10^4.
PolarityInfo polarity_info(long long q);

bool is_prime(long long q);

}  // namespace bookdec
