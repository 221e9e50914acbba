#include "bookdec/constructions.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace bookdec {

BookPattern BookPattern::canonical(int t, int p, int q) {
    if (t < 0 || p < 0 || q < 0)
        throw std::invalid_argument("BookPattern: negative parameter");
    if (p > q) std::swap(p, q);
    return BookPattern{t, p, q};
}

std::string BookPattern::label() const {
    return "B_" + std::to_string(t) + "(" + std::to_string(p) + "," +
           std::to_string(q) + ")";
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; v++) g.add_edge(v - 1, v);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph star_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; v++) g.add_edge(0, v);
    return g;
}

Graph complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int s : parts) {
        if (s < 0) throw std::invalid_argument("complete_multipartite: negative part");
        n += s;
    }
    Graph g(n);
    std::vector<int> part_of;
    for (size_t i = 0; i < parts.size(); i++)
        part_of.insert(part_of.end(), parts[i], static_cast<int>(i));
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++)
            if (part_of[u] != part_of[v]) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) { return complete_multipartite({a, b}); }

Graph turan_graph(int n, int k) {
    if (k < 1 || n < 0) throw std::invalid_argument("turan_graph: need k >= 1, n >= 0");
    std::vector<int> parts(k);
    for (int i = 0; i < k; i++) parts[i] = n / k + (i < n % k ? 1 : 0);
    return complete_multipartite(parts);
}

Graph book_graph(int t, int p, int q) {
    if (t < 0 || p < 0 || q < 0) throw std::invalid_argument("book_graph: negative parameter");
    // 0 = u, 1 = v, then pages, then u's leaves, then v's leaves
    Graph g(t + p + q + 2);
    g.add_edge(0, 1);
    int next = 2;
    for (int i = 0; i < t; i++, next++) {
        g.add_edge(0, next);
        g.add_edge(1, next);
    }
    for (int i = 0; i < p; i++, next++) g.add_edge(0, next);
    for (int i = 0; i < q; i++, next++) g.add_edge(1, next);
    return g;
}

Graph book_graph(const BookPattern& b) { return book_graph(b.t, b.p, b.q); }

Graph double_star(int p, int q) { return book_graph(0, p, q); }

Graph bull_graph() { return book_graph(1, 1, 1); }

Graph h5_graph() {
    Graph g(5);
    for (int v = 1; v < 4; v++) g.add_edge(v - 1, v);  // P_4 on 0..3
    for (int v = 0; v < 4; v++) g.add_edge(4, v);
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; i++) {
        g.add_edge(i, (i + 1) % 5);          // outer 5-cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

Graph quasi_clique(int n, int m) {
    if (n < 0 || m < 0 || m > n * (n - 1) / 2)
        throw std::invalid_argument("quasi_clique: infeasible edge count");
    int a = 0;
    while ((a + 1) * a / 2 <= m) a++;  // largest a with C(a,2) <= m
    int b = m - a * (a - 1) / 2;
    Graph g(n);
    for (int u = 0; u < a; u++)
        for (int v = u + 1; v < a; v++) g.add_edge(u, v);
    for (int v = 0; v < b; v++) g.add_edge(a, v);
    return g;
}

Graph kite_graph(int n, int k) {
    if (k < 1 || n < k) throw std::invalid_argument("kite_graph: need n >= k >= 1");
    return generalized_kite(n, complete_graph(k), 0);
}

Graph generalized_kite(int n, const Graph& h, int attach) {
    int hn = h.n();
    if (n < hn) throw std::invalid_argument("generalized_kite: n below |V(H)|");
    if (hn == 0) throw std::invalid_argument("generalized_kite: empty base");
    if (attach < 0 || attach >= hn) throw std::invalid_argument("generalized_kite: bad attach vertex");
    Graph g(n);
    for (auto [u, v] : h.edges()) g.add_edge(u, v);
    for (int v = hn; v < n; v++) g.add_edge(v == hn ? attach : v - 1, v);
    return g;
}

bool is_prime(long long q) {
    if (q < 2) return false;
    for (long long d = 2; d * d <= q; d++)
        if (q % d == 0) return false;
    return true;
}

namespace {

// Normalized homogeneous coordinates: (1,a,b), (0,1,a), (0,0,1).
std::vector<std::array<long long, 3>> projective_points(long long q) {
    std::vector<std::array<long long, 3>> pts;
    pts.reserve(q * q + q + 1);
    for (long long a = 0; a < q; a++)
        for (long long b = 0; b < q; b++) pts.push_back({1, a, b});
    for (long long a = 0; a < q; a++) pts.push_back({0, 1, a});
    pts.push_back({0, 0, 1});
    return pts;
}

long long dot3(const std::array<long long, 3>& x, const std::array<long long, 3>& y,
               long long q) {
    return (x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) % q;
}

}  // namespace

Graph polarity_graph(int q) {
    if (!is_prime(q)) throw std::invalid_argument("polarity_graph: q must be prime");
    long long n = static_cast<long long>(q) * q + q + 1;
    if (n > kMaxVertices)
        throw std::invalid_argument(
            "polarity_graph: q^2+q+1 exceeds 64 vertices; use polarity_info for stats");
    auto pts = projective_points(q);
    Graph g(static_cast<int>(n));
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++)
            if (dot3(pts[i], pts[j], q) == 0) g.add_edge(i, j);
    return g;
}

PolarityInfo polarity_info(long long q) {
    if (!is_prime(q)) throw std::invalid_argument("polarity_info: q must be prime");
    long long n = q * q + q + 1;
    if (n > 10000) throw std::invalid_argument("polarity_info: q too large (n > 10^4)");
    auto pts = projective_points(q);
    PolarityInfo info;
    info.q = q;
    info.n = n;
    // degree = q+1 except on self-orthogonal points, where the polarity fixes
    // the point and the would-be loop is dropped
    std::vector<long long> deg(n);
    for (long long i = 0; i < n; i++) {
        bool absolute = dot3(pts[i], pts[i], q) == 0;
        deg[i] = absolute ? q : q + 1;
        if (absolute) info.absolute_points++;
    }
    Int sum_deg = 0, m1 = 0;
    for (long long i = 0; i < n; i++) {
        sum_deg += deg[i];
        m1 += Int(deg[i]) * deg[i];
    }
    info.edges = sum_deg / 2;
    info.m1 = m1;
    Int m2 = 0;
    for (long long i = 0; i < n; i++)
        for (long long j = i + 1; j < n; j++)
            if (dot3(pts[i], pts[j], q) == 0) m2 += Int(deg[i]) * deg[j];
    info.m2 = m2;
    return info;
}

}  // namespace bookdec
