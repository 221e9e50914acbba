#include "bookdec/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bookdec {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("Graph: vertex count must be in [0,64], got " +
                                    std::to_string(n));
}

void Graph::check_vertex(int v, const char* who) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range(std::string(who) + ": vertex " + std::to_string(v) +
                                " out of range for n=" + std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
    check_vertex(u, "add_edge");
    check_vertex(v, "add_edge");
    if (u == v) throw std::invalid_argument("add_edge: loops not supported");
    adj_[u] |= 1ull << v;
    adj_[v] |= 1ull << u;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u, "remove_edge");
    check_vertex(v, "remove_edge");
    adj_[u] &= ~(1ull << v);
    adj_[v] &= ~(1ull << u);
}

int Graph::degree(int v) const {
    check_vertex(v, "degree");
    return std::popcount(adj_[v]);
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; v++) total += std::popcount(adj_[v]);
    return total / 2;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; v++) d[v] = std::popcount(adj_[v]);
    std::sort(d.rbegin(), d.rend());
    return d;
}

uint64_t Graph::vertex_mask() const {
    return n_ == 64 ? ~0ull : (1ull << n_) - 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; u++) {
        uint64_t higher = adj_[u] >> (u + 1) << (u + 1);
        while (higher) {
            int v = std::countr_zero(higher);
            higher &= higher - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    uint64_t seen = 1, frontier = 1;
    while (frontier) {
        uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= adj_[v];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == vertex_mask();
}

bool Graph::is_triangle_free() const {
    for (int u = 0; u < n_; u++) {
        uint64_t higher = adj_[u] >> (u + 1) << (u + 1);
        while (higher) {
            int v = std::countr_zero(higher);
            higher &= higher - 1;
            if (adj_[u] & adj_[v]) return false;
        }
    }
    return true;
}

bool Graph::is_regular() const {
    for (int v = 1; v < n_; v++)
        if (std::popcount(adj_[v]) != std::popcount(adj_[0])) return false;
    return true;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("relabeled: permutation size mismatch");
    Graph out(n_);
    for (auto [u, v] : edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

std::string Graph::to_graph6() const { return bookdec::to_graph6(*this); }

std::string to_graph6(const Graph& g) {
    std::string s;
    int n = g.n();
    if (n <= 62) {
        s.push_back(static_cast<char>(n + 63));
    } else {
        s.push_back('~');
        s.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        s.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        s.push_back(static_cast<char>((n & 63) + 63));
    }
    int bits = n * (n - 1) / 2;
    int acc = 0, filled = 0;
    for (int j = 1; j < n; j++) {
        for (int i = 0; i < j; i++) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                s.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (bits % 6) s.push_back(static_cast<char>((acc << (6 - bits % 6)) + 63));
    return s;
}

Graph from_graph6(std::string_view s) {
    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) throw std::invalid_argument("graph6: truncated input");
        int c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
        return c - 63;
    };
    long long n;
    if (!s.empty() && s[0] == '~') {
        pos = 1;
        if (s.size() >= 2 && s[1] == '~')
            throw std::invalid_argument("graph6: vertex count beyond supported range");
        long long a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = next();
    }
    if (n > kMaxVertices)
        throw std::invalid_argument("graph6: " + std::to_string(n) +
                                    " vertices exceeds the 64-vertex limit");
    Graph g(static_cast<int>(n));
    int bits = static_cast<int>(n * (n - 1) / 2);
    int acc = 0, avail = 0;
    for (int j = 1; j < n; j++) {
        for (int i = 0; i < j; i++) {
            if (avail == 0) {
                acc = next();
                avail = 6;
            }
            if ((acc >> (avail - 1)) & 1) g.add_edge(i, j);
            avail--;
        }
    }
    (void)bits;
    if (pos != s.size()) throw std::invalid_argument("graph6: trailing bytes");
    return g;
}

}  // namespace bookdec
