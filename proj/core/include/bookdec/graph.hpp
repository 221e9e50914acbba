#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bookdec {

inline constexpr int kMaxVertices = 64;

// Simple undirected graph on vertices 0..n-1, adjacency kept as one 64-bit
// neighborhood mask per vertex. Everything in this library that enumerates or
// counts leans on these masks, hence the hard n <= 64 cap.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    int edge_count() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }

    uint64_t neighbors(int v) const { return adj_[v]; }
    int degree(int v) const;
    std::vector<int> degree_sequence() const;  // sorted descending

    uint64_t vertex_mask() const;
    std::vector<std::pair<int, int>> edges() const;  // (u,v) with u < v, lexicographic

    bool is_connected() const;
    bool is_triangle_free() const;
    bool is_regular() const;

    // Graph on the same vertex count with every edge relabeled; perm[old] = new.
    Graph relabeled(const std::vector<int>& perm) const;

    std::string to_graph6() const;  // convenience for the free function below

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    std::vector<uint64_t> adj_;

    void check_vertex(int v, const char* who) const;
};

// graph6 codec (the >>64-bit-order<< printable format: 6 bits per byte offset
// by 63, upper triangle column by column). Round-trips any Graph exactly.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view s);

// Column-major upper-triangle slot of the pair (i,j), i < j: the bit position
// used by both graph6 and the labeled enumeration word.
inline int pair_slot(int i, int j) { return j * (j - 1) / 2 + i; }

}  // namespace bookdec
