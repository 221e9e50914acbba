#include "bookdec/count.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace bookdec {

namespace {

// Mapping order for the backtracking search: greedily pick the vertex with the
// most already-ordered neighbors (degree breaks ties) so candidate sets shrink
// as early as possible. Disconnected patterns fall back to degree order per
// component automatically.
struct Plan {
    int hn = 0;
    std::vector<int> order;                  // order[i] = pattern vertex
    std::vector<std::vector<int>> back;      // indices < i mapped to neighbors
    std::vector<int> min_degree;             // degree in h of order[i]
};

Plan make_plan(const Graph& h) {
    Plan plan;
    plan.hn = h.n();
    uint64_t chosen = 0;
    for (int step = 0; step < h.n(); step++) {
        int best = -1, best_back = -1, best_deg = -1;
        for (int v = 0; v < h.n(); v++) {
            if ((chosen >> v) & 1) continue;
            int nb = std::popcount(h.neighbors(v) & chosen);
            int dg = h.degree(v);
            if (nb > best_back || (nb == best_back && dg > best_deg)) {
                best = v;
                best_back = nb;
                best_deg = dg;
            }
        }
        chosen |= 1ull << best;
        plan.order.push_back(best);
        plan.min_degree.push_back(h.degree(best));
        std::vector<int> back;
        for (int i = 0; i < step; i++)
            if (h.has_edge(plan.order[i], best)) back.push_back(i);
        plan.back.push_back(std::move(back));
    }
    return plan;
}

struct Embedder {
    const Plan& plan;
    const Graph& g;
    std::vector<uint64_t> base;  // per level: g-vertices with enough degree
    std::array<int, kMaxVertices> image{};
    bool stop_at_first = false;
    bool found = false;

    Embedder(const Plan& p, const Graph& host) : plan(p), g(host) {
        base.resize(plan.hn);
        for (int i = 0; i < plan.hn; i++) {
            uint64_t mask = 0;
            for (int v = 0; v < g.n(); v++)
                if (g.degree(v) >= plan.min_degree[i]) mask |= 1ull << v;
            base[i] = mask;
        }
    }

    uint64_t candidates(int level, uint64_t used) const {
        uint64_t cand = base[level] & ~used;
        for (int j : plan.back[level]) cand &= g.neighbors(image[j]);
        return cand;
    }

    Int count(int level, uint64_t used) {
        uint64_t cand = candidates(level, used);
        if (level == plan.hn - 1) return std::popcount(cand);
        Int total = 0;
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            image[level] = v;
            total += count(level + 1, used | (1ull << v));
        }
        return total;
    }

    bool exists(int level, uint64_t used) {
        uint64_t cand = candidates(level, used);
        if (level == plan.hn - 1) return cand != 0;
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            image[level] = v;
            if (exists(level + 1, used | (1ull << v))) return true;
        }
        return false;
    }
};

}  // namespace

Int count_embeddings(const Graph& h, const Graph& g) {
    if (h.n() > g.n()) return 0;
    if (h.n() == 0) return 1;
    Plan plan = make_plan(h);
    Embedder e(plan, g);
    return e.count(0, 0);
}

bool contains_subgraph(const Graph& h, const Graph& g) {
    if (h.n() > g.n()) return false;
    if (h.n() == 0) return true;
    Plan plan = make_plan(h);
    Embedder e(plan, g);
    return e.exists(0, 0);
}

Int automorphism_count(const Graph& h) {
    // A bijective map sending edges to edges on the same vertex set hits all
    // |E| edges, so non-edges are preserved too: embeddings h -> h are exactly
    // the automorphisms.
    if (h.n() == 0) return 1;
    return count_embeddings(h, h);
}

Int count_subgraphs(const Graph& h, const Graph& g) {
    Int emb = count_embeddings(h, g);
    Int aut = automorphism_count(h);
    Int copies = emb / aut;
    if (copies * aut != emb)
        throw std::logic_error("count_subgraphs: embedding count not divisible by |Aut|");
    return copies;
}

int clique_number(const Graph& g) {
    if (g.n() == 0) return 0;
    int best = 1;
    // Carraghan-Pardalos style branch and bound on neighborhood masks.
    auto rec = [&](auto&& self, uint64_t cand, int size) -> void {
        if (size > best) best = size;
        while (cand) {
            if (size + std::popcount(cand) <= best) return;
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            self(self, cand & g.neighbors(v), size + 1);
        }
    };
    rec(rec, g.vertex_mask(), 0);
    return best;
}

namespace {

// Is there an automorphism with image[a] = b? Pinned backtracking over the
// identity plan order.
bool has_automorphism_mapping(const Graph& g, int a, int b) {
    if (g.degree(a) != g.degree(b)) return false;
    int n = g.n();
    std::vector<int> image(n, -1);
    auto rec = [&](auto&& self, int v, uint64_t used) -> bool {
        if (v == n) return true;
        if (v == a) {
            if ((used >> b) & 1) return false;
            image[a] = b;
            return self(self, v + 1, used | (1ull << b));
        }
        uint64_t cand = ~used & g.vertex_mask();
        for (int w = 0; w < v; w++)
            if (g.has_edge(w, v)) cand &= g.neighbors(image[w]);
        while (cand) {
            int c = std::countr_zero(cand);
            cand &= cand - 1;
            if (g.degree(c) != g.degree(v)) continue;
            image[v] = c;
            if (self(self, v + 1, used | (1ull << c))) return true;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

}  // namespace

bool is_vertex_transitive(const Graph& g) {
    int n = g.n();
    if (n <= 1) return true;
    if (!g.is_regular()) return false;
    int m = g.edge_count();
    if (m == 0 || m == n * (n - 1) / 2) return true;
    for (int v = 1; v < n; v++)
        if (!has_automorphism_mapping(g, 0, v)) return false;
    return true;
}

}  // namespace bookdec
