#include "bookdec/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <numeric>

namespace bookdec {

namespace {

// Equitable refinement: start from degrees, repeatedly split color classes by
// the multiset of neighbor colors until stable. Color ids are ranks of
// structure-derived keys, so isomorphic graphs refine identically.
std::vector<int> refine_colors(const Graph& g) {
    int n = g.n();
    std::vector<int> color(n, 0);
    {
        std::vector<int> degs(n);
        for (int v = 0; v < n; v++) degs[v] = g.degree(v);
        std::vector<int> distinct = degs;
        std::sort(distinct.rbegin(), distinct.rend());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int v = 0; v < n; v++)
            color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(),
                                                         degs[v], std::greater<int>()) -
                                        distinct.begin());
    }
    int ncolors = n ? 1 + *std::max_element(color.begin(), color.end()) : 0;

    std::vector<std::vector<int>> key(n);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    while (true) {
        std::vector<uint64_t> class_mask(ncolors, 0);
        for (int v = 0; v < n; v++) class_mask[color[v]] |= 1ull << v;
        for (int v = 0; v < n; v++) {
            key[v].assign(1 + ncolors, 0);
            key[v][0] = color[v];
            for (int c = 0; c < ncolors; c++)
                key[v][1 + c] = std::popcount(g.neighbors(v) & class_mask[c]);
        }
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return key[a] < key[b]; });
        int next = 0;
        std::vector<int> ncolor(n);
        for (int i = 0; i < n; i++) {
            if (i > 0 && key[order[i]] != key[order[i - 1]]) next++;
            ncolor[order[i]] = next;
        }
        int newcount = n ? next + 1 : 0;
        color.swap(ncolor);
        if (newcount == ncolors) break;
        ncolors = newcount;
    }
    return color;
}

struct Searcher {
    const Graph& g;
    int n;
    std::vector<int> cell_of_pos;             // position -> cell id
    std::vector<std::vector<int>> cell_verts; // cell id -> member vertices
    uint64_t used = 0;
    std::array<int, kMaxVertices> cur_perm{};
    std::array<uint64_t, kMaxVertices> cur_rows{};
    std::array<int, kMaxVertices> best_perm{};
    std::array<uint64_t, kMaxVertices> best_rows{};
    bool have_best = false;

    explicit Searcher(const Graph& graph) : g(graph), n(graph.n()) {}

    // Row of v against the already-placed prefix; earlier positions are more
    // significant, so rows at equal depth compare like the bit string does.
    uint64_t row_bits(int v, int pos) const {
        uint64_t r = 0;
        uint64_t nb = g.neighbors(v);
        for (int j = 0; j < pos; j++) r = (r << 1) | ((nb >> cur_perm[j]) & 1);
        return r;
    }

    void leaf() {
        if (have_best) {
            int c = 0;
            for (int i = 0; i < n && c == 0; i++)
                c = cur_rows[i] < best_rows[i] ? -1 : cur_rows[i] > best_rows[i] ? 1 : 0;
            if (c <= 0) return;
        }
        best_rows = cur_rows;
        best_perm = cur_perm;
        have_best = true;
    }

    // At every depth only candidates attaining the maximal row can extend a
    // maximal string, so branch on those alone; `tight` tracks equality with
    // the incumbent prefix and prunes dominated nodes outright.
    void rec(int pos, bool tight) {
        if (pos == n) {
            leaf();
            return;
        }
        const auto& cell = cell_verts[cell_of_pos[pos]];
        uint64_t rmax = 0;
        bool any = false;
        std::array<uint64_t, kMaxVertices> rows{};
        for (int v : cell) {
            if ((used >> v) & 1) continue;
            uint64_t r = row_bits(v, pos);
            rows[v] = r;
            if (!any || r > rmax) rmax = r;
            any = true;
        }
        if (!any) return;  // unreachable: cells partition positions
        if (tight && have_best) {
            if (rmax < best_rows[pos]) return;
            tight = rmax == best_rows[pos];
        }
        for (int v : cell) {
            if ((used >> v) & 1) continue;
            if (rows[v] != rmax) continue;
            cur_perm[pos] = v;
            cur_rows[pos] = rmax;
            used |= 1ull << v;
            rec(pos + 1, tight);
            used &= ~(1ull << v);
        }
    }
};

std::string pack_code(int n, const std::array<uint64_t, kMaxVertices>& rows) {
    std::string code;
    code.reserve(1 + (n * (n - 1) / 2 + 7) / 8);
    code.push_back(static_cast<char>(n));
    int acc = 0, filled = 0;
    for (int k = 1; k < n; k++) {
        for (int b = k - 1; b >= 0; b--) {
            acc = (acc << 1) | static_cast<int>((rows[k] >> b) & 1);
            if (++filled == 8) {
                code.push_back(static_cast<char>(acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled) code.push_back(static_cast<char>(acc << (8 - filled)));
    return code;
}

}  // namespace

CanonicalResult canonicalize(const Graph& g) {
    int n = g.n();
    int m = g.edge_count();

    CanonicalResult res;
    res.perm.resize(n);

    if (m == 0 || m == n * (n - 1) / 2) {
        // Every labeling is equivalent; take the identity.
        std::iota(res.perm.begin(), res.perm.end(), 0);
        res.form = g;
        std::array<uint64_t, kMaxVertices> rows{};
        for (int k = 0; k < n; k++) rows[k] = m ? (1ull << k) - 1 : 0;
        res.code = pack_code(n, rows);
        return res;
    }

    std::vector<int> color = refine_colors(g);
    int ncolors = 1 + *std::max_element(color.begin(), color.end());

    Searcher s(g);
    s.cell_verts.assign(ncolors, {});
    for (int v = 0; v < n; v++) s.cell_verts[color[v]].push_back(v);
    s.cell_of_pos.reserve(n);
    for (int c = 0; c < ncolors; c++)
        s.cell_of_pos.insert(s.cell_of_pos.end(), s.cell_verts[c].size(), c);

    s.rec(0, true);

    for (int pos = 0; pos < n; pos++) res.perm[s.best_perm[pos]] = pos;
    res.form = g.relabeled(res.perm);
    res.code = pack_code(n, s.best_rows);
    return res;
}

std::string canonical_code(const Graph& g) { return canonicalize(g).code; }

Graph canonical_form(const Graph& g) { return canonicalize(g).form; }

}  // namespace bookdec
