#include "bookdec/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "bookdec/canonical.hpp"
#include "bookdec/count.hpp"

namespace bookdec {

bool Constraints::unconstrained() const {
    return !edge_count && !triangle_free && !connected && !clique_at_most &&
           !clique_exact && forbid.empty() && require.empty();
}

bool Constraints::satisfied_by(const Graph& g) const {
    if (edge_count && g.edge_count() != *edge_count) return false;
    if (triangle_free && !g.is_triangle_free()) return false;
    if (connected && !g.is_connected()) return false;
    if (clique_at_most || clique_exact) {
        int w = clique_number(g);
        if (clique_at_most && w > *clique_at_most) return false;
        if (clique_exact && w != *clique_exact) return false;
    }
    for (const Graph& f : forbid)
        if (contains_subgraph(f, g)) return false;
    for (const Graph& r : require)
        if (!contains_subgraph(r, g)) return false;
    return true;
}

void check_enumeration_size(int n, bool allow8) {
    if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
    if (n <= 7) return;
    if (n == 8 && allow8) return;
    if (n == 8)
        throw std::invalid_argument(
            "n=8 enumerates 2^28 graphs; pass the explicit opt-in to run it");
    throw std::invalid_argument("exhaustive enumeration is limited to n <= 8");
}

int effective_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

namespace {

struct SlotTable {
    // slot -> (i,j); avoids the inner loop above for hot scans
    std::vector<std::pair<int, int>> pairs;
    explicit SlotTable(int n) {
        for (int j = 1; j < n; j++)
            for (int i = 0; i < j; i++) pairs.emplace_back(i, j);
    }
};

}  // namespace

void for_each_labeled(int n, const Constraints& c,
                      const std::function<void(const Graph&)>& fn, bool allow8) {
    check_enumeration_size(n, allow8);
    SlotTable slots(n);
    uint64_t total = 1ull << slots.pairs.size();
    for (uint64_t word = 0; word < total; word++) {
        Graph g(n);
        uint64_t w = word;
        while (w) {
            int s = std::countr_zero(w);
            w &= w - 1;
            g.add_edge(slots.pairs[s].first, slots.pairs[s].second);
        }
        if (c.satisfied_by(g)) fn(g);
    }
}

std::vector<Graph> iso_classes(int n, const Constraints& c, int threads, bool allow8) {
    check_enumeration_size(n, allow8);
    SlotTable slots(n);
    uint64_t total = 1ull << slots.pairs.size();
    int nthreads = std::min<uint64_t>(effective_threads(threads), total);

    std::vector<std::map<std::string, Graph>> locals(nthreads);
    auto worker = [&](int tid) {
        uint64_t lo = total / nthreads * tid + std::min<uint64_t>(tid, total % nthreads);
        uint64_t hi = lo + total / nthreads + (static_cast<uint64_t>(tid) < total % nthreads);
        auto& found = locals[tid];
        for (uint64_t word = lo; word < hi; word++) {
            Graph g(n);
            uint64_t w = word;
            while (w) {
                int s = std::countr_zero(w);
                w &= w - 1;
                g.add_edge(slots.pairs[s].first, slots.pairs[s].second);
            }
            if (!c.satisfied_by(g)) continue;
            CanonicalResult canon = canonicalize(g);
            found.emplace(std::move(canon.code), std::move(canon.form));
        }
    };

    std::vector<std::thread> pool;
    for (int t = 1; t < nthreads; t++) pool.emplace_back(worker, t);
    worker(0);
    for (auto& th : pool) th.join();

    std::map<std::string, Graph> merged;
    for (auto& local : locals) merged.merge(local);
    std::vector<Graph> out;
    out.reserve(merged.size());
    for (auto& [code, form] : merged) out.push_back(std::move(form));
    return out;
}

const std::vector<Graph>& all_iso_classes(int n, int threads, bool allow8) {
    static std::mutex mu;
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, iso_classes(n, Constraints{}, threads, allow8)).first;
    return it->second;
}

}  // namespace bookdec
