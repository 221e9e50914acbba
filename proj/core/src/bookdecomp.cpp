#include "bookdec/bookdecomp.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "bookdec/canonical.hpp"
#include "bookdec/count.hpp"

namespace bookdec {

Int surjections(int a, int k) {
    if (a < 0 || k < 0) throw std::invalid_argument("surjections: negative argument");
    if (k > a) return 0;
    Int total = 0;
    for (int i = 0; i <= k; i++) {
        Int term = binomial(k, i) * int_pow(k - i, a);
        total += (i % 2 == 0) ? term : -term;
    }
    return total;
}

Int phi(int a, int t, int p) { return surjections(a, t + p) + surjections(a, t + p + 1); }

Rat WeightTable::ordered_weight_of(const TupleKey& key) const {
    auto it = ordered_weights.find(key);
    return it == ordered_weights.end() ? Rat(0) : it->second;
}

Rat WeightTable::weight_of(const BookPattern& pattern) const {
    auto it = class_weights.find(pattern);
    return it == class_weights.end() ? Rat(0) : it->second;
}

std::vector<BookPattern> WeightTable::patterns() const {
    std::vector<BookPattern> out;
    out.reserve(rows.size());
    for (const auto& row : rows) out.push_back(row.pattern);
    return out;
}

WeightTable book_weights(const SymmetricPoly& f, const std::string& name) {
    WeightTable table;
    table.index_name = name;
    table.poly = f;
    table.max_deg = f.max_degree();
    int A = table.max_deg;

    auto full = f.full_terms();
    for (int t = 0; t <= A; t++)
        for (int p = 0; p + t <= A; p++)
            for (int q = 0; q + t <= A; q++) {
                Rat w = 0;
                for (const auto& [a, b, c] : full) w += c * Rat(phi(a, t, p) * phi(b, t, q));
                table.ordered_weights[{t, p, q}] = w / 2;
            }

    for (int t = 0; t <= A; t++)
        for (int q = 0; q + t <= A; q++)
            for (int p = 0; p <= q; p++) {
                BookPattern pat = BookPattern::canonical(t, p, q);
                Rat w = 0;
                for (const auto& [key, mult] : spanning_tuple_multiplicities(pat))
                    w += table.ordered_weight_of(key) * Rat(mult);
                table.rows.push_back({pat, canonical_form(book_graph(pat)).to_graph6(), w});
                if (w != 0) table.class_weights[pat] = w;
            }
    std::sort(table.rows.begin(), table.rows.end(), [](const WeightRow& a, const WeightRow& b) {
        return std::tuple(a.pattern.vertex_count(), a.pattern.t, a.pattern.p, a.pattern.q) <
               std::tuple(b.pattern.vertex_count(), b.pattern.t, b.pattern.p, b.pattern.q);
    });
    return table;
}

WeightTable book_weights(const IndexDef& def) {
    if (!def.is_polynomial())
        throw std::invalid_argument("index " + def.name + " is not an edge-polynomial sum");
    return book_weights(def.edge_poly, def.name);
}

Int tuple_count_closed(const Graph& g, int u, int v, int t, int p, int q) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("tuple_count_closed: uv not an edge");
    if (t < 0 || p < 0 || q < 0) throw std::invalid_argument("tuple_count_closed: negative size");
    int c = std::popcount(g.neighbors(u) & g.neighbors(v));
    int du = g.degree(u), dv = g.degree(v);
    Int total = 0;
    for (int i = 0; i <= p; i++)
        total += binomial(c - t, i) * binomial(du - 1 - c, p - i) * binomial(dv - 1 - t - i, q);
    return binomial(c, t) * total;
}

namespace {

// Enumerate all k-subsets of the set bits of mask.
template <typename Fn>
void for_each_k_subset(uint64_t mask, int k, uint64_t chosen, Fn&& fn) {
    if (k == 0) {
        fn(chosen);
        return;
    }
    if (std::popcount(mask) < k) return;
    uint64_t low = mask & (~mask + 1);
    for_each_k_subset(mask & ~low, k - 1, chosen | low, fn);
    for_each_k_subset(mask & ~low, k, chosen, fn);
}

}  // namespace

Int tuple_count_enum(const Graph& g, int u, int v, int t, int p, int q) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("tuple_count_enum: uv not an edge");
    if (t < 0 || p < 0 || q < 0) throw std::invalid_argument("tuple_count_enum: negative size");
    Int total = 0;
    uint64_t common = g.neighbors(u) & g.neighbors(v);
    for_each_k_subset(common, t, 0, [&](uint64_t ts) {
        uint64_t pcand = g.neighbors(u) & ~(1ull << v) & ~ts;
        for_each_k_subset(pcand, p, 0, [&](uint64_t ps) {
            uint64_t qcand = g.neighbors(v) & ~(1ull << u) & ~ts & ~ps;
            for_each_k_subset(qcand, q, 0, [&](uint64_t) { total += 1; });
        });
    });
    return total;
}

std::map<TupleKey, Int> spanning_tuple_multiplicities(const BookPattern& b) {
    static std::mutex cache_mutex;
    static std::map<BookPattern, std::map<TupleKey, Int>> cache;
    {
        std::lock_guard lock(cache_mutex);
        auto it = cache.find(b);
        if (it != cache.end()) return it->second;
    }

    Graph g = book_graph(b);
    auto target = g.edges();
    std::map<TupleKey, Int> mult;
    for (auto [x, y] : target)
        for (auto [u, v] : {std::pair(x, y), std::pair(y, x)}) {
            uint64_t common = g.neighbors(u) & g.neighbors(v);
            for (uint64_t ts = common;; ts = (ts - 1) & common) {
                uint64_t pall = g.neighbors(u) & ~(1ull << v) & ~ts;
                for (uint64_t ps = pall;; ps = (ps - 1) & pall) {
                    uint64_t qall = g.neighbors(v) & ~(1ull << u) & ~ts & ~ps;
                    for (uint64_t qs = qall;; qs = (qs - 1) & qall) {
                        std::vector<std::pair<int, int>> gen;
                        gen.emplace_back(std::min(u, v), std::max(u, v));
                        for (uint64_t m = ts | ps; m; m &= m - 1) {
                            int w = std::countr_zero(m);
                            gen.emplace_back(std::min(u, w), std::max(u, w));
                        }
                        for (uint64_t m = ts | qs; m; m &= m - 1) {
                            int w = std::countr_zero(m);
                            gen.emplace_back(std::min(v, w), std::max(v, w));
                        }
                        std::sort(gen.begin(), gen.end());
                        if (gen == target)
                            mult[{std::popcount(ts), std::popcount(ps), std::popcount(qs)}] += 1;
                        if (qs == 0) break;
                    }
                    if (ps == 0) break;
                }
                if (ts == 0) break;
            }
        }

    std::lock_guard lock(cache_mutex);
    return cache.emplace(b, std::move(mult)).first->second;
}

std::map<BookPattern, Int> book_counts(const Graph& g, const std::vector<BookPattern>& patterns) {
    std::map<BookPattern, Int> counts;
    for (const auto& pat : patterns)
        if (!counts.count(pat)) counts[pat] = count_subgraphs(book_graph(pat), g);
    return counts;
}

Rat decompose_from_counts(const WeightTable& table, const std::map<BookPattern, Int>& counts) {
    Rat total = 0;
    for (const auto& [pat, w] : table.class_weights) {
        auto it = counts.find(pat);
        if (it == counts.end())
            throw std::invalid_argument("decompose_from_counts: missing count for " + pat.label());
        total += w * Rat(it->second);
    }
    return total;
}

Rat decompose_eval(const WeightTable& table, const Graph& g) {
    std::vector<BookPattern> needed;
    for (const auto& [pat, w] : table.class_weights) needed.push_back(pat);
    return decompose_from_counts(table, book_counts(g, needed));
}

std::string weight_table_json(const WeightTable& table, int indent) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json r;
        r["pattern"] = {{"t", row.pattern.t}, {"p", row.pattern.p}, {"q", row.pattern.q}};
        r["graph6"] = row.graph6;
        r["weight"] = rat_to_string(row.weight);
        rows.push_back(std::move(r));
    }
    nlohmann::ordered_json out;
    out["index"] = table.index_name;
    out["edge_polynomial"] = table.poly.text();
    out["max_degree"] = table.max_deg;
    out["class_weights"] = std::move(rows);
    return out.dump(indent) + "\n";
}

std::string weight_table_csv(const WeightTable& table) {
    std::ostringstream out;
    out << "index,t,p,q,label,graph6,weight\n";
    for (const auto& row : table.rows)
        out << table.index_name << ',' << row.pattern.t << ',' << row.pattern.p << ','
            << row.pattern.q << ',' << row.pattern.label() << ',' << row.graph6 << ','
            << rat_to_string(row.weight) << '\n';
    return out.str();
}

std::string weight_table_text(const WeightTable& table) {
    std::ostringstream out;
    out << "index " << table.index_name << "  f(x,y) = " << table.poly.text() << "\n";
    for (const auto& row : table.rows)
        out << "  " << row.pattern.label() << "  (" << row.graph6
            << ")  weight = " << rat_to_string(row.weight) << "\n";
    return out.str();
}

}  // namespace bookdec
