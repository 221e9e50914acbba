#include "bookdec/identities.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <thread>

#include "bookdec/canonical.hpp"
#include "bookdec/count.hpp"

namespace bookdec {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

Graph random_graph(int n, uint64_t seed, uint64_t trial) {
    Graph g(n);
    uint64_t base = splitmix64(splitmix64(seed) + trial);
    for (int j = 1; j < n; j++)
        for (int i = 0; i < j; i++)
            if (splitmix64(base + static_cast<uint64_t>(pair_slot(i, j))) & 1) g.add_edge(i, j);
    return g;
}

Rat NPoly::eval(long long n) const { return c0 + c1 * Rat(n) + c2 * Rat(binomial(n - 3, 2)); }

std::string NPoly::text() const {
    std::string out;
    auto append = [&](const Rat& c, const std::string& sym) {
        if (c == 0) return;
        if (!out.empty()) out += " + ";
        out += rat_to_string(c);
        if (!sym.empty()) out += " " + sym;
    };
    append(c0, "");
    append(c1, "n");
    append(c2, "C(n-3,2)");
    return out.empty() ? "0" : out;
}

Rat CountTerm::eval(const Graph& g) const {
    Rat c = coef.eval(g.n());
    if (c == 0) return 0;
    if (pattern) return c * Rat(count_subgraphs(*pattern, g));
    if (index) return c * eval_index(*index, g);
    return c;
}

std::string CountTerm::text() const {
    std::string c = "(" + coef.text() + ")";
    if (pattern) return c + " N(" + pattern_name + ")";
    if (index) return c + " " + index->name;
    return c;
}

Rat CountExpr::eval(const Graph& g) const {
    Rat total = 0;
    for (const CountTerm& t : terms) total += t.eval(g);
    return total;
}

std::string CountExpr::text() const {
    std::string out;
    for (const CountTerm& t : terms) {
        if (!out.empty()) out += " + ";
        out += t.text();
    }
    return out.empty() ? "0" : out;
}

IdentityReport check_identity(const CountIdentity& ident, int nmax, int threads) {
    IdentityReport report;
    report.name = ident.name;
    report.rel = ident.rel;
    for (int n = ident.nmin; n <= nmax; n++)
        for (const Graph& g : all_iso_classes(n, threads)) {
            if (!ident.population.satisfied_by(g)) continue;
            report.checked++;
            Rat lhs = ident.lhs.eval(g);
            Rat rhs = ident.rhs.eval(g);
            bool ok = ident.rel == Rel::eq ? lhs == rhs : lhs <= rhs;
            if (!ok) report.violations.push_back({g.to_graph6(), lhs, rhs});
        }
    return report;
}

namespace {

NPoly np(Rat c0, Rat c1 = 0, Rat c2 = 0) { return NPoly{std::move(c0), std::move(c1), std::move(c2)}; }

CountTerm count_term(NPoly coef, Graph pattern, std::string name) {
    CountTerm t;
    t.coef = std::move(coef);
    t.pattern = std::move(pattern);
    t.pattern_name = std::move(name);
    return t;
}

CountTerm const_term(NPoly coef) {
    CountTerm t;
    t.coef = std::move(coef);
    return t;
}

CountTerm index_term(NPoly coef, IndexDef def) {
    CountTerm t;
    t.coef = std::move(coef);
    t.index = std::move(def);
    return t;
}

}  // namespace

CountIdentity identity_handshake() {
    CountIdentity ident;
    ident.name = "degree sum = 2 |E|";
    ident.lhs.terms.push_back(index_term(np(1), make_index("R0_r", {1})));
    ident.rhs.terms.push_back(count_term(np(2), complete_graph(2), "K_2"));
    ident.rel = Rel::eq;
    ident.nmin = 1;
    return ident;
}

CountIdentity identity_mantel() {
    CountIdentity ident;
    ident.name = "|E| <= n^2/4 on triangle-free graphs";
    ident.lhs.terms.push_back(count_term(np(1), complete_graph(2), "K_2"));
    // n^2/4 written in the 1, n, C(n-3,2) basis; valid from n = 3 up
    ident.rhs.terms.push_back(const_term(np(-3, Rat(7) / 4, Rat(1) / 2)));
    ident.rel = Rel::le;
    ident.population.triangle_free = true;
    ident.nmin = 3;
    return ident;
}

CountIdentity identity_b111_bound() {
    CountIdentity ident;
    ident.name = "N(B_1(1,1)) <= 2 C(n-3,2) N(K_3) + N(H5) on K_4-free graphs";
    ident.lhs.terms.push_back(count_term(np(1), bull_graph(), "B_1(1,1)"));
    ident.rhs.terms.push_back(count_term(np(0, 0, 2), complete_graph(3), "K_3"));
    ident.rhs.terms.push_back(count_term(np(1), h5_graph(), "H5"));
    ident.rel = Rel::le;
    ident.population.clique_at_most = 3;
    ident.nmin = 5;
    return ident;
}

CountIdentity identity_s12_claimed() {
    CountIdentity ident;
    ident.name = "2 N(S_{1,2}) = (n-4) N(K_3) + N(B_1(1,1)) on K_4-free graphs";
    ident.lhs.terms.push_back(count_term(np(2), double_star(1, 2), "S_{1,2}"));
    ident.rhs.terms.push_back(count_term(np(-4, 1), complete_graph(3), "K_3"));
    ident.rhs.terms.push_back(count_term(np(1), bull_graph(), "B_1(1,1)"));
    ident.rel = Rel::eq;
    ident.population.clique_at_most = 3;
    ident.nmin = 5;
    ident.note = "candidate identity kept for the record; it fails (see the bull)";
    return ident;
}

CountIdentity identity_s12_path_variant() {
    CountIdentity ident = identity_s12_claimed();
    ident.name = "2 N(S_{1,2}) = (n-4) N(P_4) + N(B_1(1,1)) on K_4-free graphs";
    ident.rhs.terms[0] = count_term(np(-4, 1), path_graph(4), "P_4");
    ident.note = "variant reading with P_4 in place of K_3; also fails";
    return ident;
}

namespace {

struct RegistryTables {
    std::vector<std::pair<IndexDef, WeightTable>> tables;
    std::vector<BookPattern> union_patterns;
};

const RegistryTables& registry_tables() {
    static const RegistryTables rt = [] {
        RegistryTables r;
        std::set<BookPattern> pats;
        for (const IndexDef& def : registry_all()) {
            WeightTable table = book_weights(def);
            for (const auto& [pat, w] : table.class_weights) pats.insert(pat);
            r.tables.emplace_back(def, std::move(table));
        }
        r.union_patterns.assign(pats.begin(), pats.end());
        return r;
    }();
    return rt;
}

void check_decomposition_graph(const Graph& g, const std::string& label,
                               DecompositionCheck& out) {
    const RegistryTables& rt = registry_tables();
    auto counts = book_counts(g, rt.union_patterns);
    out.graphs++;
    for (const auto& [def, table] : rt.tables) {
        out.comparisons++;
        Rat direct = eval_index(def, g);
        Rat decomposed = decompose_from_counts(table, counts);
        if (direct != decomposed)
            out.discrepancies.push_back(label + " index=" + def.name +
                                        " direct=" + rat_to_string(direct) +
                                        " decomposed=" + rat_to_string(decomposed));
    }
}

}  // namespace

DecompositionCheck check_decomposition_random(int trials, uint64_t seed, int threads) {
    DecompositionCheck out;
    out.trials = trials;
    out.seed = seed;
    registry_tables();  // build once before the workers start

    int workers = std::min(effective_threads(threads), std::max(trials, 1));
    std::vector<DecompositionCheck> parts(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; w++)
        pool.emplace_back([&, w] {
            for (int i = w; i < trials; i += workers) {
                int n = 7 + i % 6;
                Graph g = random_graph(n, seed, static_cast<uint64_t>(i));
                check_decomposition_graph(
                    g, "trial=" + std::to_string(i) + " graph6=" + g.to_graph6(), parts[w]);
            }
        });
    for (auto& t : pool) t.join();

    // Stitch the interleaved trial ranges back into trial order.
    std::vector<std::vector<std::string>> lists(workers);
    for (int w = 0; w < workers; w++) {
        out.graphs += parts[w].graphs;
        out.comparisons += parts[w].comparisons;
        lists[w] = std::move(parts[w].discrepancies);
    }
    std::vector<size_t> cursor(workers, 0);
    for (int i = 0; i < trials; i++) {
        int w = i % workers;
        std::string prefix = "trial=" + std::to_string(i) + " ";
        while (cursor[w] < lists[w].size() &&
               lists[w][cursor[w]].compare(0, prefix.size(), prefix) == 0)
            out.discrepancies.push_back(lists[w][cursor[w]++]);
    }
    return out;
}

DecompositionCheck check_decomposition_exhaustive(int nmax, int threads) {
    DecompositionCheck out;
    for (int n = 1; n <= nmax; n++)
        for (const Graph& g : all_iso_classes(n, threads))
            check_decomposition_graph(g, "n=" + std::to_string(n) + " graph6=" + g.to_graph6(),
                                      out);
    return out;
}

std::vector<std::string> undetected_weight_mutations(const WeightTable& table, int nmax) {
    std::vector<std::string> undetected;
    auto patterns = table.patterns();
    std::vector<char> detected(table.rows.size(), 0);
    for (int n = 1; n <= nmax; n++)
        for (const Graph& g : all_iso_classes(n)) {
            auto counts = book_counts(g, patterns);
            Rat direct = eval_edge_poly(table.poly, g);
            Rat base = decompose_from_counts(table, counts);
            for (size_t r = 0; r < table.rows.size(); r++) {
                if (detected[r]) continue;
                if (base + Rat(counts.at(table.rows[r].pattern)) != direct) detected[r] = 1;
            }
        }
    for (size_t r = 0; r < table.rows.size(); r++)
        if (!detected[r])
            undetected.push_back(table.index_name + " " + table.rows[r].pattern.label());
    return undetected;
}

TupleCheck check_tuple_counts(int trials, uint64_t seed, int tpq_max) {
    TupleCheck tc;
    tc.trials = trials;
    tc.seed = seed;
    tc.tpq_max = tpq_max;
    for (int i = 0; i < trials; i++) {
        int n = 4 + i % 9;
        Graph g = random_graph(n, seed, static_cast<uint64_t>(i));
        tc.graphs++;
        for (auto [x, y] : g.edges())
            for (auto [u, v] : {std::pair(x, y), std::pair(y, x)})
                for (int t = 0; t <= tpq_max; t++)
                    for (int p = 0; p <= tpq_max; p++)
                        for (int q = 0; q <= tpq_max; q++) {
                            tc.tuples_checked++;
                            Int closed = tuple_count_closed(g, u, v, t, p, q);
                            Int byenum = tuple_count_enum(g, u, v, t, p, q);
                            if (closed != byenum)
                                tc.mismatches.push_back(
                                    "trial=" + std::to_string(i) + " graph6=" + g.to_graph6() +
                                    " edge=(" + std::to_string(u) + "," + std::to_string(v) +
                                    ") tpq=(" + std::to_string(t) + "," + std::to_string(p) +
                                    "," + std::to_string(q) + ") closed=" + closed.str() +
                                    " enum=" + byenum.str());
                        }
    }
    return tc;
}

namespace {

CheckRow identity_row(const CountIdentity& ident, int nmax, int threads) {
    IdentityReport report = check_identity(ident, nmax, threads);
    CheckRow row;
    row.name = report.name;
    row.checked = report.checked;
    row.pass = report.holds();
    row.expected = "no violations";
    row.actual = std::to_string(report.violations.size()) + " violations";
    row.detail = ident.note;
    for (const IdentityViolation& v : report.violations)
        row.violations.push_back({v.graph6, rat_to_string(v.lhs), rat_to_string(v.rhs)});
    return row;
}

CheckRow expected_failure_row(const CountIdentity& ident, int nmax, int threads,
                              const Rat& bull_lhs, const Rat& bull_rhs) {
    IdentityReport report = check_identity(ident, nmax, threads);
    CheckRow row;
    row.name = report.name;
    row.checked = report.checked;
    std::string bull6 = canonical_form(bull_graph()).to_graph6();
    bool bull_found = false;
    for (const IdentityViolation& v : report.violations) {
        if (v.graph6 == bull6 && v.lhs == bull_lhs && v.rhs == bull_rhs) bull_found = true;
        row.violations.push_back({v.graph6, rat_to_string(v.lhs), rat_to_string(v.rhs)});
    }
    row.pass = !report.holds() && bull_found;
    row.expected = "violations present; bull gives " + rat_to_string(bull_lhs) + " vs " +
                   rat_to_string(bull_rhs);
    row.actual = std::to_string(report.violations.size()) + " violations";
    row.detail = ident.note;
    return row;
}

}  // namespace

SuiteReport identities_suite(int nmax, int threads, int trials, uint64_t seed) {
    auto start = std::chrono::steady_clock::now();
    SuiteReport rep;
    rep.suite = "identities";
    rep.params["nmax"] = std::to_string(nmax);
    rep.params["trials"] = std::to_string(trials);
    rep.params["seed"] = std::to_string(seed);

    rep.rows.push_back(identity_row(identity_handshake(), std::min(nmax, 5), threads));
    rep.rows.push_back(identity_row(identity_mantel(), std::min(nmax, 6), threads));
    rep.rows.push_back(identity_row(identity_b111_bound(), nmax, threads));
    rep.rows.push_back(expected_failure_row(identity_s12_claimed(), nmax, threads, 4, 2));
    rep.rows.push_back(expected_failure_row(identity_s12_path_variant(), nmax, threads, 4, 6));

    {
        DecompositionCheck dc = check_decomposition_exhaustive(std::min(nmax, 6), threads);
        CheckRow row;
        row.name = "decomposition = direct evaluation, exhaustive n <= " +
                   std::to_string(std::min(nmax, 6));
        row.checked = dc.graphs;
        row.pass = dc.discrepancies.empty();
        row.expected = "0 discrepancies";
        row.actual = std::to_string(dc.discrepancies.size()) + " discrepancies in " +
                     std::to_string(dc.comparisons) + " comparisons";
        for (size_t i = 0; i < dc.discrepancies.size() && i < 16; i++)
            row.detail += (i ? "; " : "") + dc.discrepancies[i];
        rep.rows.push_back(std::move(row));
    }
    {
        DecompositionCheck dc = check_decomposition_random(trials, seed, threads);
        CheckRow row;
        row.name = "decomposition = direct evaluation, " + std::to_string(trials) +
                   " random graphs (n in [7,12])";
        row.checked = dc.graphs;
        row.pass = dc.discrepancies.empty();
        row.expected = "0 discrepancies";
        row.actual = std::to_string(dc.discrepancies.size()) + " discrepancies in " +
                     std::to_string(dc.comparisons) + " comparisons";
        for (size_t i = 0; i < dc.discrepancies.size() && i < 16; i++)
            row.detail += (i ? "; " : "") + dc.discrepancies[i];
        rep.rows.push_back(std::move(row));
    }
    {
        TupleCheck tc = check_tuple_counts();
        CheckRow row;
        row.name = "tuple counting: closed form vs subset enumeration, " +
                   std::to_string(tc.trials) + " random graphs";
        row.checked = tc.tuples_checked;
        row.pass = tc.mismatches.empty();
        row.expected = "0 mismatches";
        row.actual = std::to_string(tc.mismatches.size()) + " mismatches";
        for (size_t i = 0; i < tc.mismatches.size() && i < 16; i++)
            row.detail += (i ? "; " : "") + tc.mismatches[i];
        rep.rows.push_back(std::move(row));
    }
    for (const char* name : {"M2", "M1"}) {
        auto bad = undetected_weight_mutations(book_weights(make_index(name)), 5);
        CheckRow row;
        row.name = std::string("weight mutation detection, ") + name;
        row.pass = bad.empty();
        row.expected = "every +1 class-weight perturbation detected on some n <= 5 graph";
        row.actual = bad.empty() ? "all detected" : "undetected:";
        for (const std::string& b : bad) row.actual += " " + b;
        rep.rows.push_back(std::move(row));
    }

    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace bookdec
