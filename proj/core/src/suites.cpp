#include "bookdec/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "bookdec/canonical.hpp"
#include "bookdec/count.hpp"
#include "bookdec/enumerate.hpp"
#include "bookdec/indices.hpp"

namespace bookdec {

bool SuiteReport::pass() const { return failures() == 0; }

long long SuiteReport::failures() const {
    long long f = 0;
    for (const auto& row : rows)
        if (row.assertive && !row.pass) f++;
    return f;
}

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double done() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

// Per-order facts shared by every population filter of a suite pass.
struct ClassFacts {
    const std::vector<Graph>* classes = nullptr;
    std::vector<int> omega;
    std::vector<char> connected;
};

ClassFacts class_facts(int n, int threads) {
    ClassFacts facts;
    facts.classes = &all_iso_classes(n, threads);
    facts.omega.reserve(facts.classes->size());
    facts.connected.reserve(facts.classes->size());
    for (const Graph& g : *facts.classes) {
        facts.omega.push_back(clique_number(g));
        facts.connected.push_back(g.is_connected() ? 1 : 0);
    }
    return facts;
}

struct Extreme {
    bool any = false;
    Rat value;
    std::vector<const Graph*> witnesses;
    long long population = 0;
};

template <typename Eval>
Extreme scan(const std::vector<const Graph*>& population, Eval&& eval, bool maximize) {
    Extreme best;
    best.population = static_cast<long long>(population.size());
    for (const Graph* g : population) {
        Rat v = eval(*g);
        if (!best.any || (maximize ? v > best.value : v < best.value)) {
            best.any = true;
            best.value = v;
            best.witnesses.assign(1, g);
        } else if (v == best.value) {
            best.witnesses.push_back(g);
        }
    }
    return best;
}

bool has_witness(const Extreme& e, const std::string& canon_g6) {
    for (const Graph* g : e.witnesses)
        if (g->to_graph6() == canon_g6) return true;
    return false;
}

std::vector<std::string> witness_g6(const Extreme& e, size_t cap = 16) {
    std::vector<std::string> out;
    for (const Graph* g : e.witnesses) {
        if (out.size() == cap) break;
        out.push_back(g->to_graph6());
    }
    return out;
}

// Row asserting an extremal value and witness membership for a construction.
CheckRow extremal_row(std::string name, const Extreme& best, const Rat& expected,
                      const std::string& construction_g6, const std::string& construction_name) {
    CheckRow row;
    row.name = std::move(name);
    row.checked = best.population;
    row.expected = rat_to_string(expected);
    if (!best.any) {
        row.pass = false;
        row.actual = "empty population";
        return row;
    }
    row.actual = rat_to_string(best.value);
    bool member = has_witness(best, construction_g6);
    row.pass = best.value == expected && member;
    row.witnesses = witness_g6(best);
    row.detail = construction_name + (member ? " among witnesses" : " NOT a witness");
    return row;
}

std::vector<BookPattern> pattern_sweep(int max_tpq, int n) {
    std::vector<BookPattern> out;
    for (int t = 0; t <= max_tpq; t++)
        for (int p = 0; p <= max_tpq; p++)
            for (int q = p; q <= max_tpq; q++)
                if (t + p + q + 2 <= n) out.push_back(BookPattern{t, p, q});
    return out;
}

std::vector<IndexDef> small_degree_indices() {
    std::vector<IndexDef> out;
    for (const IndexDef& def : registry_all())
        if (def.small_degree_no_square_product()) out.push_back(def);
    return out;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

SuiteReport verify_xu(int nmax, int threads) {
    Timer timer;
    SuiteReport rep;
    rep.suite = "xu";
    rep.params["nmax"] = std::to_string(nmax);
    IndexDef m2 = make_index("M2");
    auto sweep = small_degree_indices();

    for (int n = 3; n <= nmax; n++) {
        ClassFacts facts = class_facts(n, threads);
        for (int k = 2; k < n; k++) {
            std::vector<const Graph*> pop;
            for (size_t i = 0; i < facts.classes->size(); i++)
                if (facts.omega[i] <= k) pop.push_back(&(*facts.classes)[i]);

            Graph turan = turan_graph(n, k);
            std::string tg6 = canonical_form(turan).to_graph6();
            Extreme best = scan(pop, [&](const Graph& g) { return eval_index(m2, g); }, true);
            rep.rows.push_back(extremal_row(
                "max M2, n=" + std::to_string(n) + ", forbid K_" + std::to_string(k + 1), best,
                eval_index(m2, turan), tg6, "T(" + std::to_string(n) + "," + std::to_string(k) + ")"));

            if (k != 3) continue;
            for (const IndexDef& def : sweep) {
                Extreme b = scan(pop, [&](const Graph& g) { return eval_index(def, g); }, true);
                rep.rows.push_back(extremal_row(
                    "max " + def.name + ", n=" + std::to_string(n) + ", forbid K_4", b,
                    eval_index(def, turan), tg6, "T(" + std::to_string(n) + ",3)"));
            }
        }
    }
    rep.seconds = timer.done();
    return rep;
}

SuiteReport verify_gentur(int nmax, int threads) {
    Timer timer;
    SuiteReport rep;
    rep.suite = "gentur";
    rep.params["nmax"] = std::to_string(nmax);
    Graph bull = bull_graph();
    Graph s12 = double_star(1, 2);
    auto sweep = small_degree_indices();

    for (int n = 5; n <= nmax; n++) {
        ClassFacts facts = class_facts(n, threads);
        std::vector<const Graph*> pop;
        for (size_t i = 0; i < facts.classes->size(); i++)
            if (facts.omega[i] <= 3) pop.push_back(&(*facts.classes)[i]);

        Graph turan = turan_graph(n, 3);
        std::string tg6 = canonical_form(turan).to_graph6();
        std::string tname = "T(" + std::to_string(n) + ",3)";

        for (auto& [h, hname] : {std::pair(bull, std::string("B_1(1,1)")),
                                 std::pair(s12, std::string("S_{1,2}"))}) {
            Extreme best =
                scan(pop, [&](const Graph& g) { return Rat(count_subgraphs(h, g)); }, true);
            rep.rows.push_back(extremal_row(
                "max count " + hname + ", n=" + std::to_string(n) + ", forbid K_4", best,
                Rat(count_subgraphs(h, turan)), tg6, tname));
        }
        for (const IndexDef& def : sweep) {
            Extreme best = scan(pop, [&](const Graph& g) { return eval_index(def, g); }, true);
            rep.rows.push_back(
                extremal_row("max " + def.name + ", n=" + std::to_string(n) + ", forbid K_4",
                             best, eval_index(def, turan), tg6, tname));
        }
    }
    rep.seconds = timer.done();
    return rep;
}

SuiteReport verify_bipartite(int nmax, int threads) {
    Timer timer;
    SuiteReport rep;
    rep.suite = "bipartite";
    rep.params["nmax"] = std::to_string(nmax);

    std::vector<IndexDef> monotone;
    for (const IndexDef& def : registry_all())
        if (def.monotone_on_grid(20)) monotone.push_back(def);
    rep.params["monotone_indices"] = std::to_string(monotone.size());

    for (int n = 2; n <= nmax; n++) {
        ClassFacts facts = class_facts(n, threads);
        std::vector<const Graph*> pop;
        for (const Graph& g : *facts.classes)
            if (g.is_triangle_free()) pop.push_back(&g);

        for (const IndexDef& def : monotone) {
            Extreme best = scan(pop, [&](const Graph& g) { return eval_index(def, g); }, true);
            bool any_m = false;
            Rat best_bip;
            int best_m = 0;
            for (int m = 1; 2 * m <= n; m++) {
                Rat v = eval_index(def, complete_bipartite(m, n - m));
                if (!any_m || v > best_bip) {
                    any_m = true;
                    best_bip = v;
                    best_m = m;
                }
            }
            bool member = false;
            for (int m = 1; 2 * m <= n && !member; m++)
                if (eval_index(def, complete_bipartite(m, n - m)) == best_bip)
                    member = has_witness(best, canonical_form(complete_bipartite(m, n - m)).to_graph6());

            CheckRow row;
            row.name = "max " + def.name + ", n=" + std::to_string(n) + ", triangle-free";
            row.checked = best.population;
            row.expected = rat_to_string(best_bip);
            row.actual = best.any ? rat_to_string(best.value) : "empty population";
            row.pass = best.any && best.value == best_bip && member;
            row.witnesses = witness_g6(best);
            row.detail = "optimal m = " + std::to_string(best_m) + " (K_{" + std::to_string(best_m) +
                         "," + std::to_string(n - best_m) + "})";
            rep.rows.push_back(std::move(row));
        }
    }
    rep.seconds = timer.done();
    return rep;
}

SuiteReport verify_kite(int nmax, int threads) {
    Timer timer;
    SuiteReport rep;
    rep.suite = "kite";
    rep.params["nmax"] = std::to_string(nmax);
    auto registry = registry_all();

    for (int n = 2; n <= nmax; n++) {
        ClassFacts facts = class_facts(n, threads);
        auto patterns = pattern_sweep(3, n);
        for (int k = 2; k <= n; k++) {
            std::vector<const Graph*> pop;
            for (size_t i = 0; i < facts.classes->size(); i++)
                if (facts.connected[i] && facts.omega[i] == k) pop.push_back(&(*facts.classes)[i]);

            Graph kite = kite_graph(n, k);
            std::string kg6 = canonical_form(kite).to_graph6();
            std::string kname = "Ki(" + std::to_string(n) + "," + std::to_string(k) + ")";
            std::string where = ", n=" + std::to_string(n) + ", clique=" + std::to_string(k);

            for (const BookPattern& pat : patterns) {
                Graph h = book_graph(pat);
                Extreme best =
                    scan(pop, [&](const Graph& g) { return Rat(count_subgraphs(h, g)); }, false);
                if (k == 2 && pat == BookPattern{0, 1, 1}) {
                    CheckRow row;
                    row.name = "min count " + pat.label() + where + " (star exception)";
                    row.checked = best.population;
                    row.expected = "0";
                    row.actual = best.any ? rat_to_string(best.value) : "empty population";
                    std::string sg6 = canonical_form(star_graph(n)).to_graph6();
                    row.pass = best.any && best.value == 0 && has_witness(best, sg6);
                    row.witnesses = witness_g6(best);
                    row.detail = "S_" + std::to_string(n) + " attains 0; " + kname + " has " +
                                 count_subgraphs(h, kite).str() + " copies";
                    rep.rows.push_back(std::move(row));
                } else {
                    rep.rows.push_back(extremal_row("min count " + pat.label() + where, best,
                                                    Rat(count_subgraphs(h, kite)), kg6, kname));
                }
            }
            if (k < 3) continue;
            for (const IndexDef& def : registry) {
                Extreme best = scan(pop, [&](const Graph& g) { return eval_index(def, g); }, false);
                rep.rows.push_back(extremal_row("min " + def.name + where, best,
                                                eval_index(def, kite), kg6, kname));
            }
        }
    }
    rep.seconds = timer.done();
    return rep;
}

SuiteReport verify_genkite(const Graph& h, const std::string& h_label, int nmax, int threads) {
    if (!is_vertex_transitive(h))
        throw std::invalid_argument(
            "generalized kite verification needs a vertex-transitive base graph: with an "
            "asymmetric base the kite family Ki(n,H) depends on the attachment vertex and no "
            "single extremal graph is predicted");
    Timer timer;
    SuiteReport rep;
    rep.suite = "genkite";
    rep.params["nmax"] = std::to_string(nmax);
    rep.params["h"] = h_label;
    rep.params["h_graph6"] = h.to_graph6();
    bool h_is_edge = h.n() == 2 && h.edge_count() == 1;

    for (int n = std::max(h.n(), 2); n <= nmax; n++) {
        ClassFacts facts = class_facts(n, threads);
        std::vector<const Graph*> pop;
        for (size_t i = 0; i < facts.classes->size(); i++)
            if (facts.connected[i] && contains_subgraph(h, (*facts.classes)[i]))
                pop.push_back(&(*facts.classes)[i]);

        Graph gk = generalized_kite(n, h, 0);
        std::string gk6 = canonical_form(gk).to_graph6();
        std::string gkname = "Ki(" + std::to_string(n) + "," + h_label + ")";
        std::string where = ", n=" + std::to_string(n) + ", contains " + h_label;

        for (const BookPattern& pat : pattern_sweep(3, n)) {
            Graph hp = book_graph(pat);
            Extreme best =
                scan(pop, [&](const Graph& g) { return Rat(count_subgraphs(hp, g)); }, false);
            if (h_is_edge && pat == BookPattern{0, 1, 1}) {
                CheckRow row;
                row.name = "min count " + pat.label() + where + " (star exception)";
                row.checked = best.population;
                row.expected = "0";
                row.actual = best.any ? rat_to_string(best.value) : "empty population";
                std::string sg6 = canonical_form(star_graph(n)).to_graph6();
                row.pass = best.any && best.value == 0 && has_witness(best, sg6);
                row.witnesses = witness_g6(best);
                row.detail = "S_" + std::to_string(n) + " attains 0; " + gkname + " has " +
                             count_subgraphs(hp, gk).str() + " copies";
                rep.rows.push_back(std::move(row));
            } else {
                rep.rows.push_back(extremal_row("min count " + pat.label() + where, best,
                                                Rat(count_subgraphs(hp, gk)), gk6, gkname));
            }
        }
    }
    rep.seconds = timer.done();
    return rep;
}

SuiteReport verify_quasiclique(int nmax, int threads) {
    Timer timer;
    SuiteReport rep;
    rep.suite = "quasiclique";
    rep.params["nmax"] = std::to_string(nmax);
    IndexDef m2 = make_index("M2");

    for (int n = 1; n <= nmax; n++) {
        ClassFacts facts = class_facts(n, threads);
        for (int m = 0; m <= n * (n - 1) / 2; m++) {
            std::vector<const Graph*> pop;
            for (const Graph& g : *facts.classes)
                if (g.edge_count() == m) pop.push_back(&g);
            Graph qc = quasi_clique(n, m);
            Extreme best = scan(pop, [&](const Graph& g) { return eval_index(m2, g); }, true);
            rep.rows.push_back(extremal_row(
                "max M2, n=" + std::to_string(n) + ", m=" + std::to_string(m), best,
                eval_index(m2, qc), canonical_form(qc).to_graph6(),
                "quasi-clique(" + std::to_string(n) + "," + std::to_string(m) + ")"));
        }
    }
    rep.seconds = timer.done();
    return rep;
}

Rat m2_complete_bipartite(long long a, long long b) {
    Int e = Int(a) * Int(b);
    return Rat(e * e);
}

RatioRow asymptotic_path_case(int k, long long n) {
    if (k < 3) throw std::invalid_argument("path case needs k >= 3");
    long long a = (k - 1) / 2;
    if (n <= a) throw std::invalid_argument("path case needs n > floor((k-1)/2)");
    RatioRow row;
    row.construction = "K_{" + std::to_string(a) + "," + std::to_string(n - a) + "}";
    row.n = n;
    row.value = m2_complete_bipartite(a, n - a);
    row.leading = Rat(Int(a) * Int(a) * Int(n) * Int(n));
    row.ratio = row.value / row.leading;
    row.ratio_float = row.ratio.convert_to<double>();
    return row;
}

RatioRow asymptotic_cycle_case(int k, long long n) {
    if (k < 2) throw std::invalid_argument("cycle case needs k >= 2");
    long long a = k - 1;
    if (n <= a) throw std::invalid_argument("cycle case needs n > k-1");
    RatioRow row;
    row.construction = "K_{" + std::to_string(a) + "," + std::to_string(n - a) + "}";
    row.n = n;
    row.value = m2_complete_bipartite(a, n - a);
    row.leading = Rat(Int(a) * Int(a) * Int(n) * Int(n));
    row.ratio = row.value / row.leading;
    row.ratio_float = row.ratio.convert_to<double>();
    return row;
}

PolarityRatio asymptotic_polarity_case(long long q) {
    PolarityRatio out;
    out.info = polarity_info(q);
    double n = static_cast<double>(out.info.n);
    out.ratio = 2.0 * out.info.m2.convert_to<double>() / std::pow(n, 2.5);
    Int n5 = int_pow(Int(out.info.n), 5);
    out.in_range = out.info.m2 > 0 && out.info.m2 * out.info.m2 < n5;
    return out;
}

SuiteReport asymptotic_report(int nmax, int kmax, std::pair<int, long long> path_case,
                              std::pair<int, long long> cycle_case,
                              const std::vector<long long>& polarity_qs, int threads) {
    Timer timer;
    SuiteReport rep;
    rep.suite = "asymptotics";
    rep.params["nmax"] = std::to_string(nmax);
    rep.params["kmax"] = std::to_string(kmax);

    // Forbidden-clique report: is every registry index maximized by the Turan
    // graph already at this size? Informational only (no threshold is known).
    auto registry = registry_all();
    ClassFacts facts = class_facts(nmax, threads);
    for (int k = 3; k <= kmax; k++) {
        std::vector<const Graph*> pop;
        for (size_t i = 0; i < facts.classes->size(); i++)
            if (facts.omega[i] <= k - 1) pop.push_back(&(*facts.classes)[i]);
        Graph turan = turan_graph(nmax, k - 1);
        std::string tg6 = canonical_form(turan).to_graph6();
        std::vector<std::string> mismatched;
        for (const IndexDef& def : registry) {
            Extreme best = scan(pop, [&](const Graph& g) { return eval_index(def, g); }, true);
            if (!(best.any && best.value == eval_index(def, turan) && has_witness(best, tg6)))
                mismatched.push_back(def.name);
        }
        CheckRow row;
        row.name = "turan-maximizer report, n=" + std::to_string(nmax) + ", forbid K_" +
                   std::to_string(k);
        row.assertive = false;
        row.checked = static_cast<long long>(pop.size());
        row.actual = std::to_string(registry.size() - mismatched.size()) + "/" +
                     std::to_string(registry.size()) + " indices extremal at T";
        if (!mismatched.empty()) {
            row.detail = "not yet extremal:";
            for (const auto& name : mismatched) row.detail += " " + name;
        }
        rep.rows.push_back(std::move(row));
    }

    {
        long long n = path_case.second, a = (path_case.first - 1) / 2;
        RatioRow r = asymptotic_path_case(path_case.first, path_case.second);
        Rat want = rat_pow(Rat(n - a) / n, 2);  // (1 - a/n)^2, computed independently
        CheckRow row;
        row.name = "forbid P_" + std::to_string(path_case.first) + ", n=" + std::to_string(n) +
                   ": M2(" + r.construction + ") vs a^2 n^2";
        row.expected = rat_to_string(want);
        row.actual = rat_to_string(r.ratio);
        row.pass = r.ratio == want;
        row.detail = "ratio = " + std::to_string(r.ratio_float) +
                     ", M2 = " + rat_to_string(r.value);
        rep.rows.push_back(std::move(row));
    }
    {
        long long n = cycle_case.second, a = cycle_case.first - 1;
        RatioRow r = asymptotic_cycle_case(cycle_case.first, cycle_case.second);
        Rat want = rat_pow(Rat(n - a) / n, 2);
        CheckRow row;
        row.name = "forbid C_" + std::to_string(2 * cycle_case.first) + ", n=" +
                   std::to_string(n) + ": M2(" + r.construction + ") vs (k-1)^2 n^2";
        row.expected = rat_to_string(want);
        row.actual = rat_to_string(r.ratio);
        row.pass = r.ratio == want;
        row.detail = "ratio = " + std::to_string(r.ratio_float) +
                     ", M2 = " + rat_to_string(r.value);
        rep.rows.push_back(std::move(row));
    }
    for (long long q : polarity_qs) {
        PolarityRatio r = asymptotic_polarity_case(q);
        CheckRow row;
        row.name = "forbid K_{2,2}, polarity graph q=" + std::to_string(q) + " (n=" +
                   std::to_string(r.info.n) + "): 2 M2 / n^{5/2}";
        row.expected = "in (0,2)";
        row.actual = std::to_string(r.ratio);
        row.pass = r.in_range;
        row.detail = "M2 = " + r.info.m2.str() + ", edges = " + r.info.edges.str() +
                     ", absolute points = " + std::to_string(r.info.absolute_points);
        rep.rows.push_back(std::move(row));
    }
    rep.seconds = timer.done();
    return rep;
}

std::string suite_json(const SuiteReport& report, int indent, size_t max_violations) {
    nlohmann::ordered_json out;
    out["suite"] = report.suite;
    for (const auto& [k, v] : report.params) out["params"][k] = v;
    out["pass"] = report.pass();
    out["failures"] = report.failures();
    auto rows = nlohmann::ordered_json::array();
    for (const CheckRow& row : report.rows) {
        nlohmann::ordered_json r;
        r["name"] = row.name;
        r["status"] = !row.assertive ? "info" : row.pass ? "pass" : "fail";
        if (!row.expected.empty()) r["expected"] = row.expected;
        if (!row.actual.empty()) r["actual"] = row.actual;
        if (row.checked) r["checked"] = row.checked;
        if (!row.detail.empty()) r["detail"] = row.detail;
        if (!row.witnesses.empty()) r["witnesses"] = row.witnesses;
        if (!row.violations.empty()) {
            auto arr = nlohmann::ordered_json::array();
            for (const ViolationRow& v : row.violations) {
                if (arr.size() == max_violations) break;
                arr.push_back({{"graph6", v.graph6}, {"lhs", v.lhs}, {"rhs", v.rhs}});
            }
            r["violations"] = std::move(arr);
            r["violations_total"] = row.violations.size();
        }
        rows.push_back(std::move(r));
    }
    out["rows"] = std::move(rows);
    return out.dump(indent) + "\n";
}

std::string suite_csv(const SuiteReport& report) {
    std::ostringstream out;
    out << "suite,row,status,expected,actual,checked,detail\n";
    for (const CheckRow& row : report.rows)
        out << report.suite << ',' << csv_escape(row.name) << ','
            << (!row.assertive ? "info" : row.pass ? "pass" : "fail") << ','
            << csv_escape(row.expected) << ',' << csv_escape(row.actual) << ',' << row.checked
            << ',' << csv_escape(row.detail) << '\n';
    return out.str();
}

std::string suite_text(const SuiteReport& report) {
    std::ostringstream out;
    out << "suite " << report.suite;
    for (const auto& [k, v] : report.params) out << "  " << k << "=" << v;
    out << "\n";
    for (const CheckRow& row : report.rows) {
        out << (!row.assertive ? "[info] " : row.pass ? "[pass] " : "[FAIL] ") << row.name;
        if (!row.actual.empty()) {
            out << ": " << row.actual;
            if (!row.expected.empty() && row.expected != row.actual)
                out << " (expected " << row.expected << ")";
        }
        if (!row.detail.empty()) out << " -- " << row.detail;
        out << "\n";
        for (size_t i = 0; i < row.violations.size() && i < 8; i++)
            out << "         violation " << row.violations[i].graph6 << ": "
                << row.violations[i].lhs << " vs " << row.violations[i].rhs << "\n";
        if (row.violations.size() > 8)
            out << "         ... " << row.violations.size() << " violations total\n";
    }
    out << (report.pass() ? "SUITE PASS" : "SUITE FAIL") << " (" << report.rows.size()
        << " rows, " << report.failures() << " failures)\n";
    return out.str();
}

}  // namespace bookdec
