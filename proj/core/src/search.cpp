#include "bookdec/search.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "bookdec/canonical.hpp"
#include "bookdec/count.hpp"

namespace bookdec {

Objective Objective::for_index(const IndexDef& def) {
    Objective o;
    o.index = def;
    o.label = "index:" + def.name;
    return o;
}

Objective Objective::for_pattern(const Graph& h, const std::string& name) {
    Objective o;
    o.pattern = h;
    o.label = "count:" + name;
    return o;
}

Objective Objective::for_pattern(const BookPattern& b) {
    return for_pattern(book_graph(b), b.label());
}

Rat Objective::eval(const Graph& g) const {
    if (index) return eval_index(*index, g);
    if (pattern) return Rat(count_subgraphs(*pattern, g));
    throw std::logic_error("objective has no target");
}

SearchReport run_search(const SearchSpec& spec) {
    auto t0 = std::chrono::steady_clock::now();
    SearchReport report;
    report.spec = spec;

    const auto& classes = all_iso_classes(spec.n, spec.threads, spec.allow8);
    report.total_classes = static_cast<long long>(classes.size());

    bool have = false;
    std::vector<const Graph*> best_graphs;
    for (const Graph& g : classes) {
        if (!spec.constraints.satisfied_by(g)) continue;
        report.enumerated_count++;
        Rat value = spec.objective.eval(g);
        if (!have || (spec.maximize ? value > report.optimum : value < report.optimum)) {
            have = true;
            report.optimum = value;
            best_graphs.assign(1, &g);
        } else if (value == report.optimum) {
            best_graphs.push_back(&g);
        }
    }

    if (!have) {
        report.empty = true;
    } else {
        for (const Graph* g : best_graphs) {
            report.witnesses.push_back(g->to_graph6());
            if (!report.matched_construction)
                report.matched_construction = match_construction(*g);
        }
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

std::optional<std::string> match_construction(const Graph& g) {
    int n = g.n();
    int m = g.edge_count();
    std::string code = canonical_code(g);
    auto match = [&](const Graph& cand) {
        return cand.n() == n && cand.edge_count() == m && canonical_code(cand) == code;
    };
    auto args = [](std::initializer_list<int> xs) {
        std::string s;
        for (int x : xs) s += (s.empty() ? ":" : ",") + std::to_string(x);
        return s;
    };

    if (match(complete_graph(n))) return "complete" + args({n});
    if (n >= 2 && match(star_graph(n))) return "star" + args({n});
    if (match(path_graph(n))) return "path" + args({n});
    if (n >= 3 && match(cycle_graph(n))) return "cycle" + args({n});
    for (int t = 0; t <= n - 2; t++)
        for (int p = 0; 2 + t + 2 * p <= n; p++) {
            int q = n - 2 - t - p;
            if (q < p || 2 * t + p + q + 1 != m) continue;
            if (!match(book_graph(t, p, q))) continue;
            if (t == 0) return "doublestar" + args({p, q});
            return "book" + args({t, p, q});
        }
    for (int k = 1; k < n; k++)
        if (match(turan_graph(n, k))) return "turan" + args({n, k});
    for (int a = 2; 2 * a <= n; a++)
        if (match(complete_bipartite(a, n - a))) return "bipartite" + args({a, n - a});
    for (int k = 3; k < n; k++)
        if (match(kite_graph(n, k))) return "kite" + args({n, k});
    if (m <= n * (n - 1) / 2 && match(quasi_clique(n, m))) return "quasiclique" + args({n, m});
    for (long long q : {3, 5, 7})
        if (q * q + q + 1 == n && match(polarity_graph(static_cast<int>(q))))
            return "polarity" + args({static_cast<int>(q)});
    return std::nullopt;
}

namespace {

nlohmann::ordered_json constraints_json(const Constraints& c) {
    nlohmann::ordered_json j;
    if (c.edge_count) j["edges"] = *c.edge_count;
    if (c.triangle_free) j["triangle_free"] = true;
    if (c.connected) j["connected"] = true;
    if (c.clique_at_most) j["clique_at_most"] = *c.clique_at_most;
    if (c.clique_exact) j["clique_exact"] = *c.clique_exact;
    if (!c.forbid.empty()) {
        auto arr = nlohmann::ordered_json::array();
        for (const Graph& f : c.forbid) arr.push_back(f.to_graph6());
        j["forbid"] = std::move(arr);
    }
    if (!c.require.empty()) {
        auto arr = nlohmann::ordered_json::array();
        for (const Graph& f : c.require) arr.push_back(f.to_graph6());
        j["contains"] = std::move(arr);
    }
    return j;
}

}  // namespace

std::string search_json(const SearchReport& report, int indent) {
    nlohmann::ordered_json out;
    out["n"] = report.spec.n;
    out["constraints"] = constraints_json(report.spec.constraints);
    out["objective"] = report.spec.objective.label;
    out["direction"] = report.spec.maximize ? "max" : "min";
    out["total_classes"] = report.total_classes;
    out["enumerated_count"] = report.enumerated_count;
    if (report.empty) {
        out["empty"] = true;
    } else {
        out["optimum"] = rat_to_string(report.optimum);
        out["witnesses"] = report.witnesses;
        out["matched_construction"] =
            report.matched_construction ? nlohmann::ordered_json(*report.matched_construction)
                                        : nlohmann::ordered_json(nullptr);
    }
    return out.dump(indent) + "\n";
}

std::string search_csv(const SearchReport& report) {
    std::ostringstream out;
    out << "n,objective,direction,optimum,witness,matched_construction\n";
    if (report.empty) {
        out << report.spec.n << ',' << report.spec.objective.label << ','
            << (report.spec.maximize ? "max" : "min") << ",empty,,\n";
        return out.str();
    }
    for (const std::string& w : report.witnesses)
        out << report.spec.n << ',' << report.spec.objective.label << ','
            << (report.spec.maximize ? "max" : "min") << ',' << rat_to_string(report.optimum)
            << ',' << w << ',' << report.matched_construction.value_or("") << '\n';
    return out.str();
}

std::string search_text(const SearchReport& report) {
    std::ostringstream out;
    out << (report.spec.maximize ? "max " : "min ") << report.spec.objective.label
        << " over n=" << report.spec.n << ": ";
    if (report.empty) {
        out << "empty search space (" << report.total_classes << " classes examined)\n";
        return out.str();
    }
    out << rat_to_string(report.optimum) << "\n";
    out << "  searched " << report.enumerated_count << " of " << report.total_classes
        << " isomorphism classes\n";
    for (const std::string& w : report.witnesses) out << "  witness " << w << "\n";
    if (report.matched_construction) out << "  matches " << *report.matched_construction << "\n";
    return out.str();
}

}  // namespace bookdec
