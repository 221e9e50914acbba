#include "bookdec/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "bookdec/bookdecomp.hpp"
#include "bookdec/canonical.hpp"
#include "bookdec/constructions.hpp"
#include "bookdec/count.hpp"
#include "bookdec/identities.hpp"
#include "bookdec/indices.hpp"
#include "bookdec/rational.hpp"
#include "bookdec/search.hpp"
#include "bookdec/suites.hpp"

namespace bookdec {
namespace {

bool starts_with(const std::string& s, std::string_view prefix) {
    return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

long long parse_ll(const std::string& s) {
    size_t used = 0;
    long long v;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad integer '" + s + "'");
    }
    if (used != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
    return v;
}

std::vector<long long> parse_ll_list(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_ll(item));
    if (out.empty()) throw std::invalid_argument("expected parameters after ':'");
    return out;
}

int as_int(long long v, const std::string& what) {
    if (v < -1000000 || v > 1000000)
        throw std::invalid_argument(what + " out of range: " + std::to_string(v));
    return static_cast<int>(v);
}

std::string trimmed(std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) i++;
    return s.substr(i);
}

}  // namespace

Graph parse_graph_arg(const std::string& raw) {
    std::string text = trimmed(raw);
    if (text.empty()) throw std::invalid_argument("empty graph argument");
    if (starts_with(text, "g6:")) return from_graph6(text.substr(3));
    if (text == "bull") return bull_graph();
    if (text == "H5" || text == "h5") return h5_graph();
    if (text == "petersen") return petersen_graph();
    if (text == "claw") return star_graph(4);
    if (text == "paw") return kite_graph(4, 3);
    if (text == "diamond") return book_graph(2, 0, 0);

    size_t colon = text.find(':');
    if (colon != std::string::npos) {
        std::string name = text.substr(0, colon);
        auto ps = parse_ll_list(text.substr(colon + 1));
        auto want = [&](size_t k) {
            if (ps.size() != k)
                throw std::invalid_argument("'" + name + "' takes " + std::to_string(k) +
                                            " parameter(s)");
        };
        auto p = [&](size_t i) { return as_int(ps[i], name + " parameter"); };
        if (name == "book") { want(3); return book_graph(p(0), p(1), p(2)); }
        if (name == "doublestar") { want(2); return double_star(p(0), p(1)); }
        if (name == "star") { want(1); return star_graph(p(0)); }
        if (name == "path") { want(1); return path_graph(p(0)); }
        if (name == "cycle") { want(1); return cycle_graph(p(0)); }
        if (name == "complete") { want(1); return complete_graph(p(0)); }
        if (name == "empty") { want(1); return empty_graph(p(0)); }
        if (name == "bipartite") { want(2); return complete_bipartite(p(0), p(1)); }
        if (name == "turan") { want(2); return turan_graph(p(0), p(1)); }
        if (name == "kite") { want(2); return kite_graph(p(0), p(1)); }
        if (name == "quasiclique") { want(2); return quasi_clique(p(0), p(1)); }
        if (name == "polarity") { want(1); return polarity_graph(p(0)); }
        throw std::invalid_argument("unknown construction '" + name + "'");
    }

    // Compact named forms: K5, P4, C6, E3, K2,3, S_1_2.
    auto all_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    if (text.size() >= 2 && (text[0] == 'K' || text[0] == 'P' || text[0] == 'C' || text[0] == 'E')) {
        std::string rest = text.substr(1);
        size_t comma = rest.find(',');
        if (text[0] == 'K' && comma != std::string::npos && all_digits(rest.substr(0, comma)) &&
            all_digits(rest.substr(comma + 1)))
            return complete_bipartite(as_int(parse_ll(rest.substr(0, comma)), "part size"),
                                      as_int(parse_ll(rest.substr(comma + 1)), "part size"));
        if (all_digits(rest)) {
            int n = as_int(parse_ll(rest), "order");
            switch (text[0]) {
                case 'K': return complete_graph(n);
                case 'P': return path_graph(n);
                case 'C': return cycle_graph(n);
                case 'E': return empty_graph(n);
            }
        }
    }
    if (starts_with(text, "S_")) {
        size_t second = text.find('_', 2);
        if (second != std::string::npos && all_digits(text.substr(2, second - 2)) &&
            all_digits(text.substr(second + 1)))
            return double_star(as_int(parse_ll(text.substr(2, second - 2)), "leaf count"),
                               as_int(parse_ll(text.substr(second + 1)), "leaf count"));
    }

    try {
        return from_graph6(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a recognized graph name or graph6 string: '" + text +
                                    "'");
    }
}

namespace {

struct Global {
    int threads = 0;
    uint64_t seed = 1;
    std::string output;
    std::string format = "text";
    std::string json_path;
};

int emit(const std::string& payload, const Global& g, std::ostream& out, std::ostream& err) {
    if (g.output.empty() || g.output == "-") {
        out << payload;
        return 0;
    }
    std::ofstream f(g.output, std::ios::binary);
    if (!f) {
        err << "error: cannot open '" << g.output << "' for writing\n";
        return 2;
    }
    f << payload;
    return 0;
}

nlohmann::ordered_json rat_json(const Rat& v) {
    if (boost::multiprecision::denominator(v) == 1) {
        Int num = boost::multiprecision::numerator(v);
        if (num >= std::numeric_limits<long long>::min() &&
            num <= std::numeric_limits<long long>::max())
            return num.convert_to<long long>();
    }
    return rat_to_string(v);
}

nlohmann::ordered_json int_json(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return v.convert_to<long long>();
    return v.str();
}

Graph load_graph(const std::string& inline_arg, const std::string& file_arg) {
    if (!inline_arg.empty() && !file_arg.empty())
        throw std::invalid_argument("give either --graph or --graph-file, not both");
    if (!file_arg.empty()) {
        std::ifstream f(file_arg);
        if (!f) throw std::invalid_argument("cannot open '" + file_arg + "'");
        std::string line;
        std::getline(f, line);
        return parse_graph_arg(line);
    }
    if (inline_arg.empty()) throw std::invalid_argument("a graph is required: --graph or --graph-file");
    if (inline_arg == "-") {
        std::string line;
        std::getline(std::cin, line);
        return parse_graph_arg(line);
    }
    return parse_graph_arg(inline_arg);
}

// ---- construct ----

struct ConstructOpts {
    std::string name;
    std::optional<long long> n, k, m, t, p, q, a, b;
    std::string base;
    bool summary = false;
};

Graph build_construction(const ConstructOpts& o, std::string& label) {
    auto need = [&](const std::optional<long long>& v, const char* flag) {
        if (!v) throw std::invalid_argument(o.name + " needs --" + flag);
        return as_int(*v, std::string("--") + flag);
    };
    const std::string& nm = o.name;
    if (nm.find(':') != std::string::npos) {
        label = nm;
        return parse_graph_arg(nm);
    }
    auto two = [&](const char* fa, const std::optional<long long>& va, const char* fb,
                   const std::optional<long long>& vb, Graph (*make)(int, int)) {
        int x = need(va, fa), y = need(vb, fb);
        label = nm + ":" + std::to_string(x) + "," + std::to_string(y);
        return make(x, y);
    };
    auto one = [&](const char* fa, const std::optional<long long>& va, Graph (*make)(int)) {
        int x = need(va, fa);
        label = nm + ":" + std::to_string(x);
        return make(x);
    };
    if (nm == "turan") return two("n", o.n, "k", o.k, turan_graph);
    if (nm == "kite") return two("n", o.n, "k", o.k, kite_graph);
    if (nm == "quasiclique") return two("n", o.n, "m", o.m, quasi_clique);
    if (nm == "bipartite") return two("a", o.a, "b", o.b, complete_bipartite);
    if (nm == "doublestar") return two("p", o.p, "q", o.q, double_star);
    if (nm == "star") return one("n", o.n, star_graph);
    if (nm == "path") return one("n", o.n, path_graph);
    if (nm == "cycle") return one("n", o.n, cycle_graph);
    if (nm == "complete") return one("n", o.n, complete_graph);
    if (nm == "empty") return one("n", o.n, empty_graph);
    if (nm == "polarity") return one("q", o.q, polarity_graph);
    if (nm == "book") {
        int t = as_int(o.t.value_or(0), "--t"), p = as_int(o.p.value_or(0), "--p"),
            q = as_int(o.q.value_or(0), "--q");
        label = "book:" + std::to_string(t) + "," + std::to_string(p) + "," + std::to_string(q);
        return book_graph(t, p, q);
    }
    if (nm == "genkite") {
        int n = need(o.n, "n");
        if (o.base.empty()) throw std::invalid_argument("genkite needs --base <graph>");
        label = "genkite:" + std::to_string(n) + "," + o.base;
        return generalized_kite(n, parse_graph_arg(o.base), 0);
    }
    throw std::invalid_argument("unknown construction '" + nm + "'");
}

int cmd_construct(const ConstructOpts& o, const Global& g, std::ostream& out, std::ostream& err) {
    std::string label;
    Graph graph = build_construction(o, label);
    std::string g6 = to_graph6(graph);
    std::string payload;
    if (g.format == "json") {
        nlohmann::ordered_json j;
        j["construction"] = label;
        j["graph6"] = g6;
        j["n"] = graph.n();
        j["edges"] = graph.edge_count();
        j["degrees"] = graph.degree_sequence();
        payload = j.dump(2) + "\n";
    } else if (g.format == "csv") {
        std::ostringstream ss;
        ss << "construction,graph6,n,edges\n"
           << label << ',' << g6 << ',' << graph.n() << ',' << graph.edge_count() << "\n";
        payload = ss.str();
    } else {
        std::ostringstream ss;
        ss << g6 << "\n";
        if (o.summary) {
            ss << "n = " << graph.n() << ", edges = " << graph.edge_count() << "\n";
            ss << "degrees:";
            for (int d : graph.degree_sequence()) ss << ' ' << d;
            ss << "\n";
        }
        payload = ss.str();
    }
    return emit(payload, g, out, err);
}

// ---- eval ----

struct EvalOpts {
    std::string index, graph, graph_file;
};

int cmd_eval(const EvalOpts& o, const Global& g, std::ostream& out, std::ostream& err) {
    IndexDef def = parse_index(o.index);
    Graph graph = load_graph(o.graph, o.graph_file);
    Rat value = eval_index(def, graph);
    std::string payload;
    if (g.format == "json") {
        nlohmann::ordered_json j;
        j["index"] = def.name;
        j["graph6"] = to_graph6(graph);
        j["n"] = graph.n();
        j["edges"] = graph.edge_count();
        j["value"] = rat_json(value);
        payload = j.dump(2) + "\n";
    } else if (g.format == "csv") {
        payload = "index,graph6,value\n" + def.name + "," + to_graph6(graph) + "," +
                  rat_to_string(value) + "\n";
    } else {
        payload = rat_to_string(value) + "\n";
    }
    return emit(payload, g, out, err);
}

// ---- weights ----

struct WeightsOpts {
    std::string index;
};

int cmd_weights(const WeightsOpts& o, const Global& g, std::ostream& out, std::ostream& err) {
    WeightTable table = book_weights(parse_index(o.index));
    std::string payload = g.format == "json"  ? weight_table_json(table)
                          : g.format == "csv" ? weight_table_csv(table)
                                              : weight_table_text(table);
    return emit(payload, g, out, err);
}

// ---- count ----

struct CountOpts {
    std::string pattern, graph, graph_file;
    bool embeddings = false;
};

int cmd_count(const CountOpts& o, const Global& g, std::ostream& out, std::ostream& err) {
    Graph h = parse_graph_arg(o.pattern);
    Graph graph = load_graph(o.graph, o.graph_file);
    Int copies = count_subgraphs(h, graph);
    std::string payload;
    if (g.format == "json") {
        nlohmann::ordered_json j;
        j["pattern"] = o.pattern;
        j["pattern_graph6"] = to_graph6(canonical_form(h));
        j["graph6"] = to_graph6(graph);
        j["count"] = int_json(copies);
        if (o.embeddings) {
            j["embeddings"] = int_json(count_embeddings(h, graph));
            j["automorphisms"] = int_json(automorphism_count(h));
        }
        payload = j.dump(2) + "\n";
    } else if (g.format == "csv") {
        payload = "pattern,graph6,count\n" + o.pattern + "," + to_graph6(graph) + "," +
                  copies.str() + "\n";
    } else {
        payload = copies.str() + "\n";
    }
    return emit(payload, g, out, err);
}

// ---- search ----

struct SearchOpts {
    int n = 0;
    std::optional<long long> edges, clique_at_most, clique_exact;
    bool triangle_free = false, connected = false, allow8 = false;
    std::vector<std::string> forbid;
    std::string contains, objective;
    std::string direction = "max";
};

Objective parse_objective(const std::string& s) {
    if (starts_with(s, "index:")) return Objective::for_index(parse_index(s.substr(6)));
    if (starts_with(s, "pattern:")) {
        std::string rest = s.substr(8);
        return Objective::for_pattern(parse_graph_arg(rest), rest);
    }
    if (starts_with(s, "count:")) {
        std::string rest = s.substr(6);
        return Objective::for_pattern(parse_graph_arg(rest), rest);
    }
    throw std::invalid_argument("objective must look like index:M2 or pattern:book:1,1,1");
}

int cmd_search(const SearchOpts& o, const Global& g, std::ostream& out, std::ostream& err) {
    SearchSpec spec;
    spec.n = o.n;
    if (o.edges) spec.constraints.edge_count = as_int(*o.edges, "--edges");
    spec.constraints.triangle_free = o.triangle_free;
    spec.constraints.connected = o.connected;
    if (o.clique_at_most) spec.constraints.clique_at_most = as_int(*o.clique_at_most, "--clique-at-most");
    if (o.clique_exact) spec.constraints.clique_exact = as_int(*o.clique_exact, "--clique-exact");
    for (const std::string& f : o.forbid) spec.constraints.forbid.push_back(parse_graph_arg(f));
    if (!o.contains.empty()) spec.constraints.require.push_back(parse_graph_arg(o.contains));
    spec.objective = parse_objective(o.objective);
    spec.maximize = o.direction == "max";
    spec.threads = g.threads;
    spec.allow8 = o.allow8;
    SearchReport report = run_search(spec);
    std::string payload = g.format == "json"  ? search_json(report)
                          : g.format == "csv" ? search_csv(report)
                                              : search_text(report);
    return emit(payload, g, out, err);
}

// ---- verify / asymptotics ----

struct VerifyOpts {
    std::string suite;
    int nmax = 7;
    int trials = 500;
    std::string base;
};

int cmd_verify(const VerifyOpts& o, const Global& g, std::ostream& out, std::ostream& err) {
    SuiteReport report;
    std::string suite = o.suite;
    std::string base = o.base;
    if (starts_with(suite, "genkite:")) {
        base = suite.substr(8);
        suite = "genkite";
    }
    if (suite == "xu") report = verify_xu(o.nmax, g.threads);
    else if (suite == "gentur") report = verify_gentur(o.nmax, g.threads);
    else if (suite == "bipartite") report = verify_bipartite(o.nmax, g.threads);
    else if (suite == "kite") report = verify_kite(o.nmax, g.threads);
    else if (suite == "quasiclique") report = verify_quasiclique(o.nmax, g.threads);
    else if (suite == "identities") report = identities_suite(o.nmax, g.threads, o.trials, g.seed);
    else if (suite == "genkite") {
        if (base.empty())
            throw std::invalid_argument("genkite needs a base graph: verify genkite:K3 (or --base)");
        report = verify_genkite(parse_graph_arg(base), base, o.nmax, g.threads);
    } else {
        throw std::invalid_argument(
            "unknown suite '" + suite +
            "'; expected xu, gentur, bipartite, kite, genkite:<graph>, quasiclique, identities");
    }
    std::string payload = g.format == "json"  ? suite_json(report)
                          : g.format == "csv" ? suite_csv(report)
                                              : suite_text(report);
    if (int rc = emit(payload, g, out, err)) return rc;
    return report.pass() ? 0 : 1;
}

struct AsymptoticsOpts {
    int nmax = 6, kmax = 6;
    int path_k = 5;
    long long path_n = 200;
    int cycle_k = 3;
    long long cycle_n = 200;
    std::vector<long long> polarity_q = {3, 5, 7};
};

int cmd_asymptotics(const AsymptoticsOpts& o, const Global& g, std::ostream& out,
                    std::ostream& err) {
    SuiteReport report = asymptotic_report(o.nmax, o.kmax, {o.path_k, o.path_n},
                                           {o.cycle_k, o.cycle_n}, o.polarity_q, g.threads);
    std::string payload = g.format == "json"  ? suite_json(report)
                          : g.format == "csv" ? suite_csv(report)
                                              : suite_text(report);
    if (int rc = emit(payload, g, out, err)) return rc;
    return report.pass() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact toolkit for degree-based graph indices: evaluation, book-subgraph "
                 "decomposition weights, subgraph counting, exhaustive extremal search, and "
                 "verification suites"};
    app.name("bookdec");
    app.require_subcommand(1);

    Global g;
    app.add_option("--threads", g.threads, "worker threads (0 = all hardware threads)");
    app.add_option("--seed", g.seed, "seed for the randomized checks")->capture_default_str();
    app.add_option("--output", g.output, "write output to this file instead of stdout");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--json", g.json_path, "shorthand for --format json --output <path>");

    ConstructOpts co;
    auto* c_construct =
        app.add_subcommand("construct", "build a named graph and print its graph6 code");
    c_construct->add_option("name", co.name,
                            "turan, kite, genkite, quasiclique, book, doublestar, star, path, "
                            "cycle, complete, empty, bipartite, polarity; flags or name:params")
        ->required();
    c_construct->add_option("--n", co.n, "vertex count");
    c_construct->add_option("--k", co.k, "clique / part parameter");
    c_construct->add_option("--m", co.m, "edge count");
    c_construct->add_option("--t", co.t, "page count");
    c_construct->add_option("--p", co.p, "pendant count at u");
    c_construct->add_option("--q", co.q, "pendant count at v / prime order");
    c_construct->add_option("--a", co.a, "first part size");
    c_construct->add_option("--b", co.b, "second part size");
    c_construct->add_option("--base", co.base, "base graph for genkite");
    c_construct->add_flag("--summary", co.summary, "also print order, size, degree sequence");

    EvalOpts eo;
    auto* c_eval = app.add_subcommand("eval", "evaluate an index on a graph");
    c_eval->add_option("--index", eo.index, "index name, e.g. M2, chi_r:2, M_rs:2,1")->required();
    c_eval->add_option("--graph", eo.graph, "graph6, named graph, or - for stdin");
    c_eval->add_option("--graph-file", eo.graph_file, "file whose first line is the graph");

    WeightsOpts wo;
    auto* c_weights =
        app.add_subcommand("weights", "book-subgraph decomposition weights of an index");
    c_weights->add_option("--index", wo.index, "index name")->required();

    CountOpts cno;
    auto* c_count = app.add_subcommand("count", "count copies of a pattern in a graph");
    c_count->add_option("--pattern", cno.pattern, "pattern graph (named or graph6)")->required();
    c_count->add_option("--graph", cno.graph, "host graph6, named graph, or - for stdin");
    c_count->add_option("--graph-file", cno.graph_file, "file whose first line is the host graph");
    c_count->add_flag("--embeddings", cno.embeddings,
                      "also report embeddings and pattern automorphisms (json)");

    SearchOpts so;
    auto* c_search =
        app.add_subcommand("search", "exhaustive exact optimization over n-vertex graphs");
    c_search->add_option("--n", so.n, "vertex count")->required();
    c_search->add_option("--edges", so.edges, "exact edge count");
    c_search->add_flag("--triangle-free", so.triangle_free, "restrict to triangle-free graphs");
    c_search->add_flag("--connected", so.connected, "restrict to connected graphs");
    c_search->add_option("--clique-at-most", so.clique_at_most, "clique number at most k");
    c_search->add_option("--clique-exact", so.clique_exact, "clique number exactly k");
    c_search->add_option("--forbid", so.forbid, "forbidden subgraph (repeatable)");
    c_search->add_option("--contains", so.contains, "required subgraph");
    c_search->add_option("--objective", so.objective, "index:<name> or pattern:<graph>")
        ->required();
    c_search->add_option("--direction", so.direction, "max or min")
        ->check(CLI::IsMember({"max", "min"}))
        ->capture_default_str();
    c_search->add_flag("--allow8", so.allow8, "permit n = 8 (2^28 labeled graphs)");

    VerifyOpts vo;
    auto* c_verify = app.add_subcommand("verify", "run an extremal verification suite");
    c_verify->add_option("suite", vo.suite,
                         "xu, gentur, bipartite, kite, genkite:<graph>, quasiclique, identities")
        ->required();
    c_verify->add_option("--nmax", vo.nmax, "largest vertex count")->capture_default_str();
    c_verify->add_option("--trials", vo.trials, "random trials (identities suite)")
        ->capture_default_str();
    c_verify->add_option("--base", vo.base, "base graph for the genkite suite");

    AsymptoticsOpts ao;
    auto* c_asym = app.add_subcommand(
        "asymptotics", "leading-term ratio report for the large-n extremal statements");
    c_asym->add_option("--nmax", ao.nmax, "order for the clique-forbidden report");
    c_asym->add_option("--kmax", ao.kmax, "largest forbidden clique");
    c_asym->add_option("--path-k", ao.path_k, "forbid P_k");
    c_asym->add_option("--path-n", ao.path_n, "order for the P_k case");
    c_asym->add_option("--cycle-k", ao.cycle_k, "forbid C_{2k}");
    c_asym->add_option("--cycle-n", ao.cycle_n, "order for the C_{2k} case");
    c_asym->add_option("--polarity-q", ao.polarity_q, "prime orders for the polarity case")
        ->delimiter(',');

    for (CLI::App* sub : {c_construct, c_eval, c_weights, c_count, c_search, c_verify, c_asym})
        sub->fallthrough();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    if (!g.json_path.empty()) {
        g.format = "json";
        g.output = g.json_path;
    }

    try {
        if (c_construct->parsed()) return cmd_construct(co, g, out, err);
        if (c_eval->parsed()) return cmd_eval(eo, g, out, err);
        if (c_weights->parsed()) return cmd_weights(wo, g, out, err);
        if (c_count->parsed()) return cmd_count(cno, g, out, err);
        if (c_search->parsed()) return cmd_search(so, g, out, err);
        if (c_verify->parsed()) return cmd_verify(vo, g, out, err);
        if (c_asym->parsed()) return cmd_asymptotics(ao, g, out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace bookdec
