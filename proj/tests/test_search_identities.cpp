#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "bookdec/canonical.hpp"
#include "bookdec/constructions.hpp"
#include "bookdec/identities.hpp"
#include "bookdec/search.hpp"

using namespace bookdec;

namespace {

SearchSpec spec_for(int n, Objective obj, bool maximize) {
    SearchSpec s;
    s.n = n;
    s.objective = std::move(obj);
    s.maximize = maximize;
    return s;
}

const IdentityViolation* find_violation(const IdentityReport& rep, const std::string& graph6) {
    for (const auto& v : rep.violations)
        if (v.graph6 == graph6) return &v;
    return nullptr;
}

}  // namespace

TEST_CASE("max M2 over triangle-free 5-vertex graphs") {
    SearchSpec s = spec_for(5, Objective::for_index(make_index("M2")), true);
    s.constraints.triangle_free = true;
    SearchReport r = run_search(s);
    CHECK(!r.empty);
    CHECK(r.optimum == 36);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0] == canonical_form(complete_bipartite(2, 3)).to_graph6());
    CHECK(r.matched_construction == "turan:5,2");
    CHECK(r.total_classes == 34);
}

TEST_CASE("min M2 over connected 5-vertex graphs with clique number 3") {
    SearchSpec s = spec_for(5, Objective::for_index(make_index("M2")), false);
    s.constraints.connected = true;
    s.constraints.clique_exact = 3;
    SearchReport r = run_search(s);
    CHECK(!r.empty);
    CHECK(r.optimum == 24);
    CHECK(r.matched_construction == "kite:5,3");
}

TEST_CASE("max triangle count over K4-free 6-vertex graphs") {
    SearchSpec s = spec_for(6, Objective::for_pattern(BookPattern::canonical(1, 0, 0)), true);
    s.constraints.forbid.push_back(complete_graph(4));
    SearchReport r = run_search(s);
    CHECK(r.optimum == 8);
    CHECK(r.matched_construction == "turan:6,3");
    CHECK(r.spec.objective.label == "count:B_1(0,0)");
}

TEST_CASE("contradictory constraints give an empty report") {
    SearchSpec s = spec_for(5, Objective::for_index(make_index("M1")), true);
    s.constraints.forbid.push_back(complete_graph(2));
    s.constraints.edge_count = 3;
    SearchReport r = run_search(s);
    CHECK(r.empty);
    CHECK(r.enumerated_count == 0);
    CHECK(r.witnesses.empty());
    CHECK(search_json(r).find("\"empty\"") != std::string::npos);
}

TEST_CASE("max M1 over all 3-vertex graphs") {
    SearchReport r = run_search(spec_for(3, Objective::for_index(make_index("M1")), true));
    CHECK(r.optimum == 12);
    CHECK(r.witnesses == std::vector<std::string>{"Bw"});
    CHECK(r.matched_construction == "complete:3");
    CHECK(r.total_classes == 4);
    CHECK(r.enumerated_count == 4);
}

TEST_CASE("forbidden patterns act up to isomorphism") {
    SearchSpec a = spec_for(6, Objective::for_index(make_index("M2")), true);
    a.constraints.forbid.push_back(kite_graph(4, 3));
    SearchSpec b = a;
    b.constraints.forbid[0] = kite_graph(4, 3).relabeled({3, 1, 0, 2});
    SearchReport ra = run_search(a), rb = run_search(b);
    CHECK(ra.optimum == rb.optimum);
    CHECK(ra.witnesses == rb.witnesses);
}

TEST_CASE("search reports are identical for every thread count") {
    SearchSpec s = spec_for(6, Objective::for_index(make_index("RM2")), true);
    s.constraints.clique_at_most = 3;
    s.threads = 1;
    std::string one = search_json(run_search(s));
    s.threads = 4;
    std::string four = search_json(run_search(s));
    CHECK(one == four);
}

TEST_CASE("order-8 searches need the explicit opt-in") {
    SearchSpec s = spec_for(8, Objective::for_index(make_index("M1")), true);
    CHECK_THROWS_AS(run_search(s), std::invalid_argument);
}

TEST_CASE("match_construction pins") {
    CHECK(match_construction(path_graph(3)) == "star:3");
    CHECK(match_construction(path_graph(4)) == "path:4");
    CHECK(match_construction(cycle_graph(5)) == "cycle:5");
    CHECK(match_construction(complete_graph(4)) == "complete:4");
    CHECK(match_construction(bull_graph()) == "book:1,1,1");
    CHECK(match_construction(double_star(2, 2)) == "doublestar:2,2");
    CHECK(match_construction(turan_graph(6, 3)) == "turan:6,3");
    CHECK(match_construction(kite_graph(6, 4)) == "kite:6,4");
    CHECK(match_construction(polarity_graph(3)) == "polarity:3");
    CHECK(match_construction(petersen_graph()) == std::nullopt);
}

TEST_CASE("degree-sum identity holds") {
    IdentityReport rep = check_identity(identity_handshake(), 5);
    CHECK(rep.holds());
    CHECK(rep.checked == 52);
}

TEST_CASE("triangle-free edge bound holds") {
    IdentityReport rep = check_identity(identity_mantel(), 6);
    CHECK(rep.holds());
    CHECK(rep.rel == Rel::le);
}

TEST_CASE("bull-count inequality holds on K4-free graphs") {
    IdentityReport rep = check_identity(identity_b111_bound(), 6);
    CHECK(rep.holds());
    CHECK(rep.checked > 0);
}

TEST_CASE("claimed double-star identity fails on the bull") {
    std::string bull6 = canonical_form(bull_graph()).to_graph6();

    IdentityReport rep = check_identity(identity_s12_claimed(), 5);
    CHECK(!rep.holds());
    const IdentityViolation* v = find_violation(rep, bull6);
    REQUIRE(v != nullptr);
    CHECK(v->lhs == 4);
    CHECK(v->rhs == 2);

    IdentityReport variant = check_identity(identity_s12_path_variant(), 5);
    CHECK(!variant.holds());
    const IdentityViolation* w = find_violation(variant, bull6);
    REQUIRE(w != nullptr);
    CHECK(w->lhs == 4);
    CHECK(w->rhs == 6);

    IdentityReport again = check_identity(identity_s12_claimed(), 5);
    REQUIRE(again.violations.size() == rep.violations.size());
    for (size_t i = 0; i < again.violations.size(); i++) {
        CHECK(again.violations[i].graph6 == rep.violations[i].graph6);
        CHECK(again.violations[i].lhs == rep.violations[i].lhs);
        CHECK(again.violations[i].rhs == rep.violations[i].rhs);
    }
}

TEST_CASE("decomposition matches direct evaluation exhaustively to n=5") {
    DecompositionCheck dc = check_decomposition_exhaustive(5);
    CHECK(dc.graphs == 52);
    CHECK(dc.comparisons == 52 * 32);
    CHECK(dc.discrepancies.empty());
}

TEST_CASE("random decomposition checks are clean and thread-independent") {
    DecompositionCheck one = check_decomposition_random(20, 1, 1);
    CHECK(one.graphs == 20);
    CHECK(one.comparisons == 20 * 32);
    CHECK(one.discrepancies.empty());
    DecompositionCheck four = check_decomposition_random(20, 1, 4);
    CHECK(four.graphs == one.graphs);
    CHECK(four.comparisons == one.comparisons);
    CHECK(four.discrepancies == one.discrepancies);
}

TEST_CASE("closed tuple counts match enumeration on random graphs") {
    TupleCheck tc = check_tuple_counts(40, 1, 3);
    CHECK(tc.graphs == 40);
    CHECK(tc.tuples_checked > 0);
    CHECK(tc.mismatches.empty());
}

TEST_CASE("weight mutations are always detected at small order") {
    CHECK(undetected_weight_mutations(book_weights(make_index("M2")), 5).empty());
    CHECK(undetected_weight_mutations(book_weights(make_index("RM2")), 5).empty());
}

TEST_CASE("identity suite passes") {
    SuiteReport rep = identities_suite(6, 2, 30, 1);
    CHECK(rep.rows.size() == 10);
    CHECK(rep.pass());
    for (const auto& row : rep.rows) CHECK(row.pass);
}

TEST_CASE("coefficient polynomial evaluation") {
    NPoly p{Rat(-3), Rat(7, 4), Rat(1, 2)};
    CHECK(p.eval(6) == 9);
    CHECK(p.eval(3) == Rat(9, 4));   // quadratic term vanishes below n=5
    CHECK(p.eval(0) == -3);
    CHECK(NPoly{Rat(0), Rat(0), Rat(1)}.eval(7) == 6);  // C(4,2)
}

TEST_CASE("deterministic random graphs for the identity machinery") {
    CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
    Graph a = random_graph(9, 1, 7), b = random_graph(9, 1, 7);
    CHECK(a.n() == 9);
    CHECK(to_graph6(a) == to_graph6(b));
    CHECK(to_graph6(random_graph(9, 1, 8)) != to_graph6(a));
}
