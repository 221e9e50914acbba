#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "bookdec/canonical.hpp"
#include "bookdec/constructions.hpp"
#include "bookdec/count.hpp"
#include "bookdec/enumerate.hpp"
#include "bookdec/graph.hpp"
#include "bookdec/identities.hpp"

using namespace bookdec;

namespace {

// Deterministic permutation from a counter RNG (no library distributions, so
// results are identical on every platform).
std::vector<int> scrambled_identity(int n, uint64_t& state) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; i--) {
        state = splitmix64(state);
        std::swap(perm[i], perm[static_cast<int>(state % static_cast<uint64_t>(i + 1))]);
    }
    return perm;
}

}  // namespace

TEST_CASE("basic graph operations") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    CHECK(g.n() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.degree_sequence() == std::vector<int>{2, 2, 1, 1});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.is_connected());
    CHECK(g.is_triangle_free());
    CHECK(!g.is_regular());

    g.remove_edge(1, 2);
    CHECK(g.edge_count() == 2);
    CHECK(!g.is_connected());

    CHECK(cycle_graph(5).is_regular());
    CHECK(!complete_graph(3).is_triangle_free());
}

TEST_CASE("relabeling carries edges") {
    Graph p = path_graph(3);
    Graph r = p.relabeled({2, 0, 1});  // 0->2, 1->0, 2->1
    CHECK(r.has_edge(2, 0));
    CHECK(r.has_edge(0, 1));
    CHECK(!r.has_edge(1, 2));
}

TEST_CASE("graph6 pins") {
    Graph k2(2);
    k2.add_edge(0, 1);
    CHECK(to_graph6(k2) == "A_");
    CHECK(to_graph6(Graph(2)) == "A?");
    CHECK(to_graph6(complete_graph(3)) == "Bw");
    CHECK(from_graph6("A_") == k2);
    CHECK(from_graph6("A?") == Graph(2));
    CHECK(from_graph6("Bw") == complete_graph(3));
    CHECK(k2.to_graph6() == "A_");
    CHECK_THROWS(from_graph6(""));
    CHECK_THROWS(from_graph6("A"));   // truncated edge bits
    CHECK_THROWS(from_graph6("B*")); // '*' < 63 is outside the alphabet
}

TEST_CASE("graph6 round trip on every iso class up to n=6") {
    for (int n = 1; n <= 6; n++)
        for (const Graph& g : all_iso_classes(n)) {
            Graph back = from_graph6(to_graph6(g));
            CHECK(back == g);
        }
}

TEST_CASE("canonical classes agree with brute-force permutation classes") {
    // Oracle: the lexicographically largest graph6 over all n! relabelings is
    // a canonical invariant computed without the refinement machinery.
    for (int n = 1; n <= 5; n++) {
        std::map<std::string, std::string> brute_to_code, code_to_brute;
        Constraints none;
        for_each_labeled(n, none, [&](const Graph& g) {
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::string brute;
            do {
                brute = std::max(brute, to_graph6(g.relabeled(perm)));
            } while (std::next_permutation(perm.begin(), perm.end()));
            std::string code = canonical_code(g);

            auto [itb, insb] = brute_to_code.emplace(brute, code);
            CHECK(itb->second == code);
            auto [itc, insc] = code_to_brute.emplace(code, brute);
            CHECK(itc->second == brute);
        });
        CHECK(brute_to_code.size() == code_to_brute.size());
    }
}

TEST_CASE("canonical code is invariant under 100 relabelings of 100 random graphs") {
    uint64_t state = 99;
    for (int trial = 0; trial < 100; trial++) {
        int n = 5 + trial % 8;  // 5..12
        Graph g = random_graph(n, 42, static_cast<uint64_t>(trial));
        std::string code = canonical_code(g);
        for (int rep = 0; rep < 100; rep++) {
            Graph h = g.relabeled(scrambled_identity(n, state));
            REQUIRE(canonical_code(h) == code);
        }
    }
}

TEST_CASE("canonical form has the canonical code and stays isomorphic") {
    for (const Graph& g : all_iso_classes(5)) {
        CanonicalResult r = canonicalize(g);
        CHECK(r.form == g.relabeled(r.perm));
        CHECK(canonical_code(r.form) == r.code);
        CHECK(is_isomorphic(r.form, g));
    }
    CHECK(is_isomorphic(cycle_graph(4), complete_bipartite(2, 2)));
    CHECK(!is_isomorphic(cycle_graph(4), path_graph(4)));
}

TEST_CASE("enumeration counts match the published sequence") {
    CHECK(all_iso_classes(1).size() == 1);
    CHECK(all_iso_classes(2).size() == 2);
    CHECK(all_iso_classes(3).size() == 4);
    CHECK(all_iso_classes(4).size() == 11);
    CHECK(all_iso_classes(5).size() == 34);
    CHECK(all_iso_classes(6).size() == 156);
    CHECK(all_iso_classes(7).size() == 1044);

    Constraints conn;
    conn.connected = true;
    CHECK(iso_classes(7, conn).size() == 853);
}

TEST_CASE("labeled enumeration yields 2^C(n,2) graphs") {
    Constraints none;
    for (int n = 1; n <= 5; n++) {
        long long count = 0;
        for_each_labeled(n, none, [&](const Graph&) { count++; });
        CHECK(count == 1LL << (n * (n - 1) / 2));
    }
}

TEST_CASE("iso classes come back sorted and identical for every thread count") {
    const auto& ref = all_iso_classes(6);
    std::vector<std::string> codes;
    for (const Graph& g : ref) codes.push_back(canonical_code(g));
    CHECK(std::is_sorted(codes.begin(), codes.end()));

    Constraints none;
    CHECK(iso_classes(6, none, 1) == ref);
    CHECK(iso_classes(6, none, 4) == ref);
    CHECK(iso_classes(6, none, 13) == ref);
}

TEST_CASE("constraint filters") {
    Constraints c;
    c.triangle_free = true;
    for (const Graph& g : iso_classes(5, c)) CHECK(g.is_triangle_free());

    Constraints ce;
    ce.edge_count = 4;
    for (const Graph& g : iso_classes(5, ce)) CHECK(g.edge_count() == 4);

    Constraints cf;
    cf.forbid.push_back(path_graph(3));  // no P_3: disjoint edges only
    auto matchings = iso_classes(4, cf);
    for (const Graph& g : matchings) CHECK(count_subgraphs(path_graph(3), g) == 0);
    CHECK(matchings.size() == 3);  // empty, one edge, two disjoint edges

    Constraints cr;
    cr.require.push_back(complete_graph(3));
    for (const Graph& g : iso_classes(5, cr)) CHECK(contains_subgraph(complete_graph(3), g));

    CHECK_THROWS_AS(check_enumeration_size(8, false), std::invalid_argument);
    CHECK_NOTHROW(check_enumeration_size(8, true));
    CHECK_THROWS_AS(check_enumeration_size(9, true), std::invalid_argument);
}

TEST_CASE("embedding and subgraph counting pins") {
    CHECK(count_embeddings(complete_graph(2), complete_graph(3)) == 6);
    CHECK(count_subgraphs(complete_graph(2), complete_graph(3)) == 3);
    CHECK(count_subgraphs(complete_graph(3), complete_graph(5)) == 10);
    CHECK(count_subgraphs(cycle_graph(4), complete_graph(4)) == 3);
    CHECK(count_subgraphs(cycle_graph(5), petersen_graph()) == 12);
    CHECK(count_subgraphs(cycle_graph(4), petersen_graph()) == 0);

    // copies of the double star S_{1,2} and of P_4 inside the bull
    CHECK(count_subgraphs(double_star(1, 2), bull_graph()) == 2);
    CHECK(count_subgraphs(path_graph(4), bull_graph()) == 5);
    CHECK(count_subgraphs(complete_graph(3), bull_graph()) == 1);
    CHECK(count_subgraphs(bull_graph(), bull_graph()) == 1);
    CHECK(count_subgraphs(h5_graph(), bull_graph()) == 0);

    // edgeless patterns count vertex subsets
    CHECK(count_subgraphs(Graph(1), petersen_graph()) == 10);
    CHECK(count_subgraphs(Graph(2), complete_graph(4)) == 6);

    for (const Graph& g : all_iso_classes(5)) {
        CHECK(count_subgraphs(complete_graph(2), g) == g.edge_count());
        CHECK(count_subgraphs(Graph(1), g) == g.n());
    }
}

TEST_CASE("automorphism counts") {
    CHECK(automorphism_count(complete_graph(3)) == 6);
    CHECK(automorphism_count(complete_graph(4)) == 24);
    CHECK(automorphism_count(cycle_graph(5)) == 10);
    CHECK(automorphism_count(path_graph(4)) == 2);
    CHECK(automorphism_count(star_graph(4)) == 6);
    CHECK(automorphism_count(bull_graph()) == 2);
    CHECK(automorphism_count(complete_bipartite(3, 3)) == 72);
    CHECK(automorphism_count(petersen_graph()) == 120);
    CHECK(automorphism_count(Graph(4)) == 24);
}

TEST_CASE("embeddings = copies times automorphisms") {
    std::vector<Graph> patterns = {complete_graph(3), path_graph(4), star_graph(4),
                                   cycle_graph(4), bull_graph()};
    for (const Graph& h : patterns)
        for (const Graph& g : all_iso_classes(6))
            CHECK(count_embeddings(h, g) == count_subgraphs(h, g) * automorphism_count(h));
}

TEST_CASE("clique number cross-checked against complete-subgraph counts") {
    for (int n = 1; n <= 6; n++)
        for (const Graph& g : all_iso_classes(n)) {
            int w = clique_number(g);
            CHECK(count_subgraphs(complete_graph(w), g) >= 1);
            if (w < n) CHECK(count_subgraphs(complete_graph(w + 1), g) == 0);
        }
    CHECK(clique_number(turan_graph(7, 3)) == 3);
    CHECK(clique_number(petersen_graph()) == 2);
    CHECK(clique_number(Graph(3)) == 1);
}

TEST_CASE("vertex transitivity") {
    CHECK(is_vertex_transitive(cycle_graph(6)));
    CHECK(is_vertex_transitive(complete_graph(4)));
    CHECK(is_vertex_transitive(Graph(5)));
    CHECK(is_vertex_transitive(petersen_graph()));
    CHECK(is_vertex_transitive(complete_bipartite(3, 3)));
    CHECK(!is_vertex_transitive(complete_bipartite(2, 3)));
    CHECK(!is_vertex_transitive(bull_graph()));
    CHECK(!is_vertex_transitive(path_graph(3)));
    CHECK(!is_vertex_transitive(star_graph(4)));
}

TEST_CASE("splitmix64 matches the reference outputs") {
    CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
    CHECK(splitmix64(1) == 0x910a2dec89025cc1ULL);
    CHECK(splitmix64(0xdeadbeefULL) == 0x4adfb90f68c9eb9bULL);
}

TEST_CASE("random_graph is a deterministic function of (n, seed, trial)") {
    Graph a = random_graph(10, 7, 3);
    Graph b = random_graph(10, 7, 3);
    CHECK(a == b);
    CHECK(a.n() == 10);
    // different trials diverge (these particular ones do; the RNG is fixed)
    CHECK(!(random_graph(10, 7, 4) == a));
    CHECK(!(random_graph(10, 8, 3) == a));
}
