#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <map>
#include <stdexcept>
#include <vector>

#include "bookdec/bookdecomp.hpp"
#include "bookdec/canonical.hpp"
#include "bookdec/constructions.hpp"
#include "bookdec/count.hpp"
#include "bookdec/enumerate.hpp"
#include "bookdec/indices.hpp"

using namespace bookdec;

TEST_CASE("surjection counts") {
    CHECK(surjections(0, 0) == 1);
    CHECK(surjections(1, 0) == 0);
    CHECK(surjections(2, 3) == 0);
    CHECK(surjections(3, 2) == 6);
    CHECK(surjections(3, 3) == 6);
    CHECK(surjections(4, 2) == 14);
    CHECK(surjections(4, 3) == 36);

    // sum_k C(m,k) surj(a,k) = m^a: classify functions by image size
    for (int a = 0; a <= 5; a++)
        for (int m = 0; m <= 5; m++) {
            Int total = 0;
            for (int k = 0; k <= m; k++) total += binomial(m, k) * surjections(a, k);
            CHECK(total == int_pow(m, a));
        }
}

TEST_CASE("phi pins") {
    CHECK(phi(1, 0, 0) == 1);
    CHECK(phi(1, 0, 1) == 1);
    CHECK(phi(2, 0, 1) == 3);
    CHECK(phi(0, 0, 0) == 1);
    CHECK(phi(0, 1, 0) == 0);
    CHECK(phi(3, 1, 3) == 0);  // t+p > a
}

TEST_CASE("spanning tuple multiplicities of small patterns") {
    auto mult = [](int t, int p, int q) {
        return spanning_tuple_multiplicities(BookPattern::canonical(t, p, q));
    };
    using M = std::map<TupleKey, Int>;
    CHECK(mult(0, 0, 0) == M{{{0, 0, 0}, 2}});                          // K_2
    CHECK(mult(0, 0, 1) == M{{{0, 1, 0}, 2}, {{0, 0, 1}, 2}});          // P_3
    CHECK(mult(0, 1, 1) == M{{{0, 1, 1}, 2}});                          // P_4
    CHECK(mult(1, 0, 0) == M{{{1, 0, 0}, 6}});                          // K_3
    CHECK(mult(1, 1, 1) == M{{{1, 1, 1}, 2}});                          // bull
    CHECK(mult(0, 0, 2) == M{{{0, 2, 0}, 3}, {{0, 0, 2}, 3}});          // K_{1,3}
    CHECK(mult(2, 0, 0) == M{{{2, 0, 0}, 2}});                          // diamond
}

TEST_CASE("weight table for M2") {
    WeightTable t = book_weights(make_index("M2"));
    CHECK(t.index_name == "M2");
    CHECK(t.max_deg == 1);

    REQUIRE(t.ordered_weights.size() == 5);
    for (const auto& [key, w] : t.ordered_weights) CHECK(w == Rat(1, 2));

    REQUIRE(t.rows.size() == 4);
    std::map<BookPattern, Rat> expect = {
        {BookPattern::canonical(0, 0, 0), 1},
        {BookPattern::canonical(0, 0, 1), 2},
        {BookPattern::canonical(0, 1, 1), 1},
        {BookPattern::canonical(1, 0, 0), 3},
    };
    CHECK(t.class_weights == expect);
    for (const auto& row : t.rows) CHECK(row.weight == expect.at(row.pattern));
    // sorted by (vertex count, t, p, q)
    CHECK(t.rows[0].pattern == BookPattern::canonical(0, 0, 0));
    CHECK(t.rows[1].pattern == BookPattern::canonical(0, 0, 1));
    CHECK(t.rows[2].pattern == BookPattern::canonical(1, 0, 0));
    CHECK(t.rows[3].pattern == BookPattern::canonical(0, 1, 1));
}

TEST_CASE("weight table for M1 keeps zero rows out of class_weights") {
    WeightTable t = book_weights(make_index("M1"));
    std::map<BookPattern, Rat> expect = {
        {BookPattern::canonical(0, 0, 0), 2},
        {BookPattern::canonical(0, 0, 1), 2},
    };
    CHECK(t.class_weights == expect);
    CHECK(t.rows.size() == 4);  // P_4 and K_3 rows present with weight 0
    CHECK(t.weight_of(BookPattern::canonical(0, 1, 1)) == 0);
    CHECK(t.weight_of(BookPattern::canonical(1, 0, 0)) == 0);
}

TEST_CASE("weight table for RM2") {
    WeightTable t = book_weights(make_index("RM2"));
    std::map<BookPattern, Rat> expect = {
        {BookPattern::canonical(0, 1, 1), 1},
        {BookPattern::canonical(1, 0, 0), 3},
    };
    CHECK(t.class_weights == expect);
    CHECK(t.weight_of(BookPattern::canonical(0, 0, 0)) == 0);
    CHECK(t.weight_of(BookPattern::canonical(0, 0, 1)) == 0);
}

TEST_CASE("weight table for F") {
    WeightTable t = book_weights(make_index("F"));
    std::map<BookPattern, Rat> expect = {
        {BookPattern::canonical(0, 0, 0), 2},
        {BookPattern::canonical(0, 0, 1), 6},
        {BookPattern::canonical(0, 0, 2), 6},
    };
    CHECK(t.class_weights == expect);
    CHECK(t.ordered_weight_of({0, 0, 0}) == 1);
    CHECK(t.ordered_weight_of({0, 1, 0}) == Rat(3, 2));
    CHECK(t.ordered_weight_of({0, 0, 1}) == Rat(3, 2));
    CHECK(t.ordered_weight_of({0, 2, 0}) == 1);
    CHECK(t.ordered_weight_of({0, 0, 2}) == 1);
    CHECK(t.ordered_weight_of({1, 0, 0}) == 0);
    CHECK(t.ordered_weight_of({0, 1, 1}) == 0);
}

TEST_CASE("weight table for B1") {
    WeightTable t = book_weights(make_index("B1"));
    std::map<BookPattern, Rat> expect = {
        {BookPattern::canonical(0, 0, 0), 2},
        {BookPattern::canonical(0, 0, 1), 6},
    };
    CHECK(t.class_weights == expect);
}

TEST_CASE("every registry table is well-formed") {
    for (const IndexDef& def : registry_all()) {
        WeightTable t = book_weights(def);
        int A = t.max_deg;
        CHECK(A == def.edge_poly.max_degree());

        // ordered weights: the full box, both orders
        int expect_ordered = 0;
        for (int tt = 0; tt <= A; tt++)
            expect_ordered += (A - tt + 1) * (A - tt + 1);
        CHECK((int)t.ordered_weights.size() == expect_ordered);
        for (const auto& [key, w] : t.ordered_weights) {
            CHECK(key[0] + key[1] <= A);
            CHECK(key[0] + key[2] <= A);
            CHECK(t.ordered_weight_of({key[0], key[2], key[1]}) == w);  // symmetric
        }

        // rows: every canonical pattern in the box exactly once, sorted,
        // weights non-negative; class_weights = the strictly positive ones
        std::map<BookPattern, Rat> from_rows;
        for (size_t i = 0; i < t.rows.size(); i++) {
            const WeightRow& row = t.rows[i];
            CHECK(row.pattern.p <= row.pattern.q);
            CHECK(row.pattern.t + row.pattern.p <= A);
            CHECK(row.pattern.t + row.pattern.q <= A);
            CHECK(row.weight >= 0);
            CHECK(row.graph6 == canonical_form(book_graph(row.pattern)).to_graph6());
            CHECK(from_rows.emplace(row.pattern, row.weight).second);
            if (i > 0) {
                const BookPattern& a = t.rows[i - 1].pattern;
                const BookPattern& b = row.pattern;
                CHECK(std::tuple(a.vertex_count(), a.t, a.p, a.q) <
                      std::tuple(b.vertex_count(), b.t, b.p, b.q));
            }
        }
        int expect_rows = 0;
        for (int tt = 0; tt <= A; tt++)
            for (int p = 0; tt + p <= A; p++)
                for (int q = p; tt + q <= A; q++) expect_rows++;
        CHECK((int)t.rows.size() == expect_rows);
        for (const auto& [pat, w] : t.class_weights) {
            CHECK(w > 0);
            CHECK(from_rows.at(pat) == w);
        }
        for (const auto& [pat, w] : from_rows)
            if (w != 0) CHECK(t.class_weights.at(pat) == w);
    }
}

TEST_CASE("book_weights rejects the vertex-count index") {
    CHECK_THROWS_AS(book_weights(make_index("R0_r", {0})), std::invalid_argument);
}

TEST_CASE("tuple count pins") {
    Graph k3 = complete_graph(3);
    CHECK(tuple_count_closed(k3, 0, 1, 1, 0, 0) == 1);
    Graph k4 = complete_graph(4);
    CHECK(tuple_count_closed(k4, 0, 1, 1, 1, 0) == 2);
    Graph p4 = path_graph(4);
    CHECK(tuple_count_closed(p4, 1, 2, 0, 1, 1) == 1);  // middle edge
    CHECK(tuple_count_closed(p4, 1, 2, 1, 0, 0) == 0);
    CHECK_THROWS_AS(tuple_count_closed(p4, 0, 2, 0, 0, 0), std::invalid_argument);  // not an edge
}

TEST_CASE("closed tuple count equals enumeration on every class up to n=6") {
    for (int n = 2; n <= 6; n++)
        for (const Graph& g : all_iso_classes(n))
            for (auto [u, v] : g.edges())
                for (int t = 0; t <= 3; t++)
                    for (int p = 0; p <= 3; p++)
                        for (int q = 0; q <= 3; q++) {
                            REQUIRE(tuple_count_closed(g, u, v, t, p, q) ==
                                    tuple_count_enum(g, u, v, t, p, q));
                            REQUIRE(tuple_count_closed(g, v, u, t, p, q) ==
                                    tuple_count_enum(g, v, u, t, p, q));
                        }
}

TEST_CASE("per-edge monomial identity d_u^a d_v^b via phi-weighted tuple counts") {
    auto check_graph = [](const Graph& g) {
        for (auto [u, v] : g.edges())
            for (int a = 0; a <= 4; a++)
                for (int b = 0; b <= 4; b++) {
                    Int rhs = 0;
                    for (int t = 0; t <= std::min(a, b); t++)
                        for (int p = 0; t + p <= a; p++)
                            for (int q = 0; t + q <= b; q++)
                                rhs += phi(a, t, p) * phi(b, t, q) *
                                       tuple_count_closed(g, u, v, t, p, q);
                    REQUIRE(rhs == int_pow(g.degree(u), a) * int_pow(g.degree(v), b));
                }
    };
    for (int n = 2; n <= 5; n++)
        for (const Graph& g : all_iso_classes(n)) check_graph(g);
    check_graph(turan_graph(6, 3));
    check_graph(cycle_graph(6));
    check_graph(complete_graph(6));
}

TEST_CASE("decomposition evaluates indices through book counts") {
    WeightTable m2 = book_weights(make_index("M2"));
    CHECK(decompose_eval(m2, cycle_graph(5)) == 20);
    CHECK(decompose_eval(m2, complete_graph(3)) == 12);
    CHECK(decompose_eval(m2, petersen_graph()) == 135);
    WeightTable hf = book_weights(make_index("HF"));
    CHECK(decompose_eval(hf, petersen_graph()) == eval_index(make_index("HF"), petersen_graph()));
}

TEST_CASE("decompose_from_counts requires every weighted pattern") {
    WeightTable m2 = book_weights(make_index("M2"));
    std::map<BookPattern, Int> counts;
    counts[BookPattern::canonical(0, 0, 0)] = 5;
    CHECK_THROWS_AS(decompose_from_counts(m2, counts), std::invalid_argument);
}

TEST_CASE("weight table JSON") {
    WeightTable t = book_weights(make_index("M2"));
    auto doc = nlohmann::json::parse(weight_table_json(t));
    CHECK(doc["index"] == "M2");
    CHECK(doc["max_degree"] == 1);
    const auto& rows = doc["class_weights"];
    REQUIRE(rows.size() == 4);
    std::vector<std::string> weights;
    for (const auto& r : rows) {
        BookPattern pat{r["pattern"]["t"].get<int>(), r["pattern"]["p"].get<int>(),
                        r["pattern"]["q"].get<int>()};
        CHECK(r["graph6"].get<std::string>() == canonical_form(book_graph(pat)).to_graph6());
        weights.push_back(r["weight"].get<std::string>());
    }
    CHECK(weights == std::vector<std::string>{"1", "2", "3", "1"});
}

TEST_CASE("weight table CSV") {
    std::string csv = weight_table_csv(book_weights(make_index("M2")));
    CHECK(csv.substr(0, csv.find('\n')) == "index,t,p,q,label,graph6,weight");
    CHECK(csv.find("M2,0,0,0,B_0(0,0),A_,1\n") != std::string::npos);
    CHECK(csv.find(",3\n") != std::string::npos);  // K_3 row weight
}
