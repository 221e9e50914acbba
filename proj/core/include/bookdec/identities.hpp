#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bookdec/bookdecomp.hpp"
#include "bookdec/enumerate.hpp"
#include "bookdec/graph.hpp"
#include "bookdec/indices.hpp"
#include "bookdec/rational.hpp"
#include "bookdec/suites.hpp"

namespace bookdec {

// Counter-based RNG: stateless, reproducible across platforms and thread
// counts. random_graph(n, seed, trial) keeps edge {i,j} iff bit 0 of
// splitmix64(splitmix64(splitmix64(seed) + trial) + pair_slot(i,j)) is set.
uint64_t splitmix64(uint64_t x);
Graph random_graph(int n, uint64_t seed, uint64_t trial);

// Coefficient c0 + c1 n + c2 C(n-3,2); enough for every identity in scope.
// C(n-3,2) is the combinatorial binomial (0 below n=5), so identities using
// the quadratic term should set nmin accordingly.
struct NPoly {
    Rat c0, c1, c2;
    Rat eval(long long n) const;
    std::string text() const;
};

// coef(n) times a subgraph count, an index value, or 1.
struct CountTerm {
    NPoly coef;
    std::optional<Graph> pattern;
    std::string pattern_name;
    std::optional<IndexDef> index;

    Rat eval(const Graph& g) const;
    std::string text() const;
};

struct CountExpr {
    std::vector<CountTerm> terms;
    Rat eval(const Graph& g) const;
    std::string text() const;
};

enum class Rel { eq, le };

struct CountIdentity {
    std::string name;
    CountExpr lhs, rhs;
    Rel rel = Rel::eq;
    Constraints population;
    int nmin = 1;
    std::string note;
};

struct IdentityViolation {
    std::string graph6;  // canonical
    Rat lhs, rhs;
};

struct IdentityReport {
    std::string name;
    Rel rel = Rel::eq;
    long long checked = 0;
    std::vector<IdentityViolation> violations;  // population order: n, then code
    bool holds() const { return violations.empty(); }
};

// Evaluates both sides exactly on every isomorphism class in the constrained
// population with nmin <= n <= nmax.
IdentityReport check_identity(const CountIdentity& ident, int nmax, int threads = 0);

// Fixtures.
CountIdentity identity_handshake();         // degree sum = 2 |E|
CountIdentity identity_mantel();            // |E| <= n^2/4, triangle-free, n >= 3
CountIdentity identity_b111_bound();        // bull count <= 2 C(n-3,2) triangles + H5 count
CountIdentity identity_s12_claimed();       // 2 S_{1,2} = (n-4) K_3 + bull   (fails on the bull)
CountIdentity identity_s12_path_variant();  // 2 S_{1,2} = (n-4) P_4 + bull   (fails on the bull)

// Exact decomposition-vs-direct-evaluation comparison for the whole registry.
struct DecompositionCheck {
    long long trials = 0;
    uint64_t seed = 0;
    long long graphs = 0;
    long long comparisons = 0;
    std::vector<std::string> discrepancies;  // "index=... graph6=... direct=... decomposed=..."
};
// trials random graphs, n = 7 + (i mod 6).
DecompositionCheck check_decomposition_random(int trials, uint64_t seed, int threads = 0);
// every isomorphism class with n <= nmax.
DecompositionCheck check_decomposition_exhaustive(int nmax, int threads = 0);

// Adds 1 to each class weight in turn; returns the rows whose perturbation is
// NOT exposed by any graph with n <= nmax (expected empty).
std::vector<std::string> undetected_weight_mutations(const WeightTable& table, int nmax = 5);

// Closed-form tuple counting against the subset-enumeration oracle on random
// graphs, n = 4 + (i mod 9), every ordered edge, all t,p,q <= tpq_max.
struct TupleCheck {
    long long trials = 0;
    uint64_t seed = 0;
    int tpq_max = 3;
    long long graphs = 0;
    long long tuples_checked = 0;
    std::vector<std::string> mismatches;
};
TupleCheck check_tuple_counts(int trials = 200, uint64_t seed = 1, int tpq_max = 3);

// The full identity suite: fixtures, proof inequalities, the printed identity
// with its variant reading, decomposition checks, tuple cross-check, and the
// weight-mutation self-test.
SuiteReport identities_suite(int nmax, int threads = 0, int trials = 500, uint64_t seed = 1);

}  // namespace bookdec
