#pragma once

#include <map>
#include <string>
#include <vector>

#include "bookdec/constructions.hpp"
#include "bookdec/graph.hpp"
#include "bookdec/rational.hpp"

namespace bookdec {

// One checked statement inside a verification suite. Non-assertive rows are
// informational (reported, never failing the suite).
struct ViolationRow {
    std::string graph6;
    std::string lhs, rhs;  // exact values as strings
};

struct CheckRow {
    std::string name;
    bool assertive = true;
    bool pass = true;
    std::string expected, actual;  // value echo where meaningful
    std::string detail;
    std::vector<std::string> witnesses;   // canonical graph6
    std::vector<ViolationRow> violations;
    long long checked = 0;  // population size examined
};

struct SuiteReport {
    std::string suite;
    std::map<std::string, std::string> params;
    std::vector<CheckRow> rows;
    double seconds = 0.0;  // wall time; never serialized (outputs stay byte-deterministic)

    bool pass() const;
    long long failures() const;
};

std::string suite_json(const SuiteReport& report, int indent = 2, size_t max_violations = 64);
std::string suite_csv(const SuiteReport& report);
std::string suite_text(const SuiteReport& report);

// Maximization of M2 over K_{k+1}-free graphs, 2 <= k < n <= nmax: the Turan
// graph T(n,k) attains the maximum. At k=3, repeated for every registry index
// whose edge polynomial has per-variable degree <= 2 and no x^2 y^2 term.
SuiteReport verify_xu(int nmax, int threads = 0);

// Maximization of the bull B_1(1,1) count, the S_{1,2} count, and every
// small-degree index (same scope as above) over K_4-free graphs, 5 <= n:
// T(n,3) attains all maxima.
SuiteReport verify_gentur(int nmax, int threads = 0);

// For every grid-monotone registry index: the triangle-free maximum is
// attained by a complete bipartite K_{m,n-m}; the optimal m is reported.
SuiteReport verify_bipartite(int nmax, int threads = 0);

// Minimization over connected graphs with clique number exactly k: the kite
// Ki(n,k) minimizes every book count with t,p,q <= 3, except pattern (0,1,1)
// at k=2 where the star attains 0. Corollary rows: every registry index is
// minimized by the kite for k >= 3.
SuiteReport verify_kite(int nmax, int threads = 0);

// Same minimization over connected graphs containing a fixed vertex-transitive
// H; expected witness is H with a pendant path. Throws std::invalid_argument
// for non-transitive H (the extremal family is attachment-dependent there).
SuiteReport verify_genkite(const Graph& h, const std::string& h_label, int nmax,
                           int threads = 0);

// Maximization of M2 over n-vertex m-edge graphs for every feasible m: the
// quasi-clique attains the maximum.
SuiteReport verify_quasiclique(int nmax, int threads = 0);

// Closed forms used by the asymptotic report (graphs too large to build).
Rat m2_complete_bipartite(long long a, long long b);  // (ab)^2

struct RatioRow {
    std::string construction;
    long long n = 0;
    Rat value;    // exact M2 of the construction
    Rat leading;  // the comparison term
    Rat ratio;    // value / leading
    double ratio_float = 0.0;
};

// Forbidden P_k: K_{a,n-a} with a = floor((k-1)/2) against a^2 n^2.
RatioRow asymptotic_path_case(int k, long long n);
// Forbidden C_{2k}: K_{k-1,n-k+1} against (k-1)^2 n^2.
RatioRow asymptotic_cycle_case(int k, long long n);

struct PolarityRatio {
    PolarityInfo info;
    double ratio = 0.0;  // M2 / (n^{5/2}/2)
    bool in_range = false;  // 0 < ratio < 2, decided exactly via m2^2 < n^5
};
PolarityRatio asymptotic_polarity_case(long long q);

// Bundle: Turan-maximizer report rows for forbidden K_k, k <= kmax (never
// asserted), the two bipartite ratio rows, and the polarity rows (asserted
// within (0,2)).
SuiteReport asymptotic_report(int nmax, int kmax, std::pair<int, long long> path_case,
                              std::pair<int, long long> cycle_case,
                              const std::vector<long long>& polarity_qs, int threads = 0);

}  // namespace bookdec
