#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bookdec/rational.hpp"

namespace bookdec {

// Plain bivariate polynomial with rational coefficients, used as scaffolding
// to build the registry entries by algebra instead of hand expansion.
struct FullPoly {
    std::map<std::pair<int, int>, Rat> terms;  // (a,b) -> coefficient, no zeros

    static FullPoly constant(const Rat& c);
    static FullPoly x();
    static FullPoly y();

    FullPoly operator+(const FullPoly& o) const;
    FullPoly operator-(const FullPoly& o) const;
    FullPoly operator*(const FullPoly& o) const;
    FullPoly pow(int e) const;
};

// Symmetric bivariate polynomial f(x,y) = f(y,x). Stored as full-expansion
// coefficients keyed by (a,b) with a >= b; coeff(a,b) is the coefficient of
// x^a y^b in the expansion (so the diagonal is NOT halved: M_rr keeps 2x^ry^r).
class SymmetricPoly {
public:
    SymmetricPoly() = default;
    static SymmetricPoly from_full(const FullPoly& f);  // throws if asymmetric

    void add_coeff(int a, int b, const Rat& c);  // adds to c_{ab} (= c_{ba})
    Rat coeff(int a, int b) const;

    // (a,b,c) with a >= b, one entry per stored key.
    const std::map<std::pair<int, int>, Rat>& sym_terms() const { return c_; }
    // Both orders expanded: (a,b,c_{ab}) for every a,b with c_{ab} != 0.
    std::vector<std::tuple<int, int, Rat>> full_terms() const;

    Rat eval(const Rat& x, const Rat& y) const;  // 0^0 = 1
    int max_degree() const;                      // per-variable; 0 for the zero poly
    bool is_zero() const { return c_.empty(); }

    // f(x,y) <= f(x+1,y) on the integer grid 1 <= x,y <= nmax (symmetry covers
    // the other coordinate).
    bool monotone_on_grid(int nmax) const;

    std::string text() const;  // human-readable, deterministic

    bool operator==(const SymmetricPoly&) const = default;

private:
    std::map<std::pair<int, int>, Rat> c_;  // keys a >= b, no zero values
};

}  // namespace bookdec
