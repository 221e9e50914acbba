#include "bookdec/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace bookdec {

FullPoly FullPoly::constant(const Rat& c) {
    FullPoly p;
    if (c != 0) p.terms[{0, 0}] = c;
    return p;
}

FullPoly FullPoly::x() {
    FullPoly p;
    p.terms[{1, 0}] = 1;
    return p;
}

FullPoly FullPoly::y() {
    FullPoly p;
    p.terms[{0, 1}] = 1;
    return p;
}

FullPoly FullPoly::operator+(const FullPoly& o) const {
    FullPoly r = *this;
    for (const auto& [k, c] : o.terms) {
        Rat& slot = r.terms[k];
        slot += c;
        if (slot == 0) r.terms.erase(k);
    }
    return r;
}

FullPoly FullPoly::operator-(const FullPoly& o) const {
    FullPoly neg;
    for (const auto& [k, c] : o.terms) neg.terms[k] = -c;
    return *this + neg;
}

FullPoly FullPoly::operator*(const FullPoly& o) const {
    FullPoly r;
    for (const auto& [ka, ca] : terms)
        for (const auto& [kb, cb] : o.terms) {
            auto key = std::make_pair(ka.first + kb.first, ka.second + kb.second);
            Rat& slot = r.terms[key];
            slot += ca * cb;
            if (slot == 0) r.terms.erase(key);
        }
    return r;
}

FullPoly FullPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("FullPoly::pow: negative exponent");
    FullPoly r = constant(1);
    for (int i = 0; i < e; i++) r = r * *this;
    return r;
}

SymmetricPoly SymmetricPoly::from_full(const FullPoly& f) {
    SymmetricPoly s;
    for (const auto& [k, c] : f.terms) {
        auto [a, b] = k;
        auto it = f.terms.find({b, a});
        if (it == f.terms.end() || it->second != c)
            throw std::invalid_argument("SymmetricPoly: polynomial is not symmetric");
        if (a >= b) s.c_[{a, b}] = c;
    }
    return s;
}

void SymmetricPoly::add_coeff(int a, int b, const Rat& c) {
    if (a < 0 || b < 0) throw std::invalid_argument("SymmetricPoly: negative exponent");
    if (a < b) std::swap(a, b);
    Rat& slot = c_[{a, b}];
    slot += c;
    if (slot == 0) c_.erase({a, b});
}

Rat SymmetricPoly::coeff(int a, int b) const {
    if (a < b) std::swap(a, b);
    auto it = c_.find({a, b});
    return it == c_.end() ? Rat(0) : it->second;
}

std::vector<std::tuple<int, int, Rat>> SymmetricPoly::full_terms() const {
    std::vector<std::tuple<int, int, Rat>> out;
    for (const auto& [k, c] : c_) {
        out.emplace_back(k.first, k.second, c);
        if (k.first != k.second) out.emplace_back(k.second, k.first, c);
    }
    return out;
}

Rat SymmetricPoly::eval(const Rat& x, const Rat& y) const {
    Rat total = 0;
    for (const auto& [k, c] : c_) {
        Rat term = c * rat_pow(x, k.first) * rat_pow(y, k.second);
        if (k.first != k.second) term += c * rat_pow(x, k.second) * rat_pow(y, k.first);
        total += term;
    }
    return total;
}

int SymmetricPoly::max_degree() const {
    int d = 0;
    for (const auto& [k, c] : c_) d = std::max(d, k.first);
    return d;
}

bool SymmetricPoly::monotone_on_grid(int nmax) const {
    for (int x = 1; x < nmax; x++)
        for (int y = 1; y <= nmax; y++)
            if (eval(x, y) > eval(x + 1, y)) return false;
    return true;
}

std::string SymmetricPoly::text() const {
    if (c_.empty()) return "0";
    auto mono = [](const Rat& c, int a, int b) {
        std::string m = rat_to_string(c);
        if (a > 0) m += a == 1 ? " x" : " x^" + std::to_string(a);
        if (b > 0) m += b == 1 ? " y" : " y^" + std::to_string(b);
        return m;
    };
    std::string s;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [k, c] = *it;
        if (!s.empty()) s += " + ";
        s += mono(c, k.first, k.second);
        if (k.first != k.second) s += " + " + mono(c, k.second, k.first);
    }
    return s;
}

}  // namespace bookdec
