#include "bookdec/indices.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

namespace bookdec {

bool IndexDef::small_degree_no_square_product() const {
    return is_polynomial() && edge_poly.max_degree() <= 2 && edge_poly.coeff(2, 2) == 0;
}

bool IndexDef::monotone_on_grid(int nmax) const {
    return is_polynomial() && edge_poly.monotone_on_grid(nmax);
}

SymmetricPoly vertex_power_edge_poly(int r) {
    if (r < 1) throw std::invalid_argument("vertex_power_edge_poly: need r >= 1");
    FullPoly x = FullPoly::x(), y = FullPoly::y();
    return SymmetricPoly::from_full(x.pow(r - 1) + y.pow(r - 1));
}

namespace {

void need_params(const std::string& family, const std::vector<int>& params, size_t k) {
    if (params.size() != k)
        throw std::invalid_argument("index " + family + " expects " + std::to_string(k) +
                                    " parameter(s), got " + std::to_string(params.size()));
    for (int p : params)
        if (p < 0)
            throw std::invalid_argument("index " + family + ": exponents must be non-negative");
}

}  // namespace

IndexDef make_index(const std::string& family, const std::vector<int>& params) {
    FullPoly x = FullPoly::x(), y = FullPoly::y();
    FullPoly one = FullPoly::constant(1), two = FullPoly::constant(2);

    IndexDef def;
    def.family = family;
    def.params = params;
    def.name = family;
    for (size_t i = 0; i < params.size(); i++)
        def.name += (i ? "," : ":") + std::to_string(params[i]);

    FullPoly poly;
    if (family == "M1") {
        need_params(family, params, 0);
        poly = x + y;
    } else if (family == "F") {
        need_params(family, params, 0);
        poly = x * x + y * y;
    } else if (family == "M2") {
        need_params(family, params, 0);
        poly = x * y;
    } else if (family == "RM2") {
        need_params(family, params, 0);
        poly = (x - one) * (y - one);
    } else if (family == "HM1") {
        need_params(family, params, 0);
        poly = (x + y).pow(2);
    } else if (family == "HM2") {
        need_params(family, params, 0);
        poly = (x * y).pow(2);
    } else if (family == "HF") {
        need_params(family, params, 0);
        poly = (x * x + y * y).pow(2);
    } else if (family == "EM1") {
        need_params(family, params, 0);
        poly = (x + y - two).pow(2);
    } else if (family == "B1") {
        need_params(family, params, 0);
        poly = FullPoly::constant(3) * (x + y) - FullPoly::constant(4);
    } else if (family == "B2") {
        need_params(family, params, 0);
        poly = (x + y - two) * (x + y);
    } else if (family == "chi_r") {
        need_params(family, params, 1);
        poly = (x + y).pow(params[0]);
    } else if (family == "R_r") {
        need_params(family, params, 1);
        poly = (x * y).pow(params[0]);
    } else if (family == "R0_r") {
        need_params(family, params, 1);
        if (params[0] == 0) {
            def.vertex_count = true;  // sum over vertices of d^0 = |V(G)|
            return def;
        }
        poly = x.pow(params[0] - 1) + y.pow(params[0] - 1);
    } else if (family == "M_rs") {
        need_params(family, params, 2);
        int r = std::max(params[0], params[1]), s = std::min(params[0], params[1]);
        def.params = {r, s};
        def.name = family + ":" + std::to_string(r) + "," + std::to_string(s);
        poly = x.pow(r) * y.pow(s) + x.pow(s) * y.pow(r);
    } else {
        throw std::invalid_argument("unknown index family: " + family);
    }
    def.edge_poly = SymmetricPoly::from_full(poly);
    return def;
}

IndexDef parse_index(std::string_view text) {
    std::string family;
    std::vector<int> params;
    auto colon = text.find(':');
    family = std::string(text.substr(0, colon));
    if (colon != std::string_view::npos) {
        std::string_view rest = text.substr(colon + 1);
        while (!rest.empty()) {
            auto comma = rest.find(',');
            std::string_view tok = rest.substr(0, comma);
            int value = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc() || p != tok.data() + tok.size())
                throw std::invalid_argument("bad index parameter in '" + std::string(text) + "'");
            params.push_back(value);
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        if (params.empty())
            throw std::invalid_argument("empty parameter list in '" + std::string(text) + "'");
    }
    return make_index(family, params);
}

std::vector<IndexDef> registry_all(int param_max) {
    std::vector<IndexDef> all;
    for (const std::string& fam :
         {"M1", "F", "M2", "RM2", "HM1", "HM2", "HF", "EM1", "B1", "B2"})
        all.push_back(make_index(fam));
    for (int r = 1; r <= param_max; r++) all.push_back(make_index("chi_r", {r}));
    for (int r = 1; r <= param_max; r++) all.push_back(make_index("R0_r", {r}));
    for (int r = 1; r <= param_max; r++) all.push_back(make_index("R_r", {r}));
    for (int r = 1; r <= param_max; r++)
        for (int s = 1; s <= r; s++) all.push_back(make_index("M_rs", {r, s}));
    return all;
}

Rat eval_edge_poly(const SymmetricPoly& f, const Graph& g) {
    Rat total = 0;
    for (auto [u, v] : g.edges()) total += f.eval(g.degree(u), g.degree(v));
    return total;
}

Rat eval_index(const IndexDef& def, const Graph& g) {
    if (def.vertex_count) return g.n();
    return eval_edge_poly(def.edge_poly, g);
}

Rat delta_remove_edge(const IndexDef& def, const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("delta_remove_edge: uv not an edge");
    if (def.vertex_count) return 0;
    const SymmetricPoly& f = def.edge_poly;
    int du = g.degree(u), dv = g.degree(v);
    Rat delta = f.eval(du, dv);  // the lost term
    // every other edge at u has one endpoint degree dropping by 1
    for (int w : {u, v}) {
        int dw = g.degree(w);
        uint64_t nb = g.neighbors(w) & ~(1ull << (w == u ? v : u));
        while (nb) {
            int z = std::countr_zero(nb);
            nb &= nb - 1;
            delta += f.eval(dw, g.degree(z)) - f.eval(dw - 1, g.degree(z));
        }
    }
    return delta;
}

}  // namespace bookdec
