#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "riordan/eulerian.hpp"
#include "riordan/jacobi.hpp"
#include "riordan/matrix.hpp"
#include "riordan/series.hpp"

namespace riordan {

using nlohmann::json;

// Wire schemas:
//   Rat     ["num", "den"]            decimal strings, den positive
//   Poly    [ {"c": Rat, "m": {"x": 2, ...}}, ... ]   canonical term order,
//           zero exponents omitted, the zero polynomial is []
//   Frac    {"num": Poly, "den": Poly}
//   Series  {"order": N, "coeffs": [Frac...]} plus "egf": [Poly...] when
//           every n! c_n is polynomial
//   Matrix  {"size": n, "rows": [[Frac...]...]} with explicit zeros

inline json to_json(const Rat& r) {
    return json::array({r.num().to_string(), r.den().to_string()});
}

inline Rat rat_from_json(const json& j) {
    return Rat(Int(j.at(0).get<std::string>()), Int(j.at(1).get<std::string>()));
}

inline json to_json(const Poly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json mono = json::object();
        for (int i = 0; i < kVarCount; ++i)
            if (m.exp[i] > 0) mono[var_name(static_cast<Var>(i))] = m.exp[i];
        terms.push_back(json{{"c", to_json(c)}, {"m", mono}});
    }
    return terms;
}

inline Poly poly_from_json(const json& j) {
    Poly p;
    for (const auto& term : j) {
        Monomial m;
        for (const auto& [name, e] : term.at("m").items()) {
            auto v = var_from_name(name);
            if (!v) throw std::invalid_argument("unknown variable in polynomial JSON: " + name);
            m.exp[static_cast<int>(*v)] = e.get<std::uint32_t>();
        }
        p += Poly::term(rat_from_json(term.at("c")), m);
    }
    return p;
}

inline json to_json(const Frac& f) {
    return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

inline Frac frac_from_json(const json& j) {
    return Frac(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

inline json to_json(const Series& s) {
    json coeffs = json::array();
    for (int n = 0; n <= s.order(); ++n) coeffs.push_back(to_json(s.coeff(n)));
    json out{{"order", s.order()}, {"coeffs", coeffs}};
    json egf = json::array();
    bool all_poly = true;
    for (int n = 0; n <= s.order() && all_poly; ++n) {
        auto p = s.egf_coeff(n).as_polynomial();
        if (p)
            egf.push_back(to_json(*p));
        else
            all_poly = false;
    }
    if (all_poly) out["egf"] = egf;
    return out;
}

inline json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.size(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.size(); ++c) row.push_back(to_json(m.at(r, c)));
        rows.push_back(row);
    }
    return json{{"size", m.size()}, {"rows", rows}};
}

inline json to_json(const LTMatrix& m) { return matrix_to_json(m.dense()); }
inline json to_json(const ProductionMatrix& m) { return matrix_to_json(m.dense()); }

inline Matrix matrix_from_json(const json& j) {
    Matrix m(j.at("size").get<int>());
    const auto& rows = j.at("rows");
    for (int r = 0; r < m.size(); ++r)
        for (int c = 0; c < m.size(); ++c) m.at(r, c) = frac_from_json(rows.at(r).at(c));
    return m;
}

// Triangles export as rows of decimal strings.
inline json triangle_to_json(const std::vector<std::vector<Int>>& rows) {
    json out = json::array();
    for (const auto& row : rows) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.to_string());
        out.push_back(r);
    }
    return out;
}

}  // namespace riordan
