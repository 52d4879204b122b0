// Canonical JSON forms. Scalars serialize as {"num": [...], "den": [...]}
// with rational strings low-to-high in the coupling symbol; polynomial terms
// are listed in ascending index order so equal values are byte-identical.
#pragma once

#include <json.hpp>

#include "solver.hpp"

namespace cspoly {

using json = nlohmann::ordered_json;

inline json scalar_to_json(const Scalar& s) {
    json num = json::array(), den = json::array();
    if (!s.is_symbolic()) {
        num.push_back(s.as_rational().str());
        den.push_back("1");
    } else {
        KRational kr = s.as_krational();
        for (const auto& c : kr.num().coeffs()) num.push_back(c.str());
        for (const auto& c : kr.den().coeffs()) den.push_back(c.str());
        if (num.empty()) num.push_back("0");
        if (den.empty()) den.push_back("1");
    }
    return json{{"num", num}, {"den", den}};
}

inline Scalar json_to_scalar(const json& j, bool symbolic) {
    std::vector<Rational> num, den;
    for (const auto& s : j.at("num")) num.push_back(Rational::parse(s.get<std::string>()));
    for (const auto& s : j.at("den")) den.push_back(Rational::parse(s.get<std::string>()));
    if (!symbolic) {
        if (num.size() > 1 || den.size() > 1)
            throw MathError("symbolic scalar in fixed-kappa context");
        Rational d = den.empty() ? Rational(1) : den[0];
        return Scalar((num.empty() ? Rational(0) : num[0]) / d);
    }
    return Scalar(KRational(KPolynomial(std::move(num)), KPolynomial(std::move(den))));
}

inline json index_to_json(const std::vector<long>& idx) {
    json a = json::array();
    for (long v : idx) a.push_back(v);
    return a;
}

inline json sym_to_json(const SymmetricPoly& p) {
    json terms = json::array();
    for (const auto& [lam, c] : p.terms())
        terms.push_back(json{{"idx", index_to_json(lam.parts)}, {"coeff", scalar_to_json(c)}});
    return json{{"nvars", p.nvars()}, {"terms", terms}};
}

inline SymmetricPoly json_to_sym(const json& j, bool symbolic) {
    SymmetricPoly p(j.at("nvars").get<std::size_t>());
    for (const auto& t : j.at("terms")) {
        std::vector<long> idx = t.at("idx").get<std::vector<long>>();
        p.add_term(Partition(std::move(idx)), json_to_scalar(t.at("coeff"), symbolic));
    }
    return p;
}

inline json bisym_to_json(const BiSymmetricPoly& p) {
    json terms = json::array();
    for (const auto& [key, c] : p.terms())
        terms.push_back(json{{"idx", index_to_json(key.parts)}, {"coeff", scalar_to_json(c)}});
    return json{{"nvars", p.nvars()}, {"nvars_tilde", p.nvars_tilde()}, {"terms", terms}};
}

inline BiSymmetricPoly json_to_bisym(const json& j, bool symbolic) {
    BiSymmetricPoly p(j.at("nvars").get<std::size_t>(), j.at("nvars_tilde").get<std::size_t>());
    for (const auto& t : j.at("terms"))
        p.add_term(IntVector(t.at("idx").get<std::vector<long>>()),
                   json_to_scalar(t.at("coeff"), symbolic));
    return p;
}

inline json fexpansion_to_json(const FExpansion& f) {
    json terms = json::array();
    for (const auto& [idx, c] : f.terms)
        terms.push_back(json{{"idx", index_to_json(idx.parts)}, {"coeff", scalar_to_json(c)}});
    return json{{"basis", "f"}, {"terms", terms}};
}

inline json eigenresult_to_json(const EigenResult& r) {
    json monomial = json::array();
    for (const auto& [key, c] : r.monomial_form.terms()) {
        std::vector<long> idx = key.parts;
        if (r.monomial_form.nvars_tilde() == 0)  // partition convention
            while (!idx.empty() && idx.back() == 0) idx.pop_back();
        monomial.push_back(json{{"idx", index_to_json(idx)}, {"coeff", scalar_to_json(c)}});
    }
    json out{{"n", index_to_json(r.n.parts)},
             {"eigenvalue", scalar_to_json(r.eigenvalue)},
             {"f_expansion", fexpansion_to_json(r.expansion).at("terms")},
             {"monomial", monomial}};
    if (!r.degenerate_kappas.empty()) {
        // couplings at which some divided gap specializes to zero
        json bad = json::array();
        for (const auto& k : r.degenerate_kappas) bad.push_back(k.str());
        out["degenerate_kappas"] = bad;
    }
    return out;
}

}  // namespace cspoly
