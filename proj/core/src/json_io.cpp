#include "umemura/json_io.hpp"

#include <algorithm>

#include "umemura/analysis.hpp"

namespace umemura {

Json bipoly_to_json(const BiPoly& p) {
    Json j;
    j["vars"] = Json::array({"z", "mu"});
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back(Json::array({m.z, m.mu, rational_to_string(c)}));
    j["terms"] = std::move(terms);
    return j;
}

BiPoly bipoly_from_json(const Json& j) {
    if (!j.contains("terms")) throw ParseError("BiPoly JSON lacks \"terms\"");
    BiPoly out;
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 3) throw ParseError("malformed BiPoly term");
        int dz = t.at(0).get<int>();
        int dmu = t.at(1).get<int>();
        if (dz < 0 || dmu < 0) throw ParseError("negative exponent in BiPoly term");
        Rational c = rational_from_string(t.at(2).get<std::string>());
        if (c == 0) throw ParseError("explicit zero coefficient in BiPoly term");
        out += BiPoly::term(c, dz, dmu);
    }
    return out;
}

std::string bipoly_canonical_dump(const BiPoly& p) {
    return bipoly_to_json(p).dump();
}

Json ratfun_to_json(const RationalFunction& f) {
    Json j;
    j["num"] = bipoly_to_json(f.num());
    j["den"] = bipoly_to_json(f.den());
    return j;
}

RationalFunction ratfun_from_json(const Json& j) {
    return RationalFunction(bipoly_from_json(j.at("num")), bipoly_from_json(j.at("den")));
}

Json residual_report_to_json(const ResidualReport& r) {
    Json j;
    j["name"] = r.name;
    j["n"] = r.n;
    j["mu_mode"] = r.mu_mode;
    j["is_zero"] = r.is_zero;
    j["cleared_numerator"] = bipoly_to_json(r.cleared_numerator);
    return j;
}

Json residual_reports_to_json(std::vector<ResidualReport> reports) {
    std::sort(reports.begin(), reports.end(),
              [](const ResidualReport& a, const ResidualReport& b) {
                  if (a.name != b.name) return a.name < b.name;
                  return a.n < b.n;
              });
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(residual_report_to_json(r));
    return arr;
}

Json discriminant_report_to_json(int n, const FactoredDiscriminant& f) {
    Json j;
    j["n"] = n;
    j["sign"] = f.sign;
    Json prefactor = Json::array();
    for (const auto& [p, e] : f.prime_exponents) prefactor.push_back(Json::array({p, e}));
    j["prefactor"] = std::move(prefactor);
    Json mu_factors = Json::array();
    for (const auto& [k, e] : f.mu_exponents) mu_factors.push_back(Json::array({k, e}));
    j["mu_factors"] = std::move(mu_factors);
    return j;
}

}  // namespace umemura
