#pragma once

#include <json.hpp>

#include "umemura/ratfun.hpp"
#include "umemura/verify.hpp"

namespace umemura {

using Json = nlohmann::ordered_json;

// {"vars":["z","mu"],"terms":[[deg_z,deg_mu,"num"|"num/den"],...]} with the
// terms in canonical (deg_z, deg_mu) ascending order; round-trips bit-exact.
Json bipoly_to_json(const BiPoly& p);
BiPoly bipoly_from_json(const Json& j);
std::string bipoly_canonical_dump(const BiPoly& p);

// {"num": <BiPoly>, "den": <BiPoly>}
Json ratfun_to_json(const RationalFunction& f);
RationalFunction ratfun_from_json(const Json& j);

Json residual_report_to_json(const ResidualReport& r);
// Stable ordering by (name, n).
Json residual_reports_to_json(std::vector<ResidualReport> reports);

// {"n":, "sign":, "prefactor":[[prime,exp],...], "mu_factors":[[k,exp],...]}
// with k = 0 standing for the plain mu power and k >= 1 for (mu^2 - k^2).
struct FactoredDiscriminant;
Json discriminant_report_to_json(int n, const FactoredDiscriminant& f);

}  // namespace umemura
