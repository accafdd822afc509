#pragma once

#include <string>
#include <vector>

#include "umemura/recurrences.hpp"

namespace umemura {

// Parameters of the Painleve III instance solved by w_n: alpha = 2n+2mu-1,
// beta = 2n-2mu+1, so alpha + beta = 4n.  epsilon records which of the two
// parameter lines alpha + epsilon*beta = 4n the solution sits on.
struct PIIIParams {
    BiPoly alpha;
    BiPoly beta;
    int n = 0;
    int epsilon = +1;

    static PIIIParams for_index(int n);
};

struct ResidualReport {
    std::string name;
    BiPoly cleared_numerator;
    bool is_zero = false;
    int n = 0;
    std::string mu_mode;
};

struct CheckResult {
    std::string name;
    int n = 0;
    bool pass = false;
    std::string detail;
};

// w_n in both shapes of the defining identity:
//   quotient form  S_n(z;mu-1) S_{n-1}(z;mu) / (S_n(z;mu) S_{n-1}(z;mu-1))
//   logderiv form  1 + d/dz ln(S_{n-1}(z;mu-1) / S_n(z;mu))
// Both are built and checked equal by cross-multiplication.
struct WPair {
    RationalFunction quotient_form;
    RationalFunction logderiv_form;
    bool forms_equal = false;
};
WPair build_w(const PolySequence& s_at_mu, const PolySequence& s_at_mum1, int n);

// Clears the Painleve III equation at w: with w = P/Q, A = P'Q - PQ',
// B = (P''Q - PQ'')Q - 2Q'A (so w' = A/Q^2, w'' = B/Q^3), the equation is
// multiplied through by z w Q^4 and the returned numerator is
//   z P B - z A^2 + P A Q - alpha P^3 Q - beta P Q^3 - z P^4 + z Q^4.
ResidualReport piii_residual(const RationalFunction& w, const PIIIParams& params,
                             const std::string& mu_mode = "symbolic");

// Fourth-order identity: z^2 [S S'''' - 4 S' S''' + 3 (S'')^2]
// + 2z (S S''' - S' S'') - 4z(z+mu) [S S'' - (S')^2] - 2 S S'' + 4 mu S S'
// = 2n(n+1) S^2, evaluated exactly with mu symbolic or specialized.
ResidualReport fourth_order_residual(const BiPoly& s_n, int n,
                             const BiPoly& mu_poly = BiPoly::mu(),
                             const std::string& mu_mode = "symbolic");

// 2 mu phi_n' - phi_n'' = n(n+1) phi_n in Q[mu].
bool phi_second_order_check(const PhiTriple& t, int n);

// Q'_{m+1} Q_{m-1} - Q_{m+1} Q'_{m-1} = (2m+1) Q_m^2.
bool yv_wronskian_identity(const BiPoly& q_mp1, const BiPoly& q_m,
                           const BiPoly& q_mm1, int m);

// With g = z f^2 - 4 l(f): does f divide 2 z g^2 - 4 l(g)?
bool taneda_div_pII(const BiPoly& f);

// With h = -z L_z(f) + k (z+mu) f^2: does f divide z L_z(h) - 2k (z+mu) h^2?
// The 1/z inside L_z clears exactly; everything stays polynomial.
bool taneda_div_pIII(const BiPoly& f, const Rational& k);

// Symbolic mu: gcd(S_{n+1}, S_n) = 1 and gcd(S_n, S_n') a pure power of z.
// Integer mu: the z^sigma cofactor of each S_n is square-free.
std::vector<CheckResult> coprime_and_squarefree_suite(const PolySequence& s,
                                                      const MuMode& mode,
                                                      int max_n);

// Table of the first Umemura polynomials, expanded from xi = z + mu.
// Index 1..5.
std::vector<BiPoly> table1_reference();

}  // namespace umemura
