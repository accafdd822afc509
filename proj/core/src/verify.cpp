#include "umemura/verify.hpp"

namespace umemura {

PIIIParams PIIIParams::for_index(int n) {
    PIIIParams p;
    p.n = n;
    p.alpha = Rational(2) * BiPoly::mu() + BiPoly(Rational(2 * n - 1));
    p.beta = Rational(-2) * BiPoly::mu() + BiPoly(Rational(2 * n + 1));
    p.epsilon = +1;
    return p;
}

WPair build_w(const PolySequence& s_at_mu, const PolySequence& s_at_mum1, int n) {
    const BiPoly& sn_m1 = s_at_mum1.at(n);
    const BiPoly& snm1_m = s_at_mu.at(n - 1);
    const BiPoly& sn_m = s_at_mu.at(n);
    const BiPoly& snm1_m1 = s_at_mum1.at(n - 1);
    WPair out;
    out.quotient_form = RationalFunction(sn_m1 * snm1_m, sn_m * snm1_m1);
    out.logderiv_form = RationalFunction::one() + logderiv_ratio(snm1_m1, sn_m);
    out.forms_equal = out.quotient_form.equals(out.logderiv_form);
    return out;
}

ResidualReport piii_residual(const RationalFunction& w, const PIIIParams& params,
                             const std::string& mu_mode) {
    if (w.is_zero()) throw ZeroArgumentError("piii_residual of the zero function");
    const BiPoly& p = w.num();
    const BiPoly& q = w.den();
    BiPoly dp = p.derivative_z();
    BiPoly dq = q.derivative_z();
    BiPoly a = dp * q - p * dq;
    BiPoly b = (p.derivative_z(2) * q - p * q.derivative_z(2)) * q -
               Rational(2) * dq * a;
    BiPoly p2 = p * p;
    BiPoly q2 = q * q;
    // assembled term by term to keep the clearing order fixed
    BiPoly numerator = (p * b).mul_z_power(1);
    numerator -= (a * a).mul_z_power(1);
    numerator += p * a * q;
    numerator -= params.alpha * p2 * p * q;
    numerator -= params.beta * p * q2 * q;
    numerator -= (p2 * p2).mul_z_power(1);
    numerator += (q2 * q2).mul_z_power(1);
    ResidualReport report;
    report.name = "piii-residual";
    report.cleared_numerator = std::move(numerator);
    report.is_zero = report.cleared_numerator.is_zero();
    report.n = params.n;
    report.mu_mode = mu_mode;
    return report;
}

ResidualReport fourth_order_residual(const BiPoly& s, int n, const BiPoly& mu_poly,
                             const std::string& mu_mode) {
    if (s.is_zero()) throw ZeroArgumentError("fourth_order_residual of the zero polynomial");
    BiPoly d1 = s.derivative_z();
    BiPoly d2 = d1.derivative_z();
    BiPoly d3 = d2.derivative_z();
    BiPoly d4 = d3.derivative_z();
    BiPoly numerator = (s * d4 - Rational(4) * d1 * d3 + Rational(3) * d2 * d2).mul_z_power(2);
    numerator += Rational(2) * (s * d3 - d1 * d2).mul_z_power(1);
    numerator -= Rational(4) * ((BiPoly::z() + mu_poly) * (s * d2 - d1 * d1)).mul_z_power(1);
    numerator -= Rational(2) * s * d2;
    numerator += Rational(4) * mu_poly * s * d1;
    numerator -= Rational(2 * n * (n + 1)) * s * s;
    ResidualReport report;
    report.name = "eq35-residual";
    report.cleared_numerator = std::move(numerator);
    report.is_zero = report.cleared_numerator.is_zero();
    report.n = n;
    report.mu_mode = mu_mode;
    return report;
}

bool phi_second_order_check(const PhiTriple& t, int n) {
    BiPoly lhs = Rational(2) * BiPoly::mu() * t.dphi - t.ddphi;
    BiPoly rhs = Rational(n * (n + 1)) * t.phi;
    return lhs == rhs;
}

bool yv_wronskian_identity(const BiPoly& q_mp1, const BiPoly& q_m,
                           const BiPoly& q_mm1, int m) {
    BiPoly lhs = q_mp1.derivative_z() * q_mm1 - q_mp1 * q_mm1.derivative_z();
    BiPoly rhs = Rational(2 * m + 1) * q_m * q_m;
    return lhs == rhs;
}

bool taneda_div_pII(const BiPoly& f) {
    if (f.is_zero()) throw ZeroArgumentError("taneda_div_pII of zero");
    BiPoly g = (f * f).mul_z_power(1) - Rational(4) * op_ell(f);
    BiPoly target = Rational(2) * (g * g).mul_z_power(1) - Rational(4) * op_ell(g);
    return divides(f, target);
}

bool taneda_div_pIII(const BiPoly& f, const Rational& k) {
    if (f.is_zero()) throw ZeroArgumentError("taneda_div_pIII of zero");
    BiPoly zmu = BiPoly::z() + BiPoly::mu();
    BiPoly h = neg_z_op_Lz(f) + k * zmu * (f * f);
    // z L_z(h) = z (h h'' - (h')^2) + h h'
    BiPoly dh = h.derivative_z();
    BiPoly z_Lz_h = (h * h.derivative_z(2) - dh * dh).mul_z_power(1) + h * dh;
    BiPoly target = z_Lz_h - Rational(2) * k * zmu * (h * h);
    return divides(f, target);
}

std::vector<CheckResult> coprime_and_squarefree_suite(const PolySequence& s,
                                                      const MuMode& mode, int max_n) {
    std::vector<CheckResult> out;
    auto is_pure_z_power = [](const BiPoly& g) {
        return g.term_count() == 1 && g.deg_mu() == 0 &&
               g.terms().begin()->second == 1;
    };
    if (mode.symbolic) {
        for (int n = 1; n < max_n; ++n) {
            BiPoly g = gcd_z(s.at(n + 1), s.at(n));
            out.push_back({"coprime-consecutive", n, g == BiPoly(1L),
                           "gcd(S_" + std::to_string(n + 1) + ", S_" + std::to_string(n) +
                               ") = " + g.str()});
        }
        for (int n = 1; n <= max_n; ++n) {
            BiPoly g = gcd_z(s.at(n), s.at(n).derivative_z());
            out.push_back({"squarefree-symbolic", n, is_pure_z_power(g),
                           "gcd(S_n, S_n') = " + g.str()});
        }
        return out;
    }
    if (!mode.is_integer()) {
        for (int n = 1; n <= max_n; ++n) {
            BiPoly g = gcd_z(s.at(n), s.at(n).derivative_z());
            out.push_back({"squarefree-rational-mu", n, is_pure_z_power(g),
                           "gcd(S_n, S_n') = " + g.str()});
        }
        return out;
    }
    long m = std::abs(mode.value.get_num().get_si());
    if (m == 0) {
        for (int n = 1; n <= max_n; ++n) {
            BiPoly expected = BiPoly(1L).mul_z_power(n * (n + 1) / 2);
            out.push_back({"mu-zero-pure-power", n, s.at(n) == expected,
                           "S_n(z;0) vs z^{n(n+1)/2}"});
        }
        return out;
    }
    for (int n = 1; n <= max_n; ++n) {
        const BiPoly& sn = s.at(n);
        int sigma = sn.valuation_z();
        BiPoly cofactor = BiPoly();
        for (const auto& [mono, c] : sn.terms())
            cofactor += BiPoly::term(c, mono.z - sigma, mono.mu);
        bool ok;
        std::string detail;
        if (cofactor.deg_z() == 0) {
            ok = true;
            detail = "constant cofactor";
        } else {
            BiPoly g = gcd_z(cofactor, cofactor.derivative_z());
            ok = g == BiPoly(1L);
            detail = "sigma = " + std::to_string(sigma) + ", gcd(g, g') = " + g.str();
        }
        out.push_back({n <= m ? "squarefree-low-index" : "squarefree-cofactor", n, ok,
                       detail});
    }
    return out;
}

std::vector<BiPoly> table1_reference() {
    const BiPoly xi = BiPoly::z() + BiPoly::mu();
    const BiPoly mu = BiPoly::mu();
    const BiPoly mu2 = mu * mu;
    const BiPoly mu3 = mu2 * mu;
    std::vector<BiPoly> table(6);
    table[1] = xi;
    table[2] = xi.pow(3) - mu;
    table[3] = xi.pow(6) - Rational(5) * mu * xi.pow(3) + Rational(9) * mu * xi -
               Rational(5) * mu2;
    table[4] = xi.pow(10) - Rational(15) * mu * xi.pow(7) + Rational(63) * mu * xi.pow(5) -
               Rational(225) * mu * xi.pow(3) + Rational(315) * mu2 * xi.pow(2) -
               Rational(175) * mu3 * xi + Rational(36) * mu2;
    table[5] = xi.pow(15) - Rational(35) * mu * xi.pow(12) +
               Rational(252) * mu * xi.pow(10) + Rational(175) * mu2 * xi.pow(9) -
               Rational(2025) * mu * xi.pow(8) + Rational(945) * mu2 * xi.pow(7) -
               Rational(1225) * (mu * (mu2 - BiPoly(9L))) * xi.pow(6) -
               Rational(26082) * mu2 * xi.pow(5) + Rational(33075) * mu3 * xi.pow(4) -
               Rational(350) * (mu2 * (Rational(35) * mu2 + BiPoly(36L))) * xi.pow(3) +
               Rational(11340) * mu3 * xi.pow(2) -
               Rational(225) * (mu2 * (Rational(49) * mu2 - BiPoly(36L))) * xi +
               Rational(7) * (mu3 * (Rational(875) * mu2 - BiPoly(828L)));
    return table;
}

}  // namespace umemura
