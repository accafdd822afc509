#include "umemura/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace umemura {

BiPoly DiscriminantRecord::reassembled() const {
    BiPoly out{Rational(sign)};
    for (const auto& [base, exp] : factored) out = out * base.pow((unsigned)exp);
    return out;
}

std::string FactoredDiscriminant::str() const {
    std::ostringstream os;
    os << (sign < 0 ? "-" : "+");
    for (const auto& [p, e] : prime_exponents) os << " " << p << "^" << e;
    for (const auto& [k, e] : mu_exponents) {
        if (k == 0)
            os << " mu^" << e;
        else
            os << " (mu^2-" << k * k << ")^" << e;
    }
    return os.str();
}

FactoredDiscriminant factorize_discriminant(int n, const BiPoly& dis) {
    if (dis.is_zero()) throw MathError("zero discriminant cannot be factored");
    if (dis.deg_z() > 0) throw MathError("discriminant must be a polynomial in mu only");
    FactoredDiscriminant out;
    BiPoly rest = dis;

    auto divide_out = [&rest](const BiPoly& base) {
        long count = 0;
        while (true) {
            Division d = divide(rest, base);
            if (!d.quotient) break;
            rest = *d.quotient;
            ++count;
        }
        return count;
    };

    long e0 = divide_out(BiPoly::mu());
    if (e0 > 0) out.mu_exponents[0] = e0;
    for (long k = 1; k <= n; ++k) {
        BiPoly base = BiPoly::mu() * BiPoly::mu() - BiPoly(Rational(k * k));
        long e = divide_out(base);
        if (e > 0) out.mu_exponents[k] = e;
    }
    Rational constant = rest.as_rational();  // throws if mu factors remain
    if (constant.get_den() != 1)
        throw MathError("discriminant constant is not an integer");
    Integer c = constant.get_num();
    out.sign = (c < 0) ? -1 : +1;
    if (c < 0) c = -c;
    for (long p = 3; p <= 2L * n + 1; p += 2) {
        bool prime = true;
        for (long q = 3; q * q <= p; q += 2)
            if (p % q == 0) {
                prime = false;
                break;
            }
        if (!prime) continue;
        long e = 0;
        while (c % p == 0) {
            c /= p;
            ++e;
        }
        if (e > 0) out.prime_exponents[p] = e;
    }
    if (c != 1)
        throw MathError("discriminant constant has a factor outside primes <= 2n+1: " +
                        c.get_str());
    return out;
}

std::vector<DiscriminantRecord> discriminant_table(int n_max,
                                                   const PolySequence& s_symbolic) {
    std::vector<DiscriminantRecord> out;
    for (int n = 2; n <= n_max; ++n) {
        DiscriminantRecord rec;
        rec.n = n;
        rec.dis = discriminant_z(s_symbolic.at(n));
        FactoredDiscriminant f = factorize_discriminant(n, rec.dis);
        rec.sign = f.sign;
        Rational prefactor(1);
        for (const auto& [p, e] : f.prime_exponents)
            for (long i = 0; i < e; ++i) prefactor *= p;
        if (prefactor != 1) rec.factored.push_back({BiPoly(prefactor), 1});
        for (const auto& [k, e] : f.mu_exponents) {
            BiPoly base = k == 0 ? BiPoly::mu()
                                 : BiPoly::mu() * BiPoly::mu() - BiPoly(Rational(k * k));
            rec.factored.push_back({base, (int)e});
        }
        out.push_back(std::move(rec));
    }
    return out;
}

long amdeberhan_c(int m) {
    // m^3/6 + m^2/4 - m/6 - [1-(-1)^m]/8, over a common denominator of 12
    long numer = 2L * m * m * m + 3L * m * m - 2L * m - (m % 2 == 0 ? 0 : 3);
    if (numer % 12 != 0) throw MathError("c_m is not an integer");
    return numer / 12;
}

FactoredDiscriminant amdeberhan_formula(int n) {
    FactoredDiscriminant out;
    out.sign = (n % 4 == 2) ? -1 : +1;
    for (long j = 1; j <= n; ++j) {
        long base = 2 * j + 1;
        long exponent = base * (n - j) * (n - j);
        if (exponent == 0) continue;
        long b = base;
        for (long p = 3; p <= b; p += 2) {
            while (b % p == 0) {
                out.prime_exponents[p] += exponent;
                b /= p;
            }
        }
    }
    for (long k = 0; k <= n; ++k) {
        long e = amdeberhan_c(n - (int)k);
        if (e > 0) out.mu_exponents[k] = e;
    }
    return out;
}

bool valuation_theorem_check(int n, long mu0, const PolySequence& s_at_mu) {
    long am = std::labs(mu0);
    if (n <= am) throw MathError("valuation theorem requires n > |mu|");
    long expected = (n - am) * (n - am + 1) / 2;
    return s_at_mu.at(n).valuation_z() == expected;
}

bool coefficient_relations_check(int n, long mu0, const PolySequence& s_at_mu,
                                 std::string* detail) {
    long am = std::labs(mu0);
    if (n <= am) throw MathError("coefficient relations require n > |mu|");
    const BiPoly& sn = s_at_mu.at(n);
    long sigma = sn.valuation_z();
    long m = n - am;
    if (sigma != m * (m + 1) / 2)
        throw MathError("sigma hypothesis fails: valuation " + std::to_string(sigma));
    Rational a0 = sn.coefficient((int)sigma, 0);
    if (a0 == 0) throw ZeroConstantTermError("cofactor has zero constant term");
    Rational a1 = sn.coefficient((int)sigma + 1, 0);
    Rational a2 = sn.coefficient((int)sigma + 2, 0);
    Rational mu(mu0);
    bool rel_a = a1 == mu * a0;
    Rational expected_a2 =
        (mu * mu - Rational(am, 2 * m + 1)) * a0 / 2;
    bool rel_b = a2 == expected_a2;
    if (detail) {
        std::ostringstream os;
        os << "a0=" << rational_to_string(a0) << " a1=" << rational_to_string(a1)
           << " a2=" << rational_to_string(a2) << " (a1==mu*a0: " << rel_a
           << ", a2 relation: " << rel_b << ")";
        *detail = os.str();
    }
    return rel_a && rel_b;
}

// ---------------------------------------------------------------------------
// Numeric roots

namespace {

std::complex<double> horner(const std::vector<std::complex<double>>& coeffs,
                            std::complex<double> x) {
    std::complex<double> acc(0.0, 0.0);
    for (int i = (int)coeffs.size() - 1; i >= 0; --i) acc = acc * x + coeffs[i];
    return acc;
}

// Complex arithmetic at a fixed extended precision, for the refinement stage.
constexpr int kPolishBits = 320;

struct Cmpf {
    mpf_class re{0, kPolishBits};
    mpf_class im{0, kPolishBits};
};

Cmpf cmpf_from(std::complex<double> z) {
    Cmpf out;
    out.re = z.real();
    out.im = z.imag();
    return out;
}

void cmpf_mul_add(Cmpf& acc, const Cmpf& x, const mpf_class& c) {
    // acc = acc * x + c
    mpf_class re(0, kPolishBits), im(0, kPolishBits);
    re = acc.re * x.re - acc.im * x.im + c;
    im = acc.re * x.im + acc.im * x.re;
    acc.re = std::move(re);
    acc.im = std::move(im);
}

Cmpf cmpf_div(const Cmpf& a, const Cmpf& b) {
    Cmpf out;
    mpf_class t(0, kPolishBits);
    t = b.re * b.re + b.im * b.im;
    if (t == 0) return out;
    out.re = (a.re * b.re + a.im * b.im) / t;
    out.im = (a.im * b.re - a.re * b.im) / t;
    return out;
}

// Extended-precision Aberth sweeps against the exact coefficients, warm
// started from the double-precision stage.  Double output is backward-stable
// but each root's forward error scales with its condition number, which for
// the large specialized polynomials exceeds what the Vieta cross-checks
// tolerate; the repulsion term keeps the refined roots pairwise distinct,
// which per-root Newton polishing does not.
void aberth_refine_exact(const std::vector<Rational>& coeffs,
                         std::vector<std::complex<double>>& roots_io) {
    const int deg = (int)coeffs.size() - 1;
    std::vector<mpf_class> c(deg + 1), dc(std::max(deg, 1));
    for (int k = 0; k <= deg; ++k) {
        mpf_class v(0, kPolishBits);
        v = mpf_class(coeffs[k].get_num(), kPolishBits);
        v /= mpf_class(coeffs[k].get_den(), kPolishBits);
        c[k] = std::move(v);
    }
    for (int k = 1; k <= deg; ++k) {
        mpf_class v(0, kPolishBits);
        v = c[k] * k;
        dc[k - 1] = std::move(v);
    }
    std::vector<Cmpf> x(roots_io.size());
    for (std::size_t i = 0; i < roots_io.size(); ++i) x[i] = cmpf_from(roots_io[i]);

    mpf_class tol2(0, kPolishBits);
    tol2 = 1e-60;  // squared relative update target
    for (int sweep = 0; sweep < 80; ++sweep) {
        bool settled = true;
        for (std::size_t i = 0; i < x.size(); ++i) {
            Cmpf p, dp;
            for (int k = deg; k >= 0; --k) cmpf_mul_add(p, x[i], c[k]);
            for (int k = deg - 1; k >= 0; --k) cmpf_mul_add(dp, x[i], dc[k]);
            if (p.re == 0 && p.im == 0) continue;
            Cmpf newton = cmpf_div(p, dp);
            Cmpf rep;
            for (std::size_t j = 0; j < x.size(); ++j) {
                if (j == i) continue;
                Cmpf diff;
                diff.re = x[i].re - x[j].re;
                diff.im = x[i].im - x[j].im;
                Cmpf one;
                one.re = 1;
                Cmpf inv = cmpf_div(one, diff);
                rep.re += inv.re;
                rep.im += inv.im;
            }
            Cmpf den;
            den.re = 1 - (newton.re * rep.re - newton.im * rep.im);
            den.im = -(newton.re * rep.im + newton.im * rep.re);
            Cmpf delta = (den.re == 0 && den.im == 0) ? newton : cmpf_div(newton, den);
            x[i].re -= delta.re;
            x[i].im -= delta.im;
            mpf_class d2(0, kPolishBits), s2(0, kPolishBits);
            d2 = delta.re * delta.re + delta.im * delta.im;
            s2 = x[i].re * x[i].re + x[i].im * x[i].im;
            if (s2 == 0) s2 = 1;
            if (d2 > tol2 * s2) settled = false;
        }
        if (settled) break;
    }
    for (std::size_t i = 0; i < x.size(); ++i)
        roots_io[i] = std::complex<double>(x[i].re.get_d(), x[i].im.get_d());
}

// Residual certificates against the radius-normalized double polynomial.
void certify_roots(const std::vector<std::complex<double>>& coeffs,
                   ComplexRootSet& rs) {
    const int deg = (int)coeffs.size() - 1;
    double lc = std::abs(coeffs[deg]);
    const double scale_r =
        std::abs(coeffs[0]) == 0.0 ? 1.0 : std::pow(std::abs(coeffs[0]) / lc, 1.0 / deg);
    std::vector<std::complex<double>> q(deg + 1);
    double rk = 1.0, qmax = 0.0;
    for (int k = 0; k <= deg; ++k) {
        q[k] = coeffs[k] * rk;
        rk *= scale_r;
        qmax = std::max(qmax, std::abs(q[k]));
    }
    for (auto& cc : q) cc /= qmax;
    double norm1 = 0.0;
    for (const auto& cc : q) norm1 += std::abs(cc);
    double worst = 0.0, worst_backward = 0.0;
    for (const auto& root : rs.roots) {
        std::complex<double> w = root / scale_r;
        double residual = std::abs(horner(q, w));
        worst = std::max(worst, residual);
        double aw = std::abs(w);
        double s = 0.0;
        for (int k = deg; k >= 0; --k) s = s * aw + std::abs(q[k]);
        if (s > 0) worst_backward = std::max(worst_backward, residual / s);
    }
    rs.residual_bound = norm1 > 0 ? worst / norm1 : 0.0;
    rs.backward_error = worst_backward;
}

}  // namespace

ComplexRootSet aberth_roots_numeric(std::vector<std::complex<double>> coeffs,
                                    int zero_multiplicity, const AberthOptions& opts) {
    while (!coeffs.empty() && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
    const int deg = (int)coeffs.size() - 1;
    if (deg < 1) throw MathError("aberth_roots requires degree >= 1");

    ComplexRootSet out;
    out.zero_multiplicity = zero_multiplicity;

    // Work in the scaled variable w = z / R with R the geometric-mean root
    // modulus |a_0/a_n|^{1/deg} (a_0 != 0 since the z^v factor is stripped).
    // This keeps the iterates in an O(1) disk, where residuals relative to
    // the coefficient norm are meaningful; in raw coordinates a root of
    // modulus r inflates the evaluation noise floor by r^deg.
    double lc = std::abs(coeffs[deg]);
    const double scale_r =
        std::abs(coeffs[0]) == 0.0 ? 1.0 : std::pow(std::abs(coeffs[0]) / lc, 1.0 / deg);
    std::vector<std::complex<double>> q(deg + 1);
    {
        double rk = 1.0;
        double qmax = 0.0;
        for (int k = 0; k <= deg; ++k) {
            q[k] = coeffs[k] * rk;
            rk *= scale_r;
            qmax = std::max(qmax, std::abs(q[k]));
        }
        for (auto& c : q) c /= qmax;
    }

    std::vector<std::complex<double>> dq(deg);
    for (int i = 1; i <= deg; ++i) dq[i - 1] = q[i] * double(i);
    std::vector<double> abs_q(deg + 1);
    for (int i = 0; i <= deg; ++i) abs_q[i] = std::abs(q[i]);
    constexpr double eps = 2.220446049250313e-16;

    // Newton-polygon initial guesses (Bini): the upper convex hull of
    // (k, log|q_k|) splits the roots into annuli; each hull edge of width
    // k2-k1 contributes that many starts on the circle of radius
    // (|q_k1|/|q_k2|)^{1/(k2-k1)}.  Starting at the right moduli keeps the
    // iterates out of the zones where the evaluation noise bound swallows
    // every update.
    std::vector<std::complex<double>> w;
    w.reserve(deg);
    {
        struct Pt {
            int k;
            double y;
        };
        std::vector<Pt> pts;
        for (int k = 0; k <= deg; ++k)
            if (abs_q[k] > 0.0) pts.push_back({k, std::log(abs_q[k])});
        std::vector<Pt> hull;  // upper hull, k increasing
        for (const Pt& p : pts) {
            while (hull.size() >= 2) {
                const Pt& a = hull[hull.size() - 2];
                const Pt& b = hull[hull.size() - 1];
                double cross = (double)(b.k - a.k) * (p.y - a.y) -
                               (b.y - a.y) * (double)(p.k - a.k);
                if (cross >= 0.0)
                    hull.pop_back();
                else
                    break;
            }
            hull.push_back(p);
        }
        const double offset = 0.376;  // fixed phase so no start collides with an axis
        for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
            int k1 = hull[e].k, k2 = hull[e + 1].k;
            int count = k2 - k1;
            double r = std::exp((hull[e].y - hull[e + 1].y) / count);
            for (int t = 0; t < count; ++t) {
                double angle =
                    2.0 * M_PI * ((t + offset) / count + 0.173 * (double)(e + 1));
                w.push_back(std::polar(r, angle));
            }
        }
    }

    bool converged = false;
    for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
        converged = true;
        for (int i = 0; i < deg; ++i) {
            std::complex<double> pv = horner(q, w[i]);
            // a root whose residual sits at the evaluation noise floor
            // cannot improve in double precision; leave it in place
            double aw = std::abs(w[i]);
            double noise = 0.0;
            for (int k = deg; k >= 0; --k) noise = noise * aw + abs_q[k];
            if (std::abs(pv) <= 4.0 * eps * noise) continue;
            std::complex<double> dv = horner(dq, w[i]);
            std::complex<double> newton = dv == 0.0 ? std::complex<double>(0, 0) : pv / dv;
            std::complex<double> repulsion(0.0, 0.0);
            for (int j = 0; j < deg; ++j)
                if (j != i) repulsion += 1.0 / (w[i] - w[j]);
            std::complex<double> denom = 1.0 - newton * repulsion;
            std::complex<double> delta = denom == 0.0 ? newton : newton / denom;
            w[i] -= delta;
            double scale = std::max(std::abs(w[i]), 1e-300);
            if (std::abs(delta) > opts.rel_update_tol * scale) converged = false;
        }
    }

    // residuals are certified against the radius-normalized polynomial
    double norm1 = 0.0;
    for (double a : abs_q) norm1 += a;
    double worst = 0.0;
    double worst_backward = 0.0;
    for (const auto& r : w) {
        double residual = std::abs(horner(q, r));
        worst = std::max(worst, residual);
        double aw = std::abs(r);
        double scale = 0.0;
        for (int k = deg; k >= 0; --k) scale = scale * aw + abs_q[k];
        if (scale > 0) worst_backward = std::max(worst_backward, residual / scale);
    }
    out.roots.resize(deg);
    for (int i = 0; i < deg; ++i) out.roots[i] = w[i] * scale_r;
    out.residual_bound = norm1 > 0 ? worst / norm1 : 0.0;
    out.backward_error = worst_backward;
    out.converged = converged;
    if (!converged)
        throw NoConvergenceError("aberth iteration did not converge in " +
                                     std::to_string(opts.max_sweeps) + " sweeps",
                                 out);
    return out;
}

ComplexRootSet aberth_roots(const BiPoly& p, const AberthOptions& opts) {
    if (p.deg_mu() > 0) throw MathError("aberth_roots expects a univariate polynomial in z");
    if (p.deg_z() < 1) throw DegreeTooLowError("aberth_roots requires deg_z >= 1");
    int v = p.valuation_z();
    std::vector<Rational> exact = p.univariate_in_z();
    std::vector<Rational> cofactor(exact.begin() + v, exact.end());
    std::vector<std::complex<double>> coeffs;
    coeffs.reserve(cofactor.size());
    for (const auto& c : cofactor) coeffs.emplace_back(c.get_d(), 0.0);
    if (coeffs.size() == 1) {
        // pure power of z
        ComplexRootSet out;
        out.zero_multiplicity = v;
        out.residual_bound = 0.0;
        return out;
    }
    ComplexRootSet out = aberth_roots_numeric(coeffs, v, opts);
    aberth_refine_exact(cofactor, out.roots);
    certify_roots(coeffs, out);
    return out;
}

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    std::string s(buf, end);
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find("inf") == std::string::npos && s.find("nan") == std::string::npos)
        s += ".0";
    return s;
}

std::string roots_to_csv(const ComplexRootSet& rs) {
    struct Row {
        double arg;
        double mod;
        std::complex<double> value;
    };
    std::vector<Row> rows;
    rows.reserve(rs.roots.size() + rs.zero_multiplicity);
    for (int i = 0; i < rs.zero_multiplicity; ++i) rows.push_back({0.0, 0.0, {0.0, 0.0}});
    for (const auto& r : rs.roots) rows.push_back({std::arg(r), std::abs(r), r});
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.arg != b.arg) return a.arg < b.arg;
        return a.mod < b.mod;
    });
    std::ostringstream os;
    os << "re,im\n";
    for (const auto& row : rows)
        os << format_double(row.value.real()) << "," << format_double(row.value.imag())
           << "\n";
    return os.str();
}

void export_roots(const ComplexRootSet& rs, const std::filesystem::path& path) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open " + path.string() + " for writing");
    f << roots_to_csv(rs);
    if (!f.good()) throw IoError("short write to " + path.string());
}

}  // namespace umemura
