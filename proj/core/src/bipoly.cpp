#include "umemura/bipoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace umemura {

namespace {

const Rational kOne(1);

bool is_one(const BiPoly& p) {
    return p.term_count() == 1 && p.terms().begin()->first == BiPoly::Mono{0, 0} &&
           p.terms().begin()->second == kOne;
}

}  // namespace

void BiPoly::set_term(int dz, int dmu, const Rational& c) {
    if (c != 0) terms_[{dz, dmu}] = c;
}

void BiPoly::add_term(int dz, int dmu, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({dz, dmu}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int BiPoly::deg_z() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.z;
}

int BiPoly::deg_mu() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.mu);
    return d;
}

bool BiPoly::is_rational_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Mono{0, 0});
}

Rational BiPoly::coefficient(int dz, int dmu) const {
    auto it = terms_.find({dz, dmu});
    return it == terms_.end() ? Rational(0) : it->second;
}

BiPoly BiPoly::coeff_z(int k) const {
    BiPoly out;
    for (auto it = terms_.lower_bound({k, 0}); it != terms_.end() && it->first.z == k; ++it)
        out.terms_[{0, it->first.mu}] = it->second;
    return out;
}

Rational BiPoly::as_rational() const {
    if (is_zero()) return Rational(0);
    if (!is_rational_constant()) throw MathError("polynomial is not a rational constant");
    return terms_.begin()->second;
}

int BiPoly::valuation_z() const {
    if (terms_.empty()) throw ZeroPolynomialError("valuation of the zero polynomial");
    return terms_.begin()->first.z;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m.z, m.mu, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m.z, m.mu, Rational(-c));
    return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [m, v] : terms_) v *= c;
    }
    return *this;
}

BiPoly BiPoly::operator-() const {
    BiPoly out(*this);
    for (auto& [m, v] : out.terms_) v = -v;
    return out;
}

BiPoly mul_with_split_threshold(const BiPoly& a, const BiPoly& b, std::size_t threshold) {
    if (a.is_zero() || b.is_zero()) return BiPoly();
    std::size_t pairs = a.term_count() * b.term_count();
    if (pairs <= threshold || a.term_count() == 1 || b.term_count() == 1) {
        // direct sparse accumulation
        BiPoly out;
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [mb, cb] : b.terms())
                out.add_term(ma.z + mb.z, ma.mu + mb.mu, ca * cb);
        return out;
    }
    const BiPoly& big = a.term_count() >= b.term_count() ? a : b;
    const BiPoly& small = a.term_count() >= b.term_count() ? b : a;
    auto mid = big.terms().begin();
    std::advance(mid, big.term_count() / 2);
    BiPoly lo, hi;
    for (auto it = big.terms().begin(); it != mid; ++it) lo.terms_[it->first] = it->second;
    for (auto it = mid; it != big.terms().end(); ++it) hi.terms_[it->first] = it->second;
    return mul_with_split_threshold(small, lo, threshold) +
           mul_with_split_threshold(small, hi, threshold);
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    return mul_with_split_threshold(a, b, kMulSplitThreshold);
}

BiPoly BiPoly::pow(unsigned e) const {
    BiPoly result(1L);
    BiPoly base(*this);
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

BiPoly BiPoly::derivative_z() const {
    BiPoly out;
    for (const auto& [m, c] : terms_)
        if (m.z > 0) out.terms_[{m.z - 1, m.mu}] = c * m.z;
    return out;
}

BiPoly BiPoly::derivative_z(int order) const {
    BiPoly out(*this);
    for (int i = 0; i < order; ++i) out = out.derivative_z();
    return out;
}

BiPoly BiPoly::mul_z_power(int k) const {
    BiPoly out;
    for (const auto& [m, c] : terms_) out.terms_[{m.z + k, m.mu}] = c;
    return out;
}

BiPoly BiPoly::eval_mu(const Rational& mu0) const {
    BiPoly out;
    for (const auto& [m, c] : terms_) {
        Rational p(1);
        for (int i = 0; i < m.mu; ++i) p *= mu0;
        out.add_term(m.z, 0, c * p);
    }
    return out;
}

BiPoly BiPoly::eval_z(const Rational& z0) const {
    BiPoly out;
    for (const auto& [m, c] : terms_) {
        Rational p(1);
        for (int i = 0; i < m.z; ++i) p *= z0;
        out.add_term(0, m.mu, c * p);
    }
    return out;
}

BiPoly BiPoly::shift_mu(const Rational& delta) const {
    // binomial expansion of (mu + delta)^k, cached per degree
    int dm = deg_mu();
    std::vector<std::vector<Rational>> powers(std::max(dm + 1, 1));
    powers[0] = {Rational(1)};
    for (int k = 1; k <= dm; ++k) {
        const auto& prev = powers[k - 1];
        std::vector<Rational> cur(k + 1, Rational(0));
        for (int i = 0; i < (int)prev.size(); ++i) {
            cur[i + 1] += prev[i];
            cur[i] += prev[i] * delta;
        }
        powers[k] = std::move(cur);
    }
    BiPoly out;
    for (const auto& [m, c] : terms_) {
        const auto& expansion = powers[m.mu];
        for (int i = 0; i < (int)expansion.size(); ++i)
            if (expansion[i] != 0) out.add_term(m.z, i, c * expansion[i]);
    }
    return out;
}

BiPoly BiPoly::negate_vars() const {
    BiPoly out;
    for (const auto& [m, c] : terms_)
        out.terms_[m] = ((m.z + m.mu) % 2 == 0) ? c : Rational(-c);
    return out;
}

std::vector<Rational> BiPoly::univariate_in_z() const {
    if (deg_mu() > 0) throw MathError("polynomial depends on mu");
    std::vector<Rational> coeffs(std::max(deg_z() + 1, 0), Rational(0));
    for (const auto& [m, c] : terms_) coeffs[m.z] = c;
    return coeffs;
}

std::vector<Rational> BiPoly::univariate_in_mu() const {
    if (deg_z() > 0) throw MathError("polynomial depends on z");
    std::vector<Rational> coeffs(std::max(deg_mu() + 1, 0), Rational(0));
    for (const auto& [m, c] : terms_) coeffs[m.mu] = c;
    return coeffs;
}

BiPoly BiPoly::from_univariate_in_mu(const std::vector<Rational>& coeffs) {
    BiPoly out;
    for (int i = 0; i < (int)coeffs.size(); ++i) out.set_term(0, i, coeffs[i]);
    return out;
}

BiPoly BiPoly::from_univariate_in_z(const std::vector<Rational>& coeffs) {
    BiPoly out;
    for (int i = 0; i < (int)coeffs.size(); ++i) out.set_term(i, 0, coeffs[i]);
    return out;
}

std::string BiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // print high-degree terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational abs = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_vars = m.z > 0 || m.mu > 0;
        if (!has_vars || abs != 1) {
            os << rational_to_string(abs);
            if (has_vars) os << "*";
        }
        if (m.z > 0) {
            os << "z";
            if (m.z > 1) os << "^" << m.z;
            if (m.mu > 0) os << "*";
        }
        if (m.mu > 0) {
            os << "mu";
            if (m.mu > 1) os << "^" << m.mu;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Division

PseudoDivision pseudo_divide_z(const BiPoly& num, const BiPoly& den) {
    if (den.is_zero()) throw DivisionByZeroError("pseudo-division by zero");
    int d = den.deg_z();
    if (d < 1) throw MathError("pseudo_divide_z requires deg_z(den) >= 1");
    const BiPoly lead = den.leading_coeff_z();
    const bool lead_is_one = is_one(lead);

    int e = std::max(num.deg_z() - d + 1, 0);
    BiPoly q;
    BiPoly r = num;
    int remaining = e;
    while (!r.is_zero() && r.deg_z() >= d) {
        int delta = r.deg_z() - d;
        BiPoly t = r.leading_coeff_z().mul_z_power(delta);
        if (lead_is_one) {
            q += t;
            r -= t * den;
        } else {
            q = q * lead + t;
            r = r * lead - t * den;
        }
        --remaining;
    }
    if (!lead_is_one && remaining > 0) {
        BiPoly scale = lead.pow((unsigned)remaining);
        q = q * scale;
        r = r * scale;
    }
    PseudoDivision out;
    out.quotient = std::move(q);
    out.remainder = std::move(r);
    out.multiplier = lead_is_one ? BiPoly(1L) : lead.pow((unsigned)e);
    return out;
}

namespace {

// Plain long division of univariate rational-coefficient polynomials.
// Returns {quotient, remainder}.
std::pair<std::vector<Rational>, std::vector<Rational>> uni_divmod(
    std::vector<Rational> num, const std::vector<Rational>& den) {
    auto degree = [](const std::vector<Rational>& p) {
        for (int i = (int)p.size() - 1; i >= 0; --i)
            if (p[i] != 0) return i;
        return -1;
    };
    int dden = degree(den);
    assert(dden >= 0);
    int dnum = degree(num);
    std::vector<Rational> q(std::max(dnum - dden + 1, 0), Rational(0));
    while (dnum >= dden) {
        Rational c = num[dnum] / den[dden];
        q[dnum - dden] = c;
        for (int i = 0; i <= dden; ++i) num[dnum - dden + i] -= c * den[i];
        while (dnum >= 0 && num[dnum] == 0) --dnum;
    }
    num.resize(std::max(dnum + 1, 0));
    return {std::move(q), std::move(num)};
}

int uni_degree(const std::vector<Rational>& p) {
    for (int i = (int)p.size() - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

// Primitive integer form: scale by a positive rational so entries are
// coprime integers; sign fixed so the leading coefficient is positive.
std::vector<Rational> uni_primitive(std::vector<Rational> p) {
    int d = uni_degree(p);
    if (d < 0) return {};
    Integer den_lcm = 1;
    for (const auto& c : p)
        if (c != 0) den_lcm = lcm(den_lcm, c.get_den());
    Integer g = 0;
    for (const auto& c : p)
        if (c != 0) g = gcd(g, Integer(c.get_num() * (den_lcm / c.get_den())));
    Rational scale(den_lcm, g);
    scale.canonicalize();
    if (p[d] < 0) scale = -scale;
    for (auto& c : p) c *= scale;
    return p;
}

std::vector<Rational> uni_gcd(std::vector<Rational> a, std::vector<Rational> b) {
    a = uni_primitive(std::move(a));
    b = uni_primitive(std::move(b));
    if (uni_degree(a) < uni_degree(b)) std::swap(a, b);
    while (uni_degree(b) >= 0) {
        auto [q, r] = uni_divmod(a, b);
        a = std::move(b);
        b = uni_primitive(std::move(r));
    }
    return a;
}

}  // namespace

Division divide(const BiPoly& num, const BiPoly& den) {
    if (den.is_zero()) throw DivisionByZeroError("division by the zero polynomial");
    Division out;
    out.multiplier = BiPoly(1L);
    if (num.is_zero()) {
        out.quotient = BiPoly();
        return out;
    }
    if (den.is_rational_constant()) {
        Rational inv = 1 / den.as_rational();
        BiPoly q = num;
        q *= inv;
        out.raw_quotient = q;
        out.quotient = std::move(q);
        return out;
    }
    if (den.deg_z() == 0) {
        // mu-only divisor: divide every z-slice over Q[mu]
        std::vector<Rational> d = den.univariate_in_mu();
        BiPoly q, r;
        bool clean = true;
        for (int k = num.valuation_z(); k <= num.deg_z(); ++k) {
            BiPoly slice = num.coeff_z(k);
            if (slice.is_zero()) continue;
            auto [qk, rk] = uni_divmod(slice.univariate_in_mu(), d);
            q += BiPoly::from_univariate_in_mu(qk).mul_z_power(k);
            BiPoly rem_k = BiPoly::from_univariate_in_mu(rk).mul_z_power(k);
            if (!rem_k.is_zero()) clean = false;
            r += rem_k;
        }
        out.raw_quotient = q;
        out.remainder = std::move(r);
        if (clean) out.quotient = std::move(q);
        return out;
    }
    PseudoDivision pd = pseudo_divide_z(num, den);
    out.raw_quotient = pd.quotient;
    out.remainder = pd.remainder;
    out.multiplier = pd.multiplier;
    if (!out.remainder.is_zero()) return out;
    if (is_one(out.multiplier)) {
        out.quotient = out.raw_quotient;
        return out;
    }
    Division clear = divide(out.raw_quotient, out.multiplier);
    if (clear.quotient) out.quotient = std::move(*clear.quotient);
    return out;
}

BiPoly exact_quotient(const BiPoly& num, const BiPoly& den) {
    Division d = divide(num, den);
    if (!d.quotient)
        throw NotDivisibleError(
            "exact division failed: remainder has " +
                std::to_string(d.remainder.term_count()) + " terms, deg_z " +
                std::to_string(d.remainder.deg_z()),
            d.remainder);
    return std::move(*d.quotient);
}

bool divides(const BiPoly& den, const BiPoly& num) {
    return divide(num, den).quotient.has_value();
}

// ---------------------------------------------------------------------------
// Content and normalization

BiPoly content_mu(const BiPoly& f) {
    if (f.is_zero()) return BiPoly();
    std::vector<Rational> acc;
    for (int k = f.valuation_z(); k <= f.deg_z(); ++k) {
        BiPoly slice = f.coeff_z(k);
        if (slice.is_zero()) continue;
        acc = acc.empty() ? uni_primitive(slice.univariate_in_mu())
                          : uni_gcd(std::move(acc), slice.univariate_in_mu());
        if (uni_degree(acc) == 0 && acc[0] == 1) break;
    }
    return BiPoly::from_univariate_in_mu(acc);
}

BiPoly primitive_part_z(const BiPoly& f) {
    if (f.is_zero()) return f;
    return exact_quotient(f, content_mu(f));
}

BiPoly normalize_primitive(const BiPoly& f) {
    if (f.is_zero()) return f;
    Integer den_lcm = 1;
    for (const auto& [m, c] : f.terms()) den_lcm = lcm(den_lcm, c.get_den());
    Integer g = 0;
    for (const auto& [m, c] : f.terms())
        g = gcd(g, Integer(c.get_num() * (den_lcm / c.get_den())));
    Rational scale(den_lcm, g);
    scale.canonicalize();
    if (f.terms().rbegin()->second < 0) scale = -scale;
    BiPoly out = f;
    out *= scale;
    return out;
}

// ---------------------------------------------------------------------------
// GCD

BiPoly gcd_z(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() && b.is_zero()) throw BothZeroError("gcd of two zero polynomials");
    if (a.is_zero()) return normalize_primitive(primitive_part_z(b));
    if (b.is_zero()) return normalize_primitive(primitive_part_z(a));
    if (a.deg_z() == 0 && b.deg_z() == 0) {
        auto g = uni_gcd(a.univariate_in_mu(), b.univariate_in_mu());
        return BiPoly::from_univariate_in_mu(g);
    }
    // a z-constant is a unit of Q(mu)[z]
    if (a.deg_z() == 0 || b.deg_z() == 0) return BiPoly(1L);

    BiPoly x = primitive_part_z(a);
    BiPoly y = primitive_part_z(b);
    if (x.deg_z() < y.deg_z()) std::swap(x, y);
    BiPoly g(1L), h(1L);
    while (true) {
        int delta = x.deg_z() - y.deg_z();
        BiPoly r = pseudo_divide_z(x, y).remainder;
        if (r.is_zero()) return normalize_primitive(primitive_part_z(y));
        if (r.deg_z() == 0) return BiPoly(1L);
        x = y;
        y = exact_quotient(r, g * h.pow((unsigned)delta));
        g = x.leading_coeff_z();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = exact_quotient(g.pow((unsigned)delta), h.pow((unsigned)(delta - 1)));
        }
    }
}

// ---------------------------------------------------------------------------
// Resultant and discriminant

BiPoly resultant_z(const BiPoly& a, const BiPoly& b) {
    if (a.deg_z() < 1 || b.deg_z() < 1)
        throw DegreeTooLowError("resultant_z requires deg_z >= 1 on both inputs");
    int sign = 1;
    BiPoly x = a, y = b;
    if (x.deg_z() < y.deg_z()) {
        std::swap(x, y);
        if ((x.deg_z() & 1) && (y.deg_z() & 1)) sign = -sign;
    }
    BiPoly g(1L), h(1L);
    // subresultant sequence; the g,h bookkeeping keeps every division exact
    while (true) {
        int dx = x.deg_z();
        int dy = y.deg_z();
        int delta = dx - dy;
        if ((dx & 1) && (dy & 1)) sign = -sign;
        BiPoly r = pseudo_divide_z(x, y).remainder;
        if (r.is_zero()) return BiPoly();
        x = y;
        y = exact_quotient(r, g * h.pow((unsigned)delta));
        g = x.leading_coeff_z();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = exact_quotient(g.pow((unsigned)delta), h.pow((unsigned)(delta - 1)));
        }
        if (y.deg_z() == 0) {
            int d = x.deg_z();
            BiPoly res = y.pow((unsigned)d);
            if (d > 1) res = exact_quotient(res, h.pow((unsigned)(d - 1)));
            if (sign < 0) res *= Rational(-1);
            return res;
        }
    }
}

BiPoly discriminant_z(const BiPoly& f) {
    int m = f.deg_z();
    if (m < 2) throw DegreeTooLowError("discriminant requires deg_z >= 2");
    BiPoly res = resultant_z(f, f.derivative_z());
    BiPoly dis = res.is_zero() ? BiPoly() : exact_quotient(res, f.leading_coeff_z());
    if ((m * (m - 1) / 2) % 2 == 1) dis *= Rational(-1);
    return dis;
}

}  // namespace umemura
