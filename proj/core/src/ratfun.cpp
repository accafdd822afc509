#include "umemura/ratfun.hpp"

namespace umemura {

RationalFunction::RationalFunction(BiPoly num, BiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
}

bool RationalFunction::is_polynomial() const {
    return divides(den_, num_);
}

RationalFunction RationalFunction::operator+(const RationalFunction& rhs) const {
    return RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& rhs) const {
    return RationalFunction(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const {
    return RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& rhs) const {
    if (rhs.is_zero()) throw DivisionByZeroError("division by the zero rational function");
    return RationalFunction(num_ * rhs.den_, den_ * rhs.num_);
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative_z() * den_ - num_ * den_.derivative_z(),
                            den_ * den_);
}

RationalFunction RationalFunction::normalized() const {
    if (num_.is_zero()) return RationalFunction(BiPoly(), BiPoly(1L));
    BiPoly g = gcd_z(num_, den_);
    BiPoly n = exact_quotient(num_, g);
    BiPoly d = exact_quotient(den_, g);
    // also strip the common mu-content the z-gcd ignores
    BiPoly c = gcd_z(content_mu(n), content_mu(d));
    n = exact_quotient(n, c);
    d = exact_quotient(d, c);
    BiPoly dn = normalize_primitive(d);
    // scale numerator by the same rational factor applied to the denominator
    const auto& lead = d.terms().rbegin()->second;
    const auto& lead_n = dn.terms().rbegin()->second;
    Rational scale = lead_n / lead;
    n *= scale;
    return RationalFunction(std::move(n), std::move(dn));
}

bool RationalFunction::equals(const RationalFunction& rhs) const {
    return num_ * rhs.den_ == rhs.num_ * den_;
}

RationalFunction logderiv_ratio(const BiPoly& p, const BiPoly& q) {
    if (p.is_zero() || q.is_zero())
        throw ZeroArgumentError("logderiv_ratio of a zero polynomial");
    return RationalFunction(p.derivative_z() * q - p * q.derivative_z(), p * q);
}

BiPoly op_ell(const BiPoly& f) {
    BiPoly df = f.derivative_z();
    return f * f.derivative_z(2) - df * df;
}

RationalFunction op_Lz(const RationalFunction& f) {
    RationalFunction df = f.derivative();
    RationalFunction over_z(f.num(), f.den() * BiPoly::z());
    return f * df.derivative() - df * df + over_z * df;
}

RationalFunction op_Lz_minus_variant(const RationalFunction& f) {
    RationalFunction df = f.derivative();
    RationalFunction over_z(f.num(), f.den() * BiPoly::z());
    return f * df.derivative() - df * df - over_z * df;
}

BiPoly neg_z_op_Lz(const BiPoly& f) {
    BiPoly df = f.derivative_z();
    return -(f * f.derivative_z(2) - df * df).mul_z_power(1) - f * df;
}

}  // namespace umemura
