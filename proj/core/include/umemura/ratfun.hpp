#pragma once

#include "umemura/bipoly.hpp"

namespace umemura {

class ZeroArgumentError : public MathError {
public:
    using MathError::MathError;
};

// Quotient of two BiPoly.  Arithmetic is lazy: no implicit gcd reduction,
// equality is by cross-multiplication and therefore independent of the
// reduction state.  Invariant: den != 0.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(1L) {}
    explicit RationalFunction(BiPoly p) : num_(std::move(p)), den_(1L) {}
    RationalFunction(BiPoly num, BiPoly den);

    static RationalFunction one() { return RationalFunction(BiPoly(1L)); }

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;  // true when den divides num exactly

    RationalFunction operator+(const RationalFunction& rhs) const;
    RationalFunction operator-(const RationalFunction& rhs) const;
    RationalFunction operator*(const RationalFunction& rhs) const;
    RationalFunction operator/(const RationalFunction& rhs) const;  // DivisionByZeroError
    RationalFunction operator-() const { return RationalFunction(-num_, den_); }

    RationalFunction derivative() const;  // (num' den - num den') / den^2

    // Reduce by gcd_z and scale so the denominator is in normalized
    // primitive form.
    RationalFunction normalized() const;
    bool equals(const RationalFunction& rhs) const;  // num*rhs.den == rhs.num*den

private:
    BiPoly num_;
    BiPoly den_;
};

// d/dz ln(p/q) = p'/p - q'/q, returned over the denominator p*q.
// Throws ZeroArgumentError when p or q vanishes.
RationalFunction logderiv_ratio(const BiPoly& p, const BiPoly& q);

// Hirota-like operator for the second Painleve equation: l(f) = f f'' - (f')^2.
BiPoly op_ell(const BiPoly& f);

// L_z(f) = f f'' - (f')^2 + (f/z) f'.  This is the sign used throughout the
// generation and divisibility machinery.
RationalFunction op_Lz(const RationalFunction& f);

// Variant with the last term negated, f f'' - (f')^2 - (f/z) f'; kept only
// so documentation tests can pin down which sign the recurrences need.
RationalFunction op_Lz_minus_variant(const RationalFunction& f);

// For polynomial f, -z * L_z(f) = -z (f f'' - (f')^2) - f f' is again a
// polynomial; this is the recurrence-numerator building block.
BiPoly neg_z_op_Lz(const BiPoly& f);

}  // namespace umemura
