#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "umemura/rational.hpp"

namespace umemura {

class MathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class DivisionByZeroError : public MathError {
public:
    using MathError::MathError;
};
class ZeroPolynomialError : public MathError {
public:
    using MathError::MathError;
};
class DegreeTooLowError : public MathError {
public:
    using MathError::MathError;
};
class BothZeroError : public MathError {
public:
    using MathError::MathError;
};
class IoError : public MathError {
public:
    using MathError::MathError;
};

// Exact sparse bivariate polynomial in z and mu over the rationals.
//
// Canonical form: term keys are unique, ordered (deg_z, deg_mu)
// lexicographically with z major, and no stored coefficient is zero.
// The zero polynomial is the empty term map.  Equality is structural.
class BiPoly {
public:
    struct Mono {
        int z = 0;
        int mu = 0;
        friend auto operator<=>(const Mono&, const Mono&) = default;
    };
    using Terms = std::map<Mono, Rational>;

    BiPoly() = default;
    explicit BiPoly(const Rational& c) { set_term(0, 0, c); }
    explicit BiPoly(long c) { set_term(0, 0, Rational(c)); }

    static BiPoly z() { return term(Rational(1), 1, 0); }
    static BiPoly mu() { return term(Rational(1), 0, 1); }
    static BiPoly term(const Rational& c, int deg_z, int deg_mu) {
        BiPoly p;
        p.set_term(deg_z, deg_mu, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    // -1 for the zero polynomial.
    int deg_z() const;
    int deg_mu() const;
    bool is_rational_constant() const;
    bool is_mu_only() const { return deg_z() <= 0; }
    bool is_z_only() const { return deg_mu() <= 0; }

    Rational coefficient(int deg_z, int deg_mu) const;
    Rational constant_term() const { return coefficient(0, 0); }
    // The mu-polynomial multiplying z^k.
    BiPoly coeff_z(int k) const;
    BiPoly leading_coeff_z() const { return coeff_z(deg_z()); }
    // As a rational constant; throws MathError when the polynomial is not constant.
    Rational as_rational() const;

    // Multiplicity of the root z = 0; throws ZeroPolynomialError on zero input.
    int valuation_z() const;

    BiPoly& operator+=(const BiPoly& rhs);
    BiPoly& operator-=(const BiPoly& rhs);
    BiPoly& operator*=(const Rational& c);
    BiPoly operator-() const;
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
    friend BiPoly operator*(const Rational& c, BiPoly a) { return a *= c; }
    bool operator==(const BiPoly&) const = default;

    BiPoly pow(unsigned e) const;
    BiPoly derivative_z() const;
    BiPoly derivative_z(int order) const;
    BiPoly mul_z_power(int k) const;

    // Exact substitutions.
    BiPoly eval_mu(const Rational& mu0) const;
    BiPoly eval_z(const Rational& z0) const;
    BiPoly shift_mu(const Rational& delta) const;  // mu -> mu + delta
    BiPoly negate_vars() const;                    // z -> -z, mu -> -mu

    // Rational coefficients of a univariate polynomial, low degree first.
    // Requires the other variable to be absent.
    std::vector<Rational> univariate_in_z() const;
    std::vector<Rational> univariate_in_mu() const;
    static BiPoly from_univariate_in_mu(const std::vector<Rational>& coeffs);
    static BiPoly from_univariate_in_z(const std::vector<Rational>& coeffs);

    std::string str() const;

private:
    void set_term(int dz, int dmu, const Rational& c);
    void add_term(int dz, int dmu, const Rational& c);
    Terms terms_;

    friend BiPoly mul_with_split_threshold(const BiPoly&, const BiPoly&, std::size_t);
};

// Term-pair count above which multiplication splits the larger operand in
// half (canonical order) and recurses; results are independent of the value.
inline constexpr std::size_t kMulSplitThreshold = 1u << 14;

BiPoly mul_with_split_threshold(const BiPoly& a, const BiPoly& b, std::size_t threshold);

class NotDivisibleError : public MathError {
public:
    NotDivisibleError(std::string msg, BiPoly remainder)
        : MathError(std::move(msg)), remainder_(std::move(remainder)) {}
    const BiPoly& remainder() const { return remainder_; }

private:
    BiPoly remainder_;
};

// Pseudo-division in z: multiplier * num = quotient * den + remainder with
// deg_z(remainder) < deg_z(den) and multiplier = lc_z(den)^e,
// e = max(deg_z(num) - deg_z(den) + 1, 0).  Requires deg_z(den) >= 1.
struct PseudoDivision {
    BiPoly quotient;
    BiPoly remainder;
    BiPoly multiplier;
};
PseudoDivision pseudo_divide_z(const BiPoly& num, const BiPoly& den);

// Result of exact bivariate division.  `quotient` is engaged iff
// num = quotient * den holds exactly over Q[z, mu]; that requires the
// division remainder to vanish and, for divisors with deg_z >= 1, the raw
// pseudo-quotient to clear the pseudo-multiplier to polynomial
// mu-coefficients.  In all cases
//     multiplier * num = raw_quotient * den + remainder.
struct Division {
    std::optional<BiPoly> quotient;
    BiPoly raw_quotient;
    BiPoly remainder;
    BiPoly multiplier;
};
Division divide(const BiPoly& num, const BiPoly& den);
BiPoly exact_quotient(const BiPoly& num, const BiPoly& den);
bool divides(const BiPoly& den, const BiPoly& num);

// Content of f with respect to z: the (normalized) gcd over Q[mu] of all
// z-slice coefficients.  Zero input yields zero.
BiPoly content_mu(const BiPoly& f);
BiPoly primitive_part_z(const BiPoly& f);
// Scales f by a positive rational so coefficients are coprime integers and
// the canonical leading term is positive.
BiPoly normalize_primitive(const BiPoly& f);

// GCD in z over the field Q(mu): subresultant PRS on the inputs, returned
// primitive (mu-content removed, coprime integer coefficients, positive
// leading term).  When both inputs have deg_z = 0 the univariate gcd in mu
// is returned instead, same normalization.  Throws BothZeroError.
BiPoly gcd_z(const BiPoly& a, const BiPoly& b);

// Res_z(a, b) with the Sylvester-determinant sign, computed by the
// subresultant pseudo-remainder sequence.  Result is a polynomial in mu
// only.  Requires deg_z >= 1 on both sides.
BiPoly resultant_z(const BiPoly& a, const BiPoly& b);

// Dis(f) = (-1)^{m(m-1)/2} Res_z(f, f') / lc_z(f), m = deg_z(f) >= 2.
BiPoly discriminant_z(const BiPoly& f);

}  // namespace umemura
