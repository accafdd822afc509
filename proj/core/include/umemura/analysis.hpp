#pragma once

#include <complex>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "umemura/recurrences.hpp"
#include "umemura/verify.hpp"

namespace umemura {

class ZeroConstantTermError : public MathError {
public:
    using MathError::MathError;
};

// Dis(S_n) together with its factorization into the tabulated shape
//   sign * prod p^e * mu^{e_0} * prod (mu^2 - k^2)^{e_k}.
struct DiscriminantRecord {
    int n = 0;
    BiPoly dis;                                   // polynomial in mu only
    std::vector<std::pair<BiPoly, int>> factored;  // (base, exponent)
    int sign = +1;

    BiPoly reassembled() const;  // sign * product of factors
};

// Factor shape shared by the computed discriminant and the closed form:
// prime_exponents maps odd primes to exponents; mu_exponents maps k >= 0 to
// the exponent of mu (k = 0) or of (mu^2 - k^2) (k >= 1).
struct FactoredDiscriminant {
    int sign = +1;
    std::map<long, long> prime_exponents;
    std::map<long, long> mu_exponents;
    bool operator==(const FactoredDiscriminant&) const = default;
    std::string str() const;
};

// Computes Dis(S_n) for 2 <= n <= n_max from the symbolic sequence and
// factors each by exact trial division.
std::vector<DiscriminantRecord> discriminant_table(int n_max, const PolySequence& s_symbolic);

// Trial division by mu and (mu^2 - k^2), k = 1..n, then prime factorization
// of the remaining integer constant over primes <= 2n+1.
FactoredDiscriminant factorize_discriminant(int n, const BiPoly& dis);

// c_m = m^3/6 + m^2/4 - m/6 - [1-(-1)^m]/8; always an integer.
long amdeberhan_c(int m);

// |Dis(S_n)| = prod_{j=1}^n (2j+1)^{(2j+1)(n-j)^2} prod_k (mu-k)^{c_{n-|k|}}
// with the sign negative iff n = 2 (mod 4), expanded into prime form.
FactoredDiscriminant amdeberhan_formula(int n);

// valuation_z(S_n at integer mu) == (n-|mu|)(n-|mu|+1)/2, for n > |mu|.
bool valuation_theorem_check(int n, long mu0, const PolySequence& s_at_mu);

// Strips z^sigma, reads a0, a1, a2 of the cofactor and tests a1 = mu a0 and
// a2 = (mu^2 - |mu|/(2m+1)) a0 / 2 with m = n - |mu|.  Throws
// ZeroConstantTermError when a0 = 0.
bool coefficient_relations_check(int n, long mu0, const PolySequence& s_at_mu,
                                 std::string* detail = nullptr);

struct ComplexRootSet {
    std::string mu_label;
    std::vector<std::complex<double>> roots;
    int zero_multiplicity = 0;
    // worst |q(w)| / ||q||_1 over the returned roots, q the radius-normalized
    // polynomial the iteration certifies
    double residual_bound = 0.0;
    // worst per-root backward error |q(w)| / sum_k |q_k| |w|^k; a computed
    // root is a true root of a coefficientwise (1 + backward_error)
    // perturbation of q
    double backward_error = 0.0;
    bool converged = true;
};

class NoConvergenceError : public MathError {
public:
    NoConvergenceError(std::string msg, ComplexRootSet best)
        : MathError(std::move(msg)), best_(std::move(best)) {}
    const ComplexRootSet& best() const { return best_; }

private:
    ComplexRootSet best_;
};

struct AberthOptions {
    int max_sweeps = 500;
    double rel_update_tol = 1e-13;
};

// Simultaneous (Aberth-Ehrlich) iteration on the square-free numeric part:
// the exact z^v factor is stripped first and reported as zero_multiplicity.
// Initial guesses lie on the Cauchy-bound circle, deterministically seeded.
ComplexRootSet aberth_roots(const BiPoly& p_univariate_in_z,
                            const AberthOptions& opts = {});
ComplexRootSet aberth_roots_numeric(std::vector<std::complex<double>> coeffs,
                                    int zero_multiplicity,
                                    const AberthOptions& opts = {});

// CSV "re,im" with one row per root, zero roots repeated at 0,0, ordered by
// (argument, modulus).  Throws IoError.
void export_roots(const ComplexRootSet& rs, const std::filesystem::path& path);
std::string roots_to_csv(const ComplexRootSet& rs);

// Shortest round-trip decimal form, always containing '.' or 'e'.
std::string format_double(double v);

}  // namespace umemura
