#pragma once

#include <vector>

#include "umemura/recurrences.hpp"

namespace umemura {

// Coefficients of (1+lambda)^mu exp(z lambda) = sum_j p_j(z; mu) lambda^j:
// p_j = sum_{k=0}^{j} binom(mu, k) z^{j-k} / (j-k)! with binom(mu, k) the
// falling-factorial polynomial in mu.  deg_z(p_j) = j.
BiPoly gen_p(int j);

// Falling-factorial binomial mu(mu-1)...(mu-k+1)/k! as a polynomial in mu.
BiPoly binom_mu(int k);

// Associated Laguerre polynomial L_k^{(mu-k)}(-z) expanded through the
// standard finite sum with the upper parameter kept symbolic.
BiPoly laguerre_shifted(int k);

// gen_p(j) == laguerre_shifted(j), checked exactly.
bool laguerre_crosscheck(int j);

// Fraction-free (Bareiss) determinant of a BiPoly matrix; swaps rows on zero
// pivots.  The cofactor expansion is kept as an independent route for tests.
BiPoly bareiss_determinant(std::vector<std::vector<BiPoly>> m);
BiPoly cofactor_determinant(const std::vector<std::vector<BiPoly>>& m);

// tau_n = W(p_1, p_3, ..., p_{2n-1}), the n x n Wronskian with rows indexed
// by d^{i-1}/dz^{i-1}.  tau_0 = 1.
BiPoly tau_n(int n);

// c_n = prod_{j=1}^{n} (2j+1)^{n-j}; S_n = c_n tau_n.
Integer tau_normalization(int n);

// w_n = 1 + d/dz ln(tau_{n-1}(z; mu-1) / tau_n(z; mu)), n >= 1.
RationalFunction w_from_tau(int n);

PolySequence generate_tau(int n_max);

}  // namespace umemura
