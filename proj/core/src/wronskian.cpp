#include "umemura/wronskian.hpp"

namespace umemura {

BiPoly binom_mu(int k) {
    BiPoly out(1L);
    for (int t = 0; t < k; ++t) {
        out = out * (BiPoly::mu() - BiPoly(Rational(t)));
        out *= Rational(1, t + 1);
    }
    return out;
}

BiPoly gen_p(int j) {
    if (j < 0) return BiPoly();
    BiPoly out;
    std::vector<Rational> factorials(j + 1, Rational(1));
    for (int t = 1; t <= j; ++t) factorials[t] = factorials[t - 1] * t;
    for (int k = 0; k <= j; ++k)
        out += binom_mu(k).mul_z_power(j - k) * Rational(Rational(1) / factorials[j - k]);
    return out;
}

BiPoly laguerre_shifted(int k) {
    // L_k^{(a)}(x) = sum_i (-1)^i binom(k+a, k-i) x^i / i!  with a = mu - k,
    // so binom(k+a, k-i) is the rising product (mu-k+i+1)...(mu) over (k-i)!.
    BiPoly out;
    for (int i = 0; i <= k; ++i) {
        BiPoly coeff(1L);
        for (int t = 1; t <= k - i; ++t) {
            coeff = coeff * (BiPoly::mu() + BiPoly(Rational(-k + i + t)));
            coeff *= Rational(1, t);
        }
        Rational ifact(1);
        for (int t = 2; t <= i; ++t) ifact *= t;
        // x^i = (-z)^i cancels the (-1)^i prefactor
        out += coeff.mul_z_power(i) * Rational(Rational(1) / ifact);
    }
    return out;
}

bool laguerre_crosscheck(int j) {
    return gen_p(j) == laguerre_shifted(j);
}

BiPoly bareiss_determinant(std::vector<std::vector<BiPoly>> m) {
    const int n = (int)m.size();
    if (n == 0) return BiPoly(1L);
    for (const auto& row : m)
        if ((int)row.size() != n) throw MathError("determinant of a non-square matrix");
    int sign = 1;
    BiPoly prev(1L);
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return BiPoly();
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BiPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = exact_quotient(num, prev);
            }
            m[i][k] = BiPoly();
        }
        prev = m[k][k];
    }
    BiPoly det = m[n - 1][n - 1];
    if (sign < 0) det *= Rational(-1);
    return det;
}

BiPoly cofactor_determinant(const std::vector<std::vector<BiPoly>>& m) {
    const int n = (int)m.size();
    if (n == 0) return BiPoly(1L);
    if (n == 1) return m[0][0];
    BiPoly det;
    for (int j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<BiPoly>> minor;
        minor.reserve(n - 1);
        for (int i = 1; i < n; ++i) {
            std::vector<BiPoly> row;
            row.reserve(n - 1);
            for (int k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        BiPoly term = m[0][j] * cofactor_determinant(minor);
        if (j % 2 == 1) term *= Rational(-1);
        det += term;
    }
    return det;
}

BiPoly tau_n(int n) {
    if (n < 0) throw MathError("tau_n requires n >= 0");
    if (n == 0) return BiPoly(1L);
    std::vector<std::vector<BiPoly>> w(n, std::vector<BiPoly>(n));
    for (int col = 0; col < n; ++col) {
        w[0][col] = gen_p(2 * col + 1);
        for (int row = 1; row < n; ++row) w[row][col] = w[row - 1][col].derivative_z();
    }
    return bareiss_determinant(std::move(w));
}

Integer tau_normalization(int n) {
    Integer c = 1;
    for (int j = 1; j <= n; ++j) {
        Integer base = 2 * j + 1;
        for (int e = 0; e < n - j; ++e) c *= base;
    }
    return c;
}

RationalFunction w_from_tau(int n) {
    if (n < 1) throw MathError("w_from_tau requires n >= 1");
    BiPoly tau_prev = tau_n(n - 1).shift_mu(Rational(-1));
    BiPoly tau_cur = tau_n(n);
    return RationalFunction::one() + logderiv_ratio(tau_prev, tau_cur);
}

PolySequence generate_tau(int n_max) {
    PolySequence seq(PolyFamily{FamilyTag::Tau, MuMode::sym()}, "wronskian");
    for (int n = 0; n <= n_max; ++n) seq.set(n, tau_n(n));
    return seq;
}

}  // namespace umemura
