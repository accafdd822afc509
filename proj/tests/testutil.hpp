#pragma once

#include <random>
#include <vector>

#include "umemura/bipoly.hpp"
#include "umemura/wronskian.hpp"

namespace umemura::testutil {

inline Rational ratio(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline BiPoly zvar() { return BiPoly::z(); }
inline BiPoly muvar() { return BiPoly::mu(); }
inline BiPoly c(long v) { return BiPoly(v); }

// Small random polynomial with rational coefficients; deterministic under a
// caller-owned engine.
inline BiPoly random_bipoly(std::mt19937_64& rng, int max_deg_z, int max_deg_mu,
                            int terms, bool allow_fractions = true) {
    std::uniform_int_distribution<int> dz(0, max_deg_z), dmu(0, max_deg_mu);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, allow_fractions ? 4 : 1);
    BiPoly out;
    for (int t = 0; t < terms; ++t)
        out += BiPoly::term(ratio(num(rng), den(rng)), dz(rng), dmu(rng));
    return out;
}

inline BiPoly random_nonzero_bipoly(std::mt19937_64& rng, int max_deg_z, int max_deg_mu,
                                    int terms, bool allow_fractions = true) {
    while (true) {
        BiPoly p = random_bipoly(rng, max_deg_z, max_deg_mu, terms, allow_fractions);
        if (!p.is_zero()) return p;
    }
}

// Resultant through the Sylvester matrix and the fraction-free determinant;
// an independent route used to cross-check the subresultant implementation.
inline BiPoly sylvester_resultant(const BiPoly& a, const BiPoly& b) {
    int m = a.deg_z(), n = b.deg_z();
    int size = m + n;
    std::vector<std::vector<BiPoly>> s(size, std::vector<BiPoly>(size));
    for (int row = 0; row < n; ++row)
        for (int k = 0; k <= m; ++k) s[row][row + (m - k)] = a.coeff_z(k);
    for (int row = 0; row < m; ++row)
        for (int k = 0; k <= n; ++k) s[n + row][row + (n - k)] = b.coeff_z(k);
    return bareiss_determinant(std::move(s));
}

}  // namespace umemura::testutil
