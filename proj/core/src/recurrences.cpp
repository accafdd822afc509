#include "umemura/recurrences.hpp"

namespace umemura {

std::string family_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::YablonskiiVorobev: return "yv";
        case FamilyTag::UmemuraS: return "umemura";
        case FamilyTag::UmemuraT: return "umemura_t";
        case FamilyTag::Tau: return "tau";
        case FamilyTag::ReverseBessel: return "bessel";
    }
    return "unknown";
}

MuMode MuMode::parse(const std::string& text) {
    if (text == "symbolic") return sym();
    return at(rational_from_string(text));
}

std::string MuMode::name() const {
    return symbolic ? "symbolic" : rational_to_string(value);
}

const BiPoly& PolySequence::at(int n) const {
    auto it = entries_.find(n);
    if (it == entries_.end())
        throw IndexMissingError("sequence " + family_name(family_.tag) +
                                " has no entry for n = " + std::to_string(n));
    return it->second;
}

int PolySequence::min_index() const {
    if (entries_.empty()) throw IndexMissingError("empty sequence");
    return entries_.begin()->first;
}

int PolySequence::max_index() const {
    if (entries_.empty()) throw IndexMissingError("empty sequence");
    return entries_.rbegin()->first;
}

bool PolySequence::satisfies_recurrence() const {
    for (const auto& [n, s_n] : entries_) {
        if (!contains(n - 1) || !contains(n + 1)) continue;
        const BiPoly& prev = at(n - 1);
        const BiPoly& next = at(n + 1);
        BiPoly lhs = next * prev;
        BiPoly rhs;
        if (family_.tag == FamilyTag::YablonskiiVorobev) {
            rhs = (s_n * s_n).mul_z_power(1) - Rational(4) * op_ell(s_n);
        } else if (family_.tag == FamilyTag::UmemuraS) {
            rhs = neg_z_op_Lz(s_n) + (BiPoly::z() + family_.mu.mu_poly()) * (s_n * s_n);
        } else {
            return true;
        }
        if (lhs != rhs) return false;
    }
    return true;
}

BiPoly yv_next(const BiPoly& q_n, const BiPoly& q_nm1, int n) {
    if (q_nm1.is_zero()) throw DivisionByZeroError("yv_next: Q_{n-1} = 0");
    BiPoly numerator = (q_n * q_n).mul_z_power(1) - Rational(4) * op_ell(q_n);
    try {
        return exact_quotient(numerator, q_nm1);
    } catch (const NotDivisibleError& e) {
        throw NotDivisibleError("Q_" + std::to_string(n + 1) +
                                    " is not a polynomial: " + e.what(),
                                e.remainder());
    }
}

BiPoly umemura_s_next(const BiPoly& s_n, const BiPoly& s_nm1, const BiPoly& mu_poly) {
    if (s_nm1.is_zero()) throw DivisionByZeroError("umemura_s_next: S_{n-1} = 0");
    BiPoly numerator = neg_z_op_Lz(s_n) + (BiPoly::z() + mu_poly) * (s_n * s_n);
    return exact_quotient(numerator, s_nm1);
}

RationalFunction umemura_t_from_s(const BiPoly& s_n, int n) {
    if (n < 0) throw MathError("umemura_t_from_s: n must be >= 0");
    return RationalFunction(s_n, BiPoly(1L).mul_z_power(n * (n + 1) / 2));
}

PhiTriple phi_direct(const PolySequence& s, int n) {
    const BiPoly& s_n = s.at(n);
    PhiTriple t;
    t.phi = s_n.eval_z(0);
    t.dphi = s_n.derivative_z().eval_z(0);
    t.ddphi = s_n.derivative_z(2).eval_z(0);
    return t;
}

PhiSequence::PhiSequence(const PolySequence& s) {
    for (const auto& [n, p] : s.entries()) triples_[n] = phi_direct(s, n);
}

const PhiTriple& PhiSequence::at(int n) const {
    auto it = triples_.find(n);
    if (it == triples_.end())
        throw IndexMissingError("phi sequence has no entry for n = " + std::to_string(n));
    return it->second;
}

int PhiSequence::max_index() const {
    if (triples_.empty()) throw IndexMissingError("empty phi sequence");
    return triples_.rbegin()->first;
}

BiPoly phi_next_recurrence(const BiPoly& phi_n, const BiPoly& phi_nm1,
                           const BiPoly& phi_nm2, const BiPoly& phi_nm3, int n) {
    if (n < 3) throw MathError("phi recurrence is stated for n >= 3 only");
    if (phi_nm2.is_zero()) throw DivisionByZeroError("phi recurrence: phi_{n-2} = 0");
    BiPoly factor = Rational(2) * BiPoly::mu() * BiPoly::mu() +
                    BiPoly(Rational(-2 * n * n + 2 * n - 1));
    BiPoly numerator = phi_n * phi_nm1 * phi_nm2 * factor - phi_n * phi_n * phi_nm3;
    return exact_quotient(numerator, phi_nm2 * phi_nm2);
}

BiPoly phi_closed_form(int n) {
    if (n < 1) throw MathError("phi_closed_form requires n >= 1");
    BiPoly out(1L);
    for (int i = 0; i < n; ++i) {
        int exponent = (i % 2 == 0) ? (n + 1) / 2 - i / 2 : n / 2 - (i - 1) / 2;
        if (exponent <= 0) continue;
        BiPoly base = i == 0
                          ? BiPoly::mu()
                          : BiPoly::mu() * BiPoly::mu() - BiPoly(Rational(i) * Rational(i));
        out = out * base.pow((unsigned)exponent);
    }
    return out;
}

BiPoly reverse_bessel(int n) {
    if (n < 0) throw MathError("reverse_bessel requires n >= 0");
    // n!/(-2)^n L_n^{(a)}(2z) with a = -2n-1, where
    // L_n^{(a)}(x) = sum_i (-1)^i binom(n+a, n-i) x^i / i!
    Rational front(1);
    for (int i = 1; i <= n; ++i) front *= i;
    Rational neg2pow(1);
    for (int i = 0; i < n; ++i) neg2pow *= -2;
    front /= neg2pow;

    BiPoly out;
    for (int i = 0; i <= n; ++i) {
        // binom(-n-1, n-i) as a falling-factorial product
        Rational binom(1);
        for (int t = 0; t < n - i; ++t) {
            binom *= Rational(-n - 1 - t);
            binom /= Rational(t + 1);
        }
        Rational ifact(1);
        for (int t = 2; t <= i; ++t) ifact *= t;
        Rational two_pow(1);
        for (int t = 0; t < i; ++t) two_pow *= 2;
        Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
        out += BiPoly::term(front * sign * binom * two_pow / ifact, i, 0);
    }
    return out;
}

BiPoly reverse_bessel_by_recurrence(int n) {
    BiPoly prev(1L);                       // theta_0
    BiPoly cur = BiPoly::z() + BiPoly(1L);  // theta_1
    if (n == 0) return prev;
    for (int k = 1; k < n; ++k) {
        BiPoly next = Rational(2 * k + 1) * cur + prev.mul_z_power(2);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

PolySequence generate_yablonskii_vorobev(int n_max) {
    PolySequence seq(PolyFamily{FamilyTag::YablonskiiVorobev, MuMode::sym()}, "recurrence");
    seq.set(-1, BiPoly(1L));
    seq.set(0, BiPoly(1L));
    if (n_max >= 1) seq.set(1, BiPoly::z());
    for (int n = 1; n < n_max; ++n)
        seq.set(n + 1, yv_next(seq.at(n), seq.at(n - 1), n));
    return seq;
}

PolySequence generate_umemura_s(int n_max, const MuMode& mode) {
    PolySequence seq(PolyFamily{FamilyTag::UmemuraS, mode}, "recurrence");
    seq.set(-1, BiPoly(1L));
    seq.set(0, BiPoly(1L));
    BiPoly mu_poly = mode.mu_poly();
    for (int n = 0; n < n_max; ++n) {
        try {
            seq.set(n + 1, umemura_s_next(seq.at(n), seq.at(n - 1), mu_poly));
        } catch (const NotDivisibleError& e) {
            throw NotDivisibleError("S_" + std::to_string(n + 1) + " at mu = " +
                                        mode.name() + " is not a polynomial: " + e.what(),
                                    e.remainder());
        }
    }
    return seq;
}

PolySequence generate_reverse_bessel(int n_max) {
    PolySequence seq(PolyFamily{FamilyTag::ReverseBessel, MuMode::at(Rational(1))},
                     "recurrence");
    for (int n = 0; n <= n_max; ++n) seq.set(n, reverse_bessel(n));
    return seq;
}

}  // namespace umemura
