#pragma once

#include <map>
#include <string>

#include "umemura/ratfun.hpp"

namespace umemura {

class IndexMissingError : public MathError {
public:
    using MathError::MathError;
};

enum class FamilyTag { YablonskiiVorobev, UmemuraS, UmemuraT, Tau, ReverseBessel };

std::string family_name(FamilyTag tag);

// Either the symbolic indeterminate mu or an exact rational specialization.
struct MuMode {
    bool symbolic = true;
    Rational value = Rational(0);

    static MuMode sym() { return MuMode{}; }
    static MuMode at(Rational v) { return MuMode{false, std::move(v)}; }
    // "symbolic", or an exact rational literal such as "2", "-3", "1/2", "-3.7"
    static MuMode parse(const std::string& text);

    bool is_integer() const { return !symbolic && value.get_den() == 1; }
    std::string name() const;
    BiPoly mu_poly() const { return symbolic ? BiPoly::mu() : BiPoly(value); }
    bool operator==(const MuMode&) const = default;
};

struct PolyFamily {
    FamilyTag tag = FamilyTag::UmemuraS;
    MuMode mu;
};

// Indexed family record.  Entries are immutable once set; provenance records
// whether they came from the recurrence, the Wronskian construction, or a
// cache file.
class PolySequence {
public:
    PolySequence() = default;
    PolySequence(PolyFamily family, std::string provenance)
        : family_(family), provenance_(std::move(provenance)) {}

    const PolyFamily& family() const { return family_; }
    const std::string& provenance() const { return provenance_; }
    const std::map<int, BiPoly>& entries() const { return entries_; }

    bool contains(int n) const { return entries_.count(n) != 0; }
    const BiPoly& at(int n) const;
    void set(int n, BiPoly p) { entries_[n] = std::move(p); }
    int min_index() const;
    int max_index() const;

    // Every consecutive triple present satisfies the family's defining
    // recurrence exactly.  Only meaningful for the recurrence families.
    bool satisfies_recurrence() const;

private:
    PolyFamily family_;
    std::string provenance_;
    std::map<int, BiPoly> entries_;
};

// One step of Q_{n+1} Q_{n-1} = z Q_n^2 - 4 [Q_n Q_n'' - (Q_n')^2]; the
// division must be exact, otherwise NotDivisibleError (never truncated).
BiPoly yv_next(const BiPoly& q_n, const BiPoly& q_nm1, int n);

// One step of S_{n+1} S_{n-1} = -z [S_n S_n'' - (S_n')^2] - S_n S_n'
// + (z+mu) S_n^2, with mu symbolic or specialized via mu_poly.
BiPoly umemura_s_next(const BiPoly& s_n, const BiPoly& s_nm1, const BiPoly& mu_poly);

// T_n = S_n / z^{n(n+1)/2}.
RationalFunction umemura_t_from_s(const BiPoly& s_n, int n);

struct PhiTriple {
    BiPoly phi;    // S_n(0; mu)
    BiPoly dphi;   // dS_n/dz at z = 0
    BiPoly ddphi;  // d^2 S_n/dz^2 at z = 0
};

// z = 0 slices of S_n; requires the sequence to contain index n.
PhiTriple phi_direct(const PolySequence& s, int n);

class PhiSequence {
public:
    explicit PhiSequence(const PolySequence& s);
    const PhiTriple& at(int n) const;
    bool contains(int n) const { return triples_.count(n) != 0; }
    int max_index() const;

private:
    std::map<int, PhiTriple> triples_;
};

// phi_{n+1} phi_{n-2}^2 = phi_n phi_{n-1} phi_{n-2} (2mu^2 - 2n^2 + 2n - 1)
// - phi_n^2 phi_{n-3}, exact-divided by phi_{n-2}^2.  Valid for n >= 3.
BiPoly phi_next_recurrence(const BiPoly& phi_n, const BiPoly& phi_nm1,
                           const BiPoly& phi_nm2, const BiPoly& phi_nm3, int n);

// Product form mu^{g_0} (mu^2-1)^{g_1} ... [mu^2-(n-1)^2]^{g_{n-1}} with
// g_{2j} = ceil(n/2) - j and g_{2j+1} = floor(n/2) - j while positive.
BiPoly phi_closed_form(int n);

// Reverse Bessel polynomial theta_n via the Laguerre identity
// theta_n(z) = n!/(-2)^n L_n^{(-2n-1)}(2z), expanded exactly.
BiPoly reverse_bessel(int n);
// Independent route through theta_{n+1} = (2n+1) theta_n + z^2 theta_{n-1}.
BiPoly reverse_bessel_by_recurrence(int n);

PolySequence generate_yablonskii_vorobev(int n_max);
PolySequence generate_umemura_s(int n_max, const MuMode& mode);
PolySequence generate_reverse_bessel(int n_max);

}  // namespace umemura
