#include "umemura/suites.hpp"

#include <algorithm>
#include <functional>
#include <future>

namespace umemura {

namespace {

using CheckFn = std::function<CheckResult()>;

// Pure, independent checks; evaluate concurrently, report in stable order.
std::vector<CheckResult> run_checks(std::vector<CheckFn> fns) {
    std::vector<std::future<CheckResult>> futures;
    futures.reserve(fns.size());
    for (auto& fn : fns)
        futures.push_back(std::async(std::launch::async | std::launch::deferred,
                                     std::move(fn)));
    std::vector<CheckResult> out;
    out.reserve(futures.size());
    for (auto& f : futures) out.push_back(f.get());
    std::stable_sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) {
        if (a.name != b.name) return a.name < b.name;
        return a.n < b.n;
    });
    return out;
}

CheckResult boolean_check(std::string name, int n, bool pass, std::string detail = "") {
    return CheckResult{std::move(name), n, pass, std::move(detail)};
}

// --------------------------------------------------------------------------

std::vector<CheckResult> suite_table1(int max_n) {
    if (max_n < 0) max_n = 5;
    max_n = std::min(max_n, 5);
    PolySequence s = generate_umemura_s(max_n, MuMode::sym());
    auto table = table1_reference();
    std::vector<CheckResult> out;
    for (int n = 1; n <= max_n; ++n)
        out.push_back(boolean_check("table1-match", n, s.at(n) == table[n],
                                    "S_" + std::to_string(n) + " vs tabulated form"));
    return out;
}

struct Table2Row {
    int sign;
    std::map<long, long> primes;
    std::map<long, long> mu_exponents;
};

const std::map<int, Table2Row>& table2_rows() {
    static const std::map<int, Table2Row> rows = {
        {2, {-1, {{3, 3}}, {{0, 2}}}},
        {3, {+1, {{3, 12}, {5, 5}}, {{0, 6}, {1, 2}}}},
        {4, {+1, {{3, 27}, {5, 20}, {7, 7}}, {{0, 14}, {1, 6}, {2, 2}}}},
        {5, {+1, {{3, 66}, {5, 45}, {7, 28}}, {{0, 26}, {1, 14}, {2, 6}, {3, 2}}}},
        {6,
         {-1,
          {{3, 147}, {5, 80}, {7, 63}, {11, 11}},
          {{0, 44}, {1, 26}, {2, 14}, {3, 6}, {4, 2}}}},
    };
    return rows;
}

std::vector<CheckResult> suite_table2(int max_n) {
    if (max_n < 0) max_n = 6;
    max_n = std::min(max_n, 6);
    PolySequence s = generate_umemura_s(max_n, MuMode::sym());
    std::vector<CheckFn> fns;
    for (int n = 2; n <= max_n; ++n) {
        fns.push_back([n, &s]() {
            FactoredDiscriminant f = factorize_discriminant(n, discriminant_z(s.at(n)));
            const Table2Row& row = table2_rows().at(n);
            bool pass = f.sign == row.sign && f.prime_exponents == row.primes &&
                        f.mu_exponents == row.mu_exponents;
            return boolean_check("table2-discriminant", n, pass, f.str());
        });
    }
    return run_checks(std::move(fns));
}

std::vector<CheckResult> suite_amdeberhan(int max_n) {
    if (max_n < 0) max_n = 6;
    PolySequence s = generate_umemura_s(max_n, MuMode::sym());
    std::vector<CheckFn> fns;
    for (int n = 2; n <= max_n; ++n) {
        fns.push_back([n, &s]() {
            FactoredDiscriminant computed =
                factorize_discriminant(n, discriminant_z(s.at(n)));
            FactoredDiscriminant predicted = amdeberhan_formula(n);
            bool pass = computed == predicted;
            // multiple-roots locations: positive exponent exactly for |k| <= n-2
            for (long k = 0; k <= n && pass; ++k) {
                bool present = predicted.mu_exponents.count(k) != 0;
                pass = present == (k <= n - 2);
            }
            return boolean_check("amdeberhan-match", n, pass,
                                 "computed " + computed.str() + " vs predicted " +
                                     predicted.str());
        });
    }
    return run_checks(std::move(fns));
}

std::vector<CheckResult> suite_wronskian(int max_n) {
    if (max_n < 0) max_n = 6;
    int k_max = std::max(11, 2 * max_n - 1);
    PolySequence s = generate_umemura_s(max_n, MuMode::sym());
    std::vector<CheckFn> fns;
    for (int k = 0; k <= k_max; ++k)
        fns.push_back([k]() {
            return boolean_check("wronskian-laguerre-p", k, laguerre_crosscheck(k),
                                 "p_k vs L_k^{(mu-k)}(-z)");
        });
    for (int n = 1; n <= max_n; ++n) {
        fns.push_back([n, &s]() {
            BiPoly tau = tau_n(n);
            BiPoly scaled = tau;
            scaled *= Rational(tau_normalization(n));
            bool match = scaled == s.at(n);
            bool degree_ok = tau.deg_z() == n * (n + 1) / 2;
            bool lead_ok =
                tau.leading_coeff_z() ==
                BiPoly(Rational(Rational(1) / Rational(tau_normalization(n))));
            return boolean_check("wronskian-tau-match", n,
                                 match && degree_ok && lead_ok,
                                 "c_n = " + tau_normalization(n).get_str());
        });
    }
    int w_max = std::min(max_n, 5);
    for (int n = 1; n <= w_max; ++n) {
        fns.push_back([n, &s]() {
            PolySequence shifted(PolyFamily{FamilyTag::UmemuraS, MuMode::sym()},
                                 "recurrence");
            for (const auto& [idx, p] : s.entries()) shifted.set(idx, p.shift_mu(-1));
            WPair w = build_w(s, shifted, n);
            RationalFunction w_tau = w_from_tau(n);
            bool pass = w.forms_equal && w_tau.equals(w.quotient_form);
            return boolean_check("wronskian-w-equivalence", n, pass, "");
        });
    }
    return run_checks(std::move(fns));
}

std::vector<CheckResult> suite_piii(int max_n) {
    if (max_n < 0) max_n = 5;
    PolySequence s = generate_umemura_s(max_n, MuMode::sym());
    PolySequence shifted(PolyFamily{FamilyTag::UmemuraS, MuMode::sym()}, "recurrence");
    for (const auto& [idx, p] : s.entries()) shifted.set(idx, p.shift_mu(-1));
    std::vector<CheckFn> fns;
    for (int n = 1; n <= max_n; ++n) {
        fns.push_back([n, &s, &shifted]() {
            WPair w = build_w(s, shifted, n);
            PIIIParams params = PIIIParams::for_index(n);
            bool alpha_beta = params.alpha + params.beta == BiPoly(Rational(4 * n));
            ResidualReport r = piii_residual(w.quotient_form, params);
            bool pass = w.forms_equal && alpha_beta && r.is_zero;
            return boolean_check("piii-residual-zero", n, pass,
                                 "forms_equal=" + std::to_string(w.forms_equal) +
                                     " residual_terms=" +
                                     std::to_string(r.cleared_numerator.term_count()));
        });
    }
    return run_checks(std::move(fns));
}

std::vector<CheckResult> suite_eq35(int max_n) {
    if (max_n < 0) max_n = 6;
    PolySequence s = generate_umemura_s(max_n, MuMode::sym());
    std::vector<CheckFn> fns;
    for (int n = 1; n <= max_n; ++n)
        fns.push_back([n, &s]() {
            ResidualReport r = fourth_order_residual(s.at(n), n);
            return boolean_check("eq35-residual-zero", n, r.is_zero,
                                 std::to_string(r.cleared_numerator.term_count()) +
                                     " residual terms");
        });
    return run_checks(std::move(fns));
}

std::vector<CheckResult> suite_eq313(int max_n) {
    if (max_n < 0) max_n = 8;
    PolySequence s = generate_umemura_s(max_n, MuMode::sym());
    std::vector<CheckResult> out;
    for (int n = 1; n <= max_n; ++n)
        out.push_back(boolean_check("eq313-identity", n,
                                    phi_second_order_check(phi_direct(s, n), n), ""));
    return out;
}

std::vector<CheckResult> suite_phi(int max_n) {
    if (max_n < 0) max_n = 8;
    PolySequence s = generate_umemura_s(max_n + 1, MuMode::sym());
    PhiSequence phi(s);
    std::vector<CheckResult> out;
    for (int n = 1; n <= max_n; ++n)
        out.push_back(boolean_check("phi-closed-form", n,
                                    phi.at(n).phi == phi_closed_form(n), ""));
    for (int n = 3; n < max_n; ++n) {
        BiPoly next = phi_next_recurrence(phi.at(n).phi, phi.at(n - 1).phi,
                                          phi.at(n - 2).phi, phi.at(n - 3).phi, n);
        out.push_back(boolean_check("phi-recurrence", n, next == phi.at(n + 1).phi,
                                    "recurrence output vs direct phi_{n+1}"));
    }
    // cleared eq3.b: phi'_{n+1} phi_{n+1} = -phi_n phi_{n+2} + mu phi_{n+1}^2
    for (int n = 0; n < max_n; ++n) {
        const BiPoly& p_n = phi.at(n).phi;
        const BiPoly& p_n1 = phi.at(n + 1).phi;
        const BiPoly& p_n2 = phi.at(n + 2).phi;
        BiPoly lhs = phi.at(n + 1).dphi * p_n1;
        BiPoly rhs = -(p_n * p_n2) + BiPoly::mu() * p_n1 * p_n1;
        out.push_back(boolean_check("phi-derivative-product-identity", n, lhs == rhs, ""));
    }
    // phi_{n-1} | phi'_n; the tabulated quotient degree is n for even n and
    // n-2 for odd n
    for (int n = 1; n <= max_n; ++n) {
        Division d = divide(phi.at(n).dphi, phi.at(n - 1).phi);
        bool div_ok = d.quotient.has_value();
        out.push_back(boolean_check("phi-derivative-divisible", n, div_ok, ""));
        int expected_deg = (n % 2 == 0) ? n : n - 2;
        int actual_deg = div_ok ? d.quotient->deg_mu() : -2;
        out.push_back(boolean_check(
            "phi-derivative-quotient-degree", n, div_ok && actual_deg == expected_deg,
            "expected deg " + std::to_string(expected_deg) + ", exact computation gives " +
                std::to_string(actual_deg)));
    }
    std::stable_sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) {
        if (a.name != b.name) return a.name < b.name;
        return a.n < b.n;
    });
    return out;
}

std::vector<CheckResult> suite_bessel(int max_n) {
    if (max_n < 0) max_n = 6;
    PolySequence s = generate_umemura_s(max_n, MuMode::sym());
    std::vector<CheckResult> out;
    for (int n = 1; n <= max_n; ++n) {
        BiPoly theta = reverse_bessel(n);
        bool recurrence_ok = theta == reverse_bessel_by_recurrence(n);
        BiPoly expected = theta.mul_z_power(n * (n - 1) / 2);
        bool match = s.at(n).eval_mu(Rational(1)) == expected;
        out.push_back(boolean_check("bessel-specialization", n, match && recurrence_ok,
                                    "S_n(z;1) vs z^{n(n-1)/2} theta_n"));
    }
    return out;
}

std::vector<CheckResult> suite_valuation(int max_n) {
    if (max_n < 0) max_n = 7;
    std::vector<CheckFn> fns;
    for (long mu0 : {-4L, -3L, -2L, -1L, 1L, 2L, 3L, 4L}) {
        long am = std::labs(mu0);
        if (am >= max_n) continue;
        fns.push_back([mu0, am, max_n]() {
            PolySequence s = generate_umemura_s(max_n, MuMode::at(Rational(mu0)));
            bool all_ok = true;
            for (int n = (int)am + 1; n <= max_n; ++n)
                all_ok = all_ok && valuation_theorem_check(n, mu0, s);
            return boolean_check("valuation-order", (int)mu0, all_ok,
                                 "orders for |mu| < n <= " + std::to_string(max_n));
        });
    }
    return run_checks(std::move(fns));
}

std::vector<CheckResult> suite_coefficients(int max_n) {
    if (max_n < 0) max_n = 7;
    std::vector<CheckFn> fns;
    for (long mu0 : {-4L, -3L, -2L, -1L, 1L, 2L, 3L, 4L}) {
        long am = std::labs(mu0);
        if (am >= max_n) continue;
        fns.push_back([mu0, am, max_n]() {
            PolySequence s = generate_umemura_s(max_n, MuMode::at(Rational(mu0)));
            bool all_ok = true;
            std::string last_detail;
            for (int n = (int)am + 1; n <= max_n; ++n)
                all_ok = all_ok && coefficient_relations_check(n, mu0, s, &last_detail);
            return boolean_check("coefficient-relations", (int)mu0, all_ok, last_detail);
        });
    }
    return run_checks(std::move(fns));
}

std::vector<CheckResult> suite_taneda(int max_n) {
    if (max_n < 0) max_n = 5;
    PolySequence q = generate_yablonskii_vorobev(max_n);
    PolySequence s = generate_umemura_s(std::min(max_n, 4), MuMode::sym());
    std::vector<CheckFn> fns;
    for (int n = 1; n <= max_n; ++n)
        fns.push_back([n, &q]() {
            return boolean_check("taneda-pII", n, taneda_div_pII(q.at(n)),
                                 "f = Q_" + std::to_string(n));
        });
    for (int n = 1; n <= s.max_index(); ++n)
        fns.push_back([n, &s]() {
            return boolean_check("taneda-pIII", n, taneda_div_pIII(s.at(n), Rational(1)),
                                 "f = S_" + std::to_string(n) + ", k = 1");
        });
    // the lemma admits general constant k; sample two more values
    for (Rational k : {Rational(2), Rational(-1)}) {
        fns.push_back([k, &s]() {
            bool ok = taneda_div_pIII(s.at(1), k) && taneda_div_pIII(s.at(2), k);
            return boolean_check("taneda-pIII-k-sample", (int)k.get_num().get_si(), ok,
                                 "k = " + rational_to_string(k));
        });
    }
    return run_checks(std::move(fns));
}

std::vector<CheckResult> suite_coprime(int max_n) {
    if (max_n < 0) max_n = 6;
    std::vector<CheckResult> out;
    PolySequence sym = generate_umemura_s(max_n, MuMode::sym());
    auto symbolic = coprime_and_squarefree_suite(sym, MuMode::sym(), max_n);
    out.insert(out.end(), symbolic.begin(), symbolic.end());
    for (long mu0 : {0L, 1L, -2L}) {
        PolySequence s = generate_umemura_s(max_n, MuMode::at(Rational(mu0)));
        auto part = coprime_and_squarefree_suite(s, MuMode::at(Rational(mu0)), max_n);
        for (auto& c : part) {
            c.name += "-mu-" + std::to_string(mu0);
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::vector<CheckResult> suite_yv_identity(int max_n) {
    if (max_n < 0) max_n = 8;
    PolySequence q = generate_yablonskii_vorobev(max_n);
    std::vector<CheckResult> out;
    for (int n = 1; n <= max_n; ++n)
        out.push_back(boolean_check("yv-degree", n,
                                    q.at(n).deg_z() == n * (n + 1) / 2,
                                    "deg Q_n vs n(n+1)/2"));
    for (int m = 1; m <= std::min(max_n - 1, 6); ++m)
        out.push_back(boolean_check(
            "yv-wronskian", m,
            yv_wronskian_identity(q.at(m + 1), q.at(m), q.at(m - 1), m), ""));
    return out;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"table1", "table2",  "amdeberhan", "wronskian", "piii",
            "eq35",   "eq313",   "phi",        "bessel",    "valuation",
            "coefficients", "taneda", "coprime", "yv-identity", "all"};
}

bool is_suite_name(const std::string& name) {
    auto names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteReport run_suite(const std::string& name, int max_n) {
    SuiteReport report;
    report.suite = name;
    if (name == "all") {
        for (const auto& sub : suite_names()) {
            if (sub == "all") continue;
            SuiteReport part = run_suite(sub, max_n);
            for (auto& c : part.checks) {
                c.name = sub + "/" + c.name;
                report.checks.push_back(std::move(c));
            }
        }
    } else if (name == "table1") {
        report.checks = suite_table1(max_n);
    } else if (name == "table2") {
        report.checks = suite_table2(max_n);
    } else if (name == "amdeberhan") {
        report.checks = suite_amdeberhan(max_n);
    } else if (name == "wronskian") {
        report.checks = suite_wronskian(max_n);
    } else if (name == "piii") {
        report.checks = suite_piii(max_n);
    } else if (name == "eq35") {
        report.checks = suite_eq35(max_n);
    } else if (name == "eq313") {
        report.checks = suite_eq313(max_n);
    } else if (name == "phi") {
        report.checks = suite_phi(max_n);
    } else if (name == "bessel") {
        report.checks = suite_bessel(max_n);
    } else if (name == "valuation") {
        report.checks = suite_valuation(max_n);
    } else if (name == "coefficients") {
        report.checks = suite_coefficients(max_n);
    } else if (name == "taneda") {
        report.checks = suite_taneda(max_n);
    } else if (name == "coprime") {
        report.checks = suite_coprime(max_n);
    } else if (name == "yv-identity") {
        report.checks = suite_yv_identity(max_n);
    } else {
        throw MathError("unknown suite: " + name);
    }
    report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const CheckResult& c) { return c.pass; });
    return report;
}

Json suite_report_to_json(const SuiteReport& report) {
    Json j;
    j["suite"] = report.suite;
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json jc;
        jc["name"] = c.name;
        jc["n"] = c.n;
        jc["pass"] = c.pass;
        jc["detail"] = c.detail;
        checks.push_back(std::move(jc));
    }
    j["checks"] = std::move(checks);
    j["pass"] = report.pass;
    return j;
}

}  // namespace umemura
