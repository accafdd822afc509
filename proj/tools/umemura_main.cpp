// Command-line front end: generate the polynomial families, run the exact
// verification suites, factor discriminants, and export numeric roots.
//
// Exit codes: 0 = success / all checks pass, 1 = a mathematical check
// failed (or did not converge), 2 = usage or configuration error.

#include <CLI11.hpp>

#include <algorithm>
#include <complex>
#include <fstream>
#include <iostream>

#include "umemura/analysis.hpp"
#include "umemura/cache.hpp"
#include "umemura/suites.hpp"
#include "umemura/version.hpp"
#include "umemura/wronskian.hpp"

namespace {

using namespace umemura;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string cache_mu_mode(FamilyTag tag, const MuMode& mu) {
    switch (tag) {
        case FamilyTag::YablonskiiVorobev:
        case FamilyTag::ReverseBessel:
            return "none";
        case FamilyTag::Tau:
            return "symbolic";
        default:
            return mu.name();
    }
}

int cmd_generate(const std::string& family, int n_max, const std::string& mu_text) {
    MuMode mu = MuMode::parse(mu_text);
    PolySequence seq;
    FamilyTag tag;
    if (family == "umemura") {
        tag = FamilyTag::UmemuraS;
        seq = generate_umemura_s(n_max, mu);
    } else if (family == "yv") {
        tag = FamilyTag::YablonskiiVorobev;
        seq = generate_yablonskii_vorobev(n_max);
    } else if (family == "tau") {
        if (!mu.symbolic) {
            std::cerr << "tau is generated with symbolic mu only\n";
            return kExitUsage;
        }
        tag = FamilyTag::Tau;
        seq = generate_tau(n_max);
    } else if (family == "bessel") {
        tag = FamilyTag::ReverseBessel;
        seq = generate_reverse_bessel(n_max);
    } else {
        std::cerr << "unknown family: " << family << "\n";
        return kExitUsage;
    }

    const std::filesystem::path dir = cache_directory();
    const std::string mode = cache_mu_mode(tag, mu);
    std::cout << "family=" << family << " mu=" << mode << " n_max=" << n_max << "\n";
    for (const auto& [n, poly] : seq.entries()) {
        if (n < 0) continue;
        CacheKey key{family, n, mode};
        CacheEntry fresh = make_cache_entry(key, poly);
        if (auto existing = read_cache_entry(dir, key)) {
            if (existing->payload != fresh.payload) {
                std::cerr << "cache entry " << cache_file_name(key)
                          << " disagrees with regeneration\n";
                return kExitCheckFailed;
            }
        } else {
            write_cache_entry(dir, fresh);
        }
        std::cout << family << "_" << n << ": deg_z=" << poly.deg_z()
                  << " terms=" << poly.term_count() << "\n";
    }
    // integer mu carries extra structure: check it on the fly
    if (tag == FamilyTag::UmemuraS && mu.is_integer()) {
        long mu0 = mu.value.get_num().get_si();
        long am = std::labs(mu0);
        int checked = 0;
        for (int n = (int)am + 1; n <= n_max; ++n) {
            bool ok = valuation_theorem_check(n, mu0, seq);
            if (ok && mu0 != 0) ok = coefficient_relations_check(n, mu0, seq);
            if (ok && mu0 == 0)
                ok = seq.at(n) == BiPoly(1L).mul_z_power(n * (n + 1) / 2);
            if (!ok) {
                std::cerr << "integer-mu structure check failed at n = " << n << "\n";
                return kExitCheckFailed;
            }
            ++checked;
        }
        if (checked > 0)
            std::cout << "integer-mu structure: valuation and coefficient relations hold"
                         " for n = " << am + 1 << ".." << n_max << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, int max_n, const std::string& out_path) {
    if (!is_suite_name(suite)) {
        std::cerr << "unknown suite: " << suite << " (choices:";
        for (const auto& s : suite_names()) std::cerr << " " << s;
        std::cerr << ")\n";
        return kExitUsage;
    }
    SuiteReport report = run_suite(suite, max_n);
    Json j = suite_report_to_json(report);
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "cannot open " << out_path << "\n";
            return kExitUsage;
        }
        f << j.dump(2) << "\n";
        int failed = 0;
        for (const auto& c : report.checks)
            if (!c.pass) ++failed;
        std::cout << "suite " << suite << ": " << report.checks.size() - failed << "/"
                  << report.checks.size() << " checks passed\n";
    }
    return report.pass ? kExitOk : kExitCheckFailed;
}

bool parse_complex(const std::string& text, std::complex<double>* out) {
    if (text.find('i') == std::string::npos) return false;
    std::string s = text;
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    std::size_t ipos = s.find('i');
    if (ipos != s.size() - 1) return false;
    s.pop_back();
    // split "re±im" at the last sign that is not an exponent or leading sign
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    try {
        if (split == std::string::npos) {
            std::string im = s.empty() || s == "+" ? "1" : (s == "-" ? "-1" : s);
            *out = {0.0, std::stod(im)};
        } else {
            std::string re = s.substr(0, split);
            std::string im = s.substr(split);
            if (im == "+" || im == "-") im += "1";
            *out = {std::stod(re), std::stod(im)};
        }
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

int cmd_roots(const std::string& family, int n, const std::string& mu_text,
              const std::string& out_path) {
    ComplexRootSet roots;
    int degree = 0;
    std::complex<double> mu_complex;
    if (parse_complex(mu_text, &mu_complex)) {
        if (family != "umemura") {
            std::cerr << "complex mu applies to the umemura family only\n";
            return kExitUsage;
        }
        PolySequence s = generate_umemura_s(n, MuMode::sym());
        const BiPoly& sn = s.at(n);
        std::vector<std::complex<double>> coeffs(sn.deg_z() + 1, {0.0, 0.0});
        for (int k = 0; k <= sn.deg_z(); ++k) {
            auto slice = sn.coeff_z(k).univariate_in_mu();
            std::complex<double> acc(0.0, 0.0);
            for (int i = (int)slice.size() - 1; i >= 0; --i)
                acc = acc * mu_complex + std::complex<double>(slice[i].get_d(), 0.0);
            coeffs[k] = acc;
        }
        int v = 0;
        while (v < (int)coeffs.size() - 1 && std::abs(coeffs[v]) == 0.0) ++v;
        coeffs.erase(coeffs.begin(), coeffs.begin() + v);
        degree = (int)coeffs.size() - 1 + v;
        roots = aberth_roots_numeric(std::move(coeffs), v);
        roots.mu_label = mu_text;
    } else {
        BiPoly specialized;
        if (family == "umemura") {
            MuMode mu = MuMode::parse(mu_text);
            if (mu.symbolic) {
                std::cerr << "roots require a numeric mu\n";
                return kExitUsage;
            }
            specialized = generate_umemura_s(n, mu).at(n);
        } else if (family == "yv") {
            specialized = generate_yablonskii_vorobev(n).at(n);
        } else {
            std::cerr << "unknown family: " << family << "\n";
            return kExitUsage;
        }
        degree = specialized.deg_z();
        roots = aberth_roots(specialized);
        roots.mu_label = mu_text;
    }
    export_roots(roots, out_path);
    std::cout << "degree=" << degree << " zero_multiplicity=" << roots.zero_multiplicity
              << " roots=" << roots.roots.size()
              << " residual_bound=" << format_double(roots.residual_bound) << "\n";
    return kExitOk;
}

int cmd_discriminant(int n, const std::string& out_path) {
    PolySequence s = generate_umemura_s(n, MuMode::sym());
    FactoredDiscriminant computed = factorize_discriminant(n, discriminant_z(s.at(n)));
    FactoredDiscriminant predicted = amdeberhan_formula(n);
    std::cout << "Dis(S_" << n << ") factored : " << computed.str() << "\n";
    std::cout << "closed-form prediction : " << predicted.str() << "\n";
    bool match = computed == predicted;
    std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "cannot open " << out_path << "\n";
            return kExitUsage;
        }
        f << discriminant_report_to_json(n, computed).dump(2) << "\n";
    }
    return match ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Umemura / Yablonskii-Vorob'ev special polynomial toolkit"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("generate", "generate a family and populate the cache");
    std::string gen_family = "umemura";
    int gen_n = 0;
    std::string gen_mu = "symbolic";
    gen->add_option("--family", gen_family, "umemura | yv | tau | bessel");
    gen->add_option("--n", gen_n, "largest index to generate")->required();
    gen->add_option("--mu", gen_mu, "symbolic, integer, or exact rational p/q");

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string ver_suite;
    int ver_max_n = -1;
    std::string ver_out;
    ver->add_option("--suite", ver_suite, "suite name or 'all'")->required();
    ver->add_option("--max-n", ver_max_n, "override the suite depth");
    ver->add_option("--out", ver_out, "write the JSON report here instead of stdout");

    auto* rts = app.add_subcommand("roots", "numeric roots of a specialized polynomial");
    std::string rts_family = "umemura";
    int rts_n = 0;
    std::string rts_mu = "0";
    std::string rts_out;
    rts->add_option("--family", rts_family, "umemura | yv");
    rts->add_option("--n", rts_n, "index")->required();
    rts->add_option("--mu", rts_mu, "rational like -3.7 or complex like 1+2i");
    rts->add_option("--out", rts_out, "CSV output path")->required();

    auto* dis = app.add_subcommand("discriminant", "factored discriminant vs closed form");
    int dis_n = 0;
    std::string dis_out;
    dis->add_option("--n", dis_n, "index (n >= 2)")->required();
    dis->add_option("--out", dis_out, "also write the factored report as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_generate(gen_family, gen_n, gen_mu);
        if (ver->parsed()) return cmd_verify(ver_suite, ver_max_n, ver_out);
        if (rts->parsed()) return cmd_roots(rts_family, rts_n, rts_mu, rts_out);
        if (dis->parsed()) return cmd_discriminant(dis_n, dis_out);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NoConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const NotDivisibleError& e) {
        std::cerr << "error: " << e.what() << " (remainder digest "
                  << content_checksum(bipoly_canonical_dump(e.remainder())) << ")\n";
        return kExitCheckFailed;
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
