#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "testutil.hpp"
#include "umemura/analysis.hpp"
#include "umemura/json_io.hpp"

using namespace umemura;
using namespace umemura::testutil;

TEST_CASE("closed-form exponents") {
    CHECK(amdeberhan_c(0) == 0);
    CHECK(amdeberhan_c(1) == 0);
    CHECK(amdeberhan_c(2) == 2);
    CHECK(amdeberhan_c(3) == 6);
    CHECK(amdeberhan_c(4) == 14);
    CHECK(amdeberhan_c(5) == 26);
}

TEST_CASE("closed-form discriminant factorization") {
    FactoredDiscriminant f2 = amdeberhan_formula(2);
    CHECK(f2.sign == -1);
    CHECK(f2.prime_exponents == std::map<long, long>{{3, 3}});
    CHECK(f2.mu_exponents == std::map<long, long>{{0, 2}});

    FactoredDiscriminant f3 = amdeberhan_formula(3);
    CHECK(f3.sign == +1);
    CHECK(f3.prime_exponents == std::map<long, long>{{3, 12}, {5, 5}});
    CHECK(f3.mu_exponents == std::map<long, long>{{0, 6}, {1, 2}});

    // (mu - k) factors with |k| >= n-1 are absent
    for (int n = 2; n <= 6; ++n) {
        FactoredDiscriminant f = amdeberhan_formula(n);
        for (long k = 0; k <= n; ++k)
            CHECK((f.mu_exponents.count(k) != 0) == (k <= n - 2));
        CHECK(f.sign == ((n % 4 == 2) ? -1 : +1));
    }
}

TEST_CASE("computed discriminants factor into the tabulated shape") {
    PolySequence s = generate_umemura_s(4, MuMode::sym());
    BiPoly dis2 = discriminant_z(s.at(2));
    CHECK(dis2 == Rational(-27) * muvar() * muvar());
    FactoredDiscriminant f2 = factorize_discriminant(2, dis2);
    CHECK(f2 == amdeberhan_formula(2));

    auto table = discriminant_table(4, s);
    REQUIRE(table.size() == 3);
    for (const auto& rec : table) {
        CHECK(rec.reassembled() == rec.dis);
        CHECK(factorize_discriminant(rec.n, rec.dis) == amdeberhan_formula(rec.n));
    }
}

TEST_CASE("valuation theorem at integer mu") {
    PolySequence s1 = generate_umemura_s(3, MuMode::at(ratio(1)));
    CHECK(s1.at(2).valuation_z() == 1);
    CHECK(valuation_theorem_check(2, 1, s1));
    CHECK(valuation_theorem_check(3, 1, s1));
    PolySequence s0 = generate_umemura_s(5, MuMode::at(ratio(0)));
    CHECK(valuation_theorem_check(5, 0, s0));
    CHECK(s0.at(5) == BiPoly(1L).mul_z_power(15));
    CHECK_THROWS_AS(valuation_theorem_check(2, 3, s1), MathError);
}

TEST_CASE("coefficient relations at integer mu") {
    PolySequence s1 = generate_umemura_s(3, MuMode::at(ratio(1)));
    // S_2(z;1) = z (z^2 + 3z + 3): a0 = 3, a1 = 3 = mu a0, a2 = 1
    std::string detail;
    CHECK(coefficient_relations_check(2, 1, s1, &detail));
    CHECK(detail.find("a0=3") != std::string::npos);

    PolySequence s2 = generate_umemura_s(4, MuMode::at(ratio(2)));
    CHECK(coefficient_relations_check(3, 2, s2));
    CHECK(coefficient_relations_check(4, 2, s2));

    PolySequence sm3 = generate_umemura_s(5, MuMode::at(ratio(-3)));
    CHECK(coefficient_relations_check(4, -3, sm3));
    CHECK(coefficient_relations_check(5, -3, sm3));
}

TEST_CASE("aberth on small exact polynomials") {
    BiPoly z = zvar();
    ComplexRootSet linear = aberth_roots(z + c(2));
    REQUIRE(linear.roots.size() == 1);
    CHECK(linear.zero_multiplicity == 0);
    CHECK(std::abs(linear.roots[0] - std::complex<double>(-2.0, 0.0)) < 1e-12);

    // cube roots of -4, pairwise rotations by 2pi/3
    ComplexRootSet cubic = aberth_roots(z.pow(3) + c(4));
    REQUIRE(cubic.roots.size() == 3);
    double want = std::pow(4.0, 1.0 / 3.0);
    for (const auto& r : cubic.roots) CHECK(std::abs(std::abs(r) - want) < 1e-12);
    std::vector<double> args;
    for (const auto& r : cubic.roots) args.push_back(std::arg(r));
    std::sort(args.begin(), args.end());
    CHECK(std::abs(args[1] - args[0] - 2 * M_PI / 3) < 1e-12);
    CHECK(std::abs(args[2] - args[1] - 2 * M_PI / 3) < 1e-12);

    // S_2 at mu = 1: one exact zero root, two roots summing to -3
    PolySequence s = generate_umemura_s(2, MuMode::at(ratio(1)));
    ComplexRootSet s2 = aberth_roots(s.at(2));
    CHECK(s2.zero_multiplicity == 1);
    REQUIRE(s2.roots.size() == 2);
    std::complex<double> sum = s2.roots[0] + s2.roots[1];
    CHECK(std::abs(sum - std::complex<double>(-3.0, 0.0)) < 1e-12);
    CHECK(s2.backward_error < 1e-12);

    CHECK_THROWS_AS(aberth_roots(c(5)), DegreeTooLowError);
    CHECK_THROWS_AS(aberth_roots(zvar() + muvar()), MathError);
}

TEST_CASE("aberth respects the sweep budget") {
    PolySequence q = generate_yablonskii_vorobev(5);
    AberthOptions strangle;
    strangle.max_sweeps = 1;
    try {
        aberth_roots(q.at(5), strangle);
        FAIL("expected NoConvergenceError");
    } catch (const NoConvergenceError& e) {
        CHECK(e.best().roots.size() == 15);
        CHECK(!e.best().converged);
    }
}

TEST_CASE("root count and vieta across specializations") {
    for (const char* mu : {"-3.7", "1", "6"}) {
        PolySequence s = generate_umemura_s(6, MuMode::parse(mu));
        const BiPoly& p = s.at(6);
        ComplexRootSet rs = aberth_roots(p);
        CHECK((int)rs.roots.size() + rs.zero_multiplicity == p.deg_z());
        auto coeffs = p.univariate_in_z();
        double expected = -Rational(coeffs[p.deg_z() - 1] / coeffs[p.deg_z()]).get_d();
        std::complex<double> sum(0, 0);
        for (const auto& r : rs.roots) sum += r;
        CHECK(std::abs(sum - std::complex<double>(expected, 0)) <=
              1e-8 * std::max(std::abs(expected), 1.0));
        CHECK(rs.backward_error <= 1e-9);
    }
}

TEST_CASE("csv export format and ordering") {
    BiPoly z = zvar();
    ComplexRootSet linear = aberth_roots(z + c(2));
    CHECK(roots_to_csv(linear) == "re,im\n-2.0,0.0\n");

    PolySequence s = generate_umemura_s(2, MuMode::at(ratio(1)));
    ComplexRootSet s2 = aberth_roots(s.at(2));
    std::string csv = roots_to_csv(s2);
    CHECK(csv.substr(0, 6) == "re,im\n");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);  // header + 3 rows
    CHECK(csv == roots_to_csv(s2));  // deterministic

    // S_3 at mu = -6: degree 6, no zero roots
    PolySequence s3 = generate_umemura_s(3, MuMode::at(ratio(-6)));
    ComplexRootSet rs = aberth_roots(s3.at(3));
    CHECK((int)rs.roots.size() == 6);
    CHECK(rs.zero_multiplicity == 0);

    auto path = std::filesystem::temp_directory_path() / "umemura_roots_test.csv";
    export_roots(rs, path);
    std::ifstream f(path);
    std::string header;
    std::getline(f, header);
    CHECK(header == "re,im");
    int rows = 0;
    for (std::string line; std::getline(f, line);)
        if (!line.empty()) ++rows;
    CHECK(rows == 6);
    std::filesystem::remove(path);
}

TEST_CASE("double formatting keeps a decimal point and round-trips") {
    CHECK(format_double(-2.0) == "-2.0");
    CHECK(format_double(0.0) == "0.0");
    CHECK(std::stod(format_double(0.1)) == 0.1);
    CHECK(std::stod(format_double(-1.0 / 3.0)) == -1.0 / 3.0);
}

TEST_CASE("discriminant report JSON schema") {
    Json j = discriminant_report_to_json(3, amdeberhan_formula(3));
    CHECK(j.dump() ==
          R"({"n":3,"sign":1,"prefactor":[[3,12],[5,5]],"mu_factors":[[0,6],[1,2]]})");
}
