#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <string>

#include "doctest.h"
#include "hilspec/errors.hpp"
#include "hilspec/zeta_bridge.hpp"

using namespace hilspec;

namespace {

constexpr double kPi = std::numbers::pi;

// Reference constants computed independently with 25+ digit arithmetic
// and rounded to the nearest double.
constexpr double kCatalan = 0.91596559417721902;
constexpr double kZeta4 = 1.0823232337111381915;
constexpr double kBeta4 = 0.98894455174110533611;
constexpr double kAlpha1 = 3.70066771137322231;
constexpr double kAlpha2 = 15.971019333237620875;
constexpr double kTrigammaQuarter = 17.1973291545071107393;
constexpr double kZetaHalf = -1.4603545088095868;
constexpr double kLogDeriv2Half = 3.7468776976040603;
constexpr double kGamma1 = 14.13472514173469379;
constexpr double kGamma100 = 236.5242296658162058;
constexpr double kZeroSum2Partial = -0.039988265195290676;
constexpr double kIdentityRhs = -0.046209986230837942;

std::string bundled_zeros_path() {
  return std::string(HILSPEC_DATA_DIR) + "/riemann_zeros_100.txt";
}

// RAII temp file holding the given text.
struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& text) {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("hilspec_zeros_" + std::to_string(++counter) + "_" +
            std::to_string(static_cast<long long>(::getpid())) + ".txt");
    std::ofstream out(path);
    out << text;
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path, ec);
  }
};

}  // namespace

TEST_CASE("catalan series stops at the requested tail bound") {
  // With eps in [1/9, 1) only the leading term is kept.
  const SpecialValue coarse = catalan(0.2);
  CHECK(coarse.name == "catalan");
  CHECK(coarse.value == 1.0);
  CHECK(coarse.series_terms == 1);
  CHECK(coarse.error_bound == 1.0 / 9.0);

  const SpecialValue fine = catalan(1e-13);
  CHECK(std::abs(fine.value - kCatalan) <= 1e-10);
  CHECK(fine.error_bound <= 1e-13);
  CHECK(fine.series_terms > 1000000);

  CHECK_THROWS_AS(catalan(0.0), InvalidParameter);
  CHECK_THROWS_AS(catalan(-1.0), InvalidParameter);
  CHECK_THROWS_AS(catalan(1e-300), NoConvergence);
}

TEST_CASE("zeta at even integers matches the classical closed forms") {
  const SpecialValue z2 = zeta_even(2);
  CHECK(z2.name == "zeta(2)");
  CHECK(std::abs(z2.value - kPi * kPi / 6.0) <= 1e-12);
  CHECK(z2.error_bound < 1e-12);

  const SpecialValue z4 = zeta_even(4);
  CHECK(std::abs(z4.value - kPi * kPi * kPi * kPi / 90.0) <= 1e-13);
  CHECK(std::abs(z4.value - kZeta4) <= 1e-13);

  CHECK_THROWS_AS(zeta_even(3), InvalidParameter);
  CHECK_THROWS_AS(zeta_even(0), InvalidParameter);
  CHECK_THROWS_AS(zeta_even(22), InvalidParameter);
}

TEST_CASE("Dirichlet L at chi_-4 reproduces catalan and beta(4)") {
  const SpecialValue l2 = dirichlet_L_chi4(2);
  CHECK(l2.name == "L(2,chi4)");
  CHECK(std::abs(l2.value - kCatalan) <= 1e-10);

  const SpecialValue l4 = dirichlet_L_chi4(4);
  CHECK(std::abs(l4.value - kBeta4) <= 1e-12);

  CHECK_THROWS_AS(dirichlet_L_chi4(5), InvalidParameter);
}

TEST_CASE("alpha combines the two L-values with the stated weights") {
  const SpecialValue a1 = alpha(1);
  CHECK(a1.name == "alpha(1)");
  CHECK(std::abs(a1.value - kAlpha1) <= 1e-9);
  // Rearranged: alpha_1 - 8 = -pi^2/4 - 2G.
  CHECK(std::abs((a1.value - 8.0) - (-kPi * kPi / 4.0 - 2.0 * kCatalan)) <= 1e-9);

  const SpecialValue a2 = alpha(2);
  CHECK(std::abs(a2.value - kAlpha2) <= 1e-9);

  CHECK_THROWS_AS(alpha(0), InvalidParameter);
  CHECK_THROWS_AS(alpha(11), InvalidParameter);
}

TEST_CASE("trigamma at one quarter agrees with pi^2 plus eight catalan") {
  const TrigammaReport rep = trigamma_quarter();
  CHECK(std::abs(rep.identity_value - kTrigammaQuarter) <= 1e-10);
  CHECK(std::abs(rep.series_value - kTrigammaQuarter) <= 1e-8);
  CHECK(rep.gap == std::abs(rep.series_value - rep.identity_value));
  CHECK(rep.gap < 1e-8);
}

TEST_CASE("eta-based zeta evaluator hits classical points") {
  CHECK(std::abs(zeta_via_eta(2.0) - kPi * kPi / 6.0) <= 1e-9);
  CHECK(std::abs(zeta_via_eta(0.5) - kZetaHalf) <= 1e-9);
  CHECK_THROWS_AS(zeta_via_eta(1.0), InvalidParameter);
  CHECK_THROWS_AS(zeta_via_eta(0.0), InvalidParameter);
  CHECK_THROWS_AS(zeta_via_eta(-2.0), InvalidParameter);
}

TEST_CASE("second log-derivative of zeta at one half") {
  const SpecialValue v = zeta_log_deriv2_half();
  CHECK(v.name == "(zeta'/zeta)'(1/2)");
  CHECK(std::abs(v.value - kLogDeriv2Half) <= 1e-8);
  CHECK(v.series_terms >= 4000);
  CHECK(v.error_bound > 0.0);
}

TEST_CASE("zeros table parser handles comments, junk, and ordering") {
  const TempFile good("# header\n\n 14.134725 \n21.022040\n# mid comment\n25.010858\n");
  const ZerosTable t = parse_zeros(good.path.string());
  REQUIRE(t.ordinates.size() == 3);
  CHECK(t.ordinates[0] == doctest::Approx(14.134725).epsilon(1e-12));
  CHECK(t.ordinates[2] == doctest::Approx(25.010858).epsilon(1e-12));
  CHECK(t.warning.empty());
  CHECK(t.source_path == good.path.string());

  const TempFile custom("2.0\n3.5\n");
  const ZerosTable c = parse_zeros(custom.path.string());
  CHECK_FALSE(c.warning.empty());  // nonstandard first ordinate

  const TempFile bad_order("# c\n5.0\n4.0\n");
  try {
    parse_zeros(bad_order.path.string());
    FAIL("expected NotIncreasing");
  } catch (const NotIncreasing& e) {
    CHECK(e.line == 3);
  }

  const TempFile junk("14.134725\nabc\n");
  try {
    parse_zeros(junk.path.string());
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }

  const TempFile negative("-1.0\n");
  CHECK_THROWS_AS(parse_zeros(negative.path.string()), ParseError);

  CHECK_THROWS_AS(parse_zeros("/nonexistent/zeros.txt"), ParseError);

  const TempFile empty("# only comments\n");
  CHECK(parse_zeros(empty.path.string()).ordinates.empty());
}

TEST_CASE("zero sums over a single synthetic zero") {
  ZerosTable t;
  t.ordinates = {2.0};
  // k2 = 2: each zero contributes -2 / gamma^2.
  CHECK(zero_sum(2, t).partial == doctest::Approx(-0.5).epsilon(1e-15));
  // k2 = 4: sign flips back, 2 / gamma^4.
  CHECK(zero_sum(4, t).partial == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(zero_sum(2, t).used == 1);

  CHECK_THROWS_AS(zero_sum(3, t), InvalidParameter);
  CHECK_THROWS_AS(zero_sum(0, t), InvalidParameter);
  ZerosTable none;
  CHECK_THROWS_AS(zero_sum(2, none), EmptyTable);
}

TEST_CASE("bundled zeros table reproduces the frozen partial sum") {
  const ZerosTable t = parse_zeros(bundled_zeros_path());
  REQUIRE(t.ordinates.size() == 100);
  CHECK(t.warning.empty());
  CHECK(std::abs(t.ordinates.front() - kGamma1) <= 1e-10);
  CHECK(std::abs(t.ordinates.back() - kGamma100) <= 1e-9);

  const ZeroSumPartial p = zero_sum(2, t);
  CHECK(p.used == 100);
  CHECK(std::abs(p.partial - kZeroSum2Partial) <= 1e-12);

  // Hand-rolled compensated sum in the same ascending order must agree
  // to the last bit.
  double sum = 0.0, comp = 0.0;
  for (double g : t.ordinates) {
    const double x = -2.0 / (g * g);
    const double y = x - comp;
    const double z = sum + y;
    comp = (z - sum) - y;
    sum = z;
  }
  CHECK(p.partial == sum);
}

TEST_CASE("zero-sum identity with explicit truncation accounting") {
  const ZerosTable t = parse_zeros(bundled_zeros_path());
  const IdentityReport rep = zero_sum_identity_check(t);

  CHECK(rep.zeros_used == 100);
  CHECK(std::abs(rep.partial - kZeroSum2Partial) <= 1e-12);
  CHECK(std::abs(rep.rhs - kIdentityRhs) <= 1e-9);
  CHECK(rep.gap == doctest::Approx(0.006221721).epsilon(1e-5));
  CHECK(rep.truncation_estimate == doctest::Approx(0.006228509).epsilon(1e-6));
  // The estimated tail explains the gap almost entirely...
  CHECK(rep.corrected_gap < 2e-5);
  // ...and in particular exceeds it.
  CHECK(rep.truncation_estimate > rep.gap);
}

TEST_CASE("prime-scaled branch approaches the log-p lattice") {
  const FitReport f3 = prime_limit_check(2, 3);
  CHECK(f3.n == 3);
  CHECK(f3.model == "(2pi/log p)k");
  CHECK(f3.zero_present);
  REQUIRE(f3.deviations.size() == 1);
  // Branch value 3 * (3/2) / log 2; model 2 pi / log 2.
  const double expected = (4.5 - 2.0 * kPi) / std::log(2.0);
  CHECK(f3.deviations[0] == doctest::Approx(expected).epsilon(1e-10));

  const double spacing = 2.0 * kPi / std::log(2.0);
  const double r101 = interior_relative_rms(prime_limit_check(2, 101), spacing);
  const double r201 = interior_relative_rms(prime_limit_check(2, 201), spacing);
  CHECK(r101 < 0.03);
  CHECK(r201 < r101);

  CHECK_THROWS_AS(prime_limit_check(2, 4), InvalidParameter);
  CHECK_THROWS_AS(prime_limit_check(2, 1), InvalidParameter);
  CHECK_THROWS_AS(prime_limit_check(6, 3), InvalidParameter);  // not prime
}

TEST_CASE("relative interior rms windows and scales by the model value") {
  FitReport fit;
  fit.n = 16;  // window is k in [2, 6]
  const double spacing = 2.0;
  fit.deviations.resize(8);
  for (std::size_t k = 1; k <= 8; ++k)
    fit.deviations[k - 1] = 0.05 * spacing * static_cast<double>(k);
  CHECK(interior_relative_rms(fit, spacing) == doctest::Approx(0.05).epsilon(1e-12));
  CHECK_THROWS_AS(interior_relative_rms(fit, 0.0), InvalidParameter);
  CHECK_THROWS_AS(interior_relative_rms(fit, -1.0), InvalidParameter);
}
