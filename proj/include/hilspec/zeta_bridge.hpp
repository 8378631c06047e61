#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hilspec/errors.hpp"
#include "hilspec/spectra_lab.hpp"

namespace hilspec {

// A named constant produced by a series, with the number of direct terms
// consumed and an honest bound on the remaining error.
struct SpecialValue {
  std::string name;
  double value = 0.0;
  std::size_t series_terms = 0;
  double error_bound = 0.0;
};

// Catalan constant via the plain alternating series over odd squares.
// Stops once the next term drops to eps, which by the alternating-series
// theorem bounds the tail; that next term is returned as error_bound.
SpecialValue catalan(double eps);

// zeta at an even integer 2 <= k2 <= 20. Direct series to 1000 terms with
// an Euler-Maclaurin continuation; error_bound is the first omitted
// correction term, which bounds the remainder for this series.
SpecialValue zeta_even(unsigned k2);

// L(k2, chi_-4) = sum (-1)^j (2j+1)^(-k2) for even 2 <= k2 <= 20,
// accelerated to roundoff. L(2, chi_-4) is the Catalan constant.
SpecialValue dirichlet_L_chi4(unsigned k2);

// alpha_k = -(1/2)(2^{2k}-1) zeta(2k) - 2^{2k-1} L(2k, chi_-4) + 2^{2k+1}
// for 1 <= k <= 10; alpha_1 = -pi^2/4 - 2G + 8.
SpecialValue alpha(unsigned k);

struct TrigammaReport {
  double series_value = 0.0;    // sum over n >= 0 of 1/(n + 1/4)^2
  double identity_value = 0.0;  // pi^2 + 8 * Catalan
  double gap = 0.0;
};

// Trigamma at 1/4 both ways: a million-term direct sum with the integral
// tail 1/(N + 1/4) added back, against the closed form pi^2 + 8G.
TrigammaReport trigamma_quarter();

// (zeta'/zeta)'(1/2), computed from zeta, zeta', zeta'' at s = 1/2 via the
// eta alternating series (valid for Re s > 0) differentiated termwise and
// summed with iterated-averaging acceleration.
SpecialValue zeta_log_deriv2_half();

// The same eta-series evaluator at an arbitrary s > 0, s != 1; exposed so
// tests can cross-check it at points with classical values.
double zeta_via_eta(double s);

// Ordinates gamma of zeros 1/2 + i*gamma, ascending. warning is nonempty
// when the table's first ordinate is not the standard 14.134725 (a sanity
// notice, not an error: custom tables are allowed).
struct ZerosTable {
  std::vector<double> ordinates;
  std::string source_path;
  std::string warning;
};

// One decimal ordinate per line; blank lines and '#' comments skipped.
// Throws ParseError (with line number) on junk or a nonpositive ordinate,
// NotIncreasing when the ordering fails.
ZerosTable parse_zeros(const std::string& path);

struct ZeroSumPartial {
  double partial = 0.0;
  std::size_t used = 0;
};

// Partial sum over the table of 1/(rho - 1/2)^{k2} paired with conjugates:
// each zero contributes 2*(-1)^{k2/2} / gamma^{k2}. k2 even >= 2.
ZeroSumPartial zero_sum(unsigned k2, const ZerosTable& zeros);

struct IdentityReport {
  double partial = 0.0;       // zero_sum(2, table)
  std::size_t zeros_used = 0;
  double rhs = 0.0;           // -(zeta'/zeta)'(1/2) - pi^2/4 - 2G + 8
  double gap = 0.0;           // |partial - rhs|, dominated by truncation
  double truncation_estimate = 0.0;  // density-model tail of the zero sum
  double corrected_gap = 0.0;        // |partial - tail - rhs|
};

// The k = 1 zero-sum identity with an explicit truncation-error field.
// The table's tail sum of 2/gamma^2 is estimated by integrating against
// the zero-counting density log(t/2pi)/2pi, giving (log(T/2pi)+1)/(pi T)
// past the last ordinate T; the sum's terms are negative, so the tail is
// subtracted before comparing with the right-hand side.
IdentityReport zero_sum_identity_check(const ZerosTable& zeros);

// Positive branch of n * (prime-scaled alternating matrix) against the
// lattice (2pi/log p) k. n must be odd (kernel parity); records whether
// the required zero eigenvalue appeared.
FitReport prime_limit_check(std::uint64_t p, std::size_t n);

// Interior-window rms of deviations relative to the model value
// spacing * k at each branch index; the right scale for lattices whose
// absolute spacing is a constant rather than shrinking with n.
double interior_relative_rms(const FitReport& fit, double spacing);

}  // namespace hilspec
