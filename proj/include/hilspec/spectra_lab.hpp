#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hilspec/hermitian_eigen.hpp"
#include "hilspec/matrix_families.hpp"

namespace hilspec {

// Lattice fit of a positive eigenvalue branch. deviations[k] is the
// plain difference empirical - model at branch index k+1; max_abs and
// rms summarize the whole branch.
struct FitReport {
  std::size_t n = 0;
  std::string model;
  std::vector<double> deviations;
  double max_abs = 0.0;
  double rms = 0.0;
  bool zero_present = false;
};

// rms of deviations over branch indices k in [n/8, 3n/8] (1-based).
double interior_rms(const FitReport& fit);

// Positive branch of Alternating(n) against (2pi/n)(k - 1/2) for even n
// and (2pi/n)k for odd n.
FitReport alternating_lattice_fit(std::size_t n);

// Numeric spectrum of AlternatingQuant(n) against its closed form;
// max_gap compares the sorted imaginary parts entrywise.
struct ExactMatchReport {
  std::size_t n = 0;
  double max_gap = 0.0;
  bool pass = false;
};
ExactMatchReport alt_quant_spectrum_check(std::size_t n, double tol = 1e-8);

// Eigenvalue counts against the limiting distribution. For the cos case
// minor_count is #{nonzero |x| <= theta} and major_count the rest; for
// the sin case minor_count collects eigenvalues within pi/2 of pi and
// major_count those near zero. predicted_* carry floor(theta n / pi)
// and floor((1 - theta/pi) n). ks_distance is the sup gap between the
// empirical CDF and the limit CDF (cos case only; 0 for sin).
struct SplitReport {
  std::size_t n = 0;
  double theta = 0.0;
  std::size_t minor_count = 0;
  std::size_t major_count = 0;
  std::size_t zero_count = 0;
  std::size_t predicted_minor = 0;
  std::size_t predicted_major = 0;
  double ks_distance = 0.0;
};

SplitReport osc_cos_split(std::size_t n, double theta);
SplitReport osc_sin_split(std::size_t n, double theta);

// Piecewise symbol and limiting density for the oscillatory families.
// Breakpoints take the value of the branch to their right.
double szego_symbol_cos(double theta, double x);  // x in [0, 2pi)
int szego_density_cos(double theta, double x);    // x in [-pi, pi]
double szego_symbol_sin(double theta, double x);  // x in [0, 2pi)

// CDF of the cos-case limit distribution on [-pi, pi].
double szego_model_cdf(double theta, double t);

enum class TestFn { Square, Quartic, Abs, Indicator };

struct MomentReport {
  double empirical = 0.0;
  double predicted = 0.0;
  double gap = 0.0;
};

// Mean of F over the numeric eigenvalues against the symbol average:
// (1/2pi) integral F(f(x)) dx for OscCos (composite midpoint rule with
// 1e5 panels split at theta and 2pi - theta), and the two-atom value
// (theta/pi) F(pi) + (1 - theta/pi) F(0) for OscSin. a, b only apply
// to the indicator function.
MomentReport szego_moment_check(MatrixFamily family, std::size_t n,
                                double theta, TestFn fn, double a = 0.0,
                                double b = 0.0);

struct RadiusReport {
  std::size_t n = 0;
  double radius = 0.0;
  bool pass = false;  // radius < pi
};

// Spectral radius of Alternating or SymmetricHilbert via the solver.
RadiusReport spectral_radius_check(MatrixFamily family, std::size_t n);

// Singular-value certificates used for kernel parity scans where a full
// eigensolve per n would be wasteful. Both run one real LU of the built
// matrix. smallest_sv_upper returns ||A x|| / ||x|| after one inverse
// iteration (an upper bound on the smallest singular value, tiny for a
// singular matrix); inverse_frobenius returns ||A^-1||_F, so
// 1/inverse_frobenius is a lower bound (+inf when LU finds a zero pivot).
double smallest_sv_upper(const DenseMatrix& a);
double inverse_frobenius(const DenseMatrix& a);

}  // namespace hilspec
