#pragma once

#include <cstddef>
#include <vector>

#include "hilspec/dense_matrix.hpp"

namespace hilspec {

enum class ClosedFormSource { AltQuant, SymQuant, CosecQuant };

// Spectrum given by an exact formula, kept in formula order k = 1..n.
struct ClosedFormSpectrum {
  std::size_t n = 0;
  std::vector<Scalar> values;
  ClosedFormSource source = ClosedFormSource::AltQuant;
};

// 2 i sin(pi/n) (k - (n+1)/2)
ClosedFormSpectrum alt_quant_spectrum(std::size_t n);
// (n + 1 - 2k) sin(pi/n)
ClosedFormSpectrum sym_quant_spectrum(std::size_t n);
// n + 1 - 2k
ClosedFormSpectrum cosec_quant_spectrum(std::size_t n);

// Eigenbasis of AlternatingQuant(n): P_mk = zeta_{2n}^{m(2k-1)} with
// zeta_{2n} = exp(i pi / n). The exponent is reduced mod 2n before the
// angle is formed, so no repeated complex powers accumulate error.
DenseMatrix alt_quant_eigenbasis(std::size_t n);
// Matching diagonal D with D_kk = 2 i sin(pi/n) (k - (n+1)/2); A P = P D.
DenseMatrix alt_quant_eigendiag(std::size_t n);

// Eigenbasis of CosecQuant(n): Q_mk = cos(pi(2m-1)(2k-1)/(2n) - pi/4).
DenseMatrix cosec_quant_eigenbasis(std::size_t n);
// Matching diagonal with entries n + 1 - 2m; C Q = Q D'.
DenseMatrix cosec_quant_eigendiag(std::size_t n);

struct DetCheck {
  std::size_t n = 0;
  int sign_expected = 0;
  int sign_observed = 0;
  double log_abs_expected = 0.0;
  double log_abs_observed = 0.0;
  bool pass = false;
};

// |det Q| = (n/2)^(n/2), compared in log magnitude; the sign is minus
// exactly when 4 divides n+1. pass needs the sign to match and the log
// gap to stay below 1e-8 * max(1, |expected|).
DetCheck cosec_eigenbasis_det_check(std::size_t n);

// Sums over the n-th roots of unity zeta^j = exp(2 pi i j / n), j = 1..n-1.
double rootsum_inverse(std::size_t n);                 // = (n-1)/2
double rootsum_ratio(std::size_t n, std::size_t k);    // = n - k, 1 <= k <= n-1
Scalar rootsum_shifted(std::size_t n, std::size_t k);  // = k - (n+1)/2, 1 <= k <= n

// Cosecant-weighted trigonometric sums over j = 1..n-1.
double cos_cosec_sum(std::size_t n, std::size_t k);  // = 0,        1 <= k <= n
double sin_cosec_sum(std::size_t n, std::size_t k);  // = n+1-2k,   1 <= k <= n
double cosec_sq_sum(std::size_t n);                  // = (n^2-1)/3

}  // namespace hilspec
