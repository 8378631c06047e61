#pragma once

#include <cstddef>
#include <vector>

#include "hilspec/dense_matrix.hpp"

namespace hilspec {

// Eigensystem of a Hermitian matrix. values is ascending; equal values
// keep the order the diagonal had when the sweeps stopped. vectors holds
// the eigenvectors as columns and is unitary to working precision.
// residual = max_j ||H v_j - w_j v_j||_2 / ||H||_F against the input H.
struct EigenDecomposition {
  std::vector<double> values;
  DenseMatrix vectors;
  double residual = 0.0;
  int sweeps_used = 0;
};

// Cyclic Jacobi with unitary 2x2 rotations, double precision throughout.
// Sweeps stop once the off-diagonal Frobenius norm falls below
// tol * ||H||_F; 60 sweeps is the hard cap (NoConvergence beyond it).
// Throws NotHermitian when max |H_mn - conj(H_nm)| > tol * ||H||_F.
EigenDecomposition hermitian_eigen(const DenseMatrix& h, double tol = 1e-12);

enum class SpectrumKind { HermitianReal, SkewImaginary };

// Spectrum of a real skew-symmetric matrix: zeros plus conjugate pairs
// +-i mu. eigenvalues is assembled symmetrically from positive_branch,
// so the multiset equals its own negation exactly.
struct SpectrumSet {
  std::vector<Scalar> eigenvalues;      // ascending by imaginary part
  SpectrumKind kind = SpectrumKind::SkewImaginary;
  std::size_t zero_count = 0;
  std::vector<double> positive_branch;  // ascending, strictly positive
  double residual = 0.0;
};

// Diagonalizes i*A, which is Hermitian when A is real skew-symmetric.
// Magnitudes at or below n * 1e-11 * ||A||_F snap to zero, which keeps
// the forced kernel of odd n from leaking into the positive branch.
// Throws NotSkew when A has imaginary parts or A + A^T entries larger
// than tol * ||A||_F.
SpectrumSet skew_spectrum(const DenseMatrix& a, double tol = 1e-12);

}  // namespace hilspec
