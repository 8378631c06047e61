#include "hilspec/hermitian_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hilspec {

namespace {

constexpr int kMaxSweeps = 60;

double offdiag_frobenius(const DenseMatrix& w) {
  const std::size_t n = w.size();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar* r = w.row(i);
    for (std::size_t j = i + 1; j < n; ++j) s += std::norm(r[j]);
  }
  return std::sqrt(2.0 * s);
}

// One unitary rotation zeroing w(p,q). vt holds the accumulated basis as
// rows (vt row k = eigenvector k), so its updates stay contiguous.
void rotate(DenseMatrix& w, DenseMatrix& vt, std::size_t p, std::size_t q) {
  const std::size_t n = w.size();
  const Scalar gamma = w(p, q);
  const double r = std::abs(gamma);
  const double alpha = w(p, p).real();
  const double beta = w(q, q).real();

  const double theta = (beta - alpha) / (2.0 * r);
  const double sgn = theta >= 0.0 ? 1.0 : -1.0;
  const double t = -sgn / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const Scalar s = (std::conj(gamma) / r) * (t * c);
  const Scalar sc = std::conj(s);

  w(p, p) = Scalar{alpha + t * r, 0.0};
  w(q, q) = Scalar{beta - t * r, 0.0};
  w(p, q) = Scalar{};
  w(q, p) = Scalar{};

  Scalar* wp = w.row(p);
  Scalar* wq = w.row(q);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == p || j == q) continue;
    const Scalar hpj = wp[j];
    const Scalar hqj = wq[j];
    const Scalar npj = c * hpj + sc * hqj;
    const Scalar nqj = -s * hpj + c * hqj;
    wp[j] = npj;
    wq[j] = nqj;
    w(j, p) = std::conj(npj);
    w(j, q) = std::conj(nqj);
  }

  // vt rows are V columns, so they pick up U from the right: the
  // conjugation pattern is the mirror of the row update above.
  Scalar* vp = vt.row(p);
  Scalar* vq = vt.row(q);
  for (std::size_t j = 0; j < n; ++j) {
    const Scalar a = vp[j];
    const Scalar b = vq[j];
    vp[j] = c * a + s * b;
    vq[j] = -sc * a + c * b;
  }
}

// max_j ||H v_j - w_j v_j||_2 with the eigenvectors still stored as rows.
double residual_norm(const DenseMatrix& h, const DenseMatrix& vt,
                     const std::vector<double>& values) {
  const std::size_t n = h.size();
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const Scalar* v = vt.row(j);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar* hi = h.row(i);
      Scalar y{0.0, 0.0};
      for (std::size_t k = 0; k < n; ++k) y += hi[k] * v[k];
      acc += std::norm(y - values[j] * v[i]);
    }
    worst = std::max(worst, std::sqrt(acc));
  }
  return worst;
}

}  // namespace

EigenDecomposition hermitian_eigen(const DenseMatrix& h, double tol) {
  const std::size_t n = h.size();
  if (tol <= 0.0) throw InvalidParameter("hermitian_eigen: tol must be positive");

  const double norm_f = frobenius(h);
  double herm_dev = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      herm_dev = std::max(herm_dev, std::abs(h(i, j) - std::conj(h(j, i))));
  if (herm_dev > tol * norm_f)
    throw NotHermitian("hermitian_eigen: input deviates from H = H^* beyond tol");

  // Work on an exactly Hermitian copy built from the upper triangle.
  DenseMatrix w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w(i, i) = Scalar{h(i, i).real(), 0.0};
    for (std::size_t j = i + 1; j < n; ++j) {
      w(i, j) = h(i, j);
      w(j, i) = std::conj(h(i, j));
    }
  }
  DenseMatrix vt = DenseMatrix::identity(n);

  EigenDecomposition out;
  out.values.resize(n);

  int sweeps = 0;
  double thresh = tol * norm_f;
  for (;;) {
    while (offdiag_frobenius(w) > thresh) {
      if (sweeps == kMaxSweeps)
        throw NoConvergence("hermitian_eigen: sweep cap reached");
      // Rotations below skip_tol cannot push the off-diagonal norm back
      // above thresh (n^2/2 of them stay under thresh/sqrt(2)).
      const double skip_tol = n > 0 ? thresh / static_cast<double>(n) : 0.0;
      for (std::size_t p = 0; p + 1 < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
          if (std::abs(w(p, q)) > skip_tol) rotate(w, vt, p, q);
      ++sweeps;
    }
    for (std::size_t i = 0; i < n; ++i) out.values[i] = w(i, i).real();
    out.residual = norm_f > 0.0 ? residual_norm(h, vt, out.values) / norm_f : 0.0;
    if (out.residual <= tol || n == 0) break;
    if (sweeps == kMaxSweeps)
      throw NoConvergence("hermitian_eigen: residual above tol at sweep cap");
    thresh *= 1e-2;  // polish further; quadratic convergence makes this cheap
  }
  out.sweeps_used = sweeps;

  // Ascending eigenvalues; ties keep diagonal order (stable sort).
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return out.values[a] < out.values[b];
  });

  std::vector<double> sorted_values(n);
  DenseMatrix vectors(n);
  for (std::size_t k = 0; k < n; ++k) {
    sorted_values[k] = out.values[perm[k]];
    const Scalar* src = vt.row(perm[k]);
    for (std::size_t i = 0; i < n; ++i) vectors(i, k) = src[i];
  }
  out.values = std::move(sorted_values);
  out.vectors = std::move(vectors);
  return out;
}

SpectrumSet skew_spectrum(const DenseMatrix& a, double tol) {
  const std::size_t n = a.size();
  const double norm_f = frobenius(a);

  double im_dev = 0.0;
  double skew_dev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      im_dev = std::max({im_dev, std::abs(a(i, j).imag()), std::abs(a(j, i).imag())});
      skew_dev = std::max(skew_dev, std::abs(a(i, j).real() + a(j, i).real()));
    }
  }
  if (im_dev > tol * norm_f)
    throw NotSkew("skew_spectrum: input has imaginary entries");
  if (skew_dev > tol * norm_f)
    throw NotSkew("skew_spectrum: input deviates from A = -A^T beyond tol");

  DenseMatrix h(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h(i, j) = Scalar{0.0, a(i, j).real()};

  EigenDecomposition eig = hermitian_eigen(h, tol);

  SpectrumSet out;
  out.kind = SpectrumKind::SkewImaginary;
  out.residual = eig.residual;

  const double snap = static_cast<double>(n) * 1e-11 * norm_f;
  std::vector<double> pos;
  std::vector<double> neg_abs;
  for (double v : eig.values) {
    if (std::abs(v) <= snap)
      ++out.zero_count;
    else if (v > 0.0)
      pos.push_back(v);
    else
      neg_abs.push_back(-v);
  }
  std::sort(pos.begin(), pos.end());
  std::sort(neg_abs.begin(), neg_abs.end());
  // Borderline snaps can leave the branches uneven; fold the smallest
  // extras into the kernel so the pairing stays well defined.
  while (pos.size() > neg_abs.size()) {
    pos.erase(pos.begin());
    ++out.zero_count;
  }
  while (neg_abs.size() > pos.size()) {
    neg_abs.erase(neg_abs.begin());
    ++out.zero_count;
  }

  out.positive_branch.resize(pos.size());
  for (std::size_t k = 0; k < pos.size(); ++k)
    out.positive_branch[k] = 0.5 * (pos[k] + neg_abs[k]);

  out.eigenvalues.reserve(n);
  for (std::size_t k = pos.size(); k-- > 0;)
    out.eigenvalues.emplace_back(0.0, -out.positive_branch[k]);
  for (std::size_t k = 0; k < out.zero_count; ++k)
    out.eigenvalues.emplace_back(0.0, 0.0);
  for (std::size_t k = 0; k < pos.size(); ++k)
    out.eigenvalues.emplace_back(0.0, out.positive_branch[k]);
  return out;
}

}  // namespace hilspec
