#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "matineq/matrix.hpp"

namespace matineq {

struct SpectralDecomp {
  std::vector<double> eigenvalues;  // descending
  ComplexMatrix unitary;            // columns are the eigenvectors
};

namespace detail {

inline double offdiag_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

inline double asymmetry_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      s += std::norm(m(i, j) - std::conj(m(j, i)));
  return 0.5 * std::sqrt(s);
}

}  // namespace detail

// Cyclic Jacobi eigendecomposition for Hermitian input.  Deterministic:
// fixed (p, q) sweep order, convergence when the off-diagonal HS norm drops
// below 1e-14 * ||M||, hard cap of 100 sweeps.  Eigenvalues come back
// sorted descending with the unitary's columns permuted to match.
inline SpectralDecomp eig_hermitian(const ComplexMatrix& m) {
  require(m.square(), "eig_hermitian: matrix must be square");
  const int n = m.rows();
  const double scale = m.hs_norm();
  require(detail::asymmetry_norm(m) <= kHermTol * scale,
          "eig_hermitian: matrix is not Hermitian");

  // iterate on the exactly Hermitian part
  ComplexMatrix a = 0.5 * (m + m.adjoint());
  ComplexMatrix u = ComplexMatrix::identity(n);
  const double target = 1e-14 * scale;

  bool converged = (detail::offdiag_norm(a) <= target);
  for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double g = std::abs(apq);
        if (g == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * g);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex phase = apq / g;
        const Complex pc = std::conj(phase);
        for (int i = 0; i < n; ++i) {  // A <- A V
          const Complex aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - s * pc * aiq;
          a(i, q) = s * aip + c * pc * aiq;
        }
        for (int j = 0; j < n; ++j) {  // A <- V* A
          const Complex apj = a(p, j), aqj = a(q, j);
          a(p, j) = c * apj - s * phase * aqj;
          a(q, j) = s * apj + c * phase * aqj;
        }
        for (int i = 0; i < n; ++i) {  // U <- U V
          const Complex uip = u(i, p), uiq = u(i, q);
          u(i, p) = c * uip - s * pc * uiq;
          u(i, q) = s * uip + c * pc * uiq;
        }
        a(p, q) = Complex(0.0, 0.0);
        a(q, p) = Complex(0.0, 0.0);
        a(p, p) = Complex(a(p, p).real(), 0.0);
        a(q, q) = Complex(a(q, q).real(), 0.0);
      }
    }
    converged = (detail::offdiag_norm(a) <= target);
  }
  if (!converged)
    throw NumericalError("eig_hermitian: Jacobi sweep cap exceeded");

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
    return a(i, i).real() > a(j, j).real();
  });

  SpectralDecomp out;
  out.eigenvalues.resize(n);
  out.unitary = ComplexMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(idx[j], idx[j]).real();
    for (int i = 0; i < n; ++i) out.unitary(i, j) = u(i, idx[j]);
  }
  return out;
}

// Validated positive semidefinite matrix with its spectral decomposition.
// Eigenvalues in [-kPsdClampTol * |lambda|_max, 0) are clamped to zero;
// anything more negative rejects the input.
class HermitianPSD {
 public:
  static HermitianPSD make(const ComplexMatrix& m) {
    require(m.square(), "HermitianPSD: matrix must be square");
    ComplexMatrix sym = 0.5 * (m + m.adjoint());
    require(detail::asymmetry_norm(m) <= kHermTol * std::max(m.hs_norm(), 0.0) ||
                detail::asymmetry_norm(m) == 0.0,
            "HermitianPSD: matrix is not Hermitian");
    SpectralDecomp d = eig_hermitian(sym);
    double amax = 0.0;
    for (double l : d.eigenvalues) amax = std::max(amax, std::abs(l));
    for (double& l : d.eigenvalues) {
      if (l < 0.0) {
        require(l >= -kPsdClampTol * amax,
                "HermitianPSD: matrix is not positive semidefinite");
        l = 0.0;
      }
    }
    return HermitianPSD(std::move(sym), std::move(d));
  }

  // Build U diag(eigs) U* from a given unitary and nonnegative spectrum
  // (structured generators use this to pin exact eigenvalues).
  static HermitianPSD from_spectrum(const ComplexMatrix& unitary,
                                    std::vector<double> eigs) {
    require(unitary.square(), "from_spectrum: unitary must be square");
    const int n = unitary.rows();
    require(static_cast<int>(eigs.size()) == n,
            "from_spectrum: eigenvalue count mismatch");
    for (double l : eigs) require(l >= 0.0, "from_spectrum: negative eigenvalue");

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int i, int j) { return eigs[i] > eigs[j]; });
    SpectralDecomp d;
    d.eigenvalues.resize(n);
    d.unitary = ComplexMatrix(n, n);
    for (int j = 0; j < n; ++j) {
      d.eigenvalues[j] = eigs[idx[j]];
      for (int i = 0; i < n; ++i) d.unitary(i, j) = unitary(i, idx[j]);
    }
    ComplexMatrix w(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) w(i, j) = d.unitary(i, j) * d.eigenvalues[j];
    ComplexMatrix mat = w * d.unitary.adjoint();
    mat = 0.5 * (mat + mat.adjoint());
    return HermitianPSD(std::move(mat), std::move(d));
  }

  int dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }
  const SpectralDecomp& decomp() const { return d_; }

  double max_eig() const { return d_.eigenvalues.front(); }
  double min_eig() const { return d_.eigenvalues.back(); }
  bool positive_definite() const { return min_eig() > 0.0; }

  double trace_real() const { return m_.trace().real(); }

  double det_real() const {
    double p = 1.0;
    for (double l : d_.eigenvalues) p *= l;
    return p;
  }

  // U diag(lambda^t) U*.  pow(0, 0) = 1 so the zeroth power of a singular
  // matrix is the identity; negative powers require a definite matrix.
  ComplexMatrix frac_power(double t) const {
    if (t < 0.0)
      require(positive_definite(),
              "frac_power: negative power of a singular matrix");
    const int n = dim();
    ComplexMatrix w(n, n);
    for (int j = 0; j < n; ++j) {
      const double lt = std::pow(d_.eigenvalues[j], t);
      for (int i = 0; i < n; ++i) w(i, j) = d_.unitary(i, j) * lt;
    }
    ComplexMatrix out = w * d_.unitary.adjoint();
    return 0.5 * (out + out.adjoint());
  }

 private:
  HermitianPSD(ComplexMatrix m, SpectralDecomp d)
      : m_(std::move(m)), d_(std::move(d)) {}

  ComplexMatrix m_;
  SpectralDecomp d_;
};

// Singular values: square roots of the eigenvalues of the smaller Gram
// matrix, descending.
inline std::vector<double> singular_values(const ComplexMatrix& m) {
  const bool tall = m.rows() >= m.cols();
  const ComplexMatrix gram = tall ? (m.adjoint() * m) : (m * m.adjoint());
  SpectralDecomp d = eig_hermitian(gram);
  std::vector<double> s;
  s.reserve(d.eigenvalues.size());
  for (double l : d.eigenvalues) s.push_back(std::sqrt(std::max(l, 0.0)));
  return s;
}

inline std::uint64_t hash_mix(std::uint64_t h, const HermitianPSD& a) {
  return hash_mix(h, a.matrix());
}

}  // namespace matineq
