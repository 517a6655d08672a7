#pragma once

#include <cmath>
#include <complex>
#include <initializer_list>
#include <utility>
#include <vector>

#include "matineq/common.hpp"

namespace matineq {

using Complex = std::complex<double>;

// Dense row-major complex matrix.  Dimensions are capped at kMaxDim; all
// values are immutable in practice (operations return fresh matrices).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  ComplexMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    require(rows >= 1 && cols >= 1 && rows <= kMaxDim && cols <= kMaxDim,
            "matrix dimensions must lie in [1, 64]");
  }

  ComplexMatrix(int rows, int cols, std::vector<Complex> entries)
      : rows_(rows), cols_(cols), e_(std::move(entries)) {
    require(rows >= 1 && cols >= 1 && rows <= kMaxDim && cols <= kMaxDim,
            "matrix dimensions must lie in [1, 64]");
    require(e_.size() ==
                static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
            "entry count does not match dimensions");
    for (const Complex& v : e_) {
      require(std::isfinite(v.real()) && std::isfinite(v.imag()),
              "matrix entries must be finite");
    }
  }

  static ComplexMatrix identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Complex(1.0, 0.0);
    return m;
  }

  static ComplexMatrix diag(const std::vector<double>& d) {
    const int n = static_cast<int>(d.size());
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Complex(d[i], 0.0);
    return m;
  }

  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows) {
    const int r = static_cast<int>(rows.size());
    const int c = static_cast<int>(rows.begin()->size());
    ComplexMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
      require(static_cast<int>(row.size()) == c, "ragged row list");
      int j = 0;
      for (const Complex& v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Complex& operator()(int i, int j) {
    return e_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const Complex& operator()(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * cols_ + j];
  }

  const std::vector<Complex>& entries() const { return e_; }

  ComplexMatrix adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
  }

  Complex trace() const {
    require(square(), "trace: matrix must be square");
    Complex t(0.0, 0.0);
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  // Hilbert-Schmidt norm, entrywise.
  double hs_norm_sq() const {
    double s = 0.0;
    for (const Complex& v : e_) s += std::norm(v);
    return s;
  }
  double hs_norm() const { return std::sqrt(hs_norm_sq()); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> e_;
};

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(),
          "matrix addition: dimension mismatch");
  ComplexMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(),
          "matrix subtraction: dimension mismatch");
  ComplexMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.cols() == b.rows(), "matrix product: dimension mismatch");
  ComplexMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

inline ComplexMatrix operator*(double s, const ComplexMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = s * m(i, j);
  return out;
}

inline ComplexMatrix operator*(const Complex& s, const ComplexMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = s * m(i, j);
  return out;
}

// Determinant by LU with partial pivoting.
inline Complex det(const ComplexMatrix& m) {
  require(m.square(), "det: matrix must be square");
  const int n = m.rows();
  ComplexMatrix a = m;
  Complex d(1.0, 0.0);
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(a(k, k));
    for (int i = k + 1; i < n; ++i) {
      const double v = std::abs(a(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0) return Complex(0.0, 0.0);
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      d = -d;
    }
    d *= a(k, k);
    for (int i = k + 1; i < n; ++i) {
      const Complex f = a(i, k) / a(k, k);
      for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return d;
}

inline std::uint64_t hash_mix(std::uint64_t h, const ComplexMatrix& m) {
  h = hash_mix(h, static_cast<std::uint64_t>(m.rows()));
  h = hash_mix(h, static_cast<std::uint64_t>(m.cols()));
  for (const Complex& v : m.entries()) {
    h = hash_mix(h, v.real());
    h = hash_mix(h, v.imag());
  }
  return h;
}

}  // namespace matineq
