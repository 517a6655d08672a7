#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "matineq/hermitian.hpp"

namespace matineq {

// SplitMix64.  Small, documented, identical streams on every platform; the
// whole verification record is citable by (seed, index).
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // 53-bit uniform in [0, 1)
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  // Box-Muller from two 53-bit uniforms.
  std::pair<double, double> normal_pair() {
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 6.283185307179586476925286766559 * u2;
    return {r * std::cos(t), r * std::sin(t)};
  }
};

// Sub-seed derivation: sample i of stream `seed` uses
// splitmix64(seed xor golden*(i+1)).next().  Concurrent evaluation order
// cannot change any sample.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (0x9E3779B97F4A7C15ull * (index + 1)));
  return g.next();
}

inline std::uint64_t stream_seed(std::uint64_t seed, const std::string& name) {
  return mix_seed(seed, fnv1a(name));
}

inline double gen_scalar(std::uint64_t seed, double lo, double hi) {
  require(lo > 0.0 && hi > lo, "gen_scalar: need 0 < lo < hi");
  SplitMix64 g(seed);
  return g.log_uniform(lo, hi);
}

// Entries are complex standard normals (real and imaginary N(0, 1/2)).
inline ComplexMatrix gen_matrix(std::uint64_t seed, int rows, int cols) {
  ComplexMatrix m(rows, cols);
  SplitMix64 g(seed);
  const double inv_sqrt2 = 0.70710678118654752440;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const auto [re, im] = g.normal_pair();
      m(i, j) = Complex(re * inv_sqrt2, im * inv_sqrt2);
    }
  }
  return m;
}

// G G* for a PRNG-driven complex normal G; positive definite with
// probability one.
inline HermitianPSD gen_psd(std::uint64_t seed, int n) {
  require(n >= 1 && n <= kMaxDim, "gen_psd: dimension out of range");
  const ComplexMatrix g = gen_matrix(seed, n, n);
  ComplexMatrix m = g * g.adjoint();
  m = 0.5 * (m + m.adjoint());
  return HermitianPSD::make(m);
}

// A unitary from the eigenvectors of a seeded Hermitian matrix.
inline ComplexMatrix gen_unitary(std::uint64_t seed, int n) {
  const ComplexMatrix g = gen_matrix(seed, n, n);
  const ComplexMatrix h = 0.5 * (g + g.adjoint());
  return eig_hermitian(h).unitary;
}

struct ScalarSample {
  double a = 1.0;
  double b = 1.0;
  double nu = 0.5;
  std::string label = "random";
};

struct MatrixSample {
  HermitianPSD a;
  HermitianPSD b;
  ComplexMatrix x;
  double nu = 0.25;
  std::string label = "random";
};

// Structured edge cases: identity and equal pairs, commuting diagonals,
// rank-deficient and near-singular spectra, a zero X, and the 1x1
// scalar embeddings that carry the tight scalar witnesses.
inline std::vector<MatrixSample> structured_cases(
    int n, std::uint64_t seed = 0x5eed5eed5eed5eedull) {
  require(n >= 1 && n <= kMaxDim, "structured_cases: dimension out of range");
  std::vector<MatrixSample> cases;
  const ComplexMatrix eye = ComplexMatrix::identity(n);

  auto push = [&](std::string label, HermitianPSD a, HermitianPSD b,
                  ComplexMatrix x) {
    MatrixSample s{std::move(a), std::move(b), std::move(x), 0.25,
                   std::move(label)};
    cases.push_back(std::move(s));
  };

  push("identity", HermitianPSD::make(eye), HermitianPSD::make(eye), eye);

  const HermitianPSD w = gen_psd(mix_seed(seed, 1), n);
  push("equal-pair", w, w, eye);

  {
    SplitMix64 g(mix_seed(seed, 2));
    std::vector<double> d1(n), d2(n);
    for (int i = 0; i < n; ++i) d1[i] = g.log_uniform(1e-2, 1e2);
    for (int i = 0; i < n; ++i) d2[i] = g.log_uniform(1e-2, 1e2);
    push("commuting-diagonal", HermitianPSD::make(ComplexMatrix::diag(d1)),
         HermitianPSD::make(ComplexMatrix::diag(d2)), eye);
  }

  {
    const ComplexMatrix u = gen_unitary(mix_seed(seed, 3), n);
    SplitMix64 g(mix_seed(seed, 4));
    std::vector<double> eigs(n);
    for (int i = 0; i < n; ++i) eigs[i] = g.log_uniform(1e-1, 1e1);
    eigs[n - 1] = 0.0;  // rank deficient
    push("rank-deficient", HermitianPSD::from_spectrum(u, eigs),
         gen_psd(mix_seed(seed, 5), n), eye);
  }

  {
    const ComplexMatrix u = gen_unitary(mix_seed(seed, 6), n);
    SplitMix64 g(mix_seed(seed, 7));
    std::vector<double> eigs(n);
    for (int i = 0; i < n; ++i) eigs[i] = g.log_uniform(1e-1, 1e1);
    std::sort(eigs.begin(), eigs.end(), std::greater<>());
    eigs[n - 1] = (n > 1) ? 1e-12 * eigs[0] : 1e-12;  // near singular
    push("near-singular", HermitianPSD::from_spectrum(u, eigs),
         gen_psd(mix_seed(seed, 8), n), eye);
  }

  push("zero-x", gen_psd(mix_seed(seed, 9), n), gen_psd(mix_seed(seed, 10), n),
       ComplexMatrix(n, n));

  auto scalar1x1 = [](double a, double b, double x) {
    return MatrixSample{
        HermitianPSD::make(ComplexMatrix::diag({a})),
        HermitianPSD::make(ComplexMatrix::diag({b})),
        ComplexMatrix::diag({x}), 0.25, ""};
  };
  MatrixSample s = scalar1x1(1.0, 1.0, 1.0);
  s.label = "scalar-identity-1x1";
  cases.push_back(s);
  s = scalar1x1(4.0, 1.0, 1.0);
  s.label = "scalar-4-1";
  cases.push_back(s);
  s = scalar1x1(2.5, 2.5, 1.0);
  s.label = "scalar-equal";
  cases.push_back(s);
  s = scalar1x1(1.0, 1e-15, 1.0);
  s.label = "scalar-near-zero";
  cases.push_back(s);

  return cases;
}

// Scalar structured pairs: tight and extreme-ratio witnesses.
inline std::vector<std::pair<double, double>> structured_scalar_pairs() {
  return {{1.0, 1.0}, {4.0, 1.0}, {16.0, 1.0}, {1.0, 16.0},
          {1.0, 1e-6}, {1e3, 1e-3}, {2.5, 2.5}};
}

// Deterministic seeded generators over a sampling plan.
struct SampleConfig {
  std::uint64_t seed = 20250810ull;
  int n = 6;                  // max matrix dimension drawn
  int count = 1000;           // random samples per check
  double scalar_lo = 1e-3;    // log-uniform scalar range
  double scalar_hi = 1e3;
  std::vector<double> nu_grid;  // defaults to k/100, k = 1..99
  bool include_structured = true;

  static std::vector<double> default_nu_grid() {
    std::vector<double> g;
    g.reserve(99);
    for (int k = 1; k <= 99; ++k) g.push_back(static_cast<double>(k) / 100.0);
    return g;
  }

  std::vector<double> nus() const {
    return nu_grid.empty() ? default_nu_grid() : nu_grid;
  }
};

}  // namespace matineq
