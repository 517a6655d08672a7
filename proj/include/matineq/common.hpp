#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace matineq {

inline constexpr int kMaxDim = 64;

// Default relative tolerances.  Scalar chains are a handful of double
// precision flops; matrix chains additionally carry the eigensolver budget.
inline constexpr double kScalarTol = 1e-12;
inline constexpr double kMatrixTol = 1e-8;

// HermitianPSD construction: allowed relative asymmetry and eigenvalue
// clamp window (eigenvalues in [-kPsdClampTol*|lambda|_max, 0) snap to 0).
inline constexpr double kHermTol = 1e-8;
inline constexpr double kPsdClampTol = 1e-10;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw DomainError(msg);
}

// Typeset reading of a published formula versus its derivation-consistent
// correction.  Audited pairs live under one check id with both variants.
enum class Variant { Printed, Corrected };

inline const char* to_string(Variant v) {
  return v == Variant::Printed ? "printed" : "corrected";
}

inline Variant variant_from_string(const std::string& s) {
  if (s == "printed") return Variant::Printed;
  // "derived" is the second variant of the quadratic gap bounds
  if (s == "corrected" || s == "derived") return Variant::Corrected;
  throw DomainError("unknown variant: " + s);
}

// x^m by repeated multiplication.  Keeps the sign for odd m (the
// refinement blocks may raise a negative base to an integer power) and is
// reproducible across libm builds.
inline double int_pow(double x, int m) {
  double acc = 1.0;
  for (int i = 0; i < m; ++i) acc *= x;
  return acc;
}

// FNV-1a over raw bytes; input digests hash IEEE-754 bit patterns.
inline std::uint64_t fnv1a(const void* data, std::size_t len,
                           std::uint64_t h = 0xcbf29ce484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::uint64_t fnv1a(const std::string& s) {
  return fnv1a(s.data(), s.size());
}

inline std::uint64_t hash_mix(std::uint64_t h, double x) {
  const std::uint64_t bits = std::bit_cast<std::uint64_t>(x);
  return fnv1a(&bits, sizeof bits, h);
}

inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t x) {
  return fnv1a(&x, sizeof x, h);
}

// Scale for the relative slack test on a chain link L <= U.  `mag` folds in
// the magnitude of cancelling operands (phi(z) - phi(w) with phi(z) ~ 1e9
// rounds at the 1e-7 level even when the true difference is 0); without it
// exact-equality links fail on rounding alone.
inline double link_scale(double lo, double hi, double mag = 0.0) {
  return std::max({1.0, std::abs(lo), std::abs(hi), std::abs(mag)});
}

}  // namespace matineq
