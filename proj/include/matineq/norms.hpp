#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "matineq/hermitian.hpp"

namespace matineq {

// Selector over the unitarily invariant norm family.
struct NormSpec {
  enum class Kind { HilbertSchmidt, TraceNorm, OperatorNorm, KyFan, Schatten };

  Kind kind = Kind::HilbertSchmidt;
  int k = 1;       // Ky Fan order
  double p = 2.0;  // Schatten exponent

  static NormSpec hs() { return {Kind::HilbertSchmidt}; }
  static NormSpec trace_norm() { return {Kind::TraceNorm}; }
  static NormSpec operator_norm() { return {Kind::OperatorNorm}; }
  static NormSpec ky_fan(int k) {
    require(k >= 1, "KyFan order must be >= 1");
    return {Kind::KyFan, k};
  }
  static NormSpec schatten(double p) {
    require(p >= 1.0 && std::isfinite(p), "Schatten exponent must be finite and >= 1");
    return {Kind::Schatten, 1, p};
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::HilbertSchmidt:
        return "hs";
      case Kind::TraceNorm:
        return "trace";
      case Kind::OperatorNorm:
        return "op";
      case Kind::KyFan:
        return "kyfan:" + std::to_string(k);
      case Kind::Schatten: {
        // drop a trailing ".000000" for integral exponents
        if (p == std::floor(p))
          return "schatten:" + std::to_string(static_cast<int>(p));
        return "schatten:" + std::to_string(p);
      }
    }
    return "?";
  }

  static NormSpec parse(const std::string& s) {
    if (s == "hs") return hs();
    if (s == "trace") return trace_norm();
    if (s == "op") return operator_norm();
    if (s.rfind("kyfan:", 0) == 0) return ky_fan(std::stoi(s.substr(6)));
    if (s.rfind("schatten:", 0) == 0) return schatten(std::stod(s.substr(9)));
    throw DomainError("unknown norm spec: " + s);
  }
};

inline double norm(const NormSpec& spec, const ComplexMatrix& m) {
  if (spec.kind == NormSpec::Kind::HilbertSchmidt) return m.hs_norm();
  const std::vector<double> s = singular_values(m);
  switch (spec.kind) {
    case NormSpec::Kind::TraceNorm: {
      double t = 0.0;
      for (double v : s) t += v;
      return t;
    }
    case NormSpec::Kind::OperatorNorm:
      return s.front();
    case NormSpec::Kind::KyFan: {
      require(spec.k <= static_cast<int>(s.size()),
              "KyFan order exceeds matrix dimension");
      double t = 0.0;
      for (int i = 0; i < spec.k; ++i) t += s[i];
      return t;
    }
    case NormSpec::Kind::Schatten: {
      double t = 0.0;
      for (double v : s) t += std::pow(v, spec.p);
      return std::pow(t, 1.0 / spec.p);
    }
    default:
      return 0.0;
  }
}

// The default quantification family for "any unitarily invariant norm"
// claims: 8 specs for n >= 3.  Schatten 1 and 2 are omitted as exact
// duplicates of the trace and HS norms; duplicate Ky Fan orders collapse
// for n < 3.
inline std::vector<NormSpec> all_default_specs(int n) {
  require(n >= 1 && n <= kMaxDim, "dimension out of range");
  std::vector<NormSpec> specs = {NormSpec::hs(), NormSpec::trace_norm(),
                                 NormSpec::operator_norm()};
  std::vector<int> ks = {1};
  if (n > 2) ks.push_back(2);
  if (n >= 2) ks.push_back(n);
  for (int k : ks) specs.push_back(NormSpec::ky_fan(k));
  specs.push_back(NormSpec::schatten(3.0));
  specs.push_back(NormSpec::schatten(4.0));
  return specs;
}

inline std::uint64_t hash_mix(std::uint64_t h, const NormSpec& s) {
  h = hash_mix(h, static_cast<std::uint64_t>(s.kind));
  h = hash_mix(h, static_cast<std::uint64_t>(s.k));
  return hash_mix(h, s.p);
}

}  // namespace matineq
