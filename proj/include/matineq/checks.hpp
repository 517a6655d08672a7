#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "matineq/norms.hpp"
#include "matineq/scalar.hpp"
#include "matineq/verdict.hpp"

namespace matineq {

namespace detail {

inline double hs2(const ComplexMatrix& m) { return m.hs_norm_sq(); }

inline void require_pair(const HermitianPSD& a, const HermitianPSD& b) {
  require(a.dim() == b.dim(), "A and B must have equal dimension");
}

inline void require_triple(const HermitianPSD& a, const HermitianPSD& b,
                           const ComplexMatrix& x) {
  require_pair(a, b);
  require(x.square() && x.rows() == a.dim(),
          "X must be square with the dimension of A and B");
}

inline std::uint64_t digest_ab(const HermitianPSD& a, const HermitianPSD& b,
                               double nu) {
  std::uint64_t h = fnv1a("ab", 2);
  h = hash_mix(h, a);
  h = hash_mix(h, b);
  return hash_mix(h, nu);
}

inline std::uint64_t digest_abx(const HermitianPSD& a, const HermitianPSD& b,
                                const ComplexMatrix& x, double nu) {
  std::uint64_t h = digest_ab(a, b, nu);
  return hash_mix(h, x);
}

// refinement heads w(P, Q) shared by the trace / det / norm extensions
inline double refine_head(double nu, double p, double q, double r0) {
  const double root = std::sqrt(p * q);
  const double d = std::pow(p * q, 0.25) - std::sqrt(p);
  return 2.0 * nu * root - r0 * d * d;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Per-index singular value domination: s_j(A^{1-v} B^v) <= s_j((1-v)A + vB).
// ---------------------------------------------------------------------------
inline Verdict check_sv_young(const HermitianPSD& a, const HermitianPSD& b,
                              double nu, double tol = kMatrixTol) {
  detail::require_pair(a, b);
  require(nu >= 0.0 && nu <= 1.0, "sv-young: nu must lie in [0, 1]");
  Verdict v = make_verdict("sv-young", Variant::Corrected,
                           detail::digest_ab(a, b, nu), tol);
  const std::vector<double> s1v =
      singular_values(a.frac_power(1.0 - nu) * b.frac_power(nu));
  const std::vector<double> s2v = singular_values(
      (1.0 - nu) * a.matrix() + nu * b.matrix());
  for (std::size_t j = 0; j < s1v.size(); ++j) {
    const std::string idx = std::to_string(j + 1);
    v.add_link("s_" + idx + "(A^{1-v}B^v)", s1v[j],
               "s_" + idx + "((1-v)A+vB)", s2v[j]);
  }
  return v;
}

inline Verdict check_trace_young(const HermitianPSD& a, const HermitianPSD& b,
                                 double nu, double tol = kMatrixTol) {
  detail::require_pair(a, b);
  require(nu >= 0.0 && nu <= 1.0, "trace-young: nu must lie in [0, 1]");
  Verdict v = make_verdict("trace-young", Variant::Corrected,
                           detail::digest_ab(a, b, nu), tol);
  const double lhs =
      norm(NormSpec::trace_norm(), a.frac_power(1.0 - nu) * b.frac_power(nu));
  const double rhs =
      ((1.0 - nu) * a.matrix() + nu * b.matrix()).trace().real();
  v.add_link("tr|A^{1-v}B^v|", lhs, "tr((1-v)A+vB)", rhs);
  return v;
}

// det(A^{1-v} B^v) is evaluated multiplicatively as det(A)^{1-v} det(B)^v
// (the product itself is not Hermitian in general).
inline Verdict check_det_young(const HermitianPSD& a, const HermitianPSD& b,
                               double nu, double tol = kMatrixTol) {
  detail::require_pair(a, b);
  require(nu >= 0.0 && nu <= 1.0, "det-young: nu must lie in [0, 1]");
  Verdict v = make_verdict("det-young", Variant::Corrected,
                           detail::digest_ab(a, b, nu), tol);
  const double lhs =
      std::pow(a.det_real(), 1.0 - nu) * std::pow(b.det_real(), nu);
  const double rhs =
      HermitianPSD::make((1.0 - nu) * a.matrix() + nu * b.matrix()).det_real();
  v.add_link("det(A)^{1-v}det(B)^v", lhs, "det((1-v)A+vB)", rhs);
  return v;
}

inline Verdict check_uin_young(const NormSpec& spec, const HermitianPSD& a,
                               const HermitianPSD& b, const ComplexMatrix& x,
                               double nu, double tol = kMatrixTol) {
  detail::require_triple(a, b, x);
  require(nu > 0.0 && nu <= 1.0, "uin-young: nu must lie in (0, 1]");
  Verdict v = make_verdict("uin-young", Variant::Corrected,
                           hash_mix(detail::digest_abx(a, b, x, nu), spec), tol);
  const double lhs =
      norm(spec, a.frac_power(1.0 - nu) * x * b.frac_power(nu));
  const double rhs = (1.0 - nu) * norm(spec, a.matrix() * x) +
                     nu * norm(spec, x * b.matrix());
  const std::string tag = "[" + spec.to_string() + "] ";
  v.add_link(tag + "|A^{1-v}XB^v|", lhs, tag + "(1-v)|AX|+v|XB|", rhs);
  return v;
}

// ---------------------------------------------------------------------------
// Refined norm Young bound with the second-order head.  The printed reading
// has a "+" inside the squared refinement term and admits the
// A = B = X = I counterexample (slack -1.6 at nu = 0.3); Corrected flips it.
// ---------------------------------------------------------------------------
inline Verdict check_sababheh(const NormSpec& spec, const HermitianPSD& a,
                              const HermitianPSD& b, const ComplexMatrix& x,
                              double nu, Variant variant,
                              double tol = kMatrixTol) {
  detail::require_triple(a, b, x);
  require(nu > 0.0 && nu <= 0.5, "sababheh: nu must lie in (0, 1/2]");
  const NuContext c = NuContext::make(nu);
  Verdict v = make_verdict("sababheh", variant,
                           hash_mix(detail::digest_abx(a, b, x, nu), spec), tol);
  const double p = norm(spec, a.matrix() * x);
  const double q = norm(spec, x * b.matrix());
  const double y = norm(spec, a.frac_power(1.0 - nu) * x * b.frac_power(nu));
  const double quart = std::pow(p * q, 0.25);
  const double dd = (variant == Variant::Corrected)
                        ? (std::sqrt(p) - quart)
                        : (std::sqrt(p) + quart);
  const double ref = 2.0 * nu * std::sqrt(p * q) - c.r0 * dd * dd;
  const std::string tag = "[" + spec.to_string() + "] ";
  v.add_link(tag + "|A^{1-v}XB^v| + v(P+Q) - head", y + nu * (p + q) - ref,
             tag + "(1-v)P + vQ", (1.0 - nu) * p + nu * q,
             std::max(nu * (p + q), std::abs(ref)));
  return v;
}

// ---------------------------------------------------------------------------
// Two-sided Hilbert-Schmidt gap bounds.  Lower always carries r^2, upper
// R^2; the r0 companion term sits on the AX side for nu <= 1/2 and on the
// XB side beyond (the published nu > 1/2 block transposes r and R, which
// fails at the tight witnesses).
// ---------------------------------------------------------------------------
inline Verdict check_zhaowu_hs(const HermitianPSD& a, const HermitianPSD& b,
                               const ComplexMatrix& x, double nu,
                               double tol = kMatrixTol) {
  detail::require_triple(a, b, x);
  require(nu > 0.0 && nu < 1.0, "zhaowu-hs: nu must lie in (0, 1)");
  const NuContext c = NuContext::make(nu);
  Verdict v = make_verdict("zhaowu-hs", Variant::Corrected,
                           detail::digest_abx(a, b, x, nu), tol);
  const ComplexMatrix ax = a.matrix() * x;
  const ComplexMatrix xb = x * b.matrix();
  const ComplexMatrix mix = a.frac_power(0.5) * x * b.frac_power(0.5);
  const double diff2 = detail::hs2(ax - xb);
  const double mix_ax = detail::hs2(mix - ax);
  const double mix_xb = detail::hs2(mix - xb);
  const double x2 = detail::hs2((1.0 - nu) * ax + nu * xb);
  const double y2 = detail::hs2(a.frac_power(1.0 - nu) * x * b.frac_power(nu));
  const double lower =
      c.r * c.r * diff2 + c.r0 * (nu <= 0.5 ? mix_ax : mix_xb);
  const double upper =
      c.big_r * c.big_r * diff2 - c.r0 * (nu <= 0.5 ? mix_xb : mix_ax);
  const double mag =
      std::max({x2, y2, diff2, mix_ax, mix_xb});
  v.add_link("r^2|AX-XB|^2 + r0 companion", lower, "|(1-v)AX+vXB|^2 - |A^{1-v}XB^v|^2",
             x2 - y2, mag);
  v.add_link("|(1-v)AX+vXB|^2 - |A^{1-v}XB^v|^2", x2 - y2,
             "R^2|AX-XB|^2 - r0 companion", upper, mag);
  return v;
}

// ---------------------------------------------------------------------------
// Trace extension: m-th power chain built from P = tr A, Q = tr B.
// ---------------------------------------------------------------------------
inline Verdict check_thm34(const HermitianPSD& a, const HermitianPSD& b,
                           double nu, int m, double tol = kMatrixTol) {
  detail::require_pair(a, b);
  require(a.positive_definite() && b.positive_definite(),
          "thm34: A and B must be positive definite");
  require(nu > 0.0 && nu <= 1.0, "thm34: nu must lie in (0, 1]");
  require(m >= 1, "thm34: m must be >= 1");
  const NuContext c = NuContext::make(nu);
  std::uint64_t h = hash_mix(detail::digest_ab(a, b, nu),
                             static_cast<std::uint64_t>(m));
  Verdict v = make_verdict("thm34", Variant::Corrected, h, tol);
  const double p = a.trace_real();
  const double q = b.trace_real();
  const double y =
      norm(NormSpec::trace_norm(), a.frac_power(1.0 - nu) * b.frac_power(nu));
  double head, w;
  if (nu <= 0.5) {
    w = detail::refine_head(nu, p, q, c.r0);
    head = int_pow(nu, m) * int_pow(p + q, m);
  } else {
    w = detail::refine_head(1.0 - nu, q, p, c.r0);
    head = int_pow(1.0 - nu, m) * int_pow(p + q, m);
  }
  const double lhs = int_pow(y, m) + head - int_pow(w, m);
  const double rhs =
      int_pow(((1.0 - nu) * a.matrix() + nu * b.matrix()).trace().real(), m);
  v.add_link("tr|A^{1-v}B^v|^m + head", lhs, "tr((1-v)A+vB)^m", rhs,
             std::max({head, std::abs(int_pow(w, m)), int_pow(y, m)}));
  return v;
}

// ---------------------------------------------------------------------------
// Determinant extension.  Printed is the published claim (m-th powers of
// heads built from det A, det B with a nu^{mn} weight); it is falsified by
// commuting witnesses at large det ratios.  Corrected follows the proof:
// the scalar chain runs at (det A)^{1/n}, (det B)^{1/n} with exponent mn,
// and needs those heads inside the x^{mn} convexity domain (w >= 0).
// ---------------------------------------------------------------------------
inline Verdict check_thm35_impl(const std::string& id, const HermitianPSD& a,
                                const HermitianPSD& b, double nu, int m,
                                Variant variant, bool mirrored, double tol) {
  detail::require_pair(a, b);
  require(a.positive_definite() && b.positive_definite(),
          id + ": A and B must be positive definite");
  if (mirrored)
    require(nu >= 0.5 && nu < 1.0, id + ": nu must lie in [1/2, 1)");
  else
    require(nu > 0.0 && nu <= 0.5, id + ": nu must lie in (0, 1/2]");
  require(m >= 1, id + ": m must be >= 1");
  const NuContext c = NuContext::make(nu);
  const int n = a.dim();
  std::uint64_t h = hash_mix(detail::digest_ab(a, b, nu),
                             static_cast<std::uint64_t>(m));
  Verdict v = make_verdict(id, variant, h, tol);
  const double da = a.det_real();
  const double db = b.det_real();
  const double y = std::pow(da, 1.0 - nu) * std::pow(db, nu);
  const double rhs = int_pow(
      HermitianPSD::make((1.0 - nu) * a.matrix() + nu * b.matrix()).det_real(),
      m);
  const double weight = mirrored ? (1.0 - nu) : nu;
  double lhs, mag;
  if (variant == Variant::Printed) {
    const double w = mirrored ? detail::refine_head(1.0 - nu, db, da, c.r0)
                              : detail::refine_head(nu, da, db, c.r0);
    const double head = int_pow(weight, m * n) * int_pow(da + db, m);
    lhs = int_pow(y, m) + head - int_pow(w, m);
    mag = std::max({head, std::abs(int_pow(w, m)), int_pow(y, m)});
  } else {
    const double alpha = std::pow(da, 1.0 / n);
    const double beta = std::pow(db, 1.0 / n);
    const double w = mirrored ? detail::refine_head(1.0 - nu, beta, alpha, c.r0)
                              : detail::refine_head(nu, alpha, beta, c.r0);
    if (w < 0.0 && m * n >= 2)
      throw DomainError(id + ": refinement head outside the power domain");
    const double head = int_pow(weight * (alpha + beta), m * n);
    lhs = int_pow(y, m) + head - int_pow(w, m * n);
    mag = std::max({head, std::abs(int_pow(w, m * n)), int_pow(y, m)});
  }
  v.add_link("det(A^{1-v}B^v)^m + head", lhs, "det((1-v)A+vB)^m", rhs, mag);
  return v;
}

inline Verdict check_thm35(const HermitianPSD& a, const HermitianPSD& b,
                           double nu, int m, Variant variant,
                           double tol = kMatrixTol) {
  return check_thm35_impl("thm35", a, b, nu, m, variant, false, tol);
}

inline Verdict check_remark37_det(const HermitianPSD& a, const HermitianPSD& b,
                                  double nu, int m, Variant variant,
                                  double tol = kMatrixTol) {
  return check_thm35_impl("remark37-det", a, b, nu, m, variant, true, tol);
}

// ---------------------------------------------------------------------------
// Norm extension with P = |AX|, Q = |XB| (and the nu >= 1/2 mirror).
// ---------------------------------------------------------------------------
inline Verdict check_thm36_impl(const std::string& id, const NormSpec& spec,
                                const HermitianPSD& a, const HermitianPSD& b,
                                const ComplexMatrix& x, double nu, int m,
                                bool mirrored, double tol) {
  detail::require_triple(a, b, x);
  if (mirrored)
    require(nu >= 0.5 && nu < 1.0, id + ": nu must lie in [1/2, 1)");
  else
    require(nu > 0.0 && nu <= 0.5, id + ": nu must lie in (0, 1/2]");
  require(m >= 1, id + ": m must be >= 1");
  const NuContext c = NuContext::make(nu);
  std::uint64_t h = hash_mix(detail::digest_abx(a, b, x, nu), spec);
  h = hash_mix(h, static_cast<std::uint64_t>(m));
  Verdict v = make_verdict(id, Variant::Corrected, h, tol);
  const double p = norm(spec, a.matrix() * x);
  const double q = norm(spec, x * b.matrix());
  const double y = norm(spec, a.frac_power(1.0 - nu) * x * b.frac_power(nu));
  const double weight = mirrored ? (1.0 - nu) : nu;
  const double w = mirrored ? detail::refine_head(1.0 - nu, q, p, c.r0)
                            : detail::refine_head(nu, p, q, c.r0);
  const double head = int_pow(weight, m) * int_pow(p + q, m);
  const double lhs = int_pow(y, m) + head - int_pow(w, m);
  const double rhs = int_pow((1.0 - nu) * p + nu * q, m);
  const std::string tag = "[" + spec.to_string() + "] ";
  v.add_link(tag + "|A^{1-v}XB^v|^m + head", lhs,
             tag + "((1-v)P+vQ)^m", rhs,
             std::max({head, std::abs(int_pow(w, m)), int_pow(y, m)}));
  return v;
}

inline Verdict check_thm36(const NormSpec& spec, const HermitianPSD& a,
                           const HermitianPSD& b, const ComplexMatrix& x,
                           double nu, int m, double tol = kMatrixTol) {
  return check_thm36_impl("thm36", spec, a, b, x, nu, m, false, tol);
}

inline Verdict check_remark37_norm(const NormSpec& spec, const HermitianPSD& a,
                                   const HermitianPSD& b,
                                   const ComplexMatrix& x, double nu, int m,
                                   double tol = kMatrixTol) {
  return check_thm36_impl("remark37-norm", spec, a, b, x, nu, m, true, tol);
}

// ---------------------------------------------------------------------------
// The decomposed Hilbert-Schmidt gap bounds from the sum-difference
// identities, plus the raw quantities used by the convex sandwich on top.
// ---------------------------------------------------------------------------
struct Prop38Pieces {
  double z = 0.0, w = 0.0, x = 0.0, y = 0.0, z_hi = 0.0, w_hi = 0.0;
  double mag = 0.0;
};

inline Prop38Pieces prop38_pieces(const HermitianPSD& a, const HermitianPSD& b,
                                  const ComplexMatrix& x, double nu,
                                  Variant variant) {
  detail::require_triple(a, b, x);
  require(nu > 0.0 && nu < 1.0, "prop38: nu must lie in (0, 1)");
  const NuContext c = NuContext::make(nu);
  const ComplexMatrix ax = a.matrix() * x;
  const ComplexMatrix xb = x * b.matrix();
  const ComplexMatrix mix = a.frac_power(0.5) * x * b.frac_power(0.5);
  const double s = detail::hs2(ax + xb);
  const double g = detail::hs2(mix);
  const double ta = detail::hs2(a.frac_power(0.75) * x * b.frac_power(0.25));
  const double tb = detail::hs2(a.frac_power(0.25) * x * b.frac_power(0.75));
  const double pa = detail::hs2(mix + ax);
  const double pb = detail::hs2(mix + xb);
  const double r2 = c.r * c.r, bigr2 = c.big_r * c.big_r;

  Prop38Pieces out;
  out.x = detail::hs2((1.0 - nu) * ax + nu * xb);
  out.y = detail::hs2(a.frac_power(1.0 - nu) * x * b.frac_power(nu));
  if (variant == Variant::Corrected) {
    if (nu <= 0.5) {
      out.z = r2 * s;
      out.w = 4.0 * (r2 * g + c.r0 * ta) - c.r0 * pa;
      out.z_hi = bigr2 * s;
      out.w_hi = 4.0 * (bigr2 * g - c.r0 * tb) + c.r0 * pb;
    } else {
      out.z = r2 * s;
      out.w = 4.0 * (r2 * g + c.r0 * tb) - c.r0 * pb;
      out.z_hi = bigr2 * s;
      out.w_hi = 4.0 * (bigr2 * g - c.r0 * ta) + c.r0 * pa;
    }
  } else {
    if (nu <= 0.5) {
      out.z = r2 * s;
      out.w = 4.0 * (r2 * g + c.r0 * ta - c.r0 * pa);
      out.z_hi = bigr2 * s;
      out.w_hi = 4.0 * (bigr2 * g + tb) - c.r0 * pb;
    } else {
      out.z = bigr2 * s;
      out.w = 4.0 * (bigr2 * g + c.r0 * tb) - c.r0 * detail::hs2(mix - xb);
      out.z_hi = r2 * s;
      out.w_hi = 4.0 * (r2 * g + c.r0 * ta) - c.r0 * pa;
    }
  }
  out.mag = std::max({s, 4.0 * g, 4.0 * ta, 4.0 * tb, pa, pb, out.x, out.y});
  return out;
}

inline Verdict check_prop38(const HermitianPSD& a, const HermitianPSD& b,
                            const ComplexMatrix& x, double nu, Variant variant,
                            double tol = kMatrixTol) {
  const Prop38Pieces p = prop38_pieces(a, b, x, nu, variant);
  Verdict v = make_verdict("prop38", variant,
                           detail::digest_abx(a, b, x, nu), tol);
  const double mid = p.x - p.y;
  v.add_link("decomposed lower", p.z - p.w,
             "|(1-v)AX+vXB|^2 - |A^{1-v}XB^v|^2", mid, p.mag);
  v.add_link("|(1-v)AX+vXB|^2 - |A^{1-v}XB^v|^2", mid, "decomposed upper",
             p.z_hi - p.w_hi, p.mag);
  return v;
}

// Convex sandwich over the decomposed gap chain, hypothesis orderings first.
inline Verdict check_thm39(const ConvexProbe& probe, const HermitianPSD& a,
                           const HermitianPSD& b, const ComplexMatrix& x,
                           double nu, Variant variant,
                           double tol = kMatrixTol) {
  require(nu > 0.0 && nu <= 0.5, "thm39: nu must lie in (0, 1/2]");
  const Prop38Pieces p = prop38_pieces(a, b, x, nu, variant);
  std::uint64_t h = detail::digest_abx(a, b, x, nu);
  h = fnv1a(probe.name().data(), probe.name().size(), h);
  Verdict v = make_verdict("thm39", variant, h, tol);
  v.add_link("w", p.w, "z", p.z, p.mag);
  v.add_link("z", p.z, "x", p.x, p.mag);
  v.add_link("y", p.y, "x", p.x, p.mag);
  v.add_link("x", p.x, "z'", p.z_hi, p.mag);
  v.add_link("w'", p.w_hi, "z'", p.z_hi, p.mag);
  v.add_link("z - w", p.z - p.w, "x - y", p.x - p.y, p.mag);
  v.add_link("x - y", p.x - p.y, "z' - w'", p.z_hi - p.w_hi, p.mag);
  for (double pt : {p.w, p.z, p.x, p.y, p.z_hi, p.w_hi}) {
    if (!probe.contains(pt))
      throw DomainError("thm39: sandwich argument outside probe domain");
  }
  const std::string fn = probe.name();
  const double fz = probe(p.z), fw = probe(p.w), fx = probe(p.x),
               fy = probe(p.y), fzh = probe(p.z_hi), fwh = probe(p.w_hi);
  const double fmag = std::max({std::abs(fz), std::abs(fw), std::abs(fx),
                                std::abs(fy), std::abs(fzh), std::abs(fwh)});
  v.add_link(fn + "(z) - " + fn + "(w)", fz - fw,
             fn + "(x) - " + fn + "(y)", fx - fy, fmag);
  v.add_link(fn + "(x) - " + fn + "(y)", fx - fy,
             fn + "(z') - " + fn + "(w')", fzh - fwh, fmag);
  return v;
}

inline Verdict check_example311(const HermitianPSD& a, const HermitianPSD& b,
                                const ComplexMatrix& x, double nu, int m,
                                Variant variant, double tol = kMatrixTol) {
  require(m >= 2, "example311: m must be >= 2");
  Verdict v = check_thm39(ConvexProbe::power_half(m), a, b, x, nu, variant, tol);
  v.check_id = "example311";
  return v;
}

// ---------------------------------------------------------------------------
// Heinz improvement for the Hilbert-Schmidt norm.
// ---------------------------------------------------------------------------
inline Verdict check_thm313(const HermitianPSD& a, const HermitianPSD& b,
                            const ComplexMatrix& x, double nu,
                            double tol = kMatrixTol) {
  detail::require_triple(a, b, x);
  require(nu > 0.0 && nu <= 0.5, "thm313: nu must lie in (0, 1/2]");
  const NuContext c = NuContext::make(nu);
  Verdict v = make_verdict("thm313", Variant::Corrected,
                           detail::digest_abx(a, b, x, nu), tol);
  const ComplexMatrix ax = a.matrix() * x;
  const ComplexMatrix xb = x * b.matrix();
  const ComplexMatrix mix = a.frac_power(0.5) * x * b.frac_power(0.5);
  const ComplexMatrix heinz = a.frac_power(nu) * x * b.frac_power(1.0 - nu) +
                              a.frac_power(1.0 - nu) * x * b.frac_power(nu);
  const double sum2 = detail::hs2(ax + xb);
  const double diff2 = detail::hs2(ax - xb);
  const double mix_ax = detail::hs2(mix - ax);
  const double mix_xb = detail::hs2(mix - xb);
  const double lhs = detail::hs2(heinz);
  const double rhs =
      sum2 - 2.0 * c.r * diff2 - c.r0 * (mix_ax + mix_xb);
  v.add_link("|A^vXB^{1-v} + A^{1-v}XB^v|^2", lhs,
             "|AX+XB|^2 - 2r|AX-XB|^2 - r0 companions", rhs,
             std::max({sum2, diff2, mix_ax + mix_xb}));
  return v;
}

// ---------------------------------------------------------------------------
// Heinz-type bound for any unitarily invariant norm, from the triangle
// inequality and the interpolation bound.  Printed is the typeset claim
// (plus-signs inside the squares, minus on the geometric head); Corrected
// follows the proof's final chain and is tight at P = Q.
// ---------------------------------------------------------------------------
inline Verdict check_prop314(const NormSpec& spec, const HermitianPSD& a,
                             const HermitianPSD& b, const ComplexMatrix& x,
                             double nu, Variant variant,
                             double tol = kMatrixTol) {
  detail::require_triple(a, b, x);
  require(nu > 0.0 && nu <= 0.5, "prop314: nu must lie in (0, 1/2]");
  const NuContext c = NuContext::make(nu);
  Verdict v = make_verdict("prop314", variant,
                           hash_mix(detail::digest_abx(a, b, x, nu), spec), tol);
  const double p = norm(spec, a.matrix() * x);
  const double q = norm(spec, x * b.matrix());
  const double lhs =
      norm(spec, a.frac_power(1.0 - nu) * x * b.frac_power(nu) +
                     a.frac_power(nu) * x * b.frac_power(1.0 - nu));
  const double quart = std::pow(p * q, 0.25);
  double rhs;
  if (variant == Variant::Corrected) {
    const double dp = std::sqrt(p) - quart;
    const double dq = std::sqrt(q) - quart;
    rhs = (1.0 - 2.0 * nu) * (p + q) + 4.0 * nu * std::sqrt(p * q) -
          c.r0 * (dp * dp + dq * dq);
  } else {
    const double sp = std::sqrt(p) + quart;
    const double sq = std::sqrt(q) + quart;
    rhs = (1.0 - 2.0 * nu) * (p + q) -
          (2.0 * (2.0 * nu * std::sqrt(p * q)) - c.r0 * (sp * sp + sq * sq));
  }
  const std::string tag = "[" + spec.to_string() + "] ";
  v.add_link(tag + "|A^{1-v}XB^v + A^vXB^{1-v}|", lhs,
             tag + "refined Heinz bound", rhs, p + q);
  return v;
}

// ---------------------------------------------------------------------------
// Supporting lemmas.
// ---------------------------------------------------------------------------
inline Verdict check_lemma31(const ComplexMatrix& a, const ComplexMatrix& b,
                             double tol = kMatrixTol) {
  require(a.square() && b.square() && a.rows() == b.rows(),
          "lemma31: square matrices of equal dimension required");
  std::uint64_t h = fnv1a("l31", 3);
  h = hash_mix(h, a);
  h = hash_mix(h, b);
  Verdict v = make_verdict("lemma31", Variant::Corrected, h, tol);
  const std::vector<double> sab = singular_values(a * b);
  const std::vector<double> sa = singular_values(a);
  const std::vector<double> sb = singular_values(b);
  double lhs = 0.0, rhs = 0.0;
  for (std::size_t j = 0; j < sab.size(); ++j) {
    lhs += sab[j];
    rhs += sa[j] * sb[j];
  }
  v.add_link("sum s_j(AB)", lhs, "sum s_j(A)s_j(B)", rhs);
  return v;
}

inline Verdict check_lemma32(const NormSpec& spec, const HermitianPSD& a,
                             const HermitianPSD& b, const ComplexMatrix& x,
                             double nu, double tol = kMatrixTol) {
  detail::require_triple(a, b, x);
  require(nu >= 0.0 && nu <= 1.0, "lemma32: nu must lie in [0, 1]");
  Verdict v = make_verdict("lemma32", Variant::Corrected,
                           hash_mix(detail::digest_abx(a, b, x, nu), spec), tol);
  const double lhs =
      norm(spec, a.frac_power(1.0 - nu) * x * b.frac_power(nu));
  const double rhs = std::pow(norm(spec, a.matrix() * x), 1.0 - nu) *
                     std::pow(norm(spec, x * b.matrix()), nu);
  const std::string tag = "[" + spec.to_string() + "] ";
  v.add_link(tag + "|A^{1-v}XB^v|", lhs, tag + "|AX|^{1-v}|XB|^v", rhs);
  return v;
}

inline Verdict check_lemma33(const HermitianPSD& a, const HermitianPSD& b,
                             double tol = kMatrixTol) {
  detail::require_pair(a, b);
  require(a.positive_definite() && b.positive_definite(),
          "lemma33: A and B must be positive definite");
  std::uint64_t h = fnv1a("l33", 3);
  h = hash_mix(h, a);
  h = hash_mix(h, b);
  Verdict v = make_verdict("lemma33", Variant::Corrected, h, tol);
  const double n = static_cast<double>(a.dim());
  const double lhs =
      std::pow(a.det_real(), 1.0 / n) + std::pow(b.det_real(), 1.0 / n);
  const double rhs = std::pow(
      HermitianPSD::make(a.matrix() + b.matrix()).det_real(), 1.0 / n);
  v.add_link("det(A)^{1/n} + det(B)^{1/n}", lhs, "det(A+B)^{1/n}", rhs);
  return v;
}

inline Verdict check_bhatia_kittaneh(const NormSpec& spec,
                                     const HermitianPSD& a,
                                     const HermitianPSD& b,
                                     const ComplexMatrix& x,
                                     double tol = kMatrixTol) {
  detail::require_triple(a, b, x);
  Verdict v = make_verdict(
      "bhatia-kittaneh", Variant::Corrected,
      hash_mix(detail::digest_abx(a, b, x, 0.5), spec), tol);
  const double lhs =
      2.0 * norm(spec, a.frac_power(0.5) * x * b.frac_power(0.5));
  const double rhs = norm(spec, a.matrix() * x + x * b.matrix());
  const std::string tag = "[" + spec.to_string() + "] ";
  v.add_link(tag + "2|A^{1/2}XB^{1/2}|", lhs, tag + "|AX+XB|", rhs);
  return v;
}

// ---------------------------------------------------------------------------
// The three Hilbert-Schmidt decomposition identities (equalities).
// ---------------------------------------------------------------------------
enum class HsIdentity { Sum, ASide, BSide };

inline const char* to_string(HsIdentity id) {
  switch (id) {
    case HsIdentity::Sum:
      return "hs-identity-sum";
    case HsIdentity::ASide:
      return "hs-identity-a";
    case HsIdentity::BSide:
      return "hs-identity-b";
  }
  return "?";
}

inline Verdict check_hs_identity(HsIdentity which, const HermitianPSD& a,
                                 const HermitianPSD& b, const ComplexMatrix& x,
                                 double tol = kMatrixTol) {
  detail::require_triple(a, b, x);
  Verdict v = make_verdict(to_string(which), Variant::Corrected,
                           detail::digest_abx(a, b, x, 0.0), tol);
  const ComplexMatrix ax = a.matrix() * x;
  const ComplexMatrix xb = x * b.matrix();
  const ComplexMatrix mix = a.frac_power(0.5) * x * b.frac_power(0.5);
  double lhs, rhs, mag;
  std::string ll, rl;
  switch (which) {
    case HsIdentity::Sum:
      lhs = detail::hs2(ax - xb);
      rhs = detail::hs2(ax + xb) - 4.0 * detail::hs2(mix);
      mag = detail::hs2(ax + xb) + 4.0 * detail::hs2(mix);
      ll = "|AX-XB|^2";
      rl = "|AX+XB|^2 - 4|A^{1/2}XB^{1/2}|^2";
      break;
    case HsIdentity::ASide:
      lhs = detail::hs2(mix - ax);
      rhs = detail::hs2(mix + ax) -
            4.0 * detail::hs2(a.frac_power(0.75) * x * b.frac_power(0.25));
      mag = detail::hs2(mix + ax);
      ll = "|A^{1/2}XB^{1/2}-AX|^2";
      rl = "|A^{1/2}XB^{1/2}+AX|^2 - 4|A^{3/4}XB^{1/4}|^2";
      break;
    default:
      lhs = detail::hs2(mix - xb);
      rhs = detail::hs2(mix + xb) -
            4.0 * detail::hs2(a.frac_power(0.25) * x * b.frac_power(0.75));
      mag = detail::hs2(mix + xb);
      ll = "|A^{1/2}XB^{1/2}-XB|^2";
      rl = "|A^{1/2}XB^{1/2}+XB|^2 - 4|A^{1/4}XB^{3/4}|^2";
      break;
  }
  v.add_equality(ll, lhs, rl, rhs, mag);
  return v;
}

}  // namespace matineq
