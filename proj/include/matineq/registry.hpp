#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "matineq/checks.hpp"
#include "matineq/sampling.hpp"

namespace matineq {

// One registered check: a stable id, the variants it carries, the pinned
// (suite-gating) variant, its nu range, and sample runners.  Runners return
// nullopt when a sample falls outside the check's domain (convexity domain
// of the probe, definiteness requirements); skips are counted, never passed.
struct CheckDef {
  std::string id;
  std::string summary;
  bool scalar = false;
  std::vector<Variant> variants = {Variant::Corrected};
  Variant pinned = Variant::Corrected;
  double nu_lo = 0.01;  // inclusive sampled range
  double nu_hi = 0.99;
  std::function<std::optional<Verdict>(const ScalarSample&, Variant, double)>
      run_scalar;
  std::function<std::optional<Verdict>(const MatrixSample&, Variant, double)>
      run_matrix;
  std::vector<std::pair<double, double>> scalar_extra_pairs;

  bool has_variant(Variant v) const {
    for (Variant x : variants)
      if (x == v) return true;
    return false;
  }

  std::vector<double> structured_nus() const {
    std::vector<double> out;
    for (double nu : {0.0, 0.25, 0.3, 0.5, 0.75, 1.0})
      if (nu >= nu_lo && nu <= nu_hi) out.push_back(nu);
    return out;
  }
};

namespace detail {

inline std::uint64_t digest_scalar(const ScalarSample& s) {
  std::uint64_t h = fnv1a("scalar", 6);
  h = hash_mix(h, s.a);
  h = hash_mix(h, s.b);
  return hash_mix(h, s.nu);
}

inline Verdict scalar_chain(const std::string& id, const ScalarSample& s,
                            Variant variant, double tol,
                            const std::vector<std::pair<std::string, double>>& chain,
                            double op_mag) {
  return chain_verdict(id, variant, digest_scalar(s), tol, chain, op_mag);
}

inline std::uint64_t checks_digest(const MatrixSample& s) {
  return digest_abx(s.a, s.b, s.x, s.nu);
}

// Fold one verdict per norm spec into a single multi-link verdict.
template <typename Fn>
Verdict fold_norm_family(const std::string& id, const MatrixSample& s,
                         Variant variant, double tol, Fn&& per_spec) {
  Verdict out = make_verdict(id, variant, checks_digest(s), tol);
  for (const NormSpec& spec : all_default_specs(s.a.dim())) {
    Verdict v = per_spec(spec);
    for (const Link& l : v.links)
      out.add_link(l.lo_label, l.lo, l.hi_label, l.hi, l.scale);
  }
  return out;
}

}  // namespace detail

const std::vector<CheckDef>& check_registry();

inline const CheckDef* find_check(const std::string& id) {
  for (const CheckDef& def : check_registry())
    if (def.id == id) return &def;
  return nullptr;
}

namespace detail {

inline void add_scalar_checks(std::vector<CheckDef>& defs) {
  {
    CheckDef d;
    d.id = "young-refined";
    d.summary = "refined weighted AM-GM with second-order head, plus reverse";
    d.scalar = true;
    d.variants = {Variant::Printed, Variant::Corrected};
    d.pinned = Variant::Corrected;
    d.nu_lo = 0.01;
    d.nu_hi = 1.0;
    d.run_scalar = [](const ScalarSample& s, Variant v,
                      double tol) -> std::optional<Verdict> {
      const Chain3 c = young_refined(s.a, s.b, s.nu, v);
      return scalar_chain("young-refined", s, v, tol,
                          {{"y + S1 + r d", c.lower},
                           {"(1-v)a + vb", c.middle},
                           {"y + R d - S1'", c.upper}},
                          s.a + s.b);
    };
    defs.push_back(d);
  }
  {
    CheckDef d;
    d.id = "young-squared";
    d.summary = "squared refined Young chain";
    d.scalar = true;
    d.variants = {Variant::Printed, Variant::Corrected};
    d.nu_hi = 0.99;
    d.run_scalar = [](const ScalarSample& s, Variant v,
                      double tol) -> std::optional<Verdict> {
      const Chain3 c = young_squared(s.a, s.b, s.nu, v);
      return scalar_chain("young-squared", s, v, tol,
                          {{"y^2 + r^2 d^2 + S1@sq", c.lower},
                           {"((1-v)a + vb)^2", c.middle},
                           {"y^2 + R^2 d^2 - S1'@sq", c.upper}},
                          (s.a + s.b) * (s.a + s.b));
    };
    defs.push_back(d);
  }
  {
    CheckDef d;
    d.id = "quadratic-gap";
    d.summary = "two-sided bounds on ((1-v)a+vb)^2 - (a^{1-v}b^v)^2";
    d.scalar = true;
    d.variants = {Variant::Printed, Variant::Corrected};
    d.pinned = Variant::Printed;  // both pass; the printed lower is tight at 1/4
    d.run_scalar = [](const ScalarSample& s, Variant v,
                      double tol) -> std::optional<Verdict> {
      const Chain3 c = quadratic_gap_bounds(s.a, s.b, s.nu, v);
      return scalar_chain("quadratic-gap", s, v, tol,
                          {{"lower", c.lower}, {"gap", c.middle},
                           {"upper", c.upper}},
                          s.a * s.a + s.b * s.b);
    };
    defs.push_back(d);
  }
  {
    CheckDef d;
    d.id = "heinz-mean";
    d.summary = "geometric <= Heinz <= arithmetic";
    d.scalar = true;
    d.nu_lo = 0.0;
    d.nu_hi = 1.0;
    d.run_scalar = [](const ScalarSample& s, Variant v,
                      double tol) -> std::optional<Verdict> {
      return scalar_chain("heinz-mean", s, v, tol,
                          {{"sqrt(ab)", std::sqrt(s.a * s.b)},
                           {"H_v(a,b)", heinz_mean(s.a, s.b, s.nu)},
                           {"(a+b)/2", 0.5 * (s.a + s.b)}},
                          s.a + s.b);
    };
    defs.push_back(d);
  }

  auto sandwich_links = [](const std::string& id, const ScalarSample& s,
                           Variant v, double tol, const SandwichPoints& p) {
    Verdict out = make_verdict(id, v, digest_scalar(s), tol);
    const double mag = std::abs(p.z_hi) + std::abs(p.w) + std::abs(p.x);
    out.add_link("w", p.w, "z", p.z, mag);
    out.add_link("z", p.z, "x", p.x, mag);
    out.add_link("y", p.y, "x", p.x, mag);
    out.add_link("x", p.x, "z'", p.z_hi, mag);
    out.add_link("w'", p.w_hi, "z'", p.z_hi, mag);
    out.add_link("z - w", p.z - p.w, "x - y", p.x - p.y, mag);
    out.add_link("x - y", p.x - p.y, "z' - w'", p.z_hi - p.w_hi, mag);
    return out;
  };

  {
    CheckDef d;
    d.id = "thm22-chain";
    d.summary = "sandwich point orderings and the raw difference chain";
    d.scalar = true;
    d.run_scalar = [sandwich_links](const ScalarSample& s, Variant v,
                                    double tol) -> std::optional<Verdict> {
      return sandwich_links("thm22-chain", s, v, tol,
                            young_sandwich_points(s.a, s.b, s.nu));
    };
    defs.push_back(d);
  }
  {
    CheckDef d;
    d.id = "heinz-chain";
    d.summary = "Heinz sandwich point orderings and raw difference chain";
    d.scalar = true;
    d.nu_lo = 0.0;
    d.nu_hi = 1.0;
    d.run_scalar = [sandwich_links](const ScalarSample& s, Variant v,
                                    double tol) -> std::optional<Verdict> {
      return sandwich_links("heinz-chain", s, v, tol,
                            heinz_sandwich_points(s.a, s.b, s.nu));
    };
    defs.push_back(d);
  }

  auto add_probe_check = [&](const std::string& id, const ConvexProbe& probe,
                             bool heinz) {
    CheckDef d;
    d.id = id;
    d.summary = std::string(heinz ? "Heinz" : "Young") +
                " sandwich composed with " + probe.name();
    d.scalar = true;
    if (heinz) {
      d.nu_lo = 0.0;
      d.nu_hi = 1.0;
    }
    d.run_scalar = [probe, heinz, id](const ScalarSample& s, Variant v,
                                      double tol) -> std::optional<Verdict> {
      const SandwichPoints p = heinz ? heinz_sandwich_points(s.a, s.b, s.nu)
                                     : young_sandwich_points(s.a, s.b, s.nu);
      for (double pt : {p.w, p.z, p.x, p.y, p.z_hi, p.w_hi})
        if (!probe.contains(pt)) return std::nullopt;
      const PhiChain pc = apply_probe(probe, p);
      return scalar_chain(id, s, v, tol,
                          {{"phi(z) - phi(w)", pc.chain.lower},
                           {"phi(x) - phi(y)", pc.chain.middle},
                           {"phi(z') - phi(w')", pc.chain.upper}},
                          pc.phi_mag);
    };
    defs.push_back(d);
  };
  add_probe_check("thm22-pow1", ConvexProbe::power(1), false);
  add_probe_check("thm22-pow2", ConvexProbe::power(2), false);
  add_probe_check("thm22-pow3", ConvexProbe::power(3), false);
  add_probe_check("thm22-exp", ConvexProbe::exponential(), false);
  add_probe_check("heinz-pow1", ConvexProbe::power(1), true);
  add_probe_check("heinz-pow2", ConvexProbe::power(2), true);
  add_probe_check("heinz-pow3", ConvexProbe::power(3), true);

  {
    CheckDef d;
    d.id = "lemma312";
    d.summary = "squared Heinz-sum bound with second-order remainder";
    d.scalar = true;
    d.nu_lo = 0.0;
    d.nu_hi = 1.0;
    d.scalar_extra_pairs = {{1.0, 0.0}, {0.0, 1.0}, {0.0, 0.0}};
    d.run_scalar = [](const ScalarSample& s, Variant v,
                      double tol) -> std::optional<Verdict> {
      const BoundPair b = lemma312_gap(s.a, s.b, s.nu);
      return scalar_chain("lemma312", s, v, tol,
                          {{"sum^2 + 2r(a-b)^2 + r0[..]", b.lhs},
                           {"(a+b)^2", b.rhs}},
                          (s.a + s.b) * (s.a + s.b));
    };
    defs.push_back(d);
  }
  {
    CheckDef d;
    d.id = "squared-young";
    d.summary = "refined Young at squared arguments";
    d.scalar = true;
    d.variants = {Variant::Printed, Variant::Corrected};
    d.nu_hi = 0.5;
    d.run_scalar = [](const ScalarSample& s, Variant v,
                      double tol) -> std::optional<Verdict> {
      const BoundPair b = squared_young_refined(s.a, s.b, s.nu, v);
      return scalar_chain("squared-young", s, v, tol,
                          {{"(a^{1-v}b^v)^2 + r0(..)^2 + r(a-b)^2", b.lhs},
                           {"(1-v)a^2 + vb^2", b.rhs}},
                          s.a * s.a + s.b * s.b);
    };
    defs.push_back(d);
  }
}

inline void add_matrix_checks(std::vector<CheckDef>& defs) {
  auto def_matrix = [&](std::string id, std::string summary, double lo,
                        double hi) {
    CheckDef d;
    d.id = std::move(id);
    d.summary = std::move(summary);
    d.nu_lo = lo;
    d.nu_hi = hi;
    return d;
  };

  {
    CheckDef d = def_matrix("sv-young", "per-index singular value domination",
                            0.0, 1.0);
    d.run_matrix = [](const MatrixSample& s, Variant, double tol)
        -> std::optional<Verdict> { return check_sv_young(s.a, s.b, s.nu, tol); };
    defs.push_back(d);
  }
  {
    CheckDef d = def_matrix("trace-young", "trace Young bound", 0.0, 1.0);
    d.run_matrix = [](const MatrixSample& s, Variant, double tol)
        -> std::optional<Verdict> { return check_trace_young(s.a, s.b, s.nu, tol); };
    defs.push_back(d);
  }
  {
    CheckDef d = def_matrix("det-young", "determinant Young bound", 0.0, 1.0);
    d.run_matrix = [](const MatrixSample& s, Variant, double tol)
        -> std::optional<Verdict> { return check_det_young(s.a, s.b, s.nu, tol); };
    defs.push_back(d);
  }
  {
    CheckDef d = def_matrix(
        "uin-young", "norm Young bound over the default family", 0.01, 1.0);
    d.run_matrix = [](const MatrixSample& s, Variant v,
                      double tol) -> std::optional<Verdict> {
      return fold_norm_family("uin-young", s, v, tol, [&](const NormSpec& spec) {
        return check_uin_young(spec, s.a, s.b, s.x, s.nu, tol);
      });
    };
    defs.push_back(d);
  }
  {
    CheckDef d = def_matrix("sababheh", "refined norm Young bound", 0.01, 0.5);
    d.variants = {Variant::Printed, Variant::Corrected};
    d.run_matrix = [](const MatrixSample& s, Variant v,
                      double tol) -> std::optional<Verdict> {
      return fold_norm_family("sababheh", s, v, tol, [&](const NormSpec& spec) {
        return check_sababheh(spec, s.a, s.b, s.x, s.nu, v, tol);
      });
    };
    defs.push_back(d);
  }
  {
    CheckDef d = def_matrix("zhaowu-hs", "two-sided HS gap bounds", 0.01, 0.99);
    d.run_matrix = [](const MatrixSample& s, Variant, double tol)
        -> std::optional<Verdict> {
      return check_zhaowu_hs(s.a, s.b, s.x, s.nu, tol);
    };
    defs.push_back(d);
  }

  for (int m : {1, 2, 3}) {
    {
      CheckDef d = def_matrix("thm34-m" + std::to_string(m),
                              "trace extension, m-th powers", 0.01, 0.99);
      d.run_matrix = [m](const MatrixSample& s, Variant, double tol)
          -> std::optional<Verdict> {
        if (!s.a.positive_definite() || !s.b.positive_definite())
          return std::nullopt;
        Verdict v = check_thm34(s.a, s.b, s.nu, m, tol);
        v.check_id = "thm34-m" + std::to_string(m);
        return v;
      };
      defs.push_back(d);
    }
    {
      CheckDef d = def_matrix("thm35-m" + std::to_string(m),
                              "determinant extension, m-th powers", 0.01, 0.5);
      d.variants = {Variant::Printed, Variant::Corrected};
      d.run_matrix = [m](const MatrixSample& s, Variant v,
                         double tol) -> std::optional<Verdict> {
        if (!s.a.positive_definite() || !s.b.positive_definite())
          return std::nullopt;
        try {
          Verdict out = check_thm35(s.a, s.b, s.nu, m, v, tol);
          out.check_id = "thm35-m" + std::to_string(m);
          return out;
        } catch (const DomainError&) {
          return std::nullopt;  // refinement head outside the power domain
        }
      };
      defs.push_back(d);
    }
    {
      CheckDef d = def_matrix("remark37-det-m" + std::to_string(m),
                              "determinant extension mirror", 0.5, 0.99);
      d.variants = {Variant::Printed, Variant::Corrected};
      d.run_matrix = [m](const MatrixSample& s, Variant v,
                         double tol) -> std::optional<Verdict> {
        if (!s.a.positive_definite() || !s.b.positive_definite())
          return std::nullopt;
        try {
          Verdict out = check_remark37_det(s.a, s.b, s.nu, m, v, tol);
          out.check_id = "remark37-det-m" + std::to_string(m);
          return out;
        } catch (const DomainError&) {
          return std::nullopt;
        }
      };
      defs.push_back(d);
    }
    {
      CheckDef d = def_matrix("thm36-m" + std::to_string(m),
                              "norm extension, m-th powers", 0.01, 0.5);
      d.run_matrix = [m](const MatrixSample& s, Variant v,
                         double tol) -> std::optional<Verdict> {
        std::string id = "thm36-m" + std::to_string(m);
        return fold_norm_family(id, s, v, tol, [&](const NormSpec& spec) {
          return check_thm36(spec, s.a, s.b, s.x, s.nu, m, tol);
        });
      };
      defs.push_back(d);
    }
    {
      CheckDef d = def_matrix("remark37-norm-m" + std::to_string(m),
                              "norm extension mirror", 0.5, 0.99);
      d.run_matrix = [m](const MatrixSample& s, Variant v,
                         double tol) -> std::optional<Verdict> {
        std::string id = "remark37-norm-m" + std::to_string(m);
        return fold_norm_family(id, s, v, tol, [&](const NormSpec& spec) {
          return check_remark37_norm(spec, s.a, s.b, s.x, s.nu, m, tol);
        });
      };
      defs.push_back(d);
    }
  }

  {
    CheckDef d = def_matrix("prop38", "decomposed HS gap bounds", 0.01, 0.99);
    d.variants = {Variant::Printed, Variant::Corrected};
    d.run_matrix = [](const MatrixSample& s, Variant v,
                      double tol) -> std::optional<Verdict> {
      return check_prop38(s.a, s.b, s.x, s.nu, v, tol);
    };
    defs.push_back(d);
  }

  auto add_thm39 = [&](const std::string& id, const ConvexProbe& probe) {
    CheckDef d = def_matrix(id, "convex sandwich over the decomposed gap",
                            0.01, 0.5);
    d.variants = {Variant::Printed, Variant::Corrected};
    d.run_matrix = [probe, id](const MatrixSample& s, Variant v,
                               double tol) -> std::optional<Verdict> {
      try {
        Verdict out = check_thm39(probe, s.a, s.b, s.x, s.nu, v, tol);
        out.check_id = id;
        return out;
      } catch (const DomainError&) {
        return std::nullopt;
      }
    };
    defs.push_back(d);
  };
  add_thm39("thm39-pow1", ConvexProbe::power(1));
  add_thm39("thm39-pow2", ConvexProbe::power(2));
  add_thm39("example311-m3", ConvexProbe::power_half(3));
  add_thm39("example311-m4", ConvexProbe::power_half(4));

  {
    CheckDef d = def_matrix("thm313", "HS Heinz improvement", 0.01, 0.5);
    d.run_matrix = [](const MatrixSample& s, Variant, double tol)
        -> std::optional<Verdict> {
      return check_thm313(s.a, s.b, s.x, s.nu, tol);
    };
    defs.push_back(d);
  }
  {
    CheckDef d = def_matrix("prop314", "norm Heinz-type bound", 0.01, 0.5);
    d.variants = {Variant::Printed, Variant::Corrected};
    d.run_matrix = [](const MatrixSample& s, Variant v,
                      double tol) -> std::optional<Verdict> {
      return fold_norm_family("prop314", s, v, tol, [&](const NormSpec& spec) {
        return check_prop314(spec, s.a, s.b, s.x, s.nu, v, tol);
      });
    };
    defs.push_back(d);
  }
  {
    CheckDef d = def_matrix("lemma31", "singular value product domination",
                            0.01, 0.99);
    d.run_matrix = [](const MatrixSample& s, Variant, double tol)
        -> std::optional<Verdict> {
      Verdict v = check_lemma31(s.a.matrix() * s.x, s.x * s.b.matrix(), tol);
      return v;
    };
    defs.push_back(d);
  }
  {
    CheckDef d = def_matrix("lemma32", "norm interpolation bound", 0.0, 1.0);
    d.run_matrix = [](const MatrixSample& s, Variant v,
                      double tol) -> std::optional<Verdict> {
      return fold_norm_family("lemma32", s, v, tol, [&](const NormSpec& spec) {
        return check_lemma32(spec, s.a, s.b, s.x, s.nu, tol);
      });
    };
    defs.push_back(d);
  }
  {
    CheckDef d = def_matrix("lemma33", "Minkowski determinant bound", 0.01,
                            0.99);
    d.run_matrix = [](const MatrixSample& s, Variant, double tol)
        -> std::optional<Verdict> {
      if (!s.a.positive_definite() || !s.b.positive_definite())
        return std::nullopt;
      return check_lemma33(s.a, s.b, tol);
    };
    defs.push_back(d);
  }
  {
    CheckDef d = def_matrix("bhatia-kittaneh",
                            "geometric-arithmetic mean norm bound", 0.01, 0.99);
    d.run_matrix = [](const MatrixSample& s, Variant v,
                      double tol) -> std::optional<Verdict> {
      return fold_norm_family("bhatia-kittaneh", s, v, tol,
                              [&](const NormSpec& spec) {
                                return check_bhatia_kittaneh(spec, s.a, s.b,
                                                             s.x, tol);
                              });
    };
    defs.push_back(d);
  }
  for (HsIdentity which :
       {HsIdentity::Sum, HsIdentity::ASide, HsIdentity::BSide}) {
    CheckDef d = def_matrix(to_string(which),
                            "HS decomposition identity", 0.01, 0.99);
    d.run_matrix = [which](const MatrixSample& s, Variant, double tol)
        -> std::optional<Verdict> {
      return check_hs_identity(which, s.a, s.b, s.x, tol);
    };
    defs.push_back(d);
  }
}

}  // namespace detail

inline const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> defs = [] {
    std::vector<CheckDef> d;
    detail::add_scalar_checks(d);
    detail::add_matrix_checks(d);
    return d;
  }();
  return defs;
}

}  // namespace matineq
