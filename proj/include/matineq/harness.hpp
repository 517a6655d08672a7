#pragma once

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "matineq/json_io.hpp"

namespace matineq {

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return std::string(buf);
}

inline std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return std::string(buf);
}

// Aggregate of one check/variant over a sample population.
struct ReportEntry {
  std::string check_id;
  Variant variant = Variant::Corrected;
  long samples = 0;
  long skipped = 0;
  long violations = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  double nu_at_min = 0.0;
  std::string argmin_label;
  std::uint64_t argmin_digest = 0;
  Json argmin_inputs;
  std::vector<Json> witnesses;  // first violations, for the audit trail

  // `make_inputs` is only invoked when a witness or a new minimum needs the
  // serialized inputs; the audit grids are large.
  template <typename F>
  void absorb(const Verdict& v, double nu, const std::string& label,
              F&& make_inputs, std::size_t witness_cap = 16) {
    ++samples;
    const bool need_witness = !v.holds && witnesses.size() < witness_cap;
    const bool need_min = v.min_slack < min_slack;
    Json inputs;
    if (need_witness || need_min) inputs = make_inputs();
    if (!v.holds) {
      ++violations;
      if (need_witness) {
        witnesses.push_back(Json{{"label", label},
                                 {"nu", nu},
                                 {"slack", v.min_slack},
                                 {"digest", hex64(v.inputs_digest)},
                                 {"inputs", inputs}});
      }
    }
    if (need_min) {
      min_slack = v.min_slack;
      nu_at_min = nu;
      argmin_label = label;
      argmin_digest = v.inputs_digest;
      argmin_inputs = inputs;
    }
  }
};

inline Json to_json(const ReportEntry& e, bool with_witnesses) {
  Json j{{"check_id", e.check_id},
         {"variant", to_string(e.variant)},
         {"samples", e.samples},
         {"skipped", e.skipped},
         {"violations", e.violations},
         {"min_slack", e.min_slack},
         {"nu_at_min", e.nu_at_min},
         {"argmin_label", e.argmin_label},
         {"argmin_digest", hex64(e.argmin_digest)},
         {"argmin_inputs", e.argmin_inputs}};
  if (with_witnesses) j["witnesses"] = e.witnesses;
  return j;
}

struct Report {
  std::string kind;  // "suite", "sweep", "audit"
  std::string run_id;
  std::uint64_t seed = 0;
  std::string created_at;
  Json config;
  std::vector<ReportEntry> entries;
  Json extra;  // sweep rows, audit adjudications

  long total_violations() const {
    long v = 0;
    for (const ReportEntry& e : entries) v += e.violations;
    return v;
  }

  Json to_json(bool with_witnesses = false) const {
    Json ents = Json::array();
    for (const ReportEntry& e : entries)
      ents.push_back(matineq::to_json(e, with_witnesses));
    Json j{{"kind", kind},      {"run_id", run_id},
           {"seed", seed},      {"created_at", created_at},
           {"config", config},  {"entries", std::move(ents)},
           {"violations_total", total_violations()}};
    if (!extra.is_null()) j["extra"] = extra;
    return j;
  }

  std::string to_csv() const {
    std::ostringstream os;
    os << "check_id,variant,samples,skipped,violations,min_slack,nu_at_min,"
          "argmin_digest\n";
    os.precision(17);
    for (const ReportEntry& e : entries) {
      os << e.check_id << ',' << to_string(e.variant) << ',' << e.samples
         << ',' << e.skipped << ',' << e.violations << ',' << e.min_slack
         << ',' << e.nu_at_min << ',' << hex64(e.argmin_digest) << '\n';
    }
    return os.str();
  }
};

struct RunOptions {
  SampleConfig cfg;
  std::optional<double> tol_override;
  std::optional<std::string> only_check;
  std::optional<Variant> variant_override;
  int audit_grid_side = 200;
  int audit_matrix_samples = 500;
  int audit_nu_points = 99;

  double tol_for(const CheckDef& def) const {
    if (tol_override) return *tol_override;
    return def.scalar ? kScalarTol : kMatrixTol;
  }
};

namespace detail {

inline std::vector<double> filtered_nus(const CheckDef& def,
                                        const std::vector<double>& grid) {
  std::vector<double> out;
  for (double nu : grid)
    if (nu >= def.nu_lo && nu <= def.nu_hi) out.push_back(nu);
  if (out.empty()) out.push_back(0.5 * (def.nu_lo + def.nu_hi));
  return out;
}

inline ScalarSample random_scalar_sample(const SampleConfig& cfg,
                                         std::uint64_t sub) {
  SplitMix64 g(sub);
  ScalarSample s;
  s.a = g.log_uniform(cfg.scalar_lo, cfg.scalar_hi);
  s.b = g.log_uniform(cfg.scalar_lo, cfg.scalar_hi);
  return s;
}

inline MatrixSample random_matrix_sample(const SampleConfig& cfg,
                                         std::uint64_t sub) {
  SplitMix64 g(sub);
  const int dim = 1 + static_cast<int>(g.next() % static_cast<unsigned>(cfg.n));
  HermitianPSD a = gen_psd(g.next(), dim);
  HermitianPSD b = gen_psd(g.next(), dim);
  ComplexMatrix x = gen_matrix(g.next(), dim, dim);
  return MatrixSample{std::move(a), std::move(b), std::move(x), 0.25,
                      "random"};
}

// Run one check/variant over its structured and random population.
inline ReportEntry run_check_population(const CheckDef& def, Variant variant,
                                        const RunOptions& opts,
                                        int random_count) {
  ReportEntry entry;
  entry.check_id = def.id;
  entry.variant = variant;
  const double tol = opts.tol_for(def);
  const SampleConfig& cfg = opts.cfg;
  const std::vector<double> nus = filtered_nus(def, cfg.nus());

  if (def.scalar) {
    if (cfg.include_structured) {
      auto pairs = structured_scalar_pairs();
      for (const auto& extra : def.scalar_extra_pairs) pairs.push_back(extra);
      for (const auto& [a, b] : pairs) {
        for (double nu : def.structured_nus()) {
          ScalarSample s{a, b, nu, "structured"};
          std::optional<Verdict> v = def.run_scalar(s, variant, tol);
          if (!v) {
            ++entry.skipped;
            continue;
          }
          entry.absorb(*v, nu, s.label, [&] { return matineq::to_json(s); });
        }
      }
    }
    const std::uint64_t stream = stream_seed(cfg.seed, def.id);
    for (int i = 0; i < random_count; ++i) {
      ScalarSample s = random_scalar_sample(cfg, mix_seed(stream, i));
      s.nu = nus[static_cast<std::size_t>(i) % nus.size()];
      std::optional<Verdict> v = def.run_scalar(s, variant, tol);
      if (!v) {
        ++entry.skipped;
        continue;
      }
      entry.absorb(*v, s.nu, s.label, [&] { return matineq::to_json(s); });
    }
  } else {
    if (cfg.include_structured) {
      for (const MatrixSample& base : structured_cases(cfg.n, cfg.seed)) {
        for (double nu : def.structured_nus()) {
          MatrixSample s = base;
          s.nu = nu;
          std::optional<Verdict> v = def.run_matrix(s, variant, tol);
          if (!v) {
            ++entry.skipped;
            continue;
          }
          entry.absorb(*v, nu, s.label, [&] { return matineq::to_json(s); });
        }
      }
    }
    const std::uint64_t stream = stream_seed(cfg.seed, def.id);
    for (int i = 0; i < random_count; ++i) {
      MatrixSample s = random_matrix_sample(cfg, mix_seed(stream, i));
      s.nu = nus[static_cast<std::size_t>(i) % nus.size()];
      std::optional<Verdict> v = def.run_matrix(s, variant, tol);
      if (!v) {
        ++entry.skipped;
        continue;
      }
      entry.absorb(*v, s.nu, s.label, [&] { return matineq::to_json(s); });
    }
  }
  return entry;
}

}  // namespace detail

// Full suite over the pinned (or overridden) variant of every check.
inline Report run_suite(const RunOptions& opts) {
  Report r;
  r.kind = "suite";
  r.seed = opts.cfg.seed;
  r.config = to_json(opts.cfg);
  r.created_at = utc_timestamp();
  for (const CheckDef& def : check_registry()) {
    if (opts.only_check && def.id != *opts.only_check) continue;
    Variant variant = def.pinned;
    if (opts.variant_override && def.has_variant(*opts.variant_override))
      variant = *opts.variant_override;
    r.entries.push_back(
        detail::run_check_population(def, variant, opts, opts.cfg.count));
  }
  if (opts.only_check && r.entries.empty())
    throw DomainError("unknown check id: " + *opts.only_check);
  r.run_id = hex64(fnv1a(r.config.dump() + r.kind));
  return r;
}

// Per-nu minimum-slack curve.  Random draws are shared across rows so the
// curve varies only through nu.
inline Report run_sweep(const std::string& check_id,
                        const std::vector<double>& nu_grid,
                        const RunOptions& opts) {
  const CheckDef* def = find_check(check_id);
  if (def == nullptr) throw DomainError("unknown check id: " + check_id);
  Variant variant = def->pinned;
  if (opts.variant_override && def->has_variant(*opts.variant_override))
    variant = *opts.variant_override;
  const double tol = opts.tol_for(*def);
  const SampleConfig& cfg = opts.cfg;
  const std::uint64_t stream = stream_seed(cfg.seed, def->id);

  Report r;
  r.kind = "sweep";
  r.seed = cfg.seed;
  r.config = to_json(cfg);
  r.config["check"] = check_id;
  r.config["variant"] = to_string(variant);
  r.created_at = utc_timestamp();
  Json rows = Json::array();
  for (double nu : nu_grid) {
    if (nu < def->nu_lo || nu > def->nu_hi) continue;
    ReportEntry entry;
    entry.check_id = def->id;
    entry.variant = variant;
    for (int i = 0; i < cfg.count; ++i) {
      std::optional<Verdict> v;
      Json inputs;
      std::string label;
      if (def->scalar) {
        ScalarSample s = detail::random_scalar_sample(cfg, mix_seed(stream, i));
        s.nu = nu;
        v = def->run_scalar(s, variant, tol);
        inputs = to_json(s);
        label = s.label;
      } else {
        MatrixSample s = detail::random_matrix_sample(cfg, mix_seed(stream, i));
        s.nu = nu;
        v = def->run_matrix(s, variant, tol);
        inputs = to_json(s);
        label = s.label;
      }
      if (!v) {
        ++entry.skipped;
        continue;
      }
      entry.absorb(*v, nu, label, [&] { return inputs; });
    }
    rows.push_back(Json{{"nu", nu},
                        {"samples", entry.samples},
                        {"skipped", entry.skipped},
                        {"violations", entry.violations},
                        {"min_slack", entry.min_slack},
                        {"argmin_digest", hex64(entry.argmin_digest)},
                        {"argmin_inputs", entry.argmin_inputs}});
    r.entries.push_back(std::move(entry));
  }
  r.extra = Json{{"rows", rows}};
  r.run_id = hex64(fnv1a(r.config.dump() + r.kind));
  return r;
}

inline std::string sweep_csv(const Report& r) {
  std::ostringstream os;
  os << "nu,min_slack,argmin_digest\n";
  os.precision(17);
  for (const Json& row : r.extra.at("rows")) {
    os << row.at("nu").get<double>() << ','
       << row.at("min_slack").get<double>() << ','
       << row.at("argmin_digest").get<std::string>() << '\n';
  }
  return os.str();
}

// Variant adjudication: dense deterministic inputs, both variants, with
// violation witnesses.  Scalars: an audit_grid_side^2 log lattice crossed
// with the nu grid; matrices: structured cases plus seeded samples.
inline Report run_audit(const std::string& id_or_all, const RunOptions& opts) {
  std::vector<const CheckDef*> defs;
  if (id_or_all == "all") {
    for (const CheckDef& def : check_registry())
      if (def.variants.size() > 1) defs.push_back(&def);
  } else {
    const CheckDef* def = find_check(id_or_all);
    if (def == nullptr) throw DomainError("unknown check id: " + id_or_all);
    defs.push_back(def);
  }

  const SampleConfig& cfg = opts.cfg;
  Report r;
  r.kind = "audit";
  r.seed = cfg.seed;
  r.config = to_json(cfg);
  r.config["target"] = id_or_all;
  r.config["grid_side"] = opts.audit_grid_side;
  r.config["matrix_samples"] = opts.audit_matrix_samples;
  r.created_at = utc_timestamp();

  Json adjudications = Json::array();
  bool all_pinned_pass = true;
  for (const CheckDef* def : defs) {
    const double tol = opts.tol_for(*def);
    Json adj{{"check_id", def->id}, {"pinned", to_string(def->pinned)}};
    for (Variant variant : def->variants) {
      ReportEntry entry;
      entry.check_id = def->id;
      entry.variant = variant;
      if (def->scalar) {
        const int side = opts.audit_grid_side;
        std::vector<double> lattice(side);
        const double llo = std::log(cfg.scalar_lo);
        const double lhi = std::log(cfg.scalar_hi);
        for (int i = 0; i < side; ++i)
          lattice[i] = std::exp(llo + (lhi - llo) * i / (side - 1.0));
        std::vector<double> nus =
            detail::filtered_nus(*def, SampleConfig::default_nu_grid());
        for (double nu : def->structured_nus())
          if (std::find(nus.begin(), nus.end(), nu) == nus.end())
            nus.push_back(nu);
        // structured pairs first so witnesses carry the canonical cases
        auto pairs = structured_scalar_pairs();
        for (const auto& extra : def->scalar_extra_pairs) pairs.push_back(extra);
        for (const auto& [a, b] : pairs) {
          for (double nu : nus) {
            ScalarSample s{a, b, nu, "structured"};
            std::optional<Verdict> v = def->run_scalar(s, variant, tol);
            if (!v) {
              ++entry.skipped;
              continue;
            }
            entry.absorb(*v, nu, s.label, [&] { return to_json(s); });
          }
        }
        for (double a : lattice) {
          for (double b : lattice) {
            for (double nu : nus) {
              ScalarSample s{a, b, nu, "grid"};
              std::optional<Verdict> v = def->run_scalar(s, variant, tol);
              if (!v) {
                ++entry.skipped;
                continue;
              }
              // keep the witness list small: absorb tracks first 16
              entry.absorb(*v, nu, s.label, [&] { return to_json(s); });
            }
          }
        }
      } else {
        for (const MatrixSample& base : structured_cases(cfg.n, cfg.seed)) {
          for (double nu : def->structured_nus()) {
            MatrixSample s = base;
            s.nu = nu;
            std::optional<Verdict> v = def->run_matrix(s, variant, tol);
            if (!v) {
              ++entry.skipped;
              continue;
            }
            entry.absorb(*v, nu, s.label, [&] { return to_json(s); });
          }
        }
        const std::uint64_t stream = stream_seed(cfg.seed, def->id + "#audit");
        const std::vector<double> nus =
            detail::filtered_nus(*def, SampleConfig::default_nu_grid());
        for (int i = 0; i < opts.audit_matrix_samples; ++i) {
          MatrixSample s =
              detail::random_matrix_sample(cfg, mix_seed(stream, i));
          s.nu = nus[static_cast<std::size_t>(i) % nus.size()];
          std::optional<Verdict> v = def->run_matrix(s, variant, tol);
          if (!v) {
            ++entry.skipped;
            continue;
          }
          entry.absorb(*v, s.nu, s.label, [&] { return to_json(s); });
        }
      }
      adj[to_string(variant)] =
          Json{{"violations", entry.violations}, {"passes", entry.violations == 0}};
      if (variant == def->pinned && entry.violations > 0)
        all_pinned_pass = false;
      r.entries.push_back(std::move(entry));
    }
    adjudications.push_back(std::move(adj));
  }
  r.extra = Json{{"adjudications", adjudications},
                 {"all_pinned_pass", all_pinned_pass}};
  r.run_id = hex64(fnv1a(r.config.dump() + r.kind));
  return r;
}

// Single-shot evaluation of one check on explicit inputs (cmd check).
// Returns nullopt when the sample lies outside the check's domain.
inline std::optional<Verdict> evaluate_check_on_inputs(
    const std::string& check_id, const Json& inputs,
    std::optional<double> nu_flag, std::optional<Variant> variant_flag,
    std::optional<double> tol_flag) {
  const CheckDef* def = find_check(check_id);
  if (def == nullptr) throw DomainError("unknown check id: " + check_id);
  Variant variant = def->pinned;
  if (variant_flag && def->has_variant(*variant_flag)) variant = *variant_flag;
  double tol = def->scalar ? kScalarTol : kMatrixTol;
  if (tol_flag) tol = *tol_flag;
  double nu = 0.25;
  if (inputs.contains("nu")) nu = inputs.at("nu").get<double>();
  if (nu_flag) nu = *nu_flag;

  if (def->scalar) {
    require(inputs.contains("a") && inputs.contains("b"),
            "scalar check inputs need fields \"a\" and \"b\"");
    ScalarSample s{inputs.at("a").get<double>(), inputs.at("b").get<double>(),
                   nu, "cli"};
    return def->run_scalar(s, variant, tol);
  }
  require(inputs.contains("A") && inputs.contains("B"),
          "matrix check inputs need fields \"A\" and \"B\"");
  HermitianPSD a = HermitianPSD::make(matrix_from_json(inputs.at("A")));
  HermitianPSD b = HermitianPSD::make(matrix_from_json(inputs.at("B")));
  ComplexMatrix x = inputs.contains("X")
                        ? matrix_from_json(inputs.at("X"))
                        : ComplexMatrix::identity(a.dim());
  MatrixSample s{std::move(a), std::move(b), std::move(x), nu, "cli"};
  return def->run_matrix(s, variant, tol);
}

}  // namespace matineq
