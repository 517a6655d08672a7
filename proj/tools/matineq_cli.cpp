// Command-line harness: run check suites, sweep nu, audit printed-vs-
// corrected formula variants, emit machine-readable reports.
//
// Exit codes: 0 clean, 1 violations present (suite: any pinned-variant
// violation; audit: a pinned variant fails its grid), 2 usage error,
// 3 I/O failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "matineq/harness.hpp"

namespace {

using matineq::Json;
using matineq::Report;
using matineq::RunOptions;

struct CommonFlags {
  std::optional<std::string> config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> n;
  std::optional<int> samples;
  std::optional<std::string> nu_grid;
  std::optional<double> tol;
  std::optional<std::string> variant;
  std::string format = "json";
  std::optional<std::string> out;
};

void add_common_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config_path, "JSON config file (flags win)");
  cmd->add_option("--seed", f.seed, "PRNG seed");
  cmd->add_option("--n", f.n, "max matrix dimension");
  cmd->add_option("--samples", f.samples, "random samples per check");
  cmd->add_option("--nu-grid", f.nu_grid,
                  "comma list or lo:hi:steps (linear)");
  cmd->add_option("--tol", f.tol, "relative slack tolerance override");
  cmd->add_option("--variant", f.variant, "printed|corrected|derived");
  cmd->add_option("--format", f.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", f.out, "output path (default stdout)");
}

std::vector<double> parse_nu_grid(const std::string& spec) {
  std::vector<double> out;
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const auto colon2 = spec.find(':', colon + 1);
    matineq::require(colon2 != std::string::npos,
                     "nu grid spec must be lo:hi:steps");
    const double lo = std::stod(spec.substr(0, colon));
    const double hi = std::stod(spec.substr(colon + 1, colon2 - colon - 1));
    const int steps = std::stoi(spec.substr(colon2 + 1));
    matineq::require(steps >= 1 && hi >= lo, "bad nu grid spec");
    for (int i = 0; i < steps; ++i)
      out.push_back(steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1.0));
    return out;
  }
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t comma = spec.find(',', pos);
    if (comma == std::string::npos) comma = spec.size();
    out.push_back(std::stod(spec.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

RunOptions build_options(const CommonFlags& f) {
  RunOptions opts;
  if (f.config_path) {
    std::ifstream in(*f.config_path);
    if (!in) throw std::ios_base::failure("cannot read " + *f.config_path);
    Json j = Json::parse(in);
    opts.cfg = matineq::config_from_json(j);
  }
  if (f.seed) opts.cfg.seed = *f.seed;
  if (f.n) opts.cfg.n = *f.n;
  if (f.samples) opts.cfg.count = *f.samples;
  if (f.nu_grid) opts.cfg.nu_grid = parse_nu_grid(*f.nu_grid);
  if (f.tol) opts.tol_override = *f.tol;
  if (f.variant) opts.variant_override = matineq::variant_from_string(*f.variant);
  return opts;
}

void write_output(const CommonFlags& f, const std::string& text) {
  if (f.out) {
    std::ofstream os(*f.out);
    if (!os) throw std::ios_base::failure("cannot write " + *f.out);
    os << text;
    if (!os) throw std::ios_base::failure("write failed: " + *f.out);
  } else {
    std::cout << text << '\n';
  }
}

void emit_report(const CommonFlags& f, const Report& r, bool witnesses) {
  if (f.format == "csv") {
    write_output(f, r.kind == "sweep" ? matineq::sweep_csv(r) : r.to_csv());
  } else {
    write_output(f, r.to_json(witnesses).dump(2));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matrix inequality verification harness"};
  app.require_subcommand(1);

  CommonFlags suite_flags;
  std::optional<std::string> suite_check;
  CLI::App* suite = app.add_subcommand("suite", "run all pinned checks");
  add_common_flags(suite, suite_flags);
  suite->add_option("--check", suite_check, "restrict to one check id");

  CommonFlags check_flags;
  std::string check_id;
  std::string inputs_path;
  std::optional<double> check_nu;
  CLI::App* check = app.add_subcommand("check", "evaluate one check");
  check->add_option("check_id", check_id, "check id")->required();
  check->add_option("--inputs", inputs_path, "JSON inputs file")->required();
  check->add_option("--nu", check_nu, "nu parameter");
  add_common_flags(check, check_flags);

  CommonFlags sweep_flags;
  std::string sweep_id;
  CLI::App* sweep = app.add_subcommand("sweep", "per-nu min-slack curve");
  sweep->add_option("check_id", sweep_id, "check id")->required();
  add_common_flags(sweep, sweep_flags);

  CommonFlags audit_flags;
  std::string audit_id = "all";
  CLI::App* audit = app.add_subcommand(
      "audit", "adjudicate printed vs corrected formula variants");
  audit->add_option("check_id", audit_id, "check id or \"all\"");
  add_common_flags(audit, audit_flags);

  CLI::App* list = app.add_subcommand("list", "list registered check ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (suite->parsed()) {
      RunOptions opts = build_options(suite_flags);
      opts.only_check = suite_check;
      const Report r = matineq::run_suite(opts);
      emit_report(suite_flags, r, false);
      return r.total_violations() == 0 ? 0 : 1;
    }
    if (check->parsed()) {
      std::ifstream in(inputs_path);
      if (!in) throw std::ios_base::failure("cannot read " + inputs_path);
      const Json inputs = Json::parse(in);
      std::optional<matineq::Variant> variant;
      if (check_flags.variant)
        variant = matineq::variant_from_string(*check_flags.variant);
      const auto verdict = matineq::evaluate_check_on_inputs(
          check_id, inputs, check_nu, variant, check_flags.tol);
      if (!verdict) {
        write_output(check_flags,
                     Json{{"check_id", check_id}, {"skipped", true}}.dump(2));
        return 0;
      }
      write_output(check_flags, matineq::to_json(*verdict).dump(2));
      return verdict->holds ? 0 : 1;
    }
    if (sweep->parsed()) {
      RunOptions opts = build_options(sweep_flags);
      std::vector<double> grid = opts.cfg.nus();
      const Report r = matineq::run_sweep(sweep_id, grid, opts);
      emit_report(sweep_flags, r, false);
      return r.total_violations() == 0 ? 0 : 1;
    }
    if (audit->parsed()) {
      RunOptions opts = build_options(audit_flags);
      const Report r = matineq::run_audit(audit_id, opts);
      emit_report(audit_flags, r, true);
      return r.extra.at("all_pinned_pass").get<bool>() ? 0 : 1;
    }
    if (list->parsed()) {
      for (const auto& def : matineq::check_registry()) {
        std::cout << def.id << (def.variants.size() > 1 ? " [printed|corrected]"
                                                        : "")
                  << " - " << def.summary << '\n';
      }
      return 0;
    }
  } catch (const matineq::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return 3;
  } catch (const Json::exception& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
