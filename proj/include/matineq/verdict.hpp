#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "matineq/common.hpp"

namespace matineq {

// One inequality link lo <= hi.  `scale` is the relative-tolerance scale
// (max of 1, the two values, and the magnitude of any cancelling operands).
struct Link {
  std::string lo_label;
  std::string hi_label;
  double lo = 0.0;
  double hi = 0.0;
  double slack = 0.0;  // hi - lo, raw
  double scale = 1.0;
};

// One inequality evaluation: the full bound chain, per-link slack, and the
// pass/fail decision slack_i >= -tol * scale_i.
struct Verdict {
  std::string check_id;
  Variant variant = Variant::Corrected;
  std::uint64_t inputs_digest = 0;
  std::vector<Link> links;
  double tol_used = kScalarTol;
  bool holds = true;
  double min_slack = std::numeric_limits<double>::infinity();
  int min_link = -1;

  void add_link(std::string lo_label, double lo, std::string hi_label,
                double hi, double op_mag = 0.0) {
    Link l;
    l.lo_label = std::move(lo_label);
    l.hi_label = std::move(hi_label);
    l.lo = lo;
    l.hi = hi;
    l.slack = hi - lo;
    l.scale = link_scale(lo, hi, op_mag);
    if (l.slack < -tol_used * l.scale) holds = false;
    if (l.slack < min_slack) {
      min_slack = l.slack;
      min_link = static_cast<int>(links.size());
    }
    links.push_back(std::move(l));
  }

  // lhs = rhs within tolerance, expressed as the two opposing links.
  void add_equality(const std::string& lhs_label, double lhs,
                    const std::string& rhs_label, double rhs,
                    double op_mag = 0.0) {
    add_link(lhs_label, lhs, rhs_label, rhs, op_mag);
    add_link(rhs_label, rhs, lhs_label, lhs, op_mag);
  }

  // Chain view: the labelled values in link order (consecutive chains).
  std::vector<std::pair<std::string, double>> chain() const {
    std::vector<std::pair<std::string, double>> out;
    for (std::size_t i = 0; i < links.size(); ++i) {
      if (out.empty() || out.back().first != links[i].lo_label ||
          out.back().second != links[i].lo)
        out.emplace_back(links[i].lo_label, links[i].lo);
      out.emplace_back(links[i].hi_label, links[i].hi);
    }
    return out;
  }

  std::vector<double> slacks() const {
    std::vector<double> out;
    out.reserve(links.size());
    for (const Link& l : links) out.push_back(l.slack);
    return out;
  }
};

inline Verdict make_verdict(std::string check_id, Variant variant,
                            std::uint64_t digest, double tol) {
  Verdict v;
  v.check_id = std::move(check_id);
  v.variant = variant;
  v.inputs_digest = digest;
  v.tol_used = tol;
  return v;
}

// Convenience for plain monotone chains.
inline Verdict chain_verdict(
    std::string check_id, Variant variant, std::uint64_t digest, double tol,
    const std::vector<std::pair<std::string, double>>& chain,
    double op_mag = 0.0) {
  Verdict v = make_verdict(std::move(check_id), variant, digest, tol);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    v.add_link(chain[i].first, chain[i].second, chain[i + 1].first,
               chain[i + 1].second, op_mag);
  return v;
}

}  // namespace matineq
