#include "kdelta/kstab.hpp"

#include <algorithm>

namespace kdelta {

Rational log_discrepancy(const SurfaceModel& model, const std::string& flag) {
  (void)model.curve(flag);
  if (!model.is_contracted(flag)) return Rational(1);
  auto discrepancies = solve_discrepancies(model, model.contracted);
  return discrepancies.at(flag);
}

Rational s_invariant(const ZariskiPath& path) {
  if (path.vol0 <= 0)
    throw ComputationError("anticanonical volume must be positive");
  PiecewiseQuadratic vol = volume_function(path);
  return integrate(vol, Rational(0), path.tau) / path.vol0;
}

Rational beta(const SurfaceModel& model, const std::string& flag) {
  ZariskiPath path = zariski_path(model, flag);
  return log_discrepancy(model, flag) - s_invariant(path);
}

PiecewiseQuadratic restricted_profile(const ZariskiPath& path,
                                      const FlagPointSpec& q,
                                      bool* used_bound) {
  if (q.flag_curve != path.flag)
    throw ValidationError("point " + q.label + " lies on flag " +
                          q.flag_curve + ", not " + path.flag);
  const SurfaceModel& model = *path.model;
  if (q.log_discrepancy_on_flag <= 0 || q.log_discrepancy_on_flag > 1)
    throw ValidationError("log discrepancy on flag must lie in (0, 1]");
  const ClassVector& e = model.curve(path.flag).cls;
  for (const auto& [curve_label, mult] : q.local_multiplicities) {
    // Total intersection bounds every local multiplicity.
    if (!q.is_generic && mult.value > pair(model, curve_label, path.flag))
      throw ValidationError("local multiplicity at " + q.label +
                            " exceeds total intersection with " + curve_label);
  }
  bool any_bound = false;
  std::vector<PiecewiseQuadratic::Segment> segs;
  for (const auto& seg : path.segments) {
    LinearFn pe = seg.positive_dot(model, e);
    // (N(t).E)_q = sum over support of coeff_C(t) * (C.E)_q.
    LinearFn ne_q{Rational(0), Rational(0)};
    if (!q.is_generic) {
      for (const auto& label : seg.negative_support) {
        if (label == path.flag) continue;  // no self-multiplicity
        auto it = q.local_multiplicities.find(label);
        if (it == q.local_multiplicities.end()) continue;
        if (it->second.value == 0) continue;
        const LinearFn& c = seg.coefficients.at(label);
        ne_q.a0 += c.a0 * it->second.value;
        ne_q.a1 += c.a1 * it->second.value;
        if (it->second.is_upper_bound) any_bound = true;
      }
    }
    // h = pe * ne_q + pe^2 / 2, expanded exactly.
    PiecewiseQuadratic::Segment s;
    s.lo = seg.t_lo;
    s.hi = seg.t_hi;
    s.c0 = pe.a0 * ne_q.a0 + pe.a0 * pe.a0 / 2;
    s.c1 = pe.a0 * ne_q.a1 + pe.a1 * ne_q.a0 + pe.a0 * pe.a1;
    s.c2 = pe.a1 * ne_q.a1 + pe.a1 * pe.a1 / 2;
    segs.push_back(s);
  }
  if (used_bound) *used_bound = any_bound;
  return PiecewiseQuadratic(std::move(segs));
}

std::pair<Rational, ValueMode> s_w(const ZariskiPath& path,
                                   const FlagPointSpec& q) {
  if (path.vol0 <= 0)
    throw ComputationError("anticanonical volume must be positive");
  bool used_bound = false;
  PiecewiseQuadratic h = restricted_profile(path, q, &used_bound);
  Rational value = 2 * integrate(h, Rational(0), path.tau) / path.vol0;
  return {value, used_bound ? ValueMode::upper_bound : ValueMode::exact};
}

DeltaReport delta_lower_bound(const SurfaceModel& model,
                              const std::string& flag,
                              const std::vector<FlagPointSpec>& points) {
  bool has_generic = false;
  for (const auto& q : points)
    if (q.is_generic) has_generic = true;
  if (!has_generic)
    throw ValidationError(
        "delta lower bound needs a generic point on the flag");

  ZariskiPath path = zariski_path(model, flag);
  DeltaReport report;
  report.flag = flag;
  report.a = log_discrepancy(model, flag);
  report.s = s_invariant(path);
  report.tau = path.tau;
  if (report.s <= 0) throw ComputationError("S invariant must be positive");
  report.ratio = report.a / report.s;

  report.delta_lower_bound = report.ratio;
  bool min_is_exact = true;  // the A/S entry is always exact
  for (const auto& q : points) {
    auto [value, mode] = s_w(path, q);
    if (value <= 0)
      throw ComputationError("restricted profile integrates to zero at " +
                             q.label);
    DeltaPointEntry entry;
    entry.point = q.label;
    entry.s_w = value;
    entry.mode = mode;
    entry.quotient = q.log_discrepancy_on_flag / value;
    if (entry.quotient < report.delta_lower_bound) {
      report.delta_lower_bound = entry.quotient;
      min_is_exact = (mode == ValueMode::exact);
    } else if (entry.quotient == report.delta_lower_bound &&
               mode == ValueMode::exact) {
      min_is_exact = true;
    }
    report.points.push_back(std::move(entry));
  }
  // An upper-bound S_W underestimates its quotient, so a bound entry lying
  // strictly above the minimum cannot disturb it: the minimum is exact as
  // long as some exact entry attains it.
  report.bound_mode = min_is_exact ? ValueMode::exact : ValueMode::upper_bound;
  if (report.delta_lower_bound > 1)
    report.verdict = DeltaVerdict::delta_gt_1;
  else if (report.delta_lower_bound == 1 && min_is_exact)
    report.verdict = DeltaVerdict::delta_eq_1;
  else
    report.verdict = DeltaVerdict::inconclusive;
  return report;
}

bool liu_excludes(const Rational& volume, long long group_order) {
  if (volume <= 0) throw ValidationError("volume must be positive");
  if (group_order < 1) throw ValidationError("group order must be positive");
  return volume > Rational(9, group_order);
}

std::pair<Rational, Rational> alpha_delta_bounds(const Rational& alpha,
                                                 long long dim) {
  if (alpha <= 0) throw ValidationError("alpha must be positive");
  if (dim < 1) throw ValidationError("dimension must be positive");
  return {Rational(dim + 1, dim) * alpha, Rational(dim + 1) * alpha};
}

}  // namespace kdelta
