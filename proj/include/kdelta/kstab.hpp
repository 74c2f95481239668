#pragma once

// Stability invariants on top of Zariski paths: the log discrepancy A, the
// expected vanishing order S, beta = A - S, restricted profiles h(t) along a
// flag curve, the local S(W;q) at marked points, delta lower bounds via the
// two-term minimum formula, the normalized-volume instability test, and
// alpha-delta bound arithmetic.

#include "kdelta/zariski.hpp"

#include <string>
#include <vector>

namespace kdelta {

enum class ValueMode { exact, upper_bound };
enum class DeltaVerdict { delta_gt_1, delta_eq_1, inconclusive };

struct DeltaPointEntry {
  std::string point;
  Rational s_w;          // S(W;q), or an upper bound for it
  ValueMode mode = ValueMode::exact;
  Rational quotient;     // A_q / s_w (a lower bound when mode is upper_bound)
};

struct DeltaReport {
  std::string flag;
  Rational a;      // log discrepancy A(E)
  Rational s;      // S(E)
  Rational tau;
  Rational ratio;  // A/S
  std::vector<DeltaPointEntry> points;
  Rational delta_lower_bound;
  ValueMode bound_mode = ValueMode::exact;  // upper_bound -> lower_bound tag
  DeltaVerdict verdict = DeltaVerdict::inconclusive;
};

// Log discrepancy of the flag: from the joint discrepancy system over the
// contracted curves when the flag is one of them, else 1 (a curve on the
// surface itself).
Rational log_discrepancy(const SurfaceModel& model, const std::string& flag);

// S(E) = (1/vol(-K)) * integral of vol(start - tE) over [0, tau].
Rational s_invariant(const ZariskiPath& path);

// beta(E) = A(E) - S(E).
Rational beta(const SurfaceModel& model, const std::string& flag);

// Restricted profile along the flag at a marked point q:
//   h(t) = (P(t).E) * sum_C coeff_N(C, t) * (C.E)_q + (1/2)(P(t).E)^2
// with (C.E)_q the declared local multiplicity at q (0 when absent, all 0 for
// a generic point). Upper-bound multiplicities make the profile an upper
// bound; `used_bound`, when given, reports whether one was used.
PiecewiseQuadratic restricted_profile(const ZariskiPath& path,
                                      const FlagPointSpec& q,
                                      bool* used_bound = nullptr);

// S(W;q) = (2/vol(-K)) * integral of h over [0, tau], with its mode.
std::pair<Rational, ValueMode> s_w(const ZariskiPath& path,
                                   const FlagPointSpec& q);

// Assembles the delta lower bound at the point(s) of the flag:
//   delta >= min{ A(E)/S(E), min_q A_q / S(W;q) }.
// `points` must contain exactly one generic representative plus the declared
// special points. Verdict delta_gt_1 iff the minimum is > 1; delta_eq_1 only
// when the minimum is exactly 1 and some entry attaining it is exact-mode.
DeltaReport delta_lower_bound(const SurfaceModel& model,
                              const std::string& flag,
                              const std::vector<FlagPointSpec>& points);

// Normalized-volume necessary condition at a quotient singularity with local
// group order |G|: K-semistability forces (-K)^2 <= 9/|G|. Returns true when
// the surface is excluded (volume strictly above the bound).
bool liu_excludes(const Rational& volume, long long group_order);

// (lower, upper) delta bounds from an alpha-invariant bound:
// ((dim+1)/dim * alpha, (dim+1) * alpha).
std::pair<Rational, Rational> alpha_delta_bounds(const Rational& alpha,
                                                 long long dim);

}  // namespace kdelta
