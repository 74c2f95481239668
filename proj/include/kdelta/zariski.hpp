#pragma once

// Zariski decompositions D = P + N on surface models, the one-parameter
// chamber path of (pullback of -K) - t*E for a flag curve E, the
// pseudoeffective threshold tau, and exact piecewise-quadratic volume
// functions with exact integration.

#include "kdelta/lattice.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kdelta {

// An affine function a0 + a1*t.
struct LinearFn {
  Rational a0, a1;
  Rational eval(const Rational& t) const { return a0 + a1 * t; }
  // Root of the function when a1 != 0.
  std::optional<Rational> root() const {
    if (a1 == 0) return std::nullopt;
    return -a0 / a1;
  }
};

// A piecewise polynomial of degree <= 2 over contiguous rational intervals.
struct PiecewiseQuadratic {
  struct Segment {
    Rational lo, hi;
    Rational c0, c1, c2;  // c0 + c1*t + c2*t^2 on [lo, hi]
    Rational eval(const Rational& t) const { return c0 + t * (c1 + t * c2); }
  };
  std::vector<Segment> segments;

  PiecewiseQuadratic() = default;
  explicit PiecewiseQuadratic(std::vector<Segment> segs);

  std::vector<Rational> breakpoints() const;
  Rational domain_lo() const;
  Rational domain_hi() const;
  Rational eval(const Rational& t) const;
};

// Exact integral of f over [a, b]; [a, b] must lie inside f's domain.
Rational integrate(const PiecewiseQuadratic& f, const Rational& a,
                   const Rational& b);

// One chamber of a Zariski path: on [t_lo, t_hi] the negative part is
// N(t) = sum coeff[C](t) * C over negative_support, and the positive part is
// P(t) = p0 + t*p1.
struct ZariskiSegment {
  Rational t_lo, t_hi;
  std::vector<std::string> negative_support;  // in model curve order
  std::map<std::string, LinearFn> coefficients;
  ClassVector p0, p1;

  LinearFn positive_dot(const SurfaceModel& model, const ClassVector& c) const;
  // Volume quadratic P(t)^2 on this segment.
  PiecewiseQuadratic::Segment volume(const SurfaceModel& model) const;
};

struct ZariskiPath {
  const SurfaceModel* model = nullptr;  // not owned
  std::string flag;
  ClassVector start;  // pullback of -K (orthogonal to contracted curves)
  std::vector<ZariskiSegment> segments;
  Rational tau;
  Rational vol0;  // start^2 = (-K)^2 of the contracted surface

  std::vector<Rational> breakpoints() const;
};

// Zariski decomposition of D over the tracked irreducible curves:
// D = P + N with N = sum coeffs, P orthogonal to the support, P nonnegative
// against every tracked curve. `candidate_order` overrides the insertion
// order (used to confirm order-independence); default is declaration order.
// Throws ComputationError("not pseudoeffective over tracked cone") when a
// fixpoint coefficient turns negative or the support loses negative
// definiteness.
std::pair<ClassVector, std::map<std::string, Rational>> zariski_decompose(
    const SurfaceModel& model, const ClassVector& d,
    const std::vector<std::string>& candidate_order = {});

// Chamber walk of start - t*flag from t = 0 to the pseudoeffective threshold
// tau (the first zero of the volume). The start class is the orthogonalized
// pullback of -K. Throws ComputationError("pseudoeffective data incomplete")
// when the volume stays positive but no tracked curve produces the next wall.
ZariskiPath zariski_path(const SurfaceModel& model, const std::string& flag);

// Exact volume function vol(t) = P(t)^2 along the path.
PiecewiseQuadratic volume_function(const ZariskiPath& path);

// P(t) . (class of the flag curve), piecewise affine (stored with c2 = 0).
PiecewiseQuadratic positive_part_dot_flag(const ZariskiPath& path);

}  // namespace kdelta
