#include "kdelta/zariski.hpp"

#include <algorithm>
#include <set>

namespace kdelta {

PiecewiseQuadratic::PiecewiseQuadratic(std::vector<Segment> segs)
    : segments(std::move(segs)) {
  for (size_t i = 0; i < segments.size(); ++i) {
    if (segments[i].lo > segments[i].hi)
      throw ValidationError("piecewise segment with lo > hi");
    if (i > 0) {
      if (segments[i - 1].hi != segments[i].lo)
        throw ValidationError("piecewise segments are not contiguous");
      if (segments[i - 1].eval(segments[i].lo) !=
          segments[i].eval(segments[i].lo))
        throw ValidationError("piecewise segments disagree at a breakpoint");
    }
  }
}

std::vector<Rational> PiecewiseQuadratic::breakpoints() const {
  std::vector<Rational> pts;
  for (size_t i = 0; i < segments.size(); ++i) {
    pts.push_back(segments[i].lo);
    if (i + 1 == segments.size()) pts.push_back(segments[i].hi);
  }
  return pts;
}

Rational PiecewiseQuadratic::domain_lo() const {
  if (segments.empty()) throw ValidationError("empty piecewise function");
  return segments.front().lo;
}

Rational PiecewiseQuadratic::domain_hi() const {
  if (segments.empty()) throw ValidationError("empty piecewise function");
  return segments.back().hi;
}

Rational PiecewiseQuadratic::eval(const Rational& t) const {
  for (const auto& s : segments)
    if (t >= s.lo && t <= s.hi) return s.eval(t);
  throw ValidationError("evaluation outside piecewise domain");
}

Rational integrate(const PiecewiseQuadratic& f, const Rational& a,
                   const Rational& b) {
  if (a > b) throw ValidationError("integrate requires a <= b");
  if (f.segments.empty() || a < f.domain_lo() || b > f.domain_hi())
    throw ValidationError("integration bounds outside piecewise domain");
  auto anti = [](const PiecewiseQuadratic::Segment& s, const Rational& t) {
    return t * (s.c0 + t * (s.c1 / 2 + t * s.c2 / 3));
  };
  Rational total = 0;
  for (const auto& s : f.segments) {
    Rational lo = std::max(a, s.lo), hi = std::min(b, s.hi);
    if (lo >= hi) continue;
    total += anti(s, hi) - anti(s, lo);
  }
  return total;
}

LinearFn ZariskiSegment::positive_dot(const SurfaceModel& model,
                                      const ClassVector& c) const {
  return LinearFn{pair(model, p0, c), pair(model, p1, c)};
}

PiecewiseQuadratic::Segment ZariskiSegment::volume(
    const SurfaceModel& model) const {
  PiecewiseQuadratic::Segment s;
  s.lo = t_lo;
  s.hi = t_hi;
  s.c0 = pair(model, p0, p0);
  s.c1 = 2 * pair(model, p0, p1);
  s.c2 = pair(model, p1, p1);
  return s;
}

std::vector<Rational> ZariskiPath::breakpoints() const {
  std::vector<Rational> pts;
  for (size_t i = 0; i < segments.size(); ++i) {
    pts.push_back(segments[i].t_lo);
    if (i + 1 == segments.size()) pts.push_back(segments[i].t_hi);
  }
  return pts;
}

namespace {

std::vector<std::string> tracked_irreducible(const SurfaceModel& model) {
  std::vector<std::string> labels;
  for (const auto& c : model.curves)
    if (c.is_irreducible) labels.push_back(c.label);
  return labels;
}

// Solves the affine coefficient system for a fixed support:
// (D(t) - sum_i c_i(t) C_i) . C_j = 0 with D(t) = d0 + t*d1. Returns per
// support curve the affine coefficient, or nullopt when the Gram matrix is
// singular.
std::optional<std::vector<LinearFn>> solve_support(
    const SurfaceModel& model, const std::vector<std::string>& support,
    const ClassVector& d0, const ClassVector& d1) {
  Matrix g(support.size(), std::vector<Rational>(support.size()));
  Matrix rhs(support.size(), std::vector<Rational>(2));
  for (size_t j = 0; j < support.size(); ++j) {
    const ClassVector& cj = model.curve(support[j]).cls;
    for (size_t i = 0; i < support.size(); ++i)
      g[j][i] = pair(model, model.curve(support[i]).cls, cj);
    rhs[j][0] = pair(model, d0, cj);
    rhs[j][1] = pair(model, d1, cj);
  }
  auto sol = solve_linear_multi(g, rhs);
  if (!sol) return std::nullopt;
  std::vector<LinearFn> coeffs(support.size());
  for (size_t i = 0; i < support.size(); ++i)
    coeffs[i] = LinearFn{(*sol)[i][0], (*sol)[i][1]};
  return coeffs;
}

struct SupportState {
  std::vector<std::string> support;     // in candidate order
  std::vector<LinearFn> coefficients;   // aligned with support
  ClassVector p0, p1;                   // P(t) = p0 + t*p1

  LinearFn positive_dot(const SurfaceModel& model, const ClassVector& c) const {
    return LinearFn{pair(model, p0, c), pair(model, p1, c)};
  }
};

// Recomputes coefficients and P(t) for the current support. Throws
// ComputationError on singular/non-negative-definite support.
SupportState resolve_support(const SurfaceModel& model,
                             const std::vector<std::string>& support,
                             const ClassVector& d0, const ClassVector& d1) {
  if (!support.empty() && !is_negative_definite(model, support))
    throw ComputationError("not pseudoeffective over tracked cone");
  auto coeffs = solve_support(model, support, d0, d1);
  if (!coeffs) throw ComputationError("not pseudoeffective over tracked cone");
  SupportState st;
  st.support = support;
  st.coefficients = *coeffs;
  st.p0 = d0;
  st.p1 = d1;
  for (size_t i = 0; i < support.size(); ++i) {
    const ClassVector& ci = model.curve(support[i]).cls;
    st.p0 = st.p0 - (*coeffs)[i].a0 * ci;
    st.p1 = st.p1 - (*coeffs)[i].a1 * ci;
  }
  return st;
}

}  // namespace

std::pair<ClassVector, std::map<std::string, Rational>> zariski_decompose(
    const SurfaceModel& model, const ClassVector& d,
    const std::vector<std::string>& candidate_order) {
  std::vector<std::string> candidates =
      candidate_order.empty() ? tracked_irreducible(model) : candidate_order;
  for (const auto& label : candidates) (void)model.curve(label);

  ClassVector zero = model.zero_class();
  std::vector<std::string> support;
  SupportState st;
  st.p0 = d;
  st.p1 = zero;
  const size_t max_rounds = 2 * candidates.size() + 2;
  for (size_t round = 0;; ++round) {
    if (round > max_rounds)
      throw ComputationError("not pseudoeffective over tracked cone");
    bool grew = false;
    for (const auto& label : candidates) {
      if (std::find(support.begin(), support.end(), label) != support.end())
        continue;
      if (pair(model, st.p0, model.curve(label).cls) < 0) {
        support.push_back(label);
        grew = true;
      }
    }
    if (!grew) break;
    st = resolve_support(model, support, d, zero);
  }
  std::map<std::string, Rational> n_coeffs;
  for (size_t i = 0; i < support.size(); ++i) {
    if (st.coefficients[i].a0 < 0)
      throw ComputationError("not pseudoeffective over tracked cone");
    if (st.coefficients[i].a0 != 0)
      n_coeffs[support[i]] = st.coefficients[i].a0;
  }
  return {st.p0, n_coeffs};
}

namespace {

// Smallest root of c0 + c1*t + c2*t^2 strictly greater than t_cur, if any.
// Roots must be rational (the discriminant an exact square); an irrational
// root means the threshold cannot be represented and is reported as a
// computation error.
std::optional<Rational> next_quadratic_root(const Rational& c0,
                                            const Rational& c1,
                                            const Rational& c2,
                                            const Rational& t_cur) {
  if (c2 == 0) {
    if (c1 == 0) return std::nullopt;  // constant, nonzero
    Rational r = -c0 / c1;
    if (r > t_cur) return r;
    return std::nullopt;
  }
  Rational disc = c1 * c1 - 4 * c0 * c2;
  if (disc < 0) return std::nullopt;
  auto sq = rat_sqrt_exact(disc);
  if (!sq)
    throw ComputationError(
        "irrational threshold: quadratic root is not rational");
  Rational r1 = (-c1 - *sq) / (2 * c2);
  Rational r2 = (-c1 + *sq) / (2 * c2);
  if (r1 > r2) std::swap(r1, r2);
  if (r1 > t_cur) return r1;
  if (r2 > t_cur) return r2;
  return std::nullopt;
}

// Whether c0 + c1*t + c2*t^2, positive at lo, has a root in (lo, hi].
// Decidable with rational sign tests only, so an irrational root beyond the
// next wall never has to be materialized.
bool quadratic_root_in(const Rational& c0, const Rational& c1,
                       const Rational& c2, const Rational& lo,
                       const Rational& hi) {
  auto eval = [&](const Rational& t) { return c0 + t * (c1 + t * c2); };
  if (eval(hi) <= 0) return true;
  if (c2 <= 0) return false;  // concave or linear: positive at both ends
  Rational vertex = -c1 / (2 * c2);
  return lo < vertex && vertex < hi && eval(vertex) <= 0;
}

}  // namespace

ZariskiPath zariski_path(const SurfaceModel& model, const std::string& flag) {
  const CurveRecord& flag_curve = model.curve(flag);
  if (!flag_curve.is_irreducible)
    throw ValidationError("flag curve must be irreducible: " + flag);

  ZariskiPath path;
  path.model = &model;
  path.flag = flag;
  path.start = anticanonical_pullback(model);
  path.vol0 = pair(model, path.start, path.start);

  const ClassVector d0 = path.start;
  const ClassVector d1 = -flag_curve.cls;
  const std::vector<std::string> candidates = tracked_irreducible(model);

  std::vector<std::string> support;
  Rational t_cur = 0;
  const size_t max_walls = 4 * candidates.size() + 8;
  for (size_t wall = 0;; ++wall) {
    if (wall > max_walls)
      throw ComputationError("pseudoeffective data incomplete");

    // Fixpoint at t_cur: admit curves with P.C < 0, or = 0 and about to turn
    // negative; drop support members whose coefficient is 0 and about to turn
    // negative.
    SupportState st = resolve_support(model, support, d0, d1);
    for (size_t round = 0;; ++round) {
      if (round > max_walls)
        throw ComputationError("pseudoeffective data incomplete");
      bool changed = false;
      for (const auto& label : candidates) {
        if (std::find(support.begin(), support.end(), label) != support.end())
          continue;
        LinearFn f = st.positive_dot(model, model.curve(label).cls);
        Rational v = f.eval(t_cur);
        if (v < 0 || (v == 0 && f.a1 < 0)) {
          support.push_back(label);
          changed = true;
        }
      }
      if (changed) {
        st = resolve_support(model, support, d0, d1);
        continue;
      }
      for (size_t i = 0; i < support.size(); ++i) {
        LinearFn c = st.coefficients[i];
        Rational v = c.eval(t_cur);
        if (v < 0)
          throw ComputationError("not pseudoeffective over tracked cone");
        if (v == 0 && c.a1 < 0) {
          support.erase(support.begin() + i);
          changed = true;
          break;
        }
      }
      if (!changed) break;
      st = resolve_support(model, support, d0, d1);
    }

    // Volume quadratic on the current chamber.
    Rational v0 = pair(model, st.p0, st.p0);
    Rational v1 = 2 * pair(model, st.p0, st.p1);
    Rational v2 = pair(model, st.p1, st.p1);
    if (v0 + t_cur * (v1 + t_cur * v2) == 0) {
      // Volume already exhausted at the chamber start; the walk ends here.
      path.tau = t_cur;
      break;
    }

    // Next wall: a non-support curve crossing P.C = 0 downward, or a support
    // coefficient crossing 0 downward.
    std::optional<Rational> t_wall;
    for (const auto& label : candidates) {
      if (std::find(support.begin(), support.end(), label) != support.end())
        continue;
      LinearFn f = st.positive_dot(model, model.curve(label).cls);
      if (f.a1 >= 0) continue;
      Rational r = *f.root();
      if (r > t_cur && (!t_wall || r < *t_wall)) t_wall = r;
    }
    for (const auto& c : st.coefficients) {
      if (c.a1 >= 0) continue;
      Rational r = *c.root();
      if (r > t_cur && (!t_wall || r < *t_wall)) t_wall = r;
    }

    // The volume root is extracted exactly only when it lies within reach
    // (before or at the next wall); a root beyond the wall belongs to a
    // different chamber's quadratic and may legitimately be irrational.
    std::optional<Rational> t_vol;
    if (!t_wall || quadratic_root_in(v0, v1, v2, t_cur, *t_wall))
      t_vol = next_quadratic_root(v0, v1, v2, t_cur);

    if (!t_vol && !t_wall)
      throw ComputationError("pseudoeffective data incomplete");

    bool volume_ends = t_vol && (!t_wall || *t_vol <= *t_wall);
    Rational t_hi = volume_ends ? *t_vol : *t_wall;

    ZariskiSegment seg;
    seg.t_lo = t_cur;
    seg.t_hi = t_hi;
    seg.p0 = st.p0;
    seg.p1 = st.p1;
    for (const auto& label : candidates) {
      auto it = std::find(support.begin(), support.end(), label);
      if (it == support.end()) continue;
      seg.negative_support.push_back(label);
      seg.coefficients[label] =
          st.coefficients[static_cast<size_t>(it - support.begin())];
    }
    path.segments.push_back(std::move(seg));

    if (volume_ends) {
      path.tau = t_hi;
      break;
    }
    t_cur = t_hi;
  }

  if (path.segments.empty())
    throw ComputationError("pseudoeffective data incomplete");
  return path;
}

PiecewiseQuadratic volume_function(const ZariskiPath& path) {
  std::vector<PiecewiseQuadratic::Segment> segs;
  for (const auto& s : path.segments) segs.push_back(s.volume(*path.model));
  return PiecewiseQuadratic(std::move(segs));
}

PiecewiseQuadratic positive_part_dot_flag(const ZariskiPath& path) {
  const ClassVector& e = path.model->curve(path.flag).cls;
  std::vector<PiecewiseQuadratic::Segment> segs;
  for (const auto& s : path.segments) {
    LinearFn f = s.positive_dot(*path.model, e);
    segs.push_back({s.t_lo, s.t_hi, f.a0, f.a1, Rational(0)});
  }
  return PiecewiseQuadratic(std::move(segs));
}

}  // namespace kdelta
