#pragma once

// Constructs surface models by elementary birational steps: seeding a
// (weighted) projective plane, declaring tracked curves, blowing up smooth
// points, resolving 1/r(1,1) quotient singularities by a weighted blow-up,
// and contracting negative chains (recording the resulting quotient
// singularity via Hirzebruch-Jung continued fractions).

#include "kdelta/lattice.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kdelta {

// A point to blow up: either general (on no tracked curve) or with declared
// local multiplicities on tracked curves.
struct PointSpec {
  std::string label;
  std::map<std::string, long long> incidences;  // curve label -> multiplicity
  bool is_general = false;
  // Basis label for the exceptional curve; defaults to "E_<label>".
  std::string exceptional_label;
};

// P^2: one basis class l with l^2 = 1, K = -3l.
SurfaceModel seed_p2();

// P(1,1,n): one basis class l with l^2 = 1/n, K = -(n+2)l, and for n >= 2 a
// quotient singularity 1/n(1,1) recorded at point "o".
SurfaceModel seed_wps(long long n);

// Introduces a tracked irreducible curve with the given class over the
// current basis. `through` lists singularity locations the curve passes
// through with one transverse local branch (affects later weighted blow-ups
// and contractions).
SurfaceModel declare_curve(const SurfaceModel& model, const std::string& label,
                           const ClassVector& cls,
                           const std::vector<std::string>& through = {},
                           bool is_irreducible = true);

// Blow-up at a smooth point. Adds an exceptional (-1)-curve, shifts K by +E,
// and subtracts mult*E from each incident curve class. Blowing up a point of
// a contracted curve or a recorded singular point is an error. A point label
// recorded by a previous smooth blow-down undoes that contraction instead
// (exact inverse).
SurfaceModel blow_up(const SurfaceModel& model, const PointSpec& p);

// Weighted blow-up with weights (1,1) of a recorded 1/r(1,1) singularity
// (identified by its location label). Adds E with E^2 = -r, shifts K by
// (2/r - 1)E, and turns each declared incident curve class C into its strict
// transform C - (1/r)E. Singularities of type 1/r(1,a) with a != 1 are
// rejected ("general weighted blow-ups out of scope").
SurfaceModel weighted_blow_up_11(const SurfaceModel& model,
                                 const std::string& singularity_location,
                                 const std::string& exceptional_label = "");

// Contracts the given curves. They must form negative-definite chains. A
// single (-1)-curve contracts to a smooth point (recorded so a later blow_up
// can undo it); any other chain records the quotient singularity whose
// Hirzebruch-Jung chain is the sequence of negated self-intersections, where
// a member curve carrying a residual 1/r(1,1) singularity contributes its
// resolved strict-transform self-intersection and extends the chain by the
// hidden (-r)-curve.
SurfaceModel contract(const SurfaceModel& model,
                      const std::vector<std::string>& curves);

// Hirzebruch-Jung continued fraction r/a = a1 - 1/(a2 - 1/(...)), entries
// >= 2. Requires 0 < a < r and gcd(r,a) = 1.
std::vector<long long> hj_expand(long long r, long long a);

// Inverse: evaluates [a1..ak] (entries >= 2) to r/a in lowest terms.
std::pair<long long, long long> hj_evaluate(const std::vector<long long>& chain);

// 1/r(1,a) and 1/r(1,a') name the same singularity iff a' = a or a'a = 1
// mod r.
bool same_singularity_type(long long r1, long long a1, long long r2,
                           long long a2);

// Dimension count for the existence of a curve of the given weighted degree
// on P(1,1,n) with multiplicity `mult_general` at `num_general` general
// points and passing through `num_line_pts` marked points:
//   conditions    = num_general * mult(mult+1)/2 + num_line_pts
//   sublinear_dim = sum_{j=0}^{mult-1} max(degree - j*n + 1, 0)  -  1
//                   (the subsystem with z-degree < mult, projectivized)
//   exists        = sublinear_dim >= conditions
struct CurveCount {
  long long conditions = 0;
  long long sublinear_dim = 0;
  bool exists = false;
};
CurveCount curve_count_check(long long n, long long degree,
                             long long mult_general, long long num_general,
                             long long num_line_pts);

}  // namespace kdelta
