#pragma once

// Numerical model of a projective surface with (at worst) cyclic quotient
// singularities: a finite Q-basis of divisor classes, the symmetric
// intersection form on that basis (Mumford's Q-valued pairing, so entries may
// be non-integral), the canonical class, and a ledger of tracked curves,
// contracted curves, singularities, and marked flag points.
//
// Everything downstream (Zariski decomposition paths, volumes, discrepancies,
// stability thresholds) is computed from this data alone.

#include "kdelta/linalg.hpp"
#include "kdelta/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace kdelta {

// A divisor class: dense coordinates over the model's basis.
struct ClassVector {
  std::vector<Rational> coords;

  ClassVector() = default;
  explicit ClassVector(size_t n) : coords(n) {}

  size_t size() const { return coords.size(); }
  Rational& operator[](size_t i) { return coords[i]; }
  const Rational& operator[](size_t i) const { return coords[i]; }

  friend ClassVector operator+(ClassVector a, const ClassVector& b) {
    for (size_t i = 0; i < a.coords.size(); ++i) a.coords[i] += b.coords[i];
    return a;
  }
  friend ClassVector operator-(ClassVector a, const ClassVector& b) {
    for (size_t i = 0; i < a.coords.size(); ++i) a.coords[i] -= b.coords[i];
    return a;
  }
  friend ClassVector operator*(const Rational& s, ClassVector v) {
    for (auto& c : v.coords) c *= s;
    return v;
  }
  ClassVector operator-() const {
    ClassVector v = *this;
    for (auto& c : v.coords) c = -c;
    return v;
  }
  bool operator==(const ClassVector& o) const { return coords == o.coords; }
};

// Symmetric bilinear form on the basis.
struct IntersectionForm {
  Matrix entries;  // square, symmetric

  size_t size() const { return entries.size(); }
  const Rational& at(size_t i, size_t j) const { return entries[i][j]; }

  void validate() const {
    for (size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].size() != entries.size())
        throw ValidationError("intersection form is not square");
      for (size_t j = 0; j < i; ++j)
        if (entries[i][j] != entries[j][i])
          throw ValidationError("intersection form is not symmetric");
    }
  }
};

struct CurveRecord {
  std::string label;
  ClassVector cls;
  bool is_irreducible = true;
};

// A cyclic quotient singularity of type 1/r(1,a), together with its
// Hirzebruch-Jung resolution data and where it sits on the surface.
struct QuotientSingularity {
  long long r = 1;
  long long a = 1;
  std::vector<long long> resolution_chain;  // [a1..ak], continued fraction r/a
  std::string location;  // label of the curve or point carrying it
  // Tracked curves passing through the point with one transverse local branch.
  std::vector<std::string> incident_curves;
  // Resolution curves not represented in the model basis (used to compare
  // Picard ranks of minimal resolutions across construction routes).
  int hidden_curves = 0;

  long long group_order() const { return r; }
};

// Local multiplicity of a curve at a marked point; may be an upper bound
// (global intersection number bounding the local one from above).
struct LocalMult {
  Rational value;
  bool is_upper_bound = false;
};

// A marked point on a flag curve at which the restricted stability profile is
// evaluated.
struct FlagPointSpec {
  std::string label;
  std::string flag_curve;
  // curve label -> local intersection multiplicity with the flag at the point
  std::map<std::string, LocalMult> local_multiplicities;
  // Log discrepancy of the point on the flag curve (1 unless declared).
  Rational log_discrepancy_on_flag = Rational(1);
  bool is_generic = false;
};

struct SurfaceModel {
  std::vector<std::string> basis;
  IntersectionForm form;
  ClassVector canonical;  // canonical class of the model surface
  std::vector<CurveRecord> curves;
  std::vector<std::string> contracted;  // labels of curves contracted so far
  std::vector<QuotientSingularity> singularities;
  std::vector<FlagPointSpec> points;
  // Smooth points created by contracting single (-1)-curves, as
  // (point label, curve label); a blow_up at such a point undoes the
  // contraction exactly.
  std::vector<std::pair<std::string, std::string>> smooth_blowdowns;

  size_t dim() const { return basis.size(); }

  bool has_curve(const std::string& label) const;
  const CurveRecord& curve(const std::string& label) const;
  CurveRecord& curve_mut(const std::string& label);
  bool is_contracted(const std::string& label) const;
  size_t basis_index(const std::string& label) const;

  ClassVector zero_class() const { return ClassVector(dim()); }
  // Class of a single basis element.
  ClassVector basis_class(const std::string& label) const;
  ClassVector anticanonical() const { return -canonical; }

  // Rank of the minimal resolution's divisor lattice: model basis plus
  // resolution curves hidden inside singularity records.
  long long resolution_rank() const;

  // Structural sanity checks (dimensions agree, labels unique, symmetric
  // form). Throws ValidationError.
  void validate() const;
};

// ---- Core operations -------------------------------------------------------

// Intersection number of two classes.
Rational pair(const SurfaceModel& model, const ClassVector& u,
              const ClassVector& v);
// Convenience: intersection of two tracked curves by label.
Rational pair(const SurfaceModel& model, const std::string& u,
              const std::string& v);

// Returns w = v + sum_i c_i C_i with pair(w, C_j) = 0 for every curve in
// `curves`. Throws ValidationError("degenerate curve configuration") when the
// Gram matrix of the curves is singular.
ClassVector orthogonalize(const SurfaceModel& model, const ClassVector& v,
                          const std::vector<std::string>& curves);

// True when the Gram matrix of the given curves is negative definite.
bool is_negative_definite(const SurfaceModel& model,
                          const std::vector<std::string>& curves);

// Solves K + sum_i d_i C_i orthogonal to every C_j for the d_i and returns
// the log discrepancies A_i = 1 + d_i keyed by curve label. The input curves
// are the full exceptional locus of a contraction.
std::map<std::string, Rational> solve_discrepancies(
    const SurfaceModel& model, const std::vector<std::string>& curves);

// Pullback of the anticanonical class of the contracted surface to the model:
// -K + sum d_i C_i over the contracted curves, orthogonal to all of them.
ClassVector anticanonical_pullback(const SurfaceModel& model);

// Self-intersection of the anticanonical pullback: the degree (-K)^2 of the
// contracted surface.
Rational anticanonical_volume(const SurfaceModel& model);

}  // namespace kdelta
