#include "kdelta/lattice.hpp"

#include <algorithm>
#include <set>

namespace kdelta {

bool SurfaceModel::has_curve(const std::string& label) const {
  for (const auto& c : curves)
    if (c.label == label) return true;
  return false;
}

const CurveRecord& SurfaceModel::curve(const std::string& label) const {
  for (const auto& c : curves)
    if (c.label == label) return c;
  throw ValidationError("unknown curve label: " + label);
}

CurveRecord& SurfaceModel::curve_mut(const std::string& label) {
  for (auto& c : curves)
    if (c.label == label) return c;
  throw ValidationError("unknown curve label: " + label);
}

bool SurfaceModel::is_contracted(const std::string& label) const {
  return std::find(contracted.begin(), contracted.end(), label) !=
         contracted.end();
}

size_t SurfaceModel::basis_index(const std::string& label) const {
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == label) return i;
  throw ValidationError("unknown basis label: " + label);
}

ClassVector SurfaceModel::basis_class(const std::string& label) const {
  ClassVector v(dim());
  v[basis_index(label)] = 1;
  return v;
}

long long SurfaceModel::resolution_rank() const {
  long long rank = static_cast<long long>(basis.size());
  for (const auto& s : singularities) rank += s.hidden_curves;
  return rank;
}

void SurfaceModel::validate() const {
  form.validate();
  if (form.size() != basis.size())
    throw ValidationError("intersection form size does not match basis");
  if (canonical.size() != basis.size())
    throw ValidationError("canonical class size does not match basis");
  std::set<std::string> seen;
  for (const auto& b : basis)
    if (!seen.insert(b).second)
      throw ValidationError("duplicate basis label: " + b);
  std::set<std::string> curve_labels;
  for (const auto& c : curves) {
    if (!curve_labels.insert(c.label).second)
      throw ValidationError("duplicate curve label: " + c.label);
    if (c.cls.size() != basis.size())
      throw ValidationError("curve class size does not match basis: " +
                            c.label);
  }
  for (const auto& label : contracted)
    if (!curve_labels.count(label))
      throw ValidationError("contracted label is not a tracked curve: " +
                            label);
  for (const auto& p : points) {
    if (!curve_labels.count(p.flag_curve))
      throw ValidationError("flag point on unknown curve: " + p.flag_curve);
    for (const auto& [curve_label, mult] : p.local_multiplicities) {
      if (!curve_labels.count(curve_label))
        throw ValidationError("flag point multiplicity on unknown curve: " +
                              curve_label);
      if (mult.value < 0)
        throw ValidationError("negative local multiplicity at point " +
                              p.label);
    }
  }
}

Rational pair(const SurfaceModel& model, const ClassVector& u,
              const ClassVector& v) {
  if (u.size() != model.dim() || v.size() != model.dim())
    throw ValidationError("class vector size does not match basis");
  Rational total = 0;
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    Rational row = 0;
    for (size_t j = 0; j < v.size(); ++j) {
      if (v[j] == 0) continue;
      row += model.form.at(i, j) * v[j];
    }
    total += u[i] * row;
  }
  return total;
}

Rational pair(const SurfaceModel& model, const std::string& u,
              const std::string& v) {
  return pair(model, model.curve(u).cls, model.curve(v).cls);
}

namespace {

Matrix gram(const SurfaceModel& model, const std::vector<std::string>& curves) {
  Matrix g(curves.size(), std::vector<Rational>(curves.size()));
  for (size_t i = 0; i < curves.size(); ++i)
    for (size_t j = 0; j <= i; ++j) {
      g[i][j] = pair(model, curves[i], curves[j]);
      g[j][i] = g[i][j];
    }
  return g;
}

}  // namespace

ClassVector orthogonalize(const SurfaceModel& model, const ClassVector& v,
                          const std::vector<std::string>& curves) {
  if (curves.empty()) return v;
  std::set<std::string> dedup(curves.begin(), curves.end());
  if (dedup.size() != curves.size())
    throw ValidationError("degenerate curve configuration");
  Matrix g = gram(model, curves);
  // w = v + sum c_i C_i, pair(w, C_j) = 0  =>  G c = -(v . C_j)_j
  std::vector<Rational> rhs(curves.size());
  for (size_t j = 0; j < curves.size(); ++j)
    rhs[j] = -pair(model, v, model.curve(curves[j]).cls);
  auto c = solve_linear(g, rhs);
  if (!c) throw ValidationError("degenerate curve configuration");
  ClassVector w = v;
  for (size_t i = 0; i < curves.size(); ++i)
    w = w + (*c)[i] * model.curve(curves[i]).cls;
  return w;
}

bool is_negative_definite(const SurfaceModel& model,
                          const std::vector<std::string>& curves) {
  return is_negative_definite_matrix(gram(model, curves));
}

std::map<std::string, Rational> solve_discrepancies(
    const SurfaceModel& model, const std::vector<std::string>& curves) {
  if (curves.empty()) return {};
  // K = (pullback of K downstairs) + sum d_i C_i with the pullback orthogonal
  // to every C_j:  G d = (K . C_j)_j.  Quotient singularities give d_i in
  // (-1, 0], so A_i = 1 + d_i lies in (0, 1].
  Matrix g = gram(model, curves);
  std::vector<Rational> rhs(curves.size());
  for (size_t j = 0; j < curves.size(); ++j)
    rhs[j] = pair(model, model.canonical, model.curve(curves[j]).cls);
  auto d = solve_linear(g, rhs);
  if (!d) throw ValidationError("degenerate curve configuration");
  std::map<std::string, Rational> log_discrepancies;
  for (size_t i = 0; i < curves.size(); ++i)
    log_discrepancies[curves[i]] = 1 + (*d)[i];
  return log_discrepancies;
}

ClassVector anticanonical_pullback(const SurfaceModel& model) {
  return orthogonalize(model, model.anticanonical(), model.contracted);
}

Rational anticanonical_volume(const SurfaceModel& model) {
  ClassVector v = anticanonical_pullback(model);
  return pair(model, v, v);
}

}  // namespace kdelta
