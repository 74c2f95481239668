// Python bindings for the del Pezzo K-stability engine.
//
// Boundary convention: every rational number crosses as an exact "p/q"
// string and every structured result crosses as canonical JSON text (sorted
// keys, LF line ends), so Python sees precisely what the CLI prints. The
// wrapper package decodes JSON and offers fractions.Fraction helpers.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kdelta/builder.hpp"
#include "kdelta/catalog.hpp"
#include "kdelta/kstab.hpp"
#include "kdelta/recipe.hpp"
#include "kdelta/report.hpp"
#include "kdelta/series.hpp"
#include "kdelta/zariski.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace kdelta;

namespace {

std::string catalog_model_json(const std::string& name,
                               const std::string& role) {
  CatalogConfig cfg = build_config(name);
  return model_dump_json(cfg.model(role).model);
}

std::vector<std::string> catalog_roles(const std::string& name) {
  CatalogConfig cfg = build_config(name);
  std::vector<std::string> roles;
  for (const auto& m : cfg.models) roles.push_back(m.role);
  return roles;
}

std::vector<std::pair<std::string, std::string>> catalog_flags(
    const std::string& name) {
  CatalogConfig cfg = build_config(name);
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& m : cfg.models)
    for (const auto& f : m.flags) out.emplace_back(m.role, f.curve);
  return out;
}

std::string delta_catalog(const std::string& name, const std::string& flag) {
  CatalogConfig cfg = build_config(name);
  auto [model, cf] = cfg.find_flag(flag);
  ZariskiPath path = zariski_path(model->model, flag);
  DeltaReport report = delta_lower_bound(model->model, flag, cf->points);
  return delta_report_json(report, &path);
}

std::string zariski_catalog(const std::string& name, const std::string& flag) {
  CatalogConfig cfg = build_config(name);
  auto [model, cf] = cfg.find_flag(flag);
  (void)cf;
  ZariskiPath path = zariski_path(model->model, flag);
  return zariski_report_json(path);
}

std::string recipe_model_json(const std::string& text) {
  RecipeFile recipe = recipe_parse(text);
  SurfaceModel model = build_model(recipe);
  return model_dump_json(model);
}

std::string recipe_canonical(const std::string& text) {
  return recipe_serialize(recipe_parse(text));
}

std::string delta_recipe(const std::string& text, const std::string& flag) {
  RecipeFile recipe = recipe_parse(text);
  SurfaceModel model = build_model(recipe);
  std::vector<FlagPointSpec> points;
  for (const auto& p : model.points)
    if (p.flag_curve == flag) points.push_back(p);
  if (points.empty()) {
    FlagPointSpec generic;
    generic.label = "generic";
    generic.flag_curve = flag;
    generic.is_generic = true;
    points.push_back(generic);
  }
  ZariskiPath path = zariski_path(model, flag);
  DeltaReport report = delta_lower_bound(model, flag, points);
  return delta_report_json(report, &path);
}

std::vector<std::string> hilbert_coefficients(
    const std::vector<long long>& weights,
    const std::vector<long long>& degrees, long long order) {
  Series s = hilbert_series(weights, degrees, order);
  std::vector<std::string> out;
  for (const auto& c : s) out.push_back(c.str());
  return out;
}

std::string classify_json(long long n, long long m, long long k) {
  return classification_json(classify(n, m, k));
}

std::string table1_json_py(int jobs) { return table1_json(table1(jobs)); }
std::string table1_tsv_py(int jobs) { return table1_tsv(table1(jobs)); }

bool liu_excludes_py(const std::string& volume, long long group_order) {
  return liu_excludes(rat_parse(volume), group_order);
}

std::string volume_formula_py(long long n, long long m, long long k) {
  return rat_str(volume_formula(n, m, k));
}

std::vector<std::array<long long, 3>> solution_set_py() {
  return solution_set();
}

std::pair<std::string, std::string> alpha_delta_bounds_py(
    const std::string& alpha, long long dim) {
  auto [lo, hi] = alpha_delta_bounds(rat_parse(alpha), dim);
  return {rat_str(lo), rat_str(hi)};
}

std::pair<long long, long long> hj_evaluate_py(
    const std::vector<long long>& chain) {
  auto [r, a] = hj_evaluate(chain);
  return {r, a};
}

}  // namespace

PYBIND11_MODULE(_kdelta, m) {
  m.doc() =
      "Exact-arithmetic K-stability engine for del Pezzo surfaces with "
      "cyclic quotient singularities";

  py::register_exception<ValidationError>(m, "ValidationError",
                                          PyExc_ValueError);
  py::register_exception<ComputationError>(m, "ComputationError",
                                           PyExc_RuntimeError);

  m.def("catalog_names", &catalog_names,
        "Names of the catalogued surface configurations.");
  m.def("catalog_roles", &catalog_roles, py::arg("name"),
        "Model roles available for a catalogued configuration.");
  m.def("catalog_flags", &catalog_flags, py::arg("name"),
        "(role, flag curve) pairs declared on a configuration.");
  m.def("catalog_model_json", &catalog_model_json, py::arg("name"),
        py::arg("role"), "Model dump (JSON) of one role of a configuration.");

  m.def("volume_formula", &volume_formula_py, py::arg("n"), py::arg("m"),
        py::arg("k"), "(-K)^2 of S_{n,m}^k as an exact fraction string.");
  m.def("solution_set", &solution_set_py,
        "Triples (n, m, k) passing the normalized-volume test.");
  m.def("liu_excludes", &liu_excludes_py, py::arg("volume"),
        py::arg("group_order"),
        "Whether volume > 9/group_order (strict) excludes K-semistability.");
  m.def("classify", &classify_json, py::arg("n"), py::arg("m"), py::arg("k"),
        "Classification row for S_{n,m}^k as JSON.");
  m.def("table1", &table1_json_py, py::arg("jobs") = 1,
        "The full classification table as JSON.");
  m.def("table1_tsv", &table1_tsv_py, py::arg("jobs") = 1,
        "The classification table as TSV row groups.");

  m.def("delta", &delta_catalog, py::arg("name"), py::arg("flag"),
        "Delta lower-bound report (JSON, chamber walk embedded) for a "
        "catalogued flag.");
  m.def("zariski", &zariski_catalog, py::arg("name"), py::arg("flag"),
        "Chamber-walk report (JSON) for a catalogued flag.");

  m.def("recipe_model_json", &recipe_model_json, py::arg("recipe_json"),
        "Build a surface model from recipe JSON; returns the model dump.");
  m.def("recipe_canonical", &recipe_canonical, py::arg("recipe_json"),
        "Canonical re-serialization of recipe JSON.");
  m.def("delta_recipe", &delta_recipe, py::arg("recipe_json"), py::arg("flag"),
        "Delta lower-bound report for a flag on a recipe-built model.");

  m.def("hilbert_series", &hilbert_coefficients, py::arg("weights"),
        py::arg("numerator_degrees"), py::arg("order"),
        "Coefficients of the orbifold Hilbert series to the given order.");
  m.def("hilbert_series_check", &hilbert_series_check, py::arg("weights"),
        py::arg("numerator_degrees"), py::arg("order"),
        "Whether the closed-form series matches lattice-point counting.");

  m.def("hj_expand", &hj_expand, py::arg("r"), py::arg("a"),
        "Hirzebruch-Jung continued-fraction chain of 1/r(1,a).");
  m.def("hj_evaluate", &hj_evaluate_py, py::arg("chain"),
        "Singularity type (r, a) resolved by a Hirzebruch-Jung chain.");
  m.def("alpha_delta_bounds", &alpha_delta_bounds_py, py::arg("alpha"),
        py::arg("dim"),
        "Bounds on delta implied by an alpha-invariant bound.");
}
