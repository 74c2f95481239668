#include "kdelta/recipe.hpp"

#include <json.hpp>

#include <utility>

namespace kdelta {

namespace {

using json = nlohmann::json;  // std::map-backed: object keys stay sorted

const json& field(const json& obj, const std::string& key,
                  const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw ValidationError("missing field \"" + key + "\" in " + where);
  return *it;
}

std::string get_string(const json& obj, const std::string& key,
                       const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string())
    throw ValidationError("field \"" + key + "\" in " + where +
                          " must be a string");
  return v.get<std::string>();
}

long long get_integer(const json& obj, const std::string& key,
                      const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_number_integer())
    throw ValidationError("field \"" + key + "\" in " + where +
                          " must be an integer");
  return v.get<long long>();
}

bool get_bool(const json& obj, const std::string& key,
              const std::string& where, bool fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_boolean())
    throw ValidationError("field \"" + key + "\" in " + where +
                          " must be a boolean");
  return it->get<bool>();
}

std::vector<std::string> get_string_list(const json& v,
                                         const std::string& where) {
  if (!v.is_array())
    throw ValidationError(where + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string())
      throw ValidationError(where + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

PointSpec parse_point(const json& v, const std::string& where) {
  if (!v.is_object()) throw ValidationError(where + " must be an object");
  PointSpec p;
  p.label = get_string(v, "label", where);
  p.is_general = get_bool(v, "is_general", where, false);
  auto inc = v.find("incidences");
  if (inc != v.end()) {
    if (!inc->is_object())
      throw ValidationError("incidences in " + where + " must be an object");
    for (const auto& [curve, mult] : inc->items()) {
      if (!mult.is_number_integer() || mult.get<long long>() <= 0)
        throw ValidationError("incidence multiplicity for \"" + curve +
                              "\" in " + where +
                              " must be a positive integer");
      p.incidences[curve] = mult.get<long long>();
    }
  }
  if (p.is_general && !p.incidences.empty())
    throw ValidationError(where + ": a general point has no incidences");
  auto ex = v.find("exceptional_label");
  if (ex != v.end()) {
    if (!ex->is_string())
      throw ValidationError("exceptional_label in " + where +
                            " must be a string");
    p.exceptional_label = ex->get<std::string>();
  }
  return p;
}

RecipeStep parse_step(const json& v, size_t index) {
  const std::string where = "step " + std::to_string(index + 1);
  if (!v.is_object()) throw ValidationError(where + " must be an object");
  RecipeStep step;
  step.kind = get_string(v, "kind", where);
  if (step.kind == "seed_p2") {
    // no parameters
  } else if (step.kind == "seed_wps") {
    step.n = get_integer(v, "n", where);
  } else if (step.kind == "blow_up") {
    step.point = parse_point(field(v, "point", where), where + " point");
  } else if (step.kind == "weighted_blow_up_11") {
    step.singularity = get_string(v, "singularity", where);
    step.label = get_string(v, "label", where);
  } else if (step.kind == "contract") {
    step.curves = get_string_list(field(v, "curves", where),
                                  where + " curves");
  } else {
    throw ValidationError("unknown step kind \"" + step.kind + "\" in " +
                          where);
  }
  return step;
}

CurveDeclaration parse_curve_decl(const json& v, size_t index) {
  const std::string where = "curve declaration " + std::to_string(index + 1);
  if (!v.is_object()) throw ValidationError(where + " must be an object");
  CurveDeclaration d;
  d.label = get_string(v, "label", where);
  const json& cls = field(v, "class", where);
  if (!cls.is_object())
    throw ValidationError("class in " + where + " must be an object");
  for (const auto& [basis, coeff] : cls.items()) {
    if (!coeff.is_string())
      throw ValidationError("class coefficient for \"" + basis + "\" in " +
                            where + " must be a rational string");
    d.cls[basis] = rat_parse(coeff.get<std::string>());
  }
  auto through = v.find("through");
  if (through != v.end())
    d.through = get_string_list(*through, "through in " + where);
  d.is_irreducible = get_bool(v, "is_irreducible", where, true);
  return d;
}

FlagPointSpec parse_flag_point(const json& v, size_t index) {
  const std::string where = "point declaration " + std::to_string(index + 1);
  if (!v.is_object()) throw ValidationError(where + " must be an object");
  FlagPointSpec p;
  p.label = get_string(v, "label", where);
  p.flag_curve = get_string(v, "flag_curve", where);
  p.is_generic = get_bool(v, "is_generic", where, false);
  auto lm = v.find("local_multiplicities");
  if (lm != v.end()) {
    if (!lm->is_object())
      throw ValidationError("local_multiplicities in " + where +
                            " must be an object");
    for (const auto& [curve, entry] : lm->items()) {
      if (!entry.is_object())
        throw ValidationError("local multiplicity for \"" + curve + "\" in " +
                              where + " must be an object");
      LocalMult mult;
      mult.value = rat_parse(get_string(entry, "value",
                                        where + " multiplicity"));
      mult.is_upper_bound =
          get_bool(entry, "is_upper_bound", where, false);
      p.local_multiplicities[curve] = mult;
    }
  }
  auto ld = v.find("log_discrepancy_on_flag");
  if (ld != v.end()) {
    if (!ld->is_string())
      throw ValidationError("log_discrepancy_on_flag in " + where +
                            " must be a rational string");
    p.log_discrepancy_on_flag = rat_parse(ld->get<std::string>());
  }
  return p;
}

QuotientSingularity parse_singularity_decl(const json& v, size_t index) {
  const std::string where =
      "singularity declaration " + std::to_string(index + 1);
  if (!v.is_object()) throw ValidationError(where + " must be an object");
  QuotientSingularity s;
  s.r = get_integer(v, "r", where);
  s.a = get_integer(v, "a", where);
  s.location = get_string(v, "location", where);
  const json& chain = field(v, "resolution_chain", where);
  if (!chain.is_array())
    throw ValidationError("resolution_chain in " + where +
                          " must be an array of integers");
  for (const auto& e : chain) {
    if (!e.is_number_integer())
      throw ValidationError("resolution_chain in " + where +
                            " must be an array of integers");
    s.resolution_chain.push_back(e.get<long long>());
  }
  auto inc = v.find("incident_curves");
  if (inc != v.end())
    s.incident_curves =
        get_string_list(*inc, "incident_curves in " + where);
  auto hidden = v.find("hidden_curves");
  if (hidden != v.end()) {
    if (!hidden->is_number_integer() || hidden->get<long long>() < 0)
      throw ValidationError("hidden_curves in " + where +
                            " must be a nonnegative integer");
    s.hidden_curves = hidden->get<int>();
  }
  return s;
}

json point_to_json(const PointSpec& p) {
  json v;
  v["label"] = p.label;
  v["is_general"] = p.is_general;
  json inc = json::object();
  for (const auto& [curve, mult] : p.incidences) inc[curve] = mult;
  v["incidences"] = std::move(inc);
  if (!p.exceptional_label.empty())
    v["exceptional_label"] = p.exceptional_label;
  return v;
}

json step_to_json(const RecipeStep& step) {
  json v;
  v["kind"] = step.kind;
  if (step.kind == "seed_wps") v["n"] = step.n;
  if (step.kind == "blow_up") v["point"] = point_to_json(step.point);
  if (step.kind == "weighted_blow_up_11") {
    v["singularity"] = step.singularity;
    v["label"] = step.label;
  }
  if (step.kind == "contract") v["curves"] = step.curves;
  return v;
}

}  // namespace

RecipeFile recipe_parse(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("recipe JSON parse error: ") + e.what());
  }
  if (!root.is_object())
    throw ValidationError("recipe root must be a JSON object");

  RecipeFile recipe;
  recipe.format_version = get_string(root, "format_version", "recipe root");
  if (recipe.format_version != "1")
    throw ValidationError("unsupported format_version \"" +
                          recipe.format_version + "\" (expected \"1\")");

  const json& steps = field(root, "steps", "recipe root");
  if (!steps.is_array())
    throw ValidationError("steps must be an array");
  recipe.steps.clear();
  for (size_t i = 0; i < steps.size(); ++i)
    recipe.steps.push_back(parse_step(steps[i], i));

  auto decls = root.find("declarations");
  if (decls != root.end()) {
    if (!decls->is_object())
      throw ValidationError("declarations must be an object");
    auto curves = decls->find("curves");
    if (curves != decls->end()) {
      if (!curves->is_array())
        throw ValidationError("declarations.curves must be an array");
      for (size_t i = 0; i < curves->size(); ++i)
        recipe.curves.push_back(parse_curve_decl((*curves)[i], i));
    }
    auto points = decls->find("points");
    if (points != decls->end()) {
      if (!points->is_array())
        throw ValidationError("declarations.points must be an array");
      for (size_t i = 0; i < points->size(); ++i)
        recipe.points.push_back(parse_flag_point((*points)[i], i));
    }
    auto sings = decls->find("singularities");
    if (sings != decls->end()) {
      if (!sings->is_array())
        throw ValidationError("declarations.singularities must be an array");
      for (size_t i = 0; i < sings->size(); ++i)
        recipe.singularities.push_back(parse_singularity_decl((*sings)[i], i));
    }
  }
  return recipe;
}

std::string recipe_serialize(const RecipeFile& recipe) {
  json root;
  root["format_version"] = recipe.format_version;
  json steps = json::array();
  for (const auto& step : recipe.steps) steps.push_back(step_to_json(step));
  root["steps"] = std::move(steps);

  json curves = json::array();
  for (const auto& d : recipe.curves) {
    json v;
    v["label"] = d.label;
    json cls = json::object();
    for (const auto& [basis, coeff] : d.cls) cls[basis] = rat_str(coeff);
    v["class"] = std::move(cls);
    v["through"] = d.through;
    v["is_irreducible"] = d.is_irreducible;
    curves.push_back(std::move(v));
  }
  json points = json::array();
  for (const auto& p : recipe.points) {
    json v;
    v["label"] = p.label;
    v["flag_curve"] = p.flag_curve;
    v["is_generic"] = p.is_generic;
    json lm = json::object();
    for (const auto& [curve, mult] : p.local_multiplicities) {
      json entry;
      entry["value"] = rat_str(mult.value);
      entry["is_upper_bound"] = mult.is_upper_bound;
      lm[curve] = std::move(entry);
    }
    v["local_multiplicities"] = std::move(lm);
    v["log_discrepancy_on_flag"] = rat_str(p.log_discrepancy_on_flag);
    points.push_back(std::move(v));
  }
  json sings = json::array();
  for (const auto& s : recipe.singularities) {
    json v;
    v["r"] = s.r;
    v["a"] = s.a;
    v["resolution_chain"] = s.resolution_chain;
    v["location"] = s.location;
    v["incident_curves"] = s.incident_curves;
    v["hidden_curves"] = s.hidden_curves;
    sings.push_back(std::move(v));
  }
  json decls;
  decls["curves"] = std::move(curves);
  decls["points"] = std::move(points);
  decls["singularities"] = std::move(sings);
  root["declarations"] = std::move(decls);
  return root.dump(2) + "\n";
}

namespace {

template <typename F>
auto with_context(const std::string& context, F&& f) {
  try {
    return f();
  } catch (const ComputationError& e) {
    throw ComputationError(context + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(context + ": " + e.what());
  }
}

}  // namespace

SurfaceModel build_model(const RecipeFile& recipe) {
  if (recipe.format_version != "1")
    throw ValidationError("unsupported format_version \"" +
                          recipe.format_version + "\" (expected \"1\")");
  if (recipe.steps.empty()) throw ValidationError("empty recipe");

  auto step_context = [](size_t i, const std::string& kind) {
    return "step " + std::to_string(i + 1) + " (" + kind + ")";
  };

  const RecipeStep& seed = recipe.steps.front();
  SurfaceModel model = with_context(step_context(0, seed.kind), [&] {
    if (seed.kind == "seed_p2") return seed_p2();
    if (seed.kind == "seed_wps") return seed_wps(seed.n);
    throw ValidationError(
        "first step must seed a surface (seed_p2 or seed_wps)");
  });

  for (size_t i = 0; i < recipe.singularities.size(); ++i) {
    const QuotientSingularity& s = recipe.singularities[i];
    with_context("singularity declaration " + std::to_string(i + 1), [&] {
      for (const auto& other : model.singularities)
        if (other.location == s.location)
          throw ValidationError("duplicate singularity location \"" +
                                s.location + "\"");
      auto [r, a] = hj_evaluate(s.resolution_chain);
      if (r != s.r || a != s.a)
        throw ValidationError("resolution chain evaluates to 1/" +
                              std::to_string(r) + "(1," + std::to_string(a) +
                              "), declared 1/" + std::to_string(s.r) + "(1," +
                              std::to_string(s.a) + ")");
      model.singularities.push_back(s);
      return 0;
    });
  }

  for (size_t i = 0; i < recipe.curves.size(); ++i) {
    const CurveDeclaration& d = recipe.curves[i];
    model = with_context("curve declaration " + std::to_string(i + 1) + " (" +
                             d.label + ")",
                         [&] {
                           ClassVector cls = model.zero_class();
                           for (const auto& [basis, coeff] : d.cls)
                             cls = cls + coeff * model.basis_class(basis);
                           return declare_curve(model, d.label, cls, d.through,
                                                d.is_irreducible);
                         });
  }

  for (auto& s : model.singularities)
    for (const auto& c : s.incident_curves)
      if (!model.has_curve(c))
        throw ValidationError("singularity at \"" + s.location +
                              "\" lists unknown incident curve \"" + c + "\"");

  for (size_t i = 1; i < recipe.steps.size(); ++i) {
    const RecipeStep& step = recipe.steps[i];
    model = with_context(step_context(i, step.kind), [&] {
      if (step.kind == "blow_up") return blow_up(model, step.point);
      if (step.kind == "weighted_blow_up_11")
        return weighted_blow_up_11(model, step.singularity, step.label);
      if (step.kind == "contract") return contract(model, step.curves);
      if (step.kind == "seed_p2" || step.kind == "seed_wps")
        throw ValidationError("seed steps are only valid as the first step");
      throw ValidationError("unknown step kind \"" + step.kind + "\"");
    });
  }

  for (size_t i = 0; i < recipe.points.size(); ++i) {
    const FlagPointSpec& p = recipe.points[i];
    with_context("point declaration " + std::to_string(i + 1) + " (" +
                     p.label + ")",
                 [&] {
                   if (!model.has_curve(p.flag_curve))
                     throw ValidationError("unknown flag curve \"" +
                                           p.flag_curve + "\"");
                   for (const auto& [curve, mult] : p.local_multiplicities) {
                     (void)mult;
                     if (!model.has_curve(curve))
                       throw ValidationError("unknown curve \"" + curve +
                                             "\" in local multiplicities");
                   }
                   model.points.push_back(p);
                   return 0;
                 });
  }

  model.validate();
  return model;
}

}  // namespace kdelta
