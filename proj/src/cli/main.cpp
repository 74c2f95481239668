// kdelta: exact K-stability computations for del Pezzo surfaces with cyclic
// quotient singularities. Subcommands: build, delta, zariski, liu, table1,
// hilbert. Exit codes: 0 success, 2 bad input/usage, 3 computation failure.

#include "kdelta/recipe.hpp"
#include "kdelta/report.hpp"
#include "kdelta/series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

namespace {

using json = nlohmann::json;
using namespace kdelta;

bool color_enabled() {
  static const bool enabled = [] {
    if (std::getenv("KDELTA_NO_COLOR") != nullptr) return false;
    return isatty(fileno(stderr)) != 0;
  }();
  return enabled;
}

void print_error(const std::string& message) {
  if (color_enabled())
    std::cerr << "\033[31merror:\033[0m " << message << "\n";
  else
    std::cerr << "error: " << message << "\n";
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ValidationError("cannot open output file: " + out_path);
  out << text;
  if (!out) throw ValidationError("cannot write output file: " + out_path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open recipe file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct SourceArgs {
  std::string recipe_path;
  std::string catalog_name;

  bool is_catalog() const { return !catalog_name.empty(); }
  void check() const {
    if (recipe_path.empty() == catalog_name.empty())
      throw ValidationError(
          "provide exactly one of: a recipe file path or --catalog NAME");
  }
};

SurfaceModel load_recipe_model(const std::string& path) {
  return build_model(recipe_parse(read_file(path)));
}

json parse_json_obj(const std::string& text) { return json::parse(text); }

// ---- build ----

std::string run_build(const SourceArgs& src, const std::string& format) {
  if (format != "text" && format != "json")
    throw ValidationError("build supports --format text|json");
  if (!src.is_catalog()) {
    SurfaceModel model = load_recipe_model(src.recipe_path);
    return format == "json" ? model_dump_json(model) : model_dump_text(model);
  }
  CatalogConfig cfg = build_config(src.catalog_name);
  if (format == "json") {
    json v;
    v["name"] = cfg.name;
    v["n"] = cfg.n;
    v["m"] = cfg.m;
    v["k"] = cfg.k;
    v["volume"] = rat_str(cfg.volume);
    json models = json::object();
    for (const auto& m : cfg.models) {
      json entry;
      entry["model"] = parse_json_obj(model_dump_json(m.model));
      json flags = json::array();
      for (const auto& f : m.flags) {
        json fl;
        fl["curve"] = f.curve;
        json pts = json::array();
        for (const auto& p : f.points) pts.push_back(p.label);
        fl["points"] = std::move(pts);
        flags.push_back(std::move(fl));
      }
      entry["flags"] = std::move(flags);
      models[m.role] = std::move(entry);
    }
    v["models"] = std::move(models);
    return v.dump(2) + "\n";
  }
  std::ostringstream out;
  out << cfg.name << ": n=" << cfg.n << " m=" << cfg.m << " k=" << cfg.k
      << " (-K)^2 = " << rat_str(cfg.volume) << "\n";
  for (const auto& m : cfg.models) {
    out << "== model " << m.role << " ==\n" << model_dump_text(m.model);
    for (const auto& f : m.flags) {
      out << "flag " << f.curve << " points:";
      for (const auto& p : f.points) out << " " << p.label;
      out << "\n";
    }
  }
  return out.str();
}

// ---- delta ----

std::string run_delta(const SourceArgs& src, const std::string& flag,
                      const std::string& format) {
  if (format != "json" && format != "tsv")
    throw ValidationError("delta supports --format json|tsv");

  SurfaceModel owned;
  const SurfaceModel* model = nullptr;
  std::vector<FlagPointSpec> points;
  if (src.is_catalog()) {
    CatalogConfig cfg = build_config(src.catalog_name);
    auto [catalog_model, flag_spec] = cfg.find_flag(flag);
    owned = catalog_model->model;
    model = &owned;
    points = flag_spec->points;
  } else {
    owned = load_recipe_model(src.recipe_path);
    model = &owned;
    for (const auto& p : owned.points)
      if (p.flag_curve == flag) points.push_back(p);
    bool has_generic = false;
    for (const auto& p : points) has_generic |= p.is_generic;
    if (!has_generic) {
      FlagPointSpec generic;
      generic.label = "generic";
      generic.flag_curve = flag;
      generic.is_generic = true;
      points.insert(points.begin(), generic);
    }
  }

  DeltaReport report = delta_lower_bound(*model, flag, points);
  if (format == "tsv") return delta_report_tsv(report);
  ZariskiPath path = zariski_path(*model, flag);
  return delta_report_json(report, &path);
}

// ---- zariski ----

std::string run_zariski(const SourceArgs& src, const std::string& flag,
                        const std::string& format) {
  if (format != "json")
    throw ValidationError("zariski supports --format json");

  auto decompose_dump = [](const SurfaceModel& model) {
    auto [positive, negative] = zariski_decompose(model,
                                                  model.anticanonical());
    json v;
    v["input"] = "-K";
    json neg = json::object();
    ClassVector nclass = model.zero_class();
    for (const auto& [curve, coeff] : negative) {
      neg[curve] = rat_str(coeff);
      nclass = nclass + coeff * model.curve(curve).cls;
    }
    v["negative"] = std::move(neg);
    json pos = json::array();
    for (size_t i = 0; i < positive.size(); ++i)
      pos.push_back(rat_str(positive[i]));
    v["positive"] = std::move(pos);
    v["positive_volume"] = rat_str(pair(model, positive, positive));
    v["p_dot_negative"] = rat_str(pair(model, positive, nclass));
    return v;
  };

  if (src.is_catalog()) {
    CatalogConfig cfg = build_config(src.catalog_name);
    if (!flag.empty()) {
      auto [catalog_model, flag_spec] = cfg.find_flag(flag);
      (void)flag_spec;
      ZariskiPath path = zariski_path(catalog_model->model, flag);
      return zariski_report_json(path);
    }
    json v;
    v["name"] = cfg.name;
    json models = json::object();
    for (const auto& m : cfg.models) models[m.role] = decompose_dump(m.model);
    v["models"] = std::move(models);
    return v.dump(2) + "\n";
  }

  SurfaceModel model = load_recipe_model(src.recipe_path);
  if (!flag.empty()) {
    ZariskiPath path = zariski_path(model, flag);
    return zariski_report_json(path);
  }
  return decompose_dump(model).dump(2) + "\n";
}

// ---- liu ----

std::string run_liu(const std::vector<long long>& nmk) {
  if (!nmk.empty() && nmk.size() != 3)
    throw ValidationError("liu takes either no arguments or n m k");
  if (nmk.empty()) {
    json v;
    json triples = json::array();
    for (const auto& [n, m, k] : solution_set())
      triples.push_back(json::array({n, m, k}));
    v["solution_set"] = std::move(triples);
    return v.dump(2) + "\n";
  }
  long long n = nmk[0], m = nmk[1], k = nmk[2];
  Rational volume = volume_formula(n, m, k);
  long long r = m * n - 1;
  json v;
  v["n"] = n;
  v["m"] = m;
  v["k"] = k;
  v["volume"] = rat_str(volume);
  v["group_order"] = r;
  v["bound"] = rat_str(Rational(9, r));
  v["excluded"] = liu_excludes(volume, r);
  return v.dump(2) + "\n";
}

// ---- table1 ----

std::string run_table1(const std::string& format, int jobs) {
  if (format != "json" && format != "tsv")
    throw ValidationError("table1 supports --format json|tsv");
  std::vector<Table1Row> rows = table1(jobs);
  return format == "tsv" ? table1_tsv(rows) : table1_json(rows);
}

// ---- hilbert ----

std::string run_hilbert(const std::vector<long long>& weights,
                        const std::vector<long long>& degrees,
                        long long order) {
  if (weights.empty()) throw ValidationError("--weights is required");
  if (order < 0) throw ValidationError("--order must be nonnegative");
  Series series = hilbert_series(weights, degrees, size_t(order));
  bool agrees = hilbert_series_check(weights, degrees, size_t(order));
  json v;
  v["weights"] = weights;
  v["numerator_degrees"] = degrees;
  v["order"] = order;
  json coeffs = json::array();
  for (const auto& c : series) coeffs.push_back(c.str());
  v["coefficients"] = std::move(coeffs);
  v["counting_agrees"] = agrees;
  return v.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "kdelta: exact K-stability invariants of del Pezzo surfaces with "
      "quotient singularities"};
  app.require_subcommand(1);

  std::string out_path;
  SourceArgs build_src;
  std::string build_format = "text";
  CLI::App* cmd_build = app.add_subcommand(
      "build", "build a surface model and print its dump");
  cmd_build->add_option("recipe", build_src.recipe_path, "recipe JSON file");
  cmd_build->add_option("--catalog", build_src.catalog_name,
                        "catalog configuration name");
  cmd_build->add_option("--format", build_format, "text|json")
      ->capture_default_str();
  cmd_build->add_option("--out", out_path, "write output to a file");

  SourceArgs delta_src;
  std::string delta_flag;
  std::string delta_format = "json";
  CLI::App* cmd_delta = app.add_subcommand(
      "delta", "delta lower bound via a flag curve");
  cmd_delta->add_option("recipe", delta_src.recipe_path, "recipe JSON file");
  cmd_delta->add_option("--catalog", delta_src.catalog_name,
                        "catalog configuration name");
  cmd_delta->add_option("--flag", delta_flag, "flag curve label")->required();
  cmd_delta->add_option("--format", delta_format, "json|tsv")
      ->capture_default_str();
  cmd_delta->add_option("--out", out_path, "write output to a file");

  SourceArgs zariski_src;
  std::string zariski_flag;
  std::string zariski_format = "json";
  CLI::App* cmd_zariski = app.add_subcommand(
      "zariski", "chamber walk for a flag, or decomposition of -K");
  cmd_zariski->add_option("recipe", zariski_src.recipe_path,
                          "recipe JSON file");
  cmd_zariski->add_option("--catalog", zariski_src.catalog_name,
                          "catalog configuration name");
  cmd_zariski->add_option("--flag", zariski_flag,
                          "flag curve label (omit to decompose -K)");
  cmd_zariski->add_option("--format", zariski_format, "json")
      ->capture_default_str();
  cmd_zariski->add_option("--out", out_path, "write output to a file");

  std::vector<long long> liu_nmk;
  CLI::App* cmd_liu = app.add_subcommand(
      "liu", "normalized-volume exclusion test / solution set");
  cmd_liu->add_option("nmk", liu_nmk, "n m k (omit to print the solution set)")
      ->expected(0, 3);
  cmd_liu->add_option("--out", out_path, "write output to a file");

  std::string table1_format = "json";
  int table1_jobs = 1;
  CLI::App* cmd_table1 = app.add_subcommand(
      "table1", "regenerate the classification table");
  cmd_table1->add_option("--format", table1_format, "json|tsv")
      ->capture_default_str();
  cmd_table1->add_option("--jobs", table1_jobs,
                         "classify members on this many threads")
      ->capture_default_str();
  cmd_table1->add_option("--out", out_path, "write output to a file");

  std::vector<long long> hilbert_weights;
  std::vector<long long> hilbert_degrees;
  long long hilbert_order = 50;
  CLI::App* cmd_hilbert = app.add_subcommand(
      "hilbert", "expand a weighted Hilbert series two ways");
  cmd_hilbert
      ->add_option("--weights", hilbert_weights,
                   "denominator weights, comma separated")
      ->delimiter(',')
      ->required();
  cmd_hilbert
      ->add_option("--degrees", hilbert_degrees,
                   "numerator degrees, comma separated")
      ->delimiter(',');
  cmd_hilbert->add_option("--order", hilbert_order, "truncation order")
      ->capture_default_str();
  cmd_hilbert->add_option("--out", out_path, "write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::string output;
    if (cmd_build->parsed()) {
      build_src.check();
      output = run_build(build_src, build_format);
    } else if (cmd_delta->parsed()) {
      delta_src.check();
      output = run_delta(delta_src, delta_flag, delta_format);
    } else if (cmd_zariski->parsed()) {
      zariski_src.check();
      output = run_zariski(zariski_src, zariski_flag, zariski_format);
    } else if (cmd_liu->parsed()) {
      output = run_liu(liu_nmk);
    } else if (cmd_table1->parsed()) {
      output = run_table1(table1_format, table1_jobs);
    } else if (cmd_hilbert->parsed()) {
      output = run_hilbert(hilbert_weights, hilbert_degrees, hilbert_order);
    }
    emit(output, out_path);
    return 0;
  } catch (const ValidationError& e) {
    print_error(e.what());
    return 2;
  } catch (const ComputationError& e) {
    print_error(e.what());
    return 3;
  } catch (const nlohmann::json::exception& e) {
    print_error(e.what());
    return 2;
  } catch (const std::exception& e) {
    print_error(e.what());
    return 3;
  }
}
