#include "kdelta/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace kdelta {

namespace {

using json = nlohmann::json;  // std::map-backed: object keys stay sorted

json class_to_json(const ClassVector& v) {
  json out = json::array();
  for (size_t i = 0; i < v.size(); ++i) out.push_back(rat_str(v[i]));
  return out;
}

json singularity_to_json(const QuotientSingularity& s) {
  json v;
  v["r"] = s.r;
  v["a"] = s.a;
  v["type"] = "1/" + std::to_string(s.r) + "(1," + std::to_string(s.a) + ")";
  v["resolution_chain"] = s.resolution_chain;
  v["location"] = s.location;
  v["incident_curves"] = s.incident_curves;
  v["hidden_curves"] = s.hidden_curves;
  return v;
}

json flag_point_to_json(const FlagPointSpec& p) {
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
  return v;
}

json delta_to_json_obj(const DeltaReport& report) {
  json v;
  v["flag"] = report.flag;
  v["A"] = rat_str(report.a);
  v["S"] = rat_str(report.s);
  v["A/S"] = rat_str(report.ratio);
  v["beta"] = rat_str(report.a - report.s);
  v["tau"] = rat_str(report.tau);
  json points = json::array();
  for (const auto& p : report.points) {
    json e;
    e["point"] = p.point;
    e["s_w"] = rat_str(p.s_w);
    e["mode"] = value_mode_str(p.mode);
    e["quotient"] = rat_str(p.quotient);
    points.push_back(std::move(e));
  }
  v["points"] = std::move(points);
  v["delta_lower_bound"] = rat_str(report.delta_lower_bound);
  v["bound_mode"] = value_mode_str(report.bound_mode);
  v["verdict"] = verdict_str(report.verdict);
  return v;
}

json zariski_to_json_obj(const ZariskiPath& path) {
  json v;
  v["flag"] = path.flag;
  v["start"] = class_to_json(path.start);
  v["vol0"] = rat_str(path.vol0);
  v["tau"] = rat_str(path.tau);
  json bps = json::array();
  for (const auto& b : path.breakpoints()) bps.push_back(rat_str(b));
  v["breakpoints"] = std::move(bps);
  json segs = json::array();
  for (const auto& seg : path.segments) {
    json s;
    s["t_lo"] = rat_str(seg.t_lo);
    s["t_hi"] = rat_str(seg.t_hi);
    s["negative_support"] = seg.negative_support;
    json coeffs = json::object();
    for (const auto& [curve, fn] : seg.coefficients) {
      json c;
      c["a0"] = rat_str(fn.a0);
      c["a1"] = rat_str(fn.a1);
      coeffs[curve] = std::move(c);
    }
    s["coefficients"] = std::move(coeffs);
    s["p0"] = class_to_json(seg.p0);
    s["p1"] = class_to_json(seg.p1);
    if (path.model) {
      auto vol = seg.volume(*path.model);
      json q;
      q["c0"] = rat_str(vol.c0);
      q["c1"] = rat_str(vol.c1);
      q["c2"] = rat_str(vol.c2);
      s["volume"] = std::move(q);
    }
    segs.push_back(std::move(s));
  }
  v["segments"] = std::move(segs);
  return v;
}

json model_to_json_obj(const SurfaceModel& model) {
  json v;
  v["basis"] = model.basis;
  json matrix = json::array();
  for (size_t i = 0; i < model.dim(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < model.dim(); ++j)
      row.push_back(rat_str(model.form.at(i, j)));
    matrix.push_back(std::move(row));
  }
  v["intersection_matrix"] = std::move(matrix);
  v["anticanonical"] = class_to_json(model.anticanonical());
  v["anticanonical_volume"] = rat_str(anticanonical_volume(model));
  json curves = json::array();
  for (const auto& c : model.curves) {
    json e;
    e["label"] = c.label;
    e["class"] = class_to_json(c.cls);
    e["is_irreducible"] = c.is_irreducible;
    curves.push_back(std::move(e));
  }
  v["curves"] = std::move(curves);
  v["contracted"] = model.contracted;
  json sings = json::array();
  for (const auto& s : model.singularities)
    sings.push_back(singularity_to_json(s));
  v["singularities"] = std::move(sings);
  json points = json::array();
  for (const auto& p : model.points) points.push_back(flag_point_to_json(p));
  v["points"] = std::move(points);
  return v;
}

json classification_to_json_obj(const ClassificationRow& row) {
  json v;
  v["n"] = row.n;
  v["m"] = row.m;
  v["k"] = row.k;
  v["volume"] = rat_str(row.volume);
  v["status"] = status_str(row.status);
  json evidence = json::array();
  for (const auto& item : row.evidence) {
    json e;
    e["kind"] = item.kind;
    e["payload"] = item.payload;
    if (item.report) e["report"] = delta_to_json_obj(*item.report);
    evidence.push_back(std::move(e));
  }
  v["evidence"] = std::move(evidence);
  return v;
}

std::string dump(const json& v) { return v.dump(2) + "\n"; }

}  // namespace

std::string value_mode_str(ValueMode mode) {
  return mode == ValueMode::exact ? "exact" : "upper_bound";
}

std::string verdict_str(DeltaVerdict verdict) {
  switch (verdict) {
    case DeltaVerdict::delta_gt_1:
      return "delta_gt_1";
    case DeltaVerdict::delta_eq_1:
      return "delta_eq_1";
    case DeltaVerdict::inconclusive:
      return "inconclusive";
  }
  throw ValidationError("invalid verdict");
}

std::string delta_report_json(const DeltaReport& report,
                              const ZariskiPath* path) {
  json v = delta_to_json_obj(report);
  if (path) v["path"] = zariski_to_json_obj(*path);
  return dump(v);
}

std::string delta_report_tsv(const DeltaReport& report) {
  std::ostringstream out;
  out << "flag\t" << report.flag << "\n";
  out << "A\t" << rat_str(report.a) << "\n";
  out << "S\t" << rat_str(report.s) << "\n";
  out << "A/S\t" << rat_str(report.ratio) << "\n";
  out << "beta\t" << rat_str(report.a - report.s) << "\n";
  out << "tau\t" << rat_str(report.tau) << "\n";
  for (const auto& p : report.points)
    out << "S_W\t" << p.point << "\t" << rat_str(p.s_w) << "\t"
        << value_mode_str(p.mode) << "\n";
  out << "delta_lower_bound\t" << rat_str(report.delta_lower_bound) << "\n";
  out << "bound_mode\t" << value_mode_str(report.bound_mode) << "\n";
  out << "verdict\t" << verdict_str(report.verdict) << "\n";
  return out.str();
}

std::string zariski_report_json(const ZariskiPath& path) {
  return dump(zariski_to_json_obj(path));
}

std::string model_dump_json(const SurfaceModel& model) {
  return dump(model_to_json_obj(model));
}

std::string model_dump_text(const SurfaceModel& model) {
  std::ostringstream out;
  out << "basis:";
  for (const auto& b : model.basis) out << " " << b;
  out << "\nintersection matrix:\n";
  std::vector<std::vector<std::string>> cells(model.dim());
  std::vector<size_t> widths(model.dim(), 0);
  for (size_t i = 0; i < model.dim(); ++i) {
    cells[i].resize(model.dim());
    for (size_t j = 0; j < model.dim(); ++j) {
      cells[i][j] = rat_str(model.form.at(i, j));
      widths[j] = std::max(widths[j], cells[i][j].size());
    }
  }
  for (size_t i = 0; i < model.dim(); ++i) {
    out << "  [";
    for (size_t j = 0; j < model.dim(); ++j) {
      out << " " << std::string(widths[j] - cells[i][j].size(), ' ')
          << cells[i][j];
    }
    out << " ]\n";
  }
  out << "-K =";
  ClassVector antik = model.anticanonical();
  bool first = true;
  for (size_t i = 0; i < model.dim(); ++i) {
    if (antik[i] == 0) continue;
    Rational c = antik[i];
    bool neg = c < 0;
    if (neg) c = -c;
    out << (first ? (neg ? " -" : " ") : (neg ? " - " : " + "));
    if (c != 1) out << rat_str(c) << "*";
    out << model.basis[i];
    first = false;
  }
  if (first) out << " 0";
  out << "\n(-K)^2 = " << rat_str(anticanonical_volume(model)) << "\n";
  out << "singularities:";
  if (model.singularities.empty()) out << " none";
  out << "\n";
  for (const auto& s : model.singularities) {
    out << "  1/" << s.r << "(1," << s.a << ") at " << s.location
        << " (chain [";
    for (size_t i = 0; i < s.resolution_chain.size(); ++i)
      out << (i ? "," : "") << s.resolution_chain[i];
    out << "]";
    if (!s.incident_curves.empty()) {
      out << ", incident:";
      for (const auto& c : s.incident_curves) out << " " << c;
    }
    out << ")\n";
  }
  if (!model.contracted.empty()) {
    out << "contracted:";
    for (const auto& c : model.contracted) out << " " << c;
    out << "\n";
  }
  return out.str();
}

std::string classification_json(const ClassificationRow& row) {
  return classification_to_json_obj(row).dump(2) + "\n";
}

std::string table1_json(const std::vector<Table1Row>& rows) {
  json v;
  json out_rows = json::array();
  for (const auto& row : rows) {
    json r;
    r["family"] = row.family;
    r["k"] = row.k_label;
    r["status"] = status_str(row.status);
    json members = json::array();
    for (const auto& member : row.members)
      members.push_back(classification_to_json_obj(member));
    r["members"] = std::move(members);
    out_rows.push_back(std::move(r));
  }
  v["rows"] = std::move(out_rows);
  return dump(v);
}

std::string table1_tsv(const std::vector<Table1Row>& rows) {
  std::ostringstream out;
  for (const auto& row : rows) {
    std::vector<std::string> kinds;
    for (const auto& member : row.members)
      for (const auto& item : member.evidence)
        if (std::find(kinds.begin(), kinds.end(), item.kind) == kinds.end())
          kinds.push_back(item.kind);
    out << row.family << "\t" << row.k_label << "\t" << status_str(row.status)
        << "\t";
    for (size_t i = 0; i < kinds.size(); ++i) out << (i ? "," : "") << kinds[i];
    out << "\n";
  }
  return out.str();
}

}  // namespace kdelta
