#include "kdelta/catalog.hpp"

#include "kdelta/series.hpp"
#include "kdelta/zariski.hpp"

#include <algorithm>
#include <future>

namespace kdelta {

namespace {

FlagPointSpec generic_point(const std::string& flag) {
  FlagPointSpec p;
  p.label = "generic";
  p.flag_curve = flag;
  p.is_generic = true;
  return p;
}

FlagPointSpec special_point(const std::string& label, const std::string& flag,
                            const std::string& curve, const Rational& mult,
                            bool is_upper_bound) {
  FlagPointSpec p;
  p.label = label;
  p.flag_curve = flag;
  p.local_multiplicities[curve] = LocalMult{mult, is_upper_bound};
  return p;
}

// Largest k for which S_{n,m}^k stays del Pezzo: k <= n+2 in general, and
// k = n+3 additionally for (2,2), (3,2), (4,2).
long long family_kmax(long long n, long long m) {
  bool extended = m == 2 && n >= 2 && n <= 4;
  return n + 2 + (extended ? 1 : 0);
}

std::string surface_label(long long n, long long m, long long k) {
  return "S_{" + std::to_string(n) + "," + std::to_string(m) + "}^" +
         std::to_string(k);
}

// Model declared directly by its intersection table: every basis class is a
// tracked irreducible curve.
SurfaceModel direct_model(std::vector<std::string> basis, Matrix gram,
                          std::vector<Rational> antik) {
  SurfaceModel s;
  s.basis = std::move(basis);
  s.form.entries = std::move(gram);
  s.canonical = ClassVector(s.dim());
  for (size_t i = 0; i < s.dim(); ++i) s.canonical[i] = -antik[i];
  for (const auto& b : s.basis)
    s.curves.push_back(CurveRecord{b, s.basis_class(b), true});
  s.validate();
  return s;
}

void check_volume(const SurfaceModel& model, const Rational& expected,
                  const std::string& name) {
  if (anticanonical_volume(model) != expected)
    throw ComputationError("catalog model volume mismatch: " + name);
}

// S_{n,2}^{n+3} for n = 3, 4 (S326, S427): P(1,1,n) with the degree-1 curve
// l and a degree-(n+1) curve c through the singular point o, two points
// blown up on l and n+3 on c. Tower S1 contracts L1 alone (the 1/n(1,1)
// point stays inside the chain); tower S2 resolves o by a weighted blow-up
// first and contracts {L2, E}.
CatalogConfig build_two_tower(long long n) {
  CatalogConfig cfg;
  cfg.name = n == 3 ? "S326" : "S427";
  cfg.n = n;
  cfg.m = 2;
  cfg.k = n + 3;
  cfg.volume = volume_formula(n, 2, n + 3);

  auto seed_with_curves = [&](const std::string& line_label,
                              const std::string& curve_label) {
    SurfaceModel s = seed_wps(n);
    s = declare_curve(s, line_label, Rational(1) * s.basis_class("l"), {"o"});
    s = declare_curve(s, curve_label, Rational(n + 1) * s.basis_class("l"),
                      {"o"});
    for (int i = 1; i <= 2; ++i)
      s = blow_up(s, PointSpec{"a" + std::to_string(i),
                               {{line_label, 1}},
                               false,
                               ""});
    for (long long i = 1; i <= n + 3; ++i)
      s = blow_up(s, PointSpec{"b" + std::to_string(i),
                               {{curve_label, 1}},
                               false,
                               ""});
    return s;
  };

  SurfaceModel s1 = seed_with_curves("L1", "C1");
  s1 = contract(s1, {"L1"});
  check_volume(s1, cfg.volume, cfg.name + " S1");

  SurfaceModel s2 = seed_with_curves("L2", "C2");
  s2 = weighted_blow_up_11(s2, "o", "E");
  {
    ClassVector sum =
        s2.curve("C2").cls + s2.curve("L2").cls + s2.curve("E").cls;
    if (!(s2.anticanonical() == sum))
      throw ComputationError("catalog model anticanonical mismatch: " +
                             cfg.name + " S2");
  }
  s2 = contract(s2, {"L2", "E"});
  check_volume(s2, cfg.volume, cfg.name + " S2");

  CatalogModel m1;
  m1.role = "S1";
  m1.model = std::move(s1);
  m1.flags.push_back(CatalogFlag{"L1", {generic_point("L1")}});

  CatalogModel m2;
  m2.role = "S2";
  m2.model = std::move(s2);
  m2.flags.push_back(CatalogFlag{
      "E",
      {generic_point("E"), special_point("E_C2", "E", "C2", 1, false),
       special_point("E_L2", "E", "L2", 1, false)}});

  cfg.models.push_back(std::move(m1));
  cfg.models.push_back(std::move(m2));
  return cfg;
}

// S_{n,m}^{n+2} with the flag L: the partial resolution extracting the
// strict transform L of the line, carrying the n+2 curves C_i and the m
// exceptional curves E_j that meet L transversally.
CatalogConfig build_snm_n2(long long n, long long m) {
  if (!(n >= m && m >= 2))
    throw ValidationError("Snm_n2 requires n >= m >= 2");
  CatalogConfig cfg;
  cfg.name =
      "Snm_n2(" + std::to_string(n) + "," + std::to_string(m) + ")";
  cfg.n = n;
  cfg.m = m;
  cfg.k = n + 2;
  cfg.volume = volume_formula(n, m, n + 2);

  std::vector<std::string> basis = {"L"};
  for (long long i = 1; i <= n + 2; ++i)
    basis.push_back("C" + std::to_string(i));
  for (long long j = 1; j <= m; ++j) basis.push_back("E" + std::to_string(j));
  const size_t dim = basis.size();

  Matrix g(dim, std::vector<Rational>(dim, Rational(0)));
  g[0][0] = Rational(1, n) - m;
  for (size_t i = 1; i < dim; ++i) {
    g[i][i] = -1;
    g[0][i] = g[i][0] = 1;
  }
  std::vector<Rational> antik(dim, Rational(1, n + 1));
  antik[0] = Rational(n + 2, n + 1);

  SurfaceModel s = direct_model(std::move(basis), std::move(g),
                                std::move(antik));
  QuotientSingularity sing;
  sing.r = n;
  sing.a = 1;
  sing.resolution_chain = {n};
  sing.location = "o";
  sing.incident_curves = {"L"};
  sing.hidden_curves = 1;
  s.singularities.push_back(sing);

  s = contract(s, {"L"});
  check_volume(s, cfg.volume, cfg.name);

  CatalogModel main;
  main.role = "main";
  main.model = std::move(s);
  main.flags.push_back(CatalogFlag{
      "L",
      {generic_point("L"), special_point("L_C1", "L", "C1", 1, false),
       special_point("L_E1", "L", "E1", 1, false)}});
  cfg.models.push_back(std::move(main));
  return cfg;
}

// Partial resolution of S_{n,m}^{n+2} (m = 2, 3) extracting the central
// curve E of the 1/(mn-1)(1,n) point, declared by its three-curve
// intersection table: E, the strict transform Lt of the line, and the
// degree-(3n+4) resp. degree-(4n+5) curve Ct.
CatalogConfig build_flagE(long long n, long long m) {
  if (m != 2 && m != 3) throw ValidationError("flagE families have m = 2, 3");
  if (n < m) throw ValidationError("flagE families require n >= m");
  CatalogConfig cfg;
  cfg.name = "Sn" + std::to_string(m) + "_flagE(" + std::to_string(n) + ")";
  cfg.n = n;
  cfg.m = m;
  cfg.k = n + 2;
  cfg.volume = volume_formula(n, m, n + 2);

  const Rational ct_self = -(n + m + 2);
  const Rational e_dot_ct = n + m + 2;
  Matrix g = {{Rational(-n), Rational(1), e_dot_ct},
              {Rational(1), Rational(-m), Rational(0)},
              {e_dot_ct, Rational(0), ct_self}};
  std::vector<Rational> antik = {Rational(m + 2, m + 1), Rational(m, m + 1),
                                 Rational(1, m + 1)};
  SurfaceModel s = direct_model({"E", "Lt", "Ct"}, std::move(g),
                                std::move(antik));
  s = contract(s, {"Lt", "E"});
  check_volume(s, cfg.volume, cfg.name);

  CatalogModel main;
  main.role = "main";
  main.model = std::move(s);
  main.flags.push_back(CatalogFlag{
      "E",
      {generic_point("E"), special_point("E_Lt", "E", "Lt", 1, false),
       special_point("E_Ct", "E", "Ct", n + m + 2, true)}});
  cfg.models.push_back(std::move(main));
  return cfg;
}

// Smooth-surface tower for S_{n,3}^k (n = 3, 4): P(1,1,n) blown up at three
// points on the line and k general points, then the line contracted. No
// flags; these models cross-check the singularity type, discrepancy, and
// volume of the direct flagE declarations along an independent route.
CatalogConfig build_smoothtower(long long n) {
  CatalogConfig cfg;
  cfg.n = n;
  cfg.m = 3;
  cfg.k = n + 2;
  cfg.name = (n == 3 ? std::string("S335") : std::string("S436")) +
             "_smoothtower";
  cfg.volume = volume_formula(n, 3, n + 2);

  SurfaceModel s = seed_wps(n);
  s = declare_curve(s, "L", Rational(1) * s.basis_class("l"), {"o"});
  for (int i = 1; i <= 3; ++i)
    s = blow_up(s, PointSpec{"q" + std::to_string(i), {{"L", 1}}, false, ""});
  for (long long i = 1; i <= n + 2; ++i)
    s = blow_up(s, PointSpec{"g" + std::to_string(i), {}, true, ""});
  s = contract(s, {"L"});
  check_volume(s, cfg.volume, cfg.name);

  CatalogModel tower;
  tower.role = "tower";
  tower.model = std::move(s);
  cfg.models.push_back(std::move(tower));
  return cfg;
}

// S_{n,m}^{n+1} built along both routes. Route "two_lines": P^2 with two
// lines, n+1 points blown up on one and m+1 on the other (kept uncontracted
// so the Zariski decomposition of -K itself is visible), plus its contracted
// form. Route "wps_route": P(1,1,n) with m points on the line, the line
// contracted, then n+1 general points.
CatalogConfig build_two_lines(long long n, long long m) {
  if (!(n >= m && m >= 2))
    throw ValidationError("P2_two_lines requires n >= m >= 2");
  CatalogConfig cfg;
  cfg.name =
      "P2_two_lines(" + std::to_string(n) + "," + std::to_string(m) + ")";
  cfg.n = n;
  cfg.m = m;
  cfg.k = n + 1;
  cfg.volume = volume_formula(n, m, n + 1);

  SurfaceModel a = seed_p2();
  a = declare_curve(a, "Ln", Rational(1) * a.basis_class("l"));
  a = declare_curve(a, "Lm", Rational(1) * a.basis_class("l"));
  for (long long i = 1; i <= n + 1; ++i)
    a = blow_up(a, PointSpec{"a" + std::to_string(i), {{"Ln", 1}}, false, ""});
  for (long long i = 1; i <= m + 1; ++i)
    a = blow_up(a, PointSpec{"b" + std::to_string(i), {{"Lm", 1}}, false, ""});

  SurfaceModel a_contracted = contract(a, {"Ln", "Lm"});
  check_volume(a_contracted, cfg.volume, cfg.name + " two_lines");

  SurfaceModel b = seed_wps(n);
  b = declare_curve(b, "L", Rational(1) * b.basis_class("l"), {"o"});
  for (long long i = 1; i <= m; ++i)
    b = blow_up(b, PointSpec{"q" + std::to_string(i), {{"L", 1}}, false, ""});
  b = contract(b, {"L"});
  for (long long i = 1; i <= n + 1; ++i)
    b = blow_up(b, PointSpec{"g" + std::to_string(i), {}, true, ""});
  check_volume(b, cfg.volume, cfg.name + " wps_route");

  CatalogModel ma;
  ma.role = "two_lines";
  ma.model = std::move(a);
  CatalogModel mac;
  mac.role = "two_lines_contracted";
  mac.model = std::move(a_contracted);
  CatalogModel mb;
  mb.role = "wps_route";
  mb.model = std::move(b);
  cfg.models.push_back(std::move(ma));
  cfg.models.push_back(std::move(mac));
  cfg.models.push_back(std::move(mb));
  return cfg;
}

// Parses "name(arg1,arg2)" into its pieces; returns false when `full` has no
// parenthesized argument list.
bool parse_call(const std::string& full, std::string& head,
                std::vector<long long>& args) {
  size_t open = full.find('(');
  if (open == std::string::npos) return false;
  if (full.back() != ')')
    throw ValidationError("unknown catalog name: " + full);
  head = full.substr(0, open);
  std::string inside = full.substr(open + 1, full.size() - open - 2);
  args.clear();
  size_t pos = 0;
  while (pos <= inside.size()) {
    size_t comma = inside.find(',', pos);
    std::string tok = inside.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw ValidationError("unknown catalog name: " + full);
    args.push_back(std::stoll(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (args.empty()) throw ValidationError("unknown catalog name: " + full);
  return true;
}

}  // namespace

const CatalogModel& CatalogConfig::model(const std::string& role) const {
  for (const auto& m : models)
    if (m.role == role) return m;
  throw ValidationError("unknown model role: " + role + " in " + name);
}

std::pair<const CatalogModel*, const CatalogFlag*> CatalogConfig::find_flag(
    const std::string& curve) const {
  const CatalogModel* found_model = nullptr;
  const CatalogFlag* found_flag = nullptr;
  for (const auto& m : models)
    for (const auto& f : m.flags) {
      if (f.curve != curve) continue;
      if (found_flag)
        throw ValidationError("ambiguous flag curve: " + curve + " in " +
                              name);
      found_model = &m;
      found_flag = &f;
    }
  if (!found_flag)
    throw ValidationError("unknown flag curve: " + curve + " in " + name);
  return {found_model, found_flag};
}

Rational volume_formula(long long n, long long m, long long k) {
  if (n < 2 || m < 2 || k < 0)
    throw ValidationError("volume_formula requires n, m >= 2 and k >= 0");
  return Rational(n + 2 - k) + Rational(m + n + 2, m * n - 1);
}

std::vector<std::array<long long, 3>> solution_set() {
  std::vector<std::array<long long, 3>> out;
  for (long long m = 2; m <= 12; ++m)
    for (long long n = m; n <= 12; ++n)
      for (long long k = 0; k <= family_kmax(n, m); ++k)
        if (!liu_excludes(volume_formula(n, m, k), m * n - 1))
          out.push_back({n, m, k});
  return out;
}

CatalogConfig build_config(const std::string& name) {
  if (name == "S326") return build_two_tower(3);
  if (name == "S427") return build_two_tower(4);
  if (name == "S335_smoothtower") return build_smoothtower(3);
  if (name == "S436_smoothtower") return build_smoothtower(4);
  if (name == "S325") return build_flagE(3, 2);
  if (name == "S426") return build_flagE(4, 2);
  if (name == "S527") return build_flagE(5, 2);
  if (name == "S335") return build_flagE(3, 3);
  if (name == "S436") return build_flagE(4, 3);

  std::string head;
  std::vector<long long> args;
  if (parse_call(name, head, args)) {
    if (head == "Snm_n2" && args.size() == 2)
      return build_snm_n2(args[0], args[1]);
    if (head == "Sn2_flagE" && args.size() == 1)
      return build_flagE(args[0], 2);
    if (head == "Sn3_flagE" && args.size() == 1)
      return build_flagE(args[0], 3);
    if (head == "P2_two_lines" && args.size() == 2)
      return build_two_lines(args[0], args[1]);
  }
  throw ValidationError("unknown catalog name: " + name);
}

std::vector<std::string> catalog_names() {
  return {
      "S326",
      "S427",
      "Sn2_flagE(3)",
      "Sn2_flagE(4)",
      "Sn2_flagE(5)",
      "Sn3_flagE(3)",
      "Sn3_flagE(4)",
      "Snm_n2(3,2)",
      "Snm_n2(4,2)",
      "Snm_n2(5,2)",
      "Snm_n2(3,3)",
      "Snm_n2(4,3)",
      "S335_smoothtower",
      "S436_smoothtower",
      "P2_two_lines(2,2)",
      "P2_two_lines(3,2)",
      "P2_two_lines(3,3)",
  };
}

std::string status_str(Status s) {
  switch (s) {
    case Status::k_unstable:
      return "K-unstable";
    case Status::k_stable:
      return "K-stable";
    case Status::strictly_k_semistable:
      return "strictly K-semistable";
    case Status::out_of_family:
      return "out-of-family";
  }
  throw ValidationError("invalid status");
}

namespace {

EvidenceItem literature_item(const std::string& payload) {
  return EvidenceItem{"literature", payload, std::nullopt};
}

// The delta reports backing the classification of one family member: the
// flag(s) over its singular point, each evaluated at the declared marked
// points.
std::vector<DeltaReport> singular_point_reports(long long n, long long m,
                                                long long k) {
  std::vector<std::pair<std::string, std::string>> jobs;  // (config, flag)
  if (m == 2 && k == n + 3) {
    const std::string name = n == 3 ? "S326" : "S427";
    jobs = {{name, "L1"}, {name, "E"}};
  } else if (k == n + 2) {
    jobs = {{"Sn" + std::to_string(m) + "_flagE(" + std::to_string(n) + ")",
             "E"},
            {"Snm_n2(" + std::to_string(n) + "," + std::to_string(m) + ")",
             "L"}};
  } else {
    throw ComputationError("classification incomplete: no flag data for " +
                           surface_label(n, m, k));
  }

  std::vector<DeltaReport> reports;
  for (const auto& [config_name, flag] : jobs) {
    CatalogConfig cfg = build_config(config_name);
    auto [model, flag_spec] = cfg.find_flag(flag);
    reports.push_back(
        delta_lower_bound(model->model, flag, flag_spec->points));
  }
  return reports;
}

}  // namespace

ClassificationRow classify(long long n, long long m, long long k) {
  ClassificationRow row;
  row.n = n;
  row.m = m;
  row.k = k;
  row.status = Status::out_of_family;
  if (n >= 2 && m >= 2 && k >= 0) row.volume = volume_formula(n, m, k);
  if (n < 2 || m < 2 || n < m || k < 0 || k > family_kmax(n, m)) return row;

  if (n == 2 && m == 2) {
    // Classified in the literature; the engine records the citations.
    if (k <= 2) {
      row.status = Status::k_unstable;
      row.evidence.push_back(literature_item("K-unstable [Den1]"));
    } else if (k == 3) {
      row.status = Status::strictly_k_semistable;
      row.evidence.push_back(
          literature_item("strictly K-semistable [OSS16, Den2]"));
    } else {
      row.status = Status::k_stable;
      row.evidence.push_back(literature_item("K-stable [Che08, Den4, Den3]"));
    }
    return row;
  }

  const long long r = m * n - 1;
  if (liu_excludes(row.volume, r)) {
    row.status = Status::k_unstable;
    EvidenceItem item;
    item.kind = "liu_exclusion";
    item.payload = "(-K)^2 = " + rat_str(row.volume) + " > " +
                   rat_str(Rational(9, r)) + " = 9/|G| for the 1/" +
                   std::to_string(r) + "(1," + std::to_string(n) +
                   ") singularity";
    row.evidence.push_back(std::move(item));
    return row;
  }

  std::vector<DeltaReport> reports = singular_point_reports(n, m, k);
  bool all_gt = true, any_eq = false;
  for (const auto& rep : reports) {
    if (rep.verdict == DeltaVerdict::inconclusive)
      throw ComputationError("classification incomplete: inconclusive delta "
                             "bound for " +
                             surface_label(n, m, k));
    if (rep.verdict == DeltaVerdict::delta_eq_1) any_eq = true;
    if (rep.verdict != DeltaVerdict::delta_gt_1) all_gt = false;
  }
  for (auto& rep : reports) {
    EvidenceItem item;
    item.kind = "delta_singular_point";
    item.payload = "delta_p >= " + rat_str(rep.delta_lower_bound) +
                   " at the 1/" + std::to_string(r) + "(1," +
                   std::to_string(n) + ") point via flag " + rep.flag;
    item.report = std::move(rep);
    row.evidence.push_back(std::move(item));
  }
  row.evidence.push_back(EvidenceItem{
      "alpha_bound_assumption",
      "assumed: alpha_p >= 3/4 at every smooth point p of " +
          surface_label(n, m, k),
      std::nullopt});
  if (all_gt) {
    row.status = Status::k_stable;
  } else if (any_eq) {
    row.status = Status::strictly_k_semistable;
    row.evidence.push_back(EvidenceItem{
        "finite_automorphism_assumption",
        "assumed: Aut(" + surface_label(n, m, k) + ") is finite",
        std::nullopt});
  } else {
    throw ComputationError("classification incomplete: delta evidence does "
                           "not decide " +
                           surface_label(n, m, k));
  }
  return row;
}

namespace {

struct RowSpec {
  std::string family;
  std::string k_label;
  Status status;
  std::vector<std::array<long long, 3>> members;
};

std::vector<std::array<long long, 3>> k_range(long long n, long long m,
                                              long long k_lo, long long k_hi) {
  std::vector<std::array<long long, 3>> out;
  for (long long k = k_lo; k <= k_hi; ++k) out.push_back({n, m, k});
  return out;
}

std::vector<RowSpec> table1_specs() {
  return {
      {"n+m≥8", "k≤n+2", Status::k_unstable, {{6, 2, 8}, {5, 3, 7}, {4, 4, 6}}},
      {"(2,2)", "k≤2", Status::k_unstable, k_range(2, 2, 0, 2)},
      {"(2,2)", "3", Status::strictly_k_semistable, {{2, 2, 3}}},
      {"(2,2)", "4,5", Status::k_stable, k_range(2, 2, 4, 5)},
      {"(3,2)", "k≤4", Status::k_unstable, k_range(3, 2, 0, 4)},
      {"(3,2)", "5,6", Status::k_stable, k_range(3, 2, 5, 6)},
      {"(4,2)", "k≤5", Status::k_unstable, k_range(4, 2, 0, 5)},
      {"(4,2)", "6,7", Status::k_stable, k_range(4, 2, 6, 7)},
      {"(3,3)", "k≤4", Status::k_unstable, k_range(3, 3, 0, 4)},
      {"(3,3)", "5", Status::k_stable, {{3, 3, 5}}},
      {"(4,3)", "k≤5", Status::k_unstable, k_range(4, 3, 0, 5)},
      {"(4,3)", "6", Status::k_stable, {{4, 3, 6}}},
      {"(5,2)", "k≤6", Status::k_unstable, k_range(5, 2, 0, 6)},
      {"(5,2)", "7", Status::strictly_k_semistable, {{5, 2, 7}}},
  };
}

}  // namespace

std::vector<Table1Row> table1(int jobs) {
  if (jobs < 1) throw ValidationError("jobs must be >= 1");
  const std::vector<RowSpec> specs = table1_specs();

  std::vector<std::array<long long, 3>> flat;
  for (const auto& spec : specs)
    flat.insert(flat.end(), spec.members.begin(), spec.members.end());

  std::vector<ClassificationRow> computed(flat.size());
  auto worker = [&](size_t offset, size_t stride) {
    for (size_t i = offset; i < flat.size(); i += stride)
      computed[i] = classify(flat[i][0], flat[i][1], flat[i][2]);
  };
  if (jobs == 1 || flat.size() <= 1) {
    worker(0, 1);
  } else {
    size_t n_threads = std::min<size_t>(jobs, flat.size());
    std::vector<std::future<void>> futures;
    for (size_t w = 1; w < n_threads; ++w)
      futures.push_back(
          std::async(std::launch::async, worker, w, n_threads));
    worker(0, n_threads);
    for (auto& f : futures) f.get();  // rethrows worker exceptions
  }

  std::vector<Table1Row> rows;
  size_t idx = 0;
  for (const auto& spec : specs) {
    Table1Row row;
    row.family = spec.family;
    row.k_label = spec.k_label;
    row.status = spec.status;
    for (size_t i = 0; i < spec.members.size(); ++i) {
      ClassificationRow r = std::move(computed[idx++]);
      if (r.status != spec.status)
        throw ComputationError("classification table mismatch at " +
                               surface_label(r.n, r.m, r.k) + ": computed " +
                               status_str(r.status) + ", table says " +
                               status_str(spec.status));
      row.members.push_back(std::move(r));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool hilbert_series_check(const std::vector<long long>& weights,
                          const std::vector<long long>& numerator_degrees,
                          size_t order) {
  return hilbert_series(weights, numerator_degrees, order) ==
         hilbert_series_by_counting(weights, numerator_degrees, order);
}

}  // namespace kdelta
