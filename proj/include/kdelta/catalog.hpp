#pragma once

// The catalog of singular del Pezzo surfaces S_{n,m}^k under study: the
// specific towers and partial resolutions on which the stability invariants
// are computed, the normalized-volume solution set, and the classification
// table with evidence provenance.
//
// Family data: S_{n,m}^k carries one cyclic quotient singularity of type
// 1/(mn-1)(1,n) and has (-K)^2 = n+2-k + (m+n+2)/(mn-1). The flags tested at
// the singular point are the exceptional curves of its partial resolutions.

#include "kdelta/builder.hpp"
#include "kdelta/kstab.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace kdelta {

// A flag curve on a catalog model plus the marked points at which the
// restricted profile is evaluated (one generic representative and the
// declared special points).
struct CatalogFlag {
  std::string curve;
  std::vector<FlagPointSpec> points;
};

// One surface model of a configuration. `role` distinguishes multiple models
// of the same surface (partial-resolution towers, alternative construction
// routes).
struct CatalogModel {
  std::string role;
  SurfaceModel model;
  std::vector<CatalogFlag> flags;
};

struct CatalogConfig {
  std::string name;  // canonical catalog name
  long long n = 0, m = 0, k = 0;
  Rational volume;  // (-K)^2 of the (contracted) surface
  std::vector<CatalogModel> models;

  const CatalogModel& model(const std::string& role) const;
  // Flag lookup across models; errors when the label is missing or ambiguous.
  std::pair<const CatalogModel*, const CatalogFlag*> find_flag(
      const std::string& curve) const;
};

// (-K_{S_{n,m}^k})^2 = n+2-k + (m+n+2)/(mn-1), exact.
Rational volume_formula(long long n, long long m, long long k);

// The triples (n,m,k), n >= m >= 2 and k within the family bounds, whose
// anticanonical volume satisfies the normalized-volume necessary condition
// vol <= 9/(mn-1) at the 1/(mn-1)(1,n) point. Exactly ten triples.
std::vector<std::array<long long, 3>> solution_set();

// Catalog names:
//   S326, S427                        -- two-tower configurations (k = n+3)
//   Snm_n2(n,m)                       -- S_{n,m}^{n+2}, flag over the
//                                        singular point with chain [m,n]
//   Sn2_flagE(n), Sn3_flagE(n)        -- partial resolution of S_{n,2}^{n+2}
//                                        resp. S_{n,3}^{n+2} extracting the
//                                        central curve E
//   S335_smoothtower, S436_smoothtower-- smooth-surface towers contracting to
//                                        S_{3,3}^5 resp. S_{4,3}^6
//   P2_two_lines(n,m)                 -- S_{n,m}^{n+1} built two ways (from
//                                        P^2 with two lines, and from
//                                        P(1,1,n))
// Aliases: S325 = Sn2_flagE(3), S426 = Sn2_flagE(4), S527 = Sn2_flagE(5),
//          S335 = Sn3_flagE(3), S436 = Sn3_flagE(4).
CatalogConfig build_config(const std::string& name);

// The concrete configuration names exercised by the reports (aliases and a
// representative sample of the parametric families).
std::vector<std::string> catalog_names();

enum class Status { k_unstable, k_stable, strictly_k_semistable, out_of_family };
std::string status_str(Status s);

struct EvidenceItem {
  // One of: liu_exclusion, delta_singular_point, alpha_bound_assumption,
  // finite_automorphism_assumption, literature.
  std::string kind;
  // Computed-value rendering (liu_exclusion, delta_singular_point) or the
  // citation string (assumptions, literature); assumptions never carry a
  // computed number.
  std::string payload;
  std::optional<DeltaReport> report;  // delta_singular_point only
};

struct ClassificationRow {
  long long n = 0, m = 0, k = 0;
  Rational volume;
  Status status = Status::out_of_family;
  std::vector<EvidenceItem> evidence;
};

// Classifies one family member: the normalized-volume test first (exclusion
// gives K-unstable), otherwise the delta reports at the singular point's
// flags plus the recorded smooth-point and automorphism assumptions; (2,2)
// members are literature results. Out-of-family input yields status
// out_of_family.
ClassificationRow classify(long long n, long long m, long long k);

// A row group of the classification table: one family (n,m) or the aggregate
// m+n >= 8 family, a k-range label, the common status, and the classified
// members backing it.
struct Table1Row {
  std::string family;   // "(3,2)" or "n+m≥8"
  std::string k_label;  // "6", "4,5", "k≤4", "k≤n+2"
  Status status = Status::out_of_family;
  std::vector<ClassificationRow> members;
};

// The classification table, row group for row group. `jobs` > 1 classifies
// the members on that many threads; assembly order (and so output) is
// identical regardless of schedule.
std::vector<Table1Row> table1(int jobs = 1);

// Expands prod (1 - t^{d_i}) / prod (1 - t^{w_j}) to the given order twice --
// once by series algebra, once by denumerant counting with
// inclusion-exclusion -- and reports whether the coefficients agree.
bool hilbert_series_check(const std::vector<long long>& weights,
                          const std::vector<long long>& numerator_degrees,
                          size_t order);

}  // namespace kdelta
