#include "kdelta/builder.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace kdelta {

namespace {

void require_fresh_label(const SurfaceModel& model, const std::string& label) {
  if (label.empty()) throw ValidationError("empty label");
  for (const auto& b : model.basis)
    if (b == label) throw ValidationError("label already in basis: " + label);
  if (model.has_curve(label))
    throw ValidationError("label already names a curve: " + label);
}

// Extends the model by one basis class orthogonal to everything existing,
// with the given self-intersection. Returns the new basis index.
size_t extend_basis(SurfaceModel& model, const std::string& label,
                    const Rational& self_int) {
  require_fresh_label(model, label);
  const size_t n = model.dim();
  model.basis.push_back(label);
  for (auto& row : model.form.entries) row.push_back(Rational(0));
  model.form.entries.push_back(std::vector<Rational>(n + 1, Rational(0)));
  model.form.entries[n][n] = self_int;
  model.canonical.coords.push_back(Rational(0));
  for (auto& c : model.curves) c.cls.coords.push_back(Rational(0));
  return n;
}

}  // namespace

SurfaceModel seed_p2() { return seed_wps(1); }

SurfaceModel seed_wps(long long n) {
  if (n < 1) throw ValidationError("seed_wps requires n >= 1");
  SurfaceModel model;
  model.basis = {"l"};
  model.form.entries = {{Rational(1, n)}};
  model.canonical = ClassVector(1);
  model.canonical[0] = -(n + 2);
  if (n >= 2) {
    QuotientSingularity s;
    s.r = n;
    s.a = 1;
    s.resolution_chain = {n};
    s.location = "o";
    s.hidden_curves = 1;
    model.singularities.push_back(s);
  }
  return model;
}

SurfaceModel declare_curve(const SurfaceModel& model, const std::string& label,
                           const ClassVector& cls,
                           const std::vector<std::string>& through,
                           bool is_irreducible) {
  SurfaceModel out = model;
  require_fresh_label(out, label);
  if (cls.size() != out.dim())
    throw ValidationError("curve class size does not match basis: " + label);
  out.curves.push_back(CurveRecord{label, cls, is_irreducible});
  for (const auto& loc : through) {
    bool found = false;
    for (auto& s : out.singularities) {
      if (s.location == loc) {
        s.incident_curves.push_back(label);
        found = true;
        break;
      }
    }
    if (!found)
      throw ValidationError("unknown singularity location: " + loc);
  }
  return out;
}

SurfaceModel blow_up(const SurfaceModel& model, const PointSpec& p) {
  if (p.label.empty()) throw ValidationError("blow-up point needs a label");
  for (const auto& s : model.singularities)
    if (s.location == p.label)
      throw ValidationError(
          "blow-up at a recorded singularity: use weighted_blow_up_11");
  if (p.is_general && !p.incidences.empty())
    throw ValidationError("general point cannot have incidences");

  // A blow-up at a recorded smooth blow-down point is the exact inverse of
  // that contraction.
  for (size_t i = 0; i < model.smooth_blowdowns.size(); ++i) {
    if (model.smooth_blowdowns[i].first != p.label) continue;
    if (!p.incidences.empty())
      throw ValidationError(
          "blow-up of a blow-down point takes no incidences (the curve "
          "classes already encode them)");
    SurfaceModel out = model;
    const std::string curve_label = out.smooth_blowdowns[i].second;
    out.smooth_blowdowns.erase(out.smooth_blowdowns.begin() + i);
    auto it = std::find(out.contracted.begin(), out.contracted.end(),
                        curve_label);
    if (it == out.contracted.end())
      throw ValidationError("blow-down record without contracted curve: " +
                            curve_label);
    out.contracted.erase(it);
    return out;
  }

  for (const auto& [curve_label, mult] : p.incidences) {
    if (!model.has_curve(curve_label))
      throw ValidationError("incidence on unknown curve: " + curve_label);
    if (model.is_contracted(curve_label))
      throw ValidationError("blow-up of a point on a contracted curve: " +
                            curve_label);
    if (mult < 1)
      throw ValidationError("incidence multiplicity must be positive");
  }

  SurfaceModel out = model;
  const std::string exc =
      p.exceptional_label.empty() ? "E_" + p.label : p.exceptional_label;
  size_t idx = extend_basis(out, exc, Rational(-1));
  out.canonical[idx] += 1;  // K -> K + E
  for (const auto& [curve_label, mult] : p.incidences)
    out.curve_mut(curve_label).cls[idx] -= mult;
  out.curves.push_back(CurveRecord{exc, out.basis_class(exc), true});
  return out;
}

SurfaceModel weighted_blow_up_11(const SurfaceModel& model,
                                 const std::string& singularity_location,
                                 const std::string& exceptional_label) {
  size_t sing_index = model.singularities.size();
  for (size_t i = 0; i < model.singularities.size(); ++i)
    if (model.singularities[i].location == singularity_location)
      sing_index = i;
  if (sing_index == model.singularities.size())
    throw ValidationError("unknown singularity location: " +
                          singularity_location);
  const QuotientSingularity sing = model.singularities[sing_index];
  if (sing.a != 1)
    throw ValidationError("general weighted blow-ups out of scope");
  for (const auto& c : sing.incident_curves)
    if (model.is_contracted(c))
      throw ValidationError("incident curve already contracted: " + c);

  SurfaceModel out = model;
  out.singularities.erase(out.singularities.begin() + sing_index);
  const std::string exc = exceptional_label.empty()
                              ? "E_" + singularity_location
                              : exceptional_label;
  size_t idx = extend_basis(out, exc, Rational(-sing.r));
  // K -> K + (2/r - 1) E; crepant when r = 2.
  out.canonical[idx] += Rational(2, sing.r) - 1;
  // Each declared transverse branch: strict transform = pullback - (1/r)E,
  // so C~ . E = 1 and C~^2 = C^2 - 1/r.
  for (const auto& curve_label : sing.incident_curves)
    out.curve_mut(curve_label).cls[idx] -= Rational(1, sing.r);
  out.curves.push_back(CurveRecord{exc, out.basis_class(exc), true});
  return out;
}

std::vector<long long> hj_expand(long long r, long long a) {
  if (!(0 < a && a < r)) throw ValidationError("hj_expand requires 0 < a < r");
  if (std::gcd(r, a) != 1)
    throw ValidationError("hj_expand requires gcd(r, a) = 1");
  std::vector<long long> chain;
  while (a > 0) {
    long long q = (r + a - 1) / a;  // ceil(r / a)
    chain.push_back(q);
    long long next_a = q * a - r;
    r = a;
    a = next_a;
  }
  return chain;
}

std::pair<long long, long long> hj_evaluate(
    const std::vector<long long>& chain) {
  if (chain.empty()) throw ValidationError("empty continued-fraction chain");
  for (long long e : chain)
    if (e < 2)
      throw ValidationError("continued-fraction entries must be >= 2");
  Rational x(chain.back());
  for (size_t i = chain.size() - 1; i-- > 0;)
    x = Rational(chain[i]) - 1 / x;
  Int num = numerator(x), den = denominator(x);
  return {num.convert_to<long long>(), den.convert_to<long long>()};
}

bool same_singularity_type(long long r1, long long a1, long long r2,
                           long long a2) {
  if (r1 != r2) return false;
  if (r1 == 1) return true;
  a1 %= r1;
  a2 %= r1;
  return a1 == a2 || (a1 * a2) % r1 == 1 % r1;
}

namespace {

struct ChainComponent {
  std::vector<std::string> ordered;  // curve labels along the chain
};

// Splits the curve set into connected components under nonzero pairing and
// orders each as a path. Throws when a component is not a path.
std::vector<ChainComponent> chain_components(
    const SurfaceModel& model, const std::vector<std::string>& labels) {
  const size_t n = labels.size();
  std::vector<std::vector<size_t>> adj(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (pair(model, labels[i], labels[j]) != 0) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  for (size_t i = 0; i < n; ++i)
    if (adj[i].size() > 2)
      throw ValidationError("only chain contractions supported");

  std::vector<bool> used(n, false);
  std::vector<ChainComponent> components;
  for (size_t start = 0; start < n; ++start) {
    if (used[start]) continue;
    // Walk to an endpoint of the component containing `start`.
    size_t endpoint = start, prev = n;
    for (size_t guard = 0; guard <= n; ++guard) {
      size_t next = n;
      for (size_t nb : adj[endpoint])
        if (nb != prev) {
          next = nb;
          break;
        }
      if (next == n) break;
      if (next == start)
        throw ValidationError("only chain contractions supported");  // cycle
      prev = endpoint;
      endpoint = next;
      if (guard == n)
        throw ValidationError("only chain contractions supported");
    }
    // Walk the path from the endpoint.
    ChainComponent comp;
    size_t cur = endpoint;
    prev = n;
    while (true) {
      used[cur] = true;
      comp.ordered.push_back(labels[cur]);
      size_t next = n;
      for (size_t nb : adj[cur])
        if (nb != prev) {
          next = nb;
          break;
        }
      if (next == n) break;
      if (used[next])
        throw ValidationError("only chain contractions supported");  // cycle
      prev = cur;
      cur = next;
    }
    // Deterministic orientation: start from whichever endpoint comes first
    // in the caller's label order.
    size_t first_pos = 0, last_pos = 0;
    for (size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == comp.ordered.front()) first_pos = i;
      if (labels[i] == comp.ordered.back()) last_pos = i;
    }
    if (last_pos < first_pos)
      std::reverse(comp.ordered.begin(), comp.ordered.end());
    components.push_back(std::move(comp));
  }
  return components;
}

}  // namespace

SurfaceModel contract(const SurfaceModel& model,
                      const std::vector<std::string>& curves) {
  if (curves.empty()) throw ValidationError("contract needs at least one curve");
  std::set<std::string> dedup(curves.begin(), curves.end());
  if (dedup.size() != curves.size())
    throw ValidationError("duplicate curve in contraction");
  for (const auto& label : curves) {
    const CurveRecord& c = model.curve(label);
    if (!c.is_irreducible)
      throw ValidationError("cannot contract reducible curve: " + label);
    if (model.is_contracted(label))
      throw ValidationError("curve already contracted: " + label);
  }
  if (!is_negative_definite(model, curves))
    throw ValidationError("contracted configuration is not negative definite");

  SurfaceModel out = model;
  for (const auto& comp : chain_components(model, curves)) {
    // Residual 1/r(1,1) singularities on member curves: resolved, the strict
    // transform of the member has self-intersection C^2 - 1/r and the hidden
    // (-r)-curve extends the chain outward at that member's end.
    std::optional<long long> front_ext, back_ext;
    int consumed_hidden = 0;
    std::vector<Rational> adjusted;
    std::set<std::string> consumed_locations;
    for (size_t i = 0; i < comp.ordered.size(); ++i) {
      const std::string& label = comp.ordered[i];
      Rational self = pair(model, label, label);
      for (const auto& s : model.singularities) {
        if (std::find(s.incident_curves.begin(), s.incident_curves.end(),
                      label) == s.incident_curves.end())
          continue;
        if (!consumed_locations.insert(s.location).second)
          throw ValidationError(
              "contraction of two curves through one singular point is not "
              "supported");
        if (s.a != 1)
          throw ValidationError("general weighted blow-ups out of scope");
        bool is_front = (i == 0), is_back = (i + 1 == comp.ordered.size());
        if (!is_front && !is_back)
          throw ValidationError("only chain contractions supported");
        self -= Rational(1, s.r);
        consumed_hidden += s.hidden_curves;
        // Prefer extending at the free end; a single-curve chain extends at
        // the back (so a seed curve of class l - ... yields chain [m, n]).
        if (is_back) {
          if (back_ext) throw ValidationError("only chain contractions supported");
          back_ext = s.r;
        } else {
          if (front_ext) throw ValidationError("only chain contractions supported");
          front_ext = s.r;
        }
        // Consume the singularity record.
        auto& sings = out.singularities;
        for (size_t k = 0; k < sings.size(); ++k)
          if (sings[k].location == s.location) {
            sings.erase(sings.begin() + k);
            break;
          }
      }
      if (denominator(self) != 1)
        throw ValidationError("only chain contractions supported");
      adjusted.push_back(self);
    }

    std::vector<long long> chain;
    if (front_ext) chain.push_back(*front_ext);
    for (const auto& s : adjusted) {
      Int e = -numerator(s);
      if (e < 1) throw ValidationError("only chain contractions supported");
      chain.push_back(e.convert_to<long long>());
    }
    if (back_ext) chain.push_back(*back_ext);

    if (chain.size() == 1 && chain[0] == 1) {
      // Single (-1)-curve: smooth blow-down, no singularity.
      out.smooth_blowdowns.emplace_back("q_" + comp.ordered.front(),
                                        comp.ordered.front());
    } else {
      auto [r, a] = hj_evaluate(chain);
      QuotientSingularity s;
      s.r = r;
      s.a = a;
      s.resolution_chain = chain;
      std::string loc = "q";
      for (const auto& label : comp.ordered) loc += "_" + label;
      s.location = loc;
      s.hidden_curves = consumed_hidden;
      out.singularities.push_back(s);
    }
    for (const auto& label : comp.ordered) out.contracted.push_back(label);
  }
  return out;
}

CurveCount curve_count_check(long long n, long long degree,
                             long long mult_general, long long num_general,
                             long long num_line_pts) {
  if (n < 1 || degree < 0 || mult_general < 0 || num_general < 0 ||
      num_line_pts < 0)
    throw ValidationError("curve_count_check: invalid arguments");
  CurveCount out;
  out.conditions =
      num_general * mult_general * (mult_general + 1) / 2 + num_line_pts;
  long long dim = 0;
  long long terms = std::max<long long>(mult_general, 1);
  for (long long j = 0; j < terms; ++j)
    dim += std::max<long long>(degree - j * n + 1, 0);
  out.sublinear_dim = dim - 1;
  out.exists = out.sublinear_dim >= out.conditions;
  return out;
}

}  // namespace kdelta
