#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kdelta/builder.hpp"
#include "kdelta/catalog.hpp"
#include "kdelta/zariski.hpp"

#include <algorithm>
#include <random>

using namespace kdelta;

namespace {

PiecewiseQuadratic quad_on(Rational lo, Rational hi, Rational c0, Rational c1,
                           Rational c2) {
  PiecewiseQuadratic f;
  f.segments.push_back(PiecewiseQuadratic::Segment{lo, hi, c0, c1, c2});
  return f;
}

}  // namespace

TEST_CASE("piecewise quadratic evaluation and integration") {
  SUBCASE("single quadratic") {
    PiecewiseQuadratic f = quad_on(0, 1, 0, 0, 1);  // t^2 on [0,1]
    CHECK(f.eval(Rational(1, 2)) == Rational(1, 4));
    CHECK(integrate(f, 0, 1) == Rational(1, 3));
    CHECK(integrate(f, Rational(1, 4), Rational(1, 2)) ==
          (Rational(1, 24) - Rational(1, 192)));
  }
  SUBCASE("zero function integrates to zero") {
    PiecewiseQuadratic f = quad_on(0, 5, 0, 0, 0);
    CHECK(integrate(f, 0, 5) == 0);
  }
  SUBCASE("known integrals for the S326 L1 volume") {
    PiecewiseQuadratic f1 =
        quad_on(0, Rational(3, 10), Rational(2, 5), 0, Rational(-5, 3));
    CHECK(integrate(f1, 0, Rational(3, 10)) == Rational(21, 200));
    // (4/5 - t)^2 = 16/25 - (8/5)t + t^2
    PiecewiseQuadratic f2 = quad_on(Rational(3, 10), Rational(4, 5),
                                    Rational(16, 25), Rational(-8, 5), 1);
    CHECK(integrate(f2, Rational(3, 10), Rational(4, 5)) == Rational(1, 24));
  }
  SUBCASE("malformed segment sequences are rejected") {
    PiecewiseQuadratic f;
    f.segments.push_back(PiecewiseQuadratic::Segment{1, 0, 0, 0, 0});
    CHECK_THROWS_AS(f.eval(Rational(1, 2)), ValidationError);
    PiecewiseQuadratic g;
    CHECK_THROWS_AS(integrate(g, 0, 1), ValidationError);
    PiecewiseQuadratic h = quad_on(0, 1, 0, 0, 1);
    CHECK_THROWS_AS(integrate(h, 0, 2), ValidationError);
    CHECK_THROWS_AS(integrate(h, 1, 0), ValidationError);
  }
}

TEST_CASE("zariski_decompose") {
  SUBCASE("nef class decomposes trivially") {
    SurfaceModel m = seed_p2();
    m = blow_up(m, PointSpec{"p", {}, true, ""});
    auto [p, n] = zariski_decompose(m, m.anticanonical());
    CHECK(n.empty());
    CHECK(p == m.anticanonical());
  }
  SUBCASE("two-lines model with n = m = 3: N = (1/2)(Ln + Lm)") {
    CatalogConfig cfg = build_config("P2_two_lines(3,3)");
    const SurfaceModel& m = cfg.model("two_lines").model;
    auto [p, n] = zariski_decompose(m, m.anticanonical());
    REQUIRE(n.size() == 2);
    CHECK(n.at("Ln") == Rational(1, 2));
    CHECK(n.at("Lm") == Rational(1, 2));
    CHECK(pair(m, p, m.curve("Ln").cls) == 0);
    CHECK(pair(m, p, m.curve("Lm").cls) == 0);
    // P + N = D
    ClassVector rebuilt = p + Rational(1, 2) * m.curve("Ln").cls +
                          Rational(1, 2) * m.curve("Lm").cls;
    CHECK(rebuilt == m.anticanonical());
  }
  SUBCASE("t-slice of the S326 S1 walk: N = (2/5) C1 at t = 1/2") {
    CatalogConfig cfg = build_config("S326");
    const SurfaceModel& m = cfg.model("S1").model;
    ClassVector d = anticanonical_pullback(m) -
                    Rational(1, 2) * m.curve("L1").cls;
    auto [p, n] = zariski_decompose(m, d);
    REQUIRE(n.size() == 1);
    CHECK(n.at("C1") == Rational(2, 5));
    CHECK(pair(m, p, m.curve("C1").cls) == 0);
  }
  SUBCASE("insertion order does not change the decomposition") {
    CatalogConfig cfg = build_config("P2_two_lines(4,3)");
    const SurfaceModel& m = cfg.model("two_lines").model;
    std::vector<std::string> order;
    for (const auto& c : m.curves) order.push_back(c.label);
    auto [p0, n0] = zariski_decompose(m, m.anticanonical());
    std::mt19937 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(order.begin(), order.end(), rng);
      auto [p1, n1] = zariski_decompose(m, m.anticanonical(), order);
      CHECK(p1 == p0);
      CHECK(n1 == n0);
    }
  }
  SUBCASE("class outside the pseudoeffective cone is rejected") {
    CatalogConfig cfg = build_config("P2_two_lines(3,2)");
    const SurfaceModel& m = cfg.model("two_lines").model;
    // -K - 5 Ln is far outside: the fixpoint support loses definiteness.
    ClassVector d = m.anticanonical() - Rational(5) * m.curve("Ln").cls;
    CHECK_THROWS_WITH_AS(zariski_decompose(m, d),
                         "not pseudoeffective over tracked cone",
                         ComputationError);
  }
}

TEST_CASE("zariski_path chamber walks") {
  SUBCASE("S326 flag L1: breakpoints {0, 3/10, 4/5}") {
    CatalogConfig cfg = build_config("S326");
    ZariskiPath path = zariski_path(cfg.model("S1").model, "L1");
    CHECK(path.tau == Rational(4, 5));
    CHECK(path.breakpoints() ==
          std::vector<Rational>{0, Rational(3, 10), Rational(4, 5)});
    CHECK(path.vol0 == Rational(2, 5));

    PiecewiseQuadratic vol = volume_function(path);
    // 2/5 - (5/3) t^2 on [0, 3/10]
    CHECK(vol.segments[0].c0 == Rational(2, 5));
    CHECK(vol.segments[0].c1 == 0);
    CHECK(vol.segments[0].c2 == Rational(-5, 3));
    // (4/5 - t)^2 on [3/10, 4/5]
    CHECK(vol.segments[1].c0 == Rational(16, 25));
    CHECK(vol.segments[1].c1 == Rational(-8, 5));
    CHECK(vol.segments[1].c2 == 1);
    CHECK(vol.eval(path.tau) == 0);
  }
  SUBCASE("S427 flag L1: breakpoints {0, 4/35, 5/7}") {
    CatalogConfig cfg = build_config("S427");
    ZariskiPath path = zariski_path(cfg.model("S1").model, "L1");
    CHECK(path.tau == Rational(5, 7));
    CHECK(path.breakpoints() ==
          std::vector<Rational>{0, Rational(4, 35), Rational(5, 7)});
  }
  SUBCASE("Snm_n2 flag L: tau = 1/(n+1) + (n+1)/(mn-1)") {
    for (long long m = 2; m <= 3; ++m)
      for (long long n = m; n <= 4; ++n) {
        CatalogConfig cfg = build_config("Snm_n2(" + std::to_string(n) + "," +
                                         std::to_string(m) + ")");
        ZariskiPath path = zariski_path(cfg.models[0].model, "L");
        CHECK(path.tau ==
              Rational(1, n + 1) + Rational(n + 1, m * n - 1));
      }
  }
  SUBCASE("Sn2_flagE(5) walk: supports grow {} -> {Lt} -> {Lt, Ct}") {
    CatalogConfig cfg = build_config("Sn2_flagE(5)");
    ZariskiPath path = zariski_path(cfg.models[0].model, "E");
    REQUIRE(path.segments.size() == 2);
    CHECK(path.breakpoints() ==
          std::vector<Rational>{0, Rational(1, 3), Rational(2, 3)});
    CHECK(path.segments[0].negative_support == std::vector<std::string>{"Lt"});
    // Lt coefficient t/2 on the first chamber
    CHECK(path.segments[0].coefficients.at("Lt").a0 == 0);
    CHECK(path.segments[0].coefficients.at("Lt").a1 == Rational(1, 2));
    // volume on the last chamber: (9/2)(2/3 - t)^2 = 2 - 6t + (9/2)t^2
    PiecewiseQuadratic vol = volume_function(path);
    CHECK(vol.segments[1].c0 == 2);
    CHECK(vol.segments[1].c1 == -6);
    CHECK(vol.segments[1].c2 == Rational(9, 2));
    CHECK(path.vol0 == 1);
  }
  SUBCASE("volume is continuous and non-increasing across breakpoints") {
    for (const auto& name : {"S326", "S427", "Snm_n2(4,3)", "Sn3_flagE(4)"}) {
      CatalogConfig cfg = build_config(name);
      for (const auto& cm : cfg.models) {
        for (const auto& f : cm.flags) {
          ZariskiPath path = zariski_path(cm.model, f.curve);
          PiecewiseQuadratic vol = volume_function(path);
          CHECK(vol.eval(Rational(0)) == path.vol0);
          CHECK(vol.eval(path.tau) == 0);
          Rational prev = path.vol0;
          for (const auto& seg : vol.segments) {
            // continuity is enforced by the PiecewiseQuadratic invariant;
            // check monotone non-increase at segment ends
            Rational at_lo = seg.eval(seg.lo);
            Rational at_hi = seg.eval(seg.hi);
            CHECK(at_lo <= prev);
            CHECK(at_hi <= at_lo);
            prev = at_hi;
          }
        }
      }
    }
  }
  SUBCASE("positive part pairs nonnegatively with every curve") {
    CatalogConfig cfg = build_config("Snm_n2(3,2)");
    const SurfaceModel& m = cfg.models[0].model;
    ZariskiPath path = zariski_path(m, "L");
    for (const auto& seg : path.segments) {
      for (const auto& c : m.curves) {
        CHECK(seg.positive_dot(m, c.cls).eval(seg.t_lo) >= 0);
        CHECK(seg.positive_dot(m, c.cls).eval(seg.t_hi) >= 0);
      }
      // P . N = 0 on the chamber
      for (const auto& [label, fn] : seg.coefficients) {
        CHECK(seg.positive_dot(m, m.curve(label).cls).eval(seg.t_lo) == 0);
        CHECK(seg.positive_dot(m, m.curve(label).cls).eval(seg.t_hi) == 0);
      }
    }
  }
  SUBCASE("the nine-fold simultaneous wall crossing stays exact") {
    // Snm_n2(3,2): all C_i enter the negative part together at t = 4/5.
    CatalogConfig cfg = build_config("Snm_n2(3,2)");
    ZariskiPath path = zariski_path(cfg.models[0].model, "L");
    CHECK(path.breakpoints() ==
          std::vector<Rational>{0, Rational(4, 5), Rational(21, 20)});
    const ZariskiSegment& last = path.segments.back();
    REQUIRE(last.negative_support.size() == 7);  // C1..C5, E1, E2
    for (const auto& [label, fn] : last.coefficients) {
      CHECK(fn.a0 == Rational(-4, 5));
      CHECK(fn.a1 == 1);
    }
  }
  SUBCASE("flag must be a tracked irreducible curve") {
    CatalogConfig cfg = build_config("S326");
    CHECK_THROWS_AS(zariski_path(cfg.model("S1").model, "nope"),
                    ValidationError);
  }
}

TEST_CASE("scaling the start class scales tau and the volume") {
  CatalogConfig cfg = build_config("P2_two_lines(3,2)");
  SurfaceModel m = cfg.model("two_lines").model;
  ZariskiPath base = zariski_path(m, "Ln");

  SurfaceModel scaled = m;
  scaled.canonical = Rational(2) * m.canonical;
  ZariskiPath doubled = zariski_path(scaled, "Ln");

  CHECK(doubled.tau == Rational(2) * base.tau);
  CHECK(doubled.vol0 == Rational(4) * base.vol0);
  // vol_2(2t) = 4 vol_1(t) spot-checked at midpoints of the base chambers
  PiecewiseQuadratic v1 = volume_function(base);
  PiecewiseQuadratic v2 = volume_function(doubled);
  for (const auto& seg : v1.segments) {
    Rational t = (seg.lo + seg.hi) / 2;
    CHECK(v2.eval(2 * t) == Rational(4) * v1.eval(t));
  }
}
