#pragma once

// Exhaustive identity sweeps over bounded parameter ranges.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "projgraft/complex.hpp"
#include "projgraft/errors.hpp"
#include "projgraft/oracle.hpp"
#include "projgraft/surface.hpp"
#include "projgraft/torus.hpp"

namespace projgraft {

/// Literal checks the identities exactly as stated. Corrected applies the
/// sign and label repairs that make them consistent with the fixed twist
/// convention (see README).
enum class Reading { Literal, Corrected };

inline const char* to_string(Reading r) { return r == Reading::Literal ? "literal" : "corrected"; }

struct SuiteParams {
  std::int64_t k_max = -1;  // -1 selects the suite's own default
  std::int64_t range = 5;
  std::int64_t trials = 100;
  std::uint64_t seed = 7;
  std::int64_t m = 3;
  std::int64_t fan_length = 6;
  std::int64_t l0 = 1;
  Reading reading = Reading::Literal;
};

struct Instance {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  Reading reading = Reading::Literal;
  std::vector<Instance> instances;

  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(instances.begin(), instances.end(), [](const Instance& i) { return !i.pass; }));
  }
  bool passed() const { return failures() == 0; }

  void add(std::string name, bool pass, std::string detail = {}) {
    instances.push_back({std::move(name), pass, std::move(detail)});
  }

  /// One summary line, then one line per failing instance.
  std::string text() const {
    std::ostringstream os;
    os << "suite " << suite << " (" << to_string(reading) << "): " << instances.size() - failures() << "/"
       << instances.size() << " passed\n";
    for (const auto& i : instances) {
      if (!i.pass) os << "FAIL " << i.name << ": " << i.detail << "\n";
    }
    return os.str();
  }

  nlohmann::json to_json() const {
    nlohmann::json inst = nlohmann::json::array();
    for (const auto& i : instances) inst.push_back({{"name", i.name}, {"pass", i.pass}, {"detail", i.detail}});
    return {{"suite", suite},
            {"reading", to_string(reading)},
            {"passed", passed()},
            {"total", instances.size()},
            {"failures", failures()},
            {"instances", std::move(inst)}};
  }
};

/// Standard configuration: lambda meets every chart in (2,0), gamma in (1,0).
inline CheckedConfiguration standard_configuration(int charts = 1) {
  SurfaceModel model;
  model.genus = 2;
  model.holonomy = "rho";
  CurveComponent lam{{{"lam", 1}}, {}, 1};
  CurveComponent gam{{{"gam", 1}}, {}, 1};
  for (int i = 1; i <= charts; ++i) {
    const std::string name = "b" + std::to_string(i);
    model.charts.push_back(name);
    lam.charts[name] = {2, 0};
    gam.charts[name] = {1, 0};
  }
  return validate_configuration(std::move(model), {lam}, gam);
}

inline std::vector<TorusClass> primitive_classes(std::int64_t range) {
  std::vector<TorusClass> out;
  for (std::int64_t p = -range; p <= range; ++p) {
    for (std::int64_t q = -range; q <= range; ++q) {
      const TorusClass c{p, q};
      if (c.is_primitive()) out.push_back(c);
    }
  }
  return out;
}

namespace suites {

inline std::string show(TorusClass c) { return "(" + c.str() + ")"; }

inline void flatsharp(SuiteReport& r, const SuiteParams& p) {
  const std::int64_t kmax = p.k_max < 0 ? 10 : p.k_max;
  for (std::int64_t k = 1; k <= kmax; ++k) {
    const TorusClass lam{0, 2 * k};
    const TorusClass two_gam{2, -2 * k};
    const TorusClass got = resolve(lam, two_gam, Surgery::Flat);
    const TorusClass chart = spiral_graft_chart(lam, TorusClass{1, -k});
    const bool ok = got == TorusClass{2, 0} && chart == TorusClass{2, 0};
    r.add("k=" + std::to_string(k), ok, "flat " + show(got) + ", spiral graft " + show(chart) + ", expected (2,0)");
  }
}

inline void sharp_flat(SuiteReport& r, const SuiteParams& p) {
  const std::int64_t kmax = p.k_max < 0 ? 8 : p.k_max;
  const TorusClass lam{2, 0};
  const TorusClass two_gam{2, 0};
  for (std::int64_t k = -kmax; k <= kmax; ++k) {
    const TorusClass want{4, 4 * k};
    // The corrected reading mirrors the surgery mode for negative twists.
    const bool mirror = p.reading == Reading::Corrected && k < 0;
    const Surgery sharp = mirror ? Surgery::Flat : Surgery::Sharp;
    const Surgery flat = mirror ? Surgery::Sharp : Surgery::Flat;
    const TorusClass e1 = dehn_twist(resolve(lam, two_gam, Surgery::Sharp), kMeridian, k);
    const TorusClass e2 = resolve(lam, dehn_twist(two_gam, kMeridian, 2 * k), sharp);
    const TorusClass e3 = resolve(dehn_twist(lam, kMeridian, 2 * k), two_gam, flat);
    const TorusClass e4 = resolve(dehn_twist(lam, kMeridian, k), dehn_twist(two_gam, kMeridian, k), Surgery::Sharp);
    const bool ok = e1 == want && e2 == want && e3 == want && e4 == want;
    r.add("four-way k=" + std::to_string(k), ok,
          show(e1) + " " + show(e2) + " " + show(e3) + " " + show(e4) + ", expected " + show(want));
    const TorusClass a = resolve(lam, dehn_twist(two_gam, kMeridian, k), sharp);
    const TorusClass b = resolve(dehn_twist(lam, kMeridian, k), two_gam, flat);
    r.add("commute k=" + std::to_string(k), sign_normalized(a) == sign_normalized(b), show(a) + " vs " + show(b));
  }
  std::int64_t checked = 0;
  std::string bad;
  for (const TorusClass a : primitive_classes(p.range)) {
    for (const TorusClass b : primitive_classes(p.range)) {
      ++checked;
      const TorusClass s = resolve(a, b, Surgery::Sharp);
      const TorusClass f = resolve(b, a, Surgery::Flat);
      if (sign_normalized(s) != sign_normalized(f) && bad.empty()) bad = show(a) + show(b) + ": " + show(s) + " vs " + show(f);
    }
  }
  r.add("switch over " + std::to_string(checked) + " pairs", bad.empty(), bad);
}

inline void dehn_twist_suite(SuiteReport& r, const SuiteParams& p) {
  const std::int64_t kmax = p.k_max < 0 ? 6 : p.k_max;
  const CheckedConfiguration cfg = standard_configuration(1);
  const SurfaceModel& model = cfg.model();
  // Literal pairing: right with T_gamma, left with its inverse.
  const std::int64_t right_eps = p.reading == Reading::Literal ? 1 : -1;
  for (std::int64_t k = 1; k <= kmax; ++k) {
    const Structure sigma = twist_about_meridian(model, cfg.seed(), "b1", k);
    for (const bool right : {true, false}) {
      const CurveComponent g = twist_about_meridian(model, cfg.gamma(), "b1", right ? k - 1 : k + 1);
      const std::string name = std::string(right ? "right" : "left") + " k=" + std::to_string(k);
      const Admissibility a = is_admissible(model, sigma, g);
      const std::int64_t hits = geometric_intersection(chart_totals(sigma.real_curves()).at("b1"), g.in_chart("b1"));
      const SpiralClass::Kind want = right ? SpiralClass::Kind::Right : SpiralClass::Kind::Left;
      if (a.route != Route::Spiraling || hits != 2 || a.spiral.direction("b1") != want) {
        r.add(name, false, "precondition failed: route " + std::string(to_string(a.route)) + ", |lambda^gamma| = " + std::to_string(hits));
        continue;
      }
      const std::int64_t eps = right ? right_eps : -right_eps;
      const Structure grafted = graft_along(model, sigma, g);
      const Structure twisted = twist_about_curve(model, sigma, g, eps);
      r.add(name, grafted.key() == twisted.key(),
            "graft " + grafted.key() + " vs T^" + std::to_string(eps) + " " + twisted.key());
    }
  }
}

inline SurfaceMulticurve random_even_multicurve(std::mt19937_64& rng, const SurfaceModel& model) {
  // Raw engine output keeps the stream identical across standard libraries.
  static const TorusClass kDirections[] = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, -2}, {3, 2}};
  const TorusClass dir = kDirections[rng() % std::size(kDirections)];
  const std::size_t count = 1 + rng() % 6;
  std::vector<CurveComponent> comps;
  for (std::size_t i = 0; i < count; ++i) {
    CurveComponent c;
    c.word["a" + std::to_string(rng() % 8)] = 1;
    if (rng() % 3 == 0) c.charts[model.charts.front()] = dir;
    c.multiplicity = 2 * static_cast<std::int64_t>(1 + rng() % 4);
    comps.push_back(std::move(c));
  }
  return make_multicurve(model, std::move(comps));
}

inline void goldman(SuiteReport& r, const SuiteParams& p) {
  SurfaceModel model;
  model.charts = {"b1"};
  std::mt19937_64 rng(p.seed);
  for (std::int64_t t = 0; t < p.trials; ++t) {
    const SurfaceMulticurve lambda = random_even_multicurve(rng, model);
    const Structure original(model.holonomy, lambda);
    const SurfaceMulticurve sigma = goldman_decompose(lambda);
    const Structure rebuilt = graft_standard(model, model.holonomy, sigma);
    SurfaceMulticurve odd = lambda;
    const std::size_t victim = rng() % odd.components.size();
    odd.components[victim].multiplicity += 1;
    bool raised = false;
    try {
      goldman_decompose(odd);
    } catch (const OddMultiplicity&) {
      raised = true;
    }
    const bool ok = rebuilt.key() == original.key() && raised;
    r.add("trial " + std::to_string(t), ok,
          original.key() + " -> " + rebuilt.key() + (raised ? "" : "; odd multiplicity not rejected"));
  }
}

inline void iterated(SuiteReport& r, const SuiteParams& p) {
  const std::int64_t kmax = p.k_max < 0 ? 8 : p.k_max;
  const CheckedConfiguration cfg = standard_configuration(1);
  const LeftExponent left = p.reading == Reading::Literal ? LeftExponent::Doubled : LeftExponent::Sum;
  for (std::int64_t m = -kmax; m <= kmax; ++m) {
    for (std::int64_t l = -kmax; l <= kmax; ++l) {
      const GraftComparison c = compare_iterated(cfg, "b1", m, l, left);
      r.add("m=" + std::to_string(m) + " k=" + std::to_string(c.k) + " l=" + std::to_string(l), c.equal,
            c.note.empty() ? c.left_key + " vs " + c.right_key : c.note);
    }
  }
  const auto witnesses = common_grafts(cfg, "b1", p.l0, kmax, left);
  const std::size_t want = static_cast<std::size_t>(2 * kmax + 1);
  r.add("witnesses l0=" + std::to_string(p.l0), witnesses.size() == want,
        std::to_string(witnesses.size()) + " of " + std::to_string(want));
}

inline void two_meridian(SuiteReport& r, const SuiteParams& p) {
  const std::int64_t kmax = p.k_max < 0 ? 5 : p.k_max;
  const CheckedConfiguration cfg = standard_configuration(2);
  const SurfaceModel& model = cfg.model();
  for (std::int64_t k = 1; k <= kmax; ++k) {
    for (std::int64_t l = 0; l < k; ++l) {
      const std::string name = "k=" + std::to_string(k) + " l=" + std::to_string(l);
      try {
        const CurveComponent both =
            twist_about_meridian(model, twist_about_meridian(model, cfg.gamma(), "b2", l), "b1", k);
        const Structure left = graft_along(model, cfg.seed(), both);
        const Structure right = graft_along(model, twist_about_meridian(model, cfg.seed(), "b1", k),
                                            twist_about_meridian(model, cfg.gamma(), "b2", l));
        r.add(name, left.key() == right.key(), left.key() + " vs " + right.key());
      } catch (const DomainError& e) {
        r.add(name, false, e.what());
      }
    }
  }
}

inline void oracle_suite(SuiteReport& r, const SuiteParams& p) {
  const std::vector<TorusClass> prims = primitive_classes(p.range);
  auto check = [&r](TorusClass a, std::size_t ca, TorusClass b, std::size_t cb) {
    const auto A = oracle::oracle_draw(a, ca, 0);
    const auto B = oracle::oracle_draw(b, cb, 1);
    const TorusClass ta = static_cast<std::int64_t>(ca) * a;
    const TorusClass tb = static_cast<std::int64_t>(cb) * b;
    const auto crossings = oracle::oracle_crossings(A, B);
    oracle::IntersectionCount count;
    for (const auto& x : crossings) {
      ++count.geometric;
      count.algebraic += x.index;
    }
    std::string why;
    if (count.algebraic != algebraic_intersection(ta, tb)) why += " algebraic " + std::to_string(count.algebraic);
    if (count.geometric != geometric_intersection(ta, tb)) why += " geometric " + std::to_string(count.geometric);
    for (const Surgery mode : {Surgery::Sharp, Surgery::Flat}) {
      const TorusClass got = oracle::oracle_resolve(A, B, crossings, mode).total;
      if (got != resolve(ta, tb, mode)) why += std::string(" ") + to_string(mode) + " " + show(got);
    }
    r.add(show(ta) + show(tb), why.empty(), why);
  };
  for (const TorusClass a : prims) {
    for (const TorusClass b : prims) check(a, 1, b, 1);
  }
  // Parallel copies on a smaller window.
  const std::vector<TorusClass> small = primitive_classes(std::min<std::int64_t>(p.range, 2));
  for (const TorusClass a : small) {
    for (const TorusClass b : small) {
      check(a, 2, b, 1);
      check(a, 1, b, 2);
      check(a, 2, b, 2);
    }
  }
}

inline void fan(SuiteReport& r, const SuiteParams& p) {
  const CheckedConfiguration cfg = standard_configuration(1);
  const FanReport f = standard_fan(cfg, "b1", p.fan_length, p.m);
  for (std::size_t l = 0; l < f.keys.size(); ++l) {
    r.add("l=" + std::to_string(l), f.keys[l] == f.keys.front(), f.keys[l]);
  }
  r.add("common key", f.common, f.common ? f.common_key : "keys differ");
}

inline void twist_formula(SuiteReport& r, const SuiteParams& p) {
  const std::int64_t kmax = p.k_max < 0 ? 5 : p.k_max;
  for (const TorusClass a : primitive_classes(p.range)) {
    for (const TorusClass b : primitive_classes(p.range)) {
      std::string why;
      const std::int64_t d = algebraic_intersection(a, b);
      for (std::int64_t k = -kmax; k <= kmax; ++k) {
        const std::int64_t got = geometric_intersection(dehn_twist(b, a, k), b);
        if (got != detail::checked_abs(k) * d * d) why += " k=" + std::to_string(k) + ":" + std::to_string(got);
      }
      r.add("a=" + show(a) + " b=" + show(b), why.empty(), why);
    }
  }
}

}  // namespace suites

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"flatsharp", "sharp_flat", "dehn_twist", "goldman", "iterated",
                                              "two_meridian", "oracle", "fan", "twist_formula"};
  return names;
}

inline SuiteReport verify_suite(const std::string& name, const SuiteParams& params = {}) {
  static const std::map<std::string, std::function<void(SuiteReport&, const SuiteParams&)>> table{
      {"flatsharp", suites::flatsharp},   {"sharp_flat", suites::sharp_flat},
      {"dehn_twist", suites::dehn_twist_suite}, {"goldman", suites::goldman},
      {"iterated", suites::iterated},     {"two_meridian", suites::two_meridian},
      {"oracle", suites::oracle_suite},   {"fan", suites::fan},
      {"twist_formula", suites::twist_formula}};
  auto it = table.find(name);
  if (it == table.end()) throw UnknownSuite(name);
  SuiteReport r;
  r.suite = name;
  r.reading = params.reading;
  it->second(r, params);
  return r;
}

}  // namespace projgraft
