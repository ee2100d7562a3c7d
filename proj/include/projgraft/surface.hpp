#pragma once

// Surfaces with meridian charts, real multicurves and the structures they
// classify. Every operation reduces to torus arithmetic inside the charts;
// outside the charts a curve is an opaque exterior word.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "projgraft/errors.hpp"
#include "projgraft/torus.hpp"

namespace projgraft {

/// Exterior homotopy label: atomic label -> number of passes. Composite
/// labels arise when grafting merges curves.
using Word = std::map<std::string, std::int64_t>;

using ChartClasses = std::map<std::string, TorusClass>;

inline std::string render_word(const Word& w) {
  std::string out;
  for (const auto& [label, n] : w) {
    if (n == 0) continue;
    if (!out.empty()) out += '+';
    out += label;
    if (n != 1) out += '^' + std::to_string(n);
  }
  return out.empty() ? "-" : out;
}

/// Inverse of render_word: "gam^2+lam" -> {gam:2, lam:1}.
inline Word parse_word(const std::string& text) {
  Word w;
  if (text.empty() || text == "-") return w;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '+')) {
    if (part.empty()) throw BadConfiguration("empty atom in label '" + text + "'");
    std::int64_t n = 1;
    const auto caret = part.find('^');
    std::string atom = part.substr(0, caret);
    if (caret != std::string::npos) {
      try {
        std::size_t used = 0;
        n = std::stoll(part.substr(caret + 1), &used);
        if (used != part.size() - caret - 1 || n <= 0) throw std::invalid_argument("count");
      } catch (const std::exception&) {
        throw BadConfiguration("bad repeat count in label '" + text + "'");
      }
    }
    if (atom.empty()) throw BadConfiguration("empty atom in label '" + text + "'");
    w[atom] = detail::checked_add(w[atom], n);
  }
  return w;
}

inline Word add_words(Word a, const Word& b, std::int64_t scale = 1) {
  for (const auto& [label, n] : b) a[label] = detail::checked_add(a[label], detail::checked_mul(scale, n));
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

struct SurfaceModel {
  int genus = 2;
  std::string holonomy = "rho";
  std::vector<std::string> charts;
  /// Unordered pairs of atomic exterior labels whose curves cross outside all
  /// charts. Labels not listed are disjoint or parallel.
  std::set<std::pair<std::string, std::string>> exterior_crossings;
  /// Meridians have trivial holonomy; no operation changes this.
  bool meridian_holonomy_trivial = true;

  bool has_chart(const std::string& name) const {
    return std::find(charts.begin(), charts.end(), name) != charts.end();
  }
  bool crosses(const std::string& a, const std::string& b) const {
    return exterior_crossings.count({std::min(a, b), std::max(a, b)}) != 0;
  }
  void add_crossing(const std::string& a, const std::string& b) { exterior_crossings.insert({std::min(a, b), std::max(a, b)}); }
};

/// One isotopy class of simple closed curve, repeated `multiplicity` times.
struct CurveComponent {
  Word word;
  ChartClasses charts;
  std::int64_t multiplicity = 1;

  std::string label() const { return render_word(word); }
  bool essential() const {
    return !word.empty() || std::any_of(charts.begin(), charts.end(), [](const auto& kv) { return !kv.second.is_zero(); });
  }
  TorusClass in_chart(const std::string& chart) const {
    auto it = charts.find(chart);
    return it == charts.end() ? TorusClass{} : it->second;
  }
};

/// Drops empty chart entries and fixes orientation: the first chart with a
/// nonzero class (in name order) is sign-normalized, the rest follow.
inline CurveComponent oriented(CurveComponent c) {
  std::erase_if(c.charts, [](const auto& kv) { return kv.second.is_zero(); });
  std::erase_if(c.word, [](const auto& kv) { return kv.second == 0; });
  if (!c.charts.empty()) {
    const TorusClass& lead = c.charts.begin()->second;
    if (sign_normalized(lead) != lead) {
      for (auto& [name, cls] : c.charts) cls = -cls;
    }
  }
  return c;
}

struct SurfaceMulticurve {
  std::vector<CurveComponent> components;

  bool empty() const { return components.empty(); }
};

inline void check_charts(const SurfaceModel& model, const CurveComponent& c) {
  for (const auto& [name, cls] : c.charts) {
    if (!model.has_chart(name)) throw UnknownChart(name);
  }
}

inline SurfaceMulticurve make_multicurve(const SurfaceModel& model, std::vector<CurveComponent> comps) {
  SurfaceMulticurve mc;
  for (auto& c : comps) {
    check_charts(model, c);
    if (c.multiplicity < 0) throw BadConfiguration("negative multiplicity on component " + c.label());
    if (c.multiplicity == 0) continue;
    c = oriented(std::move(c));
    if (!c.essential()) throw BadConfiguration("inessential component (empty label and no chart class)");
    mc.components.push_back(std::move(c));
  }
  return mc;
}

/// Total class of the multicurve in each chart, orientation fixed per component.
inline ChartClasses chart_totals(const SurfaceMulticurve& mc) {
  ChartClasses out;
  for (const auto& c : mc.components) {
    for (const auto& [name, cls] : c.charts) out[name] = out[name] + c.multiplicity * cls;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

namespace detail {

struct ChartBlock {
  Word word;
  ChartClasses totals;
};

struct BlockView {
  std::vector<ChartBlock> chart_blocks;
  std::map<Word, std::int64_t> free;
};

/// Groups components that pass through a common chart. Inside a chart the
/// only invariant is the total class: parallel strands of different curves
/// are not distinguished, so a block carries one summed word and one total
/// per chart.
inline BlockView blocks(const SurfaceMulticurve& mc) {
  const std::size_t n = mc.components.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<std::string, std::size_t> first_in_chart;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [name, cls] : mc.components[i].charts) {
      auto [it, fresh] = first_in_chart.emplace(name, i);
      if (!fresh) parent[find(i)] = find(it->second);
    }
  }
  BlockView view;
  std::map<std::size_t, ChartBlock> by_root;
  for (std::size_t i = 0; i < n; ++i) {
    const CurveComponent& c = mc.components[i];
    if (c.charts.empty()) {
      view.free[c.word] = checked_add(view.free[c.word], c.multiplicity);
      continue;
    }
    ChartBlock& b = by_root[find(i)];
    b.word = add_words(b.word, c.word, c.multiplicity);
    for (const auto& [name, cls] : c.charts) b.totals[name] = b.totals[name] + c.multiplicity * cls;
  }
  for (auto& [root, b] : by_root) view.chart_blocks.push_back(std::move(b));
  return view;
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace detail

/// Deterministic normal form; equal iff the multicurves agree up to
/// orientation, component order and multiplicity splitting.
inline std::string canonical_key(const SurfaceMulticurve& mc) {
  const detail::BlockView view = detail::blocks(mc);
  std::vector<std::string> parts;
  for (const auto& b : view.chart_blocks) {
    std::string s = "[" + render_word(b.word);
    for (const auto& [name, cls] : b.totals) {
      if (cls.is_zero()) continue;
      s += " " + name + "=" + sign_normalized(cls).str();
    }
    parts.push_back(s + "]");
  }
  for (const auto& [word, m] : view.free) parts.push_back("(" + render_word(word) + ")x" + std::to_string(m));
  std::sort(parts.begin(), parts.end());
  if (parts.empty()) return "empty";
  std::string key;
  for (const auto& p : parts) {
    if (!key.empty()) key += " ";
    key += p;
  }
  return key;
}

inline std::string digest(const std::string& key) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::uint64_t h = detail::fnv1a(key);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = kHex[h & 0xF];
  return out;
}

/// A projective structure with real holonomy, identified by its real curves.
class Structure {
 public:
  Structure() : key_(canonical_key(real_)) {}
  Structure(std::string holonomy, SurfaceMulticurve real)
      : holonomy_(std::move(holonomy)), real_(std::move(real)), key_(canonical_key(real_)) {}

  const std::string& holonomy() const { return holonomy_; }
  const SurfaceMulticurve& real_curves() const { return real_; }
  const std::string& key() const { return key_; }

  friend bool operator==(const Structure& a, const Structure& b) {
    return a.holonomy_ == b.holonomy_ && a.key_ == b.key_;
  }

 private:
  std::string holonomy_ = "rho";
  SurfaceMulticurve real_;
  std::string key_;
};

struct SpiralClass {
  enum class Kind { Left, Right, NonSpiraling };
  Kind kind = Kind::NonSpiraling;
  std::int64_t turns = 0;

  friend bool operator==(const SpiralClass&, const SpiralClass&) = default;
};

inline const char* to_string(SpiralClass::Kind k) {
  switch (k) {
    case SpiralClass::Kind::Left: return "left";
    case SpiralClass::Kind::Right: return "right";
    default: return "non-spiraling";
  }
}

/// (1,k) is left-spiraling for k > 0 and right-spiraling for k < 0.
inline SpiralClass spiraling_class(TorusClass chart_class) {
  if (chart_class.p != 1 || chart_class.q == 0) return {};
  if (chart_class.q > 0) return {SpiralClass::Kind::Left, chart_class.q};
  return {SpiralClass::Kind::Right, detail::checked_abs(chart_class.q)};
}

/// Configuration that passed validate_configuration. Only that function can
/// make one.
class CheckedConfiguration {
 public:
  const SurfaceModel& model() const { return model_; }
  const SurfaceMulticurve& lambda() const { return lambda_; }
  const CurveComponent& gamma() const { return gamma_; }
  const std::vector<CurveComponent>& extra_grafts() const { return extra_; }
  Structure seed() const { return Structure(model_.holonomy, lambda_); }

 private:
  CheckedConfiguration(SurfaceModel m, SurfaceMulticurve l, CurveComponent g, std::vector<CurveComponent> e)
      : model_(std::move(m)), lambda_(std::move(l)), gamma_(std::move(g)), extra_(std::move(e)) {}
  friend CheckedConfiguration validate_configuration(SurfaceModel, std::vector<CurveComponent>, CurveComponent,
                                                     std::vector<CurveComponent>);

  SurfaceModel model_;
  SurfaceMulticurve lambda_;
  CurveComponent gamma_;
  std::vector<CurveComponent> extra_;
};

/// Checks the standing chart pattern: in every chart the meridian meets λ
/// twice and γ once, and λ misses γ.
inline CheckedConfiguration validate_configuration(SurfaceModel model, std::vector<CurveComponent> lambda,
                                                   CurveComponent gamma, std::vector<CurveComponent> extra = {}) {
  if (model.genus < 2) throw BadConfiguration("genus must be at least 2");
  if (model.charts.empty()) throw BadConfiguration("at least one meridian chart is required");
  if (!model.meridian_holonomy_trivial) throw BadConfiguration("meridians must have trivial holonomy");
  std::set<std::string> seen;
  for (const auto& c : model.charts) {
    if (!seen.insert(c).second) throw BadConfiguration("duplicate chart '" + c + "'");
  }
  SurfaceMulticurve lam = make_multicurve(model, std::move(lambda));
  check_charts(model, gamma);
  if (gamma.multiplicity != 1) throw BadConfiguration("the grafting curve must have multiplicity 1");
  gamma = oriented(std::move(gamma));
  const ChartClasses totals = chart_totals(lam);
  for (const auto& chart : model.charts) {
    const TorusClass l = totals.count(chart) ? totals.at(chart) : TorusClass{};
    const TorusClass g = gamma.in_chart(chart);
    if (geometric_intersection(kMeridian, l) != 2) {
      throw BadIntersectionPattern("chart " + chart + ": meridian meets lambda " +
                                   std::to_string(geometric_intersection(kMeridian, l)) + " times, expected 2");
    }
    if (geometric_intersection(kMeridian, g) != 1) {
      throw BadIntersectionPattern("chart " + chart + ": meridian meets gamma " +
                                   std::to_string(geometric_intersection(kMeridian, g)) + " times, expected 1");
    }
    if (geometric_intersection(l, g) != 0) {
      throw BadIntersectionPattern("chart " + chart + ": lambda meets gamma " +
                                   std::to_string(geometric_intersection(l, g)) + " times, expected 0");
    }
  }
  for (const auto& [atom, n] : gamma.word) {
    for (const auto& c : lam.components) {
      for (const auto& [other, m] : c.word) {
        if (model.crosses(atom, other)) {
          throw BadIntersectionPattern("lambda meets gamma outside the charts (" + atom + " x " + other + ")");
        }
      }
    }
  }
  for (auto& e : extra) {
    check_charts(model, e);
    e = oriented(std::move(e));
  }
  return CheckedConfiguration(std::move(model), std::move(lam), std::move(gamma), std::move(extra));
}

/// Empty string when `gamma` is disjoint from the real curves, otherwise the reason.
inline std::string disjointness_failure(const SurfaceModel& model, const SurfaceMulticurve& real,
                                        const CurveComponent& gamma) {
  const ChartClasses totals = chart_totals(real);
  for (const auto& [name, cls] : gamma.charts) {
    auto it = totals.find(name);
    if (it == totals.end()) continue;
    const std::int64_t i = geometric_intersection(cls, it->second);
    if (i != 0) return "meets the real curves " + std::to_string(i) + " times in chart " + name;
  }
  for (const auto& [atom, n] : gamma.word) {
    for (const auto& c : real.components) {
      for (const auto& [other, m] : c.word) {
        if (model.crosses(atom, other)) return "crosses real curve " + c.label() + " outside the charts";
      }
    }
  }
  return {};
}

struct SpiralReport {
  bool ok = false;
  std::string reason;
  std::map<std::string, std::int64_t> turns;  // n_c with gamma' = T^{n_c}(gamma) in chart c
  std::int64_t gamma_crossings = 0;           // sum of i(gamma, gamma') over charts
  std::int64_t lambda_crossings = 0;          // sum of i(gamma', lambda) over charts

  bool spirals() const {
    return std::any_of(turns.begin(), turns.end(), [](const auto& kv) { return kv.second != 0; });
  }
  SpiralClass::Kind direction(const std::string& chart) const {
    auto it = turns.find(chart);
    if (it == turns.end() || it->second == 0) return SpiralClass::Kind::NonSpiraling;
    return it->second > 0 ? SpiralClass::Kind::Left : SpiralClass::Kind::Right;
  }
};

/// Checks that gamma' is gamma twisted about the meridians and meets the
/// real curves exactly twice per crossing with gamma.
inline SpiralReport check_spiraling_hypotheses(const SurfaceModel& model, const CurveComponent& gamma_prime,
                                               const CurveComponent& gamma, const SurfaceMulticurve& lambda) {
  SpiralReport r;
  auto fail = [&r](std::string why) {
    r.ok = false;
    r.reason = std::move(why);
    return r;
  };
  if (const std::string why = disjointness_failure(model, lambda, gamma); !why.empty()) {
    return fail("reference curve is not disjoint from the real curves: " + why);
  }
  if (gamma_prime.word != gamma.word) return fail("exterior words differ, so holonomy differs");
  std::set<std::string> names;
  for (const auto& [n, c] : gamma_prime.charts) names.insert(n);
  for (const auto& [n, c] : gamma.charts) names.insert(n);
  const ChartClasses totals = chart_totals(lambda);
  for (const auto& name : names) {
    const TorusClass gp = sign_normalized(gamma_prime.in_chart(name));
    const TorusClass g = sign_normalized(gamma.in_chart(name));
    if (gp.p != 1 || g.p != 1) return fail("chart " + name + ": not a single strand through the chart");
    const std::int64_t n = detail::checked_sub(gp.q, g.q);
    if (dehn_twist(g, kMeridian, n) != gp) return fail("chart " + name + ": not twist-generated");
    const std::int64_t alg = algebraic_intersection(g, gp);
    const std::int64_t geo = geometric_intersection(g, gp);
    if (detail::checked_abs(alg) != geo) return fail("chart " + name + ": crossings with gamma have mixed signs");
    const TorusClass l = totals.count(name) ? totals.at(name) : TorusClass{};
    r.turns[name] = n;
    r.gamma_crossings = detail::checked_add(r.gamma_crossings, geo);
    r.lambda_crossings = detail::checked_add(r.lambda_crossings, geometric_intersection(gp, l));
  }
  if (detail::checked_mul(2, r.gamma_crossings) != r.lambda_crossings) {
    return fail("i(gamma,gamma') = " + std::to_string(r.gamma_crossings) + " but i(gamma',lambda) = " +
                std::to_string(r.lambda_crossings));
  }
  r.ok = true;
  return r;
}

/// Disjoint single-strand curve with the same exterior word from which
/// gamma' could be twist-generated, if one exists.
inline std::optional<CurveComponent> spiral_reference(const CurveComponent& gamma_prime,
                                                      const SurfaceMulticurve& lambda) {
  const ChartClasses totals = chart_totals(lambda);
  CurveComponent ref{gamma_prime.word, {}, 1};
  for (const auto& [name, cls] : gamma_prime.charts) {
    auto it = totals.find(name);
    if (it == totals.end()) {
      ref.charts[name] = sign_normalized(cls);
      continue;
    }
    const TorusClass l = it->second;
    if (l.p == 0 || l.q % l.p != 0) return std::nullopt;
    ref.charts[name] = TorusClass{1, l.q / l.p};
  }
  return ref;
}

enum class Route { None, Disjoint, Spiraling };

inline const char* to_string(Route r) {
  switch (r) {
    case Route::Disjoint: return "disjoint";
    case Route::Spiraling: return "spiraling";
    default: return "none";
  }
}

struct Admissibility {
  bool admissible = false;
  Route route = Route::None;
  std::string reason;
  SpiralReport spiral;
};

inline Admissibility is_admissible(const SurfaceModel& model, const Structure& s, const CurveComponent& gamma) {
  check_charts(model, gamma);
  const CurveComponent g = oriented(gamma);
  if (!g.essential()) return {false, Route::None, "curve is inessential", {}};
  const std::string why = disjointness_failure(model, s.real_curves(), g);
  if (why.empty()) return {true, Route::Disjoint, {}, {}};
  if (g.multiplicity != 1) return {false, Route::None, why + "; spiraling needs a single curve", {}};
  const auto ref = spiral_reference(g, s.real_curves());
  if (!ref) return {false, Route::None, why + "; no disjoint single-strand reference curve", {}};
  SpiralReport report = check_spiraling_hypotheses(model, g, *ref, s.real_curves());
  if (!report.ok) return {false, Route::None, why + "; " + report.reason, report};
  return {true, Route::Spiraling, {}, report};
}

inline CurveComponent twist_about_meridian(const SurfaceModel& model, CurveComponent c, const std::string& chart,
                                           std::int64_t n) {
  if (!model.has_chart(chart)) throw UnknownChart(chart);
  auto it = c.charts.find(chart);
  if (it != c.charts.end()) it->second = dehn_twist(it->second, kMeridian, n);
  return oriented(std::move(c));
}

inline SurfaceMulticurve twist_about_meridian(const SurfaceModel& model, const SurfaceMulticurve& mc,
                                              const std::string& chart, std::int64_t n) {
  SurfaceMulticurve out;
  for (const auto& c : mc.components) out.components.push_back(twist_about_meridian(model, c, chart, n));
  return out;
}

inline Structure twist_about_meridian(const SurfaceModel& model, const Structure& s, const std::string& chart,
                                      std::int64_t n) {
  return Structure(s.holonomy(), twist_about_meridian(model, s.real_curves(), chart, n));
}

namespace detail {

/// Splits real curves into those meeting one of `charts` and the rest, and
/// returns the first group merged into one component.
inline std::pair<CurveComponent, std::vector<CurveComponent>> gather(const SurfaceMulticurve& mc,
                                                                     const ChartClasses& charts) {
  CurveComponent merged{{}, {}, 1};
  std::vector<CurveComponent> rest;
  for (const auto& c : mc.components) {
    const bool touches =
        std::any_of(c.charts.begin(), c.charts.end(), [&charts](const auto& kv) { return charts.count(kv.first) != 0; });
    if (!touches) {
      rest.push_back(c);
      continue;
    }
    merged.word = add_words(merged.word, c.word, c.multiplicity);
    for (const auto& [name, cls] : c.charts) merged.charts[name] = merged.charts[name] + c.multiplicity * cls;
  }
  return {merged, rest};
}

}  // namespace detail

/// Structure whose real curves are T^eps_gamma(lambda). In each chart the
/// merged real curve becomes dehn_twist(lambda_c, gamma_c, eps) and its
/// exterior word gains one copy of gamma's word per crossing.
inline Structure twist_about_curve(const SurfaceModel& model, const Structure& s, const CurveComponent& gamma,
                                   std::int64_t eps) {
  check_charts(model, gamma);
  const CurveComponent g = oriented(gamma);
  auto [merged, rest] = detail::gather(s.real_curves(), g.charts);
  std::int64_t crossings = 0;
  for (const auto& [name, cls] : g.charts) {
    const TorusClass l = merged.in_chart(name);
    crossings = detail::checked_add(crossings, geometric_intersection(l, cls));
    merged.charts[name] = dehn_twist(l, cls, eps);
  }
  merged.word = add_words(merged.word, g.word, detail::checked_mul(crossings, detail::checked_abs(eps)));
  rest.push_back(oriented(std::move(merged)));
  return Structure(s.holonomy(), make_multicurve(model, std::move(rest)));
}

/// Gr_gamma for gamma disjoint from the real curves: adds two parallel copies.
inline Structure graft_disjoint(const SurfaceModel& model, const Structure& s, const CurveComponent& gamma) {
  const Admissibility a = is_admissible(model, s, gamma);
  if (a.route != Route::Disjoint) {
    throw NotAdmissible("graft_disjoint: " + gamma.label() + " " + (a.reason.empty() ? "is not disjoint" : a.reason));
  }
  std::vector<CurveComponent> comps = s.real_curves().components;
  CurveComponent twice = oriented(gamma);
  twice.multiplicity = detail::checked_mul(2, twice.multiplicity);
  comps.push_back(std::move(twice));
  return Structure(s.holonomy(), make_multicurve(model, std::move(comps)));
}

/// Surgery mode used for a chart in which gamma' spirals in the given direction.
inline Surgery spiral_mode(SpiralClass::Kind k) { return k == SpiralClass::Kind::Right ? Surgery::Flat : Surgery::Sharp; }

/// Chart-level spiral graft: resolve(lambda_c, 2 gamma_c) with the mode set by
/// gamma_c's own spiraling class. Result is sign-normalized.
inline TorusClass spiral_graft_chart(TorusClass lambda_c, TorusClass gamma_c) {
  const SpiralClass sc = spiraling_class(gamma_c);
  if (sc.kind == SpiralClass::Kind::NonSpiraling) throw NonSpiralingCurve("chart class " + gamma_c.str() + " does not spiral");
  return sign_normalized(resolve(lambda_c, 2 * gamma_c, spiral_mode(sc.kind)));
}

/// Gr_gamma' for a spiraling admissible curve: in each chart the real curves
/// become resolve(lambda_c, 2 gamma'_c), Sharp where gamma' spirals left of
/// its disjoint reference and Flat where it spirals right.
inline Structure graft_spiraling(const SurfaceModel& model, const Structure& s, const CurveComponent& gamma) {
  const Admissibility a = is_admissible(model, s, gamma);
  if (a.route == Route::Disjoint) throw NonSpiralingCurve("graft_spiraling: " + gamma.label() + " is disjoint from the real curves");
  if (!a.admissible) throw NotAdmissible("graft_spiraling: " + gamma.label() + " " + a.reason);
  const CurveComponent g = oriented(gamma);
  auto [merged, rest] = detail::gather(s.real_curves(), g.charts);
  for (const auto& [name, cls] : g.charts) {
    const TorusClass gp = sign_normalized(cls);
    const TorusClass l = merged.in_chart(name);
    merged.charts[name] = resolve(l, 2 * gp, spiral_mode(a.spiral.direction(name)));
  }
  merged.word = add_words(merged.word, g.word, 2);
  rest.push_back(oriented(std::move(merged)));
  return Structure(s.holonomy(), make_multicurve(model, std::move(rest)));
}

inline Structure graft_along(const SurfaceModel& model, const Structure& s, const CurveComponent& gamma) {
  const Admissibility a = is_admissible(model, s, gamma);
  switch (a.route) {
    case Route::Disjoint: return graft_disjoint(model, s, gamma);
    case Route::Spiraling: return graft_spiraling(model, s, gamma);
    default: throw NotAdmissible(gamma.label() + " is not admissible: " + a.reason);
  }
}

/// Grafting multicurve sigma with Gr_sigma(standard) = the given structure.
inline SurfaceMulticurve goldman_decompose(const SurfaceMulticurve& lambda) {
  SurfaceMulticurve sigma;
  for (const auto& c : lambda.components) {
    if (c.multiplicity % 2 != 0) throw OddMultiplicity(c.label() + "x" + std::to_string(c.multiplicity));
    CurveComponent half = c;
    half.multiplicity /= 2;
    sigma.components.push_back(std::move(half));
  }
  return sigma;
}

/// Grafts the standard structure along each component of sigma in turn.
inline Structure graft_standard(const SurfaceModel& model, const std::string& holonomy, const SurfaceMulticurve& sigma) {
  Structure s(holonomy, {});
  for (const auto& c : sigma.components) s = graft_disjoint(model, s, c);
  return s;
}

}  // namespace projgraft
