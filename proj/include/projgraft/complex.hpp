#pragma once

// Bounded enumeration of the grafting complex: vertices are structures with
// the seed's holonomy, edges are graftings and elementary meridian twists.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"
#include "projgraft/errors.hpp"
#include "projgraft/surface.hpp"

namespace projgraft {

enum class EdgeKind { Graft, Elementary };

inline const char* to_string(EdgeKind k) { return k == EdgeKind::Graft ? "graft" : "elementary"; }

struct Vertex {
  std::string key;
  Structure structure;
  int depth = 0;
};

struct Edge {
  EdgeKind kind = EdgeKind::Graft;
  std::size_t from = 0;
  std::size_t to = 0;
  std::string chart;  // elementary only
  int k = 0;          // elementary only, relative to from -> to
  std::string label;
};

struct ComplexGraph {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::int64_t twist_bound = 0;
  int depth = 0;
  std::string holonomy;
};

enum class EdgeSet { All, GraftOnly, ElementaryOnly };

inline const char* to_string(EdgeSet s) {
  switch (s) {
    case EdgeSet::GraftOnly: return "graft";
    case EdgeSet::ElementaryOnly: return "elementary";
    default: return "all";
  }
}

/// First Betti number |E| - |V| + (number of components) of the chosen edge
/// set over all enumerated vertices. Parallel edges count separately.
inline std::int64_t cycle_rank(const ComplexGraph& g, EdgeSet which = EdgeSet::All) {
  std::vector<std::size_t> parent(g.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::int64_t edges = 0;
  std::int64_t components = static_cast<std::int64_t>(g.vertices.size());
  for (const auto& e : g.edges) {
    if (which == EdgeSet::GraftOnly && e.kind != EdgeKind::Graft) continue;
    if (which == EdgeSet::ElementaryOnly && e.kind != EdgeKind::Elementary) continue;
    ++edges;
    const std::size_t a = find(e.from), b = find(e.to);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return edges - static_cast<std::int64_t>(g.vertices.size()) + components;
}

/// Grafting curves T^n(gamma) with n ranging over [-M, M] independently in
/// each of gamma's charts, followed by the configuration's extra curves.
inline std::vector<CurveComponent> graft_generators(const CheckedConfiguration& cfg, std::int64_t twist_bound) {
  std::vector<CurveComponent> out;
  out.push_back(cfg.gamma());
  for (const auto& [chart, cls] : cfg.gamma().charts) {
    std::vector<CurveComponent> next;
    for (const auto& c : out) {
      for (std::int64_t n = -twist_bound; n <= twist_bound; ++n) next.push_back(twist_about_meridian(cfg.model(), c, chart, n));
    }
    out = std::move(next);
  }
  for (const auto& e : cfg.extra_grafts()) {
    if (std::none_of(out.begin(), out.end(), [&e](const CurveComponent& c) { return c.word == e.word && c.charts == e.charts; })) {
      out.push_back(e);
    }
  }
  return out;
}

inline std::string curve_spec(const CurveComponent& c) {
  std::string s = c.label();
  for (const auto& [chart, cls] : c.charts) s += "@" + chart + "=" + cls.str();
  if (c.multiplicity != 1) s += ":" + std::to_string(c.multiplicity);
  return s;
}

struct BuildOptions {
  unsigned threads = 1;
  /// Receives one line per skipped generator application; may be empty.
  std::function<void(const std::string&)> log;
};

namespace detail {

struct Move {
  EdgeKind kind;
  std::string chart;
  int k = 0;
  std::string label;
  Structure result;
};

inline std::vector<Move> expand(const CheckedConfiguration& cfg, const std::vector<CurveComponent>& grafts,
                                const Structure& s, std::vector<std::string>& skipped) {
  std::vector<Move> moves;
  const ChartClasses totals = chart_totals(s.real_curves());
  for (const auto& chart : cfg.model().charts) {
    auto it = totals.find(chart);
    const TorusClass l = it == totals.end() ? TorusClass{} : it->second;
    if (geometric_intersection(kMeridian, l) != 2) {
      skipped.push_back("elementary " + chart + ": meridian meets the real curves " +
                        std::to_string(geometric_intersection(kMeridian, l)) + " times");
      continue;
    }
    for (int k : {1, -1}) {
      moves.push_back({EdgeKind::Elementary, chart, k, "T_" + chart + "^" + std::to_string(k),
                       twist_about_meridian(cfg.model(), s, chart, k)});
    }
  }
  for (const auto& g : grafts) {
    const Admissibility a = is_admissible(cfg.model(), s, g);
    if (!a.admissible) {
      skipped.push_back("graft " + curve_spec(g) + ": " + a.reason);
      continue;
    }
    moves.push_back({EdgeKind::Graft, {}, 0, "Gr " + curve_spec(g), graft_along(cfg.model(), s, g)});
  }
  return moves;
}

}  // namespace detail

/// Breadth-first closure of `seed` under the generators, to `depth` moves.
///
/// Each BFS level is expanded on up to `threads` workers; results are merged
/// in frontier order, so the graph does not depend on scheduling.
inline ComplexGraph build_complex(const CheckedConfiguration& cfg, const Structure& seed, std::int64_t twist_bound,
                                  int depth, const BuildOptions& opts = {}) {
  if (twist_bound < 0) throw BadConfiguration("twist bound must be nonnegative");
  if (depth < 0) throw BadConfiguration("depth must be nonnegative");
  if (seed.holonomy() != cfg.model().holonomy) throw BadConfiguration("seed holonomy differs from the model's");
  const std::vector<CurveComponent> grafts = graft_generators(cfg, twist_bound);

  ComplexGraph g;
  g.twist_bound = twist_bound;
  g.depth = depth;
  g.holonomy = seed.holonomy();
  std::unordered_map<std::string, std::size_t> index;
  std::map<std::tuple<std::size_t, std::size_t, std::string, int>, bool> elementary_seen;
  index.emplace(seed.key(), 0);
  g.vertices.push_back({seed.key(), seed, 0});

  std::vector<std::size_t> frontier{0};
  for (int level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<std::vector<detail::Move>> results(frontier.size());
    std::vector<std::vector<std::string>> skipped(frontier.size());
    std::vector<std::exception_ptr> errors(frontier.size());
    {
      std::atomic<std::size_t> next{0};
      auto work = [&] {
        for (std::size_t i = next++; i < frontier.size(); i = next++) {
          try {
            results[i] = detail::expand(cfg, grafts, g.vertices[frontier[i]].structure, skipped[i]);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      };
      const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(frontier.size())));
      if (workers == 1) {
        work();
      } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
      }
    }
    std::vector<std::size_t> next_frontier;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      if (errors[i]) std::rethrow_exception(errors[i]);
      if (opts.log) {
        for (const auto& line : skipped[i]) opts.log(g.vertices[frontier[i]].key + ": skip " + line);
      }
      const std::size_t from = frontier[i];
      for (auto& mv : results[i]) {
        auto [it, fresh] = index.emplace(mv.result.key(), g.vertices.size());
        if (fresh) {
          g.vertices.push_back({mv.result.key(), std::move(mv.result), level + 1});
          next_frontier.push_back(it->second);
        }
        const std::size_t to = it->second;
        if (mv.kind == EdgeKind::Elementary) {
          const auto id = from < to ? std::make_tuple(from, to, mv.chart, mv.k) : std::make_tuple(to, from, mv.chart, -mv.k);
          if (!elementary_seen.emplace(id, true).second) continue;
        }
        g.edges.push_back({mv.kind, from, to, mv.chart, mv.k, mv.label});
      }
    }
    frontier = std::move(next_frontier);
  }
  return g;
}

inline nlohmann::json to_json(const ComplexGraph& g) {
  nlohmann::json j;
  j["schema"] = 1;
  j["holonomy"] = g.holonomy;
  j["twist_bound"] = g.twist_bound;
  j["depth"] = g.depth;
  auto& vs = j["vertices"] = nlohmann::json::array();
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& v = g.vertices[i];
    vs.push_back({{"id", i}, {"key", v.key}, {"digest", digest(v.key)}, {"depth", v.depth}});
  }
  auto& es = j["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges) {
    nlohmann::json je{{"kind", to_string(e.kind)}, {"from", e.from}, {"to", e.to}, {"move", e.label}};
    if (e.kind == EdgeKind::Elementary) {
      je["chart"] = e.chart;
      je["k"] = e.k;
    }
    es.push_back(std::move(je));
  }
  j["cycle_rank"] = {{"all", cycle_rank(g, EdgeSet::All)},
                     {"graft", cycle_rank(g, EdgeSet::GraftOnly)},
                     {"elementary", cycle_rank(g, EdgeSet::ElementaryOnly)}};
  return j;
}

inline std::string to_dot(const ComplexGraph& g) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "digraph grafting_complex {\n";
  os << "  // holonomy " << g.holonomy << ", twist bound " << g.twist_bound << ", depth " << g.depth << "\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    os << "  v" << i << " [label=" << quote(digest(g.vertices[i].key)) << ", tooltip=" << quote(g.vertices[i].key) << "];\n";
  }
  for (const auto& e : g.edges) {
    os << "  v" << e.from << " -> v" << e.to << " [label=" << quote(e.label);
    if (e.kind == EdgeKind::Elementary) os << ", dir=none, style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

/// Which exponent the left-hand curve of the iterated-connectivity identity
/// carries: the sum k + l, or the doubled exponent 2m.
enum class LeftExponent { Sum, Doubled };

struct GraftComparison {
  std::int64_t m = 0;
  std::int64_t k = 0;
  std::int64_t l = 0;
  std::string left_key;
  std::string right_key;
  bool equal = false;
  std::string note;  // set when one side could not be grafted
};

/// Left: Gr_{T^e(gamma)}(Sigma(lambda)) with e = m or 2m. Right:
/// Gr_{T^k(gamma)}(Sigma(T^l(lambda))) with k = m - l.
inline GraftComparison compare_iterated(const CheckedConfiguration& cfg, const std::string& chart, std::int64_t m,
                                        std::int64_t l, LeftExponent left = LeftExponent::Sum) {
  const SurfaceModel& model = cfg.model();
  GraftComparison c;
  c.m = m;
  c.l = l;
  c.k = detail::checked_sub(m, l);
  const std::int64_t e = left == LeftExponent::Doubled ? detail::checked_mul(2, m) : m;
  try {
    c.left_key = graft_along(model, cfg.seed(), twist_about_meridian(model, cfg.gamma(), chart, e)).key();
    const Structure twisted = twist_about_meridian(model, cfg.seed(), chart, l);
    c.right_key = graft_along(model, twisted, twist_about_meridian(model, cfg.gamma(), chart, c.k)).key();
    c.equal = c.left_key == c.right_key;
  } catch (const DomainError& err) {
    c.note = err.what();
  }
  return c;
}

struct Witness {
  std::int64_t m = 0;
  std::int64_t k = 0;
  std::int64_t l = 0;
  std::string key;
};

/// Witnesses that Sigma(lambda) and Sigma(T^{l0}(lambda)) graft to a common
/// structure, one candidate per |m| <= M.
inline std::vector<Witness> common_grafts(const CheckedConfiguration& cfg, const std::string& chart, std::int64_t l0,
                                          std::int64_t M, LeftExponent left = LeftExponent::Sum) {
  if (!cfg.model().has_chart(chart)) throw UnknownChart(chart);
  if (M < 0) throw BadConfiguration("m range must be nonnegative");
  std::vector<Witness> out;
  for (std::int64_t m = -M; m <= M; ++m) {
    const GraftComparison c = compare_iterated(cfg, chart, m, l0, left);
    if (c.equal) out.push_back({m, c.k, l0, c.left_key});
  }
  return out;
}

struct FanReport {
  std::int64_t m = 0;
  std::vector<std::string> keys;  // keys[l] = Gr_{T^{m-l}(gamma)}(Sigma(T^l(lambda)))
  bool common = false;
  std::string common_key;
};

/// Grafts each of Sigma(T^l(lambda)), l = 0..L, along T^{m-l}(gamma).
inline FanReport standard_fan(const CheckedConfiguration& cfg, const std::string& chart, std::int64_t L, std::int64_t m) {
  if (!cfg.model().has_chart(chart)) throw UnknownChart(chart);
  if (L < 0) throw BadConfiguration("fan length must be nonnegative");
  const SurfaceModel& model = cfg.model();
  FanReport r;
  r.m = m;
  for (std::int64_t l = 0; l <= L; ++l) {
    const Structure base = twist_about_meridian(model, cfg.seed(), chart, l);
    const CurveComponent curve = twist_about_meridian(model, cfg.gamma(), chart, m - l);
    r.keys.push_back(graft_along(model, base, curve).key());
  }
  r.common = std::all_of(r.keys.begin(), r.keys.end(), [&r](const std::string& k) { return k == r.keys.front(); });
  if (r.common) r.common_key = r.keys.front();
  return r;
}

inline nlohmann::json to_json(const std::vector<Witness>& ws) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& w : ws) j.push_back({{"m", w.m}, {"k", w.k}, {"l", w.l}, {"key", w.key}, {"digest", digest(w.key)}});
  return j;
}

}  // namespace projgraft
