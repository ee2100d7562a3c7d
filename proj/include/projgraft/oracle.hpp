#pragma once

// Brute-force validation oracle for the torus calculus.
//
// Curves are drawn as straight polygonal loops in the unit square with its
// edges identified. Crossings come from exact segment-pair tests, surgery is
// performed by explicitly reconnecting the four branches at every crossing,
// and the classes of the resulting loops are read off by counting signed
// passages through the right and top edges. Nothing here calls into the
// closed-form formulas of torus.hpp; this is the independent side of every
// cross-check.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "projgraft/errors.hpp"
#include "projgraft/torus.hpp"

namespace projgraft::oracle {

using Rational = boost::multiprecision::cpp_rational;

struct Point {
  Rational x;
  Rational y;
};

/// Directed straight segment inside the closed unit square.
struct Segment {
  Point from;
  Point to;
};

/// One closed loop; segment i+1 starts where segment i ends, modulo Z^2.
struct GridLoop {
  std::vector<Segment> segments;
};

struct GridCurve {
  std::vector<GridLoop> loops;
  TorusClass class_hint{};
};

struct Crossing {
  Point point;
  std::size_t first_loop = 0;
  std::size_t first_segment = 0;
  Rational first_param;
  std::size_t second_loop = 0;
  std::size_t second_segment = 0;
  Rational second_param;
  int index = 0;  // +1 when (first, second) agrees with the torus orientation
};

struct IntersectionCount {
  std::int64_t geometric = 0;
  std::int64_t algebraic = 0;
};

struct Resolution {
  std::vector<TorusClass> components;  // each oriented along `first` where it follows it
  TorusClass total{};
};

namespace detail {

inline Rational floor_of(const Rational& r) {
  using boost::multiprecision::cpp_int;
  cpp_int n = boost::multiprecision::numerator(r);
  cpp_int d = boost::multiprecision::denominator(r);
  cpp_int f = n / d;
  if (n % d != 0 && n < 0) f -= 1;
  return Rational(f);
}

inline Rational frac(const Rational& r) { return r - floor_of(r); }

inline Rational cross(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
  return ax * by - ay * bx;
}

/// Per-draw level offsets; distinct primes larger than any coefficient keep
/// crossings off the square's edges and away from each other's vertices.
inline Rational slot_phase(unsigned slot) {
  static constexpr std::int64_t kPrimes[] = {1009, 1013, 1019, 1021, 1031, 1033, 1039, 1049};
  return Rational(1) / Rational(kPrimes[slot % std::size(kPrimes)]) + Rational(slot / std::size(kPrimes), 7);
}

/// Wrap vector when passing from the end of one segment to the start of the next.
inline TorusClass junction_wrap(const Segment& before, const Segment& after) {
  const Rational dx = before.to.x - after.from.x;
  const Rational dy = before.to.y - after.from.y;
  return {dx.convert_to<std::int64_t>(), dy.convert_to<std::int64_t>()};
}

}  // namespace detail

/// Straight representative of `copies` parallel copies of a primitive class.
///
/// Copy i is the level set {q x - p y = c_i mod 1}. `slot` selects the family
/// of levels; curves that are compared against each other must use different
/// slots.
inline GridCurve oracle_draw(TorusClass cls, std::size_t copies, unsigned slot = 0) {
  if (!cls.is_primitive()) throw NonPrimitive("oracle_draw needs a primitive class, got " + cls.str());
  if (copies == 0) throw NonPrimitive("oracle_draw needs at least one copy");
  GridCurve curve;
  curve.class_hint = static_cast<std::int64_t>(copies) * cls;
  const Rational p(cls.p);
  const Rational q(cls.q);
  for (std::size_t i = 0; i < copies; ++i) {
    const Rational level = detail::slot_phase(slot) + Rational(static_cast<std::int64_t>(i), static_cast<std::int64_t>(copies));
    Rational x0;
    Rational y0;
    if (cls.p != 0) {
      x0 = 0;
      y0 = detail::frac(-level / p);
    } else {
      x0 = detail::frac(level / q);
      y0 = 0;
    }
    std::vector<Rational> breaks{Rational(0), Rational(1)};
    auto add_breaks = [&breaks](const Rational& start, std::int64_t step) {
      if (step == 0) return;
      const std::int64_t lo = std::min<std::int64_t>(0, step) - 1;
      const std::int64_t hi = std::max<std::int64_t>(0, step) + 1;
      for (std::int64_t n = lo; n <= hi; ++n) {
        Rational t = (Rational(n) - start) / Rational(step);
        if (t > 0 && t < 1) breaks.push_back(t);
      }
    };
    add_breaks(x0, cls.p);
    add_breaks(y0, cls.q);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    GridLoop loop;
    for (std::size_t j = 0; j + 1 < breaks.size(); ++j) {
      const Rational& ta = breaks[j];
      const Rational& tb = breaks[j + 1];
      const Rational tm = (ta + tb) / 2;
      const Rational sx = detail::floor_of(x0 + p * tm);
      const Rational sy = detail::floor_of(y0 + q * tm);
      loop.segments.push_back(Segment{{x0 + p * ta - sx, y0 + q * ta - sy}, {x0 + p * tb - sx, y0 + q * tb - sy}});
    }
    curve.loops.push_back(std::move(loop));
  }
  return curve;
}

/// Class of one loop from its signed passages through the right and top edges.
inline TorusClass loop_class(const GridLoop& loop) {
  TorusClass total{};
  const std::size_t n = loop.segments.size();
  for (std::size_t i = 0; i < n; ++i) total = total + detail::junction_wrap(loop.segments[i], loop.segments[(i + 1) % n]);
  return total;
}

inline TorusClass curve_class(const GridCurve& curve) {
  TorusClass total{};
  for (const auto& loop : curve.loops) total = total + loop_class(loop);
  return total;
}

/// Every transverse crossing of `a` with `b`. Throws DegeneratePosition on
/// overlaps, tangencies, or crossings at segment endpoints.
inline std::vector<Crossing> oracle_crossings(const GridCurve& a, const GridCurve& b) {
  std::vector<Crossing> out;
  for (std::size_t la = 0; la < a.loops.size(); ++la) {
    for (std::size_t sa = 0; sa < a.loops[la].segments.size(); ++sa) {
      const Segment& s1 = a.loops[la].segments[sa];
      const Rational rx = s1.to.x - s1.from.x;
      const Rational ry = s1.to.y - s1.from.y;
      const Rational min1x = std::min(s1.from.x, s1.to.x), max1x = std::max(s1.from.x, s1.to.x);
      const Rational min1y = std::min(s1.from.y, s1.to.y), max1y = std::max(s1.from.y, s1.to.y);
      for (std::size_t lb = 0; lb < b.loops.size(); ++lb) {
        for (std::size_t sb = 0; sb < b.loops[lb].segments.size(); ++sb) {
          const Segment& s2 = b.loops[lb].segments[sb];
          if (std::max(s2.from.x, s2.to.x) < min1x || std::min(s2.from.x, s2.to.x) > max1x) continue;
          if (std::max(s2.from.y, s2.to.y) < min1y || std::min(s2.from.y, s2.to.y) > max1y) continue;
          const Rational sx = s2.to.x - s2.from.x;
          const Rational sy = s2.to.y - s2.from.y;
          const Rational qpx = s2.from.x - s1.from.x;
          const Rational qpy = s2.from.y - s1.from.y;
          const Rational denom = detail::cross(rx, ry, sx, sy);
          if (denom == 0) {
            if (detail::cross(qpx, qpy, rx, ry) == 0) {
              throw DegeneratePosition("collinear overlapping segments between the two curves");
            }
            continue;
          }
          const Rational t = detail::cross(qpx, qpy, sx, sy) / denom;
          const Rational u = detail::cross(qpx, qpy, rx, ry) / denom;
          if (t < 0 || t > 1 || u < 0 || u > 1) continue;
          if (t == 0 || t == 1 || u == 0 || u == 1) {
            throw DegeneratePosition("crossing at a segment endpoint");
          }
          out.push_back(Crossing{{s1.from.x + t * rx, s1.from.y + t * ry}, la, sa, t, lb, sb, u, denom > 0 ? 1 : -1});
        }
      }
    }
  }
  return out;
}

inline IntersectionCount oracle_intersection(const GridCurve& a, const GridCurve& b) {
  IntersectionCount count;
  for (const auto& x : oracle_crossings(a, b)) {
    ++count.geometric;
    count.algebraic += x.index;
  }
  return count;
}

namespace detail {

struct Arc {
  bool on_first = true;
  std::size_t start = 0;  // crossing id at the tail
  std::size_t end = 0;    // crossing id at the head
  TorusClass wrap{};
};

struct CrossingEnds {
  std::size_t first_in = 0, first_out = 0, second_in = 0, second_out = 0;
};

/// Splits every loop of one curve into arcs running between consecutive crossings.
/// Loops without crossings are returned in `free_loops` as whole classes.
inline void split_into_arcs(const GridCurve& curve, bool on_first, const std::vector<Crossing>& crossings,
                            std::vector<Arc>& arcs, std::vector<CrossingEnds>& ends,
                            std::vector<TorusClass>& free_loops) {
  for (std::size_t l = 0; l < curve.loops.size(); ++l) {
    const GridLoop& loop = curve.loops[l];
    const std::size_t len = loop.segments.size();
    struct Stop {
      std::size_t segment;
      const Rational* param;
      std::size_t id;
    };
    std::vector<Stop> stops;
    for (std::size_t id = 0; id < crossings.size(); ++id) {
      const Crossing& x = crossings[id];
      if (on_first && x.first_loop == l) stops.push_back({x.first_segment, &x.first_param, id});
      if (!on_first && x.second_loop == l) stops.push_back({x.second_segment, &x.second_param, id});
    }
    if (stops.empty()) {
      free_loops.push_back(loop_class(loop));
      continue;
    }
    std::sort(stops.begin(), stops.end(), [](const Stop& s, const Stop& t) {
      return s.segment != t.segment ? s.segment < t.segment : *s.param < *t.param;
    });
    for (std::size_t j = 0; j < stops.size(); ++j) {
      const Stop& from = stops[j];
      const Stop& to = stops[(j + 1) % stops.size()];
      Arc arc{on_first, from.id, to.id, {}};
      const bool wraps = (j + 1 == stops.size());
      if (!wraps) {
        for (std::size_t s = from.segment; s < to.segment; ++s) {
          arc.wrap = arc.wrap + junction_wrap(loop.segments[s], loop.segments[s + 1]);
        }
      } else {
        for (std::size_t s = from.segment; s < len; ++s) {
          arc.wrap = arc.wrap + junction_wrap(loop.segments[s], loop.segments[(s + 1) % len]);
        }
        for (std::size_t s = 0; s < to.segment; ++s) {
          arc.wrap = arc.wrap + junction_wrap(loop.segments[s], loop.segments[s + 1]);
        }
      }
      const std::size_t arc_id = arcs.size();
      arcs.push_back(arc);
      if (on_first) {
        ends[from.id].first_out = arc_id;
        ends[to.id].first_in = arc_id;
      } else {
        ends[from.id].second_out = arc_id;
        ends[to.id].second_in = arc_id;
      }
    }
  }
}

}  // namespace detail

/// Performs the surgery explicitly and returns the classes of the resulting loops.
///
/// At a crossing of index +1, Sharp reconnects incoming-first to outgoing-second
/// and incoming-second to outgoing-first; at a crossing of index -1 Sharp uses
/// the other smoothing. Flat is the opposite choice at every crossing.
inline Resolution oracle_resolve(const GridCurve& a, const GridCurve& b, const std::vector<Crossing>& crossings,
                                 Surgery mode) {
  std::vector<detail::Arc> arcs;
  std::vector<detail::CrossingEnds> ends(crossings.size());
  std::vector<TorusClass> free_loops;
  detail::split_into_arcs(a, true, crossings, arcs, ends, free_loops);
  const std::size_t first_arc_count = arcs.size();
  detail::split_into_arcs(b, false, crossings, arcs, ends, free_loops);

  Resolution result;
  std::vector<bool> visited(arcs.size(), false);
  for (std::size_t start = 0; start < first_arc_count; ++start) {
    if (visited[start]) continue;
    TorusClass component{};
    std::size_t arc = start;
    bool forward = true;
    while (true) {
      visited[arc] = true;
      const detail::Arc& cur = arcs[arc];
      component = forward ? component + cur.wrap : component - cur.wrap;
      const std::size_t at = forward ? cur.end : cur.start;
      const bool agree = (crossings[at].index > 0) == (mode == Surgery::Sharp);
      const detail::CrossingEnds& e = ends[at];
      // Arriving end: (curve, head-or-tail). Find its partner end at this crossing.
      const bool arrived_on_first = cur.on_first;
      const bool arrived_at_head = forward;
      std::size_t next = 0;
      bool next_forward = true;
      if (agree) {
        // {first_in, second_out}, {second_in, first_out}; tails pair with heads.
        if (arrived_on_first && arrived_at_head) { next = e.second_out; next_forward = true; }
        else if (arrived_on_first) { next = e.second_in; next_forward = false; }
        else if (arrived_at_head) { next = e.first_out; next_forward = true; }
        else { next = e.first_in; next_forward = false; }
      } else {
        // {first_in, second_in}, {first_out, second_out}.
        if (arrived_on_first && arrived_at_head) { next = e.second_in; next_forward = false; }
        else if (arrived_on_first) { next = e.second_out; next_forward = true; }
        else if (arrived_at_head) { next = e.first_in; next_forward = false; }
        else { next = e.first_out; next_forward = true; }
      }
      if (next == start && next_forward) break;
      arc = next;
      forward = next_forward;
    }
    result.components.push_back(component);
  }
  for (std::size_t i = first_arc_count; i < arcs.size(); ++i) {
    if (!visited[i]) throw DegeneratePosition("second-curve arc left untraced after surgery");
  }
  for (const auto& c : free_loops) result.components.push_back(c);
  for (const auto& c : result.components) result.total = result.total + c;
  return result;
}

inline Resolution oracle_resolve(const GridCurve& a, const GridCurve& b, Surgery mode) {
  return oracle_resolve(a, b, oracle_crossings(a, b), mode);
}

}  // namespace projgraft::oracle
