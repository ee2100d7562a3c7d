#pragma once

// Exact homology calculus for oriented simple closed multicurves on a torus.
//
// A class is an integer pair (p,q) in the basis where (1,0) and (0,1) meet once
// with index +1. All arithmetic is checked 64-bit; overflow raises
// ArithmeticOverflow instead of wrapping.

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "projgraft/errors.hpp"

namespace projgraft {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}

inline std::int64_t checked_abs(std::int64_t a) {
  if (a == INT64_MIN) throw ArithmeticOverflow();
  return a < 0 ? -a : a;
}

}  // namespace detail

/// Oriented integer homology class of a curve (or multicurve) on a torus.
struct TorusClass {
  std::int64_t p = 0;
  std::int64_t q = 0;

  friend constexpr bool operator==(const TorusClass&, const TorusClass&) = default;
  friend constexpr auto operator<=>(const TorusClass&, const TorusClass&) = default;

  constexpr bool is_zero() const { return p == 0 && q == 0; }

  /// gcd(|p|,|q|); zero for the empty class.
  std::int64_t divisibility() const { return std::gcd(detail::checked_abs(p), detail::checked_abs(q)); }

  /// True iff the class is carried by a single connected simple closed curve.
  bool is_primitive() const { return divisibility() == 1; }

  friend TorusClass operator+(TorusClass a, TorusClass b) {
    return {detail::checked_add(a.p, b.p), detail::checked_add(a.q, b.q)};
  }
  friend TorusClass operator-(TorusClass a, TorusClass b) {
    return {detail::checked_sub(a.p, b.p), detail::checked_sub(a.q, b.q)};
  }
  friend TorusClass operator-(TorusClass a) { return {detail::checked_sub(0, a.p), detail::checked_sub(0, a.q)}; }
  friend TorusClass operator*(std::int64_t k, TorusClass a) {
    return {detail::checked_mul(k, a.p), detail::checked_mul(k, a.q)};
  }

  std::string str() const { return std::to_string(p) + "," + std::to_string(q); }
  friend std::ostream& operator<<(std::ostream& os, const TorusClass& c) { return os << '(' << c.str() << ')'; }
};

/// Meridian direction of every chart torus.
inline constexpr TorusClass kMeridian{0, 1};

/// Sum of crossing indices of straight representatives: p*s - q*r.
inline std::int64_t algebraic_intersection(TorusClass a, TorusClass b) {
  return detail::checked_sub(detail::checked_mul(a.p, b.q), detail::checked_mul(a.q, b.p));
}

/// Crossing count of representatives in minimal position: |p*s - q*r|.
inline std::int64_t geometric_intersection(TorusClass a, TorusClass b) {
  return detail::checked_abs(algebraic_intersection(a, b));
}

/// k-fold Dehn twist of `target` about `twister`: b + k * i^(b,a) * a.
///
/// The sign is fixed so that twisting (1,0) about (0,1) gives (1,k) and (2,0)
/// gives (2,2k). Every spiraling-direction label in the library derives from
/// this one convention.
inline TorusClass dehn_twist(TorusClass target, TorusClass twister, std::int64_t k) {
  if (twister.is_zero()) throw ZeroTwister();
  const std::int64_t crossings = algebraic_intersection(target, twister);
  return target + detail::checked_mul(k, crossings) * twister;
}

/// Crossing resolution mode: Sharp joins arcs whose local orientations agree
/// (after orienting every crossing positively), Flat joins arcs whose
/// orientations disagree.
enum class Surgery { Sharp, Flat };

inline const char* to_string(Surgery s) { return s == Surgery::Sharp ? "sharp" : "flat"; }

/// Homology class of the surgery of `first` with `second`, oriented like `first`.
///
/// With d = i^(first, second): d > 0 makes Sharp the sum and Flat the
/// difference, d < 0 swaps them. Disjoint classes (d = 0) have no crossing to
/// resolve, so both modes return the union.
inline TorusClass resolve(TorusClass first, TorusClass second, Surgery mode) {
  const std::int64_t d = algebraic_intersection(first, second);
  if (d == 0) return first + second;
  const bool sum = (d > 0) == (mode == Surgery::Sharp);
  return sum ? first + second : first - second;
}

/// Orientation quotient: the representative with p > 0, or p = 0 and q > 0.
inline TorusClass sign_normalized(TorusClass c) {
  if (c.p < 0 || (c.p == 0 && c.q < 0)) return -c;
  return c;
}

/// Unoriented multicurve on a torus: `multiplicity` parallel copies of a
/// primitive class.
struct TorusMulticurve {
  std::int64_t multiplicity = 0;
  TorusClass primitive{};

  friend constexpr bool operator==(const TorusMulticurve&, const TorusMulticurve&) = default;

  bool empty() const { return multiplicity == 0; }
  TorusClass total() const { return multiplicity * primitive; }
};

inline TorusMulticurve normalize(TorusClass raw) {
  const std::int64_t m = raw.divisibility();
  if (m == 0) return {};
  return {m, sign_normalized(TorusClass{raw.p / m, raw.q / m})};
}

}  // namespace projgraft
