#pragma once

// Canonical-form sheaves on the circle R/Z (circumference 1): wrapped
// intervals e_*(k_I) and Jordan-block local systems L_{alpha,r}, with the
// decomposition algorithm, pull/push calculus along the covering map, and
// the interval-level operation rules.

#include "shv/jordan.hpp"
#include "shv/linesheaf.hpp"
#include "shv/quiver.hpp"

#include <map>
#include <utility>
#include <vector>

namespace shv {

struct WrappedInterval {
  Rational lo;      // canonical lift endpoint, in [0,1)
  Rational len;     // > 0, or 0 for a skyscraper (then both ends closed)
  bool lo_closed = true;
  bool hi_closed = true;

  Interval lift() const;  // the interval (lo, lo+len) with the flags
  // Canonical representative of e_*(k_I) for a bounded interval I.
  static WrappedInterval from_lift(const Interval& iv);
  bool is_point() const { return len.is_zero(); }
  bool valid() const;

  bool operator==(const WrappedInterval&) const = default;
  auto operator<=>(const WrappedInterval& o) const {
    if (auto c = lo <=> o.lo; c != 0) return c;
    if (auto c = len <=> o.len; c != 0) return c;
    if (auto c = (int)lo_closed <=> (int)o.lo_closed; c != 0) return c;
    return (int)hi_closed <=> (int)o.hi_closed;
  }
};

struct WrappedSummand {
  WrappedInterval w;
  int deg = 0;
  std::size_t mult = 1;
  bool operator==(const WrappedSummand&) const = default;
};

struct LocalSummand {
  Rational alpha;  // nonzero
  std::size_t r = 1;
  int deg = 0;
  std::size_t mult = 1;
  bool operator==(const LocalSummand&) const = default;
};

struct CircleSheaf {
  std::vector<WrappedSummand> wrapped;
  std::vector<LocalSummand> local;

  void canonicalize();
  bool single_degree() const;
  bool empty() const { return wrapped.empty() && local.empty(); }
  std::size_t stalk_dim(const Rational& theta) const;  // theta taken mod 1

  static CircleSheaf one_wrapped(const WrappedInterval& w, int deg = 0, std::size_t mult = 1);
  static CircleSheaf one_local(const Rational& alpha, std::size_t r, int deg = 0,
                               std::size_t mult = 1);

  bool operator==(const CircleSheaf&) const = default;
};

// Canonical decomposition of a circle model: repeatedly unroll a window
// longer than the maximal dimension plus one turn, locate an interval
// summand interior to the window, split it off by a section/retraction pair
// found in the hom spaces; when only invertible generizations remain, read
// off the monodromy and its Jordan type. Degree-0 output.
CircleSheaf decompose_circle(const CircleQuiverRep& rep);
// Direct sum of canonical models; input must live in a single degree.
CircleQuiverRep assemble_circle(const CircleSheaf& s);

// Inverse image along the covering map, restricted to an open bounded
// window of the line.
LineSheaf pullback_window(const CircleSheaf& s, const Interval& window);

CircleSheaf tensor_circle(const CircleSheaf& a, const CircleSheaf& b);
CircleSheaf dual_circle(const CircleSheaf& s);
std::map<int, std::size_t> cohomology_circle(const CircleSheaf& s);
// (dimension, nilradical dimension) of End(e_*(k_I)), counted as the number
// of integer translates T^n(I) admitting a nonzero map k_I -> k_{T^n I}.
std::pair<std::size_t, std::size_t> end_algebra(const WrappedInterval& w);
std::vector<Covector> ss_circle(const CircleSheaf& s);

}  // namespace shv
