#pragma once

// Intervals of the real line with endpoint openness, including points and
// infinite rays. This is the index set of the barcode decomposition.

#include "shv/rational.hpp"

#include <compare>
#include <optional>
#include <string>

namespace shv {

struct Endpoint {
  enum Kind { NegInf = -1, Finite = 0, PosInf = 1 };
  Kind kind = Finite;
  Rational value;  // meaningful only when Finite

  static Endpoint neg_inf() { return {NegInf, Rational()}; }
  static Endpoint pos_inf() { return {PosInf, Rational()}; }
  static Endpoint at(const Rational& x) { return {Finite, x}; }

  bool finite() const { return kind == Finite; }
  friend bool operator==(const Endpoint& a, const Endpoint& b) {
    return a.kind == b.kind && (a.kind != Finite || a.value == b.value);
  }
  friend std::strong_ordering operator<=>(const Endpoint& a, const Endpoint& b) {
    if (a.kind != b.kind) return a.kind <=> b.kind;
    if (a.kind != Finite) return std::strong_ordering::equal;
    return a.value <=> b.value;
  }
};

struct Interval {
  Endpoint lo = Endpoint::neg_inf();
  Endpoint hi = Endpoint::pos_inf();
  bool lo_closed = false;  // infinite ends are always open
  bool hi_closed = false;

  static Interval whole_line() { return {}; }
  static Interval point(const Rational& x) { return {Endpoint::at(x), Endpoint::at(x), true, true}; }
  static Interval bounded(const Rational& lo, bool loc, const Rational& hi, bool hic) {
    return {Endpoint::at(lo), Endpoint::at(hi), loc, hic};
  }
  static Interval ray_up(const Rational& lo, bool loc) {
    return {Endpoint::at(lo), Endpoint::pos_inf(), loc, false};
  }
  static Interval ray_down(const Rational& hi, bool hic) {
    return {Endpoint::neg_inf(), Endpoint::at(hi), false, hic};
  }

  bool valid() const;
  bool is_point() const { return lo.finite() && hi.finite() && lo.value == hi.value; }
  bool is_bounded() const { return lo.finite() && hi.finite(); }
  bool is_closed() const { return (!lo.finite() || lo_closed) && (!hi.finite() || hi_closed); }
  bool is_open() const { return (!lo.finite() || !lo_closed) && (!hi.finite() || !hi_closed); }
  // Exactly one closed finite end on a bounded interval.
  bool is_half_closed() const { return is_bounded() && !is_point() && lo_closed != hi_closed; }

  bool contains(const Rational& x) const;
  // Open interior intervals compare strictly inside: closure(this) within open (a, b).
  bool closure_inside(const Rational& a, const Rational& b) const;

  Interval translate(const Rational& t) const;

  bool operator==(const Interval&) const = default;
  auto operator<=>(const Interval& o) const {
    if (auto c = lo <=> o.lo; c != 0) return c;
    if (auto c = hi <=> o.hi; c != 0) return c;
    if (auto c = (int)lo_closed <=> (int)o.lo_closed; c != 0) return c;
    return (int)hi_closed <=> (int)o.hi_closed;
  }

  std::string str() const;
};

std::optional<Interval> intersect(const Interval& a, const Interval& b);

// I cap J is closed in I (both sides of the intersection either reach I's
// boundary or are closed ends of the intersection).
bool closed_in(const Interval& k, const Interval& i);
// I cap J is open in J.
bool open_in(const Interval& k, const Interval& j);

// Hom(k_I, k_J) is k exactly when I cap J is nonempty, closed in I and open
// in J; 0 otherwise.
bool hom_nonzero(const Interval& i, const Interval& j);

}  // namespace shv
