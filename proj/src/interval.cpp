#include "shv/interval.hpp"

#include <sstream>

namespace shv {

bool Interval::valid() const {
  if (lo.kind == Endpoint::PosInf || hi.kind == Endpoint::NegInf) return false;
  if (!lo.finite() && lo_closed) return false;
  if (!hi.finite() && hi_closed) return false;
  if (lo.finite() && hi.finite()) {
    if (lo.value > hi.value) return false;
    if (lo.value == hi.value && !(lo_closed && hi_closed)) return false;
  }
  return true;
}

bool Interval::contains(const Rational& x) const {
  if (lo.finite()) {
    if (x < lo.value) return false;
    if (x == lo.value && !lo_closed) return false;
  }
  if (hi.finite()) {
    if (x > hi.value) return false;
    if (x == hi.value && !hi_closed) return false;
  }
  return true;
}

bool Interval::closure_inside(const Rational& a, const Rational& b) const {
  if (!lo.finite() || !hi.finite()) return false;
  return lo.value > a && hi.value < b;
}

Interval Interval::translate(const Rational& t) const {
  Interval r = *this;
  if (r.lo.finite()) r.lo.value = r.lo.value + t;
  if (r.hi.finite()) r.hi.value = r.hi.value + t;
  return r;
}

std::string Interval::str() const {
  std::ostringstream os;
  os << (lo_closed ? '[' : '(');
  os << (lo.finite() ? lo.value.str() : std::string("-inf"));
  os << ',';
  os << (hi.finite() ? hi.value.str() : std::string("+inf"));
  os << (hi_closed ? ']' : ')');
  return os.str();
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  Interval r;
  // lower end: the larger one wins; ties intersect openness
  if (a.lo > b.lo) {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed;
  } else if (b.lo > a.lo) {
    r.lo = b.lo;
    r.lo_closed = b.lo_closed;
  } else {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (a.hi < b.hi) {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed;
  } else if (b.hi < a.hi) {
    r.hi = b.hi;
    r.hi_closed = b.hi_closed;
  } else {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed && b.hi_closed;
  }
  if (!r.valid()) return std::nullopt;
  return r;
}

bool closed_in(const Interval& k, const Interval& i) {
  // lower side: K's lower end must either coincide with I's lower end
  // (same position and openness) or be a closed end of K.
  bool lo_ok = (k.lo == i.lo && k.lo_closed == i.lo_closed) || (k.lo.finite() && k.lo_closed);
  bool hi_ok = (k.hi == i.hi && k.hi_closed == i.hi_closed) || (k.hi.finite() && k.hi_closed);
  return lo_ok && hi_ok;
}

bool open_in(const Interval& k, const Interval& j) {
  bool lo_ok = (k.lo == j.lo && k.lo_closed == j.lo_closed) || (k.lo.finite() && !k.lo_closed);
  bool hi_ok = (k.hi == j.hi && k.hi_closed == j.hi_closed) || (k.hi.finite() && !k.hi_closed);
  return lo_ok && hi_ok;
}

bool hom_nonzero(const Interval& i, const Interval& j) {
  auto k = intersect(i, j);
  if (!k) return false;
  return closed_in(*k, i) && open_in(*k, j);
}

}  // namespace shv
