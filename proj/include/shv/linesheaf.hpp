#pragma once

// Canonical-form sheaves on the real line: graded multisets of interval
// summands, with the interval-level rules for microsupport, duality, tensor,
// global cohomology and hom dimensions.

#include "shv/interval.hpp"
#include "shv/quiver.hpp"

#include <map>
#include <optional>
#include <vector>

namespace shv {

struct LineSummand {
  Interval iv;
  int deg = 0;           // cohomological degree the summand sits in
  std::size_t mult = 1;

  bool operator==(const LineSummand&) const = default;
  auto operator<=>(const LineSummand& o) const {
    if (auto c = deg <=> o.deg; c != 0) return c;
    if (auto c = iv <=> o.iv; c != std::strong_ordering::equal) return c;
    return mult <=> o.mult;
  }
};

struct LineSheaf {
  std::vector<LineSummand> summands;

  // Sort, merge equal (interval, degree) entries, drop zero multiplicities.
  void canonicalize();
  bool is_canonical() const;
  bool single_degree() const;  // true also when empty
  std::size_t total_mult() const;
  // Stalk dimension at a point, all degrees combined.
  std::size_t stalk_dim(const Rational& x) const;
  bool compact_support() const;

  static LineSheaf single(const Interval& iv, int deg = 0, std::size_t mult = 1);

  bool operator==(const LineSheaf&) const = default;
};

// A microsupport element: conormal direction sign at a base point.
struct Covector {
  Rational base;
  int sign = +1;  // +1 or -1
  int deg = 0;
  std::size_t mult = 1;

  bool operator==(const Covector&) const = default;
  auto operator<=>(const Covector& o) const {
    if (auto c = base <=> o.base; c != 0) return c;
    if (auto c = sign <=> o.sign; c != 0) return c;
    if (auto c = deg <=> o.deg; c != 0) return c;
    return mult <=> o.mult;
  }
};

// Covectors contributed by one interval: a finite left end gives (lo, + if
// closed else -), a finite right end gives (hi, - if closed else +).
std::vector<std::pair<Rational, int>> interval_covectors(const Interval& iv);

// Barcode of a representation, as a degree-0 sheaf.
LineSheaf decompose_line_sheaf(const LineQuiverRep& rep);
// Direct sum of interval models; input must live in a single degree.
LineQuiverRep assemble_line(const LineSheaf& s);

std::vector<Covector> ss_line(const LineSheaf& s);
// Openness flip at finite ends (points are self-dual), degree negation.
LineSheaf dual_line(const LineSheaf& s);
LineSheaf tensor_line(const LineSheaf& a, const LineSheaf& b);
// Global cohomology ranks by degree.
std::map<int, std::size_t> cohomology_line(const LineSheaf& s);
// Hom dimension between single-degree sheaves of the same degree.
std::size_t hom_dim_line(const LineSheaf& a, const LineSheaf& b);
// The self-dual pattern: one skyscraper plus half-closed intervals; returns
// the skyscraper's position when the sheaf matches, with the duality and
// total-cohomology checks performed rather than assumed.
std::optional<Rational> autodual_structure(const LineSheaf& s);

}  // namespace shv
