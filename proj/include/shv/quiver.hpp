#pragma once

// Zigzag models of constructible sheaves on the line and the circle.
//
// A line model is a finite set of marked points x_0 < ... < x_{n-1} together
// with stalk spaces at the points, germ spaces on the n+1 open arcs cut out
// by them (including the two unbounded ones), and generization maps from
// each point stalk into the two neighbouring arcs. A circle model is the
// same data cyclically, with m >= 1 marked points and m arcs.

#include "shv/genrep.hpp"
#include "shv/interval.hpp"
#include "shv/matrix.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace shv {

struct LineQuiverRep {
  std::vector<Rational> points;        // strictly increasing, size n
  std::vector<std::size_t> stalk_dim;  // size n
  std::vector<std::size_t> arc_dim;    // size n+1; arc k = (x_{k-1}, x_k)
  std::vector<Matrix> left;            // left[i]: stalk i -> arc i
  std::vector<Matrix> right;           // right[i]: stalk i -> arc i+1

  bool valid() const;
  std::size_t max_dim() const;
  // Vertex layout: 2k = arc k, 2i+1 = stalk i; per point, left edge then right.
  GenRep to_gen() const;
  static LineQuiverRep from_gen(std::vector<Rational> points, const GenRep& g);
};

struct CircleQuiverRep {
  std::vector<Rational> points;        // in [0,1), strictly increasing, size m >= 1
  std::vector<std::size_t> stalk_dim;  // size m
  std::vector<std::size_t> arc_dim;    // size m; arc i = (theta_i, theta_{i+1 mod m})
  std::vector<Matrix> left;            // left[i]: stalk i -> arc (i+m-1) mod m
  std::vector<Matrix> right;           // right[i]: stalk i -> arc i

  bool valid() const;
  std::size_t max_dim() const;
  // Vertex layout: 2i = arc i, 2i+1 = stalk i; per point, left edge then right.
  GenRep to_gen() const;
  static CircleQuiverRep from_gen(std::vector<Rational> points, const GenRep& g);
};

// Same sheaf presented on a larger marked point set (new points get
// identity generizations into their ambient arc).
LineQuiverRep refine_line(const LineQuiverRep& f, const std::vector<Rational>& extra);
CircleQuiverRep refine_circle(const CircleQuiverRep& f, const std::vector<Rational>& extra);

// Model of the constant sheaf on an interval, over a point set containing
// every finite endpoint of the interval.
LineQuiverRep interval_rep(const Interval& iv, const std::vector<Rational>& points);

// Model on the circle of the pushforward along exp of the constant sheaf on
// a bounded interval of the line (the interval may be longer than the
// circumference, winding multiple times). Endpoints must be marked mod 1.
CircleQuiverRep wrapped_interval_rep(const Interval& iv, const std::vector<Rational>& points);

// Local system with prescribed monodromy (all generizations are identities
// except crossing the first marked point).
CircleQuiverRep local_system_rep(const Matrix& monodromy, const std::vector<Rational>& points);

// Monodromy of a circle model all of whose generizations are invertible:
// the composite of counterclockwise transition maps once around.
Matrix circle_monodromy(const CircleQuiverRep& f);

// Restriction of a circle model to the window (t0, t0+len) unrolled on the
// line; lifted marked points are all theta_i + k falling inside the window.
LineQuiverRep unroll_window(const CircleQuiverRep& f, const Rational& t0, const Rational& len);

// Interval multiplicities of a line model, computed from the rank of
// limit -> colimit over every contiguous vertex segment by inclusion-
// exclusion. This is the barcode: the model is isomorphic to the direct sum
// of interval models with these multiplicities.
std::vector<std::pair<Interval, std::size_t>> decompose_line(const LineQuiverRep& f);

}  // namespace shv
