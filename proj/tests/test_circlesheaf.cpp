#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shv/cech.hpp"
#include "shv/circlesheaf.hpp"

using namespace shv;

namespace {

WrappedInterval wi(const Rational& lo, const Rational& len, bool lc, bool hc) {
  return WrappedInterval{lo, len, lc, hc};
}

}  // namespace

TEST_CASE("wrapped interval canonical lift") {
  // Any bounded interval reduces to a start point in [0, 1).
  Interval iv = Interval::bounded(Rational(5, 4), true, Rational(3), false);
  WrappedInterval w = WrappedInterval::from_lift(iv);
  CHECK(w.lo == Rational(1, 4));
  CHECK(w.len == Rational(7, 4));
  CHECK(w.lo_closed);
  CHECK(!w.hi_closed);
  CHECK(w.lift() == Interval::bounded(Rational(1, 4), true, Rational(2), false));
}

TEST_CASE("decompose and reassemble wrapped intervals") {
  CircleSheaf s;
  s.wrapped = {{wi(Rational(0), Rational(1, 2), true, false), 0, 2},
               {wi(Rational(1, 4), Rational(3, 2), false, true), 0, 1},
               {wi(Rational(1, 2), Rational(0), true, true), 0, 1}};
  s.canonicalize();
  CHECK(decompose_circle(assemble_circle(s)) == s);
}

TEST_CASE("decompose local systems through the monodromy") {
  CircleSheaf s;
  s.local = {{Rational(2), 2, 0, 1}, {Rational(1), 1, 0, 2}, {Rational(-1), 1, 0, 1}};
  s.canonicalize();
  CHECK(decompose_circle(assemble_circle(s)) == s);
}

TEST_CASE("decompose a mix of wrapped and local summands") {
  CircleSheaf s;
  s.wrapped = {{wi(Rational(0), Rational(5, 4), true, false), 0, 1},
               {wi(Rational(3, 4), Rational(1, 4), false, false), 0, 1}};
  s.local = {{Rational(3), 1, 0, 1}, {Rational(1), 2, 0, 1}};
  s.canonicalize();
  CHECK(decompose_circle(assemble_circle(s)) == s);
}

TEST_CASE("pullback to a window of the line") {
  CircleSheaf s = CircleSheaf::one_local(Rational(1), 1);  // constant sheaf
  Interval w = Interval::bounded(Rational(0), false, Rational(2), false);
  LineSheaf pulled = pullback_window(s, w);
  REQUIRE(pulled.summands.size() == 1);
  CHECK(pulled.summands[0].iv == w);

  CircleSheaf arc = CircleSheaf::one_wrapped(wi(Rational(1, 4), Rational(1, 2), true, true));
  LineSheaf parc = pullback_window(arc, w);
  // Lifts [1/4, 3/4] and [5/4, 7/4] land inside (0,2).
  REQUIRE(parc.summands.size() == 2);
  CHECK(parc.summands[0].iv == Interval::bounded(Rational(1, 4), true, Rational(3, 4), true));
  CHECK(parc.summands[1].iv == Interval::bounded(Rational(5, 4), true, Rational(7, 4), true));
}

TEST_CASE("tensor with the dual local system trivializes the monodromy") {
  CircleSheaf a = CircleSheaf::one_local(Rational(2), 1);
  CircleSheaf b = CircleSheaf::one_local(Rational(1, 2), 1);
  CircleSheaf t = tensor_circle(a, b);
  CHECK(t == CircleSheaf::one_local(Rational(1), 1));
}

TEST_CASE("tensor of wrapped intervals sums over translates") {
  // Two short closed arcs meeting in two spots around the circle.
  CircleSheaf a = CircleSheaf::one_wrapped(wi(Rational(0), Rational(3, 4), true, true));
  CircleSheaf b = CircleSheaf::one_wrapped(wi(Rational(1, 2), Rational(3, 4), true, true));
  CircleSheaf t = tensor_circle(a, b);
  CircleSheaf want;
  want.wrapped = {{wi(Rational(1, 2), Rational(1, 4), true, true), 0, 1},
                  {wi(Rational(0), Rational(1, 4), true, true), 0, 1}};
  want.canonicalize();
  CHECK(t == want);
}

TEST_CASE("tensor of a wrapped interval with a local system") {
  // Monodromy is invisible on a contractible support: only the rank remains.
  CircleSheaf a = CircleSheaf::one_wrapped(wi(Rational(0), Rational(1, 2), true, false));
  CircleSheaf t = tensor_circle(a, CircleSheaf::one_local(Rational(5), 3));
  CircleSheaf want = a;
  want.wrapped[0].mult = 3;
  CHECK(t == want);
}

TEST_CASE("duality on the circle") {
  CircleSheaf s;
  s.wrapped = {{wi(Rational(0), Rational(1, 2), true, false), 1, 1}};
  s.local = {{Rational(2), 3, 0, 1}};
  s.canonicalize();
  CircleSheaf d = dual_circle(s);
  CircleSheaf want;
  want.wrapped = {{wi(Rational(0), Rational(1, 2), false, true), -1, 1}};
  want.local = {{Rational(1, 2), 3, 0, 1}};
  want.canonicalize();
  CHECK(d == want);
  CHECK(dual_circle(d) == s);
}

TEST_CASE("global cohomology on the circle") {
  CHECK(cohomology_circle(CircleSheaf::one_local(Rational(1), 1)) ==
        std::map<int, std::size_t>{{0, 1}, {1, 1}});
  CHECK(cohomology_circle(CircleSheaf::one_local(Rational(2), 1)) == std::map<int, std::size_t>{});
  CHECK(cohomology_circle(CircleSheaf::one_local(Rational(1), 3)) ==
        std::map<int, std::size_t>{{0, 1}, {1, 1}});
  // Closed arc shorter than a turn: a closed interval downstairs.
  CHECK(cohomology_circle(CircleSheaf::one_wrapped(wi(Rational(0), Rational(1, 2), true, true))) ==
        std::map<int, std::size_t>{{0, 1}});
  // Half-closed supports are acyclic, even winding exactly once around.
  CHECK(cohomology_circle(CircleSheaf::one_wrapped(wi(Rational(0), Rational(1), true, false))) ==
        std::map<int, std::size_t>{});
  // Open arc longer than a turn.
  CHECK(cohomology_circle(CircleSheaf::one_wrapped(wi(Rational(0), Rational(3, 2), false, false))) ==
        std::map<int, std::size_t>{{1, 1}});
}

TEST_CASE("cellwise oracle agrees on assembled models") {
  std::vector<CircleSheaf> samples = {
      CircleSheaf::one_local(Rational(1), 1), CircleSheaf::one_local(Rational(2), 2),
      CircleSheaf::one_wrapped(wi(Rational(0), Rational(1, 2), true, false)),
      CircleSheaf::one_wrapped(wi(Rational(1, 4), Rational(7, 4), true, true))};
  CircleSheaf mixed;
  mixed.wrapped = {{wi(Rational(0), Rational(1, 2), true, true), 0, 2}};
  mixed.local = {{Rational(1), 2, 0, 1}};
  mixed.canonicalize();
  samples.push_back(mixed);
  for (const auto& s : samples) {
    auto [h0, h1] = cech_cohomology_circle(assemble_circle(s));
    auto table = cohomology_circle(s);
    std::size_t t0 = table.count(0) ? table.at(0) : 0;
    std::size_t t1 = table.count(1) ? table.at(1) : 0;
    CAPTURE(h0); CAPTURE(h1); CAPTURE(t0); CAPTURE(t1);
    CHECK(t0 == h0);
    CHECK(t1 == h1);
  }
}

TEST_CASE("endomorphism algebras of wrapped intervals") {
  // Closed or open: just scalars.
  CHECK(end_algebra(wi(Rational(0), Rational(1, 2), true, true)) == std::pair<std::size_t, std::size_t>{1, 0});
  CHECK(end_algebra(wi(Rational(0), Rational(1, 2), false, false)) == std::pair<std::size_t, std::size_t>{1, 0});
  // Integer-length closed: still scalars.
  CHECK(end_algebra(wi(Rational(0), Rational(1), true, true)) == std::pair<std::size_t, std::size_t>{1, 0});
  // Half-closed of length in (k, k+1]: k+1 translates admit maps.
  CHECK(end_algebra(wi(Rational(0), Rational(1, 2), true, false)) == std::pair<std::size_t, std::size_t>{1, 0});
  CHECK(end_algebra(wi(Rational(0), Rational(3, 2), true, false)) == std::pair<std::size_t, std::size_t>{2, 1});
  CHECK(end_algebra(wi(Rational(0), Rational(1), true, false)) == std::pair<std::size_t, std::size_t>{1, 0});
  CHECK(end_algebra(wi(Rational(0), Rational(2), false, true)) == std::pair<std::size_t, std::size_t>{2, 1});
}

TEST_CASE("connecting-map rank of the unipotent extension") {
  CHECK(cech_c_rank(assemble_circle(CircleSheaf::one_local(Rational(1), 1))) == 1);
  CHECK(cech_c_rank(assemble_circle(CircleSheaf::one_local(Rational(1), 2))) == 0);
  CHECK(cech_c_rank(assemble_circle(
            CircleSheaf::one_wrapped(wi(Rational(0), Rational(1, 2), true, false)))) == 0);
}
