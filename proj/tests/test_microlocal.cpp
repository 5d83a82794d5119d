#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shv/microlocal.hpp"

using namespace shv;

namespace {

Interval co(long long a, long long b) { return Interval::bounded(Rational(a), true, Rational(b), false); }
Interval cc(long long a, long long b) { return Interval::bounded(Rational(a), true, Rational(b), true); }

}  // namespace

TEST_CASE("microlocal rank counts owning summands") {
  LineSheaf f;
  f.summands = {{co(0, 1), 0, 2}, {cc(0, 2), 1, 1}};
  f.canonicalize();
  MicrolocalRank r = microlocal_rank(f, Rational(0), +1);
  CHECK(r.total == 3);
  CHECK(r.degrees == std::vector<int>{0, 0, 1});
  CHECK(!r.simple());
  CHECK(!r.pure());
  CHECK(microlocal_rank(f, Rational(1), +1).total == 2);  // open right end of [0,1)
  CHECK(microlocal_rank(f, Rational(2), -1).total == 1);  // closed right end of [0,2]
  CHECK(microlocal_rank(f, Rational(3), +1).total == 0);
}

TEST_CASE("shift differences across one summand") {
  // A closed end sits half a step above an open one; degree shifts by one.
  LineSheaf f = LineSheaf::single(co(0, 2));
  Covector p{Rational(0), +1, 0, 1};
  Covector q{Rational(2), +1, 0, 1};
  CHECK(shift_difference(f, p, q) == Rational(1));  // closed lo vs open hi

  LineSheaf g;
  g.summands = {{cc(0, 1), 0, 1}, {cc(2, 3), 1, 1}};
  g.canonicalize();
  CHECK(shift_difference(g, Covector{Rational(0), +1, 0, 1}, Covector{Rational(2), +1, 1, 1}) ==
        Rational(1));
  CHECK_THROWS_AS(
      shift_difference(LineSheaf::single(Interval::point(Rational(0)), 0, 2),
                       Covector{Rational(0), +1, 0, 1}, Covector{Rational(0), -1, 0, 1}),
      NotSimple);
}

TEST_CASE("mu scalar reads the diagonal coefficient of the owner") {
  LineSheaf f;
  f.summands = {{co(0, 1), 0, 1}, {cc(2, 3), 0, 1}};
  f.canonicalize();
  auto inst = line_instances(f);
  REQUIRE(inst.size() == 2);
  EndoElement u;
  u.coeff[{0, 0, 0}] = Rational(5);
  u.coeff[{1, 1, 0}] = Rational(7);
  // Instance order follows canonical summand order: [0,1) before [2,3].
  CHECK(mu_scalar(f, u, Rational(0), +1) == Rational(5));
  CHECK(mu_scalar(f, u, Rational(2), +1) == Rational(7));
  CHECK(mu_scalar(f, EndoElement::scalar(Rational(3), 2), Rational(0), +1) == Rational(3));
}

TEST_CASE("linked covectors: criterion implies the exact test") {
  Interval window = Interval::bounded(Rational(-1), false, Rational(4), false);
  LineSheaf f;
  f.summands = {{co(0, 2), 0, 1}, {Interval::bounded(Rational(5, 2), true, Rational(7, 2), true), 0, 1}};
  f.canonicalize();
  // Endpoints of one summand whose closure is inside the window: linked.
  Covector p{Rational(0), +1, 0, 1};
  Covector q{Rational(2), +1, 0, 1};
  CHECK(f_linked_interval_criterion(f, p, q, window));
  CHECK(f_linked_exact(f, p, q, window));
  // Covectors of different summands: not linked (a scaling of one summand
  // alone distinguishes them).
  Covector s{Rational(5, 2), +1, 0, 1};
  CHECK(!f_linked_interval_criterion(f, p, s, window));
  CHECK(!f_linked_exact(f, p, s, window));
}

TEST_CASE("linking depends on the window") {
  // Once the window cuts the summand, its two endpoint covectors decouple.
  LineSheaf f;
  f.summands = {{co(0, 2), 0, 1}, {co(0, 3), 0, 1}};
  f.canonicalize();
  Covector p{Rational(0), +1, 0, 1};
  Covector q{Rational(2), +1, 0, 1};
  Interval big = Interval::bounded(Rational(-1), false, Rational(4), false);
  // Over the big window the covector at 0 is owned by two instances.
  CHECK_THROWS_AS(f_linked_exact(f, p, q, big), NotSimple);
}

TEST_CASE("conjugate point of a wrapped summand") {
  CircleSheaf f = CircleSheaf::one_wrapped({Rational(0), Rational(3, 2), true, false});
  // Lift [0, 3/2): endpoints 0 (closed, +) and 3/2 ~ 1/2 (open, +).
  auto q = conjugate_point(f, Covector{Rational(0), +1, 0, 1});
  REQUIRE(q.has_value());
  CHECK(q->base == Rational(1, 2));
  CHECK(q->sign == +1);
  auto back = conjugate_point(f, *q);
  REQUIRE(back.has_value());
  CHECK(back->base == Rational(0));
  CHECK(!conjugate_point(f, Covector{Rational(1, 4), +1, 0, 1}).has_value());
}

TEST_CASE("jordan-datum counting invariant") {
  CHECK(h_invariant(CircleSheaf::one_local(Rational(1), 1), Rational(1), 1, 0) == 1);
  CHECK(h_invariant(CircleSheaf::one_local(Rational(2), 1), Rational(2), 1, 0) == 1);
  CHECK(h_invariant(CircleSheaf::one_local(Rational(2), 1), Rational(1), 1, 0) == 0);
  CHECK(h_invariant(CircleSheaf::one_local(Rational(1), 3), Rational(1), 3, 0) == 1);
  CHECK(h_invariant(CircleSheaf::one_local(Rational(1), 3), Rational(1), 2, 0) == 0);
  // Wrapped summands never contribute.
  CHECK(h_invariant(CircleSheaf::one_wrapped({Rational(0), Rational(1, 2), true, true}),
                    Rational(1), 1, 0) == 0);
  // Multiplicities and degrees pass through.
  CircleSheaf f;
  f.local = {{Rational(3), 2, 1, 4}};
  f.canonicalize();
  CHECK(h_invariant(f, Rational(3), 2, 1) == 4);
  CHECK(h_invariant(f, Rational(3), 2, 0) == 0);
}

TEST_CASE("two-arc cover geometry") {
  CoverSpec cover{{Rational(7, 8), Rational(3, 4)}, {Rational(3, 8), Rational(3, 4)}};
  CHECK(cover.covers_circle());
  auto comps = cover.components();
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].lo == Rational(3, 8));
  CHECK(comps[0].len == Rational(1, 4));
  CHECK(comps[1].lo == Rational(7, 8));
  CHECK(comps[1].len == Rational(1, 4));

  CoverSpec bad{{Rational(0), Rational(1, 4)}, {Rational(1, 2), Rational(1, 4)}};
  CHECK(!bad.covers_circle());
}

TEST_CASE("twist of the constant sheaf produces the rank-one local system") {
  CoverSpec cover{{Rational(7, 8), Rational(3, 4)}, {Rational(3, 8), Rational(3, 4)}};
  CircleSheaf constant = CircleSheaf::one_local(Rational(1), 1);
  for (const Rational& l : {Rational(2), Rational(1, 2), Rational(-1)}) {
    AutSpec a{{{l}, {Rational(1)}}};
    CHECK(mv_twist(constant, cover, a) == CircleSheaf::one_local(l, 1));
  }
  // The trivial twist gives back the sheaf.
  AutSpec triv{{{Rational(1)}, {Rational(1)}}};
  CHECK(mv_twist(constant, cover, triv) == constant);
}

TEST_CASE("twisting a wrapped summand supported in one chart does nothing") {
  CoverSpec cover{{Rational(7, 8), Rational(3, 4)}, {Rational(3, 8), Rational(3, 4)}};
  // Supported inside U \ V.
  CircleSheaf f = CircleSheaf::one_wrapped({Rational(0), Rational(1, 4), true, true});
  AutSpec a{{{Rational(5)}, {Rational(1)}}};
  CHECK(mv_twist(f, cover, a) == f);
}

TEST_CASE("twist input validation") {
  CoverSpec cover{{Rational(7, 8), Rational(3, 4)}, {Rational(3, 8), Rational(3, 4)}};
  CircleSheaf mixed;
  mixed.local = {{Rational(1), 1, 0, 1}, {Rational(1), 1, 1, 1}};
  mixed.canonicalize();
  AutSpec a{{{Rational(2), Rational(2)}, {Rational(1), Rational(1)}}};
  CHECK_THROWS(mv_twist(mixed, cover, a));

  CircleSheaf constant = CircleSheaf::one_local(Rational(1), 1);
  AutSpec zero{{{Rational(0)}, {Rational(1)}}};
  CHECK_THROWS(mv_twist(constant, cover, zero));
  AutSpec short_spec{{{Rational(2)}}};
  CHECK_THROWS(mv_twist(constant, cover, short_spec));
}

TEST_CASE("monodromy of the twisting cocycle along a loop") {
  CoverSpec cover{{Rational(7, 8), Rational(3, 4)}, {Rational(3, 8), Rational(3, 4)}};
  Rational a(5), b(7);
  AutSpec spec{{{a}, {b}}};
  // Crossing the first component positively and the second negatively
  // multiplies by a and divides by b.
  std::vector<PathCrossing> path = {{0, +1}, {1, -1}};
  CHECK(m_gamma(cover, spec, path) == a / b);
  std::vector<PathCrossing> reverse = {{0, -1}, {1, +1}};
  CHECK(m_gamma(cover, spec, reverse) == b / a);
  CHECK_THROWS(m_gamma(cover, spec, {{5, +1}}));
}
