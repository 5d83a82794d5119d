#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shv/cech.hpp"
#include "shv/linesheaf.hpp"

using namespace shv;

namespace {

Interval cc(long long a, long long b) { return Interval::bounded(Rational(a), true, Rational(b), true); }
Interval oo(long long a, long long b) { return Interval::bounded(Rational(a), false, Rational(b), false); }
Interval co(long long a, long long b) { return Interval::bounded(Rational(a), true, Rational(b), false); }
Interval oc(long long a, long long b) { return Interval::bounded(Rational(a), false, Rational(b), true); }

}  // namespace

TEST_CASE("canonicalization merges and sorts") {
  LineSheaf s;
  s.summands = {{cc(0, 1), 0, 1}, {oo(0, 1), 1, 2}, {cc(0, 1), 0, 2}};
  s.canonicalize();
  REQUIRE(s.summands.size() == 2);
  CHECK(s.summands[0].mult == 3);
  CHECK(s.is_canonical());
  CHECK(!s.single_degree());
  CHECK(s.total_mult() == 5);
  CHECK(s.stalk_dim(Rational(1, 2)) == 5);
  CHECK(s.stalk_dim(Rational(1)) == 3);
}

TEST_CASE("assemble and decompose a mixed barcode") {
  LineSheaf s;
  s.summands = {{Interval::whole_line(), 0, 1},
                {Interval::point(Rational(1)), 0, 2},
                {co(0, 2), 0, 1},
                {Interval::ray_down(Rational(0), false), 0, 3}};
  s.canonicalize();
  CHECK(decompose_line_sheaf(assemble_line(s)) == s);
}

TEST_CASE("microsupport covector bookkeeping") {
  LineSheaf s;
  s.summands = {{co(0, 1), 0, 2}, {oc(0, 1), 0, 1}};
  s.canonicalize();
  auto cvs = ss_line(s);
  // [0,1): (0,+) and (1,+); (0,1]: (0,-) and (1,-).
  REQUIRE(cvs.size() == 4);
  CHECK(cvs[0] == Covector{Rational(0), -1, 0, 1});
  CHECK(cvs[1] == Covector{Rational(0), +1, 0, 2});
  CHECK(cvs[2] == Covector{Rational(1), -1, 0, 1});
  CHECK(cvs[3] == Covector{Rational(1), +1, 0, 2});
}

TEST_CASE("duality flips openness and degree, fixes points") {
  LineSheaf s;
  s.summands = {{co(0, 1), 1, 1}, {Interval::point(Rational(3)), -1, 2},
                {Interval::ray_up(Rational(0), true), 0, 1}};
  s.canonicalize();
  LineSheaf d = dual_line(s);
  LineSheaf want;
  want.summands = {{oc(0, 1), -1, 1}, {Interval::point(Rational(3)), 1, 2},
                   {Interval::ray_up(Rational(0), false), 0, 1}};
  want.canonicalize();
  CHECK(d == want);
  CHECK(dual_line(d) == s);
}

TEST_CASE("tensor products of intervals") {
  // Overlap rule: sections multiply, supports intersect.
  LineSheaf a = LineSheaf::single(cc(0, 2));
  LineSheaf b = LineSheaf::single(oo(1, 3), 0, 2);
  LineSheaf t = tensor_line(a, b);
  REQUIRE(t.summands.size() == 1);
  CHECK(t.summands[0].iv == oc(1, 2));
  CHECK(t.summands[0].mult == 2);

  // Degrees add.
  LineSheaf shifted = tensor_line(LineSheaf::single(cc(0, 1), 1), LineSheaf::single(cc(0, 1), 2));
  CHECK(shifted.summands[0].deg == 3);

  // Disjoint supports annihilate.
  CHECK(tensor_line(LineSheaf::single(cc(0, 1)), LineSheaf::single(cc(2, 3))).summands.empty());
}

TEST_CASE("global cohomology table") {
  auto h = [](const LineSheaf& s) { return cohomology_line(s); };
  CHECK(h(LineSheaf::single(cc(0, 1))) == std::map<int, std::size_t>{{0, 1}});
  CHECK(h(LineSheaf::single(oo(0, 1))) == std::map<int, std::size_t>{{1, 1}});
  CHECK(h(LineSheaf::single(co(0, 1))) == std::map<int, std::size_t>{});
  CHECK(h(LineSheaf::single(Interval::point(Rational(0)))) == std::map<int, std::size_t>{{0, 1}});
  CHECK(h(LineSheaf::single(Interval::whole_line())) == std::map<int, std::size_t>{{0, 1}});
  CHECK(h(LineSheaf::single(Interval::ray_up(Rational(0), true))) ==
        std::map<int, std::size_t>{{0, 1}});
  CHECK(h(LineSheaf::single(Interval::ray_up(Rational(0), false))) == std::map<int, std::size_t>{});
  // Shifted summand shifts the table.
  CHECK(h(LineSheaf::single(oo(0, 1), -1, 2)) == std::map<int, std::size_t>{{0, 2}});
}

TEST_CASE("cohomology of compactly supported sheaves against the cellwise oracle") {
  std::vector<LineSheaf> samples;
  for (const Interval& iv : {cc(0, 2), oo(0, 2), co(0, 2), oc(0, 2), Interval::point(Rational(1))}) {
    samples.push_back(LineSheaf::single(iv));
  }
  LineSheaf mixed;
  mixed.summands = {{cc(0, 1), 0, 2}, {oo(1, 2), 0, 1}, {Interval::point(Rational(2)), 0, 1}};
  mixed.canonicalize();
  samples.push_back(mixed);
  for (const auto& s : samples) {
    auto [h0, h1] = cech_cohomology_line(assemble_line(s));
    auto table = cohomology_line(s);
    std::size_t t0 = table.count(0) ? table.at(0) : 0;
    std::size_t t1 = table.count(1) ? table.at(1) : 0;
    CAPTURE(h0); CAPTURE(h1); CAPTURE(t0); CAPTURE(t1);
    CHECK(t0 == h0);
    CHECK(t1 == h1);
  }
}

TEST_CASE("hom dimensions through the closed-form rule") {
  auto d = [](const Interval& a, const Interval& b) {
    return hom_dim_line(LineSheaf::single(a), LineSheaf::single(b));
  };
  CHECK(d(oo(0, 2), cc(0, 2)) == 1);
  CHECK(d(cc(0, 2), oo(0, 2)) == 0);
  CHECK(d(co(0, 2), co(1, 3)) == 1);
  CHECK(d(co(1, 3), co(0, 2)) == 0);
  CHECK(d(Interval::point(Rational(0)), cc(0, 1)) == 0);
  CHECK(d(cc(0, 1), Interval::point(Rational(0))) == 1);
  CHECK(d(Interval::point(Rational(0)), oo(0, 1)) == 0);
  // Multiplicities multiply.
  CHECK(hom_dim_line(LineSheaf::single(oo(0, 2), 0, 2), LineSheaf::single(cc(0, 2), 0, 3)) == 6);
}

TEST_CASE("self-dual pattern recognition") {
  LineSheaf good;
  good.summands = {{Interval::point(Rational(1)), 0, 1}, {co(0, 2), 0, 1}, {oc(0, 2), 0, 1}};
  good.canonicalize();
  auto at = autodual_structure(good);
  REQUIRE(at.has_value());
  CHECK(*at == Rational(1));

  // Two skyscrapers: rejected.
  LineSheaf two = good;
  two.summands.push_back({Interval::point(Rational(0)), 0, 1});
  two.canonicalize();
  CHECK(!autodual_structure(two).has_value());

  // Unpaired half-closed interval: not self-dual.
  LineSheaf unpaired;
  unpaired.summands = {{Interval::point(Rational(1)), 0, 1}, {co(0, 2), 0, 1}};
  unpaired.canonicalize();
  CHECK(!autodual_structure(unpaired).has_value());

  // A closed interval spoils the cohomology count.
  LineSheaf closed;
  closed.summands = {{Interval::point(Rational(1)), 0, 1}, {cc(0, 2), 0, 1}};
  closed.canonicalize();
  CHECK(!autodual_structure(closed).has_value());
}
