#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shv/json_io.hpp"

using namespace shv;

TEST_CASE("line sheaf round trip") {
  LineSheaf s;
  s.summands = {{Interval::bounded(Rational(-1, 2), true, Rational(3), false), 0, 2},
                {Interval::whole_line(), -1, 1},
                {Interval::ray_up(Rational(0), false), 2, 3},
                {Interval::point(Rational(7, 3)), 0, 1}};
  s.canonicalize();
  json j = to_json(s);
  CHECK(line_sheaf_from_json(j) == s);
  // Infinite ends travel as sentinels.
  bool saw_inf = false;
  for (const auto& e : j["summands"])
    if (e["lo"] == "-inf" || e["hi"] == "+inf") saw_inf = true;
  CHECK(saw_inf);
}

TEST_CASE("circle sheaf round trip") {
  CircleSheaf s;
  s.wrapped = {{{Rational(1, 4), Rational(3, 2), true, false}, 0, 2},
               {{Rational(0), Rational(0), true, true}, 1, 1}};
  s.local = {{Rational(-2, 3), 2, 0, 1}};
  s.canonicalize();
  CHECK(circle_sheaf_from_json(to_json(s)) == s);
}

TEST_CASE("covector round trip") {
  Covector c{Rational(5, 2), -1, 1, 3};
  json j = to_json(c);
  CHECK(j["sign"] == "-");
  CHECK(covector_from_json(j) == c);
  CHECK(covector_from_json(json{{"base", "0"}, {"sign", "+"}, {"deg", 0}}) ==
        Covector{Rational(0), +1, 0, 1});
}

TEST_CASE("sheaf kind detection") {
  json line = {{"summands", json::array()}};
  json circle = {{"wrapped", json::array()}, {"local", json::array()}};
  CHECK(std::holds_alternative<LineSheaf>(sheaf_from_json(line)));
  CHECK(std::holds_alternative<CircleSheaf>(sheaf_from_json(circle)));
  CHECK_THROWS_AS(sheaf_from_json(json::object()), ParseError);
}

TEST_CASE("representation round trips") {
  LineQuiverRep r = interval_rep(Interval::bounded(Rational(0), true, Rational(1), true),
                                 {Rational(0), Rational(1)});
  auto back = rep_from_json(to_json(r));
  REQUIRE(std::holds_alternative<LineQuiverRep>(back));
  const auto& b = std::get<LineQuiverRep>(back);
  CHECK(b.points == r.points);
  CHECK(b.stalk_dim == r.stalk_dim);
  CHECK(b.arc_dim == r.arc_dim);
  CHECK(b.left == r.left);
  CHECK(b.right == r.right);

  CircleQuiverRep c = local_system_rep(Matrix::jordan_block(Rational(2), 2),
                                       {Rational(0), Rational(1, 2)});
  auto cback = rep_from_json(to_json(c));
  REQUIRE(std::holds_alternative<CircleQuiverRep>(cback));
  const auto& cb = std::get<CircleQuiverRep>(cback);
  CHECK(cb.points == c.points);
  CHECK(cb.left == c.left);
  CHECK(cb.right == c.right);
}

TEST_CASE("malformed input is rejected with ParseError") {
  CHECK_THROWS_AS(line_sheaf_from_json(json::object()), ParseError);
  CHECK_THROWS_AS(rational_from_json(json("1/0"), "x"), ParseError);
  CHECK_THROWS_AS(rational_from_json(json("abc"), "x"), ParseError);

  json bad_sign = {{"base", "0"}, {"sign", "*"}, {"deg", 0}};
  CHECK_THROWS_AS(covector_from_json(bad_sign), ParseError);

  json bad_mult = {{"summands", {{{"lo", "0"}, {"lo_closed", true}, {"hi", "1"},
                                  {"hi_closed", true}, {"deg", 0}, {"mult", 0}}}}};
  CHECK_THROWS_AS(line_sheaf_from_json(bad_mult), ParseError);

  json bad_interval = {{"summands", {{{"lo", "2"}, {"lo_closed", true}, {"hi", "1"},
                                      {"hi_closed", true}, {"deg", 0}, {"mult", 1}}}}};
  CHECK_THROWS_AS(line_sheaf_from_json(bad_interval), ParseError);

  json bad_rep = {{"space", "plane"}, {"points", json::array()},
                  {"spaces", {{"stalks", json::array()}, {"arcs", json::array()}}},
                  {"arrows", json::array()}};
  CHECK_THROWS_AS(rep_from_json(bad_rep), ParseError);

  json bad_alpha = {{"local", {{{"alpha", "0"}, {"r", 1}, {"deg", 0}, {"mult", 1}}}}};
  CHECK_THROWS_AS(circle_sheaf_from_json(bad_alpha), ParseError);
}
