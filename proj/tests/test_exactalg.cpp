#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shv/jordan.hpp"
#include "shv/matrix.hpp"

using namespace shv;

namespace {

Matrix mat(std::size_t r, std::size_t c, std::initializer_list<long long> entries) {
  Matrix m(r, c);
  auto it = entries.begin();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(*it++);
  return m;
}

}  // namespace

TEST_CASE("rational arithmetic and parsing") {
  Rational a(2, 4);
  CHECK(a == Rational(1, 2));
  CHECK(a.str() == "1/2");
  CHECK((a + a).str() == "1");
  CHECK((Rational(-3) / Rational(6)).str() == "-1/2");
  CHECK(Rational::parse("7/3").value() == Rational(7, 3));
  CHECK(Rational::parse("-5").value() == Rational(-5));
  CHECK(!Rational::parse("1/0").has_value());
  CHECK(!Rational::parse("x").has_value());
  CHECK(Rational(7, 2).floor() == BigInt(3));
  CHECK(Rational(-7, 2).floor() == BigInt(-4));
  CHECK(Rational(2, 3).inverse() == Rational(3, 2));
}

TEST_CASE("rank, kernel and image") {
  Matrix m = mat(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(m.rank() == 2);
  Matrix k = m.kernel_basis();
  CHECK(k.cols() == 1);
  CHECK((m * k).rank() == 0);
  Matrix im = m.image_basis();
  CHECK(im.cols() == 2);
  CHECK(im.rank() == 2);
}

TEST_CASE("solve with matrix right-hand side") {
  Matrix a = mat(2, 2, {2, 1, 1, 1});
  Matrix b = mat(2, 2, {1, 0, 0, 1});
  Matrix x = a.solve(b).value();
  CHECK(a * x == b);
  CHECK(x == a.inverse());

  Matrix sing = mat(2, 2, {1, 1, 1, 1});
  CHECK(!sing.solve(mat(2, 1, {1, 0})).has_value());
  CHECK(sing.solve(mat(2, 1, {1, 1})).has_value());
}

TEST_CASE("kronecker product") {
  Matrix a = mat(2, 2, {1, 2, 3, 4});
  Matrix b = mat(2, 2, {0, 1, 1, 0});
  Matrix k = a.kron(b);
  CHECK(k.rows() == 4);
  CHECK(k.at(0, 1) == Rational(1));
  CHECK(k.at(0, 0) == Rational(0));
  CHECK(k.at(2, 1) == Rational(3));
}

TEST_CASE("characteristic polynomial") {
  Matrix a = mat(2, 2, {0, -1, 1, 0});
  auto p = char_poly(a);  // t^2 + 1, low degree first
  REQUIRE(p.size() == 3);
  CHECK(p[0] == Rational(1));
  CHECK(p[1] == Rational(0));
  CHECK(p[2] == Rational(1));
}

TEST_CASE("jordan type of a diagonalizable matrix") {
  Matrix a = mat(2, 2, {2, 0, 0, 3});
  JordanType t = jordan_blocks(a);
  REQUIRE(t.blocks.size() == 2);
  CHECK(t.total_dimension() == 2);
  CHECK(jordan_blocks(t.to_matrix()).blocks == t.blocks);
}

TEST_CASE("jordan type of a nilpotent-plus-identity block") {
  Matrix j = Matrix::jordan_block(Rational(1), 3);
  JordanType t = jordan_blocks(j);
  REQUIRE(t.blocks.size() == 1);
  CHECK(t.blocks[0].eigenvalue == Rational(1));
  CHECK(t.blocks[0].size == 3);
  CHECK(t.blocks[0].multiplicity == 1);
}

TEST_CASE("jordan type of a kronecker product of unipotent blocks") {
  // J(1,2) (x) J(1,2) has blocks of sizes 1 and 3 at eigenvalue 1.
  Matrix k = Matrix::jordan_block(Rational(1), 2).kron(Matrix::jordan_block(Rational(1), 2));
  JordanType t = jordan_blocks(k);
  REQUIRE(t.blocks.size() == 2);
  CHECK(t.blocks[0].eigenvalue == Rational(1));
  CHECK(t.blocks[0].size == 1);
  CHECK(t.blocks[1].size == 3);
}

TEST_CASE("jordan decomposition error cases") {
  CHECK_THROWS_AS(jordan_blocks(mat(2, 2, {0, 0, 0, 1})), NotInvertible);
  // Rotation by 90 degrees: eigenvalues are not rational.
  CHECK_THROWS_AS(jordan_blocks(mat(2, 2, {0, -1, 1, 0})), SpectrumNotRational);
}

TEST_CASE("jordan type with mixed eigenvalues and sizes") {
  Matrix m(5, 5);
  // diag(J(2,2), J(2,1), J(-1,2))
  m.at(0, 0) = Rational(2);
  m.at(0, 1) = Rational(1);
  m.at(1, 1) = Rational(2);
  m.at(2, 2) = Rational(2);
  m.at(3, 3) = Rational(-1);
  m.at(3, 4) = Rational(1);
  m.at(4, 4) = Rational(-1);
  JordanType t = jordan_blocks(m);
  REQUIRE(t.blocks.size() == 3);
  CHECK(t.total_dimension() == 5);
  CHECK(jordan_blocks(t.to_matrix()).blocks == t.blocks);
}
