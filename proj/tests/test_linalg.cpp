#include <doctest.h>

#include <random>

#include "qmod/linalg.hpp"
#include "qmod/scalar.hpp"

using namespace qmod;

namespace {

const FieldTag Q{};
const FieldTag F5{5};

Matrix random_matrix(FieldTag f, int rows, int cols, std::mt19937& rng) {
  std::uniform_int_distribution<int> entry(-3, 3);
  Matrix m(f, rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = Scalar::of_int(f, entry(rng));
  return m;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("rational normalization and printing") {
  CHECK(Scalar::rational(2, 4) == Scalar::rational(1, 2));
  CHECK(Scalar::rational(-2, -4) == Scalar::rational(1, 2));
  CHECK(Scalar::rational(3, -6).str() == "-1/2");
  CHECK(Scalar::rational(0, 7) == Scalar::zero(Q));
  CHECK(Scalar::rational(5).str() == "5");
  CHECK_THROWS_AS(Scalar::rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic is exact") {
  Scalar a = Scalar::rational(1, 3), b = Scalar::rational(1, 6);
  CHECK(a + b == Scalar::rational(1, 2));
  CHECK(a - b == Scalar::rational(1, 6));
  CHECK(a * b == Scalar::rational(1, 18));
  CHECK(a / b == Scalar::rational(2));
  CHECK((a - a).is_zero());
}

TEST_CASE("scalar parsing round trips") {
  for (const char* text : {"0", "7", "-3", "5/3", "-11/4"}) {
    Scalar s = Scalar::parse(Q, text);
    CHECK(Scalar::parse(Q, s.str()) == s);
  }
  CHECK(Scalar::parse(F5, "7") == Scalar::fp(2, 5));
  CHECK(Scalar::parse(F5, "1/2") == Scalar::fp(3, 5));  // 2 * 3 = 6 = 1 mod 5
  CHECK_THROWS(Scalar::parse(Q, "1x"));
}

TEST_CASE("prime field arithmetic") {
  CHECK(Scalar::fp(3, 5) + Scalar::fp(4, 5) == Scalar::fp(2, 5));
  CHECK(Scalar::fp(3, 5) * Scalar::fp(4, 5) == Scalar::fp(2, 5));
  CHECK(Scalar::fp(-1, 5) == Scalar::fp(4, 5));
  CHECK(Scalar::fp(3, 5).inverse() == Scalar::fp(2, 5));
  CHECK_THROWS_AS(Scalar::fp(0, 5).inverse(), std::domain_error);
  CHECK_THROWS_AS(Scalar::fp(1, 5) + Scalar::fp(1, 7), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::fp(1, 5) + Scalar::rational(1), std::invalid_argument);
}

TEST_CASE("matrix multiplication and trace") {
  Matrix a(Q, 2, 2), b(Q, 2, 2);
  a.at(0, 1) = Scalar::rational(1);
  a.at(1, 0) = Scalar::rational(2);
  b.at(0, 0) = Scalar::rational(3);
  b.at(1, 1) = Scalar::rational(5);
  Matrix ab = a * b;
  CHECK(ab.at(0, 1) == Scalar::rational(5));
  CHECK(ab.at(1, 0) == Scalar::rational(6));
  CHECK(ab.trace().is_zero());
  CHECK((a * b * a).trace() == Scalar::rational(16));
  CHECK_THROWS_AS(a * Matrix(Q, 3, 1), std::invalid_argument);
}

TEST_CASE("rref produces pivots and rank") {
  Matrix m(Q, 3, 3);
  // rows (1,2,3), (2,4,6), (0,1,1): rank 2
  const int vals[3][3] = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m.at(r, c) = Scalar::rational(vals[r][c]);
  CHECK(rank(m) == 2);
  auto pivots = rref(m);
  CHECK(pivots == std::vector<int>{0, 1});
  CHECK(m.at(0, 0) == Scalar::rational(1));
  CHECK(m.at(0, 1).is_zero());
}

TEST_CASE("nullspace columns are annihilated") {
  std::mt19937 rng(31);
  for (FieldTag f : {Q, F5}) {
    for (int trial = 0; trial < 20; ++trial) {
      Matrix m = random_matrix(f, 3, 4, rng);
      Matrix ns = nullspace(m);
      CHECK(rank(m) + ns.cols() == 4);
      if (ns.cols() > 0) CHECK((m * ns).is_zero());
      CHECK(rank(ns) == ns.cols());
    }
  }
}

TEST_CASE("inverse round trips") {
  std::mt19937 rng(37);
  for (FieldTag f : {Q, F5}) {
    int found = 0;
    for (int trial = 0; trial < 40 && found < 10; ++trial) {
      Matrix m = random_matrix(f, 3, 3, rng);
      auto inv = inverse(m);
      if (!inv) continue;
      ++found;
      CHECK(*inv * m == Matrix::identity(f, 3));
      CHECK(m * *inv == Matrix::identity(f, 3));
    }
    CHECK(found >= 5);
  }
  CHECK_FALSE(inverse(Matrix(Q, 2, 2)).has_value());
}

TEST_CASE("row_basis is canonical for the row space") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m = random_matrix(Q, 3, 4, rng);
    Matrix b = row_basis(m);
    // permuting and mixing rows leaves the canonical basis unchanged
    Matrix mixed(Q, 4, 4);
    for (int c = 0; c < 4; ++c) {
      mixed.at(0, c) = m.at(1, c);
      mixed.at(1, c) = m.at(0, c) + m.at(2, c);
      mixed.at(2, c) = m.at(2, c);
      mixed.at(3, c) = m.at(0, c);
    }
    CHECK(row_basis(mixed) == b);
  }
}

TEST_CASE("overflow is detected, never silently wrapped") {
  Scalar big = Scalar::rational((int128{1} << 100));
  CHECK_THROWS_AS(big * big, std::overflow_error);
}

}
