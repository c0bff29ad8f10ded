#include <doctest.h>

#include "coringlab/quotient.hpp"
#include "support.hpp"

using namespace coringlab;
using testsupport::random_mat;

TEST_CASE("scalar arithmetic stays normalized") {
  Field q = Field::rationals();
  Scalar a = q.parse("3/6");
  CHECK(a.str() == "1/2");
  CHECK((a + q.parse("1/2")).str() == "1");
  CHECK(q.parse("-2/-4").str() == "1/2");
  CHECK(q.parse("1/-2").str() == "-1/2");

  Field g5 = Field::gf(5);
  CHECK(g5.parse("7").str() == "2");
  CHECK((g5.from_int(3) * g5.from_int(4)).str() == "2");
  CHECK(g5.from_int(2).inverse().str() == "3");
  CHECK(g5.from_int(-1).str() == "4");
  CHECK_THROWS_AS(Field::gf(6), input_error);
}

TEST_CASE("rank examples") {
  Field g2 = Field::gf(2);
  CHECK(Mat(g2, 0, 0).rank() == 0);
  CHECK(Mat::identity(g2, 3).rank() == 3);

  Field q = Field::rationals();
  Mat m(q, 2, 2);
  m.set_int(0, 0, 1);
  m.set_int(0, 1, 2);
  m.set_int(1, 0, 2);
  m.set_int(1, 1, 4);
  CHECK(m.rank() == 1);
}

TEST_CASE("kernel examples") {
  Field g2 = Field::gf(2);
  CHECK(Mat::identity(g2, 4).kernel().rows() == 0);
  CHECK(Mat(g2, 2, 3).kernel().rows() == 3);

  // oracle: enumerate GF(2)^2 for the null space of [1 1]
  Mat m(g2, 1, 2);
  m.set_int(0, 0, 1);
  m.set_int(0, 1, 1);
  std::vector<Mat> null_vecs;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Mat v(g2, 2, 1);
      v.set_int(0, 0, a);
      v.set_int(1, 0, b);
      if ((m * v).is_zero() && !(a == 0 && b == 0)) null_vecs.push_back(v);
    }
  REQUIRE(null_vecs.size() == 1);
  Mat k = m.kernel();
  REQUIRE(k.rows() == 1);
  CHECK(k.transpose() == null_vecs[0]);
}

TEST_CASE("solve examples") {
  Field g3 = Field::gf(3);
  Mat id = Mat::identity(g3, 3);
  std::mt19937_64 rng(7);
  Mat b = random_mat(g3, 3, 2, rng);
  auto x = id.solve(b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  Mat zero(g3, 2, 2);
  Mat nz(g3, 2, 1);
  nz.set_int(0, 0, 1);
  CHECK_FALSE(zero.solve(nz).has_value());

  // back-substitution oracle: a = [[1,2],[0,1]], b = [[0],[1]] over GF(3)
  Mat a(g3, 2, 2);
  a.set_int(0, 0, 1);
  a.set_int(0, 1, 2);
  a.set_int(1, 1, 1);
  Mat rhs(g3, 2, 1);
  rhs.set_int(1, 0, 1);
  auto sol = a.solve(rhs);
  REQUIRE(sol.has_value());
  CHECK(sol->get(0, 0).str() == "1");
  CHECK(sol->get(1, 0).str() == "1");
}

TEST_CASE("solve_full describes the whole solution set") {
  Field g3 = Field::gf(3);
  std::mt19937_64 rng(9);
  Mat a = random_mat(g3, 3, 4, rng);
  Mat y = random_mat(g3, 4, 1, rng);
  auto s = a.solve_full(a * y);
  REQUIRE(s.has_value());
  const auto& [particular, ker] = *s;
  CHECK(a * particular == a * y);
  CHECK(ker.rows() + a.rank() == a.cols());
  for (std::size_t r = 0; r < ker.rows(); ++r)
    CHECK((a * (particular + ker.row(r).transpose())) == a * y);
}

TEST_CASE("rank-nullity and solve consistency over random matrices") {
  for (auto field : {Field::gf(2), Field::gf(3), Field::gf(5), Field::rationals()}) {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 40; ++iter) {
      std::uniform_int_distribution<std::size_t> dims(0, 6);
      std::size_t r = dims(rng), c = dims(rng);
      Mat m = random_mat(field, r, c, rng);
      Mat k = m.kernel();
      CHECK(m.rank() + k.rows() == c);
      if (k.rows() > 0) CHECK((m * k.transpose()).is_zero());

      // b in the column space must be solved exactly
      Mat y = random_mat(field, c, 2, rng);
      Mat b = m * y;
      auto x = m.solve(b);
      REQUIRE(x.has_value());
      CHECK(m * *x == b);
    }
  }
}

TEST_CASE("quotient examples and invariants") {
  Field g2 = Field::gf(2);
  SUBCASE("no relations") {
    Quotient q = quotient_by(g2, 3, Mat(g2, 0, 3));
    CHECK(q.dim() == 3);
    CHECK(q.projection == Mat::identity(g2, 3));
    CHECK(q.section == Mat::identity(g2, 3));
  }
  SUBCASE("one relation in dim 2") {
    Mat rel(g2, 1, 2);
    rel.set_int(0, 0, 1);
    rel.set_int(0, 1, 1);
    Quotient q = quotient_by(g2, 2, rel);
    CHECK(q.dim() == 1);
    CHECK(q.projection * q.section == Mat::identity(g2, 1));
    CHECK((q.projection * q.relations.transpose()).is_zero());
  }
  SUBCASE("full relations") {
    Quotient q = quotient_by(g2, 4, Mat::identity(g2, 4));
    CHECK(q.dim() == 0);
  }
  SUBCASE("random relations satisfy the contract") {
    for (auto field : {Field::gf(3), Field::rationals()}) {
      std::mt19937_64 rng(5);
      for (int iter = 0; iter < 30; ++iter) {
        std::uniform_int_distribution<std::size_t> dims(1, 7);
        std::size_t n = dims(rng);
        Mat rel = random_mat(field, dims(rng), n, rng);
        Quotient q = quotient_by(field, n, rel);
        CHECK(q.dim() == n - rel.rank());
        CHECK(q.projection * q.section == Mat::identity(field, q.dim()));
        if (rel.rows()) CHECK((q.projection * rel.transpose()).is_zero());
        CHECK(q.projection.rank() == q.dim());
      }
    }
  }
}

TEST_CASE("kron and kron_apply agree") {
  for (auto field : {Field::gf(3), Field::rationals()}) {
    std::mt19937_64 rng(11);
    Mat a = random_mat(field, 3, 2, rng);
    Mat b = random_mat(field, 2, 4, rng);
    Mat m = random_mat(field, 8, 3, rng);
    CHECK(Mat::kron(a, b) * m == Mat::kron_apply(a, b, m));
    // mixed-product property
    Mat c = random_mat(field, 2, 3, rng);
    Mat d = random_mat(field, 4, 2, rng);
    CHECK(Mat::kron(a * c, b * d) == Mat::kron(a, b) * Mat::kron(c, d));
  }
}

TEST_CASE("row reducer matches rref") {
  Field g3 = Field::gf(3);
  std::mt19937_64 rng(3);
  Mat m = random_mat(g3, 6, 5, rng);
  RowReducer red(g3, 5);
  for (std::size_t i = 0; i < m.rows(); ++i) red.add_row(m.row(i));
  CHECK(red.dim() == m.rank());
  Mat b = red.basis();
  Mat r = m.rref();
  CHECK(b == r.block(0, 0, red.dim(), 5));
  CHECK(red.contains(m.row(0)));
}
