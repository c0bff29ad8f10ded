#include <doctest.h>

#include "coringlab/cosemisimple.hpp"
#include "support.hpp"

using namespace coringlab;
using namespace coringlab::testsupport;

TEST_CASE("is_cosemisimple") {
  CHECK(is_cosemisimple(fix_sw().coring));                              // D (x)_E D case
  CHECK(is_cosemisimple(fix_mat()));                                    // trivial over M2
  CHECK_FALSE(is_cosemisimple(trivial_coring(dual_numbers(Field::gf(2)))));
  CHECK(is_cosemisimple(trivial_coring(gf4_algebra())));
  CHECK(is_cosemisimple(fix_xprod().dc.coring));
}

TEST_CASE("decompose the trivial coring over M2(GF(3))") {
  Coring c = fix_mat();
  CosemisimpleReport rep = decompose(c, 0);
  CHECK(rep.cosemisimple);
  REQUIRE(rep.blocks.size() == 1);
  const CosemisimpleBlock& b = rep.blocks[0];
  CHECK(b.embedding.rows() == 4);
  CHECK(b.simple.mod.dim == 2);
  CHECK(b.division.dim == 1);
  CHECK(b.division_certified == Tri::True);
  CHECK(b.comatrix_dim == 4);
  CHECK(b.can_bijective);
  CHECK(rep.blocks_complementary);
  CHECK(check_coring(b.block_coring).ok);
  CHECK(check_right_comodule(b.simple).ok);

  // exhaustive minimality oracle: no stable line inside Sigma
  ConvolutionAlgebra lconv = convolution_algebra(c, DualSide::Left);
  std::vector<Mat> ops = convolution_action_on_coring(c, lconv);
  std::vector<Mat> sigma_ops = restrict_actions(ops, b.simple_in_c);
  const Field g3 = Field::gf(3);
  for (int a0 = 0; a0 < 3; ++a0)
    for (int a1 = 0; a1 < 3; ++a1) {
      if (a0 == 0 && a1 == 0) continue;
      Mat v(g3, 2, 1);
      v.set_int(0, 0, a0);
      v.set_int(1, 0, a1);
      RowReducer line(g3, 2);
      line.add_row(v.transpose());
      bool stable = true;
      for (const auto& op : sigma_ops) stable = stable && line.contains((op * v).transpose());
      CHECK_FALSE(stable);
    }
}

TEST_CASE("decompose FIX-SW") {
  SweedlerCoring sw = fix_sw();
  CosemisimpleReport rep = decompose(sw.coring, 0);
  CHECK(rep.cosemisimple);
  REQUIRE(rep.blocks.size() == 1);
  CHECK(rep.blocks[0].simple.mod.dim == 2);      // Sigma = A = GF(4)
  CHECK(rep.blocks[0].division.dim == 1);        // D = T = GF(2)
  CHECK(rep.blocks[0].division_certified == Tri::True);
  CHECK(rep.blocks[0].can_bijective);
  CHECK(rep.blocks[0].comatrix_dim == 4);
}

TEST_CASE("direct sum decomposes into two blocks") {
  Algebra a4 = gf4_algebra();
  Coring two = direct_sum_coring(trivial_coring(a4), trivial_coring(a4));
  CHECK(is_cosemisimple(two));
  CosemisimpleReport rep = decompose(two, 0);
  REQUIRE(rep.blocks.size() == 2);
  CHECK(rep.blocks[0].embedding.rows() == 2);
  CHECK(rep.blocks[1].embedding.rows() == 2);
  CHECK(rep.blocks_complementary);
  for (const auto& b : rep.blocks) {
    CHECK(b.can_bijective);
    CHECK(check_coring(b.block_coring).ok);
  }
}

TEST_CASE("non-cosemisimple corings are rejected") {
  Coring c = trivial_coring(dual_numbers(Field::gf(2)));
  CosemisimpleReport rep = decompose(c, 0);
  CHECK_FALSE(rep.cosemisimple);
  CHECK(rep.c_projective);
  CHECK_FALSE(rep.semisimple_module);
  CHECK(rep.blocks.empty());
}

TEST_CASE("decomposition is deterministic across seeds") {
  Coring c = fix_mat();
  CosemisimpleReport base = decompose(c, 0);
  for (std::uint64_t seed = 1; seed < 4; ++seed) {
    CosemisimpleReport other = decompose(c, seed);
    REQUIRE(other.blocks.size() == base.blocks.size());
    for (std::size_t i = 0; i < base.blocks.size(); ++i)
      CHECK(other.blocks[i].embedding == base.blocks[i].embedding);
  }
}

TEST_CASE("conjugacy witnesses") {
  Field g3 = Field::gf(3);
  Algebra m2 = matrix_algebra(g3, 2);
  RightModule sigma = matrix_row_module(m2, 2);
  std::vector<Mat> d_basis = {Mat::identity(g3, 2)};

  // identity witness
  CHECK(verify_conjugacy(sigma, d_basis, sigma, d_basis, Mat::identity(g3, 2)));

  // conjugated presentation: found by exhaustive search
  std::mt19937_64 rng(5);
  Mat g0 = random_invertible(g3, 2, rng);
  RightModule xi{m2, 2, conjugate_actions(sigma.act, g0)};
  REQUIRE(check_right_module(xi).ok);
  auto g = conjugacy_search(sigma, d_basis, xi, d_basis);
  REQUIRE(g.has_value());
  CHECK(verify_conjugacy(sigma, d_basis, xi, d_basis, *g));

  // dimension obstruction
  std::vector<Mat> e_big = {Mat::identity(g3, 2), Mat(g3, 2, 2)};
  CHECK_FALSE(verify_conjugacy(sigma, d_basis, xi, e_big, *g));

  // a non-intertwining map is rejected
  Mat bad = Mat::identity(g3, 2);
  bad.set_int(0, 1, 1);
  if (bad * sigma.act[1] != xi.act[1] * bad)
    CHECK_FALSE(verify_conjugacy(sigma, d_basis, xi, d_basis, bad));
}

TEST_CASE("blocks of a cosemisimple coring are Delta-stable complements") {
  XprodFixture xp = fix_xprod();
  CosemisimpleReport rep = decompose(xp.dc.coring, 0);
  CHECK(rep.cosemisimple);
  std::size_t total = 0;
  for (const auto& b : rep.blocks) {
    total += b.embedding.rows();
    CHECK(b.can_bijective);
  }
  CHECK(total == xp.dc.coring.dim());
}
