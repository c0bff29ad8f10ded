#include <doctest.h>

#include "coringlab/tensor.hpp"
#include "support.hpp"

using namespace coringlab;
using namespace coringlab::testsupport;

TEST_CASE("hom spaces: Schur behaviour") {
  Field g3 = Field::gf(3);
  Algebra k = scalar_algebra(g3);
  CHECK(hom_right(regular_right_module(k), regular_right_module(k)).size() == 1);

  Algebra m2 = matrix_algebra(g3, 2);
  RightModule simple = matrix_row_module(m2, 2);
  REQUIRE(check_right_module(simple).ok);
  CHECK(hom_right(simple, simple).size() == 1);

  // two non-isomorphic simples over GF(3) x GF(3)
  Algebra kk = direct_product(scalar_algebra(g3), scalar_algebra(g3));
  RightModule s1{kk, 1, {Mat::identity(g3, 1), Mat(g3, 1, 1)}};
  RightModule s2{kk, 1, {Mat(g3, 1, 1), Mat::identity(g3, 1)}};
  REQUIRE(check_right_module(s1).ok);
  REQUIRE(check_right_module(s2).ok);
  CHECK(hom_right(s1, s2).empty());
}

TEST_CASE("dual module dimensions") {
  // Sigma = A as A-A-bimodule: Sigma* = A
  Algebra a4 = gf4_algebra();
  Bimodule aa = regular_bimodule(a4);
  DualModule d = dual_module(aa);
  CHECK(d.dim() == a4.dim);
  CHECK(check_bimodule(d.bim).ok);

  // FIX-GF4: Sigma = GF(4) over B = GF(2), A = GF(4)
  Bimodule sigma = bimodule_along(unit_inclusion(a4));
  REQUIRE(check_bimodule(sigma).ok);
  DualModule ds = dual_module(sigma);
  CHECK(ds.dim() == 2);

  // simple right ideal of M2(GF(3))
  Algebra m2 = matrix_algebra(Field::gf(3), 2);
  Bimodule row = with_trivial_left(matrix_row_module(m2, 2));
  CHECK(dual_module(row).dim() == 2);
}

TEST_CASE("dual basis: free, summand, and failure cases") {
  Field g2 = Field::gf(2);
  Algebra a4 = gf4_algebra();
  Bimodule aa = regular_bimodule(a4);
  DualModule d = dual_module(aa);
  auto db = dual_basis(aa, d);
  REQUIRE(db.has_value());
  CHECK(check_dual_basis(aa, *db).ok);

  // eA over A = GF(3) x GF(3), e = (1, 0)
  Field g3 = Field::gf(3);
  Algebra kk = direct_product(scalar_algebra(g3), scalar_algebra(g3));
  RightModule proj1{kk, 1, {Mat::identity(g3, 1), Mat(g3, 1, 1)}};
  Bimodule p1 = with_trivial_left(proj1);
  auto db1 = dual_basis(p1, dual_module(p1));
  REQUIRE(db1.has_value());
  CHECK(check_dual_basis(p1, *db1).ok);

  // k over GF(2)[eps]/(eps^2) with eps acting as zero: not projective
  Algebra dn = dual_numbers(g2);
  RightModule triv{dn, 1, {Mat::identity(g2, 1), Mat(g2, 1, 1)}};
  REQUIRE(check_right_module(triv).ok);
  Bimodule tb = with_trivial_left(triv);
  CHECK_FALSE(dual_basis(tb, dual_module(tb)).has_value());
}

TEST_CASE("tensor products over an algebra") {
  Algebra a4 = gf4_algebra();
  // A (x)_A A = A
  Tensor2 t = tensor_over(regular_right_module(a4), regular_left_module(a4));
  CHECK(t.dim() == a4.dim);

  // GF(4) (x)_{GF(2)} GF(4): dim 4 over GF(2)
  Bimodule sigma = bimodule_along(unit_inclusion(a4));
  Tensor2 t2 = tensor_over(sigma.right_alg.field, 2, 2, {Mat::identity(sigma.left_alg.field, 2)},
                           {Mat::identity(sigma.left_alg.field, 2)});
  CHECK(t2.dim() == 4);

  // GF(4) (x)_{GF(4)} GF(4): dim 2 over GF(2)
  Tensor2 t3 = tensor_over(regular_right_module(a4), regular_left_module(a4));
  CHECK(t3.dim() == 2);

  // unit isomorphisms: A (x)_A M = M and M (x)_A A = M, explicitly
  Algebra m2 = matrix_algebra(Field::gf(3), 2);
  RightModule simple = matrix_row_module(m2, 2);
  LeftModule simple_l{m2, 2, {}};
  {
    // left module on column vectors: act[E_ij] = E_ij
    for (std::size_t i = 0; i < 4; ++i) {
      Mat e(m2.field, 2, 2);
      e.set_int(i / 2, i % 2, 1);
      simple_l.act.push_back(e);
    }
  }
  REQUIRE(check_left_module(simple_l).ok);
  Tensor2 am = tensor_over(regular_right_module(m2), simple_l);
  CHECK(am.dim() == simple_l.dim);
  Mat iso(m2.field, am.dim(), simple_l.dim);
  for (std::size_t j = 0; j < simple_l.dim; ++j)
    iso.set_block(0, j, am.pure(m2.unit, Mat::unit(m2.field, 2, j)));
  CHECK(iso.rank() == simple_l.dim);

  Tensor2 ma = tensor_over(simple, regular_left_module(m2));
  CHECK(ma.dim() == simple.dim);
  Mat iso2(m2.field, ma.dim(), simple.dim);
  for (std::size_t j = 0; j < simple.dim; ++j)
    iso2.set_block(0, j, ma.pure(Mat::unit(m2.field, 2, j), m2.unit));
  CHECK(iso2.rank() == simple.dim);
}

TEST_CASE("flatness and trace ideals") {
  Field g2 = Field::gf(2), g3 = Field::gf(3);
  Algebra dn = dual_numbers(g2);
  CHECK(is_flat_fd(regular_left_module(dn)));  // free

  // trivial module over the dual numbers is not flat
  LeftModule triv{dn, 1, {Mat::identity(g2, 1), Mat(g2, 1, 1)}};
  REQUIRE(check_left_module(triv).ok);
  CHECK_FALSE(is_flat_fd(triv));

  // simple module over the semisimple M2(GF(3)) is flat
  Algebra m2 = matrix_algebra(g3, 2);
  LeftModule col{m2, 2, {}};
  for (std::size_t i = 0; i < 4; ++i) {
    Mat e(g3, 2, 2);
    e.set_int(i / 2, i % 2, 1);
    col.act.push_back(e);
  }
  CHECK(is_flat_fd(col));

  // trace ideals
  Algebra kk = direct_product(scalar_algebra(g3), scalar_algebra(g3));
  CHECK(trace_ideal(regular_left_module(kk)).rows() == kk.dim);
  LeftModule first{kk, 1, {Mat::identity(g3, 1), Mat(g3, 1, 1)}};
  Mat ti = trace_ideal(first);
  CHECK(ti.rows() == 1);
  CHECK(ti.get(0, 0).is_one());
  CHECK_FALSE(is_faithfully_flat_fgp(first));
  CHECK(is_faithfully_flat_fgp(regular_left_module(kk)));

  // M = T + T generates
  LeftModule tt{kk, 4, {}};
  for (std::size_t i = 0; i < kk.dim; ++i) {
    Mat e(g3, 4, 4);
    e.set_block(0, 0, regular_left_action(kk)[i]);
    e.set_block(2, 2, regular_left_action(kk)[i]);
    tt.act.push_back(e);
  }
  REQUIRE(check_left_module(tt).ok);
  CHECK(is_faithfully_flat_fgp(tt));

  // a nonzero vector space over a field is faithfully flat
  Algebra k2 = scalar_algebra(g2);
  LeftModule vec{k2, 2, {Mat::identity(g2, 2)}};
  CHECK(is_faithfully_flat_fgp(vec));
}

namespace {

// xi: Sigma (x)_A Sigma* -> End(Sigma), u (x) phi -> [v -> u . phi(v)]
Mat xi_matrix(const Bimodule& sigma, const DualModule& dual, const Tensor2& ssd) {
  const Field& f = sigma.right_alg.field;
  const std::size_t d = sigma.dim, ds = dual.dim();
  Mat xi(f, d * d, d * ds);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t t = 0; t < ds; ++t) {
      Mat endo(f, d, d);
      for (std::size_t l = 0; l < d; ++l) {
        Mat val = sigma.right_part().act_of(dual.functionals[t].col(l)) * Mat::unit(f, d, i);
        endo.set_block(0, l, val);
      }
      xi.set_block(0, i * ds + t, endo.vec());
    }
  (void)ssd;
  return xi;
}

}  // namespace

TEST_CASE("Casimir element: centrality, base independence, xi image") {
  std::mt19937_64 rng(2024);
  Algebra a4 = gf4_algebra();
  Bimodule sigma = bimodule_along(unit_inclusion(a4));

  // also run a scrambled copy to exercise the solver with nontrivial coords
  Bimodule scrambled = sigma;
  Mat g = random_invertible(sigma.right_alg.field, sigma.dim, rng);
  scrambled.left_act = conjugate_actions(sigma.left_act, g);
  scrambled.right_act = conjugate_actions(sigma.right_act, g);
  REQUIRE(check_bimodule(scrambled).ok);

  for (const Bimodule& sm : {sigma, scrambled}) {
    DualModule dual = dual_module(sm);
    auto db = dual_basis(sm, dual);
    REQUIRE(db.has_value());
    CHECK(check_dual_basis(sm, *db).ok);

    // Sigma (x)_A Sigma*
    LeftModule dual_left{sm.right_alg, dual.dim(), dual.bim.left_act};
    Tensor2 ssd = tensor_over(sm.right_part(), dual_left);

    auto casimir = [&](const DualBasis& basis) {
      Mat e(sm.right_alg.field, ssd.dim(), 1);
      for (std::size_t i = 0; i < basis.size(); ++i)
        e = e + ssd.pure(basis.elements.col(i), basis.functional_coords.col(i));
      return e;
    };
    Mat e1 = casimir(*db);

    // centrality: for every b in B, sum (b e_i) (x) e_i* = sum e_i (x) (e_i* b)
    for (std::size_t bi = 0; bi < sm.left_alg.dim; ++bi) {
      Mat lhs(sm.right_alg.field, ssd.dim(), 1);
      Mat rhs(sm.right_alg.field, ssd.dim(), 1);
      for (std::size_t i = 0; i < db->size(); ++i) {
        lhs = lhs + ssd.pure(sm.left_act[bi] * db->elements.col(i), db->functional_coords.col(i));
        rhs = rhs + ssd.pure(db->elements.col(i),
                             dual.bim.right_act[bi] * db->functional_coords.col(i));
      }
      CHECK(lhs == rhs);
    }

    // independence of the generating set: basis plus a redundant generator
    Mat gens = Mat::hstack(Mat::identity(sm.right_alg.field, sm.dim),
                           random_mat(sm.right_alg.field, sm.dim, 1, rng));
    auto db2 = dual_basis_for_generators(sm, dual, gens);
    REQUIRE(db2.has_value());
    CHECK(casimir(*db2) == e1);

    // xi sends the Casimir element to the identity endomorphism
    Mat xi = xi_matrix(sm, dual, ssd);
    CHECK((xi * ssd.q.relations.transpose()).is_zero());
    Mat id_flat = Mat::identity(sm.right_alg.field, sm.dim).vec();
    CHECK(xi * ssd.q.section * e1 == id_flat);
  }
}

TEST_CASE("reassociation of nested tensor quotients is an isomorphism") {
  Algebra a4 = gf4_algebra();
  Bimodule aa = regular_bimodule(a4);
  // X = Y = Z = A over A: build both nestings of A (x)_A A (x)_A A
  Tensor2 yz = tensor_over(regular_right_module(a4), regular_left_module(a4));
  Tensor2 xy = yz;
  // right-nested: X (x)_A (YZ); left action on YZ is the induced outer one
  std::vector<Mat> yz_left;
  for (std::size_t i = 0; i < a4.dim; ++i)
    yz_left.push_back(induced_map(yz, a4.lmul[i], Mat::identity(a4.field, a4.dim), yz));
  Tensor2 right_nested = tensor_over(a4.field, a4.dim, yz.dim(), regular_right_action(a4), yz_left);
  std::vector<Mat> xy_right;
  for (std::size_t i = 0; i < a4.dim; ++i)
    xy_right.push_back(induced_map(xy, Mat::identity(a4.field, a4.dim), a4.rmul(i), xy));
  Tensor2 left_nested = tensor_over(a4.field, xy.dim(), a4.dim, xy_right, regular_left_action(a4));
  Mat assoc = reassociate(right_nested, yz, xy, left_nested, a4.dim, a4.dim);
  CHECK(assoc.rows() == left_nested.dim());
  CHECK(assoc.cols() == right_nested.dim());
  CHECK(assoc.rank() == left_nested.dim());
  CHECK(left_nested.dim() == right_nested.dim());
}
