#include <doctest.h>

#include "support.hpp"

using namespace coringlab;
using namespace coringlab::testsupport;

TEST_CASE("trivial corings pass the checker") {
  CHECK(check_coring(trivial_coring(scalar_algebra(Field::rationals()))).ok);
  CHECK(check_coring(trivial_coring(dual_numbers(Field::gf(2)))).ok);
  CHECK(check_coring(fix_mat()).ok);
  CHECK(check_coring(trivial_coring(gf4_algebra())).ok);
}

TEST_CASE("corrupted comultiplication is rejected with a witness") {
  Coring c = trivial_coring(gf4_algebra());
  REQUIRE(c.delta_amb.rows() >= 2);
  Mat bad = c.delta_amb;
  // swap two entries in the first column
  Scalar a = bad.get(0, 0), b = bad.get(1, 0);
  bad.set(0, 0, b);
  bad.set(1, 0, a);
  Coring broken = make_coring(c.base, c.bim, bad, c.counit);
  CheckResult r = check_coring(broken);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.axiom.empty());
  CHECK_FALSE(r.witness.empty());
}

TEST_CASE("comatrix corings: trivial, GF(4), regular") {
  ComatrixFixture triv = fix_triv();
  CHECK(triv.cm.coring.dim() == 1);
  CHECK(check_coring(triv.cm.coring).ok);

  ComatrixFixture g4 = fix_gf4();
  CHECK(g4.cm.coring.dim() == 4);
  CHECK(check_coring(g4.cm.coring).ok);
  // eps(phi (x) u) = phi(u) on pure tensors
  for (std::size_t t = 0; t < g4.dual.dim(); ++t)
    for (std::size_t u = 0; u < g4.sigma.dim; ++u) {
      Mat cls = g4.cm.pure(Mat::unit(g4.sigma.right_alg.field, g4.dual.dim(), t),
                           Mat::unit(g4.sigma.right_alg.field, g4.sigma.dim, u));
      CHECK(g4.cm.coring.counit * cls == g4.dual.functionals[t].col(u));
    }

  // B = A, Sigma = A: comatrix collapses to the trivial coring
  Algebra a4 = gf4_algebra();
  ComatrixFixture reg = build_comatrix(regular_bimodule(a4));
  CHECK(reg.cm.coring.dim() == a4.dim);
  CHECK(check_coring(reg.cm.coring).ok);
}

TEST_CASE("comatrix comultiplication does not depend on the dual basis") {
  std::mt19937_64 rng(77);
  for (int iter = 0; iter < 3; ++iter) {
    ComatrixFixture g4 = fix_gf4();
    Mat extra = random_mat(g4.sigma.right_alg.field, g4.sigma.dim, 1, rng);
    Mat gens = Mat::hstack(Mat::identity(g4.sigma.right_alg.field, g4.sigma.dim), extra);
    auto db2 = dual_basis_for_generators(g4.sigma, g4.dual, gens);
    REQUIRE(db2.has_value());
    ComatrixCoring cm2 = comatrix_coring(g4.sigma, g4.dual, *db2);
    CHECK(cm2.coring.delta == g4.cm.coring.delta);
    CHECK(cm2.coring.counit == g4.cm.coring.counit);
  }
}

TEST_CASE("sweedler coring") {
  // B = A: the coring collapses to the trivial one
  Algebra a4 = gf4_algebra();
  SweedlerCoring idsw = sweedler_coring({a4, a4, Mat::identity(a4.field, a4.dim)});
  CHECK(idsw.coring.dim() == a4.dim);
  CHECK(check_coring(idsw.coring).ok);

  SweedlerCoring sw = fix_sw();
  CHECK(sw.coring.dim() == 4);
  CHECK(check_coring(sw.coring).ok);
  // counit is the multiplication on basis pairs
  const Field& f = a4.field;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Mat cls = sw.taa.pure(Mat::unit(f, 2, i), Mat::unit(f, 2, j));
      CHECK(sw.coring.counit * cls == a4.lmul[i].col(j));
    }
  // identification with the comatrix coring of _B A _A
  ComatrixFixture cm = fix_gf4();
  Mat iso = sweedler_comatrix_identification(sw, cm.cm);
  CHECK(iso.rank() == 4);
}

TEST_CASE("dual corings") {
  // B = A: dual coring is the trivial coring on A*
  Algebra a4 = gf4_algebra();
  DualCoringResult self = dual_coring({a4, a4, Mat::identity(a4.field, a4.dim)});
  CHECK(self.coring.dim() == a4.dim);
  CHECK(check_coring(self.coring).ok);

  // A = k, B = M2(k): the 4-dimensional matrix coalgebra
  Field g2 = Field::gf(2);
  Algebra k = scalar_algebra(g2);
  Algebra m2 = matrix_algebra(g2, 2);
  DualCoringResult mc = dual_coring({k, m2, m2.unit});
  CHECK(mc.coring.dim() == 4);
  CHECK(check_coring(mc.coring).ok);
  // its convolution algebra recovers M2(k): semisimple, center 1, dim 4
  ConvolutionAlgebra conv = convolution_algebra(mc.coring, DualSide::Right);
  CHECK(check_algebra(conv.alg).ok);
  CHECK(conv.alg.dim == 4);
  CHECK(jacobson_radical(conv.alg).rows() == 0);
  CHECK(center(conv.alg).rows() == 1);

  // FIX-XPROD: R* is 4-dimensional over GF(3)
  XprodFixture xp = fix_xprod();
  CHECK(xp.dc.coring.dim() == 4);
  CHECK(check_coring(xp.dc.coring).ok);
}

TEST_CASE("grouplikes") {
  // trivial coring: 1 is grouplike
  Algebra a4 = gf4_algebra();
  Coring tc = trivial_coring(a4);
  CHECK(verify_grouplike(tc, a4.unit));

  // Sweedler: 1 (x) 1
  SweedlerCoring sw = fix_sw();
  CHECK(verify_grouplike(sw.coring, sw.grouplike));
  auto found = grouplike_search(sw.coring);
  bool has = false;
  for (const auto& g : found) has = has || g == sw.grouplike;
  CHECK(has);

  // crossed product: the trace map
  XprodFixture xp = fix_xprod();
  CHECK(verify_grouplike(xp.dc.coring, xp.trace_grouplike));

  // non-grouplike rejected
  Mat z(sw.coring.base.field, sw.coring.dim(), 1);
  CHECK_FALSE(verify_grouplike(sw.coring, z));
}

TEST_CASE("convolution algebras") {
  Algebra a4 = gf4_algebra();
  Coring tc = trivial_coring(a4);
  for (auto side : {DualSide::Left, DualSide::Right}) {
    ConvolutionAlgebra conv = convolution_algebra(tc, side);
    CHECK(check_algebra(conv.alg).ok);
    CHECK(conv.alg.dim == a4.dim);
  }

  SweedlerCoring sw = fix_sw();
  ConvolutionAlgebra conv = convolution_algebra(sw.coring, DualSide::Right);
  CHECK(conv.alg.dim == 4);
  CHECK(check_algebra(conv.alg).ok);

  // the convolution action really is a module action
  std::vector<Mat> act = convolution_action_on_coring(sw.coring, conv);
  RightModule cmod{conv.alg, sw.coring.dim(), act};
  CHECK(check_right_module(cmod).ok);

  ConvolutionAlgebra lconv = convolution_algebra(sw.coring, DualSide::Left);
  LeftModule lmod{lconv.alg, sw.coring.dim(), convolution_action_on_coring(sw.coring, lconv)};
  CHECK(check_left_module(lmod).ok);
}

TEST_CASE("hat anti-isomorphism") {
  ComatrixFixture triv = fix_triv();
  HatIso hi = hat_anti_iso(triv.cm);
  CHECK(hi.bijective);
  REQUIRE(hi.hat.size() == 1);
  CHECK(hi.hat[0] == Mat::identity(Field::rationals(), 1));
  CHECK(check_hat_anti_iso(triv.cm, hi).ok);

  ComatrixFixture g4 = fix_gf4();
  HatIso h4 = hat_anti_iso(g4.cm);
  CHECK(h4.bijective);
  CHECK(h4.hat.size() == 4);  // both sides 4-dimensional over GF(2)
  CHECK(check_hat_anti_iso(g4.cm, h4).ok);
  CHECK(check_right_dual_anti_iso(g4.cm).ok);
}

TEST_CASE("left dual hom functoriality") {
  ComatrixFixture g4 = fix_gf4();
  ConvolutionAlgebra dual = convolution_algebra(g4.cm.coring, DualSide::Left);
  CoringHom idh{g4.cm.coring, g4.cm.coring, Mat::identity(Field::gf(2), 4)};
  AlgebraHom h = left_dual_hom(idh, dual, dual);
  CHECK(check_algebra_hom(h).ok);
  CHECK(h.matrix == Mat::identity(Field::gf(2), 4));
}

TEST_CASE("FIX-NONFLAT coring passes the checker") {
  NonflatFixture nf = fix_nonflat();
  CHECK(nf.ideal_rows.rows() == 3);
  CHECK(check_coring(nf.coring).ok);
  // _A I is not flat while I_A is projective
  CHECK_FALSE(is_flat_fd(nf.coring.bim.left_part()));
  RightModule ia{nf.a, 3, nf.coring.bim.right_act};
  CHECK(is_projective_right(ia));
}
