#pragma once

#include <random>

#include "coringlab/mat.hpp"

namespace coringlab::testsupport {

inline Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  if (f.is_finite()) {
    std::uniform_int_distribution<long> d(0, f.characteristic() - 1);
    return f.from_int(d(rng));
  }
  std::uniform_int_distribution<long> d(-4, 4);
  return f.from_int(d(rng));
}

inline Mat random_mat(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Mat m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, random_scalar(f, rng));
  return m;
}

inline Mat random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Mat m = random_mat(f, n, n, rng);
    if (m.rank() == n) return m;
  }
}

}  // namespace coringlab::testsupport

#include "coringlab/constructions.hpp"
#include "coringlab/modules.hpp"

namespace coringlab::testsupport {

/// A as a B-A-bimodule along a ring map B -> A.
inline Bimodule bimodule_along(const AlgebraHom& h) {
  Bimodule b;
  b.left_alg = h.source;
  b.right_alg = h.target;
  b.dim = h.target.dim;
  for (std::size_t i = 0; i < h.source.dim; ++i)
    b.left_act.push_back(h.target.lmul_of(h.matrix.col(i)));
  b.right_act = regular_right_action(h.target);
  return b;
}

/// Wraps a right module as a (k, A)-bimodule with trivial left scalars.
inline Bimodule with_trivial_left(const RightModule& m) {
  Bimodule b;
  b.left_alg = scalar_algebra(m.alg.field);
  b.right_alg = m.alg;
  b.dim = m.dim;
  b.left_act = {Mat::identity(m.alg.field, m.dim)};
  b.right_act = m.act;
  return b;
}

/// Unit inclusion of the base field into an algebra.
inline AlgebraHom unit_inclusion(const Algebra& a) {
  return {scalar_algebra(a.field), a, a.unit};
}

/// GF(4) over GF(2) and GF(9) over GF(3) as quotient polynomial algebras.
inline Algebra gf4_algebra() {
  Field g2 = Field::gf(2);
  return quotient_polynomial_algebra(g2, {g2.one(), g2.one()});
}
inline Algebra gf9_algebra() {
  Field g3 = Field::gf(3);
  return quotient_polynomial_algebra(g3, {g3.one(), g3.one()});
}

/// Simple right module of M_n(k): row vectors, act[E_ij] = E_ji.
inline RightModule matrix_row_module(const Algebra& mn, std::size_t n) {
  RightModule m;
  m.alg = mn;
  m.dim = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Mat e(mn.field, n, n);
      e.set_int(j, i, 1);
      m.act.push_back(e);
    }
  return m;
}

/// Conjugates every action matrix by g (change of basis).
inline std::vector<Mat> conjugate_actions(const std::vector<Mat>& act, const Mat& g) {
  Mat gi = *g.inverse();
  std::vector<Mat> out;
  for (const auto& a : act) out.push_back(g * a * gi);
  return out;
}

}  // namespace coringlab::testsupport

#include "coringlab/comodule.hpp"

namespace coringlab::testsupport {

struct ComatrixFixture {
  Bimodule sigma;
  DualModule dual;
  DualBasis db;
  ComatrixCoring cm;
};

inline ComatrixFixture build_comatrix(const Bimodule& sigma) {
  ComatrixFixture fx;
  fx.sigma = sigma;
  fx.dual = dual_module(sigma);
  auto db = dual_basis(sigma, fx.dual);
  if (!db) throw input_error("build_comatrix: sigma is not f.g. projective");
  fx.db = *db;
  fx.cm = comatrix_coring(sigma, fx.dual, fx.db);
  return fx;
}

/// FIX-TRIV: B = A = Sigma = Q.
inline ComatrixFixture fix_triv() {
  Algebra k = scalar_algebra(Field::rationals());
  return build_comatrix(regular_bimodule(k));
}

/// FIX-GF4: Sigma = GF(4) as a (GF(2), GF(4))-bimodule.
inline ComatrixFixture fix_gf4() { return build_comatrix(bimodule_along(unit_inclusion(gf4_algebra()))); }

/// FIX-SW: Sweedler coring of GF(2) -> GF(4).
inline SweedlerCoring fix_sw() { return sweedler_coring(unit_inclusion(gf4_algebra())); }

/// FIX-MAT: trivial coring over M2(GF(3)).
inline Coring fix_mat() { return trivial_coring(matrix_algebra(Field::gf(3), 2)); }

struct XprodFixture {
  Algebra a;         // GF(9) over GF(3)
  Algebra r;         // C2 * GF(9)
  AlgebraHom emb;    // A -> R
  DualCoringResult dc;
  Mat trace_grouplike;  // coords in the coring (= B*) basis
};

/// FIX-XPROD: crossed product of Gal(GF(9)/GF(3)) with GF(9), dual coring R*.
inline XprodFixture fix_xprod() {
  XprodFixture fx;
  fx.a = gf9_algebra();
  const Field g3 = fx.a.field;
  auto autos = field_automorphisms(fx.a);
  // order: identity first
  Mat id2 = Mat::identity(g3, 2);
  Mat frob = autos[0] == id2 ? autos[1] : autos[0];
  fx.r = skew_group_algebra(fx.a, {{0, 1}, {1, 0}}, {0, 1}, {id2, frob});
  Mat embm(g3, 4, 2);
  embm.set_block(0, 0, id2);
  fx.emb = AlgebraHom{fx.a, fx.r, embm};
  fx.dc = dual_coring(fx.emb);
  // trace functional (tau, b) -> b, expressed in the B* basis
  Mat tr(g3, 2, 4);
  tr.set_block(0, 0, id2);
  tr.set_block(0, 2, id2);
  Mat rows(g3, fx.dc.bstar.dim(), 2 * 4);
  for (std::size_t t = 0; t < fx.dc.bstar.dim(); ++t)
    rows.set_block(t, 0, fx.dc.bstar.functionals[t].vec().transpose());
  fx.trace_grouplike = coords_in_rows(rows, tr.vec());
  return fx;
}

struct NonflatFixture {
  Algebra a;       // triangular ring with corner GF(2)[eps]/(eps^2)
  Mat e;           // idempotent with fAe = 0
  Mat ideal_rows;  // basis of I = eA inside A
  Coring coring;   // I with Delta: I = I (x)_A I
  RightComodule comodule;  // I over itself
};

inline NonflatFixture fix_nonflat() {
  Field g2 = Field::gf(2);
  NonflatFixture fx;
  Algebra r0 = dual_numbers(g2);
  Algebra k = scalar_algebra(g2);
  // R0 acts on M = k through the augmentation (eps acts as zero)
  fx.a = triangular_ring(r0, k, 1, {Mat::identity(g2, 1), Mat(g2, 1, 1)},
                         {Mat::identity(g2, 1)});
  fx.e = Mat(g2, 4, 1);
  fx.e.set_int(0, 0, 1);
  // I = eA
  RowReducer red(g2, 4);
  for (std::size_t j = 0; j < 4; ++j)
    red.add_row((fx.a.lmul_of(fx.e) * Mat::unit(g2, 4, j)).transpose());
  fx.ideal_rows = red.basis();
  const std::size_t d = fx.ideal_rows.rows();

  Bimodule bim;
  bim.left_alg = fx.a;
  bim.right_alg = fx.a;
  bim.dim = d;
  bim.left_act = restrict_actions(regular_left_action(fx.a), fx.ideal_rows);
  bim.right_act = restrict_actions(regular_right_action(fx.a), fx.ideal_rows);

  Mat e_coords = coords_in_rows(fx.ideal_rows, fx.e);
  Mat delta_amb(g2, d * d, d);
  for (std::size_t w = 0; w < d; ++w)
    delta_amb.set_block(0, w, Mat::kron(e_coords, Mat::unit(g2, d, w)));
  Mat counit = fx.ideal_rows.transpose();  // inclusion I -> A
  fx.coring = make_coring(fx.a, bim, delta_amb, counit);
  fx.comodule = regular_right_comodule(fx.coring);
  return fx;
}

/// 2-dimensional coring over GF(2) (direct sum of two trivial corings) with
/// the comodule structure on A picking the first grouplike; can is not
/// surjective.
inline RightComodule fix_nongalois() {
  Algebra k = scalar_algebra(Field::gf(2));
  Coring c2 = direct_sum_coring(trivial_coring(k), trivial_coring(k));
  Mat g(Field::gf(2), 2, 1);
  g.set_int(0, 0, 1);
  return comodule_from_grouplike(c2, g);
}

/// Transport of structure along an invertible change of basis P.
inline Algebra change_basis(const Algebra& a, const Mat& p) {
  Mat pi = *p.inverse();
  Algebra out = a;
  for (std::size_t i = 0; i < a.dim; ++i)
    out.lmul[i] = pi * a.lmul_of(p * Mat::unit(a.field, a.dim, i)) * p;
  out.unit = pi * a.unit;
  return out;
}

/// Pool of small associative algebras over GF(p), scrambled by a random
/// change of basis.
inline Algebra random_algebra(const Field& f, std::size_t max_dim, std::mt19937_64& rng) {
  std::vector<Algebra> pool;
  pool.push_back(scalar_algebra(f));
  // an irreducible quadratic per characteristic
  if (f.characteristic() == 2 || f.characteristic() == 3)
    pool.push_back(quotient_polynomial_algebra(f, {f.one(), f.one()}));
  else
    pool.push_back(quotient_polynomial_algebra(f, {f.from_int(2), f.zero()}));
  pool.push_back(dual_numbers(f));
  pool.push_back(direct_product(scalar_algebra(f), scalar_algebra(f)));
  pool.push_back(cyclic_group_algebra(f, 3));
  if (max_dim >= 3) pool.push_back(upper_triangular2(f));
  if (max_dim >= 4) {
    pool.push_back(matrix_algebra(f, 2));
    pool.push_back(cyclic_group_algebra(f, 4));
    pool.push_back(direct_product(dual_numbers(f), scalar_algebra(f)));
  }
  for (;;) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    Algebra a = pool[pick(rng)];
    if (a.dim > max_dim) continue;
    return change_basis(a, random_invertible(f, a.dim, rng));
  }
}

/// Random B-A-bimodule with Sigma_A free (hence f.g. projective), scrambled:
/// Sigma = M (x)_k A for a random left B-module M.
inline Bimodule random_bimodule(const Algebra& b, const Algebra& a, std::size_t max_dim,
                                std::mt19937_64& rng) {
  const Field& f = a.field;
  // random left B-module: a spin-closed subspace of B^2 under left action
  std::vector<Mat> reg2;
  for (std::size_t i = 0; i < b.dim; ++i) {
    Mat m(f, 2 * b.dim, 2 * b.dim);
    m.set_block(0, 0, b.lmul[i]);
    m.set_block(b.dim, b.dim, b.lmul[i]);
    reg2.push_back(m);
  }
  Mat v = random_mat(f, 2 * b.dim, 1, rng);
  RowReducer red(f, 2 * b.dim);
  std::vector<Mat> frontier = {v};
  red.add_row(v.transpose());
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const auto& w : frontier)
      for (const auto& op : reg2) {
        Mat u = op * w;
        if (red.add_row(u.transpose())) next.push_back(u);
      }
    frontier = std::move(next);
  }
  Mat rows = red.basis();
  if (rows.rows() == 0) rows = Mat::identity(f, 2 * b.dim).block(0, 0, 1, 2 * b.dim);
  std::vector<Mat> m_act = restrict_actions(reg2, rows);
  const std::size_t md = rows.rows();
  if (md * a.dim > max_dim) throw input_error("random_bimodule: too large");

  Bimodule sigma;
  sigma.left_alg = b;
  sigma.right_alg = a;
  sigma.dim = md * a.dim;
  Mat ida = Mat::identity(f, a.dim);
  Mat idm = Mat::identity(f, md);
  for (std::size_t i = 0; i < b.dim; ++i) sigma.left_act.push_back(Mat::kron(m_act[i], ida));
  for (std::size_t i = 0; i < a.dim; ++i) sigma.right_act.push_back(Mat::kron(idm, a.rmul(i)));
  Mat g = random_invertible(f, sigma.dim, rng);
  sigma.left_act = conjugate_actions(sigma.left_act, g);
  sigma.right_act = conjugate_actions(sigma.right_act, g);
  return sigma;
}

/// Draws a scrambled bimodule whose comatrix coring stays desk-sized.
inline Bimodule random_comatrix_case(const Field& f, std::mt19937_64& rng, std::size_t max_sigma,
                                     std::size_t max_coring) {
  for (;;) {
    Algebra a = random_algebra(f, 4, rng);
    Algebra b = random_algebra(f, 4, rng);
    Bimodule sigma;
    try {
      sigma = random_bimodule(b, a, max_sigma, rng);
    } catch (const input_error&) {
      continue;
    }
    if (check_bimodule(sigma).ok) {
      DualModule dual = dual_module(sigma);
      Tensor2 csp = tensor_over(dual.bim.right_part(), sigma.left_part());
      if (csp.dim() == 0 || csp.dim() > max_coring) continue;
      return sigma;
    }
  }
}

}  // namespace coringlab::testsupport
