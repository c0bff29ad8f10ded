#include "coringlab/comodule.hpp"

#include "coringlab/constructions.hpp"

namespace coringlab {

RightComodule make_right_comodule(const Coring& c, const RightModule& m, const Mat& rho_amb) {
  RightComodule rc;
  rc.coring = c;
  rc.mod = m;
  rc.mc = tensor_over(m, c.bim.left_part());
  if (rho_amb.rows() != m.dim * c.dim() || rho_amb.cols() != m.dim)
    throw shape_error("make_right_comodule: coaction has wrong shape");
  rc.rho_amb = rho_amb;
  rc.rho = rc.mc.q.projection * rho_amb;
  return rc;
}

LeftComodule make_left_comodule(const Coring& c, const LeftModule& m, const Mat& lambda_amb) {
  LeftComodule lc;
  lc.coring = c;
  lc.mod = m;
  lc.cm = tensor_over(c.bim.right_part(), m);
  if (lambda_amb.rows() != c.dim() * m.dim || lambda_amb.cols() != m.dim)
    throw shape_error("make_left_comodule: coaction has wrong shape");
  lc.lambda_amb = lambda_amb;
  lc.lambda = lc.cm.q.projection * lambda_amb;
  return lc;
}

namespace {

std::size_t first_bad_column(const Mat& a, const Mat& b) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (a.col(j) != b.col(j)) return j;
  return a.cols();
}

}  // namespace

CheckResult check_right_comodule(const RightComodule& m) {
  const Field& f = m.coring.base.field;
  const std::size_t d = m.mod.dim, c = m.coring.dim();
  CheckResult mm = check_right_module(m.mod);
  if (!mm.ok) return CheckResult::fail("module " + mm.axiom, mm.witness);

  Mat idm = Mat::identity(f, d);
  for (std::size_t i = 0; i < m.coring.base.dim; ++i) {
    Mat outer = induced_map(m.mc, idm, m.coring.bim.right_act[i], m.mc);
    if (m.rho * m.mod.act[i] != outer * m.rho)
      return CheckResult::fail("coaction-A-linearity", "algebra basis " + std::to_string(i));
  }

  // coassociativity: (rho (x) C) rho = (M (x) Delta) rho
  std::vector<Mat> mc_right, cc_left;
  for (std::size_t i = 0; i < m.coring.base.dim; ++i) {
    mc_right.push_back(induced_map(m.mc, idm, m.coring.bim.right_act[i], m.mc));
    cc_left.push_back(m.coring.cc_left_action(i));
  }
  Tensor2 left_nested = tensor_over(f, m.mc.dim(), c, mc_right, m.coring.bim.left_act);
  Tensor2 right_nested = tensor_over(f, d, m.coring.cc.dim(), m.mod.act, cc_left);
  Mat lhs = induced_map(m.mc, m.rho, Mat::identity(f, c), left_nested) * m.rho;
  Mat rhs_nested = induced_map(m.mc, idm, m.coring.delta, right_nested) * m.rho;
  Mat rhs = reassociate(right_nested, m.coring.cc, m.mc, left_nested, d, c) * rhs_nested;
  if (lhs != rhs)
    return CheckResult::fail("coassociativity",
                             "basis vector " + std::to_string(first_bad_column(lhs, rhs)));

  // counit: (M (x) eps) rho = id
  Mat meps(f, d, d * c);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < c; ++j)
      meps.set_block(0, i * c + j, m.mod.act_of(m.coring.counit.col(j)) * Mat::unit(f, d, i));
  Mat law = meps * m.rho_amb;
  if (law != idm)
    return CheckResult::fail("counit law",
                             "basis vector " + std::to_string(first_bad_column(law, idm)));
  return CheckResult::pass();
}

CheckResult check_left_comodule(const LeftComodule& m) {
  const Field& f = m.coring.base.field;
  const std::size_t d = m.mod.dim, c = m.coring.dim();
  CheckResult mm = check_left_module(m.mod);
  if (!mm.ok) return CheckResult::fail("module " + mm.axiom, mm.witness);

  Mat idm = Mat::identity(f, d);
  for (std::size_t i = 0; i < m.coring.base.dim; ++i) {
    Mat outer = induced_map(m.cm, m.coring.bim.left_act[i], idm, m.cm);
    if (m.lambda * m.mod.act[i] != outer * m.lambda)
      return CheckResult::fail("coaction-A-linearity", "algebra basis " + std::to_string(i));
  }

  // coassociativity: (Delta (x) M) lambda = (C (x) lambda) lambda
  std::vector<Mat> cm_left, cc_right;
  for (std::size_t i = 0; i < m.coring.base.dim; ++i) {
    cm_left.push_back(induced_map(m.cm, m.coring.bim.left_act[i], idm, m.cm));
    cc_right.push_back(m.coring.cc_right_action(i));
  }
  Tensor2 right_nested = tensor_over(f, c, m.cm.dim(), m.coring.bim.right_act, cm_left);
  Tensor2 left_nested = tensor_over(f, m.coring.cc.dim(), d, cc_right, m.mod.act);
  Mat rhs_nested = induced_map(m.cm, Mat::identity(f, c), m.lambda, right_nested) * m.lambda;
  Mat rhs = reassociate(right_nested, m.cm, m.coring.cc, left_nested, c, d) * rhs_nested;
  Mat lhs = induced_map(m.cm, m.coring.delta, idm, left_nested) * m.lambda;
  if (lhs != rhs)
    return CheckResult::fail("coassociativity",
                             "basis vector " + std::to_string(first_bad_column(lhs, rhs)));

  // counit: (eps (x) M) lambda = id
  Mat epsm(f, d, c * d);
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < d; ++j)
      epsm.set_block(0, i * d + j, m.mod.act_of(m.coring.counit.col(i)) * Mat::unit(f, d, j));
  Mat law = epsm * m.lambda_amb;
  if (law != idm)
    return CheckResult::fail("counit law",
                             "basis vector " + std::to_string(first_bad_column(law, idm)));
  return CheckResult::pass();
}

RightComodule regular_right_comodule(const Coring& c) {
  RightModule m{c.base, c.dim(), c.bim.right_act};
  return make_right_comodule(c, m, c.delta_amb);
}

LeftComodule regular_left_comodule(const Coring& c) {
  LeftModule m{c.base, c.dim(), c.bim.left_act};
  return make_left_comodule(c, m, c.delta_amb);
}

RightComodule comodule_from_grouplike(const Coring& c, const Mat& g) {
  if (!verify_grouplike(c, g)) throw input_error("comodule_from_grouplike: not a grouplike");
  const Field& f = c.base.field;
  const std::size_t n = c.base.dim;
  RightModule m = regular_right_module(c.base);
  Mat rho_amb(f, n * c.dim(), n);
  for (std::size_t i = 0; i < n; ++i) {
    Mat ga = c.bim.right_of(Mat::unit(f, n, i)) * g;  // g . a_i
    rho_amb.set_block(0, i, Mat::kron(c.base.unit, ga));
  }
  return make_right_comodule(c, m, rho_amb);
}

RightComodule comodule_over_trivial_coring(const Coring& triv, const RightModule& m) {
  const Field& f = triv.base.field;
  Mat rho_amb(f, m.dim * triv.dim(), m.dim);
  for (std::size_t u = 0; u < m.dim; ++u)
    rho_amb.set_block(0, u, Mat::kron(Mat::unit(f, m.dim, u), triv.base.unit));
  return make_right_comodule(triv, m, rho_amb);
}

RightComodule canonical_comatrix_comodule(const ComatrixCoring& cm) {
  const Field& f = cm.sigma.right_alg.field;
  const std::size_t d = cm.sigma.dim;
  Mat rho_amb(f, d * cm.coring.dim(), d);
  for (std::size_t u = 0; u < d; ++u) {
    Mat acc(f, d * cm.coring.dim(), 1);
    for (std::size_t i = 0; i < cm.db.size(); ++i) {
      Mat cls = cm.csp.pure(cm.db.functional_coords.col(i), Mat::unit(f, d, u));
      acc = acc + Mat::kron(cm.db.elements.col(i), cls);
    }
    rho_amb.set_block(0, u, acc);
  }
  return make_right_comodule(cm.coring, cm.sigma.right_part(), rho_amb);
}

LeftComodule comatrix_dual_left_comodule(const ComatrixCoring& cm) {
  const Field& f = cm.sigma.right_alg.field;
  const std::size_t ds = cm.dual.dim(), d = cm.sigma.dim;
  Mat lambda_amb(f, cm.coring.dim() * ds, ds);
  for (std::size_t t = 0; t < ds; ++t) {
    Mat acc(f, cm.coring.dim() * ds, 1);
    for (std::size_t i = 0; i < cm.db.size(); ++i) {
      Mat cls = cm.csp.pure(Mat::unit(f, ds, t), cm.db.elements.col(i));
      acc = acc + Mat::kron(cls, cm.db.functional_coords.col(i));
    }
    lambda_amb.set_block(0, t, acc);
  }
  (void)d;
  return make_left_comodule(cm.coring, cm.dual.bim.left_part(), lambda_amb);
}

std::vector<Mat> colinear_homs(const RightComodule& m, const RightComodule& n) {
  const Field& f = m.coring.base.field;
  const std::size_t dm = m.mod.dim, dn = n.mod.dim, c = m.coring.dim();
  const std::size_t unknowns = dn * dm;
  std::vector<Mat> blocks;
  Mat idm = Mat::identity(f, dm), idn = Mat::identity(f, dn);
  for (std::size_t i = 0; i < m.coring.base.dim; ++i)
    blocks.push_back(Mat::kron(idn, m.mod.act[i].transpose()) - Mat::kron(n.mod.act[i], idm));
  // colinearity column by column
  for (std::size_t u = 0; u < dm; ++u) {
    Mat xu = Mat::unvec(m.rho_amb.col(u), dm, c);
    Mat lhs = n.mc.q.projection * Mat::kron(idn, xu.transpose());
    Mat sel(f, dn, unknowns);
    for (std::size_t r = 0; r < dn; ++r) sel.set_int(r, r * dm + u, 1);
    blocks.push_back(lhs - n.rho * sel);
  }
  Mat sys(f, 0, unknowns);
  for (const auto& b : blocks) sys = sys.rows() == 0 ? b : Mat::vstack(sys, b);
  Mat ker = sys.kernel();
  std::vector<Mat> out;
  for (std::size_t r = 0; r < ker.rows(); ++r)
    out.push_back(Mat::unvec(ker.row(r).transpose(), dn, dm));
  return out;
}

namespace {

Algebra algebra_from_operator_basis(const Field& f, const std::vector<Mat>& ops,
                                    const std::string& prefix) {
  const std::size_t n = ops.size();
  const std::size_t d = ops.empty() ? 0 : ops[0].rows();
  Mat rows(f, n, d * d);
  for (std::size_t t = 0; t < n; ++t) rows.set_block(t, 0, ops[t].vec().transpose());
  Mat bt = rows.transpose();
  auto coords_of = [&](const Mat& op) {
    auto x = bt.solve(op.vec());
    if (!x) throw std::logic_error("operator basis is not multiplicatively closed");
    return *x;
  };
  Algebra alg;
  alg.field = f;
  alg.dim = n;
  for (std::size_t t = 0; t < n; ++t) alg.basis.push_back(prefix + std::to_string(t));
  for (std::size_t s = 0; s < n; ++s) {
    Mat l(f, n, n);
    for (std::size_t t = 0; t < n; ++t) l.set_block(0, t, coords_of(ops[s] * ops[t]));
    alg.lmul.push_back(l);
  }
  alg.unit = coords_of(Mat::identity(f, d));
  return alg;
}

Mat coords_in_operator_basis(const Field& f, const std::vector<Mat>& ops, const Mat& op) {
  const std::size_t n = ops.size();
  const std::size_t d = ops.empty() ? 0 : ops[0].rows();
  Mat rows(f, n, d * d);
  for (std::size_t t = 0; t < n; ++t) rows.set_block(t, 0, ops[t].vec().transpose());
  auto x = rows.transpose().solve(op.vec());
  if (!x) throw input_error("operator does not lie in the given span");
  return *x;
}

}  // namespace

EndoRings endo_rings(const RightComodule& sc) {
  const Field& f = sc.coring.base.field;
  EndoRings er;
  er.s_basis = hom_right(sc.mod, sc.mod);
  er.S = algebra_from_operator_basis(f, er.s_basis, "s");
  er.t_basis = colinear_homs(sc, sc);
  Mat emb(f, er.t_basis.size(), er.S.dim);
  for (std::size_t t = 0; t < er.t_basis.size(); ++t)
    emb.set_block(t, 0, coords_in_operator_basis(f, er.s_basis, er.t_basis[t]).transpose());
  er.T_in_S = subalgebra_from_rows(er.S, emb);
  return er;
}

EndoRings endo_rings(const RightComodule& sc, const Algebra& b,
                     const std::vector<Mat>& left_b_acts) {
  EndoRings er = endo_rings(sc);
  const Field& f = sc.coring.base.field;
  // express each L_b in the T basis
  Mat rows(f, er.t_basis.size(), sc.mod.dim * sc.mod.dim);
  for (std::size_t t = 0; t < er.t_basis.size(); ++t)
    rows.set_block(t, 0, er.t_basis[t].vec().transpose());
  Mat bt = rows.transpose();
  Mat lm(f, er.t_basis.size(), b.dim);
  bool ok = true;
  for (std::size_t i = 0; i < b.dim && ok; ++i) {
    auto coords = bt.solve(left_b_acts[i].vec());
    if (!coords) {
      ok = false;
      break;
    }
    lm.set_block(0, i, *coords);
  }
  if (ok) {
    AlgebraHom hom{b, er.T_in_S.sub, lm};
    if (check_algebra_hom(hom).ok) {
      er.b_to_t = hom;
      er.lambda_matrix = lm;
    }
  }
  return er;
}

Mat balanced_endo_description(const ComatrixCoring& cm, const EndoRings& er) {
  const Field& f = cm.sigma.right_alg.field;
  const Algebra& B = cm.sigma.left_alg;
  const std::size_t d = cm.sigma.dim, ns = er.s_basis.size();
  // S as a right B-module: f . b = f o L(b)
  std::vector<Mat> s_right;
  for (std::size_t i = 0; i < B.dim; ++i) {
    Mat m(f, ns, ns);
    for (std::size_t r = 0; r < ns; ++r)
      m.set_block(0, r,
                  coords_in_operator_basis(f, er.s_basis, er.s_basis[r] * cm.sigma.left_act[i]));
    s_right.push_back(m);
  }
  Tensor2 sop = tensor_over(f, ns, d, s_right, cm.sigma.left_act);
  Mat id_coords = coords_in_operator_basis(f, er.s_basis, Mat::identity(f, d));
  Mat sys(f, 0, ns);
  for (std::size_t u = 0; u < d; ++u) {
    Mat pu(f, sop.dim(), ns), qu(f, sop.dim(), ns);
    for (std::size_t r = 0; r < ns; ++r) {
      pu.set_block(0, r, sop.pure(Mat::unit(f, ns, r), Mat::unit(f, d, u)));
      qu.set_block(0, r, sop.pure(id_coords, er.s_basis[r] * Mat::unit(f, d, u)));
    }
    Mat block = pu - qu;
    sys = sys.rows() == 0 ? block : Mat::vstack(sys, block);
  }
  return sys.kernel();
}

CanMap canonical_map(const RightComodule& sc) {
  const Field& f = sc.coring.base.field;
  const std::size_t d = sc.mod.dim, c = sc.coring.dim();
  CanMap cm;
  cm.endos = endo_rings(sc);

  // Sigma as a T-A-bimodule
  Bimodule sigma_t;
  sigma_t.left_alg = cm.endos.T_in_S.sub;
  sigma_t.right_alg = sc.coring.base;
  sigma_t.dim = d;
  sigma_t.left_act = cm.endos.t_basis;
  sigma_t.right_act = sc.mod.act;

  DualModule dual = dual_module(sigma_t);
  auto db = dual_basis(sigma_t, dual);
  if (!db) throw input_error("canonical_map: Sigma_A is not finitely generated projective");
  cm.source = comatrix_coring(sigma_t, dual, *db);

  // can(phi (x) u) = (phi (x) C) rho(u)
  const std::size_t ds = dual.dim();
  Mat can_amb(f, c, ds * d);
  for (std::size_t t = 0; t < ds; ++t) {
    // (psi_t (x) C): M (x)_k C -> C
    Mat contract(f, c, d * c);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < c; ++j)
        contract.set_block(0, i * c + j,
                           sc.coring.bim.left_of(dual.functionals[t].col(i)) * Mat::unit(f, c, j));
    Mat img = contract * sc.rho_amb;  // (c x d)
    for (std::size_t u = 0; u < d; ++u) can_amb.set_block(0, t * d + u, img.col(u));
  }
  const Mat& rel = cm.source.csp.q.relations;
  if (rel.rows() > 0 && !(can_amb * rel.transpose()).is_zero())
    throw std::logic_error("canonical_map: formula does not annihilate the T-relations");
  Mat can = can_amb * cm.source.csp.q.section;

  cm.hom = CoringHom{cm.source.coring, sc.coring, can};
  CheckResult cr = check_coring_hom(cm.hom);
  if (!cr.ok)
    throw std::logic_error("canonical_map: coring morphism identities failed: " + cr.axiom +
                           " (" + cr.witness + ")");
  return cm;
}

bool is_galois(const RightComodule& sc) {
  CanMap cm = canonical_map(sc);
  return cm.hom.matrix.rows() == cm.hom.matrix.cols() &&
         cm.hom.matrix.rank() == cm.hom.matrix.rows();
}

RightComodule induce_along(const CoringHom& f, const RightComodule& m) {
  const Field& fld = m.coring.base.field;
  Tensor2 mc2 = tensor_over(m.mod, f.target.bim.left_part());
  Mat rho2 = induced_map(m.mc, Mat::identity(fld, m.mod.dim), f.matrix, mc2) * m.rho;
  return make_right_comodule(f.target, m.mod, mc2.q.section * rho2);
}

Cotensor cotensor(const RightComodule& m, const LeftComodule& n) {
  const Field& f = m.coring.base.field;
  const std::size_t dm = m.mod.dim, dn = n.mod.dim;
  Cotensor ct;
  ct.mn = tensor_over(m.mod, n.mod);
  // both maps land in (M (x)_A C) (x)_A N
  std::vector<Mat> mc_right, cn_left;
  for (std::size_t i = 0; i < m.coring.base.dim; ++i) {
    mc_right.push_back(
        induced_map(m.mc, Mat::identity(f, dm), m.coring.bim.right_act[i], m.mc));
    cn_left.push_back(induced_map(n.cm, m.coring.bim.left_act[i], Mat::identity(f, dn), n.cm));
  }
  Tensor2 left_nested = tensor_over(f, m.mc.dim(), dn, mc_right, n.mod.act);
  Tensor2 right_nested = tensor_over(f, dm, n.cm.dim(), m.mod.act, cn_left);
  Mat map1 = induced_map(ct.mn, m.rho, Mat::identity(f, dn), left_nested);
  Mat map2_nested = induced_map(ct.mn, Mat::identity(f, dm), n.lambda, right_nested);
  Mat map2 = reassociate(right_nested, n.cm, m.mc, left_nested, dm, dn) * map2_nested;
  ct.basis = (map1 - map2).kernel();
  return ct;
}

std::vector<RightModule> default_test_modules(const Algebra& b) {
  const Field& f = b.field;
  std::vector<RightModule> out;
  out.push_back(regular_right_module(b));
  // square of the regular module
  RightModule sq{b, 2 * b.dim, {}};
  for (std::size_t i = 0; i < b.dim; ++i) {
    Mat m(f, 2 * b.dim, 2 * b.dim);
    m.set_block(0, 0, b.rmul(i));
    m.set_block(b.dim, b.dim, b.rmul(i));
    sq.act.push_back(m);
  }
  out.push_back(sq);
  // cyclic quotients by radical powers
  Mat rad = jacobson_radical(b);
  Mat power = rad;
  while (power.rows() > 0) {
    Quotient q = quotient_by(f, b.dim, power);
    if (q.dim() == 0) break;
    RightModule quo{b, q.dim(), {}};
    for (std::size_t i = 0; i < b.dim; ++i)
      quo.act.push_back(q.projection * b.rmul(i) * q.section);
    if (check_right_module(quo).ok) out.push_back(quo);
    // next power: rad * power
    RowReducer red(f, b.dim);
    for (std::size_t r = 0; r < power.rows(); ++r)
      for (std::size_t s = 0; s < rad.rows(); ++s)
        red.add_row(b.mul(rad.row(s).transpose(), power.row(r).transpose()).transpose());
    Mat next = red.basis();
    if (next.rows() == power.rows()) break;
    power = next;
  }
  return out;
}

bool DescentReport::all() const {
  bool ok = faithfully_flat && lambda_bijective && lemma_can_iso;
  for (const auto& [name, v] : unit_checks) ok = ok && v;
  for (const auto& [name, v] : counit_checks) ok = ok && v;
  return ok;
}

namespace {

// X (x)_B Sigma as a right comodule over the comatrix coring of Sigma.
RightComodule tensor_up_comodule(const RightModule& x, const ComatrixCoring& cm,
                                 const RightComodule& sigma_comodule, Tensor2* xs_out) {
  const Field& f = cm.sigma.right_alg.field;
  const std::size_t dx = x.dim, d = cm.sigma.dim, c = cm.coring.dim();
  Tensor2 xs = tensor_over(f, dx, d, x.act, cm.sigma.left_act);
  RightModule mod{cm.sigma.right_alg, xs.dim(), {}};
  Mat idx = Mat::identity(f, dx);
  for (std::size_t i = 0; i < cm.sigma.right_alg.dim; ++i)
    mod.act.push_back(induced_map(xs, idx, cm.sigma.right_act[i], xs));
  Mat rho_amb = Mat::kron_apply(xs.q.projection, Mat::identity(f, c),
                                Mat::kron_apply(idx, sigma_comodule.rho_amb, xs.q.section));
  if (xs_out) *xs_out = xs;
  return make_right_comodule(cm.coring, mod, rho_amb);
}

}  // namespace

DescentReport descent_verify(const Bimodule& sigma, const DualModule& dual, const DualBasis& db,
                             const std::vector<RightModule>& test_modules) {
  const Field& f = sigma.right_alg.field;
  DescentReport rep;
  rep.faithfully_flat = is_faithfully_flat_fgp(sigma.left_part());

  ComatrixCoring cm = comatrix_coring(sigma, dual, db);
  RightComodule sc = canonical_comatrix_comodule(cm);
  EndoRings er = endo_rings(sc, sigma.left_alg, sigma.left_act);
  rep.lambda_bijective = er.lambda_matrix.has_value() &&
                         er.lambda_matrix->rows() == er.lambda_matrix->cols() &&
                         er.lambda_matrix->rank() == er.lambda_matrix->rows();

  CanMap can = canonical_map(sc);
  rep.lemma_can_iso = can.hom.matrix.rows() == can.hom.matrix.cols() &&
                      can.hom.matrix.rank() == can.hom.matrix.rows();

  LeftComodule dual_cm = comatrix_dual_left_comodule(cm);

  // (d) units on test modules
  for (std::size_t k = 0; k < test_modules.size(); ++k) {
    const RightModule& x = test_modules[k];
    Tensor2 xs;
    RightComodule xsc = tensor_up_comodule(x, cm, sc, &xs);
    Cotensor ct = cotensor(xsc, dual_cm);
    bool ok = (ct.dim() == x.dim);
    if (ok) {
      Mat theta(f, ct.mn.dim(), x.dim);
      for (std::size_t col = 0; col < x.dim; ++col) {
        Mat acc(f, ct.mn.dim(), 1);
        for (std::size_t i = 0; i < db.size(); ++i) {
          Mat left = xs.pure(Mat::unit(f, x.dim, col), db.elements.col(i));
          acc = acc + ct.mn.pure(left, db.functional_coords.col(i));
        }
        theta.set_block(0, col, acc);
      }
      // express in the cotensor basis and demand bijectivity
      auto coords = ct.basis.transpose().solve(theta);
      ok = coords.has_value() && coords->rank() == x.dim;
    }
    rep.unit_checks.emplace_back("X" + std::to_string(k), ok);
  }

  // (d) counits on the regular comodule and on Sigma itself
  std::vector<std::pair<std::string, RightComodule>> comods;
  comods.emplace_back("C", regular_right_comodule(cm.coring));
  comods.emplace_back("Sigma", sc);
  for (auto& [name, mcom] : comods) {
    Cotensor ct = cotensor(mcom, dual_cm);
    const std::size_t dm = mcom.mod.dim, ds = dual.dim(), dct = ct.dim();
    // right B-module structure on the cotensor
    bool ok = true;
    std::vector<Mat> ct_act;
    Mat basis_t = ct.basis.transpose();
    for (std::size_t i = 0; i < sigma.left_alg.dim && ok; ++i) {
      Mat outer =
          induced_map(ct.mn, Mat::identity(f, dm), dual.bim.right_act[i], ct.mn);
      auto coords = basis_t.solve(outer * basis_t);
      if (!coords) {
        ok = false;
        break;
      }
      ct_act.push_back(*coords);
    }
    if (ok) {
      Tensor2 cts = tensor_over(f, dct, sigma.dim, ct_act, sigma.left_act);
      // evaluation (m (x) phi) (x) u -> m . phi(u)
      Mat eval(f, dm, dct * sigma.dim);
      for (std::size_t w = 0; w < dct; ++w) {
        Mat rep_amb = ct.mn.q.section * ct.basis.row(w).transpose();
        Mat x = Mat::unvec(rep_amb, dm, ds);
        for (std::size_t u = 0; u < sigma.dim; ++u) {
          Mat acc(f, dm, 1);
          for (std::size_t i = 0; i < dm; ++i)
            for (std::size_t t = 0; t < ds; ++t) {
              Scalar cft = x.get(i, t);
              if (!cft.is_zero())
                acc = acc +
                      (mcom.mod.act_of(dual.functionals[t].col(u)) * Mat::unit(f, dm, i))
                          .scaled(cft);
            }
          eval.set_block(0, w * sigma.dim + u, acc);
        }
      }
      if (cts.q.relations.rows() > 0 && !(eval * cts.q.relations.transpose()).is_zero())
        ok = false;
      if (ok) {
        Mat counit_mat = eval * cts.q.section;
        ok = (cts.dim() == dm) && counit_mat.rank() == dm;
      }
    }
    rep.counit_checks.emplace_back(name, ok);
  }
  return rep;
}

GeneratorReport generator_report(const RightComodule& sc) {
  GeneratorReport rep;
  const Field& f = sc.coring.base.field;
  rep.c_left_flat = is_flat_fd(sc.coring.bim.left_part());

  Bimodule plain;
  plain.left_alg = scalar_algebra(f);
  plain.right_alg = sc.coring.base;
  plain.dim = sc.mod.dim;
  plain.left_act = {Mat::identity(f, sc.mod.dim)};
  plain.right_act = sc.mod.act;
  DualModule dual = dual_module(plain);
  rep.sigma_fgp = dual_basis(plain, dual).has_value();
  if (!rep.sigma_fgp) return rep;

  CanMap can = canonical_map(sc);
  rep.can_bijective = can.hom.matrix.rows() == can.hom.matrix.cols() &&
                      can.hom.matrix.rank() == can.hom.matrix.rows();
  rep.t_equals_s = can.endos.t_basis.size() == can.endos.s_basis.size();

  const Algebra& t_alg = can.endos.T_in_S.sub;
  LeftModule sigma_t{t_alg, sc.mod.dim, can.endos.t_basis};
  rep.t_sigma_faithfully_flat = is_faithfully_flat_fgp(sigma_t);

  // S as a left T-module by composition
  LeftModule s_t{t_alg, can.endos.s_basis.size(), {}};
  for (std::size_t i = 0; i < t_alg.dim; ++i) {
    Mat m(f, can.endos.s_basis.size(), can.endos.s_basis.size());
    for (std::size_t r = 0; r < can.endos.s_basis.size(); ++r) {
      Mat rows(f, can.endos.s_basis.size(), sc.mod.dim * sc.mod.dim);
      for (std::size_t q = 0; q < can.endos.s_basis.size(); ++q)
        rows.set_block(q, 0, can.endos.s_basis[q].vec().transpose());
      auto coords = rows.transpose().solve((can.endos.t_basis[i] * can.endos.s_basis[r]).vec());
      if (!coords) throw std::logic_error("generator_report: T S is not inside S");
      m.set_block(0, r, *coords);
    }
    s_t.act.push_back(m);
  }
  rep.t_s_faithfully_flat = is_faithfully_flat_fgp(s_t);

  bool iii = rep.sigma_fgp && rep.can_bijective && rep.t_sigma_faithfully_flat;
  bool iv = rep.c_left_flat && rep.sigma_fgp && rep.can_bijective && rep.t_s_faithfully_flat;
  rep.consistent = (iii == iv);
  rep.remark_pattern = rep.sigma_fgp && rep.can_bijective && rep.t_s_faithfully_flat &&
                       !rep.c_left_flat && rep.t_equals_s;
  return rep;
}

}  // namespace coringlab
