#include "coringlab/modules.hpp"

namespace coringlab {

namespace {

Mat combo(const Field& f, const std::vector<Mat>& mats, const Mat& coeffs, std::size_t d) {
  Mat m(f, d, d);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    Scalar c = coeffs.get(i, 0);
    if (!c.is_zero()) m.add_scaled(mats[i], c);
  }
  return m;
}

}  // namespace

Mat RightModule::act_of(const Mat& a) const { return combo(alg.field, act, a, dim); }
Mat LeftModule::act_of(const Mat& a) const { return combo(alg.field, act, a, dim); }

CheckResult check_right_module(const RightModule& m) {
  if (m.act.size() != m.alg.dim) return CheckResult::fail("shape", "action count != algebra dim");
  for (const auto& a : m.act)
    if (a.rows() != m.dim || a.cols() != m.dim)
      return CheckResult::fail("shape", "action matrix not dim x dim");
  if (m.act_of(m.alg.unit) != Mat::identity(m.alg.field, m.dim))
    return CheckResult::fail("unit", "unit does not act as identity");
  for (std::size_t i = 0; i < m.alg.dim; ++i)
    for (std::size_t j = 0; j < m.alg.dim; ++j)
      if (m.act[j] * m.act[i] != m.act_of(m.alg.lmul[i].col(j)))
        return CheckResult::fail("associativity",
                                 "(x.b" + std::to_string(i) + ").b" + std::to_string(j));
  return CheckResult::pass();
}

CheckResult check_left_module(const LeftModule& m) {
  if (m.act.size() != m.alg.dim) return CheckResult::fail("shape", "action count != algebra dim");
  for (const auto& a : m.act)
    if (a.rows() != m.dim || a.cols() != m.dim)
      return CheckResult::fail("shape", "action matrix not dim x dim");
  if (m.act_of(m.alg.unit) != Mat::identity(m.alg.field, m.dim))
    return CheckResult::fail("unit", "unit does not act as identity");
  for (std::size_t i = 0; i < m.alg.dim; ++i)
    for (std::size_t j = 0; j < m.alg.dim; ++j)
      if (m.act[i] * m.act[j] != m.act_of(m.alg.lmul[i].col(j)))
        return CheckResult::fail("associativity",
                                 "b" + std::to_string(i) + ".(b" + std::to_string(j) + ".x)");
  return CheckResult::pass();
}

CheckResult check_bimodule(const Bimodule& m) {
  CheckResult l = check_left_module(m.left_part());
  if (!l.ok) return CheckResult::fail("left " + l.axiom, l.witness);
  CheckResult r = check_right_module(m.right_part());
  if (!r.ok) return CheckResult::fail("right " + r.axiom, r.witness);
  for (std::size_t i = 0; i < m.left_alg.dim; ++i)
    for (std::size_t j = 0; j < m.right_alg.dim; ++j)
      if (m.left_act[i] * m.right_act[j] != m.right_act[j] * m.left_act[i])
        return CheckResult::fail("compatibility", "left b" + std::to_string(i) +
                                                      " does not commute with right b" +
                                                      std::to_string(j));
  return CheckResult::pass();
}

RightModule regular_right_module(const Algebra& a) { return {a, a.dim, regular_right_action(a)}; }
LeftModule regular_left_module(const Algebra& a) { return {a, a.dim, regular_left_action(a)}; }

Bimodule regular_bimodule(const Algebra& a) {
  return {a, a, a.dim, regular_left_action(a), regular_right_action(a)};
}

namespace {

// kernel of the stacked intertwining conditions f.A_i = B_i.f over vec(f)
std::vector<Mat> intertwiners(const Field& fld, std::size_t dm, std::size_t dn,
                              const std::vector<Mat>& am, const std::vector<Mat>& bn) {
  const std::size_t unknowns = dn * dm;
  Mat sys(fld, 0, unknowns);
  std::vector<Mat> rows;
  Mat idn = Mat::identity(fld, dn);
  Mat idm = Mat::identity(fld, dm);
  for (std::size_t i = 0; i < am.size(); ++i) {
    // vec(f * A_i) - vec(B_i * f) = [kron(I, A_i^T) - kron(B_i, I)] vec(f)
    Mat block = Mat::kron(idn, am[i].transpose()) - Mat::kron(bn[i], idm);
    sys = sys.rows() == 0 ? block : Mat::vstack(sys, block);
  }
  Mat ker = sys.kernel();
  std::vector<Mat> out;
  for (std::size_t r = 0; r < ker.rows(); ++r)
    out.push_back(Mat::unvec(ker.row(r).transpose(), dn, dm));
  return out;
}

}  // namespace

std::vector<Mat> hom_right(const RightModule& m, const RightModule& n) {
  if (!(m.alg.field == n.alg.field) || m.alg.dim != n.alg.dim)
    throw input_error("hom_right: modules over different algebras");
  return intertwiners(m.alg.field, m.dim, n.dim, m.act, n.act);
}

std::vector<Mat> hom_left(const LeftModule& m, const LeftModule& n) {
  if (!(m.alg.field == n.alg.field) || m.alg.dim != n.alg.dim)
    throw input_error("hom_left: modules over different algebras");
  return intertwiners(m.alg.field, m.dim, n.dim, m.act, n.act);
}

Mat DualModule::eval(const Mat& c, const Mat& u) const {
  Mat v(bim.left_alg.field, functionals.empty() ? 0 : functionals[0].rows(), 1);
  for (std::size_t t = 0; t < functionals.size(); ++t) {
    Scalar ct = c.get(t, 0);
    if (!ct.is_zero()) v = v + (functionals[t] * u).scaled(ct);
  }
  return v;
}

DualModule dual_module(const Bimodule& sigma) {
  const Field& f = sigma.right_alg.field;
  const Algebra& A = sigma.right_alg;
  const Algebra& B = sigma.left_alg;
  std::vector<Mat> funs = hom_right(sigma.right_part(), regular_right_module(A));
  const std::size_t d = funs.size();

  // coordinates of an arbitrary functional within the chosen basis
  Mat basis_rows(f, d, A.dim * sigma.dim);
  for (std::size_t t = 0; t < d; ++t) basis_rows.set_block(t, 0, funs[t].vec().transpose());
  Mat bt = basis_rows.transpose();
  auto coords_of = [&](const Mat& fn) {
    auto c = bt.solve(fn.vec());
    if (!c) throw std::logic_error("dual_module: functional escaped the hom space");
    return *c;
  };

  Bimodule dual;
  dual.left_alg = A;
  dual.right_alg = B;
  dual.dim = d;
  for (std::size_t i = 0; i < A.dim; ++i) {
    Mat m(f, d, d);
    for (std::size_t t = 0; t < d; ++t)
      m.set_block(0, t, coords_of(A.lmul[i] * funs[t]));  // (a.phi)(u) = a.phi(u)
    dual.left_act.push_back(m);
  }
  for (std::size_t i = 0; i < B.dim; ++i) {
    Mat m(f, d, d);
    for (std::size_t t = 0; t < d; ++t)
      m.set_block(0, t, coords_of(funs[t] * sigma.left_act[i]));  // (phi.b)(u) = phi(b.u)
    dual.right_act.push_back(m);
  }
  return {dual, funs};
}

std::optional<DualBasis> dual_basis(const Bimodule& sigma, const DualModule& dual) {
  return dual_basis_for_generators(sigma, dual,
                                   Mat::identity(sigma.right_alg.field, sigma.dim));
}

std::optional<DualBasis> dual_basis_for_generators(const Bimodule& sigma, const DualModule& dual,
                                                   const Mat& generators) {
  const Field& f = sigma.right_alg.field;
  const Algebra& A = sigma.right_alg;
  const std::size_t d = sigma.dim;
  const std::size_t n = generators.cols();
  const std::size_t ds = dual.dim();
  if (generators.rows() != d) throw shape_error("dual_basis: generators have wrong height");

  // unknowns x[j][t]: phi_j = sum_t x[j][t] psi_t; equations per basis u:
  //   sum_{j,t} x[j][t] (m_j . psi_t(u)) = u
  const std::size_t unknowns = n * ds;
  Mat sys(f, d * d, unknowns);
  for (std::size_t j = 0; j < n; ++j) {
    const Mat mj = generators.col(j);
    for (std::size_t t = 0; t < ds; ++t) {
      const Mat& psi = dual.functionals[t];
      for (std::size_t u = 0; u < d; ++u) {
        Mat contrib = sigma.right_part().act_of(psi.col(u)) * mj;  // m_j . psi_t(e_u)
        for (std::size_t r = 0; r < d; ++r) sys.set(u * d + r, j * ds + t, contrib.get(r, 0));
      }
    }
  }
  Mat rhs(f, d * d, 1);
  for (std::size_t u = 0; u < d; ++u) rhs.set_int(u * d + u, 0, 1);
  auto x = sys.solve(rhs);
  if (!x) return std::nullopt;

  DualBasis db;
  db.elements = generators;
  db.functional_coords = Mat(f, ds, n);
  for (std::size_t j = 0; j < n; ++j) {
    Mat fn(f, A.dim, d);
    Mat cj(f, ds, 1);
    for (std::size_t t = 0; t < ds; ++t) {
      Scalar c = x->get(j * ds + t, 0);
      cj.set(t, 0, c);
      if (!c.is_zero()) fn.add_scaled(dual.functionals[t], c);
    }
    db.functionals.push_back(fn);
    db.functional_coords.set_block(0, j, cj);
  }
  return db;
}

CheckResult check_dual_basis(const Bimodule& sigma, const DualBasis& db) {
  const std::size_t d = sigma.dim;
  for (std::size_t u = 0; u < d; ++u) {
    Mat e = Mat::unit(sigma.right_alg.field, d, u);
    Mat acc(sigma.right_alg.field, d, 1);
    for (std::size_t i = 0; i < db.size(); ++i)
      acc = acc + sigma.right_part().act_of(db.functionals[i] * e) * db.elements.col(i);
    if (acc != e)
      return CheckResult::fail("dual basis", "basis vector " + std::to_string(u));
  }
  return CheckResult::pass();
}

std::vector<Mat> left_functionals(const LeftModule& m) {
  return hom_left(m, regular_left_module(m.alg));
}

std::optional<LeftDualBasis> left_dual_basis(const LeftModule& m) {
  const Field& f = m.alg.field;
  const std::size_t d = m.dim;
  std::vector<Mat> funs = left_functionals(m);
  const std::size_t ds = funs.size();
  // unknowns x[j][t]: phi_j = sum_t x[j][t] psi_t; equations:
  //   sum_j phi_j(e_u) . m_j = e_u     (left action of phi_j(e_u) on m_j)
  const std::size_t unknowns = d * ds;
  Mat sys(f, d * d, unknowns);
  for (std::size_t j = 0; j < d; ++j) {
    const Mat mj = Mat::unit(f, d, j);
    for (std::size_t t = 0; t < ds; ++t) {
      for (std::size_t u = 0; u < d; ++u) {
        Mat contrib = m.act_of(funs[t].col(u)) * mj;
        for (std::size_t r = 0; r < d; ++r) sys.set(u * d + r, j * ds + t, contrib.get(r, 0));
      }
    }
  }
  Mat rhs(f, d * d, 1);
  for (std::size_t u = 0; u < d; ++u) rhs.set_int(u * d + u, 0, 1);
  auto x = sys.solve(rhs);
  if (!x) return std::nullopt;
  LeftDualBasis db;
  db.elements = Mat::identity(f, d);
  for (std::size_t j = 0; j < d; ++j) {
    Mat fn(f, m.alg.dim, d);
    for (std::size_t t = 0; t < ds; ++t) {
      Scalar c = x->get(j * ds + t, 0);
      if (!c.is_zero()) fn.add_scaled(funs[t], c);
    }
    db.functionals.push_back(fn);
  }
  return db;
}

bool is_flat_fd(const LeftModule& m) { return left_dual_basis(m).has_value(); }

bool is_projective_right(const RightModule& m) {
  Bimodule b;
  b.left_alg = m.alg;  // unused scalar placeholder: treat as bimodule over (A, A)
  b.right_alg = m.alg;
  b.dim = m.dim;
  b.right_act = m.act;
  for (std::size_t i = 0; i < m.alg.dim; ++i) b.left_act.push_back(Mat::identity(m.alg.field, m.dim));
  // left action is irrelevant for the right dual-basis system; build dual directly
  DualModule dual;
  dual.functionals = hom_right(m, regular_right_module(m.alg));
  dual.bim.dim = dual.functionals.size();
  dual.bim.left_alg = m.alg;
  dual.bim.right_alg = m.alg;
  Bimodule sigma = b;
  return dual_basis_for_generators(sigma, dual, Mat::identity(m.alg.field, m.dim)).has_value();
}

Mat trace_ideal(const LeftModule& m) {
  const Field& f = m.alg.field;
  std::vector<Mat> funs = left_functionals(m);
  RowReducer red(f, m.alg.dim);
  for (const auto& fn : funs)
    for (std::size_t u = 0; u < m.dim; ++u) red.add_row(fn.col(u).transpose());
  return red.basis();
}

bool is_faithfully_flat_fgp(const LeftModule& m) {
  if (!is_flat_fd(m)) return false;
  return trace_ideal(m).rows() == m.alg.dim;
}

Mat coords_in_rows(const Mat& rows, const Mat& ambient_cols) {
  auto x = rows.transpose().solve(ambient_cols);
  if (!x) throw input_error("coords_in_rows: column outside the row space");
  return *x;
}

std::vector<Mat> restrict_actions(const std::vector<Mat>& acts, const Mat& rows) {
  std::vector<Mat> out;
  for (const auto& a : acts) out.push_back(coords_in_rows(rows, a * rows.transpose()));
  return out;
}

}  // namespace coringlab
