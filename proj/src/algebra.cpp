#include "coringlab/algebra.hpp"

#include <cstdint>
#include <random>

namespace coringlab {

std::string to_string(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    default: return "Undecided";
  }
}

Mat Algebra::lmul_of(const Mat& x) const {
  Mat m(field, dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    Scalar c = x.get(i, 0);
    if (!c.is_zero()) m.add_scaled(lmul[i], c);
  }
  return m;
}

Mat Algebra::rmul(std::size_t j) const {
  Mat m(field, dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    // column i = coords of b_i * b_j
    Mat c = lmul[i].col(j);
    m.set_block(0, i, c);
  }
  return m;
}

Mat Algebra::rmul_of(const Mat& x) const {
  Mat m(field, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Scalar c = x.get(j, 0);
    if (!c.is_zero()) m.add_scaled(rmul(j), c);
  }
  return m;
}

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      if (lmul[i].col(j) != lmul[j].col(i)) return false;
  return true;
}

Algebra make_algebra(const Field& f, std::vector<std::string> basis,
                     const std::vector<std::vector<Mat>>& table, Mat unit) {
  Algebra a;
  a.field = f;
  a.dim = table.size();
  if (basis.empty())
    for (std::size_t i = 0; i < a.dim; ++i) basis.push_back("e" + std::to_string(i));
  a.basis = std::move(basis);
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (table[i].size() != a.dim) throw input_error("make_algebra: ragged table");
    Mat l(f, a.dim, a.dim);
    for (std::size_t j = 0; j < a.dim; ++j) {
      if (table[i][j].rows() != a.dim || table[i][j].cols() != 1)
        throw input_error("make_algebra: product coordinates have wrong shape");
      l.set_block(0, j, table[i][j]);
    }
    a.lmul.push_back(l);
  }
  a.unit = std::move(unit);
  if (a.unit.rows() != a.dim || a.unit.cols() != 1)
    throw input_error("make_algebra: unit has wrong shape");
  return a;
}

CheckResult check_algebra(const Algebra& a) {
  if (a.lmul.size() != a.dim) return CheckResult::fail("shape", "lmul count != dim");
  for (std::size_t i = 0; i < a.dim; ++i)
    if (a.lmul[i].rows() != a.dim || a.lmul[i].cols() != a.dim)
      return CheckResult::fail("shape", "lmul[" + std::to_string(i) + "] not dim x dim");

  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      // L(b_i) L(b_j) must equal L(b_i b_j); covers associativity on triples
      Mat lhs = a.lmul[i] * a.lmul[j];
      Mat rhs = a.lmul_of(a.lmul[i].col(j));
      if (lhs != rhs) {
        for (std::size_t k = 0; k < a.dim; ++k)
          if (lhs.col(k) != rhs.col(k))
            return CheckResult::fail(
                "associativity", "(b" + std::to_string(i) + "*b" + std::to_string(j) + ")*b" +
                                     std::to_string(k) + " != b" + std::to_string(i) + "*(b" +
                                     std::to_string(j) + "*b" + std::to_string(k) + ")");
      }
    }

  if (a.lmul_of(a.unit) != Mat::identity(a.field, a.dim))
    return CheckResult::fail("unit", "unit is not a left identity");
  if (a.rmul_of(a.unit) != Mat::identity(a.field, a.dim))
    return CheckResult::fail("unit", "unit is not a right identity");
  return CheckResult::pass();
}

CheckResult check_algebra_hom(const AlgebraHom& h) {
  if (h.source.field != h.target.field) return CheckResult::fail("field", "field mismatch");
  if (h.matrix.rows() != h.target.dim || h.matrix.cols() != h.source.dim)
    return CheckResult::fail("shape", "hom matrix has wrong shape");
  if (h.matrix * h.source.unit != h.target.unit)
    return CheckResult::fail("unit", "unit not preserved");
  for (std::size_t i = 0; i < h.source.dim; ++i)
    for (std::size_t j = 0; j < h.source.dim; ++j) {
      Mat lhs = h.matrix * h.source.lmul[i].col(j);
      Mat rhs = h.target.mul(h.matrix.col(i), h.matrix.col(j));
      if (lhs != rhs)
        return CheckResult::fail("multiplicativity",
                                 "b" + std::to_string(i) + "*b" + std::to_string(j));
    }
  return CheckResult::pass();
}

SubalgebraPresentation subalgebra_from_rows(const Algebra& parent, const Mat& rows) {
  const std::size_t r = rows.rows();
  Mat bt = rows.transpose();  // columns = basis elements
  auto coords_of = [&](const Mat& v) {
    auto c = bt.solve(v);
    if (!c) throw input_error("subalgebra_from_rows: subspace not closed");
    return *c;
  };
  SubalgebraPresentation sp;
  sp.parent = parent;
  sp.embedding = rows;
  Algebra s;
  s.field = parent.field;
  s.dim = r;
  for (std::size_t i = 0; i < r; ++i) s.basis.push_back("s" + std::to_string(i));
  for (std::size_t i = 0; i < r; ++i) {
    Mat l(parent.field, r, r);
    for (std::size_t j = 0; j < r; ++j) {
      Mat prod = parent.mul(bt.col(i), bt.col(j));
      l.set_block(0, j, coords_of(prod));
    }
    s.lmul.push_back(l);
  }
  s.unit = coords_of(parent.unit);
  sp.sub = std::move(s);
  return sp;
}

namespace {

// (tr(lift(L)^{p^i}) / p^i) mod p, computed with exact integer lifts.
std::uint32_t ppower_trace(const Mat& l, std::uint32_t p, unsigned level) {
  const std::size_t n = l.rows();
  std::vector<mpz_class> z(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) z[i * n + j] = static_cast<long>(l.get(i, j).residue());
  // repeated squaring to the p^level-th power
  mpz_class q = 1;
  for (unsigned i = 0; i < level; ++i) q *= p;
  std::vector<mpz_class> acc(n * n);  // identity
  for (std::size_t i = 0; i < n; ++i) acc[i * n + i] = 1;
  std::vector<mpz_class> base = z;
  mpz_class e = q;
  auto matmul = [n](const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    std::vector<mpz_class> c(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (a[i * n + k] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) c[i * n + j] += a[i * n + k] * b[k * n + j];
      }
    return c;
  };
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = matmul(acc, base);
    e >>= 1;
    if (e > 0) base = matmul(base, base);
  }
  mpz_class tr = 0;
  for (std::size_t i = 0; i < n; ++i) tr += acc[i * n + i];
  mpz_class quot, rem;
  mpz_class divisor = q;
  mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), tr.get_mpz_t(), divisor.get_mpz_t());
  if (rem != 0) throw std::logic_error("ppower_trace: trace not divisible by p^i");
  mpz_class res = quot % p;
  if (res < 0) res += p;
  return static_cast<std::uint32_t>(res.get_ui());
}

Mat radical_char_p(const Algebra& a) {
  const Field& f = a.field;
  const std::uint32_t p = f.characteristic();
  const std::size_t n = a.dim;
  Mat ideal = Mat::identity(f, n);  // rows, in algebra coordinates
  unsigned m = 0;
  {
    std::uint64_t q = 1;
    while (q < n) {
      q *= p;
      ++m;
    }
  }
  for (unsigned level = 0; level <= m; ++level) {
    const std::size_t r = ideal.rows();
    if (r == 0) break;
    Mat gram(f, r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        Mat z = a.mul(ideal.row(i).transpose(), ideal.row(j).transpose());
        gram.set(i, j, f.from_int(ppower_trace(a.lmul_of(z), p, level)));
      }
    // next ideal: { x in span : x^T G = 0 }
    Mat coeffs = gram.transpose().kernel();
    ideal = coeffs * ideal;
  }
  return ideal;
}

Mat radical_char_zero(const Algebra& a) {
  const std::size_t n = a.dim;
  Mat gram(a.field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Mat l = a.lmul[i] * a.lmul[j];
      Scalar tr = a.field.zero();
      for (std::size_t k = 0; k < n; ++k) tr = tr + l.get(k, k);
      gram.set(i, j, tr);
    }
  return gram.kernel();
}

}  // namespace

Mat jacobson_radical(const Algebra& a) {
  if (a.dim == 0) return Mat(a.field, 0, 0);
  return a.field.is_finite() ? radical_char_p(a) : radical_char_zero(a);
}

Algebra image_algebra(const Field& f, const std::vector<Mat>& operators, Mat* embedding) {
  if (operators.empty()) throw input_error("image_algebra: empty operator list");
  const std::size_t d = operators[0].rows();
  RowReducer red(f, d * d);
  for (const auto& op : operators) red.add_row(op.vec().transpose());
  Mat rows = red.basis();
  const std::size_t r = rows.rows();
  Mat bt = rows.transpose();
  auto coords_of = [&](const Mat& op) {
    auto c = bt.solve(op.vec());
    if (!c) throw input_error("image_algebra: operator span not multiplicatively closed");
    return *c;
  };
  Algebra alg;
  alg.field = f;
  alg.dim = r;
  for (std::size_t i = 0; i < r; ++i) alg.basis.push_back("w" + std::to_string(i));
  std::vector<Mat> ops;
  for (std::size_t i = 0; i < r; ++i) ops.push_back(Mat::unvec(bt.col(i), d, d));
  for (std::size_t i = 0; i < r; ++i) {
    Mat l(f, r, r);
    for (std::size_t j = 0; j < r; ++j) l.set_block(0, j, coords_of(ops[i] * ops[j]));
    alg.lmul.push_back(l);
  }
  alg.unit = coords_of(Mat::identity(f, d));
  if (embedding) *embedding = rows;
  return alg;
}

bool is_semisimple_right_module(const Algebra& a, const std::vector<Mat>& act) {
  if (act.size() != a.dim) throw input_error("is_semisimple_right_module: action count != dim");
  if (a.dim == 0) throw input_error("is_semisimple_right_module: zero algebra");
  const std::size_t d = act.empty() ? 0 : act[0].rows();
  if (d == 0) return true;  // zero module
  auto act_of = [&](const Mat& x) {
    Mat m(a.field, d, d);
    for (std::size_t i = 0; i < a.dim; ++i) {
      Scalar c = x.get(i, 0);
      if (!c.is_zero()) m.add_scaled(act[i], c);
    }
    return m;
  };
  if (act_of(a.unit) != Mat::identity(a.field, d))
    throw input_error("is_semisimple_right_module: unit does not act as identity");
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      if (act[j] * act[i] != act_of(a.lmul[i].col(j)))
        throw input_error("is_semisimple_right_module: action violates module axioms");
  Algebra img = image_algebra(a.field, act);
  return jacobson_radical(img).rows() == 0;
}

namespace {

constexpr std::uint64_t kEnumerationBound = 1000000;

// iterate all nonzero coordinate vectors over GF(p) of length n
template <typename F>
bool for_each_nonzero_vector(const Field& f, std::size_t n, F&& fn) {
  const std::uint32_t p = f.characteristic();
  std::vector<std::uint32_t> idx(n, 0);
  for (;;) {
    std::size_t k = 0;
    while (k < n) {
      if (++idx[k] < p) break;
      idx[k] = 0;
      ++k;
    }
    if (k == n) return true;  // wrapped around: done
    Mat v(f, n, 1);
    for (std::size_t i = 0; i < n; ++i)
      if (idx[i]) v.set_int(i, 0, idx[i]);
    if (!fn(v)) return false;
  }
}

}  // namespace

Tri is_division_ring(const Algebra& a) {
  if (a.dim == 0) return Tri::False;
  if (a.dim == 1) return Tri::True;
  if (a.field.is_finite()) {
    const std::uint32_t p = a.field.characteristic();
    double size = 1;
    for (std::size_t i = 0; i < a.dim; ++i) size *= p;
    if (size > static_cast<double>(kEnumerationBound))
      throw too_large_error("TooLargeToDecide: |GF(" + std::to_string(p) + ")|^" +
                            std::to_string(a.dim) + " exceeds the enumeration bound");
    bool all_invertible = for_each_nonzero_vector(a.field, a.dim, [&](const Mat& v) {
      return a.lmul_of(v).rank() == a.dim;
    });
    return all_invertible ? Tri::True : Tri::False;
  }

  // Over Q: definite negatives, True only in safely decidable cases.
  if (jacobson_radical(a).rows() != 0) return Tri::False;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Mat prod = a.lmul[i].col(j);
      if (prod.is_zero()) return Tri::False;  // zero divisor among basis products
    }
  std::mt19937_64 rng(0);
  for (int iter = 0; iter < 32; ++iter) {
    Mat v(a.field, a.dim, 1);
    std::uniform_int_distribution<long> d(-3, 3);
    for (std::size_t i = 0; i < a.dim; ++i) v.set_int(i, 0, d(rng));
    if (!v.is_zero() && a.lmul_of(v).rank() != a.dim) return Tri::False;
  }
  if (a.is_commutative()) {
    // try to certify a field via an irreducible minimal polynomial of a
    // primitive element; decidable cheaply up to degree 3
    std::mt19937_64 rng2(1);
    for (int attempt = 0; attempt < 8; ++attempt) {
      Mat theta(a.field, a.dim, 1);
      std::uniform_int_distribution<long> d(-2, 2);
      for (std::size_t i = 0; i < a.dim; ++i) theta.set_int(i, 0, d(rng2));
      // powers of theta
      RowReducer red(a.field, a.dim);
      Mat pw = a.unit;
      std::vector<Mat> powers;
      for (std::size_t k = 0; k <= a.dim; ++k) {
        powers.push_back(pw);
        pw = a.mul(theta, pw);
      }
      for (std::size_t k = 0; k < a.dim; ++k) red.add_row(powers[k].transpose());
      if (red.dim() != a.dim) continue;  // not a generator
      // minimal polynomial: theta^dim = sum c_k theta^k
      Mat pm(a.field, a.dim, a.dim);
      for (std::size_t k = 0; k < a.dim; ++k) pm.set_block(0, k, powers[k]);
      auto c = pm.solve(powers[a.dim]);
      if (!c) continue;
      if (a.dim <= 3) {
        // minimal polynomial m(x) = x^dim - sum c_k x^k of the generator;
        // for degree <= 3, reducible over Q <=> m has a rational root.
        // Clear denominators and enumerate candidate roots exactly.
        std::vector<mpq_class> coeff(a.dim + 1);
        coeff[a.dim] = 1;
        for (std::size_t k = 0; k < a.dim; ++k) coeff[k] = -c->get(k, 0).rational();
        mpz_class lcm_den = 1;
        for (const auto& q : coeff) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den().get_mpz_t());
        std::vector<mpz_class> ic(a.dim + 1);
        for (std::size_t k = 0; k <= a.dim; ++k) {
          mpq_class scaled = coeff[k] * lcm_den;
          ic[k] = scaled.get_num();
        }
        auto eval = [&](const mpq_class& r) {
          mpq_class val = 0, rk = 1;
          for (std::size_t k = 0; k <= a.dim; ++k) {
            val += ic[k] * rk;
            rk *= r;
          }
          return val == 0;
        };
        if (ic[0] == 0) return Tri::False;  // root 0: generator is a zero divisor
        mpz_class a0 = abs(ic[0]), an = abs(ic[a.dim]);
        if (a0 > kEnumerationBound || an > kEnumerationBound) return Tri::Undecided;
        std::vector<mpz_class> pdiv, qdiv;
        for (mpz_class d = 1; d * d <= a0; ++d)
          if (a0 % d == 0) {
            pdiv.push_back(d);
            pdiv.push_back(a0 / d);
          }
        for (mpz_class d = 1; d * d <= an; ++d)
          if (an % d == 0) {
            qdiv.push_back(d);
            qdiv.push_back(an / d);
          }
        for (const auto& pn : pdiv)
          for (const auto& qd : qdiv) {
            mpq_class r(pn, qd);
            r.canonicalize();
            if (eval(r) || eval(-r)) return Tri::False;
          }
        return Tri::True;
      }
      break;
    }
  }
  return Tri::Undecided;
}

Algebra opposite(const Algebra& a) {
  Algebra o = a;
  for (std::size_t i = 0; i < a.dim; ++i) o.lmul[i] = a.rmul(i);
  return o;
}

std::vector<Mat> regular_right_action(const Algebra& a) {
  std::vector<Mat> act;
  for (std::size_t i = 0; i < a.dim; ++i) act.push_back(a.rmul(i));
  return act;
}

std::vector<Mat> regular_left_action(const Algebra& a) { return a.lmul; }

Mat center(const Algebra& a) {
  Mat m(a.field, a.dim * a.dim, a.dim);
  for (std::size_t j = 0; j < a.dim; ++j) {
    Mat diff = a.lmul[j] - a.rmul(j);
    m.set_block(0, j, diff.vec());
  }
  return m.kernel();
}

}  // namespace coringlab
