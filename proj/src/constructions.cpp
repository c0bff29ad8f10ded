#include "coringlab/constructions.hpp"

namespace coringlab {

Algebra scalar_algebra(const Field& f) {
  std::vector<std::vector<Mat>> table(1, std::vector<Mat>(1, Mat::unit(f, 1, 0)));
  return make_algebra(f, {"1"}, table, Mat::unit(f, 1, 0));
}

Algebra quotient_polynomial_algebra(const Field& f, const std::vector<Scalar>& low_coeffs,
                                    const std::string& var) {
  const std::size_t n = low_coeffs.size();
  if (n == 0) throw input_error("quotient_polynomial_algebra: empty modulus");
  // companion matrix of x^n - sum c_k x^k acting as multiplication by x
  Mat comp(f, n, n);
  for (std::size_t i = 1; i < n; ++i) comp.set_int(i, i - 1, 1);
  for (std::size_t k = 0; k < n; ++k) comp.set(k, n - 1, low_coeffs[k]);
  std::vector<Mat> xp;  // multiplication matrices of x^i
  Mat acc = Mat::identity(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    xp.push_back(acc);
    acc = comp * acc;
  }
  // b_i * b_j = x^i applied to e_j, i.e. x^{i+j} reduced mod the modulus
  std::vector<std::vector<Mat>> table(n, std::vector<Mat>(n, Mat(f, n, 1)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = xp[i] * Mat::unit(f, n, j);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(i == 0 ? "1" : (i == 1 ? var : var + "^" + std::to_string(i)));
  return make_algebra(f, names, table, Mat::unit(f, n, 0));
}

Algebra matrix_algebra(const Field& f, std::size_t n) {
  const std::size_t d = n * n;
  std::vector<std::vector<Mat>> table(d, std::vector<Mat>(d, Mat(f, d, 1)));
  std::vector<std::string> names(d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      names[i * n + j] = "E" + std::to_string(i + 1) + std::to_string(j + 1);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Mat prod(f, d, 1);
          if (j == k) prod.set_int(i * n + l, 0, 1);  // E_ij E_kl = delta_jk E_il
          table[i * n + j][k * n + l] = prod;
        }
    }
  Mat unit(f, d, 1);
  for (std::size_t i = 0; i < n; ++i) unit.set_int(i * n + i, 0, 1);
  return make_algebra(f, names, table, unit);
}

Algebra dual_numbers(const Field& f) {
  return quotient_polynomial_algebra(f, {f.zero(), f.zero()}, "eps");  // x^2 = 0
}

Algebra upper_triangular2(const Field& f) {
  // basis E11, E12, E22
  auto unit_at = [&](int k) { return Mat::unit(f, 3, k); };
  std::vector<std::vector<Mat>> t(3, std::vector<Mat>(3, Mat(f, 3, 1)));
  t[0][0] = unit_at(0);   // E11 E11 = E11
  t[0][1] = unit_at(1);   // E11 E12 = E12
  t[1][2] = unit_at(1);   // E12 E22 = E12
  t[2][2] = unit_at(2);   // E22 E22 = E22
  Mat unit(f, 3, 1);
  unit.set_int(0, 0, 1);
  unit.set_int(2, 0, 1);
  return make_algebra(f, {"E11", "E12", "E22"}, t, unit);
}

Algebra direct_product(const Algebra& a, const Algebra& b) {
  const Field& f = a.field;
  if (f != b.field) throw input_error("direct_product: different fields");
  const std::size_t d = a.dim + b.dim;
  std::vector<std::vector<Mat>> t(d, std::vector<Mat>(d, Mat(f, d, 1)));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Mat prod(f, d, 1);
      prod.set_block(0, 0, a.lmul[i].col(j));
      t[i][j] = prod;
    }
  for (std::size_t i = 0; i < b.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j) {
      Mat prod(f, d, 1);
      prod.set_block(a.dim, 0, b.lmul[i].col(j));
      t[a.dim + i][a.dim + j] = prod;
    }
  std::vector<std::string> names;
  for (const auto& s : a.basis) names.push_back("l." + s);
  for (const auto& s : b.basis) names.push_back("r." + s);
  Mat unit(f, d, 1);
  unit.set_block(0, 0, a.unit);
  unit.set_block(a.dim, 0, b.unit);
  return make_algebra(f, names, t, unit);
}

Algebra cyclic_group_algebra(const Field& f, std::size_t n) {
  std::vector<std::vector<Mat>> t(n, std::vector<Mat>(n, Mat(f, n, 1)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = Mat::unit(f, n, (i + j) % n);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("g^" + std::to_string(i));
  return make_algebra(f, names, t, Mat::unit(f, n, 0));
}

Algebra skew_group_algebra(const Algebra& a, const std::vector<std::vector<std::size_t>>& mult,
                           const std::vector<std::size_t>& inverse,
                           const std::vector<Mat>& autos) {
  const Field& f = a.field;
  const std::size_t ng = mult.size();
  const std::size_t d = ng * a.dim;
  std::vector<std::vector<Mat>> t(d, std::vector<Mat>(d, Mat(f, d, 1)));
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t h = 0; h < ng; ++h)
        for (std::size_t j = 0; j < a.dim; ++j) {
          // (g, b_i)(h, b_j) = (gh, sigma_{h^{-1}}(b_i) b_j)
          Mat coeff = a.mul(autos[inverse[h]] * Mat::unit(f, a.dim, i), Mat::unit(f, a.dim, j));
          Mat prod(f, d, 1);
          prod.set_block(mult[g][h] * a.dim, 0, coeff);
          t[g * a.dim + i][h * a.dim + j] = prod;
        }
  std::vector<std::string> names;
  for (std::size_t g = 0; g < ng; ++g)
    for (const auto& s : a.basis) names.push_back("s" + std::to_string(g) + "." + s);
  Mat unit(f, d, 1);
  unit.set_block(0, 0, a.unit);
  return make_algebra(f, names, t, unit);
}

Algebra triangular_ring(const Algebra& r, const Algebra& s, std::size_t dim_m,
                        const std::vector<Mat>& r_on_m, const std::vector<Mat>& s_on_m) {
  const Field& f = r.field;
  if (s.field != f) throw input_error("triangular_ring: different fields");
  const std::size_t d = r.dim + dim_m + s.dim;
  auto pack = [&](const Mat& rp, const Mat& mp, const Mat& sp) {
    Mat v(f, d, 1);
    v.set_block(0, 0, rp);
    v.set_block(r.dim, 0, mp);
    v.set_block(r.dim + dim_m, 0, sp);
    return v;
  };
  Mat rz(f, r.dim, 1), mz(f, dim_m, 1), sz(f, s.dim, 1);
  std::vector<std::vector<Mat>> t(d, std::vector<Mat>(d, Mat(f, d, 1)));
  // (r, m, s)(r', m', s') = (r r', r.m' + m.s', s s')
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      bool i_r = i < r.dim, i_m = !i_r && i < r.dim + dim_m;
      bool j_r = j < r.dim, j_m = !j_r && j < r.dim + dim_m;
      if (i_r && j_r) t[i][j] = pack(r.lmul[i].col(j), mz, sz);
      else if (i_r && j_m) t[i][j] = pack(rz, r_on_m[i] * Mat::unit(f, dim_m, j - r.dim), sz);
      else if (i_m && !j_r && !j_m)
        t[i][j] = pack(rz, s_on_m[j - r.dim - dim_m] * Mat::unit(f, dim_m, i - r.dim), sz);
      else if (!i_r && !i_m && !j_r && !j_m)
        t[i][j] = pack(rz, mz, s.lmul[i - r.dim - dim_m].col(j - r.dim - dim_m));
      // all other products vanish
    }
  std::vector<std::string> names;
  for (const auto& n : r.basis) names.push_back("r." + n);
  for (std::size_t i = 0; i < dim_m; ++i) names.push_back("m" + std::to_string(i));
  for (const auto& n : s.basis) names.push_back("s." + n);
  return make_algebra(f, names, t, pack(r.unit, mz, s.unit));
}

std::vector<Mat> field_automorphisms(const Algebra& a) {
  const Field& f = a.field;
  if (!f.is_finite()) throw too_large_error("field_automorphisms: finite fields only");
  // require the power basis 1, x, x^2, ... with x = b_1
  if (a.dim < 2) return {Mat::identity(f, 1)};
  double size = 1;
  for (std::size_t i = 0; i < a.dim; ++i) size *= f.characteristic();
  if (size > 1e6) throw too_large_error("field_automorphisms: enumeration bound exceeded");

  std::vector<Mat> result;
  const std::size_t n = a.dim;
  std::vector<std::uint32_t> idx(n, 0);
  const std::uint32_t p = f.characteristic();
  for (;;) {
    Mat theta(f, n, 1);
    for (std::size_t i = 0; i < n; ++i)
      if (idx[i]) theta.set_int(i, 0, idx[i]);
    // candidate hom: x^i -> theta^i
    Mat h(f, n, n);
    Mat pw = a.unit;
    for (std::size_t i = 0; i < n; ++i) {
      h.set_block(0, i, pw);
      pw = a.mul(theta, pw);
    }
    AlgebraHom hom{a, a, h};
    if (h.rank() == n && check_algebra_hom(hom).ok) result.push_back(h);
    std::size_t k = 0;
    while (k < n) {
      if (++idx[k] < p) break;
      idx[k] = 0;
      ++k;
    }
    if (k == n) break;
  }
  return result;
}

}  // namespace coringlab
