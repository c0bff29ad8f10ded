#include "coringlab/quotient.hpp"

namespace coringlab {

Quotient full_space(const Field& f, std::size_t ambient) {
  Quotient q;
  q.ambient = ambient;
  q.relations = Mat(f, 0, ambient);
  q.projection = Mat::identity(f, ambient);
  q.section = Mat::identity(f, ambient);
  return q;
}

Quotient quotient_by(const Field& f, std::size_t ambient, const Mat& relations) {
  if (relations.cols() != ambient && relations.rows() != 0)
    throw shape_error("quotient_by: relations have wrong width");
  if (relations.rows() == 0 || relations.is_zero()) return full_space(f, ambient);

  std::vector<std::size_t> piv;
  Mat r = relations.rref(&piv);
  const std::size_t rk = piv.size();
  if (rk == 0) return full_space(f, ambient);

  Quotient q;
  q.ambient = ambient;
  q.relations = r.block(0, 0, rk, ambient);

  std::vector<bool> is_pivot(ambient, false);
  for (auto c : piv) is_pivot[c] = true;

  const std::size_t dim = ambient - rk;
  q.projection = Mat(f, dim, ambient);
  q.section = Mat(f, ambient, dim);
  std::size_t j = 0;
  for (std::size_t c = 0; c < ambient; ++c) {
    if (is_pivot[c]) continue;
    // proj(x)_j = x_c - sum_i R_i[c] * x_{piv_i}
    q.projection.set_int(j, c, 1);
    for (std::size_t i = 0; i < rk; ++i) {
      Scalar v = q.relations.get(i, c);
      if (!v.is_zero()) q.projection.set(j, piv[i], -v);
    }
    q.section.set_int(c, j, 1);
    ++j;
  }
  return q;
}

}  // namespace coringlab
