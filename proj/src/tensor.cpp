#include "coringlab/tensor.hpp"

namespace coringlab {

Mat Tensor2::ambient_pure(const Mat& x, const Mat& y) const {
  if (x.rows() != dm || y.rows() != dn || x.cols() != 1 || y.cols() != 1)
    throw shape_error("Tensor2::ambient_pure: bad leg shapes");
  return Mat::kron(x, y);
}

Mat Tensor2::pure(const Mat& x, const Mat& y) const { return q.project(ambient_pure(x, y)); }

Tensor2 tensor_over(const Field& f, std::size_t dm, std::size_t dn,
                    const std::vector<Mat>& m_right_acts, const std::vector<Mat>& n_left_acts) {
  if (m_right_acts.size() != n_left_acts.size())
    throw shape_error("tensor_over: junction action lists differ in length");
  Tensor2 t;
  t.dm = dm;
  t.dn = dn;
  const std::size_t amb = dm * dn;
  const std::size_t nrel = m_right_acts.size() * amb;
  if (nrel == 0) {
    t.q = full_space(f, amb);
    return t;
  }
  Mat rel(f, nrel, amb);
  std::size_t row = 0;
  for (std::size_t a = 0; a < m_right_acts.size(); ++a) {
    const Mat& ra = m_right_acts[a];
    const Mat& la = n_left_acts[a];
    for (std::size_t i = 0; i < dm; ++i)
      for (std::size_t j = 0; j < dn; ++j) {
        // (e_i . r_a) (x) e_j  -  e_i (x) (r_a . e_j)
        for (std::size_t k = 0; k < dm; ++k) {
          Scalar c = ra.get(k, i);
          if (!c.is_zero()) rel.set(row, k * dn + j, c);
        }
        for (std::size_t l = 0; l < dn; ++l) {
          Scalar c = la.get(l, j);
          if (!c.is_zero()) rel.set(row, i * dn + l, rel.get(row, i * dn + l) - c);
        }
        ++row;
      }
  }
  t.q = quotient_by(f, amb, rel);
  return t;
}

Tensor2 tensor_over(const RightModule& m, const LeftModule& n) {
  if (!(m.alg.field == n.alg.field) || m.alg.dim != n.alg.dim)
    throw input_error("tensor_over: junction algebras differ");
  return tensor_over(m.alg.field, m.dim, n.dim, m.act, n.act);
}

Mat induced_map(const Tensor2& src, const Mat& f, const Mat& g, const Tensor2& dst) {
  if (f.cols() != src.dm || g.cols() != src.dn || f.rows() != dst.dm || g.rows() != dst.dn)
    throw shape_error("induced_map: leg map shapes do not match the tensors");
  return dst.q.projection * Mat::kron_apply(f, g, src.q.section);
}

Mat reassociate(const Tensor2& right_nested, const Tensor2& yz, const Tensor2& xy,
                const Tensor2& left_nested, std::size_t dx, std::size_t dz) {
  const Field& f = right_nested.q.projection.field();
  // lift X (x) (YZ) to X (x) Y (x) Z coordinates, regroup (a no-op on
  // row-major flattening), push the first two legs through XY, project.
  Mat lifted = Mat::kron_apply(Mat::identity(f, dx), yz.q.section, right_nested.q.section);
  Mat pushed = Mat::kron_apply(xy.q.projection, Mat::identity(f, dz), lifted);
  return left_nested.q.projection * pushed;
}

}  // namespace coringlab
