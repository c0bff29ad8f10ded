#pragma once

#include "coringlab/modules.hpp"
#include "coringlab/quotient.hpp"

namespace coringlab {

/// Balanced tensor product M (x)_R N realized as a quotient of the k-tensor
/// M (x)_k N with the row-major index (i, j) -> i * dn + j.  The junction
/// relations are (m.r) (x) n - m (x) (r.n) over a basis of R; pass empty
/// action lists for a plain k-tensor.
struct Tensor2 {
  std::size_t dm = 0, dn = 0;
  Quotient q;

  std::size_t dim() const { return q.dim(); }
  std::size_t ambient() const { return dm * dn; }

  Mat ambient_pure(const Mat& x, const Mat& y) const;  // (dm*dn x 1)
  Mat pure(const Mat& x, const Mat& y) const;          // projected class
};

Tensor2 tensor_over(const Field& f, std::size_t dm, std::size_t dn,
                    const std::vector<Mat>& m_right_acts, const std::vector<Mat>& n_left_acts);

/// Quotient-level map T(f, g): src -> dst for leg maps f: M -> M',
/// g: N -> N'.  Only valid when f and g are balanced for the junctions
/// (R-linear); the caller guarantees that.
Mat induced_map(const Tensor2& src, const Mat& f, const Mat& g, const Tensor2& dst);

/// Canonical associator (X (x) (Y (x) Z)) -> ((X (x) Y) (x) Z) between the
/// two nested quotient constructions over the same junction algebras.
Mat reassociate(const Tensor2& right_nested, const Tensor2& yz, const Tensor2& xy,
                const Tensor2& left_nested, std::size_t dx, std::size_t dz);

/// Convenience: tensor of a right module leg with a left module leg over
/// their common algebra.
Tensor2 tensor_over(const RightModule& m, const LeftModule& n);

}  // namespace coringlab
