#pragma once

#include "coringlab/mat.hpp"

namespace coringlab {

/// Quotient of k^ambient by the row space of `relations`, with a chosen
/// section.  projection * section = identity on the quotient and the
/// projection annihilates every relation row.  The section always picks the
/// non-pivot coordinates of the reduced relations (leftmost-pivot
/// convention), so the construction is deterministic.
struct Quotient {
  std::size_t ambient = 0;
  Mat relations;   // RREF rows spanning the relation subspace
  Mat projection;  // dim x ambient
  Mat section;     // ambient x dim

  std::size_t dim() const { return projection.rows(); }

  /// Canonical representative of a quotient element (section of its class).
  Mat represent(const Mat& quot_col) const { return section * quot_col; }
  /// Class of an ambient column vector.
  Mat project(const Mat& amb_col) const { return projection * amb_col; }
};

Quotient quotient_by(const Field& f, std::size_t ambient, const Mat& relations);

/// Trivial quotient (no relations): projection = section = identity.
Quotient full_space(const Field& f, std::size_t ambient);

}  // namespace coringlab
