#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <string>
#include <vector>

#include "coringlab/field.hpp"

namespace coringlab {

/// Dense matrix over a Field.  Storage is split per field kind so that GF(p)
/// work runs on flat uint32 buffers while rational work stays on mpq.
///
/// Conventions used throughout the library:
///   - module elements are column vectors,
///   - linear maps are (target_dim x source_dim) matrices composed by `*`,
///   - subspaces are matrices whose ROWS are basis vectors.
class Mat {
 public:
  Mat() = default;
  Mat(const Field& f, std::size_t rows, std::size_t cols);

  static Mat zero(const Field& f, std::size_t rows, std::size_t cols) { return Mat(f, rows, cols); }
  static Mat identity(const Field& f, std::size_t n);
  /// Column unit vector e_i of length n.
  static Mat unit(const Field& f, std::size_t n, std::size_t i);

  const Field& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return rows_ * cols_; }

  Scalar get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& v);
  void set_int(std::size_t i, std::size_t j, long v);

  bool is_zero() const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(const Scalar& c) const;
  void add_scaled(const Mat& o, const Scalar& c);  // *this += c * o

  Mat transpose() const;
  Mat row(std::size_t i) const;
  Mat col(std::size_t j) const;
  /// Writes block `b` into *this with top-left corner (i, j).
  void set_block(std::size_t i, std::size_t j, const Mat& b);
  Mat block(std::size_t i, std::size_t j, std::size_t r, std::size_t c) const;

  static Mat hstack(const Mat& a, const Mat& b);
  static Mat vstack(const Mat& a, const Mat& b);
  static Mat from_rows(const Field& f, const std::vector<Mat>& rows, std::size_t width);

  /// Kronecker product with row-major index convention:
  /// (A (x) B)[(i,j),(k,l)] = A[i,k] * B[j,l].
  static Mat kron(const Mat& a, const Mat& b);
  /// Computes (A (x) B) * M column by column without forming the product.
  static Mat kron_apply(const Mat& a, const Mat& b, const Mat& m);

  /// Reduced row echelon form; pivot column indices reported in order.
  Mat rref(std::vector<std::size_t>* pivots = nullptr) const;
  std::size_t rank() const;
  /// Basis of the right null space { v : (*this) v = 0 }, returned as rows.
  Mat kernel() const;
  /// Particular solution x of (*this) x = b, or nullopt when inconsistent.
  std::optional<Mat> solve(const Mat& b) const;
  std::optional<Mat> inverse() const;

  /// Particular solution together with the kernel describing the full
  /// solution set x + span(kernel rows).
  std::optional<std::pair<Mat, Mat>> solve_full(const Mat& b) const;

  /// Row-major flattening of the matrix as a single column vector.
  Mat vec() const;
  /// Inverse of vec(): reshape a (rows*cols x 1) column into rows x cols.
  static Mat unvec(const Mat& v, std::size_t rows, std::size_t cols);

  std::string str() const;

 private:
  friend class RowReducer;

  Field f_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> g_;   // GF storage, row-major
  std::vector<mpq_class> q_;       // rational storage, row-major

  void check_same_field(const Mat& o) const {
    if (f_ != o.f_) throw shape_error("matrices over different fields");
  }
};

/// Incremental row-space builder: feed rows, get an echelon basis.
/// Used for spanning/closure computations where rows arrive one at a time.
class RowReducer {
 public:
  RowReducer(const Field& f, std::size_t width);

  /// Reduces `row` (1 x width) against the current basis; if a nonzero
  /// remainder survives it joins the basis and true is returned.
  bool add_row(const Mat& row);
  bool contains(const Mat& row) const;

  std::size_t dim() const { return rows_.size(); }
  std::size_t width() const { return width_; }
  /// Snapshot of the current basis in fully reduced (RREF) form.
  Mat basis() const;

 private:
  Field f_;
  std::size_t width_;
  std::vector<Mat> rows_;              // echelon rows, pivot normalized to 1
  std::vector<std::size_t> pivots_;    // pivot column per row
  Mat reduce(Mat row) const;
};

}  // namespace coringlab
