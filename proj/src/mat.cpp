#include "coringlab/mat.hpp"

#include <algorithm>
#include <sstream>

namespace coringlab {

namespace {

void check_dims(bool ok, const char* what) {
  if (!ok) throw shape_error(what);
}

}  // namespace

Mat::Mat(const Field& f, std::size_t rows, std::size_t cols) : f_(f), rows_(rows), cols_(cols) {
  if (f_.is_finite())
    g_.assign(rows * cols, 0u);
  else
    q_.assign(rows * cols, mpq_class(0));
}

Mat Mat::identity(const Field& f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set_int(i, i, 1);
  return m;
}

Mat Mat::unit(const Field& f, std::size_t n, std::size_t i) {
  Mat m(f, n, 1);
  m.set_int(i, 0, 1);
  return m;
}

Scalar Mat::get(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw shape_error("Mat::get out of range");
  if (f_.is_finite()) {
    Scalar s = f_.from_int(0);
    return f_.from_int(static_cast<long>(g_[i * cols_ + j]));
  }
  Scalar s;
  s.rat_ = q_[i * cols_ + j];
  s.p_ = 0;
  return s;
}

void Mat::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (i >= rows_ || j >= cols_) throw shape_error("Mat::set out of range");
  if (v.field() != f_) throw shape_error("Mat::set scalar from wrong field");
  if (f_.is_finite())
    g_[i * cols_ + j] = v.residue();
  else
    q_[i * cols_ + j] = v.rational();
}

void Mat::set_int(std::size_t i, std::size_t j, long v) { set(i, j, f_.from_int(v)); }

bool Mat::is_zero() const {
  if (f_.is_finite()) {
    for (auto x : g_)
      if (x) return false;
  } else {
    for (const auto& x : q_)
      if (x != 0) return false;
  }
  return true;
}

bool Mat::operator==(const Mat& o) const {
  if (f_ != o.f_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
  return f_.is_finite() ? g_ == o.g_ : q_ == o.q_;
}

Mat Mat::operator+(const Mat& o) const {
  check_same_field(o);
  check_dims(rows_ == o.rows_ && cols_ == o.cols_, "Mat::+ shape mismatch");
  Mat r(f_, rows_, cols_);
  if (f_.is_finite()) {
    const std::uint32_t p = f_.characteristic();
    for (std::size_t k = 0; k < g_.size(); ++k) r.g_[k] = gf::add(g_[k], o.g_[k], p);
  } else {
    for (std::size_t k = 0; k < q_.size(); ++k) r.q_[k] = q_[k] + o.q_[k];
  }
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  check_same_field(o);
  check_dims(rows_ == o.rows_ && cols_ == o.cols_, "Mat::- shape mismatch");
  Mat r(f_, rows_, cols_);
  if (f_.is_finite()) {
    const std::uint32_t p = f_.characteristic();
    for (std::size_t k = 0; k < g_.size(); ++k) r.g_[k] = gf::sub(g_[k], o.g_[k], p);
  } else {
    for (std::size_t k = 0; k < q_.size(); ++k) r.q_[k] = q_[k] - o.q_[k];
  }
  return r;
}

Mat Mat::operator-() const {
  Mat r(f_, rows_, cols_);
  if (f_.is_finite()) {
    const std::uint32_t p = f_.characteristic();
    for (std::size_t k = 0; k < g_.size(); ++k) r.g_[k] = gf::neg(g_[k], p);
  } else {
    for (std::size_t k = 0; k < q_.size(); ++k) r.q_[k] = -q_[k];
  }
  return r;
}

Mat Mat::scaled(const Scalar& c) const {
  if (c.field() != f_) throw shape_error("Mat::scaled scalar from wrong field");
  Mat r(f_, rows_, cols_);
  if (f_.is_finite()) {
    const std::uint32_t p = f_.characteristic();
    for (std::size_t k = 0; k < g_.size(); ++k) r.g_[k] = gf::mul(g_[k], c.residue(), p);
  } else {
    for (std::size_t k = 0; k < q_.size(); ++k) r.q_[k] = q_[k] * c.rational();
  }
  return r;
}

void Mat::add_scaled(const Mat& o, const Scalar& c) {
  check_same_field(o);
  check_dims(rows_ == o.rows_ && cols_ == o.cols_, "Mat::add_scaled shape mismatch");
  if (f_.is_finite()) {
    const std::uint32_t p = f_.characteristic();
    const std::uint32_t cc = c.residue();
    if (cc == 0) return;
    for (std::size_t k = 0; k < g_.size(); ++k)
      g_[k] = gf::add(g_[k], gf::mul(cc, o.g_[k], p), p);
  } else {
    if (c.rational() == 0) return;
    for (std::size_t k = 0; k < q_.size(); ++k) q_[k] += c.rational() * o.q_[k];
  }
}

Mat Mat::operator*(const Mat& o) const {
  check_same_field(o);
  check_dims(cols_ == o.rows_, "Mat::* inner dimension mismatch");
  Mat r(f_, rows_, o.cols_);
  if (f_.is_finite()) {
    const std::uint32_t p = f_.characteristic();
    const std::uint64_t pp = static_cast<std::uint64_t>(p) * p;
    // accumulate in uint64; reduce lazily
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const std::uint64_t a = g_[i * cols_ + k];
        if (!a) continue;
        const std::uint32_t* brow = &o.g_[k * o.cols_];
        std::uint32_t* rrow = &r.g_[i * o.cols_];
        for (std::size_t j = 0; j < o.cols_; ++j) {
          std::uint64_t acc = static_cast<std::uint64_t>(rrow[j]) + a * brow[j] % p;
          rrow[j] = static_cast<std::uint32_t>(acc >= p ? acc - p : acc);
        }
      }
    }
    (void)pp;
  } else {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const mpq_class& a = q_[i * cols_ + k];
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const mpq_class& b = o.q_[k * o.cols_ + j];
          if (b != 0) r.q_[i * o.cols_ + j] += a * b;
        }
      }
  }
  return r;
}

Mat Mat::transpose() const {
  Mat r(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (f_.is_finite())
        r.g_[j * rows_ + i] = g_[i * cols_ + j];
      else
        r.q_[j * rows_ + i] = q_[i * cols_ + j];
    }
  return r;
}

Mat Mat::row(std::size_t i) const { return block(i, 0, 1, cols_); }
Mat Mat::col(std::size_t j) const { return block(0, j, rows_, 1); }

void Mat::set_block(std::size_t i, std::size_t j, const Mat& b) {
  check_same_field(b);
  check_dims(i + b.rows_ <= rows_ && j + b.cols_ <= cols_, "Mat::set_block out of range");
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) {
      if (f_.is_finite())
        g_[(i + r) * cols_ + (j + c)] = b.g_[r * b.cols_ + c];
      else
        q_[(i + r) * cols_ + (j + c)] = b.q_[r * b.cols_ + c];
    }
}

Mat Mat::block(std::size_t i, std::size_t j, std::size_t r, std::size_t c) const {
  check_dims(i + r <= rows_ && j + c <= cols_, "Mat::block out of range");
  Mat b(f_, r, c);
  for (std::size_t rr = 0; rr < r; ++rr)
    for (std::size_t cc = 0; cc < c; ++cc) {
      if (f_.is_finite())
        b.g_[rr * c + cc] = g_[(i + rr) * cols_ + (j + cc)];
      else
        b.q_[rr * c + cc] = q_[(i + rr) * cols_ + (j + cc)];
    }
  return b;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
  a.check_same_field(b);
  check_dims(a.rows_ == b.rows_, "Mat::hstack row mismatch");
  Mat r(a.f_, a.rows_, a.cols_ + b.cols_);
  r.set_block(0, 0, a);
  r.set_block(0, a.cols_, b);
  return r;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
  a.check_same_field(b);
  check_dims(a.cols_ == b.cols_, "Mat::vstack col mismatch");
  Mat r(a.f_, a.rows_ + b.rows_, a.cols_);
  r.set_block(0, 0, a);
  r.set_block(a.rows_, 0, b);
  return r;
}

Mat Mat::from_rows(const Field& f, const std::vector<Mat>& rows, std::size_t width) {
  Mat r(f, rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    check_dims(rows[i].rows() == 1 && rows[i].cols() == width, "Mat::from_rows bad row");
    r.set_block(i, 0, rows[i]);
  }
  return r;
}

Mat Mat::kron(const Mat& a, const Mat& b) {
  a.check_same_field(b);
  Mat r(a.f_, a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.f_.is_finite()) {
        const std::uint32_t av = a.g_[i * a.cols_ + k];
        if (!av) continue;
        const std::uint32_t p = a.f_.characteristic();
        for (std::size_t j = 0; j < b.rows_; ++j)
          for (std::size_t l = 0; l < b.cols_; ++l)
            r.g_[(i * b.rows_ + j) * r.cols_ + (k * b.cols_ + l)] =
                gf::mul(av, b.g_[j * b.cols_ + l], p);
      } else {
        const mpq_class& av = a.q_[i * a.cols_ + k];
        if (av == 0) continue;
        for (std::size_t j = 0; j < b.rows_; ++j)
          for (std::size_t l = 0; l < b.cols_; ++l)
            r.q_[(i * b.rows_ + j) * r.cols_ + (k * b.cols_ + l)] =
                av * b.q_[j * b.cols_ + l];
      }
    }
  return r;
}

Mat Mat::kron_apply(const Mat& a, const Mat& b, const Mat& m) {
  a.check_same_field(b);
  a.check_same_field(m);
  check_dims(m.rows_ == a.cols_ * b.cols_, "Mat::kron_apply shape mismatch");
  Mat r(a.f_, a.rows_ * b.rows_, m.cols_);
  const Mat bt = b.transpose();
  for (std::size_t j = 0; j < m.cols_; ++j) {
    const Mat x = unvec(m.col(j), a.cols_, b.cols_);
    const Mat y = a * x * bt;  // vec_row(A X B^T) = (A (x) B) vec_row(X)
    r.set_block(0, j, y.vec());
  }
  return r;
}

Mat Mat::vec() const {
  Mat v(f_, rows_ * cols_, 1);
  if (f_.is_finite())
    v.g_ = g_;
  else
    v.q_ = q_;
  return v;
}

Mat Mat::unvec(const Mat& v, std::size_t rows, std::size_t cols) {
  check_dims(v.cols_ == 1 && v.rows_ == rows * cols, "Mat::unvec shape mismatch");
  Mat m(v.f_, rows, cols);
  if (v.f_.is_finite())
    m.g_ = v.g_;
  else
    m.q_ = v.q_;
  return m;
}

namespace {

// Generic in-place RREF over a raw buffer; E is uint32_t or mpq_class.
template <typename E, typename Ops>
std::vector<std::size_t> rref_buffer(std::vector<E>& a, std::size_t rows, std::size_t cols,
                                     const Ops& ops) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!ops.is_zero(a[i * cols + c])) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[r * cols + j], a[sel * cols + j]);
    // normalize pivot row
    E inv = ops.inv(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = ops.mul(a[r * cols + j], inv);
    // eliminate the column everywhere else
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      E f = a[i * cols + c];
      if (ops.is_zero(f)) continue;
      for (std::size_t j = c; j < cols; ++j)
        a[i * cols + j] = ops.sub(a[i * cols + j], ops.mul(f, a[r * cols + j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

struct GfBufOps {
  std::uint32_t p;
  bool is_zero(std::uint32_t x) const { return x == 0; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return gf::mul(a, b, p); }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return gf::sub(a, b, p); }
  std::uint32_t inv(std::uint32_t a) const { return gf::inv(a, p); }
};

struct QBufOps {
  bool is_zero(const mpq_class& x) const { return x == 0; }
  mpq_class mul(const mpq_class& a, const mpq_class& b) const { return a * b; }
  mpq_class sub(const mpq_class& a, const mpq_class& b) const { return a - b; }
  mpq_class inv(const mpq_class& a) const { return 1 / a; }
};

}  // namespace

Mat Mat::rref(std::vector<std::size_t>* pivots) const {
  Mat r = *this;
  std::vector<std::size_t> piv;
  if (f_.is_finite())
    piv = rref_buffer(r.g_, rows_, cols_, GfBufOps{f_.characteristic()});
  else
    piv = rref_buffer(r.q_, rows_, cols_, QBufOps{});
  if (pivots) *pivots = piv;
  return r;
}

std::size_t Mat::rank() const {
  std::vector<std::size_t> piv;
  rref(&piv);
  return piv.size();
}

Mat Mat::kernel() const {
  std::vector<std::size_t> piv;
  Mat r = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : piv) is_pivot[c] = true;
  const std::size_t k = cols_ - piv.size();
  Mat out(f_, k, cols_);
  std::size_t idx = 0;
  for (std::size_t fcol = 0; fcol < cols_; ++fcol) {
    if (is_pivot[fcol]) continue;
    out.set_int(idx, fcol, 1);
    for (std::size_t i = 0; i < piv.size(); ++i) {
      Scalar v = r.get(i, fcol);
      if (!v.is_zero()) out.set(idx, piv[i], -v);
    }
    ++idx;
  }
  return out;
}

std::optional<Mat> Mat::solve(const Mat& b) const {
  check_same_field(b);
  check_dims(b.rows_ == rows_, "Mat::solve rhs row mismatch");
  Mat aug = hstack(*this, b);
  std::vector<std::size_t> piv;
  Mat r = aug.rref(&piv);
  // consistency: no pivot may fall in the b-columns
  for (auto c : piv)
    if (c >= cols_) return std::nullopt;
  Mat x(f_, cols_, b.cols_);
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) x.set(piv[i], j, r.get(i, cols_ + j));
  return x;
}

std::optional<std::pair<Mat, Mat>> Mat::solve_full(const Mat& b) const {
  auto x = solve(b);
  if (!x) return std::nullopt;
  return std::make_pair(*x, kernel());
}

std::optional<Mat> Mat::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  auto x = solve(identity(f_, rows_));
  if (!x) return std::nullopt;
  if (!((*this * *x) == identity(f_, rows_))) return std::nullopt;
  return x;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << get(i, j).str();
  }
  os << "]";
  return os.str();
}

RowReducer::RowReducer(const Field& f, std::size_t width) : f_(f), width_(width) {}

Mat RowReducer::reduce(Mat row) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Scalar c = row.get(0, pivots_[i]);
    if (!c.is_zero()) row.add_scaled(rows_[i], -c);
  }
  return row;
}

bool RowReducer::add_row(const Mat& row) {
  if (row.rows() != 1 || row.cols() != width_) throw shape_error("RowReducer::add_row bad shape");
  Mat r = reduce(row);
  std::size_t pc = width_;
  for (std::size_t j = 0; j < width_; ++j)
    if (!r.get(0, j).is_zero()) {
      pc = j;
      break;
    }
  if (pc == width_) return false;
  r = r.scaled(r.get(0, pc).inverse());
  // keep earlier rows reduced against the new pivot
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Scalar c = rows_[i].get(0, pc);
    if (!c.is_zero()) rows_[i].add_scaled(r, -c);
  }
  rows_.push_back(r);
  pivots_.push_back(pc);
  return true;
}

bool RowReducer::contains(const Mat& row) const {
  if (row.rows() != 1 || row.cols() != width_) throw shape_error("RowReducer::contains bad shape");
  return reduce(row).is_zero();
}

Mat RowReducer::basis() const {
  // rows sorted by pivot column for a canonical result
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  Mat out(f_, rows_.size(), width_);
  for (std::size_t i = 0; i < order.size(); ++i) out.set_block(i, 0, rows_[order[i]]);
  return out;
}

}  // namespace coringlab
