#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace coringlab {

/// Raised when an operation mixes values from different fields or feeds
/// incompatible shapes to a matrix routine.
struct shape_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised by decision procedures whose enumeration bound is exceeded.
struct too_large_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when input data violates a precondition (bad fixture, non-module
/// action matrices, ...).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Scalar;

/// Exact scalar domain: the rationals or a prime field GF(p).
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  static Field gf(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  bool is_finite() const { return p_ != 0; }
  std::uint32_t characteristic() const { return p_; }

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;

  /// Parses "3/2" (rationals) or a decimal residue (GF(p)).
  Scalar parse(const std::string& s) const;

  std::string name() const;

 private:
  std::uint32_t p_ = 0;  // 0 means the rationals
};

/// One exact field element.  Rationals are arbitrary-precision and kept in
/// lowest terms with positive denominator; GF(p) residues live in [0, p).
class Scalar {
 public:
  Scalar() : rat_(0) {}  // rational zero

  bool is_rational() const { return p_ == 0; }
  Field field() const { return p_ == 0 ? Field::rationals() : Field::gf(p_); }

  bool is_zero() const { return p_ == 0 ? rat_ == 0 : res_ == 0; }
  bool is_one() const { return p_ == 0 ? rat_ == 1 : res_ == 1; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

  /// GF residue; only meaningful when is_rational() is false.
  std::uint32_t residue() const { return res_; }
  const mpq_class& rational() const { return rat_; }

 private:
  friend class Field;
  friend class Mat;

  mpq_class rat_;
  std::uint32_t res_ = 0;
  std::uint32_t p_ = 0;

  void check_same(const Scalar& o) const {
    if (p_ != o.p_) throw shape_error("scalars from different fields");
  }
};

namespace gf {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
std::uint32_t inv(std::uint32_t a, std::uint32_t p);

}  // namespace gf

}  // namespace coringlab
