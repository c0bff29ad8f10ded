#include "coringlab/field.hpp"

namespace coringlab {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

namespace gf {

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw std::domain_error("inverse of zero in GF(p)");
  // extended Euclid on (a, p)
  std::int64_t t = 0, newt = 1, r = p, newr = a;
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace gf

Field Field::gf(std::uint32_t p) {
  if (!is_prime(p)) throw input_error("GF(p) requires a prime modulus, got " + std::to_string(p));
  Field f;
  f.p_ = p;
  return f;
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long v) const {
  Scalar s;
  s.p_ = p_;
  if (p_ == 0) {
    s.rat_ = v;
  } else {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += p_;
    s.res_ = static_cast<std::uint32_t>(r);
  }
  return s;
}

Scalar Field::parse(const std::string& str) const {
  Scalar s;
  s.p_ = p_;
  if (p_ == 0) {
    if (mpq_set_str(s.rat_.get_mpq_t(), str.c_str(), 10) != 0)
      throw input_error("bad rational literal: '" + str + "'");
    s.rat_.canonicalize();
    if (s.rat_.get_den() == 0) throw input_error("zero denominator in '" + str + "'");
  } else {
    mpz_class z;
    if (mpz_set_str(z.get_mpz_t(), str.c_str(), 10) != 0)
      throw input_error("bad residue literal: '" + str + "'");
    mpz_class r = z % static_cast<long>(p_);
    if (r < 0) r += static_cast<long>(p_);
    s.res_ = static_cast<std::uint32_t>(r.get_ui());
  }
  return s;
}

std::string Field::name() const {
  return p_ == 0 ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar r;
  r.p_ = p_;
  if (p_ == 0)
    r.rat_ = rat_ + o.rat_;
  else
    r.res_ = gf::add(res_, o.res_, p_);
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar r;
  r.p_ = p_;
  if (p_ == 0)
    r.rat_ = rat_ - o.rat_;
  else
    r.res_ = gf::sub(res_, o.res_, p_);
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar r;
  r.p_ = p_;
  if (p_ == 0)
    r.rat_ = rat_ * o.rat_;
  else
    r.res_ = gf::mul(res_, o.res_, p_);
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar r;
  r.p_ = p_;
  if (p_ == 0)
    r.rat_ = -rat_;
  else
    r.res_ = gf::neg(res_, p_);
  return r;
}

Scalar Scalar::inverse() const {
  Scalar r;
  r.p_ = p_;
  if (p_ == 0) {
    if (rat_ == 0) throw std::domain_error("inverse of zero");
    r.rat_ = 1 / rat_;
  } else {
    r.res_ = gf::inv(res_, p_);
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (p_ != o.p_) return false;
  return p_ == 0 ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Scalar::str() const {
  return p_ == 0 ? rat_.get_str() : std::to_string(res_);
}

}  // namespace coringlab
