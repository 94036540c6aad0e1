#include "camreg/scalar.hpp"

namespace camreg {

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

Scalar::Scalar(const Field &f, long long v) : p_(f.p), q_(0), r_(0) {
  if (p_ == 0) {
    q_ = v;
  } else {
    long long m = v % static_cast<long long>(p_);
    if (m < 0)
      m += p_;
    r_ = static_cast<std::uint64_t>(m);
  }
}

Scalar Scalar::rational(const BigInt &num, const BigInt &den) {
  if (den.is_zero())
    throw domain_error("rational with zero denominator");
  Scalar s;
  s.p_ = 0;
  s.q_ = BigRat(num, den); // cpp_rational canonicalizes
  return s;
}

void Scalar::check_same(const Scalar &a, const Scalar &b) {
  if (a.p_ != b.p_)
    throw domain_error("mixed-field scalar arithmetic");
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  if (p_ == 0)
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : p_ - r_;
  return s;
}

Scalar Scalar::inv() const {
  if (is_zero())
    throw domain_error("division by zero");
  Scalar s(*this);
  if (p_ == 0) {
    s.q_ = 1 / q_;
    return s;
  }
  // Fermat: r^(p-2) mod p
  std::uint64_t base = r_, acc = 1, e = p_ - 2;
  while (e) {
    if (e & 1)
      acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  s.r_ = acc;
  return s;
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar acc = Scalar::one(field());
  Scalar base = *this;
  while (e) {
    if (e & 1)
      acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Scalar operator+(const Scalar &a, const Scalar &b) {
  Scalar::check_same(a, b);
  Scalar s(a);
  if (a.p_ == 0)
    s.q_ = a.q_ + b.q_;
  else {
    std::uint64_t v = a.r_ + b.r_;
    s.r_ = v >= a.p_ ? v - a.p_ : v;
  }
  return s;
}

Scalar operator-(const Scalar &a, const Scalar &b) { return a + (-b); }

Scalar operator*(const Scalar &a, const Scalar &b) {
  Scalar::check_same(a, b);
  Scalar s(a);
  if (a.p_ == 0)
    s.q_ = a.q_ * b.q_;
  else
    s.r_ = a.r_ * b.r_ % a.p_;
  return s;
}

Scalar operator/(const Scalar &a, const Scalar &b) { return a * b.inv(); }

bool operator==(const Scalar &a, const Scalar &b) {
  if (a.p_ != b.p_)
    return false;
  return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::str() const {
  if (p_ == 0) {
    std::string s = numerator(q_).str();
    if (denominator(q_) != 1)
      s += "/" + denominator(q_).str();
    return s;
  }
  return std::to_string(r_);
}

} // namespace camreg
