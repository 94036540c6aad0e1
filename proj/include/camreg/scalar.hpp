#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace camreg {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Coefficient field: the rationals (p == 0) or a prime field F_p.
struct Field {
  std::uint32_t p = 0;

  bool is_rational() const { return p == 0; }
  bool operator==(const Field &o) const { return p == o.p; }
  bool operator!=(const Field &o) const { return p != o.p; }
};

bool is_prime(std::uint64_t n);

/// An exact field element, either a reduced rational or a residue in [0, p).
/// Arithmetic between scalars of different fields throws.
class Scalar {
public:
  Scalar() : p_(0), q_(0), r_(0) {}

  static Scalar zero(const Field &f) { return Scalar(f, 0); }
  static Scalar one(const Field &f) { return Scalar(f, 1); }
  static Scalar of_int(long long v, const Field &f) { return Scalar(f, v); }
  static Scalar rational(const BigInt &num, const BigInt &den);

  Field field() const { return Field{p_}; }
  bool is_zero() const { return p_ == 0 ? q_.is_zero() : r_ == 0; }
  bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

  /// Residue value in [0, p); only valid for prime fields.
  std::uint64_t residue() const { return r_; }
  const BigRat &rat() const { return q_; }

  Scalar operator-() const;
  Scalar inv() const;
  Scalar pow(std::uint64_t e) const;

  friend Scalar operator+(const Scalar &a, const Scalar &b);
  friend Scalar operator-(const Scalar &a, const Scalar &b);
  friend Scalar operator*(const Scalar &a, const Scalar &b);
  friend Scalar operator/(const Scalar &a, const Scalar &b);
  friend bool operator==(const Scalar &a, const Scalar &b);
  friend bool operator!=(const Scalar &a, const Scalar &b) { return !(a == b); }

  std::string str() const;

private:
  Scalar(const Field &f, long long v);

  static void check_same(const Scalar &a, const Scalar &b);

  std::uint32_t p_;
  BigRat q_;        // used when p_ == 0
  std::uint64_t r_; // used when p_ > 0, always in [0, p_)
};

} // namespace camreg
