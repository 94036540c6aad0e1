#pragma once

#include "camreg/ring.hpp"

#include <map>
#include <optional>

namespace camreg {

/// Degree sentinel for the zero polynomial / zero module: "minus infinity".
constexpr int NEG_INF = INT32_MIN / 2;

/// Sparse exact polynomial: monomial -> nonzero coefficient.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(const RingSpec &R) : nvars_(R.nvars()) {}

  static Polynomial term(const Monomial &u, const Scalar &c);
  static Polynomial constant(const Scalar &c, const RingSpec &R);
  static Polynomial variable(int var, const RingSpec &R);

  bool is_zero() const { return terms_.empty(); }
  size_t nterms() const { return terms_.size(); }
  const std::map<Monomial, Scalar> &terms() const { return terms_; }

  void add_term(const Monomial &u, const Scalar &c);

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial &f, const Polynomial &g);
  friend Polynomial operator-(const Polynomial &f, const Polynomial &g);
  friend Polynomial operator*(const Polynomial &f, const Polynomial &g);
  friend bool operator==(const Polynomial &f, const Polynomial &g) {
    return f.terms_ == g.terms_;
  }
  friend bool operator!=(const Polynomial &f, const Polynomial &g) {
    return !(f == g);
  }

  Polynomial scaled(const Scalar &c) const;
  Polynomial times_term(const Monomial &u, const Scalar &c) const;
  Polynomial pow(int e, const RingSpec &R) const;

  /// Leading term with respect to the ring order.
  std::pair<Monomial, Scalar> lead(const RingSpec &R) const;

  /// Common coarse degree of all terms, NEG_INF for zero, nullopt when the
  /// terms disagree (not homogeneous).
  std::optional<int> coarse_degree(const RingSpec &R) const;
  /// Common fine degree; nullopt when terms disagree. For a polynomial ring
  /// element a fine degree forces a single monomial.
  std::optional<MultiDegree> fine_degree(const RingSpec &R) const;
  bool is_single_term() const { return terms_.size() == 1; }

  std::string str(const RingSpec &R) const;

private:
  size_t nvars_ = 0;
  std::map<Monomial, Scalar> terms_;
};

} // namespace camreg
