#pragma once

#include "camreg/scalar.hpp"

#include <string>
#include <vector>

namespace camreg {

/// Exponent tuple of length m + t. Variables are laid out y1..ym, x1..xt.
/// Entries are nonnegative for monomials of the ring; MultiDegree reuses the
/// same representation but allows negative entries.
using Monomial = std::vector<int>;
using MultiDegree = std::vector<int>;

enum class OrderTag { Grevlex, Lex };
enum class Regime { General, Multigraded };
enum class Cmp { LT = -1, EQ = 0, GT = 1 };

/// The ambient ring k[y1..ym][x1..xt], deg y = 0, deg x = 1.
struct RingSpec {
  Field field;
  int m = 0; // base variables y, coarse degree 0
  int t = 1; // positive variables x, coarse degree 1
  OrderTag order = OrderTag::Grevlex;
  Regime regime = Regime::General;

  int nvars() const { return m + t; }
  bool is_x(int var) const { return var >= m; }
  std::string var_name(int var) const {
    return var < m ? "y" + std::to_string(var + 1)
                   : "x" + std::to_string(var - m + 1);
  }
  void validate() const;
  bool operator==(const RingSpec &o) const {
    return field == o.field && m == o.m && t == o.t && order == o.order &&
           regime == o.regime;
  }
};

inline int coarse_of(const MultiDegree &u, const RingSpec &R) {
  int s = 0;
  for (int j = R.m; j < R.nvars(); ++j)
    s += u[j];
  return s;
}

Monomial mono_one(const RingSpec &R);
Monomial mono_var(int var, const RingSpec &R, int e = 1);
Monomial mono_mul(const Monomial &u, const Monomial &v);
Monomial mono_div(const Monomial &u, const Monomial &v); // throws if not u >= v
Monomial mono_lcm(const Monomial &u, const Monomial &v);
Monomial mono_gcd(const Monomial &u, const Monomial &v);
Monomial mono_pow(const Monomial &u, int e);
bool mono_divides(const Monomial &v, const Monomial &u); // v | u
int mono_total(const Monomial &u);

/// Total term order. Grevlex compares the coarse (x-block) degree first,
/// then reverse-lex in the x-block, then total y-degree, then reverse-lex in
/// the y-block; x-block before y-block in both orders.
Cmp order_compare(const Monomial &u, const Monomial &v, const RingSpec &R);

std::string mono_str(const Monomial &u, const RingSpec &R);

} // namespace camreg
