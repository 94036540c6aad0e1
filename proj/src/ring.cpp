#include "camreg/ring.hpp"

namespace camreg {

void RingSpec::validate() const {
  if (t < 1)
    throw domain_error("ring needs at least one positive variable");
  if (m < 0)
    throw domain_error("negative base-variable count");
  if (m >= 1 && regime != Regime::Multigraded)
    throw domain_error("m >= 1 requires the multigraded regime");
  if (field.p != 0 && !is_prime(field.p))
    throw domain_error("field modulus " + std::to_string(field.p) +
                       " is not prime");
}

Monomial mono_one(const RingSpec &R) { return Monomial(R.nvars(), 0); }

Monomial mono_var(int var, const RingSpec &R, int e) {
  Monomial u(R.nvars(), 0);
  u[var] = e;
  return u;
}

Monomial mono_mul(const Monomial &u, const Monomial &v) {
  Monomial w(u);
  for (size_t i = 0; i < w.size(); ++i)
    w[i] += v[i];
  return w;
}

Monomial mono_div(const Monomial &u, const Monomial &v) {
  Monomial w(u);
  for (size_t i = 0; i < w.size(); ++i) {
    w[i] -= v[i];
    if (w[i] < 0)
      throw domain_error("monomial division is not exact");
  }
  return w;
}

Monomial mono_lcm(const Monomial &u, const Monomial &v) {
  Monomial w(u);
  for (size_t i = 0; i < w.size(); ++i)
    w[i] = std::max(u[i], v[i]);
  return w;
}

Monomial mono_gcd(const Monomial &u, const Monomial &v) {
  Monomial w(u);
  for (size_t i = 0; i < w.size(); ++i)
    w[i] = std::min(u[i], v[i]);
  return w;
}

Monomial mono_pow(const Monomial &u, int e) {
  Monomial w(u);
  for (auto &c : w)
    c *= e;
  return w;
}

bool mono_divides(const Monomial &v, const Monomial &u) {
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] > u[i])
      return false;
  return true;
}

int mono_total(const Monomial &u) {
  int s = 0;
  for (int c : u)
    s += c;
  return s;
}

namespace {

// Reverse-lex within [lo, hi): u beats v iff the last differing exponent is
// smaller in u.
Cmp revlex_block(const Monomial &u, const Monomial &v, int lo, int hi) {
  for (int j = hi - 1; j >= lo; --j) {
    if (u[j] != v[j])
      return u[j] < v[j] ? Cmp::GT : Cmp::LT;
  }
  return Cmp::EQ;
}

Cmp lex_block(const Monomial &u, const Monomial &v, int lo, int hi) {
  for (int j = lo; j < hi; ++j) {
    if (u[j] != v[j])
      return u[j] > v[j] ? Cmp::GT : Cmp::LT;
  }
  return Cmp::EQ;
}

int block_total(const Monomial &u, int lo, int hi) {
  int s = 0;
  for (int j = lo; j < hi; ++j)
    s += u[j];
  return s;
}

} // namespace

Cmp order_compare(const Monomial &u, const Monomial &v, const RingSpec &R) {
  const int m = R.m, n = R.nvars();
  if (R.order == OrderTag::Lex) {
    Cmp c = lex_block(u, v, m, n);
    if (c != Cmp::EQ)
      return c;
    return lex_block(u, v, 0, m);
  }
  int cu = block_total(u, m, n), cv = block_total(v, m, n);
  if (cu != cv)
    return cu > cv ? Cmp::GT : Cmp::LT;
  Cmp c = revlex_block(u, v, m, n);
  if (c != Cmp::EQ)
    return c;
  int yu = block_total(u, 0, m), yv = block_total(v, 0, m);
  if (yu != yv)
    return yu > yv ? Cmp::GT : Cmp::LT;
  return revlex_block(u, v, 0, m);
}

std::string mono_str(const Monomial &u, const RingSpec &R) {
  std::string s;
  for (int j = 0; j < R.nvars(); ++j) {
    if (u[j] == 0)
      continue;
    if (!s.empty())
      s += "*";
    s += R.var_name(j);
    if (u[j] != 1)
      s += "^" + std::to_string(u[j]);
  }
  return s.empty() ? "1" : s;
}

} // namespace camreg
