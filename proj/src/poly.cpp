#include "camreg/poly.hpp"

#include <algorithm>

namespace camreg {

Polynomial Polynomial::term(const Monomial &u, const Scalar &c) {
  Polynomial f;
  f.nvars_ = u.size();
  if (!c.is_zero())
    f.terms_.emplace(u, c);
  return f;
}

Polynomial Polynomial::constant(const Scalar &c, const RingSpec &R) {
  return term(mono_one(R), c);
}

Polynomial Polynomial::variable(int var, const RingSpec &R) {
  return term(mono_var(var, R), Scalar::one(R.field));
}

void Polynomial::add_term(const Monomial &u, const Scalar &c) {
  if (c.is_zero())
    return;
  nvars_ = u.size();
  auto it = terms_.find(u);
  if (it == terms_.end()) {
    terms_.emplace(u, c);
    return;
  }
  Scalar s = it->second + c;
  if (s.is_zero())
    terms_.erase(it);
  else
    it->second = s;
}

Polynomial Polynomial::operator-() const {
  Polynomial g(*this);
  for (auto &[u, c] : g.terms_)
    c = -c;
  return g;
}

Polynomial operator+(const Polynomial &f, const Polynomial &g) {
  Polynomial h(f);
  h.nvars_ = std::max(f.nvars_, g.nvars_);
  for (const auto &[u, c] : g.terms_)
    h.add_term(u, c);
  return h;
}

Polynomial operator-(const Polynomial &f, const Polynomial &g) {
  return f + (-g);
}

Polynomial operator*(const Polynomial &f, const Polynomial &g) {
  Polynomial h;
  h.nvars_ = std::max(f.nvars_, g.nvars_);
  for (const auto &[u, a] : f.terms_)
    for (const auto &[v, b] : g.terms_)
      h.add_term(mono_mul(u, v), a * b);
  return h;
}

Polynomial Polynomial::scaled(const Scalar &c) const {
  Polynomial g;
  g.nvars_ = nvars_;
  if (c.is_zero())
    return g;
  for (const auto &[u, a] : terms_)
    g.terms_.emplace(u, a * c);
  return g;
}

Polynomial Polynomial::times_term(const Monomial &u, const Scalar &c) const {
  Polynomial g;
  g.nvars_ = std::max(nvars_, u.size());
  if (c.is_zero())
    return g;
  for (const auto &[v, a] : terms_)
    g.terms_.emplace(mono_mul(v, u), a * c);
  return g;
}

Polynomial Polynomial::pow(int e, const RingSpec &R) const {
  Polynomial acc = Polynomial::constant(Scalar::one(R.field), R);
  for (int i = 0; i < e; ++i)
    acc = acc * (*this);
  return acc;
}

std::pair<Monomial, Scalar> Polynomial::lead(const RingSpec &R) const {
  if (terms_.empty())
    throw domain_error("leading term of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (order_compare(it->first, best->first, R) == Cmp::GT)
      best = it;
  return {best->first, best->second};
}

std::optional<int> Polynomial::coarse_degree(const RingSpec &R) const {
  if (terms_.empty())
    return NEG_INF;
  int d = coarse_of(terms_.begin()->first, R);
  for (const auto &[u, c] : terms_)
    if (coarse_of(u, R) != d)
      return std::nullopt;
  return d;
}

std::optional<MultiDegree> Polynomial::fine_degree(const RingSpec &R) const {
  if (terms_.empty())
    return MultiDegree(R.nvars(), NEG_INF);
  MultiDegree d = terms_.begin()->first;
  for (const auto &[u, c] : terms_)
    if (u != d)
      return std::nullopt;
  return d;
}

std::string Polynomial::str(const RingSpec &R) const {
  if (terms_.empty())
    return "0";
  std::vector<const std::pair<const Monomial, Scalar> *> sorted;
  for (const auto &tc : terms_)
    sorted.push_back(&tc);
  std::sort(sorted.begin(), sorted.end(), [&](auto *a, auto *b) {
    return order_compare(a->first, b->first, R) == Cmp::GT;
  });
  std::string s;
  for (auto *tc : sorted) {
    std::string c = tc->second.str();
    bool neg = !c.empty() && c[0] == '-';
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (neg)
      c = c.substr(1);
    bool is_const = mono_total(tc->first) == 0;
    if (c == "1" && !is_const)
      s += mono_str(tc->first, R);
    else {
      s += c;
      if (!is_const)
        s += "*" + mono_str(tc->first, R);
    }
  }
  return s;
}

} // namespace camreg
