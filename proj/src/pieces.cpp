#include "camreg/pieces.hpp"

#include <algorithm>

namespace camreg {

namespace {

std::vector<Scalar> cand_vector(const PieceBasis &P, const ModuleElement &v) {
  std::vector<Scalar> out(P.cands.size(), Scalar::zero(P.F.ring.field));
  for (int g = 0; g < static_cast<int>(v.size()); ++g)
    for (const auto &[mono, c] : v[g].terms()) {
      auto it = P.index.find({g, mono});
      if (it == P.index.end())
        throw domain_error("piece: element term outside this degree");
      out[it->second] = out[it->second] + c;
    }
  return out;
}

void insert_relation(PieceBasis &P, std::vector<Scalar> v) {
  for (size_t k = 0; k < P.red.size(); ++k) {
    const Scalar c = v[P.piv[k]];
    if (c.is_zero())
      continue;
    for (size_t j = 0; j < v.size(); ++j)
      v[j] = v[j] - c * P.red[k][j];
  }
  size_t p = v.size();
  for (size_t j = 0; j < v.size(); ++j)
    if (!v[j].is_zero()) {
      p = j;
      break;
    }
  if (p == v.size())
    return;
  Scalar inv = v[p].inv();
  for (auto &c : v)
    c = c * inv;
  for (size_t k = 0; k < P.red.size(); ++k) {
    const Scalar c = P.red[k][p];
    if (c.is_zero())
      continue;
    for (size_t j = 0; j < v.size(); ++j)
      P.red[k][j] = P.red[k][j] - c * v[j];
  }
  P.red.push_back(std::move(v));
  P.piv.push_back(p);
}

void finish(PieceBasis &P) {
  std::vector<bool> is_piv(P.cands.size(), false);
  for (size_t p : P.piv)
    is_piv[p] = true;
  for (size_t j = 0; j < P.cands.size(); ++j)
    if (!is_piv[j])
      P.basis.push_back(j);
}

} // namespace

std::vector<Scalar> PieceBasis::reduce(std::vector<Scalar> v) const {
  for (size_t k = 0; k < red.size(); ++k) {
    const Scalar c = v[piv[k]];
    if (c.is_zero())
      continue;
    for (size_t j = 0; j < v.size(); ++j)
      v[j] = v[j] - c * red[k][j];
  }
  std::vector<Scalar> out;
  out.reserve(basis.size());
  for (size_t b : basis)
    out.push_back(v[b]);
  return out;
}

std::vector<Scalar> PieceBasis::coords_of(const ModuleElement &v) const {
  return reduce(cand_vector(*this, v));
}

ModuleElement PieceBasis::element_of(const std::vector<Scalar> &coords) const {
  ModuleElement v = elem_zero(F);
  for (size_t b = 0; b < basis.size(); ++b) {
    if (coords[b].is_zero())
      continue;
    const auto &[g, mono] = cands[basis[b]];
    v[g].add_term(mono, coords[b]);
  }
  return v;
}

PieceBasis fine_piece(const ModulePresentation &M, const MultiDegree &u) {
  if (M.F.rank() > 0 && !M.F.has_fine())
    throw domain_error("fine_piece: module lacks fine degrees");
  PieceBasis P;
  P.F = M.F;
  for (int g = 0; g < M.F.rank(); ++g) {
    Monomial e(M.F.ring.nvars());
    bool ok = true;
    for (int j = 0; j < M.F.ring.nvars(); ++j) {
      e[j] = u[j] - M.F.fine_degs[g][j];
      if (e[j] < 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      P.index[{g, e}] = P.cands.size();
      P.cands.emplace_back(g, e);
    }
  }
  Scalar one = Scalar::one(M.F.ring.field);
  for (const auto &rel : M.rels) {
    auto dr = elem_fine_degree(rel, M.F);
    if (!dr)
      throw domain_error("fine_piece: relation not fine-graded");
    if ((*dr)[0] == NEG_INF && elem_is_zero(rel))
      continue;
    Monomial w(M.F.ring.nvars());
    bool ok = true;
    for (int j = 0; j < M.F.ring.nvars(); ++j) {
      w[j] = u[j] - (*dr)[j];
      if (w[j] < 0) {
        ok = false;
        break;
      }
    }
    if (!ok)
      continue;
    insert_relation(P, cand_vector(P, elem_times_term(rel, w, one)));
  }
  finish(P);
  return P;
}

std::vector<Monomial> monomials_of_degree(const RingSpec &R, int d) {
  std::vector<Monomial> out;
  if (d < 0)
    return out;
  Monomial cur(R.nvars(), 0);
  // lexicographic enumeration over the x block
  auto rec = [&](auto &&self, int var, int left) -> void {
    if (var == R.nvars() - 1) {
      cur[var] = left;
      out.push_back(cur);
      cur[var] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[var] = e;
      self(self, var + 1, left - e);
    }
    cur[var] = 0;
  };
  rec(rec, 0, d);
  return out;
}

PieceBasis coarse_piece(const ModulePresentation &M, int n) {
  const RingSpec &R = M.F.ring;
  if (R.m != 0)
    throw domain_error("coarse_piece: requires m = 0");
  PieceBasis P;
  P.F = M.F;
  for (int g = 0; g < M.F.rank(); ++g)
    for (const auto &mono : monomials_of_degree(R, n - M.F.coarse_degs[g])) {
      P.index[{g, mono}] = P.cands.size();
      P.cands.emplace_back(g, mono);
    }
  Scalar one = Scalar::one(R.field);
  for (const auto &rel : M.rels) {
    auto dr = elem_coarse_degree(rel, M.F);
    if (!dr)
      throw domain_error("coarse_piece: relation not homogeneous");
    if (*dr == NEG_INF)
      continue;
    for (const auto &w : monomials_of_degree(R, n - *dr))
      insert_relation(P, cand_vector(P, elem_times_term(rel, w, one)));
  }
  finish(P);
  return P;
}

Matrix mult_matrix(const PieceBasis &src, const PieceBasis &dst,
                   const Polynomial &w) {
  Matrix A(dst.dim(), src.dim(), src.F.ring.field);
  Scalar one = Scalar::one(src.F.ring.field);
  for (int b = 0; b < src.dim(); ++b) {
    const auto &[g, mono] = src.cands[src.basis[b]];
    ModuleElement v = elem_zero(src.F);
    v[g] = w.times_term(mono, one);
    auto col = dst.coords_of(v);
    for (int r = 0; r < dst.dim(); ++r)
      A.at(r, b) = col[r];
  }
  return A;
}

} // namespace camreg
