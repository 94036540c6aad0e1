#include "camreg/verify.hpp"

#include "camreg/linalg.hpp"

#include <algorithm>
#include <set>

namespace camreg {

bool SimplicialComplex::is_face(const std::vector<int> &f) const {
  for (const auto &fac : facets)
    if (std::includes(fac.begin(), fac.end(), f.begin(), f.end()))
      return true;
  return false;
}

std::vector<std::vector<int>> SimplicialComplex::faces_of_dim(int dim) const {
  if (dim < 0)
    return {};
  std::set<std::vector<int>> out;
  for (const auto &fac : facets) {
    int n = static_cast<int>(fac.size());
    if (n < dim + 1)
      continue;
    // enumerate (dim+1)-subsets of fac
    std::vector<int> idx(dim + 1);
    for (int k = 0; k <= dim; ++k)
      idx[k] = k;
    while (true) {
      std::vector<int> f(dim + 1);
      for (int k = 0; k <= dim; ++k)
        f[k] = fac[idx[k]];
      out.insert(f);
      int k = dim;
      while (k >= 0 && idx[k] == n - (dim + 1 - k))
        --k;
      if (k < 0)
        break;
      ++idx[k];
      for (int j = k + 1; j <= dim; ++j)
        idx[j] = idx[j - 1] + 1;
    }
  }
  return {out.begin(), out.end()};
}

SimplicialComplex
SimplicialComplex::restriction(const std::vector<int> &verts) const {
  SimplicialComplex D;
  D.m = m;
  std::set<std::vector<int>> kept;
  for (const auto &fac : facets) {
    std::vector<int> f;
    for (int v : fac)
      if (std::find(verts.begin(), verts.end(), v) != verts.end())
        f.push_back(v);
    kept.insert(f); // may be empty; dedup via set
  }
  // drop non-maximal entries
  for (const auto &f : kept) {
    bool maximal = true;
    for (const auto &g : kept)
      if (f != g && std::includes(g.begin(), g.end(), f.begin(), f.end()))
        maximal = false;
    if (maximal && !f.empty())
      D.facets.push_back(f);
  }
  return D;
}

std::vector<std::vector<int>> SimplicialComplex::minimal_nonfaces() const {
  std::vector<std::vector<int>> out;
  // squarefree ideals here are tiny; scan all subsets of {0..m-1}
  for (int mask = 1; mask < (1 << m); ++mask) {
    std::vector<int> f;
    for (int v = 0; v < m; ++v)
      if (mask & (1 << v))
        f.push_back(v);
    if (is_face(f))
      continue;
    bool minimal = true;
    for (int v : f) {
      std::vector<int> g;
      for (int w : f)
        if (w != v)
          g.push_back(w);
      if (!is_face(g))
        minimal = false;
    }
    if (minimal)
      out.push_back(f);
  }
  return out;
}

SimplicialComplex
SimplicialComplex::from_nonfaces(int m,
                                 const std::vector<std::vector<int>> &nf) {
  SimplicialComplex D;
  D.m = m;
  std::vector<std::vector<int>> faces;
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::vector<int> f;
    for (int v = 0; v < m; ++v)
      if (mask & (1 << v))
        f.push_back(v);
    bool ok = true;
    for (const auto &g : nf)
      if (std::includes(f.begin(), f.end(), g.begin(), g.end()))
        ok = false;
    if (ok && !f.empty())
      faces.push_back(f);
  }
  for (const auto &f : faces) {
    bool maximal = true;
    for (const auto &g : faces)
      if (f != g && std::includes(g.begin(), g.end(), f.begin(), f.end()))
        maximal = false;
    if (maximal)
      D.facets.push_back(f);
  }
  return D;
}

namespace {

int matrix_rank(std::vector<std::vector<Scalar>> rows, const Field &k) {
  if (rows.empty() || rows[0].empty())
    return 0;
  int nr = static_cast<int>(rows.size()), nc = static_cast<int>(rows[0].size());
  int rank = 0;
  for (int c = 0; c < nc && rank < nr; ++c) {
    int piv = -1;
    for (int r = rank; r < nr; ++r)
      if (!rows[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0)
      continue;
    std::swap(rows[rank], rows[piv]);
    Scalar inv = rows[rank][c].inv();
    for (int j = c; j < nc; ++j)
      rows[rank][j] = rows[rank][j] * inv;
    for (int r = 0; r < nr; ++r) {
      if (r == rank || rows[r][c].is_zero())
        continue;
      Scalar f = rows[r][c];
      for (int j = c; j < nc; ++j)
        rows[r][j] = rows[r][j] - f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

} // namespace

int reduced_cohomology_dim(const SimplicialComplex &D, int j, const Field &k) {
  if (j < -1)
    return 0;
  // reduced cochain complex: C^{-1} = k spanned by the empty face (when D is
  // nonempty as a complex, i.e. has at least the empty face -- always true
  // here), C^j spanned by j-faces.
  bool has_vertex = false;
  for (const auto &f : D.facets)
    if (!f.empty())
      has_vertex = true;
  if (!has_vertex) {
    // void-ish complex: only the empty face. H~^{-1} = k, all else 0.
    return j == -1 ? 1 : 0;
  }
  auto faces_j = D.faces_of_dim(j);
  auto faces_up = D.faces_of_dim(j + 1);
  auto faces_dn = j >= 0 ? D.faces_of_dim(j - 1)
                         : std::vector<std::vector<int>>{};
  int dim_j = j == -1 ? 1 : static_cast<int>(faces_j.size());
  if (dim_j == 0)
    return 0;
  auto index_of = [](const std::vector<std::vector<int>> &fs,
                     const std::vector<int> &f) {
    return static_cast<int>(
        std::lower_bound(fs.begin(), fs.end(), f) - fs.begin());
  };
  // coboundary d^j : C^j -> C^{j+1}; rows = C^j basis, cols = C^{j+1} basis
  auto coboundary = [&](const std::vector<std::vector<int>> &lo,
                        const std::vector<std::vector<int>> &hi, bool from_empty) {
    int nr = from_empty ? 1 : static_cast<int>(lo.size());
    std::vector<std::vector<Scalar>> M(
        nr, std::vector<Scalar>(hi.size(), Scalar::zero(k)));
    for (int c = 0; c < static_cast<int>(hi.size()); ++c) {
      const auto &f = hi[c];
      for (int drop = 0; drop < static_cast<int>(f.size()); ++drop) {
        std::vector<int> g;
        for (int p = 0; p < static_cast<int>(f.size()); ++p)
          if (p != drop)
            g.push_back(f[p]);
        int r = from_empty ? 0 : index_of(lo, g);
        Scalar sgn = drop % 2 == 0 ? Scalar::one(k) : -Scalar::one(k);
        M[r][c] = M[r][c] + sgn;
      }
    }
    return M;
  };
  int rank_up = 0, rank_dn = 0;
  if (!faces_up.empty())
    rank_up = matrix_rank(coboundary(faces_j, faces_up, j == -1), k);
  if (j == 0)
    rank_dn = matrix_rank(coboundary({}, faces_j, true), k);
  else if (j > 0 && !faces_j.empty())
    rank_dn = matrix_rank(coboundary(faces_dn, faces_j, false), k);
  return dim_j - rank_up - rank_dn;
}

int hochster_dim(const SimplicialComplex &D, int i, const MultiDegree &u,
                 const Field &k) {
  if (static_cast<int>(u.size()) < D.m)
    throw domain_error("hochster: degree too short");
  std::vector<int> W;
  for (int v = 0; v < D.m; ++v) {
    if (u[v] > 0)
      throw domain_error("hochster: degree must be componentwise <= 0");
    if (u[v] < 0)
      W.push_back(v);
  }
  // H^i_{m0}(k[D])_u = H~^{i-|W|-1}(link_D(W)): the Cech complex piece at u
  // is the simplicial cochain complex of the link, shifted by |W|.
  if (!W.empty() && !D.is_face(W))
    return 0;
  SimplicialComplex L;
  L.m = D.m;
  for (const auto &fac : D.facets) {
    if (!std::includes(fac.begin(), fac.end(), W.begin(), W.end()))
      continue;
    std::vector<int> f;
    for (int v : fac)
      if (std::find(W.begin(), W.end(), v) == W.end())
        f.push_back(v);
    if (!f.empty())
      L.facets.push_back(f);
  }
  // drop non-maximal link facets
  std::vector<std::vector<int>> maxi;
  for (const auto &f : L.facets) {
    bool maximal = true;
    for (const auto &g : L.facets)
      if (f != g && std::includes(g.begin(), g.end(), f.begin(), f.end()))
        maximal = false;
    if (maximal)
      maxi.push_back(f);
  }
  std::sort(maxi.begin(), maxi.end());
  maxi.erase(std::unique(maxi.begin(), maxi.end()), maxi.end());
  L.facets = maxi;
  return reduced_cohomology_dim(L, i - static_cast<int>(W.size()) - 1, k);
}

} // namespace camreg
