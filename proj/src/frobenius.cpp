#include "camreg/frobenius.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace camreg {

namespace {

long long power_ll(long long p, int s) {
  long long q = 1;
  for (int k = 0; k < s; ++k) {
    q *= p;
    if (q > (1 << 20))
      throw domain_error("frobenius: p^s too large");
  }
  return q;
}

void check_quotient(const ModulePresentation &Q) {
  const RingSpec &R = Q.F.ring;
  if (R.field.is_rational())
    throw domain_error("frobenius: prime field required");
  if (R.regime != Regime::Multigraded || !Q.F.has_fine())
    throw domain_error("frobenius: MULTIGRADED presentation required");
  if (Q.F.rank() != 1 ||
      std::any_of(Q.F.fine_degs[0].begin(), Q.F.fine_degs[0].end(),
                  [](int e) { return e != 0; }))
    throw domain_error("frobenius: cyclic degree-0 quotient required");
  for (const auto &rel : Q.rels)
    if (!elem_is_zero(rel) && !rel[0].is_single_term())
      throw domain_error("frobenius: monomial ideal required");
  for (int j = R.m; j < R.nvars(); ++j) {
    Monomial xj = mono_var(j, R);
    bool killed = false;
    for (const auto &rel : Q.rels)
      if (!elem_is_zero(rel) && rel[0].is_single_term() &&
          mono_divides(rel[0].terms().begin()->first, xj))
        killed = true;
    if (!killed)
      throw domain_error("frobenius: x variables must act as zero");
  }
}

MultiDegree full_degree(const MultiDegree &u, const RingSpec &R) {
  if (static_cast<int>(u.size()) == R.nvars())
    return u;
  if (static_cast<int>(u.size()) == R.m) {
    MultiDegree v(R.nvars(), 0);
    std::copy(u.begin(), u.end(), v.begin());
    return v;
  }
  throw domain_error("frobenius: degree length mismatch");
}

MultiDegree deg_scaled(const MultiDegree &u, long long q) {
  MultiDegree v = u;
  for (auto &e : v)
    e = static_cast<int>(q * e);
  return v;
}

Monomial subset_mono(const CechSpec &C, const std::vector<int> &sigma) {
  Monomial d(C.ring.nvars(), 0);
  for (int j : sigma)
    d = mono_mul(d, C.gens[j].mono);
  return d;
}

std::vector<CechFraction> render_chain(const CechAtDegree &C, int i,
                                       const std::vector<Scalar> &v) {
  const RingSpec &R = C.cech().ring;
  std::vector<CechFraction> out;
  size_t off = 0;
  for (size_t b = 0; b < C.subsets(i).size(); ++b) {
    const PieceBasis &P = C.piece(i, static_cast<int>(b));
    std::vector<Scalar> cs(v.begin() + off, v.begin() + off + P.dim());
    off += P.dim();
    if (std::all_of(cs.begin(), cs.end(),
                    [](const Scalar &c) { return c.is_zero(); }))
      continue;
    Monomial den = mono_pow(subset_mono(C.cech(), C.subsets(i)[b]), C.K());
    ModuleElement e = P.element_of(cs);
    for (size_t g = 0; g < e.size(); ++g)
      for (const auto &[mo, c] : e[g].terms())
        out.push_back({c.str(), mono_str(mo, R), mono_str(den, R)});
  }
  return out;
}

Matrix mat_mul(const Matrix &A, const Matrix &B) {
  Matrix C(A.rows(), B.cols(), A.field());
  for (size_t r = 0; r < A.rows(); ++r)
    for (size_t k = 0; k < A.cols(); ++k) {
      if (A.at(r, k).is_zero())
        continue;
      for (size_t c = 0; c < B.cols(); ++c)
        C.at(r, c) = C.at(r, c) + A.at(r, k) * B.at(k, c);
    }
  return C;
}

bool mat_is_zero(const Matrix &A) {
  for (size_t r = 0; r < A.rows(); ++r)
    for (size_t c = 0; c < A.cols(); ++c)
      if (!A.at(r, c).is_zero())
        return false;
  return true;
}

/// Matrix of (mult by y^((p-1)(-u))) ∘ F : H^i(u) -> H^i(u) in the basis of
/// Cu's cohomology; nullopt when the comparison matrix degenerates.
std::optional<Matrix> twisted_step(const ModulePresentation &Q,
                                   const CechSpec &C, int i,
                                   const CechAtDegree &Cu,
                                   const CohomologyPiece &Hu) {
  const RingSpec &R = Q.F.ring;
  const int p = static_cast<int>(R.field.p);
  const MultiDegree &u = Cu.degree();
  MultiDegree up = deg_scaled(u, p);
  CechAtDegree Cp(Q, C, up, p * Cu.K());
  CechAtDegree Cu2(Q, C, u, Cp.K());
  if (Cu2.cohomology(i).dim != Hu.dim)
    return std::nullopt;
  Monomial one = mono_one(R);
  Monomial tw(R.nvars(), 0);
  for (int j = 0; j < R.nvars(); ++j)
    tw[j] = (p - 1) * (-u[j]);
  const int n = Hu.dim;
  Matrix Bm(n, n, R.field), Am(n, n, R.field);
  for (int c = 0; c < n; ++c) {
    auto bc = Cu2.express(i, transport_chain(Cu, Cu2, i, 1, one, Hu.reps[c]));
    auto f = transport_chain(Cu, Cp, i, p, one, Hu.reps[c]);
    auto ac = Cu2.express(i, transport_chain(Cp, Cu2, i, 1, tw, f));
    for (int r = 0; r < n; ++r) {
      Bm.at(r, c) = bc[r];
      Am.at(r, c) = ac[r];
    }
  }
  if (Bm.rank() != static_cast<size_t>(n))
    return std::nullopt;
  Matrix A(n, n, R.field);
  for (int c = 0; c < n; ++c) {
    std::vector<Scalar> col(n, Scalar::zero(R.field));
    for (int r = 0; r < n; ++r)
      col[r] = Am.at(r, c);
    auto sol = Bm.solve(col);
    if (!sol)
      return std::nullopt;
    for (int r = 0; r < n; ++r)
      A.at(r, c) = (*sol)[r];
  }
  return A;
}

} // namespace

CechSpec base_max_spec(const RingSpec &R) {
  if (R.m < 1)
    throw domain_error("base_max_spec: no base variables");
  CechSpec C;
  C.ring = R;
  for (int j = 0; j < R.m; ++j)
    C.gens.push_back({mono_var(j, R), true});
  C.validate();
  return C;
}

std::string CechFraction::str() const {
  std::string s;
  if (coeff != "1")
    s += coeff + "*";
  s += numerator;
  if (denominator != "1")
    s += "/" + denominator;
  return s;
}

bool FrobeniusMap::is_zero() const { return mat_is_zero(mat); }

FrobeniusMap frobenius_on_piece(const ModulePresentation &Q, int i,
                                const MultiDegree &u, int s, int min_K_src,
                                int min_K_dst) {
  check_quotient(Q);
  if (s < 1)
    throw domain_error("frobenius: power must be >= 1");
  const RingSpec &R = Q.F.ring;
  const long long q = power_ll(R.field.p, s);
  MultiDegree uf = full_degree(u, R);
  MultiDegree uq = deg_scaled(uf, q);
  FrobeniusMap fm;
  fm.i = i;
  fm.s = s;
  fm.u_src = uf;
  fm.u_dst = uq;
  if (R.m == 0) {
    // m0 = (0): H^0 is the module itself, higher cohomology vanishes.
    if (i != 0) {
      fm.mat = Matrix(0, 0, R.field);
      return fm;
    }
    PieceBasis Ps = fine_piece(Q, uf), Pd = fine_piece(Q, uq);
    Matrix mat(Pd.dim(), Ps.dim(), R.field);
    for (int c = 0; c < Ps.dim(); ++c) {
      std::vector<Scalar> e(Ps.dim(), Scalar::zero(R.field));
      e[c] = Scalar::one(R.field);
      ModuleElement el = Ps.element_of(e);
      ModuleElement img = elem_zero(Q.F);
      for (size_t g = 0; g < el.size(); ++g)
        for (const auto &[mo, co] : el[g].terms()) {
          Monomial m2 = mo;
          for (auto &x : m2)
            x = static_cast<int>(q * x);
          img[g].add_term(m2, co);
        }
      auto cd = Pd.coords_of(img);
      for (int r = 0; r < Pd.dim(); ++r)
        mat.at(r, c) = cd[r];
    }
    fm.mat = std::move(mat);
    return fm;
  }
  CechSpec C = base_max_spec(R);
  CechAtDegree Cu(Q, C, uf, min_K_src);
  CohomologyPiece Hu = Cu.cohomology(i);
  int mk = static_cast<int>(
      std::max<long long>(min_K_dst, q * Cu.K()));
  CechAtDegree Cq(Q, C, uq, mk);
  CohomologyPiece Hq = Cq.cohomology(i);
  fm.K_src = Cu.K();
  fm.K_dst = Cq.K();
  Matrix mat(Hq.dim, Hu.dim, R.field);
  Monomial one = mono_one(R);
  for (int c = 0; c < Hu.dim; ++c) {
    auto img = transport_chain(Cu, Cq, i, static_cast<int>(q), one,
                               Hu.reps[c]);
    auto cd = Cq.express(i, img);
    for (int r = 0; r < Hq.dim; ++r)
      mat.at(r, c) = cd[r];
  }
  fm.mat = std::move(mat);
  return fm;
}

std::string FDepthVerdict::str() const {
  std::ostringstream os;
  os << "i=" << i << ": ";
  switch (kind) {
  case Kind::Nonvanishing: {
    os << "F_NONVANISHING at (";
    for (size_t j = 0; j < witness_degree.size(); ++j)
      os << (j ? "," : "") << witness_degree[j];
    os << ")";
    if (!witness.empty()) {
      os << " witness ";
      for (size_t k = 0; k < witness.size(); ++k)
        os << (k ? " + " : "") << witness[k].str();
    }
    break;
  }
  case Kind::NilpotentAt:
    os << "F_NILPOTENT_AT(" << s << ")";
    break;
  case Kind::Undecided:
    os << "UNDECIDED(" << s << ")";
    break;
  }
  return os.str();
}

FDepthReport f_depth_probe(const ModulePresentation &Q, int s_max,
                           int box_radius) {
  check_quotient(Q);
  const RingSpec &R = Q.F.ring;
  const int m = R.m;
  FDepthReport rep;
  rep.s_max = s_max;
  rep.assumption =
      "graded analogue: F-depth is probed on the graded pieces of local "
      "cohomology over the base maximal ideal; agreement with the local "
      "definition is assumed for graded input";
  if (m == 0) {
    FDepthVerdict v;
    v.i = 0;
    PieceBasis P0 = fine_piece(Q, MultiDegree(R.nvars(), 0));
    if (P0.dim() > 0) {
      v.kind = FDepthVerdict::Kind::Nonvanishing;
      v.witness_degree = MultiDegree(R.nvars(), 0);
      v.witness = {{"1", "1", "1"}};
      rep.f_depth = 0;
    } else {
      v.kind = FDepthVerdict::Kind::NilpotentAt;
      v.s = 1;
    }
    rep.verdicts.push_back(v);
    return rep;
  }
  CechSpec C = base_max_spec(R);
  rep.box = certified_box(Q, C);
  if (rep.box.empty) {
    for (int i = 0; i <= m; ++i) {
      FDepthVerdict v;
      v.i = i;
      v.kind = FDepthVerdict::Kind::NilpotentAt;
      v.s = 1;
      rep.verdicts.push_back(v);
    }
    return rep;
  }
  const int B = box_radius > 0 ? box_radius : 3 * m;
  std::vector<int> lo(m), hi(m);
  for (int j = 0; j < m; ++j) {
    lo[j] = std::min(rep.box.lo[j], -B);
    hi[j] = std::max(rep.box.hi[j], 0);
  }
  // Degree grid over the y block; x degrees stay zero.
  std::vector<std::vector<MultiDegree>> supp(m + 1);
  MultiDegree u(R.nvars(), 0);
  for (int j = 0; j < m; ++j)
    u[j] = lo[j];
  for (;;) {
    CechAtDegree Cu(Q, C, u);
    for (int i = 0; i <= m; ++i)
      if (Cu.cohomology(i).dim > 0)
        supp[i].push_back(u);
    int j = 0;
    while (j < m && u[j] == hi[j])
      u[j] = lo[j], ++j;
    if (j == m)
      break;
    ++u[j];
  }
  for (int i = 0; i <= m; ++i) {
    FDepthVerdict v;
    v.i = i;
    if (supp[i].empty()) {
      v.kind = FDepthVerdict::Kind::NilpotentAt;
      v.s = 1;
      rep.verdicts.push_back(v);
      continue;
    }
    bool decided = false;
    for (const MultiDegree &w : supp[i]) {
      if (std::any_of(w.begin(), w.begin() + m, [](int e) { return e > 0; }))
        continue;
      CechAtDegree Cu(Q, C, w);
      CohomologyPiece Hu = Cu.cohomology(i);
      auto A = twisted_step(Q, C, i, Cu, Hu);
      if (!A)
        continue;
      // A^dim nonzero certifies a class xi with (T∘F)^s xi != 0, hence
      // F^s xi != 0, for every s >= 1.
      Matrix P = *A;
      for (int k = 1; k < Hu.dim; ++k)
        P = mat_mul(*A, P);
      if (mat_is_zero(P))
        continue;
      int col = 0;
      while (col < Hu.dim) {
        bool nz = false;
        for (int r = 0; r < Hu.dim; ++r)
          if (!P.at(r, col).is_zero())
            nz = true;
        if (nz)
          break;
        ++col;
      }
      std::vector<Scalar> xi(Cu.dim_total(i), Scalar::zero(R.field));
      for (int r = 0; r < Hu.dim; ++r)
        for (size_t k = 0; k < xi.size(); ++k)
          xi[k] = xi[k] + P.at(r, col) * Hu.reps[r][k];
      v.kind = FDepthVerdict::Kind::Nonvanishing;
      v.witness_degree = w;
      v.witness = render_chain(Cu, i, xi);
      decided = true;
      break;
    }
    if (!decided)
      for (int s = 1; s <= s_max && !decided; ++s) {
        bool allzero = true;
        for (const MultiDegree &w : supp[i])
          if (!frobenius_on_piece(Q, i, w, s).is_zero()) {
            allzero = false;
            break;
          }
        if (allzero) {
          v.kind = FDepthVerdict::Kind::NilpotentAt;
          v.s = s;
          decided = true;
        }
      }
    if (!decided) {
      v.kind = FDepthVerdict::Kind::Undecided;
      v.s = s_max;
    }
    rep.verdicts.push_back(v);
  }
  for (const auto &v : rep.verdicts) {
    if (v.kind == FDepthVerdict::Kind::Nonvanishing) {
      rep.f_depth = v.i;
      break;
    }
    if (v.kind == FDepthVerdict::Kind::Undecided)
      rep.status = "UNDECIDED";
  }
  if (rep.f_depth == POS_INF)
    for (const auto &v : rep.verdicts)
      if (v.kind == FDepthVerdict::Kind::Undecided)
        rep.status = "UNDECIDED";
  return rep;
}

} // namespace camreg
