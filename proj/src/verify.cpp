#include "camreg/verify.hpp"

#include "json.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <atomic>
#include <thread>

namespace camreg {

namespace {

std::string fmt_val(int v) {
  if (v <= NEG_INF)
    return "-inf";
  if (v >= POS_INF)
    return "+inf";
  return std::to_string(v);
}

RingSpec make_ring(int m, int t, Regime regime, int p = 0) {
  RingSpec R;
  R.field = Field{static_cast<std::uint32_t>(p)};
  R.m = m;
  R.t = t;
  R.order = OrderTag::Grevlex;
  R.regime = regime;
  R.validate();
  return R;
}

Polynomial mono_of_mask(unsigned mask, const RingSpec &R, int offset) {
  Monomial w(R.m + R.t, 0);
  for (int v = 0; mask >> v; ++v)
    if (mask & (1u << v))
      w[offset + v] = 1;
  return Polynomial::term(w, Scalar::one(R.field));
}

std::vector<Polynomial> y_vars(const RingSpec &R) {
  std::vector<Polynomial> out;
  for (int j = 0; j < R.m; ++j)
    out.push_back(Polynomial::variable(j, R));
  return out;
}

std::vector<Polynomial> x_vars(const RingSpec &R) {
  std::vector<Polynomial> out;
  for (int j = R.m; j < R.m + R.t; ++j)
    out.push_back(Polynomial::variable(j, R));
  return out;
}

/// M with the x block killed: the underlying R0-module of a polynomial
/// module, as an R-module concentrated in x-degree 0.
ModulePresentation kill_x(const ModulePresentation &M) {
  ModulePresentation out = M;
  for (int j = out.F.ring.m; j < out.F.ring.m + out.F.ring.t; ++j)
    for (int g = 0; g < out.F.rank(); ++g) {
      ModuleElement r = elem_zero(out.F);
      r[g] = Polynomial::variable(j, out.F.ring);
      out.rels.push_back(r);
    }
  return out;
}

struct StatusSet {
  std::set<std::string> seen;
  void add(const std::string &s) { seen.insert(s); }
  bool certified() const {
    for (const auto &s : seen)
      if (s != "CERTIFIED")
        return false;
    return true;
  }
  std::string str() const {
    if (seen.empty())
      return "CERTIFIED";
    std::string out;
    for (const auto &s : seen)
      out += (out.empty() ? "" : ",") + s;
    return out;
  }
};

CheckResult finish(CheckResult r, bool holds, const StatusSet &st) {
  r.statuses = st.str();
  if (holds)
    r.verdict = "HOLDS";
  else if (st.certified())
    r.verdict = "FAILS";
  else {
    r.verdict = "SKIPPED";
    r.reason = "uncertified window: " + st.str();
  }
  return r;
}

CheckResult skipped(CheckResult r, const std::string &reason) {
  r.verdict = "SKIPPED";
  r.reason = reason;
  return r;
}

int reg_of(const ModulePresentation &M, const CechSpec &C, StatusSet &st) {
  EndReport rep = reg_wrt(M, C, 0);
  st.add(rep.status);
  return rep.reg();
}

/// cd of an x-killed module w.r.t. the base ideal alone.
int base_cd(const ModulePresentation &M0, const std::vector<Polynomial> &a0,
            StatusSet &st) {
  if (a0.empty())
    return is_zero_module(M0) ? NEG_INF : 0;
  CechSpec C = CechSpec::from_ideal(M0.F.ring, a0, false);
  EndReport rep = analyze_cech(M0, C);
  st.add(rep.status);
  return rep.cd_lower;
}

/// The base quotient R0/a0 moved to a pure positive ring k[z1..zm], where the
/// resolution tower computes pd and depth over R0 itself.
ModulePresentation base_as_positive(const RingSpec &R,
                                    const std::vector<Polynomial> &a0) {
  RingSpec R0 = make_ring(0, R.m, Regime::General, R.field.p);
  std::vector<Polynomial> gens;
  for (const auto &f : a0) {
    Polynomial g = Polynomial::constant(Scalar::zero(R0.field), R0);
    for (const auto &[w, c] : f.terms()) {
      Monomial z(R.m, 0);
      for (int v = 0; v < R.m; ++v)
        z[v] = w[v];
      g = g + Polynomial::term(z, c);
    }
    gens.push_back(g);
  }
  return ModulePresentation::quotient_ring(R0, gens);
}

bool is_free_rank1(const ModulePresentation &M) {
  return M.F.rank() == 1 && M.rels.empty();
}

} // namespace

AraBound ara_bound(const RingSpec &R, const std::vector<Polynomial> &a0) {
  AraBound b;
  if (a0.empty())
    return b;
  int n = static_cast<int>(a0.size());
  // height via dim(R0/a0) over the base
  auto Q0 = base_as_positive(R, a0);
  int dim_q = krull_dimension(Q0);
  int height = dim_q <= NEG_INF ? R.m : R.m - dim_q;
  b.lower = std::max(1, height);
  // Schmitt-Vogel grouping: greedy partition P_0, P_1, .. with |P_0| = 1 and
  // every pair in P_l dominated by an earlier element dividing their product.
  std::vector<Polynomial> gens = a0;
  bool monomial = true;
  for (const auto &f : gens)
    if (f.terms().size() != 1)
      monomial = false;
  int grouping = n;
  if (monomial && n > 1) {
    std::vector<Monomial> ms;
    for (const auto &f : gens)
      ms.push_back(f.terms().begin()->first);
    std::sort(ms.begin(), ms.end());
    std::vector<std::vector<Monomial>> levels{{ms[0]}};
    auto divides = [](const Monomial &a, const Monomial &b) {
      for (size_t v = 0; v < a.size(); ++v)
        if (a[v] > b[v])
          return false;
      return true;
    };
    for (size_t idx = 1; idx < ms.size(); ++idx) {
      const Monomial &a = ms[idx];
      bool placed = false;
      for (size_t l = 1; l < levels.size() && !placed; ++l) {
        bool ok = true;
        for (const auto &a2 : levels[l]) {
          Monomial prod = mono_mul(a, a2);
          bool dominated = false;
          for (size_t l2 = 0; l2 < l && !dominated; ++l2)
            for (const auto &a1 : levels[l2])
              if (divides(a1, prod))
                dominated = true;
          if (!dominated)
            ok = false;
        }
        if (ok) {
          levels[l].push_back(a);
          placed = true;
        }
      }
      if (!placed)
        levels.push_back({a});
    }
    grouping = static_cast<int>(levels.size());
  }
  b.upper = std::min(n, grouping);
  // exact when the generators form a regular sequence on R0
  ModulePresentation Rfree =
      ModulePresentation::free_module(FreeModuleSpec::free_rank1(R));
  if (grade_on_module(a0, Rfree) == n) {
    b.exact = true;
    b.lower = b.upper = n;
  }
  if (b.lower > b.upper)
    b.lower = b.upper;
  return b;
}

const std::vector<std::string> &statement_ids() {
  static const std::vector<std::string> ids = {
      "Ex2.1",   "Prop2.3",  "Thm2.5",   "Cor2.6",   "Cor2.8",  "Cor2.9",
      "Def2.10", "Prop2.11", "Cor2.12i", "Cor2.12ii", "Thm2.13", "Cor3.5i"};
  return ids;
}

std::vector<Instance> corpus(unsigned seed, int size) {
  std::mt19937 rng(seed);
  std::vector<Instance> out;
  auto rnd = [&](int n) { return static_cast<int>(rng() % n); };
  for (int id = 0; id < size; ++id) {
    Instance inst;
    inst.id = id;
    int kind = id == 0 ? 0 : rnd(7);
    std::ostringstream d;
    if (kind == 0) { // GENERAL-regime module
      int t = id == 0 ? 2 : 1 + rnd(3);
      inst.R = make_ring(0, t, Regime::General);
      if (id != 0 && rnd(2)) { // free with shifts: exercises Thm 2.13
        FreeModuleSpec F;
        F.ring = inst.R;
        int rk = 1 + rnd(2);
        d << "#" << id << " general free k[x1..x" << t << "](";
        for (int g = 0; g < rk; ++g) {
          F.coarse_degs.push_back(rnd(4));
          d << (g ? "," : "") << -F.coarse_degs.back();
        }
        d << ")";
        inst.M = ModulePresentation::free_module(F);
        inst.statements = {"Def2.10", "Cor2.12ii", "Thm2.13"};
      } else {
        int ng = 1 + rnd(3);
        std::vector<Polynomial> gens;
        d << "#" << id << " general cyclic k[x1..x" << t << "]/(";
        for (int g = 0; g < ng; ++g) {
          Monomial w(t, 0);
          int deg = 1 + rnd(3);
          for (int e = 0; e < deg; ++e)
            ++w[rnd(t)];
          gens.push_back(Polynomial::term(w, Scalar::one(inst.R.field)));
          d << (g ? "," : "") << mono_str(w, inst.R);
        }
        d << ")";
        inst.M = ModulePresentation::quotient_ring(inst.R, gens);
        inst.statements = {"Def2.10", "Cor2.12ii", "Thm2.13"};
      }
    } else if (kind == 6) { // shifted sum of base quotients, polynomial module
      int m = 1 + rnd(3), t = 1 + rnd(2);
      inst.R = make_ring(m, t, Regime::Multigraded);
      FreeModuleSpec F;
      F.ring = inst.R;
      int rk = 1 + rnd(2);
      d << "#" << id << " QQ m=" << m << " t=" << t << " sum of R0/b[x](";
      for (int g = 0; g < rk; ++g) {
        MultiDegree w(m + t, 0);
        int sh = rnd(3);
        for (int e = 0; e < sh; ++e)
          ++w[m + rnd(t)];
        F.fine_degs.push_back(w);
        F.coarse_degs.push_back(sh);
        d << (g ? "," : "") << -sh;
      }
      d << ")";
      inst.M = ModulePresentation::free_module(F);
      for (int g = 0; g < rk; ++g)
        if (rnd(2)) {
          Monomial w(m + t, 0);
          int deg = 1 + rnd(2);
          for (int e = 0; e < deg; ++e)
            ++w[rnd(m)];
          ModuleElement rel = elem_zero(F);
          rel[g] = Polynomial::term(w, Scalar::one(inst.R.field));
          inst.M.rels.push_back(rel);
        }
      inst.x_free_rels = true;
      inst.statements = {"Thm2.13", "Def2.10", "Cor2.12ii", "Prop2.11"};
    } else {
      int m = 1 + rnd(3), t = 1 + rnd(3);
      int p = 0;
      if (kind == 5)
        p = rnd(2) ? 3 : 2;
      inst.R = make_ring(m, t, Regime::Multigraded, p);
      // squarefree base ideal
      int ng = 1 + rnd(std::min(3, (1 << m) - 1));
      std::set<unsigned> masks;
      while (static_cast<int>(masks.size()) < ng)
        masks.insert(1u + rng() % ((1u << m) - 1));
      d << "#" << id << (p ? " F" + std::to_string(p) : " QQ") << " m=" << m
        << " t=" << t << " a0=(";
      bool first = true;
      for (unsigned msk : masks) {
        inst.a0.push_back(mono_of_mask(msk, inst.R, 0));
        d << (first ? "" : ",")
          << mono_str(inst.a0.back().terms().begin()->first, inst.R);
        first = false;
      }
      d << ")";
      if (kind == 1 || kind == 5) { // polynomial module M0[x], M0 = R0
        inst.M =
            ModulePresentation::free_module(FreeModuleSpec::free_rank1(inst.R));
        inst.x_free_rels = true;
        d << " M=R";
        inst.statements = {"Thm2.5", "Prop2.3",  "Cor2.6",   "Cor2.8",
                           "Def2.10", "Prop2.11", "Cor2.12i", "Cor2.12ii"};
        if (kind == 5)
          inst.statements = {"Cor3.5i", "Thm2.5", "Prop2.3", "Cor2.12ii"};
      } else if (kind == 2) { // polynomial module with monomial base quotient
        int nb = 1 + rnd(2);
        std::vector<Polynomial> gens;
        d << " M0=R0/(";
        for (int g = 0; g < nb; ++g) {
          Monomial w(m + t, 0);
          int deg = 1 + rnd(3);
          for (int e = 0; e < deg; ++e)
            ++w[rnd(m)];
          gens.push_back(Polynomial::term(w, Scalar::one(inst.R.field)));
          d << (g ? "," : "") << mono_str(w, inst.R);
        }
        d << ")[x]";
        inst.M = ModulePresentation::quotient_ring(inst.R, gens);
        inst.x_free_rels = true;
        inst.statements = {"Thm2.5",  "Prop2.3",  "Cor2.6",
                           "Def2.10", "Prop2.11", "Cor2.12ii"};
      } else if (kind == 3) { // M0 concentrated in degree 0
        std::vector<Polynomial> gens = x_vars(inst.R);
        int nb = rnd(3);
        d << " M=R0/(";
        for (int g = 0; g < nb; ++g) {
          Monomial w(m + t, 0);
          int deg = 1 + rnd(2);
          for (int e = 0; e < deg; ++e)
            ++w[rnd(m)];
          gens.push_back(Polynomial::term(w, Scalar::one(inst.R.field)));
          d << (g ? "," : "") << mono_str(w, inst.R);
        }
        d << ") conc";
        inst.M = ModulePresentation::quotient_ring(inst.R, gens);
        inst.x_killed = true;
        inst.statements = {"Ex2.1", "Cor2.9", "Prop2.3", "Def2.10",
                           "Cor2.12ii"};
      } else { // kind 4: non-CM base k[y1,y2]/(y1^2, y1y2), widened coverage
        m = 2;
        inst.R = make_ring(2, t, Regime::Multigraded);
        inst.a0.clear();
        inst.a0.push_back(Polynomial::variable(rnd(2), inst.R));
        Monomial sq(2 + t, 0);
        sq[0] = 2;
        Monomial mix(2 + t, 0);
        mix[0] = mix[1] = 1;
        inst.M = ModulePresentation::quotient_ring(
            inst.R, {Polynomial::term(sq, Scalar::one(inst.R.field)),
                     Polynomial::term(mix, Scalar::one(inst.R.field))});
        inst.x_free_rels = true;
        d.str("");
        d << "#" << id << " QQ m=2 t=" << t
          << " M0=k[y1,y2]/(y1^2,y1y2)[x] a0=("
          << mono_str(inst.a0[0].terms().begin()->first, inst.R) << ")";
        inst.statements = {"Thm2.5", "Prop2.3", "Cor2.6", "Def2.10",
                           "Prop2.11", "Cor2.12ii"};
      }
    }
    inst.desc = d.str();
    out.push_back(std::move(inst));
  }
  return out;
}

CheckResult verify(const std::string &sid, const Instance &inst) {
  CheckResult r;
  r.statement = sid;
  r.instance = inst.desc;
  const RingSpec &R = inst.R;
  StatusSet st;
  CechSpec Ca = inst.a0.empty() ? CechSpec::rplus_only(R)
                                : CechSpec::from_ideal(R, inst.a0, true);
  CechSpec Cp = CechSpec::rplus_only(R);

  if (sid == "Ex2.1") {
    if (!inst.x_killed)
      return skipped(r, "module not concentrated in degree 0");
    CechSpec Cm0 = CechSpec::from_ideal(R, y_vars(R), true);
    int reg_a = reg_of(inst.M, Cm0, st);
    int reg_p = reg_of(inst.M, Cp, st);
    int d = krull_dimension(inst.M);
    r.left = "reg_{m0+R+}=" + fmt_val(reg_a) + ", reg_{R+}=" + fmt_val(reg_p);
    r.right = "d=" + fmt_val(d) + ", 0";
    return finish(r, reg_a == d && reg_p == 0, st);
  }

  if (sid == "Prop2.3") {
    if (inst.a0.empty())
      return skipped(r, "a0 = 0");
    AraBound ab = ara_bound(R, inst.a0);
    int lhs = reg_of(inst.M, Ca, st);
    int rhs = reg_of(inst.M, Cp, st);
    r.left = fmt_val(lhs);
    r.right = fmt_val(rhs) + " + ara<=" + fmt_val(ab.upper);
    if (!ab.exact)
      r.note += "; ara via upper bound";
    bool holds = rhs <= NEG_INF ? lhs <= NEG_INF : lhs <= rhs + ab.upper;
    return finish(r, holds, st);
  }

  if (sid == "Thm2.5") {
    if (!inst.x_free_rels)
      return skipped(r, "not a polynomial module M0[x]");
    int lhs = reg_of(inst.M, Ca, st);
    int rhs = base_cd(kill_x(inst.M), inst.a0, st);
    r.left = fmt_val(lhs);
    r.right = fmt_val(rhs);
    return finish(r, lhs == rhs, st);
  }

  if (sid == "Cor2.6") {
    if (!inst.x_free_rels)
      return skipped(r, "not a polynomial module M0[x]");
    if (inst.a0.empty())
      return skipped(r, "a0 = 0");
    int n = static_cast<int>(inst.a0.size());
    if (grade_on_module(inst.a0, kill_x(inst.M)) != n)
      return skipped(r, "a0 not a regular sequence on M0");
    int lhs = reg_of(inst.M, Ca, st);
    AraBound ab = ara_bound(R, inst.a0);
    r.left = fmt_val(lhs);
    r.right = "ara=" + fmt_val(n);
    return finish(r, lhs == n && ab.exact && ab.upper == n, st);
  }

  if (sid == "Cor2.8") {
    if (!is_free_rank1(inst.M))
      return skipped(r, "M is not R");
    if (inst.a0.empty())
      return skipped(r, "a0 = 0");
    for (const auto &f : inst.a0)
      if (f.terms().size() != 1)
        return skipped(r, "a0 not monomial");
    int lhs = reg_of(inst.M, Ca, st);
    auto Q0 = base_as_positive(R, inst.a0);
    int pd = projective_dimension(Q0);
    int depth_q = grade_on_module(x_vars(Q0.F.ring), Q0); // depth over m0
    r.left = fmt_val(lhs);
    r.right = "pd=" + fmt_val(pd) + ", depth(R0)-depth(R0/a0)=" +
              fmt_val(R.m - depth_q);
    return finish(r, lhs == pd && pd == R.m - depth_q, st);
  }

  if (sid == "Cor2.9") {
    if (!inst.x_killed)
      return skipped(r, "module not concentrated in degree 0");
    int lhs = reg_of(inst.M, Ca, st);
    // sample b0 over variable subsets; keep those with rad(a0+b0) = m0
    int sup = NEG_INF;
    int hits = 0;
    for (unsigned msk = 0; msk < (1u << R.m); ++msk) {
      std::vector<Polynomial> b0;
      for (int v = 0; v < R.m; ++v)
        if (msk & (1u << v))
          b0.push_back(Polynomial::variable(v, R));
      std::vector<Polynomial> sum = inst.a0;
      sum.insert(sum.end(), b0.begin(), b0.end());
      bool radical_max = true;
      for (int v = 0; v < R.m && radical_max; ++v)
        if (!radical_contains(R, sum, Polynomial::variable(v, R)))
          radical_max = false;
      if (!radical_max)
        continue;
      ++hits;
      ModulePresentation Q = inst.M;
      for (const auto &f : b0)
        for (int g = 0; g < Q.F.rank(); ++g) {
          ModuleElement rel = elem_zero(Q.F);
          rel[g] = f;
          Q.rels.push_back(rel);
        }
      int dim_q = krull_dimension(Q);
      sup = std::max(sup, dim_q);
    }
    if (hits == 0)
      return skipped(r, "no b0 with rad(a0+b0) = m0 in the sample");
    r.left = fmt_val(lhs);
    r.right = "sup dim(M0/b0M0)=" + fmt_val(sup);
    return finish(r, sup <= NEG_INF || lhs >= sup, st);
  }

  if (sid == "Def2.10") {
    if (is_zero_module(inst.M))
      return skipped(r, "zero module");
    int g = grade_on_module(x_vars(R), inst.M);
    EndReport rep = reg_wrt(inst.M, Cp, 0);
    st.add(rep.status);
    std::set<int> nonvanishing;
    for (const auto &e : rep.ends)
      if (e.end > NEG_INF)
        nonvanishing.insert(e.i);
    int cd = rep.cd_lower;
    r.left = "grade=" + fmt_val(g);
    r.right = "cd=" + fmt_val(cd);
    bool iff = (g == cd) ==
               (nonvanishing.size() == 1 && *nonvanishing.begin() == g);
    return finish(r, iff, st);
  }

  if (sid == "Prop2.11") {
    if (R.regime != Regime::Multigraded)
      return skipped(r, "needs fine degrees");
    int lhs = reg_of(inst.M, Ca, st);
    RelCMReport rep;
    try {
      rep = relative_cm_reg(inst.M, inst.a0);
    } catch (const std::exception &) {
      return skipped(r, "not relative Cohen-Macaulay w.r.t. R+");
    }
    st.add(rep.status);
    r.left = fmt_val(lhs);
    r.right = fmt_val(rep.reg);
    return finish(r, lhs == rep.reg, st);
  }

  if (sid == "Cor2.12i") {
    if (R.regime != Regime::Multigraded)
      return skipped(r, "needs fine degrees");
    if (is_zero_module(inst.M))
      return skipped(r, "zero module");
    // d := dim(M/m0M); requires relative CM of rank d over R+
    ModulePresentation Q = inst.M;
    for (const auto &f : y_vars(R))
      for (int g = 0; g < Q.F.rank(); ++g) {
        ModuleElement rel = elem_zero(Q.F);
        rel[g] = f;
        Q.rels.push_back(rel);
      }
    int d = krull_dimension(Q);
    EndReport plus = reg_wrt(inst.M, Cp, 0);
    st.add(plus.status);
    int g = grade_on_module(x_vars(R), inst.M);
    if (g != plus.cd_lower || g != d)
      return skipped(r, "not relative CM of rank dim(M/m0M)");
    CechSpec Cm = CechSpec::from_ideal(R, y_vars(R), true);
    int lhs = reg_of(inst.M, Cm, st);
    int end_d = NEG_INF;
    for (const auto &e : plus.ends)
      if (e.i == d)
        end_d = e.end;
    if (end_d <= NEG_INF)
      return skipped(r, "H^d over R+ vanishes");
    int sup = NEG_INF;
    for (int n = end_d; n >= end_d - R.m; --n) {
      auto H = minimal_presentation(rplus_coarse_cohomology(inst.M, d, n));
      if (H.F.rank() == 0)
        continue;
      sup = std::max(sup, krull_dimension(H) + n);
    }
    r.left = fmt_val(lhs);
    r.right = "sup+d=" + fmt_val(sup + d) + " <= " + fmt_val(R.m + d);
    return finish(r, lhs == sup + d && lhs <= R.m + d, st);
  }

  if (sid == "Cor2.12ii") {
    int lhs = reg_of(inst.M, Cp, st);
    int rhs = reg_of(inst.M, Ca, st);
    r.left = fmt_val(lhs);
    r.right = fmt_val(rhs);
    return finish(r, lhs <= rhs, st);
  }

  if (sid == "Thm2.13") {
    ModulePresentation Rfree =
        ModulePresentation::free_module(FreeModuleSpec::free_rank1(R));
    StatusSet hst;
    if (reg_of(Rfree, Ca, hst) != 0)
      return skipped(r, "reg_{a0+R+}(R) != 0");
    if (is_zero_module(inst.M))
      return skipped(r, "zero module");
    int g = grade_on_module(x_vars(R), inst.M);
    EndReport plus = reg_wrt(inst.M, Cp, 0);
    st.add(plus.status);
    if (g != plus.cd_lower || g != R.t)
      return skipped(r, "M, R not relative CM of the same rank over R+");
    int lhs = reg_of(inst.M, Ca, st);
    int rhs = reg_thm213(inst.M);
    r.left = fmt_val(lhs);
    r.right = fmt_val(rhs);
    return finish(r, lhs == rhs, st);
  }

  if (sid == "Cor3.5i") {
    if (R.field.p == 0)
      return skipped(r, "needs positive characteristic");
    if (!is_free_rank1(inst.M))
      return skipped(r, "S must be the full polynomial ring");
    int lhs = reg_of(inst.M, Ca, st);
    std::vector<Polynomial> gens = inst.a0;
    for (const auto &f : x_vars(R))
      gens.push_back(f);
    auto Q = ModulePresentation::quotient_ring(R, gens);
    FDepthReport fd = f_depth_probe(Q, 4);
    st.add(fd.status);
    if (fd.status == "UNDECIDED")
      return skipped(r, "F-depth probe undecided");
    int rhs = fd.f_depth >= POS_INF ? NEG_INF : R.m - fd.f_depth;
    r.left = fmt_val(lhs);
    r.right = "dim(R)-Fdepth=" + fmt_val(rhs);
    return finish(r, lhs == rhs, st);
  }

  throw domain_error("verify: unknown statement id " + sid);
}

std::vector<CheckResult> verify_suite(unsigned seed, int size, int threads) {
  auto insts = corpus(seed, size);
  struct Job {
    const Instance *inst;
    std::string sid;
  };
  std::vector<Job> jobs;
  for (const auto &sid : statement_ids())
    for (const auto &inst : insts)
      if (std::find(inst.statements.begin(), inst.statements.end(), sid) !=
          inst.statements.end())
        jobs.push_back({&inst, sid});
  std::vector<CheckResult> out(jobs.size());
  if (threads <= 1) {
    for (size_t j = 0; j < jobs.size(); ++j)
      out[j] = verify(jobs[j].sid, *jobs[j].inst);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int w = 0; w < threads; ++w)
      pool.emplace_back([&] {
        for (size_t j = next.fetch_add(1); j < jobs.size();
             j = next.fetch_add(1))
          out[j] = verify(jobs[j].sid, *jobs[j].inst);
      });
    for (auto &th : pool)
      th.join();
  }
  return out;
}

std::string results_json(const std::vector<CheckResult> &rs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto &r : rs) {
    nlohmann::ordered_json o;
    o["statement"] = r.statement;
    o["instance"] = r.instance;
    o["verdict"] = r.verdict;
    if (!r.reason.empty())
      o["reason"] = r.reason;
    o["left"] = r.left;
    o["right"] = r.right;
    o["statuses"] = r.statuses;
    o["note"] = r.note;
    arr.push_back(o);
  }
  return arr.dump(2);
}

std::string results_table(const std::vector<CheckResult> &rs) {
  std::ostringstream os;
  size_t ws = 9, wi = 8, wv = 7;
  for (const auto &r : rs) {
    ws = std::max(ws, r.statement.size());
    wi = std::max(wi, r.instance.size());
    wv = std::max(wv, r.verdict.size());
  }
  auto pad = [](const std::string &s, size_t w) {
    return s + std::string(w - s.size(), ' ');
  };
  os << pad("statement", ws) << "  " << pad("instance", wi) << "  "
     << pad("verdict", wv) << "  detail\n";
  for (const auto &r : rs) {
    std::string detail = r.verdict == "SKIPPED"
                             ? r.reason
                             : r.left + "  vs  " + r.right;
    os << pad(r.statement, ws) << "  " << pad(r.instance, wi) << "  "
       << pad(r.verdict, wv) << "  " << detail << "\n";
  }
  int holds = 0, fails = 0, skip = 0;
  for (const auto &r : rs)
    (r.verdict == "HOLDS" ? holds : r.verdict == "FAILS" ? fails : skip)++;
  os << "total " << rs.size() << ": " << holds << " HOLDS, " << fails
     << " FAILS, " << skip << " SKIPPED\n";
  return os.str();
}

bool any_certified_failure(const std::vector<CheckResult> &rs) {
  for (const auto &r : rs)
    if (r.verdict == "FAILS")
      return true;
  return false;
}

} // namespace camreg
