#include "camreg/groebner.hpp"

#include <algorithm>
#include <cassert>

namespace camreg {

ModuleOrder ModuleOrder::top(const RingSpec &R) {
  ModuleOrder o;
  o.ring_ = R;
  return o;
}

ModuleOrder ModuleOrder::schreyer(std::shared_ptr<const ModuleOrder> prev,
                                  std::vector<ModTerm> prev_leads) {
  ModuleOrder o;
  o.ring_ = prev->ring();
  o.prev_ = std::move(prev);
  o.leads_ = std::move(prev_leads);
  return o;
}

Cmp ModuleOrder::compare(const ModTerm &a, const ModTerm &b) const {
  if (prev_) {
    ModTerm A{leads_[a.pos].pos, mono_mul(a.mono, leads_[a.pos].mono)};
    ModTerm B{leads_[b.pos].pos, mono_mul(b.mono, leads_[b.pos].mono)};
    Cmp c = prev_->compare(A, B);
    if (c != Cmp::EQ)
      return c;
  } else {
    Cmp c = order_compare(a.mono, b.mono, ring_);
    if (c != Cmp::EQ)
      return c;
  }
  if (a.pos != b.pos)
    return a.pos < b.pos ? Cmp::GT : Cmp::LT; // earlier generator wins
  return Cmp::EQ;
}

std::pair<ModTerm, Scalar> elem_lead(const ModuleElement &v,
                                     const ModuleOrder &ord) {
  bool found = false;
  ModTerm best;
  Scalar c;
  for (int pos = 0; pos < static_cast<int>(v.size()); ++pos) {
    for (const auto &[u, a] : v[pos].terms()) {
      ModTerm t{pos, u};
      if (!found || ord.compare(t, best) == Cmp::GT) {
        best = t;
        c = a;
        found = true;
      }
    }
  }
  if (!found)
    throw domain_error("lead term of a zero module element");
  return {best, c};
}

bool GroebnerBasis::contains(const ModuleElement &v) const {
  return elem_is_zero(normal_form(v, *this));
}

ModuleElement normal_form(const ModuleElement &v, const GroebnerBasis &G,
                          std::vector<Polynomial> *quotients) {
  if (static_cast<int>(v.size()) != G.F.rank())
    throw domain_error("normal form: rank mismatch");
  if (quotients)
    quotients->assign(G.gens.size(), Polynomial(G.F.ring));
  ModuleElement rem = elem_zero(G.F);
  ModuleElement w = v;
  while (!elem_is_zero(w)) {
    auto [lt, lc] = elem_lead(w, *G.order);
    bool reduced = false;
    for (size_t i = 0; i < G.gens.size(); ++i) {
      if (G.leads[i].pos != lt.pos || !mono_divides(G.leads[i].mono, lt.mono))
        continue;
      Monomial q = mono_div(lt.mono, G.leads[i].mono);
      w = elem_sub(w, elem_times_term(G.gens[i], q, lc));
      if (quotients)
        (*quotients)[i].add_term(q, lc);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem[lt.pos].add_term(lt.mono, lc);
      w[lt.pos].add_term(lt.mono, -lc);
    }
  }
  return rem;
}

namespace {

struct WorkBasis {
  const FreeModuleSpec &F;
  std::shared_ptr<const ModuleOrder> order;
  std::vector<ModuleElement> gens;
  std::vector<ModTerm> leads;
  std::vector<std::vector<Polynomial>> transform;
  bool track;

  GroebnerBasis view() const {
    GroebnerBasis G;
    G.F = F;
    G.order = order;
    G.gens = gens;
    G.leads = leads;
    return G;
  }

  void push(ModuleElement v, std::vector<Polynomial> tr) {
    auto [lt, lc] = elem_lead(v, *order);
    v = elem_scaled(v, lc.inv());
    if (track)
      for (auto &f : tr)
        f = f.scaled(lc.inv());
    gens.push_back(std::move(v));
    leads.push_back(lt);
    transform.push_back(std::move(tr));
  }
};

int pair_degree(const WorkBasis &B, size_t i, size_t j) {
  Monomial m = mono_lcm(B.leads[i].mono, B.leads[j].mono);
  return coarse_of(m, B.F.ring) + B.F.coarse_degs[B.leads[i].pos];
}

} // namespace

GroebnerResult buchberger(const std::vector<ModuleElement> &gens,
                          const FreeModuleSpec &F,
                          std::shared_ptr<const ModuleOrder> order,
                          const GroebnerOptions &opts) {
  if (!order)
    order = std::make_shared<ModuleOrder>(ModuleOrder::top(F.ring));
  if (opts.check_graded) {
    for (const auto &v : gens)
      if (!elem_coarse_degree(v, F))
        throw domain_error("buchberger: ungraded input");
  }
  WorkBasis B{F, order, {}, {}, {}, opts.track_transform};
  for (size_t j = 0; j < gens.size(); ++j) {
    if (elem_is_zero(gens[j]))
      continue;
    std::vector<Polynomial> tr;
    if (B.track) {
      tr.assign(gens.size(), Polynomial(F.ring));
      tr[j] = Polynomial::constant(Scalar::one(F.ring.field), F.ring);
    }
    B.push(gens[j], std::move(tr));
  }

  // Pending S-pairs, processed by lowest lcm coarse degree, ties by index.
  std::vector<std::pair<size_t, size_t>> pairs;
  auto add_pairs_for = [&](size_t k) {
    for (size_t i = 0; i < k; ++i)
      if (B.leads[i].pos == B.leads[k].pos)
        pairs.emplace_back(i, k);
  };
  for (size_t k = 0; k < B.gens.size(); ++k)
    add_pairs_for(k);

  while (!pairs.empty()) {
    size_t best = 0;
    int bestdeg = pair_degree(B, pairs[0].first, pairs[0].second);
    for (size_t q = 1; q < pairs.size(); ++q) {
      int d = pair_degree(B, pairs[q].first, pairs[q].second);
      if (d < bestdeg) {
        bestdeg = d;
        best = q;
      }
    }
    auto [i, j] = pairs[best];
    pairs.erase(pairs.begin() + best);

    // Product criterion: safe for ideals (rank 1) only.
    if (F.rank() == 1 &&
        mono_total(mono_gcd(B.leads[i].mono, B.leads[j].mono)) == 0)
      continue;

    Monomial m = mono_lcm(B.leads[i].mono, B.leads[j].mono);
    Monomial ui = mono_div(m, B.leads[i].mono);
    Monomial uj = mono_div(m, B.leads[j].mono);
    Scalar one = Scalar::one(F.ring.field);
    ModuleElement S = elem_sub(elem_times_term(B.gens[i], ui, one),
                               elem_times_term(B.gens[j], uj, one));
    if (elem_is_zero(S))
      continue;
    GroebnerBasis view = B.view();
    std::vector<Polynomial> quot;
    ModuleElement r = normal_form(S, view, B.track ? &quot : nullptr);
    if (elem_is_zero(r))
      continue;
    std::vector<Polynomial> tr;
    if (B.track) {
      tr.assign(gens.size(), Polynomial(F.ring));
      for (size_t l = 0; l < gens.size(); ++l) {
        tr[l] = B.transform[i][l].times_term(ui, one) -
                B.transform[j][l].times_term(uj, one);
        for (size_t g = 0; g < B.gens.size(); ++g)
          tr[l] = tr[l] - quot[g] * B.transform[g][l];
      }
    }
    B.push(std::move(r), std::move(tr));
    add_pairs_for(B.gens.size() - 1);
  }

  // Interreduce: drop redundant lead terms, then tail-reduce.
  size_t n = B.gens.size();
  std::vector<bool> dead(n, false);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (i == j || dead[j] || B.leads[j].pos != B.leads[i].pos)
        continue;
      if (mono_divides(B.leads[j].mono, B.leads[i].mono) &&
          (B.leads[j].mono != B.leads[i].mono || j < i)) {
        dead[i] = true;
        break;
      }
    }
  }
  WorkBasis R{F, order, {}, {}, {}, B.track};
  for (size_t i = 0; i < n; ++i)
    if (!dead[i])
      R.push(B.gens[i], B.track ? B.transform[i] : std::vector<Polynomial>{});
  for (size_t i = 0; i < R.gens.size(); ++i) {
    WorkBasis others{F, order, {}, {}, {}, R.track};
    for (size_t j = 0; j < R.gens.size(); ++j)
      if (j != i)
        others.push(R.gens[j],
                    R.track ? R.transform[j] : std::vector<Polynomial>{});
    GroebnerBasis view = others.view();
    std::vector<Polynomial> quot;
    ModuleElement nf =
        normal_form(R.gens[i], view, R.track ? &quot : nullptr);
    if (R.track) {
      for (size_t l = 0; l < gens.size(); ++l) {
        Polynomial acc = R.transform[i][l];
        for (size_t g = 0; g < others.gens.size(); ++g)
          acc = acc - quot[g] * others.transform[g][l];
        R.transform[i][l] = acc;
      }
    }
    R.gens[i] = nf;
  }

  // Canonical ordering: descending lead term.
  std::vector<size_t> idx(R.gens.size());
  for (size_t i = 0; i < idx.size(); ++i)
    idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    return order->compare(R.leads[a], R.leads[b]) == Cmp::GT;
  });
  GroebnerResult out;
  out.gb.F = F;
  out.gb.order = order;
  for (size_t i : idx) {
    out.gb.gens.push_back(R.gens[i]);
    out.gb.leads.push_back(R.leads[i]);
    if (R.track)
      out.transform.push_back(R.transform[i]);
  }
  return out;
}

SyzygyResult syzygy_basis(const GroebnerBasis &G) {
  const RingSpec &ring = G.F.ring;
  SyzygyResult out;
  out.F.ring = ring;
  for (const auto &g : G.gens) {
    auto d = elem_coarse_degree(g, G.F);
    if (!d)
      throw domain_error("syzygy basis requires graded elements");
    out.F.coarse_degs.push_back(*d);
    if (ring.regime == Regime::Multigraded) {
      auto fd = elem_fine_degree(g, G.F);
      if (!fd)
        throw domain_error("syzygy basis: element not fine-graded");
      out.F.fine_degs.push_back(*fd);
    }
  }
  out.order = std::make_shared<ModuleOrder>(
      ModuleOrder::schreyer(G.order, G.leads));

  Scalar one = Scalar::one(ring.field);
  for (size_t a = 0; a < G.gens.size(); ++a) {
    for (size_t b = a + 1; b < G.gens.size(); ++b) {
      if (G.leads[a].pos != G.leads[b].pos)
        continue;
      Monomial m = mono_lcm(G.leads[a].mono, G.leads[b].mono);
      Monomial ua = mono_div(m, G.leads[a].mono);
      Monomial ub = mono_div(m, G.leads[b].mono);
      ModuleElement S = elem_sub(elem_times_term(G.gens[a], ua, one),
                                 elem_times_term(G.gens[b], ub, one));
      std::vector<Polynomial> quot;
      ModuleElement r = normal_form(S, G, &quot);
      if (!elem_is_zero(r))
        throw domain_error("syzygy basis: input is not a Groebner basis");
      ModuleElement tau = elem_zero(out.F);
      tau[a].add_term(ua, one);
      tau[b].add_term(ub, -one);
      for (size_t l = 0; l < G.gens.size(); ++l)
        tau[l] = tau[l] - quot[l];
      out.syzygies.push_back(std::move(tau));
    }
  }
  return out;
}

} // namespace camreg
