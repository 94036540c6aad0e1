#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "camreg/verify.hpp"

using namespace camreg;

static RingSpec ring(int m, int t) {
  RingSpec R;
  R.field = Field{0};
  R.m = m;
  R.t = t;
  R.order = OrderTag::Grevlex;
  R.regime = Regime::Multigraded;
  R.validate();
  return R;
}

static Polynomial sqfree(const std::vector<int> &vars, const RingSpec &R) {
  Monomial w(R.m + R.t, 0);
  for (int v : vars)
    w[v] = 1;
  return Polynomial::term(w, Scalar::one(R.field));
}

TEST_CASE("reduced simplicial cohomology hand values") {
  Field k{0};
  SimplicialComplex two_pts{2, {{0}, {1}}};
  CHECK(reduced_cohomology_dim(two_pts, 0, k) == 1);
  CHECK(reduced_cohomology_dim(two_pts, -1, k) == 0);
  SimplicialComplex seg{2, {{0, 1}}};
  CHECK(reduced_cohomology_dim(seg, 0, k) == 0);
  CHECK(reduced_cohomology_dim(seg, 1, k) == 0);
  SimplicialComplex circle{3, {{0, 1}, {1, 2}, {0, 2}}};
  CHECK(reduced_cohomology_dim(circle, 1, k) == 1);
  CHECK(reduced_cohomology_dim(circle, 0, k) == 0);
  SimplicialComplex empty_cx{2, {}};
  CHECK(reduced_cohomology_dim(empty_cx, -1, k) == 1);
}

TEST_CASE("hochster formula examples") {
  Field k{0};
  SimplicialComplex two_pts{2, {{0}, {1}}};
  CHECK(hochster_dim(two_pts, 1, {0, 0}, k) == 1);
  SimplicialComplex full{2, {{0, 1}}};
  CHECK(hochster_dim(full, 2, {-1, -1}, k) == 1);
  CHECK(hochster_dim(full, 0, {0, 0}, k) == 0);
  CHECK(hochster_dim(two_pts, 0, {0, 0}, k) == 0);
  // point: H^1 of k[y] at u = -1
  SimplicialComplex pt{1, {{0}}};
  CHECK(hochster_dim(pt, 1, {-1}, k) == 1);
  CHECK(hochster_dim(pt, 1, {0}, k) == 0);
  CHECK_THROWS_AS(hochster_dim(pt, 1, {1}, k), domain_error);
}

TEST_CASE("hochster agrees with cech fine pieces on SR quotients") {
  struct SR { int m; std::vector<std::vector<int>> facets; };
  std::vector<SR> shipped = {
      {2, {{0}, {1}}},               // two points
      {2, {{0, 1}}},                 // segment
      {3, {{0, 1}, {1, 2}}},         // path
      {3, {{0, 1}, {1, 2}, {0, 2}}}, // circle
      {3, {{0, 1, 2}}},              // solid triangle
      {3, {{0, 1}, {2}}},            // segment + isolated point
  };
  for (const auto &[m, facets] : shipped) {
    SimplicialComplex D{m, facets};
    RingSpec R = ring(m, 1);
    std::vector<Polynomial> gens;
    for (const auto &nf : D.minimal_nonfaces())
      gens.push_back(sqfree(nf, R));
    gens.push_back(Polynomial::variable(m, R)); // kill the x block
    auto M = ModulePresentation::quotient_ring(R, gens);
    std::vector<Polynomial> yv;
    for (int v = 0; v < m; ++v)
      yv.push_back(Polynomial::variable(v, R));
    CechSpec C = CechSpec::from_ideal(R, yv, false);
    MultiDegree u(m + 1, 0);
    std::vector<int> idx(m, -3);
    bool done = false;
    while (!done) {
      for (int v = 0; v < m; ++v)
        u[v] = idx[v];
      for (int i = 0; i <= m; ++i)
        CHECK(cohomology_piece_dim(M, C, i, u) ==
              hochster_dim(D, i, u, R.field));
      int v = 0;
      while (v < m && ++idx[v] > 0) {
        idx[v] = -3;
        ++v;
      }
      done = v == m;
    }
  }
}

TEST_CASE("ara bounds") {
  RingSpec R = ring(3, 1);
  auto y = [&](int v) { return Polynomial::variable(v, R); };
  AraBound reg_seq = ara_bound(R, {y(0), y(1)});
  CHECK(reg_seq.exact);
  CHECK(reg_seq.lower == 2);
  CHECK(reg_seq.upper == 2);
  AraBound principal = ara_bound(R, {sqfree({0, 1}, R)});
  CHECK(principal.lower == 1);
  CHECK(principal.upper == 1);
  // triangle edge ideal: height 2, Schmitt-Vogel grouping 2 < 3 generators
  AraBound tri =
      ara_bound(R, {sqfree({0, 1}, R), sqfree({1, 2}, R), sqfree({0, 2}, R)});
  CHECK(tri.lower == 2);
  CHECK(tri.upper == 2);
  CHECK_FALSE(tri.exact);
  AraBound zero = ara_bound(R, {});
  CHECK(zero.lower == 0);
  CHECK(zero.upper == 0);
}

TEST_CASE("corpus determinism") {
  auto a = corpus(0, 6), b = corpus(0, 6);
  REQUIRE(a.size() == 6);
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].desc == b[i].desc);
    CHECK(a[i].statements == b[i].statements);
  }
  CHECK(a[0].desc.find("general cyclic k[x1..x2]") != std::string::npos);
  auto c = corpus(1, 6);
  bool differs = false;
  for (size_t i = 1; i < c.size(); ++i)
    if (c[i].desc != a[i].desc)
      differs = true;
  CHECK(differs);
}

static Instance ex21_instance(int m, int t) {
  Instance inst;
  inst.R = ring(m, t);
  std::vector<Polynomial> gens;
  for (int v = m; v < m + t; ++v)
    gens.push_back(Polynomial::variable(v, inst.R));
  inst.M = ModulePresentation::quotient_ring(inst.R, gens);
  for (int v = 0; v < m; ++v)
    inst.a0.push_back(Polynomial::variable(v, inst.R));
  inst.x_killed = true;
  inst.desc = "R0 conc, m=" + std::to_string(m) + " t=" + std::to_string(t);
  return inst;
}

TEST_CASE("verify: statement examples") {
  CheckResult ex = verify("Ex2.1", ex21_instance(2, 1));
  CHECK(ex.verdict == "HOLDS");
  CHECK(ex.left == "reg_{m0+R+}=2, reg_{R+}=0");

  // Thm 2.5 on the triangle edge ideal over k[y1,y2,y3], t = 2
  Instance th;
  th.R = ring(3, 2);
  th.M = ModulePresentation::free_module(FreeModuleSpec::free_rank1(th.R));
  th.a0 = {sqfree({0, 1}, th.R), sqfree({1, 2}, th.R), sqfree({0, 2}, th.R)};
  th.x_free_rels = true;
  th.desc = "triangle";
  CheckResult t5 = verify("Thm2.5", th);
  CHECK(t5.verdict == "HOLDS");
  CHECK(t5.left == "2");
  CHECK(t5.right == "2");

  // Cor 2.6 with a0 = (y1, y2) on M0 = k[y1,y2], t = 1
  Instance c6;
  c6.R = ring(2, 1);
  c6.M = ModulePresentation::free_module(FreeModuleSpec::free_rank1(c6.R));
  c6.a0 = {Polynomial::variable(0, c6.R), Polynomial::variable(1, c6.R)};
  c6.x_free_rels = true;
  c6.desc = "reg seq";
  CheckResult r6 = verify("Cor2.6", c6);
  CHECK(r6.verdict == "HOLDS");
  CHECK(r6.left == "2");
  CHECK(r6.right == "ara=2");

  CHECK_THROWS_AS(verify("Thm9.9", c6), domain_error);
}

TEST_CASE("suite: deterministic, thread-independent, no failures") {
  auto rs1 = verify_suite(0, 5, 1);
  auto rs2 = verify_suite(0, 5, 3);
  REQUIRE(rs1.size() == rs2.size());
  CHECK(results_json(rs1) == results_json(rs2));
  CHECK_FALSE(any_certified_failure(rs1));
  int holds = 0;
  for (const auto &r : rs1) {
    CHECK((r.verdict == "HOLDS" || r.verdict == "SKIPPED"));
    if (r.verdict == "HOLDS")
      ++holds;
    CHECK(r.note.find("graded-local") != std::string::npos);
  }
  CHECK(holds > 0);
  // table rendering mentions every verdict
  std::string tab = results_table(rs1);
  CHECK(tab.find("HOLDS") != std::string::npos);
  CHECK(tab.find("statement") != std::string::npos);
}
