#include <doctest.h>

#include <random>

#include "wolfspace/catalog.hpp"
#include "wolfspace/errors.hpp"
#include "wolfspace/json_io.hpp"
#include "wolfspace/wolf.hpp"

using namespace wolfspace;

namespace {

Root root_of(std::initializer_list<int> cs) {
  Root r;
  r.coeffs = cs;
  return r;
}

}  // namespace

TEST_CASE("beta grading dimensions") {
  {
    LieAlgebra alg(RootSystem::build({Family::G2, 2}));
    WolfDecomposition wd = beta_grading(alg);
    CHECK(wd.k.dim() == 6);
    CHECK(wd.m.dim() == 8);
    CHECK(wd.s.dim() == 3);
    CHECK(wd.h.dim() == 3);
    CHECK(wd.a_beta.dim() == 1);
  }
  {
    LieAlgebra alg(RootSystem::build({Family::F4, 4}));
    WolfDecomposition wd = beta_grading(alg);
    CHECK(wd.m.dim() == 28);
    CHECK(wd.k.dim() + wd.m.dim() == 52);
  }
  {
    LieAlgebra alg(RootSystem::build({Family::A, 3}));
    WolfDecomposition wd = beta_grading(alg);
    CHECK(wd.m.dim() == 8);
  }
  {
    // rank one is degenerate: no level-one roots at all
    LieAlgebra alg(RootSystem::build({Family::A, 1}));
    WolfDecomposition wd = beta_grading(alg);
    CHECK(wd.m.dim() == 0);
    CHECK(wd.levels.at(1).empty());
  }
}

TEST_CASE("k and m are orthogonal under the invariant form") {
  for (auto t : {RootSystemType{Family::A, 3}, {Family::B, 3}, {Family::G2, 2},
                 {Family::F4, 4}}) {
    LieAlgebra alg(RootSystem::build(t));
    WolfDecomposition wd = beta_grading(alg);
    for (const LieElement& x : wd.k.basis())
      for (const LieElement& y : wd.m.basis())
        CHECK(alg.invariant_form(x, y).is_zero());
  }
}

TEST_CASE("s is an sp(1) triple") {
  for (auto t : {RootSystemType{Family::A, 3}, {Family::G2, 2}, {Family::F4, 4}}) {
    LieAlgebra alg(RootSystem::build(t));
    WolfDecomposition wd = beta_grading(alg);
    LieElement ia = alg.ia(wd.beta), z = alg.z(wd.beta), w = alg.w(wd.beta);
    CHECK(alg.bracket(ia, z) == GaussianRational(Rational(2)) * w);
    CHECK(alg.bracket(ia, w) == -(GaussianRational(Rational(2)) * z));
    CHECK(alg.bracket(z, w) == GaussianRational(Rational(2)) * ia);
  }
}

TEST_CASE("projection onto m") {
  LieAlgebra alg(RootSystem::build({Family::B, 3}));
  WolfDecomposition wd = beta_grading(alg);
  Root delta = choose_delta(wd);
  CHECK(wd.pi_m(alg.ia(wd.beta)).is_zero());
  CHECK(wd.pi_m(alg.z(wd.beta)).is_zero());
  CHECK(wd.pi_m(alg.z(delta)) == alg.z(delta));
  LieElement mix = alg.z(delta) + alg.ia(wd.beta);
  CHECK(wd.pi_m(mix) == alg.z(delta));
}

TEST_CASE("delta choice") {
  {
    LieAlgebra alg(RootSystem::build({Family::G2, 2}));
    WolfDecomposition wd = beta_grading(alg);
    Root delta = choose_delta(wd);
    CHECK(delta == root_of({3, 1}));
    CHECK(alg.roots().inner(delta, delta) == Rational(2));
    CHECK(alg.roots().pairing(delta, wd.beta) == 1);
  }
  {
    LieAlgebra alg(RootSystem::build({Family::A, 3}));
    WolfDecomposition wd = beta_grading(alg);
    Root delta = choose_delta(wd);
    CHECK(alg.roots().inner(delta, delta) == Rational(2));
    CHECK(alg.roots().pairing(delta, wd.beta) == 1);
  }
  for (int n = 2; n <= 8; ++n) {
    LieAlgebra alg(RootSystem::build({Family::C, n}));
    WolfDecomposition wd = beta_grading(alg);
    CHECK_THROWS_AS(choose_delta(wd), NoDeltaError);
  }
}

TEST_CASE("submanifold model structure") {
  LieAlgebra alg(RootSystem::build({Family::G2, 2}));
  WolfDecomposition wd = beta_grading(alg);
  SubmanifoldModel model = build_submanifold_model(wd, choose_delta(wd));
  CHECK(model.m_N.dim() == 4);
  CHECK(model.h_p.dim() == 1);
  CHECK(model.m_N_perp.dim() == model.m_N.dim());

  // Delta_+ and Delta_- sit inside Sigma_{beta,1} cap Sigma_{delta,1}, which
  // for this space is a single root (dim m_N = 2 + 2 * 1)
  const RootSystem& rs = alg.roots();
  std::vector<Root> joined = model.delta_plus;
  joined.insert(joined.end(), model.delta_minus.begin(), model.delta_minus.end());
  CHECK(joined.size() == 1);
  for (const Root& g : joined) {
    CHECK(rs.pairing(g, wd.beta) == 1);
    CHECK(rs.pairing(g, model.delta) == 1);
  }

  // exact orthogonal splitting of m
  for (const LieElement& x : model.m_N.basis())
    for (const LieElement& y : model.m_N_perp.basis())
      CHECK(alg.invariant_form(x, y).is_zero());

  // m_N_perp is spanned by the beta - delta plane and the level (1, 0) planes
  std::vector<LieElement> gens = {alg.z(wd.beta - model.delta), alg.w(wd.beta - model.delta)};
  for (const Root& g : rs.positive_roots())
    if (rs.pairing(g, wd.beta) == 1 && rs.pairing(g, model.delta) == 0) {
      gens.push_back(alg.z(g));
      gens.push_back(alg.w(g));
    }
  CHECK(model.m_N_perp.same_space(LieSubspace::span(alg, gens)));
}

TEST_CASE("projection of random m vectors") {
  LieAlgebra alg(RootSystem::build({Family::B, 3}));
  WolfDecomposition wd = beta_grading(alg);
  SubmanifoldModel model = build_submanifold_model(wd, choose_delta(wd));
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < 20; ++t) {
    LieElement v = alg.zero();
    for (const LieElement& b : wd.m.basis())
      v = v + GaussianRational(Rational(coef(rng))) * b;
    LieElement p = model.m_N.project(v);
    CHECK(model.m_N.contains(p));
    for (const LieElement& b : model.m_N.basis())
      CHECK(alg.invariant_form(v - p, b).is_zero());
  }
}

TEST_CASE("lemma suite on small catalog spaces") {
  for (auto t : {RootSystemType{Family::A, 3}, {Family::A, 4}, {Family::B, 3},
                 {Family::D, 4}, {Family::G2, 2}, {Family::F4, 4}}) {
    LieAlgebra alg(RootSystem::build(t));
    WolfDecomposition wd = beta_grading(alg);
    SubmanifoldModel model = build_submanifold_model(wd, choose_delta(wd));
    CHECK_MESSAGE(verify_lemma_rotation(model, wd).ok, t.name());
    CHECK_MESSAGE(verify_lemma_root(model, wd).ok, t.name());
    CHECK_MESSAGE(verify_lemma_totally_complex(model, wd).ok, t.name());
    CHECK_MESSAGE(verify_projection_claims(model, wd).ok, t.name());
  }
}

TEST_CASE("negative control: a short delta breaks the rotation lemma") {
  LieAlgebra alg(RootSystem::build({Family::B, 4}));
  WolfDecomposition wd = beta_grading(alg);
  Rational beta_len = alg.roots().inner(wd.beta, wd.beta);
  Root short_delta;
  bool found = false;
  for (const Root& g : wd.levels.at(1))
    if (alg.roots().inner(g, g) != beta_len) {
      short_delta = g;
      found = true;
      break;
    }
  REQUIRE(found);
  SubmanifoldModel mutant = build_submanifold_model(wd, short_delta);
  CheckResult rot = verify_lemma_rotation(mutant, wd);
  CHECK_FALSE(rot.ok);
  CHECK(!rot.witnesses.empty());  // every false verdict carries a witness
}

TEST_CASE("delta independence on spaces with several valid deltas") {
  for (auto t : {RootSystemType{Family::A, 3}, {Family::B, 3}, {Family::G2, 2},
                 {Family::D, 4}}) {
    LieAlgebra alg(RootSystem::build(t));
    WolfDecomposition wd = beta_grading(alg);
    std::vector<Root> deltas = valid_deltas(wd);
    CHECK(deltas.size() > 1);
    std::vector<bool> reference;
    for (const Root& d : deltas) {
      SubmanifoldModel model = build_submanifold_model(wd, d);
      std::vector<bool> verdicts = {
          verify_lemma_rotation(model, wd).ok, verify_lemma_root(model, wd).ok,
          verify_lemma_totally_complex(model, wd).ok,
          verify_projection_claims(model, wd).ok};
      if (reference.empty())
        reference = verdicts;
      else
        CHECK(verdicts == reference);
    }
  }
}

TEST_CASE("full report dimensions") {
  {
    VerificationReport rep = full_report(parse_space("EII"));
    CHECK(rep.dim_M == 40);
    CHECK(rep.dim_N == 20);
    CHECK(rep.dim_Hp == 18);
    CHECK(rep.dim_Kp == 20);
    CHECK(rep.all_ok());
  }
  {
    VerificationReport rep = full_report(parse_space("G"));
    CHECK(rep.dim_M == 8);
    CHECK(rep.dim_N == 4);
    CHECK(rep.dim_Hp == 2);
    CHECK(rep.all_ok());
  }
  {
    VerificationReport rep = full_report(parse_space("G2(C5)"));
    CHECK(rep.dim_M == 12);
    CHECK(rep.dim_N == 6);
    CHECK(rep.dim_Hp == 4);
    CHECK(rep.all_ok());
  }
  CHECK_THROWS_AS(full_report(parse_space("Sp(4)")), NoDeltaError);
}

TEST_CASE("catalog parsing and bounds") {
  CHECK(parse_space("SU(6)").type.name() == "A5");
  CHECK(parse_space("Spin(9)").type.name() == "B4");
  CHECK(parse_space("Spin(10)").type.name() == "D5");
  CHECK(parse_space("go4(r8)").type.name() == "D4");
  CHECK(parse_space("FI").type.name() == "F4");
  CHECK(parse_space("EIX").type.name() == "E8");
  CHECK(parse_space("g2(c4)").type.name() == "A3");
  CHECK(parse_space("B3").display_name == "Go4(R7)");
  CHECK(parse_space("Sp(4)").type.name() == "C4");
  CHECK_THROWS_AS(parse_space("SU(3)"), ConfigurationError);    // below the n >= 4 bound
  CHECK_THROWS_AS(parse_space("Spin(6)"), ConfigurationError);  // below the n >= 7 bound
  CHECK_THROWS_AS(parse_space("A2"), ConfigurationError);
  CHECK_THROWS_AS(parse_space("A12"), ConfigurationError);  // default rank cap
  CHECK(parse_space("A12", 20).type.name() == "A12");
  CHECK_THROWS_AS(parse_space("Q7"), ConfigurationError);
  CHECK(default_catalog().size() == 14);
}

TEST_CASE("reports serialize deterministically") {
  VerificationReport a = full_report(parse_space("Go4(R7)"));
  VerificationReport b = full_report(parse_space("Go4(R7)"));
  CHECK(report_json(a).dump() == report_json(b).dump());
  Json j = report_json(a);
  CHECK(j["dims"]["dim_M"] == 12);
  CHECK(j["verdicts"]["rotation"] == true);
  CHECK(j["ok"] == true);
}
