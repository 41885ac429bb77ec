#include <doctest.h>

#include <random>

#include "wolfspace/chevalley.hpp"
#include "wolfspace/errors.hpp"
#include "wolfspace/json_io.hpp"
#include "wolfspace/linalg.hpp"
#include "wolfspace/wolf.hpp"

using namespace wolfspace;

namespace {

Root root_of(std::initializer_list<int> cs) {
  Root r;
  r.coeffs = cs;
  return r;
}

LieElement random_element(const LieAlgebra& alg, std::mt19937& rng) {
  std::uniform_int_distribution<int> idx(0, alg.dim() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  LieElement x = alg.zero();
  for (int k = 0; k < 5; ++k)
    x.add_coeff(idx(rng), GaussianRational(Rational(coef(rng)), Rational(coef(rng))));
  return x;
}

}  // namespace

TEST_CASE("structure constants: values and definedness") {
  LieAlgebra a2(RootSystem::build({Family::A, 2}));
  const RootSystem& rs = a2.roots();
  int i1 = rs.index_of(root_of({1, 0})), i2 = rs.index_of(root_of({0, 1}));
  auto n12 = a2.constants().n(i1, i2);
  REQUIRE(n12.has_value());
  CHECK(*n12 == 1);  // extraspecial seed is positive

  // defined exactly when the sum is a root
  for (std::size_t a = 0; a < rs.roots().size(); ++a)
    for (std::size_t b = 0; b < rs.roots().size(); ++b) {
      if (b == static_cast<std::size_t>(rs.negate_index(static_cast<int>(a)))) continue;
      bool sum_is_root = rs.contains(rs.roots()[a] + rs.roots()[b]);
      CHECK(a2.constants().n(static_cast<int>(a), static_cast<int>(b)).has_value() ==
            sum_is_root);
    }

  LieAlgebra g2(RootSystem::build({Family::G2, 2}));
  const RootSystem& grs = g2.roots();
  int g1 = grs.index_of(root_of({1, 0})), g2i = grs.index_of(root_of({0, 1}));
  int g12 = grs.index_of(root_of({1, 1}));
  CHECK(std::abs(*g2.constants().n(g1, g2i)) == 1);
  CHECK(std::abs(*g2.constants().n(g1, g12)) == 2);
}

TEST_CASE("structure constants: magnitude and sign rules") {
  for (auto t : {RootSystemType{Family::A, 3}, {Family::B, 3}, {Family::C, 3},
                 {Family::G2, 2}, {Family::F4, 4}}) {
    LieAlgebra alg(RootSystem::build(t));
    const RootSystem& rs = alg.roots();
    for (const auto& [pair, n] : alg.constants().entries()) {
      auto [a, b] = pair;
      auto [p, q] = rs.root_string(rs.roots()[a], rs.roots()[b]);
      (void)q;
      CHECK(std::abs(n) == p + 1);
      CHECK(alg.constants().n(b, a).value() == -n);
      CHECK(alg.constants().n(rs.negate_index(a), rs.negate_index(b)).value() == -n);
    }
  }
}

TEST_CASE("structure constants: frozen positive table for G2") {
  // pins the extraspecial sign convention: seeds positive, one derived
  // negative among the positive pairs
  struct Entry {
    std::array<int, 2> alpha, gamma;
    int n;
  };
  const Entry expected[] = {
      {{1, 0}, {0, 1}, 1},  {{1, 0}, {1, 1}, 2},   {{1, 0}, {2, 1}, 3},
      {{0, 1}, {3, 1}, 1},  {{1, 1}, {2, 1}, -3},
  };
  LieAlgebra alg(RootSystem::build({Family::G2, 2}));
  const RootSystem& rs = alg.roots();
  std::size_t seen = 0;
  for (const auto& [pair, n] : alg.constants().entries()) {
    auto [a, b] = pair;
    if (!rs.is_positive_index(a) || !rs.is_positive_index(b) || a > b) continue;
    REQUIRE(seen < std::size(expected));
    const Entry& e = expected[seen++];
    CHECK(rs.roots()[a] == root_of({e.alpha[0], e.alpha[1]}));
    CHECK(rs.roots()[b] == root_of({e.gamma[0], e.gamma[1]}));
    CHECK(n == e.n);
  }
  CHECK(seen == std::size(expected));
}

TEST_CASE("structure constants: deterministic export") {
  LieAlgebra one(RootSystem::build({Family::F4, 4}));
  LieAlgebra two(RootSystem::build({Family::F4, 4}));
  CHECK(one.constants().entries() == two.constants().entries());
  Json j = structure_constants_json(one);
  CHECK(j["constants"].size() == one.constants().entries().size());
  CHECK(j["constants"][0].contains("alpha"));
  CHECK(j["constants"][0].contains("gamma"));
  CHECK(j["constants"][0].contains("n"));
}

TEST_CASE("bracket identities") {
  LieAlgebra alg(RootSystem::build({Family::G2, 2}));
  const RootSystem& rs = alg.roots();
  Root beta = rs.highest_root();

  // [x, x] = 0 on random mixed elements
  std::mt19937 rng(23);
  for (int t = 0; t < 30; ++t) {
    LieElement x = random_element(alg, rng);
    CHECK(alg.bracket(x, x).is_zero());
  }

  // [X_beta, X_-beta] = A_beta over the simple coroots
  CHECK(alg.bracket(alg.root_vector(beta), alg.root_vector(-beta)) == alg.coroot(beta));

  // the bracket vanishes when the sum of the roots is not a root
  CHECK(alg.bracket(alg.root_vector(beta), alg.root_vector(root_of({0, 1}))).is_zero());

  // [iA_beta, Z_gamma] = W_gamma on level one
  for (const Root& g : rs.positive_roots())
    if (rs.pairing(g, beta) == 1) {
      CHECK(alg.bracket(alg.ia(beta), alg.z(g)) == alg.w(g));
      CHECK(alg.bracket(alg.ia(beta), alg.w(g)) == -alg.z(g));
    }

  // mixed root systems are rejected
  LieAlgebra other(RootSystem::build({Family::G2, 2}));
  CHECK_THROWS_AS(alg.bracket(alg.cartan(0), other.cartan(0)), std::invalid_argument);
}

TEST_CASE("tau is the compact conjugation") {
  LieAlgebra alg(RootSystem::build({Family::B, 3}));
  const RootSystem& rs = alg.roots();
  for (const Root& g : rs.positive_roots()) {
    CHECK(alg.tau(alg.z(g)) == alg.z(g));
    CHECK(alg.tau(alg.w(g)) == alg.w(g));
    CHECK(alg.tau(alg.root_vector(g)) == -alg.root_vector(-g));
    LieElement iz = GaussianRational::i() * alg.z(g);
    CHECK(alg.tau(iz) == -iz);
  }
  for (int j = 0; j < rs.rank(); ++j) {
    Root aj;
    aj.coeffs.assign(rs.rank(), 0);
    aj.coeffs[j] = 1;
    CHECK(alg.tau(alg.ia(aj)) == alg.ia(aj));
  }
  std::mt19937 rng(99);
  for (int t = 0; t < 20; ++t) {
    LieElement x = random_element(alg, rng);
    CHECK(alg.tau(alg.tau(x)) == x);
  }
}

TEST_CASE("invariant form values") {
  LieAlgebra alg(RootSystem::build({Family::C, 3}));
  const RootSystem& rs = alg.roots();
  for (const Root& g : rs.positive_roots()) {
    CHECK(alg.invariant_form(alg.z(g), alg.w(g)).is_zero());
    GaussianRational zz = alg.invariant_form(alg.z(g), alg.z(g));
    GaussianRational ww = alg.invariant_form(alg.w(g), alg.w(g));
    CHECK(zz == ww);
    // negative definite on the compact form: B(Z, Z) = -4/(g, g)
    CHECK(zz == GaussianRational(Rational(-4) / rs.inner(g, g)));
  }
  Root a1 = root_of({1, 0, 0}), a2 = root_of({0, 1, 0});
  CHECK(alg.invariant_form(alg.root_vector(a1), alg.root_vector(a2)).is_zero());
  CHECK(alg.invariant_form(alg.root_vector(a1), alg.root_vector(-a1)) ==
        GaussianRational(Rational(2) / rs.inner(a1, a1)));
}

TEST_CASE("compact basis") {
  LieAlgebra a1(RootSystem::build({Family::A, 1}));
  CHECK(a1.compact_basis().gens.size() == 3);

  LieAlgebra g2(RootSystem::build({Family::G2, 2}));
  CompactBasis cb = g2.compact_basis();
  CHECK(cb.gens.size() == 14);
  for (const LieElement& gen : cb.gens) CHECK(g2.tau(gen) == gen);

  // linear independence
  linalg::RowSpace span(static_cast<std::size_t>(g2.dim()));
  for (const LieElement& gen : cb.gens) CHECK(span.insert(g2.dense(gen)));
  CHECK(span.dim() == 14);

  LieAlgebra e8(RootSystem::build({Family::E8, 8}));
  CHECK(e8.compact_basis().gens.size() == 248);
}

TEST_CASE("elements stay in canonical sparse form") {
  LieAlgebra alg(RootSystem::build({Family::A, 2}));
  LieElement x = alg.z(alg.roots().highest_root());
  CHECK((x - x).coeffs().empty());
  LieElement y = alg.zero();
  y.add_coeff(0, GaussianRational(Rational(2)));
  y.add_coeff(0, GaussianRational(Rational(-2)));
  CHECK(y.coeffs().empty());
  CHECK(y == alg.zero());
}

TEST_CASE("engine identities, exhaustive on small ranks") {
  for (auto t : {RootSystemType{Family::A, 2}, {Family::B, 2}, {Family::C, 3},
                 {Family::D, 3}, {Family::G2, 2}}) {
    LieAlgebra alg(RootSystem::build(t));
    EngineCheck ec = check_engine_properties(alg, 0, 0);
    CHECK_MESSAGE(ec.antisymmetry, t.name());
    CHECK_MESSAGE(ec.jacobi, t.name());
    CHECK_MESSAGE(ec.tau_closure, t.name());
    CHECK_MESSAGE(ec.ad_invariance, t.name());
    CHECK_MESSAGE(ec.quaternionic, t.name());
    if (t.rank >= 2) CHECK(ec.spin_eigenvalue == Rational(1));
  }
}
