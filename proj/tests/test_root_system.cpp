#include <doctest.h>

#include <set>

#include "wolfspace/errors.hpp"
#include "wolfspace/json_io.hpp"
#include "wolfspace/root_system.hpp"

using namespace wolfspace;

namespace {

Root root_of(std::initializer_list<int> cs) {
  Root r;
  r.coeffs = cs;
  return r;
}

const std::vector<RootSystemType>& small_types() {
  static const std::vector<RootSystemType> types = {
      {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::B, 2},
      {Family::B, 3}, {Family::B, 4}, {Family::C, 3}, {Family::C, 4}, {Family::D, 3},
      {Family::D, 4}, {Family::G2, 2}, {Family::F4, 4},
  };
  return types;
}

}  // namespace

TEST_CASE("type validation") {
  CHECK_THROWS_AS(RootSystemType(Family::G2, 3), ConfigurationError);
  CHECK_THROWS_AS(RootSystemType(Family::E6, 7), ConfigurationError);
  CHECK_THROWS_AS(RootSystemType(Family::D, 2), ConfigurationError);
  CHECK_THROWS_AS(RootSystemType(Family::A, 0), ConfigurationError);
  CHECK(RootSystemType(Family::B, 2).name() == "B2");
  CHECK(RootSystemType(Family::G2, 2).name() == "G2");
}

TEST_CASE("root counts match the classical formulas") {
  for (const auto& t : small_types()) {
    RootSystem rs = RootSystem::build(t);
    CHECK_MESSAGE(rs.roots().size() == classical_root_count(t), t.name());
  }
  CHECK(RootSystem::build({Family::E6, 6}).roots().size() == 72);
  CHECK(RootSystem::build({Family::E7, 7}).roots().size() == 126);
  // dim E8 - rank: 248 - 8
  CHECK(RootSystem::build({Family::E8, 8}).roots().size() == 240);
  CHECK(RootSystem::build({Family::A, 1}).roots().size() == 2);
}

TEST_CASE("negation and reflection closure") {
  for (const auto& t : small_types()) {
    RootSystem rs = RootSystem::build(t);
    for (const Root& a : rs.roots()) {
      CHECK(rs.contains(-a));
      for (const Root& g : rs.roots()) {
        Root refl = g;
        int k = rs.pairing(g, a);
        for (int i = 0; i < rs.rank(); ++i) refl.coeffs[i] -= k * a.coeffs[i];
        CHECK(rs.contains(refl));
      }
    }
  }
}

TEST_CASE("roots are entirely nonnegative or entirely nonpositive") {
  RootSystem rs = RootSystem::build({Family::F4, 4});
  int pos = 0;
  for (const Root& r : rs.roots()) {
    bool all_nonneg = true, all_nonpos = true;
    for (int c : r.coeffs) {
      if (c < 0) all_nonneg = false;
      if (c > 0) all_nonpos = false;
    }
    CHECK((all_nonneg || all_nonpos));
    if (all_nonneg) ++pos;
  }
  CHECK(pos == 24);
}

TEST_CASE("highest root") {
  CHECK(RootSystem::build({Family::A, 3}).highest_root() == root_of({1, 1, 1}));
  CHECK(RootSystem::build({Family::A, 1}).highest_root() == root_of({1}));
  RootSystem g2 = RootSystem::build({Family::G2, 2});
  Root beta = g2.highest_root();
  CHECK(beta == root_of({3, 2}));
  CHECK(g2.inner(beta, beta) == Rational(2));
}

TEST_CASE("invariant inner product") {
  for (const auto& t : small_types()) {
    RootSystem rs = RootSystem::build(t);
    Root beta = rs.highest_root();
    CHECK(rs.inner(beta, beta) == Rational(2));  // long-root normalization
    // positive definiteness on the lattice basis directions
    for (int i = 0; i < rs.rank(); ++i) CHECK(rs.gram()[i][i] > Rational(0));
  }
  RootSystem a2 = RootSystem::build({Family::A, 2});
  CHECK(a2.inner(root_of({1, 0}), root_of({0, 1})) == Rational(-1));
  RootSystem g2 = RootSystem::build({Family::G2, 2});
  CHECK(g2.inner(root_of({1, 0}), root_of({1, 0})) == Rational(2, 3));
  CHECK_THROWS_AS(g2.inner(root_of({1, 0, 0}), root_of({1, 0})), std::invalid_argument);
}

TEST_CASE("gram matrices are positive definite") {
  for (const auto& t : small_types()) {
    auto g = RootSystem::build(t).gram();
    const int n = static_cast<int>(g.size());
    // leading principal minors via exact elimination
    for (int k = 1; k <= n; ++k) {
      std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m[i][j] = g[i][j];
      Rational det(1);
      for (int col = 0; col < k; ++col) {
        int piv = col;
        while (piv < k && m[piv][col].is_zero()) ++piv;
        REQUIRE(piv < k);
        if (piv != col) {
          std::swap(m[piv], m[col]);
          det = -det;
        }
        det = det * m[col][col];
        for (int r = col + 1; r < k; ++r) {
          Rational f = m[r][col] / m[col][col];
          for (int c = col; c < k; ++c) m[r][c] = m[r][c] - f * m[col][c];
        }
      }
      CHECK_MESSAGE(det > Rational(0), t.name());
    }
  }
}

TEST_CASE("integrality of the Cartan pairing") {
  for (const auto& t : small_types()) {
    RootSystem rs = RootSystem::build(t);
    for (const Root& a : rs.roots())
      for (const Root& b : rs.roots()) (void)rs.pairing(a, b);  // throws if non-integral
  }
}

TEST_CASE("level sets") {
  RootSystem g2 = RootSystem::build({Family::G2, 2});
  Root beta = g2.highest_root();
  auto top = g2.level_set(beta, 2);
  REQUIRE(top.size() == 1);
  CHECK(top[0] == beta);
  CHECK(g2.level_set(beta, 1).size() == 4);  // dim M / 2 for the G2 space

  RootSystem e8 = RootSystem::build({Family::E8, 8});
  CHECK(e8.level_set(e8.highest_root(), 1).size() == 56);  // dim M / 2 for EIX

  // definitional membership at level zero
  for (const Root& a : g2.level_set(beta, 0)) CHECK(g2.inner(beta, a).is_zero());

  // partition for long gamma
  for (const auto& t : small_types()) {
    RootSystem rs = RootSystem::build(t);
    for (const Root& g : rs.roots()) {
      if (rs.inner(g, g) != Rational(2)) continue;
      std::size_t total = 0;
      for (int n = -2; n <= 2; ++n) total += rs.level_set(g, n).size();
      CHECK(total == rs.roots().size());
    }
  }
  CHECK_THROWS_AS(g2.level_set(root_of({1, 2}), 0), std::invalid_argument);
}

TEST_CASE("root strings") {
  RootSystem a2 = RootSystem::build({Family::A, 2});
  CHECK(a2.root_string(root_of({1, 0}), root_of({0, 1})) == std::pair<int, int>{0, 1});

  RootSystem a3 = RootSystem::build({Family::A, 3});
  // orthogonal roots with no string through them
  CHECK(a3.root_string(root_of({1, 0, 0}), root_of({0, 0, 1})) == std::pair<int, int>{0, 0});

  RootSystem g2 = RootSystem::build({Family::G2, 2});
  // the short simple root runs a string of length four through a2
  CHECK(g2.root_string(root_of({1, 0}), root_of({0, 1})) == std::pair<int, int>{0, 3});

  CHECK_THROWS_AS(g2.root_string(root_of({1, 0}), root_of({1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(g2.root_string(root_of({1, 0}), root_of({-1, 0})), std::invalid_argument);

  // p - q = pairing, exhaustively on the small systems
  for (const auto& t : small_types()) {
    RootSystem rs = RootSystem::build(t);
    for (const Root& a : rs.roots())
      for (const Root& g : rs.roots()) {
        if (g == a || g == -a) continue;
        auto [p, q] = rs.root_string(a, g);
        CHECK(p - q == rs.pairing(g, a));
      }
  }
}

TEST_CASE("deterministic storage order") {
  RootSystem rs = RootSystem::build({Family::A, 2});
  // positives by (height, simple index), then the mirrored negatives
  CHECK(rs.roots()[0] == root_of({1, 0}));
  CHECK(rs.roots()[1] == root_of({0, 1}));
  CHECK(rs.roots()[2] == root_of({1, 1}));
  CHECK(rs.roots()[3] == -rs.roots()[0]);
  CHECK(rs.negate_index(1) == 4);
  CHECK(rs.index_of(root_of({1, 1})) == 2);
  CHECK(rs.index_of(root_of({2, 1})) == -1);
}

TEST_CASE("json document shape") {
  RootSystem g2 = RootSystem::build({Family::G2, 2});
  Json j = root_system_json(g2);
  CHECK(j["type"] == "G2");
  CHECK(j["rank"] == 2);
  CHECK(j["cartan_matrix"] == Json({{2, -1}, {-3, 2}}));
  CHECK(j["roots"].size() == 12);
  CHECK(j["roots"][11] == Json({-3, -2}));
  // golden bytes: serialization is part of the interface
  CHECK(j.dump() ==
        "{\"type\":\"G2\",\"rank\":2,\"cartan_matrix\":[[2,-1],[-3,2]],"
        "\"roots\":[[1,0],[0,1],[1,1],[2,1],[3,1],[3,2],[-1,0],[0,-1],[-1,-1],"
        "[-2,-1],[-3,-1],[-3,-2]]}");
}
