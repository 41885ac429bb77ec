#pragma once

#include <map>
#include <string>
#include <vector>

#include "wolfspace/chevalley.hpp"
#include "wolfspace/linalg.hpp"

namespace wolfspace {

// Exact span of Lie-algebra elements; membership, coordinates and orthogonal
// projection under the invariant form are all rational, no tolerances.
class LieSubspace {
 public:
  LieSubspace() = default;
  static LieSubspace span(const LieAlgebra& alg, std::vector<LieElement> gens);

  int dim() const { return static_cast<int>(rows_.dim()); }
  bool contains(const LieElement& x) const;
  std::vector<LieElement> basis() const;

  // orthogonal projection with respect to the invariant form; requires the
  // form to be nondegenerate on this subspace (true on compact subspaces)
  LieElement project(const LieElement& x) const;

  bool same_space(const LieSubspace& o) const { return rows_.same_space(o.rows_); }

 private:
  const LieAlgebra* alg_ = nullptr;
  linalg::RowSpace rows_{0};
};

// The highest-root grading and the pieces it cuts out of the compact form.
struct WolfDecomposition {
  const LieAlgebra* alg = nullptr;
  Root beta;
  std::map<int, std::vector<Root>> levels;  // n -> Sigma_{beta,n}, n = -2..2
  LieSubspace k, m, s, h, a_beta;

  // orthogonal projection g -> m; exact coordinate restriction because m is
  // spanned by whole root planes
  LieElement pi_m(const LieElement& x) const;
  int level_of(const Root& r) const;
};

WolfDecomposition beta_grading(const LieAlgebra& alg);

// Long roots at level one, in positive_order. Empty exactly for C types.
std::vector<Root> valid_deltas(const WolfDecomposition& wd);

// The deterministic choice: maximal valid delta in positive_order.
// Throws NoDeltaError when there is none (the Sp(n) family).
Root choose_delta(const WolfDecomposition& wd);

struct SubmanifoldModel {
  Root delta;
  std::vector<Root> delta_plus, delta_minus;
  LieSubspace h_p;
  LieSubspace h1, h2, h3, h4;
  LieSubspace m_N, m_N_perp;
};

// delta may be any level-one root; choose_delta feeds the canonical long one,
// tests feed short mutants as negative controls.
SubmanifoldModel build_submanifold_model(const WolfDecomposition& wd, const Root& delta);

struct CheckResult {
  bool ok = true;
  std::vector<std::string> witnesses;

  void fail(std::string why) {
    ok = false;
    witnesses.push_back(std::move(why));
  }
};

CheckResult verify_lemma_rotation(const SubmanifoldModel& model, const WolfDecomposition& wd);
CheckResult verify_lemma_root(const SubmanifoldModel& model, const WolfDecomposition& wd);
CheckResult verify_lemma_totally_complex(const SubmanifoldModel& model,
                                         const WolfDecomposition& wd);
CheckResult verify_projection_claims(const SubmanifoldModel& model,
                                     const WolfDecomposition& wd);

struct SpaceSpec;  // catalog.hpp

struct VerificationReport {
  std::string space;
  std::string group;
  int dim_M = 0, dim_N = 0, dim_Hp = 0, dim_Kp = 0;
  int expected_dim_M = 0, expected_dim_Hp = 0;
  Root beta, delta;
  // fixed key order; every false verdict carries a witness below
  std::vector<std::pair<std::string, bool>> verdicts;
  std::vector<std::string> witnesses;

  bool all_ok() const {
    for (const auto& [k, v] : verdicts)
      if (!v) return false;
    return true;
  }
};

// Runs the whole pipeline for one catalog space. Throws NoDeltaError for C
// types and ConfigurationError for out-of-bound ranks.
VerificationReport full_report(const SpaceSpec& space);

// Engine property sweeps shared by tests, the CLI and the acceptance suite.
struct EngineCheck {
  bool antisymmetry = true;
  bool jacobi = true;
  bool tau_closure = true;
  bool ad_invariance = true;
  bool quaternionic = true;
  Rational spin_eigenvalue;  // the shared c in ad(Z_beta)^2 = ad(W_beta)^2 = -c id
  long triples = 0;
};

// Exhaustive over all basis triples when sample_triples == 0, otherwise a
// seeded random sample of that many triples.
EngineCheck check_engine_properties(const LieAlgebra& alg, long sample_triples,
                                    unsigned seed);

}  // namespace wolfspace
