#include "wolfspace/wolf.hpp"

#include <algorithm>
#include <random>

#include "wolfspace/catalog.hpp"
#include "wolfspace/errors.hpp"

namespace wolfspace {

namespace {

// levels add under the bracket, so membership of a bracket in k or m is a
// support check over the grading
bool supported_on_levels(const WolfDecomposition& wd, const LieElement& x,
                         bool allow_cartan, std::initializer_list<int> levels) {
  const LieAlgebra& alg = *wd.alg;
  for (const auto& [flat, c] : x.coeffs()) {
    (void)c;
    BasisIndex b = alg.decode(flat);
    if (b.kind == BasisIndex::Kind::Cartan) {
      if (!allow_cartan) return false;
      continue;
    }
    int lv = wd.level_of(alg.roots().roots()[b.index]);
    if (std::find(levels.begin(), levels.end(), lv) == levels.end()) return false;
  }
  return true;
}

bool in_k(const WolfDecomposition& wd, const LieElement& x) {
  return supported_on_levels(wd, x, true, {0, 2, -2});
}

bool in_m(const WolfDecomposition& wd, const LieElement& x) {
  return supported_on_levels(wd, x, false, {1, -1});
}

}  // namespace

LieSubspace LieSubspace::span(const LieAlgebra& alg, std::vector<LieElement> gens) {
  LieSubspace s;
  s.alg_ = &alg;
  s.rows_ = linalg::RowSpace(static_cast<std::size_t>(alg.dim()));
  for (const LieElement& g : gens) s.rows_.insert(alg.dense(g));
  return s;
}

bool LieSubspace::contains(const LieElement& x) const {
  if (!alg_) return x.is_zero();
  return rows_.contains(alg_->dense(x));
}

std::vector<LieElement> LieSubspace::basis() const {
  std::vector<LieElement> out;
  if (!alg_) return out;
  for (const auto& row : rows_.rows()) out.push_back(alg_->from_dense(row));
  return out;
}

LieElement LieSubspace::project(const LieElement& x) const {
  if (!alg_) throw InternalError("project on empty subspace");
  std::vector<LieElement> b = basis();
  const std::size_t n = b.size();
  std::vector<linalg::Vec> gram(n, linalg::Vec(n));
  linalg::Vec rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    rhs[i] = alg_->invariant_form(x, b[i]);
    for (std::size_t j = 0; j < n; ++j) gram[i][j] = alg_->invariant_form(b[i], b[j]);
  }
  auto coef = linalg::solve_square(std::move(gram), std::move(rhs));
  if (!coef) throw InternalError("invariant form degenerate on subspace");
  LieElement p = alg_->zero();
  for (std::size_t i = 0; i < n; ++i) p = p + (*coef)[i] * b[i];
  return p;
}

int WolfDecomposition::level_of(const Root& r) const { return alg->roots().pairing(r, beta); }

LieElement WolfDecomposition::pi_m(const LieElement& x) const {
  LieElement out = alg->zero();
  for (const auto& [flat, c] : x.coeffs()) {
    BasisIndex b = alg->decode(flat);
    if (b.kind != BasisIndex::Kind::RootVector) continue;
    int lv = level_of(alg->roots().roots()[b.index]);
    if (lv == 1 || lv == -1) out.add_coeff(flat, c);
  }
  return out;
}

WolfDecomposition beta_grading(const LieAlgebra& alg) {
  const RootSystem& rs = alg.roots();
  WolfDecomposition wd;
  wd.alg = &alg;
  wd.beta = rs.highest_root();
  for (int n = -2; n <= 2; ++n) wd.levels[n];
  for (const Root& r : rs.roots()) {
    int n = rs.pairing(r, wd.beta);
    if (n < -2 || n > 2) throw InternalError("root level outside [-2, 2]");
    wd.levels[n].push_back(r);
  }
  if (wd.levels[2] != std::vector<Root>{wd.beta} ||
      wd.levels[-2] != std::vector<Root>{-wd.beta})
    throw InternalError("top grading levels are not {+-beta}");

  std::vector<LieElement> k_gens, m_gens, h_gens;
  for (int j = 0; j < rs.rank(); ++j) k_gens.push_back(alg.cartan(j));
  // a_beta: orthogonal complement of iA_beta inside the Cartan part
  {
    LieElement iab = alg.ia(wd.beta);
    std::vector<linalg::Vec> row(1, linalg::Vec(static_cast<std::size_t>(rs.rank())));
    for (int j = 0; j < rs.rank(); ++j) {
      Root aj;
      aj.coeffs.assign(rs.rank(), 0);
      aj.coeffs[j] = 1;
      row[0][j] = alg.invariant_form(alg.ia(aj), iab);
    }
    std::vector<LieElement> ab_gens;
    for (const auto& sol : linalg::kernel_basis(row, static_cast<std::size_t>(rs.rank()))) {
      LieElement t = alg.zero();
      for (int j = 0; j < rs.rank(); ++j)
        t = t + sol[j] * (GaussianRational::i() * alg.cartan(j));
      ab_gens.push_back(t);
      h_gens.push_back(t);
    }
    wd.a_beta = LieSubspace::span(alg, ab_gens);
  }
  k_gens.push_back(alg.z(wd.beta));
  k_gens.push_back(alg.w(wd.beta));
  for (const Root& g : rs.positive_roots()) {
    int lv = rs.pairing(g, wd.beta);
    if (lv == 0) {
      k_gens.push_back(alg.z(g));
      k_gens.push_back(alg.w(g));
      h_gens.push_back(alg.z(g));
      h_gens.push_back(alg.w(g));
    } else if (lv == 1) {
      m_gens.push_back(alg.z(g));
      m_gens.push_back(alg.w(g));
    }
  }
  wd.k = LieSubspace::span(alg, k_gens);
  wd.m = LieSubspace::span(alg, m_gens);
  wd.s = LieSubspace::span(alg, {alg.ia(wd.beta), alg.z(wd.beta), alg.w(wd.beta)});
  wd.h = LieSubspace::span(alg, h_gens);

  if (wd.k.dim() + wd.m.dim() != alg.dim())
    throw InternalError("k + m does not fill the algebra");
  if (wd.m.dim() != 2 * static_cast<int>(wd.levels[1].size()))
    throw InternalError("dim m != 2 |Sigma_1|");

  // symmetric-pair and ideal inclusions, checked over basis pairs through the
  // grading support
  for (const LieElement& x : wd.k.basis()) {
    for (const LieElement& y : wd.k.basis())
      if (!in_k(wd, alg.bracket(x, y))) throw InternalError("[k, k] escapes k");
    for (const LieElement& y : wd.m.basis())
      if (!in_m(wd, alg.bracket(x, y))) throw InternalError("[k, m] escapes m");
    for (const LieElement& y : wd.s.basis())
      if (!wd.s.contains(alg.bracket(x, y))) throw InternalError("[k, s] escapes s");
  }
  for (const LieElement& x : wd.m.basis())
    for (const LieElement& y : wd.m.basis())
      if (!in_k(wd, alg.bracket(x, y))) throw InternalError("[m, m] escapes k");
  return wd;
}

std::vector<Root> valid_deltas(const WolfDecomposition& wd) {
  const RootSystem& rs = wd.alg->roots();
  Rational beta_len = rs.inner(wd.beta, wd.beta);
  std::vector<Root> out;
  for (const Root& g : wd.levels.at(1))
    if (rs.inner(g, g) == beta_len) out.push_back(g);
  std::sort(out.begin(), out.end(), positive_order_less);
  return out;
}

Root choose_delta(const WolfDecomposition& wd) {
  std::vector<Root> cands = valid_deltas(wd);
  if (cands.empty())
    throw NoDeltaError(
        "no long root at level one of the highest-root grading: every level-one "
        "root of " +
        wd.alg->roots().type().name() +
        " is short, so the submanifold model does not exist (the Sp(n) family)");
  return cands.back();
}

SubmanifoldModel build_submanifold_model(const WolfDecomposition& wd, const Root& delta) {
  const LieAlgebra& alg = *wd.alg;
  const RootSystem& rs = alg.roots();
  if (rs.pairing(delta, wd.beta) != 1)
    throw std::invalid_argument("delta must lie at level one");

  SubmanifoldModel model;
  model.delta = delta;
  const Root beta_minus_delta = wd.beta - delta;
  if (!rs.contains(beta_minus_delta)) throw InternalError("beta - delta is not a root");

  std::vector<Root> h2_roots, h3_roots, h4_roots, hp_roots;
  for (const Root& g : rs.positive_roots()) {
    if (rs.pairing(g, wd.beta) != 0) continue;
    int dl = rs.pairing(g, delta);
    if (dl == 0) h2_roots.push_back(g);
    if (dl == 1) h3_roots.push_back(g);
    if (dl == -1) h4_roots.push_back(g);
    if (rs.pairing(g, beta_minus_delta) == 0) hp_roots.push_back(g);
  }

  auto planes = [&](const std::vector<Root>& roots, std::vector<LieElement> seed) {
    for (const Root& g : roots) {
      seed.push_back(alg.z(g));
      seed.push_back(alg.w(g));
    }
    return LieSubspace::span(alg, seed);
  };

  std::vector<LieElement> ab = wd.a_beta.basis();
  model.h1 = wd.a_beta;
  model.h2 = planes(h2_roots, {});
  model.h3 = planes(h3_roots, {});
  model.h4 = planes(h4_roots, {});
  model.h_p = planes(hp_roots, ab);

  // the two descriptions of h_p coincide: (g, beta) = 0 makes
  // (g, beta - delta) = 0 equivalent to (g, delta) = 0
  if (!model.h_p.same_space(planes(h2_roots, ab)))
    throw InternalError("h_p differs from h1 + h2");

  // for a long delta the four pieces exhaust h (short mutants may not
  // partition, their delta-pairings reach beyond +-1)
  if (rs.inner(delta, delta) == rs.inner(wd.beta, wd.beta)) {
    std::vector<Root> all;
    all.insert(all.end(), h2_roots.begin(), h2_roots.end());
    all.insert(all.end(), h3_roots.begin(), h3_roots.end());
    all.insert(all.end(), h4_roots.begin(), h4_roots.end());
    if (!planes(all, ab).same_space(wd.h))
      throw InternalError("h1 + h2 + h3 + h4 does not fill h");
  }

  for (const Root& g : h3_roots) {
    Root d = delta - g;
    if (!rs.contains(d)) throw InternalError("delta - gamma is not a root");
    model.delta_plus.push_back(d);
  }
  for (const Root& g : h4_roots) {
    Root d = delta + g;
    if (!rs.contains(d)) throw InternalError("delta + gamma is not a root");
    model.delta_minus.push_back(d);
  }

  std::vector<Root> mn_roots = {delta};
  mn_roots.insert(mn_roots.end(), model.delta_plus.begin(), model.delta_plus.end());
  mn_roots.insert(mn_roots.end(), model.delta_minus.begin(), model.delta_minus.end());
  model.m_N = planes(mn_roots, {});

  // orthogonal complement of m_N inside m under the invariant form
  {
    std::vector<LieElement> m_basis = wd.m.basis();
    std::vector<LieElement> mn_basis = model.m_N.basis();
    std::vector<linalg::Vec> rows;
    for (const LieElement& b : mn_basis) {
      linalg::Vec row(m_basis.size());
      for (std::size_t i = 0; i < m_basis.size(); ++i)
        row[i] = alg.invariant_form(m_basis[i], b);
      rows.push_back(std::move(row));
    }
    std::vector<LieElement> perp;
    for (const auto& sol : linalg::kernel_basis(rows, m_basis.size())) {
      LieElement v = alg.zero();
      for (std::size_t i = 0; i < m_basis.size(); ++i) v = v + sol[i] * m_basis[i];
      perp.push_back(v);
    }
    model.m_N_perp = LieSubspace::span(alg, perp);
  }
  if (model.m_N.dim() + model.m_N_perp.dim() != wd.m.dim())
    throw InternalError("m_N + m_N_perp does not fill m");
  return model;
}

CheckResult verify_lemma_rotation(const SubmanifoldModel& model, const WolfDecomposition& wd) {
  const LieAlgebra& alg = *wd.alg;
  CheckResult res;
  LieSubspace delta_plane =
      LieSubspace::span(alg, {alg.z(model.delta), alg.w(model.delta)});
  int ti = 0;
  for (const LieElement& t : model.h_p.basis()) {
    ++ti;
    for (const LieElement& v : {alg.z(model.delta), alg.w(model.delta)}) {
      LieElement b = alg.bracket(t, v);
      if (!delta_plane.contains(b))
        res.fail("rotation: [h_p basis #" + std::to_string(ti) + ", " + alg.str(v) +
                 "] = " + alg.str(b) + " leaves span{Z(delta), W(delta)}");
    }
  }
  // stronger claim: the root part of h_p commutes with the delta plane
  const RootSystem& rs = alg.roots();
  const Root bmd = wd.beta - model.delta;
  for (const Root& g : rs.positive_roots()) {
    if (rs.pairing(g, wd.beta) != 0 || rs.pairing(g, bmd) != 0) continue;
    for (const LieElement& x : {alg.z(g), alg.w(g)})
      for (const LieElement& v : {alg.z(model.delta), alg.w(model.delta)}) {
        LieElement b = alg.bracket(x, v);
        if (!b.is_zero())
          res.fail("rotation: [" + alg.str(x) + ", delta-plane] = " + alg.str(b) +
                   " is nonzero for gamma = " + g.str());
      }
  }
  return res;
}

CheckResult verify_lemma_root(const SubmanifoldModel& model, const WolfDecomposition& wd) {
  const LieAlgebra& alg = *wd.alg;
  const RootSystem& rs = alg.roots();
  CheckResult res;
  auto key = [](const Root& r) { return r.coeffs; };
  auto sorted = [&](std::vector<Root> v) {
    std::vector<std::vector<int>> k;
    for (const Root& r : v) k.push_back(key(r));
    std::sort(k.begin(), k.end());
    return k;
  };
  auto intersect = [&](int beta_level, int delta_level) {
    std::vector<Root> out;
    for (const Root& r : rs.roots())
      if (rs.pairing(r, wd.beta) == beta_level && rs.pairing(r, model.delta) == delta_level)
        out.push_back(r);
    return out;
  };

  std::vector<Root> s11 = intersect(1, 1);

  // disjoint union Delta_+ |_| Delta_- = Sigma_{beta,1} cap Sigma_{delta,1}
  std::vector<Root> join = model.delta_plus;
  join.insert(join.end(), model.delta_minus.begin(), model.delta_minus.end());
  auto jk = sorted(join);
  if (std::unique(jk.begin(), jk.end()) != jk.end())
    res.fail("root lemma: Delta_+ and Delta_- intersect");
  if (jk != sorted(s11))
    res.fail("root lemma: Delta_+ u Delta_- differs from Sigma_{beta,1} cap Sigma_{delta,1}");

  std::vector<Root> beta_minus_s11;
  for (const Root& g : s11) beta_minus_s11.push_back(wd.beta - g);
  if (sorted(intersect(1, 0)) != sorted(beta_minus_s11))
    res.fail("root lemma: Sigma_{beta,1} cap Sigma_{delta,0} != beta - (Sigma_{beta,1} cap Sigma_{delta,1})");

  if (sorted(intersect(1, 2)) != sorted({model.delta}))
    res.fail("root lemma: Sigma_{beta,1} cap Sigma_{delta,2} != {delta}");
  if (sorted(intersect(1, -1)) != sorted({wd.beta - model.delta}))
    res.fail("root lemma: Sigma_{beta,1} cap Sigma_{delta,-1} != {beta - delta}");

  // consequence used downstream: both presentations of m_N agree
  std::vector<LieElement> alt = {alg.z(model.delta), alg.w(model.delta)};
  for (const Root& g : s11)
    if (g.is_positive()) {
      alt.push_back(alg.z(g));
      alt.push_back(alg.w(g));
    }
  if (!model.m_N.same_space(LieSubspace::span(alg, alt)))
    res.fail("root lemma: the two presentations of m_N differ");
  return res;
}

CheckResult verify_lemma_totally_complex(const SubmanifoldModel& model,
                                         const WolfDecomposition& wd) {
  const LieAlgebra& alg = *wd.alg;
  CheckResult res;
  LieElement iab = alg.ia(wd.beta);
  LieElement zb = alg.z(wd.beta);
  LieElement wb = alg.w(wd.beta);
  std::vector<LieElement> basis = model.m_N.basis();
  for (const LieElement& v : basis) {
    LieElement iv = alg.bracket(iab, v);
    if (!model.m_N.contains(iv))
      res.fail("totally complex: [iA(beta), " + alg.str(v) + "] leaves m_N");
    LieElement zv = alg.bracket(zb, v);
    LieElement wv = alg.bracket(wb, v);
    for (const LieElement& w : basis) {
      if (!alg.invariant_form(zv, w).is_zero())
        res.fail("totally complex: <[Z(beta), v], w> != 0 with v = " + alg.str(v) +
                 ", w = " + alg.str(w));
      if (!alg.invariant_form(wv, w).is_zero())
        res.fail("totally complex: <[W(beta), v], w> != 0 with v = " + alg.str(v) +
                 ", w = " + alg.str(w));
    }
  }
  return res;
}

CheckResult verify_projection_claims(const SubmanifoldModel& model,
                                     const WolfDecomposition& wd) {
  const LieAlgebra& alg = *wd.alg;
  const RootSystem& rs = alg.roots();
  CheckResult res;
  LieElement zd = alg.z(model.delta);
  LieElement wdl = alg.w(model.delta);
  LieSubspace z_line = LieSubspace::span(alg, {zd});
  LieSubspace w_line = LieSubspace::span(alg, {wdl});

  // [a_beta, Z_delta] fills R W_delta and stays inside it; likewise for W
  linalg::RowSpace h1_image(static_cast<std::size_t>(alg.dim()));
  for (const LieElement& t : model.h1.basis()) {
    LieElement bz = alg.bracket(t, zd);
    LieElement bw = alg.bracket(t, wdl);
    if (!w_line.contains(bz))
      res.fail("projection: [a_beta, Z(delta)] has a component outside R W(delta)");
    if (!z_line.contains(bw))
      res.fail("projection: [a_beta, W(delta)] has a component outside R Z(delta)");
    h1_image.insert(alg.dense(bz));
  }
  if (h1_image.dim() != 1)
    res.fail("projection: [h1, Z(delta)] does not span R W(delta)");

  for (const LieElement& t : model.h2.basis()) {
    if (!alg.bracket(t, zd).is_zero() || !alg.bracket(t, wdl).is_zero())
      res.fail("projection: h2 does not commute with the delta plane");
  }

  // [Z_delta, Z_gamma] = +-Z_{delta-gamma}, [Z_delta, W_gamma] = +-W_{delta-gamma}
  // over Sigma_{delta,1}; h3 images land in the m_N planes
  for (const Root& g : rs.positive_roots()) {
    int dl = rs.pairing(g, model.delta);
    if ((dl != 1 && dl != -1) || g == model.delta) continue;
    // the partner plane: delta - gamma at level +1, delta + gamma at level -1
    Root diff = (dl == 1) ? model.delta - g : model.delta + g;
    if (!rs.contains(diff)) {
      res.fail("projection: no partner root for gamma = " + g.str());
      continue;
    }
    Root dpos = diff.is_positive() ? diff : -diff;
    LieElement ze = alg.z(dpos), we = alg.w(dpos);
    LieElement bzz = alg.bracket(zd, alg.z(g));
    LieElement bzw = alg.bracket(zd, alg.w(g));
    if (!(bzz == ze || bzz == -ze))
      res.fail("projection: [Z(delta), Z(" + g.str() + ")] = " + alg.str(bzz) +
               " is not +-Z(" + dpos.str() + ")");
    if (!(bzw == we || bzw == -we))
      res.fail("projection: [Z(delta), W(" + g.str() + ")] = " + alg.str(bzw) +
               " is not +-W(" + dpos.str() + ")");
  }
  for (const LieElement& t : model.h3.basis()) {
    LieElement img = wd.pi_m(alg.bracket(zd, t));
    bool inside = true;
    for (const auto& [flat, c] : img.coeffs()) {
      (void)c;
      BasisIndex b = alg.decode(flat);
      Root r = rs.roots()[b.index];
      Root rp = r.is_positive() ? r : -r;
      if (std::find(model.delta_plus.begin(), model.delta_plus.end(), rp) ==
          model.delta_plus.end())
        inside = false;
    }
    if (!inside)
      res.fail("projection: [Z(delta), h3] leaves the Delta_+ planes");
  }

  // ad(Z_delta)^2 = -c id on the Sigma_{delta,1} planes with one shared c > 0
  bool have_c = false;
  Rational c;
  for (const Root& g : rs.positive_roots()) {
    int dl = rs.pairing(g, model.delta);
    if ((dl != 1 && dl != -1) || g == model.delta) continue;
    for (const LieElement& v : {alg.z(g), alg.w(g)}) {
      LieElement vv = alg.bracket(zd, alg.bracket(zd, v));
      // vv must equal -c v for the single constant c
      GaussianRational num;
      bool proportional = true;
      for (const auto& [flat, cv] : v.coeffs()) {
        GaussianRational top = vv.coeff(flat);
        GaussianRational ratio = top / cv;
        if (num.is_zero() && !ratio.is_zero()) num = ratio;
        if (ratio != num) proportional = false;
      }
      LieElement recon = num * v;
      if (!proportional || !(recon == vv) || !num.is_real()) {
        res.fail("projection: ad(Z(delta))^2 not scalar on " + alg.str(v));
        continue;
      }
      Rational this_c = -num.re;
      if (!have_c) {
        c = this_c;
        have_c = true;
      }
      if (this_c != c || !(Rational(0) < this_c))
        res.fail("projection: ad(Z(delta))^2 eigenvalue not a shared positive constant");
    }
  }
  return res;
}

VerificationReport full_report(const SpaceSpec& space) {
  LieAlgebra alg(RootSystem::build(space.type));
  WolfDecomposition wd = beta_grading(alg);
  Root delta = choose_delta(wd);
  SubmanifoldModel model = build_submanifold_model(wd, delta);

  VerificationReport rep;
  rep.space = space.display_name;
  rep.group = space.type.name();
  rep.beta = wd.beta;
  rep.delta = delta;
  rep.dim_M = wd.m.dim();
  rep.dim_N = model.m_N.dim();
  rep.dim_Hp = wd.h.dim() - model.h_p.dim();
  rep.dim_Kp = rep.dim_Hp + 2;
  rep.expected_dim_M = space.expected_dim_M;
  rep.expected_dim_Hp = space.expected_dim_Hp;

  auto record = [&](const std::string& name, CheckResult r) {
    rep.verdicts.emplace_back(name, r.ok);
    for (auto& w : r.witnesses) rep.witnesses.push_back(std::move(w));
  };
  record("rotation", verify_lemma_rotation(model, wd));
  record("root", verify_lemma_root(model, wd));
  record("totally_complex", verify_lemma_totally_complex(model, wd));
  record("projection", verify_projection_claims(model, wd));

  auto record_flag = [&](const std::string& name, bool ok, const std::string& why) {
    rep.verdicts.emplace_back(name, ok);
    if (!ok) rep.witnesses.push_back(why);
  };
  record_flag("dim_identity_2N", 2 * rep.dim_N == rep.dim_M,
              "2 dim N != dim M: " + std::to_string(rep.dim_N) + " vs " +
                  std::to_string(rep.dim_M));
  record_flag("dim_identity_fiber", rep.dim_N == rep.dim_Hp + 2,
              "dim N != dim H(p) + 2");
  record_flag("table_dim_M", rep.dim_M == rep.expected_dim_M,
              "dim M differs from the classical value");
  record_flag("table_dim_Hp", rep.dim_Hp == rep.expected_dim_Hp,
              "dim H(p) differs from the classical value");
  return rep;
}

EngineCheck check_engine_properties(const LieAlgebra& alg, long sample_triples,
                                    unsigned seed) {
  EngineCheck ec;
  const int dim = alg.dim();
  const RootSystem& rs = alg.roots();
  auto elem = [&](int flat) {
    if (flat < rs.rank()) return alg.cartan(flat);
    return alg.root_vector(rs.roots()[flat - rs.rank()]);
  };

  auto check_triple = [&](int i, int j, int k) {
    ++ec.triples;
    LieElement x = elem(i), y = elem(j), z = elem(k);
    LieElement jac = alg.bracket(x, alg.bracket(y, z)) +
                     alg.bracket(y, alg.bracket(z, x)) +
                     alg.bracket(z, alg.bracket(x, y));
    if (!jac.is_zero()) ec.jacobi = false;
    GaussianRational adi =
        alg.invariant_form(alg.bracket(z, x), y) + alg.invariant_form(x, alg.bracket(z, y));
    if (!adi.is_zero()) ec.ad_invariance = false;
  };

  if (sample_triples <= 0) {
    for (int i = 0; i < dim; ++i)
      for (int j = i; j < dim; ++j) {
        if (!(alg.bracket(elem(i), elem(j)) == -alg.bracket(elem(j), elem(i))))
          ec.antisymmetry = false;
        for (int k = j; k < dim; ++k) check_triple(i, j, k);
      }
  } else {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(0, dim - 1);
    for (long t = 0; t < sample_triples; ++t) {
      int i = pick(rng), j = pick(rng), k = pick(rng);
      if (!(alg.bracket(elem(i), elem(j)) == -alg.bracket(elem(j), elem(i))))
        ec.antisymmetry = false;
      check_triple(i, j, k);
    }
  }

  // closure of the compact form under the bracket
  CompactBasis cb = alg.compact_basis();
  if (sample_triples <= 0) {
    for (const LieElement& x : cb.gens)
      for (const LieElement& y : cb.gens) {
        LieElement b = alg.bracket(x, y);
        if (!(alg.tau(b) == b)) ec.tau_closure = false;
      }
  } else {
    std::mt19937 rng(seed + 1);
    std::uniform_int_distribution<std::size_t> pick(0, cb.gens.size() - 1);
    for (long t = 0; t < sample_triples / 4 + 1; ++t) {
      LieElement b = alg.bracket(cb.gens[pick(rng)], cb.gens[pick(rng)]);
      if (!(alg.tau(b) == b)) ec.tau_closure = false;
    }
  }

  // quaternionic triple on m: ad(iA_beta)^2 = -id, ad(Z_beta)^2 = ad(W_beta)^2
  // = -c id with a shared c > 0, and ad(iA_beta) anticommutes with ad(Z_beta)
  if (rs.rank() >= 2) {
    Root beta = rs.highest_root();
    LieElement iab = alg.ia(beta), zb = alg.z(beta), wb = alg.w(beta);
    bool have_c = false;
    for (const Root& g : rs.positive_roots()) {
      if (rs.pairing(g, beta) != 1) continue;
      for (const LieElement& v : {alg.z(g), alg.w(g)}) {
        if (!(alg.bracket(iab, alg.bracket(iab, v)) == -v)) ec.quaternionic = false;
        LieElement zz = alg.bracket(zb, alg.bracket(zb, v));
        LieElement ww = alg.bracket(wb, alg.bracket(wb, v));
        // pairwise anticommutation of the three maps
        for (const auto& [a, b] : {std::pair{&iab, &zb}, {&iab, &wb}, {&zb, &wb}}) {
          LieElement anti = alg.bracket(*a, alg.bracket(*b, v)) +
                            alg.bracket(*b, alg.bracket(*a, v));
          if (!anti.is_zero()) ec.quaternionic = false;
        }
        for (const LieElement* sq : {&zz, &ww}) {
          GaussianRational ratio;
          bool ok = true;
          for (const auto& [flat, cv] : v.coeffs()) {
            GaussianRational r = sq->coeff(flat) / cv;
            if (ratio.is_zero() && !r.is_zero()) ratio = r;
            if (r != ratio) ok = false;
          }
          if (!ok || !(ratio * v == *sq) || !ratio.is_real() || ratio.re.sign() >= 0) {
            ec.quaternionic = false;
            continue;
          }
          Rational this_c = -ratio.re;
          if (!have_c) {
            ec.spin_eigenvalue = this_c;
            have_c = true;
          }
          if (this_c != ec.spin_eigenvalue) ec.quaternionic = false;
        }
      }
    }
  }
  return ec;
}

}  // namespace wolfspace
