#include "wolfspace/chevalley.hpp"

#include <algorithm>

#include "wolfspace/errors.hpp"

namespace wolfspace {

void LieElement::add_coeff(int flat_index, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(flat_index, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

LieElement LieElement::operator+(const LieElement& o) const {
  LieElement r = *this;
  if (!r.rs_) r.rs_ = o.rs_;
  for (const auto& [k, c] : o.coeffs_) r.add_coeff(k, c);
  return r;
}

LieElement LieElement::operator-(const LieElement& o) const {
  LieElement r = *this;
  if (!r.rs_) r.rs_ = o.rs_;
  for (const auto& [k, c] : o.coeffs_) r.add_coeff(k, -c);
  return r;
}

LieElement LieElement::operator-() const {
  LieElement r(rs_);
  for (const auto& [k, c] : coeffs_) r.add_coeff(k, -c);
  return r;
}

LieElement operator*(const GaussianRational& c, const LieElement& x) {
  LieElement r(x.rs_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : x.coeffs_) r.add_coeff(k, c * v);
  return r;
}

namespace {

inline std::uint64_t pair_key(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

// Derivation workspace for the positive-positive part of the table.
struct Derivation {
  const RootSystem& rs;
  std::unordered_map<std::uint64_t, Rational> pos;  // (pos idx, pos idx) -> N

  explicit Derivation(const RootSystem& r) : rs(r) {}

  Rational inner_idx(int idx) const {
    const Root& r = rs.roots()[idx];
    return rs.inner(r, r);
  }

  void set(int a, int b, const Rational& v) {
    pos[pair_key(a, b)] = v;
    pos[pair_key(b, a)] = -v;
  }

  Rational lookup_pos(int a, int b) const {
    auto it = pos.find(pair_key(a, b));
    if (it == pos.end()) throw InternalError("structure constant requested before derivation");
    return it->second;
  }

  // N for any pair of root indices whose sum is a root, reduced to the
  // positive-positive table through antisymmetry, negation and the cyclic
  // identity N_{x,y}/(z,z) = N_{y,z}/(x,x) for x + y + z = 0.
  Rational n_any(int x, int y) const {
    const bool xp = rs.is_positive_index(x), yp = rs.is_positive_index(y);
    if (xp && yp) return lookup_pos(x, y);
    if (!xp && !yp) return -n_any(rs.negate_index(x), rs.negate_index(y));
    const Root sum = rs.roots()[x] + rs.roots()[y];
    const int s = rs.index_of(sum);
    if (s < 0) throw InternalError("n_any on a non-root sum");
    if (!rs.is_positive_index(s)) return -n_any(rs.negate_index(x), rs.negate_index(y));
    if (yp) return -n_any(y, x);
    // x positive, y negative, sum positive: with c = -y, the pair (c, s) sums
    // to x and N_{x,y} = -N_{c,s} (s,s)/(x,x).
    const int c = rs.negate_index(y);
    return -(n_any(c, s) * inner_idx(s) / inner_idx(x));
  }

  // 0 when the sum of the two roots is not a root (the bracket vanishes).
  Rational n_or_zero(int x, int y) const {
    if (rs.index_of(rs.roots()[x] + rs.roots()[y]) < 0) return Rational(0);
    return n_any(x, y);
  }
};

}  // namespace

StructureConstants StructureConstants::build(const RootSystem& rs) {
  const int npos = rs.num_positive();
  Derivation d(rs);

  // Positive roots come in increasing positive_order, so every constant used
  // on the right-hand side below is already derived when it is needed.
  for (int ri = 0; ri < npos; ++ri) {
    const Root& rho = rs.roots()[ri];
    if (rho.height() < 2) continue;

    int eps = -1, eta = -1;
    for (int e = 0; e < ri; ++e) {
      int h = rs.index_of(rho - rs.roots()[e]);
      if (h >= 0 && rs.is_positive_index(h)) {
        eps = e;
        eta = h;
        break;
      }
    }
    if (eps < 0) throw InternalError("positive root with no special pair");

    auto [p_es, q_es] = rs.root_string(rs.roots()[eps], rs.roots()[eta]);
    (void)q_es;
    d.set(eps, eta, Rational(p_es + 1));  // extraspecial seed, positive by convention

    for (int a = 0; a < npos; ++a) {
      if (a == eps) continue;
      int b = rs.index_of(rho - rs.roots()[a]);
      if (b < 0 || !rs.is_positive_index(b)) continue;
      if (a > b) continue;  // fill both orders at once below
      // Jacobi on (X_a, X_b, X_{-eps}) pinned against the extraspecial seed:
      //   N_{a,b} N_{-eps,rho} + N_{b,-eps} N_{a,b-eps} + N_{-eps,a} N_{b,a-eps} = 0
      Rational t1(0), t2(0);
      if (rs.index_of(rs.roots()[b] - rs.roots()[eps]) >= 0) {
        int neg_eps = rs.negate_index(eps);
        int b_m_eps = rs.index_of(rs.roots()[b] - rs.roots()[eps]);
        t1 = d.n_any(b, neg_eps) * d.n_or_zero(a, b_m_eps);
      }
      if (rs.index_of(rs.roots()[a] - rs.roots()[eps]) >= 0) {
        int neg_eps = rs.negate_index(eps);
        int a_m_eps = rs.index_of(rs.roots()[a] - rs.roots()[eps]);
        t2 = d.n_any(neg_eps, a) * d.n_or_zero(b, a_m_eps);
      }
      Rational denom = d.n_any(rs.negate_index(eps), ri);
      if (denom.is_zero()) throw InternalError("vanishing pivot in sign derivation");
      d.set(a, b, -(t1 + t2) / denom);
    }
  }

  // Materialize the full integer table over all sign combinations.
  StructureConstants sc;
  const int nroots = static_cast<int>(rs.roots().size());
  for (int a = 0; a < nroots; ++a) {
    for (int b = 0; b < nroots; ++b) {
      if (b == rs.negate_index(a)) continue;
      int s = rs.index_of(rs.roots()[a] + rs.roots()[b]);
      if (s < 0) continue;
      Rational v = d.n_any(a, b);
      if (!v.is_integer()) throw InternalError("non-integral structure constant");
      auto [p, q] = rs.root_string(rs.roots()[a], rs.roots()[b]);
      (void)q;
      if (v.num() != p + 1 && v.num() != -(p + 1))
        throw InternalError("structure constant magnitude differs from p + 1");
      sc.table_[pair_key(a, b)] = static_cast<int>(v.num());
    }
  }
  return sc;
}

std::optional<int> StructureConstants::n(int a, int b) const {
  auto it = table_.find(pair_key(a, b));
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<std::pair<int, int>, int>> StructureConstants::entries() const {
  std::vector<std::pair<std::pair<int, int>, int>> out;
  out.reserve(table_.size());
  for (const auto& [k, v] : table_)
    out.push_back({{static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffu)}, v});
  std::sort(out.begin(), out.end());
  return out;
}

LieAlgebra::LieAlgebra(RootSystem rs) : rs_(std::move(rs)), sc_(StructureConstants::build(rs_)) {}

BasisIndex LieAlgebra::decode(int flat) const {
  if (flat < rs_.rank()) return {BasisIndex::Kind::Cartan, flat};
  return {BasisIndex::Kind::RootVector, flat - rs_.rank()};
}

LieElement LieAlgebra::cartan(int j) const {
  LieElement e(&rs_);
  e.add_coeff(cartan_index(j), GaussianRational(1));
  return e;
}

LieElement LieAlgebra::coroot(const Root& alpha) const {
  int idx = rs_.index_of(alpha);
  if (idx < 0) throw std::invalid_argument("coroot: not a root");
  LieElement e(&rs_);
  const std::vector<int>& cc = rs_.coroot_coords(idx);
  for (int j = 0; j < rs_.rank(); ++j) e.add_coeff(cartan_index(j), GaussianRational(cc[j]));
  return e;
}

LieElement LieAlgebra::root_vector(const Root& alpha) const {
  int idx = rs_.index_of(alpha);
  if (idx < 0) throw std::invalid_argument("root_vector: not a root");
  LieElement e(&rs_);
  e.add_coeff(root_index(idx), GaussianRational(1));
  return e;
}

LieElement LieAlgebra::z(const Root& gamma) const {
  return root_vector(gamma) - root_vector(-gamma);
}

LieElement LieAlgebra::w(const Root& gamma) const {
  return GaussianRational::i() * (root_vector(gamma) + root_vector(-gamma));
}

LieElement LieAlgebra::ia(const Root& alpha) const {
  return GaussianRational::i() * coroot(alpha);
}

int LieAlgebra::cartan_eval(int r, int j) const {
  const Root& gamma = rs_.roots()[r];
  int v = 0;
  for (int i = 0; i < rs_.rank(); ++i) v += gamma.coeffs[i] * rs_.cartan_matrix()[i][j];
  return v;
}

LieElement LieAlgebra::bracket(const LieElement& x, const LieElement& y) const {
  if ((x.system() && x.system() != &rs_) || (y.system() && y.system() != &rs_))
    throw std::invalid_argument("bracket: elements from different root systems");
  LieElement out(&rs_);
  for (const auto& [bi, ci] : x.coeffs()) {
    BasisIndex u = decode(bi);
    for (const auto& [bj, cj] : y.coeffs()) {
      BasisIndex v = decode(bj);
      GaussianRational c = ci * cj;
      if (u.kind == BasisIndex::Kind::Cartan && v.kind == BasisIndex::Kind::Cartan) continue;
      if (u.kind == BasisIndex::Kind::Cartan) {
        out.add_coeff(bj, c * GaussianRational(cartan_eval(v.index, u.index)));
      } else if (v.kind == BasisIndex::Kind::Cartan) {
        out.add_coeff(bi, -(c * GaussianRational(cartan_eval(u.index, v.index))));
      } else {
        if (v.index == rs_.negate_index(u.index)) {
          const std::vector<int>& cc = rs_.coroot_coords(u.index);
          for (int j = 0; j < rs_.rank(); ++j)
            out.add_coeff(cartan_index(j), c * GaussianRational(cc[j]));
        } else if (auto n = sc_.n(u.index, v.index)) {
          int sum = rs_.index_of(rs_.roots()[u.index] + rs_.roots()[v.index]);
          out.add_coeff(root_index(sum), c * GaussianRational(*n));
        }
      }
    }
  }
  return out;
}

LieElement LieAlgebra::tau(const LieElement& x) const {
  LieElement out(&rs_);
  for (const auto& [bi, c] : x.coeffs()) {
    BasisIndex u = decode(bi);
    if (u.kind == BasisIndex::Kind::Cartan) {
      // the coroots span i a, so tau negates them; coefficients conjugate
      out.add_coeff(bi, -c.conj());
    } else {
      out.add_coeff(root_index(rs_.negate_index(u.index)), -c.conj());
    }
  }
  return out;
}

GaussianRational LieAlgebra::invariant_form(const LieElement& x, const LieElement& y) const {
  if ((x.system() && x.system() != &rs_) || (y.system() && y.system() != &rs_))
    throw std::invalid_argument("invariant_form: elements from different root systems");
  GaussianRational s;
  for (const auto& [bi, ci] : x.coeffs()) {
    BasisIndex u = decode(bi);
    for (const auto& [bj, cj] : y.coeffs()) {
      BasisIndex v = decode(bj);
      if (u.kind == BasisIndex::Kind::Cartan && v.kind == BasisIndex::Kind::Cartan) {
        // (A_i, A_j) = 4 (a_i, a_j) / ((a_i, a_i)(a_j, a_j))
        Rational g = Rational(4) * rs_.gram()[u.index][v.index] /
                     (rs_.gram()[u.index][u.index] * rs_.gram()[v.index][v.index]);
        s += ci * cj * GaussianRational(g);
      } else if (u.kind == BasisIndex::Kind::RootVector &&
                 v.kind == BasisIndex::Kind::RootVector &&
                 v.index == rs_.negate_index(u.index)) {
        const Root& a = rs_.roots()[u.index];
        s += ci * cj * GaussianRational(Rational(2) / rs_.inner(a, a));
      }
    }
  }
  return s;
}

CompactBasis LieAlgebra::compact_basis() const {
  CompactBasis cb;
  for (int j = 0; j < rs_.rank(); ++j) {
    Root aj;
    aj.coeffs.assign(rs_.rank(), 0);
    aj.coeffs[j] = 1;
    cb.gens.push_back(ia(aj));
    cb.names.push_back("iA(a" + std::to_string(j + 1) + ")");
  }
  for (const Root& g : rs_.positive_roots()) {
    cb.gens.push_back(z(g));
    cb.names.push_back("Z(" + g.str() + ")");
    cb.gens.push_back(w(g));
    cb.names.push_back("W(" + g.str() + ")");
  }
  return cb;
}

linalg::Vec LieAlgebra::dense(const LieElement& x) const {
  linalg::Vec v(static_cast<std::size_t>(dim()));
  for (const auto& [k, c] : x.coeffs()) v[static_cast<std::size_t>(k)] = c;
  return v;
}

LieElement LieAlgebra::from_dense(const linalg::Vec& v) const {
  LieElement e(&rs_);
  for (std::size_t i = 0; i < v.size(); ++i) e.add_coeff(static_cast<int>(i), v[i]);
  return e;
}

std::string LieAlgebra::str(const LieElement& x) const {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : x.coeffs()) {
    if (!s.empty()) s += " + ";
    BasisIndex b = decode(k);
    std::string base = b.kind == BasisIndex::Kind::Cartan
                           ? "A(a" + std::to_string(b.index + 1) + ")"
                           : "X(" + rs_.roots()[b.index].str() + ")";
    s += "(" + c.str() + ")" + base;
  }
  return s;
}

}  // namespace wolfspace
