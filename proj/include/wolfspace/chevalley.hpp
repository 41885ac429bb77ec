#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wolfspace/linalg.hpp"
#include "wolfspace/rational.hpp"
#include "wolfspace/root_system.hpp"

namespace wolfspace {

// Basis index layout for elements of the complexified algebra:
//   0 .. rank-1            Cartan part, coordinates over the simple coroots A_j
//   rank + r               root vector X of roots()[r]
struct BasisIndex {
  enum class Kind { Cartan, RootVector };
  Kind kind;
  int index;  // simple-root index, or root index
};

// Sparse exact coefficient vector over the Chevalley basis. Zero coefficients
// are never stored, so equality is map equality.
class LieElement {
 public:
  LieElement() = default;
  explicit LieElement(const RootSystem* rs) : rs_(rs) {}

  const RootSystem* system() const { return rs_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<int, GaussianRational>& coeffs() const { return coeffs_; }

  GaussianRational coeff(int flat_index) const {
    auto it = coeffs_.find(flat_index);
    return it == coeffs_.end() ? GaussianRational() : it->second;
  }
  void add_coeff(int flat_index, const GaussianRational& c);

  LieElement operator+(const LieElement& o) const;
  LieElement operator-(const LieElement& o) const;
  LieElement operator-() const;
  friend LieElement operator*(const GaussianRational& c, const LieElement& x);
  bool operator==(const LieElement& o) const { return coeffs_ == o.coeffs_; }

 private:
  const RootSystem* rs_ = nullptr;
  std::map<int, GaussianRational> coeffs_;
};

// N_{alpha,gamma} for every ordered pair of roots whose sum is again a root.
// Signs follow the extraspecial-pair convention under positive_order: the
// minimal decomposition of each non-simple positive root is seeded positive,
// and everything else is forced by antisymmetry, negation and Jacobi closure.
class StructureConstants {
 public:
  static StructureConstants build(const RootSystem& rs);

  // N for the pair (roots()[a], roots()[b]); nullopt when the sum is not a root.
  std::optional<int> n(int a, int b) const;

  // defined entries in deterministic (a, b) order
  std::vector<std::pair<std::pair<int, int>, int>> entries() const;

 private:
  std::unordered_map<std::uint64_t, int> table_;
};

struct CompactBasis {
  // layout: iA_j for j < rank, then Z, W per positive root in positive_order
  std::vector<LieElement> gens;
  std::vector<std::string> names;

  int ia_index(int j) const { return j; }
  int z_index(int pos_root, int rank) const { return rank + 2 * pos_root; }
  int w_index(int pos_root, int rank) const { return rank + 2 * pos_root + 1; }
};

// The bracket / involution / invariant-form engine over a fixed root system.
class LieAlgebra {
 public:
  explicit LieAlgebra(RootSystem rs);

  const RootSystem& roots() const { return rs_; }
  const StructureConstants& constants() const { return sc_; }
  int rank() const { return rs_.rank(); }
  int dim() const { return rs_.rank() + static_cast<int>(rs_.roots().size()); }

  // flat basis indices
  int cartan_index(int j) const { return j; }
  int root_index(int r) const { return rs_.rank() + r; }
  BasisIndex decode(int flat) const;

  LieElement zero() const { return LieElement(&rs_); }
  LieElement cartan(int j) const;               // A_{a_j}
  LieElement coroot(const Root& alpha) const;   // A_alpha over the simple coroots
  LieElement root_vector(const Root& alpha) const;  // X_alpha
  LieElement z(const Root& gamma) const;  // X_gamma - X_{-gamma}
  LieElement w(const Root& gamma) const;  // i (X_gamma + X_{-gamma})
  LieElement ia(const Root& alpha) const;  // i A_alpha

  LieElement bracket(const LieElement& x, const LieElement& y) const;
  LieElement tau(const LieElement& x) const;
  GaussianRational invariant_form(const LieElement& x, const LieElement& y) const;

  // integer gamma(A_{a_j}) for the root with index r
  int cartan_eval(int r, int j) const;

  CompactBasis compact_basis() const;

  linalg::Vec dense(const LieElement& x) const;
  LieElement from_dense(const linalg::Vec& v) const;
  std::string str(const LieElement& x) const;

 private:
  RootSystem rs_;
  StructureConstants sc_;
};

inline StructureConstants build_structure_constants(const RootSystem& rs) {
  return StructureConstants::build(rs);
}

}  // namespace wolfspace
