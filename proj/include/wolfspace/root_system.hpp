#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wolfspace/rational.hpp"

namespace wolfspace {

enum class Family { A, B, C, D, G2, F4, E6, E7, E8 };

std::string family_name(Family f);

struct RootSystemType {
  Family family;
  int rank;

  // Validates the (family, rank) pair: exceptional ranks are fixed,
  // A/B/C require rank >= 1 and D requires rank >= 3.
  RootSystemType(Family f, int r);

  std::string name() const;  // "A3", "G2", ...
};

// Integer coordinate vector over the simple roots. Also used for arbitrary
// root-lattice vectors in inner-product queries.
struct Root {
  std::vector<int> coeffs;

  int height() const;
  bool is_positive() const;  // all coefficients >= 0, not zero

  Root operator+(const Root& o) const;
  Root operator-(const Root& o) const;
  Root operator-() const;
  bool operator==(const Root& o) const { return coeffs == o.coeffs; }

  std::string str() const;  // "3a1+2a2", "-a1" ...
};

// positive_order: ascending height, ties broken so that lower-index simple
// roots come first. This fixed total order drives the structure-constant
// sign convention and every "pick the maximal candidate" rule.
bool positive_order_less(const Root& a, const Root& b);

class RootSystem {
 public:
  static RootSystem build(RootSystemType type);

  const RootSystemType& type() const { return type_; }
  int rank() const { return type_.rank; }

  // all roots: positive roots in positive_order, then their negatives in the
  // same order; root index i has its negative at i +/- num_positive().
  const std::vector<Root>& roots() const { return roots_; }
  std::span<const Root> positive_roots() const {
    return {roots_.data(), static_cast<std::size_t>(npos_)};
  }
  int num_positive() const { return npos_; }

  bool contains(const Root& r) const;
  int index_of(const Root& r) const;  // -1 if absent
  int negate_index(int idx) const { return idx < npos_ ? idx + npos_ : idx - npos_; }
  bool is_positive_index(int idx) const { return idx < npos_; }

  const std::vector<std::vector<Rational>>& gram() const { return gram_; }
  // cartan(i,j) = 2 (a_i, a_j) / (a_j, a_j); always an integer
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  Rational inner(const Root& a, const Root& b) const;
  // 2 (gamma, alpha) / (alpha, alpha); integral for roots alpha
  int pairing(const Root& gamma, const Root& alpha) const;

  Root highest_root() const;

  // { alpha in roots : 2 (gamma, alpha) / (gamma, gamma) == n }
  std::vector<Root> level_set(const Root& gamma, int n) const;

  // (p, q): p = max { k >= 0 : gamma - k alpha is a root }, q likewise for +.
  std::pair<int, int> root_string(const Root& alpha, const Root& gamma) const;

  // Integer coordinates of the coroot of roots()[idx] over the simple coroots.
  const std::vector<int>& coroot_coords(int idx) const { return coroot_coords_[idx]; }

 private:
  RootSystem(RootSystemType t) : type_(t) {}

  RootSystemType type_;
  std::vector<std::vector<Rational>> gram_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> roots_;
  int npos_ = 0;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> coroot_coords_;
};

inline RootSystem build_root_system(RootSystemType type) { return RootSystem::build(type); }

// Classical root counts, used as the independent cardinality oracle.
std::size_t classical_root_count(RootSystemType type);

}  // namespace wolfspace
