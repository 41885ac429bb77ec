#pragma once

#include <optional>
#include <vector>

#include "wolfspace/rational.hpp"

namespace wolfspace::linalg {

using Vec = std::vector<GaussianRational>;

Vec zero_vec(std::size_t n);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const GaussianRational& c, const Vec& v);

// Span in reduced row echelon form over Q(i). Insertion keeps unit pivots and
// eliminates pivot columns from all other rows, so membership and coordinate
// extraction are direct reads.
class RowSpace {
 public:
  explicit RowSpace(std::size_t ambient) : ambient_(ambient) {}

  // Reduces v against the current rows; absorbs it if independent.
  // Returns true when the dimension grew.
  bool insert(Vec v);

  bool contains(const Vec& v) const;

  // Coefficients of v over rows() if v lies in the span.
  std::optional<Vec> coordinates(const Vec& v) const;

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  const std::vector<Vec>& rows() const { return rows_; }

  bool same_space(const RowSpace& other) const;

 private:
  Vec reduce(Vec v, Vec* coords) const;

  std::size_t ambient_;
  std::vector<Vec> rows_;   // sorted by pivot column
  std::vector<int> pivots_;
};

// Exact solve of a square system A x = b; nullopt when A is singular.
std::optional<Vec> solve_square(std::vector<Vec> a, Vec b);

// Basis of { x : M x = 0 } for the given row list.
std::vector<Vec> kernel_basis(std::vector<Vec> rows, std::size_t ncols);

}  // namespace wolfspace::linalg
