#include "wolfspace/linalg.hpp"

#include <algorithm>

#include "wolfspace/errors.hpp"

namespace wolfspace::linalg {

Vec zero_vec(std::size_t n) { return Vec(n); }

bool is_zero(const Vec& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InternalError("vector size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InternalError("vector size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const GaussianRational& c, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Vec RowSpace::reduce(Vec v, Vec* coords) const {
  if (v.size() != ambient_) throw InternalError("ambient dimension mismatch");
  if (coords) *coords = Vec(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const GaussianRational c = v[pivots_[i]];  // by value: the loop writes v
    if (c.is_zero()) continue;
    if (coords) (*coords)[i] = c;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!rows_[i][j].is_zero()) v[j] -= c * rows_[i][j];
  }
  return v;
}

bool RowSpace::insert(Vec v) {
  v = reduce(std::move(v), nullptr);
  int piv = -1;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (!v[j].is_zero()) {
      piv = static_cast<int>(j);
      break;
    }
  if (piv < 0) return false;
  GaussianRational lead = v[piv];
  for (auto& c : v) c = c / lead;
  // clear the new pivot column from older rows
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const GaussianRational c = rows_[i][piv];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!v[j].is_zero()) rows_[i][j] -= c * v[j];
  }
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool RowSpace::contains(const Vec& v) const { return is_zero(reduce(v, nullptr)); }

std::optional<Vec> RowSpace::coordinates(const Vec& v) const {
  Vec coords;
  Vec rest = reduce(v, &coords);
  if (!is_zero(rest)) return std::nullopt;
  return coords;
}

bool RowSpace::same_space(const RowSpace& other) const {
  if (ambient_ != other.ambient_ || dim() != other.dim()) return false;
  // both sides are canonical RREF bases, so equality is row equality
  return pivots_ == other.pivots_ && rows_ == other.rows_;
}

std::optional<Vec> solve_square(std::vector<Vec> a, Vec b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw InternalError("solve_square size mismatch");
  for (auto& row : a)
    if (row.size() != n) throw InternalError("solve_square not square");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    GaussianRational lead = a[col][col];
    for (auto& c : a[col]) c = c / lead;
    b[col] = b[col] / lead;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      GaussianRational f = a[r][col];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

std::vector<Vec> kernel_basis(std::vector<Vec> rows, std::size_t ncols) {
  // row-reduce, track pivot columns
  std::vector<int> pivot_of_row;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    GaussianRational lead = rows[r][col];
    for (auto& c : rows[r]) c = c / lead;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r) continue;
      GaussianRational f = rows[k][col];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < ncols; ++j) rows[k][j] -= f * rows[r][j];
    }
    pivot_of_row.push_back(static_cast<int>(col));
    ++r;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivot_of_row) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(ncols);
    v[free_col] = GaussianRational(1);
    for (std::size_t i = 0; i < pivot_of_row.size(); ++i)
      v[pivot_of_row[i]] = -rows[i][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace wolfspace::linalg
