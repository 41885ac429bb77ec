#pragma once

#include <array>
#include <vector>

#include "wolfspace/linalg.hpp"
#include "wolfspace/rational.hpp"
#include "wolfspace/wolf.hpp"

namespace wolfspace::g2 {

// Exact rational 7x7 matrix. Model elements are skew; products are kept
// general so traces and commutators stay in one type.
class Mat7 {
 public:
  Mat7() = default;

  Rational& at(int r, int c) { return a_[static_cast<std::size_t>(7 * r + c)]; }
  const Rational& at(int r, int c) const { return a_[static_cast<std::size_t>(7 * r + c)]; }

  // elementary skew generator, 1-based: sends e_i to e_j and e_j to -e_i
  static Mat7 g(int i, int j);

  Mat7 operator+(const Mat7& o) const;
  Mat7 operator-(const Mat7& o) const;
  Mat7 operator-() const;
  friend Mat7 operator*(const Rational& c, const Mat7& m);
  Mat7 mul(const Mat7& o) const;
  bool operator==(const Mat7& o) const { return a_ == o.a_; }

  bool is_zero() const;
  bool is_skew() const;
  Rational trace_mul(const Mat7& o) const;  // tr(this * o)
  std::array<Rational, 7> apply(const std::array<Rational, 7>& v) const;

  linalg::Vec flatten() const;  // 49 real coordinates
  std::string str() const;

 private:
  std::array<Rational, 49> a_{};
};

inline Mat7 bracket(const Mat7& x, const Mat7& y) { return x.mul(y) - y.mul(x); }

// the invariant form of the model: -4 tr(x y)
Rational model_form(const Mat7& x, const Mat7& y);

// V_i(lambda, mu, nu) per the seven-line table of the model
Mat7 v(int i, const Rational& lambda, const Rational& mu, const Rational& nu);

// Writes x as V_i(a, b, c) if it lies in the i-th plane; throws otherwise.
std::array<Rational, 3> v_coords(int i, const Mat7& x);

// 7x7 matrix over Q(i), for the complex eigenvector identities.
class Mat7c {
 public:
  Mat7c() = default;
  Mat7c(const Mat7& re, const Mat7& im);

  GaussianRational& at(int r, int c) { return a_[static_cast<std::size_t>(7 * r + c)]; }
  const GaussianRational& at(int r, int c) const {
    return a_[static_cast<std::size_t>(7 * r + c)];
  }

  Mat7c operator+(const Mat7c& o) const;
  Mat7c operator-(const Mat7c& o) const;
  Mat7c operator-() const;
  friend Mat7c operator*(const GaussianRational& c, const Mat7c& m);
  Mat7c mul(const Mat7c& o) const;
  bool operator==(const Mat7c& o) const { return a_ == o.a_; }
  bool is_zero() const;
  Mat7c conj() const;
  GaussianRational trace_mul(const Mat7c& o) const;
  bool is_real() const;
  Mat7 real_part() const;
  linalg::Vec flatten() const;  // 49 complex coordinates

 private:
  std::array<GaussianRational, 49> a_{};
};

inline Mat7c bracket(const Mat7c& x, const Mat7c& y) { return x.mul(y) - y.mul(x); }

// The explicit model decomposition at the point a = Z_delta.
struct G2Decomposition {
  std::vector<Mat7> g2_basis;          // 14: V_i(1,-1,0), V_i(0,1,-1)
  std::vector<Mat7> k_basis;           // 6: planes V_1..V_3
  std::vector<Mat7> m_basis;           // 8: planes V_4..V_7
  std::array<Mat7, 3> h_basis;         // V_1..V_3 at (2,-1,-1)
  Mat7 a_point;                        // V_6(0,1,-1) = Z_delta
  std::array<Mat7, 3> t_al;            // tangent of L = Ad(H) Z_delta at a
  std::array<Mat7, 4> n_al;            // normal of T_aL in the sphere at a
  Mat7 i_a_beta, z_beta, w_beta;       // the quaternionic triple of the model
};

const G2Decomposition& decomposition();

struct VEntry {
  int i;
  std::array<int, 3> c;
};
struct BracketIdentity {
  VEntry left, right, result;
};

// The nine h-computation brackets [V_i(2,-1,-1), V_j(*)] and the three
// tangent brackets [V_i(2,-1,-1), V_6(0,1,-1)], as exact identities.
const std::array<BracketIdentity, 9>& golden_bracket_table();
const std::array<BracketIdentity, 3>& tangent_bracket_table();

CheckResult verify_g2_closure();
// negative-control helper: does the span of these matrices close under bracket?
CheckResult verify_closure_of(const std::vector<Mat7>& span_vectors);

CheckResult verify_root_data();
CheckResult verify_bracket_table();

// pi_{N_aL}([X, [Y, Z_delta]]); X, Y must lie in h
Mat7 second_fundamental_form(const Mat7& x, const Mat7& y);

CheckResult verify_not_totally_geodesic();
CheckResult verify_model_totally_complex();

// Builds the explicit bracket-preserving map from the abstract G2 engine into
// the matrix model and checks dimensions, verdicts and the quaternionic
// eigenvalue on both sides.
CheckResult cross_validate_with_abstract();

struct SffValue {
  int xi, yi;   // indices into h_basis
  Mat7 value;
};
std::vector<SffValue> second_fundamental_form_table();

}  // namespace wolfspace::g2
