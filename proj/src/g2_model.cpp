#include "wolfspace/g2_model.hpp"

#include <cmath>
#include <optional>

#include "wolfspace/errors.hpp"

namespace wolfspace::g2 {

namespace {

// layout of the seven planes: V_i = s1*G(p1) + s2*G(p2) + s3*G(p3)
struct PlaneDef {
  int pairs[3][2];
  int signs[3];
};

const PlaneDef kPlanes[7] = {
    {{{2, 3}, {4, 5}, {6, 7}}, {+1, +1, +1}},   // V1
    {{{1, 3}, {4, 6}, {5, 7}}, {-1, -1, +1}},   // V2
    {{{1, 2}, {4, 7}, {5, 6}}, {+1, +1, +1}},   // V3
    {{{1, 5}, {2, 6}, {3, 7}}, {-1, +1, -1}},   // V4
    {{{1, 4}, {2, 7}, {3, 6}}, {+1, -1, -1}},   // V5
    {{{1, 7}, {2, 4}, {3, 5}}, {-1, -1, +1}},   // V6
    {{{1, 6}, {2, 5}, {3, 4}}, {+1, +1, +1}},   // V7
};

std::optional<std::int64_t> integer_sqrt(std::int64_t n) {
  if (n < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
  for (std::int64_t c = r > 1 ? r - 1 : 0; c <= r + 1; ++c)
    if (c * c == n) return c;
  return std::nullopt;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  auto n = integer_sqrt(r.num());
  auto d = integer_sqrt(r.den());
  if (!n || !d) return std::nullopt;
  return Rational(*n, *d);
}

}  // namespace

Mat7 Mat7::g(int i, int j) {
  if (i < 1 || i > 7 || j < 1 || j > 7) throw std::invalid_argument("G indices must be 1..7");
  if (i == j) throw std::invalid_argument("G needs two distinct indices");
  Mat7 m;
  m.at(j - 1, i - 1) = 1;   // e_i -> e_j
  m.at(i - 1, j - 1) = -1;  // e_j -> -e_i
  return m;
}

Mat7 Mat7::operator+(const Mat7& o) const {
  Mat7 r;
  for (std::size_t k = 0; k < 49; ++k) r.a_[k] = a_[k] + o.a_[k];
  return r;
}

Mat7 Mat7::operator-(const Mat7& o) const {
  Mat7 r;
  for (std::size_t k = 0; k < 49; ++k) r.a_[k] = a_[k] - o.a_[k];
  return r;
}

Mat7 Mat7::operator-() const {
  Mat7 r;
  for (std::size_t k = 0; k < 49; ++k) r.a_[k] = -a_[k];
  return r;
}

Mat7 operator*(const Rational& c, const Mat7& m) {
  Mat7 r;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) r.at(i, j) = c * m.at(i, j);
  return r;
}

Mat7 Mat7::mul(const Mat7& o) const {
  Mat7 r;
  for (int i = 0; i < 7; ++i)
    for (int k = 0; k < 7; ++k) {
      const Rational& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < 7; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += x * o.at(k, j);
      }
    }
  return r;
}

bool Mat7::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat7::is_skew() const {
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      if (!(at(i, j) + at(j, i)).is_zero()) return false;
  return true;
}

Rational Mat7::trace_mul(const Mat7& o) const {
  Rational t;
  for (int i = 0; i < 7; ++i)
    for (int k = 0; k < 7; ++k) t += at(i, k) * o.at(k, i);
  return t;
}

std::array<Rational, 7> Mat7::apply(const std::array<Rational, 7>& v) const {
  std::array<Rational, 7> r{};
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) r[i] += at(i, j) * v[j];
  return r;
}

linalg::Vec Mat7::flatten() const {
  linalg::Vec v(49);
  for (std::size_t k = 0; k < 49; ++k) v[k] = GaussianRational(a_[k]);
  return v;
}

std::string Mat7::str() const {
  // compact: list nonzero strictly-upper entries of the skew matrix
  std::string s = "[";
  bool first = true;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) {
      if (at(i, j).is_zero()) continue;
      if (!first) s += ", ";
      first = false;
      s += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")=" + at(i, j).str();
    }
  return s + "]";
}

Rational model_form(const Mat7& x, const Mat7& y) { return Rational(-4) * x.trace_mul(y); }

Mat7 v(int i, const Rational& lambda, const Rational& mu, const Rational& nu) {
  if (i < 1 || i > 7) throw std::invalid_argument("V index must be 1..7");
  const PlaneDef& p = kPlanes[i - 1];
  const Rational coef[3] = {lambda, mu, nu};
  Mat7 m;
  for (int t = 0; t < 3; ++t)
    m = m + (Rational(p.signs[t]) * coef[t]) * Mat7::g(p.pairs[t][0], p.pairs[t][1]);
  return m;
}

std::array<Rational, 3> v_coords(int i, const Mat7& x) {
  if (i < 1 || i > 7) throw std::invalid_argument("V index must be 1..7");
  const PlaneDef& p = kPlanes[i - 1];
  std::array<Rational, 3> c;
  for (int t = 0; t < 3; ++t) {
    // coefficient of G_{ab} in x is the (b, a) entry
    int a = p.pairs[t][0], b = p.pairs[t][1];
    c[t] = Rational(p.signs[t]) * x.at(b - 1, a - 1);
  }
  if (!(v(i, c[0], c[1], c[2]) == x))
    throw std::invalid_argument("matrix is not in the requested V plane");
  return c;
}

Mat7c::Mat7c(const Mat7& re, const Mat7& im) {
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) at(i, j) = GaussianRational(re.at(i, j), im.at(i, j));
}

Mat7c Mat7c::operator+(const Mat7c& o) const {
  Mat7c r;
  for (std::size_t k = 0; k < 49; ++k) r.a_[k] = a_[k] + o.a_[k];
  return r;
}

Mat7c Mat7c::operator-(const Mat7c& o) const {
  Mat7c r;
  for (std::size_t k = 0; k < 49; ++k) r.a_[k] = a_[k] - o.a_[k];
  return r;
}

Mat7c Mat7c::operator-() const {
  Mat7c r;
  for (std::size_t k = 0; k < 49; ++k) r.a_[k] = -a_[k];
  return r;
}

Mat7c operator*(const GaussianRational& c, const Mat7c& m) {
  Mat7c r;
  for (std::size_t k = 0; k < 49; ++k) r.a_[k] = c * m.a_[k];
  return r;
}

Mat7c Mat7c::mul(const Mat7c& o) const {
  Mat7c r;
  for (int i = 0; i < 7; ++i)
    for (int k = 0; k < 7; ++k) {
      const GaussianRational& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < 7; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += x * o.at(k, j);
      }
    }
  return r;
}

bool Mat7c::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Mat7c Mat7c::conj() const {
  Mat7c r;
  for (std::size_t k = 0; k < 49; ++k) r.a_[k] = a_[k].conj();
  return r;
}

GaussianRational Mat7c::trace_mul(const Mat7c& o) const {
  GaussianRational t;
  for (int i = 0; i < 7; ++i)
    for (int k = 0; k < 7; ++k) t += at(i, k) * o.at(k, i);
  return t;
}

bool Mat7c::is_real() const {
  for (const auto& x : a_)
    if (!x.im.is_zero()) return false;
  return true;
}

Mat7 Mat7c::real_part() const {
  Mat7 r;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) r.at(i, j) = at(i, j).re;
  return r;
}

linalg::Vec Mat7c::flatten() const {
  linalg::Vec v(49);
  for (std::size_t k = 0; k < 49; ++k) v[k] = a_[k];
  return v;
}

const G2Decomposition& decomposition() {
  static const G2Decomposition dec = [] {
    G2Decomposition d;
    for (int i = 1; i <= 7; ++i) {
      d.g2_basis.push_back(v(i, 1, -1, 0));
      d.g2_basis.push_back(v(i, 0, 1, -1));
    }
    for (int i = 1; i <= 3; ++i) {
      d.k_basis.push_back(v(i, 1, -1, 0));
      d.k_basis.push_back(v(i, 0, 1, -1));
    }
    for (int i = 4; i <= 7; ++i) {
      d.m_basis.push_back(v(i, 1, -1, 0));
      d.m_basis.push_back(v(i, 0, 1, -1));
    }
    for (int i = 1; i <= 3; ++i) d.h_basis[i - 1] = v(i, 2, -1, -1);
    d.a_point = v(6, 0, 1, -1);
    d.t_al = {v(4, 2, -1, -1), v(5, 2, -1, -1), v(7, 0, 1, -1)};
    d.n_al = {v(4, 0, 1, -1), v(5, 0, 1, -1), v(6, 2, -1, -1), v(7, 2, -1, -1)};
    d.i_a_beta = v(1, 0, 1, -1);
    d.z_beta = v(2, 0, -1, 1);
    d.w_beta = -v(3, 0, 1, -1);
    return d;
  }();
  return dec;
}

const std::array<BracketIdentity, 9>& golden_bracket_table() {
  static const std::array<BracketIdentity, 9> table = {{
      {{1, {2, -1, -1}}, {7, {0, 1, -1}}, {6, {0, -3, 3}}},
      {{2, {2, -1, -1}}, {7, {0, 1, -1}}, {5, {-2, 1, 1}}},
      {{3, {2, -1, -1}}, {7, {0, 1, -1}}, {4, {2, -1, -1}}},
      {{1, {2, -1, -1}}, {4, {2, -1, -1}}, {5, {-2, 1, 1}}},
      {{2, {2, -1, -1}}, {4, {2, -1, -1}}, {6, {-4, -1, 5}}},
      {{3, {2, -1, -1}}, {4, {2, -1, -1}}, {7, {4, -5, 1}}},
      {{1, {2, -1, -1}}, {5, {2, -1, -1}}, {4, {2, -1, -1}}},
      {{2, {2, -1, -1}}, {5, {2, -1, -1}}, {7, {4, 1, -5}}},
      {{3, {2, -1, -1}}, {5, {2, -1, -1}}, {6, {4, -5, 1}}},
  }};
  return table;
}

const std::array<BracketIdentity, 3>& tangent_bracket_table() {
  static const std::array<BracketIdentity, 3> table = {{
      {{1, {2, -1, -1}}, {6, {0, 1, -1}}, {7, {0, 3, -3}}},
      {{2, {2, -1, -1}}, {6, {0, 1, -1}}, {4, {2, -1, -1}}},
      {{3, {2, -1, -1}}, {6, {0, 1, -1}}, {5, {2, -1, -1}}},
  }};
  return table;
}

CheckResult verify_closure_of(const std::vector<Mat7>& span_vectors) {
  CheckResult res;
  linalg::RowSpace space(49);
  for (const Mat7& m : span_vectors) {
    if (!m.is_skew()) res.fail("closure: generator is not skew");
    space.insert(m.flatten());
  }
  for (std::size_t i = 0; i < span_vectors.size(); ++i)
    for (std::size_t j = i + 1; j < span_vectors.size(); ++j) {
      Mat7 b = bracket(span_vectors[i], span_vectors[j]);
      if (!space.contains(b.flatten()))
        res.fail("closure: bracket of generators " + std::to_string(i) + ", " +
                 std::to_string(j) + " leaves the span");
    }
  return res;
}

CheckResult verify_g2_closure() {
  const G2Decomposition& d = decomposition();
  CheckResult res = verify_closure_of(d.g2_basis);
  linalg::RowSpace space(49);
  for (const Mat7& m : d.g2_basis) space.insert(m.flatten());
  if (space.dim() != 14)
    res.fail("closure: span has dimension " + std::to_string(space.dim()) + ", want 14");
  return res;
}

namespace {

struct EigenFamily {
  int p, q;                 // plane indices: eigenvector is P + s i Q
  std::array<int, 3> pc, qc;
  std::array<int, 3> w;     // eigenvalue is s * i * (w . h) on H = V1(h)
};

const std::array<EigenFamily, 6>& eigen_families() {
  static const std::array<EigenFamily, 6> fams = {{
      {2, 3, {0, -1, 1}, {0, 1, -1}, {0, 1, -1}},   // +- i (mu - nu), the beta pair
      {4, 5, {0, -1, 1}, {0, 1, -1}, {1, 0, -1}},   // +- i (lambda - nu)
      {6, 7, {0, -1, 1}, {0, 1, -1}, {1, -1, 0}},   // +- i (lambda - mu), the delta pair
      {3, 2, {2, -1, -1}, {2, -1, -1}, {1, 0, 0}},  // +- i lambda
      {5, 4, {2, -1, -1}, {2, -1, -1}, {0, 1, 0}},  // +- i mu
      {7, 6, {2, -1, -1}, {2, -1, -1}, {0, 0, 1}},  // +- i nu
  }};
  return fams;
}

Mat7 v_of(int i, const std::array<int, 3>& c) { return v(i, c[0], c[1], c[2]); }

Rational dot3(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// inner product of two root functionals (w . h notation), in the Killing
// normalization of the model: (f, g) = w_f . w_g / 8
Rational functional_inner(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b) {
  return dot3(a, b) / Rational(8);
}

// Root vector for the eigenvalue family with the given sign, normalized so
// tau(X) = -X_- and [X, X_-] = A; c comes out rational for every G2 plane.
Mat7c normalized_root_vector(const Mat7& p, const Mat7& q, const std::array<Rational, 3>& w,
                             CheckResult* res) {
  Mat7c e(p, q);  // P + i Q
  Mat7c e_conj = e.conj();
  Mat7c k = bracket(e, e_conj);  // [E, conj E], purely imaginary multiple of V1
  // A for the functional w: A = -(2 i / |w|^2) V1(w)
  Rational wn = dot3(w, w);
  Mat7 a_re;  // A = i * a_im with a_im = -(2/|w|^2) V1(w)
  Mat7 a_im = Rational(-2) / wn * v(1, w[0], w[1], w[2]);
  // need [cE, -conj(cE)] = A with real c: -c^2 [E, conj E] = A
  // k is i * (real matrix): solve c^2 from matching imaginary parts
  Mat7c target(a_re, a_im);
  // find ratio r with -c^2 k = target
  Rational c2;
  bool found = false;
  for (int i = 0; i < 7 && !found; ++i)
    for (int j = 0; j < 7 && !found; ++j) {
      if (k.at(i, j).is_zero()) continue;
      if (!k.at(i, j).re.is_zero()) {
        if (res) res->fail("root data: [E, conj E] is not purely imaginary");
        return e;
      }
      c2 = -(target.at(i, j).im / k.at(i, j).im);
      found = true;
    }
  if (!found || !(Rational(0) < c2)) {
    if (res) res->fail("root data: no positive normalization for the root vector");
    return e;
  }
  auto c = rational_sqrt(c2);
  if (!c) {
    if (res) res->fail("root data: normalization is not a rational square");
    return e;
  }
  Mat7c x = GaussianRational(*c) * e;
  Mat7c x_minus = -x.conj();
  if (!(bracket(x, x_minus) == target)) {
    if (res) res->fail("root data: [X, X_-] != A after normalization");
  }
  return x;
}

}  // namespace

CheckResult verify_root_data() {
  CheckResult res;
  const std::array<Rational, 3> h_samples[2] = {{Rational(1), Rational(-1), Rational(0)},
                                                {Rational(0), Rational(1), Rational(-1)}};
  std::vector<std::array<Rational, 3>> roots_seen;

  for (const EigenFamily& f : eigen_families()) {
    Mat7 p = v_of(f.p, f.pc), q = v_of(f.q, f.qc);
    for (int sgn : {+1, -1}) {
      Mat7c e = sgn > 0 ? Mat7c(p, q) : Mat7c(p, -q);
      for (const auto& h : h_samples) {
        Mat7c hm(v(1, h[0], h[1], h[2]), Mat7());
        std::array<Rational, 3> wr = {Rational(f.w[0]), Rational(f.w[1]), Rational(f.w[2])};
        GaussianRational eig(Rational(0), Rational(sgn) * dot3(wr, h));
        if (!(bracket(hm, e) == eig * e)) {
          res.fail("root data: eigen identity fails for plane pair (V" +
                   std::to_string(f.p) + ", V" + std::to_string(f.q) + "), sign " +
                   std::to_string(sgn));
          break;
        }
      }
      std::array<Rational, 3> wr = {Rational(sgn) * Rational(f.w[0]),
                                    Rational(sgn) * Rational(f.w[1]),
                                    Rational(sgn) * Rational(f.w[2])};
      roots_seen.push_back(wr);
    }
  }

  // twelve distinct roots
  for (std::size_t i = 0; i < roots_seen.size(); ++i)
    for (std::size_t j = i + 1; j < roots_seen.size(); ++j)
      if (roots_seen[i] == roots_seen[j]) res.fail("root data: repeated root functional");
  if (roots_seen.size() != 12) res.fail("root data: root count differs from 12");

  // beta = i(mu - nu) and delta = i(mu - lambda) are both long with
  // 2 (beta, delta) / (beta, beta) = 1
  const std::array<Rational, 3> beta = {Rational(0), Rational(1), Rational(-1)};
  const std::array<Rational, 3> delta = {Rational(-1), Rational(1), Rational(0)};
  Rational bb = functional_inner(beta, beta);
  Rational dd = functional_inner(delta, delta);
  Rational bd = functional_inner(beta, delta);
  if (bb != dd) res.fail("root data: (beta, beta) != (delta, delta)");
  if (Rational(2) * bd / bb != Rational(1))
    res.fail("root data: 2 (beta, delta) / (beta, beta) != 1");
  // long / short squared-length ratio is 3
  const std::array<Rational, 3> lam = {Rational(2, 3), Rational(-1, 3), Rational(-1, 3)};
  if (bb != Rational(3) * functional_inner(lam, lam))
    res.fail("root data: long/short length ratio differs from 3");

  // the normalized delta root vector gives R Z_delta = R V6(0,1,-1)
  {
    // delta eigenvector: sign -1 of the (V6, V7) family
    Mat7 p = v(6, 0, -1, 1), q = v(7, 0, 1, -1);
    std::array<Rational, 3> wd = {Rational(-1), Rational(1), Rational(0)};
    Mat7c x = normalized_root_vector(p, -q, wd, &res);
    // Z = X - X_- = X + conj X = 2 Re X
    Mat7 z = (x + x.conj()).real_part();
    linalg::RowSpace line(49);
    line.insert(decomposition().a_point.flatten());
    if (z.is_zero() || !line.contains(z.flatten()))
      res.fail("root data: Z(delta) does not span R V6(0,1,-1)");
  }
  return res;
}

CheckResult verify_bracket_table() {
  CheckResult res;
  auto check = [&](const BracketIdentity& id) {
    Mat7 lhs = bracket(v_of(id.left.i, id.left.c), v_of(id.right.i, id.right.c));
    Mat7 rhs = v_of(id.result.i, id.result.c);
    if (!(lhs == rhs))
      res.fail("bracket table: [V" + std::to_string(id.left.i) + ", V" +
               std::to_string(id.right.i) + "] = " + lhs.str() + ", expected " + rhs.str());
  };
  for (const auto& id : golden_bracket_table()) check(id);
  for (const auto& id : tangent_bracket_table()) check(id);
  return res;
}

Mat7 second_fundamental_form(const Mat7& x, const Mat7& y) {
  const G2Decomposition& d = decomposition();
  linalg::RowSpace h_span(49);
  for (const Mat7& hb : d.h_basis) h_span.insert(hb.flatten());
  if (!h_span.contains(x.flatten()) || !h_span.contains(y.flatten()))
    throw std::invalid_argument("second fundamental form arguments must lie in h");

  Mat7 b = bracket(x, bracket(y, d.a_point));
  // orthogonal projection onto N_aL under the model form
  const std::size_t n = d.n_al.size();
  std::vector<linalg::Vec> gram(n, linalg::Vec(n));
  linalg::Vec rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    rhs[i] = GaussianRational(model_form(b, d.n_al[i]));
    for (std::size_t j = 0; j < n; ++j)
      gram[i][j] = GaussianRational(model_form(d.n_al[i], d.n_al[j]));
  }
  auto coef = linalg::solve_square(std::move(gram), std::move(rhs));
  if (!coef) throw InternalError("model form degenerate on N_aL");
  Mat7 proj;
  for (std::size_t i = 0; i < n; ++i) proj = proj + (*coef)[i].re * d.n_al[i];
  return proj;
}

std::vector<SffValue> second_fundamental_form_table() {
  const G2Decomposition& d = decomposition();
  std::vector<SffValue> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out.push_back({i, j, second_fundamental_form(d.h_basis[i], d.h_basis[j])});
  return out;
}

CheckResult verify_not_totally_geodesic() {
  const G2Decomposition& d = decomposition();
  CheckResult res = verify_bracket_table();

  // orthogonal split m = R a + T_aL + N_aL
  linalg::RowSpace m_span(49);
  for (const Mat7& b : d.m_basis) m_span.insert(b.flatten());
  linalg::RowSpace split(49);
  split.insert(d.a_point.flatten());
  std::vector<Mat7> pieces = {d.a_point};
  for (const Mat7& t : d.t_al) {
    split.insert(t.flatten());
    pieces.push_back(t);
  }
  for (const Mat7& nv : d.n_al) {
    split.insert(nv.flatten());
    pieces.push_back(nv);
  }
  if (m_span.dim() != 8 || split.dim() != 8 || !m_span.same_space(split))
    res.fail("split: R a + T_aL + N_aL does not fill m");
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j)
      if (!model_form(pieces[i], pieces[j]).is_zero())
        res.fail("split: pieces " + std::to_string(i) + ", " + std::to_string(j) +
                 " are not orthogonal");

  // T_aL = [h, a]
  linalg::RowSpace t_span(49), h_image(49);
  for (const Mat7& t : d.t_al) t_span.insert(t.flatten());
  for (const Mat7& hb : d.h_basis) h_image.insert(bracket(hb, d.a_point).flatten());
  if (!t_span.same_space(h_image)) res.fail("tangent: [h, Z_delta] differs from T_aL");
  if (t_span.dim() != 3 || d.n_al.size() != 4)
    res.fail("tangent/normal dimensions differ from (3, 4)");

  linalg::RowSpace n_span(49);
  for (const Mat7& nv : d.n_al) n_span.insert(nv.flatten());

  bool any_nonzero = false;
  auto table = second_fundamental_form_table();
  for (const auto& entry : table) {
    if (!entry.value.is_zero()) any_nonzero = true;
    if (!n_span.contains(entry.value.flatten()))
      res.fail("sff: value leaves N_aL");
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!(table[static_cast<std::size_t>(3 * i + j)].value ==
            table[static_cast<std::size_t>(3 * j + i)].value))
        res.fail("sff: h(X, Y) != h(Y, X)");
  if (!any_nonzero)
    res.fail("sff: all values vanish; L would be totally geodesic in the sphere");
  return res;
}

CheckResult verify_model_totally_complex() {
  const G2Decomposition& d = decomposition();
  CheckResult res;
  // m_N of the model: the delta plane plus the remaining level-(1,1) plane,
  // which is exactly R a + T_aL
  std::vector<Mat7> mn = {d.a_point, d.t_al[0], d.t_al[1], d.t_al[2]};
  linalg::RowSpace mn_span(49);
  for (const Mat7& b : mn) mn_span.insert(b.flatten());
  for (const Mat7& b : mn) {
    if (!mn_span.contains(bracket(d.i_a_beta, b).flatten()))
      res.fail("model totally complex: [iA_beta, m_N] leaves m_N");
    for (const Mat7& c : mn) {
      if (!model_form(bracket(d.z_beta, b), c).is_zero())
        res.fail("model totally complex: [Z_beta, m_N] not orthogonal to m_N");
      if (!model_form(bracket(d.w_beta, b), c).is_zero())
        res.fail("model totally complex: [W_beta, m_N] not orthogonal to m_N");
    }
  }
  return res;
}

CheckResult cross_validate_with_abstract() {
  CheckResult res;
  const G2Decomposition& d = decomposition();

  // abstract side
  LieAlgebra alg(RootSystem::build(RootSystemType(Family::G2, 2)));
  const RootSystem& rs = alg.roots();
  WolfDecomposition wd = beta_grading(alg);
  Root delta_canonical = choose_delta(wd);
  SubmanifoldModel model_canonical = build_submanifold_model(wd, delta_canonical);
  Root alpha2;
  alpha2.coeffs = {0, 1};
  SubmanifoldModel model_a2 = build_submanifold_model(wd, alpha2);

  if (wd.k.dim() != 6) res.fail("cross: abstract dim k != 6");
  if (wd.m.dim() != 8) res.fail("cross: abstract dim m != 8");
  if (wd.h.dim() != 3) res.fail("cross: abstract dim h != 3");
  if (model_canonical.h_p.dim() != 1) res.fail("cross: abstract dim h_p != 1");
  if (wd.h.dim() - model_canonical.h_p.dim() != 2) res.fail("cross: abstract dim H(p) != 2");

  bool abstract_tc = verify_lemma_totally_complex(model_canonical, wd).ok &&
                     verify_lemma_totally_complex(model_a2, wd).ok;
  bool model_tc = verify_model_totally_complex().ok;
  if (abstract_tc != model_tc || !model_tc)
    res.fail("cross: totally-complex verdicts disagree between the models");

  // matrix side dimensions
  {
    linalg::RowSpace k_span(49), m_span(49), h_span(49);
    for (const Mat7& b : d.k_basis) k_span.insert(b.flatten());
    for (const Mat7& b : d.m_basis) m_span.insert(b.flatten());
    for (const Mat7& b : d.h_basis) h_span.insert(b.flatten());
    if (k_span.dim() != 6 || m_span.dim() != 8 || h_span.dim() != 3)
      res.fail("cross: matrix model dims (k, m, h) differ from (6, 8, 3)");
    // trivial centralizer of Z_delta inside h
    std::vector<linalg::Vec> rows(49, linalg::Vec(3));
    for (int c = 0; c < 3; ++c) {
      linalg::Vec f = bracket(d.h_basis[static_cast<std::size_t>(c)], d.a_point).flatten();
      for (int r = 0; r < 49; ++r) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = f[static_cast<std::size_t>(r)];
    }
    if (!linalg::kernel_basis(rows, 3).empty())
      res.fail("cross: matrix model has h elements commuting with Z_delta");
  }

  // explicit bracket-preserving map on the Chevalley basis
  const int dim = alg.dim();
  std::vector<Mat7c> img(static_cast<std::size_t>(dim));
  {
    // A images from the root functionals: alpha1 -> lambda, alpha2 -> mu - lambda
    img[0] = Mat7c(Mat7(), -v(1, 2, -1, -1));   // A_{a1} = -i V1(2,-1,-1)
    img[1] = Mat7c(Mat7(), v(1, 1, -1, 0));     // A_{a2} =  i V1(1,-1,0)
    Root a1;
    a1.coeffs = {1, 0};
    Mat7c x1 = normalized_root_vector(v(3, 2, -1, -1), v(2, 2, -1, -1),
                                      {Rational(2, 3), Rational(-1, 3), Rational(-1, 3)}, &res);
    Mat7c x2 = normalized_root_vector(v(6, 0, 1, -1), v(7, 0, 1, -1),
                                      {Rational(-1), Rational(1), Rational(0)}, &res);
    for (int r = 0; r < rs.num_positive(); ++r) {
      const Root& rho = rs.roots()[r];
      int flat = alg.root_index(r);
      int neg_flat = alg.root_index(rs.negate_index(r));
      if (rho == a1) {
        img[static_cast<std::size_t>(flat)] = x1;
      } else if (rho == alpha2) {
        img[static_cast<std::size_t>(flat)] = x2;
      } else {
        // extraspecial decomposition rho = eps + eta; both already mapped
        int eps = -1, eta = -1;
        for (int e = 0; e < r; ++e) {
          int h = rs.index_of(rho - rs.roots()[e]);
          if (h >= 0 && rs.is_positive_index(h)) {
            eps = e;
            eta = h;
            break;
          }
        }
        if (eps < 0) throw InternalError("no decomposition for positive root");
        int n = *alg.constants().n(eps, eta);
        GaussianRational inv_n(Rational(1, n));
        img[static_cast<std::size_t>(flat)] =
            inv_n * bracket(img[static_cast<std::size_t>(alg.root_index(eps))],
                            img[static_cast<std::size_t>(alg.root_index(eta))]);
      }
      img[static_cast<std::size_t>(neg_flat)] = -img[static_cast<std::size_t>(flat)].conj();
    }
  }
  auto phi = [&](const LieElement& x) {
    Mat7c out;
    for (const auto& [flat, c] : x.coeffs()) out = out + c * img[static_cast<std::size_t>(flat)];
    return out;
  };

  auto basis_elem = [&](int flat) {
    if (flat < rs.rank()) return alg.cartan(flat);
    return alg.root_vector(rs.roots()[flat - rs.rank()]);
  };
  bool hom_ok = true, scale_ok = true;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      LieElement bi = basis_elem(i), bj = basis_elem(j);
      if (!(bracket(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]) ==
            phi(alg.bracket(bi, bj))))
        hom_ok = false;
      // Killing form of the model vs the engine form: fixed ratio 8
      GaussianRational lhs =
          GaussianRational(Rational(4)) *
          img[static_cast<std::size_t>(i)].trace_mul(img[static_cast<std::size_t>(j)]);
      if (!(lhs == GaussianRational(Rational(8)) * alg.invariant_form(bi, bj)))
        scale_ok = false;
    }
  if (!hom_ok) res.fail("cross: the basis map does not preserve brackets");
  if (!scale_ok) res.fail("cross: form scale between the models is not the constant 8");

  // compact generators map to real matrices inside g2, and the subalgebra
  // pieces line up
  linalg::RowSpace g2_span(49), k_span(49), m_span(49), h_span(49), mn_span(49);
  for (const Mat7& b : d.g2_basis) g2_span.insert(b.flatten());
  for (const Mat7& b : d.k_basis) k_span.insert(b.flatten());
  for (const Mat7& b : d.m_basis) m_span.insert(b.flatten());
  for (const Mat7& b : d.h_basis) h_span.insert(b.flatten());
  mn_span.insert(d.a_point.flatten());
  for (const Mat7& b : d.t_al) mn_span.insert(b.flatten());

  for (const LieElement& gen : alg.compact_basis().gens) {
    Mat7c m = phi(gen);
    if (!m.is_real() || !g2_span.contains(m.real_part().flatten()))
      res.fail("cross: a compact generator does not map into the real model algebra");
  }
  // spans compare over Q(i): reduced bases carry complex rescalings, so the
  // right statement is equality of the complexified subspaces
  auto maps_onto = [&](const LieSubspace& src, linalg::RowSpace& dst) {
    linalg::RowSpace image(49);
    for (const LieElement& b : src.basis()) image.insert(phi(b).flatten());
    return image.same_space(dst);
  };
  if (!maps_onto(wd.k, k_span)) res.fail("cross: phi(k) differs from the model k");
  if (!maps_onto(wd.m, m_span)) res.fail("cross: phi(m) differs from the model m");
  if (!maps_onto(wd.h, h_span)) res.fail("cross: phi(h) differs from the model h");
  if (!maps_onto(model_a2.m_N, mn_span))
    res.fail("cross: phi(m_N) differs from the model m_N for delta = a2");

  // shared quaternionic eigenvalue on both sides
  EngineCheck ec = check_engine_properties(alg, 200, 11);
  if (!ec.quaternionic) res.fail("cross: abstract quaternionic relations fail");
  Rational c_model;
  bool have_c = false, c_ok = true;
  for (const Mat7& b : d.m_basis) {
    Mat7 zz = bracket(d.z_beta, bracket(d.z_beta, b));
    // zz must equal -c b
    Rational c;
    bool found = false;
    for (int r = 0; r < 7 && !found; ++r)
      for (int s = 0; s < 7 && !found; ++s)
        if (!b.at(r, s).is_zero()) {
          c = -(zz.at(r, s) / b.at(r, s));
          found = true;
        }
    if (!found || !(((-c) * b) == zz)) {
      c_ok = false;
      continue;
    }
    if (!have_c) {
      c_model = c;
      have_c = true;
    }
    if (c != c_model) c_ok = false;
    if (!(bracket(d.i_a_beta, bracket(d.i_a_beta, b)) == -b)) c_ok = false;
    Mat7 ww = bracket(d.w_beta, bracket(d.w_beta, b));
    if (!(ww == (-c) * b)) c_ok = false;
  }
  if (!c_ok || !have_c) res.fail("cross: model quaternionic relations fail");
  else if (c_model != ec.spin_eigenvalue)
    res.fail("cross: ad(Z_beta)^2 eigenvalue differs between the models (" +
             c_model.str() + " vs " + ec.spin_eigenvalue.str() + ")");
  return res;
}

}  // namespace wolfspace::g2
