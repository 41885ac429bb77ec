#include "wolfspace/root_system.hpp"

#include <algorithm>
#include <deque>

#include "wolfspace/errors.hpp"

namespace wolfspace {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G2: return "G2";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
  }
  throw InternalError("unknown family");
}

RootSystemType::RootSystemType(Family f, int r) : family(f), rank(r) {
  auto need = [&](int want) {
    if (r != want)
      throw ConfigurationError(family_name(f) + " has rank " + std::to_string(want) +
                               ", got " + std::to_string(r));
  };
  switch (f) {
    case Family::A:
    case Family::B:
    case Family::C:
      if (r < 1) throw ConfigurationError(family_name(f) + " needs rank >= 1");
      break;
    case Family::D:
      if (r < 3) throw ConfigurationError("D needs rank >= 3");
      break;
    case Family::G2: need(2); break;
    case Family::F4: need(4); break;
    case Family::E6: need(6); break;
    case Family::E7: need(7); break;
    case Family::E8: need(8); break;
  }
}

std::string RootSystemType::name() const {
  switch (family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::D:
      return family_name(family) + std::to_string(rank);
    default:
      return family_name(family);
  }
}

int Root::height() const {
  int h = 0;
  for (int c : coeffs) h += c;
  return h;
}

bool Root::is_positive() const {
  bool nonzero = false;
  for (int c : coeffs) {
    if (c < 0) return false;
    if (c > 0) nonzero = true;
  }
  return nonzero;
}

Root Root::operator+(const Root& o) const {
  Root r = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
  return r;
}

Root Root::operator-(const Root& o) const {
  Root r = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] -= o.coeffs[i];
  return r;
}

Root Root::operator-() const {
  Root r = *this;
  for (int& c : r.coeffs) c = -c;
  return r;
}

std::string Root::str() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    int c = coeffs[i];
    if (c == 0) continue;
    if (c > 0 && !s.empty()) s += "+";
    if (c == -1)
      s += "-";
    else if (c != 1)
      s += std::to_string(c);
    s += "a" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

bool positive_order_less(const Root& a, const Root& b) {
  int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  // ties: the root with the larger leading coefficient comes first, so a1
  // precedes a2 precedes a3 ... among the simple roots
  return std::lexicographical_compare(b.coeffs.begin(), b.coeffs.end(),
                                      a.coeffs.begin(), a.coeffs.end());
}

namespace {

std::string key_of(const std::vector<int>& coeffs) {
  std::string k;
  k.reserve(coeffs.size() * 3);
  for (int c : coeffs) {
    k += std::to_string(c);
    k += ',';
  }
  return k;
}

// Symmetric Gram matrix of the simple roots, normalized so long roots have
// squared length 2.
std::vector<std::vector<Rational>> gram_for(const RootSystemType& t) {
  const int n = t.rank;
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n, Rational(0)));
  auto edge = [&](int i, int j, Rational v) {
    g[i][j] = v;
    g[j][i] = v;
  };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, Rational(-1));
      break;
    case Family::B:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      g[n - 1][n - 1] = 1;  // short last simple root
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, Rational(-1));
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) g[i][i] = 1;
      g[n - 1][n - 1] = 2;  // long last simple root
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, Rational(-1, 2));
      if (n >= 2) edge(n - 2, n - 1, Rational(-1));
      break;
    case Family::D:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, Rational(-1));
      edge(n - 3, n - 1, Rational(-1));
      break;
    case Family::G2:
      g[0][0] = Rational(2, 3);
      g[1][1] = 2;
      edge(0, 1, Rational(-1));
      break;
    case Family::F4:
      g[0][0] = 2;
      g[1][1] = 2;
      g[2][2] = 1;
      g[3][3] = 1;
      edge(0, 1, Rational(-1));
      edge(1, 2, Rational(-1));
      edge(2, 3, Rational(-1, 2));
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8: {
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      edge(0, 2, Rational(-1));
      edge(1, 3, Rational(-1));
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1, Rational(-1));
      break;
    }
  }
  return g;
}

}  // namespace

std::size_t classical_root_count(RootSystemType t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case Family::A: return n * (n + 1);
    case Family::B:
    case Family::C: return 2 * n * n;
    case Family::D: return 2 * n * (n - 1);
    case Family::G2: return 12;
    case Family::F4: return 48;
    case Family::E6: return 72;
    case Family::E7: return 126;
    case Family::E8: return 240;
  }
  throw InternalError("unknown family");
}

RootSystem RootSystem::build(RootSystemType type) {
  RootSystem rs(type);
  const int n = type.rank;
  rs.gram_ = gram_for(type);

  rs.cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational v = (Rational(2) * rs.gram_[i][j]) / rs.gram_[j][j];
      if (!v.is_integer()) throw InternalError("non-integral Cartan entry");
      rs.cartan_[i][j] = static_cast<int>(v.num());
    }

  // reflection-closure fixpoint from the simple roots
  std::vector<Root> found;
  std::unordered_map<std::string, int> seen;
  std::deque<Root> queue;
  for (int i = 0; i < n; ++i) {
    Root s;
    s.coeffs.assign(n, 0);
    s.coeffs[i] = 1;
    seen.emplace(key_of(s.coeffs), static_cast<int>(found.size()));
    found.push_back(s);
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Root r = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      int pair = 0;  // 2 (r, a_j) / (a_j, a_j)
      for (int i = 0; i < n; ++i) pair += r.coeffs[i] * rs.cartan_[i][j];
      Root refl = r;
      refl.coeffs[j] -= pair;
      if (seen.emplace(key_of(refl.coeffs), -1).second) {
        found.push_back(refl);
        queue.push_back(refl);
      }
    }
  }

  std::vector<Root> positives;
  for (const Root& r : found) {
    bool pos = true, neg = true;
    for (int c : r.coeffs) {
      if (c > 0) neg = false;
      if (c < 0) pos = false;
    }
    if (!pos && !neg) throw InternalError("mixed-sign root generated");
    if (pos) positives.push_back(r);
  }
  if (2 * positives.size() != found.size())
    throw InternalError("root set not symmetric under negation");
  if (found.size() != classical_root_count(type))
    throw InternalError("root count mismatch for " + type.name());

  std::sort(positives.begin(), positives.end(), positive_order_less);
  rs.npos_ = static_cast<int>(positives.size());
  rs.roots_ = positives;
  for (const Root& r : positives) rs.roots_.push_back(-r);
  for (std::size_t i = 0; i < rs.roots_.size(); ++i)
    rs.index_[key_of(rs.roots_[i].coeffs)] = static_cast<int>(i);

  rs.coroot_coords_.reserve(rs.roots_.size());
  for (const Root& r : rs.roots_) {
    Rational len = rs.inner(r, r);
    std::vector<int> cc(n);
    for (int i = 0; i < n; ++i) {
      Rational v = Rational(r.coeffs[i]) * rs.gram_[i][i] / len;
      if (!v.is_integer()) throw InternalError("non-integral coroot coordinate");
      cc[i] = static_cast<int>(v.num());
    }
    rs.coroot_coords_.push_back(std::move(cc));
  }
  return rs;
}

bool RootSystem::contains(const Root& r) const { return index_of(r) >= 0; }

int RootSystem::index_of(const Root& r) const {
  if (static_cast<int>(r.coeffs.size()) != rank()) return -1;
  auto it = index_.find(key_of(r.coeffs));
  return it == index_.end() ? -1 : it->second;
}

Rational RootSystem::inner(const Root& a, const Root& b) const {
  if (static_cast<int>(a.coeffs.size()) != rank() ||
      static_cast<int>(b.coeffs.size()) != rank())
    throw std::invalid_argument("inner: vector length does not match rank");
  Rational s(0);
  for (int i = 0; i < rank(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) {
      if (b.coeffs[j] == 0) continue;
      s += Rational(a.coeffs[i]) * Rational(b.coeffs[j]) * gram_[i][j];
    }
  }
  return s;
}

int RootSystem::pairing(const Root& gamma, const Root& alpha) const {
  Rational v = Rational(2) * inner(gamma, alpha) / inner(alpha, alpha);
  if (!v.is_integer()) throw InternalError("non-integral root pairing");
  return static_cast<int>(v.num());
}

Root RootSystem::highest_root() const {
  const Root& beta = roots_[npos_ - 1];  // maximal in positive_order
  for (int i = 0; i + 1 < npos_; ++i)
    if (roots_[i].height() == beta.height())
      throw InternalError("highest root is not unique; system not irreducible?");
  return beta;
}

std::vector<Root> RootSystem::level_set(const Root& gamma, int n) const {
  if (!contains(gamma)) throw std::invalid_argument("level_set: gamma is not a root");
  std::vector<Root> out;
  for (const Root& a : roots_)
    if (pairing(a, gamma) == n) out.push_back(a);
  return out;
}

std::pair<int, int> RootSystem::root_string(const Root& alpha, const Root& gamma) const {
  if (!contains(alpha) || !contains(gamma))
    throw std::invalid_argument("root_string: arguments must be roots");
  if (gamma == alpha || gamma == -alpha)
    throw std::invalid_argument("root_string: gamma must differ from +-alpha");
  int p = 0, q = 0;
  Root down = gamma - alpha;
  while (contains(down)) {
    ++p;
    down = down - alpha;
  }
  Root up = gamma + alpha;
  while (contains(up)) {
    ++q;
    up = up + alpha;
  }
  return {p, q};
}

}  // namespace wolfspace
