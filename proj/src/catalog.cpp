#include "wolfspace/catalog.hpp"

#include <cctype>

#include "wolfspace/errors.hpp"

namespace wolfspace {

namespace {

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

int parse_int(const std::string& s, const std::string& what) {
  if (s.empty()) throw ConfigurationError("missing number in " + what);
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ConfigurationError("bad number '" + s + "' in " + what);
  return std::stoi(s);
}

SpaceSpec su_space(int n) {
  if (n < 4)
    throw ConfigurationError("G2(C^n) needs n >= 4; SU(" + std::to_string(n) +
                             ") sits below the bound where the level-one grading "
                             "carries a quaternionic structure");
  return SpaceSpec{"G2(C" + std::to_string(n) + ")",
                   RootSystemType(Family::A, n - 1),
                   4 * (n - 2),
                   2 * (n - 3),
                   "CP" + std::to_string(n - 3),
                   "CP1 x CP" + std::to_string(n - 3)};
}

SpaceSpec spin_space(int n) {
  if (n < 7)
    throw ConfigurationError("Go4(R^n) needs n >= 7; Spin(" + std::to_string(n) +
                             ") sits below that bound");
  RootSystemType t = (n % 2 == 1) ? RootSystemType(Family::B, (n - 1) / 2)
                                  : RootSystemType(Family::D, n / 2);
  return SpaceSpec{"Go4(R" + std::to_string(n) + ")",
                   t,
                   4 * (n - 4),
                   2 * n - 10,
                   n == 7 ? "S2 x S2" : "S2 x Go2(R" + std::to_string(n - 4) + ")",
                   n == 7 ? "((S2 x S2) x S2)/Z2"
                          : "((S2 x S2) x Go2(R" + std::to_string(n - 4) + "))/Z2"};
}

SpaceSpec sp_space(int n) {
  if (n < 1) throw ConfigurationError("Sp(n) needs n >= 1");
  // parses fine; the pipeline raises NoDeltaError because no level-one root is long
  return SpaceSpec{"G1(H" + std::to_string(n) + ")", RootSystemType(Family::C, n),
                   4 * (n - 1), -1, "", ""};
}

SpaceSpec exceptional_space(Family f) {
  switch (f) {
    case Family::G2:
      return SpaceSpec{"G", RootSystemType(Family::G2, 2), 8, 2, "S2", "(S2 x S2)/Z2"};
    case Family::F4:
      return SpaceSpec{"FI", RootSystemType(Family::F4, 4), 28, 12, "Sp(3)/U(3)",
                       "(S2 x Sp(3)/U(3))/Z2"};
    case Family::E6:
      return SpaceSpec{"EII", RootSystemType(Family::E6, 6), 40, 18, "G3(C6)",
                       "(S2 x G3(C6))/Z2"};
    case Family::E7:
      return SpaceSpec{"EVI", RootSystemType(Family::E7, 7), 64, 30, "SO(12)/U(6)",
                       "(S2 x SO(12)/U(6))/Z2"};
    case Family::E8:
      return SpaceSpec{"EIX", RootSystemType(Family::E8, 8), 112, 54, "E7/(U(1).E6)",
                       "(S2 x E7/(U(1).E6))/Z2"};
    default:
      throw InternalError("not an exceptional family");
  }
}

}  // namespace

SpaceSpec space_for_type(RootSystemType type) {
  switch (type.family) {
    case Family::A: return su_space(type.rank + 1);
    case Family::B: return spin_space(2 * type.rank + 1);
    case Family::D: return spin_space(2 * type.rank);
    case Family::C: return sp_space(type.rank);
    default: return exceptional_space(type.family);
  }
}

SpaceSpec parse_space(const std::string& raw, int max_rank) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ConfigurationError("empty space name");
  std::string u = upper(s);

  auto check_rank = [&](int rank, SpaceSpec spec) {
    if (rank > max_rank)
      throw ConfigurationError("rank " + std::to_string(rank) + " exceeds the cap " +
                               std::to_string(max_rank) + "; raise it with --max-rank");
    return spec;
  };

  // classical space names
  if (u == "G") return exceptional_space(Family::G2);
  if (u == "FI") return exceptional_space(Family::F4);
  if (u == "EII") return exceptional_space(Family::E6);
  if (u == "EVI") return exceptional_space(Family::E7);
  if (u == "EIX") return exceptional_space(Family::E8);

  // parenthesized forms: G2(Cn), GO4(Rn), G1(Hn), SU(n), SPIN(n), SP(n)
  auto paren = u.find('(');
  if (paren != std::string::npos && u.back() == ')') {
    std::string head = u.substr(0, paren);
    std::string arg = u.substr(paren + 1, u.size() - paren - 2);
    if (head == "G2" && !arg.empty() && arg[0] == 'C') {
      int n = parse_int(arg.substr(1), s);
      return check_rank(n - 1, su_space(n));
    }
    if (head == "GO4" && !arg.empty() && arg[0] == 'R') {
      int n = parse_int(arg.substr(1), s);
      return check_rank(n / 2, spin_space(n));
    }
    if (head == "G1" && !arg.empty() && arg[0] == 'H') {
      int n = parse_int(arg.substr(1), s);
      return check_rank(n, sp_space(n));
    }
    if (head == "SU") {
      int n = parse_int(arg, s);
      return check_rank(n - 1, su_space(n));
    }
    if (head == "SPIN") {
      int n = parse_int(arg, s);
      return check_rank(n / 2, spin_space(n));
    }
    if (head == "SP") {
      int n = parse_int(arg, s);
      return check_rank(n, sp_space(n));
    }
    throw ConfigurationError("unknown space '" + raw + "'");
  }

  // family-rank tokens
  if (u.size() >= 2 && (u[0] == 'A' || u[0] == 'B' || u[0] == 'C' || u[0] == 'D' ||
                        u[0] == 'E' || u[0] == 'F' || u[0] == 'G')) {
    int rank = parse_int(u.substr(1), s);
    switch (u[0]) {
      case 'A': return check_rank(rank, su_space(rank + 1));
      case 'B': return check_rank(rank, spin_space(2 * rank + 1));
      case 'C': return check_rank(rank, sp_space(rank));
      case 'D': return check_rank(rank, spin_space(2 * rank));
      case 'E':
        if (rank == 6) return exceptional_space(Family::E6);
        if (rank == 7) return exceptional_space(Family::E7);
        if (rank == 8) return exceptional_space(Family::E8);
        throw ConfigurationError("E needs rank 6, 7 or 8");
      case 'F':
        if (rank == 4) return exceptional_space(Family::F4);
        throw ConfigurationError("F needs rank 4");
      case 'G':
        if (rank == 2) return exceptional_space(Family::G2);
        throw ConfigurationError("G needs rank 2");
    }
  }
  throw ConfigurationError("unknown space '" + raw + "'");
}

RootSystemType parse_type(const std::string& raw, int max_rank) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  std::string u = upper(s);
  if (u.size() >= 2 && u.find('(') == std::string::npos &&
      (u[0] == 'A' || u[0] == 'B' || u[0] == 'C' || u[0] == 'D')) {
    int rank = parse_int(u.substr(1), s);
    if (rank > max_rank)
      throw ConfigurationError("rank " + std::to_string(rank) + " exceeds the cap " +
                               std::to_string(max_rank) + "; raise it with --max-rank");
    switch (u[0]) {
      case 'A': return RootSystemType(Family::A, rank);
      case 'B': return RootSystemType(Family::B, rank);
      case 'C': return RootSystemType(Family::C, rank);
      default: return RootSystemType(Family::D, rank);
    }
  }
  if (u == "G2") return RootSystemType(Family::G2, 2);
  if (u == "F4") return RootSystemType(Family::F4, 4);
  if (u == "E6") return RootSystemType(Family::E6, 6);
  if (u == "E7") return RootSystemType(Family::E7, 7);
  if (u == "E8") return RootSystemType(Family::E8, 8);
  return parse_space(raw, max_rank).type;
}

std::vector<SpaceSpec> default_catalog() {
  std::vector<SpaceSpec> out;
  for (int r = 3; r <= 6; ++r) out.push_back(space_for_type(RootSystemType(Family::A, r)));
  for (int r = 3; r <= 5; ++r) out.push_back(space_for_type(RootSystemType(Family::B, r)));
  out.push_back(space_for_type(RootSystemType(Family::D, 4)));
  out.push_back(space_for_type(RootSystemType(Family::D, 5)));
  out.push_back(space_for_type(RootSystemType(Family::G2, 2)));
  out.push_back(space_for_type(RootSystemType(Family::F4, 4)));
  out.push_back(space_for_type(RootSystemType(Family::E6, 6)));
  out.push_back(space_for_type(RootSystemType(Family::E7, 7)));
  out.push_back(space_for_type(RootSystemType(Family::E8, 8)));
  return out;
}

}  // namespace wolfspace
