#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wolfspace/root_system.hpp"

namespace wolfspace {

// One of the admissible compact quaternionic Kahler symmetric spaces, with
// its classical dimension data for table checks.
struct SpaceSpec {
  std::string display_name;  // "G2(C5)", "Go4(R9)", "G", "FI", "EII", "EVI", "EIX"
  RootSystemType type;
  int expected_dim_M = 0;
  int expected_dim_Hp = 0;
  std::string hp_name;  // e.g. "Sp(3)/U(3)"
  std::string kp_name;  // e.g. "(S^2 x Sp(3)/U(3))/Z2"
};

// Accepts family-rank tokens ("A4", "B3", "C5", ...), group names ("SU(6)",
// "Spin(9)", "Sp(4)"), and the classical space names ("G2(C6)", "Go4(R8)",
// "G", "FI", "EII", "EVI", "EIX"). Enforces the rank bounds of the space
// list; classical families are capped at rank max_rank.
SpaceSpec parse_space(const std::string& name, int max_rank = 8);

// A3..A6, B3..B5, D4, D5, G2, F4, E6, E7, E8 in that order.
std::vector<SpaceSpec> default_catalog();

// Bare root-system type for the dump subcommands: accepts every valid
// family-rank token (including ones below the space bounds) as well as the
// space names understood by parse_space.
RootSystemType parse_type(const std::string& name, int max_rank = 8);

// Spec for a bare root-system type; C types are accepted here and fail later
// with NoDeltaError when the pipeline runs.
SpaceSpec space_for_type(RootSystemType type);

}  // namespace wolfspace
