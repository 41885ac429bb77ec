#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "wolfspace/catalog.hpp"
#include "wolfspace/errors.hpp"
#include "wolfspace/g2_model.hpp"
#include "wolfspace/json_io.hpp"
#include "wolfspace/wolf.hpp"

namespace {

using namespace wolfspace;

constexpr int kExitVerdictFailed = 1;
constexpr int kExitBadInput = 2;

void write_output(const Json& j, const std::string& path, bool pretty) {
  std::string text = pretty ? j.dump(2) : j.dump();
  if (path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(path);
    out << text << "\n";
  }
}

int cmd_verify(const std::vector<std::string>& names, bool all, const std::string& json_path,
               bool pretty, unsigned seed, int max_rank) {
  std::vector<SpaceSpec> specs;
  try {
    if (all || names.empty()) {
      specs = default_catalog();
    } else {
      for (const auto& n : names) specs.push_back(parse_space(n, max_rank));
    }
  } catch (const ConfigurationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  Json out = Json::array();
  bool all_ok = true;
  for (const SpaceSpec& spec : specs) {
    try {
      VerificationReport rep = full_report(spec);
      // sampled engine identities for the big exceptional types; rank <= 4
      // types get the exhaustive sweep in the test suite instead
      if (spec.type.family == Family::E6 || spec.type.family == Family::E7 ||
          spec.type.family == Family::E8) {
        LieAlgebra alg(RootSystem::build(spec.type));
        EngineCheck ec = check_engine_properties(alg, 2000, seed);
        rep.verdicts.emplace_back("engine_sampled",
                                  ec.antisymmetry && ec.jacobi && ec.tau_closure &&
                                      ec.ad_invariance && ec.quaternionic);
      }
      all_ok = all_ok && rep.all_ok();
      out.push_back(report_json(rep));
      std::cerr << (rep.all_ok() ? "[ok]   " : "[FAIL] ") << rep.space << " (" << rep.group
                << ")\n";
    } catch (const NoDeltaError& e) {
      std::cerr << "error: " << spec.display_name << ": " << e.what() << "\n";
      return kExitBadInput;
    } catch (const ConfigurationError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitBadInput;
    }
  }
  write_output(out, json_path, pretty);
  return all_ok ? 0 : kExitVerdictFailed;
}

int cmd_tables(const std::string& json_path, bool pretty, int max_rank) {
  (void)max_rank;
  bool all_match = true;
  Json rows = Json::array();
  std::printf("%-12s %-6s %8s %8s %8s %8s %8s  %s\n", "space", "G", "dim M", "want", "dim N",
              "dim Hp", "want", "H(p)");
  for (const SpaceSpec& spec : default_catalog()) {
    VerificationReport rep = full_report(spec);
    bool match = rep.dim_M == spec.expected_dim_M && rep.dim_Hp == spec.expected_dim_Hp &&
                 2 * rep.dim_N == rep.dim_M && rep.dim_Kp == rep.dim_Hp + 2;
    all_match = all_match && match && rep.all_ok();
    std::printf("%-12s %-6s %8d %8d %8d %8d %8d  %s%s\n", rep.space.c_str(),
                rep.group.c_str(), rep.dim_M, spec.expected_dim_M, rep.dim_N, rep.dim_Hp,
                spec.expected_dim_Hp, spec.hp_name.c_str(), match ? "" : "   <-- MISMATCH");
    Json row;
    row["space"] = rep.space;
    row["group"] = rep.group;
    row["dim_M"] = rep.dim_M;
    row["dim_M_expected"] = spec.expected_dim_M;
    row["dim_N"] = rep.dim_N;
    row["dim_Hp"] = rep.dim_Hp;
    row["dim_Hp_expected"] = spec.expected_dim_Hp;
    row["dim_Kp"] = rep.dim_Kp;
    row["Hp"] = spec.hp_name;
    row["Kp"] = spec.kp_name;
    row["match"] = match;
    rows.push_back(row);
  }
  if (!json_path.empty()) write_output(rows, json_path, pretty);
  return all_match ? 0 : kExitVerdictFailed;
}

std::string plane_str(const g2::Mat7& m) {
  if (m.is_zero()) return "0";
  for (int i = 1; i <= 7; ++i) {
    try {
      auto c = g2::v_coords(i, m);
      return "V" + std::to_string(i) + "(" + c[0].str() + "," + c[1].str() + "," +
             c[2].str() + ")";
    } catch (const std::invalid_argument&) {
    }
  }
  return m.str();
}

int cmd_g2_check(const std::string& json_path, bool pretty, bool emit_sff,
                 bool emit_brackets) {
  auto closure = g2::verify_g2_closure();
  auto root_data = g2::verify_root_data();
  auto table = g2::verify_bracket_table();
  auto ntg = g2::verify_not_totally_geodesic();
  auto cross = g2::cross_validate_with_abstract();

  if (emit_brackets) {
    auto render = [](const g2::BracketIdentity& id) {
      auto ventry = [](const g2::VEntry& e) {
        return "V" + std::to_string(e.i) + "(" + std::to_string(e.c[0]) + "," +
               std::to_string(e.c[1]) + "," + std::to_string(e.c[2]) + ")";
      };
      std::cout << "[" << ventry(id.left) << ", " << ventry(id.right)
                << "] = " << ventry(id.result) << "\n";
    };
    for (const auto& id : g2::tangent_bracket_table()) render(id);
    for (const auto& id : g2::golden_bracket_table()) render(id);
  }

  Json sff = Json::array();
  bool sff_nonzero = false;
  for (const auto& e : g2::second_fundamental_form_table()) {
    Json row;
    row["x"] = "V" + std::to_string(e.xi + 1) + "(2,-1,-1)";
    row["y"] = "V" + std::to_string(e.yi + 1) + "(2,-1,-1)";
    row["value"] = plane_str(e.value);
    if (!e.value.is_zero()) sff_nonzero = true;
    sff.push_back(row);
    if (emit_sff)
      std::cout << "h(" << row["x"].get<std::string>() << ", " << row["y"].get<std::string>()
                << ") = " << plane_str(e.value) << "\n";
  }

  Json j;
  j["closure"] = closure.ok;
  j["root_data"] = root_data.ok;
  j["bracket_table_match"] = table.ok;
  j["sff_values"] = sff;
  j["not_totally_geodesic"] = ntg.ok && sff_nonzero;
  j["cross_model"] = cross.ok;
  Json witnesses = Json::array();
  for (const auto* r : {&closure, &root_data, &table, &ntg, &cross})
    for (const auto& w : r->witnesses) witnesses.push_back(w);
  j["witnesses"] = witnesses;
  write_output(j, json_path, pretty);
  bool ok = closure.ok && root_data.ok && table.ok && ntg.ok && cross.ok;
  if (!ok)
    for (const auto& w : witnesses) std::cerr << "witness: " << w.get<std::string>() << "\n";
  return ok ? 0 : kExitVerdictFailed;
}

int cmd_dump_roots(const std::string& name, const std::string& json_path, bool pretty,
                   int max_rank) {
  try {
    RootSystem rs = RootSystem::build(parse_type(name, max_rank));
    write_output(root_system_json(rs), json_path, pretty);
    return 0;
  } catch (const ConfigurationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}

int cmd_dump_constants(const std::string& name, const std::string& json_path, bool pretty,
                       int max_rank) {
  try {
    LieAlgebra alg(RootSystem::build(parse_type(name, max_rank)));
    write_output(structure_constants_json(alg), json_path, pretty);
    return 0;
  } catch (const ConfigurationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of the submanifold construction on quaternionic "
               "Kahler symmetric spaces"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string json_path;
  bool pretty = false;
  unsigned seed = 2024;
  int max_rank = 8;
  app.add_option("--json", json_path, "write the report to this path instead of stdout");
  app.add_flag("--pretty", pretty, "pretty-print JSON output");
  app.add_option("--seed", seed, "seed for the sampled engine identities on E types");
  app.add_option("--max-rank", max_rank, "rank cap for the classical families");

  auto* verify = app.add_subcommand("verify", "run the lemma suite for spaces");
  std::vector<std::string> spaces;
  bool all = false;
  verify->add_option("spaces", spaces, "space names (G2(C6), Spin(9), FI, EIX, A4, ...)");
  verify->add_option("--space", spaces, "space name (repeatable)");
  verify->add_flag("--all", all, "verify the whole default catalog");

  auto* tables = app.add_subcommand("tables", "print the dimension tables and check them");

  auto* g2check = app.add_subcommand("g2-check", "run the so(7) model verifications");
  bool emit_sff = false, emit_brackets = false;
  g2check->add_flag("--emit-sff", emit_sff, "print the second-fundamental-form values");
  g2check->add_flag("--emit-brackets", emit_brackets, "print the model bracket table");

  auto* dump_roots = app.add_subcommand("dump-roots", "emit a root system as JSON");
  std::string dump_name;
  dump_roots->add_option("space", dump_name, "space or type name")->required();

  auto* dump_constants =
      app.add_subcommand("dump-constants", "emit structure constants as JSON");
  std::string dump_c_name;
  dump_constants->add_option("space", dump_c_name, "space or type name")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(spaces, all, json_path, pretty, seed, max_rank);
    if (tables->parsed()) return cmd_tables(json_path, pretty, max_rank);
    if (g2check->parsed()) return cmd_g2_check(json_path, pretty, emit_sff, emit_brackets);
    if (dump_roots->parsed()) return cmd_dump_roots(dump_name, json_path, pretty, max_rank);
    if (dump_constants->parsed())
      return cmd_dump_constants(dump_c_name, json_path, pretty, max_rank);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return 0;
}
