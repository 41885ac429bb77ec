#include "wolfspace/json_io.hpp"

namespace wolfspace {

Json root_system_json(const RootSystem& rs) {
  Json j;
  j["type"] = family_name(rs.type().family);
  j["rank"] = rs.rank();
  j["cartan_matrix"] = rs.cartan_matrix();
  Json roots = Json::array();
  for (const Root& r : rs.roots()) roots.push_back(r.coeffs);
  j["roots"] = roots;
  return j;
}

Json structure_constants_json(const LieAlgebra& alg) {
  const RootSystem& rs = alg.roots();
  Json j;
  j["type"] = family_name(rs.type().family);
  j["rank"] = rs.rank();
  Json list = Json::array();
  for (const auto& [pair, n] : alg.constants().entries()) {
    Json e;
    e["alpha"] = rs.roots()[pair.first].coeffs;
    e["gamma"] = rs.roots()[pair.second].coeffs;
    e["n"] = n;
    list.push_back(e);
  }
  j["constants"] = list;
  return j;
}

Json report_json(const VerificationReport& rep) {
  Json j;
  j["space"] = rep.space;
  j["group"] = rep.group;
  j["dims"] = {{"dim_M", rep.dim_M},
               {"dim_N", rep.dim_N},
               {"dim_Hp", rep.dim_Hp},
               {"dim_Kp", rep.dim_Kp}};
  j["expected"] = {{"dim_M", rep.expected_dim_M}, {"dim_Hp", rep.expected_dim_Hp}};
  j["beta"] = rep.beta.coeffs;
  j["delta"] = rep.delta.coeffs;
  Json verdicts;
  for (const auto& [name, ok] : rep.verdicts) verdicts[name] = ok;
  j["verdicts"] = verdicts;
  j["witnesses"] = rep.witnesses;
  j["ok"] = rep.all_ok();
  return j;
}

}  // namespace wolfspace
