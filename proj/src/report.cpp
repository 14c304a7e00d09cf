#include "qabacus/report.hpp"

#include <algorithm>

namespace qabacus {

void VerificationReport::add(std::string relation, int i, int j,
                             double deviation) {
  checks.push_back({std::move(relation), i, j, deviation, deviation <= tol});
}

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const RelationCheck& c) { return c.pass; });
}

double VerificationReport::max_deviation(const std::string& relation) const {
  double m = 0.0;
  for (const auto& c : checks) {
    if (c.relation == relation) m = std::max(m, c.max_abs_deviation);
  }
  return m;
}

nlohmann::json to_json(const RelationCheck& c) {
  return {{"relation", c.relation},
          {"i", c.i},
          {"j", c.j},
          {"max_abs_deviation", c.max_abs_deviation},
          {"pass", c.pass}};
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"subject", r.subject},
          {"tol", r.tol},
          {"pass", r.pass()},
          {"checks", std::move(checks)}};
}

}  // namespace qabacus
