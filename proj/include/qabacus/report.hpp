#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace qabacus {

/// One checked relation family instance, e.g. {a_i, a_j*} at (i, j).
struct RelationCheck {
  std::string relation;
  int i = -1;
  int j = -1;
  double max_abs_deviation = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::string subject;
  double tol = 0.0;
  std::vector<RelationCheck> checks;

  void add(std::string relation, int i, int j, double deviation);
  bool pass() const;
  /// Largest deviation among checks whose relation name matches.
  double max_deviation(const std::string& relation) const;
};

nlohmann::json to_json(const RelationCheck& c);
nlohmann::json to_json(const VerificationReport& r);

}  // namespace qabacus
