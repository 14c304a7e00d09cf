#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "qabacus/report.hpp"

namespace qabacus {

/// Runs a desk-scale verification of every module. Randomized checks draw
/// from a generator seeded with `seed`, so the result is reproducible.
std::vector<VerificationReport> verify_all(std::uint64_t seed, double tol = 1e-12);

nlohmann::json verify_all_json(std::uint64_t seed, double tol = 1e-12);

}  // namespace qabacus
