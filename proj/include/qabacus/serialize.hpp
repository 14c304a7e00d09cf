#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "qabacus/graded_tape.hpp"
#include "qabacus/oscillator.hpp"
#include "qabacus/stellar.hpp"
#include "qabacus/sym_space.hpp"

// JSON layouts:
//   SymVector          {"k", "flavor": "e"|"tilde", "re": [...], "im": [...]}
//   StarConfiguration  {"k", "scale_re", "scale_im",
//                       "stars": [{"alpha": [re, im], "beta": [re, im]}, ...]}
//   GradedVector       {"K", "grades": [{"k", "re": [...], "im": [...]}, ...]}
//   degeneracy table   [{"n", "E", "multiplicity", "truncation_flag"}, ...]
namespace qabacus::io {

nlohmann::json to_json(const sym::SymVector& v);
sym::SymVector sym_vector_from_json(const nlohmann::json& j);

nlohmann::json to_json(const stellar::StarConfiguration& cfg);
stellar::StarConfiguration star_configuration_from_json(const nlohmann::json& j);

nlohmann::json to_json(const tape::GradedVector& psi);
tape::GradedVector graded_vector_from_json(const nlohmann::json& j);

nlohmann::json to_json(const tape::AbacusVector& a);

nlohmann::json to_json(const std::vector<oscillator::DegeneracyLevel>& table);

}  // namespace qabacus::io
