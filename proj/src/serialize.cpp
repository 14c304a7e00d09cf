#include "qabacus/serialize.hpp"

#include <stdexcept>

namespace qabacus::io {

using nlohmann::json;

namespace {

json split_re(const Vector& v) {
  json re = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) re.push_back(v[i].real());
  return re;
}

json split_im(const Vector& v) {
  json im = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) im.push_back(v[i].imag());
  return im;
}

Vector join(const json& re, const json& im) {
  if (!re.is_array() || !im.is_array() || re.size() != im.size()) {
    throw std::invalid_argument("re/im arrays missing or of different length");
  }
  Vector v(static_cast<Eigen::Index>(re.size()));
  for (std::size_t i = 0; i < re.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] = cplx(re[i].get<double>(), im[i].get<double>());
  }
  return v;
}

json pair(cplx z) { return json::array({z.real(), z.imag()}); }

cplx unpair(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

json to_json(const sym::SymVector& v) {
  return {{"k", v.k},
          {"flavor", v.flavor == sym::Flavor::e ? "e" : "tilde"},
          {"re", split_re(v.coeffs)},
          {"im", split_im(v.coeffs)}};
}

sym::SymVector sym_vector_from_json(const json& j) {
  sym::SymVector v;
  v.k = j.at("k").get<int>();
  const auto flavor = j.value("flavor", std::string("tilde"));
  if (flavor == "e") {
    v.flavor = sym::Flavor::e;
  } else if (flavor == "tilde") {
    v.flavor = sym::Flavor::tilde;
  } else {
    throw std::invalid_argument("unknown flavor '" + flavor + "'");
  }
  v.coeffs = join(j.at("re"), j.at("im"));
  if (v.coeffs.size() != v.k + 1) throw std::invalid_argument("SymVector: need k+1 coefficients");
  return v;
}

json to_json(const stellar::StarConfiguration& cfg) {
  json stars = json::array();
  for (const auto& s : cfg.stars) stars.push_back({{"alpha", pair(s.alpha)}, {"beta", pair(s.beta)}});
  return {{"k", cfg.k()},
          {"scale_re", cfg.scale.real()},
          {"scale_im", cfg.scale.imag()},
          {"stars", std::move(stars)}};
}

stellar::StarConfiguration star_configuration_from_json(const json& j) {
  stellar::StarConfiguration cfg;
  cfg.scale = {j.at("scale_re").get<double>(), j.value("scale_im", 0.0)};
  for (const auto& s : j.at("stars")) {
    cfg.stars.push_back(stellar::StellarPoint::canonical(unpair(s.at("alpha")), unpair(s.at("beta"))));
  }
  if (j.contains("k") && j.at("k").get<int>() != cfg.k()) {
    throw std::invalid_argument("StarConfiguration: k does not match the number of stars");
  }
  return cfg;
}

json to_json(const tape::GradedVector& psi) {
  json grades = json::array();
  for (const auto& [k, v] : psi.components()) {
    grades.push_back({{"k", k}, {"re", split_re(v)}, {"im", split_im(v)}});
  }
  return {{"K", psi.max_grade()}, {"grades", std::move(grades)}};
}

tape::GradedVector graded_vector_from_json(const json& j) {
  tape::GradedVector psi(j.at("K").get<int>());
  for (const auto& g : j.at("grades")) psi.set(g.at("k").get<int>(), join(g.at("re"), g.at("im")));
  return psi;
}

json to_json(const tape::AbacusVector& a) {
  json grades = json::array();
  for (const auto& [k, v] : a.components) grades.push_back(to_json(v));
  return {{"K", a.max_grade}, {"grades", std::move(grades)}};
}

json to_json(const std::vector<oscillator::DegeneracyLevel>& table) {
  json out = json::array();
  for (const auto& l : table) {
    out.push_back({{"n", l.n},
                   {"E", l.energy},
                   {"multiplicity", l.multiplicity},
                   {"truncation_flag", l.truncated}});
  }
  return out;
}

}  // namespace qabacus::io
