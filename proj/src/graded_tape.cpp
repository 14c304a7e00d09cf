#include "qabacus/graded_tape.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qabacus::tape {

GradedVector::GradedVector(int max_grade) : max_grade_(max_grade) {
  if (max_grade < 0 || max_grade > 30) {
    throw std::invalid_argument("GradedVector: max grade must be in 0..30");
  }
}

void GradedVector::set(int k, Vector component) {
  if (k < 0 || k > max_grade_) {
    throw std::out_of_range("GradedVector: grade " + std::to_string(k) +
                            " outside 0.." + std::to_string(max_grade_));
  }
  if (component.size() != (Eigen::Index{1} << k)) {
    throw std::invalid_argument("GradedVector: grade " + std::to_string(k) +
                                " component must have length 2^k");
  }
  components_[k] = std::move(component);
}

Vector GradedVector::component(int k) const {
  auto it = components_.find(k);
  if (it != components_.end()) return it->second;
  return Vector::Zero(Eigen::Index{1} << k);
}

int GradedVector::top_grade() const {
  return components_.empty() ? -1 : components_.rbegin()->first;
}

GradedVector GradedVector::basis_state(const std::string& bits, int max_grade) {
  GradedVector out(max_grade);
  const int k = static_cast<int>(bits.size());
  Eigen::Index idx = 0;
  for (char b : bits) {
    if (b != '0' && b != '1') {
      throw std::invalid_argument("basis_state: bitstring may contain only 0 and 1");
    }
    idx = (idx << 1) | (b == '1' ? 1 : 0);
  }
  Vector v = Vector::Zero(Eigen::Index{1} << k);
  v[idx] = 1.0;
  out.set(k, std::move(v));
  return out;
}

GradedVector append_blank(const GradedVector& psi) {
  if (psi.top_grade() >= psi.max_grade()) {
    throw BudgetExceeded("append_blank: top grade " + std::to_string(psi.top_grade()) +
                         " already at the grade cap");
  }
  GradedVector out(psi.max_grade());
  for (const auto& [k, v] : psi.components()) {
    Vector w = Vector::Zero(2 * v.size());
    for (Eigen::Index x = 0; x < v.size(); ++x) w[2 * x] = v[x];
    out.set(k + 1, std::move(w));
  }
  return out;
}

cplx graded_inner(const GradedVector& psi, const GradedVector& phi) {
  cplx s{0.0, 0.0};
  for (const auto& [k, v] : psi.components()) {
    auto it = phi.components().find(k);
    if (it != phi.components().end()) s += v.dot(it->second);
  }
  return s;
}

double graded_norm(const GradedVector& psi) {
  return std::sqrt(graded_inner(psi, psi).real());
}

AbacusVector symmetrize_tape(const GradedVector& psi, const Budget& budget) {
  AbacusVector out;
  out.max_grade = psi.max_grade();
  for (const auto& [k, v] : psi.components()) {
    const Operator embed = sym::embed_sym(k, budget);
    Vector coeffs = adjoint(embed) * v;
    out.components.emplace(k, sym::SymVector{k, sym::Flavor::tilde, std::move(coeffs)});
  }
  return out;
}

GradedVector embed_abacus(const AbacusVector& abacus, const Budget& budget) {
  GradedVector out(abacus.max_grade);
  for (const auto& [k, s] : abacus.components) {
    const auto t = sym::basis_convert(s, sym::Flavor::tilde);
    Vector v = sym::embed_sym(k, budget) * t.coeffs;
    out.set(k, std::move(v));
  }
  return out;
}

cplx abacus_inner(const AbacusVector& a, const AbacusVector& b,
                  sym::InnerProductKind kind) {
  cplx s{0.0, 0.0};
  for (const auto& [k, v] : a.components) {
    auto it = b.components.find(k);
    if (it != b.components.end()) s += sym::inner_product(v, it->second, kind);
  }
  return s;
}

GradedVector apply_gate(const GradedVector& psi, const DenseMatrix& gate,
                        int position, GatePolicy policy) {
  if (gate.rows() != gate.cols() || gate.rows() < 2 ||
      (gate.rows() & (gate.rows() - 1)) != 0) {
    throw std::invalid_argument("apply_gate: gate must be 2^r x 2^r with r >= 1");
  }
  if (!is_unitary(gate, 1e-10)) throw std::invalid_argument("apply_gate: gate is not unitary");
  if (position < 0) throw std::invalid_argument("apply_gate: negative position");
  int r = 0;
  while ((Eigen::Index{1} << r) < gate.rows()) ++r;

  GradedVector out(psi.max_grade());
  const Eigen::Index block = gate.rows();
  for (const auto& [k, v] : psi.components()) {
    if (position + r > k) {
      if (policy == GatePolicy::strict) {
        throw std::invalid_argument("apply_gate: grade " + std::to_string(k) +
                                    " too short for gate window");
      }
      out.set(k, v);
      continue;
    }
    const Eigen::Index low = Eigen::Index{1} << position;  // stride of slot `position`
    const Eigen::Index mask = (block - 1) * low;
    Vector w = v;
    Vector in(block);
    for (Eigen::Index base = 0; base < v.size(); ++base) {
      if (base & mask) continue;
      for (Eigen::Index g = 0; g < block; ++g) in[g] = v[base + g * low];
      Vector res = gate * in;
      for (Eigen::Index g = 0; g < block; ++g) w[base + g * low] = res[g];
    }
    out.set(k, std::move(w));
  }
  return out;
}

}  // namespace qabacus::tape
