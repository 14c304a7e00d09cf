#pragma once

#include <map>
#include <string>

#include "qabacus/linalg.hpp"
#include "qabacus/sym_space.hpp"

namespace qabacus::tape {

/// State in the direct sum of tensor powers T_0 + T_1 + ... + T_K of the
/// qubit space. Grade k holds a vector of length 2^k (grade 0 is a scalar);
/// absent grades are zero. Tensor slot 0 is the rightmost factor (bit 0).
class GradedVector {
 public:
  explicit GradedVector(int max_grade = sym::kMaxTensorGrade);

  int max_grade() const { return max_grade_; }
  const std::map<int, Vector>& components() const { return components_; }

  /// Sets grade k; throws on length != 2^k or k outside 0..max_grade.
  void set(int k, Vector component);
  /// Grade k component, or a zero vector of length 2^k if absent.
  Vector component(int k) const;
  bool has(int k) const { return components_.count(k) != 0; }
  /// Highest present grade, -1 when empty.
  int top_grade() const;

  /// Basis tensor for a bitstring; bits[0] is the leftmost factor.
  static GradedVector basis_state(const std::string& bits,
                                  int max_grade = sym::kMaxTensorGrade);

 private:
  int max_grade_;
  std::map<int, Vector> components_;
};

/// Symmetric part of a tape, one SymVector (e~ flavor) per grade.
struct AbacusVector {
  int max_grade = sym::kMaxTensorGrade;
  std::map<int, sym::SymVector> components;
};

/// Appends a |0> cell at the rightmost slot of every grade: psi_k -> psi_k (x) |0>
/// at grade k+1. Throws BudgetExceeded if the top grade is already max_grade.
GradedVector append_blank(const GradedVector& psi);

/// sum_k <psi_k, phi_k>, antilinear in the first argument.
cplx graded_inner(const GradedVector& psi, const GradedVector& phi);

double graded_norm(const GradedVector& psi);

/// Coordinates of each grade's symmetric part in the e~ basis
/// (embed_sym(k)^dagger psi_k).
AbacusVector symmetrize_tape(const GradedVector& psi, const Budget& budget = {});

/// Re-embeds an abacus state into the tape (embed_sym(k) per grade).
GradedVector embed_abacus(const AbacusVector& abacus, const Budget& budget = {});

/// Abacus inner product summed over grades with the chosen kind.
cplx abacus_inner(const AbacusVector& a, const AbacusVector& b,
                  sym::InnerProductKind kind = sym::InnerProductKind::standard);

enum class GatePolicy { skip_short_grades, strict };

/// Applies 1 (x) .. (x) G (x) 1^{(x) position} to each grade, with G acting on
/// slots position .. position+r-1 (G's own first factor leftmost). Grades with
/// k < position + r are left unchanged under skip_short_grades and raise
/// std::invalid_argument under strict. G must be unitary to 1e-10.
GradedVector apply_gate(const GradedVector& psi, const DenseMatrix& gate,
                        int position,
                        GatePolicy policy = GatePolicy::skip_short_grades);

}  // namespace qabacus::tape
