#pragma once

#include "qabacus/linalg.hpp"

namespace qabacus::sym {

/// Basis flavor within a grade: `e` is the monomial basis e_{i,j} ~ xi^i eta^j,
/// `tilde` is the orthonormal basis e~_{i,j} = e_{i,j} / sqrt(i! j!).
enum class Flavor { e, tilde };

enum class InnerProductKind { standard, exp };

/// Element of Sy_k(H2). coeffs[i] is the amplitude on the basis element with
/// i "0" factors and k-i "1" factors (xi^i eta^(k-i)).
struct SymVector {
  int k = 0;
  Flavor flavor = Flavor::tilde;
  Vector coeffs;

  static SymVector basis(int k, int i, Flavor flavor = Flavor::tilde);
};

/// Largest grade for which tensor-power constructions (2^k dimensional) are
/// attempted.
inline constexpr int kMaxTensorGrade = 16;

int sym_dim(int k);

/// sqrt(i! (k-i)!): the e -> e~ coefficient scale for index i of grade k.
double tilde_scale(int k, int i);

/// Projector (1/k!) sum_sigma sigma on the 2^k tensor power. Entries are
/// 1/C(k,w) between bitstrings of equal weight w.
Operator symmetrizer(int k, const Budget& budget = {});

/// Isometry Sy_k (e~ basis) -> tensor power: column i is the normalized sum
/// of all bitstrings with i zeros.
Operator embed_sym(int k, const Budget& budget = {});

std::complex<double> inner_product(const SymVector& a, const SymVector& b,
                                   InnerProductKind kind = InnerProductKind::standard);

SymVector basis_convert(const SymVector& v, Flavor to);

/// Representation of U on Sy_k in the e~ basis, computed from the
/// substitution xi -> U00 xi + U10 eta, eta -> U01 xi + U11 eta.
/// Throws std::invalid_argument unless U is 2x2 unitary to 1e-12.
DenseMatrix su2_induced(const DenseMatrix& u, int k);

/// Same representation computed as embed^dagger U^{(x)k} embed through the
/// tensor power (k <= kMaxTensorGrade).
DenseMatrix su2_induced_tensor(const DenseMatrix& u, int k,
                               const Budget& budget = {});

/// Applies U^{(x)k} to a vector of length 2^k without forming the matrix.
Vector apply_tensor_power(const DenseMatrix& u, int k, const Vector& v);

/// Two-mode ladder between neighbouring grades in the e~ basis.
/// c0, c1: Sy_k -> Sy_{k-1} ((k) x (k+1)); c0_dag, c1_dag: Sy_k -> Sy_{k+1}
/// ((k+2) x (k+1)). At k = 0 the lowering maps are 0 x 1.
struct SymLadder {
  Operator c0, c1, c0_dag, c1_dag;
};
SymLadder sym_ladder(int k);

/// Rewrites a grade map Sy_from -> Sy_to given in e~ coordinates in the
/// e-basis coordinates.
Operator to_e_flavor(const Operator& tilde_map, int k_from, int k_to);

/// d/d(chi_var) on e-basis coefficients of grade k (chi_0 = xi, chi_1 = eta).
Operator poly_derivative(int k, int var);
/// Multiplication by chi_var on e-basis coefficients of grade k.
Operator poly_multiply(int k, int var);

}  // namespace qabacus::sym
