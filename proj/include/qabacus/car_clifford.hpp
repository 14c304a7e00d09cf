#pragma once

#include <vector>

#include "qabacus/linalg.hpp"
#include "qabacus/report.hpp"

namespace qabacus::car {

struct PauliBasis {
  Operator x, y, z, id;
};

/// Standard Pauli matrices and the 2x2 identity.
PauliBasis pauli_basis();

/// Generators e_0..e_{n-1} of the complex Clifford algebra Cl(n),
/// each a 2^(n/2)-dimensional Hermitian unitary.
struct CliffordGenerators {
  int n = 0;
  std::vector<Operator> mats;

  Eigen::Index dim() const { return mats.empty() ? 0 : mats.front().rows(); }
};

/// Fermionic ladder operators on m modes, dimension 2^m.
///
/// Tensor slots are counted from the right: mode i lives in slot i, which is
/// bit i of the basis index.
struct FermionLadder {
  int modes = 0;
  std::vector<Operator> a;
  std::vector<Operator> a_dag;

  Eigen::Index dim() const { return a.empty() ? 0 : a.front().rows(); }
};

/// Builds Cl(n) by the recursion Cl(n+2) = Cl(n) (x) Cl(2):
///   e_i^{(n+2)} = e_i^{(n)} (x) sz,  e_n = 1 (x) sx,  e_{n+1} = 1 (x) sy.
/// Throws std::invalid_argument for odd or nonpositive n and BudgetExceeded
/// when n * 2^(n/2) stored entries exceed the budget.
CliffordGenerators clifford_generators(int n, const Budget& budget = {});

/// Pairs a = (e_{2l} + i e_{2l+1}) / 2 from Cl(2m).
///
/// The recursion places pair l in the tensor slot added at step l, which is
/// slot m-1-l from the right; the pair is therefore stored as mode m-1-l so
/// that mode index equals slot index, matching the Jordan-Wigner builder.
FermionLadder fermion_ladder_from_clifford(int n_modes,
                                           const Budget& budget = {});

/// a_i = 1 (x) ... (x) 1 (x) a (x) sz (x) ... (x) sz with i trailing sz
/// factors and m-i-1 leading identities.
FermionLadder fermion_ladder_jordan_wigner(int n_modes,
                                           const Budget& budget = {});

/// Checks {a_i,a_j} = 0, {a_i*,a_j*} = 0 and {a_i,a_j*} = delta_ij over all
/// index pairs. Relation names: "{a_i,a_j}", "{a*_i,a*_j}", "{a_i,a*_j}".
VerificationReport verify_car(const FermionLadder& ops, double tol);

/// Checks e_i e_j + e_j e_i = 2 delta_ij I for i <= j.
VerificationReport verify_clifford(const CliffordGenerators& gens, double tol);

/// Largest entrywise difference between two ladders of the same size.
double max_ladder_difference(const FermionLadder& lhs,
                             const FermionLadder& rhs);

/// Rank of the span of all 4^m monomials prod_i x_i with
/// x_i in {1, a_i, a_i*, a_i* a_i}. Equal to 4^m iff the ladder generates
/// the full matrix algebra. Dense; intended for m <= 3.
int monomial_span_rank(const FermionLadder& ops);

}  // namespace qabacus::car
