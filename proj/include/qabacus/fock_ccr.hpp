#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qabacus/linalg.hpp"
#include "qabacus/report.hpp"

namespace qabacus::fock {

/// Per-mode box truncation: each occupation number runs over 0..n_max.
struct FockCutoff {
  int modes = 1;
  int n_max = 1;

  std::size_t dim() const;
  void validate() const;
};

/// Occupation tuples (n_0, ..., n_{m-1}) in lexicographic order, mode 0
/// slowest. Index is the base-(n_max+1) number with n_0 as the leading digit.
class OccupationBasis {
 public:
  explicit OccupationBasis(FockCutoff cutoff);

  const FockCutoff& cutoff() const { return cutoff_; }
  std::size_t size() const { return size_; }

  std::size_t index(const std::vector<int>& occupations) const;
  std::vector<int> occupations(std::size_t index) const;
  int occupation(std::size_t index, int mode) const;

  /// Stride of mode `mode` in the flat index.
  std::size_t stride(int mode) const { return strides_[mode]; }

  /// True iff every n_k <= n_max - 1.
  bool interior(std::size_t index) const;

 private:
  FockCutoff cutoff_;
  std::size_t size_;
  std::vector<std::size_t> strides_;
};

struct BosonLadder {
  OccupationBasis basis;
  std::vector<Operator> c;
  std::vector<Operator> c_dag;

  int modes() const { return basis.cutoff().modes; }
};

/// c_i|..n_i..> = sqrt(n_i)|..n_i-1..>, c_i*|..n_i..> = sqrt(n_i+1)|..n_i+1..>,
/// with c_i* annihilating states where n_i = n_max.
BosonLadder boson_ladder(const FockCutoff& cutoff, const Budget& budget = {});

/// c_i* c_i; diagonal with the occupation of `mode`.
Operator number_operator(const BosonLadder& ops, int mode);

/// Projector onto the basis states with every occupation below n_max.
Operator interior_projector(const OccupationBasis& basis);

/// Verifies the truncated CCR structure:
///   "[c_i,c_j]" and "[c*_i,c*_j]"      exact zero,
///   "[c_i,c*_j]|interior"               delta_ij I on the interior block,
///   "tr[c_i,c*_j]"                      trace of each commutator is zero.
VerificationReport verify_ccr(const BosonLadder& ops, double tol);

/// Position and derivative operators on the monomial basis {x^0..x^n_max}:
/// D x^n = n x^(n-1), X x^n = x^(n+1), X x^n_max = 0.
struct PositionDerivative {
  Operator x;
  Operator d;
};
PositionDerivative position_derivative_rep(int n_max);

/// S = diag(sqrt(0!), ..., sqrt(n_max!)) mapping monomial coordinates to
/// occupation coordinates: S^-1 c S = D and S^-1 c* S = X.
/// Limited to n_max <= 20 (BudgetExceeded beyond).
Operator intertwiner(int n_max);

/// c_i = (X_i + D_i)/sqrt(2), c_i* = (X_i - D_i)/sqrt(2) on the multimode
/// monomial basis, same indexing as OccupationBasis.
BosonLadder multimode_diff_ladder(const FockCutoff& cutoff,
                                  const Budget& budget = {});

}  // namespace qabacus::fock
