#include "qabacus/fock_ccr.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qabacus::fock {

std::size_t FockCutoff::dim() const {
  std::size_t d = 1;
  for (int i = 0; i < modes; ++i) {
    if (d > std::numeric_limits<std::size_t>::max() /
                static_cast<std::size_t>(n_max + 1)) {
      throw BudgetExceeded("FockCutoff: dimension overflows");
    }
    d *= static_cast<std::size_t>(n_max + 1);
  }
  return d;
}

void FockCutoff::validate() const {
  if (modes < 1) throw std::invalid_argument("FockCutoff: modes must be >= 1");
  if (n_max < 1) throw std::invalid_argument("FockCutoff: n_max must be >= 1");
}

OccupationBasis::OccupationBasis(FockCutoff cutoff) : cutoff_(cutoff) {
  cutoff_.validate();
  size_ = cutoff_.dim();
  strides_.assign(cutoff_.modes, 1);
  for (int m = cutoff_.modes - 2; m >= 0; --m) {
    strides_[m] = strides_[m + 1] * static_cast<std::size_t>(cutoff_.n_max + 1);
  }
}

std::size_t OccupationBasis::index(const std::vector<int>& occ) const {
  if (static_cast<int>(occ.size()) != cutoff_.modes) {
    throw std::invalid_argument("OccupationBasis::index: wrong tuple length");
  }
  std::size_t idx = 0;
  for (int m = 0; m < cutoff_.modes; ++m) {
    if (occ[m] < 0 || occ[m] > cutoff_.n_max) {
      throw std::out_of_range("OccupationBasis::index: occupation out of range");
    }
    idx += static_cast<std::size_t>(occ[m]) * strides_[m];
  }
  return idx;
}

std::vector<int> OccupationBasis::occupations(std::size_t idx) const {
  if (idx >= size_) throw std::out_of_range("OccupationBasis: index out of range");
  std::vector<int> occ(cutoff_.modes);
  for (int m = 0; m < cutoff_.modes; ++m) occ[m] = occupation(idx, m);
  return occ;
}

int OccupationBasis::occupation(std::size_t idx, int mode) const {
  return static_cast<int>((idx / strides_[mode]) %
                          static_cast<std::size_t>(cutoff_.n_max + 1));
}

bool OccupationBasis::interior(std::size_t idx) const {
  for (int m = 0; m < cutoff_.modes; ++m) {
    if (occupation(idx, m) >= cutoff_.n_max) return false;
  }
  return true;
}

namespace {

// Per-mode lowering/raising built from a per-occupation amplitude table:
// lower[n] multiplies |n> -> |n-1>, raise[n] multiplies |n> -> |n+1>.
std::pair<Operator, Operator> mode_pair(const OccupationBasis& basis, int mode,
                                        const std::vector<double>& lower,
                                        const std::vector<double>& raise) {
  const auto n = static_cast<Eigen::Index>(basis.size());
  const auto stride = static_cast<Eigen::Index>(basis.stride(mode));
  const int n_max = basis.cutoff().n_max;
  std::vector<Triplet> lo, hi;
  lo.reserve(basis.size());
  hi.reserve(basis.size());
  for (Eigen::Index col = 0; col < n; ++col) {
    const int occ = basis.occupation(static_cast<std::size_t>(col), mode);
    if (occ > 0 && lower[occ] != 0.0) lo.emplace_back(col - stride, col, lower[occ]);
    if (occ < n_max && raise[occ] != 0.0) hi.emplace_back(col + stride, col, raise[occ]);
  }
  Operator c(n, n), c_dag(n, n);
  c.setFromTriplets(lo.begin(), lo.end());
  c_dag.setFromTriplets(hi.begin(), hi.end());
  return {std::move(c), std::move(c_dag)};
}

void require_budget(const FockCutoff& cutoff, const Budget& budget,
                    const char* what) {
  cutoff.validate();
  const std::size_t dim = cutoff.dim();
  budget.require(2 * static_cast<std::size_t>(cutoff.modes) * dim, what);
}

}  // namespace

BosonLadder boson_ladder(const FockCutoff& cutoff, const Budget& budget) {
  require_budget(cutoff, budget, "boson_ladder");
  BosonLadder out{OccupationBasis(cutoff), {}, {}};
  std::vector<double> lower(cutoff.n_max + 1), raise(cutoff.n_max + 1);
  for (int n = 0; n <= cutoff.n_max; ++n) {
    lower[n] = std::sqrt(static_cast<double>(n));
    raise[n] = std::sqrt(static_cast<double>(n + 1));
  }
  for (int m = 0; m < cutoff.modes; ++m) {
    auto [c, c_dag] = mode_pair(out.basis, m, lower, raise);
    out.c.push_back(std::move(c));
    out.c_dag.push_back(std::move(c_dag));
  }
  return out;
}

Operator number_operator(const BosonLadder& ops, int mode) {
  if (mode < 0 || mode >= ops.modes()) {
    throw std::out_of_range("number_operator: mode " + std::to_string(mode) +
                            " out of range");
  }
  Operator n = ops.c_dag[mode] * ops.c[mode];
  return n;
}

Operator interior_projector(const OccupationBasis& basis) {
  const auto n = static_cast<Eigen::Index>(basis.size());
  std::vector<Triplet> trips;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (basis.interior(static_cast<std::size_t>(i))) trips.emplace_back(i, i, 1.0);
  }
  Operator p(n, n);
  p.setFromTriplets(trips.begin(), trips.end());
  return p;
}

VerificationReport verify_ccr(const BosonLadder& ops, double tol) {
  VerificationReport rep;
  rep.subject = "ccr";
  rep.tol = tol;
  const Operator p = interior_projector(ops.basis);
  const Operator id = identity(static_cast<Eigen::Index>(ops.basis.size()));
  for (int i = 0; i < ops.modes(); ++i) {
    for (int j = 0; j < ops.modes(); ++j) {
      rep.add("[c_i,c_j]", i, j, max_abs(commutator(ops.c[i], ops.c[j])));
      rep.add("[c*_i,c*_j]", i, j,
              max_abs(commutator(ops.c_dag[i], ops.c_dag[j])));
      const Operator mixed = commutator(ops.c[i], ops.c_dag[j]);
      Operator defect = mixed;
      if (i == j) defect -= id;
      Operator restricted = p * defect * p;
      rep.add("[c_i,c*_j]|interior", i, j, max_abs(restricted));
      rep.add("tr[c_i,c*_j]", i, j, std::abs(Operator(mixed).diagonal().sum()));
    }
  }
  return rep;
}

PositionDerivative position_derivative_rep(int n_max) {
  if (n_max < 1) throw std::invalid_argument("position_derivative_rep: n_max must be >= 1");
  const Eigen::Index n = n_max + 1;
  std::vector<Triplet> xs, ds;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (k + 1 < n) xs.emplace_back(k + 1, k, 1.0);
    if (k > 0) ds.emplace_back(k - 1, k, static_cast<double>(k));
  }
  PositionDerivative out{Operator(n, n), Operator(n, n)};
  out.x.setFromTriplets(xs.begin(), xs.end());
  out.d.setFromTriplets(ds.begin(), ds.end());
  return out;
}

Operator intertwiner(int n_max) {
  if (n_max < 1) throw std::invalid_argument("intertwiner: n_max must be >= 1");
  if (n_max > 20) {
    throw BudgetExceeded("intertwiner: n_max > 20 overflows direct factorial scaling");
  }
  const Eigen::Index n = n_max + 1;
  std::vector<Triplet> trips;
  for (Eigen::Index k = 0; k < n; ++k) {
    trips.emplace_back(k, k, sqrt_factorial(static_cast<int>(k)));
  }
  Operator s(n, n);
  s.setFromTriplets(trips.begin(), trips.end());
  return s;
}

BosonLadder multimode_diff_ladder(const FockCutoff& cutoff,
                                  const Budget& budget) {
  require_budget(cutoff, budget, "multimode_diff_ladder");
  BosonLadder out{OccupationBasis(cutoff), {}, {}};
  // Per-mode derivative (lowers, factor n) and multiplication (raises, 1).
  std::vector<double> deriv(cutoff.n_max + 1), mult(cutoff.n_max + 1, 1.0);
  for (int n = 0; n <= cutoff.n_max; ++n) deriv[n] = static_cast<double>(n);
  const double r = 1.0 / std::sqrt(2.0);
  for (int m = 0; m < cutoff.modes; ++m) {
    auto [d, x] = mode_pair(out.basis, m, deriv, mult);
    Operator c = r * (x + d);
    Operator c_dag = r * (x - d);
    out.c.push_back(std::move(c));
    out.c_dag.push_back(std::move(c_dag));
  }
  return out;
}

}  // namespace qabacus::fock
