#include "qabacus/fock_ccr.hpp"

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace qabacus;
using namespace qabacus::fock;

namespace {

Vector basis_vec(const OccupationBasis& b, const std::vector<int>& occ) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(b.size()));
  v[static_cast<Eigen::Index>(b.index(occ))] = 1.0;
  return v;
}

Operator inverse_diag(const Operator& s) {
  Operator inv = s;
  for (Eigen::Index c = 0; c < inv.outerSize(); ++c)
    for (Operator::InnerIterator it(inv, c); it; ++it) it.valueRef() = 1.0 / it.value();
  return inv;
}

}  // namespace

TEST(OccupationBasis, LexicographicModeZeroSlowest) {
  const OccupationBasis b({2, 3});
  EXPECT_EQ(b.size(), 16u);
  EXPECT_EQ(b.index({0, 0}), 0u);
  EXPECT_EQ(b.index({0, 1}), 1u);
  EXPECT_EQ(b.index({1, 0}), 4u);
  EXPECT_EQ(b.occupations(7), (std::vector<int>{1, 3}));
}

TEST(OccupationBasis, IndexMapIsBijective) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 4);
    const int n_max = 1 + static_cast<int>(rng() % 4);
    const OccupationBasis b({m, n_max});
    for (std::size_t i = 0; i < b.size(); ++i) ASSERT_EQ(b.index(b.occupations(i)), i);
  }
  const OccupationBasis b({2, 2});
  EXPECT_THROW(b.index({3, 0}), std::out_of_range);
  EXPECT_THROW(b.index({0}), std::invalid_argument);
}

TEST(FockCutoff, Validation) {
  EXPECT_THROW(boson_ladder({0, 3}), std::invalid_argument);
  EXPECT_THROW(boson_ladder({1, 0}), std::invalid_argument);
  EXPECT_THROW(boson_ladder({6, 15}, Budget{1000}), BudgetExceeded);
}

TEST(BosonLadder, SingleModeAction) {
  const auto l = boson_ladder({1, 4});
  const Vector out = l.c[0] * basis_vec(l.basis, {3});
  EXPECT_EQ(out, std::sqrt(3.0) * basis_vec(l.basis, {2}));
  EXPECT_EQ(Vector(l.c[0] * basis_vec(l.basis, {0})).norm(), 0.0);
  EXPECT_EQ(Vector(l.c_dag[0] * basis_vec(l.basis, {4})).norm(), 0.0);  // truncation
}

TEST(BosonLadder, TwoModeAbacusAction) {
  const auto l = boson_ladder({2, 3});
  const Vector s = basis_vec(l.basis, {2, 3});
  EXPECT_EQ(Vector(l.c[0] * s), std::sqrt(2.0) * basis_vec(l.basis, {1, 3}));
  EXPECT_EQ(Vector(l.c_dag[0] * s), std::sqrt(3.0) * basis_vec(l.basis, {3, 3}));
}

TEST(BosonLadder, AdjointConsistencyAndSparsity) {
  const auto l = boson_ladder({2, 4});
  for (int i = 0; i < 2; ++i) {
    EXPECT_EQ(max_abs_diff(adjoint(l.c[i]), l.c_dag[i]), 0.0);
    for (Eigen::Index col = 0; col < l.c[i].outerSize(); ++col) {
      EXPECT_LE(l.c[i].col(col).nonZeros(), 4);
    }
  }
}

TEST(Commutator, PauliAndSelf) {
  DenseMatrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, -kI, kI, 0;
  z << 1, 0, 0, -1;
  EXPECT_EQ(DenseMatrix(commutator(from_dense(x), from_dense(y))), 2.0 * kI * z);
  const auto l = boson_ladder({1, 3});
  EXPECT_EQ(max_abs(commutator(l.c[0], l.c[0])), 0.0);
  EXPECT_THROW(commutator(identity(2), identity(3)), std::invalid_argument);
}

TEST(Commutator, TruncatedDefectAtTop) {
  // Oracle: dense formula for c, products done densely.
  const int n_max = 5;
  const DenseMatrix c = oracle::dense_lowering(n_max);
  const DenseMatrix oracle_comm = c * c.adjoint() - c.adjoint() * c;
  Eigen::VectorXcd expected(6);
  expected << 1, 1, 1, 1, 1, -5;
  EXPECT_LE(max_abs(DenseMatrix(oracle_comm - DenseMatrix(expected.asDiagonal()))), 1e-12);

  const auto l = boson_ladder({1, n_max});
  EXPECT_LE(max_abs(DenseMatrix(DenseMatrix(commutator(l.c[0], l.c_dag[0])) - oracle_comm)), 1e-12);
}

TEST(VerifyCcr, SingleModeInteriorIdentityAndBoundary) {
  const auto l = boson_ladder({1, 6});
  const auto rep = verify_ccr(l, 1e-12);
  EXPECT_TRUE(rep.pass());
  const Operator comm = commutator(l.c[0], l.c_dag[0]);
  EXPECT_NEAR(comm.coeff(6, 6).real(), -6.0, 1e-12);
  for (int n = 0; n < 6; ++n) EXPECT_NEAR(comm.coeff(n, n).real(), 1.0, 1e-12);
}

TEST(VerifyCcr, TraceVanishesForAnyCutoff) {
  for (auto [m, n_max] : {std::pair{1, 2}, std::pair{1, 9}, std::pair{2, 3}, std::pair{3, 2}}) {
    const auto rep = verify_ccr(boson_ladder({m, n_max}), 1e-12);
    EXPECT_LE(rep.max_deviation("tr[c_i,c*_j]"), 1e-12);
    EXPECT_TRUE(rep.pass());
  }
}

TEST(VerifyCcr, CrossModesCommuteExactly) {
  const auto l = boson_ladder({2, 3});
  EXPECT_EQ(max_abs(commutator(l.c[0], l.c_dag[1])), 0.0);
  const auto rep = verify_ccr(l, 1e-12);
  EXPECT_LE(rep.max_deviation("[c_i,c_j]"), 1e-15);
  EXPECT_LE(rep.max_deviation("[c*_i,c*_j]"), 1e-15);
}

TEST(VerifyCcr, FullIdentityFailsSomewhere) {
  // The unrestricted identity [c,c*] = I is impossible in finite dimension.
  for (int n_max : {1, 4, 10}) {
    const auto l = boson_ladder({1, n_max});
    const Operator defect = commutator(l.c[0], l.c_dag[0]) - identity(n_max + 1);
    EXPECT_NEAR(max_abs(defect), n_max + 1.0, 1e-12);
  }
}

TEST(PositionDerivative, MonomialAction) {
  const auto pd = position_derivative_rep(4);
  EXPECT_EQ(pd.d.coeff(2, 3), cplx(3.0));  // D x^3 = 3 x^2
  EXPECT_EQ(pd.x.coeff(1, 0), cplx(1.0));  // X x^0 = x^1
  EXPECT_EQ(pd.x.col(4).nonZeros(), 0);    // X x^n_max = 0
  const Operator dx = commutator(pd.d, pd.x);
  for (int n = 0; n < 4; ++n) EXPECT_EQ(dx.coeff(n, n), cplx(1.0));
  EXPECT_THROW(position_derivative_rep(0), std::invalid_argument);
}

TEST(Intertwiner, DiagonalFactorials) {
  const Operator s = intertwiner(2);
  EXPECT_EQ(s.coeff(0, 0), cplx(1.0));
  EXPECT_EQ(s.coeff(1, 1), cplx(1.0));
  EXPECT_NEAR(s.coeff(2, 2).real(), std::sqrt(2.0), 1e-15);
  EXPECT_THROW(intertwiner(21), BudgetExceeded);
}

TEST(Intertwiner, ConjugatesLadderToDifferentialPair) {
  for (int n_max = 1; n_max <= 20; ++n_max) {
    const auto l = boson_ladder({1, n_max});
    const auto pd = position_derivative_rep(n_max);
    const Operator s = intertwiner(n_max);
    const Operator s_inv = inverse_diag(s);
    EXPECT_LE(max_abs_diff(s_inv * l.c[0] * s, pd.d), 1e-12 * std::max(1, n_max)) << n_max;
    EXPECT_LE(max_abs_diff(s_inv * l.c_dag[0] * s, pd.x), 1e-12) << n_max;
  }
  // n = 3 column at n_max = 5: S^-1 c S x^3 = 3 x^2.
  const auto l = boson_ladder({1, 5});
  const Operator s = intertwiner(5);
  const Operator conj = inverse_diag(s) * l.c[0] * s;
  EXPECT_NEAR(conj.coeff(2, 3).real(), 3.0, 1e-12);
  EXPECT_NEAR(Operator(inverse_diag(s) * l.c_dag[0] * s).coeff(3, 2).real(), 1.0, 1e-12);
}

TEST(MultimodeDiffLadder, SingleModeCcrBelowCutoff) {
  const auto l = multimode_diff_ladder({1, 6});
  const auto rep = verify_ccr(l, 1e-12);
  EXPECT_TRUE(rep.pass());
  const Operator comm = commutator(l.c[0], l.c_dag[0]);
  EXPECT_NEAR(comm.coeff(6, 6).real(), -6.0, 1e-12);
}

TEST(MultimodeDiffLadder, DisjointVariablesCommute) {
  const auto l = multimode_diff_ladder({2, 3});
  EXPECT_EQ(max_abs(commutator(l.c[0], l.c[1])), 0.0);
}

TEST(MultimodeDiffLadder, TridiagonalStructure) {
  const auto l = multimode_diff_ladder({1, 4});
  for (Eigen::Index c = 0; c < l.c[0].outerSize(); ++c) {
    for (Operator::InnerIterator it(l.c[0], c); it; ++it) {
      EXPECT_EQ(std::abs(it.row() - it.col()), 1);
    }
  }
}

TEST(MultimodeDiffLadder, CommutatorTableMatchesBosonLadder) {
  const FockCutoff cutoff{2, 4};
  const auto boson = boson_ladder(cutoff);
  const auto diff = multimode_diff_ladder(cutoff);
  const Operator p = interior_projector(boson.basis);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Operator a = p * commutator(boson.c[i], boson.c_dag[j]) * p;
      const Operator b = p * commutator(diff.c[i], diff.c_dag[j]) * p;
      EXPECT_LE(max_abs_diff(a, b), 1e-10);
    }
  }
}

TEST(NumberOperator, DiagonalOccupations) {
  const auto l = boson_ladder({1, 3});
  const Operator n = number_operator(l, 0);
  for (int k = 0; k <= 3; ++k) EXPECT_NEAR(n.coeff(k, k).real(), k, 1e-15);
  EXPECT_NEAR(Operator(n).diagonal().sum().real(), 6.0, 1e-14);

  const auto l2 = boson_ladder({2, 5});
  const Vector s = basis_vec(l2.basis, {2, 5});
  EXPECT_LE((number_operator(l2, 0) * s - 2.0 * s).norm(), 1e-14);
  EXPECT_THROW(number_operator(l2, 2), std::out_of_range);
}
