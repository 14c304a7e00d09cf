#include "qabacus/car_clifford.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace qabacus;
using namespace qabacus::car;

namespace {

DenseMatrix dense(const Operator& op) { return DenseMatrix(op); }

DenseMatrix mat2(cplx a, cplx b, cplx c, cplx d) {
  DenseMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST(PauliBasis, StandardMatrices) {
  const auto p = pauli_basis();
  EXPECT_EQ(dense(p.x), mat2(0, 1, 1, 0));
  EXPECT_EQ(dense(p.z), mat2(1, 0, 0, -1));
  EXPECT_EQ(dense(p.id), mat2(1, 0, 0, 1));
  EXPECT_EQ(dense(p.x) * dense(p.y), kI * dense(p.z));
}

TEST(CliffordGenerators, BaseCaseIsSigmaXSigmaY) {
  const auto g = clifford_generators(2);
  const auto p = pauli_basis();
  ASSERT_EQ(g.mats.size(), 2u);
  EXPECT_EQ(dense(g.mats[0]), dense(p.x));
  EXPECT_EQ(dense(g.mats[1]), dense(p.y));
  EXPECT_EQ(max_abs(anticommutator(g.mats[0], g.mats[1])), 0.0);
  EXPECT_EQ(dense(Operator(g.mats[0] * g.mats[0])), DenseMatrix::Identity(2, 2));
}

TEST(CliffordGenerators, FourGeneratorsAllPairs) {
  const auto g = clifford_generators(4);
  ASSERT_EQ(g.mats.size(), 4u);
  EXPECT_EQ(g.dim(), 4);
  int pairs = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j, ++pairs) {
      DenseMatrix ac = dense(g.mats[i]) * dense(g.mats[j]) + dense(g.mats[j]) * dense(g.mats[i]);
      DenseMatrix expected = (i == j ? 2.0 : 0.0) * DenseMatrix::Identity(4, 4);
      EXPECT_LE(max_abs(DenseMatrix(ac - expected)), 1e-12) << i << "," << j;
    }
  }
  EXPECT_EQ(pairs, 10);
}

TEST(CliffordGenerators, HermitianUnitaryUpToSixteen) {
  for (int n = 2; n <= 16; n += 2) {
    const auto g = clifford_generators(n);
    EXPECT_EQ(g.dim(), Eigen::Index{1} << (n / 2));
    for (const auto& e : g.mats) {
      EXPECT_EQ(max_abs_diff(adjoint(e), e), 0.0);
    }
    EXPECT_TRUE(verify_clifford(g, 1e-12).pass()) << "n=" << n;
  }
}

TEST(CliffordGenerators, RejectsOddAndNonpositive) {
  EXPECT_THROW(clifford_generators(3), std::invalid_argument);
  EXPECT_THROW(clifford_generators(0), std::invalid_argument);
  EXPECT_THROW(clifford_generators(-2), std::invalid_argument);
}

TEST(CliffordGenerators, BudgetExceeded) {
  Budget tight{100};
  EXPECT_THROW(clifford_generators(8, tight), BudgetExceeded);
  EXPECT_NO_THROW(clifford_generators(6, tight));  // 6 * 8 = 48 entries
}

TEST(FermionLadder, SingleModeMatrices) {
  const auto l = fermion_ladder_from_clifford(1);
  EXPECT_EQ(dense(l.a[0]), mat2(0, 1, 0, 0));
  EXPECT_EQ(dense(l.a_dag[0]), mat2(0, 0, 1, 0));
  EXPECT_EQ(dense(anticommutator(l.a[0], l.a_dag[0])), DenseMatrix::Identity(2, 2));
  EXPECT_EQ(max_ladder_difference(l, fermion_ladder_jordan_wigner(1)), 0.0);
}

TEST(FermionLadder, JordanWignerTwoModes) {
  const auto l = fermion_ladder_jordan_wigner(2);
  const DenseMatrix a = mat2(0, 1, 0, 0);
  const DenseMatrix z = mat2(1, 0, 0, -1);
  EXPECT_EQ(dense(l.a[1]), oracle::dense_kron(a, z));
  EXPECT_EQ(dense(l.a[0]), oracle::dense_kron(DenseMatrix::Identity(2, 2), a));
}

TEST(FermionLadder, CrossModeAnticommutatorVanishesAtThreeModes) {
  const auto l = fermion_ladder_from_clifford(3);
  ASSERT_EQ(l.dim(), 8);
  EXPECT_EQ(max_abs(anticommutator(l.a[0], l.a_dag[2])), 0.0);
}

TEST(FermionLadder, BuildersAgreeEntrywise) {
  for (int m = 1; m <= 8; ++m) {
    const auto cl = fermion_ladder_from_clifford(m);
    const auto jw = fermion_ladder_jordan_wigner(m);
    EXPECT_LE(max_ladder_difference(cl, jw), 1e-12) << "m=" << m;
  }
}

TEST(FermionLadder, DaggerIsExactAdjoint) {
  for (int m = 1; m <= 5; ++m) {
    for (const auto& l : {fermion_ladder_from_clifford(m), fermion_ladder_jordan_wigner(m)}) {
      for (int i = 0; i < m; ++i) EXPECT_EQ(max_abs_diff(adjoint(l.a[i]), l.a_dag[i]), 0.0);
    }
  }
}

TEST(FermionLadder, RejectsNonpositiveModes) {
  EXPECT_THROW(fermion_ladder_jordan_wigner(0), std::invalid_argument);
  EXPECT_THROW(fermion_ladder_from_clifford(-1), std::invalid_argument);
  EXPECT_THROW(fermion_ladder_jordan_wigner(12, Budget{1000}), BudgetExceeded);
}

TEST(VerifyCar, SingleModeExact) {
  const auto rep = verify_car(fermion_ladder_jordan_wigner(1), 1e-12);
  EXPECT_TRUE(rep.pass());
  for (const auto& c : rep.checks) EXPECT_EQ(c.max_abs_deviation, 0.0);
}

TEST(VerifyCar, ThreeModesAllRelations) {
  const auto rep = verify_car(fermion_ladder_from_clifford(3), 1e-12);
  EXPECT_EQ(rep.checks.size(), 27u);
  EXPECT_TRUE(rep.pass());
}

TEST(VerifyCar, DetectsBrokenLadder) {
  auto l = fermion_ladder_jordan_wigner(2);
  l.a[0] = kron(identity(2), pauli_basis().x);
  const auto rep = verify_car(l, 1e-12);
  EXPECT_FALSE(rep.pass());
  EXPECT_NEAR(rep.max_deviation("{a_i,a_j}"), 2.0, 1e-15);  // {sx, sx} = 2
}

TEST(VerifyCar, ReportJsonSchema) {
  const auto j = to_json(verify_car(fermion_ladder_jordan_wigner(1), 1e-12));
  ASSERT_TRUE(j["checks"].is_array());
  const auto& c = j["checks"][0];
  for (const char* key : {"relation", "i", "j", "max_abs_deviation", "pass"}) {
    EXPECT_TRUE(c.contains(key)) << key;
  }
}

TEST(FermionLadder, MonomialsSpanFullMatrixAlgebra) {
  for (int m = 1; m <= 3; ++m) {
    EXPECT_EQ(monomial_span_rank(fermion_ladder_jordan_wigner(m)), 1 << (2 * m)) << "m=" << m;
  }
}
