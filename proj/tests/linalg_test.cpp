#include "qabacus/linalg.hpp"

#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qabacus/random.hpp"

using namespace qabacus;

TEST(Kron, MatchesDenseOracle) {
  random::Engine rng(1);
  DenseMatrix a(2, 3), b(3, 2);
  for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = random::gaussian(rng);
  for (Eigen::Index i = 0; i < b.size(); ++i) b(i) = random::gaussian(rng);
  EXPECT_EQ(DenseMatrix(kron(from_dense(a), from_dense(b))), oracle::dense_kron(a, b));
}

TEST(Anticommutator, ShapeMismatch) {
  EXPECT_THROW(anticommutator(identity(2), identity(4)), std::invalid_argument);
  EXPECT_EQ(max_abs_diff(anticommutator(identity(3), identity(3)), Operator(cplx(2.0) * identity(3))),
            0.0);
}

TEST(IsUnitary, Detects) {
  random::Engine rng(2);
  EXPECT_TRUE(is_unitary(random::unitary2(rng), 1e-12));
  EXPECT_FALSE(is_unitary(DenseMatrix::Ones(2, 2), 1e-12));
  EXPECT_FALSE(is_unitary(DenseMatrix::Identity(2, 3), 1e-12));
}

TEST(Budget, Require) {
  const Budget b{10};
  EXPECT_NO_THROW(b.require(10, "x"));
  EXPECT_THROW(b.require(11, "x"), BudgetExceeded);
}

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(4, 2), 6.0);
  EXPECT_EQ(binomial(20, 10), 184756.0);
  EXPECT_EQ(binomial(3, 5), 0.0);
  EXPECT_EQ(popcount(0b1011u), 3);
}

TEST(SqrtFactorial, AgreesWithProduct) {
  for (int n = 0; n <= 25; ++n) {
    EXPECT_NEAR(sqrt_factorial(n), std::sqrt(oracle::factorial(n)), 1e-13 * std::sqrt(oracle::factorial(n)));
  }
}

TEST(MatrixMarket, Format) {
  DenseMatrix m = DenseMatrix::Zero(2, 2);
  m(1, 0) = cplx(0.5, -1.0);
  std::ostringstream out;
  write_matrix_market(out, from_dense(m));
  EXPECT_EQ(out.str(),
            "%%MatrixMarket matrix coordinate complex general\n"
            "2 2 1\n"
            "2 1 0.5 -1\n");
}
