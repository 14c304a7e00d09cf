#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace qabacus {

using cplx = std::complex<double>;

/// Sparse complex operator. Column-major; every construction in the library
/// builds these from triplets, so entries are exact where the arithmetic is.
using Operator = Eigen::SparseMatrix<cplx, Eigen::ColMajor>;
using DenseMatrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Triplet = Eigen::Triplet<cplx>;

inline constexpr cplx kI{0.0, 1.0};

/// Raised when a construction would exceed the configured size budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Upper bound on the total number of stored nonzeros a single construction
/// may produce.
struct Budget {
  std::size_t max_nonzeros = std::size_t{1} << 20;

  void require(std::size_t nonzeros, const std::string& what) const;
};

Operator identity(Eigen::Index dim);
Operator kron(const Operator& a, const Operator& b);
Operator adjoint(const Operator& a);

/// AB - BA; throws std::invalid_argument on shape mismatch.
Operator commutator(const Operator& a, const Operator& b);
/// AB + BA; throws std::invalid_argument on shape mismatch.
Operator anticommutator(const Operator& a, const Operator& b);

/// Largest entry magnitude; 0 for an empty operator.
double max_abs(const Operator& a);
double max_abs(const DenseMatrix& a);
double max_abs_diff(const Operator& a, const Operator& b);

/// Dense 2x2 helper used by the Pauli constants and gate inputs.
Operator from_dense(const DenseMatrix& m);

bool is_unitary(const DenseMatrix& u, double tol);

/// Writes `a` in Matrix Market coordinate format ("complex general"),
/// 1-based indices, entries in column-major order, %.17g precision.
void write_matrix_market(std::ostream& os, const Operator& a);
void write_matrix_market(const std::string& path, const Operator& a);

/// Number of set bits; used for tensor-power indexing.
int popcount(std::size_t x);

/// Binomial coefficient as double (exact for the ranges used here).
double binomial(int n, int k);

/// sqrt(n!) computed directly up to n = 20 and through lgamma beyond.
double sqrt_factorial(int n);

}  // namespace qabacus
