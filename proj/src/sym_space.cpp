#include "qabacus/sym_space.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace qabacus::sym {

namespace {

void require_grade(int k, int min_k, const char* what) {
  if (k < min_k) {
    throw std::invalid_argument(std::string(what) + ": grade " +
                                std::to_string(k) + " below " +
                                std::to_string(min_k));
  }
}

void require_tensor_grade(int k, const Budget& budget, std::size_t nonzeros,
                          const char* what) {
  if (k > kMaxTensorGrade) {
    throw BudgetExceeded(std::string(what) + ": grade " + std::to_string(k) +
                         " exceeds tensor grade cap " +
                         std::to_string(kMaxTensorGrade));
  }
  budget.require(nonzeros, what);
}

cplx ipow(cplx z, int n) {
  cplx r{1.0, 0.0};
  for (int i = 0; i < n; ++i) r *= z;
  return r;
}

Operator scale_diag(int k, bool inverse) {
  const Eigen::Index n = k + 1;
  std::vector<Triplet> trips;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double s = tilde_scale(k, static_cast<int>(i));
    trips.emplace_back(i, i, inverse ? 1.0 / s : s);
  }
  Operator d(n, n);
  d.setFromTriplets(trips.begin(), trips.end());
  return d;
}

}  // namespace

SymVector SymVector::basis(int k, int i, Flavor flavor) {
  require_grade(k, 0, "SymVector::basis");
  if (i < 0 || i > k) throw std::out_of_range("SymVector::basis: index out of range");
  SymVector v{k, flavor, Vector::Zero(k + 1)};
  v.coeffs[i] = 1.0;
  return v;
}

int sym_dim(int k) {
  require_grade(k, 0, "sym_dim");
  return k + 1;
}

double tilde_scale(int k, int i) { return sqrt_factorial(i) * sqrt_factorial(k - i); }

Operator symmetrizer(int k, const Budget& budget) {
  require_grade(k, 1, "symmetrizer");
  // sum_w C(k,w)^2 = C(2k,k) stored entries.
  require_tensor_grade(k, budget,
                       static_cast<std::size_t>(binomial(2 * k, k)), "symmetrizer");
  const std::size_t dim = std::size_t{1} << k;
  std::vector<std::vector<Eigen::Index>> by_weight(k + 1);
  for (std::size_t x = 0; x < dim; ++x) {
    by_weight[popcount(x)].push_back(static_cast<Eigen::Index>(x));
  }
  std::vector<Triplet> trips;
  trips.reserve(static_cast<std::size_t>(binomial(2 * k, k)));
  for (int w = 0; w <= k; ++w) {
    const double v = 1.0 / binomial(k, w);
    for (Eigen::Index r : by_weight[w]) {
      for (Eigen::Index c : by_weight[w]) trips.emplace_back(r, c, v);
    }
  }
  Operator p(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  p.setFromTriplets(trips.begin(), trips.end());
  return p;
}

Operator embed_sym(int k, const Budget& budget) {
  require_grade(k, 0, "embed_sym");
  require_tensor_grade(k, budget, std::size_t{1} << k, "embed_sym");
  const std::size_t dim = std::size_t{1} << k;
  std::vector<Triplet> trips;
  trips.reserve(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    const int zeros = k - popcount(x);
    trips.emplace_back(static_cast<Eigen::Index>(x), zeros,
                       1.0 / std::sqrt(binomial(k, zeros)));
  }
  Operator e(static_cast<Eigen::Index>(dim), k + 1);
  e.setFromTriplets(trips.begin(), trips.end());
  return e;
}

SymVector basis_convert(const SymVector& v, Flavor to) {
  if (v.flavor == to) return v;
  SymVector out{v.k, to, v.coeffs};
  for (int i = 0; i <= v.k; ++i) {
    const double s = tilde_scale(v.k, i);
    out.coeffs[i] = (to == Flavor::tilde) ? v.coeffs[i] * s : v.coeffs[i] / s;
  }
  return out;
}

std::complex<double> inner_product(const SymVector& a, const SymVector& b,
                                   InnerProductKind kind) {
  if (a.coeffs.size() != a.k + 1 || b.coeffs.size() != b.k + 1) {
    throw std::invalid_argument("inner_product: coefficient count does not match grade");
  }
  if (a.k != b.k) return {0.0, 0.0};
  const auto ta = basis_convert(a, Flavor::tilde);
  const auto tb = basis_convert(b, Flavor::tilde);
  cplx s = ta.coeffs.dot(tb.coeffs);  // conjugates the first argument
  if (kind == InnerProductKind::exp) s /= std::tgamma(a.k + 1.0);
  return s;
}

DenseMatrix su2_induced(const DenseMatrix& u, int k) {
  if (u.rows() != 2 || u.cols() != 2 || !is_unitary(u, 1e-12)) {
    throw std::invalid_argument("su2_induced: U must be a 2x2 unitary");
  }
  require_grade(k, 0, "su2_induced");
  const int n = k + 1;
  DenseMatrix d = DenseMatrix::Zero(n, n);
  // e_{i,j} -> (u00 xi + u10 eta)^i (u01 xi + u11 eta)^j; pick p xi's from the
  // first factor and q = i' - p from the second.
  for (int i = 0; i <= k; ++i) {
    const int j = k - i;
    for (int ip = 0; ip <= k; ++ip) {
      cplx acc{0.0, 0.0};
      for (int p = std::max(0, ip - j); p <= std::min(i, ip); ++p) {
        const int q = ip - p;
        acc += binomial(i, p) * binomial(j, q) * ipow(u(0, 0), p) *
               ipow(u(1, 0), i - p) * ipow(u(0, 1), q) * ipow(u(1, 1), j - q);
      }
      d(ip, i) = acc * (tilde_scale(k, ip) / tilde_scale(k, i));
    }
  }
  return d;
}

Vector apply_tensor_power(const DenseMatrix& u, int k, const Vector& v) {
  const Eigen::Index dim = Eigen::Index{1} << k;
  if (v.size() != dim) throw std::invalid_argument("apply_tensor_power: length must be 2^k");
  Vector out = v;
  for (int slot = 0; slot < k; ++slot) {
    const Eigen::Index bit = Eigen::Index{1} << slot;
    for (Eigen::Index x = 0; x < dim; ++x) {
      if (x & bit) continue;
      const cplx x0 = out[x];
      const cplx x1 = out[x | bit];
      out[x] = u(0, 0) * x0 + u(0, 1) * x1;
      out[x | bit] = u(1, 0) * x0 + u(1, 1) * x1;
    }
  }
  return out;
}

DenseMatrix su2_induced_tensor(const DenseMatrix& u, int k,
                               const Budget& budget) {
  if (u.rows() != 2 || u.cols() != 2 || !is_unitary(u, 1e-12)) {
    throw std::invalid_argument("su2_induced_tensor: U must be a 2x2 unitary");
  }
  require_grade(k, 1, "su2_induced_tensor");
  const Operator embed = embed_sym(k, budget);
  const Operator embed_dag = adjoint(embed);
  DenseMatrix d(k + 1, k + 1);
  for (int i = 0; i <= k; ++i) {
    Vector col = Vector(embed.col(i));
    d.col(i) = embed_dag * apply_tensor_power(u, k, col);
  }
  return d;
}

SymLadder sym_ladder(int k) {
  require_grade(k, 0, "sym_ladder");
  std::vector<Triplet> c0, c1, c0d, c1d;
  for (int i = 0; i <= k; ++i) {
    const int j = k - i;
    if (i > 0) c0.emplace_back(i - 1, i, std::sqrt(static_cast<double>(i)));
    if (j > 0) c1.emplace_back(i, i, std::sqrt(static_cast<double>(j)));
    c0d.emplace_back(i + 1, i, std::sqrt(static_cast<double>(i + 1)));
    c1d.emplace_back(i, i, std::sqrt(static_cast<double>(j + 1)));
  }
  SymLadder out{Operator(k, k + 1), Operator(k, k + 1), Operator(k + 2, k + 1),
                Operator(k + 2, k + 1)};
  out.c0.setFromTriplets(c0.begin(), c0.end());
  out.c1.setFromTriplets(c1.begin(), c1.end());
  out.c0_dag.setFromTriplets(c0d.begin(), c0d.end());
  out.c1_dag.setFromTriplets(c1d.begin(), c1d.end());
  return out;
}

Operator to_e_flavor(const Operator& tilde_map, int k_from, int k_to) {
  if (tilde_map.cols() != k_from + 1 || tilde_map.rows() != k_to + 1) {
    throw std::invalid_argument("to_e_flavor: map shape does not match grades");
  }
  if (k_to < 0) return tilde_map;
  Operator out = scale_diag(k_to, true) * tilde_map * scale_diag(k_from, false);
  return out;
}

Operator poly_derivative(int k, int var) {
  require_grade(k, 0, "poly_derivative");
  if (var != 0 && var != 1) throw std::invalid_argument("poly_derivative: var must be 0 or 1");
  std::vector<Triplet> trips;
  for (int i = 0; i <= k; ++i) {
    const int j = k - i;
    if (var == 0 && i > 0) trips.emplace_back(i - 1, i, static_cast<double>(i));
    if (var == 1 && j > 0) trips.emplace_back(i, i, static_cast<double>(j));
  }
  Operator d(k, k + 1);
  d.setFromTriplets(trips.begin(), trips.end());
  return d;
}

Operator poly_multiply(int k, int var) {
  require_grade(k, 0, "poly_multiply");
  if (var != 0 && var != 1) throw std::invalid_argument("poly_multiply: var must be 0 or 1");
  std::vector<Triplet> trips;
  for (int i = 0; i <= k; ++i) trips.emplace_back(var == 0 ? i + 1 : i, i, 1.0);
  Operator m(k + 2, k + 1);
  m.setFromTriplets(trips.begin(), trips.end());
  return m;
}

}  // namespace qabacus::sym
