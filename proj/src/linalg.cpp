#include "qabacus/linalg.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <vector>

namespace qabacus {

void Budget::require(std::size_t nonzeros, const std::string& what) const {
  if (nonzeros > max_nonzeros) {
    throw BudgetExceeded(what + ": " + std::to_string(nonzeros) +
                         " nonzeros exceeds budget of " +
                         std::to_string(max_nonzeros));
  }
}

Operator identity(Eigen::Index dim) {
  Operator id(dim, dim);
  id.setIdentity();
  return id;
}

Operator kron(const Operator& a, const Operator& b) {
  Operator out(a.rows() * b.rows(), a.cols() * b.cols());
  std::vector<Triplet> trips;
  trips.reserve(static_cast<std::size_t>(a.nonZeros() * b.nonZeros()));
  for (Eigen::Index ca = 0; ca < a.outerSize(); ++ca) {
    for (Operator::InnerIterator ia(a, ca); ia; ++ia) {
      for (Eigen::Index cb = 0; cb < b.outerSize(); ++cb) {
        for (Operator::InnerIterator ib(b, cb); ib; ++ib) {
          trips.emplace_back(ia.row() * b.rows() + ib.row(),
                             ia.col() * b.cols() + ib.col(),
                             ia.value() * ib.value());
        }
      }
    }
  }
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

Operator adjoint(const Operator& a) { return Operator(a.adjoint()); }

namespace {
void require_conformable(const Operator& a, const Operator& b,
                         const char* what) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw std::invalid_argument(std::string(what) +
                                ": operators must be square of equal size");
  }
}
}  // namespace

Operator commutator(const Operator& a, const Operator& b) {
  require_conformable(a, b, "commutator");
  Operator ab = a * b;
  Operator ba = b * a;
  Operator out = ab - ba;
  return out;
}

Operator anticommutator(const Operator& a, const Operator& b) {
  require_conformable(a, b, "anticommutator");
  Operator ab = a * b;
  Operator ba = b * a;
  Operator out = ab + ba;
  return out;
}

double max_abs(const Operator& a) {
  double m = 0.0;
  for (Eigen::Index c = 0; c < a.outerSize(); ++c) {
    for (Operator::InnerIterator it(a, c); it; ++it) {
      m = std::max(m, std::abs(it.value()));
    }
  }
  return m;
}

double max_abs(const DenseMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

double max_abs_diff(const Operator& a, const Operator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  Operator d = a - b;
  return max_abs(d);
}

Operator from_dense(const DenseMatrix& m) { return m.sparseView(0.0, 0.0); }

bool is_unitary(const DenseMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  DenseMatrix d = u.adjoint() * u - DenseMatrix::Identity(u.rows(), u.cols());
  return max_abs(d) <= tol;
}

void write_matrix_market(std::ostream& os, const Operator& a) {
  os << "%%MatrixMarket matrix coordinate complex general\n";
  os << a.rows() << ' ' << a.cols() << ' ' << a.nonZeros() << '\n';
  char buf[96];
  for (Eigen::Index c = 0; c < a.outerSize(); ++c) {
    for (Operator::InnerIterator it(a, c); it; ++it) {
      std::snprintf(buf, sizeof(buf), "%.17g %.17g", it.value().real(),
                    it.value().imag());
      os << it.row() + 1 << ' ' << it.col() + 1 << ' ' << buf << '\n';
    }
  }
}

void write_matrix_market(const std::string& path, const Operator& a) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_matrix_market(out, a);
}

int popcount(std::size_t x) { return std::popcount(x); }

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

double sqrt_factorial(int n) {
  if (n < 0) throw std::invalid_argument("sqrt_factorial: negative argument");
  if (n <= 20) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return std::sqrt(f);
  }
  return std::exp(0.5 * std::lgamma(static_cast<double>(n) + 1.0));
}

}  // namespace qabacus
