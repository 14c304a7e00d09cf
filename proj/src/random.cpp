#include "qabacus/random.hpp"

#include <cmath>

namespace qabacus::random {

cplx gaussian(Engine& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

Vector gaussian_vector(Engine& rng, Eigen::Index n) {
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = gaussian(rng);
  return v;
}

DenseMatrix unitary2(Engine& rng) {
  DenseMatrix g(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g(i, j) = gaussian(rng);
  Eigen::HouseholderQR<DenseMatrix> qr(g);
  DenseMatrix q = qr.householderQ();
  const DenseMatrix r = qr.matrixQR();
  for (int j = 0; j < 2; ++j) {
    const cplx d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

stellar::StellarPoint sphere_point(Engine& rng) {
  // A normalized complex Gaussian pair is uniform on the sphere.
  const cplx a = gaussian(rng);
  const cplx b = gaussian(rng);
  return stellar::StellarPoint::canonical(a, b);
}

std::vector<stellar::StellarPoint> separated_stars(Engine& rng, int k,
                                                   double min_separation) {
  std::vector<stellar::StellarPoint> stars;
  while (static_cast<int>(stars.size()) < k) {
    const auto p = sphere_point(rng);
    bool ok = true;
    for (const auto& q : stars) ok = ok && stellar::chordal_distance(p, q) >= min_separation;
    if (ok) stars.push_back(p);
  }
  return stars;
}

tape::GradedVector graded_vector(Engine& rng, int top_grade, int max_grade) {
  tape::GradedVector psi(max_grade);
  std::bernoulli_distribution present(0.5);
  for (int k = 0; k <= top_grade; ++k) {
    if (present(rng)) psi.set(k, gaussian_vector(rng, Eigen::Index{1} << k));
  }
  if (psi.components().empty()) {
    std::uniform_int_distribution<int> pick(0, top_grade);
    const int k = pick(rng);
    psi.set(k, gaussian_vector(rng, Eigen::Index{1} << k));
  }
  return psi;
}

}  // namespace qabacus::random
