#include "qabacus/stellar.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "qabacus/fock_ccr.hpp"

namespace qabacus::stellar {

HomogeneousPoly HomogeneousPoly::from_highest_first(const std::vector<cplx>& a) {
  if (a.empty()) throw std::invalid_argument("HomogeneousPoly: empty coefficient list");
  HomogeneousPoly p{static_cast<int>(a.size()) - 1, Vector(static_cast<Eigen::Index>(a.size()))};
  for (int i = 0; i <= p.k; ++i) p.coeffs[i] = a[static_cast<std::size_t>(p.k - i)];
  return p;
}

std::vector<cplx> HomogeneousPoly::highest_first() const {
  std::vector<cplx> a(static_cast<std::size_t>(k + 1));
  for (int i = 0; i <= k; ++i) a[static_cast<std::size_t>(k - i)] = coeffs[i];
  return a;
}

sym::SymVector HomogeneousPoly::as_sym_vector() const {
  return {k, sym::Flavor::e, coeffs};
}

HomogeneousPoly HomogeneousPoly::from_sym_vector(const sym::SymVector& v) {
  const auto e = sym::basis_convert(v, sym::Flavor::e);
  return {e.k, e.coeffs};
}

StellarPoint StellarPoint::canonical(cplx alpha, cplx beta) {
  const double norm = std::hypot(std::abs(alpha), std::abs(beta));
  if (norm == 0.0) throw std::invalid_argument("StellarPoint: (0, 0) is not a point");
  const cplx lead = alpha != cplx{0.0, 0.0} ? alpha : beta;
  const cplx phase = std::conj(lead) / std::abs(lead);
  StellarPoint s{alpha * phase / norm, beta * phase / norm};
  // Kill the rounding residue in the component that is real by construction.
  if (alpha != cplx{0.0, 0.0}) {
    s.alpha = std::abs(alpha) / norm;
  } else {
    s.beta = std::abs(beta) / norm;
  }
  return s;
}

StellarPoint StellarPoint::from_zeta(cplx zeta) { return canonical(1.0, zeta); }

StellarPoint StellarPoint::pole() { return {cplx{0.0, 0.0}, cplx{1.0, 0.0}}; }

double chordal_distance(const StellarPoint& p, const StellarPoint& q) {
  const double np = std::hypot(std::abs(p.alpha), std::abs(p.beta));
  const double nq = std::hypot(std::abs(q.alpha), std::abs(q.beta));
  return 2.0 * std::abs(p.alpha * q.beta - q.alpha * p.beta) / (np * nq);
}

double hausdorff_distance(const std::vector<StellarPoint>& a,
                          const std::vector<StellarPoint>& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty() ? 0.0 : 2.0;
  auto directed = [](const auto& from, const auto& to) {
    double worst = 0.0;
    for (const auto& p : from) {
      double best = 2.0;
      for (const auto& q : to) best = std::min(best, chordal_distance(p, q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

void canonical_sort(std::vector<StellarPoint>& stars) {
  std::stable_sort(stars.begin(), stars.end(),
                   [](const StellarPoint& l, const StellarPoint& r) {
                     if (l.is_pole() || r.is_pole()) return !l.is_pole() && r.is_pole();
                     const cplx zl = l.zeta(), zr = r.zeta();
                     if (zl.real() != zr.real()) return zl.real() < zr.real();
                     return zl.imag() < zr.imag();
                   });
}

namespace {

// Parlett-Reinsch balancing with radix 2 (exact scaling, similarity preserved).
void balance(DenseMatrix& m) {
  const Eigen::Index n = m.rows();
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double r = 0.0, c = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(m(j, i));
        r += std::abs(m(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      const double s = c + r;
      double f = 1.0;
      double g = r / 2.0;
      while (c < g) {
        f *= 2.0;
        c *= 4.0;
      }
      g = r * 2.0;
      while (c > g) {
        f /= 2.0;
        c /= 4.0;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        m.row(i) /= f;
        m.col(i) *= f;
      }
    }
  }
}

// Horner evaluation of sum_{i<=deg} a_i z^i and its derivative.
std::pair<cplx, cplx> eval_with_derivative(const Vector& a, int deg, cplx z) {
  cplx p = a[deg];
  cplx dp{0.0, 0.0};
  for (int i = deg - 1; i >= 0; --i) {
    dp = dp * z + p;
    p = p * z + a[i];
  }
  return {p, dp};
}

std::vector<cplx> polynomial_roots(const Vector& a, int deg) {
  if (deg == 0) return {};
  DenseMatrix comp = DenseMatrix::Zero(deg, deg);
  for (int j = 0; j < deg; ++j) comp(0, j) = -a[deg - 1 - j] / a[deg];
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  balance(comp);
  Eigen::ComplexEigenSolver<DenseMatrix> solver(comp, false);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("stars_from_poly: eigenvalue iteration did not converge");
  }
  std::vector<cplx> roots(solver.eigenvalues().begin(), solver.eigenvalues().end());
  for (auto& z : roots) {
    auto [p, dp] = eval_with_derivative(a, deg, z);
    for (int it = 0; it < 3 && std::abs(dp) > 0.0; ++it) {
      const cplx next = z - p / dp;
      auto [pn, dpn] = eval_with_derivative(a, deg, next);
      if (!(std::abs(pn) < std::abs(p))) break;
      z = next;
      p = pn;
      dp = dpn;
    }
  }
  return roots;
}

}  // namespace

StarConfiguration stars_from_poly(const HomogeneousPoly& p) {
  if (p.coeffs.size() != p.k + 1) {
    throw std::invalid_argument("stars_from_poly: coefficient count does not match degree");
  }
  const double amax = p.coeffs.cwiseAbs().maxCoeff();
  if (amax == 0.0) throw std::invalid_argument("stars_from_poly: zero polynomial has no stars");

  int top = p.k;
  while (std::abs(p.coeffs[top]) <= 1e-12 * amax) --top;

  StarConfiguration cfg;
  for (const cplx& z : polynomial_roots(p.coeffs, top)) {
    cfg.stars.push_back(StellarPoint::from_zeta(z));
  }
  for (int i = top; i < p.k; ++i) cfg.stars.push_back(StellarPoint::pole());
  canonical_sort(cfg.stars);

  cfg.scale = 1.0;
  const HomogeneousPoly unit = poly_from_stars(cfg);
  cfg.scale = unit.coeffs.dot(p.coeffs) / unit.coeffs.squaredNorm();
  return cfg;
}

HomogeneousPoly poly_from_stars(const StarConfiguration& cfg) {
  Vector c = Vector::Constant(1, cfg.scale);
  for (const auto& s : cfg.stars) {
    const Eigen::Index d = c.size();
    Vector next = Vector::Zero(d + 1);
    for (Eigen::Index i = 0; i < d; ++i) {
      next[i + 1] += s.alpha * c[i];
      next[i] -= s.beta * c[i];
    }
    c = std::move(next);
  }
  return {cfg.k(), std::move(c)};
}

HomogeneousPoly directional_derivative(const HomogeneousPoly& p, cplx v0, cplx v1) {
  if (p.k < 1) throw std::invalid_argument("directional_derivative: degree must be >= 1");
  if (v0 == cplx{0.0, 0.0} && v1 == cplx{0.0, 0.0}) {
    throw std::invalid_argument("directional_derivative: zero direction");
  }
  HomogeneousPoly out{p.k - 1, Vector::Zero(p.k)};
  for (int i = 0; i < p.k; ++i) {
    out.coeffs[i] = v0 * static_cast<double>(i + 1) * p.coeffs[i + 1] +
                    v1 * static_cast<double>(p.k - i) * p.coeffs[i];
  }
  return out;
}

double relative_coefficient_deviation(const HomogeneousPoly& reference,
                                      const HomogeneousPoly& candidate) {
  if (reference.k != candidate.k) {
    throw std::invalid_argument("relative_coefficient_deviation: degree mismatch");
  }
  const double ref = reference.coeffs.cwiseAbs().maxCoeff();
  return (reference.coeffs - candidate.coeffs).cwiseAbs().maxCoeff() / ref;
}

double projective_deviation(const HomogeneousPoly& a, const HomogeneousPoly& b) {
  if (a.k != b.k) throw std::invalid_argument("projective_deviation: degree mismatch");
  const double bb = b.coeffs.squaredNorm();
  if (bb == 0.0) return a.coeffs.norm() == 0.0 ? 0.0 : 1.0;
  const cplx lambda = b.coeffs.dot(a.coeffs) / bb;
  return (lambda * b.coeffs - a.coeffs).norm() / a.coeffs.norm();
}

TildeOps tilde_ops(int n_max, const Budget& budget) {
  const fock::OccupationBasis basis(fock::FockCutoff{2, n_max});
  budget.require(2 * basis.size(), "tilde_ops");
  const auto n = static_cast<Eigen::Index>(basis.size());
  std::vector<Triplet> ds, xs;
  for (Eigen::Index col = 0; col < n; ++col) {
    const auto occ = basis.occupations(static_cast<std::size_t>(col));
    if (occ[0] > 0 && occ[1] > 0) {
      ds.emplace_back(static_cast<Eigen::Index>(basis.index({occ[0] - 1, occ[1] - 1})), col,
                      std::sqrt(static_cast<double>(occ[0]) * occ[1]));
    }
    if (occ[0] < n_max && occ[1] < n_max) {
      xs.emplace_back(static_cast<Eigen::Index>(basis.index({occ[0] + 1, occ[1] + 1})), col, 1.0);
    }
  }
  TildeOps out{Operator(n, n), Operator(n, n)};
  out.d.setFromTriplets(ds.begin(), ds.end());
  out.x.setFromTriplets(xs.begin(), xs.end());
  return out;
}

}  // namespace qabacus::stellar
