#pragma once

#include <vector>

#include "qabacus/linalg.hpp"
#include "qabacus/sym_space.hpp"

namespace qabacus::stellar {

/// p(xi, eta) = sum_i a_i xi^i eta^(k-i). Stored as coeffs[i] = a_i; the
/// human-facing order (CLI, JSON) is a_k .. a_0.
struct HomogeneousPoly {
  int k = 0;
  Vector coeffs;

  static HomogeneousPoly from_highest_first(const std::vector<cplx>& a);
  std::vector<cplx> highest_first() const;

  /// The same element of Sy_k in the e basis.
  sym::SymVector as_sym_vector() const;
  static HomogeneousPoly from_sym_vector(const sym::SymVector& v);
};

/// Projective point (alpha, beta) on the Riemann sphere, zeta = beta / alpha.
/// Canonical form: unit norm, first nonzero component real and positive.
struct StellarPoint {
  cplx alpha{1.0, 0.0};
  cplx beta{0.0, 0.0};

  static StellarPoint canonical(cplx alpha, cplx beta);
  static StellarPoint from_zeta(cplx zeta);
  static StellarPoint pole();

  bool is_pole() const { return alpha == cplx{0.0, 0.0}; }
  cplx zeta() const { return beta / alpha; }
};

/// p = scale * prod_i (alpha_i xi - beta_i eta).
struct StarConfiguration {
  std::vector<StellarPoint> stars;
  cplx scale{1.0, 0.0};

  int k() const { return static_cast<int>(stars.size()); }
};

/// Chordal distance on the unit sphere: 2 |a1 b2 - a2 b1| / (|p1| |p2|).
double chordal_distance(const StellarPoint& p, const StellarPoint& q);

/// Symmetric Hausdorff distance between two star multisets (chordal metric).
double hausdorff_distance(const std::vector<StellarPoint>& a,
                          const std::vector<StellarPoint>& b);

/// Sorts stars by (Re zeta, Im zeta) with poles last.
void canonical_sort(std::vector<StellarPoint>& stars);

/// Roots of p(zeta, 1) become stars (1, zeta); leading coefficients below
/// 1e-12 * max|a_i| become pole stars. Roots come from the balanced
/// companion matrix followed by Newton polishing; the scale is the
/// least-squares fit of the expanded product to p.
/// Throws std::invalid_argument for the zero polynomial.
StarConfiguration stars_from_poly(const HomogeneousPoly& p);

/// Expands scale * prod (alpha_i xi - beta_i eta) by coefficient convolution.
HomogeneousPoly poly_from_stars(const StarConfiguration& cfg);

/// (v0 d/dxi + v1 d/deta) p. Throws std::invalid_argument for k = 0 or v = 0.
HomogeneousPoly directional_derivative(const HomogeneousPoly& p, cplx v0,
                                       cplx v1);

/// max_i |a_i - b_i| / max_i |a_i|.
double relative_coefficient_deviation(const HomogeneousPoly& reference,
                                      const HomogeneousPoly& candidate);

/// Removes the best complex multiple: min_lambda |lambda b - a| / |a|.
double projective_deviation(const HomogeneousPoly& a, const HomogeneousPoly& b);

/// Operators c0 c1 and "xi eta" on the two-mode box basis (n_max+1)^2,
/// indexed as fock::OccupationBasis with two modes:
///   Dt|n0,n1> = sqrt(n0 n1) |n0-1,n1-1>,  Xt|n0,n1> = |n0+1,n1+1>
/// (Xt annihilates states leaving the box).
struct TildeOps {
  Operator d;
  Operator x;
};
TildeOps tilde_ops(int n_max, const Budget& budget = {});

}  // namespace qabacus::stellar
