#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qabacus/graded_tape.hpp"
#include "qabacus/linalg.hpp"
#include "qabacus/stellar.hpp"

namespace qabacus::random {

using Engine = std::mt19937_64;

cplx gaussian(Engine& rng);
Vector gaussian_vector(Engine& rng, Eigen::Index n);

/// Haar-random 2x2 unitary (QR of a complex Gaussian matrix with phase fix).
DenseMatrix unitary2(Engine& rng);

/// Uniform point on the sphere in canonical form.
stellar::StellarPoint sphere_point(Engine& rng);

/// k uniform stars, redrawn until every pair is at least `min_separation`
/// apart in chordal distance.
std::vector<stellar::StellarPoint> separated_stars(Engine& rng, int k,
                                                   double min_separation);

/// Random components on a random nonempty subset of grades 0..top_grade,
/// in a container with grade cap max_grade (>= top_grade).
tape::GradedVector graded_vector(Engine& rng, int top_grade, int max_grade);

}  // namespace qabacus::random
