#pragma once

#include <vector>

#include "qabacus/fock_ccr.hpp"
#include "qabacus/linalg.hpp"
#include "qabacus/report.hpp"

namespace qabacus::oscillator {

struct OscillatorSpec {
  double omega = 1.0;
  double hbar = 1.0;
  int n_max = 1;

  void validate() const;
};

/// hbar omega (c0* c0 + c1* c1 + 1) on the two-mode box basis.
Operator hamiltonian_2d(const OscillatorSpec& spec, const Budget& budget = {});

struct DegeneracyLevel {
  int n = 0;              // total quanta
  double energy = 0.0;    // (n + 1) hbar omega
  int multiplicity = 0;
  bool truncated = false; // n > n_max: the box cuts part of the level away
};

/// Multiplicity of every eigenvalue of hamiltonian_2d, by total quanta.
/// Levels are identified by rounding E / (hbar omega) - 1 to an integer.
std::vector<DegeneracyLevel> degeneracy_table(const OscillatorSpec& spec);

/// Checks that the level-n eigenspace is exactly span{|k, n-k>} and that the
/// two-mode ladder restricted to it equals sym_ladder(n) under
/// |n0, n1> -> e~_{n0,n1}. Relations: "eigenspace", "c0", "c1", "c0*", "c1*"
/// (raising only when n + 1 <= n_max). Throws std::invalid_argument when
/// n > n_max.
VerificationReport block_isomorphism_check(int n, const OscillatorSpec& spec,
                                           double tol = 1e-12);

/// Phase evolution of occupation amplitudes:
/// amp(n0,n1) *= exp(sign * i * E t / hbar) with E = (n0+n1+1) hbar omega.
/// sign = +1 is the default.
Vector evolve(const Vector& amplitudes, const OscillatorSpec& spec, double t,
              int sign = +1);

}  // namespace qabacus::oscillator
