#include "qabacus/oscillator.hpp"

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "qabacus/sym_space.hpp"

namespace qabacus::oscillator {

void OscillatorSpec::validate() const {
  if (!(omega > 0.0)) throw std::invalid_argument("OscillatorSpec: omega must be positive");
  if (!(hbar > 0.0)) throw std::invalid_argument("OscillatorSpec: hbar must be positive");
  if (n_max < 1) throw std::invalid_argument("OscillatorSpec: n_max must be >= 1");
}

Operator hamiltonian_2d(const OscillatorSpec& spec, const Budget& budget) {
  spec.validate();
  const auto ops = fock::boson_ladder({2, spec.n_max}, budget);
  const auto dim = static_cast<Eigen::Index>(ops.basis.size());
  Operator h = fock::number_operator(ops, 0) + fock::number_operator(ops, 1) + identity(dim);
  h *= spec.hbar * spec.omega;
  return h;
}

namespace {

int level_of(double energy, const OscillatorSpec& spec) {
  return static_cast<int>(std::lround(energy / (spec.hbar * spec.omega))) - 1;
}

}  // namespace

std::vector<DegeneracyLevel> degeneracy_table(const OscillatorSpec& spec) {
  const Operator h = hamiltonian_2d(spec);
  std::map<int, int> counts;
  const Vector diag = h.diagonal();
  for (Eigen::Index i = 0; i < diag.size(); ++i) ++counts[level_of(diag[i].real(), spec)];

  std::vector<DegeneracyLevel> table;
  for (const auto& [n, mult] : counts) {
    table.push_back({n, (n + 1) * spec.hbar * spec.omega, mult, n > spec.n_max});
  }
  return table;
}

VerificationReport block_isomorphism_check(int n, const OscillatorSpec& spec,
                                           double tol) {
  spec.validate();
  if (n < 0 || n > spec.n_max) {
    throw std::invalid_argument("block_isomorphism_check: level " + std::to_string(n) +
                                " outside 0..n_max");
  }
  VerificationReport rep;
  rep.subject = "oscillator_block_" + std::to_string(n);
  rep.tol = tol;

  const auto ops = fock::boson_ladder({2, spec.n_max});
  const auto& basis = ops.basis;
  const Operator h = hamiltonian_2d(spec);
  const Vector diag = h.diagonal();

  std::set<std::size_t> eigenspace, expected;
  for (Eigen::Index i = 0; i < diag.size(); ++i) {
    if (level_of(diag[i].real(), spec) == n) eigenspace.insert(static_cast<std::size_t>(i));
  }
  for (int k = 0; k <= n; ++k) expected.insert(basis.index({k, n - k}));
  rep.add("eigenspace", n, n, eigenspace == expected ? 0.0 : 1.0);

  // Restriction of a two-mode operator from level `from` to level `to`.
  auto restrict = [&](const Operator& op, int from, int to) {
    DenseMatrix r = DenseMatrix::Zero(to + 1, from + 1);
    const DenseMatrix dense(op);
    for (int i = 0; i <= from; ++i) {
      for (int ip = 0; ip <= to; ++ip) {
        r(ip, i) = dense(static_cast<Eigen::Index>(basis.index({ip, to - ip})),
                         static_cast<Eigen::Index>(basis.index({i, from - i})));
      }
    }
    return r;
  };
  const auto sl = sym::sym_ladder(n);
  if (n >= 1) {
    rep.add("c0", n, n - 1, max_abs(DenseMatrix(restrict(ops.c[0], n, n - 1) - DenseMatrix(sl.c0))));
    rep.add("c1", n, n - 1, max_abs(DenseMatrix(restrict(ops.c[1], n, n - 1) - DenseMatrix(sl.c1))));
  }
  if (n + 1 <= spec.n_max) {
    rep.add("c0*", n, n + 1,
            max_abs(DenseMatrix(restrict(ops.c_dag[0], n, n + 1) - DenseMatrix(sl.c0_dag))));
    rep.add("c1*", n, n + 1,
            max_abs(DenseMatrix(restrict(ops.c_dag[1], n, n + 1) - DenseMatrix(sl.c1_dag))));
  }
  return rep;
}

Vector evolve(const Vector& amplitudes, const OscillatorSpec& spec, double t, int sign) {
  spec.validate();
  if (sign != 1 && sign != -1) throw std::invalid_argument("evolve: sign must be +1 or -1");
  const fock::OccupationBasis basis({2, spec.n_max});
  if (amplitudes.size() != static_cast<Eigen::Index>(basis.size())) {
    throw std::invalid_argument("evolve: amplitude vector does not match the basis");
  }
  Vector out = amplitudes;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const double quanta = basis.occupation(idx, 0) + basis.occupation(idx, 1) + 1.0;
    const double phase = sign * quanta * spec.omega * t;  // E t / hbar
    out[i] *= std::polar(1.0, phase);
  }
  return out;
}

}  // namespace qabacus::oscillator
