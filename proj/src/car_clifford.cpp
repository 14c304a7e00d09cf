#include "qabacus/car_clifford.hpp"

#include <stdexcept>
#include <string>

namespace qabacus::car {

PauliBasis pauli_basis() {
  DenseMatrix x(2, 2), y(2, 2), z(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  y << 0.0, -kI, kI, 0.0;
  z << 1.0, 0.0, 0.0, -1.0;
  return {from_dense(x), from_dense(y), from_dense(z), identity(2)};
}

namespace {

void require_modes(int n_modes) {
  if (n_modes < 1) {
    throw std::invalid_argument("n_modes must be positive, got " +
                                std::to_string(n_modes));
  }
  if (n_modes > 30) throw BudgetExceeded("n_modes too large for 2^m indexing");
}

std::size_t ladder_nonzeros(int n_modes) {
  // 2^(m-1) entries per operator, 2m operators.
  return static_cast<std::size_t>(n_modes) << n_modes;
}

}  // namespace

CliffordGenerators clifford_generators(int n, const Budget& budget) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("clifford_generators: n must be even and >= 2, got " +
                                std::to_string(n));
  }
  if (n / 2 > 30) throw BudgetExceeded("clifford_generators: n too large");
  budget.require(static_cast<std::size_t>(n) << (n / 2), "clifford_generators");

  const auto p = pauli_basis();
  // e01 is identified with sz (literally i sx sy = -sz; either sign gives a
  // Clifford algebra, +sz reproduces the Jordan-Wigner strings).
  const Operator& e01 = p.z;

  CliffordGenerators gens;
  gens.n = 2;
  gens.mats = {p.x, p.y};
  while (gens.n < n) {
    const Operator id = identity(gens.dim());
    for (auto& e : gens.mats) e = kron(e, e01);
    gens.mats.push_back(kron(id, p.x));
    gens.mats.push_back(kron(id, p.y));
    gens.n += 2;
  }
  return gens;
}

FermionLadder fermion_ladder_from_clifford(int n_modes, const Budget& budget) {
  require_modes(n_modes);
  budget.require(ladder_nonzeros(n_modes), "fermion_ladder_from_clifford");
  const auto gens = clifford_generators(2 * n_modes, budget);

  FermionLadder out;
  out.modes = n_modes;
  out.a.resize(n_modes);
  out.a_dag.resize(n_modes);
  for (int l = 0; l < n_modes; ++l) {
    const Operator& e0 = gens.mats[2 * l];
    const Operator& e1 = gens.mats[2 * l + 1];
    Operator a = 0.5 * (e0 + kI * e1);
    Operator a_dag = 0.5 * (e0 - kI * e1);
    a.prune(cplx{0.0});
    a_dag.prune(cplx{0.0});
    const int mode = n_modes - 1 - l;
    out.a[mode] = std::move(a);
    out.a_dag[mode] = std::move(a_dag);
  }
  return out;
}

FermionLadder fermion_ladder_jordan_wigner(int n_modes, const Budget& budget) {
  require_modes(n_modes);
  budget.require(ladder_nonzeros(n_modes), "fermion_ladder_jordan_wigner");
  const auto p = pauli_basis();
  DenseMatrix lower(2, 2);
  lower << 0.0, 1.0, 0.0, 0.0;
  const Operator a1 = from_dense(lower);

  FermionLadder out;
  out.modes = n_modes;
  for (int i = 0; i < n_modes; ++i) {
    Operator op = identity(Eigen::Index{1} << (n_modes - i - 1));
    op = kron(op, a1);
    for (int s = 0; s < i; ++s) op = kron(op, p.z);
    out.a_dag.push_back(adjoint(op));
    out.a.push_back(std::move(op));
  }
  return out;
}

VerificationReport verify_car(const FermionLadder& ops, double tol) {
  VerificationReport rep;
  rep.subject = "car";
  rep.tol = tol;
  const Operator id = identity(ops.dim());
  for (int i = 0; i < ops.modes; ++i) {
    for (int j = 0; j < ops.modes; ++j) {
      rep.add("{a_i,a_j}", i, j, max_abs(anticommutator(ops.a[i], ops.a[j])));
      rep.add("{a*_i,a*_j}", i, j,
              max_abs(anticommutator(ops.a_dag[i], ops.a_dag[j])));
      Operator mixed = anticommutator(ops.a[i], ops.a_dag[j]);
      if (i == j) mixed -= id;
      rep.add("{a_i,a*_j}", i, j, max_abs(mixed));
    }
  }
  return rep;
}

VerificationReport verify_clifford(const CliffordGenerators& gens,
                                   double tol) {
  VerificationReport rep;
  rep.subject = "clifford";
  rep.tol = tol;
  const Operator two_id = 2.0 * identity(gens.dim());
  for (int i = 0; i < gens.n; ++i) {
    for (int j = i; j < gens.n; ++j) {
      Operator ac = anticommutator(gens.mats[i], gens.mats[j]);
      if (i == j) ac -= two_id;
      rep.add("{e_i,e_j}", i, j, max_abs(ac));
    }
  }
  return rep;
}

double max_ladder_difference(const FermionLadder& lhs,
                             const FermionLadder& rhs) {
  if (lhs.modes != rhs.modes) {
    throw std::invalid_argument("max_ladder_difference: mode count mismatch");
  }
  double m = 0.0;
  for (int i = 0; i < lhs.modes; ++i) {
    m = std::max(m, max_abs_diff(lhs.a[i], rhs.a[i]));
    m = std::max(m, max_abs_diff(lhs.a_dag[i], rhs.a_dag[i]));
  }
  return m;
}

int monomial_span_rank(const FermionLadder& ops) {
  const Eigen::Index dim = ops.dim();
  const int count = 1 << (2 * ops.modes);
  DenseMatrix flat(dim * dim, count);
  for (int code = 0; code < count; ++code) {
    Operator prod = identity(dim);
    for (int i = 0; i < ops.modes; ++i) {
      switch ((code >> (2 * i)) & 3) {
        case 1: prod = prod * ops.a[i]; break;
        case 2: prod = prod * ops.a_dag[i]; break;
        case 3: prod = prod * (ops.a_dag[i] * ops.a[i]); break;
        default: break;
      }
    }
    DenseMatrix d(prod);
    flat.col(code) = Eigen::Map<const Vector>(d.data(), d.size());
  }
  Eigen::FullPivLU<DenseMatrix> lu(flat);
  lu.setThreshold(1e-10);
  return static_cast<int>(lu.rank());
}

}  // namespace qabacus::car
