#include "qabacus/verify_all.hpp"

#include <algorithm>

#include "qabacus/car_clifford.hpp"
#include "qabacus/fock_ccr.hpp"
#include "qabacus/graded_tape.hpp"
#include "qabacus/oscillator.hpp"
#include "qabacus/random.hpp"
#include "qabacus/stellar.hpp"
#include "qabacus/sym_space.hpp"

namespace qabacus {

namespace {

VerificationReport car_suite(double tol) {
  VerificationReport rep{"car_suite", tol, {}};
  for (int m = 1; m <= 6; ++m) {
    const auto jw = car::fermion_ladder_jordan_wigner(m);
    const auto cl = car::fermion_ladder_from_clifford(m);
    const auto r = car::verify_car(jw, tol);
    for (const char* rel : {"{a_i,a_j}", "{a*_i,a*_j}", "{a_i,a*_j}"}) {
      rep.add(rel, m, -1, r.max_deviation(rel));
    }
    rep.add("jordan_wigner==clifford", m, -1, car::max_ladder_difference(jw, cl));
  }
  for (int n = 2; n <= 12; n += 2) {
    const auto r = car::verify_clifford(car::clifford_generators(n), tol);
    rep.add("{e_i,e_j}", n, -1, r.max_deviation("{e_i,e_j}"));
  }
  return rep;
}

VerificationReport ccr_suite(double tol) {
  VerificationReport rep{"ccr_suite", tol, {}};
  for (auto [m, n_max] : {std::pair{1, 6}, std::pair{2, 3}, std::pair{3, 2}}) {
    const auto r = fock::verify_ccr(fock::boson_ladder({m, n_max}), tol);
    for (const char* rel : {"[c_i,c_j]", "[c*_i,c*_j]", "[c_i,c*_j]|interior", "tr[c_i,c*_j]"}) {
      rep.add(rel, m, n_max, r.max_deviation(rel));
    }
  }
  const int n_max = 10;
  const auto ops = fock::boson_ladder({1, n_max});
  const auto pd = fock::position_derivative_rep(n_max);
  const Operator s = fock::intertwiner(n_max);
  const Operator s_inv = Operator(DenseMatrix(s).inverse().sparseView());
  rep.add("S^-1 c S == D", 1, n_max, max_abs_diff(s_inv * ops.c[0] * s, pd.d));
  rep.add("S^-1 c* S == X", 1, n_max, max_abs_diff(s_inv * ops.c_dag[0] * s, pd.x));
  return rep;
}

VerificationReport sym_suite(random::Engine& rng, double tol) {
  VerificationReport rep{"sym_suite", tol, {}};
  for (int k = 1; k <= 6; ++k) {
    const Operator p = sym::symmetrizer(k);
    rep.add("P^2 == P", k, -1, max_abs_diff(p * p, p));
    rep.add("P == P^dagger", k, -1, max_abs_diff(adjoint(p), p));
    const Operator e = sym::embed_sym(k);
    rep.add("E^dagger E == I", k, -1, max_abs_diff(adjoint(e) * e, identity(k + 1)));
    rep.add("E E^dagger == P", k, -1, max_abs_diff(e * adjoint(e), p));
  }
  for (int k = 1; k <= 4; ++k) {
    double hom = 0.0, route = 0.0;
    for (int t = 0; t < 10; ++t) {
      const DenseMatrix u1 = random::unitary2(rng), u2 = random::unitary2(rng);
      const DenseMatrix lhs = sym::su2_induced(u1 * u2, k);
      const DenseMatrix rhs = sym::su2_induced(u1, k) * sym::su2_induced(u2, k);
      hom = std::max(hom, max_abs(DenseMatrix(lhs - rhs)));
      route = std::max(route, max_abs(DenseMatrix(sym::su2_induced(u1, k) -
                                                  sym::su2_induced_tensor(u1, k))));
    }
    rep.add("D(U1 U2) == D(U1) D(U2)", k, -1, hom);
    rep.add("su2 polynomial == tensor route", k, -1, route);
  }
  for (int k = 1; k <= 8; ++k) {
    const auto l = sym::sym_ladder(k);
    rep.add("c0 (e flavor) == d/dxi", k, -1,
            max_abs_diff(sym::to_e_flavor(l.c0, k, k - 1), sym::poly_derivative(k, 0)));
    rep.add("c0* (e flavor) == xi", k, -1,
            max_abs_diff(sym::to_e_flavor(l.c0_dag, k, k + 1), sym::poly_multiply(k, 0)));
  }
  return rep;
}

VerificationReport stellar_suite(random::Engine& rng) {
  VerificationReport rep{"stellar_suite", 1e-8, {}};
  for (int k = 2; k <= 8; ++k) {
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
      stellar::StarConfiguration cfg{random::separated_stars(rng, k, 1e-3), random::gaussian(rng)};
      const auto p = stellar::poly_from_stars(cfg);
      const auto back = stellar::poly_from_stars(stellar::stars_from_poly(p));
      worst = std::max(worst, stellar::relative_coefficient_deviation(p, back));
    }
    rep.add("poly->stars->poly", k, -1, worst);
  }
  return rep;
}

VerificationReport tape_suite(random::Engine& rng) {
  VerificationReport rep{"tape_suite", 1e-12, {}};
  double iso = 0.0, orth = 0.0;
  for (int t = 0; t < 10; ++t) {
    const auto psi = random::graded_vector(rng, 7, 8);
    const auto phi = random::graded_vector(rng, 7, 8);
    const auto ap = tape::append_blank(psi), aq = tape::append_blank(phi);
    iso = std::max(iso, std::abs(tape::graded_inner(ap, aq) - tape::graded_inner(psi, phi)) /
                            std::max(1.0, graded_norm(psi) * graded_norm(phi)));
    // Holds per grade component; a mixed-grade state overlaps its own image
    // wherever grades k and k+1 are both populated.
    for (const auto& [k, v] : psi.components()) {
      tape::GradedVector single(psi.max_grade());
      single.set(k, v);
      orth = std::max(orth, std::abs(tape::graded_inner(single, tape::append_blank(single))));
    }
  }
  rep.add("append isometry", -1, -1, iso);
  rep.add("<psi_k, append psi_k> == 0", -1, -1, orth);
  return rep;
}

VerificationReport oscillator_suite(double tol) {
  VerificationReport rep{"oscillator_suite", tol, {}};
  const oscillator::OscillatorSpec spec{1.0, 1.0, 6};
  for (const auto& level : oscillator::degeneracy_table(spec)) {
    if (level.truncated) continue;
    rep.add("multiplicity == n+1", level.n, -1, std::abs(level.multiplicity - (level.n + 1)));
  }
  for (int n = 0; n <= spec.n_max; ++n) {
    for (const auto& c : oscillator::block_isomorphism_check(n, spec, tol).checks) {
      rep.add("block " + c.relation, c.i, c.j, c.max_abs_deviation);
    }
  }
  return rep;
}

}  // namespace

std::vector<VerificationReport> verify_all(std::uint64_t seed, double tol) {
  random::Engine rng(seed);
  std::vector<VerificationReport> reports;
  reports.push_back(car_suite(tol));
  reports.push_back(ccr_suite(tol));
  reports.push_back(sym_suite(rng, std::max(tol, 1e-10)));
  reports.push_back(stellar_suite(rng));
  reports.push_back(tape_suite(rng));
  reports.push_back(oscillator_suite(tol));
  return reports;
}

nlohmann::json verify_all_json(std::uint64_t seed, double tol) {
  const auto reports = verify_all(seed, tol);
  nlohmann::json out;
  out["seed"] = seed;
  out["tol"] = tol;
  out["reports"] = nlohmann::json::array();
  bool pass = true;
  for (const auto& r : reports) {
    out["reports"].push_back(to_json(r));
    pass = pass && r.pass();
  }
  out["pass"] = pass;
  return out;
}

}  // namespace qabacus
