#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qabacus/car_clifford.hpp"
#include "qabacus/fock_ccr.hpp"
#include "qabacus/graded_tape.hpp"
#include "qabacus/oscillator.hpp"
#include "qabacus/serialize.hpp"
#include "qabacus/stellar.hpp"
#include "qabacus/sym_space.hpp"
#include "qabacus/verify_all.hpp"

namespace py = pybind11;
using namespace qabacus;

namespace {

py::object to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

nlohmann::json from_py(const py::object& o) {
  return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

py::tuple ladder_tuple(const std::vector<Operator>& lower, const std::vector<Operator>& raise) {
  return py::make_tuple(lower, raise);
}

stellar::HomogeneousPoly poly_from_list(const std::vector<cplx>& highest_first) {
  return stellar::HomogeneousPoly::from_highest_first(highest_first);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite and graded representations of CAR and CCR";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  // car_clifford
  m.def("pauli_basis", [] {
    const auto p = car::pauli_basis();
    return py::make_tuple(p.x, p.y, p.z, p.id);
  });
  m.def("clifford_generators", [](int n) { return car::clifford_generators(n).mats; },
        py::arg("n"));
  m.def("fermion_ladder_jordan_wigner", [](int m_) {
    const auto l = car::fermion_ladder_jordan_wigner(m_);
    return ladder_tuple(l.a, l.a_dag);
  }, py::arg("n_modes"));
  m.def("fermion_ladder_from_clifford", [](int m_) {
    const auto l = car::fermion_ladder_from_clifford(m_);
    return ladder_tuple(l.a, l.a_dag);
  }, py::arg("n_modes"));
  m.def("verify_car", [](int m_, double tol, const std::string& builder) {
    const auto l = builder == "clifford" ? car::fermion_ladder_from_clifford(m_)
                                         : car::fermion_ladder_jordan_wigner(m_);
    return to_py(to_json(car::verify_car(l, tol)));
  }, py::arg("n_modes"), py::arg("tol") = 1e-12, py::arg("builder") = "jordan-wigner");

  // fock_ccr
  m.def("boson_ladder", [](int modes, int n_max) {
    const auto l = fock::boson_ladder({modes, n_max});
    return ladder_tuple(l.c, l.c_dag);
  }, py::arg("modes"), py::arg("n_max"));
  m.def("verify_ccr", [](int modes, int n_max, double tol) {
    return to_py(to_json(fock::verify_ccr(fock::boson_ladder({modes, n_max}), tol)));
  }, py::arg("modes"), py::arg("n_max"), py::arg("tol") = 1e-12);
  m.def("commutator", &commutator, py::arg("a"), py::arg("b"));
  m.def("position_derivative_rep", [](int n_max) {
    const auto pd = fock::position_derivative_rep(n_max);
    return py::make_tuple(pd.x, pd.d);
  }, py::arg("n_max"));
  m.def("intertwiner", &fock::intertwiner, py::arg("n_max"));
  m.def("multimode_diff_ladder", [](int modes, int n_max) {
    const auto l = fock::multimode_diff_ladder({modes, n_max});
    return ladder_tuple(l.c, l.c_dag);
  }, py::arg("modes"), py::arg("n_max"));

  // sym_space
  m.def("symmetrizer", [](int k) { return sym::symmetrizer(k); }, py::arg("k"));
  m.def("embed_sym", [](int k) { return sym::embed_sym(k); }, py::arg("k"));
  m.def("su2_induced", &sym::su2_induced, py::arg("u"), py::arg("k"));
  m.def("sym_ladder", [](int k) {
    const auto l = sym::sym_ladder(k);
    return py::make_tuple(l.c0, l.c1, l.c0_dag, l.c1_dag);
  }, py::arg("k"));
  m.def("basis_convert", [](const py::object& v, const std::string& to) {
    const auto sv = io::sym_vector_from_json(from_py(v));
    return to_py(io::to_json(sym::basis_convert(sv, to == "e" ? sym::Flavor::e : sym::Flavor::tilde)));
  }, py::arg("vector"), py::arg("to"));
  m.def("sym_inner", [](const py::object& a, const py::object& b, const std::string& kind) {
    return sym::inner_product(io::sym_vector_from_json(from_py(a)), io::sym_vector_from_json(from_py(b)),
                              kind == "exp" ? sym::InnerProductKind::exp : sym::InnerProductKind::standard);
  }, py::arg("a"), py::arg("b"), py::arg("kind") = "standard");

  // stellar
  m.def("stars_from_poly", [](const std::vector<cplx>& coeffs) {
    return to_py(io::to_json(stellar::stars_from_poly(poly_from_list(coeffs))));
  }, py::arg("coeffs_highest_first"));
  m.def("poly_from_stars", [](const py::object& cfg) {
    return stellar::poly_from_stars(io::star_configuration_from_json(from_py(cfg))).highest_first();
  }, py::arg("configuration"));
  m.def("directional_derivative", [](const std::vector<cplx>& coeffs, cplx v0, cplx v1) {
    return stellar::directional_derivative(poly_from_list(coeffs), v0, v1).highest_first();
  }, py::arg("coeffs_highest_first"), py::arg("v0"), py::arg("v1"));
  m.def("tilde_ops", [](int n_max) {
    const auto t = stellar::tilde_ops(n_max);
    return py::make_tuple(t.d, t.x);
  }, py::arg("n_max"));

  // graded_tape: states travel as the JSON layout {"K", "grades": [...]}
  m.def("tape_basis_state", [](const std::string& bits, int max_grade) {
    return to_py(io::to_json(tape::GradedVector::basis_state(bits, max_grade)));
  }, py::arg("bits"), py::arg("max_grade") = sym::kMaxTensorGrade);
  m.def("append_blank", [](const py::object& psi) {
    return to_py(io::to_json(tape::append_blank(io::graded_vector_from_json(from_py(psi)))));
  }, py::arg("state"));
  m.def("graded_inner", [](const py::object& a, const py::object& b) {
    return tape::graded_inner(io::graded_vector_from_json(from_py(a)), io::graded_vector_from_json(from_py(b)));
  }, py::arg("a"), py::arg("b"));
  m.def("symmetrize_tape", [](const py::object& psi) {
    return to_py(io::to_json(tape::symmetrize_tape(io::graded_vector_from_json(from_py(psi)))));
  }, py::arg("state"));
  m.def("apply_gate", [](const py::object& psi, const DenseMatrix& gate, int position, bool strict) {
    return to_py(io::to_json(tape::apply_gate(io::graded_vector_from_json(from_py(psi)), gate, position,
                                              strict ? tape::GatePolicy::strict
                                                     : tape::GatePolicy::skip_short_grades)));
  }, py::arg("state"), py::arg("gate"), py::arg("position"), py::arg("strict") = false);

  // oscillator
  m.def("hamiltonian_2d", [](int n_max, double omega, double hbar) {
    return oscillator::hamiltonian_2d({omega, hbar, n_max});
  }, py::arg("n_max"), py::arg("omega") = 1.0, py::arg("hbar") = 1.0);
  m.def("degeneracy_table", [](int n_max, double omega, double hbar) {
    return to_py(io::to_json(oscillator::degeneracy_table({omega, hbar, n_max})));
  }, py::arg("n_max"), py::arg("omega") = 1.0, py::arg("hbar") = 1.0);

  m.def("verify_all", [](std::uint64_t seed, double tol) { return to_py(verify_all_json(seed, tol)); },
        py::arg("seed") = 0, py::arg("tol") = 1e-12);
}
