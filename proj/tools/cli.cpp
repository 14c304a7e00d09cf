#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qabacus/car_clifford.hpp"
#include "qabacus/fock_ccr.hpp"
#include "qabacus/graded_tape.hpp"
#include "qabacus/oscillator.hpp"
#include "qabacus/random.hpp"
#include "qabacus/serialize.hpp"
#include "qabacus/stellar.hpp"
#include "qabacus/sym_space.hpp"
#include "qabacus/verify_all.hpp"

namespace qabacus::cli {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Accepts "1", "-2.5", "3i", "-i", "1+2i", "0.5-1e-3i".
cplx parse_complex(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  if (s.empty()) throw UsageError("empty complex number");
  auto to_double = [&](const std::string& t) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size()) throw UsageError("cannot parse number '" + s + "'");
    return v;
  };
  if (s.back() != 'i') return to_double(s);
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t p = s.size(); p-- > 1;) {
    if ((s[p] == '+' || s[p] == '-') && s[p - 1] != 'e' && s[p - 1] != 'E') {
      split = p;
      break;
    }
  }
  auto imag_part = [&](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return to_double(t);
  };
  if (split == std::string::npos) return {0.0, imag_part(s)};
  return {to_double(s.substr(0, split)), imag_part(s.substr(split))};
}

std::vector<cplx> parse_complex_list(const std::string& list) {
  std::vector<cplx> out;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_complex(tok));
  if (out.empty()) throw UsageError("empty coefficient list");
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

DenseMatrix named_gate(const std::string& name) {
  DenseMatrix g(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  if (name == "x") {
    g << 0.0, 1.0, 1.0, 0.0;
  } else if (name == "y") {
    g << 0.0, -kI, kI, 0.0;
  } else if (name == "z") {
    g << 1.0, 0.0, 0.0, -1.0;
  } else if (name == "h") {
    g << r, r, r, -r;
  } else if (name == "id") {
    g = DenseMatrix::Identity(2, 2);
  } else {
    throw UsageError("unknown gate '" + name + "' (expected x, y, z, h, id)");
  }
  return g;
}

json complex_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

struct Common {
  double tol = 1e-12;
  std::string format = "json";
  std::string export_prefix;
  std::string op;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, Common& c, bool with_ops) {
  cmd->add_option("--tol", c.tol, "verification tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "plain", "mm"}));
  cmd->add_option("--seed", c.seed, "seed for randomized checks");
  if (with_ops) {
    cmd->add_option("--export", c.export_prefix,
                    "write every operator to PREFIX<name>.mtx (Matrix Market)");
    cmd->add_option("--op", c.op, "operator printed by --format mm (default: first)");
  }
}

// Emits a result: the JSON body, or the selected operator in Matrix Market.
int emit(const Common& c, const json& body, const std::map<std::string, Operator>& ops,
         bool pass, std::ostream& out) {
  for (const auto& [name, op] : ops) {
    if (!c.export_prefix.empty()) write_matrix_market(c.export_prefix + name + ".mtx", op);
  }
  if (c.format == "mm") {
    if (ops.empty()) throw UsageError("this subcommand has no operator to print");
    auto it = c.op.empty() ? ops.begin() : ops.find(c.op);
    if (it == ops.end()) throw UsageError("no operator named '" + c.op + "'");
    write_matrix_market(out, it->second);
  } else if (c.format == "plain") {
    if (body.is_object() && body.contains("checks")) {
      for (const auto& chk : body["checks"]) {
        out << (chk["pass"].get<bool>() ? "PASS " : "FAIL ") << chk["relation"].get<std::string>()
            << " i=" << chk["i"] << " j=" << chk["j"]
            << " dev=" << chk["max_abs_deviation"] << '\n';
      }
      out << (pass ? "pass" : "fail") << '\n';
    } else {
      out << body.dump(2) << '\n';
    }
  } else {
    out << body.dump(2) << '\n';
  }
  return pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "qabacus: finite and graded representations of CAR/CCR, symmetric qubits and "
      "the stellar representation"};
  app.require_subcommand(1);
  std::function<int()> action;

  // car
  Common car_c;
  int car_modes = 2;
  std::string car_builder = "jordan-wigner";
  auto* car_cmd = app.add_subcommand("car", "fermionic ladder operators and CAR check");
  car_cmd->add_option("--modes", car_modes, "number of fermion modes")->check(CLI::Range(1, 20));
  car_cmd->add_option("--builder", car_builder)->check(CLI::IsMember({"jordan-wigner", "clifford"}));
  add_common(car_cmd, car_c, true);
  car_cmd->callback([&] {
    action = [&] {
      const auto ladder = car_builder == "clifford" ? car::fermion_ladder_from_clifford(car_modes)
                                                    : car::fermion_ladder_jordan_wigner(car_modes);
      const auto rep = car::verify_car(ladder, car_c.tol);
      json body = to_json(rep);
      body["modes"] = car_modes;
      body["builder"] = car_builder;
      std::map<std::string, Operator> ops;
      for (int i = 0; i < car_modes; ++i) {
        ops["a_" + std::to_string(i)] = ladder.a[i];
        ops["adag_" + std::to_string(i)] = ladder.a_dag[i];
      }
      return emit(car_c, body, ops, rep.pass(), out);
    };
  });

  // ccr
  Common ccr_c;
  int ccr_modes = 1, ccr_nmax = 4;
  auto* ccr_cmd = app.add_subcommand("ccr", "truncated bosonic ladder operators and CCR check");
  ccr_cmd->add_option("--modes", ccr_modes)->check(CLI::Range(1, 16));
  ccr_cmd->add_option("--nmax", ccr_nmax)->check(CLI::Range(1, 1 << 20));
  add_common(ccr_cmd, ccr_c, true);
  ccr_cmd->callback([&] {
    action = [&] {
      const auto ladder = fock::boson_ladder({ccr_modes, ccr_nmax});
      const auto rep = fock::verify_ccr(ladder, ccr_c.tol);
      json body = to_json(rep);
      body["modes"] = ccr_modes;
      body["nmax"] = ccr_nmax;
      // Diagonal of [c_0, c_0*] along mode 0 with the other modes empty.
      const Operator comm = commutator(ladder.c[0], ladder.c_dag[0]);
      json diag = json::array();
      for (int n = 0; n <= ccr_nmax; ++n) {
        std::vector<int> occ(ccr_modes, 0);
        occ[0] = n;
        const auto idx = static_cast<Eigen::Index>(ladder.basis.index(occ));
        diag.push_back(comm.coeff(idx, idx).real());
      }
      body["commutator_diagonal_mode0"] = diag;
      body["boundary_defect"] = diag.back();
      std::map<std::string, Operator> ops;
      for (int i = 0; i < ccr_modes; ++i) {
        ops["c_" + std::to_string(i)] = ladder.c[i];
        ops["cdag_" + std::to_string(i)] = ladder.c_dag[i];
      }
      return emit(ccr_c, body, ops, rep.pass(), out);
    };
  });

  // sym
  Common sym_c;
  int sym_k = 2;
  std::string sym_in, sym_other, sym_to = "tilde", sym_kind = "standard";
  auto* sym_cmd = app.add_subcommand("sym", "symmetric subspaces Sy_k of the qubit space");
  sym_cmd->require_subcommand(1);
  auto* sym_ladder_cmd = sym_cmd->add_subcommand("ladder", "grade ladder maps c0, c1, c0*, c1*");
  auto* sym_embed_cmd = sym_cmd->add_subcommand("embed", "isometric embedding into the tensor power");
  auto* sym_proj_cmd = sym_cmd->add_subcommand("symmetrizer", "projector onto symmetric tensors");
  auto* sym_su2_cmd = sym_cmd->add_subcommand("su2", "induced representation of a random U");
  auto* sym_conv_cmd = sym_cmd->add_subcommand("convert", "convert a SymVector between e and tilde");
  auto* sym_inner_cmd = sym_cmd->add_subcommand("inner", "inner product of two SymVectors");
  for (auto* c : {sym_ladder_cmd, sym_embed_cmd, sym_proj_cmd, sym_su2_cmd}) {
    c->add_option("--k", sym_k, "grade")->check(CLI::Range(0, 60));
    add_common(c, sym_c, true);
  }
  sym_conv_cmd->add_option("--in", sym_in)->required();
  sym_conv_cmd->add_option("--to", sym_to)->check(CLI::IsMember({"e", "tilde"}));
  add_common(sym_conv_cmd, sym_c, false);
  sym_inner_cmd->add_option("--in", sym_in)->required();
  sym_inner_cmd->add_option("--other", sym_other)->required();
  sym_inner_cmd->add_option("--kind", sym_kind)->check(CLI::IsMember({"standard", "exp"}));
  add_common(sym_inner_cmd, sym_c, false);

  sym_ladder_cmd->callback([&] {
    action = [&] {
      const auto l = sym::sym_ladder(sym_k);
      return emit(sym_c, {{"k", sym_k}, {"operators", {"c0", "c0dag", "c1", "c1dag"}}},
                  {{"c0", l.c0}, {"c1", l.c1}, {"c0dag", l.c0_dag}, {"c1dag", l.c1_dag}}, true, out);
    };
  });
  sym_embed_cmd->callback([&] {
    action = [&] {
      const Operator e = sym::embed_sym(sym_k);
      const double dev = max_abs_diff(adjoint(e) * e, identity(sym_k + 1));
      return emit(sym_c, {{"k", sym_k}, {"isometry_deviation", dev}}, {{"embed", e}},
                  dev <= sym_c.tol, out);
    };
  });
  sym_proj_cmd->callback([&] {
    action = [&] {
      const Operator p = sym::symmetrizer(sym_k);
      const double dev = max_abs_diff(p * p, p);
      const double rank = Operator(p).diagonal().sum().real();
      return emit(sym_c, {{"k", sym_k}, {"idempotence_deviation", dev}, {"trace_rank", rank}},
                  {{"symmetrizer", p}}, dev <= sym_c.tol, out);
    };
  });
  sym_su2_cmd->callback([&] {
    action = [&] {
      random::Engine rng(sym_c.seed);
      const DenseMatrix u = random::unitary2(rng);
      const DenseMatrix d = sym::su2_induced(u, sym_k);
      const double dev = max_abs(DenseMatrix(d.adjoint() * d - DenseMatrix::Identity(d.rows(), d.cols())));
      return emit(sym_c, {{"k", sym_k}, {"seed", sym_c.seed}, {"unitarity_deviation", dev}},
                  {{"D", from_dense(d)}}, dev <= std::max(sym_c.tol, 1e-10), out);
    };
  });
  sym_conv_cmd->callback([&] {
    action = [&] {
      const auto v = io::sym_vector_from_json(read_json_file(sym_in));
      const auto r = sym::basis_convert(v, sym_to == "e" ? sym::Flavor::e : sym::Flavor::tilde);
      return emit(sym_c, io::to_json(r), {}, true, out);
    };
  });
  sym_inner_cmd->callback([&] {
    action = [&] {
      const auto a = io::sym_vector_from_json(read_json_file(sym_in));
      const auto b = io::sym_vector_from_json(read_json_file(sym_other));
      const auto kind = sym_kind == "exp" ? sym::InnerProductKind::exp : sym::InnerProductKind::standard;
      return emit(sym_c, {{"kind", sym_kind}, {"value", complex_json(sym::inner_product(a, b, kind))}},
                  {}, true, out);
    };
  });

  // stellar
  Common st_c;
  std::string st_coeffs, st_in, st_dir = "1,0";
  auto* st_cmd = app.add_subcommand("stellar", "stellar (Riemann sphere) representation");
  st_cmd->require_subcommand(1);
  auto* to_stars = st_cmd->add_subcommand(
      "to-stars", "polynomial coefficients a_k..a_0 (highest degree first) -> stars");
  to_stars->add_option("--coeffs", st_coeffs, "comma separated a_k,...,a_0; complex as 1+2i")
      ->required();
  add_common(to_stars, st_c, false);
  auto* from_stars = st_cmd->add_subcommand("from-stars", "star configuration JSON -> polynomial");
  from_stars->add_option("--in", st_in, "StarConfiguration JSON file")->required();
  add_common(from_stars, st_c, false);
  auto* deriv = st_cmd->add_subcommand("derivative", "directional derivative v0 d/dxi + v1 d/deta");
  deriv->add_option("--coeffs", st_coeffs, "a_k,...,a_0")->required();
  deriv->add_option("--direction", st_dir, "v0,v1");
  add_common(deriv, st_c, false);

  auto poly_json = [](const stellar::HomogeneousPoly& p) {
    json re = json::array(), im = json::array();
    for (const auto& a : p.highest_first()) {
      re.push_back(a.real());
      im.push_back(a.imag());
    }
    return json{{"k", p.k}, {"order", "highest_first"}, {"re", re}, {"im", im}};
  };
  auto stars_json = [](const stellar::StarConfiguration& cfg) {
    json body = io::to_json(cfg);
    json zetas = json::array();
    for (const auto& s : cfg.stars) {
      zetas.push_back(s.is_pole() ? json("inf") : complex_json(s.zeta()));
    }
    body["zeta"] = zetas;
    return body;
  };
  to_stars->callback([&] {
    action = [&] {
      const auto p = stellar::HomogeneousPoly::from_highest_first(parse_complex_list(st_coeffs));
      return emit(st_c, stars_json(stellar::stars_from_poly(p)), {}, true, out);
    };
  });
  from_stars->callback([&] {
    action = [&] {
      const auto cfg = io::star_configuration_from_json(read_json_file(st_in));
      return emit(st_c, poly_json(stellar::poly_from_stars(cfg)), {}, true, out);
    };
  });
  deriv->callback([&] {
    action = [&] {
      const auto p = stellar::HomogeneousPoly::from_highest_first(parse_complex_list(st_coeffs));
      const auto v = parse_complex_list(st_dir);
      if (v.size() != 2) throw UsageError("--direction needs exactly two components");
      const auto d = stellar::directional_derivative(p, v[0], v[1]);
      json body = poly_json(d);
      if (d.coeffs.cwiseAbs().maxCoeff() > 0.0 && d.k >= 1) {
        body["stars"] = stars_json(stellar::stars_from_poly(d));
      }
      return emit(st_c, body, {}, true, out);
    };
  });

  // tape
  Common tp_c;
  std::string tp_bits = "0", tp_in, tp_other, tp_gate = "x";
  int tp_K = sym::kMaxTensorGrade, tp_position = 0;
  bool tp_strict = false;
  auto* tp_cmd = app.add_subcommand("tape", "graded quantum tape states");
  tp_cmd->require_subcommand(1);
  auto* tp_new = tp_cmd->add_subcommand("new", "basis tape state from a bitstring");
  tp_new->add_option("--bits", tp_bits, "cells, leftmost first (empty string for grade 0)");
  tp_new->add_option("--K", tp_K, "maximum grade")->check(CLI::Range(0, 30));
  add_common(tp_new, tp_c, false);
  auto* tp_append = tp_cmd->add_subcommand("append", "append a blank |0> cell to every grade");
  auto* tp_gate_cmd = tp_cmd->add_subcommand("gate", "apply a one-qubit gate at a slot");
  auto* tp_inner = tp_cmd->add_subcommand("inner", "graded inner product");
  auto* tp_sym = tp_cmd->add_subcommand("symmetrize", "project every grade onto Sy_k");
  for (auto* c : {tp_append, tp_gate_cmd, tp_inner, tp_sym}) {
    c->add_option("--in", tp_in, "GradedVector JSON file")->required();
    add_common(c, tp_c, false);
  }
  tp_gate_cmd->add_option("--gate", tp_gate)->check(CLI::IsMember({"x", "y", "z", "h", "id"}));
  tp_gate_cmd->add_option("--position", tp_position, "slot counted from the right")
      ->check(CLI::NonNegativeNumber);
  tp_gate_cmd->add_flag("--strict", tp_strict, "error on grades shorter than the gate window");
  tp_inner->add_option("--other", tp_other)->required();

  tp_new->callback([&] {
    action = [&] {
      return emit(tp_c, io::to_json(tape::GradedVector::basis_state(tp_bits, tp_K)), {}, true, out);
    };
  });
  tp_append->callback([&] {
    action = [&] {
      const auto psi = io::graded_vector_from_json(read_json_file(tp_in));
      return emit(tp_c, io::to_json(tape::append_blank(psi)), {}, true, out);
    };
  });
  tp_gate_cmd->callback([&] {
    action = [&] {
      const auto psi = io::graded_vector_from_json(read_json_file(tp_in));
      const auto policy = tp_strict ? tape::GatePolicy::strict : tape::GatePolicy::skip_short_grades;
      return emit(tp_c, io::to_json(tape::apply_gate(psi, named_gate(tp_gate), tp_position, policy)),
                  {}, true, out);
    };
  });
  tp_inner->callback([&] {
    action = [&] {
      const auto a = io::graded_vector_from_json(read_json_file(tp_in));
      const auto b = io::graded_vector_from_json(read_json_file(tp_other));
      return emit(tp_c, {{"value", complex_json(tape::graded_inner(a, b))}}, {}, true, out);
    };
  });
  tp_sym->callback([&] {
    action = [&] {
      const auto psi = io::graded_vector_from_json(read_json_file(tp_in));
      return emit(tp_c, io::to_json(tape::symmetrize_tape(psi)), {}, true, out);
    };
  });

  // oscillator
  Common osc_c;
  oscillator::OscillatorSpec osc_spec{1.0, 1.0, 4};
  int osc_level = 0;
  auto* osc_cmd = app.add_subcommand("oscillator", "two-mode oscillator degeneracy");
  osc_cmd->require_subcommand(1);
  auto* osc_table = osc_cmd->add_subcommand("table", "multiplicity of each energy level");
  auto* osc_block = osc_cmd->add_subcommand("block", "compare a level block with Sy_n ladders");
  for (auto* c : {osc_table, osc_block}) {
    c->add_option("--nmax", osc_spec.n_max)->check(CLI::Range(1, 1000));
    c->add_option("--omega", osc_spec.omega)->check(CLI::PositiveNumber);
    c->add_option("--hbar", osc_spec.hbar)->check(CLI::PositiveNumber);
    add_common(c, osc_c, false);
  }
  osc_block->add_option("--n", osc_level, "level (total quanta)")->required();
  osc_table->callback([&] {
    action = [&] {
      const auto table = oscillator::degeneracy_table(osc_spec);
      bool pass = true;
      for (const auto& l : table) pass = pass && (l.truncated || l.multiplicity == l.n + 1);
      return emit(osc_c, io::to_json(table), {}, pass, out);
    };
  });
  osc_block->callback([&] {
    action = [&] {
      const auto rep = oscillator::block_isomorphism_check(osc_level, osc_spec, osc_c.tol);
      return emit(osc_c, to_json(rep), {}, rep.pass(), out);
    };
  });

  // verify-all
  Common va_c;
  auto* va_cmd = app.add_subcommand("verify-all", "run every module's verification suite");
  add_common(va_cmd, va_c, false);
  va_cmd->callback([&] {
    action = [&] {
      const json body = verify_all_json(va_c.seed, va_c.tol);
      return emit(va_c, body, {}, body["pass"].get<bool>(), out);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace qabacus::cli
