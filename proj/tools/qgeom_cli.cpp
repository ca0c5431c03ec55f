// Copyright 2026 The qgeom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line harness.  Exit codes: 0 success, 1 domain or validation
// failure, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qgeom/qgeom.hpp"

namespace {

qgeom::DensityState density_from_file(const qgeom::io::StateFile& s) {
  if (s.matrix) return qgeom::make_density(*s.matrix);
  return qgeom::pure_projector(qgeom::to_real(*s.vector));
}

int run_verify_command(const std::string& suite, int dim, int trials,
                       double tol, std::uint64_t seed,
                       const std::string& report_path) {
  const qgeom::verify::Report report =
      qgeom::verify::run_verify(suite, dim, trials, tol, seed);
  const std::string text = report.to_json_string();
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw std::runtime_error("cannot write file: " + report_path);
    out << text;
  }
  std::cout << text;
  return report.pass() ? 0 : 1;
}

int run_evolve_command(const std::string& state_path,
                       const std::string& hamiltonian_path, double t_final,
                       double dt, const std::string& method,
                       const std::string& out_path) {
  const qgeom::DensityState rho =
      density_from_file(qgeom::io::load_state_file(state_path));
  const qgeom::io::StateFile hs =
      qgeom::io::load_state_file(hamiltonian_path);
  if (!hs.matrix) {
    throw std::invalid_argument("hamiltonian file needs a \"matrix\"");
  }
  const qgeom::HermitianOperator h(*hs.matrix);
  const qgeom::Trajectory traj = qgeom::von_neumann_flow(
      rho, h, t_final, dt,
      method == "rk4" ? qgeom::FlowMethod::kRk4 : qgeom::FlowMethod::kExact);

  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write file: " + out_path);
  qgeom::io::write_trajectory_csv(out, traj);

  const qgeom::DensityState& final_state = traj.back().state;
  nlohmann::json j;
  j["t_final"] = traj.back().t;
  j["purity"] = final_state.purity();
  j["casimirs"] = nlohmann::json::object();
  const int max_order = std::max<int>(2, static_cast<int>(rho.dim()));
  for (int k = 2; k <= max_order; ++k) {
    j["casimirs"][std::to_string(k)] = qgeom::casimir(final_state, k).value;
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_bloch_command(const std::string& state_path) {
  const qgeom::io::StateFile s = qgeom::io::load_state_file(state_path);
  nlohmann::json j;
  if (s.dim == 2) {
    const qgeom::BlochVector x =
        s.vector ? qgeom::bloch_map(qgeom::to_real(*s.vector))
                 : qgeom::bloch_of_density(qgeom::make_density(*s.matrix));
    j["x"] = {x.x1, x.x2, x.x3};
  } else if (s.dim == 4) {
    const qgeom::PauliDecomposition d =
        qgeom::pauli_decompose(density_from_file(s));
    j["p"] = {d.p[0], d.p[1], d.p[2]};
    j["q"] = {d.q[0], d.q[1], d.q[2]};
    j["r"] = nlohmann::json::array();
    for (int row = 0; row < 3; ++row) {
      j["r"].push_back({d.r(row, 0), d.r(row, 1), d.r(row, 2)});
    }
  } else {
    throw std::invalid_argument(
        "bloch output needs a two-level or two-qubit state");
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_gate_command(const std::string& circuit_path,
                     const std::string& state_path) {
  const qgeom::io::StateFile s = qgeom::io::load_state_file(state_path);
  if (!s.vector) {
    throw std::invalid_argument(
        "gate application needs a pure state \"vector\"");
  }
  const qgeom::CVector out =
      qgeom::apply_circuit(*s.vector, qgeom::io::load_circuit(circuit_path));
  qgeom::io::StateFile result;
  result.dim = out.size();
  result.vector = out;
  std::cout << qgeom::io::to_json(result).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometry of quantum state spaces: verification suites, von "
               "Neumann flows, Bloch charts, and gate circuits"};
  app.require_subcommand(1);
  int rc = 0;

  std::string suite = "all";
  int dim = 2;
  int trials = 100;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  std::string report_path;
  auto* verify_cmd =
      app.add_subcommand("verify", "Run a randomized property suite");
  verify_cmd
      ->add_option("--suite", suite,
                   "Suite: realified|brackets|projective|density|composite|"
                   "gates|all")
      ->check(CLI::IsMember({"realified", "brackets", "projective", "density",
                             "composite", "gates", "all"}));
  verify_cmd->add_option("--dim", dim, "Hilbert space dimension")
      ->check(CLI::Range(1, 16));
  verify_cmd->add_option("--trials", trials, "Trials per property")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--tol", tol, "Failure tolerance");
  verify_cmd->add_option("--seed", seed, "Base seed");
  verify_cmd->add_option("--report", report_path, "Write the JSON report here");
  verify_cmd->callback([&] {
    rc = run_verify_command(suite, dim, trials, tol, seed, report_path);
  });

  std::string state_path;
  std::string hamiltonian_path;
  double t_final = 1.0;
  double dt = 1e-3;
  std::string method = "exact";
  std::string out_path;
  auto* evolve_cmd =
      app.add_subcommand("evolve", "Integrate the von Neumann equation");
  evolve_cmd->add_option("--state", state_path, "State JSON file")->required();
  evolve_cmd->add_option("--hamiltonian", hamiltonian_path,
                         "Hermitian matrix JSON file")
      ->required();
  evolve_cmd->add_option("--t-final", t_final, "Evolution time")->required();
  evolve_cmd->add_option("--dt", dt, "Step size upper bound");
  evolve_cmd->add_option("--method", method, "exact or rk4")
      ->check(CLI::IsMember({"exact", "rk4"}));
  evolve_cmd->add_option("--out", out_path, "Trajectory CSV path")->required();
  evolve_cmd->callback([&] {
    rc = run_evolve_command(state_path, hamiltonian_path, t_final, dt, method,
                            out_path);
  });

  std::string bloch_state_path;
  auto* bloch_cmd = app.add_subcommand(
      "bloch", "Bloch vector (two-level) or Pauli decomposition (two-qubit)");
  bloch_cmd->add_option("--state", bloch_state_path, "State JSON file")
      ->required();
  bloch_cmd->callback([&] { rc = run_bloch_command(bloch_state_path); });

  std::string circuit_path;
  std::string gate_state_path;
  auto* gate_cmd =
      app.add_subcommand("gate", "Apply a gate circuit to a pure state");
  gate_cmd->add_option("--circuit", circuit_path, "Circuit JSON file")
      ->required();
  gate_cmd->add_option("--state", gate_state_path, "State JSON file")
      ->required();
  gate_cmd->callback(
      [&] { rc = run_gate_command(circuit_path, gate_state_path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
