// Copyright 2026 The WSL Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: sweeps, single runs and circuit dumps.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wsl/bench.hpp"
#include "wsl/circuit.hpp"
#include "wsl/error.hpp"
#include "wsl/format.hpp"
#include "wsl/functions.hpp"

namespace {

constexpr int kExitDomain = 2;
constexpr int kExitIo = 3;

struct FunctionArgs {
  std::string functions = "all";
  std::vector<std::string> params;  // name=value, applied to every selected function
};

void apply_params(wsl::FunctionSpec &spec, const std::vector<std::string> &params) {
  for (const std::string &p : params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos) throw wsl::DomainError("--param expects name=value, got " + p);
    const std::string name = p.substr(0, eq);
    if (spec.parameters().count(name)) spec.set(name, wsl::parse_double(p.substr(eq + 1)));
  }
}

std::vector<wsl::FunctionSpec> select_functions(const FunctionArgs &args) {
  std::vector<wsl::FunctionSpec> specs;
  if (args.functions == "all") {
    specs = wsl::default_function_suite();
  } else {
    std::stringstream list(args.functions);
    for (std::string id; std::getline(list, id, ',');) {
      specs.emplace_back(wsl::parse_function_id(id));
    }
  }
  for (auto &spec : specs) apply_params(spec, args.params);
  return specs;
}

wsl::FunctionSpec single_function(const std::string &id, const std::vector<std::string> &params) {
  wsl::FunctionSpec spec(wsl::parse_function_id(id));
  apply_params(spec, params);
  return spec;
}

std::vector<wsl::WslMode> parse_modes(const std::string &text) {
  std::vector<wsl::WslMode> modes;
  std::stringstream list(text);
  for (std::string m; std::getline(list, m, ',');) modes.push_back(wsl::parse_mode(m));
  if (modes.empty()) throw wsl::DomainError("no modes selected");
  return modes;
}

void write_records(const std::vector<wsl::ExperimentRecord> &records, const std::string &out,
                   bool mask_timing) {
  if (out == "-") {
    std::cout << wsl::to_csv(records, mask_timing);
  } else {
    wsl::emit_csv(records, out, mask_timing);
  }
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Walsh series loader: circuits, simulation and infidelity sweeps"};
  app.require_subcommand(1);

  FunctionArgs qubit_fn;
  std::string qubit_eps = "0.0078125";
  std::string qubit_ns = "7..13";
  std::string qubit_modes = "correct,incomplete";
  std::string qubit_out;
  unsigned qubit_threads = 0;
  bool qubit_mask = false;
  auto *sweep_q = app.add_subcommand("sweep-qubits", "Infidelity vs register size");
  sweep_q->add_option("--functions", qubit_fn.functions, "all, or comma separated ids");
  sweep_q->add_option("--param", qubit_fn.params, "Function parameter override name=value");
  sweep_q->add_option("--eps", qubit_eps, "eps0 = eps1 (decimal or 2^-k)");
  sweep_q->add_option("--n", qubit_ns, "Qubit counts, e.g. 7..13 or 7,9");
  sweep_q->add_option("--modes", qubit_modes, "correct,incomplete");
  sweep_q->add_option("--threads", qubit_threads, "Worker threads (0 = all cores)");
  sweep_q->add_flag("--mask-timing", qubit_mask, "Write 0 in the wall_time_ms column");
  sweep_q->add_option("--out", qubit_out, "Output CSV path, '-' for stdout")->required();

  FunctionArgs eps_fn;
  unsigned eps_n = 12;
  std::string eps_grid = "2^-3..2^-10";
  std::string eps_modes = "correct,incomplete";
  std::string eps_out;
  unsigned eps_threads = 0;
  bool eps_mask = false;
  auto *sweep_e = app.add_subcommand("sweep-eps", "Infidelity vs eps0 = eps1");
  sweep_e->add_option("--functions", eps_fn.functions, "all, or comma separated ids");
  sweep_e->add_option("--param", eps_fn.params, "Function parameter override name=value");
  sweep_e->add_option("--n", eps_n, "Register size");
  sweep_e->add_option("--eps-grid", eps_grid, "e.g. 2^-3..2^-10 or 0.1,0.01");
  sweep_e->add_option("--modes", eps_modes, "correct,incomplete");
  sweep_e->add_option("--threads", eps_threads, "Worker threads (0 = all cores)");
  sweep_e->add_flag("--mask-timing", eps_mask, "Write 0 in the wall_time_ms column");
  sweep_e->add_option("--out", eps_out, "Output CSV path, '-' for stdout")->required();

  std::string run_function;
  std::vector<std::string> run_params;
  unsigned run_n = 0;
  std::string run_eps;
  std::string run_eps0;
  std::string run_eps1;
  std::string run_mode = "correct";
  auto *run_cmd = app.add_subcommand("run", "Single experiment, printed as CSV");
  run_cmd->add_option("--function", run_function, "Function id")->required();
  run_cmd->add_option("--param", run_params, "Function parameter override name=value");
  run_cmd->add_option("--n", run_n, "Register size")->required();
  run_cmd->add_option("--eps", run_eps, "eps0 = eps1");
  run_cmd->add_option("--eps0", run_eps0, "Walsh coefficient scale (overrides --eps)");
  run_cmd->add_option("--eps1", run_eps1, "Truncation error target (overrides --eps)");
  run_cmd->add_option("--mode", run_mode, "correct or incomplete");

  std::string dump_function;
  std::vector<std::string> dump_params;
  unsigned dump_n = 0;
  std::string dump_eps = "0.0078125";
  std::string dump_mode = "correct";
  std::string dump_out = "-";
  bool dump_skip_zero = false;
  auto *dump_cmd = app.add_subcommand("dump-circuit", "Emit the loader circuit as gate text");
  dump_cmd->add_option("--function", dump_function, "Function id")->required();
  dump_cmd->add_option("--param", dump_params, "Function parameter override name=value");
  dump_cmd->add_option("--n", dump_n, "Register size")->required();
  dump_cmd->add_option("--eps", dump_eps, "eps0 = eps1");
  dump_cmd->add_option("--mode", dump_mode, "correct or incomplete");
  dump_cmd->add_flag("--skip-zero", dump_skip_zero, "Drop terms with a zero coefficient");
  dump_cmd->add_option("--out", dump_out, "Output path, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitDomain;
  }

  try {
    if (*sweep_q) {
      const auto specs = select_functions(qubit_fn);
      const auto ns = wsl::parse_qubit_list(qubit_ns);
      const auto eps = wsl::parse_epsilon_list(qubit_eps);
      if (eps.size() != 1) throw wsl::DomainError("--eps takes a single value");
      const auto modes = parse_modes(qubit_modes);
      write_records(wsl::sweep_qubits(specs, ns, eps.front(), modes, qubit_threads), qubit_out,
                    qubit_mask);
    } else if (*sweep_e) {
      const auto specs = select_functions(eps_fn);
      const auto grid = wsl::parse_epsilon_list(eps_grid);
      const auto modes = parse_modes(eps_modes);
      write_records(wsl::sweep_epsilon(specs, eps_n, grid, modes, eps_threads), eps_out,
                    eps_mask);
    } else if (*run_cmd) {
      const auto spec = single_function(run_function, run_params);
      auto pick = [&](const std::string &specific) {
        const std::string &text = specific.empty() ? run_eps : specific;
        if (text.empty()) throw wsl::DomainError("--eps (or --eps0 and --eps1) is required");
        const auto values = wsl::parse_epsilon_list(text);
        if (values.size() != 1) throw wsl::DomainError("epsilon must be a single value");
        return values.front();
      };
      const auto record =
          wsl::run_experiment(spec, run_n, pick(run_eps0), pick(run_eps1), wsl::parse_mode(run_mode));
      std::cout << wsl::to_csv({record});
    } else if (*dump_cmd) {
      const auto spec = single_function(dump_function, dump_params);
      const auto eps = wsl::parse_epsilon_list(dump_eps);
      if (eps.size() != 1) throw wsl::DomainError("--eps takes a single value");
      const auto target = wsl::catalog(spec, dump_n);
      const auto spectrum = wsl::walsh_spectrum_for_error(target, eps.front());
      const auto circuit = wsl::build_wsl_circuit(spectrum, eps.front(), dump_n,
                                                  wsl::parse_mode(dump_mode), {dump_skip_zero});
      const std::string text = wsl::to_text(circuit);
      if (dump_out == "-") {
        std::cout << text;
      } else {
        std::ofstream file(dump_out, std::ios::binary | std::ios::trunc);
        if (!file || !(file << text) || !file.flush()) {
          throw wsl::IoError("cannot write '" + dump_out + "'");
        }
      }
    }
  } catch (const wsl::IoError &e) {
    std::cerr << "wsl: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception &e) {
    std::cerr << "wsl: " << e.what() << '\n';
    return kExitDomain;
  }
  return 0;
}
