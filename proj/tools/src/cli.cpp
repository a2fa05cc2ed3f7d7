// Copyright 2026 The qarith Authors
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

#include "qarith/tools/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include "qarith/errors.hpp"
#include "qarith/simulators.hpp"
#include "qarith/stdgates.hpp"
#include "qarith/tools/designs.hpp"
#include "qarith/tools/qasm.hpp"
#include "qarith/tools/report.hpp"

namespace qarith::tools {

namespace {

struct DesignOptions {
  DesignRequest request;
  std::string reading = "slice";

  void attach(CLI::App* sub) {
    std::vector<std::string> names(design_names().begin(), design_names().end());
    sub->add_option("--design", request.design, "Circuit design")
        ->required()
        ->check(CLI::IsMember(names));
    sub->add_option("--n", request.n, "Bit width (scale exponent for bilinear)")
        ->required();
    sub->add_option("--m", request.m, "Coordinate width (bilinear)");
    sub->add_option("--color-width", request.color_width,
                    "Bits per color (bilinear)");
    sub->add_option("--reading", reading,
                    "Fractional coordinate reading for bilinear-up")
        ->check(CLI::IsMember({"slice", "complement"}));
  }

  DesignRequest resolved() const {
    DesignRequest r = request;
    r.reading = reading == "complement" ? CoordinateReading::Complement
                                        : CoordinateReading::Slice;
    return r;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int cmd_build(const DesignOptions& opts, const std::string& level_name,
              const std::string& out_path, std::ostream& out) {
  const ArithCircuit arith = build_design(opts.resolved());
  const EmitLevel level =
      level_name == "cliffordt" ? EmitLevel::CliffordT : EmitLevel::Macro;
  const std::string text = emit_qasm(arith.circuit, level);
  if (out_path.empty() || out_path == "-") {
    out << text;
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + out_path);
  file << text;
  return 0;
}

int cmd_verify(const DesignOptions& opts, bool exhaustive,
               std::optional<std::size_t> samples, std::optional<std::uint64_t> seed,
               const std::string& engine_name, const std::string& circuit_path,
               std::ostream& out) {
  ArithCircuit arith = build_design(opts.resolved());
  if (!circuit_path.empty()) {
    Circuit fixture = parse_qasm(read_file(circuit_path));
    if (fixture.qubit_count() != arith.circuit.qubit_count()) {
      throw DomainError("circuit does not match the design layout");
    }
    arith.circuit = std::move(fixture);
  }
  const Engine engine = engine_name == "sparse" ? Engine::Sparse : Engine::Boolean;
  const Sampling sampling =
      exhaustive ? Sampling::all() : Sampling::random(*samples, *seed);
  VerifyOptions vopts;
  vopts.sparse = SparseOptions::from_environment();
  const VerificationReport report = verify(arith, engine, sampling, vopts);
  out << verification_json(opts.request.design, opts.request.n, engine_name,
                           report)
             .dump()
      << '\n';
  return report.ok() ? 0 : 1;
}

int cmd_table(int which, const std::vector<std::size_t>& ns,
              const std::string& format, std::ostream& out) {
  const std::vector<TableRow> rows = comparison_table(which, ns);
  if (format == "json") {
    out << table_json(rows).dump(2) << '\n';
  } else {
    out << table_csv(rows);
  }
  return 0;
}

int cmd_simulate(const DesignOptions& opts, const Values& inputs,
                 const std::string& engine_name, std::ostream& out) {
  const ArithCircuit arith = build_design(opts.resolved());
  Json j;
  if (engine_name == "sparse") {
    const SparseState state = run_sparse(lower(arith.circuit), inputs,
                                         SparseOptions::from_environment());
    for (const View& v : arith.outputs) {
      try {
        j[v.name] = read_register(state, v.qubits);
      } catch (const SimulationError& e) {
        j[v.name] = e.what();
      }
    }
    j["support_size"] = state.support_size();
  } else {
    const BooleanState state = run_boolean(arith.circuit, inputs);
    for (const View& v : arith.outputs) {
      try {
        j[v.name] = read_register(state, v.qubits);
      } catch (const SimulationError& e) {
        j[v.name] = e.what();
      }
    }
  }
  out << j.dump() << '\n';
  return 0;
}

int cmd_report(const DesignOptions& opts, std::ostream& out) {
  const DesignRequest r = opts.resolved();
  const ArithCircuit arith = build_design(r);
  const auto design = formula_design(r.design);
  const ResourceReport report =
      design ? count(arith.circuit, *design, r.n) : count(arith.circuit);
  out << report_json(r.design, r.n, report).dump() << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Quantum carry-lookahead arithmetic: build, verify, count.",
               "qarith"};
  app.require_subcommand(1);

  DesignOptions build_opts;
  std::string level = "macro";
  std::string out_path;
  auto* build = app.add_subcommand("build", "Emit a circuit as OpenQASM 2.0");
  build_opts.attach(build);
  build->add_option("--level", level, "macro or cliffordt")
      ->check(CLI::IsMember({"macro", "cliffordt"}));
  build->add_option("--out", out_path, "Output file (default stdout)");

  DesignOptions verify_opts;
  bool exhaustive = false;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::string verify_engine = "boolean";
  std::string circuit_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check a design against its contract");
  verify_opts.attach(verify_cmd);
  auto* exhaustive_flag =
      verify_cmd->add_flag("--exhaustive", exhaustive, "Enumerate all inputs");
  auto* samples_opt =
      verify_cmd->add_option("--samples", samples, "Number of random cases");
  auto* seed_opt = verify_cmd->add_option("--seed", seed, "Random seed");
  samples_opt->needs(seed_opt);
  samples_opt->excludes(exhaustive_flag);
  verify_cmd->add_option("--engine", verify_engine, "boolean or sparse")
      ->check(CLI::IsMember({"boolean", "sparse"}));
  verify_cmd->add_option("--circuit", circuit_path,
                         "QASM file to check in place of the built circuit")
      ->check(CLI::ExistingFile);

  int which = 1;
  std::vector<std::size_t> table_ns;
  std::string format = "csv";
  auto* table = app.add_subcommand("table", "T-count comparison table");
  table->add_option("--which", which, "1 out-of-place, 2 in-place")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  table->add_option("--n", table_ns, "Widths, comma separated")
      ->required()
      ->delimiter(',');
  table->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  DesignOptions sim_opts;
  std::string sim_engine = "boolean";
  std::map<std::string, std::uint64_t> named;
  std::vector<std::string> sets;
  auto* simulate = app.add_subcommand("simulate", "Run one input assignment");
  sim_opts.attach(simulate);
  simulate->add_option("--engine", sim_engine, "boolean or sparse")
      ->check(CLI::IsMember({"boolean", "sparse"}));
  const std::vector<std::pair<std::string, std::string>> aliases = {
      {"a", "A"},     {"b", "B"},     {"ctl", "CTL"}, {"acc", "ACC"},
      {"y", "Y"},     {"x", "X"},     {"c00", "C00"}, {"c10", "C10"},
      {"c01", "C01"}, {"c11", "C11"}};
  std::map<std::string, std::uint64_t> alias_values;
  for (const auto& [flag, reg] : aliases) {
    simulate->add_option("--" + flag, alias_values[reg],
                         "Value of register " + reg);
  }
  simulate->add_option("--set", sets, "REGISTER=VALUE, repeatable");

  DesignOptions report_opts;
  auto* report = app.add_subcommand("report", "Resource report as JSON");
  report_opts.attach(report);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (verify_cmd->parsed() && !exhaustive && samples_opt->count() == 0) {
      throw CLI::RequiredError("--exhaustive or --samples");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n'
        << "Run with --help for more information.\n";
    return 2;
  }

  try {
    if (build->parsed()) return cmd_build(build_opts, level, out_path, out);
    if (verify_cmd->parsed()) {
      return cmd_verify(verify_opts, exhaustive,
                        exhaustive ? std::nullopt : std::optional(samples),
                        exhaustive ? std::nullopt : std::optional(seed),
                        verify_engine, circuit_path, out);
    }
    if (table->parsed()) return cmd_table(which, table_ns, format, out);
    if (simulate->parsed()) {
      Values inputs;
      for (const auto& [flag, reg] : aliases) {
        if (simulate->count("--" + flag) > 0) inputs[reg] = alias_values[reg];
      }
      for (const std::string& s : sets) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) {
          err << "usage error: --set expects REGISTER=VALUE\n";
          return 2;
        }
        try {
          inputs[s.substr(0, eq)] = std::stoull(s.substr(eq + 1));
        } catch (const std::exception&) {
          err << "usage error: bad value in --set " << s << '\n';
          return 2;
        }
      }
      return cmd_simulate(sim_opts, inputs, sim_engine, out);
    }
    if (report->parsed()) return cmd_report(report_opts, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace qarith::tools
