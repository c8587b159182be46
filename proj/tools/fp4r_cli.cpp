// Copyright 2026 The fp4r Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fp4r/encoding.h"
#include "fp4r/eval.h"
#include "fp4r/json.h"
#include "fp4r/network.h"
#include "fp4r/scenario.h"
#include "fp4r/syntax.h"
#include "fp4r/typing.h"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr int kOk = 0;
constexpr int kTypeError = 1;
constexpr int kInputError = 2;
constexpr int kRuntimeError = 3;

struct Options {
  std::string input;
  std::vector<std::string> p4info;
  std::vector<std::string> decls;
  std::string prefix;
  std::string output;
  std::string trace;
  std::size_t fuel = 100000;
  bool check_invariants = false;
  bool json = false;
  bool no_action_wildcard = false;
};

void write_out(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw fp4r::ScenarioError("cannot write " + path);
  out << text;
}

ordered_json type_error_json(const fp4r::TypeError& e) {
  ordered_json j;
  j["ok"] = false;
  j["kind"] = fp4r::type_error_kind_name(e.kind());
  j["message"] = e.message();
  if (e.location().line > 0) {
    j["line"] = e.location().line;
    j["column"] = e.location().column;
  }
  if (e.expected()) j["expected"] = fp4r::print_type(e.expected());
  if (e.actual()) j["actual"] = fp4r::print_type(e.actual());
  if (!e.path().empty()) j["path"] = e.path();
  return j;
}

// `--p4info PATH` or `--p4info PREFIX=PATH`.
void load_p4info_aliases(const Options& o, fp4r::TypeAliases& aliases) {
  for (const auto& spec : o.p4info) {
    std::string prefix, path = spec;
    if (auto eq = spec.find('='); eq != std::string::npos) {
      prefix = spec.substr(0, eq);
      path = spec.substr(eq + 1);
    }
    fp4r::add_config_aliases(
        aliases, fp4r::load_p4info_file(path, !o.no_action_wildcard), prefix);
  }
}

int cmd_typecheck(const Options& o) {
  fp4r::TypeAliases aliases;
  load_p4info_aliases(o, aliases);
  for (const auto& d : o.decls) {
    auto p = fp4r::load_program_file(d, aliases);
    for (auto& [name, t] : p.aliases) aliases.insert_or_assign(name, t);
  }
  fp4r::Program prog = fp4r::load_program_file(o.input, aliases);
  if (!prog.term) {
    std::cerr << o.input << ": no term to typecheck\n";
    return kInputError;
  }
  try {
    fp4r::TypePtr t = fp4r::typecheck(fp4r::TypingEnv{}, prog.term);
    if (o.json) {
      ordered_json j;
      j["ok"] = true;
      j["type"] = fp4r::print_type(t);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << fp4r::print_type(t) << "\n";
    }
    return kOk;
  } catch (const fp4r::TypeError& e) {
    if (o.json) {
      std::cout << type_error_json(e).dump(2) << "\n";
    } else {
      std::cerr << o.input << ":" << e.render() << "\n";
    }
    return kTypeError;
  }
}

int cmd_encode(const Options& o) {
  fp4r::ServerConfig c = fp4r::load_p4info_file(o.input, !o.no_action_wildcard);
  std::string text = o.json ? fp4r::encoded_types_to_json(fp4r::encode_config(c)) + "\n"
                            : fp4r::emit_type_decls(c, o.prefix);
  write_out(text, o.output);
  return kOk;
}

void print_report(const fp4r::WellTypedReport& r, bool json) {
  if (json) {
    ordered_json j;
    j["ok"] = r.ok;
    j["diagnostics"] = r.diagnostics;
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const auto& d : r.diagnostics) std::cerr << d << "\n";
  if (r.ok) std::cout << "network is well typed\n";
}

int cmd_check_network(const Options& o) {
  fp4r::Scenario sc = fp4r::load_scenario(o.input, !o.no_action_wildcard);
  auto report = fp4r::network_well_typed(sc.network);
  print_report(report, o.json);
  return report.ok ? kOk : kTypeError;
}

int cmd_run(const Options& o) {
  fp4r::Scenario sc = fp4r::load_scenario(o.input, !o.no_action_wildcard);
  auto report = fp4r::network_well_typed(sc.network);
  if (!report.ok) {
    print_report(report, o.json);
    return kTypeError;
  }
  fp4r::RunOptions ro;
  ro.fuel = o.fuel;
  ro.check_invariants = o.check_invariants;
  fp4r::RunResult run;
  try {
    run = fp4r::run_network(sc.network, ro);
  } catch (const fp4r::NetworkError& e) {
    std::cerr << fp4r::network_error_kind_name(e.kind()) << ": " << e.what()
              << "\n";
    return kRuntimeError;
  }
  std::string trace = fp4r::run_to_json(run) + "\n";
  if (!o.trace.empty()) write_out(trace, o.trace);
  if (o.json) {
    std::cout << trace;
  } else {
    for (const auto& ev : run.trace) {
      std::cout << ev.index << " " << ev.client_id << " "
                << (ev.tau ? "tau" : fp4r::op_name(ev.op));
      if (ev.server_id) std::cout << " @" << *ev.server_id;
      if (ev.response) std::cout << " -> " << fp4r::print_ground(*ev.response);
      std::cout << "\n";
    }
    for (const auto& c : run.final_network.clients) {
      std::cout << c.id << " = " << fp4r::print_term(c.term) << "\n";
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fp4r: typed P4Runtime client programs"};
  app.require_subcommand(1);
  Options o;

  auto* tc = app.add_subcommand("typecheck", "Typecheck a client program");
  tc->add_option("program", o.input, "Program file (.fp4r)")->required();
  tc->add_option("--p4info", o.p4info,
                 "P4Info JSON whose encoded types are in scope ([PREFIX=]PATH)");
  tc->add_option("--decls", o.decls, "Extra declaration files");

  auto* enc = app.add_subcommand("encode", "Encode a P4Info file as type declarations");
  enc->add_option("p4info", o.input, "P4Info JSON file")->required();
  enc->add_option("--prefix", o.prefix, "Prefix for the declared names");
  enc->add_option("-o,--output", o.output, "Output file (default stdout)");

  auto* run = app.add_subcommand("run", "Run a network scenario");
  run->add_option("scenario", o.input, "Scenario JSON file")->required();
  run->add_option("--fuel", o.fuel, "Maximum number of network steps");
  run->add_flag("--check-invariants", o.check_invariants,
                "Check type preservation and channel ownership after each step");
  run->add_option("--trace", o.trace, "Write the JSON trace to this file");

  auto* chk = app.add_subcommand("check-network", "Check that a scenario is well typed");
  chk->add_option("scenario", o.input, "Scenario JSON file")->required();

  for (auto* sub : {tc, enc, run, chk}) {
    sub->add_flag("--json", o.json, "Machine-readable output");
    sub->add_flag("--no-action-wildcard", o.no_action_wildcard,
                  "Do not accept \"*\" as the action of a concrete table");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (tc->parsed()) return cmd_typecheck(o);
    if (enc->parsed()) return cmd_encode(o);
    if (run->parsed()) return cmd_run(o);
    return cmd_check_network(o);
  } catch (const fp4r::TypeError& e) {
    std::cerr << e.render() << "\n";
    return kTypeError;
  } catch (const fp4r::EvalError& e) {
    std::cerr << e.what() << "\n";
    return kRuntimeError;
  } catch (const fp4r::NetworkError& e) {
    std::cerr << e.what() << "\n";
    return kRuntimeError;
  } catch (const std::exception& e) {
    // Unreadable files, malformed JSON, P4Info and parse errors.
    std::cerr << e.what() << "\n";
    return kInputError;
  }
}
