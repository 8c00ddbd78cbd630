// logtwist command-line front end. Talks to the library only through the C API.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "logtwist/logtwist.h"

namespace {

int exit_code(lt_status s) {
  switch (s) {
    case LT_OK: return 0;
    case LT_ERR_INVALID:
    case LT_ERR_ARGUMENT: return 2;
    case LT_ERR_UNSUPPORTED: return 3;
    case LT_ERR_INTERNAL: break;
  }
  return 1;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

bool write_text(const std::string& path, const char* text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return static_cast<bool>(std::cout.flush());
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

struct Settings {
  std::string input;
  std::string output;
  std::string signs;
  std::string involution;
  std::string dot;
  int max_contact = lt_default_options().max_contact;
  std::uint64_t seed = lt_default_options().seed;
};

int report_error(lt_status s) {
  std::cerr << "logtwist: " << lt_last_error() << "\n";
  return exit_code(s);
}

int run(const std::string& command, const Settings& cfg) {
  std::string text;
  if (!read_file(cfg.input, text)) {
    std::cerr << "logtwist: cannot read " << cfg.input << "\n";
    return 2;
  }
  lt_fixture* fixture = nullptr;
  if (lt_status s = lt_fixture_parse(text.c_str(), &fixture); s != LT_OK) return report_error(s);
  auto cleanup = [&](int code) {
    lt_fixture_free(fixture);
    return code;
  };

  if (!cfg.signs.empty())
    if (lt_status s = lt_fixture_set_signs(fixture, cfg.signs.c_str()); s != LT_OK) return cleanup(report_error(s));
  if (!cfg.involution.empty()) {
    std::string inv = cfg.involution;
    const auto first = inv.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || inv[first] != '{') {
      if (!read_file(cfg.involution, inv)) {
        std::cerr << "logtwist: cannot read " << cfg.involution << "\n";
        return cleanup(2);
      }
    }
    if (lt_status s = lt_fixture_set_involution_json(fixture, inv.c_str()); s != LT_OK)
      return cleanup(report_error(s));
  }

  lt_options opts = lt_default_options();
  opts.max_contact = cfg.max_contact;
  opts.seed = cfg.seed;

  using Runner = lt_status (*)(const lt_fixture*, const lt_options*, char**);
  Runner runner = nullptr;
  if (command == "enumerate") runner = lt_run_enumerate;
  else if (command == "monoid") runner = lt_run_monoid;
  else if (command == "spin") runner = lt_run_spin;
  else if (command == "hyper") runner = lt_run_hyper;
  else runner = lt_run_report;

  char* result = nullptr;
  if (lt_status s = runner(fixture, &opts, &result); s != LT_OK) return cleanup(report_error(s));
  const bool written = write_text(cfg.output, result);
  lt_string_free(result);
  if (!written) {
    std::cerr << "logtwist: cannot write " << cfg.output << "\n";
    return cleanup(1);
  }

  if (!cfg.dot.empty()) {
    char* dot = nullptr;
    if (lt_status s = lt_graph_dot(fixture, &dot); s != LT_OK) return cleanup(report_error(s));
    const bool ok = write_text(cfg.dot, dot);
    lt_string_free(dot);
    if (!ok) {
      std::cerr << "logtwist: cannot write " << cfg.dot << "\n";
      return cleanup(1);
    }
  }
  return cleanup(0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary data of log twisted differentials: structures, minimal monoids, spin parity, "
               "hyperelliptic checks"};
  app.require_subcommand(1, 1);
  Settings cfg;
  const char* commands[][2] = {
      {"enumerate", "list admissible twisted structures on the graph"},
      {"monoid", "minimal monoid of the weighted graph (and hyperelliptic variants)"},
      {"spin", "spin parity from gluing signs"},
      {"hyper", "involution, quotient and signature checks"},
      {"report", "all applicable sections plus DOT"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("-i,--input", cfg.input, "fixture JSON")->required();
    sub->add_option("-o,--output", cfg.output, "output path (default stdout)");
    sub->add_option("--max-contact", cfg.max_contact, "largest contact order to enumerate")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--signs", cfg.signs, "gluing signs per even-contact edge, e.g. +,-");
    sub->add_option("--involution", cfg.involution, "involution JSON file or inline object");
    sub->add_option("--seed", cfg.seed, "seed for randomized placement checks");
    sub->add_option("--dot", cfg.dot, "also write Graphviz DOT to this path");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return run(app.get_subcommands().front()->get_name(), cfg);
}
