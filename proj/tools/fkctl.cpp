// fkctl: command-line front end over the fourierknot C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "fourierknot/fourierknot.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  int width = 0;
  int grid = 2048;
  double tol = 1e-12;
  double margin = 0.05;
  std::uint64_t budget = 200;
  int max_frequency = 256;
  std::uint64_t seed = 1;
  int bracket_bound = 20;
  std::string cache_dir;
  bool compact = false;
};

// Thrown to leave a subcommand after the C API reported a failure.
struct Failure {
  fk_status status;
};

void check(fk_status status) {
  if (status != FK_OK) throw Failure{status};
}

template <typename T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(ptr); }
  T** out() { return &ptr; }
  T* get() const { return ptr; }
};

using Config = Handle<fk_config, fk_config_free>;
using Braid = Handle<fk_braid, fk_braid_free>;
using PlatHandle = Handle<fk_plat, fk_plat_free>;
using Pd = Handle<fk_pd, fk_pd_free>;
using Knot = Handle<fk_fourier_knot, fk_fourier_knot_free>;

std::string take(char* text) {
  std::string out(text ? text : "");
  fk_string_free(text);
  return out;
}

// A file path is read; anything else is taken as inline text.
std::string read_argument(const std::string& arg) {
  std::error_code ec;
  if (!arg.empty() && arg.front() != '{' && std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  return arg;
}

bool looks_like_json(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

void make_config(const Options& o, Config& config) {
  check(fk_config_new(config.out()));
  check(fk_config_set_grid(config.get(), o.grid));
  check(fk_config_set_tolerance(config.get(), o.tol));
  check(fk_config_set_margin(config.get(), o.margin));
  check(fk_config_set_phase_attempts(config.get(), o.budget));
  check(fk_config_set_max_frequency(config.get(), o.max_frequency));
  check(fk_config_set_seed(config.get(), o.seed));
  check(fk_config_set_bracket_bound(config.get(), o.bracket_bound));
  if (!o.cache_dir.empty()) check(fk_config_set_cache_dir(config.get(), o.cache_dir.c_str()));
}

// Prints the JSON report; a "pass": false field makes the run fail.
int emit(const Options& o, const std::string& json_text) {
  const auto doc = nlohmann::ordered_json::parse(json_text);
  std::cout << (o.compact ? doc.dump() : doc.dump(2)) << '\n';
  if (doc.contains("pass") && doc["pass"].is_boolean() && !doc["pass"].get<bool>()) return kExitFailure;
  if (doc.contains("verified") && doc["verified"].is_boolean() && !doc["verified"].get<bool>()) return kExitFailure;
  if (doc.contains("verification") && !doc["verification"].value("pass", false)) return kExitFailure;
  return 0;
}

int report_failure(const Options& o, fk_status status) {
  nlohmann::ordered_json err{{"error",
                              {{"kind", fk_status_name(status)},
                               {"stage", fk_last_error_stage()},
                               {"message", fk_last_error()}}}};
  std::cout << (o.compact ? err.dump() : err.dump(2)) << '\n';
  std::cerr << "fkctl: " << fk_last_error() << '\n';
  return kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braids, rosettes, plats, checkerboard diagrams and Fourier knots"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--width", o.width, "Braid width (default: max index + 1)")->check(CLI::NonNegativeNumber);
  app.add_option("--grid", o.grid, "Crossing-detection grid size")->check(CLI::PositiveNumber);
  app.add_option("--tol", o.tol, "Newton tolerance")->check(CLI::PositiveNumber);
  app.add_option("--margin", o.margin, "Height margin relative to max |x3|")->check(CLI::PositiveNumber);
  app.add_option("--budget", o.budget, "Shadow phase attempts")->check(CLI::PositiveNumber);
  app.add_option("--max-frequency", o.max_frequency, "Largest height frequency")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Seed for randomized searches");
  app.add_option("--bracket-bound", o.bracket_bound, "Largest diagram cross-checked by the full state sum")
      ->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", o.cache_dir, "Directory for cached rosette searches");
  app.add_flag("--json", o.compact, "Compact single-line JSON output");

  std::string word, input;
  int s = 0, i = 0, j = 0, sign = 0, count = 0;

  auto* perm = app.add_subcommand("perm", "Permutation and cycle count of a braid word");
  perm->add_option("word", word, "Braid word")->required();
  auto* rosette_gen = app.add_subcommand("rosette-gen", "Type (s,s) rosette equal to A_ij^sign");
  rosette_gen->add_option("s", s)->required();
  rosette_gen->add_option("i", i)->required();
  rosette_gen->add_option("j", j)->required();
  rosette_gen->add_option("sign", sign)->required();
  auto* conjugate = app.add_subcommand("conjugate-rosette", "Conjugate a knot-closure braid to a rosette");
  conjugate->add_option("word", word)->required();
  auto* plat_normalize = app.add_subcommand("plat-normalize", "Reroute plat caps to the standard permutation");
  plat_normalize->add_option("plat", input, "Plat JSON file or inline JSON")->required();
  auto* checkerboard = app.add_subcommand("checkerboard", "Checkerboard diagram of a plat or braid closure");
  checkerboard->add_option("input", input, "Plat JSON or braid word")->required();
  auto* invariants = app.add_subcommand("invariants", "Determinant, writhe and Jones polynomial");
  invariants->add_option("input", input, "Braid word or PD JSON")->required();
  auto* fourier_sample = app.add_subcommand("fourier-sample", "Sample a Fourier knot as CSV");
  fourier_sample->add_option("knot", input, "Fourier knot JSON")->required();
  fourier_sample->add_option("N", count, "Number of samples")->required();
  auto* fourier_diagram = app.add_subcommand("fourier-diagram", "Crossings and invariants of a Fourier knot");
  fourier_diagram->add_option("knot", input, "Fourier knot JSON")->required();
  auto* fourierize = app.add_subcommand("fourierize", "Fourier knot of type (1,1,n) for a braid closure");
  fourierize->add_option("word", word)->required();
  auto* verify = app.add_subcommand("verify-paper-examples",
                                    "Check the explicit trefoil and figure-eight parametrizations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    Config config;
    make_config(o, config);
    char* out = nullptr;

    if (*perm) {
      Braid b;
      check(fk_braid_parse(word.c_str(), o.width, b.out()));
      check(fk_run_perm(b.get(), &out));
    } else if (*rosette_gen) {
      check(fk_run_rosette_gen(s, i, j, sign, config.get(), &out));
    } else if (*conjugate) {
      Braid b;
      check(fk_braid_parse(word.c_str(), o.width, b.out()));
      check(fk_run_conjugate_rosette(b.get(), config.get(), &out));
    } else if (*plat_normalize) {
      PlatHandle p;
      check(fk_plat_from_json(read_argument(input).c_str(), p.out()));
      check(fk_run_plat_normalize(p.get(), &out));
    } else if (*checkerboard) {
      const std::string text = read_argument(input);
      PlatHandle p;
      if (looks_like_json(text)) {
        check(fk_plat_from_json(text.c_str(), p.out()));
      } else {
        Braid b;
        check(fk_braid_parse(text.c_str(), o.width, b.out()));
        check(fk_plat_from_closure(b.get(), p.out()));
      }
      check(fk_run_checkerboard(p.get(), config.get(), &out));
    } else if (*invariants) {
      const std::string text = read_argument(input);
      Pd pd;
      if (looks_like_json(text)) {
        check(fk_pd_from_json(text.c_str(), pd.out()));
      } else {
        Braid b;
        check(fk_braid_parse(text.c_str(), o.width, b.out()));
        check(fk_pd_from_closure(b.get(), pd.out()));
      }
      check(fk_run_invariants(pd.get(), config.get(), &out));
    } else if (*fourier_sample) {
      Knot k;
      check(fk_fourier_knot_from_json(read_argument(input).c_str(), k.out()));
      check(fk_run_fourier_sample(k.get(), count, &out));
      std::cout << take(out);
      return 0;
    } else if (*fourier_diagram) {
      Knot k;
      check(fk_fourier_knot_from_json(read_argument(input).c_str(), k.out()));
      check(fk_run_fourier_diagram(k.get(), config.get(), &out));
    } else if (*fourierize) {
      Braid b;
      check(fk_braid_parse(word.c_str(), o.width, b.out()));
      check(fk_run_fourierize(b.get(), config.get(), &out));
    } else if (*verify) {
      check(fk_run_reference_examples(config.get(), &out));
    }
    return emit(o, take(out));
  } catch (const Failure& f) {
    return report_failure(o, f.status);
  }
}
