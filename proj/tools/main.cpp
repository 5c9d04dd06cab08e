#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "audit.hpp"
#include "cxs/clock.hpp"
#include "cxs/fourier.hpp"
#include "cxs/spinor.hpp"
#include "cxs/xcalc_json.hpp"

using namespace cxs;
using audit::AuditReport;
using audit::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadJson = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_seed(const std::string& text) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    if (used != text.size() || text.front() == '-') throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError("seed must be a non-negative integer, got '" + text + "'");
  }
}

json load_input(const std::string& path) {
  try {
    return xcalc::load_json_file(path);
  } catch (const xcalc::JsonSyntaxError& e) {
    throw xcalc::JsonSyntaxError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                                     e.what(),
                                 e.line(), e.column());
  }
}

int emit(const AuditReport& r, bool as_json) {
  if (as_json) std::cout << r.to_json().dump(2) << "\n";
  else std::cout << r.text();
  return r.all_pass() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cxs: complex structures, spinors and optical geometries"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  std::optional<std::string> seed_text;
  app.add_flag("--json", as_json, "Print the report as JSON");
  app.add_option("--seed", seed_text, "Seed for randomized sweeps (default: $CXS_SEED or 0)");

  int k = 0, l = 0;
  auto* classify = app.add_subcommand("classify", "Cl(k,l) as a matrix algebra");
  classify->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  classify->add_option("--l", l)->required()->check(CLI::NonNegativeNumber);

  std::string preset;
  bool rep_audit = false;
  auto* rep = app.add_subcommand("rep", "Dirac representation, B and C");
  rep->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  rep->add_option("--l", l)->required()->check(CLI::NonNegativeNumber);
  rep->add_option("--preset", preset)->check(CLI::IsMember({"paper8"}));
  rep->add_flag("--audit", rep_audit, "Check the intertwiner identities");

  std::string waves_file;
  std::size_t samples = 100;
  auto* dirac = app.add_subcommand("dirac-audit", "Reality and conservation of the Dirac current");
  dirac->add_option("--k", k)->default_val(3)->check(CLI::NonNegativeNumber);
  dirac->add_option("--l", l)->default_val(1)->check(CLI::NonNegativeNumber);
  dirac->add_option("--waves", waves_file, "JSON list of plane waves")->check(CLI::ExistingFile);
  dirac->add_option("--samples", samples, "Random superpositions to test")->default_val(100);

  int n = 16;
  bool fourier_audit = false;
  auto* fourier = app.add_subcommand("fourier-j", "J = X^-1 d/dx on trigonometric polynomials");
  fourier->add_option("--n", n)->default_val(16)->check(CLI::PositiveNumber);
  fourier->add_flag("--audit", fourier_audit);

  std::string file;
  auto* cr = app.add_subcommand("cr-audit", "CR frame, CR functions and canonical section");
  cr->add_option("--file", file, "CR data JSON (default: Heisenberg example)")->check(CLI::ExistingFile);
  std::size_t charts = 20;
  auto* rt = app.add_subcommand("rt-audit", "Robinson-Trautman metric checks");
  rt->add_option("--file", file, "Chart JSON (default: random charts)")->check(CLI::ExistingFile);
  rt->add_option("--charts", charts, "Random charts when no file is given")->default_val(20);
  auto* conj = app.add_subcommand("conjecture-verify", "F = grad z x grad w");
  conj->add_option("--file", file, "Triple JSON (default: z = x+iy, w = u)")->check(CLI::ExistingFile);
  auto* full = app.add_subcommand("full-audit", "Every suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    std::uint64_t seed = 0;
    if (const char* env = std::getenv("CXS_SEED"); env && *env) seed = parse_seed(env);
    if (seed_text) seed = parse_seed(*seed_text);

    if (classify->parsed()) {
      AuditReport r{"classify"};
      r.measure("classify(" + std::to_string(k) + "," + std::to_string(l) + ")", true,
                clock::describe(k, l));
      if (as_json) {
        json j = r.to_json();
        j["algebra"] = clock::classify(k, l).str();
        j["hour"] = clock::hour(k, l);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << clock::describe(k, l) << "\n";
      }
      return 0;
    }
    if (rep->parsed()) {
      const bool paper8 = preset == "paper8";
      if (rep_audit) return emit(audit::rep_suite(k, l, paper8), as_json);
      if (paper8 && !(k == 7 && l == 1)) throw UsageError("preset paper8 is the (7,1) representation");
      const auto g = paper8 ? spinor::paper8_preset() : spinor::build_gamma(k, l);
      if (as_json) {
        json j = {{"schema", 1}, {"k", k}, {"l", l}, {"spinor_dim", g.spinor_dim()}, {"iota", g.iota.str()}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << clock::describe(k, l) << "\nspinor dimension " << g.spinor_dim() << ", iota = " << g.iota
                  << "\n";
        for (std::size_t mu = 0; mu < g.gammas.size(); ++mu) std::cout << "gamma_" << mu + 1 << " =\n" << g.gammas[mu];
      }
      return 0;
    }
    if (dirac->parsed()) {
      if (!waves_file.empty()) return emit(audit::dirac_waves_suite(k, l, load_input(waves_file)), as_json);
      return emit(audit::dirac_suite(k, l, seed, samples), as_json);
    }
    if (fourier->parsed()) {
      if (fourier_audit || as_json) return emit(audit::fourier_suite(n), as_json);
      std::cout << "J for N = " << n << " (columns cos x, sin x, ..., cos Nx, sin Nx)\n" << fourier::complex_structure(n);
      return 0;
    }
    if (cr->parsed()) return emit(audit::cr_suite(file.empty() ? audit::heisenberg_cr_data() : load_input(file)), as_json);
    if (rt->parsed()) {
      if (file.empty()) return emit(audit::rt_random_suite(seed, charts), as_json);
      return emit(audit::rt_suite(load_input(file), seed), as_json);
    }
    if (conj->parsed()) return emit(audit::conjecture_suite(file.empty() ? audit::flat_triple() : load_input(file)), as_json);
    if (full->parsed()) return emit(audit::full_audit(seed), as_json);
  } catch (const xcalc::JsonSyntaxError& e) {
    std::cerr << "malformed JSON: " << e.what() << "\n";
    return kExitBadJson;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
