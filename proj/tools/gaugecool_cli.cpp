// gaugecool: noisy plaquette evolution, gauge-cooling convergence, the
// coordination-4 error audit, and invariant check suites.
//
// Exit codes: 0 success, 1 check or numerical failure, 2 usage error.

#include "gaugecool/checks.hpp"
#include "gaugecool/csv.hpp"
#include "gaugecool/errors.hpp"
#include "gaugecool/experiments.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace gaugecool;

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Flags {
  std::string noise = "depolarizing";
  double rate = 0.0;
  double g2 = 1.0;
  double time = 3.0;
  int steps = 30;
  std::string cool = "off";
  double tol = 1e-5;
  int max_sweeps = 10;
  std::uint64_t seed = 1;
  std::string out = "-";
  std::string design_file;
  std::string suite;
};

void add_run_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--noise", f.noise, "Noise channel")
      ->check(CLI::IsMember({"depolarizing", "amplitude-damping"}))
      ->capture_default_str();
  cmd->add_option("--rate", f.rate, "Per-edge noise rate in [0, 1]")->capture_default_str();
  cmd->add_option("--g2", f.g2, "Coupling g^2")->capture_default_str();
  cmd->add_option("--time", f.time, "Total evolution time")->capture_default_str();
  cmd->add_option("--steps", f.steps, "Number of Trotter steps")->capture_default_str();
  cmd->add_option("--tol", f.tol, "Cooling tolerance on the GI deficit")->capture_default_str();
  cmd->add_option("--max-sweeps", f.max_sweeps, "Cooling sweep limit")->capture_default_str();
  cmd->add_option("--out", f.out, "Output CSV path, '-' for stdout")->capture_default_str();
}

RunConfig to_config(const Flags& f) {
  RunConfig cfg;
  cfg.noise = {parse_noise_kind(f.noise), f.rate};
  cfg.trotter = {f.g2, f.time, f.steps};
  cfg.cool = f.cool == "on";
  cfg.tol = f.tol;
  cfg.max_sweeps = f.max_sweeps;
  cfg.seed = f.seed;
  cfg.out = f.out;
  cfg.validate();
  return cfg;
}

void emit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open output file " + path);
  out << text;
  if (!out) throw InputError("failed writing " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gauge cooling on a single SU(2) plaquette"};
  app.require_subcommand(1);
  Flags f;

  CLI::App* evolve = app.add_subcommand("evolve", "Noisy Trotter evolution from the vacuum");
  add_run_flags(evolve, f);
  evolve->add_option("--cool", f.cool, "Gauge cooling after every step")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();

  // converge defaults to the single-step protocol: p = 0.005, dt = 0.1.
  Flags fc;
  fc.rate = 0.005;
  fc.time = 0.1;
  fc.steps = 1;
  CLI::App* converge = app.add_subcommand("converge", "Cooling sweeps after one noisy Trotter step");
  add_run_flags(converge, fc);

  CLI::App* audit = app.add_subcommand("kl-audit", "Detection, Knill-Laflamme and residual tables at a coordination-4 vertex");
  audit->add_option("--out", f.out, "Output CSV path, '-' for stdout")->capture_default_str();

  CLI::App* check = app.add_subcommand("check", "Run an invariant suite");
  check->add_option("suite", f.suite, "hamiltonian | tdesign | qft | detection | all")->required();
  check->add_option("--design-file", f.design_file, "Design set replacing the built-in one (tdesign suite)");
  check->add_option("--seed", f.seed, "Seed for the Monte Carlo oracle")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*evolve) {
      std::ostringstream out;
      csv::write_evolution(out, run_evolution(to_config(f)));
      emit(f.out, out.str());
    } else if (*converge) {
      std::ostringstream out;
      csv::write_convergence(out, run_convergence(to_config(fc)));
      emit(fc.out, out.str());
    } else if (*audit) {
      std::ostringstream out;
      csv::write_kl_audit(out);
      emit(f.out, out.str());
    } else if (*check) {
      CheckOptions opt;
      if (!f.design_file.empty()) opt.design_file = f.design_file;
      opt.seed = f.seed;
      const CheckReport report = run_check_suite(f.suite, opt);
      std::cout << report.text();
      return report.passed() ? 0 : kExitCheckFailed;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return 0;
}
