#pragma once

// The two numerical experiments: noisy Trotter evolution with optional gauge
// cooling, and the single-step cooling convergence study.

#include "gaugecool/cooling.hpp"
#include "gaugecool/dynamics.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gaugecool {

struct RunConfig {
  NoiseSpec noise{NoiseKind::Depolarizing, 0.0};
  TrotterConfig trotter;
  bool cool = false;
  double tol = 1e-5;
  int max_sweeps = 10;
  std::uint64_t seed = 0;
  std::string out;
  std::string design_file;

  /// Throws InputError on any out-of-range field.
  void validate() const;
};

struct EvolutionRow {
  int step = 0;
  double time = 0.0;
  double fidelity = 0.0;
  double gi_overlap = 0.0;
  int sweeps_used = 0;
};

enum class Stage { Trotter, Noise, Cooling };

/// Called with the state after every channel application: the Trotter step,
/// the noise channel on each edge, and each vertex recovery while cooling.
using StateObserver = std::function<void(Stage, int step, const DensityMatrix&)>;

/// Vacuum start; each step is Trotter, then noise on e0..e3, then (if
/// enabled) iterative cooling. Row 0 is the initial state.
std::vector<EvolutionRow> run_evolution(const RunConfig& cfg, const StateObserver& observer = {});

struct ConvergenceRow {
  int sweep = 0;
  double gi_overlap = 0.0;
  double deficit = 0.0;
};

/// Vacuum, one Trotter step of length dt, noise on all edges, then cooling
/// sweeps with the configured tolerance and sweep limit.
std::vector<ConvergenceRow> run_convergence(const RunConfig& cfg);

}  // namespace gaugecool
