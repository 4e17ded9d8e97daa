#include "gaugecool/experiments.hpp"

#include "gaugecool/errors.hpp"

#include <cmath>

namespace gaugecool {

void RunConfig::validate() const {
  noise.validate();
  trotter.validate();
  if (!(tol > 0.0) || !std::isfinite(tol)) throw InputError("tol must be positive");
  if (max_sweeps < 1) throw InputError("max-sweeps must be at least 1");
}

std::vector<EvolutionRow> run_evolution(const RunConfig& cfg, const StateObserver& observer) {
  cfg.validate();
  const GaugeCooler& cooler = default_cooler();
  const TrotterPropagator step(cfg.trotter.g2, cfg.trotter.dt());

  ComplexVector psi = vacuum_state();
  DensityMatrix rho = DensityMatrix::pure(psi);
  std::vector<EvolutionRow> rows;
  rows.push_back({0, 0.0, fidelity(rho, psi), cooler.gi_overlap(rho), 0});

  for (int s = 1; s <= cfg.trotter.n_steps; ++s) {
    rho = step.apply(rho);
    psi = step.apply(psi);
    if (observer) observer(Stage::Trotter, s, rho);
    for (int e = 0; e < kNumEdges; ++e) {
      rho = cfg.noise.kind == NoiseKind::Depolarizing ? depolarizing_channel(rho, e, cfg.noise.rate)
                                                      : amplitude_damping_channel(rho, e, cfg.noise.rate);
      if (observer) observer(Stage::Noise, s, rho);
    }
    int sweeps = 0;
    if (cfg.cool) {
      auto [cooled, report] = cooler.iterate(rho, cfg.tol, cfg.max_sweeps, [&](const DensityMatrix& r) {
        if (observer) observer(Stage::Cooling, s, r);
      });
      rho = std::move(cooled);
      sweeps = report.sweeps_used;
    }
    rows.push_back({s, s * cfg.trotter.dt(), fidelity(rho, psi), cooler.gi_overlap(rho), sweeps});
  }
  return rows;
}

std::vector<ConvergenceRow> run_convergence(const RunConfig& cfg) {
  cfg.validate();
  const GaugeCooler& cooler = default_cooler();
  DensityMatrix rho = DensityMatrix::pure(vacuum_state());
  rho = TrotterPropagator(cfg.trotter.g2, cfg.trotter.dt()).apply(rho);
  rho = apply_noise_all_edges(rho, cfg.noise);
  const auto [cooled, report] = cooler.iterate(rho, cfg.tol, cfg.max_sweeps);
  std::vector<ConvergenceRow> rows;
  for (std::size_t k = 0; k < report.overlaps.size(); ++k)
    rows.push_back({static_cast<int>(k), report.overlaps[k], 1.0 - report.overlaps[k]});
  return rows;
}

}  // namespace gaugecool
