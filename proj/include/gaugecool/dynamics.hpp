#pragma once

// Hermitian exponentials, first-order Trotter steps, edge noise channels and
// fidelity with a pure reference state.

#include "gaugecool/kernels.hpp"
#include "gaugecool/lattice.hpp"

#include <string>
#include <vector>

namespace gaugecool {

/// exp(-i H t) by eigendecomposition. Throws InputError unless H is square
/// and Hermitian within 1e-10.
ComplexMatrix herm_expm(const ComplexMatrix& h, double t);

struct TrotterConfig {
  double g2 = 1.0;
  double total_time = 3.0;
  int n_steps = 30;

  double dt() const { return total_time / n_steps; }
  /// Throws InputError for g2 <= 0, n_steps < 1 or total_time < 0.
  void validate() const;
};

/// One first-order Trotter step U = exp(-i H_E dt) exp(-i H_B dt), cached.
///
/// H_B only couples the states in its support, so its exponential is formed
/// on that block and the identity elsewhere; H_E is diagonal.
class TrotterPropagator {
 public:
  TrotterPropagator(double g2, double dt);

  double dt() const { return dt_; }
  /// rho -> U rho U^dagger.
  DensityMatrix apply(const DensityMatrix& rho) const;
  ComplexVector apply(const ComplexVector& psi) const;
  /// Dense U, for reference checks.
  ComplexMatrix matrix() const;
  const std::vector<int>& magnetic_support() const { return support_; }

 private:
  double dt_;
  std::vector<int> support_;
  ComplexMatrix block_;
  ComplexVector phases_;
};

DensityMatrix trotter_step(const DensityMatrix& rho, const TrotterConfig& cfg);

enum class NoiseKind { Depolarizing, AmplitudeDamping };

struct NoiseSpec {
  NoiseKind kind = NoiseKind::Depolarizing;
  double rate = 0.0;
  /// Throws InputError for rates outside [0, 1].
  void validate() const;
};

std::string to_string(NoiseKind kind);
/// "depolarizing" or "amplitude-damping"; throws InputError otherwise.
NoiseKind parse_noise_kind(const std::string& name);

/// Kraus operators sharing one square dimension.
class KrausChannel {
 public:
  /// Throws InputError for an empty list, mismatched shapes, or a
  /// completeness defect above `tol`.
  explicit KrausChannel(std::vector<ComplexMatrix> ops, double tol = 1e-10);

  const std::vector<ComplexMatrix>& operators() const { return ops_; }
  int dim() const { return static_cast<int>(ops_.front().rows()); }
  /// max |sum K^dagger K - 1|.
  double completeness_error() const;

 private:
  std::vector<ComplexMatrix> ops_;
};

/// Amplitude damping on one edge: K_0 = |0><0| + sqrt(1-gamma) sum_i |i><i|,
/// K_i = sqrt(gamma) |0><i|.
KrausChannel amplitude_damping_kraus(double gamma);

DensityMatrix depolarizing_channel(const DensityMatrix& rho, int edge, double p);
DensityMatrix amplitude_damping_channel(const DensityMatrix& rho, int edge, double gamma);

/// Applies the channel to e0, e1, e2, e3 in that order.
DensityMatrix apply_noise_all_edges(const DensityMatrix& rho, const NoiseSpec& spec);

/// <psi| rho |psi>. Throws InputError unless psi has unit norm within 1e-10.
double fidelity(const DensityMatrix& rho, const ComplexVector& psi);

}  // namespace gaugecool
