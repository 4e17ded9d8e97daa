#pragma once

// Syndrome extraction and recovery at the plaquette vertices (gauge cooling),
// implemented at the channel level.

#include "gaugecool/dynamics.hpp"
#include "gaugecool/lattice.hpp"

#include <array>
#include <compare>
#include <functional>
#include <map>
#include <vector>

namespace gaugecool {

struct Syndrome {
  SpinLabel J;
  int twice_M = 0;
  int twice_N = 0;
  /// Throws InputError unless |M|, |N| <= J with matching parity.
  void validate() const;
  auto operator<=>(const Syndrome&) const = default;
};

/// T^(J)_MN on the vertex factor: (2J+1)^{-1/2} sum_alpha |J,M,alpha><J,N,alpha|.
ComplexMatrix local_syndrome_operator(const VertexCGBasis& basis, const Syndrome& s);
/// The same operator on the plaquette space.
ComplexMatrix syndrome_operator(int vertex, const Syndrome& s);

/// p(J,M,N) = tr(P_N^J rho) / (2J+1) for every syndrome of the vertex.
std::map<Syndrome, double> syndrome_probabilities(const DensityMatrix& rho, const VertexCGBasis& basis);
std::map<Syndrome, double> syndrome_probabilities(const DensityMatrix& rho, int vertex);

/// K_{J,N} = sum_alpha |0,0,target(alpha)><J,N,alpha| on the vertex factor,
/// one operator per (J, N).
KrausChannel local_recovery_kraus(const VertexCGBasis& basis);
/// The recovery operators embedded in the plaquette space.
KrausChannel recovery_kraus(int vertex);

struct CoolingReport {
  /// Entry k is the GI overlap after k sweeps; entry 0 is the input.
  std::vector<double> overlaps;
  int sweeps_used = 0;
  bool converged = false;

  double final_deficit() const { return 1.0 - overlaps.back(); }
  std::vector<double> deficits() const;
};

/// The four vertex recovery channels, built once and shared read-only.
class GaugeCooler {
 public:
  GaugeCooler();

  const VertexCGBasis& basis(int vertex) const { return bases_.at(vertex); }
  const KrausChannel& local_channel(int vertex) const { return channels_.at(vertex); }

  DensityMatrix cool_vertex(const DensityMatrix& rho, int vertex) const;
  /// Vertices v0, v1, v2, v3 in order.
  DensityMatrix sweep(const DensityMatrix& rho) const;
  /// tr(Pi_0^(v) rho).
  double singlet_probability(const DensityMatrix& rho, int vertex) const;
  /// (1/4) sum_v tr(Pi_0^(v) rho).
  double gi_overlap(const DensityMatrix& rho) const;

  /// Sweeps while the overlap is at most 1 - tol, up to max_sweeps. The
  /// observer, if set, sees the state after every vertex recovery.
  std::pair<DensityMatrix, CoolingReport> iterate(
      const DensityMatrix& rho, double tol, int max_sweeps,
      const std::function<void(const DensityMatrix&)>& observer = {}) const;

 private:
  std::vector<VertexCGBasis> bases_;
  std::vector<KrausChannel> channels_;
  std::vector<ComplexMatrix> singlet_;
};

/// Process-wide cooler, built on first use.
const GaugeCooler& default_cooler();

DensityMatrix cool_vertex(const DensityMatrix& rho, int vertex);
DensityMatrix cooling_sweep(const DensityMatrix& rho);
double gi_overlap(const DensityMatrix& rho);
/// Throws InputError unless tol > 0 and max_sweeps >= 1.
std::pair<DensityMatrix, CoolingReport> iterative_cooling(const DensityMatrix& rho, double tol = 1e-5,
                                                          int max_sweeps = 10);

}  // namespace gaugecool
