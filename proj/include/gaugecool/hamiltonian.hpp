#pragma once

// Kogut-Susskind Hamiltonian of the plaquette in the Wigner basis, plus a
// Monte Carlo evaluation of the Haar integral behind the magnetic term.

#include "gaugecool/lattice.hpp"

#include <array>
#include <cstdint>

namespace gaugecool {

/// T[a][b] is the 5 x 5 matrix <I'| . |I> for fundamental indices a, b
/// (0 = -1/2, 1 = +1/2).
struct EdgeTensor {
  std::array<std::array<ComplexMatrix, 2>, 2> t;
  const ComplexMatrix& operator()(int a, int b) const { return t[a][b]; }
};

/// Throws InputError unless g2 > 0.
ComplexMatrix electric_hamiltonian(double g2);

/// sqrt(d_j' d_j) C^{j'm'}_{1/2 a, j m} C^{j'n'}_{1/2 b, j n} / d_j'. The
/// tensor is the same on every edge; `edge` is validated only.
EdgeTensor edge_tensor(int edge);

/// <I'| tr U_plaq |I>, contracting the four edge tensors cyclically.
ComplexMatrix plaquette_trace_matrix();

/// -(P + P^dagger) / (2 g2) with P the plaquette trace matrix.
ComplexMatrix magnetic_hamiltonian(double g2);

enum class Execution { Serial, Parallel };

struct HaarOracleOptions {
  std::uint64_t seed = 0;
  /// Fixed number of independent substreams per edge; the result depends on
  /// it but not on the thread count.
  int chunks = 64;
  Execution execution = Execution::Parallel;
};

/// Estimates the plaquette trace matrix. Each edge factor
/// E_g[conj(Phi_I'(g)) g_ab Phi_I(g)], Phi_(j,m,n) = sqrt(2j+1) D^j_mn(g),
/// is averaged over its own Haar samples (substream seeded by (seed, edge,
/// chunk)); the four estimates are then contracted like the exact tensors.
/// Throws InputError for n_samples < 10^4.
ComplexMatrix haar_mc_oracle(std::int64_t n_samples, const HaarOracleOptions& options);

struct MonteCarloEstimate {
  Complex mean;
  /// Standard error of the real and imaginary parts.
  double std_error_re = 0.0;
  double std_error_im = 0.0;
};

/// Direct estimate of a single <row| tr U_plaq |col> entry, sampling all four
/// edges jointly.
MonteCarloEstimate haar_mc_entry(int row, int col, std::int64_t n_samples, std::uint64_t seed);

}  // namespace gaugecool
