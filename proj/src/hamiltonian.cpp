#include "gaugecool/hamiltonian.hpp"

#include "gaugecool/errors.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace gaugecool {

namespace {

void check_coupling(double g2) {
  if (!(g2 > 0.0) || !std::isfinite(g2)) throw InputError("coupling g2 must be positive");
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Cyclic contraction sum over a, b0, b1, b2, built as
// (T0 T1) -> (.. T2) -> (.. T3) with the trace closed at the end.
ComplexMatrix contract(const std::array<EdgeTensor, kNumEdges>& t) {
  std::array<std::array<ComplexMatrix, 2>, 2> ab;
  for (int a = 0; a < 2; ++a)
    for (int b1 = 0; b1 < 2; ++b1) {
      ab[a][b1] = ComplexMatrix::Zero(25, 25);
      for (int b0 = 0; b0 < 2; ++b0) ab[a][b1] += kron(t[0](a, b0), t[1](b0, b1));
    }
  std::array<std::array<ComplexMatrix, 2>, 2> abc;
  for (int a = 0; a < 2; ++a)
    for (int b2 = 0; b2 < 2; ++b2) {
      abc[a][b2] = ComplexMatrix::Zero(125, 125);
      for (int b1 = 0; b1 < 2; ++b1) abc[a][b2] += kron(ab[a][b1], t[2](b1, b2));
    }
  ComplexMatrix out = ComplexMatrix::Zero(kPlaquetteDim, kPlaquetteDim);
  for (int a = 0; a < 2; ++a)
    for (int b2 = 0; b2 < 2; ++b2) out += kron(abc[a][b2], t[3](b2, a));
  return out;
}

// Phi_I(g) for the five edge states.
Eigen::Matrix<Complex, kEdgeDim, 1> wigner_functions(const Eigen::Matrix2cd& g) {
  Eigen::Matrix<Complex, kEdgeDim, 1> phi;
  const EdgeBasis& basis = plaquette_edge_basis();
  for (int i = 0; i < kEdgeDim; ++i) {
    const WignerIndex& w = basis[i];
    phi(i) = w.twice_j == 0 ? Complex(1.0)
                            : std::sqrt(2.0) * g((w.twice_m + 1) / 2, (w.twice_n + 1) / 2);
  }
  return phi;
}

// Sum over one substream of conj(Phi_I') g_ab Phi_I, stored as T[a][b](I', I).
std::array<std::array<ComplexMatrix, 2>, 2> edge_sums(std::uint64_t seed, int edge, int chunk,
                                                      std::int64_t count) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(edge), static_cast<std::uint32_t>(chunk)};
  std::mt19937_64 rng(seq);
  std::array<std::array<ComplexMatrix, 2>, 2> sums;
  for (auto& row : sums)
    for (auto& m : row) m = ComplexMatrix::Zero(kEdgeDim, kEdgeDim);
  for (std::int64_t s = 0; s < count; ++s) {
    const Eigen::Matrix2cd g = haar_sample(rng).matrix();
    const auto phi = wigner_functions(g);
    const ComplexMatrix outer = phi.conjugate() * phi.transpose();
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) sums[a][b] += g(a, b) * outer;
  }
  return sums;
}

}  // namespace

ComplexMatrix electric_hamiltonian(double g2) {
  check_coupling(g2);
  ComplexMatrix h = ComplexMatrix::Zero(kEdgeDim, kEdgeDim);
  const EdgeBasis& basis = plaquette_edge_basis();
  for (int i = 0; i < kEdgeDim; ++i) h(i, i) = 0.5 * g2 * SpinLabel(basis[i].twice_j).casimir();
  ComplexMatrix out = ComplexMatrix::Zero(kPlaquetteDim, kPlaquetteDim);
  for (int e = 0; e < kNumEdges; ++e) out += embed_edge_operator(h, e);
  return out;
}

EdgeTensor edge_tensor(int edge) {
  if (edge < 0 || edge >= kNumEdges) throw InputError("edge index out of range");
  const EdgeBasis& basis = plaquette_edge_basis();
  EdgeTensor out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const int ta = 2 * a - 1;
      const int tb = 2 * b - 1;
      ComplexMatrix m = ComplexMatrix::Zero(kEdgeDim, kEdgeDim);
      for (int c = 0; c < kEdgeDim; ++c)
        for (int r = 0; r < kEdgeDim; ++r) {
          const WignerIndex& in = basis[c];
          const WignerIndex& to = basis[r];
          if (to.twice_m != ta + in.twice_m || to.twice_n != tb + in.twice_n) continue;
          if (to.twice_j < std::abs(in.twice_j - 1) || to.twice_j > in.twice_j + 1) continue;
          const double dp = to.twice_j + 1;
          const double d = in.twice_j + 1;
          m(r, c) = std::sqrt(dp * d) / dp *
                    clebsch_gordan(1, ta, in.twice_j, in.twice_m, to.twice_j, to.twice_m) *
                    clebsch_gordan(1, tb, in.twice_j, in.twice_n, to.twice_j, to.twice_n);
        }
      out.t[a][b] = m;
    }
  return out;
}

ComplexMatrix plaquette_trace_matrix() {
  return contract({edge_tensor(0), edge_tensor(1), edge_tensor(2), edge_tensor(3)});
}

ComplexMatrix magnetic_hamiltonian(double g2) {
  check_coupling(g2);
  const ComplexMatrix p = plaquette_trace_matrix();
  return -(p + p.adjoint()) / (2.0 * g2);
}

ComplexMatrix haar_mc_oracle(std::int64_t n_samples, const HaarOracleOptions& options) {
  if (n_samples < 10000) throw InputError("the Haar oracle needs at least 10^4 samples");
  if (options.chunks < 1) throw InputError("chunk count must be positive");
  const int chunks = options.chunks;
  const int tasks = kNumEdges * chunks;
  std::vector<std::array<std::array<ComplexMatrix, 2>, 2>> partial(tasks);
  auto count_for = [&](int chunk) {
    return n_samples / chunks + (chunk < n_samples % chunks ? 1 : 0);
  };
  if (options.execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < tasks; ++k) partial[k] = edge_sums(options.seed, k / chunks, k % chunks, count_for(k % chunks));
  } else {
    for (int k = 0; k < tasks; ++k) partial[k] = edge_sums(options.seed, k / chunks, k % chunks, count_for(k % chunks));
  }
  // Fixed combination order keeps the result independent of scheduling.
  std::array<EdgeTensor, kNumEdges> est;
  for (int e = 0; e < kNumEdges; ++e)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        ComplexMatrix sum = ComplexMatrix::Zero(kEdgeDim, kEdgeDim);
        for (int c = 0; c < chunks; ++c) sum += partial[e * chunks + c][a][b];
        est[e].t[a][b] = sum / static_cast<double>(n_samples);
      }
  return contract(est);
}

MonteCarloEstimate haar_mc_entry(int row, int col, std::int64_t n_samples, std::uint64_t seed) {
  if (n_samples < 2) throw InputError("need at least two samples");
  const auto out_digits = edge_digits(row);
  const auto in_digits = edge_digits(col);
  std::mt19937_64 rng(seed);
  double sum_re = 0.0, sum_im = 0.0, sq_re = 0.0, sq_im = 0.0;
  for (std::int64_t s = 0; s < n_samples; ++s) {
    Eigen::Matrix2cd prod = Eigen::Matrix2cd::Identity();
    Complex weight = 1.0;
    for (int e = 0; e < kNumEdges; ++e) {
      const Eigen::Matrix2cd g = haar_sample(rng).matrix();
      const auto phi = wigner_functions(g);
      weight *= std::conj(phi(out_digits[e])) * phi(in_digits[e]);
      prod = prod * g;
    }
    const Complex x = weight * prod.trace();
    sum_re += x.real();
    sum_im += x.imag();
    sq_re += x.real() * x.real();
    sq_im += x.imag() * x.imag();
  }
  const double n = static_cast<double>(n_samples);
  MonteCarloEstimate out;
  out.mean = {sum_re / n, sum_im / n};
  out.std_error_re = std::sqrt(std::max(sq_re / n - out.mean.real() * out.mean.real(), 0.0) / (n - 1));
  out.std_error_im = std::sqrt(std::max(sq_im / n - out.mean.imag() * out.mean.imag(), 0.0) / (n - 1));
  return out;
}

}  // namespace gaugecool
