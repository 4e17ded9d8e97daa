#include "catch_amalgamated.hpp"

#include "gaugecool/cooling.hpp"
#include "gaugecool/errors.hpp"
#include "gaugecool/experiments.hpp"

#include <cmath>
#include <random>

using namespace gaugecool;

namespace {

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

ComplexVector random_pure(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  ComplexVector psi(kPlaquetteDim);
  for (auto& x : psi) x = Complex(normal(rng), normal(rng));
  return psi.normalized();
}

DensityMatrix random_mixed(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  ComplexMatrix a(kPlaquetteDim, 6);
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = Complex(normal(rng), normal(rng));
  ComplexMatrix rho = a * a.adjoint();
  return DensityMatrix::from_matrix(rho / rho.trace());
}

std::vector<Syndrome> all_syndromes() {
  std::vector<Syndrome> out;
  for (int tj = 0; tj <= 2; ++tj)
    for (int tm = -tj; tm <= tj; tm += 2)
      for (int tn = -tj; tn <= tj; tn += 2) out.push_back({SpinLabel(tj), tm, tn});
  return out;
}

}  // namespace

TEST_CASE("syndrome operators", "[cooling]") {
  const VertexCGBasis basis = build_cg_basis(0);
  const ComplexMatrix t00 = local_syndrome_operator(basis, {SpinLabel(0), 0, 0});
  const ComplexMatrix p0 = basis.local_singlet_projector();
  CHECK(max_abs(t00 * p0 - p0) < 1e-12);
  for (const Syndrome& s : all_syndromes()) {
    const ComplexMatrix t = local_syndrome_operator(basis, s);
    const ComplexMatrix pn = basis.local_sector_projector(s.J, s.twice_N);
    CHECK(max_abs(t.adjoint() * t - pn / double(s.J.dim())) < 1e-10);
    for (SpinLabel other : basis.sectors())
      if (other != s.J)
        for (int tn = -other.twice(); tn <= other.twice(); tn += 2)
          CHECK(max_abs(t * basis.local_sector_projector(other, tn)) < 1e-10);
  }
  CHECK_THROWS_AS(local_syndrome_operator(basis, {SpinLabel(1), 3, 1}), InputError);
  CHECK_THROWS_AS(local_syndrome_operator(basis, {SpinLabel(2), 1, 0}), InputError);
  CHECK(max_abs(syndrome_operator(0, {SpinLabel(1), 1, -1}) -
                embed_vertex_operator(local_syndrome_operator(basis, {SpinLabel(1), 1, -1}), 0)) < 1e-15);
}

TEST_CASE("syndrome probabilities are uniform in M and match the operator norm", "[cooling]") {
  std::mt19937_64 rng(20);
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexVector psi = random_pure(rng);
    const DensityMatrix rho = DensityMatrix::pure(psi);
    for (int v = 0; v < kNumVertices; ++v) {
      const auto probs = syndrome_probabilities(rho, v);
      double total = 0.0;
      for (const auto& [s, p] : probs) {
        total += p;
        const double direct = (syndrome_operator(v, s) * psi).squaredNorm();
        CHECK(std::abs(p - direct) < 1e-10);
        const Syndrome flipped{s.J, -s.twice_M, s.twice_N};
        CHECK(std::abs(p - probs.at(flipped)) < 1e-12);
      }
      CHECK(std::abs(total - 1.0) < 1e-10);
    }
  }
  const auto vac = syndrome_probabilities(DensityMatrix::pure(vacuum_state()), 2);
  CHECK(std::abs(vac.at({SpinLabel(0), 0, 0}) - 1.0) < 1e-12);
}

TEST_CASE("recovery channels are complete and land in the singlet sector", "[cooling]") {
  const GaugeCooler& cooler = default_cooler();
  for (int v = 0; v < kNumVertices; ++v) {
    const KrausChannel& ch = cooler.local_channel(v);
    CHECK(ch.completeness_error() < 1e-10);
    const VertexCGBasis& basis = cooler.basis(v);
    const ComplexMatrix p0 = basis.local_singlet_projector();
    for (const ComplexMatrix& k : ch.operators()) CHECK(max_abs(p0 * k - k) < 1e-12);
    for (const LocalCGCopy& c : basis.local_copies()) {
      const ComplexVector target = basis.local_copies(SpinLabel(0)).at(c.recovery_target)->vectors.col(0);
      double hit = 0.0;
      for (const ComplexMatrix& k : ch.operators())
        hit = std::max(hit, std::abs(target.dot(k * c.vectors.col(0))));
      CHECK(std::abs(hit - 1.0) < 1e-12);
    }
  }
  CHECK(recovery_kraus(1).completeness_error() < 1e-10);
}

TEST_CASE("cooling a vertex is idempotent and trace preserving", "[cooling]") {
  const DensityMatrix rho = random_mixed(3);
  for (int v = 0; v < kNumVertices; ++v) {
    const DensityMatrix once = cool_vertex(rho, v);
    const DensityMatrix twice = cool_vertex(once, v);
    CHECK(max_abs(twice.matrix() - once.matrix()) < 1e-10);
    CHECK(std::abs(once.trace() - 1.0) < 1e-12);
    CHECK(once.hermiticity_error() < 1e-12);
    const ComplexMatrix p = singlet_projector(v);
    CHECK(max_abs(p * once.matrix() * p - once.matrix()) < 1e-10);
    CHECK(std::abs(default_cooler().singlet_probability(once, v) - 1.0) < 1e-10);
  }
}

TEST_CASE("physical states are fixed points of a sweep", "[cooling]") {
  const ComplexMatrix phys = physical_subspace_basis();
  ComplexMatrix c(2, 2);
  c << 0.6, Complex(0.1, 0.2), Complex(0.1, -0.2), 0.4;
  const DensityMatrix rho = DensityMatrix::from_matrix(phys * c * phys.adjoint());
  CHECK(max_abs(cooling_sweep(rho).matrix() - rho.matrix()) < 1e-10);
  const auto [out, report] = iterative_cooling(rho);
  CHECK(report.sweeps_used == 0);
  CHECK(report.converged);
  CHECK(std::abs(gi_overlap(rho) - 1.0) < 1e-12);
  CHECK(std::abs(gi_overlap(DensityMatrix::maximally_mixed(625)) - 0.2) < 1e-12);
  CHECK_THROWS_AS(iterative_cooling(rho, 0.0, 10), InputError);
  CHECK_THROWS_AS(iterative_cooling(rho, 1e-5, 0), InputError);
}

TEST_CASE("single-step cooling convergence follows the published table", "[cooling]") {
  RunConfig cfg;
  cfg.noise = {NoiseKind::Depolarizing, 0.005};
  cfg.trotter = {1.0, 0.1, 1};
  cfg.tol = 1e-12;
  cfg.max_sweeps = 10;
  const auto rows = run_convergence(cfg);
  REQUIRE(rows.size() == 11);
  const double table[] = {8.0e-3, 7.0e-3, 4.3e-3, 2.3e-3, 1.2e-3, 5.5e-4, 2.5e-4, 1.2e-4, 5.2e-5, 2.3e-5, 1.0e-5};
  CHECK(std::abs(rows[0].gi_overlap - 0.992) <= 0.0005);
  for (int k = 0; k <= 10; ++k) {
    INFO("sweep " << k << " deficit " << rows[k].deficit);
    CHECK(std::abs(rows[k].deficit / table[k] - 1.0) <= 0.10);
  }
  for (int k = 3; k <= 10; ++k) {
    const double ratio = rows[k].deficit / rows[k - 1].deficit;
    CHECK(ratio >= 0.35);
    CHECK(ratio <= 0.55);
  }
}
