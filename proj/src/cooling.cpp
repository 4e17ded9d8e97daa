#include "gaugecool/cooling.hpp"

#include "gaugecool/errors.hpp"
#include "gaugecool/kernels.hpp"

#include <cmath>

namespace gaugecool {

namespace {

void check_vertex(int vertex) {
  if (vertex < 0 || vertex >= kNumVertices) throw InputError("vertex index out of range");
}

}  // namespace

void Syndrome::validate() const {
  const int tj = J.twice();
  if (std::abs(twice_M) > tj || std::abs(twice_N) > tj || (tj - twice_M) % 2 != 0 ||
      (tj - twice_N) % 2 != 0) {
    throw InputError("invalid syndrome labels for J=" + J.to_string());
  }
}

ComplexMatrix local_syndrome_operator(const VertexCGBasis& basis, const Syndrome& s) {
  s.validate();
  ComplexMatrix out = ComplexMatrix::Zero(kVertexFactorDim, kVertexFactorDim);
  const int m = (s.twice_M + s.J.twice()) / 2;
  const int n = (s.twice_N + s.J.twice()) / 2;
  for (const LocalCGCopy* c : basis.local_copies(s.J)) out += c->vectors.col(m) * c->vectors.col(n).adjoint();
  return out / std::sqrt(static_cast<double>(s.J.dim()));
}

ComplexMatrix syndrome_operator(int vertex, const Syndrome& s) {
  return embed_vertex_operator(local_syndrome_operator(build_cg_basis(vertex), s), vertex);
}

std::map<Syndrome, double> syndrome_probabilities(const DensityMatrix& rho, const VertexCGBasis& basis) {
  const kernels::EdgeLayout layout = kernels::vertex_layout(basis.vertex());
  std::map<Syndrome, double> out;
  for (SpinLabel J : basis.sectors())
    for (int tn = -J.twice(); tn <= J.twice(); tn += 2) {
      const double p =
          kernels::local_expectation(rho.matrix(), layout, basis.local_sector_projector(J, tn)).real() / J.dim();
      for (int tm = -J.twice(); tm <= J.twice(); tm += 2) out[{J, tm, tn}] = p;
    }
  return out;
}

std::map<Syndrome, double> syndrome_probabilities(const DensityMatrix& rho, int vertex) {
  return syndrome_probabilities(rho, build_cg_basis(vertex));
}

KrausChannel local_recovery_kraus(const VertexCGBasis& basis) {
  const auto singlets = basis.local_copies(SpinLabel(0));
  std::vector<ComplexMatrix> ops;
  for (SpinLabel J : basis.sectors())
    for (int tn = -J.twice(); tn <= J.twice(); tn += 2) {
      ComplexMatrix k = ComplexMatrix::Zero(kVertexFactorDim, kVertexFactorDim);
      for (const LocalCGCopy* c : basis.local_copies(J)) {
        const ComplexVector& target = singlets.at(c->recovery_target)->vectors.col(0);
        k += target * c->vectors.col((tn + J.twice()) / 2).adjoint();
      }
      ops.push_back(std::move(k));
    }
  return KrausChannel(std::move(ops));
}

KrausChannel recovery_kraus(int vertex) {
  const KrausChannel local = local_recovery_kraus(build_cg_basis(vertex));
  std::vector<ComplexMatrix> ops;
  for (const auto& k : local.operators()) ops.push_back(embed_vertex_operator(k, vertex));
  return KrausChannel(std::move(ops));
}

std::vector<double> CoolingReport::deficits() const {
  std::vector<double> out;
  for (double o : overlaps) out.push_back(1.0 - o);
  return out;
}

GaugeCooler::GaugeCooler() {
  for (int v = 0; v < kNumVertices; ++v) {
    bases_.push_back(build_cg_basis(v));
    channels_.push_back(local_recovery_kraus(bases_.back()));
    singlet_.push_back(bases_.back().local_singlet_projector());
  }
}

DensityMatrix GaugeCooler::cool_vertex(const DensityMatrix& rho, int vertex) const {
  check_vertex(vertex);
  return DensityMatrix::adopt(
      kernels::apply_local_kraus(rho.matrix(), kernels::vertex_layout(vertex), channels_[vertex].operators()));
}

DensityMatrix GaugeCooler::sweep(const DensityMatrix& rho) const {
  DensityMatrix out = rho;
  for (int v = 0; v < kNumVertices; ++v) out = cool_vertex(out, v);
  return out;
}

double GaugeCooler::singlet_probability(const DensityMatrix& rho, int vertex) const {
  check_vertex(vertex);
  return kernels::local_expectation(rho.matrix(), kernels::vertex_layout(vertex), singlet_[vertex]).real();
}

double GaugeCooler::gi_overlap(const DensityMatrix& rho) const {
  double sum = 0.0;
  for (int v = 0; v < kNumVertices; ++v) sum += singlet_probability(rho, v);
  return sum / kNumVertices;
}

std::pair<DensityMatrix, CoolingReport> GaugeCooler::iterate(
    const DensityMatrix& rho, double tol, int max_sweeps,
    const std::function<void(const DensityMatrix&)>& observer) const {
  if (!(tol > 0.0)) throw InputError("tolerance must be positive");
  if (max_sweeps < 1) throw InputError("max_sweeps must be at least 1");
  CoolingReport report;
  DensityMatrix state = rho;
  report.overlaps.push_back(gi_overlap(state));
  while (report.overlaps.back() <= 1.0 - tol && report.sweeps_used < max_sweeps) {
    for (int v = 0; v < kNumVertices; ++v) {
      state = cool_vertex(state, v);
      if (observer) observer(state);
    }
    report.overlaps.push_back(gi_overlap(state));
    ++report.sweeps_used;
  }
  report.converged = report.overlaps.back() > 1.0 - tol;
  return {std::move(state), std::move(report)};
}

const GaugeCooler& default_cooler() {
  static const GaugeCooler cooler;
  return cooler;
}

DensityMatrix cool_vertex(const DensityMatrix& rho, int vertex) {
  return default_cooler().cool_vertex(rho, vertex);
}

DensityMatrix cooling_sweep(const DensityMatrix& rho) { return default_cooler().sweep(rho); }

double gi_overlap(const DensityMatrix& rho) { return default_cooler().gi_overlap(rho); }

std::pair<DensityMatrix, CoolingReport> iterative_cooling(const DensityMatrix& rho, double tol,
                                                          int max_sweeps) {
  return default_cooler().iterate(rho, tol, max_sweeps);
}

}  // namespace gaugecool
