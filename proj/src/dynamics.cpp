#include "gaugecool/dynamics.hpp"

#include "gaugecool/errors.hpp"
#include "gaugecool/hamiltonian.hpp"

#include <cmath>

namespace gaugecool {

ComplexMatrix herm_expm(const ComplexMatrix& h, double t) {
  if (h.rows() != h.cols()) throw InputError("matrix must be square");
  if (h.size() > 0 && (h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw InputError("matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (h + h.adjoint()));
  ComplexVector phases(h.rows());
  for (Eigen::Index k = 0; k < h.rows(); ++k) phases(k) = std::polar(1.0, -es.eigenvalues()(k) * t);
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

void TrotterConfig::validate() const {
  if (!(g2 > 0.0) || !std::isfinite(g2)) throw InputError("g2 must be positive");
  if (n_steps < 1) throw InputError("n_steps must be at least 1");
  if (!(total_time >= 0.0) || !std::isfinite(total_time)) throw InputError("total time must be non-negative");
}

TrotterPropagator::TrotterPropagator(double g2, double dt) : dt_(dt) {
  if (!std::isfinite(dt)) throw InputError("time step must be finite");
  const ComplexMatrix hb = magnetic_hamiltonian(g2);
  const ComplexMatrix he = electric_hamiltonian(g2);
  for (int i = 0; i < kPlaquetteDim; ++i)
    if (hb.row(i).cwiseAbs().maxCoeff() != 0.0 || hb.col(i).cwiseAbs().maxCoeff() != 0.0) support_.push_back(i);
  const auto ns = static_cast<Eigen::Index>(support_.size());
  ComplexMatrix sub(ns, ns);
  for (Eigen::Index a = 0; a < ns; ++a)
    for (Eigen::Index b = 0; b < ns; ++b) sub(a, b) = hb(support_[a], support_[b]);
  block_ = herm_expm(sub, dt);
  phases_.resize(kPlaquetteDim);
  for (int i = 0; i < kPlaquetteDim; ++i) phases_(i) = std::polar(1.0, -he(i, i).real() * dt);
}

DensityMatrix TrotterPropagator::apply(const DensityMatrix& rho) const {
  return DensityMatrix::adopt(kernels::conjugate_block_diagonal(rho.matrix(), support_, block_, phases_));
}

ComplexVector TrotterPropagator::apply(const ComplexVector& psi) const {
  if (psi.size() != kPlaquetteDim) throw InputError("state vector must have 625 entries");
  ComplexVector out = psi;
  const auto ns = static_cast<Eigen::Index>(support_.size());
  ComplexVector sub(ns);
  for (Eigen::Index k = 0; k < ns; ++k) sub(k) = psi(support_[k]);
  sub = block_ * sub;
  for (Eigen::Index k = 0; k < ns; ++k) out(support_[k]) = sub(k);
  return phases_.cwiseProduct(out);
}

ComplexMatrix TrotterPropagator::matrix() const {
  ComplexMatrix w = ComplexMatrix::Identity(kPlaquetteDim, kPlaquetteDim);
  for (std::size_t a = 0; a < support_.size(); ++a)
    for (std::size_t b = 0; b < support_.size(); ++b) w(support_[a], support_[b]) = block_(a, b);
  return phases_.asDiagonal() * w;
}

DensityMatrix trotter_step(const DensityMatrix& rho, const TrotterConfig& cfg) {
  cfg.validate();
  return TrotterPropagator(cfg.g2, cfg.dt()).apply(rho);
}

void NoiseSpec::validate() const {
  if (!(rate >= 0.0 && rate <= 1.0)) throw InputError("noise rate must lie in [0, 1]");
}

std::string to_string(NoiseKind kind) {
  return kind == NoiseKind::Depolarizing ? "depolarizing" : "amplitude-damping";
}

NoiseKind parse_noise_kind(const std::string& name) {
  if (name == "depolarizing") return NoiseKind::Depolarizing;
  if (name == "amplitude-damping") return NoiseKind::AmplitudeDamping;
  throw InputError("unknown noise kind '" + name + "'");
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> ops, double tol) : ops_(std::move(ops)) {
  if (ops_.empty()) throw InputError("Kraus list is empty");
  for (const auto& k : ops_)
    if (k.rows() != ops_.front().rows() || k.cols() != ops_.front().rows()) {
      throw InputError("Kraus operators must share one square shape");
    }
  if (completeness_error() > tol) throw InputError("Kraus operators are not trace preserving");
}

double KrausChannel::completeness_error() const {
  ComplexMatrix sum = ComplexMatrix::Zero(dim(), dim());
  for (const auto& k : ops_) sum += k.adjoint() * k;
  return (sum - ComplexMatrix::Identity(dim(), dim())).cwiseAbs().maxCoeff();
}

KrausChannel amplitude_damping_kraus(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw InputError("damping rate must lie in [0, 1]");
  std::vector<ComplexMatrix> ops;
  ComplexMatrix k0 = ComplexMatrix::Zero(kEdgeDim, kEdgeDim);
  k0(0, 0) = 1.0;
  for (int i = 1; i < kEdgeDim; ++i) k0(i, i) = std::sqrt(1.0 - gamma);
  ops.push_back(k0);
  for (int i = 1; i < kEdgeDim; ++i) {
    ComplexMatrix k = ComplexMatrix::Zero(kEdgeDim, kEdgeDim);
    k(0, i) = std::sqrt(gamma);
    ops.push_back(k);
  }
  return KrausChannel(std::move(ops));
}

DensityMatrix depolarizing_channel(const DensityMatrix& rho, int edge, double p) {
  return DensityMatrix::adopt(kernels::depolarize_edge(rho.matrix(), edge, p));
}

DensityMatrix amplitude_damping_channel(const DensityMatrix& rho, int edge, double gamma) {
  const KrausChannel ch = amplitude_damping_kraus(gamma);
  return DensityMatrix::adopt(kernels::apply_local_kraus(rho.matrix(), kernels::EdgeLayout({edge}), ch.operators()));
}

DensityMatrix apply_noise_all_edges(const DensityMatrix& rho, const NoiseSpec& spec) {
  spec.validate();
  DensityMatrix out = rho;
  for (int e = 0; e < kNumEdges; ++e) {
    out = spec.kind == NoiseKind::Depolarizing ? depolarizing_channel(out, e, spec.rate)
                                               : amplitude_damping_channel(out, e, spec.rate);
  }
  return out;
}

double fidelity(const DensityMatrix& rho, const ComplexVector& psi) {
  if (psi.size() != rho.dim()) throw InputError("state and density matrix dimensions differ");
  if (std::abs(psi.norm() - 1.0) > 1e-10) throw InputError("reference state is not normalized");
  return (psi.adjoint() * rho.matrix() * psi)(0, 0).real();
}

}  // namespace gaugecool
