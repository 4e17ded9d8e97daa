#include "gaugecool/lattice.hpp"

#include "gaugecool/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace gaugecool {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr int kPow5[kNumEdges] = {125, 25, 5, 1};

void check_edge(int edge) {
  if (edge < 0 || edge >= kNumEdges) throw InputError("edge index out of range");
}

void check_vertex(int vertex) {
  if (vertex < 0 || vertex >= kNumVertices) throw InputError("vertex index out of range");
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

int full_index(int vertex, int local, int rest) {
  std::array<int, kNumEdges> x{};
  x[PlaquetteGeometry::outgoing(vertex)] = local / kEdgeDim;
  x[PlaquetteGeometry::incoming(vertex)] = local % kEdgeDim;
  const auto r = PlaquetteGeometry::rest_edges(vertex);
  x[r[0]] = rest / kEdgeDim;
  x[r[1]] = rest % kEdgeDim;
  return plaquette_index(x);
}

std::vector<ComplexMatrix> spin_blocks(const GroupElement& g, bool conjugate) {
  std::vector<ComplexMatrix> out;
  for (int tj = 0; tj <= 1; ++tj) {
    ComplexMatrix d = wigner_d(SpinLabel(tj), g);
    out.push_back(conjugate ? ComplexMatrix(d.conjugate()) : d);
  }
  return out;
}

std::vector<ComplexMatrix> generator_blocks(Axis a, bool left) {
  std::vector<ComplexMatrix> out;
  for (int tj = 0; tj <= 1; ++tj) {
    const ComplexMatrix s = spin_matrices(SpinLabel(tj))[a];
    out.push_back(left ? ComplexMatrix(-s.conjugate()) : s);
  }
  return out;
}

}  // namespace

EdgeBasis::EdgeBasis(SpinLabel j_max) {
  for (int tj = 0; tj <= j_max.twice(); ++tj)
    for (int tm = -tj; tm <= tj; tm += 2)
      for (int tn = -tj; tn <= tj; tn += 2) states_.push_back({tj, tm, tn});
}

int EdgeBasis::index_of(const WignerIndex& w) const {
  const auto it = std::find(states_.begin(), states_.end(), w);
  if (it == states_.end()) throw InputError("Wigner label not in the edge basis");
  return static_cast<int>(it - states_.begin());
}

int edge_dimension(SpinLabel j_max) { return EdgeBasis(j_max).size(); }

const EdgeBasis& plaquette_edge_basis() {
  static const EdgeBasis basis(SpinLabel(1));
  return basis;
}

int PlaquetteGeometry::source(int edge) {
  check_edge(edge);
  return edge;
}

int PlaquetteGeometry::target(int edge) {
  check_edge(edge);
  return (edge + 1) % kNumVertices;
}

int PlaquetteGeometry::outgoing(int vertex) {
  check_vertex(vertex);
  return vertex;
}

int PlaquetteGeometry::incoming(int vertex) {
  check_vertex(vertex);
  return (vertex + kNumEdges - 1) % kNumEdges;
}

std::array<int, 2> PlaquetteGeometry::rest_edges(int vertex) {
  const int o = outgoing(vertex);
  const int i = incoming(vertex);
  std::array<int, 2> out{};
  int k = 0;
  for (int e = 0; e < kNumEdges; ++e)
    if (e != o && e != i) out[k++] = e;
  return out;
}

std::array<int, kNumEdges> edge_digits(int index) {
  if (index < 0 || index >= kPlaquetteDim) throw InputError("plaquette index out of range");
  std::array<int, kNumEdges> x{};
  for (int e = 0; e < kNumEdges; ++e) x[e] = (index / kPow5[e]) % kEdgeDim;
  return x;
}

int plaquette_index(const std::array<int, kNumEdges>& digits) {
  int out = 0;
  for (int e = 0; e < kNumEdges; ++e) {
    if (digits[e] < 0 || digits[e] >= kEdgeDim) throw InputError("edge digit out of range");
    out += digits[e] * kPow5[e];
  }
  return out;
}

ComplexMatrix embed_edge_operator(const ComplexMatrix& op, int edge) {
  check_edge(edge);
  if (op.rows() != kEdgeDim || op.cols() != kEdgeDim) {
    throw InputError("edge operator must be 5 x 5");
  }
  const int before = kPlaquetteDim / (kPow5[edge] * kEdgeDim);
  const int after = kPow5[edge];
  return kron(kron(ComplexMatrix::Identity(before, before), op),
              ComplexMatrix::Identity(after, after));
}

ComplexMatrix embed_vertex_operator(const ComplexMatrix& local, int vertex) {
  check_vertex(vertex);
  if (local.rows() != kVertexFactorDim || local.cols() != kVertexFactorDim) {
    throw InputError("vertex operator must be 25 x 25");
  }
  ComplexMatrix out = ComplexMatrix::Zero(kPlaquetteDim, kPlaquetteDim);
  for (int r = 0; r < kVertexFactorDim; ++r)
    for (int a = 0; a < kVertexFactorDim; ++a)
      for (int b = 0; b < kVertexFactorDim; ++b)
        if (local(a, b) != 0.0) out(full_index(vertex, a, r), full_index(vertex, b, r)) = local(a, b);
  return out;
}

ComplexMatrix edge_operator_on_m(const std::vector<ComplexMatrix>& blocks) {
  const EdgeBasis& basis = plaquette_edge_basis();
  ComplexMatrix out = ComplexMatrix::Zero(basis.size(), basis.size());
  for (int c = 0; c < basis.size(); ++c)
    for (int r = 0; r < basis.size(); ++r) {
      const WignerIndex& in = basis[c];
      const WignerIndex& to = basis[r];
      if (to.twice_j != in.twice_j || to.twice_n != in.twice_n) continue;
      out(r, c) = blocks.at(in.twice_j)((to.twice_m + to.twice_j) / 2, (in.twice_m + in.twice_j) / 2);
    }
  return out;
}

ComplexMatrix edge_operator_on_n(const std::vector<ComplexMatrix>& blocks) {
  const EdgeBasis& basis = plaquette_edge_basis();
  ComplexMatrix out = ComplexMatrix::Zero(basis.size(), basis.size());
  for (int c = 0; c < basis.size(); ++c)
    for (int r = 0; r < basis.size(); ++r) {
      const WignerIndex& in = basis[c];
      const WignerIndex& to = basis[r];
      if (to.twice_j != in.twice_j || to.twice_m != in.twice_m) continue;
      out(r, c) = blocks.at(in.twice_j)((to.twice_n + to.twice_j) / 2, (in.twice_n + in.twice_j) / 2);
    }
  return out;
}

ComplexMatrix local_gauge_generator(Axis a) {
  const ComplexMatrix id = ComplexMatrix::Identity(kEdgeDim, kEdgeDim);
  return kron(edge_operator_on_m(generator_blocks(a, true)), id) +
         kron(id, edge_operator_on_n(generator_blocks(a, false)));
}

ComplexMatrix local_casimir() {
  ComplexMatrix out = ComplexMatrix::Zero(kVertexFactorDim, kVertexFactorDim);
  for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
    const ComplexMatrix g = local_gauge_generator(a);
    out += g * g;
  }
  return out;
}

ComplexMatrix gauge_generator(int vertex, Axis a) {
  return embed_vertex_operator(local_gauge_generator(a), vertex);
}

ComplexMatrix casimir(int vertex) { return embed_vertex_operator(local_casimir(), vertex); }

ComplexMatrix local_gauge_action(const GroupElement& g) {
  return kron(edge_operator_on_m(spin_blocks(g, true)), edge_operator_on_n(spin_blocks(g, false)));
}

ComplexMatrix gauge_action(int vertex, const GroupElement& g) {
  return embed_vertex_operator(local_gauge_action(g), vertex);
}

int VertexSpectators::mismatches(const VertexSpectators& o) const {
  return (twice_j_out != o.twice_j_out) + (twice_n_out != o.twice_n_out) +
         (twice_j_in != o.twice_j_in) + (twice_m_in != o.twice_m_in);
}

VertexCGBasis::VertexCGBasis(int vertex, std::vector<LocalCGCopy> copies)
    : vertex_(vertex), copies_(std::move(copies)) {
  check_vertex(vertex);
}

std::vector<SpinLabel> VertexCGBasis::sectors() const {
  std::vector<SpinLabel> out;
  for (const auto& c : copies_)
    if (std::find(out.begin(), out.end(), c.J) == out.end()) out.push_back(c.J);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<const LocalCGCopy*> VertexCGBasis::local_copies(SpinLabel J) const {
  std::vector<const LocalCGCopy*> out;
  for (const auto& c : copies_)
    if (c.J == J) out.push_back(&c);
  std::sort(out.begin(), out.end(), [](auto* a, auto* b) { return a->alpha < b->alpha; });
  return out;
}

int VertexCGBasis::local_multiplicity(SpinLabel J) const {
  return static_cast<int>(local_copies(J).size());
}

int VertexCGBasis::multiplicity(SpinLabel J) const {
  return local_multiplicity(J) * kVertexFactorDim;
}

ComplexVector VertexCGBasis::vector(SpinLabel J, int twice_M, int alpha) const {
  if (std::abs(twice_M) > J.twice() || (J.twice() - twice_M) % 2 != 0) {
    throw InputError("M out of range for sector J=" + J.to_string());
  }
  const auto copies = local_copies(J);
  if (alpha < 0 || alpha >= static_cast<int>(copies.size()) * kVertexFactorDim) {
    throw InputError("multiplicity index out of range");
  }
  const LocalCGCopy& c = *copies[alpha / kVertexFactorDim];
  const int rest = alpha % kVertexFactorDim;
  ComplexVector out = ComplexVector::Zero(kPlaquetteDim);
  const auto col = c.vectors.col((twice_M + J.twice()) / 2);
  for (int l = 0; l < kVertexFactorDim; ++l)
    if (col(l) != 0.0) out(full_index(vertex_, l, rest)) = col(l);
  return out;
}

std::vector<CGEntry> VertexCGBasis::entries() const {
  std::vector<CGEntry> out;
  for (SpinLabel J : sectors()) {
    const int mu = multiplicity(J);
    for (int alpha = 0; alpha < mu; ++alpha)
      for (int tm = -J.twice(); tm <= J.twice(); tm += 2)
        out.push_back({J, tm, alpha, vector(J, tm, alpha)});
  }
  return out;
}

ComplexMatrix VertexCGBasis::matrix() const {
  const auto all = entries();
  ComplexMatrix out(kPlaquetteDim, static_cast<Eigen::Index>(all.size()));
  for (std::size_t k = 0; k < all.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = all[k].vector;
  return out;
}

int VertexCGBasis::recovery_target(SpinLabel J, int alpha) const {
  const auto copies = local_copies(J);
  if (alpha < 0 || alpha >= static_cast<int>(copies.size()) * kVertexFactorDim) {
    throw InputError("multiplicity index out of range");
  }
  return copies[alpha / kVertexFactorDim]->recovery_target * kVertexFactorDim +
         alpha % kVertexFactorDim;
}

ComplexMatrix VertexCGBasis::local_sector_projector(SpinLabel J, int twice_N) const {
  if (std::abs(twice_N) > J.twice() || (J.twice() - twice_N) % 2 != 0) {
    throw InputError("N out of range for sector J=" + J.to_string());
  }
  ComplexMatrix out = ComplexMatrix::Zero(kVertexFactorDim, kVertexFactorDim);
  for (const LocalCGCopy* c : local_copies(J)) {
    const auto col = c->vectors.col((twice_N + J.twice()) / 2);
    out += col * col.adjoint();
  }
  return out;
}

VertexCGBasis build_cg_basis(int vertex) {
  check_vertex(vertex);
  const EdgeBasis& edge = plaquette_edge_basis();
  const ComplexMatrix cas = local_casimir();
  const ComplexMatrix gz = local_gauge_generator(Axis::Z);
  const ComplexMatrix raise = local_gauge_generator(Axis::X) + kI * local_gauge_generator(Axis::Y);

  // The phase rule looks for the first large component in plaquette index
  // order, which differs from vertex-factor order when the incoming edge is
  // the more significant one.
  std::vector<int> phase_order(kVertexFactorDim);
  std::iota(phase_order.begin(), phase_order.end(), 0);
  std::sort(phase_order.begin(), phase_order.end(), [&](int a, int b) {
    return full_index(vertex, a, 0) < full_index(vertex, b, 0);
  });

  // Group vertex-factor states by their spectator labels.
  std::map<VertexSpectators, std::vector<int>> blocks;
  for (int l = 0; l < kVertexFactorDim; ++l) {
    const WignerIndex& o = edge[l / kEdgeDim];
    const WignerIndex& i = edge[l % kEdgeDim];
    blocks[{o.twice_j, o.twice_n, i.twice_j, i.twice_m}].push_back(l);
  }

  std::vector<LocalCGCopy> copies;
  for (const auto& [spect, states] : blocks) {
    const int n = static_cast<int>(states.size());
    ComplexMatrix c(n, n);
    ComplexMatrix z(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        c(a, b) = cas(states[a], states[b]);
        z(a, b) = gz(states[a], states[b]);
      }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(c);
    std::map<int, std::vector<int>> clusters;
    for (int k = 0; k < n; ++k) {
      const double w = es.eigenvalues()(k);
      const int tj = static_cast<int>(std::lround(std::sqrt(1.0 + 4.0 * std::max(w, 0.0)) - 1.0));
      if (std::abs(w - SpinLabel(tj).casimir()) > 1e-8) {
        throw NumericalError("Casimir eigenvalue " + std::to_string(w) + " matches no J(J+1)");
      }
      clusters[tj].push_back(k);
    }
    for (const auto& [tj, cols] : clusters) {
      const SpinLabel J(tj);
      ComplexMatrix sub(n, cols.size());
      for (std::size_t k = 0; k < cols.size(); ++k) sub.col(k) = es.eigenvectors().col(cols[k]);
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> ez(sub.adjoint() * z * sub);
      for (Eigen::Index k = 0; k < ez.eigenvalues().size(); ++k) {
        if (std::abs(ez.eigenvalues()(k) + J.value()) > 1e-8) continue;
        ComplexVector low = ComplexVector::Zero(kVertexFactorDim);
        const ComplexVector block_vec = sub * ez.eigenvectors().col(k);
        for (int a = 0; a < n; ++a) low(states[a]) = block_vec(a);

        const double top = low.cwiseAbs().maxCoeff();
        for (int l : phase_order) {
          if (std::abs(low(l)) >= top - 1e-10) {
            low *= std::abs(low(l)) / low(l);
            break;
          }
        }

        LocalCGCopy copy;
        copy.J = J;
        copy.spectators = spect;
        copy.vectors.resize(kVertexFactorDim, J.dim());
        copy.vectors.col(0) = low;
        for (int step = 1; step < J.dim(); ++step) {
          const double M = -J.value() + step - 1;
          copy.vectors.col(step) =
              raise * copy.vectors.col(step - 1) / std::sqrt(J.casimir() - M * (M + 1.0));
        }
        copies.push_back(std::move(copy));
      }
    }
  }

  // Multiplicity labels follow spectator order (the map iteration order).
  std::map<int, int> next_alpha;
  for (auto& c : copies) c.alpha = next_alpha[c.J.twice()]++;

  // Spectator-preserving pairing: each copy goes to the first unused singlet
  // with the fewest mismatched spectator labels.
  std::vector<const LocalCGCopy*> singlets;
  for (const auto& c : copies)
    if (c.J.twice() == 0) singlets.push_back(&c);
  std::map<int, std::vector<bool>> used;
  for (auto& c : copies) {
    if (c.J.twice() == 0) {
      c.recovery_target = c.alpha;
      continue;
    }
    auto& taken = used[c.J.twice()];
    taken.resize(singlets.size(), false);
    int best = -1;
    int best_cost = 0;
    for (std::size_t s = 0; s < singlets.size(); ++s) {
      if (taken[s]) continue;
      const int cost = c.spectators.mismatches(singlets[s]->spectators);
      if (best < 0 || cost < best_cost) {
        best = static_cast<int>(s);
        best_cost = cost;
      }
    }
    if (best < 0) throw NumericalError("sector J=" + c.J.to_string() + " has more copies than singlets");
    taken[best] = true;
    c.recovery_target = singlets[best]->alpha;
  }
  return VertexCGBasis(vertex, std::move(copies));
}

ComplexMatrix singlet_projector(int vertex) {
  return embed_vertex_operator(build_cg_basis(vertex).local_singlet_projector(), vertex);
}

ComplexMatrix physical_subspace_basis() {
  ComplexMatrix total = ComplexMatrix::Zero(kPlaquetteDim, kPlaquetteDim);
  for (int v = 0; v < kNumVertices; ++v) total += casimir(v);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(total);
  std::vector<Eigen::Index> null;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
    if (std::abs(es.eigenvalues()(k)) < 1e-8) null.push_back(k);
  ComplexMatrix out(kPlaquetteDim, static_cast<Eigen::Index>(null.size()));
  for (std::size_t k = 0; k < null.size(); ++k) out.col(k) = es.eigenvectors().col(null[k]);
  return out;
}

int physical_subspace_dimension() { return static_cast<int>(physical_subspace_basis().cols()); }

ComplexVector vacuum_state() {
  ComplexVector out = ComplexVector::Zero(kPlaquetteDim);
  out(0) = 1.0;
  return out;
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  if (std::abs(psi.norm() - 1.0) > 1e-10) throw InputError("state vector is not normalized");
  return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  if (dim <= 0) throw InputError("dimension must be positive");
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix rho) {
  if (rho.rows() != rho.cols() || rho.rows() == 0) throw InputError("density matrix must be square");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw InputError("density matrix is not Hermitian");
  }
  if (std::abs(rho.trace() - 1.0) > 1e-10) throw InputError("density matrix trace is not 1");
  return DensityMatrix(std::move(rho));
}

double DensityMatrix::hermiticity_error() const {
  return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
  const ComplexMatrix h = 0.5 * (rho_ + rho_.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

bool DensityMatrix::positive_within(double tol) const {
  const ComplexMatrix shifted =
      0.5 * (rho_ + rho_.adjoint()) + tol * ComplexMatrix::Identity(rho_.rows(), rho_.cols());
  return Eigen::LLT<ComplexMatrix>(shifted).info() == Eigen::Success;
}

double DensityMatrix::purity() const { return (rho_ * rho_).trace().real(); }

}  // namespace gaugecool
