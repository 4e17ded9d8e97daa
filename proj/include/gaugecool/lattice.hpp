#pragma once

// Single-plaquette Hilbert space in the Wigner basis.
//
// Edges e0..e3 run v0 -> v1 -> v2 -> v3 -> v0. Each edge carries the states
// |j, m, n> with j <= 1/2 (5 states); the full space is e0 (x) e1 (x) e2 (x) e3
// with e0 the most significant digit, 625 states in all. A gauge
// transformation at v acts on the m index of its outgoing edge and on the n
// index of its incoming edge. Those two edges form the "vertex factor" (local
// index x_out * 5 + x_in); every vertex operator is a 25 x 25 matrix on that
// factor tensored with the identity on the two remaining ("rest") edges.

#include "gaugecool/su2.hpp"

#include <array>
#include <compare>
#include <vector>

namespace gaugecool {

inline constexpr int kNumEdges = 4;
inline constexpr int kNumVertices = 4;
inline constexpr int kEdgeDim = 5;
inline constexpr int kVertexFactorDim = kEdgeDim * kEdgeDim;
inline constexpr int kPlaquetteDim = kEdgeDim * kEdgeDim * kEdgeDim * kEdgeDim;

struct WignerIndex {
  int twice_j = 0;
  int twice_m = 0;
  int twice_n = 0;
  constexpr auto operator<=>(const WignerIndex&) const = default;
};

/// Edge states ordered by j ascending, then m, then n.
class EdgeBasis {
 public:
  explicit EdgeBasis(SpinLabel j_max);

  int size() const { return static_cast<int>(states_.size()); }
  const WignerIndex& operator[](int i) const { return states_.at(i); }
  const std::vector<WignerIndex>& states() const { return states_; }
  /// Throws InputError if the label is not in the basis.
  int index_of(const WignerIndex& w) const;

 private:
  std::vector<WignerIndex> states_;
};

/// sum_{j <= j_max} (2j + 1)^2 over half-integer steps.
int edge_dimension(SpinLabel j_max);

/// The j_max = 1/2 basis: |0,0,0>, then |1/2,m,n> for (m,n) = (-,-),(-,+),(+,-),(+,+).
const EdgeBasis& plaquette_edge_basis();

struct PlaquetteGeometry {
  static int source(int edge);
  static int target(int edge);
  static int outgoing(int vertex);
  static int incoming(int vertex);
  /// The two edges not touching the vertex, ascending.
  static std::array<int, 2> rest_edges(int vertex);
};

std::array<int, kNumEdges> edge_digits(int index);
int plaquette_index(const std::array<int, kNumEdges>& digits);

/// op (x) identity on the other three edges. Throws InputError unless op is 5 x 5.
ComplexMatrix embed_edge_operator(const ComplexMatrix& op, int edge);

/// 25 x 25 operator on (out_edge, in_edge) of vertex v, embedded in the plaquette.
ComplexMatrix embed_vertex_operator(const ComplexMatrix& local, int vertex);

/// Edge operator that applies block(j) to the m index of each spin-j sector.
ComplexMatrix edge_operator_on_m(const std::vector<ComplexMatrix>& block_by_twice_j);
/// Edge operator that applies block(j) to the n index of each spin-j sector.
ComplexMatrix edge_operator_on_n(const std::vector<ComplexMatrix>& block_by_twice_j);

/// Gauge generator on the vertex factor: -J_a^* on the outgoing m index plus
/// J_a on the incoming n index. Identical for every vertex.
ComplexMatrix local_gauge_generator(Axis a);
ComplexMatrix local_casimir();

/// Hermitian generator G_a^(v) on the full 625-dimensional space.
ComplexMatrix gauge_generator(int vertex, Axis a);
/// C^(v) = sum_a (G_a^(v))^2.
ComplexMatrix casimir(int vertex);

/// conj(pi_j(g)) on the outgoing m index and pi_j(g) on the incoming n index.
ComplexMatrix local_gauge_action(const GroupElement& g);
ComplexMatrix gauge_action(int vertex, const GroupElement& g);

/// Labels at a vertex that its gauge transformation leaves untouched.
struct VertexSpectators {
  int twice_j_out = 0;
  int twice_n_out = 0;
  int twice_j_in = 0;
  int twice_m_in = 0;
  constexpr auto operator<=>(const VertexSpectators&) const = default;
  int mismatches(const VertexSpectators& other) const;
};

/// One multiplicity copy of a J sector on the vertex factor, M = -J..J.
struct LocalCGCopy {
  SpinLabel J;
  int alpha = 0;
  VertexSpectators spectators;
  /// Columns M = -J..J, each a unit vector of length 25.
  ComplexMatrix vectors;
  /// alpha of the singlet this copy is recovered into (itself for J = 0).
  int recovery_target = -1;
};

struct CGEntry {
  SpinLabel J;
  int twice_M = 0;
  int alpha = 0;
  ComplexVector vector;
};

/// Orthonormal |J, M, alpha> basis of the plaquette space at one vertex.
///
/// Built on the vertex factor and tensored with the rest edges: alpha runs
/// over (local copy, rest state) lexicographically, so the full multiplicity
/// of a sector is 25 times the local one.
class VertexCGBasis {
 public:
  VertexCGBasis(int vertex, std::vector<LocalCGCopy> copies);

  int vertex() const { return vertex_; }
  std::vector<SpinLabel> sectors() const;
  /// Local copies of the given sector, in alpha order.
  std::vector<const LocalCGCopy*> local_copies(SpinLabel J) const;
  const std::vector<LocalCGCopy>& local_copies() const { return copies_; }

  int multiplicity(SpinLabel J) const;
  int local_multiplicity(SpinLabel J) const;
  /// Full 625-dimensional vector |J, M, alpha>.
  ComplexVector vector(SpinLabel J, int twice_M, int alpha) const;
  /// Every basis vector, ordered by J, then alpha, then M.
  std::vector<CGEntry> entries() const;
  /// Columns are entries() in order.
  ComplexMatrix matrix() const;
  /// Singlet alpha that copy alpha of sector J is recovered into.
  int recovery_target(SpinLabel J, int alpha) const;

  /// P_N^J on the vertex factor.
  ComplexMatrix local_sector_projector(SpinLabel J, int twice_N) const;
  ComplexMatrix local_singlet_projector() const { return local_sector_projector(SpinLabel(0), 0); }

 private:
  int vertex_;
  std::vector<LocalCGCopy> copies_;
};

/// Throws NumericalError if a Casimir eigenvalue cluster matches no J(J+1)
/// within 1e-8 or a sector cannot be paired with singlets.
VertexCGBasis build_cg_basis(int vertex);

/// Orthogonal projector onto the J = 0 sector at the vertex (625 x 625).
ComplexMatrix singlet_projector(int vertex);

/// Dimension of the common null space of the four vertex Casimirs.
int physical_subspace_dimension();
/// Orthonormal basis (columns) of that null space.
ComplexMatrix physical_subspace_basis();

/// All edges in |0,0,0>.
ComplexVector vacuum_state();

class DensityMatrix {
 public:
  /// Throws InputError unless psi has unit norm within 1e-10.
  static DensityMatrix pure(const ComplexVector& psi);
  static DensityMatrix maximally_mixed(int dim);
  /// Throws InputError unless Hermitian and unit-trace within 1e-10.
  static DensityMatrix from_matrix(ComplexMatrix rho);
  /// No validation; for channel outputs that are checked separately.
  static DensityMatrix adopt(ComplexMatrix rho) { return DensityMatrix(std::move(rho)); }

  const ComplexMatrix& matrix() const { return rho_; }
  int dim() const { return static_cast<int>(rho_.rows()); }
  double trace() const { return rho_.trace().real(); }
  double hermiticity_error() const;
  double min_eigenvalue() const;
  /// True when rho + tol * 1 admits a Cholesky factorization, i.e. every
  /// eigenvalue is at least -tol. Much cheaper than min_eigenvalue().
  bool positive_within(double tol) const;
  double purity() const;

 private:
  explicit DensityMatrix(ComplexMatrix rho) : rho_(std::move(rho)) {}
  ComplexMatrix rho_;
};

}  // namespace gaugecool
