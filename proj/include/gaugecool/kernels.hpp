#pragma once

// Density-matrix kernels on the 625-dimensional plaquette space.
//
// The top-level functions are OpenMP-parallel and exploit that every channel
// here touches one or two edges. The `serial` namespace holds straightforward
// reference implementations of the same maps, kept for cross-checking and
// benchmarking.

#include "gaugecool/lattice.hpp"

#include <vector>

namespace gaugecool::kernels {

/// Maps (local, rest) pairs to plaquette indices for an ordered set of edges.
/// The local index uses the given edge order (first edge most significant);
/// the rest index runs over the remaining edges in ascending order.
class EdgeLayout {
 public:
  explicit EdgeLayout(std::vector<int> edges);

  const std::vector<int>& edges() const { return edges_; }
  int local_dim() const { return local_dim_; }
  int rest_dim() const { return rest_dim_; }
  int full(int local, int rest) const { return map_[local * rest_dim_ + rest]; }

 private:
  std::vector<int> edges_;
  int local_dim_ = 1;
  int rest_dim_ = 1;
  std::vector<int> map_;
};

/// Layout of the vertex factor: (outgoing, incoming).
EdgeLayout vertex_layout(int vertex);

/// sum_K (K (x) 1) rho (K (x) 1)^dagger, the K given on the local space.
ComplexMatrix apply_local_kraus(const ComplexMatrix& rho, const EdgeLayout& layout,
                                const std::vector<ComplexMatrix>& kraus);

/// tr_e(rho) as a 125 x 125 matrix over the remaining edges in ascending order.
ComplexMatrix partial_trace_edge(const ComplexMatrix& rho, int edge);

/// (1 - p) rho + (p / 5) tr_e(rho) (x) 1_e.
ComplexMatrix depolarize_edge(const ComplexMatrix& rho, int edge, double p);

/// tr((op (x) 1) rho) for a local operator.
Complex local_expectation(const ComplexMatrix& rho, const EdgeLayout& layout, const ComplexMatrix& op);

/// U rho U^dagger for U = diag(phases) * W, where W equals `block` on the
/// index set `support` and the identity elsewhere.
ComplexMatrix conjugate_block_diagonal(const ComplexMatrix& rho, const std::vector<int>& support,
                                       const ComplexMatrix& block, const ComplexVector& phases);

namespace serial {

/// Applies each Kraus operator through its dense plaquette embedding.
ComplexMatrix apply_local_kraus(const ComplexMatrix& rho, const EdgeLayout& layout,
                                const std::vector<ComplexMatrix>& kraus);

/// Weyl-Heisenberg form: (1 - p) rho + (p / 25) sum_{k,l} W_kl rho W_kl^dagger
/// with W_kl = X^k Z^l the clock-and-shift operators on the edge.
ComplexMatrix depolarize_edge(const ComplexMatrix& rho, int edge, double p);

Complex local_expectation(const ComplexMatrix& rho, const EdgeLayout& layout, const ComplexMatrix& op);

/// Dense U rho U^dagger.
ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& rho);

/// Dense plaquette embedding of a local operator.
ComplexMatrix embed(const ComplexMatrix& op, const EdgeLayout& layout);

}  // namespace serial

}  // namespace gaugecool::kernels
