#pragma once

// Error-correction audit at a single vertex with four spin-1/2 edges,
// coupled as (12)(34) -> J. Qubit states are ordered m = -1/2, +1/2 and edge
// 0 is the most significant factor of the 16-dimensional space.

#include "gaugecool/su2.hpp"

#include <array>
#include <string>
#include <vector>

namespace gaugecool::kl {

inline constexpr int kCoord4Dim = 16;

struct Coord4State {
  int twice_j12 = 0;
  int twice_j34 = 0;
  int twice_J = 0;
  int twice_M = 0;
  ComplexVector vector;
};

class Coord4Basis {
 public:
  explicit Coord4Basis(std::vector<Coord4State> states) : states_(std::move(states)) {}

  const std::vector<Coord4State>& states() const { return states_; }
  int multiplicity(int twice_J) const;
  /// Projector onto the J sector.
  ComplexMatrix projector(int twice_J) const;
  /// Multiplicity copies of (J, M) in label order, as columns.
  ComplexMatrix sector_columns(int twice_J, int twice_M) const;
  /// (j12, j34) labels of the copies, doubled, in the same order.
  std::vector<std::array<int, 2>> sector_labels(int twice_J) const;

 private:
  std::vector<Coord4State> states_;
};

/// Ordered by J, then (j12, j34) lexicographically, then M.
Coord4Basis coord4_cg_basis();

struct ErrorOperator {
  std::string label;
  ComplexMatrix op;  // 2 x 2
};

ErrorOperator pauli_error(Pauli p);
/// Spherical component O^(1)_q; throws InputError for q outside {-1, 0, 1}.
ErrorOperator spherical_error(int q);

/// op on edge k, identity elsewhere. Throws InputError for k outside 0..3.
ComplexMatrix single_qubit_error(const ComplexMatrix& op, int k);

/// max |Pi_0 E Pi_0| for E = P on edge k.
double detection_check(Pauli p, int k);
/// max |Pi_2 E Pi_0|.
double j2_leak(Pauli p, int k);
/// max |Pi_0 E Pi_0| for an arbitrary 16 x 16 error.
double singlet_block_norm(const ComplexMatrix& error);

/// A_k: mu_1 x mu_0 matrix <1, M, beta| E |0, 0, alpha> divided by the
/// reduced matrix element, columns (j12, j34) = (0,0), (1,1) and rows
/// (0,1), (1,0), (1,1).
struct MultiplicityMap {
  std::string label;
  int edge = 0;
  int twice_M = 0;
  ComplexMatrix a;
};

/// The reduced matrix element used to normalize multiplicity maps: the
/// largest singular value of the raw Z map on edge 0 in the M = 0 sector.
double reduced_matrix_element();

/// Throws InputError for bad edge or M outside {-2, 0, 2}.
MultiplicityMap multiplicity_map(const ErrorOperator& error, int k, int twice_M);

/// A_a^dagger A_b. Throws InputError when the M sectors differ.
ComplexMatrix kl_product(const MultiplicityMap& a, const MultiplicityMap& b);

/// Weights (I, X, Y, Z), summing to 1, of R A_k in the Pauli basis of the
/// multiplicity space, with R the pseudoinverse of the reference map.
struct ResidualRow {
  std::string label;
  std::array<double, 4> weights{};
};

/// Maps must share one M sector; throws InputError otherwise or if the
/// reference index is out of range.
std::vector<ResidualRow> residual_pauli_weights(const std::vector<MultiplicityMap>& maps,
                                                int reference_index = 0);

/// The singlet-basis permutation and sign flips under which the computed
/// Z-error product on edges 0, 1 equals a target matrix.
struct ConventionMatch {
  bool found = false;
  bool columns_swapped = false;
  std::array<int, 2> signs{1, 1};
  double deviation = 0.0;
  std::string describe() const;
};

/// Tries both column orders and all sign patterns, identity first.
ConventionMatch match_kl_convention(const ComplexMatrix& target);

/// max |E Pi_0 - sum |1,q,beta> A_{beta alpha} <0,0,alpha|| for the spherical
/// error q on edge k, with A the q = 0 map of that edge.
double wigner_eckart_residual(int q, int k);

}  // namespace gaugecool::kl
