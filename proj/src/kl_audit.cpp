#include "gaugecool/kl_audit.hpp"

#include "gaugecool/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gaugecool::kl {

namespace {

void check_edge(int k) {
  if (k < 0 || k > 3) throw InputError("coordination-4 edge index must be 0..3");
}

int qubit_index(int twice_m) { return (twice_m + 1) / 2; }

double cg(int j1, int m1, int j2, int m2, int J, int M) {
  if (std::abs(m1) > j1 || std::abs(m2) > j2 || std::abs(M) > J) return 0.0;
  return clebsch_gordan(j1, m1, j2, m2, J, M);
}

ComplexVector coupled(int j12, int j34, int J, int M) {
  ComplexVector v = ComplexVector::Zero(kCoord4Dim);
  for (int m1 : {-1, 1})
    for (int m2 : {-1, 1})
      for (int m3 : {-1, 1})
        for (int m4 : {-1, 1}) {
          const int m12 = m1 + m2;
          const int m34 = m3 + m4;
          if (m12 + m34 != M) continue;
          const double c = cg(1, m1, 1, m2, j12, m12) * cg(1, m3, 1, m4, j34, m34) * cg(j12, m12, j34, m34, J, M);
          const int i = qubit_index(m1) * 8 + qubit_index(m2) * 4 + qubit_index(m3) * 2 + qubit_index(m4);
          v(i) += c;
        }
  return v;
}

ComplexMatrix raw_map(const ComplexMatrix& op, int k, int twice_M) {
  const Coord4Basis basis = coord4_cg_basis();
  const ComplexMatrix e = single_qubit_error(op, k);
  return basis.sector_columns(2, twice_M).adjoint() * e * basis.sector_columns(0, 0);
}

}  // namespace

int Coord4Basis::multiplicity(int twice_J) const {
  return static_cast<int>(sector_labels(twice_J).size());
}

ComplexMatrix Coord4Basis::projector(int twice_J) const {
  ComplexMatrix out = ComplexMatrix::Zero(kCoord4Dim, kCoord4Dim);
  for (const auto& s : states_)
    if (s.twice_J == twice_J) out += s.vector * s.vector.adjoint();
  return out;
}

ComplexMatrix Coord4Basis::sector_columns(int twice_J, int twice_M) const {
  std::vector<const Coord4State*> picked;
  for (const auto& s : states_)
    if (s.twice_J == twice_J && s.twice_M == twice_M) picked.push_back(&s);
  if (picked.empty()) throw InputError("no states with the requested (J, M)");
  ComplexMatrix out(kCoord4Dim, static_cast<Eigen::Index>(picked.size()));
  for (std::size_t c = 0; c < picked.size(); ++c) out.col(static_cast<Eigen::Index>(c)) = picked[c]->vector;
  return out;
}

std::vector<std::array<int, 2>> Coord4Basis::sector_labels(int twice_J) const {
  std::vector<std::array<int, 2>> out;
  for (const auto& s : states_)
    if (s.twice_J == twice_J && s.twice_M == -twice_J) out.push_back({s.twice_j12, s.twice_j34});
  return out;
}

Coord4Basis coord4_cg_basis() {
  std::vector<Coord4State> states;
  for (int J = 0; J <= 4; J += 2)
    for (int j12 = 0; j12 <= 2; j12 += 2)
      for (int j34 = 0; j34 <= 2; j34 += 2) {
        if (J < std::abs(j12 - j34) || J > j12 + j34) continue;
        for (int M = -J; M <= J; M += 2) states.push_back({j12, j34, J, M, coupled(j12, j34, J, M)});
      }
  return Coord4Basis(std::move(states));
}

ErrorOperator pauli_error(Pauli p) {
  static const char* names[] = {"I", "X", "Y", "Z"};
  return {names[static_cast<int>(p)], pauli(p)};
}

ErrorOperator spherical_error(int q) {
  ComplexMatrix op = spherical_pauli(q);
  const std::string label = q == 0 ? "O0" : q > 0 ? "O+1" : "O-1";
  return {label, std::move(op)};
}

ComplexMatrix single_qubit_error(const ComplexMatrix& op, int k) {
  check_edge(k);
  if (op.rows() != 2 || op.cols() != 2) throw InputError("single-qubit error must be 2 x 2");
  const int after = 1 << (3 - k);
  const int before = 1 << k;
  ComplexMatrix out = ComplexMatrix::Zero(kCoord4Dim, kCoord4Dim);
  for (int hi = 0; hi < before; ++hi)
    for (int lo = 0; lo < after; ++lo)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) out((hi * 2 + a) * after + lo, (hi * 2 + b) * after + lo) = op(a, b);
  return out;
}

double singlet_block_norm(const ComplexMatrix& error) {
  const ComplexMatrix p0 = coord4_cg_basis().projector(0);
  return (p0 * error * p0).cwiseAbs().maxCoeff();
}

double detection_check(Pauli p, int k) { return singlet_block_norm(single_qubit_error(pauli(p), k)); }

double j2_leak(Pauli p, int k) {
  const Coord4Basis basis = coord4_cg_basis();
  return (basis.projector(4) * single_qubit_error(pauli(p), k) * basis.projector(0)).cwiseAbs().maxCoeff();
}

double reduced_matrix_element() {
  Eigen::JacobiSVD<ComplexMatrix> svd(raw_map(pauli(Pauli::Z), 0, 0));
  return svd.singularValues()(0);
}

MultiplicityMap multiplicity_map(const ErrorOperator& error, int k, int twice_M) {
  check_edge(k);
  if (twice_M != -2 && twice_M != 0 && twice_M != 2) throw InputError("triplet M must be -1, 0 or +1");
  MultiplicityMap out;
  out.label = error.label + std::to_string(k);
  out.edge = k;
  out.twice_M = twice_M;
  out.a = raw_map(error.op, k, twice_M) / reduced_matrix_element();
  return out;
}

ComplexMatrix kl_product(const MultiplicityMap& a, const MultiplicityMap& b) {
  if (a.twice_M != b.twice_M) throw InputError("multiplicity maps belong to different M sectors");
  return a.a.adjoint() * b.a;
}

std::vector<ResidualRow> residual_pauli_weights(const std::vector<MultiplicityMap>& maps, int reference_index) {
  if (reference_index < 0 || reference_index >= static_cast<int>(maps.size())) {
    throw InputError("reference map index out of range");
  }
  const MultiplicityMap& ref = maps[reference_index];
  const ComplexMatrix r = ref.a.completeOrthogonalDecomposition().pseudoInverse();
  // Standard Pauli matrices on the two-dimensional multiplicity space.
  std::array<Eigen::Matrix2cd, 4> basis;
  basis[0] << 1, 0, 0, 1;
  basis[1] << 0, 1, 1, 0;
  basis[2] << 0, Complex(0, -1), Complex(0, 1), 0;
  basis[3] << 1, 0, 0, -1;
  std::vector<ResidualRow> out;
  for (const auto& m : maps) {
    if (m.twice_M != ref.twice_M) throw InputError("maps belong to different M sectors");
    const ComplexMatrix b = r * m.a;
    ResidualRow row;
    row.label = m.label;
    double total = 0.0;
    for (int p = 0; p < 4; ++p) {
      row.weights[p] = std::norm((basis[p].adjoint() * b).trace() / 2.0);
      total += row.weights[p];
    }
    for (double& w : row.weights) w /= total;
    out.push_back(row);
  }
  return out;
}

std::string ConventionMatch::describe() const {
  if (!found) return "no column order or sign pattern reproduces the target";
  std::string out = columns_swapped ? "singlet columns swapped" : "singlet columns in declared order";
  if (signs[0] < 0 || signs[1] < 0) {
    out += ", sign flips on";
    if (signs[0] < 0) out += " column 0";
    if (signs[1] < 0) out += " column 1";
  } else {
    out += ", no phase flips";
  }
  return out;
}

ConventionMatch match_kl_convention(const ComplexMatrix& target) {
  const ComplexMatrix product = kl_product(multiplicity_map(pauli_error(Pauli::Z), 0, 0),
                                           multiplicity_map(pauli_error(Pauli::Z), 1, 0));
  ConventionMatch best;
  best.deviation = std::numeric_limits<double>::infinity();
  for (bool swapped : {false, true})
    for (int s0 : {1, -1})
      for (int s1 : {1, -1}) {
        ComplexMatrix t = ComplexMatrix::Zero(2, 2);
        t(swapped ? 1 : 0, 0) = s0;
        t(swapped ? 0 : 1, 1) = s1;
        const double dev = (t.adjoint() * product * t - target).cwiseAbs().maxCoeff();
        if (dev < best.deviation - 1e-14) {
          best.deviation = dev;
          best.columns_swapped = swapped;
          best.signs = {s0, s1};
        }
      }
  best.found = best.deviation < 1e-10;
  return best;
}

double wigner_eckart_residual(int q, int k) {
  const Coord4Basis basis = coord4_cg_basis();
  // One reduced map per edge, shared by all three components.
  const MultiplicityMap m = multiplicity_map(spherical_error(0), k, 0);
  const ComplexMatrix e = single_qubit_error(spherical_pauli(q), k);
  const ComplexMatrix singlets = basis.sector_columns(0, 0);
  const ComplexMatrix triplets = basis.sector_columns(2, 2 * q);
  const ComplexMatrix rebuilt = reduced_matrix_element() * triplets * m.a * singlets.adjoint();
  return (e * basis.projector(0) - rebuilt).cwiseAbs().maxCoeff();
}

}  // namespace gaugecool::kl
