#pragma once

// SU(2) representation primitives.
//
// All half-integer quantum numbers are stored doubled (twice_j, twice_m) so
// they stay exact. Inside a spin-j space the basis is ordered m = -j, ..., +j.
// Phases follow the Condon-Shortley convention. The "Pauli" matrices used
// throughout are 2 J_a in that ascending basis, so that the defining
// representation of exp(-i theta n.sigma/2) coincides with the group element.

#include <Eigen/Dense>

#include <complex>
#include <compare>
#include <random>
#include <string>

namespace gaugecool {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

class SpinLabel {
 public:
  constexpr SpinLabel() = default;
  /// Throws InputError when twice_j is negative.
  explicit SpinLabel(int twice_j);

  constexpr int twice() const { return twice_j_; }
  constexpr int dim() const { return twice_j_ + 1; }
  constexpr double value() const { return 0.5 * twice_j_; }
  constexpr double casimir() const { return value() * (value() + 1.0); }
  bool is_integer() const { return twice_j_ % 2 == 0; }

  /// "0", "1/2", "1", "3/2", ...
  std::string to_string() const;

  constexpr auto operator<=>(const SpinLabel&) const = default;

 private:
  int twice_j_ = 0;
};

/// An element of SU(2) in the defining representation.
class GroupElement {
 public:
  GroupElement() : u_(Eigen::Matrix2cd::Identity()) {}

  /// Throws InputError unless u is unitary with unit determinant within 1e-12.
  static GroupElement from_matrix(const Eigen::Matrix2cd& u);
  /// [[a + ib, c + id], [-c + id, a - ib]]; the 4-vector must have unit norm
  /// within `tol`.
  static GroupElement from_quaternion(double a, double b, double c, double d, double tol = 1e-12);
  static GroupElement identity() { return GroupElement{}; }

  const Eigen::Matrix2cd& matrix() const { return u_; }
  GroupElement inverse() const;
  GroupElement operator*(const GroupElement& other) const;

 private:
  explicit GroupElement(const Eigen::Matrix2cd& u) : u_(u) {}
  Eigen::Matrix2cd u_;
};

enum class Axis { X, Y, Z };
enum class Pauli { I, X, Y, Z };

struct SpinMatrices {
  ComplexMatrix x, y, z;

  ComplexMatrix raising() const { return x + Complex(0, 1) * y; }
  ComplexMatrix lowering() const { return x - Complex(0, 1) * y; }
  const ComplexMatrix& operator[](Axis a) const;
};

SpinMatrices spin_matrices(SpinLabel j);

/// <j1 m1; j2 m2 | J M>, all arguments doubled. Zero off the selection rules.
/// Throws InputError for |m| > j or mismatched parity of a (j, m) pair.
double clebsch_gordan(int twice_j1, int twice_m1, int twice_j2, int twice_m2, int twice_J,
                      int twice_M);

/// Spin-j representation matrix, evaluated as an exact polynomial in the
/// entries of g (symmetric tensor power), rows/columns ordered m = -j..+j.
ComplexMatrix wigner_d(SpinLabel j, const GroupElement& g);

/// chi_j(g) by the Chebyshev recursion chi_{j+1/2} = chi_{1/2} chi_j - chi_{j-1/2}.
Complex character(SpinLabel j, const GroupElement& g);

/// exp(-i theta sigma_a / 2).
GroupElement axis_rotation(Axis a, double theta);

/// Haar-distributed element: a uniform point on the 3-sphere.
GroupElement haar_sample(std::mt19937_64& rng);

/// 2 J_a in the ascending basis (identity for Pauli::I).
ComplexMatrix pauli(Pauli p);

/// Rank-1 spherical component: O_0 = Z, O_{+1} = -(X + iY)/sqrt2,
/// O_{-1} = (X - iY)/sqrt2. Throws InputError for q outside {-1, 0, 1}.
ComplexMatrix spherical_pauli(int q);

}  // namespace gaugecool
