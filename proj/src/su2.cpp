#include "gaugecool/su2.hpp"

#include "gaugecool/errors.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace gaugecool {

namespace {

constexpr Complex kI{0.0, 1.0};

double factorial(int n) {
  double out = 1.0;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

double binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

void check_pair(int twice_j, int twice_m) {
  if (twice_j < 0 || std::abs(twice_m) > twice_j || (twice_j - twice_m) % 2 != 0) {
    throw InputError("invalid angular momentum pair (2j=" + std::to_string(twice_j) +
                     ", 2m=" + std::to_string(twice_m) + ")");
  }
}

// Coupled states |J, M> of V_{j1} (x) V_{j2}, one column per M = -J..J, in the
// product basis index i1 * d2 + i2. The highest-weight column is the J(J+1)
// eigenvector of total J^2 inside the M = J eigenspace of total Jz, signed so
// that its m1 = j1 component is positive; lower M come from J_-.
ComplexMatrix coupled_states(int twice_j1, int twice_j2, int twice_J) {
  const SpinMatrices s1 = spin_matrices(SpinLabel(twice_j1));
  const SpinMatrices s2 = spin_matrices(SpinLabel(twice_j2));
  const int d1 = twice_j1 + 1;
  const int d2 = twice_j2 + 1;
  const int d = d1 * d2;
  const ComplexMatrix id1 = ComplexMatrix::Identity(d1, d1);
  const ComplexMatrix id2 = ComplexMatrix::Identity(d2, d2);

  auto kron = [](const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index j = 0; j < a.cols(); ++j)
        out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
  };
  const ComplexMatrix jx = kron(s1.x, id2) + kron(id1, s2.x);
  const ComplexMatrix jy = kron(s1.y, id2) + kron(id1, s2.y);
  const ComplexMatrix jz = kron(s1.z, id2) + kron(id1, s2.z);
  const ComplexMatrix j2 = jx * jx + jy * jy + jz * jz;
  const ComplexMatrix lower = jx - kI * jy;

  std::vector<int> top;
  for (int i = 0; i < d; ++i) {
    const int twice_m = (2 * (i / d2) - twice_j1) + (2 * (i % d2) - twice_j2);
    if (twice_m == twice_J) top.push_back(i);
  }
  ComplexMatrix restricted(top.size(), top.size());
  for (std::size_t a = 0; a < top.size(); ++a)
    for (std::size_t b = 0; b < top.size(); ++b) restricted(a, b) = j2(top[a], top[b]);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(restricted);
  const double target = 0.25 * twice_J * (twice_J + 2);
  Eigen::Index best = 0;
  for (Eigen::Index k = 1; k < solver.eigenvalues().size(); ++k) {
    if (std::abs(solver.eigenvalues()(k) - target) < std::abs(solver.eigenvalues()(best) - target))
      best = k;
  }
  if (std::abs(solver.eigenvalues()(best) - target) > 1e-9) {
    throw NumericalError("no J(J+1) eigenvalue in the highest-weight subspace");
  }
  ComplexVector hw = ComplexVector::Zero(d);
  for (std::size_t a = 0; a < top.size(); ++a) hw(top[a]) = solver.eigenvectors()(a, best);

  // Condon-Shortley: the coefficient with m1 = j1 is real positive.
  const int anchor = (d1 - 1) * d2 + (twice_J - twice_j1 + twice_j2) / 2;
  hw *= std::abs(hw(anchor)) / hw(anchor);

  ComplexMatrix out(d, twice_J + 1);
  out.col(twice_J) = hw;
  for (int k = twice_J; k > 0; --k) {
    const double J = 0.5 * twice_J;
    const double M = 0.5 * (2 * k - twice_J);
    out.col(k - 1) = lower * out.col(k) / std::sqrt(J * (J + 1) - M * (M - 1));
  }
  return out;
}

}  // namespace

SpinLabel::SpinLabel(int twice_j) : twice_j_(twice_j) {
  if (twice_j < 0) throw InputError("spin label must be non-negative");
}

std::string SpinLabel::to_string() const {
  if (twice_j_ % 2 == 0) return std::to_string(twice_j_ / 2);
  return std::to_string(twice_j_) + "/2";
}

GroupElement GroupElement::from_matrix(const Eigen::Matrix2cd& u) {
  const double unit_dev = (u.adjoint() * u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
  const double det_dev = std::abs(u.determinant() - 1.0);
  if (!(unit_dev <= 1e-12) || !(det_dev <= 1e-12)) {
    throw InputError("matrix is not an SU(2) element");
  }
  return GroupElement(u);
}

GroupElement GroupElement::from_quaternion(double a, double b, double c, double d, double tol) {
  const double norm2 = a * a + b * b + c * c + d * d;
  if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > tol) {
    throw InputError("quaternion does not have unit norm");
  }
  const double s = 1.0 / std::sqrt(norm2);
  Eigen::Matrix2cd u;
  u << Complex(a * s, b * s), Complex(c * s, d * s), Complex(-c * s, d * s), Complex(a * s, -b * s);
  return GroupElement(u);
}

GroupElement GroupElement::inverse() const { return GroupElement(u_.adjoint()); }

GroupElement GroupElement::operator*(const GroupElement& other) const {
  return GroupElement(u_ * other.u_);
}

const ComplexMatrix& SpinMatrices::operator[](Axis a) const {
  switch (a) {
    case Axis::X: return x;
    case Axis::Y: return y;
    case Axis::Z: return z;
  }
  return z;
}

SpinMatrices spin_matrices(SpinLabel j) {
  const int d = j.dim();
  const double jv = j.value();
  ComplexMatrix raise = ComplexMatrix::Zero(d, d);
  ComplexMatrix z = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    const double m = -jv + k;
    z(k, k) = m;
    if (k + 1 < d) raise(k + 1, k) = std::sqrt(jv * (jv + 1) - m * (m + 1));
  }
  const ComplexMatrix lower = raise.adjoint();
  SpinMatrices out;
  out.x = 0.5 * (raise + lower);
  out.y = (raise - lower) / (2.0 * kI);
  out.z = z;
  return out;
}

double clebsch_gordan(int twice_j1, int twice_m1, int twice_j2, int twice_m2, int twice_J,
                      int twice_M) {
  check_pair(twice_j1, twice_m1);
  check_pair(twice_j2, twice_m2);
  check_pair(twice_J, twice_M);
  if (twice_M != twice_m1 + twice_m2) return 0.0;
  if (twice_J < std::abs(twice_j1 - twice_j2) || twice_J > twice_j1 + twice_j2) return 0.0;
  if ((twice_j1 + twice_j2 - twice_J) % 2 != 0) return 0.0;

  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, ComplexMatrix> cache;
  const auto key = std::make_tuple(twice_j1, twice_j2, twice_J);
  ComplexMatrix states;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, coupled_states(twice_j1, twice_j2, twice_J)).first;
    states = it->second;
  }
  const int row = ((twice_m1 + twice_j1) / 2) * (twice_j2 + 1) + (twice_m2 + twice_j2) / 2;
  return states(row, (twice_M + twice_J) / 2).real();
}

ComplexMatrix wigner_d(SpinLabel j, const GroupElement& g) {
  const Eigen::Matrix2cd& u = g.matrix();
  const int tj = j.twice();
  const int d = j.dim();
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  // Column m: |j,m> ~ (a_up^dag)^p (a_down^dag)^q, p = j+m, q = j-m, and
  // a_k^dag -> sum_l u(l,k) a_l^dag with index 0 = down, 1 = up.
  for (int col = 0; col < d; ++col) {
    const int p = col;
    const int q = tj - col;
    for (int row = 0; row < d; ++row) {
      const int up = row;
      const int down = tj - row;
      Complex sum = 0.0;
      for (int k = std::max(0, up - q); k <= std::min(p, up); ++k) {
        sum += binomial(p, k) * std::pow(u(1, 1), k) * std::pow(u(0, 1), p - k) *
               binomial(q, up - k) * std::pow(u(1, 0), up - k) * std::pow(u(0, 0), q - up + k);
      }
      out(row, col) =
          sum * std::sqrt(factorial(up) * factorial(down) / (factorial(p) * factorial(q)));
    }
  }
  return out;
}

Complex character(SpinLabel j, const GroupElement& g) {
  const Complex half = g.matrix().trace();
  Complex prev = 1.0;
  if (j.twice() == 0) return prev;
  Complex cur = half;
  for (int k = 1; k < j.twice(); ++k) {
    const Complex next = half * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

GroupElement axis_rotation(Axis a, double theta) {
  const Pauli p = a == Axis::X ? Pauli::X : a == Axis::Y ? Pauli::Y : Pauli::Z;
  const Eigen::Matrix2cd sigma = pauli(p);
  const Eigen::Matrix2cd u =
      std::cos(theta / 2) * Eigen::Matrix2cd::Identity() - kI * std::sin(theta / 2) * sigma;
  return GroupElement::from_matrix(u);
}

GroupElement haar_sample(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  double x[4];
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (double& v : x) {
      v = normal(rng);
      norm2 += v * v;
    }
  } while (norm2 < 1e-24);
  const double s = 1.0 / std::sqrt(norm2);
  return GroupElement::from_quaternion(x[0] * s, x[1] * s, x[2] * s, x[3] * s);
}

ComplexMatrix pauli(Pauli p) {
  if (p == Pauli::I) return ComplexMatrix::Identity(2, 2);
  const SpinMatrices s = spin_matrices(SpinLabel(1));
  switch (p) {
    case Pauli::X: return 2.0 * s.x;
    case Pauli::Y: return 2.0 * s.y;
    default: return 2.0 * s.z;
  }
}

ComplexMatrix spherical_pauli(int q) {
  const ComplexMatrix x = pauli(Pauli::X);
  const ComplexMatrix y = pauli(Pauli::Y);
  switch (q) {
    case 0: return pauli(Pauli::Z);
    case 1: return -(x + kI * y) / std::sqrt(2.0);
    case -1: return (x - kI * y) / std::sqrt(2.0);
    default: throw InputError("spherical component q must be -1, 0 or +1");
  }
}

}  // namespace gaugecool
