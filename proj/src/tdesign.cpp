#include "gaugecool/tdesign.hpp"

#include "gaugecool/cooling.hpp"
#include "gaugecool/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace gaugecool {

namespace {

std::array<double, 4> quaternion(const GroupElement& g) {
  const auto& u = g.matrix();
  return {u(0, 0).real(), u(0, 0).imag(), u(0, 1).real(), u(0, 1).imag()};
}

void check_nonempty(const DesignSet& d) {
  if (d.elements.empty()) throw InputError("design set is empty");
}

}  // namespace

int required_design_strength(int k, int k_out, SpinLabel j_max) {
  if (k < 0 || k_out < 0 || k_out > k) throw InputError("need 0 <= k_out <= k");
  // 2 k j_max + 2 k_out j_max = (k + k_out) * twice_j_max, already an integer.
  return (k + k_out) * j_max.twice();
}

DesignSet binary_octahedral_design() {
  DesignSet d = binary_tetrahedral_design();
  d.name = "binary-octahedral";
  d.claimed_t = 3;
  const double h = 1.0 / std::sqrt(2.0);
  for (int p = 0; p < 4; ++p)
    for (int q = p + 1; q < 4; ++q)
      for (int sp : {1, -1})
        for (int sq : {1, -1}) {
          double x[4] = {0, 0, 0, 0};
          x[p] = sp * h;
          x[q] = sq * h;
          d.elements.push_back(GroupElement::from_quaternion(x[0], x[1], x[2], x[3]));
        }
  return d;
}

DesignSet binary_tetrahedral_design() {
  DesignSet d = quaternion_design();
  d.name = "binary-tetrahedral";
  d.claimed_t = 2;
  for (int s0 : {1, -1})
    for (int s1 : {1, -1})
      for (int s2 : {1, -1})
        for (int s3 : {1, -1})
          d.elements.push_back(GroupElement::from_quaternion(0.5 * s0, 0.5 * s1, 0.5 * s2, 0.5 * s3));
  return d;
}

DesignSet quaternion_design() {
  DesignSet d;
  d.name = "quaternion";
  d.claimed_t = 1;
  for (int axis = 0; axis < 4; ++axis)
    for (int s : {1, -1}) {
      double x[4] = {0, 0, 0, 0};
      x[axis] = s;
      d.elements.push_back(GroupElement::from_quaternion(x[0], x[1], x[2], x[3]));
    }
  return d;
}

DesignSet haar_random_set(int n, std::uint64_t seed) {
  if (n < 1) throw InputError("set size must be positive");
  std::mt19937_64 rng(seed);
  DesignSet d;
  d.name = "haar-random";
  for (int i = 0; i < n; ++i) d.elements.push_back(haar_sample(rng));
  return d;
}

std::vector<BidegreeDeviation> tdesign_breakdown(const DesignSet& d, int t) {
  if (t < 1) throw InputError("design strength must be at least 1");
  check_nonempty(d);
  std::vector<BidegreeDeviation> out;
  for (int a = 0; a <= t; ++a)
    for (int b = 0; b <= t; ++b) out.push_back({a, b, 0.0});
  std::vector<std::vector<ComplexMatrix>> reps(t + 1);
  for (int tj = 0; tj <= t; ++tj)
    for (const auto& g : d.elements) reps[tj].push_back(wigner_d(SpinLabel(tj), g));
  const double n = d.size();
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < static_cast<int>(out.size()); ++k) {
    const int a = out[k].twice_j1;
    const int b = out[k].twice_j2;
    const int da = a + 1;
    const int db = b + 1;
    // avg[(i1 * db + i2), (j1 * db + j2)] = <pi_a(g)_{i1 j1} conj(pi_b(g))_{i2 j2}>.
    ComplexMatrix avg = ComplexMatrix::Zero(da * db, da * db);
    for (int s = 0; s < d.size(); ++s) {
      const ComplexMatrix& x = reps[a][s];
      const ComplexMatrix& y = reps[b][s];
      for (int i1 = 0; i1 < da; ++i1)
        for (int j1 = 0; j1 < da; ++j1)
          for (int i2 = 0; i2 < db; ++i2)
            for (int j2 = 0; j2 < db; ++j2) avg(i1 * db + i2, j1 * db + j2) += x(i1, j1) * std::conj(y(i2, j2));
    }
    avg /= n;
    double dev = 0.0;
    for (int i1 = 0; i1 < da; ++i1)
      for (int j1 = 0; j1 < da; ++j1)
        for (int i2 = 0; i2 < db; ++i2)
          for (int j2 = 0; j2 < db; ++j2) {
            const double haar = (a == b && i1 == i2 && j1 == j2) ? 1.0 / da : 0.0;
            dev = std::max(dev, std::abs(avg(i1 * db + i2, j1 * db + j2) - haar));
          }
    out[k].deviation = dev;
  }
  return out;
}

double verify_tdesign(const DesignSet& d, int t) {
  double dev = 0.0;
  for (const auto& b : tdesign_breakdown(d, t)) dev = std::max(dev, b.deviation);
  return dev;
}

TruncatedQFT truncated_qft(const DesignSet& d, SpinLabel j_cut) {
  check_nonempty(d);
  const EdgeBasis basis(j_cut);
  if (d.size() < basis.size()) {
    throw InputError("design has " + std::to_string(d.size()) + " elements but the QFT needs at least " +
                     std::to_string(basis.size()));
  }
  TruncatedQFT q;
  q.j_cut = j_cut;
  q.w.resize(basis.size(), d.size());
  const double n = d.size();
  for (int i = 0; i < d.size(); ++i) {
    std::vector<ComplexMatrix> reps;
    for (int tj = 0; tj <= j_cut.twice(); ++tj) reps.push_back(wigner_d(SpinLabel(tj), d.elements[i]));
    for (int r = 0; r < basis.size(); ++r) {
      const WignerIndex& w = basis[r];
      q.w(r, i) = std::sqrt((w.twice_j + 1) / n) *
                  std::conj(reps[w.twice_j]((w.twice_m + w.twice_j) / 2, (w.twice_n + w.twice_j) / 2));
    }
  }
  return q;
}

double qft_kernel_check(const DesignSet& d, SpinLabel j_cut) {
  const TruncatedQFT q = truncated_qft(d, j_cut);
  const ComplexMatrix gram = q.w.adjoint() * q.w;
  const double n = d.size();
  double dev = 0.0;
  for (int i = 0; i < d.size(); ++i)
    for (int k = 0; k < d.size(); ++k) {
      const GroupElement rel = d.elements[i] * d.elements[k].inverse();
      Complex kernel = 0.0;
      for (int tj = 0; tj <= j_cut.twice(); ++tj) kernel += (tj + 1) / n * character(SpinLabel(tj), rel);
      dev = std::max(dev, std::abs(gram(i, k) - kernel));
    }
  return dev;
}

double qft_isometry_deviation(const TruncatedQFT& q) {
  return (q.w * q.w.adjoint() - ComplexMatrix::Identity(q.d_out(), q.d_out())).cwiseAbs().maxCoeff();
}

ComplexMatrix embed_unitary(const TruncatedQFT& q) {
  if (qft_isometry_deviation(q) > 1e-9) throw InputError("truncated QFT is not an isometry");
  const int n = q.n_t();
  std::vector<ComplexVector> rows;
  for (int r = 0; r < q.d_out(); ++r) rows.push_back(q.w.row(r).transpose());
  for (int k = 0; k < n && static_cast<int>(rows.size()) < n; ++k) {
    ComplexVector v = ComplexVector::Unit(n, k);
    // Two Gram-Schmidt passes keep the completion orthogonal to rounding.
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : rows) v -= u.dot(v) * u;
    const double norm = v.norm();
    if (norm > 1e-8) rows.push_back(v / norm);
  }
  ComplexMatrix out(n, n);
  for (int r = 0; r < n; ++r) out.row(r) = rows[r].transpose();
  out.topRows(q.d_out()) = q.w;
  return out;
}

std::vector<SyndromeBlockDeviation> discrete_syndrome_breakdown(const DesignSet& d, int vertex) {
  check_nonempty(d);
  const VertexCGBasis& basis = default_cooler().basis(vertex);
  const EdgeBasis& edge = plaquette_edge_basis();
  std::vector<ComplexMatrix> actions;
  for (const auto& g : d.elements) actions.push_back(local_gauge_action(g));
  const double n = d.size();

  std::vector<SyndromeBlockDeviation> out;
  for (SpinLabel J : basis.sectors()) {
    std::vector<ComplexMatrix> reps;
    for (const auto& g : d.elements) reps.push_back(wigner_d(J, g));
    for (int tm = -J.twice(); tm <= J.twice(); tm += 2)
      for (int tn = -J.twice(); tn <= J.twice(); tn += 2) {
        const Syndrome s{J, tm, tn};
        ComplexMatrix discrete = ComplexMatrix::Zero(kVertexFactorDim, kVertexFactorDim);
        for (int i = 0; i < d.size(); ++i)
          discrete += std::conj(reps[i]((tm + J.twice()) / 2, (tn + J.twice()) / 2)) * actions[i];
        discrete *= std::sqrt(static_cast<double>(J.dim())) / n;
        const ComplexMatrix diff = discrete - local_syndrome_operator(basis, s);
        for (int jo = 0; jo <= 1; ++jo)
          for (int ji = 0; ji <= 1; ++ji) {
            double dev = 0.0;
            for (int a = 0; a < kVertexFactorDim; ++a)
              for (int b = 0; b < kVertexFactorDim; ++b) {
                if (edge[a / kEdgeDim].twice_j != jo || edge[a % kEdgeDim].twice_j != ji) continue;
                if (edge[b / kEdgeDim].twice_j != jo || edge[b % kEdgeDim].twice_j != ji) continue;
                dev = std::max(dev, std::abs(diff(a, b)));
              }
            // The gauge action preserves (j_out, j_in), so off-block entries
            // must vanish as well; fold them into the block of the row.
            for (int a = 0; a < kVertexFactorDim; ++a)
              for (int b = 0; b < kVertexFactorDim; ++b) {
                if (edge[a / kEdgeDim].twice_j != jo || edge[a % kEdgeDim].twice_j != ji) continue;
                if (edge[b / kEdgeDim].twice_j == jo && edge[b % kEdgeDim].twice_j == ji) continue;
                dev = std::max(dev, std::abs(diff(a, b)));
              }
            out.push_back({J.twice(), tm, tn, jo, ji, std::max(ji, J.twice() + jo), dev});
          }
      }
  }
  return out;
}

double discrete_syndrome_check(const DesignSet& d, int vertex) {
  double dev = 0.0;
  for (const auto& b : discrete_syndrome_breakdown(d, vertex)) dev = std::max(dev, b.deviation);
  return dev;
}

DesignSet read_design_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open design file " + path.string());
  DesignSet d;
  d.name = path.filename().string();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    double a, b, c, e;
    std::string extra;
    if (!(fields >> a >> b >> c >> e) || (fields >> extra)) {
      throw InputError(path.string() + ":" + std::to_string(lineno) + ": expected four numbers");
    }
    try {
      d.elements.push_back(GroupElement::from_quaternion(a, b, c, e, 1e-9));
    } catch (const InputError&) {
      throw InputError(path.string() + ":" + std::to_string(lineno) + ": quaternion is not of unit norm");
    }
  }
  if (d.elements.empty()) throw InputError("design file " + path.string() + " has no elements");
  return d;
}

void write_design_file(const DesignSet& d, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write design file " + path.string());
  out << "# " << (d.name.empty() ? "design" : d.name) << ", " << d.size() << " elements\n";
  char buf[128];
  for (const auto& g : d.elements) {
    const auto x = quaternion(g);
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g %.17g\n", x[0], x[1], x[2], x[3]);
    out << buf;
  }
}

}  // namespace gaugecool
