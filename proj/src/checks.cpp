#include "gaugecool/checks.hpp"

#include "gaugecool/cooling.hpp"
#include "gaugecool/errors.hpp"
#include "gaugecool/hamiltonian.hpp"
#include "gaugecool/kl_audit.hpp"
#include "gaugecool/tdesign.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace gaugecool {

namespace {

class Collector {
 public:
  explicit Collector(std::string suite) : suite_(std::move(suite)) {}

  void below(const std::string& name, double measured, double tol, std::string detail = {}) {
    add(name, measured, tol, Bound::Below, measured < tol, std::move(detail));
  }
  void above(const std::string& name, double measured, double tol, std::string detail = {}) {
    add(name, measured, tol, Bound::Above, measured > tol, std::move(detail));
  }
  void equal(const std::string& name, double measured, double expected) {
    add(name, measured, expected, Bound::Equal, measured == expected, {});
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  void add(const std::string& name, double measured, double threshold, Bound b, bool ok, std::string detail) {
    results_.push_back({suite_, name, measured, threshold, b, ok && std::isfinite(measured), std::move(detail)});
  }
  std::string suite_;
  std::vector<CheckResult> results_;
};

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

std::string spin_text(int twice) { return SpinLabel(twice).to_string(); }

std::vector<CheckResult> hamiltonian_suite(const CheckOptions& opt) {
  Collector c("hamiltonian");
  const ComplexMatrix hb = magnetic_hamiltonian(1.0);
  const ComplexMatrix he = electric_hamiltonian(1.0);
  c.below("H_B hermiticity", max_abs(hb - hb.adjoint()), 1e-12);
  c.below("H_B imaginary part", hb.imag().cwiseAbs().maxCoeff(), 1e-12);
  for (int v = 0; v < kNumVertices; ++v) {
    const ComplexMatrix cv = casimir(v);
    c.below("[H_B, C] at v" + std::to_string(v), max_abs(hb * cv - cv * hb), 1e-10);
    c.below("[H_E, C] at v" + std::to_string(v), max_abs(he * cv - cv * he), 1e-12);
  }
  c.below("H_B(g2) scaling", max_abs(magnetic_hamiltonian(2.5) - hb / 2.5), 1e-14);
  c.equal("physical subspace dimension", physical_subspace_dimension(), 2);
  const ComplexMatrix oracle = haar_mc_oracle(100000, {opt.seed, 64, Execution::Parallel});
  c.below("Haar Monte Carlo max deviation", max_abs(oracle - plaquette_trace_matrix()), 0.05,
          "n=100000 seed=" + std::to_string(opt.seed));
  return c.take();
}

std::vector<CheckResult> tdesign_suite(const CheckOptions& opt) {
  Collector c("tdesign");
  const bool builtin = !opt.design_file.has_value();
  const DesignSet d = builtin ? binary_octahedral_design() : read_design_file(*opt.design_file);
  const int t = required_design_strength(2, 1, SpinLabel(1));
  c.equal("required strength, plaquette vertex", t, 3);
  c.equal("required strength, square-lattice vertex", required_design_strength(4, 2, SpinLabel(1)), 6);

  for (const auto& b : tdesign_breakdown(d, t)) {
    c.below(d.name + " Schur orthogonality (j1,j2)=(" + spin_text(b.twice_j1) + "," + spin_text(b.twice_j2) + ")",
            b.deviation, 1e-12);
  }
  if (builtin) c.above(d.name + " is not a 4-design", verify_tdesign(d, 4), 0.01);
  for (int v = 0; v < kNumVertices; ++v)
    c.below(d.name + " discrete syndrome operators at v" + std::to_string(v), discrete_syndrome_check(d, v), 1e-10);
  return c.take();
}

std::vector<CheckResult> qft_suite(const CheckOptions&) {
  Collector c("qft");
  const DesignSet d = binary_octahedral_design();
  for (int tj : {1, 2}) {
    const SpinLabel cut(tj);
    const TruncatedQFT q = truncated_qft(d, cut);
    const std::string tag = " j_cut=" + cut.to_string();
    c.below("W W^dagger = 1" + tag, qft_isometry_deviation(q), 1e-12);
    c.below("character kernel" + tag, qft_kernel_check(d, cut), 1e-12);
    const ComplexMatrix u = embed_unitary(q);
    c.below("embedded unitary" + tag, max_abs(u * u.adjoint() - ComplexMatrix::Identity(u.rows(), u.cols())), 1e-9);
  }
  return c.take();
}

std::vector<CheckResult> detection_suite(const CheckOptions&) {
  using namespace kl;
  Collector c("detection");
  for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z})
    for (int k = 0; k < 4; ++k) {
      const std::string label = pauli_error(p).label + std::to_string(k);
      c.below("Pi_0 E Pi_0 for " + label, detection_check(p, k), 1e-12);
      c.below("Pi_2 E Pi_0 for " + label, j2_leak(p, k), 1e-12);
    }
  std::vector<MultiplicityMap> z;
  for (int k = 0; k < 4; ++k) z.push_back(multiplicity_map(pauli_error(Pauli::Z), k, 0));
  for (int k = 0; k < 4; ++k) {
    const ComplexMatrix p = kl_product(z[k], z[k]);
    const double scale = p.trace().real() / 2.0;
    c.below("A^dagger A proportional to 1 for " + z[k].label,
            max_abs(p - scale * ComplexMatrix::Identity(2, 2)), 1e-10);
  }
  ComplexMatrix target(2, 2);
  target << -1.0, 0.0, 0.0, 1.0 / 3.0;
  const ConventionMatch match = match_kl_convention(target);
  c.below("A_Z0^dagger A_Z1 = diag(-1, 1/3)", max_abs(kl_product(z[0], z[1]) - target), 1e-10, match.describe());

  const double published[4][4] = {{1, 0, 0, 0}, {0.2, 0, 0, 0.8}, {0.2, 0.6, 0, 0.2}, {0.2, 0.6, 0, 0.2}};
  const auto rows = residual_pauli_weights(z);
  for (int k = 0; k < 4; ++k) {
    double dev = 0.0;
    for (int p = 0; p < 4; ++p) dev = std::max(dev, std::abs(rows[k].weights[p] - published[k][p]));
    c.below("residual weights " + rows[k].label, dev, 0.01);
    c.below("residual Y weight " + rows[k].label, rows[k].weights[2], 1e-10);
  }
  return c.take();
}

}  // namespace

bool CheckReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

std::string CheckReport::text() const {
  std::ostringstream out;
  int ok = 0;
  for (const auto& r : results) {
    const char* rel = r.bound == Bound::Below ? "<" : r.bound == Bound::Above ? ">" : "==";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e %s %.3e", r.measured, rel, r.threshold);
    out << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.name << " (" << buf << ")";
    if (!r.detail.empty()) out << " [" << r.detail << "]";
    out << '\n';
    ok += r.passed;
  }
  out << ok << "/" << results.size() << " checks passed\n";
  return out.str();
}

const std::vector<std::string>& check_suite_names() {
  static const std::vector<std::string> names = {"hamiltonian", "tdesign", "qft", "detection"};
  return names;
}

CheckReport run_check_suite(const std::string& suite, const CheckOptions& options) {
  std::vector<std::string> run;
  if (suite == "all") {
    run = check_suite_names();
  } else if (std::find(check_suite_names().begin(), check_suite_names().end(), suite) != check_suite_names().end()) {
    run = {suite};
  } else {
    throw InputError("unknown check suite '" + suite + "'");
  }
  CheckReport report;
  for (const auto& name : run) {
    std::vector<CheckResult> part;
    if (name == "hamiltonian") part = hamiltonian_suite(options);
    if (name == "tdesign") part = tdesign_suite(options);
    if (name == "qft") part = qft_suite(options);
    if (name == "detection") part = detection_suite(options);
    report.results.insert(report.results.end(), part.begin(), part.end());
  }
  return report;
}

}  // namespace gaugecool
