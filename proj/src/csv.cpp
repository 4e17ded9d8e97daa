#include "gaugecool/csv.hpp"

#include "gaugecool/kl_audit.hpp"

#include <cstdio>

namespace gaugecool::csv {

std::string number(double x) {
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (k) out += ',';
    out += fields[k];
  }
  out += '\n';
  return out;
}

void write_evolution(std::ostream& out, const std::vector<EvolutionRow>& rows) {
  out << "step,time,fidelity,gi_overlap,sweeps_used\n";
  for (const auto& r : rows)
    out << line({std::to_string(r.step), number(r.time), number(r.fidelity), number(r.gi_overlap),
                 std::to_string(r.sweeps_used)});
}

void write_convergence(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
  out << "sweep,gi_overlap,deficit\n";
  for (const auto& r : rows) out << line({std::to_string(r.sweep), number(r.gi_overlap), number(r.deficit)});
}

void write_kl_audit(std::ostream& out) {
  using namespace kl;
  out << "section,label,v1,v2,v3,v4\n";
  const Pauli paulis[] = {Pauli::X, Pauli::Y, Pauli::Z};
  for (Pauli p : paulis)
    for (int k = 0; k < 4; ++k) {
      const std::string label = pauli_error(p).label + std::to_string(k);
      out << line({"detection", label, number(detection_check(p, k)), number(j2_leak(p, k)), "", ""});
    }

  for (int q = -1; q <= 1; ++q)
    for (int k = 0; k < 4; ++k) {
      const MultiplicityMap m = multiplicity_map(spherical_error(q), k, 2 * q);
      Eigen::JacobiSVD<ComplexMatrix> svd(m.a);
      out << line({"singular_values", m.label, number(svd.singularValues()(0)), number(svd.singularValues()(1)), "", ""});
    }
  for (Pauli p : {Pauli::X, Pauli::Y})
    for (int k = 0; k < 4; ++k) {
      const MultiplicityMap m = multiplicity_map(pauli_error(p), k, 2);
      Eigen::JacobiSVD<ComplexMatrix> svd(m.a);
      out << line({"singular_values", m.label + "_M+1", number(svd.singularValues()(0)),
                   number(svd.singularValues()(1)), "", ""});
    }

  std::vector<MultiplicityMap> z;
  for (int k = 0; k < 4; ++k) z.push_back(multiplicity_map(pauli_error(Pauli::Z), k, 0));
  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b) {
      const ComplexMatrix p = kl_product(z[a], z[b]);
      out << line({"kl_product", z[a].label + "-" + z[b].label, number(p(0, 0).real()), number(p(0, 1).real()),
                   number(p(1, 0).real()), number(p(1, 1).real())});
    }
  ComplexMatrix target(2, 2);
  target << -1.0, 0.0, 0.0, 1.0 / 3.0;
  const ConventionMatch match = match_kl_convention(target);
  out << line({"convention", "\"" + match.describe() + "\"", number(match.deviation), "", "", ""});

  for (const auto& r : residual_pauli_weights(z))
    out << line({"residual_M0", r.label, number(r.weights[0]), number(r.weights[1]), number(r.weights[2]),
                 number(r.weights[3])});
  std::vector<MultiplicityMap> x;
  for (int k = 0; k < 4; ++k) x.push_back(multiplicity_map(pauli_error(Pauli::X), k, 2));
  for (const auto& r : residual_pauli_weights(x))
    out << line({"residual_M+1", r.label, number(r.weights[0]), number(r.weights[1]), number(r.weights[2]),
                 number(r.weights[3])});
}

}  // namespace gaugecool::csv
