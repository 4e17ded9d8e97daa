#include "gaugecool/kernels.hpp"

#include "gaugecool/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <tuple>

namespace gaugecool::kernels {

namespace {

void check_rho(const ComplexMatrix& rho) {
  if (rho.rows() != kPlaquetteDim || rho.cols() != kPlaquetteDim) {
    throw InputError("density matrix must be 625 x 625");
  }
}

void check_rate(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("channel rate must lie in [0, 1]");
}

struct SuperEntry {
  int a, b, c, d;
  Complex coef;
};

// out(a, b) += coef * rho(c, d) for the combined Kraus sum, duplicates merged.
std::vector<SuperEntry> superoperator(const std::vector<ComplexMatrix>& kraus) {
  std::map<std::tuple<int, int, int, int>, Complex> acc;
  for (const ComplexMatrix& k : kraus) {
    std::vector<std::tuple<int, int, Complex>> nz;
    for (Eigen::Index c = 0; c < k.cols(); ++c)
      for (Eigen::Index r = 0; r < k.rows(); ++r)
        if (k(r, c) != 0.0) nz.emplace_back(static_cast<int>(r), static_cast<int>(c), k(r, c));
    for (const auto& [a, c, x] : nz)
      for (const auto& [b, d, y] : nz) acc[{a, b, c, d}] += x * std::conj(y);
  }
  std::vector<SuperEntry> out;
  out.reserve(acc.size());
  for (const auto& [key, coef] : acc) {
    if (coef == 0.0) continue;
    const auto [a, b, c, d] = key;
    out.push_back({a, b, c, d, coef});
  }
  return out;
}

void check_kraus(const std::vector<ComplexMatrix>& kraus, const EdgeLayout& layout) {
  if (kraus.empty()) throw InputError("Kraus list is empty");
  for (const auto& k : kraus)
    if (k.rows() != layout.local_dim() || k.cols() != layout.local_dim()) {
      throw InputError("Kraus operator does not match the local dimension");
    }
}

}  // namespace

EdgeLayout::EdgeLayout(std::vector<int> edges) : edges_(std::move(edges)) {
  std::vector<bool> in(kNumEdges, false);
  for (int e : edges_) {
    if (e < 0 || e >= kNumEdges || in[e]) throw InputError("invalid edge layout");
    in[e] = true;
  }
  std::vector<int> rest;
  for (int e = 0; e < kNumEdges; ++e)
    if (!in[e]) rest.push_back(e);
  for (std::size_t k = 0; k < edges_.size(); ++k) local_dim_ *= kEdgeDim;
  for (std::size_t k = 0; k < rest.size(); ++k) rest_dim_ *= kEdgeDim;

  map_.resize(static_cast<std::size_t>(local_dim_) * rest_dim_);
  for (int l = 0; l < local_dim_; ++l)
    for (int r = 0; r < rest_dim_; ++r) {
      std::array<int, kNumEdges> x{};
      int t = l;
      for (int k = static_cast<int>(edges_.size()) - 1; k >= 0; --k, t /= kEdgeDim) x[edges_[k]] = t % kEdgeDim;
      t = r;
      for (int k = static_cast<int>(rest.size()) - 1; k >= 0; --k, t /= kEdgeDim) x[rest[k]] = t % kEdgeDim;
      map_[l * rest_dim_ + r] = plaquette_index(x);
    }
}

EdgeLayout vertex_layout(int vertex) {
  return EdgeLayout({PlaquetteGeometry::outgoing(vertex), PlaquetteGeometry::incoming(vertex)});
}

ComplexMatrix apply_local_kraus(const ComplexMatrix& rho, const EdgeLayout& layout,
                                const std::vector<ComplexMatrix>& kraus) {
  check_rho(rho);
  check_kraus(kraus, layout);
  const std::vector<SuperEntry> s = superoperator(kraus);
  const int nr = layout.rest_dim();
  ComplexMatrix out = ComplexMatrix::Zero(kPlaquetteDim, kPlaquetteDim);
  // Each (r, r') pair owns a disjoint block of the output.
#pragma omp parallel for collapse(2) schedule(static)
  for (int rc = 0; rc < nr; ++rc)
    for (int rr = 0; rr < nr; ++rr)
      for (const SuperEntry& e : s)
        out(layout.full(e.a, rr), layout.full(e.b, rc)) +=
            e.coef * rho(layout.full(e.c, rr), layout.full(e.d, rc));
  return out;
}

ComplexMatrix partial_trace_edge(const ComplexMatrix& rho, int edge) {
  check_rho(rho);
  const EdgeLayout layout({edge});
  const int nr = layout.rest_dim();
  ComplexMatrix out(nr, nr);
#pragma omp parallel for schedule(static)
  for (int rc = 0; rc < nr; ++rc)
    for (int rr = 0; rr < nr; ++rr) {
      Complex sum = 0.0;
      for (int x = 0; x < kEdgeDim; ++x) sum += rho(layout.full(x, rr), layout.full(x, rc));
      out(rr, rc) = sum;
    }
  return out;
}

ComplexMatrix depolarize_edge(const ComplexMatrix& rho, int edge, double p) {
  check_rate(p);
  const ComplexMatrix reduced = partial_trace_edge(rho, edge);
  const EdgeLayout layout({edge});
  const int nr = layout.rest_dim();
  ComplexMatrix out = (1.0 - p) * rho;
  const double w = p / kEdgeDim;
#pragma omp parallel for schedule(static)
  for (int rc = 0; rc < nr; ++rc)
    for (int rr = 0; rr < nr; ++rr)
      for (int x = 0; x < kEdgeDim; ++x) out(layout.full(x, rr), layout.full(x, rc)) += w * reduced(rr, rc);
  return out;
}

Complex local_expectation(const ComplexMatrix& rho, const EdgeLayout& layout, const ComplexMatrix& op) {
  check_rho(rho);
  const int nl = layout.local_dim();
  const int nr = layout.rest_dim();
  if (op.rows() != nl || op.cols() != nl) throw InputError("operator does not match the local dimension");
  double re = 0.0;
  double im = 0.0;
#pragma omp parallel for reduction(+ : re, im) schedule(static)
  for (int r = 0; r < nr; ++r)
    for (int a = 0; a < nl; ++a)
      for (int b = 0; b < nl; ++b) {
        if (op(a, b) == 0.0) continue;
        const Complex t = op(a, b) * rho(layout.full(b, r), layout.full(a, r));
        re += t.real();
        im += t.imag();
      }
  return {re, im};
}

ComplexMatrix conjugate_block_diagonal(const ComplexMatrix& rho, const std::vector<int>& support,
                                       const ComplexMatrix& block, const ComplexVector& phases) {
  check_rho(rho);
  const auto ns = static_cast<Eigen::Index>(support.size());
  if (block.rows() != ns || block.cols() != ns || phases.size() != kPlaquetteDim) {
    throw InputError("block propagator has inconsistent dimensions");
  }
  ComplexMatrix out = rho;
  if (ns > 0) {
    ComplexMatrix rows(ns, kPlaquetteDim);
    for (Eigen::Index k = 0; k < ns; ++k) rows.row(k) = rho.row(support[k]);
    rows = block * rows;
    for (Eigen::Index k = 0; k < ns; ++k) out.row(support[k]) = rows.row(k);
    ComplexMatrix cols(kPlaquetteDim, ns);
    for (Eigen::Index k = 0; k < ns; ++k) cols.col(k) = out.col(support[k]);
    cols = cols * block.adjoint();
    for (Eigen::Index k = 0; k < ns; ++k) out.col(support[k]) = cols.col(k);
  }
#pragma omp parallel for schedule(static)
  for (int c = 0; c < kPlaquetteDim; ++c) {
    const Complex pc = std::conj(phases(c));
    for (int r = 0; r < kPlaquetteDim; ++r) out(r, c) *= phases(r) * pc;
  }
  return out;
}

namespace serial {

ComplexMatrix embed(const ComplexMatrix& op, const EdgeLayout& layout) {
  ComplexMatrix out = ComplexMatrix::Zero(kPlaquetteDim, kPlaquetteDim);
  for (int r = 0; r < layout.rest_dim(); ++r)
    for (int a = 0; a < layout.local_dim(); ++a)
      for (int b = 0; b < layout.local_dim(); ++b) out(layout.full(a, r), layout.full(b, r)) = op(a, b);
  return out;
}

ComplexMatrix apply_local_kraus(const ComplexMatrix& rho, const EdgeLayout& layout,
                                const std::vector<ComplexMatrix>& kraus) {
  check_rho(rho);
  check_kraus(kraus, layout);
  ComplexMatrix out = ComplexMatrix::Zero(kPlaquetteDim, kPlaquetteDim);
  for (const ComplexMatrix& k : kraus) {
    const ComplexMatrix full = embed(k, layout);
    out.noalias() += full * rho * full.adjoint();
  }
  return out;
}

ComplexMatrix depolarize_edge(const ComplexMatrix& rho, int edge, double p) {
  check_rho(rho);
  check_rate(p);
  const EdgeLayout layout({edge});
  const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / kEdgeDim);
  ComplexMatrix out = (1.0 - p) * rho;
  const double w = p / (kEdgeDim * kEdgeDim);
  for (int k = 0; k < kEdgeDim; ++k)
    for (int l = 0; l < kEdgeDim; ++l) {
      ComplexMatrix weyl = ComplexMatrix::Zero(kEdgeDim, kEdgeDim);
      for (int x = 0; x < kEdgeDim; ++x) weyl((x + k) % kEdgeDim, x) = std::pow(omega, l * x);
      // W is monomial, so W rho W^dagger permutes and rephases entries.
      std::vector<int> target(kPlaquetteDim);
      std::vector<Complex> phase(kPlaquetteDim);
      for (int r = 0; r < layout.rest_dim(); ++r)
        for (int x = 0; x < kEdgeDim; ++x) {
          target[layout.full(x, r)] = layout.full((x + k) % kEdgeDim, r);
          phase[layout.full(x, r)] = weyl((x + k) % kEdgeDim, x);
        }
      for (int c = 0; c < kPlaquetteDim; ++c)
        for (int r = 0; r < kPlaquetteDim; ++r)
          out(target[r], target[c]) += w * phase[r] * std::conj(phase[c]) * rho(r, c);
    }
  return out;
}

Complex local_expectation(const ComplexMatrix& rho, const EdgeLayout& layout, const ComplexMatrix& op) {
  return (embed(op, layout) * rho).trace();
}

ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& rho) {
  return u * rho * u.adjoint();
}

}  // namespace serial

}  // namespace gaugecool::kernels
