#include "catch_amalgamated.hpp"

#include "gaugecool/cooling.hpp"
#include "gaugecool/errors.hpp"
#include "gaugecool/tdesign.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

using namespace gaugecool;

namespace {

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

bool contains(const DesignSet& d, const Eigen::Matrix2cd& u) {
  for (const GroupElement& g : d.elements)
    if ((g.matrix() - u).cwiseAbs().maxCoeff() < 1e-12) return true;
  return false;
}

bool closed_group(const DesignSet& d) {
  for (const GroupElement& a : d.elements) {
    if (!contains(d, a.inverse().matrix())) return false;
    for (const GroupElement& b : d.elements)
      if (!contains(d, (a * b).matrix())) return false;
  }
  return true;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("gaugecool_" + name);
}

}  // namespace

TEST_CASE("required design strength", "[tdesign]") {
  CHECK(required_design_strength(2, 1, SpinLabel(1)) == 3);
  CHECK(required_design_strength(4, 2, SpinLabel(1)) == 6);
  for (int k = 1; k <= 6; ++k) CHECK(required_design_strength(k, 0, SpinLabel(1)) == k);
  CHECK_THROWS_AS(required_design_strength(2, 3, SpinLabel(1)), InputError);
}

TEST_CASE("built-in sets are groups of the expected order", "[tdesign]") {
  const DesignSet o = binary_octahedral_design();
  CHECK(o.size() == 48);
  CHECK(o.claimed_t == 3);
  CHECK(closed_group(o));
  CHECK(contains(o, Eigen::Matrix2cd::Identity()));
  CHECK(contains(o, -Eigen::Matrix2cd::Identity()));
  for (Axis a : {Axis::X, Axis::Y, Axis::Z}) CHECK(contains(o, axis_rotation(a, M_PI).matrix()));
  CHECK(binary_tetrahedral_design().size() == 24);
  CHECK(closed_group(binary_tetrahedral_design()));
  CHECK(quaternion_design().size() == 8);
  CHECK(closed_group(quaternion_design()));
}

TEST_CASE("design strengths", "[tdesign]") {
  const DesignSet o = binary_octahedral_design();
  for (int t = 1; t <= 3; ++t) CHECK(verify_tdesign(o, t) < 1e-12);
  CHECK(verify_tdesign(o, 4) > 0.01);
  const DesignSet tet = binary_tetrahedral_design();
  CHECK(verify_tdesign(tet, 2) < 1e-12);
  CHECK(verify_tdesign(tet, 3) > 0.01);
  const DesignSet q = quaternion_design();
  CHECK(verify_tdesign(q, 1) < 1e-12);
  CHECK(verify_tdesign(q, 2) > 0.01);
  const DesignSet single{"identity", {GroupElement::identity()}, 0};
  CHECK(verify_tdesign(single, 1) >= 0.5);
  CHECK_THROWS_AS(verify_tdesign(o, 0), InputError);
  CHECK_THROWS_AS(verify_tdesign(DesignSet{}, 1), InputError);
}

TEST_CASE("breakdown names the failing bidegree", "[tdesign]") {
  const auto rows = tdesign_breakdown(binary_octahedral_design(), 4);
  bool failing_high = false;
  for (const auto& r : rows) {
    if (std::max(r.twice_j1, r.twice_j2) <= 3) CHECK(r.deviation < 1e-12);
    if (r.deviation > 0.01) failing_high = std::max(r.twice_j1, r.twice_j2) == 4;
  }
  CHECK(failing_high);
}

TEST_CASE("truncated QFT", "[tdesign]") {
  const DesignSet o = binary_octahedral_design();
  const TruncatedQFT half = truncated_qft(o, SpinLabel(1));
  CHECK(half.d_out() == 5);
  CHECK(half.n_t() == 48);
  CHECK((half.w.row(0).array() - 1.0 / std::sqrt(48.0)).abs().maxCoeff() < 1e-15);
  CHECK(qft_isometry_deviation(half) < 1e-12);
  const TruncatedQFT one = truncated_qft(o, SpinLabel(2));
  CHECK(one.d_out() == 14);
  CHECK(qft_isometry_deviation(one) < 1e-12);
  CHECK(qft_kernel_check(o, SpinLabel(1)) < 1e-12);
  CHECK(qft_kernel_check(o, SpinLabel(2)) < 1e-12);
  CHECK(qft_kernel_check(haar_random_set(20, 4), SpinLabel(1)) < 1e-12);
  const ComplexMatrix k = half.w.adjoint() * half.w;
  CHECK(std::abs(k(3, 3) - 5.0 / 48.0) < 1e-14);
  CHECK_THROWS_AS(truncated_qft(quaternion_design(), SpinLabel(2)), InputError);
}

TEST_CASE("unitary embedding of the QFT", "[tdesign]") {
  const TruncatedQFT q = truncated_qft(binary_octahedral_design(), SpinLabel(2));
  const ComplexMatrix u = embed_unitary(q);
  CHECK(max_abs(u * u.adjoint() - ComplexMatrix::Identity(48, 48)) < 1e-9);
  CHECK(max_abs(u.topRows(14) - q.w) == 0.0);
  CHECK(max_abs(embed_unitary(q) - u) == 0.0);
  const TruncatedQFT broken = truncated_qft(haar_random_set(20, 1), SpinLabel(1));
  CHECK_THROWS_AS(embed_unitary(broken), InputError);
}

TEST_CASE("discrete syndrome operators equal the continuum ones", "[tdesign]") {
  const DesignSet o = binary_octahedral_design();
  for (int v = 0; v < kNumVertices; ++v) CHECK(discrete_syndrome_check(o, v) < 1e-10);
  const DesignSet tet = binary_tetrahedral_design();
  CHECK(discrete_syndrome_check(tet, 0) < 1e-10);
  const auto rows = discrete_syndrome_breakdown(quaternion_design(), 0);
  double worst = 0.0;
  for (const auto& r : rows) {
    worst = std::max(worst, r.deviation);
    if (r.bidegree <= 1) CHECK(r.deviation < 1e-10);
  }
  CHECK(worst > 0.1);
  CHECK(discrete_syndrome_check(haar_random_set(48, 7), 0) > 1e-3);
}

TEST_CASE("discrete singlet operator is the singlet projector", "[tdesign]") {
  const DesignSet o = binary_octahedral_design();
  ComplexMatrix avg = ComplexMatrix::Zero(25, 25);
  for (const GroupElement& g : o.elements) avg += local_gauge_action(g) / double(o.size());
  CHECK(max_abs(avg - default_cooler().basis(0).local_singlet_projector()) < 1e-10);
}

TEST_CASE("design files round trip and reject malformed input", "[tdesign]") {
  const auto path = temp_file("design.txt");
  write_design_file(binary_octahedral_design(), path);
  const DesignSet back = read_design_file(path);
  REQUIRE(back.size() == 48);
  CHECK(verify_tdesign(back, 3) < 1e-12);
  {
    std::ofstream f(path);
    f << "# comment\n1 0 0 0\n0.6 0.8 0 0\n0.5 0.5 0.5\n";
  }
  try {
    read_design_file(path);
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find(":4:") != std::string::npos);
  }
  {
    std::ofstream f(path);
    f << "1 1 0 0\n";
  }
  CHECK_THROWS_AS(read_design_file(path), InputError);
  CHECK_THROWS_AS(read_design_file(temp_file("missing.txt")), InputError);
  std::filesystem::remove(path);
}
