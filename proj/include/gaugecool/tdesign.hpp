#pragma once

// Unitary t-designs on SU(2), the truncated group Fourier transform, and the
// discrete-versus-continuum check of the syndrome operators.

#include "gaugecool/lattice.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace gaugecool {

/// ceil(2 k j_max + 2 k_out j_max). Throws InputError unless 0 <= k_out <= k.
int required_design_strength(int k, int k_out, SpinLabel j_max);

struct DesignSet {
  std::string name;
  std::vector<GroupElement> elements;
  /// 0 when unknown (e.g. read from a file).
  int claimed_t = 0;
  int size() const { return static_cast<int>(elements.size()); }
};

/// The 48-element lift of the single-qubit Clifford rotations; a 3-design.
DesignSet binary_octahedral_design();
/// The 24 Hurwitz units; a 2-design but not a 3-design.
DesignSet binary_tetrahedral_design();
/// {+-1, +-i sigma_a}; a 1-design only.
DesignSet quaternion_design();
/// n Haar-random elements.
DesignSet haar_random_set(int n, std::uint64_t seed);

struct BidegreeDeviation {
  int twice_j1 = 0;
  int twice_j2 = 0;
  double deviation = 0.0;
};

/// Schur-orthogonality deviation for every irrep pair with 2 j1, 2 j2 <= t.
/// Throws InputError for t < 1 or an empty set.
std::vector<BidegreeDeviation> tdesign_breakdown(const DesignSet& d, int t);
/// Maximum of tdesign_breakdown.
double verify_tdesign(const DesignSet& d, int t);

/// W with rows (j, m, n), j <= j_cut, and entries sqrt((2j+1)/n_t) conj(pi_j(g_i))_mn.
struct TruncatedQFT {
  SpinLabel j_cut;
  ComplexMatrix w;
  int d_out() const { return static_cast<int>(w.rows()); }
  int n_t() const { return static_cast<int>(w.cols()); }
};

/// Throws InputError when the set has fewer than d_out elements.
TruncatedQFT truncated_qft(const DesignSet& d, SpinLabel j_cut);
/// max |W^dagger W - K|, K_ik = sum_j (2j+1)/n_t chi_j(g_i g_k^-1).
double qft_kernel_check(const DesignSet& d, SpinLabel j_cut);
/// max |W W^dagger - 1|.
double qft_isometry_deviation(const TruncatedQFT& q);
/// Unitary whose first d_out rows are W; the rest orthonormalize the
/// standard basis vectors in index order. Throws InputError unless
/// W W^dagger = 1 within 1e-9.
ComplexMatrix embed_unitary(const TruncatedQFT& q);

struct SyndromeBlockDeviation {
  int twice_J = 0;
  int twice_M = 0;
  int twice_N = 0;
  int twice_j_out = 0;
  int twice_j_in = 0;
  /// max(2 j_in, 2J + 2 j_out): degrees of the integrand in g and conj(g).
  int bidegree = 0;
  double deviation = 0.0;
};

/// Deviation of sqrt(2J+1)/n_t sum_i conj(pi_J(g_i))_MN U^(v)(g_i) from the
/// continuum T^(J)_MN, per syndrome and per (j_out, j_in) block of the vertex
/// factor. U^(v) acts on the rest edges as the identity, so the comparison is
/// made on the vertex factor.
std::vector<SyndromeBlockDeviation> discrete_syndrome_breakdown(const DesignSet& d, int vertex);
double discrete_syndrome_check(const DesignSet& d, int vertex);

/// Plain text, one "a b c d" quaternion per line, '#' comments. Throws
/// InputError on unreadable files, malformed lines, or norms off by > 1e-9.
DesignSet read_design_file(const std::filesystem::path& path);
void write_design_file(const DesignSet& d, const std::filesystem::path& path);

}  // namespace gaugecool
