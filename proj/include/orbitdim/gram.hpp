// Gram matrices of the infinitesimal group action on a state, and their
// numerical rank (the orbit dimension).

#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "orbitdim/fock.hpp"
#include "orbitdim/generators.hpp"

namespace orbitdim {

/// Ket: normalized vector, global phase is a direction.
/// Ketbra: rank-one projector of a pure state.
/// Mixed: arbitrary density operator.
enum class Picture { Ket, Ketbra, Mixed };

std::string_view to_string(Picture picture);
/// Accepts "ket", "ketbra", "mixed" (case-insensitive).
Picture parse_picture(std::string_view text);

/// 1 for the ket picture, 0 otherwise.
int phase_delta(Picture picture);

constexpr double kNormalizationTolerance = 1e-10;

struct GramMatrix {
  GroupKind group = GroupKind::PLO;
  Picture picture = Picture::Ket;
  LieBasis basis;
  Eigen::MatrixXd values;

  std::size_t dim() const { return std::size_t(values.rows()); }
};

/// Rank threshold policy. Relative: tau = value * max(1, lambda_max).
/// Absolute: tau = value.
struct RankTolerance {
  double value = 1e-8;
  bool relative = true;

  static RankTolerance absolute(double tau) { return {tau, false}; }
};

struct RankResult {
  std::size_t rank = 0;
  std::vector<double> eigenvalues;  // descending
  double tolerance_used = 0.0;
  bool relative = true;
};

/// Re <H_I psi | H_J psi>. Throws std::invalid_argument unless psi is
/// normalized within kNormalizationTolerance.
GramMatrix gram_ket(const LieBasis& basis, const SparseKet& psi);
GramMatrix gram_ket(GroupKind group, const SparseKet& psi);

/// 2 (E_psi({H_I, H_J}) - E_psi(H_I) E_psi(H_J)).
GramMatrix gram_ketbra(const LieBasis& basis, const SparseKet& psi);
GramMatrix gram_ketbra(GroupKind group, const SparseKet& psi);

/// <[H_I, rho] | [H_J, rho]> (Hilbert-Schmidt).
GramMatrix gram_mixed(const LieBasis& basis, const DensityOperator& rho);
GramMatrix gram_mixed(GroupKind group, const DensityOperator& rho);

// Cross-check routes built from expectation values and traces instead of
// inner products of applied vectors.

/// E_psi({H_I, H_J}) with {A, B} = (AB + BA) / 2.
Eigen::MatrixXd gram_ket_expectation_form(const LieBasis& basis, const SparseKet& psi);
/// E_psi(H_I) for every basis element.
Eigen::VectorXd expectation_values(const LieBasis& basis, const SparseKet& psi);
/// 2 Tr[{H_I, H_J} rho^2] - 2 Tr[H_I rho H_J rho].
Eigen::MatrixXd gram_mixed_trace_form(const LieBasis& basis, const DensityOperator& rho);

/// Throws std::invalid_argument on NaN or on a matrix that is not square.
RankResult rank_psd(const Eigen::MatrixXd& gram, const RankTolerance& tolerance = {});
inline RankResult rank_psd(const GramMatrix& gram, const RankTolerance& tolerance = {}) {
  return rank_psd(gram.values, tolerance);
}

/// Symmetry residual and PSD floor check used by the invariants.
double symmetry_residual(const Eigen::MatrixXd& gram);
bool is_psd(const Eigen::MatrixXd& gram);

/// Ket input: Ket / Ketbra pictures use the pure-state Gram matrices, Mixed
/// uses the projector |psi><psi|.
RankResult orbit_dimension(GroupKind group, const SparseKet& psi, Picture picture,
                           const RankTolerance& tolerance = {});
/// Density input: only the Mixed picture applies.
RankResult orbit_dimension(GroupKind group, const DensityOperator& rho,
                           const RankTolerance& tolerance = {});

GramMatrix gram(GroupKind group, const SparseKet& psi, Picture picture);

}  // namespace orbitdim
