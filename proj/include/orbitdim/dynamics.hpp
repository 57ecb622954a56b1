// Time evolution on photon-number-truncated subspaces, Hilbert-Schmidt
// overlaps of evolved copies, finite-difference Gram estimation, and seeded
// state sampling.

#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "orbitdim/fock.hpp"
#include "orbitdim/generators.hpp"
#include "orbitdim/gram.hpp"

namespace orbitdim {

/// Occupation vectors with total photon number in [min_total, max_total], in
/// lexicographic order, with a dense index.
class TruncatedBasis {
 public:
  /// All states of at most `cutoff` photons.
  TruncatedBasis(std::size_t modes, int cutoff);
  /// All states of exactly `photons` photons.
  static TruncatedBasis sector(std::size_t modes, int photons);

  std::size_t modes() const { return modes_; }
  int min_total() const { return min_total_; }
  int cutoff() const { return max_total_; }
  std::size_t size() const { return states_.size(); }
  const std::vector<Occupation>& states() const { return states_; }
  const Occupation& operator[](std::size_t i) const { return states_[i]; }
  std::optional<std::size_t> index_of(const Occupation& n) const;

  /// sum_{n=0}^{cutoff} binom(m + n - 1, n).
  static std::size_t expected_size(std::size_t modes, int cutoff);

 private:
  TruncatedBasis(std::size_t modes, int min_total, int max_total, std::vector<Occupation> states);

  std::size_t modes_;
  int min_total_;
  int max_total_;
  std::vector<Occupation> states_;
  std::map<Occupation, std::size_t> index_;
};

struct EvolutionConfig {
  int buffer = 16;                  // photons added above the state's support
  double leakage_tolerance = 1e-6;  // bound on boundary population and trace/norm drift
  double step = 1e-3;               // finite-difference step h
  bool richardson = true;           // combine h and h/2 stencils

  /// Throws std::invalid_argument on a negative buffer or nonpositive tolerances.
  void validate() const;
};

/// Raised when an evolution pushes more than the allowed weight to the
/// truncation boundary.
class LeakageError : public std::runtime_error {
 public:
  LeakageError(const std::string& what, double leakage)
      : std::runtime_error(what), leakage_(leakage) {}
  double leakage() const { return leakage_; }

 private:
  double leakage_;
};

/// <n|H|n'> over the basis. Couplings to states outside the basis are
/// dropped on both sides, so the result is Hermitian.
Eigen::MatrixXcd dense_hamiltonian(const Generator& g, const TruncatedBasis& basis);
/// Number of matrix elements of H that leave the basis (0 when the basis is
/// closed under g).
std::size_t truncated_couplings(const Generator& g, const TruncatedBasis& basis);

Eigen::VectorXcd to_dense(const SparseKet& psi, const TruncatedBasis& basis);
Eigen::MatrixXcd to_dense(const SparseOperator& op, const TruncatedBasis& basis);
/// Drops exact zeros only.
SparseKet ket_from_dense(const Eigen::VectorXcd& v, const TruncatedBasis& basis);
SparseOperator operator_from_dense(const Eigen::MatrixXcd& m, const TruncatedBasis& basis);

/// exp(-i H t) on a truncated basis from one Hermitian eigendecomposition.
class Propagator {
 public:
  Propagator(const Generator& g, const TruncatedBasis& basis);
  const Generator& generator() const { return generator_; }
  Eigen::MatrixXcd unitary(double t) const;

 private:
  Generator generator_;
  Eigen::MatrixXcd vectors_;
  Eigen::VectorXd values_;
};

struct EvolutionDiagnostics {
  double trace_deviation = 0.0;
  double hermiticity_residual = 0.0;
  /// Weight on the two outermost photon-number shells of the truncation.
  double boundary_population = 0.0;

  double worst() const;
};

/// Population of the shells with total photon number >= cutoff - 1.
double boundary_population(const Eigen::MatrixXcd& rho, const TruncatedBasis& basis);
double boundary_population(const Eigen::VectorXcd& psi, const TruncatedBasis& basis);

/// e^{-iHt} rho e^{iHt} on the cutoff (support + buffer). Throws LeakageError
/// when any diagnostic exceeds cfg.leakage_tolerance.
DensityOperator evolve_density(const DensityOperator& rho, const Generator& g, double t,
                               const EvolutionConfig& cfg = {},
                               EvolutionDiagnostics* diagnostics = nullptr);

struct BetaSample {
  std::optional<std::size_t> i;  // nullopt: unevolved copy
  std::optional<std::size_t> j;
  double t = 0.0;
  double value = 0.0;
  double imaginary_residue = 0.0;
};

struct GramEntryEstimate {
  double raw = 0.0;           // stencil with step h
  double raw_half = 0.0;      // stencil with step h / 2
  double extrapolated = 0.0;  // (4 raw_half - raw) / 3
  bool richardson = true;

  double value() const { return richardson ? extrapolated : raw; }
};

/// Estimates Gram entries of a density operator from second time derivatives
/// of overlaps between evolved copies. Propagators for every basis element
/// are built once on construction and shared read-only afterwards.
class GramEstimator {
 public:
  GramEstimator(const DensityOperator& rho, GroupKind group, EvolutionConfig cfg = {});

  const LieBasis& basis() const { return basis_; }
  const TruncatedBasis& truncation() const { return truncation_; }
  const EvolutionConfig& config() const { return cfg_; }

  /// <U_I(t) rho U_I(t)^+ | U_J(t) rho U_J(t)^+>.
  BetaSample beta(std::optional<std::size_t> i, std::optional<std::size_t> j, double t) const;

  /// (f(h) - 2 f(0) + f(-h)) / h^2 for f = beta(i, j, .).
  double second_derivative(std::optional<std::size_t> i, std::optional<std::size_t> j, double h) const;

  /// (beta_IJ'' - beta_I0'' - beta_0J'') / 2 at steps h and h/2. Entries are
  /// NaN when an evolution leaks.
  GramEntryEstimate entry(std::size_t i, std::size_t j) const;

  /// Every entry; `raw`, `raw_half`, `extrapolated` as matrices.
  struct Matrices {
    Eigen::MatrixXd raw, raw_half, extrapolated;
    bool leaked = false;
  };
  Matrices estimate_all() const;

 private:
  Eigen::MatrixXcd evolved(std::optional<std::size_t> i, double t) const;

  EvolutionConfig cfg_;
  LieBasis basis_;
  TruncatedBasis truncation_;
  Eigen::MatrixXcd rho_;
  std::vector<Propagator> propagators_;
};

BetaSample beta(const DensityOperator& rho, std::optional<std::size_t> i, std::optional<std::size_t> j,
                double t, GroupKind group, const EvolutionConfig& cfg = {});

GramEntryEstimate estimate_gram_entry(const DensityOperator& rho, std::size_t i, std::size_t j,
                                      GroupKind group, const EvolutionConfig& cfg = {});

/// Independent standard complex Gaussian amplitude on every Fock state of at
/// most `cutoff` photons, normalized. Deterministic in `seed`.
SparseKet sample_sphere_state(std::size_t modes, int cutoff, std::uint64_t seed);

struct WordFactor {
  Generator generator;
  double time = 0.0;
};

struct WordResult {
  SparseKet state;
  double norm_deviation = 0.0;
  double boundary_population = 0.0;
};

/// Applies exp(-i t_1 H_1) ... exp(-i t_a H_a) to psi, rightmost factor
/// first. Words made only of number-preserving generators are evaluated
/// sector by sector, exactly on each photon-number subspace; otherwise the
/// truncated space of cutoff (support + buffer) is used and leakage checked.
WordResult apply_group_word(const SparseKet& psi, std::span<const WordFactor> word,
                            const EvolutionConfig& cfg = {});

/// normalize(psi + eps chi) with chi a seeded sphere sample on the cutoff
/// subspace. eps = 0 returns psi unchanged.
SparseKet perturb_state(const SparseKet& psi, double eps, std::size_t modes, int cutoff,
                        std::uint64_t seed);

}  // namespace orbitdim
