// Numerical check that a generator set closes under commutation.
//
// For every ordered pair (H_I, H_J) the commutator [iH_I, iH_J] is applied to
// a set of probe kets and fitted, in the real least-squares sense and jointly
// over all probes, by real combinations of the fitting set iH_K.

#pragma once

#include <cstddef>
#include <vector>

#include "orbitdim/fock.hpp"
#include "orbitdim/generators.hpp"

namespace orbitdim {

struct ClosureReport {
  std::vector<Generator> pairs;        // generators whose commutators were tested
  std::vector<Generator> fitting_set;  // generators used to expand them
  /// residual[I][J] = || sum_K c_K iH_K psi - [iH_I, iH_J] psi ||, stacked over probes.
  std::vector<std::vector<double>> residual;
  /// coefficients[I][J][K] = fitted c_K.
  std::vector<std::vector<std::vector<double>>> coefficients;
  double max_residual = 0.0;
  /// Smallest eigenvalue of the normal matrix A^T A of the fit.
  double min_normal_eigenvalue = 0.0;
};

/// Every Fock state with at most two photons, followed by the uniform-phase
/// state of cutoff 2.
std::vector<SparseKet> default_closure_probes(std::size_t modes);

/// Throws std::invalid_argument on an empty probe list.
ClosureReport verify_closure(const std::vector<Generator>& pairs,
                             const std::vector<Generator>& fitting_set,
                             const std::vector<SparseKet>& probes);

ClosureReport verify_closure(GroupKind group, std::size_t modes,
                             const std::vector<SparseKet>& probes);

inline ClosureReport verify_closure(GroupKind group, std::size_t modes) {
  return verify_closure(group, modes, default_closure_probes(modes));
}

}  // namespace orbitdim
