#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "orbitdim/fock.hpp"
#include "orbitdim/random.hpp"

namespace orbitdim::testing {

// Random complex amplitudes on every Fock state of at most `cutoff` photons,
// with roughly a third of the terms left out.
inline SparseKet random_ket(std::size_t modes, int cutoff, std::uint64_t seed) {
  Rng rng(seed);
  SparseKet psi(modes);
  for (const auto& n : fock_basis_up_to(modes, cutoff)) {
    if (rng.uniform() < 0.33) continue;
    psi.add(n, Complex(rng.normal(), rng.normal()));
  }
  if (psi.empty()) psi.add(Occupation::vacuum(modes), 1.0);
  return psi;
}

inline double max_abs_diff(const SparseKet& a, const SparseKet& b) {
  double out = 0.0;
  const SparseKet diff = a - b;
  for (const auto& [n, v] : diff.terms()) out = std::max(out, std::abs(v));
  return out;
}

inline double max_abs_diff(const SparseOperator& a, const SparseOperator& b) {
  double out = 0.0;
  const SparseOperator diff = a - b;
  for (const auto& [k, v] : diff.entries()) out = std::max(out, std::abs(v));
  return out;
}

inline double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

}  // namespace orbitdim::testing
