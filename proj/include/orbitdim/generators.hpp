// Quadratic Hamiltonians generating the passive, displaced, active and
// Gaussian unitary groups of multimode optics, and their Lie algebra bases.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "orbitdim/fock.hpp"

namespace orbitdim {

enum class GeneratorKind {
  BeamSplitterX,    // e_kl = (a_k^+ a_l + a_l^+ a_k) / 2
  BeamSplitterY,    // E_kl = i (a_k^+ a_l - a_l^+ a_k) / 2
  TwoModeSqueezeX,  // r_kl = (a_k^+ a_l^+ + a_k a_l) / 2
  TwoModeSqueezeY,  // R_kl = i (a_k^+ a_l^+ - a_k a_l) / 2
  Number,           // N_k = a_k^+ a_k
  SqueezeX,         // s_k = (a_k^+2 + a_k^2) / 2
  SqueezeY,         // S_k = i (a_k^+2 - a_k^2) / 2
  QuadratureQ,      // q_k = (a_k^+ + a_k) / sqrt 2
  QuadratureP,      // p_k = i (a_k^+ - a_k) / sqrt 2
  Identity,
};

bool is_two_mode(GeneratorKind kind);
bool is_one_mode(GeneratorKind kind);

/// Change in total photon number produced by each branch of the generator
/// (0 for number-preserving kinds, 1 for quadratures, 2 for squeezers).
int photon_shift(GeneratorKind kind);

/// One Hamiltonian of the catalog, tagged with the mode(s) it acts on.
struct Generator {
  GeneratorKind kind = GeneratorKind::Identity;
  std::size_t k = 0;  // first mode (0-based); unused for Identity
  std::size_t l = 0;  // second mode, k < l; two-mode kinds only

  static Generator two_mode(GeneratorKind kind, std::size_t k, std::size_t l);
  static Generator one_mode(GeneratorKind kind, std::size_t k);
  static Generator identity() { return {}; }

  bool number_preserving() const { return photon_shift(kind) == 0; }

  /// Throws std::out_of_range unless the mode indices fit `modes`.
  void validate(std::size_t modes) const;

  /// Conventional label with 1-based modes, e.g. "e_12", "q_1", "1".
  std::string label() const;

  bool operator==(const Generator&) const = default;
};

/// H psi, computed term by term from the ladder-operator matrix elements.
SparseKet apply_generator(const Generator& g, const SparseKet& psi);

/// H rho - rho H.
SparseOperator commutator_with_density(const Generator& g, const SparseOperator& rho);

/// H rho and rho H separately.
SparseOperator left_multiply(const Generator& g, const SparseOperator& rho);
SparseOperator right_multiply(const SparseOperator& rho, const Generator& g);

enum class GroupKind { PLO, DPLO, ALO, GO };

std::string_view to_string(GroupKind group);
/// Accepts "plo", "dplo", "alo", "go" (case-insensitive).
GroupKind parse_group(std::string_view text);

bool has_displacements(GroupKind group);
bool has_squeezing(GroupKind group);

/// Lie group dimension: m^2, m^2+2m+1, 2m^2+m, 2m^2+3m+1.
std::size_t group_dimension(GroupKind group, std::size_t modes);

/// Ordered Lie algebra basis (each element stands for i times the Hamiltonian).
///
/// Order: every e_kl (lexicographic in (k,l)), every E_kl, every N_k, then for
/// displaced groups every q_k, every p_k and the identity, then for active
/// groups every r_kl, every R_kl, every s_k, every S_k.
struct LieBasis {
  GroupKind group = GroupKind::PLO;
  std::size_t modes = 0;
  std::vector<Generator> elements;

  std::size_t size() const { return elements.size(); }
  /// Position of `g` in the basis; throws std::out_of_range if absent.
  std::size_t index_of(const Generator& g) const;
};

/// Throws std::invalid_argument for modes < 1.
LieBasis lie_basis(GroupKind group, std::size_t modes);

}  // namespace orbitdim
