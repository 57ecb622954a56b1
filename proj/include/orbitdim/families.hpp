// Structured state families with closed-form orbit dimensions, the generic
// dimension on a photon-number cutoff, and the derived checks built on them.

#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "orbitdim/fock.hpp"
#include "orbitdim/generators.hpp"
#include "orbitdim/gram.hpp"

namespace orbitdim {

/// |n_1, ..., n_m>.
struct FockFamily {
  Occupation occupation;
};

/// (sum_n amplitudes[n] |n>) on mode 1, tensored with the Fock state `tail`
/// on modes 2..m. Needs at least two nonzero amplitudes; normalized on use.
struct OneModeSuperposition {
  std::vector<Complex> amplitudes;
  std::vector<int> tail;
};

/// (|N,0> + |0,N>) / sqrt 2 on modes 1-2, tensored with the Fock state `tail`.
struct NoonFamily {
  int photons = 3;
  std::vector<int> tail;
};

using StateFamily = std::variant<FockFamily, OneModeSuperposition, NoonFamily>;

std::string family_name(const StateFamily& family);
/// Human-readable parameters, e.g. "n=(1,0,2)" or "N=3 tail=(0)".
std::string family_params(const StateFamily& family);
std::size_t family_modes(const StateFamily& family);
/// Number of unoccupied modes in the Fock-product part of the state.
int unoccupied_modes(const StateFamily& family);
/// The normalized ket. Throws std::invalid_argument on invalid parameters.
SparseKet family_state(const StateFamily& family);

enum class Exactness { Exact, UpperBoundOnly };

struct ClosedForm {
  long value = 0;
  Exactness exactness = Exactness::Exact;
};

/// Tabulated closed-form orbit dimension of a family. Throws
/// std::invalid_argument for the Mixed picture and for NOON with N < 3.
ClosedForm closed_form(const StateFamily& family, GroupKind group, Picture picture);

/// Orbit dimension reached with probability one by a uniformly random state
/// of at most `cutoff` photons. Ket and Ketbra pictures only.
long generic_dimension(GroupKind group, std::size_t modes, int cutoff, Picture picture);

/// Equal-weight superposition of the Fock states of at most min(2, cutoff)
/// photons in lexicographic order, with phases exp(2 pi i j / J), j = 1..J.
SparseKet uniform_phase_state(std::size_t modes, int cutoff);

struct WitnessResult {
  std::size_t dimension = 0;
  std::size_t threshold = 0;  // m (m + 3), the Gaussian-orbit dimension
  bool witnessed = false;
};

/// Gaussian-group ketbra orbit dimension compared against that of the vacuum.
WitnessResult nongaussianity_witness(const SparseKet& psi, const RankTolerance& tolerance = {});

struct CnotReport {
  GroupKind group = GroupKind::GO;
  SparseKet plus_zero{4};  // (|1,0,1,0> + |1,0,0,1>) / sqrt 2
  SparseKet bell{4};       // (|1,0,1,0> + |0,1,0,1>) / sqrt 2
  std::size_t plus_zero_dimension = 0;
  std::size_t bell_dimension = 0;
  /// Distinct ketbra dimensions rule out a deterministic CNOT in the group.
  bool cnot_excluded = false;
};

/// Dual-rail CNOT impossibility check: CNOT maps |+0>_L to |Phi+>_L, so the
/// two must share an orbit if CNOT belonged to the group.
CnotReport cnot_demo(GroupKind group = GroupKind::GO, const RankTolerance& tolerance = {});

}  // namespace orbitdim
