// Numerical regeneration of the closed-form orbit-dimension table over a
// fixed grid of Fock, NOON and one-mode-superposition states.

#pragma once

#include <cstddef>
#include <vector>

#include "orbitdim/families.hpp"
#include "orbitdim/gram.hpp"

namespace orbitdim {

/// Deterministic state grid on 1..m_max modes.
///  - Fock: every occupation with entries in {0,1,2,3} for m <= 3; for m = 4, 5
///    the {0,1} occupations plus a few fixed patterns with 2s and 3s.
///  - NOON: N in {3,4,5} for m >= 2, with empty, all-one and mixed tails.
///  - Superposition: 2, 3 and 4 terms with seeded complex amplitudes, over
///    the same tails.
std::vector<StateFamily> table2_states(std::size_t m_max);

struct Table2Row {
  StateFamily family;
  GroupKind group = GroupKind::PLO;
  Picture picture = Picture::Ket;
  std::size_t modes = 0;
  ClosedForm closed;
  std::size_t numerical = 0;
  /// Exact cells need equality, upper-bound cells numerical <= closed.
  bool pass = false;
};

Table2Row table2_row(const StateFamily& family, GroupKind group, Picture picture,
                     const RankTolerance& tolerance = {});

/// Every (state, group, picture) cell of the grid, state-major, then group in
/// PLO, DPLO, ALO, GO order, then ket before ketbra.
std::vector<Table2Row> table2(std::size_t m_max, const RankTolerance& tolerance = {});

}  // namespace orbitdim
