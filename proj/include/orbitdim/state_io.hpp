// JSON state files.
//
//   {"modes": 2, "kind": "ket",
//    "terms": [{"occ": [1, 0], "re": 0.7071067811865476, "im": 0}, ...]}
//   {"modes": 1, "kind": "density",
//    "entries": [{"bra": [1], "ket": [1], "re": 1, "im": 0}, ...]}

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "orbitdim/fock.hpp"

namespace orbitdim {

/// Parse or validation failure. `line` is 1-based, 0 when unknown.
class StateFileError : public std::runtime_error {
 public:
  StateFileError(const std::string& message, int line);
  int line() const { return line_; }

 private:
  int line_;
};

using StateFile = std::variant<SparseKet, DensityOperator>;

/// Rejects unknown or duplicate keys, occupation lists of the wrong length,
/// negative occupations, non-finite amplitudes, repeated basis states, an
/// all-zero ket, and density operators failing DensityOperator validation.
StateFile parse_state(std::string_view text);
StateFile read_state(const std::filesystem::path& path);

/// Terms in basis order; amplitudes written with enough digits to round-trip.
std::string format_state(const SparseKet& psi);
std::string format_state(const DensityOperator& rho);
std::string format_state(const StateFile& state);

}  // namespace orbitdim
