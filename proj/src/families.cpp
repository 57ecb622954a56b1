#include "orbitdim/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace orbitdim {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::string join(const std::vector<int>& values) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  out << ')';
  return out.str();
}

int count_zeros(std::span<const int> values) {
  return int(std::count(values.begin(), values.end(), 0));
}

std::vector<int> concat(std::vector<int> head, const std::vector<int>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

}  // namespace

std::string family_name(const StateFamily& family) {
  return std::visit(overloaded{[](const FockFamily&) { return std::string("fock"); },
                               [](const OneModeSuperposition&) { return std::string("superposition"); },
                               [](const NoonFamily&) { return std::string("noon"); }},
                    family);
}

std::string family_params(const StateFamily& family) {
  return std::visit(
      overloaded{
          [](const FockFamily& f) {
            const auto c = f.occupation.counts();
            return "n=" + join(std::vector<int>(c.begin(), c.end()));
          },
          [](const OneModeSuperposition& f) {
            return "terms=" + std::to_string(f.amplitudes.size()) + " tail=" + join(f.tail);
          },
          [](const NoonFamily& f) { return "N=" + std::to_string(f.photons) + " tail=" + join(f.tail); }},
      family);
}

std::size_t family_modes(const StateFamily& family) {
  return std::visit(overloaded{[](const FockFamily& f) { return f.occupation.modes(); },
                               [](const OneModeSuperposition& f) { return 1 + f.tail.size(); },
                               [](const NoonFamily& f) { return 2 + f.tail.size(); }},
                    family);
}

int unoccupied_modes(const StateFamily& family) {
  return std::visit(overloaded{[](const FockFamily& f) { return count_zeros(f.occupation.counts()); },
                               [](const OneModeSuperposition& f) { return count_zeros(f.tail); },
                               [](const NoonFamily& f) { return count_zeros(f.tail); }},
                    family);
}

SparseKet family_state(const StateFamily& family) {
  return std::visit(
      overloaded{
          [](const FockFamily& f) { return SparseKet::basis(f.occupation); },
          [](const OneModeSuperposition& f) {
            const auto nonzero = std::count_if(f.amplitudes.begin(), f.amplitudes.end(),
                                               [](Complex a) { return a != Complex{}; });
            if (nonzero < 2) {
              throw std::invalid_argument("a one-mode superposition needs at least two terms");
            }
            SparseKet psi(1 + f.tail.size());
            for (std::size_t n = 0; n < f.amplitudes.size(); ++n) {
              psi.add(Occupation(concat({int(n)}, f.tail)), f.amplitudes[n]);
            }
            return normalize(psi);
          },
          [](const NoonFamily& f) {
            if (f.photons < 1) throw std::invalid_argument("NOON state needs N >= 1");
            SparseKet psi(2 + f.tail.size());
            const Complex w = 1.0 / std::sqrt(2.0);
            psi.add(Occupation(concat({f.photons, 0}, f.tail)), w);
            psi.add(Occupation(concat({0, f.photons}, f.tail)), w);
            return psi;
          }},
      family);
}

ClosedForm closed_form(const StateFamily& family, GroupKind group, Picture picture) {
  if (picture == Picture::Mixed) {
    throw std::invalid_argument("closed forms are tabulated for pure states only");
  }
  const long m = long(family_modes(family));
  const long u = unoccupied_modes(family);
  const long delta = phase_delta(picture);
  const long occupied = u != m ? 1 : 0;
  const long unused = u * (u - 1);

  // Base value shared by all families for each group.
  long base = 0;
  switch (group) {
    case GroupKind::PLO: base = m * (m - 1); break;
    case GroupKind::DPLO: base = m * (m + 1); break;
    case GroupKind::ALO: base = 2 * m * m; break;
    case GroupKind::GO: base = 2 * m * (m + 1); break;
  }
  const bool displaced = has_displacements(group);

  if (std::holds_alternative<FockFamily>(family)) {
    return {base - unused + (displaced ? delta : delta * occupied), Exactness::Exact};
  }
  if (std::holds_alternative<OneModeSuperposition>(family)) {
    // An occupied tail mode k gives N_k psi = n_k psi, so without displacements
    // the ket picture gains the phase direction exactly when the tail is not
    // empty.
    const long tail_occupied = u != m - 1 ? 1 : 0;
    switch (group) {
      case GroupKind::PLO: return {base - unused + 1 + delta * tail_occupied, Exactness::Exact};
      case GroupKind::DPLO: return {base - unused + 1 + delta, Exactness::UpperBoundOnly};
      case GroupKind::ALO:
        return {base - unused + 1 + delta * tail_occupied, Exactness::UpperBoundOnly};
      case GroupKind::GO: return {base - unused + 1 + delta, Exactness::UpperBoundOnly};
    }
  }
  const auto& noon = std::get<NoonFamily>(family);
  if (noon.photons < 3) throw std::invalid_argument("the NOON closed form needs N >= 3");
  return {base - unused + 1 + delta, Exactness::Exact};
}

long generic_dimension(GroupKind group, std::size_t modes, int cutoff, Picture picture) {
  if (modes < 1) throw std::invalid_argument("generic_dimension needs at least one mode");
  if (cutoff < 0) throw std::invalid_argument("generic_dimension needs a nonnegative cutoff");
  if (picture == Picture::Mixed) {
    throw std::invalid_argument("generic_dimension is defined for the ket and ketbra pictures");
  }
  const long m = long(modes);
  long value = long(group_dimension(group, modes));
  if (cutoff == 0) value -= m * m;
  if (cutoff == 1) value -= (m - 1) * (m - 1);
  // The identity generator never moves a projector.
  if (picture == Picture::Ketbra && has_displacements(group)) value -= 1;
  return value;
}

SparseKet uniform_phase_state(std::size_t modes, int cutoff) {
  if (modes < 1) throw std::invalid_argument("uniform_phase_state needs at least one mode");
  if (cutoff < 0) throw std::invalid_argument("uniform_phase_state needs a nonnegative cutoff");
  const auto basis = fock_basis_up_to(modes, std::min(2, cutoff));
  const double count = double(basis.size());
  SparseKet psi(modes);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const double phase = 2.0 * std::numbers::pi * double(j + 1) / count;
    psi.add(basis[j], std::polar(1.0 / std::sqrt(count), phase));
  }
  return psi;
}

WitnessResult nongaussianity_witness(const SparseKet& psi, const RankTolerance& tolerance) {
  WitnessResult out;
  out.dimension = orbit_dimension(GroupKind::GO, psi, Picture::Ketbra, tolerance).rank;
  out.threshold = psi.modes() * (psi.modes() + 3);
  out.witnessed = out.dimension > out.threshold;
  return out;
}

CnotReport cnot_demo(GroupKind group, const RankTolerance& tolerance) {
  CnotReport report;
  report.group = group;
  const Complex w = 1.0 / std::sqrt(2.0);
  report.plus_zero = SparseKet(4);
  report.plus_zero.add(Occupation{1, 0, 1, 0}, w);
  report.plus_zero.add(Occupation{1, 0, 0, 1}, w);
  report.bell = SparseKet(4);
  report.bell.add(Occupation{1, 0, 1, 0}, w);
  report.bell.add(Occupation{0, 1, 0, 1}, w);
  report.plus_zero_dimension = orbit_dimension(group, report.plus_zero, Picture::Ketbra, tolerance).rank;
  report.bell_dimension = orbit_dimension(group, report.bell, Picture::Ketbra, tolerance).rank;
  report.cnot_excluded = report.plus_zero_dimension != report.bell_dimension;
  return report;
}

}  // namespace orbitdim
