#include "orbitdim/generators.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace orbitdim {

namespace {

constexpr Complex kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

double root(long n) { return std::sqrt(double(n)); }

// Emits H|n> (scaled by `a`) into `out` for the one-term input a|n>.
void apply_to_term(const Generator& g, const Occupation& n, Complex a, SparseKet& out) {
  const std::size_t k = g.k;
  const std::size_t l = g.l;
  switch (g.kind) {
    case GeneratorKind::BeamSplitterX:
    case GeneratorKind::BeamSplitterY: {
      // a_k^+ a_l and a_l^+ a_k branches
      const Complex up = g.kind == GeneratorKind::BeamSplitterX ? Complex(0.5) : 0.5 * kI;
      const Complex down = g.kind == GeneratorKind::BeamSplitterX ? Complex(0.5) : -0.5 * kI;
      if (n[l] > 0) {
        out.add(n.shifted(k, +1).shifted(l, -1), up * root(long(n[l]) * (n[k] + 1)) * a);
      }
      if (n[k] > 0) {
        out.add(n.shifted(k, -1).shifted(l, +1), down * root(long(n[k]) * (n[l] + 1)) * a);
      }
      break;
    }
    case GeneratorKind::TwoModeSqueezeX:
    case GeneratorKind::TwoModeSqueezeY: {
      const Complex up = g.kind == GeneratorKind::TwoModeSqueezeX ? Complex(0.5) : 0.5 * kI;
      const Complex down = g.kind == GeneratorKind::TwoModeSqueezeX ? Complex(0.5) : -0.5 * kI;
      out.add(n.shifted(k, +1).shifted(l, +1), up * root(long(n[k] + 1) * (n[l] + 1)) * a);
      if (n[k] > 0 && n[l] > 0) {
        out.add(n.shifted(k, -1).shifted(l, -1), down * root(long(n[k]) * n[l]) * a);
      }
      break;
    }
    case GeneratorKind::Number:
      if (n[k] > 0) out.add(n, double(n[k]) * a);
      break;
    case GeneratorKind::SqueezeX:
    case GeneratorKind::SqueezeY: {
      const Complex up = g.kind == GeneratorKind::SqueezeX ? Complex(0.5) : 0.5 * kI;
      const Complex down = g.kind == GeneratorKind::SqueezeX ? Complex(0.5) : -0.5 * kI;
      out.add(n.shifted(k, +2), up * root(long(n[k] + 1) * (n[k] + 2)) * a);
      if (n[k] > 1) out.add(n.shifted(k, -2), down * root(long(n[k]) * (n[k] - 1)) * a);
      break;
    }
    case GeneratorKind::QuadratureQ:
    case GeneratorKind::QuadratureP: {
      const Complex up = g.kind == GeneratorKind::QuadratureQ ? Complex(kInvSqrt2) : kInvSqrt2 * kI;
      const Complex down =
          g.kind == GeneratorKind::QuadratureQ ? Complex(kInvSqrt2) : -kInvSqrt2 * kI;
      out.add(n.shifted(k, +1), up * root(n[k] + 1) * a);
      if (n[k] > 0) out.add(n.shifted(k, -1), down * root(n[k]) * a);
      break;
    }
    case GeneratorKind::Identity:
      out.add(n, a);
      break;
  }
}

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return char(std::tolower(c)); });
  return out;
}

}  // namespace

bool is_two_mode(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::BeamSplitterX:
    case GeneratorKind::BeamSplitterY:
    case GeneratorKind::TwoModeSqueezeX:
    case GeneratorKind::TwoModeSqueezeY:
      return true;
    default:
      return false;
  }
}

bool is_one_mode(GeneratorKind kind) { return !is_two_mode(kind) && kind != GeneratorKind::Identity; }

int photon_shift(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::TwoModeSqueezeX:
    case GeneratorKind::TwoModeSqueezeY:
    case GeneratorKind::SqueezeX:
    case GeneratorKind::SqueezeY:
      return 2;
    case GeneratorKind::QuadratureQ:
    case GeneratorKind::QuadratureP:
      return 1;
    default:
      return 0;
  }
}

Generator Generator::two_mode(GeneratorKind kind, std::size_t k, std::size_t l) {
  if (!is_two_mode(kind)) throw std::invalid_argument("generator kind is not a two-mode kind");
  if (k >= l) throw std::invalid_argument("two-mode generators need k < l");
  return {kind, k, l};
}

Generator Generator::one_mode(GeneratorKind kind, std::size_t k) {
  if (!is_one_mode(kind)) throw std::invalid_argument("generator kind is not a one-mode kind");
  return {kind, k, 0};
}

void Generator::validate(std::size_t modes) const {
  if (kind == GeneratorKind::Identity) return;
  const std::size_t top = is_two_mode(kind) ? l : k;
  if (top >= modes || (is_two_mode(kind) && k >= l)) {
    throw std::out_of_range("generator " + label() + " does not fit " + std::to_string(modes) +
                            " modes");
  }
}

std::string Generator::label() const {
  const std::string one = std::to_string(k + 1);
  const std::string two = one + std::to_string(l + 1);
  switch (kind) {
    case GeneratorKind::BeamSplitterX: return "e_" + two;
    case GeneratorKind::BeamSplitterY: return "E_" + two;
    case GeneratorKind::TwoModeSqueezeX: return "r_" + two;
    case GeneratorKind::TwoModeSqueezeY: return "R_" + two;
    case GeneratorKind::Number: return "N_" + one;
    case GeneratorKind::SqueezeX: return "s_" + one;
    case GeneratorKind::SqueezeY: return "S_" + one;
    case GeneratorKind::QuadratureQ: return "q_" + one;
    case GeneratorKind::QuadratureP: return "p_" + one;
    case GeneratorKind::Identity: return "1";
  }
  return "?";
}

SparseKet apply_generator(const Generator& g, const SparseKet& psi) {
  g.validate(psi.modes());
  SparseKet out(psi.modes());
  for (const auto& [n, a] : psi.terms()) apply_to_term(g, n, a, out);
  return out;
}

SparseOperator left_multiply(const Generator& g, const SparseOperator& rho) {
  g.validate(rho.modes());
  SparseOperator out(rho.modes());
  for (const auto& [ket, column] : columns(rho)) {
    const SparseKet image = apply_generator(g, column);
    for (const auto& [bra, v] : image.terms()) out.add(bra, ket, v);
  }
  return out;
}

SparseOperator right_multiply(const SparseOperator& rho, const Generator& g) {
  g.validate(rho.modes());
  // (rho H)(b, k) = conj((H r_b)(k)) with r_b(x) = conj(rho(b, x)), H Hermitian.
  std::map<Occupation, SparseKet> rows;
  for (const auto& [key, v] : rho.entries()) {
    rows.try_emplace(key.first, rho.modes()).first->second.add(key.second, std::conj(v));
  }
  SparseOperator out(rho.modes());
  for (const auto& [bra, row] : rows) {
    const SparseKet image = apply_generator(g, row);
    for (const auto& [ket, v] : image.terms()) out.add(bra, ket, std::conj(v));
  }
  return out;
}

SparseOperator commutator_with_density(const Generator& g, const SparseOperator& rho) {
  return left_multiply(g, rho) - right_multiply(rho, g);
}

// ---------------------------------------------------------------------------

std::string_view to_string(GroupKind group) {
  switch (group) {
    case GroupKind::PLO: return "PLO";
    case GroupKind::DPLO: return "DPLO";
    case GroupKind::ALO: return "ALO";
    case GroupKind::GO: return "GO";
  }
  return "?";
}

GroupKind parse_group(std::string_view text) {
  const std::string t = lower(text);
  if (t == "plo") return GroupKind::PLO;
  if (t == "dplo") return GroupKind::DPLO;
  if (t == "alo") return GroupKind::ALO;
  if (t == "go") return GroupKind::GO;
  throw std::invalid_argument("unknown group '" + std::string(text) + "'");
}

bool has_displacements(GroupKind group) { return group == GroupKind::DPLO || group == GroupKind::GO; }
bool has_squeezing(GroupKind group) { return group == GroupKind::ALO || group == GroupKind::GO; }

std::size_t group_dimension(GroupKind group, std::size_t m) {
  switch (group) {
    case GroupKind::PLO: return m * m;
    case GroupKind::DPLO: return m * m + 2 * m + 1;
    case GroupKind::ALO: return 2 * m * m + m;
    case GroupKind::GO: return 2 * m * m + 3 * m + 1;
  }
  return 0;
}

std::size_t LieBasis::index_of(const Generator& g) const {
  auto it = std::find(elements.begin(), elements.end(), g);
  if (it == elements.end()) throw std::out_of_range(g.label() + " is not in the basis");
  return std::size_t(it - elements.begin());
}

LieBasis lie_basis(GroupKind group, std::size_t m) {
  if (m < 1) throw std::invalid_argument("lie_basis needs at least one mode");
  LieBasis basis{group, m, {}};
  auto& out = basis.elements;
  auto pairs = [&](GeneratorKind kind) {
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t l = k + 1; l < m; ++l) out.push_back(Generator::two_mode(kind, k, l));
    }
  };
  auto singles = [&](GeneratorKind kind) {
    for (std::size_t k = 0; k < m; ++k) out.push_back(Generator::one_mode(kind, k));
  };
  pairs(GeneratorKind::BeamSplitterX);
  pairs(GeneratorKind::BeamSplitterY);
  singles(GeneratorKind::Number);
  if (has_displacements(group)) {
    singles(GeneratorKind::QuadratureQ);
    singles(GeneratorKind::QuadratureP);
    out.push_back(Generator::identity());
  }
  if (has_squeezing(group)) {
    pairs(GeneratorKind::TwoModeSqueezeX);
    pairs(GeneratorKind::TwoModeSqueezeY);
    singles(GeneratorKind::SqueezeX);
    singles(GeneratorKind::SqueezeY);
  }
  return basis;
}

}  // namespace orbitdim
