#include "orbitdim/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace orbitdim {

namespace {

// conj(a) * b, written out so that swapping the arguments yields the exact
// complex conjugate.
Complex conj_mul(Complex a, Complex b) {
  return {a.real() * b.real() + a.imag() * b.imag(),
          a.real() * b.imag() - a.imag() * b.real()};
}

void require_same_modes(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    std::ostringstream msg;
    msg << what << ": mode count mismatch (" << a << " vs " << b << ")";
    throw std::invalid_argument(msg.str());
  }
}

void require_mode(std::size_t mode, std::size_t modes) {
  if (mode >= modes) {
    std::ostringstream msg;
    msg << "mode index " << mode << " out of range for " << modes << " modes";
    throw std::out_of_range(msg.str());
  }
}

}  // namespace

Occupation::Occupation(std::vector<int> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) throw std::invalid_argument("occupation vector needs at least one mode");
  for (int n : counts_) {
    if (n < 0) throw std::invalid_argument("negative photon count in " + to_string());
  }
}

Occupation Occupation::vacuum(std::size_t modes) { return Occupation(std::vector<int>(modes, 0)); }

int Occupation::total() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

Occupation Occupation::shifted(std::size_t mode, int delta) const {
  Occupation out = *this;
  out.counts_[mode] += delta;
  return out;
}

std::string Occupation::to_string() const {
  std::ostringstream out;
  out << '|';
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) out << ',';
    out << counts_[i];
  }
  out << '>';
  return out.str();
}

// ---------------------------------------------------------------------------

SparseKet::SparseKet(std::size_t modes) : modes_(modes) {
  if (modes == 0) throw std::invalid_argument("a ket needs at least one mode");
}

SparseKet SparseKet::basis(const Occupation& n, Complex amplitude) {
  SparseKet ket(n.modes());
  ket.add(n, amplitude);
  return ket;
}

Complex SparseKet::amplitude(const Occupation& n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? Complex{} : it->second;
}

void SparseKet::add(const Occupation& n, Complex amplitude, Pruning pruning) {
  require_same_modes(modes_, n.modes(), "SparseKet::add");
  auto [it, inserted] = terms_.try_emplace(n, amplitude);
  if (!inserted) it->second += amplitude;
  if (pruning == Pruning::ExactZero && it->second == Complex{}) terms_.erase(it);
}

double SparseKet::squared_norm() const {
  double sum = 0.0;
  for (const auto& [n, a] : terms_) sum += std::norm(a);
  return sum;
}

double SparseKet::norm() const { return std::sqrt(squared_norm()); }

int SparseKet::max_total() const {
  int best = -1;
  for (const auto& [n, a] : terms_) best = std::max(best, n.total());
  return best;
}

SparseKet& SparseKet::operator+=(const SparseKet& other) {
  require_same_modes(modes_, other.modes_, "ket addition");
  for (const auto& [n, a] : other.terms_) add(n, a);
  return *this;
}

SparseKet& SparseKet::operator*=(Complex factor) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= factor;
    if (it->second == Complex{}) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

SparseKet operator+(SparseKet lhs, const SparseKet& rhs) { return lhs += rhs; }

SparseKet operator-(SparseKet lhs, const SparseKet& rhs) {
  require_same_modes(lhs.modes(), rhs.modes(), "ket subtraction");
  for (const auto& [n, a] : rhs.terms()) lhs.add(n, -a);
  return lhs;
}

SparseKet operator*(Complex factor, SparseKet ket) { return ket *= factor; }

SparseKet normalize(const SparseKet& ket) {
  const double norm = ket.norm();
  if (norm == 0.0) throw std::domain_error("cannot normalize the zero ket");
  return Complex(1.0 / norm) * ket;
}

SparseKet apply_annihilation(std::size_t mode, const SparseKet& ket) {
  require_mode(mode, ket.modes());
  SparseKet out(ket.modes());
  for (const auto& [n, a] : ket.terms()) {
    if (n[mode] == 0) continue;
    out.add(n.shifted(mode, -1), std::sqrt(double(n[mode])) * a);
  }
  return out;
}

SparseKet apply_creation(std::size_t mode, const SparseKet& ket) {
  require_mode(mode, ket.modes());
  SparseKet out(ket.modes());
  for (const auto& [n, a] : ket.terms()) {
    out.add(n.shifted(mode, +1), std::sqrt(double(n[mode] + 1)) * a);
  }
  return out;
}

Complex inner(const SparseKet& phi, const SparseKet& psi) {
  require_same_modes(phi.modes(), psi.modes(), "inner");
  // Merge walk in canonical order; the summation order is the same for
  // inner(phi, psi) and inner(psi, phi).
  Complex sum{};
  auto a = phi.terms().begin();
  auto b = psi.terms().begin();
  while (a != phi.terms().end() && b != psi.terms().end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      sum += conj_mul(a->second, b->second);
      ++a;
      ++b;
    }
  }
  return sum;
}

double real_inner(const SparseKet& phi, const SparseKet& psi) { return inner(phi, psi).real(); }

// ---------------------------------------------------------------------------

SparseOperator::SparseOperator(std::size_t modes) : modes_(modes) {
  if (modes == 0) throw std::invalid_argument("an operator needs at least one mode");
}

Complex SparseOperator::entry(const Occupation& bra, const Occupation& ket) const {
  auto it = entries_.find(Key{bra, ket});
  return it == entries_.end() ? Complex{} : it->second;
}

void SparseOperator::add(const Occupation& bra, const Occupation& ket, Complex value,
                         Pruning pruning) {
  require_same_modes(modes_, bra.modes(), "SparseOperator::add");
  require_same_modes(modes_, ket.modes(), "SparseOperator::add");
  auto [it, inserted] = entries_.try_emplace(Key{bra, ket}, value);
  if (!inserted) it->second += value;
  if (pruning == Pruning::ExactZero && it->second == Complex{}) entries_.erase(it);
}

Complex SparseOperator::trace() const {
  Complex sum{};
  for (const auto& [key, v] : entries_) {
    if (key.first == key.second) sum += v;
  }
  return sum;
}

int SparseOperator::max_total() const {
  int best = -1;
  for (const auto& [key, v] : entries_) {
    best = std::max({best, key.first.total(), key.second.total()});
  }
  return best;
}

SparseOperator& SparseOperator::operator+=(const SparseOperator& other) {
  require_same_modes(modes_, other.modes_, "operator addition");
  for (const auto& [key, v] : other.entries_) add(key.first, key.second, v);
  return *this;
}

SparseOperator& SparseOperator::operator*=(Complex factor) {
  for (auto it = entries_.begin(); it != entries_.end();) {
    it->second *= factor;
    if (it->second == Complex{}) {
      it = entries_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

SparseOperator operator+(SparseOperator lhs, const SparseOperator& rhs) { return lhs += rhs; }

SparseOperator operator-(SparseOperator lhs, const SparseOperator& rhs) {
  require_same_modes(lhs.modes(), rhs.modes(), "operator subtraction");
  for (const auto& [key, v] : rhs.entries()) lhs.add(key.first, key.second, -v);
  return lhs;
}

SparseOperator operator*(Complex factor, SparseOperator op) { return op *= factor; }

SparseOperator ketbra(const SparseKet& psi, const SparseKet& phi) {
  require_same_modes(psi.modes(), phi.modes(), "ketbra");
  SparseOperator out(psi.modes());
  for (const auto& [b, x] : psi.terms()) {
    for (const auto& [k, y] : phi.terms()) out.add(b, k, conj_mul(y, x));
  }
  return out;
}

Complex hs_inner(const SparseOperator& a, const SparseOperator& b) {
  require_same_modes(a.modes(), b.modes(), "hs_inner");
  Complex sum{};
  auto x = a.entries().begin();
  auto y = b.entries().begin();
  while (x != a.entries().end() && y != b.entries().end()) {
    if (x->first < y->first) {
      ++x;
    } else if (y->first < x->first) {
      ++y;
    } else {
      sum += conj_mul(x->second, y->second);
      ++x;
      ++y;
    }
  }
  return sum;
}

Complex trace_product(const SparseOperator& a, const SparseOperator& b) {
  require_same_modes(a.modes(), b.modes(), "trace_product");
  Complex sum{};
  for (const auto& [key, v] : a.entries()) {
    auto it = b.entries().find(SparseOperator::Key{key.second, key.first});
    if (it != b.entries().end()) sum += v * it->second;
  }
  return sum;
}

std::map<Occupation, SparseKet> columns(const SparseOperator& op) {
  std::map<Occupation, SparseKet> out;
  for (const auto& [key, v] : op.entries()) {
    auto it = out.try_emplace(key.second, op.modes()).first;
    it->second.add(key.first, v);
  }
  return out;
}

// ---------------------------------------------------------------------------

DensityOperator::DensityOperator(SparseOperator op, const DensityTolerances& tolerances)
    : op_(std::move(op)) {
  for (const auto& [key, v] : op_.entries()) {
    const Complex mirror = op_.entry(key.second, key.first);
    hermiticity_residual_ = std::max(hermiticity_residual_, std::abs(v - std::conj(mirror)));
  }
  if (hermiticity_residual_ > tolerances.hermiticity) {
    std::ostringstream msg;
    msg << "density operator is not Hermitian (residual " << hermiticity_residual_ << ")";
    throw std::invalid_argument(msg.str());
  }
  trace_residual_ = std::abs(op_.trace() - 1.0);
  if (trace_residual_ > tolerances.trace) {
    std::ostringstream msg;
    msg << "density operator trace deviates from 1 by " << trace_residual_;
    throw std::invalid_argument(msg.str());
  }
  for (const auto& [key, v] : op_.entries()) {
    if (key.first != key.second) continue;
    if (std::abs(v.imag()) > tolerances.diagonal || v.real() < -tolerances.diagonal) {
      std::ostringstream msg;
      msg << "density operator diagonal entry at " << key.first.to_string()
          << " is not real and nonnegative";
      throw std::invalid_argument(msg.str());
    }
  }
}

double DensityOperator::purity() const { return hs_inner(op_, op_).real(); }

DensityOperator outer(const SparseKet& psi) {
  const double norm2 = psi.squared_norm();
  if (norm2 == 0.0) throw std::domain_error("outer product of the zero ket");
  SparseOperator op = ketbra(psi, psi);
  op *= Complex(1.0 / norm2);
  return DensityOperator(std::move(op));
}

// ---------------------------------------------------------------------------

namespace {

void enumerate(std::size_t mode, int remaining, bool exact, std::vector<int>& current,
               std::vector<Occupation>& out) {
  if (mode + 1 == current.size()) {
    for (int n = exact ? remaining : 0; n <= remaining; ++n) {
      current[mode] = n;
      out.emplace_back(current);
    }
    return;
  }
  for (int n = 0; n <= remaining; ++n) {
    current[mode] = n;
    enumerate(mode + 1, remaining - n, exact, current, out);
  }
}

}  // namespace

std::vector<Occupation> fock_sector(std::size_t modes, int photons) {
  if (modes == 0) throw std::invalid_argument("fock_sector needs at least one mode");
  std::vector<Occupation> out;
  if (photons < 0) return out;
  std::vector<int> current(modes, 0);
  enumerate(0, photons, true, current, out);
  return out;
}

std::vector<Occupation> fock_basis_up_to(std::size_t modes, int cutoff) {
  if (modes == 0) throw std::invalid_argument("fock_basis_up_to needs at least one mode");
  std::vector<Occupation> out;
  if (cutoff < 0) return out;
  std::vector<int> current(modes, 0);
  enumerate(0, cutoff, false, current, out);
  return out;
}

}  // namespace orbitdim
