// Sparse multimode Fock-space kets and operators.
//
// Mode indices are 0-based throughout the C++ API; printed labels use the
// conventional 1-based form (e.g. "N_1" acts on mode 0).

#pragma once

#include <compare>
#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace orbitdim {

using Complex = std::complex<double>;

/// Photon counts per mode. Ordering is lexicographic over the counts and is
/// the only ordering used for enumeration and output.
class Occupation {
 public:
  Occupation() = default;
  explicit Occupation(std::vector<int> counts);
  Occupation(std::initializer_list<int> counts) : Occupation(std::vector<int>(counts)) {}

  static Occupation vacuum(std::size_t modes);

  std::size_t modes() const { return counts_.size(); }
  int total() const;
  int operator[](std::size_t mode) const { return counts_[mode]; }
  std::span<const int> counts() const { return counts_; }

  /// Copy with `delta` added to one mode. The caller guarantees the result is
  /// nonnegative.
  Occupation shifted(std::size_t mode, int delta) const;

  std::string to_string() const;

  auto operator<=>(const Occupation&) const = default;
  bool operator==(const Occupation&) const = default;

 private:
  std::vector<int> counts_;
};

/// Whether `SparseKet::add` / `SparseOperator::add` drop entries that end up
/// exactly zero.
enum class Pruning { ExactZero, Keep };

class SparseKet {
 public:
  using Terms = std::map<Occupation, Complex>;

  explicit SparseKet(std::size_t modes);
  static SparseKet basis(const Occupation& n, Complex amplitude = 1.0);

  std::size_t modes() const { return modes_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Complex amplitude(const Occupation& n) const;
  /// Accumulates `amplitude` onto the term for `n`.
  void add(const Occupation& n, Complex amplitude, Pruning pruning = Pruning::ExactZero);

  double squared_norm() const;
  double norm() const;
  /// Largest total photon number in the support; -1 for the zero ket.
  int max_total() const;

  SparseKet& operator+=(const SparseKet& other);
  SparseKet& operator*=(Complex factor);

 private:
  std::size_t modes_;
  Terms terms_;
};

SparseKet operator+(SparseKet lhs, const SparseKet& rhs);
SparseKet operator-(SparseKet lhs, const SparseKet& rhs);
SparseKet operator*(Complex factor, SparseKet ket);

/// Returns ket / ||ket||. Throws std::domain_error on the zero ket.
SparseKet normalize(const SparseKet& ket);

/// a_k; terms with n_k = 0 vanish.
SparseKet apply_annihilation(std::size_t mode, const SparseKet& ket);
/// a_k^dagger.
SparseKet apply_creation(std::size_t mode, const SparseKet& ket);

/// <phi|psi>, conjugate-linear in the first argument.
Complex inner(const SparseKet& phi, const SparseKet& psi);
/// Re <phi|psi>.
double real_inner(const SparseKet& phi, const SparseKet& psi);

class SparseOperator {
 public:
  using Key = std::pair<Occupation, Occupation>;  // (bra, ket)
  using Entries = std::map<Key, Complex>;

  explicit SparseOperator(std::size_t modes);

  std::size_t modes() const { return modes_; }
  const Entries& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  Complex entry(const Occupation& bra, const Occupation& ket) const;
  void add(const Occupation& bra, const Occupation& ket, Complex value,
           Pruning pruning = Pruning::ExactZero);

  Complex trace() const;
  int max_total() const;

  SparseOperator& operator+=(const SparseOperator& other);
  SparseOperator& operator*=(Complex factor);

 private:
  std::size_t modes_;
  Entries entries_;
};

SparseOperator operator+(SparseOperator lhs, const SparseOperator& rhs);
SparseOperator operator-(SparseOperator lhs, const SparseOperator& rhs);
SparseOperator operator*(Complex factor, SparseOperator op);

/// |psi><phi|.
SparseOperator ketbra(const SparseKet& psi, const SparseKet& phi);

/// Hilbert-Schmidt inner product Tr[A^dagger B].
Complex hs_inner(const SparseOperator& a, const SparseOperator& b);

/// Tr[A B].
Complex trace_product(const SparseOperator& a, const SparseOperator& b);

/// Column `ket` of an operator, as a ket over the bra index.
std::map<Occupation, SparseKet> columns(const SparseOperator& op);

struct DensityTolerances {
  double hermiticity = 1e-12;
  double trace = 1e-10;
  double diagonal = 1e-12;
};

/// A validated density operator: Hermitian, unit trace, nonnegative real
/// diagonal, each within the given tolerances.
class DensityOperator {
 public:
  /// Throws std::invalid_argument describing the first violated constraint.
  explicit DensityOperator(SparseOperator op, const DensityTolerances& tolerances = {});

  const SparseOperator& op() const { return op_; }
  std::size_t modes() const { return op_.modes(); }
  double hermiticity_residual() const { return hermiticity_residual_; }
  double trace_residual() const { return trace_residual_; }
  double purity() const;

 private:
  SparseOperator op_;
  double hermiticity_residual_ = 0.0;
  double trace_residual_ = 0.0;
};

/// |psi><psi| / <psi|psi>. Throws std::domain_error on the zero ket.
DensityOperator outer(const SparseKet& psi);

/// Lexicographically ordered occupation vectors of `modes` modes with total
/// photon number exactly `photons`.
std::vector<Occupation> fock_sector(std::size_t modes, int photons);
/// Same, for total photon number at most `cutoff`.
std::vector<Occupation> fock_basis_up_to(std::size_t modes, int cutoff);

}  // namespace orbitdim
