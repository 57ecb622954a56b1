#include "orbitdim/gram.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "orbitdim/parallel.hpp"

namespace orbitdim {

namespace {

void require_normalized(const SparseKet& psi) {
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > kNormalizationTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "state is not normalized (norm " << norm << ")";
    throw std::invalid_argument(msg.str());
  }
}

void require_modes(const LieBasis& basis, std::size_t modes) {
  if (basis.modes != modes) {
    throw std::invalid_argument("basis has " + std::to_string(basis.modes) + " modes, state has " +
                                std::to_string(modes));
  }
}

std::vector<SparseKet> applied_vectors(const LieBasis& basis, const SparseKet& psi) {
  std::vector<SparseKet> out(basis.size(), SparseKet(psi.modes()));
  parallel_for(basis.size(), [&](std::size_t i) { out[i] = apply_generator(basis.elements[i], psi); });
  return out;
}

// Fills the symmetric matrix from entry(i, j), i <= j, one row per task.
template <typename Entry>
Eigen::MatrixXd symmetric_from(std::size_t d, Entry entry) {
  const auto n = Eigen::Index(d);
  Eigen::MatrixXd g(n, n);
  parallel_for(d, [&](std::size_t i) {
    for (std::size_t j = i; j < d; ++j) g(Eigen::Index(i), Eigen::Index(j)) = entry(i, j);
  });
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) g(i, j) = g(j, i);
  }
  return g;
}

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return char(std::tolower(c)); });
  return out;
}

}  // namespace

std::string_view to_string(Picture picture) {
  switch (picture) {
    case Picture::Ket: return "ket";
    case Picture::Ketbra: return "ketbra";
    case Picture::Mixed: return "mixed";
  }
  return "?";
}

Picture parse_picture(std::string_view text) {
  const std::string t = lower(text);
  if (t == "ket") return Picture::Ket;
  if (t == "ketbra") return Picture::Ketbra;
  if (t == "mixed") return Picture::Mixed;
  throw std::invalid_argument("unknown picture '" + std::string(text) + "'");
}

int phase_delta(Picture picture) { return picture == Picture::Ket ? 1 : 0; }

GramMatrix gram_ket(const LieBasis& basis, const SparseKet& psi) {
  require_modes(basis, psi.modes());
  require_normalized(psi);
  const auto v = applied_vectors(basis, psi);
  return {basis.group, Picture::Ket, basis,
          symmetric_from(basis.size(), [&](std::size_t i, std::size_t j) { return real_inner(v[i], v[j]); })};
}

GramMatrix gram_ket(GroupKind group, const SparseKet& psi) {
  return gram_ket(lie_basis(group, psi.modes()), psi);
}

GramMatrix gram_ketbra(const LieBasis& basis, const SparseKet& psi) {
  require_modes(basis, psi.modes());
  require_normalized(psi);
  const auto v = applied_vectors(basis, psi);
  std::vector<double> mean(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) mean[i] = real_inner(psi, v[i]);
  return {basis.group, Picture::Ketbra, basis,
          symmetric_from(basis.size(), [&](std::size_t i, std::size_t j) {
            return 2.0 * (real_inner(v[i], v[j]) - mean[i] * mean[j]);
          })};
}

GramMatrix gram_ketbra(GroupKind group, const SparseKet& psi) {
  return gram_ketbra(lie_basis(group, psi.modes()), psi);
}

GramMatrix gram_mixed(const LieBasis& basis, const DensityOperator& rho) {
  require_modes(basis, rho.modes());
  std::vector<SparseOperator> c(basis.size(), SparseOperator(rho.modes()));
  parallel_for(basis.size(),
               [&](std::size_t i) { c[i] = commutator_with_density(basis.elements[i], rho.op()); });
  return {basis.group, Picture::Mixed, basis,
          symmetric_from(basis.size(), [&](std::size_t i, std::size_t j) { return hs_inner(c[i], c[j]).real(); })};
}

GramMatrix gram_mixed(GroupKind group, const DensityOperator& rho) {
  return gram_mixed(lie_basis(group, rho.modes()), rho);
}

Eigen::MatrixXd gram_ket_expectation_form(const LieBasis& basis, const SparseKet& psi) {
  require_modes(basis, psi.modes());
  const auto v = applied_vectors(basis, psi);
  return symmetric_from(basis.size(), [&](std::size_t i, std::size_t j) {
    const Complex ij = inner(psi, apply_generator(basis.elements[i], v[j]));
    const Complex ji = inner(psi, apply_generator(basis.elements[j], v[i]));
    return 0.5 * (ij + ji).real();
  });
}

Eigen::VectorXd expectation_values(const LieBasis& basis, const SparseKet& psi) {
  require_modes(basis, psi.modes());
  Eigen::VectorXd out(Eigen::Index(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out(Eigen::Index(i)) = inner(psi, apply_generator(basis.elements[i], psi)).real();
  }
  return out;
}

Eigen::MatrixXd gram_mixed_trace_form(const LieBasis& basis, const DensityOperator& rho) {
  require_modes(basis, rho.modes());
  const std::size_t d = basis.size();
  std::vector<SparseOperator> left(d, SparseOperator(rho.modes()));   // H_I rho
  std::vector<SparseOperator> right(d, SparseOperator(rho.modes()));  // rho H_I
  parallel_for(d, [&](std::size_t i) {
    left[i] = left_multiply(basis.elements[i], rho.op());
    right[i] = right_multiply(rho.op(), basis.elements[i]);
  });
  // Tr[H_I H_J rho^2] = Tr[(rho H_I)(H_J rho)], Tr[H_I rho H_J rho] = Tr[(H_I rho)(H_J rho)].
  return symmetric_from(d, [&](std::size_t i, std::size_t j) {
    const Complex anti = trace_product(right[i], left[j]) + trace_product(right[j], left[i]);
    const Complex cross = trace_product(left[i], left[j]);
    return (anti - 2.0 * cross).real();
  });
}

double symmetry_residual(const Eigen::MatrixXd& gram) {
  return (gram - gram.transpose()).cwiseAbs().maxCoeff();
}

bool is_psd(const Eigen::MatrixXd& gram) {
  if (gram.size() == 0) return true;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram, Eigen::EigenvaluesOnly);
  const auto& ev = eig.eigenvalues();
  return ev(0) >= -1e-9 * std::max(1.0, ev(ev.size() - 1));
}

RankResult rank_psd(const Eigen::MatrixXd& gram, const RankTolerance& tolerance) {
  if (gram.rows() != gram.cols()) throw std::invalid_argument("Gram matrix is not square");
  if (gram.hasNaN()) throw std::invalid_argument("Gram matrix contains NaN entries");
  RankResult result;
  result.relative = tolerance.relative;
  if (gram.size() == 0) {
    result.tolerance_used = tolerance.value;
    return result;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram, Eigen::EigenvaluesOnly);
  const auto& ev = eig.eigenvalues();
  result.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  std::reverse(result.eigenvalues.begin(), result.eigenvalues.end());
  result.tolerance_used = tolerance.relative
                              ? tolerance.value * std::max(1.0, result.eigenvalues.front())
                              : tolerance.value;
  result.rank = std::size_t(std::count_if(result.eigenvalues.begin(), result.eigenvalues.end(),
                                          [&](double x) { return x > result.tolerance_used; }));
  return result;
}

GramMatrix gram(GroupKind group, const SparseKet& psi, Picture picture) {
  switch (picture) {
    case Picture::Ket: return gram_ket(group, psi);
    case Picture::Ketbra: return gram_ketbra(group, psi);
    case Picture::Mixed: require_normalized(psi); return gram_mixed(group, outer(psi));
  }
  throw std::invalid_argument("unknown picture");
}

RankResult orbit_dimension(GroupKind group, const SparseKet& psi, Picture picture,
                           const RankTolerance& tolerance) {
  return rank_psd(gram(group, psi, picture), tolerance);
}

RankResult orbit_dimension(GroupKind group, const DensityOperator& rho, const RankTolerance& tolerance) {
  return rank_psd(gram_mixed(group, rho), tolerance);
}

}  // namespace orbitdim
