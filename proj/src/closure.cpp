#include "orbitdim/closure.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <stdexcept>

#include "orbitdim/families.hpp"

namespace orbitdim {

std::vector<SparseKet> default_closure_probes(std::size_t modes) {
  std::vector<SparseKet> probes;
  for (const auto& n : fock_basis_up_to(modes, 2)) probes.push_back(SparseKet::basis(n));
  probes.push_back(uniform_phase_state(modes, 2));
  return probes;
}

ClosureReport verify_closure(const std::vector<Generator>& pairs,
                             const std::vector<Generator>& fitting_set,
                             const std::vector<SparseKet>& probes) {
  if (probes.empty()) throw std::invalid_argument("verify_closure needs at least one probe");
  const std::size_t np = pairs.size();
  const std::size_t nf = fitting_set.size();
  const Complex i_unit{0.0, 1.0};

  // Real-stacked row index over (probe, occupation, re/im).
  std::map<std::pair<std::size_t, Occupation>, Eigen::Index> rows;
  std::vector<std::vector<SparseKet>> fit_vectors(probes.size());
  for (std::size_t p = 0; p < probes.size(); ++p) {
    for (const auto& g : fitting_set) {
      SparseKet v = i_unit * apply_generator(g, probes[p]);
      for (const auto& [n, a] : v.terms()) {
        rows.try_emplace({p, n}, Eigen::Index(2 * rows.size()));
      }
      fit_vectors[p].push_back(std::move(v));
    }
  }
  const Eigen::Index nrows = Eigen::Index(2 * rows.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(nrows, Eigen::Index(nf));
  for (std::size_t p = 0; p < probes.size(); ++p) {
    for (std::size_t f = 0; f < nf; ++f) {
      for (const auto& [n, v] : fit_vectors[p][f].terms()) {
        const Eigen::Index r = rows.at({p, n});
        a(r, Eigen::Index(f)) = v.real();
        a(r + 1, Eigen::Index(f)) = v.imag();
      }
    }
  }

  const Eigen::MatrixXd normal = a.transpose() * a;
  const Eigen::FullPivLU<Eigen::MatrixXd> solver(normal);

  ClosureReport report;
  report.pairs = pairs;
  report.fitting_set = fitting_set;
  report.residual.assign(np, std::vector<double>(np, 0.0));
  report.coefficients.assign(np, std::vector<std::vector<double>>(np, std::vector<double>(nf)));
  if (nf > 0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(normal, Eigen::EigenvaluesOnly);
    report.min_normal_eigenvalue = eig.eigenvalues()(0);
  }

  // H_J psi for every pair generator and probe.
  std::vector<std::vector<SparseKet>> applied(probes.size());
  for (std::size_t p = 0; p < probes.size(); ++p) {
    for (const auto& g : pairs) applied[p].push_back(apply_generator(g, probes[p]));
  }

  for (std::size_t i = 0; i < np; ++i) {
    for (std::size_t j = 0; j < np; ++j) {
      Eigen::VectorXd b = Eigen::VectorXd::Zero(nrows);
      double outside = 0.0;  // squared norm of target components no fit vector reaches
      for (std::size_t p = 0; p < probes.size(); ++p) {
        // [iH_I, iH_J] psi = -(H_I H_J - H_J H_I) psi
        const SparseKet target =
            apply_generator(pairs[j], applied[p][i]) - apply_generator(pairs[i], applied[p][j]);
        for (const auto& [n, v] : target.terms()) {
          auto it = rows.find({p, n});
          if (it == rows.end()) {
            outside += std::norm(v);
          } else {
            b(it->second) = v.real();
            b(it->second + 1) = v.imag();
          }
        }
      }
      double residual2 = outside;
      if (nf > 0) {
        const Eigen::VectorXd c = solver.solve(a.transpose() * b);
        residual2 += (a * c - b).squaredNorm();
        for (std::size_t f = 0; f < nf; ++f) report.coefficients[i][j][f] = c(Eigen::Index(f));
      } else {
        residual2 += b.squaredNorm();
      }
      report.residual[i][j] = std::sqrt(residual2);
      report.max_residual = std::max(report.max_residual, report.residual[i][j]);
    }
  }
  return report;
}

ClosureReport verify_closure(GroupKind group, std::size_t modes,
                             const std::vector<SparseKet>& probes) {
  const LieBasis basis = lie_basis(group, modes);
  return verify_closure(basis.elements, basis.elements, probes);
}

}  // namespace orbitdim
