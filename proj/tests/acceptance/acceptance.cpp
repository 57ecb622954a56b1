// Acceptance checks. One PASS/FAIL line per criterion; exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "orbitdim/closure.hpp"
#include "orbitdim/dynamics.hpp"
#include "orbitdim/families.hpp"
#include "orbitdim/gram.hpp"
#include "orbitdim/random.hpp"
#include "orbitdim/table2.hpp"

using namespace orbitdim;

namespace {

constexpr GroupKind kGroups[] = {GroupKind::PLO, GroupKind::DPLO, GroupKind::ALO, GroupKind::GO};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

double max_abs(const Eigen::MatrixXd& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

int failures = 0;

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_seconds > 0.0) {
    o.require(seconds < budget_seconds, "runtime above " + std::to_string(budget_seconds) + " s");
  }
  failures += !o.pass;
  std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << number << "] " << name << ": " << o.detail.str()
            << std::fixed << std::setprecision(2) << seconds << " s" << std::endl;
}

std::vector<SparseKet> grid_states(std::size_t m_max) {
  std::vector<SparseKet> out;
  for (const auto& f : table2_states(m_max)) out.push_back(family_state(f));
  return out;
}

}  // namespace

int main() {
  criterion(1, "closed-form table over m = 1..5", 60.0, [](Outcome& o) {
    const auto states = table2_states(5);
    std::set<std::string> fock;
    std::map<std::string, int> families;
    for (const auto& s : states) {
      ++families[family_name(s)];
      if (std::holds_alternative<FockFamily>(s)) fock.insert(family_params(s));
    }
    o.require(fock.size() >= 40, "fewer than 40 Fock states");
    std::size_t exact = 0, bound = 0;
    for (const auto& row : table2(5)) {
      (row.closed.exactness == Exactness::Exact ? exact : bound) += 1;
      o.require(row.pass, family_params(row.family) + " " + std::string(to_string(row.group)) + " " +
                              std::string(to_string(row.picture)) + " numerical " + std::to_string(row.numerical) +
                              " closed " + std::to_string(row.closed.value));
    }
    o.detail << fock.size() << " fock, " << families["noon"] << " noon, " << families["superposition"]
             << " superposition states; " << exact << " exact cells, " << bound << " bounded cells; ";
  });

  criterion(2, "dual-rail CNOT dimensions 38 and 37", 5.0, [](Outcome& o) {
    const CnotReport r = cnot_demo();
    o.require(r.plus_zero_dimension == 38, "|+0> dimension");
    o.require(r.bell_dimension == 37, "|Phi+> dimension");
    o.detail << r.plus_zero_dimension << " and " << r.bell_dimension << "; ";
  });

  criterion(3, "generic dimension of sphere samples", 120.0, [](Outcome& o) {
    std::size_t cells = 0, samples = 0;
    for (GroupKind group : kGroups) {
      for (std::size_t m = 1; m <= 3; ++m) {
        for (int n = 0; n <= 3; ++n) {
          ++cells;
          const long ket = generic_dimension(group, m, n, Picture::Ket);
          const long ketbra = generic_dimension(group, m, n, Picture::Ketbra);
          const std::string cell = std::string(to_string(group)) + " m=" + std::to_string(m) + " N=" + std::to_string(n);
          const Rng root(1000 * m + std::uint64_t(n));
          for (std::uint64_t s = 0; s < 20; ++s) {
            const SparseKet psi = sample_sphere_state(m, n, root.split(s).seed());
            ++samples;
            o.require(long(orbit_dimension(group, psi, Picture::Ket).rank) == ket, cell + " ket sample");
            o.require(long(orbit_dimension(group, psi, Picture::Ketbra).rank) == ketbra, cell + " ketbra sample");
          }
          const SparseKet uniform = uniform_phase_state(m, n);
          o.require(long(orbit_dimension(group, uniform, Picture::Ket).rank) == ket, cell + " uniform-phase ket");
          o.require(long(orbit_dimension(group, uniform, Picture::Ketbra).rank) == ketbra, cell + " uniform-phase ketbra");
        }
      }
    }
    o.detail << cells << " cells, " << samples << " samples; ";
  });

  criterion(4, "commutator closure", 0.0, [](Outcome& o) {
    double worst = 0.0, worst_with_identity = 0.0;
    std::set<std::string> open_pairs;
    for (GroupKind group : kGroups) {
      for (std::size_t m = 1; m <= 4; ++m) {
        const ClosureReport r = verify_closure(group, m);
        worst = std::max(worst, r.max_residual);
        o.require(r.max_residual < 1e-10, std::string(to_string(group)) + " m=" + std::to_string(m) +
                                              " residual " + std::to_string(r.max_residual));
        if (r.max_residual < 1e-10) continue;
        // Diagnostic only: locate the failing pairs and refit with the identity.
        const auto basis = lie_basis(group, m);
        for (std::size_t i = 0; i < basis.size(); ++i) {
          for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (r.residual[i][j] >= 1e-10 && m == 1) {
              open_pairs.insert(basis.elements[i].label() + "," + basis.elements[j].label());
            }
          }
        }
        auto fitting = basis.elements;
        fitting.push_back(Generator::identity());
        worst_with_identity = std::max(
            worst_with_identity, verify_closure(basis.elements, fitting, default_closure_probes(m)).max_residual);
      }
    }
    if (!open_pairs.empty()) {
      o.detail << "open pairs at m=1:";
      for (const auto& p : open_pairs) o.detail << " (" << p << ")";
      o.detail << ", residual with the identity admitted " << std::scientific << std::setprecision(2)
               << worst_with_identity << std::defaultfloat << "; ";
    }
    const auto basis = lie_basis(GroupKind::PLO, 2);
    std::vector<Generator> fitting;
    for (const auto& g : basis.elements) {
      if (!(g == Generator::one_mode(GeneratorKind::Number, 0))) fitting.push_back(g);
    }
    const ClosureReport broken = verify_closure(basis.elements, fitting, default_closure_probes(2));
    const double pair = broken.residual[0][1];
    o.require(pair > 0.1, "residual without N_1");
    o.detail << "max residual " << std::scientific << std::setprecision(2) << worst << ", without N_1 "
             << std::defaultfloat << pair << "; ";
  });

  criterion(5, "cross-formula consistency on the table grid", 0.0, [](Outcome& o) {
    double mixed_vs_ketbra = 0.0, trace_vs_commutator = 0.0, ketbra_identity = 0.0;
    for (const auto& psi : grid_states(5)) {
      const DensityOperator rho = outer(psi);
      for (GroupKind group : kGroups) {
        const LieBasis basis = lie_basis(group, psi.modes());
        const Eigen::MatrixXd ket = gram_ket(basis, psi).values;
        const Eigen::MatrixXd ketbra = gram_ketbra(basis, psi).values;
        const Eigen::MatrixXd mixed = gram_mixed(basis, rho).values;
        const Eigen::VectorXd v = expectation_values(basis, psi);
        mixed_vs_ketbra = std::max(mixed_vs_ketbra, max_abs(mixed - ketbra));
        trace_vs_commutator = std::max(trace_vs_commutator, max_abs(gram_mixed_trace_form(basis, rho) - mixed));
        ketbra_identity = std::max(ketbra_identity, max_abs(ketbra - 2.0 * (ket - v * v.transpose())));
      }
    }
    o.require(mixed_vs_ketbra <= 1e-10, "mixed vs ketbra");
    o.require(trace_vs_commutator <= 1e-10, "trace form vs commutator form");
    o.require(ketbra_identity <= 1e-10, "ketbra vs 2(ket - v v^T)");
    o.detail << std::scientific << std::setprecision(2) << "max deviations " << mixed_vs_ketbra << ", "
             << trace_vs_commutator << ", " << ketbra_identity << "; " << std::defaultfloat;
  });

  criterion(6, "invariance suite", 0.0, [](Outcome& o) {
    double phase_shift = 0.0;
    std::size_t words = 0, states = 0;
    Rng rng(2024);
    for (const auto& psi : grid_states(4)) {
      ++states;
      // Random PLO word of five factors on this state's modes.
      std::vector<WordFactor> word;
      if (psi.modes() >= 2) {
        const auto plo = lie_basis(GroupKind::PLO, psi.modes()).elements;
        for (int f = 0; f < 5; ++f) {
          const auto pick = std::min(plo.size() - 1, std::size_t(rng.uniform() * double(plo.size())));
          word.push_back({plo[pick], rng.uniform(-1.0, 1.0)});
        }
      } else {
        word.push_back({Generator::one_mode(GeneratorKind::Number, 0), rng.uniform(-1.0, 1.0)});
      }
      const SparseKet moved = apply_group_word(psi, word).state;
      ++words;
      std::map<Picture, std::map<GroupKind, std::size_t>> rank;
      for (GroupKind group : kGroups) {
        for (Picture picture : {Picture::Ket, Picture::Ketbra, Picture::Mixed}) {
          const GramMatrix g = gram(group, psi, picture);
          for (double phi : {0.3, std::numbers::pi / 2, 2.1}) {
            phase_shift = std::max(phase_shift, max_abs(gram(group, std::polar(1.0, phi) * psi, picture).values - g.values));
          }
          rank[picture][group] = rank_psd(g).rank;
          if (picture != Picture::Mixed) {
            o.require(orbit_dimension(group, moved, picture).rank == rank[picture][group],
                      "rank changed under a PLO word");
          }
        }
        const std::size_t k = rank[Picture::Ket][group], kb = rank[Picture::Ketbra][group];
        o.require(kb <= k && k <= kb + 1, "picture sandwich");
      }
      for (Picture picture : {Picture::Ket, Picture::Ketbra, Picture::Mixed}) {
        auto& r = rank[picture];
        o.require(r[GroupKind::PLO] <= r[GroupKind::DPLO] && r[GroupKind::PLO] <= r[GroupKind::ALO] &&
                      r[GroupKind::DPLO] <= r[GroupKind::GO] && r[GroupKind::ALO] <= r[GroupKind::GO],
                  "group nesting");
      }
    }
    o.require(phase_shift <= 1e-12, "global phase");
    o.detail << states << " states, " << words << " words, phase shift " << std::scientific << std::setprecision(2)
             << phase_shift << "; " << std::defaultfloat;
  });

  criterion(7, "finite-difference Gram estimation", 0.0, [](Outcome& o) {
    SparseOperator mix(1);
    mix.add({0}, {0}, 0.5);
    mix.add({1}, {1}, 0.5);
    SparseKet cat(1);
    cat.add({0}, 1.0 / std::sqrt(2.0));
    cat.add({2}, 1.0 / std::sqrt(2.0));
    const std::vector<DensityOperator> states{outer(SparseKet::basis({1})), DensityOperator(mix), outer(cat)};
    // Below this the stencil error is dominated by rounding in f(h) - 2 f(0) + f(-h).
    constexpr double kNoiseFloor = 1e-8;
    double worst_excess = 0.0, worst_ratio = std::numeric_limits<double>::infinity();
    std::size_t entries = 0, measured = 0;
    for (const auto& rho : states) {
      for (GroupKind group : {GroupKind::GO, GroupKind::PLO}) {
        const GramEstimator est(rho, group);
        const auto all = est.estimate_all();
        o.require(!all.leaked, "leakage");
        const Eigen::MatrixXd direct = gram_mixed(group, rho).values;
        for (Eigen::Index i = 0; i < direct.rows(); ++i) {
          for (Eigen::Index j = 0; j < direct.cols(); ++j) {
            ++entries;
            const double allowed = 1e-4 + 1e-3 * std::abs(direct(i, j));
            const double err = std::abs(all.extrapolated(i, j) - direct(i, j));
            worst_excess = std::max(worst_excess, err / allowed);
            o.require(err <= allowed, "entry outside tolerance");
            const double at_h = std::abs(all.raw(i, j) - direct(i, j));
            const double at_half = std::abs(all.raw_half(i, j) - direct(i, j));
            if (at_h > kNoiseFloor) {
              ++measured;
              const double ratio = at_half > 0.0 ? at_h / at_half : std::numeric_limits<double>::infinity();
              worst_ratio = std::min(worst_ratio, ratio);
              o.require(ratio >= 2.8, "convergence ratio below 2.8");
            }
          }
        }
      }
    }
    o.require(measured > 0, "no entry above the noise floor");
    o.detail << entries << " entries, worst error/allowed " << std::setprecision(3) << worst_excess
             << ", smallest h/(h/2) error ratio " << worst_ratio << " over " << measured << " entries; ";
  });

  criterion(8, "non-Gaussianity witness", 0.0, [](Outcome& o) {
    const WitnessResult vac = nongaussianity_witness(SparseKet::basis({0, 0}));
    const WitnessResult pair = nongaussianity_witness(SparseKet::basis({1, 1}));
    o.require(vac.dimension == 10 && !vac.witnessed, "vacuum");
    o.require(pair.dimension == 12 && pair.witnessed, "|1,1>");
    o.detail << "vacuum " << vac.dimension << (vac.witnessed ? " witnessed" : " not witnessed") << ", |1,1> "
             << pair.dimension << (pair.witnessed ? " witnessed" : " not witnessed") << "; ";
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures;
}
