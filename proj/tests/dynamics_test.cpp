#include <doctest.h>

#include <cmath>

#include "orbitdim/dynamics.hpp"
#include "orbitdim/families.hpp"
#include "support.hpp"

using namespace orbitdim;

namespace {

DensityOperator mixture01() {
  SparseOperator op(1);
  op.add({0}, {0}, 0.5);
  op.add({1}, {1}, 0.5);
  return DensityOperator(op);
}

Generator gen(GeneratorKind kind, std::size_t k = 0) { return Generator::one_mode(kind, k); }

}  // namespace

TEST_CASE("truncated basis") {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (int n = 0; n <= 5; ++n) CHECK(TruncatedBasis(m, n).size() == TruncatedBasis::expected_size(m, n));
  }
  const TruncatedBasis b(2, 3);
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(b.index_of(b[i]) == i);
  CHECK_FALSE(b.index_of({4, 0}).has_value());
  CHECK(TruncatedBasis::sector(3, 2).size() == 6);
}

TEST_CASE("dense Hamiltonians") {
  const Eigen::MatrixXcd n = dense_hamiltonian(gen(GeneratorKind::Number), TruncatedBasis(1, 3));
  CHECK(n.isApprox(Eigen::Vector4cd(0, 1, 2, 3).asDiagonal().toDenseMatrix()));

  const TruncatedBasis two(2, 1);
  const Eigen::MatrixXcd e = dense_hamiltonian(Generator::two_mode(GeneratorKind::BeamSplitterX, 0, 1), two);
  const auto a = Eigen::Index(*two.index_of({0, 1}));
  const auto b = Eigen::Index(*two.index_of({1, 0}));
  CHECK(e(a, b) == Complex(0.5));
  CHECK(e(b, a) == Complex(0.5));
  CHECK(e.cwiseAbs().sum() == doctest::Approx(1.0));

  const Eigen::MatrixXcd q = dense_hamiltonian(gen(GeneratorKind::QuadratureQ), TruncatedBasis(1, 2));
  CHECK(std::abs(q(1, 0) - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(q(2, 1) - 1.0) < 1e-15);
  CHECK(q(2, 0) == Complex(0.0));
  CHECK((q - q.adjoint()).norm() == 0.0);

  const TruncatedBasis small(1, 3);
  CHECK(truncated_couplings(gen(GeneratorKind::SqueezeX), small) == 2);
  const Eigen::MatrixXcd s = dense_hamiltonian(gen(GeneratorKind::SqueezeX), small);
  CHECK((s - s.adjoint()).norm() == 0.0);
}

TEST_CASE("density evolution") {
  const DensityOperator one = outer(SparseKet::basis({1}));
  const DensityOperator same = evolve_density(one, gen(GeneratorKind::Number), 0.7);
  CHECK(orbitdim::testing::max_abs_diff(same.op(), one.op()) < 1e-14);

  const DensityOperator psi = outer(orbitdim::testing::random_ket(2, 2, 4));
  const DensityOperator zero = evolve_density(psi, gen(GeneratorKind::QuadratureP), 0.0);
  CHECK(zero.op().entries() == psi.op().entries());

  EvolutionDiagnostics d;
  const DensityOperator displaced = evolve_density(outer(SparseKet::basis({0})), gen(GeneratorKind::QuadratureQ), 1e-2, {}, &d);
  CHECK(std::abs(displaced.op().trace() - 1.0) < 1e-10);
  CHECK(d.boundary_population < 1e-6);

  EvolutionConfig tight;
  tight.buffer = 2;
  CHECK_THROWS_AS(evolve_density(outer(SparseKet::basis({0})), gen(GeneratorKind::SqueezeX), 2.0, tight),
                  LeakageError);
}

TEST_CASE("overlaps of evolved copies") {
  const DensityOperator rho = outer(normalize(orbitdim::testing::random_ket(1, 2, 3)));
  const GramEstimator est(rho, GroupKind::GO);
  for (std::size_t i = 0; i < est.basis().size(); ++i) {
    CHECK(est.beta(i, 0, 0.0).value == doctest::Approx(rho.purity()).epsilon(1e-12));
  }
  const DensityOperator one = outer(SparseKet::basis({1}));
  const GramEstimator number(one, GroupKind::PLO);
  CHECK(number.beta(0, 0, 0.8).value == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t i = 0; i < est.basis().size(); ++i) {
    for (std::size_t j = 0; j < est.basis().size(); ++j) {
      const BetaSample ij = est.beta(i, j, 0.05);
      CHECK(std::abs(ij.value - est.beta(j, i, 0.05).value) <= 1e-12);
      CHECK(ij.imaginary_residue <= 1e-12);
    }
  }
}

TEST_CASE("finite-difference Gram estimates") {
  const std::vector<DensityOperator> states{outer(SparseKet::basis({1})), mixture01()};
  for (const auto& rho : states) {
    for (GroupKind group : {GroupKind::PLO, GroupKind::GO}) {
      const GramEstimator est(rho, group);
      const Eigen::MatrixXd direct = gram_mixed(group, rho).values;
      const auto all = est.estimate_all();
      REQUIRE_FALSE(all.leaked);
      for (Eigen::Index i = 0; i < direct.rows(); ++i) {
        for (Eigen::Index j = 0; j < direct.cols(); ++j) {
          CHECK(std::abs(all.extrapolated(i, j) - direct(i, j)) <= 1e-4 + 1e-3 * std::abs(direct(i, j)));
        }
      }
    }
  }
  const GramEstimator go(outer(SparseKet::basis({1})), GroupKind::GO);
  const std::size_t id = go.basis().index_of(Generator::identity());
  CHECK(go.entry(id, id).value() == 0.0);
  const std::size_t q = go.basis().index_of(gen(GeneratorKind::QuadratureQ));
  CHECK(go.entry(q, q).value() ==
        doctest::Approx(gram_mixed(GroupKind::GO, outer(SparseKet::basis({1}))).values(Eigen::Index(q), Eigen::Index(q)))
            .epsilon(1e-4));
  const GramEntryEstimate single = estimate_gram_entry(outer(SparseKet::basis({1})), q, q, GroupKind::GO);
  CHECK(single.value() == doctest::Approx(go.entry(q, q).value()));
}

TEST_CASE("sphere samples") {
  const SparseKet a = sample_sphere_state(2, 2, 17);
  CHECK(std::abs(a.norm() - 1.0) < 1e-12);
  const SparseKet b = sample_sphere_state(2, 2, 17);
  CHECK(a.terms() == b.terms());
  const SparseKet c = sample_sphere_state(2, 2, 18);
  CHECK(std::abs(inner(a, c)) < 0.99);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(orbit_dimension(GroupKind::GO, sample_sphere_state(2, 2, seed), Picture::Ket).rank == 15);
  }
}

TEST_CASE("group words") {
  const SparseKet pair = SparseKet::basis({1, 1});
  CHECK(apply_group_word(pair, {}).state.terms() == pair.terms());

  Rng rng(5);
  std::vector<WordFactor> word;
  for (int f = 0; f < 5; ++f) {
    word.push_back({Generator::two_mode(f % 2 ? GeneratorKind::BeamSplitterY : GeneratorKind::BeamSplitterX, 0, 1),
                    rng.uniform(-1.0, 1.0)});
  }
  const WordResult r = apply_group_word(pair, word);
  CHECK(std::abs(r.state.norm() - 1.0) < 1e-10);
  CHECK(r.state.max_total() == 2);
  CHECK(orbit_dimension(GroupKind::PLO, normalize(r.state), Picture::Ket).rank ==
        orbit_dimension(GroupKind::PLO, pair, Picture::Ket).rank);

  const std::vector<WordFactor> active{{gen(GeneratorKind::QuadratureQ), 0.05}, {gen(GeneratorKind::SqueezeY), 0.05}};
  const WordResult a = apply_group_word(SparseKet::basis({1}), active);
  CHECK(a.norm_deviation < 1e-6);
  CHECK(a.boundary_population < 1e-6);
}

TEST_CASE("perturbation") {
  const SparseKet psi = SparseKet::basis({1, 0});
  CHECK(perturb_state(psi, 0.0, 2, 2, 1).terms() == psi.terms());
  const SparseKet near = perturb_state(psi, 1e-9, 2, 2, 1);
  CHECK(orbitdim::testing::max_abs_diff(gram_ket(GroupKind::GO, near).values, gram_ket(GroupKind::GO, psi).values) <=
        1e-7);
  const SparseKet far = perturb_state(psi, 1e-2, 2, 2, 1);
  CHECK(orbit_dimension(GroupKind::GO, far, Picture::Ket).rank >= orbit_dimension(GroupKind::GO, psi, Picture::Ket).rank);
  CHECK_THROWS_AS(perturb_state(SparseKet::basis({3, 0}), 1e-3, 2, 2, 1), std::invalid_argument);
}

TEST_CASE("evolution config validation") {
  EvolutionConfig cfg;
  cfg.buffer = -1;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.step = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}
