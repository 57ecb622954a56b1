#include <doctest.h>

#include <algorithm>

#include "orbitdim/closure.hpp"

using namespace orbitdim;

TEST_CASE("closure of the passive, displaced and Gaussian bases") {
  for (GroupKind group : {GroupKind::PLO, GroupKind::DPLO, GroupKind::GO}) {
    for (std::size_t m = 1; m <= 3; ++m) {
      CAPTURE(to_string(group));
      CAPTURE(m);
      const ClosureReport r = verify_closure(group, m);
      CHECK(r.max_residual < 1e-10);
      CHECK(r.min_normal_eigenvalue > 1e-6);
    }
  }
}

TEST_CASE("active basis closes only with the identity admitted") {
  // [s_k, S_k] = i (2 N_k + 1) and [r_kl, R_kl] = i (N_k + N_l + 1).
  for (std::size_t m = 1; m <= 3; ++m) {
    CAPTURE(m);
    const auto basis = lie_basis(GroupKind::ALO, m);
    const ClosureReport plain = verify_closure(GroupKind::ALO, m);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const auto a = basis.elements[i].kind, b = basis.elements[j].kind;
        const bool squeeze_pair = basis.elements[i].k == basis.elements[j].k &&
                                  basis.elements[i].l == basis.elements[j].l &&
                                  ((a == GeneratorKind::SqueezeX && b == GeneratorKind::SqueezeY) ||
                                   (a == GeneratorKind::SqueezeY && b == GeneratorKind::SqueezeX) ||
                                   (a == GeneratorKind::TwoModeSqueezeX && b == GeneratorKind::TwoModeSqueezeY) ||
                                   (a == GeneratorKind::TwoModeSqueezeY && b == GeneratorKind::TwoModeSqueezeX));
        CAPTURE(basis.elements[i].label());
        CAPTURE(basis.elements[j].label());
        if (squeeze_pair) {
          CHECK(plain.residual[i][j] > 0.1);
        } else {
          CHECK(plain.residual[i][j] < 1e-10);
        }
      }
    }
    std::vector<Generator> fitting = basis.elements;
    fitting.push_back(Generator::identity());
    const ClosureReport extended = verify_closure(basis.elements, fitting, default_closure_probes(m));
    CHECK(extended.max_residual < 1e-10);
    const std::size_t s = basis.index_of(Generator::one_mode(GeneratorKind::SqueezeX, 0));
    const std::size_t S = basis.index_of(Generator::one_mode(GeneratorKind::SqueezeY, 0));
    const std::size_t n = basis.index_of(Generator::one_mode(GeneratorKind::Number, 0));
    CHECK(extended.coefficients[s][S][n] == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(extended.coefficients[s][S].back() == doctest::Approx(-1.0).epsilon(1e-12));
  }
}

TEST_CASE("beam-splitter commutator coefficients") {
  const ClosureReport r = verify_closure(GroupKind::PLO, 2);
  const auto basis = lie_basis(GroupKind::PLO, 2);
  const std::size_t e = basis.index_of(Generator::two_mode(GeneratorKind::BeamSplitterX, 0, 1));
  const std::size_t E = basis.index_of(Generator::two_mode(GeneratorKind::BeamSplitterY, 0, 1));
  const std::size_t n1 = basis.index_of(Generator::one_mode(GeneratorKind::Number, 0));
  const std::size_t n2 = basis.index_of(Generator::one_mode(GeneratorKind::Number, 1));
  const auto& c = r.coefficients[e][E];
  CHECK(c[n1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(c[n2] == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(std::abs(c[e]) < 1e-12);
  CHECK(std::abs(c[E]) < 1e-12);
  CHECK(r.residual[e][E] < 1e-12);
}

TEST_CASE("dropping a number operator breaks closure") {
  const auto basis = lie_basis(GroupKind::PLO, 2);
  std::vector<Generator> fitting = basis.elements;
  fitting.erase(std::find(fitting.begin(), fitting.end(), Generator::one_mode(GeneratorKind::Number, 0)));
  const ClosureReport r = verify_closure(basis.elements, fitting, default_closure_probes(2));
  CHECK(r.residual[0][1] >= 0.1);
}

TEST_CASE("closure rejects an empty probe list") {
  const auto basis = lie_basis(GroupKind::PLO, 1);
  CHECK_THROWS_AS(verify_closure(basis.elements, basis.elements, {}), std::invalid_argument);
}
