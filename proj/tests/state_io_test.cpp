#include <doctest.h>

#include "orbitdim/dynamics.hpp"
#include "orbitdim/state_io.hpp"
#include "support.hpp"

using namespace orbitdim;

namespace {

int error_line(const std::string& text) {
  try {
    parse_state(text);
  } catch (const StateFileError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("parse a ket file") {
  const auto state = parse_state(R"({"modes": 2, "kind": "ket",
    "terms": [{"occ": [1, 0], "re": 0.6, "im": 0},
              {"occ": [0, 1], "re": 0, "im": 0.8}]})");
  const auto& psi = std::get<SparseKet>(state);
  CHECK(psi.modes() == 2);
  CHECK(psi.amplitude({1, 0}) == Complex(0.6));
  CHECK(psi.amplitude({0, 1}) == Complex(0.0, 0.8));
}

TEST_CASE("parse a density file") {
  const auto state = parse_state(R"({"modes": 1, "kind": "density",
    "entries": [{"bra": [0], "ket": [0], "re": 0.5, "im": 0},
                {"bra": [1], "ket": [1], "re": 0.5, "im": 0}]})");
  CHECK(std::get<DensityOperator>(state).purity() == doctest::Approx(0.5));
}

TEST_CASE("validation errors carry line numbers") {
  CHECK(error_line("{\"modes\": 2, \"kind\": \"ket\",\n \"terms\": [\n {\"occ\": [1], \"re\": 1, \"im\": 0}]}") == 3);
  CHECK(error_line("{\"modes\": 1, \"kind\": \"ket\",\n \"terms\": [\n {\"occ\": [1], \"re\": 1, \"im\": 0},\n"
                   " {\"occ\": [1], \"re\": 1, \"im\": 0}]}") == 4);
  CHECK(error_line("{\"modes\": 1,\n \"modes\": 2, \"kind\": \"ket\", \"terms\": []}") == 2);
  CHECK(error_line("{\"modes\": 1, \"kind\": \"ket\",\n \"terms\": [\n {\"occ\": [-1], \"re\": 1, \"im\": 0}]}") == 3);
  CHECK(error_line("{\"modes\": 1, \"kind\": \"ket\",\n \"terms\": [\n {\"occ\": [1], \"re\": 1, \"im\": 0, \"x\": 1}]}") == 3);
  CHECK(error_line("{\"modes\": 1, \"kind\": \"ket\",\n \"terms\": [\n {\"occ\": [1], \"re\": 1}]}") == 3);
  CHECK(error_line("{\"modes\": 1, \"kind\": \"ket\",\n \"terms\": [\n {\"occ\": [1], \"re\": 1, \"im\": 0}\n") == 4);
  CHECK(error_line(R"({"modes": 1, "kind": "ket", "terms": []})") == 1);
  CHECK(error_line(R"({"modes": 1, "kind": "operator", "terms": []})") == 1);
  CHECK(error_line(R"({"modes": 0, "kind": "ket", "terms": []})") == 1);
  CHECK(error_line(R"({"modes": 1, "kind": "density", "entries": [{"bra": [0], "ket": [0], "re": 0.5, "im": 0}]})") == 1);
  CHECK(error_line(R"({"modes": 1, "kind": "ket", "terms": [{"occ": [1.5], "re": 1, "im": 0}]})") == 1);
}

TEST_CASE("round trip") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const SparseKet psi = sample_sphere_state(3, 2, seed);
    const auto again = std::get<SparseKet>(parse_state(format_state(psi)));
    CHECK(again.terms() == psi.terms());
    CHECK(format_state(again) == format_state(psi));

    const DensityOperator rho = outer(psi);
    const auto rho_again = std::get<DensityOperator>(parse_state(format_state(rho)));
    CHECK(rho_again.op().entries() == rho.op().entries());
  }
  const SparseKet tiny = SparseKet::basis({0}, Complex(1.0, 1e-300));
  CHECK(std::get<SparseKet>(parse_state(format_state(tiny))).terms() == tiny.terms());
}
