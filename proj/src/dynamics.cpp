#include "orbitdim/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orbitdim/random.hpp"

namespace orbitdim {

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

double hermiticity_residual(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

Complex hs(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return a.conjugate().cwiseProduct(b).sum();
}

}  // namespace

// ---------------------------------------------------------------------------

TruncatedBasis::TruncatedBasis(std::size_t modes, int cutoff)
    : TruncatedBasis(modes, 0, cutoff, fock_basis_up_to(modes, cutoff)) {}

TruncatedBasis TruncatedBasis::sector(std::size_t modes, int photons) {
  return TruncatedBasis(modes, photons, photons, fock_sector(modes, photons));
}

TruncatedBasis::TruncatedBasis(std::size_t modes, int min_total, int max_total,
                               std::vector<Occupation> states)
    : modes_(modes), min_total_(min_total), max_total_(max_total), states_(std::move(states)) {
  if (modes == 0) throw std::invalid_argument("a truncated basis needs at least one mode");
  if (max_total < 0) throw std::invalid_argument("a truncated basis needs a nonnegative cutoff");
  for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], i);
}

std::optional<std::size_t> TruncatedBasis::index_of(const Occupation& n) const {
  auto it = index_.find(n);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t TruncatedBasis::expected_size(std::size_t modes, int cutoff) {
  std::size_t total = 0;
  for (int n = 0; n <= cutoff; ++n) total += binomial(modes + std::size_t(n) - 1, std::size_t(n));
  return total;
}

void EvolutionConfig::validate() const {
  if (buffer < 0) throw std::invalid_argument("evolution buffer must be nonnegative");
  if (!(leakage_tolerance > 0.0)) throw std::invalid_argument("leakage tolerance must be positive");
  if (!(step > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
}

// ---------------------------------------------------------------------------

Eigen::MatrixXcd dense_hamiltonian(const Generator& g, const TruncatedBasis& basis) {
  g.validate(basis.modes());
  const auto n = Eigen::Index(basis.size());
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const SparseKet image = apply_generator(g, SparseKet::basis(basis[col]));
    for (const auto& [occ, a] : image.terms()) {
      if (auto row = basis.index_of(occ)) h(Eigen::Index(*row), Eigen::Index(col)) = a;
    }
  }
  return h;
}

std::size_t truncated_couplings(const Generator& g, const TruncatedBasis& basis) {
  g.validate(basis.modes());
  std::size_t dropped = 0;
  for (const auto& state : basis.states()) {
    const SparseKet image = apply_generator(g, SparseKet::basis(state));
    for (const auto& [occ, a] : image.terms()) {
      if (!basis.index_of(occ)) ++dropped;
    }
  }
  return dropped;
}

Eigen::VectorXcd to_dense(const SparseKet& psi, const TruncatedBasis& basis) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index(basis.size()));
  for (const auto& [n, a] : psi.terms()) {
    auto i = basis.index_of(n);
    if (!i) throw std::out_of_range(n.to_string() + " lies outside the truncated basis");
    v(Eigen::Index(*i)) = a;
  }
  return v;
}

Eigen::MatrixXcd to_dense(const SparseOperator& op, const TruncatedBasis& basis) {
  const auto n = Eigen::Index(basis.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& [key, v] : op.entries()) {
    auto b = basis.index_of(key.first);
    auto k = basis.index_of(key.second);
    if (!b || !k) throw std::out_of_range("operator entry lies outside the truncated basis");
    m(Eigen::Index(*b), Eigen::Index(*k)) = v;
  }
  return m;
}

SparseKet ket_from_dense(const Eigen::VectorXcd& v, const TruncatedBasis& basis) {
  SparseKet out(basis.modes());
  for (std::size_t i = 0; i < basis.size(); ++i) out.add(basis[i], v(Eigen::Index(i)));
  return out;
}

SparseOperator operator_from_dense(const Eigen::MatrixXcd& m, const TruncatedBasis& basis) {
  SparseOperator out(basis.modes());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    for (std::size_t k = 0; k < basis.size(); ++k) out.add(basis[b], basis[k], m(Eigen::Index(b), Eigen::Index(k)));
  }
  return out;
}

Propagator::Propagator(const Generator& g, const TruncatedBasis& basis) : generator_(g) {
  const Eigen::MatrixXcd h = dense_hamiltonian(g, basis);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h);
  vectors_ = eig.eigenvectors();
  values_ = eig.eigenvalues();
}

Eigen::MatrixXcd Propagator::unitary(double t) const {
  if (t == 0.0) return Eigen::MatrixXcd::Identity(vectors_.rows(), vectors_.cols());
  Eigen::VectorXcd phases(values_.size());
  for (Eigen::Index i = 0; i < values_.size(); ++i) phases(i) = std::polar(1.0, -values_(i) * t);
  return vectors_ * phases.asDiagonal() * vectors_.adjoint();
}

// ---------------------------------------------------------------------------

double EvolutionDiagnostics::worst() const {
  return std::max({trace_deviation, hermiticity_residual, boundary_population});
}

double boundary_population(const Eigen::MatrixXcd& rho, const TruncatedBasis& basis) {
  double sum = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].total() >= basis.cutoff() - 1) sum += std::abs(rho(Eigen::Index(i), Eigen::Index(i)).real());
  }
  return sum;
}

double boundary_population(const Eigen::VectorXcd& psi, const TruncatedBasis& basis) {
  double sum = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].total() >= basis.cutoff() - 1) sum += std::norm(psi(Eigen::Index(i)));
  }
  return sum;
}

namespace {

EvolutionDiagnostics diagnose(const Eigen::MatrixXcd& rho, const TruncatedBasis& basis,
                              bool number_preserving) {
  EvolutionDiagnostics d;
  d.trace_deviation = std::abs(rho.trace() - 1.0);
  d.hermiticity_residual = hermiticity_residual(rho);
  d.boundary_population = number_preserving ? 0.0 : boundary_population(rho, basis);
  return d;
}

void check_leakage(const EvolutionDiagnostics& d, const Generator& g, double t, double tolerance) {
  if (d.worst() > tolerance) {
    std::ostringstream msg;
    msg << "evolution under " << g.label() << " for t=" << t << " leaks: boundary population "
        << d.boundary_population << ", trace deviation " << d.trace_deviation
        << ", hermiticity residual " << d.hermiticity_residual << " (tolerance " << tolerance
        << "); increase the buffer";
    throw LeakageError(msg.str(), d.worst());
  }
}

int required_cutoff(int support, const EvolutionConfig& cfg) { return std::max(support, 0) + cfg.buffer; }

}  // namespace

DensityOperator evolve_density(const DensityOperator& rho, const Generator& g, double t,
                               const EvolutionConfig& cfg, EvolutionDiagnostics* diagnostics) {
  cfg.validate();
  g.validate(rho.modes());
  if (t == 0.0) {
    if (diagnostics) *diagnostics = {};
    return rho;
  }
  const TruncatedBasis basis(rho.modes(), required_cutoff(rho.op().max_total(), cfg));
  const Propagator propagator(g, basis);
  const Eigen::MatrixXcd u = propagator.unitary(t);
  const Eigen::MatrixXcd evolved = u * to_dense(rho.op(), basis) * u.adjoint();
  const EvolutionDiagnostics d = diagnose(evolved, basis, g.number_preserving());
  if (diagnostics) *diagnostics = d;
  check_leakage(d, g, t, cfg.leakage_tolerance);
  DensityTolerances tolerances;
  tolerances.hermiticity = std::max(tolerances.hermiticity, cfg.leakage_tolerance);
  tolerances.trace = std::max(tolerances.trace, cfg.leakage_tolerance);
  tolerances.diagonal = std::max(tolerances.diagonal, cfg.leakage_tolerance);
  return DensityOperator(operator_from_dense(evolved, basis), tolerances);
}

// ---------------------------------------------------------------------------

GramEstimator::GramEstimator(const DensityOperator& rho, GroupKind group, EvolutionConfig cfg)
    : cfg_(cfg),
      basis_(lie_basis(group, rho.modes())),
      truncation_(rho.modes(), required_cutoff(rho.op().max_total(), cfg)) {
  cfg_.validate();
  rho_ = to_dense(rho.op(), truncation_);
  propagators_.reserve(basis_.size());
  for (const auto& g : basis_.elements) propagators_.emplace_back(g, truncation_);
}

Eigen::MatrixXcd GramEstimator::evolved(std::optional<std::size_t> i, double t) const {
  if (!i || t == 0.0) return rho_;
  const Propagator& p = propagators_.at(*i);
  const Eigen::MatrixXcd u = p.unitary(t);
  Eigen::MatrixXcd out = u * rho_ * u.adjoint();
  check_leakage(diagnose(out, truncation_, p.generator().number_preserving()), p.generator(), t,
                cfg_.leakage_tolerance);
  return out;
}

BetaSample GramEstimator::beta(std::optional<std::size_t> i, std::optional<std::size_t> j, double t) const {
  const Complex v = hs(evolved(i, t), evolved(j, t));
  return {i, j, t, v.real(), std::abs(v.imag())};
}

double GramEstimator::second_derivative(std::optional<std::size_t> i, std::optional<std::size_t> j,
                                        double h) const {
  const double f0 = beta(i, j, 0.0).value;
  return (beta(i, j, h).value - 2.0 * f0 + beta(i, j, -h).value) / (h * h);
}

GramEntryEstimate GramEstimator::entry(std::size_t i, std::size_t j) const {
  GramEntryEstimate out;
  out.richardson = cfg_.richardson;
  try {
    auto stencil = [&](double h) {
      return 0.5 * (second_derivative(i, j, h) - second_derivative(i, std::nullopt, h) -
                    second_derivative(std::nullopt, j, h));
    };
    out.raw = stencil(cfg_.step);
    out.raw_half = stencil(0.5 * cfg_.step);
    out.extrapolated = (4.0 * out.raw_half - out.raw) / 3.0;
  } catch (const LeakageError&) {
    out.raw = out.raw_half = out.extrapolated = std::nan("");
  }
  return out;
}

GramEstimator::Matrices GramEstimator::estimate_all() const {
  const std::size_t d = basis_.size();
  const double h = cfg_.step;
  const std::vector<double> times{h, -h, 0.5 * h, -0.5 * h};
  Matrices out;
  const auto n = Eigen::Index(d);
  out.raw = out.raw_half = out.extrapolated = Eigen::MatrixXd::Constant(n, n, std::nan(""));

  // copies[t][I] = U_I(t) rho U_I(t)^+
  std::vector<std::vector<Eigen::MatrixXcd>> copies(times.size());
  try {
    for (std::size_t s = 0; s < times.size(); ++s) {
      for (std::size_t i = 0; i < d; ++i) copies[s].push_back(evolved(i, times[s]));
    }
  } catch (const LeakageError&) {
    out.leaked = true;
    return out;
  }
  const double purity = hs(rho_, rho_).real();
  auto second = [&](std::size_t plus, std::size_t minus, double step, std::optional<std::size_t> i,
                    std::optional<std::size_t> j) {
    auto at = [&](std::size_t s, std::optional<std::size_t> k) -> const Eigen::MatrixXcd& {
      return k ? copies[s][*k] : rho_;
    };
    const double fp = hs(at(plus, i), at(plus, j)).real();
    const double fm = hs(at(minus, i), at(minus, j)).real();
    return (fp - 2.0 * purity + fm) / (step * step);
  };
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const double raw = 0.5 * (second(0, 1, h, i, j) - second(0, 1, h, i, std::nullopt) -
                                second(0, 1, h, std::nullopt, j));
      const double half = 0.5 * (second(2, 3, 0.5 * h, i, j) - second(2, 3, 0.5 * h, i, std::nullopt) -
                                 second(2, 3, 0.5 * h, std::nullopt, j));
      out.raw(Eigen::Index(i), Eigen::Index(j)) = raw;
      out.raw_half(Eigen::Index(i), Eigen::Index(j)) = half;
      out.extrapolated(Eigen::Index(i), Eigen::Index(j)) = (4.0 * half - raw) / 3.0;
    }
  }
  return out;
}

BetaSample beta(const DensityOperator& rho, std::optional<std::size_t> i, std::optional<std::size_t> j,
                double t, GroupKind group, const EvolutionConfig& cfg) {
  return GramEstimator(rho, group, cfg).beta(i, j, t);
}

GramEntryEstimate estimate_gram_entry(const DensityOperator& rho, std::size_t i, std::size_t j,
                                      GroupKind group, const EvolutionConfig& cfg) {
  return GramEstimator(rho, group, cfg).entry(i, j);
}

// ---------------------------------------------------------------------------

SparseKet sample_sphere_state(std::size_t modes, int cutoff, std::uint64_t seed) {
  if (modes < 1) throw std::invalid_argument("sample_sphere_state needs at least one mode");
  if (cutoff < 0) throw std::invalid_argument("sample_sphere_state needs a nonnegative cutoff");
  Rng rng(seed);
  SparseKet psi(modes);
  for (const auto& n : fock_basis_up_to(modes, cutoff)) {
    const double re = rng.normal();
    const double im = rng.normal();
    psi.add(n, Complex(re, im));
  }
  return normalize(psi);
}

WordResult apply_group_word(const SparseKet& psi, std::span<const WordFactor> word,
                            const EvolutionConfig& cfg) {
  cfg.validate();
  for (const auto& f : word) f.generator.validate(psi.modes());
  const double norm_in = psi.norm();
  WordResult result{psi, 0.0, 0.0};
  if (word.empty()) return result;

  const bool passive = std::all_of(word.begin(), word.end(),
                                   [](const WordFactor& f) { return f.generator.number_preserving(); });
  SparseKet out(psi.modes());
  if (passive) {
    std::map<int, SparseKet> sectors;
    for (const auto& [n, a] : psi.terms()) {
      sectors.try_emplace(n.total(), psi.modes()).first->second.add(n, a);
    }
    for (const auto& [photons, part] : sectors) {
      const TruncatedBasis basis = TruncatedBasis::sector(psi.modes(), photons);
      Eigen::VectorXcd v = to_dense(part, basis);
      for (auto it = word.rbegin(); it != word.rend(); ++it) {
        v = Propagator(it->generator, basis).unitary(it->time) * v;
      }
      out += ket_from_dense(v, basis);
    }
  } else {
    const TruncatedBasis basis(psi.modes(), required_cutoff(psi.max_total(), cfg));
    Eigen::VectorXcd v = to_dense(psi, basis);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      v = Propagator(it->generator, basis).unitary(it->time) * v;
      if (!it->generator.number_preserving()) {
        result.boundary_population = std::max(result.boundary_population, boundary_population(v, basis));
        if (result.boundary_population > cfg.leakage_tolerance) {
          std::ostringstream msg;
          msg << "group word leaks " << result.boundary_population << " to the truncation boundary";
          throw LeakageError(msg.str(), result.boundary_population);
        }
      }
    }
    out = ket_from_dense(v, basis);
  }
  result.state = std::move(out);
  result.norm_deviation = std::abs(result.state.norm() - norm_in);
  if (result.norm_deviation > cfg.leakage_tolerance) {
    throw LeakageError("group word changed the norm by more than the leakage tolerance",
                       result.norm_deviation);
  }
  return result;
}

SparseKet perturb_state(const SparseKet& psi, double eps, std::size_t modes, int cutoff,
                        std::uint64_t seed) {
  if (psi.modes() != modes) throw std::invalid_argument("perturb_state: mode count mismatch");
  if (psi.max_total() > cutoff) {
    throw std::invalid_argument("perturb_state: state support exceeds the cutoff");
  }
  if (eps == 0.0) return psi;
  SparseKet chi = sample_sphere_state(modes, cutoff, seed);
  return normalize(psi + Complex(eps) * chi);
}

}  // namespace orbitdim
