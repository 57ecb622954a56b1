#include "orbitdim/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "orbitdim/closure.hpp"
#include "orbitdim/dynamics.hpp"
#include "orbitdim/families.hpp"
#include "orbitdim/gram.hpp"
#include "orbitdim/random.hpp"
#include "orbitdim/state_io.hpp"
#include "orbitdim/table2.hpp"

namespace orbitdim::cli {

namespace {

using ordered_json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

class PictureMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Globals {
  bool json = false;
  double tol = 1e-8;
  bool tol_absolute = false;
  std::uint64_t seed = 0;

  RankTolerance rank_tolerance() const {
    return tol_absolute ? RankTolerance::absolute(tol) : RankTolerance{tol, true};
  }
};

// Human-mode number.
std::string h6(double x) {
  std::ostringstream s;
  s << std::setprecision(6) << x;
  return s.str();
}

std::string hex64(std::uint64_t x) {
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << x;
  return s.str();
}

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StateFileError("cannot open " + path, 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Everything a command needs to render its report.
class Report {
 public:
  Report(std::string command, const std::vector<std::string>& args, const Globals& g)
      : command_(std::move(command)), globals_(g), start_(Clock::now()) {
    for (const auto& a : args) {
      if (a == "--json") continue;
      arguments_.push_back(a);
      digest_ = fnv1a(a, digest_);
      digest_ = fnv1a(std::string_view("\0", 1), digest_);
    }
  }

  void add_input(std::string_view bytes) { digest_ = fnv1a(bytes, digest_); }

  ordered_json results = ordered_json::object();
  std::ostringstream human;

  void tolerance(const RankResult& r) {
    results["tolerance"] = {{"policy", r.relative ? "relative" : "absolute"},
                            {"value", globals_.tol},
                            {"threshold", r.tolerance_used}};
  }

  std::string tolerance_line(const RankResult& r) const {
    return "tolerance: " + h6(r.tolerance_used) +
           (r.relative ? " (relative " + h6(globals_.tol) + " x max(1, largest eigenvalue))" : " (absolute)");
  }

  void emit(std::ostream& out) const {
    if (globals_.json) {
      ordered_json doc;
      doc["schema"] = kReportSchema;
      doc["command"] = command_;
      doc["arguments"] = arguments_;
      doc["inputs_digest"] = "fnv1a64:" + hex64(digest_);
      doc["results"] = results;
      out << doc.dump(2) << '\n';
      return;
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    out << human.str() << "time: " << h6(seconds) << " s\n";
  }

 private:
  std::string command_;
  Globals globals_;
  Clock::time_point start_;
  std::vector<std::string> arguments_;
  std::uint64_t digest_ = 0xcbf29ce484222325ULL;
};

ordered_json spectrum_json(const RankResult& r) { return r.eigenvalues; }

std::string spectrum_line(const RankResult& r) {
  std::string s = "spectrum:";
  for (double x : r.eigenvalues) s += " " + h6(x);
  return s;
}

std::vector<std::string> labels(const LieBasis& basis) {
  std::vector<std::string> out;
  for (const auto& g : basis.elements) out.push_back(g.label());
  return out;
}

const std::vector<std::string> kGroupNames{"plo", "dplo", "alo", "go"};
const std::vector<std::string> kPictureNames{"ket", "ketbra", "mixed"};

struct StateInput {
  std::string path;
  bool normalize = false;

  StateFile load(Report& report) const {
    const std::string bytes = read_bytes(path);
    report.add_input(bytes);
    StateFile state = parse_state(bytes);
    if (normalize) {
      if (auto* psi = std::get_if<SparseKet>(&state)) *psi = orbitdim::normalize(*psi);
    }
    return state;
  }
};

void add_state_options(CLI::App* cmd, StateInput& in) {
  cmd->add_option("--state", in.path, "state file (JSON)")->required();
  cmd->add_flag("--normalize", in.normalize, "normalize a ket file before use");
}

RankResult rank_of(GroupKind group, const StateFile& state, Picture picture, const RankTolerance& tol) {
  if (const auto* rho = std::get_if<DensityOperator>(&state)) {
    if (picture != Picture::Mixed) {
      throw PictureMismatch("a density file needs --picture mixed (got " + std::string(to_string(picture)) + ")");
    }
    return orbit_dimension(group, *rho, tol);
  }
  return orbit_dimension(group, std::get<SparseKet>(state), picture, tol);
}

GramMatrix gram_of(GroupKind group, const StateFile& state, Picture picture) {
  if (const auto* rho = std::get_if<DensityOperator>(&state)) {
    if (picture != Picture::Mixed) {
      throw PictureMismatch("a density file needs --picture mixed (got " + std::string(to_string(picture)) + ")");
    }
    return gram_mixed(group, *rho);
  }
  return gram(group, std::get<SparseKet>(state), picture);
}

// ---------------------------------------------------------------------------

int cmd_dim(Report& report, const Globals& g, const StateInput& in, const std::string& group_name,
            const std::string& picture_name) {
  const GroupKind group = parse_group(group_name);
  const Picture picture = parse_picture(picture_name);
  const StateFile state = in.load(report);
  const RankResult r = rank_of(group, state, picture, g.rank_tolerance());
  report.results["group"] = to_string(group);
  report.results["picture"] = to_string(picture);
  report.results["dimension"] = r.rank;
  report.results["spectrum"] = spectrum_json(r);
  report.tolerance(r);
  report.human << "dimension: " << r.rank << "\n"
               << "group: " << to_string(group) << "\npicture: " << to_string(picture) << "\n"
               << report.tolerance_line(r) << "\n"
               << spectrum_line(r) << "\n";
  return kOk;
}

int cmd_gram(Report& report, const Globals& g, const StateInput& in, const std::string& group_name,
             const std::string& picture_name) {
  const GroupKind group = parse_group(group_name);
  const Picture picture = parse_picture(picture_name);
  const StateFile state = in.load(report);
  const GramMatrix gm = gram_of(group, state, picture);
  const RankResult r = rank_psd(gm.values, g.rank_tolerance());
  const auto names = labels(gm.basis);
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < gm.values.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index j = 0; j < gm.values.cols(); ++j) row.push_back(gm.values(i, j));
    rows.push_back(row);
  }
  report.results["group"] = to_string(group);
  report.results["picture"] = to_string(picture);
  report.results["basis"] = names;
  report.results["gram"] = rows;
  report.results["rank"] = r.rank;
  report.results["spectrum"] = spectrum_json(r);
  report.tolerance(r);

  std::size_t width = 12;
  for (const auto& n : names) width = std::max(width, n.size() + 1);
  report.human << "group: " << to_string(group) << "\npicture: " << to_string(picture) << "\n"
               << std::setw(int(width)) << "";
  for (const auto& n : names) report.human << std::setw(int(width)) << n;
  report.human << "\n";
  for (Eigen::Index i = 0; i < gm.values.rows(); ++i) {
    report.human << std::setw(int(width)) << names[std::size_t(i)];
    for (Eigen::Index j = 0; j < gm.values.cols(); ++j) report.human << std::setw(int(width)) << h6(gm.values(i, j));
    report.human << "\n";
  }
  report.human << "rank: " << r.rank << "\n" << report.tolerance_line(r) << "\n" << spectrum_line(r) << "\n";
  return kOk;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

int cmd_table2(Report& report, const Globals& g, std::size_t m_max, const std::string& format) {
  const auto rows = table2(m_max, g.rank_tolerance());
  std::size_t failed = 0;
  ordered_json cells = ordered_json::array();
  std::ostringstream csv;
  csv << "family,group,picture,m,params,closed_form,numerical,exactness,pass\n";
  std::ostringstream text;
  text << std::left << std::setw(15) << "family" << std::setw(6) << "group" << std::setw(8) << "picture"
       << std::setw(3) << "m" << std::setw(34) << "params" << std::setw(8) << "closed" << std::setw(10)
       << "numerical" << "pass\n";
  for (const auto& row : rows) {
    failed += !row.pass;
    const bool exact = row.closed.exactness == Exactness::Exact;
    const std::string exactness = exact ? "exact" : "upper_bound";
    const std::string params = family_params(row.family);
    cells.push_back({{"family", family_name(row.family)},
                     {"group", to_string(row.group)},
                     {"picture", to_string(row.picture)},
                     {"m", row.modes},
                     {"params", params},
                     {"closed_form", row.closed.value},
                     {"numerical", row.numerical},
                     {"exactness", exactness},
                     {"pass", row.pass}});
    csv << family_name(row.family) << ',' << to_string(row.group) << ',' << to_string(row.picture) << ','
        << row.modes << ',' << csv_field(params) << ',' << row.closed.value << ',' << row.numerical << ','
        << exactness << ',' << (row.pass ? "PASS" : "FAIL") << '\n';
    const std::string closed = (exact ? "" : "<=") + std::to_string(row.closed.value);
    text << std::setw(15) << family_name(row.family) << std::setw(6) << to_string(row.group) << std::setw(8)
         << to_string(row.picture) << std::setw(3) << row.modes << std::setw(34) << params << std::setw(8)
         << closed << std::setw(10) << row.numerical << (row.pass ? "PASS" : "FAIL") << "\n";
  }
  report.results["m_max"] = m_max;
  report.results["cells"] = rows.size();
  report.results["failed"] = failed;
  report.results["rows"] = cells;
  if (format == "csv") {
    report.human << csv.str();
  } else {
    report.human << text.str() << "cells: " << rows.size() << ", failed: " << failed << "\n";
  }
  return failed == 0 ? kOk : kCheckFailed;
}

int cmd_generic(Report& report, const Globals& g, const std::string& group_name, std::size_t m, int photons,
                const std::string& picture_name, std::size_t seeds, std::optional<std::uint64_t> seed0) {
  const GroupKind group = parse_group(group_name);
  const Picture picture = parse_picture(picture_name);
  if (seeds < 1) throw std::invalid_argument("--seeds must be at least 1");
  const long expected = generic_dimension(group, m, photons, picture);
  const Rng root(seed0.value_or(g.seed));
  ordered_json dims = ordered_json::array();
  std::size_t hits = 0;
  for (std::size_t s = 0; s < seeds; ++s) {
    const auto psi = sample_sphere_state(m, photons, root.split(s).seed());
    const auto r = orbit_dimension(group, psi, picture, g.rank_tolerance());
    hits += long(r.rank) == expected;
    dims.push_back(r.rank);
  }
  const auto uniform = orbit_dimension(group, uniform_phase_state(m, photons), picture, g.rank_tolerance());
  report.results["group"] = to_string(group);
  report.results["picture"] = to_string(picture);
  report.results["m"] = m;
  report.results["N"] = photons;
  report.results["seed0"] = root.seed();
  report.results["expected"] = expected;
  report.results["dimensions"] = dims;
  report.results["hits"] = hits;
  report.results["samples"] = seeds;
  report.results["uniform_phase_dimension"] = uniform.rank;
  report.human << "group: " << to_string(group) << "\npicture: " << to_string(picture) << "\nm: " << m
               << "\nN: " << photons << "\ngeneric dimension: " << expected << "\nhits: " << hits << "/"
               << seeds << "\nuniform-phase dimension: " << uniform.rank << "\n";
  return hits == seeds && long(uniform.rank) == expected ? kOk : kCheckFailed;
}

int cmd_closure(Report& report, const std::string& group_name, std::size_t m, double threshold,
                bool with_identity) {
  const GroupKind group = parse_group(group_name);
  const LieBasis basis = lie_basis(group, m);
  std::vector<Generator> fitting = basis.elements;
  if (with_identity && !has_displacements(group)) fitting.push_back(Generator::identity());
  const ClosureReport c = verify_closure(basis.elements, fitting, default_closure_probes(m));
  report.results["with_identity"] = with_identity;
  report.results["group"] = to_string(group);
  report.results["m"] = m;
  report.results["pairs"] = c.pairs.size() * c.pairs.size();
  report.results["max_residual"] = c.max_residual;
  report.results["min_normal_eigenvalue"] = c.min_normal_eigenvalue;
  report.results["threshold"] = threshold;
  report.human << "group: " << to_string(group) << "\nm: " << m << "\npairs: " << c.pairs.size() * c.pairs.size()
               << "\nmax residual: " << h6(c.max_residual) << " (threshold " << h6(threshold) << ")"
               << "\nmin normal eigenvalue: " << h6(c.min_normal_eigenvalue) << "\n";
  return c.max_residual < threshold ? kOk : kCheckFailed;
}

int cmd_witness(Report& report, const Globals& g, const StateInput& in) {
  const StateFile state = in.load(report);
  const auto* psi = std::get_if<SparseKet>(&state);
  if (!psi) throw PictureMismatch("the witness takes a ket file");
  const WitnessResult w = nongaussianity_witness(*psi, g.rank_tolerance());
  report.results["dimension"] = w.dimension;
  report.results["threshold"] = w.threshold;
  report.results["witnessed"] = w.witnessed;
  report.human << "witnessed: " << (w.witnessed ? "true" : "false") << " (" << w.dimension
               << (w.witnessed ? " > " : " <= ") << w.threshold << ")\n";
  return kOk;
}

struct EstimateOptions {
  StateInput state;
  std::string group = "go";
  EvolutionConfig cfg;
  bool no_richardson = false;
  bool detail = false;
};

int cmd_estimate(Report& report, const EstimateOptions& o) {
  const GroupKind group = parse_group(o.group);
  EvolutionConfig cfg = o.cfg;
  cfg.richardson = !o.no_richardson;
  cfg.validate();
  const StateFile state = o.state.load(report);
  const DensityOperator rho = std::holds_alternative<DensityOperator>(state)
                                  ? std::get<DensityOperator>(state)
                                  : outer(std::get<SparseKet>(state));
  const GramEstimator estimator(rho, group, cfg);
  const auto m = estimator.estimate_all();
  if (m.leaked) {
    throw LeakageError("evolution leaked beyond " + h6(cfg.leakage_tolerance) + "; increase --buffer", 0.0);
  }
  const Eigen::MatrixXd direct = gram_mixed(group, rho).values;
  const Eigen::MatrixXd& chosen = cfg.richardson ? m.extrapolated : m.raw;
  const double dev = (chosen - direct).cwiseAbs().maxCoeff();
  const double dev_raw = (m.raw - direct).cwiseAbs().maxCoeff();
  const double dev_half = (m.raw_half - direct).cwiseAbs().maxCoeff();
  report.results["group"] = to_string(group);
  report.results["h"] = cfg.step;
  report.results["buffer"] = cfg.buffer;
  report.results["leakage_tolerance"] = cfg.leakage_tolerance;
  report.results["richardson"] = cfg.richardson;
  report.results["max_deviation"] = dev;
  report.results["max_deviation_h"] = dev_raw;
  report.results["max_deviation_h_half"] = dev_half;
  report.human << "group: " << to_string(group) << "\nh: " << h6(cfg.step) << "\nbuffer: " << cfg.buffer
               << "\nmax deviation: " << h6(dev) << (cfg.richardson ? " (richardson)" : " (step h)")
               << "\nmax deviation at h: " << h6(dev_raw) << "\nmax deviation at h/2: " << h6(dev_half) << "\n";
  if (o.detail) {
    const auto names = labels(estimator.basis());
    ordered_json entries = ordered_json::array();
    report.human << "entries (I J direct raw raw_half extrapolated):\n";
    for (Eigen::Index i = 0; i < direct.rows(); ++i) {
      for (Eigen::Index j = 0; j < direct.cols(); ++j) {
        entries.push_back({{"I", names[std::size_t(i)]},
                           {"J", names[std::size_t(j)]},
                           {"direct", direct(i, j)},
                           {"raw", m.raw(i, j)},
                           {"raw_half", m.raw_half(i, j)},
                           {"extrapolated", m.extrapolated(i, j)}});
        report.human << "  " << names[std::size_t(i)] << " " << names[std::size_t(j)] << " " << h6(direct(i, j))
                     << " " << h6(m.raw(i, j)) << " " << h6(m.raw_half(i, j)) << " " << h6(m.extrapolated(i, j))
                     << "\n";
      }
    }
    report.results["entries"] = entries;
  }
  return kOk;
}

int cmd_sample(Report& report, const Globals& g, std::size_t m, int photons, const std::string& path,
               std::ostream& out) {
  const SparseKet psi = sample_sphere_state(m, photons, g.seed);
  const std::string text = format_state(psi);
  report.results["m"] = m;
  report.results["N"] = photons;
  report.results["seed"] = g.seed;
  report.results["terms"] = psi.terms().size();
  if (path.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot write " + path);
  file << text;
  report.results["out"] = path;
  report.human << "wrote " << psi.terms().size() << " terms to " << path << "\n";
  return kOk;
}

int cmd_cnot(Report& report, const Globals& g, const std::string& group_name) {
  const GroupKind group = parse_group(group_name);
  const CnotReport c = cnot_demo(group, g.rank_tolerance());
  const bool expected = group != GroupKind::GO || (c.plus_zero_dimension == 38 && c.bell_dimension == 37);
  report.results["group"] = to_string(group);
  report.results["plus_zero_dimension"] = c.plus_zero_dimension;
  report.results["bell_dimension"] = c.bell_dimension;
  report.results["cnot_excluded"] = c.cnot_excluded;
  report.human << "group: " << to_string(group) << "\n|+0>_L ketbra dimension: " << c.plus_zero_dimension
               << "\n|Phi+>_L ketbra dimension: " << c.bell_dimension << "\nverdict: "
               << (c.cnot_excluded ? "dimensions differ, CNOT is not in the group"
                                   : "dimensions agree, no conclusion")
               << "\n";
  return expected ? kOk : kCheckFailed;
}

}  // namespace

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t hash) {
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals g;
  CLI::App app{"Orbit dimensions of multimode bosonic states under linear optical groups", "orbitdim"};
  app.require_subcommand(1);
  app.fallthrough();
  // Subcommands inherit this; a bare -h would collide with estimate's --h.
  app.set_help_flag("--help", "print help and exit");
  app.add_flag("--json", g.json, "structured report");
  app.add_option("--tol", g.tol, "rank tolerance (default relative 1e-8)")->check(CLI::PositiveNumber);
  app.add_flag("--tol-absolute", g.tol_absolute, "use --tol as an absolute eigenvalue threshold");
  app.add_option("--seed", g.seed, "seed for sampling commands");

  auto group_option = [](CLI::App* cmd, std::string& target) {
    cmd->add_option("--group", target, "plo, dplo, alo or go")
        ->check(CLI::IsMember(kGroupNames, CLI::ignore_case))
        ->capture_default_str();
  };
  auto picture_option = [](CLI::App* cmd, std::string& target) {
    cmd->add_option("--picture", target, "ket, ketbra or mixed")
        ->check(CLI::IsMember(kPictureNames, CLI::ignore_case))
        ->capture_default_str();
  };

  StateInput state;
  std::string group = "go", picture = "ket";
  auto* dim = app.add_subcommand("dim", "orbit dimension of a state file");
  add_state_options(dim, state);
  group_option(dim, group);
  picture_option(dim, picture);

  auto* gram_cmd = app.add_subcommand("gram", "Gram matrix of a state file");
  add_state_options(gram_cmd, state);
  group_option(gram_cmd, group);
  picture_option(gram_cmd, picture);

  std::size_t m_max = 4;
  std::string format = "text";
  auto* table = app.add_subcommand("table2", "closed-form table against numerics");
  table->add_option("--m-max", m_max, "largest mode count")->check(CLI::Range(1, 8))->capture_default_str();
  table->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}))->capture_default_str();

  std::size_t modes = 2;
  int photons = 2;
  std::size_t seeds = 20;
  std::optional<std::uint64_t> seed0;
  auto* generic = app.add_subcommand("generic", "dimension of random states against the generic value");
  group_option(generic, group);
  picture_option(generic, picture);
  generic->add_option("--m", modes, "modes")->check(CLI::Range(1, 8))->capture_default_str();
  generic->add_option("--N", photons, "photon cutoff")->check(CLI::Range(0, 12))->capture_default_str();
  generic->add_option("--seeds", seeds, "number of samples")->check(CLI::PositiveNumber)->capture_default_str();
  generic->add_option("--seed0", seed0, "first seed (defaults to --seed)");

  double threshold = 1e-10;
  auto* closure = app.add_subcommand("closure", "commutator closure of the group basis");
  group_option(closure, group);
  closure->add_option("--m", modes, "modes")->check(CLI::Range(1, 8))->capture_default_str();
  closure->add_option("--threshold", threshold, "largest accepted residual")->capture_default_str();
  bool with_identity = false;
  closure->add_flag("--with-identity", with_identity, "admit the identity to the fitting set");

  auto* witness = app.add_subcommand("witness", "non-Gaussianity witness of a ket file");
  add_state_options(witness, state);

  EstimateOptions est;
  auto* estimate = app.add_subcommand("estimate", "finite-difference Gram estimate against the direct Gram");
  add_state_options(estimate, est.state);
  group_option(estimate, est.group);
  estimate->add_option("--h", est.cfg.step, "finite-difference step")->capture_default_str();
  estimate->add_option("--buffer", est.cfg.buffer, "photons above the state support")->capture_default_str();
  estimate->add_option("--leakage-tol", est.cfg.leakage_tolerance, "largest accepted leakage")
      ->capture_default_str();
  estimate->add_flag("--no-richardson", est.no_richardson, "report the step-h stencil only");
  estimate->add_flag("--detail", est.detail, "print every entry");

  std::string out_path;
  auto* sample = app.add_subcommand("sample", "write a random ket of at most N photons");
  sample->add_option("--m", modes, "modes")->check(CLI::Range(1, 8))->capture_default_str();
  sample->add_option("--N", photons, "photon cutoff")->check(CLI::Range(0, 12))->capture_default_str();
  sample->add_option("--out", out_path, "output file (stdout if omitted)");

  std::string cnot_group = "go";
  auto* cnot = app.add_subcommand("cnot-demo", "dual-rail CNOT exclusion by orbit dimension");
  group_option(cnot, cnot_group);

  std::vector<std::string> storage{"orbitdim"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Report report(chosen->get_name(), args, g);
  int code = kOk;
  try {
    if (chosen == dim) code = cmd_dim(report, g, state, group, picture);
    else if (chosen == gram_cmd) code = cmd_gram(report, g, state, group, picture);
    else if (chosen == table) code = cmd_table2(report, g, m_max, format);
    else if (chosen == generic) code = cmd_generic(report, g, group, modes, photons, picture, seeds, seed0);
    else if (chosen == closure) code = cmd_closure(report, group, modes, threshold, with_identity);
    else if (chosen == witness) code = cmd_witness(report, g, state);
    else if (chosen == estimate) code = cmd_estimate(report, est);
    else if (chosen == sample) {
      code = cmd_sample(report, g, modes, photons, out_path, out);
      if (out_path.empty()) return code;
    } else if (chosen == cnot) code = cmd_cnot(report, g, cnot_group);
  } catch (const StateFileError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const PictureMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kPictureMismatch;
  } catch (const LeakageError& e) {
    err << "error: " << e.what() << "\n";
    return kLeakage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  report.emit(out);
  return code;
}

}  // namespace orbitdim::cli
