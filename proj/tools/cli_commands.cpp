#include "cli_commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "rieszkit/construction.hpp"
#include "rieszkit/density.hpp"
#include "rieszkit/duality.hpp"
#include "rieszkit/errors.hpp"
#include "rieszkit/example_sets.hpp"
#include "rieszkit/gram.hpp"
#include "rieszkit/interval_io.hpp"
#include "rieszkit/progressions.hpp"
#include "rieszkit/squarefree.hpp"
#include "rieszkit/witness.hpp"

namespace rieszkit::cli {

namespace {

using nlohmann::json;

constexpr int kSchema = 1;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string out = ".";
  std::uint64_t seed = 20240101;
};

struct GeneratorParams {
  std::string generator = "example_a";
  std::int64_t P = 2;
  std::int64_t K = 1000;
  double alpha = 1.0;
  double jitter = 1e-3;
  std::int64_t N = 1;
  int k_max = 4;
};

void add_generator_options(CLI::App* app, GeneratorParams& g) {
  app->add_option("--generator", g.generator, "example_a, example_b, lattice, jitter or squarefree")
      ->capture_default_str()
      ->check(CLI::IsMember({"example_a", "example_b", "lattice", "jitter", "squarefree"}));
  app->add_option("--P", g.P, "block difference of example_a")->capture_default_str();
  app->add_option("--K", g.K, "truncation [-K, K]")->capture_default_str();
  app->add_option("--alpha", g.alpha, "lattice spacing")->capture_default_str();
  app->add_option("--jitter", g.jitter, "jitter amplitude")->capture_default_str();
  app->add_option("--N", g.N, "offset step of example_b")->capture_default_str();
  app->add_option("--kmax", g.k_max, "number of example_b blocks")->capture_default_str();
}

json generator_config(const GeneratorParams& g) {
  return {{"generator", g.generator}, {"P", g.P},           {"K", g.K},
          {"alpha", g.alpha},         {"jitter", g.jitter}, {"N", g.N},
          {"kmax", g.k_max}};
}

FrequencySet make_set(const GeneratorParams& g, std::uint64_t seed) {
  if (g.K < 1) throw std::invalid_argument("--K must be >= 1");
  if (g.generator == "example_a") return from_integers(example_a({g.P, {}, g.K}), "example_a");
  if (g.generator == "example_b") {
    return example_b({g.N, g.k_max, static_cast<double>(g.K)});
  }
  if (g.generator == "squarefree") return from_integers(squarefree_symmetric(g.K), "squarefree");
  if (g.generator == "lattice") {
    if (!(g.alpha > 0)) throw std::invalid_argument("--alpha must be positive");
    std::vector<double> pts;
    for (std::int64_t j = -g.K; j <= g.K; ++j) pts.push_back(g.alpha * static_cast<double>(j));
    return make_frequency_set(std::move(pts), "lattice");
  }
  if (!(g.jitter >= 0 && g.jitter < 0.25)) throw std::invalid_argument("--jitter must lie in [0, 1/4)");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-g.jitter, g.jitter);
  std::vector<double> pts;
  for (std::int64_t j = -g.K; j <= g.K; ++j) pts.push_back(static_cast<double>(j) + u(rng));
  return make_frequency_set(std::move(pts), "jitter");
}

void validate_alpha_epsilon(double alpha, double epsilon) {
  if (!(alpha > 0 && alpha <= 1)) throw std::invalid_argument("--alpha must lie in (0, 1]");
  if (!(epsilon > 0 && epsilon < 1)) throw std::invalid_argument("--epsilon must lie in (0, 1)");
}

int default_R(double epsilon) { return static_cast<int>(std::floor(1.0 / (1.0 - epsilon))) + 1; }

std::filesystem::path prepare_out(const Globals& g) {
  std::error_code ec;
  std::filesystem::create_directories(g.out, ec);
  if (ec) throw IoError("cannot create output directory " + g.out + ": " + ec.message());
  return std::filesystem::path(g.out);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f << text;
  if (!f) throw IoError("write failed for " + path.string());
}

std::string write_report(const Globals& g, const std::string& name, const json& report) {
  const auto path = prepare_out(g) / (name + ".json");
  write_text(path, report.dump(2) + "\n");
  return path.string();
}

json envelope(const std::string& command, const json& config) {
  return {{"schema", kSchema}, {"command", command}, {"config", config}};
}

// ---------------------------------------------------------------- build-set

struct BuildSetParams {
  double alpha = 1.0;
  double epsilon = 0.5;
  int depth = 10;
  bool improved = false;
  std::size_t samples = 4097;
};

json layer_summary(double alpha, double epsilon, int depth) {
  json layers = json::array();
  for (int ell = 1; ell <= depth; ++ell) {
    const IntervalSet layer = build_V_layer(alpha, epsilon / 2, ell);
    layers.push_back({{"ell", ell},
                      {"period", 1.0 / (ell * alpha)},
                      {"halfwidth", epsilon / (ell * std::ldexp(1.0, ell + 3))},
                      {"bumps", layer.size()},
                      {"measure", measure(layer)}});
  }
  return layers;
}

int cmd_build_set(const Globals& g, const BuildSetParams& p, std::ostream& out) {
  validate_alpha_epsilon(p.alpha, p.epsilon);
  if (p.depth < 0) throw std::invalid_argument("--depth must be >= 0");
  if (p.samples < 4096) throw std::invalid_argument("--samples must be >= 4096");
  const IntervalSet V = p.improved ? build_V_improved(p.alpha, p.epsilon, p.depth, default_c_vectors(p.depth))
                                   : build_V(p.alpha, p.epsilon, p.depth);
  const IntervalSet S = complement_in(V, kUnitWindow);

  json config = {{"alpha", p.alpha}, {"epsilon", p.epsilon}, {"depth", p.depth},
                 {"improved", p.improved}, {"samples", p.samples}, {"seed", g.seed}};
  json report = envelope("build-set", config);
  report["V"] = to_json(V);
  report["S"] = to_json(S);
  report["measure_V_below_epsilon"] = measure(V) < p.epsilon;
  report["measure_S_above_one_minus_epsilon"] = measure(S) > 1 - p.epsilon;
  if (!p.improved) report["layers"] = layer_summary(p.alpha, p.epsilon, p.depth);

  const auto dir = prepare_out(g);
  for (const auto& [name, set] : {std::pair<std::string, const IntervalSet*>{"V", &V}, {"S", &S}}) {
    std::ostringstream csv;
    write_indicator_csv(csv, *set, kUnitWindow, p.samples);
    write_text(dir / ("chi_" + name + ".csv"), csv.str());
  }
  const std::string path = write_report(g, "build-set", report);
  out << "build-set: |V| = " << measure(V) << ", |S| = " << measure(S) << ", parts(V) = " << V.size()
      << " -> " << path << "\n";
  return kOk;
}

// ------------------------------------------------------------------ witness

struct WitnessParams {
  double alpha = 1.0;
  double epsilon = 0.5;
  double eta = 0;  // 0: epsilon / 2^k
  int k = 1;
  int P = 1;
  int R = 0;  // 0: smallest integer above 1 / (1 - epsilon)
  double d = 0;
  int depth = 0;  // 0: max(10, P)
  std::size_t length = 0;
  bool approx = false;
  int ell = 1;
  std::int64_t Lmult = 1;
  bool gen_set = false;
  GeneratorParams gen;
};

json witness_json(const WitnessReport& r) {
  return {{"alpha", r.alpha},     {"epsilon", r.epsilon},       {"eta", r.eta},
          {"ell", r.ell},         {"P", r.P},                   {"R", r.R},
          {"M_tilde", r.M_tilde}, {"energy_on_S", r.energy_on_S}, {"coeff_energy", r.coeff_energy},
          {"tail", r.tail},       {"bound", r.bound},           {"satisfied", r.satisfied}};
}

int cmd_witness(const Globals& g, WitnessParams p, std::ostream& out) {
  validate_alpha_epsilon(p.alpha, p.epsilon);
  if (p.k < 1) throw std::invalid_argument("--k must be >= 1");
  if (p.R == 0) p.R = default_R(p.epsilon);
  if (p.R < 2) throw std::invalid_argument("--R must be >= 2");
  const double limit = (p.R - 1.0) / p.R;
  if (!(p.epsilon < limit)) {
    throw std::invalid_argument("epsilon must be below (R-1)/R = " + std::to_string(limit) + "; raise --R");
  }
  if (p.eta == 0) p.eta = p.epsilon / std::ldexp(1.0, p.k);
  if (!(p.eta > 0)) throw std::invalid_argument("--eta must be positive");
  if (!(p.eta < limit)) {
    throw std::invalid_argument("eta = " + std::to_string(p.eta) + " violates eta < (R-1)/R = " +
                                std::to_string(limit) + ": the truncated energy can no longer exceed 1/R");
  }
  if (p.depth == 0) p.depth = std::max(10, p.P);

  json config = {{"alpha", p.alpha}, {"epsilon", p.epsilon}, {"eta", p.eta},     {"k", p.k},
                 {"P", p.P},         {"R", p.R},             {"d", p.d},         {"depth", p.depth},
                 {"length", p.length}, {"approx", p.approx}, {"ell", p.ell},     {"Lmult", p.Lmult},
                 {"seed", g.seed},   {"set", p.gen_set ? generator_config(p.gen) : json("ap")}};
  json report = envelope("witness", config);

  if (p.approx) {
    GeneratorParams gen = p.gen;
    if (!p.gen_set) gen.generator = "jitter";
    const FrequencySet L = make_set(gen, g.seed);
    try {
      const ApproxApWitness w = approx_ap_witness(L, p.eta, p.ell, p.R, p.Lmult);
      report["witness"] = {{"M", w.M},
                           {"l1_head", w.l1_head},
                           {"l1_tail", w.l1_tail},
                           {"delta", w.delta},
                           {"c", w.ap.c},
                           {"d", w.ap.d},
                           {"N", w.ap.N},
                           {"max_deviation", w.ap.max_deviation},
                           {"energy_on_S", w.energy_on_S},
                           {"coeff_energy", w.coeff_energy},
                           {"measure_S", measure(w.S)},
                           {"pointwise_bound", w.pointwise_bound},
                           {"max_pointwise_error", w.max_pointwise_error},
                           {"bound", w.bound},
                           {"satisfied", w.satisfied}};
      const std::string path = write_report(g, "witness", report);
      out << "witness (approximate AP): M = " << w.M << ", c = " << w.ap.c << ", energy = " << w.energy_on_S
          << ", bound = " << w.bound << ", satisfied = " << std::boolalpha << w.satisfied << " -> " << path
          << "\n";
      return kOk;
    } catch (const NotFoundError& e) {
      report["found"] = false;
      report["best_length"] = e.best_length();
      write_report(g, "witness", report);
      throw;
    }
  }

  if (p.P < 1) throw std::invalid_argument("--P must be >= 1");
  if (p.depth < p.P) throw std::invalid_argument("--depth must be at least P so that S avoids layer P");

  const double diff = p.P * p.alpha;
  double d = p.d;
  int M_tilde = -1;
  if (p.P <= 30) {
    const double w = p.eta * p.alpha / std::ldexp(1.0, p.P);
    const double target = p.eta / std::ldexp(1.0, p.P);
    M_tilde = truncation_index(box_coeffs_for_tail(w, target), target);
  } else if (!p.gen_set || p.length == 0) {
    throw std::invalid_argument("--P above 30 is only supported as an AP census with --generator and --length");
  }

  if (p.gen_set) {
    const FrequencySet L = make_set(p.gen, g.seed);
    const auto runs = maximal_runs_real(L, diff, 1e-7, 1);
    std::size_t best = 0;
    double best_start = 0;
    for (const auto& r : runs) {
      if (r.length > best) {
        best = r.length;
        best_start = r.start;
      }
    }
    std::size_t need = p.length;
    if (M_tilde >= 0) need = std::max(need, static_cast<std::size_t>(2 * M_tilde + 1));
    report["longest_run"] = best;
    report["required_length"] = need;
    if (best < need) {
      report["found"] = false;
      write_report(g, "witness", report);
      throw NotFoundError("witness: longest progression with difference " + std::to_string(diff) + " has length " +
                              std::to_string(best) + ", need " + std::to_string(need),
                          best);
    }
    report["found"] = true;
    if (M_tilde < 0) {
      report["witness"] = nullptr;
      const std::string path = write_report(g, "witness", report);
      out << "witness: progression of length " << best << " found; P too large for the witness -> " << path << "\n";
      return kOk;
    }
    d = best_start + M_tilde * diff;
  }

  const IntervalSet S = build_S(p.alpha, p.epsilon, p.depth);
  const ExactApWitness w = exact_ap_witness(p.alpha, p.eta, p.P, p.R, d, S);
  WitnessReport r = w.report;
  r.epsilon = p.epsilon;
  report["witness"] = witness_json(r);
  report["chain"] = {{"truncated_energy", w.truncated_energy},
                     {"truncated_energy_above_inv_R", w.truncated_energy > 1.0 / p.R},
                     {"tail_below_target", w.tail < p.eta / std::ldexp(1.0, p.P)},
                     {"energy_off_layer", w.energy_off_layer},
                     {"energy_on_S_le_off_layer", w.report.energy_on_S <= w.energy_off_layer + 1e-12},
                     {"measure_S", measure(S)}};
  const std::string path = write_report(g, "witness", report);
  out << "witness: M~ = " << r.M_tilde << ", energy = " << r.energy_on_S << ", bound = " << r.bound
      << ", satisfied = " << std::boolalpha << r.satisfied << " -> " << path << "\n";
  return kOk;
}

// -------------------------------------------------------------- gram-bounds

struct GramParams {
  double alpha = 1.0;
  double epsilon = 0.5;
  std::int64_t K = 64;
  std::vector<int> depths{8};
  std::string set = "S";
  std::vector<std::int64_t> Ks;
  std::int64_t modulus = 0;
  std::vector<std::int64_t> residues;
};

IntervalSet gram_set(const GramParams& p, int depth) {
  if (p.set == "full") return IntervalSet::single(-0.5, 0.5);
  if (p.set == "V") return build_V(p.alpha, p.epsilon, depth);
  return build_S(p.alpha, p.epsilon, depth);
}

std::vector<double> lattice_freqs(double alpha, std::int64_t K) {
  std::vector<double> f;
  for (std::int64_t j = -K; j <= K; ++j) f.push_back(alpha * static_cast<double>(j));
  return f;
}

int cmd_gram(const Globals& g, const GramParams& p, std::ostream& out) {
  validate_alpha_epsilon(p.alpha, p.epsilon);
  if (p.K < 0) throw std::invalid_argument("--K must be >= 0");
  if (p.depths.empty()) throw std::invalid_argument("--depths must not be empty");
  for (int d : p.depths) {
    if (d < 0) throw std::invalid_argument("--depths entries must be >= 0");
  }
  json config = {{"alpha", p.alpha}, {"epsilon", p.epsilon}, {"K", p.K},        {"depths", p.depths},
                 {"set", p.set},     {"Ks", p.Ks},           {"modulus", p.modulus}, {"residues", p.residues},
                 {"seed", g.seed}};
  json report = envelope("gram-bounds", config);

  json rows = json::array();
  for (int depth : p.depths) {
    const IntervalSet S = gram_set(p, depth);
    if (S.empty()) throw std::invalid_argument("selected set is empty");
    const ExtremalEigs e = extremal_eigs(gram_matrix(lattice_freqs(p.alpha, p.K), S));
    rows.push_back({{"depth", depth},
                    {"measure", measure(S)},
                    {"lambda_min", e.lambda_min},
                    {"lambda_max", e.lambda_max},
                    {"residual_min", e.residual_min},
                    {"residual_max", e.residual_max},
                    {"sweeps", e.sweeps}});
    out << "gram-bounds: depth " << depth << " lambda_min = " << e.lambda_min << " lambda_max = " << e.lambda_max
        << "\n";
  }
  report["bounds"] = rows;

  if (!p.Ks.empty()) {
    const IntervalSet S = gram_set(p, p.depths.back());
    std::vector<FrequencySet> family;
    for (std::int64_t K : p.Ks) {
      if (K < 0) throw std::invalid_argument("--Ks entries must be >= 0");
      family.push_back(make_frequency_set(lattice_freqs(p.alpha, K)));
    }
    report["trajectory"] = {{"Ks", p.Ks}, {"lambda_min", riesz_lower_trajectory(family, S)}};
  }

  if (p.modulus > 0) {
    const IntervalSet V = build_V(p.alpha, p.epsilon, p.depths.back());
    const ResidueSpec spec{p.modulus, p.residues};
    json cf = json::array();
    const std::vector<std::int64_t> Ks = p.Ks.empty() ? std::vector<std::int64_t>{p.K} : p.Ks;
    for (std::int64_t K : Ks) cf.push_back({{"K", K}, {"frame_bound_estimate", complement_frame_bound(spec, V, K)}});
    report["complement_frame_bound"] = cf;
  }

  const std::string path = write_report(g, "gram-bounds", report);
  out << "gram-bounds -> " << path << "\n";
  return kOk;
}

// --------------------------------------------------------------- ap-extract

struct ApParams {
  GeneratorParams gen;
  int M = 5;
  double delta = 0.1;
  std::int64_t Lmult = 1;
  std::int64_t fixed_diff = 0;
};

int cmd_ap_extract(const Globals& g, const ApParams& p, std::ostream& out) {
  json config = generator_config(p.gen);
  config["M"] = p.M;
  config["delta"] = p.delta;
  config["Lmult"] = p.Lmult;
  config["fixed_diff"] = p.fixed_diff;
  config["seed"] = g.seed;
  json report = envelope("ap-extract", config);
  const FrequencySet L = make_set(p.gen, g.seed);

  if (p.fixed_diff > 0) {
    const FixedDiffRun run = find_ap_fixed_diff(to_integers(L), p.fixed_diff);
    report["fixed_diff"] = {{"length", run.length}, {"start", run.start}};
    const std::string path = write_report(g, "ap-extract", report);
    out << "ap-extract: longest run with difference " << p.fixed_diff << " has length " << run.length << " -> "
        << path << "\n";
    return kOk;
  }

  try {
    const ApResult r = extract_approx_ap(L, p.M, p.delta, p.Lmult);
    report["found"] = true;
    report["ap"] = {{"c", r.c}, {"d", r.d}, {"s", r.s}, {"max_deviation", r.max_deviation}, {"N", r.N}, {"M", r.M}};
    const std::string path = write_report(g, "ap-extract", report);
    out << "ap-extract: c = " << r.c << ", d = " << r.d << ", max deviation = " << r.max_deviation << " -> " << path
        << "\n";
    return kOk;
  } catch (const NotFoundError& e) {
    report["found"] = false;
    report["best_length"] = e.best_length();
    write_report(g, "ap-extract", report);
    throw;
  }
}

// ------------------------------------------------------------ duality-check

struct DualityParams {
  std::size_t n = 12;
  int trials = 100;
};

int cmd_duality(const Globals& g, const DualityParams& p, std::ostream& out) {
  if (p.n < 1) throw std::invalid_argument("--n must be >= 1");
  if (p.trials < 1) throw std::invalid_argument("--trials must be >= 1");
  json config = {{"n", p.n}, {"trials", p.trials}, {"seed", g.seed}};
  json report = envelope("duality-check", config);
  std::mt19937_64 rng(g.seed);
  std::uniform_int_distribution<std::size_t> rank_dist(0, p.n);
  json rows = json::array();
  double frame_gap = 0, riesz_gap = 0;
  int consistent = 0, boundary = 0;
  for (int t = 0; t < p.trials; ++t) {
    const std::size_t k = rank_dist(rng);
    const CMatrix P = random_projection(p.n, k, rng);
    const auto J = random_subset(p.n, rng);
    const DualityReport r = duality_check(P, J);
    frame_gap = std::max(frame_gap, std::fabs(r.frame_lower - (1 - r.bessel_opt)));
    riesz_gap = std::max(riesz_gap, std::fabs(r.riesz_lower - (1 - r.bessel_opt)));
    consistent += r.consistent ? 1 : 0;
    boundary += r.boundary ? 1 : 0;
    rows.push_back({{"rank", r.rank},
                    {"J_size", J.size()},
                    {"bessel_opt", r.bessel_opt},
                    {"frame_lower", r.frame_lower},
                    {"riesz_lower", r.riesz_lower},
                    {"boundary", r.boundary},
                    {"consistent", r.consistent}});
  }
  report["trials"] = rows;
  report["summary"] = {{"consistent", consistent},
                       {"boundary", boundary},
                       {"all_consistent", consistent == p.trials},
                       {"max_frame_gap", frame_gap},
                       {"max_riesz_gap", riesz_gap}};
  const std::string path = write_report(g, "duality-check", report);
  out << "duality-check: " << consistent << "/" << p.trials << " consistent, max gaps " << frame_gap << ", "
      << riesz_gap << " -> " << path << "\n";
  return kOk;
}

// --------------------------------------------------------- squarefree-check

struct SquarefreeParams {
  std::int64_t limit = 1000000;
  std::int64_t P_max = 10;
  bool density = true;
  double r_min = 16;
};

int cmd_squarefree(const Globals& g, const SquarefreeParams& p, std::ostream& out) {
  if (p.limit < 4 || p.limit > kIntegerLimit) throw std::invalid_argument("--limit must lie in [4, 2^40]");
  if (p.P_max < 1) throw std::invalid_argument("--P must be >= 1");
  json config = {{"limit", p.limit}, {"P", p.P_max}, {"density", p.density}, {"r_min", p.r_min}, {"seed", g.seed}};
  json report = envelope("squarefree-check", config);
  const IntegerSet sf = squarefree_set(p.limit);
  json rows = json::array();
  bool all_ok = true;
  for (std::int64_t P = 1; P <= p.P_max; ++P) {
    const ObstructionReport r = squarefree_obstruction(P, sf, p.limit);
    all_ok = all_ok && r.observed < r.Q * r.Q;
    rows.push_back({{"P", r.P}, {"Q", r.Q}, {"cap", r.cap}, {"observed", r.observed}, {"start", r.start},
                    {"limit", r.limit}});
  }
  report["obstruction"] = rows;
  report["all_below_Q_squared"] = all_ok;
  report["count"] = sf.size();

  if (p.density) {
    const FrequencySet L = from_integers(squarefree_symmetric(p.limit), "squarefree");
    const double span = 2.0 * static_cast<double>(p.limit);
    const DensityEstimate est =
        density_bounds(L, {-static_cast<double>(p.limit), static_cast<double>(p.limit)},
                       geometric_r_grid(p.r_min, span / 8));
    report["density"] = {{"d_minus", est.d_minus}, {"d_plus", est.d_plus}, {"reference", 6 / (std::numbers::pi * std::numbers::pi)}};
    out << "squarefree-check: density estimates [" << est.d_minus << ", " << est.d_plus << "]\n";
  }
  const std::string path = write_report(g, "squarefree-check", report);
  out << "squarefree-check: all observed < Q^2: " << std::boolalpha << all_ok << " -> " << path << "\n";
  return kOk;
}

// ------------------------------------------------------------------ density

struct DensityParams {
  GeneratorParams gen;
  double r_min = 8;
  double r_max = 0;  // 0: window length / 8
};

int cmd_density(const Globals& g, const DensityParams& p, std::ostream& out) {
  json config = generator_config(p.gen);
  config["r_min"] = p.r_min;
  config["r_max"] = p.r_max;
  config["seed"] = g.seed;
  json report = envelope("density", config);
  const FrequencySet L = make_set(p.gen, g.seed);
  const double K = static_cast<double>(p.gen.K);
  const double r_max = p.r_max > 0 ? p.r_max : 2 * K / 8;
  const DensityEstimate est = density_bounds(L, {-K, K}, geometric_r_grid(p.r_min, r_max));
  json rows = json::array();
  for (const auto& r : est.rows) rows.push_back({{"r", r.r}, {"inf", r.inf_rate}, {"sup", r.sup_rate}});
  report["rows"] = rows;
  report["d_minus"] = est.d_minus;
  report["d_plus"] = est.d_plus;
  const std::string path = write_report(g, "density", report);
  out << "density: D- ~ " << est.d_minus << ", D+ ~ " << est.d_plus << " -> " << path << "\n";
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interval-set constructions, witness polynomials and Gram bounds for exponential systems"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML configuration file; command-line flags take precedence");

  Globals globals;
  app.add_option("--out", globals.out, "output directory")->capture_default_str();
  app.add_option("--seed", globals.seed, "random seed")->capture_default_str();

  BuildSetParams bs;
  auto* build = app.add_subcommand("build-set", "write V and S with characteristic-function samples");
  build->add_option("--alpha", bs.alpha)->capture_default_str();
  build->add_option("--epsilon", bs.epsilon)->capture_default_str();
  build->add_option("--depth", bs.depth)->capture_default_str();
  build->add_flag("--improved", bs.improved, "use the per-level family construction with c_r = r");
  build->add_option("--samples", bs.samples)->capture_default_str();

  WitnessParams wp;
  auto* witness = app.add_subcommand("witness", "witness polynomial for the lower Riesz inequality");
  witness->add_option("--alpha", wp.alpha)->capture_default_str();
  witness->add_option("--epsilon", wp.epsilon)->capture_default_str();
  witness->add_option("--eta", wp.eta, "defaults to epsilon / 2^k");
  witness->add_option("--k", wp.k)->capture_default_str();
  witness->add_option("--P", wp.P)->capture_default_str();
  witness->add_option("--R", wp.R, "defaults to the smallest integer above 1/(1-epsilon)");
  witness->add_option("--d", wp.d)->capture_default_str();
  witness->add_option("--depth", wp.depth, "defaults to max(10, P)");
  witness->add_option("--length", wp.length, "required progression length when searching a generated set");
  witness->add_flag("--approx", wp.approx, "approximate-progression pipeline with triangle coefficients");
  witness->add_option("--ell", wp.ell)->capture_default_str();
  witness->add_option("--Lmult", wp.Lmult)->capture_default_str();
  auto* wgen = witness->add_option("--generator", wp.gen.generator, "search this set instead of an exact AP")
                   ->check(CLI::IsMember({"example_a", "example_b", "lattice", "jitter", "squarefree"}));
  witness->add_option("--K", wp.gen.K)->capture_default_str();
  witness->add_option("--jitter", wp.gen.jitter)->capture_default_str();
  witness->add_option("--N", wp.gen.N)->capture_default_str();
  witness->add_option("--kmax", wp.gen.k_max)->capture_default_str();
  auto* wgenP = witness->add_option("--gen-P", wp.gen.P, "block difference of example_a, defaults to --P");

  GramParams gp;
  auto* gram = app.add_subcommand("gram-bounds", "extremal Gram eigenvalues of alpha Z cap [-K, K]");
  gram->add_option("--alpha", gp.alpha)->capture_default_str();
  gram->add_option("--epsilon", gp.epsilon)->capture_default_str();
  gram->add_option("--K", gp.K)->capture_default_str();
  gram->add_option("--depth,--depths", gp.depths)->delimiter(',')->capture_default_str();
  gram->add_option("--set", gp.set)->check(CLI::IsMember({"S", "V", "full"}))->capture_default_str();
  gram->add_option("--Ks", gp.Ks, "nested truncations")->delimiter(',');
  gram->add_option("--modulus", gp.modulus, "residue modulus of Omega'")->capture_default_str();
  gram->add_option("--residues", gp.residues, "residue classes of Omega'")->delimiter(',');

  ApParams ap;
  auto* apx = app.add_subcommand("ap-extract", "approximate arithmetic progression extraction");
  add_generator_options(apx, ap.gen);
  apx->add_option("--M", ap.M)->capture_default_str();
  apx->add_option("--delta", ap.delta)->capture_default_str();
  apx->add_option("--Lmult", ap.Lmult)->capture_default_str();
  apx->add_option("--fixed-diff", ap.fixed_diff, "longest exact run with this difference instead");

  DualityParams dp;
  auto* dual = app.add_subcommand("duality-check", "random projection duality trials");
  dual->add_option("--n", dp.n)->capture_default_str();
  dual->add_option("--trials", dp.trials)->capture_default_str();

  SquarefreeParams sp;
  auto* sq = app.add_subcommand("squarefree-check", "square-free progression obstruction and density");
  sq->add_option("--limit", sp.limit)->capture_default_str();
  sq->add_option("--P", sp.P_max, "check differences 1..P")->capture_default_str();
  sq->add_option("--r-min", sp.r_min)->capture_default_str();
  sq->add_flag("!--no-density", sp.density, "skip the density estimate");

  DensityParams dn;
  auto* dens = app.add_subcommand("density", "finite-window Beurling density estimates");
  add_generator_options(dens, dn.gen);
  dens->add_option("--r-min", dn.r_min)->capture_default_str();
  dens->add_option("--r-max", dn.r_max)->capture_default_str();

  for (auto* sub : {build, witness, gram, apx, dual, sq, dens}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (e.get_name() == "FileError") return kIoError;
    return kInvalidConfig;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "build-set") return cmd_build_set(globals, bs, out);
    if (name == "witness") {
      wp.gen_set = wgen->count() > 0;
      if (wgenP->count() == 0) wp.gen.P = wp.P;
      return cmd_witness(globals, wp, out);
    }
    if (name == "gram-bounds") return cmd_gram(globals, gp, out);
    if (name == "ap-extract") return cmd_ap_extract(globals, ap, out);
    if (name == "duality-check") return cmd_duality(globals, dp, out);
    if (name == "squarefree-check") return cmd_squarefree(globals, sp, out);
    if (name == "density") return cmd_density(globals, dn, out);
  } catch (const NotFoundError& e) {
    err << name << ": not found: " << e.what() << " (best length " << e.best_length() << ")\n";
    return kNotFound;
  } catch (const IoError& e) {
    err << name << ": I/O error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << name << ": invalid configuration: " << e.what() << "\n";
    return kInvalidConfig;
  } catch (const std::exception& e) {
    err << name << ": " << e.what() << "\n";
    return kFailure;
  }
  err << "unknown command " << name << "\n";
  return kInvalidConfig;
}

}  // namespace rieszkit::cli
