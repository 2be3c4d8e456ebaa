#include "sproga/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "sproga/csv.hpp"
#include "sproga/errors.hpp"
#include "sproga/graph.hpp"
#include "sproga/metrics.hpp"
#include "sproga/model_selection.hpp"
#include "sproga/objective.hpp"
#include "sproga/solver.hpp"
#include "sproga/synthetic.hpp"

namespace sproga::cli {
namespace {

namespace fs = std::filesystem;

// A sweep cell hit a non-finite iterate; carries the cell's message.
class SweepDiverged : public Error {
 public:
  using Error::Error;
};

int default_threads() {
  if (const char* env = std::getenv("SPROGA_THREADS")) {
    int value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) return value;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

// Records resolved settings as "key=value" pairs on one comment line at the
// top of every output file.
class Manifest {
 public:
  explicit Manifest(std::string command) : command_(std::move(command)) {}

  template <typename T>
  void add(const std::string& key, const T& value) {
    std::ostringstream s;
    s.precision(15);
    s << value;
    items_.emplace_back(key, s.str());
  }

  std::string line() const {
    std::string out = "# sproga " SPROGA_VERSION " " + command_;
    for (const auto& [k, v] : items_) out += " " + k + "=" + v;
    return out;
  }

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::string>> items_;
};

// Grid selector: "auto", "steps:A-B" (powers A..B of rho) or a comma list.
struct GridSpec {
  enum class Kind { automatic, steps, list } kind = Kind::automatic;
  int first = 0;
  int last = 0;
  std::vector<double> values;
};

int parse_int(std::string_view text, const std::string& what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParameterError("bad integer '" + std::string(text) + "' in " + what);
  }
  return value;
}

GridSpec parse_grid(const std::string& text, const std::string& what) {
  GridSpec spec;
  if (text == "auto") return spec;
  if (text.rfind("steps:", 0) == 0) {
    spec.kind = GridSpec::Kind::steps;
    const std::string_view range = std::string_view(text).substr(6);
    const auto dash = range.find('-');
    spec.first = parse_int(range.substr(0, dash), what);
    spec.last = dash == std::string_view::npos ? spec.first
                                               : parse_int(range.substr(dash + 1), what);
    if (spec.first < 0 || spec.last < spec.first) {
      throw ParameterError(what + ": steps need 0 <= A <= B");
    }
    return spec;
  }
  spec.kind = GridSpec::Kind::list;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size() || !std::isfinite(v)) {
      throw ParameterError(what + ": '" + item + "' is not a number");
    }
    spec.values.push_back(v);
  }
  if (spec.values.empty()) throw ParameterError(what + " is empty");
  return spec;
}

std::vector<double> powers(double top, double rho, int first, int last) {
  std::vector<double> out;
  for (int i = first; i <= last; ++i) out.push_back(top * std::pow(rho, i));
  return out;
}

struct FitArgs {
  std::string input;
  std::string out_dir = ".";
  std::string prefix = "sproga";
  std::string header = "detect";
  std::string labels_col;
  std::string mask;
  int k = 10;
  std::string weights = "filtered";
  double phi = 0.5;
  double filter_pct = 0.10;
  double lambda = std::numeric_limits<double>::quiet_NaN();
  double gamma = 0.0;
  std::string lambda_grid = "auto";
  std::string gamma_grid = "auto";
  int gamma_count = 10;
  double rho1 = 0.8;
  double rho2 = 0.8;
  std::string nu = "unit";
  std::string q = "2";
  double epsilon = std::numeric_limits<double>::quiet_NaN();
  double epsilon_rel = 1e-2;
  double eta = 1e-6;
  int maxit = 20000;
  std::string lipschitz = "degree";
  double cluster_tol = 1e-3;
  int report_cell = -1;
  int precision = 6;
  int threads = 1;
  std::uint64_t seed = 0;
};

struct GenerateArgs {
  int setting = 1;
  double scale = 1.0;
  std::uint64_t seed = 1;
  int features = 0;
  std::string out_dir = ".";
  std::string prefix;
  int precision = 6;
};

struct EvalArgs {
  std::string first;
  std::string second;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw ParameterError(message);
}

csv::HeaderMode header_mode(const std::string& text) {
  if (text == "detect") return csv::HeaderMode::detect;
  if (text == "yes") return csv::HeaderMode::present;
  if (text == "no") return csv::HeaderMode::absent;
  throw ParameterError("--header must be detect, yes or no");
}

fs::path output_path(const std::string& dir, const std::string& prefix, const char* what) {
  return fs::path(dir) / (prefix + "_" + what + ".csv");
}

int cmd_fit(const FitArgs& a, bool grid_flags, std::ostream& out) {
  require(a.k >= 1, "--k must be >= 1");
  require(a.precision >= 0 && a.precision <= 17, "--precision must lie in [0, 17]");
  require(a.threads >= 1, "--threads must be >= 1");
  require(a.rho1 > 0.0 && a.rho1 < 1.0, "--rho1 must lie in (0, 1)");
  require(a.rho2 > 0.0 && a.rho2 < 1.0, "--rho2 must lie in (0, 1)");
  require(a.gamma_count >= 1, "--gamma-count must be >= 1");
  require(a.nu == "unit" || a.nu == "adaptive", "--nu must be unit or adaptive");
  const bool single = !std::isnan(a.lambda);
  require(!(single && grid_flags), "--lambda cannot be combined with grid flags");
  require(single || a.gamma == 0.0, "--gamma needs --lambda");

  WeightConfig wc;
  wc.k = a.k;
  wc.scheme = parse_weight_scheme(a.weights);
  wc.phi = a.phi;
  wc.filter_percentile = a.filter_pct;
  SolverConfig base;
  base.q = parse_norm(a.q);
  base.eta = a.eta;
  base.maxit = a.maxit;
  base.lipschitz = parse_lipschitz_rule(a.lipschitz);
  const bool adaptive = a.nu == "adaptive";
  const GridSpec lambda_spec = parse_grid(a.lambda_grid, "--lambda-grid");
  const GridSpec gamma_spec = parse_grid(a.gamma_grid, "--gamma-grid");

  csv::ReadOptions ro;
  ro.header = header_mode(a.header);
  if (!a.labels_col.empty()) ro.label_column = a.labels_col;
  const csv::Dataset data = csv::read_samples(a.input, ro);
  const DataMatrix& X = data.X;
  std::optional<std::vector<bool>> mask;
  if (!a.mask.empty()) {
    mask = csv::read_mask(a.mask);
    if (mask->size() != static_cast<std::size_t>(X.features())) {
      throw DimensionError("mask has " + std::to_string(mask->size()) + " entries, data has " +
                           std::to_string(X.features()) + " features");
    }
  }
  base.epsilon = std::isnan(a.epsilon) ? relative_epsilon(X, a.epsilon_rel) : a.epsilon;

  const EdgeGraph G = build_graph(X, wc);
  const LambdaRange range = lambda_range(X, G);
  FitOptions options;
  options.record_trace = false;
  options.cluster_tol = a.cluster_tol;

  std::vector<PathPoint> path;
  if (single) {
    SolverConfig cfg = base;
    cfg.lambda = a.lambda;
    cfg.gamma = a.gamma;
    if (adaptive) cfg.nu = presolve_feature_weights(X, G, cfg, options);
    path = path_sweep(X, G, cfg, {a.lambda}, {a.gamma}, options);
  } else {
    std::vector<double> lambdas;
    switch (lambda_spec.kind) {
      case GridSpec::Kind::automatic:
        require(!range.degenerate, "all edges join identical samples; give --lambda-grid values");
        lambdas = geometric_grid(range.lambda_max, range.lambda_min, a.rho1);
        break;
      case GridSpec::Kind::steps:
        require(!range.degenerate, "all edges join identical samples; give --lambda-grid values");
        lambdas = powers(range.lambda_max, a.rho1, lambda_spec.first, lambda_spec.last);
        break;
      case GridSpec::Kind::list:
        lambdas = lambda_spec.values;
        break;
    }
    if (adaptive) {
      std::vector<double> fractions;
      switch (gamma_spec.kind) {
        case GridSpec::Kind::automatic:
          fractions = powers(1.0, a.rho2, 1, a.gamma_count);
          break;
        case GridSpec::Kind::steps:
          fractions = powers(1.0, a.rho2, gamma_spec.first, gamma_spec.last);
          break;
        case GridSpec::Kind::list:
          fractions = gamma_spec.values;
          break;
      }
      path = adaptive_path_sweep(X, G, base, lambdas, fractions, options);
    } else {
      const double top = gamma_max(X, Vector::Ones(X.features()));
      std::vector<double> gammas;
      switch (gamma_spec.kind) {
        case GridSpec::Kind::automatic:
          gammas = powers(top, a.rho2, 0, a.gamma_count - 1);
          gammas.push_back(0.0);
          break;
        case GridSpec::Kind::steps:
          gammas = powers(top, a.rho2, gamma_spec.first, gamma_spec.last);
          break;
        case GridSpec::Kind::list:
          gammas = gamma_spec.values;
          break;
      }
      path = path_sweep(X, G, base, lambdas, gammas, options);
    }
  }

  for (const PathPoint& pt : path) {
    if (pt.diverged) {
      throw SweepDiverged("lambda=" + std::to_string(pt.lambda) + ": " + pt.error);
    }
  }
  for (const PathPoint& pt : path) {
    if (!pt.result) throw ParameterError("fit failed at lambda=" + std::to_string(pt.lambda) +
                                         ": " + pt.error);
  }

  struct Scores {
    double ari = 0.0;
    double nmi = 0.0;
    FeatureAccuracy features;
  };
  std::vector<Scores> scores;
  if (data.labels) {
    for (const PathPoint& pt : path) {
      Scores s;
      s.ari = adjusted_rand_index(pt.result->labels, *data.labels);
      s.nmi = normalized_mutual_info(pt.result->labels, *data.labels).value;
      if (mask) s.features = feature_pd_fdr(pt.result->selected_features, *mask);
      scores.push_back(s);
    }
  }

  std::size_t reported = path.size() - 1;
  if (a.report_cell >= 0) {
    require(static_cast<std::size_t>(a.report_cell) < path.size(),
            "--report-cell is past the last cell (" + std::to_string(path.size()) + " cells)");
    reported = static_cast<std::size_t>(a.report_cell);
  } else if (!scores.empty()) {
    reported = 0;
    for (std::size_t c = 1; c < scores.size(); ++c) {
      if (scores[c].ari > scores[reported].ari) reported = c;
    }
  }

  Manifest manifest("fit");
  manifest.add("input", a.input);
  manifest.add("header", a.header);
  manifest.add("labels_col", a.labels_col.empty() ? "none" : a.labels_col);
  manifest.add("mask", a.mask.empty() ? "none" : a.mask);
  manifest.add("k", a.k);
  manifest.add("weights", a.weights);
  manifest.add("phi", a.phi);
  manifest.add("filter_pct", a.filter_pct);
  if (single) {
    manifest.add("lambda", a.lambda);
    manifest.add("gamma", a.gamma);
  } else {
    manifest.add("lambda_grid", a.lambda_grid);
    manifest.add("gamma_grid", a.gamma_grid);
    manifest.add("gamma_count", a.gamma_count);
    manifest.add("rho1", a.rho1);
    manifest.add("rho2", a.rho2);
  }
  manifest.add("nu", a.nu);
  manifest.add("q", a.q);
  manifest.add("epsilon", base.epsilon);
  manifest.add("eta", a.eta);
  manifest.add("maxit", a.maxit);
  manifest.add("lipschitz", a.lipschitz);
  manifest.add("cluster_tol", a.cluster_tol);
  manifest.add("report_cell", reported);
  manifest.add("precision", a.precision);
  manifest.add("threads", a.threads);
  manifest.add("seed", a.seed);
  const std::string header_line = manifest.line();
  const int prec = a.precision;
  const auto fmt = [prec](double v) { return csv::format(v, prec); };

  fs::create_directories(a.out_dir);
  const ClusterResult& best = *path[reported].result;
  csv::AtomicFile assignments(output_path(a.out_dir, a.prefix, "assignments"));
  assignments.stream() << header_line << "\nsample_id,cluster\n";
  for (std::size_t i = 0; i < best.labels.size(); ++i) {
    assignments.stream() << i << ',' << best.labels[i] << '\n';
  }

  csv::AtomicFile features(output_path(a.out_dir, a.prefix, "features"));
  features.stream() << header_line << "\nfeature,l2norm,selected\n";
  for (Index k = 0; k < X.features(); ++k) {
    features.stream() << data.feature_names[static_cast<std::size_t>(k)] << ','
                      << fmt(best.centers.values().row(k).norm()) << ','
                      << (best.selected_features[static_cast<std::size_t>(k)] ? 1 : 0) << '\n';
  }

  csv::AtomicFile summary(output_path(a.out_dir, a.prefix, "path"));
  summary.stream() << header_line
                   << "\nlambda,gamma,num_clusters,objective,iterations,converged\n";
  for (const PathPoint& pt : path) {
    SolverConfig cfg = base;
    cfg.lambda = pt.lambda;
    cfg.gamma = pt.gamma;
    cfg.nu = pt.nu;
    const ClusterResult& r = *pt.result;
    summary.stream() << fmt(pt.lambda) << ',' << fmt(pt.gamma) << ',' << r.num_clusters << ','
                     << fmt(objective_raw(X, r.centers.values(), G, cfg)) << ','
                     << r.iterations << ',' << (r.converged ? 1 : 0) << '\n';
  }

  std::optional<csv::AtomicFile> metrics;
  if (!scores.empty()) {
    metrics.emplace(output_path(a.out_dir, a.prefix, "metrics"));
    metrics->stream() << header_line << "\nlambda,gamma,ari,nmi" << (mask ? ",pd,fdr" : "")
                      << '\n';
    for (std::size_t c = 0; c < path.size(); ++c) {
      metrics->stream() << fmt(path[c].lambda) << ',' << fmt(path[c].gamma) << ','
                        << fmt(scores[c].ari) << ',' << fmt(scores[c].nmi);
      if (mask) {
        metrics->stream() << ',' << fmt(scores[c].features.pd) << ','
                          << fmt(scores[c].features.fdr);
      }
      metrics->stream() << '\n';
    }
  }

  assignments.commit();
  features.commit();
  summary.commit();
  if (metrics) metrics->commit();

  out << "cells=" << path.size() << " reported=" << reported << " lambda=" << fmt(path[reported].lambda)
      << " gamma=" << fmt(path[reported].gamma) << " clusters=" << best.num_clusters;
  if (!scores.empty()) {
    out << " ari=" << csv::format(scores[reported].ari, 6)
        << " nmi=" << csv::format(scores[reported].nmi, 6);
  }
  out << '\n';
  return kOk;
}

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  require(a.setting >= 1 && a.setting <= 4, "--setting must be 1, 2, 3 or 4");
  require(a.scale > 0.0, "--scale must be > 0");
  require(a.features >= 0, "--features must be >= 0");
  require(a.precision >= 0 && a.precision <= 17, "--precision must lie in [0, 17]");
  const SyntheticData data = [&] {
    if (a.setting == 3) {
      HalfMoonSpec spec = setting3_spec(a.seed, a.scale);
      if (a.features > 0) spec.p = a.features;
      return gen_half_moons(spec);
    }
    GaussianCircleSpec spec = a.setting == 1   ? setting1_spec(a.seed, a.scale)
                              : a.setting == 2 ? setting2_spec(a.seed, a.scale)
                                               : setting4_spec(a.seed, a.scale);
    if (a.features > 0) spec.p = a.features;
    return gen_gaussian_circle(spec);
  }();

  Manifest manifest("generate");
  manifest.add("setting", a.setting);
  manifest.add("scale", a.scale);
  manifest.add("seed", a.seed);
  manifest.add("features", data.X.features());
  manifest.add("precision", a.precision);
  const std::string header_line = manifest.line();
  const std::string prefix = a.prefix.empty() ? "setting" + std::to_string(a.setting) : a.prefix;
  fs::create_directories(a.out_dir);

  const Matrix& values = data.X.values();
  csv::AtomicFile table(output_path(a.out_dir, prefix, "data"));
  std::ostream& t = table.stream();
  t << header_line << '\n';
  for (Index k = 0; k < values.rows(); ++k) t << 'f' << k << ',';
  t << "label\n";
  for (Index i = 0; i < values.cols(); ++i) {
    for (Index k = 0; k < values.rows(); ++k) t << csv::format(values(k, i), a.precision) << ',';
    t << data.labels[static_cast<std::size_t>(i)] << '\n';
  }

  csv::AtomicFile truth(output_path(a.out_dir, prefix, "truth"));
  truth.stream() << header_line << "\nsample_id,cluster\n";
  for (std::size_t i = 0; i < data.labels.size(); ++i) {
    truth.stream() << i << ',' << data.labels[i] << '\n';
  }

  csv::AtomicFile mask(output_path(a.out_dir, prefix, "mask"));
  mask.stream() << header_line << "\nfeature,informative\n";
  for (std::size_t k = 0; k < data.informative.size(); ++k) {
    mask.stream() << 'f' << k << ',' << (data.informative[k] ? 1 : 0) << '\n';
  }

  table.commit();
  truth.commit();
  mask.commit();
  out << "samples=" << values.cols() << " features=" << values.rows() << '\n';
  return kOk;
}

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const std::vector<int> first = csv::read_labels(a.first);
  const std::vector<int> second = csv::read_labels(a.second);
  if (first.size() != second.size()) {
    throw DataError("label files have " + std::to_string(first.size()) + " and " +
                    std::to_string(second.size()) + " entries");
  }
  const double ari = adjusted_rand_index(first, second);
  const double nmi = normalized_mutual_info(first, second).value;
  out << "ari=" << csv::format(ari, 6) << " nmi=" << csv::format(nmi, 6) << '\n';
  return kOk;
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  s = s.substr(first, last - first + 1);
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) {
    s = s.substr(1, s.size() - 2);
  }
  return s;
}

// Reads key=value lines into options of `app` that the command line left
// unset. Blank lines, # and ; comments and [section] headers are skipped.
void apply_config(CLI::App& app, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::FileError::Missing(path);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';' || line[0] == '[') continue;
    const auto eq = line.find('=');
    const std::string where = path + ":" + std::to_string(number);
    if (eq == std::string::npos) throw CLI::ConfigError(where + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    CLI::Option* opt = app.get_option_no_throw("--" + key);
    if (opt == nullptr || key == "config") {
      throw CLI::ConfigError(where + ": unknown key '" + key + "'");
    }
    if (opt->count() > 0) continue;
    opt->add_result(trim(line.substr(eq + 1)));
    opt->run_callback();
  }
}

int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const NumericalDivergence& e) {
    err << "error: " << e.what() << '\n';
    return kDivergence;
  } catch (const SweepDiverged& e) {
    err << "error: " << e.what() << '\n';
    return kDivergence;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparse convex clustering with a smoothing proximal gradient solver", "sproga"};
  app.set_version_flag("--version", SPROGA_VERSION);
  app.require_subcommand(1);

  FitArgs fa;
  fa.threads = default_threads();
  CLI::App* fit = app.add_subcommand("fit", "cluster a samples-as-rows CSV file");
  std::string config;
  fit->add_option("--config", config, "key=value file; command-line flags take precedence");
  fit->add_option("input", fa.input, "data CSV, one sample per row")->required();
  fit->add_option("--out-dir", fa.out_dir, "directory for the output files");
  fit->add_option("--prefix", fa.prefix, "output file name prefix");
  fit->add_option("--header", fa.header, "detect, yes or no");
  fit->add_option("--labels-col", fa.labels_col, "truth label column (name or 0-based index)");
  fit->add_option("--mask", fa.mask, "informative-feature mask CSV, adds pd and fdr");
  fit->add_option("--k", fa.k, "neighbors per sample");
  fit->add_option("--weights", fa.weights, "gaussian or filtered");
  fit->add_option("--phi", fa.phi, "gaussian kernel decay");
  fit->add_option("--filter-pct", fa.filter_pct, "fraction of longest edges removed");
  auto* lambda_opt = fit->add_option("--lambda", fa.lambda, "single fit at this lambda");
  fit->add_option("--gamma", fa.gamma, "gamma of the single fit")->needs(lambda_opt);
  auto* lg = fit->add_option("--lambda-grid", fa.lambda_grid, "auto, steps:A-B or a comma list");
  auto* gg = fit->add_option("--gamma-grid", fa.gamma_grid, "auto, steps:A-B or a comma list");
  auto* gc = fit->add_option("--gamma-count", fa.gamma_count, "gamma values of the auto grid");
  auto* r1 = fit->add_option("--rho1", fa.rho1, "lambda grid ratio");
  auto* r2 = fit->add_option("--rho2", fa.rho2, "gamma grid ratio");
  fit->add_option("--nu", fa.nu, "feature weights: unit or adaptive");
  fit->add_option("--q", fa.q, "fusion norm: 1, 2 or inf");
  fit->add_option("--epsilon", fa.epsilon, "absolute smoothing budget");
  fit->add_option("--epsilon-rel", fa.epsilon_rel, "smoothing budget as a fraction of f(0)");
  fit->add_option("--eta", fa.eta, "relative-change stopping tolerance");
  fit->add_option("--maxit", fa.maxit, "iteration cap per cell");
  fit->add_option("--lipschitz", fa.lipschitz, "degree or total");
  fit->add_option("--cluster-tol", fa.cluster_tol, "fusion tolerance relative to edge length");
  fit->add_option("--report-cell", fa.report_cell, "cell written to assignments and features");
  fit->add_option("--precision", fa.precision, "decimals in floating output");
  fit->add_option("--threads", fa.threads, "worker threads");
  fit->add_option("--seed", fa.seed, "recorded in the manifest");

  GenerateArgs ga;
  CLI::App* gen = app.add_subcommand("generate", "write a synthetic data set");
  gen->add_option("--setting", ga.setting, "1, 2, 3 or 4")->required();
  gen->add_option("--scale", ga.scale, "sample-size multiplier");
  gen->add_option("--seed", ga.seed, "random seed");
  gen->add_option("--features", ga.features, "override the total number of features");
  gen->add_option("--out-dir", ga.out_dir, "directory for the output files");
  gen->add_option("--prefix", ga.prefix, "output file name prefix (default settingN)");
  gen->add_option("--precision", ga.precision, "decimals in the data file");

  EvalArgs ea;
  CLI::App* ev = app.add_subcommand("eval", "compare two label files");
  ev->add_option("first", ea.first, "label CSV")->required();
  ev->add_option("second", ea.second, "label CSV")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (!config.empty()) apply_config(*fit, config);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << SPROGA_VERSION << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    // Help for a subcommand is reported through CallForHelp above; anything
    // else here is a usage problem, including unreadable config files.
    if (e.get_exit_code() == 0) {
      out << (fit->parsed() ? fit->help() : gen->parsed() ? gen->help() : app.help());
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  if (fit->parsed()) {
    const bool grid_flags = lg->count() + gg->count() + gc->count() + r1->count() + r2->count() > 0;
    return guarded([&] { return cmd_fit(fa, grid_flags, out); }, err);
  }
  if (gen->parsed()) return guarded([&] { return cmd_generate(ga, out); }, err);
  return guarded([&] { return cmd_eval(ea, out); }, err);
}

}  // namespace sproga::cli
