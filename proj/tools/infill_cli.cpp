// Command-line toolkit for evaluating, improving, and extending experimental
// designs with the intensified Morris-Mitchell criterion and desirability-
// based infill suggestions.

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "infill/infill.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace infill;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitNumerical = 4;

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::string cell;
  std::stringstream ss(text);
  while (std::getline(ss, cell, ',')) {
    if (cell.empty()) continue;
    try {
      out.push_back(std::stod(cell));
    } catch (const std::exception&) {
      throw invalid_argument_error("cannot parse number list entry '" + cell + "'");
    }
  }
  if (out.empty()) throw invalid_argument_error("empty number list: '" + text + "'");
  return out;
}

std::string format_group_array(const std::vector<double>& values, int decimals) {
  std::string out = "[";
  const std::size_t limit = 12;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values.size() > limit && i == 6) {
      out += " ...";
      i = values.size() - 4;
      continue;
    }
    out += (i ? " " : "") + fmt_rounded_trim(values[i], decimals);
  }
  return out + "]";
}

std::string format_count_array(const std::vector<std::int64_t>& values) {
  std::string out = "[";
  const std::size_t limit = 12;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values.size() > limit && i == 6) {
      out += " ...";
      i = values.size() - 4;
      continue;
    }
    out += (i ? " " : "") + std::to_string(values[i]);
  }
  return out + "]";
}

// --- run configuration -------------------------------------------------------

json default_config() {
  return json{
      {"data",
       {{"features_csv", ""},
        {"targets_csv", ""},
        {"synthetic",
         {{"n", 120}, {"k", 3}, {"n_clusters", 4}, {"spread", 0.03}, {"noise", 0.0}, {"seed", 42}}}}},
      {"objectives",
       {{"first", {{"column", "z1"}, {"goal", "max"}, {"low", 0.0}, {"high", 1.1}, {"scale", 5.0}}},
        {"second",
         {{"column", "z2"}, {"goal", "max"}, {"low", 0.0}, {"high", 1.1}, {"scale", 5.0}}}}},
      {"mm",
       {{"enabled", true}, {"lo_frac", 0.001}, {"hi_frac", 0.025}, {"scale", 5.0}, {"q", 2.0},
        {"p", 2}}},
      {"surrogate",
       {{"kind", "forest"},
        {"forest",
         {{"n_estimators", 100}, {"max_depth", 0}, {"min_samples_leaf", 1}, {"bootstrap", true},
          {"seed", 0}}},
        {"gp", {{"signal_variance", 1.0}, {"noise_jitter", 1e-8}}}}},
      {"optimizer", {{"budget", 2000}, {"seed", 1}, {"restarts", 1}}},
      {"diagnostics", {{"feature_i", 0}, {"feature_j", 1}, {"bins", 20}}},
      {"output_dir", "out"}};
}

json parse_override_value(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception&) {
    return json(text);  // plain string
  }
}

// Applies dot-path flag overrides (e.g. --optimizer.budget 3000) onto the
// config document. Every path must name an existing leaf.
void apply_overrides(json& cfg, const std::vector<std::string>& extras) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < extras.size(); ++i) {
    std::string key = extras[i];
    if (key.rfind("--", 0) != 0)
      throw invalid_argument_error("unexpected argument '" + key + "' (expected --path value)");
    key = key.substr(2);
    std::string value;
    const std::size_t eq = key.find('=');
    if (eq != std::string::npos) {
      value = key.substr(eq + 1);
      key = key.substr(0, eq);
    } else {
      if (i + 1 >= extras.size())
        throw invalid_argument_error("missing value for override --" + key);
      value = extras[++i];
    }
    pairs.emplace_back(key, value);
  }
  for (auto& [key, value] : pairs) {
    std::string path = "/" + key;
    for (char& c : path)
      if (c == '.') c = '/';
    const json::json_pointer ptr(path);
    if (!cfg.contains(ptr))
      throw invalid_argument_error("unknown config key in override: --" + key);
    cfg[ptr] = parse_override_value(value);
  }
}

json load_run_config(const std::string& config_path, const std::vector<std::string>& extras) {
  json cfg = default_config();
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw invalid_argument_error("cannot open config file: " + config_path);
    json user;
    try {
      user = json::parse(in);
    } catch (const json::exception& e) {
      throw invalid_argument_error(std::string("config JSON parse error: ") + e.what());
    }
    cfg.merge_patch(user);
  }
  apply_overrides(cfg, extras);
  return cfg;
}

SyntheticDataset load_dataset(const json& cfg) {
  const json& data = cfg.at("data");
  const std::string features = data.at("features_csv").get<std::string>();
  const std::string targets = data.at("targets_csv").get<std::string>();
  if (!features.empty() || !targets.empty()) {
    if (features.empty() || targets.empty())
      throw invalid_argument_error("both data.features_csv and data.targets_csv are required");
    SamplingPlan X = load_plan_csv(features);
    CsvTable z = read_csv(targets);
    if (z.values.rows() != X.n())
      throw invalid_data_error("features and targets row counts differ");
    if (!z.values.allFinite()) throw invalid_data_error("targets contain non-finite values");
    return SyntheticDataset{std::move(X), std::move(z.values), std::move(z.header)};
  }
  const json& syn = data.at("synthetic");
  const SamplingPlan X = generate_clustered_design(
      syn.at("n").get<int>(), syn.at("k").get<int>(), syn.at("n_clusters").get<int>(),
      syn.at("spread").get<double>(), syn.at("seed").get<std::uint64_t>());
  return generate_synthetic_targets(X, syn.at("seed").get<std::uint64_t>(),
                                    syn.at("noise").get<double>());
}

DesirabilitySpec spec_from_json(const json& obj) {
  const std::string goal = obj.value("goal", "max");
  const double low = obj.at("low").get<double>();
  const double high = obj.at("high").get<double>();
  const double scale = obj.value("scale", 1.0);
  if (goal == "max") return max_spec(low, high, scale);
  if (goal == "min") return min_spec(low, high, scale);
  if (goal == "target")
    return target_spec(low, obj.at("target").get<double>(), high, obj.value("scale_left", scale),
                       obj.value("scale_right", scale));
  throw invalid_argument_error("unknown desirability goal: " + goal);
}

int column_index(const std::vector<std::string>& names, const std::string& wanted) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == wanted) return static_cast<int>(i);
  throw invalid_argument_error("target column '" + wanted + "' not found in dataset");
}

ForestConfig forest_config_from_json(const json& obj) {
  ForestConfig cfg;
  cfg.n_estimators = obj.at("n_estimators").get<int>();
  const int depth = obj.at("max_depth").get<int>();
  if (depth > 0) cfg.max_depth = depth;  // 0 means grow until pure
  cfg.min_samples_leaf = obj.at("min_samples_leaf").get<int>();
  cfg.bootstrap = obj.at("bootstrap").get<bool>();
  cfg.seed = obj.at("seed").get<std::uint64_t>();
  return cfg;
}

GpConfig gp_config_from_json(const json& obj) {
  GpConfig cfg;
  cfg.signal_variance = obj.at("signal_variance").get<double>();
  cfg.noise_jitter = obj.at("noise_jitter").get<double>();
  if (obj.contains("length_scale_grid"))
    cfg.length_scale_grid = obj.at("length_scale_grid").get<std::vector<double>>();
  return cfg;
}

CaseStudyConfig case_config_from_json(const json& cfg, const SyntheticDataset& data) {
  CaseStudyConfig out;
  const json& objectives = cfg.at("objectives");
  out.objective_a = column_index(data.target_names,
                                 objectives.at("first").at("column").get<std::string>());
  out.objective_b = column_index(data.target_names,
                                 objectives.at("second").at("column").get<std::string>());
  out.spec_a = spec_from_json(objectives.at("first"));
  out.spec_b = spec_from_json(objectives.at("second"));

  const json& mm = cfg.at("mm");
  out.mm_lo_frac = mm.at("lo_frac").get<double>();
  out.mm_hi_frac = mm.at("hi_frac").get<double>();
  out.mm_scale = mm.at("scale").get<double>();
  out.q = mm.at("q").get<double>();
  out.norm_p = mm.at("p").get<int>();

  const json& surrogate = cfg.at("surrogate");
  const std::string kind = surrogate.at("kind").get<std::string>();
  if (kind == "forest")
    out.surrogate_kind = SurrogateKind::forest;
  else if (kind == "gp")
    out.surrogate_kind = SurrogateKind::gp;
  else
    throw invalid_argument_error("unknown surrogate kind: " + kind);
  out.forest = forest_config_from_json(surrogate.at("forest"));
  out.gp = gp_config_from_json(surrogate.at("gp"));

  const json& optimizer = cfg.at("optimizer");
  out.budget = optimizer.at("budget").get<int>();
  out.seed = optimizer.at("seed").get<std::uint64_t>();
  out.restarts = optimizer.at("restarts").get<int>();
  return out;
}

// --- design/data sources for the study commands ------------------------------

struct DesignSourceOptions {
  std::string features_csv;
  std::string clustered;  // "n,k,n_clusters,spread"
  std::string lhs;        // "n,k"
  int optimize_iterations = 0;
  std::uint64_t seed = 1;
};

void add_design_source_options(CLI::App* cmd, DesignSourceOptions& opts) {
  cmd->add_option("--features", opts.features_csv, "Features CSV (normalized to [0,1])");
  cmd->add_option("--clustered", opts.clustered,
                  "Synthetic clustered design as n,k,n_clusters,spread");
  cmd->add_option("--lhs", opts.lhs, "Latin hypercube design as n,k");
  cmd->add_option("--optimize-iterations", opts.optimize_iterations,
                  "Optimize the LHS with this many swap iterations");
  cmd->add_option("--design-seed", opts.seed, "Seed for synthetic designs");
}

SamplingPlan resolve_design(const DesignSourceOptions& opts, double q, int p) {
  const int sources = (!opts.features_csv.empty()) + (!opts.clustered.empty()) +
                      (!opts.lhs.empty());
  if (sources != 1)
    throw invalid_argument_error(
        "exactly one of --features, --clustered, or --lhs must be given");
  if (!opts.features_csv.empty()) return load_plan_csv(opts.features_csv);
  if (!opts.clustered.empty()) {
    const auto v = parse_number_list(opts.clustered);
    if (v.size() != 4)
      throw invalid_argument_error("--clustered expects n,k,n_clusters,spread");
    return generate_clustered_design(static_cast<int>(v[0]), static_cast<int>(v[1]),
                                     static_cast<int>(v[2]), v[3], opts.seed);
  }
  const auto v = parse_number_list(opts.lhs);
  if (v.size() != 2) throw invalid_argument_error("--lhs expects n,k");
  if (opts.optimize_iterations > 0)
    return optimize_lhs(static_cast<int>(v[0]), static_cast<int>(v[1]), q, p,
                        opts.optimize_iterations, opts.seed);
  return generate_lhs(static_cast<int>(v[0]), static_cast<int>(v[1]), opts.seed);
}

// --- subcommands --------------------------------------------------------------

int cmd_eval_design(const std::string& csv_path, double q, int p, const std::string& out_dir) {
  const SamplingPlan plan = load_plan_csv(csv_path);
  const MmResult intensive = mmphi_intensive(plan, q, p);
  const MmResult full{phi_from_profile(intensive.profile), intensive.profile};

  std::cout << "n: " << plan.n() << "  k: " << plan.k()
            << "  M: " << intensive.profile.pair_count << "\n";
  std::cout << "Quality (Phi_q): " << fmt_shortest(full.quality) << "\n";
  std::cout << "Quality (Phi_q_intensive): " << fmt_shortest(intensive.quality) << "\n";
  std::cout << "mmphi_base (known design): " << fmt_shortest(intensive.quality) << "\n";
  std::cout << "Multiplicities (J): " << format_count_array(intensive.profile.J) << "\n";
  std::cout << "Distinct Distances (d): " << format_group_array(intensive.profile.d, 8) << "\n";

  fs::create_directories(out_dir);
  const fs::path summary = fs::path(out_dir) / "eval-design_summary.json";
  write_text(summary.string(), eval_design_json(full, intensive).dump(2) + "\n");
  std::cout << "summary written to " << summary.string() << "\n";
  return kExitOk;
}

int cmd_suggest(const std::string& config_path, const std::vector<std::string>& extras) {
  const json cfg = load_run_config(config_path, extras);
  const SyntheticDataset data = load_dataset(cfg);
  const CaseStudyConfig ccfg = case_config_from_json(cfg, data);
  const std::string out_dir = cfg.at("output_dir").get<std::string>();
  const json& diag = cfg.at("diagnostics");
  const int fi = diag.at("feature_i").get<int>();
  const int fj = diag.at("feature_j").get<int>();
  const std::vector<std::string> names{
      data.target_names[static_cast<std::size_t>(ccfg.objective_a)],
      data.target_names[static_cast<std::size_t>(ccfg.objective_b)]};

  ArtifactList artifacts;
  if (cfg.at("mm").at("enabled").get<bool>()) {
    const CaseStudyResult result = run_case_study(data, ccfg);
    std::cout << "mmphi_base (known design): " << fmt_shortest(result.phi_base) << "\n";
    std::cout << "mmphi_min: " << fmt_shortest(result.mm_low)
              << ", mmphi_max: " << fmt_shortest(result.mm_high) << "\n\n";
    std::cout << suggestion_console_text(result.without_mm, names) << "\n";
    std::cout << suggestion_console_text(result.with_mm, {names[0], names[1], "MM"});
    artifacts = write_case_study_artifacts(data, result, out_dir, "suggest", fi, fj);
  } else {
    const InfillSuggestion suggestion = run_plain_pipeline(data, ccfg);
    std::cout << suggestion_console_text(suggestion, names);
    artifacts = write_plain_artifacts(data, suggestion, names, out_dir, "suggest", fi, fj);
  }
  std::cout << "\nartifacts in " << out_dir << ": " << artifacts.svg_files.size() << " SVG, "
            << artifacts.csv_files.size() << " CSV, " << artifacts.json_files.size()
            << " JSON\n";
  return kExitOk;
}

int cmd_scaling(int k, const std::string& n_values, double q, int p, std::uint64_t seed,
                const std::string& out_dir) {
  std::vector<int> sizes;
  for (const double v : parse_number_list(n_values)) sizes.push_back(static_cast<int>(v));
  const auto rows = mmphi_vs_n_study(k, sizes, q, p, seed);
  std::cout << "n,phi,phi_intensive,M\n";
  for (const auto& row : rows)
    std::cout << row.n << "," << fmt_shortest(row.phi) << "," << fmt_shortest(row.phi_intensive)
              << "," << row.pair_count << "\n";
  write_scaling_artifacts(rows, out_dir);
  std::cout << "artifacts in " << out_dir << "\n";
  return kExitOk;
}

int cmd_point_addition(const DesignSourceOptions& source, int n_added, const std::string& mode,
                       double q, int p, std::uint64_t seed, const std::string& out_dir) {
  AdditionMode addition_mode;
  if (mode == "batch")
    addition_mode = AdditionMode::batch;
  else if (mode == "single-injection")
    addition_mode = AdditionMode::single_injection;
  else
    throw invalid_argument_error("mode must be 'batch' or 'single-injection'");

  const SamplingPlan plan = resolve_design(source, q, p);
  const auto rows = point_addition_study(plan, n_added, addition_mode, seed, q, p);
  std::cout << "mmphi_base (known design): " << fmt_shortest(rows.front().phi_intensive) << "\n";
  std::cout << "after " << n_added
            << " added points: " << fmt_shortest(rows.back().phi_intensive) << "\n";
  write_point_addition_artifacts(rows, out_dir);
  std::cout << "artifacts in " << out_dir << "\n";
  return kExitOk;
}

int cmd_noise_sweep(const DesignSourceOptions& source, const std::string& sigmas, int reps,
                    double q, int p, std::uint64_t seed, const std::string& out_dir) {
  const SamplingPlan plan = resolve_design(source, q, p);
  const NoiseSweepResult result =
      noise_sigma_sweep(plan, parse_number_list(sigmas), reps, seed, q, p);
  std::cout << "sigma,mean_improvement,std_improvement\n";
  for (const auto& row : result.rows)
    std::cout << fmt_shortest(row.sigma) << "," << fmt_shortest(row.mean_improvement) << ","
              << fmt_shortest(row.std_improvement) << "\n";
  std::cout << "uniform random reference improvement: "
            << fmt_shortest(result.uniform_mean_improvement) << "\n";
  write_noise_sweep_artifacts(result, out_dir);
  std::cout << "artifacts in " << out_dir << "\n";
  return kExitOk;
}

int cmd_opt_lhs(int n, int k, double q, int p, int iterations, std::uint64_t seed,
                const std::string& out_dir) {
  const SamplingPlan start = generate_lhs(n, k, seed);
  const SamplingPlan tuned = optimize_lhs(n, k, q, p, iterations, seed);
  std::cout << "initial Phi*: " << fmt_shortest(mmphi_intensive(start, q, p).quality) << "\n";
  std::cout << "optimized Phi*: " << fmt_shortest(mmphi_intensive(tuned, q, p).quality) << "\n";
  write_design_artifacts(tuned, out_dir);
  std::cout << "artifacts in " << out_dir << "\n";
  return kExitOk;
}

int cmd_fit_cv(const DesignSourceOptions& source, const std::string& targets_csv, int folds,
               const std::string& models_list, std::uint64_t seed, std::uint64_t targets_seed,
               const std::string& out_dir) {
  SamplingPlan plan = resolve_design(source, 2.0, 2);
  Matrix targets;
  std::vector<std::string> target_names;
  if (!targets_csv.empty()) {
    CsvTable z = read_csv(targets_csv);
    if (z.values.rows() != plan.n())
      throw invalid_data_error("features and targets row counts differ");
    targets = std::move(z.values);
    target_names = std::move(z.header);
  } else {
    const SyntheticDataset data = generate_synthetic_targets(plan, targets_seed);
    targets = data.Z;
    target_names = data.target_names;
  }

  std::vector<ModelSpec> models;
  std::stringstream ss(models_list);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name == "forest")
      models.push_back(forest_model());
    else if (name == "gp")
      models.push_back(gp_model());
    else
      throw invalid_argument_error("unknown model '" + name + "' (use forest,gp)");
  }
  if (models.empty()) throw invalid_argument_error("at least one model is required");

  const CvReport report = cross_validate(plan, targets, folds, models, seed, target_names);
  std::cout << report.raw_text() << "\n" << report.to_table();
  write_cv_artifacts(report, out_dir);
  std::cout << "artifacts in " << out_dir << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Space-filling evaluation and desirability-based infill suggestion toolkit"};
  app.require_subcommand(1);

  // eval-design
  auto* eval_cmd = app.add_subcommand("eval-design", "Evaluate Phi and Phi* of a design CSV");
  std::string eval_csv;
  double eval_q = 2.0;
  int eval_p = 2;
  std::string eval_out = "out";
  eval_cmd->add_option("csv", eval_csv, "Features CSV")->required();
  eval_cmd->add_option("--q", eval_q, "Criterion exponent q");
  eval_cmd->add_option("--p", eval_p, "Distance norm order (1 or 2)");
  eval_cmd->add_option("--out-dir", eval_out, "Output directory");

  // suggest
  auto* suggest_cmd =
      app.add_subcommand("suggest", "Propose the next infill point from a JSON run config");
  std::string suggest_config;
  suggest_cmd->add_option("--config", suggest_config, "Run config JSON file");
  suggest_cmd->allow_extras();

  // scaling
  auto* scaling_cmd = app.add_subcommand("scaling", "Phi and Phi* versus design size for LHS");
  int scaling_k = 2;
  std::string scaling_n = "10,25,50,100,200";
  double scaling_q = 2.0;
  int scaling_p = 2;
  std::uint64_t scaling_seed = 1;
  std::string scaling_out = "out";
  scaling_cmd->add_option("--k", scaling_k, "Dimension");
  scaling_cmd->add_option("--n-values", scaling_n, "Comma-separated design sizes");
  scaling_cmd->add_option("--q", scaling_q, "Criterion exponent q");
  scaling_cmd->add_option("--p", scaling_p, "Distance norm order");
  scaling_cmd->add_option("--seed", scaling_seed, "Seed");
  scaling_cmd->add_option("--out-dir", scaling_out, "Output directory");

  // point-addition
  auto* addition_cmd =
      app.add_subcommand("point-addition", "Criterion trace when adding random points");
  DesignSourceOptions addition_source;
  add_design_source_options(addition_cmd, addition_source);
  int addition_n = 10;
  std::string addition_mode = "batch";
  double addition_q = 2.0;
  int addition_p = 2;
  std::uint64_t addition_seed = 1;
  std::string addition_out = "out";
  addition_cmd->add_option("--n-added", addition_n, "Number of points to add");
  addition_cmd->add_option("--mode", addition_mode, "batch or single-injection");
  addition_cmd->add_option("--q", addition_q, "Criterion exponent q");
  addition_cmd->add_option("--p", addition_p, "Distance norm order");
  addition_cmd->add_option("--seed", addition_seed, "Seed for the added points");
  addition_cmd->add_option("--out-dir", addition_out, "Output directory");

  // noise-sweep
  auto* noise_cmd =
      app.add_subcommand("noise-sweep", "MM improvement of perturbed existing points vs sigma");
  DesignSourceOptions noise_source;
  add_design_source_options(noise_cmd, noise_source);
  std::string noise_sigmas = "0.01,0.05,0.1,0.3";
  int noise_reps = 50;
  double noise_q = 2.0;
  int noise_p = 2;
  std::uint64_t noise_seed = 1;
  std::string noise_out = "out";
  noise_cmd->add_option("--sigmas", noise_sigmas, "Comma-separated sigma values");
  noise_cmd->add_option("--reps", noise_reps, "Perturbations per sigma");
  noise_cmd->add_option("--q", noise_q, "Criterion exponent q");
  noise_cmd->add_option("--p", noise_p, "Distance norm order");
  noise_cmd->add_option("--seed", noise_seed, "Seed");
  noise_cmd->add_option("--out-dir", noise_out, "Output directory");

  // opt-lhs
  auto* opt_cmd = app.add_subcommand("opt-lhs", "Morris-Mitchell-optimized Latin hypercube");
  int opt_n = 50;
  int opt_k = 2;
  double opt_q = 2.0;
  int opt_p = 2;
  int opt_iters = 5000;
  std::uint64_t opt_seed = 1;
  std::string opt_out = "out";
  opt_cmd->add_option("--n", opt_n, "Design size");
  opt_cmd->add_option("--k", opt_k, "Dimension");
  opt_cmd->add_option("--q", opt_q, "Criterion exponent q");
  opt_cmd->add_option("--p", opt_p, "Distance norm order");
  opt_cmd->add_option("--iterations", opt_iters, "Swap iterations");
  opt_cmd->add_option("--seed", opt_seed, "Seed");
  opt_cmd->add_option("--out-dir", opt_out, "Output directory");

  // fit-cv
  auto* cv_cmd = app.add_subcommand("fit-cv", "Cross-validated surrogate model comparison");
  DesignSourceOptions cv_source;
  add_design_source_options(cv_cmd, cv_source);
  std::string cv_targets;
  int cv_folds = 10;
  std::string cv_models = "forest,gp";
  std::uint64_t cv_seed = 1;
  std::uint64_t cv_targets_seed = 1;
  std::string cv_out = "out";
  cv_cmd->add_option("--targets", cv_targets, "Targets CSV (synthetic targets when omitted)");
  cv_cmd->add_option("--folds", cv_folds, "Number of CV folds");
  cv_cmd->add_option("--models", cv_models, "Comma-separated model list (forest,gp)");
  cv_cmd->add_option("--seed", cv_seed, "CV shuffle seed");
  cv_cmd->add_option("--targets-seed", cv_targets_seed, "Seed for synthetic targets");
  cv_cmd->add_option("--out-dir", cv_out, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval_design(eval_csv, eval_q, eval_p, eval_out);
    if (suggest_cmd->parsed()) return cmd_suggest(suggest_config, suggest_cmd->remaining());
    if (scaling_cmd->parsed())
      return cmd_scaling(scaling_k, scaling_n, scaling_q, scaling_p, scaling_seed, scaling_out);
    if (addition_cmd->parsed())
      return cmd_point_addition(addition_source, addition_n, addition_mode, addition_q,
                                addition_p, addition_seed, addition_out);
    if (noise_cmd->parsed())
      return cmd_noise_sweep(noise_source, noise_sigmas, noise_reps, noise_q, noise_p,
                             noise_seed, noise_out);
    if (opt_cmd->parsed())
      return cmd_opt_lhs(opt_n, opt_k, opt_q, opt_p, opt_iters, opt_seed, opt_out);
    if (cv_cmd->parsed())
      return cmd_fit_cv(cv_source, cv_targets, cv_folds, cv_models, cv_seed, cv_targets_seed,
                        cv_out);
  } catch (const parse_error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const duplicate_point_error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const invalid_data_error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const invalid_argument_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}
