// Acceptance suite: one check per release criterion, each printed as a
// single pass/fail line. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "infill/infill.hpp"

using namespace infill;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail = "") {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!pass) ++g_failures;
}

double ms_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

SamplingPlan three_point_plan() {
  Matrix pts(3, 2);
  pts << 0.0, 0.0, 0.5, 0.5, 1.0, 1.0;
  return SamplingPlan(pts);
}

SamplingPlan random_plan(Rng& rng, int n, int k) {
  Matrix pts(n, k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) pts(i, j) = rng.uniform01();
  return SamplingPlan(pts);
}

double spearman_rho(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t n = xs.size();
  auto ranks = [n](const std::vector<double>& v) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[order[i]] = static_cast<double>(i);
    return rank;
  };
  const std::vector<double> rx = ranks(xs);
  const std::vector<double> ry = ranks(ys);
  double d2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) d2 += (rx[i] - ry[i]) * (rx[i] - ry[i]);
  const double m = static_cast<double>(n);
  return 1.0 - 6.0 * d2 / (m * (m * m - 1.0));
}

// 1. Worked-example exactness, including the profile and a timing bound.
void criterion_1() {
  const SamplingPlan plan = three_point_plan();
  (void)mmphi_intensive(plan, 2.0, 2);  // warm-up
  const auto start = std::chrono::steady_clock::now();
  const MmResult result = mmphi_intensive(plan, 2.0, 2);
  const double elapsed = ms_since(start);

  bool pass = std::abs(result.quality - 1.224744871391589) <= 1e-12;
  pass = pass && result.profile.J == std::vector<std::int64_t>{2, 1};
  pass = pass && result.profile.d.size() == 2 &&
         std::abs(result.profile.d[0] - 0.70710678) <= 1e-8 &&
         std::abs(result.profile.d[1] - 1.41421356) <= 1e-8;
  pass = pass && elapsed < 1.0;
  report(1, "worked-example exactness", pass,
         "phi*=" + fmt_shortest(result.quality) + ", " + fmt_fixed(elapsed, 3) + " ms");
}

// 2. Single-point update exactness.
void criterion_2() {
  const SamplingPlan plan = three_point_plan();
  const MmResult base = mmphi_intensive(plan, 2.0, 2);
  Vector x(2);
  x << 0.1, 0.1;
  const MmResult updated = mmphi_intensive_update(plan, x, base.profile);
  const bool pass = std::abs(updated.quality - 3.115613474919968) <= 1e-12;
  report(2, "update exactness", pass, "phi*'=" + fmt_shortest(updated.quality));
}

// 3. Incremental update agrees with the from-scratch evaluation.
void criterion_3() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(1234);
  double worst = 0.0;
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 3 + rng.uniform_int(98);   // [3, 100]
    const int k = 1 + rng.uniform_int(10);   // [1, 10]
    const SamplingPlan plan = random_plan(rng, n, k);
    Vector x(k);
    for (int j = 0; j < k; ++j) x[j] = rng.uniform01();
    const MmResult base = mmphi_intensive(plan, 2.0, 2);
    const MmResult updated = mmphi_intensive_update(plan, x, base.profile);
    Matrix grown(n + 1, k);
    grown.topRows(n) = plan.points;
    grown.row(n) = x.transpose();
    const MmResult scratch = mmphi_intensive(SamplingPlan(grown), 2.0, 2);
    worst = std::max(worst, std::abs(updated.quality - scratch.quality) / scratch.quality);
  }
  const double elapsed = ms_since(start);
  const bool pass = worst <= 1e-8 && elapsed < 10000.0;
  report(3, "incremental oracle equivalence", pass,
         "worst rel diff " + fmt_shortest(worst) + ", " + fmt_fixed(elapsed / 1000.0, 2) + " s");
}

// 4. Size-invariance trend of the intensive criterion on centered LHS.
void criterion_4() {
  const auto rows = mmphi_vs_n_study(2, {10, 25, 50, 100, 200}, 2.0, 2, 2024);
  bool identity = true;
  for (const auto& row : rows)
    identity = identity &&
               row.phi_intensive ==
                   row.phi * std::pow(static_cast<double>(row.pair_count), -0.5);
  const double phi_factor = rows.back().phi / rows.front().phi;
  const double intensive_factor = rows.back().phi_intensive / rows.front().phi_intensive;
  const bool pass = identity && phi_factor > 5.0 && intensive_factor < 2.5;
  report(4, "size-invariance trend", pass,
         "phi x" + fmt_fixed(phi_factor, 2) + ", phi* x" + fmt_fixed(intensive_factor, 2));
}

// 5. Desirability hand-evaluations and geometric-mean identities.
void criterion_5() {
  const double v1 = d_max(0.55, max_spec(0.0, 1.1, 5.0));
  const double v2 = d_min(0.5, min_spec(0.2, 0.8, 1.0));
  const double v3 = d_target(0.25, target_spec(0.0, 0.5, 1.0, 1.0, 1.0));
  bool pass = std::abs(v1 - 0.03125) <= 1e-15;
  pass = pass && std::abs(v2 - 0.5) <= 1e-15;
  pass = pass && std::abs(v3 - 0.5) <= 1e-15;
  pass = pass && overall(std::vector<double>{0.0, 0.9}) == 0.0;
  pass = pass && overall(std::vector<double>{0.5, 0.5}) == 0.5;
  report(5, "desirability formulas", pass,
         fmt_shortest(v1) + ", " + fmt_shortest(v2) + ", " + fmt_shortest(v3));
}

// 6. Morris-Mitchell desirability bounds from the reference printout.
void criterion_6() {
  const auto [low, high] = mm_desirability_bounds(136.33458506472726);
  const bool pass = std::abs(low - 0.13633458506472726) <= 1e-12 &&
                    std::abs(high - 3.408364626618182) <= 1e-12;
  report(6, "MM bounds", pass, fmt_shortest(low) + ", " + fmt_shortest(high));
}

// 7. Pareto front equals exhaustive brute-force dominance.
void criterion_7() {
  Rng rng(4321);
  bool pass = true;
  for (int rep = 0; rep < 100 && pass; ++rep) {
    const int p = (rep < 50) ? 2 : 3;
    Matrix y(50, p);
    for (int i = 0; i < 50; ++i)
      for (int t = 0; t < p; ++t) y(i, t) = rng.uniform01();
    std::vector<Orientation> orient(static_cast<std::size_t>(p), Orientation::maximize);

    std::vector<int> expected;
    for (int i = 0; i < 50; ++i) {
      bool dominated = false;
      for (int j = 0; j < 50 && !dominated; ++j) {
        if (i == j) continue;
        bool geq = true;
        bool gt = false;
        for (int t = 0; t < p; ++t) {
          if (y(j, t) < y(i, t)) geq = false;
          if (y(j, t) > y(i, t)) gt = true;
        }
        dominated = geq && gt;
      }
      if (!dominated) expected.push_back(i);
    }
    pass = pareto_front(y, orient) == expected;
  }
  report(7, "Pareto oracle", pass);
}

// 8. Optimizer sanity on the identity-surrogate toy, 10/10 seeds.
void criterion_8() {
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  for (std::uint64_t seed = 0; seed < 10 && pass; ++seed) {
    ObjectiveAssembly assembly;
    assembly.surrogates = {identity_surrogate(2)};
    assembly.specs.specs = {max_spec(0.0, 1.0, 1.0), max_spec(0.0, 1.0, 1.0)};
    assembly.bounds = unit_bounds(2);
    const InfillSuggestion result = optimize(assembly, 5000, seed);
    pass = std::abs(result.x_best[0] - 1.0) <= 1e-2 && std::abs(result.x_best[1] - 1.0) <= 1e-2 &&
           result.desirability >= 0.98;
  }
  const double elapsed = ms_since(start);
  pass = pass && elapsed < 5000.0;
  report(8, "optimizer sanity", pass, fmt_fixed(elapsed / 1000.0, 2) + " s for 10 seeds");
}

// 9. Clustered designs fill space worse than optimized LHS, >= 95/100 seeds.
void criterion_9() {
  int wins = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const SamplingPlan clustered = generate_clustered_design(213, 2, 5, 0.03, seed);
    const SamplingPlan lhs = optimize_lhs(213, 2, 2.0, 2, 5000, seed);
    const double phi_clustered =
        mmphi_intensive(clustered, 2.0, 2, DuplicatePolicy::lenient).quality;
    const double phi_lhs = mmphi_intensive(lhs, 2.0, 2).quality;
    if (phi_clustered > phi_lhs) ++wins;
  }
  report(9, "clustered-vs-LHS ordering", wins >= 95, std::to_string(wins) + "/100 seeds");
}

// 10. Batch point addition: decrease on clustered, increase on optimized LHS.
void criterion_10() {
  int decreases = 0;
  int increases = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SamplingPlan clustered = generate_clustered_design(213, 2, 5, 0.03, seed);
    const auto down = point_addition_study(clustered, 10, AdditionMode::batch, seed + 100);
    if (down.back().phi_intensive < down.front().phi_intensive) ++decreases;

    const SamplingPlan lhs = optimize_lhs(50, 2, 2.0, 2, 20000, seed);
    const auto up = point_addition_study(lhs, 10, AdditionMode::batch, seed + 100);
    if (up.back().phi_intensive > up.front().phi_intensive) ++increases;
  }
  const bool pass = decreases == 10 && increases == 10;
  report(10, "point-addition behavior", pass,
         "decrease " + std::to_string(decreases) + "/10, increase " + std::to_string(increases) +
             "/10");
}

// 11. Noise sweep: monotone improvement in sigma, plateau at the uniform level.
void criterion_11() {
  const SamplingPlan clustered = generate_clustered_design(213, 2, 5, 0.005, 17);
  const std::vector<double> sigmas{0.005, 0.01, 0.03, 0.08, 0.2, 0.5};
  const NoiseSweepResult sweep = noise_sigma_sweep(clustered, sigmas, 50, 99);
  std::vector<double> means;
  for (const auto& row : sweep.rows) means.push_back(row.mean_improvement);
  const double rho = spearman_rho(sigmas, means);
  const double plateau = means.back();
  const double uniform = sweep.uniform_mean_improvement;
  const bool pass = rho > 0.9 && std::abs(plateau - uniform) <= 0.1 * std::abs(uniform);
  report(11, "sigma-sweep monotonicity", pass,
         "rho=" + fmt_fixed(rho, 3) + ", plateau " + fmt_fixed(plateau, 4) + " vs uniform " +
             fmt_fixed(uniform, 4));
}

// 12. Surrogate harness: CV forest beats the constant predictor; table layout.
void criterion_12() {
  const SamplingPlan X = generate_lhs(200, 5, 7);
  const SyntheticDataset data = generate_synthetic_targets(X, 7);
  ForestConfig cfg;
  cfg.seed = 3;
  const CvReport report_cv =
      cross_validate(X, data.Z, 10, {forest_model(cfg), gp_model()}, 11, data.target_names);

  bool beats = true;
  for (int t = 0; t < 2; ++t) {
    const double variance = (data.Z.col(t).array() - data.Z.col(t).mean()).square().mean();
    beats = beats && cv_stats(report_cv.mse[0][static_cast<std::size_t>(t)]).mean < variance;
  }

  const std::string table = report_cv.to_table();
  std::istringstream lines(table);
  std::string header;
  std::getline(lines, header);
  auto strip = [](std::string s) {
    std::string out;
    for (const char c : s)
      if (c != ' ') out += c;
    return out;
  };
  const bool layout = strip(header) == "|Target|Model|Metric|Mean|Std|Min|Max|";
  int data_rows = 0;
  std::string line;
  std::getline(lines, line);  // alignment row
  while (std::getline(lines, line))
    if (!line.empty()) ++data_rows;
  const bool pass = beats && layout && data_rows == 2 * 2 * 2;
  report(12, "surrogate harness", pass,
         std::string(beats ? "beats mean" : "fails mean") + ", " + std::to_string(data_rows) +
             " table rows");
}

// 13. End-to-end determinism of the suggest command.
void criterion_13() {
#ifdef INFILL_CLI_PATH
  const fs::path work = fs::temp_directory_path() / "infill_acceptance";
  fs::remove_all(work);
  fs::create_directories(work);
  const fs::path config_path = work / "config.json";
  {
    std::ofstream config(config_path);
    config << R"({
  "data": {"synthetic": {"n": 70, "k": 2, "n_clusters": 3, "spread": 0.04, "seed": 12}},
  "surrogate": {"forest": {"n_estimators": 25}},
  "optimizer": {"budget": 400, "seed": 5},
  "output_dir": ")"
           << (work / "run").string() << R"("
})";
  }
  auto run_once = [&](const std::string& dir) {
    const std::string cmd = std::string(INFILL_CLI_PATH) + " suggest --config " +
                            config_path.string() + " --output_dir " + (work / dir).string() +
                            " > " + (work / (dir + ".log")).string() + " 2>&1";
    return std::system(cmd.c_str());
  };
  const int rc1 = run_once("a");
  const int rc2 = run_once("b");
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  };
  bool pass = rc1 == 0 && rc2 == 0;
  for (const char* name : {"suggest_suggestion_with_mm.json", "suggest_suggestion_without_mm.json"}) {
    const std::string a = slurp(work / "a" / name);
    const std::string b = slurp(work / "b" / name);
    pass = pass && !a.empty() && a == b;
  }
  report(13, "end-to-end determinism", pass);
  fs::remove_all(work);
#else
  report(13, "end-to-end determinism", false, "CLI path not configured");
#endif
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  criterion_13();
  std::cout << "ACCEPTANCE: " << (13 - g_failures) << "/13 passed" << std::endl;
  return g_failures == 0 ? 0 : 1;
}
