#include <cmath>
#include <limits>
#include <vector>

#include "catch_amalgamated.hpp"
#include "infill/case_study.hpp"
#include "infill/moo.hpp"
#include "infill/rng.hpp"

using namespace infill;

namespace {

ObjectiveAssembly identity_toy(double low = 0.0, double high = 1.0, double scale = 1.0) {
  ObjectiveAssembly assembly;
  assembly.surrogates = {identity_surrogate(2)};
  assembly.specs.specs = {max_spec(low, high, scale), max_spec(low, high, scale)};
  assembly.bounds = unit_bounds(2);
  return assembly;
}

// Textbook dominance check, kept independent of the library scan.
std::vector<int> brute_force_front(const Matrix& Y, const std::vector<Orientation>& orient) {
  std::vector<int> front;
  for (int i = 0; i < Y.rows(); ++i) {
    bool dominated = false;
    for (int j = 0; j < Y.rows(); ++j) {
      if (i == j) continue;
      int geq = 0;
      int gt = 0;
      for (int t = 0; t < Y.cols(); ++t) {
        const double yi =
            orient[static_cast<std::size_t>(t)] == Orientation::maximize ? Y(i, t) : -Y(i, t);
        const double yj =
            orient[static_cast<std::size_t>(t)] == Orientation::maximize ? Y(j, t) : -Y(j, t);
        if (yj >= yi) ++geq;
        if (yj > yi) ++gt;
      }
      if (geq == Y.cols() && gt > 0) {
        dominated = true;
        break;
      }
    }
    if (!dominated) front.push_back(i);
  }
  return front;
}

}  // namespace

TEST_CASE("MM desirability bounds reproduce the reference printout", "[moo]") {
  const auto [low, high] = mm_desirability_bounds(136.33458506472726);
  CHECK(low == Catch::Approx(0.13633458506472726).margin(1e-12));
  CHECK(high == Catch::Approx(3.408364626618182).margin(1e-12));

  const auto [unit_low, unit_high] = mm_desirability_bounds(1.0);
  CHECK(unit_low == Catch::Approx(0.001).margin(1e-15));
  CHECK(unit_high == Catch::Approx(0.025).margin(1e-15));

  Rng rng(1);
  for (int i = 0; i < 10; ++i) {
    const double base = std::exp(rng.uniform(-2.0, 6.0));
    const auto [a, b] = mm_desirability_bounds(base);
    CHECK(b / a == Catch::Approx(25.0).epsilon(1e-12));
  }

  CHECK_THROWS_AS(mm_desirability_bounds(0.0), invalid_argument_error);
  CHECK_THROWS_AS(mm_desirability_bounds(1.0, 0.5, 0.1), invalid_argument_error);
}

TEST_CASE("objective evaluation hits the desirability edge cases", "[moo]") {
  ObjectiveAssembly assembly = identity_toy();
  assembly.validate();

  Vector ones(2);
  ones << 1.0, 1.0;
  CHECK(evaluate_objective(assembly, ones).second == 1.0);

  // One prediction below its lower support zeroes the whole score.
  ObjectiveAssembly shifted = identity_toy(0.5, 1.0, 1.0);
  Vector low_point(2);
  low_point << 0.2, 0.9;
  CHECK(evaluate_objective(shifted, low_point).second == 0.0);

  // Individual desirabilities 0.25 and 1.0 combine to sqrt(0.25) = 0.5.
  ObjectiveAssembly mixed;
  mixed.surrogates = {identity_surrogate(2)};
  mixed.specs.specs = {max_spec(0.0, 1.0, 2.0), max_spec(0.0, 1.0, 1.0)};
  mixed.bounds = unit_bounds(2);
  Vector x(2);
  x << 0.5, 1.0;
  const auto [y, score] = evaluate_objective(mixed, x);
  CHECK(y.size() == 2);
  CHECK(score == Catch::Approx(0.5).margin(1e-15));

  Vector outside(2);
  outside << 1.5, 0.5;
  CHECK_THROWS_AS(evaluate_objective(mixed, outside), invalid_argument_error);
}

TEST_CASE("DE finds the corner of the identity toy", "[moo]") {
  const InfillSuggestion result = optimize(identity_toy(), 5000, 7);
  CHECK(std::abs(result.x_best[0] - 1.0) < 1e-2);
  CHECK(std::abs(result.x_best[1] - 1.0) < 1e-2);
  CHECK(result.desirability >= 0.98);
  CHECK_FALSE(result.flat_landscape);
}

TEST_CASE("optimization is deterministic per seed", "[moo]") {
  const InfillSuggestion a = optimize(identity_toy(), 1000, 3);
  const InfillSuggestion b = optimize(identity_toy(), 1000, 3);
  CHECK(a.x_best == b.x_best);
  CHECK(a.desirability == b.desirability);
  REQUIRE(a.trace.size() == b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i)
    CHECK(a.trace[i].best_desirability == b.trace[i].best_desirability);
}

TEST_CASE("the incumbent trace never decreases", "[moo]") {
  const InfillSuggestion result = optimize(identity_toy(0.0, 1.0, 3.0), 2000, 11);
  REQUIRE(result.trace.size() > 1);
  for (std::size_t i = 1; i < result.trace.size(); ++i)
    CHECK(result.trace[i].best_desirability >= result.trace[i - 1].best_desirability);
  // The reported best matches the last trace entry and its own re-evaluation.
  CHECK(result.desirability == result.trace.back().best_desirability);
  ObjectiveAssembly assembly = identity_toy(0.0, 1.0, 3.0);
  const auto [y, score] = evaluate_objective(assembly, result.x_best);
  CHECK(std::abs(score - result.desirability) <= 1e-12);
  for (int j = 0; j < 2; ++j) {
    CHECK(result.x_best[j] >= 0.0);
    CHECK(result.x_best[j] <= 1.0);
  }
}

TEST_CASE("a flat zero landscape is flagged instead of failing", "[moo]") {
  // Support far above anything the identity objectives can reach.
  const InfillSuggestion result = optimize(identity_toy(5.0, 6.0, 1.0), 800, 2);
  CHECK(result.desirability == 0.0);
  CHECK(result.flat_landscape);
}

TEST_CASE("optimizer validates budget and restarts", "[moo]") {
  CHECK_THROWS_AS(optimize(identity_toy(), 10, 1), invalid_argument_error);
  CHECK_THROWS_AS(optimize(identity_toy(), 1000, 1, 0), invalid_argument_error);
}

TEST_CASE("restarts return the best seeded run", "[moo]") {
  const InfillSuggestion single = optimize(identity_toy(0.0, 1.0, 5.0), 600, 21, 1);
  const InfillSuggestion multi = optimize(identity_toy(0.0, 1.0, 5.0), 600, 21, 4);
  CHECK(multi.desirability >= single.desirability - 1e-12);
}

TEST_CASE("assembly validation catches inconsistent configurations", "[moo]") {
  ObjectiveAssembly assembly = identity_toy();
  assembly.specs.specs.pop_back();
  CHECK_THROWS_AS(assembly.validate(), invalid_argument_error);

  ObjectiveAssembly stale = identity_toy();
  stale.specs.specs.push_back(max_spec(0.0, 1.0, 1.0));
  stale.mm_enabled = true;
  stale.mm = make_mm_context(generate_lhs(10, 2, 1), 2.0, 2);
  stale.mm->phi_base += 0.5;
  CHECK_THROWS_AS(stale.validate(), invalid_argument_error);
}

TEST_CASE("duplicate candidates score zero through the MM objective", "[moo]") {
  const SamplingPlan base = generate_lhs(12, 2, 33);
  ObjectiveAssembly assembly;
  assembly.surrogates = {identity_surrogate(2)};
  assembly.specs.specs = {max_spec(0.0, 1.0, 1.0), max_spec(0.0, 1.0, 1.0),
                          max_spec(0.001, 0.025, 1.0)};
  assembly.bounds = unit_bounds(2);
  assembly.mm_enabled = true;
  assembly.mm = make_mm_context(base, 2.0, 2);
  assembly.validate();

  const Vector duplicate = base.points.row(3).transpose();
  const auto [y, score] = evaluate_objective(assembly, duplicate);
  CHECK(score == 0.0);
  CHECK(y[2] == -std::numeric_limits<double>::infinity());
}

TEST_CASE("pareto front keeps mutually non-dominated points", "[moo]") {
  Matrix y(3, 2);
  y << 1.0, 0.0, 0.0, 1.0, 0.5, 0.5;
  const std::vector<Orientation> both_max{Orientation::maximize, Orientation::maximize};
  CHECK(pareto_front(y, both_max) == std::vector<int>{0, 1, 2});

  Matrix dominated(2, 2);
  dominated << 1.0, 1.0, 0.0, 0.0;
  CHECK(pareto_front(dominated, both_max) == std::vector<int>{0});
  CHECK(pareto_front(dominated, {Orientation::minimize, Orientation::minimize}) ==
        std::vector<int>{1});
}

TEST_CASE("pareto front matches the brute-force oracle", "[moo]") {
  Rng rng(55);
  for (int rep = 0; rep < 20; ++rep) {
    const int p = (rep % 2 == 0) ? 2 : 3;
    Matrix y(50, p);
    for (int i = 0; i < 50; ++i)
      for (int t = 0; t < p; ++t) y(i, t) = rng.uniform01();
    std::vector<Orientation> orient;
    for (int t = 0; t < p; ++t)
      orient.push_back(rng.uniform01() < 0.5 ? Orientation::maximize : Orientation::minimize);
    CHECK(pareto_front(y, orient) == brute_force_front(y, orient));
  }
}

TEST_CASE("pareto front validates its inputs", "[moo]") {
  CHECK_THROWS_AS(pareto_front(Matrix(0, 2), {Orientation::maximize, Orientation::maximize}),
                  invalid_argument_error);
  CHECK_THROWS_AS(pareto_front(Matrix::Zero(3, 2), {Orientation::maximize}),
                  invalid_argument_error);
}

TEST_CASE("case study produces consistent suggestions", "[moo]") {
  const SamplingPlan X = generate_clustered_design(80, 3, 4, 0.05, 3);
  const SyntheticDataset data = generate_synthetic_targets(X, 3);

  CaseStudyConfig cfg;
  cfg.forest.n_estimators = 30;
  cfg.forest.seed = 5;
  cfg.budget = 600;
  cfg.seed = 9;
  const CaseStudyResult result = run_case_study(data, cfg);

  CHECK(result.without_mm.y_best.size() == 2);
  CHECK(result.with_mm.y_best.size() == 3);
  for (int j = 0; j < 3; ++j) {
    CHECK(result.without_mm.x_best[j] >= 0.0);
    CHECK(result.without_mm.x_best[j] <= 1.0);
    CHECK(result.with_mm.x_best[j] >= 0.0);
    CHECK(result.with_mm.x_best[j] <= 1.0);
  }
  CHECK(result.phi_base > 0.0);
  CHECK(result.mm_high == Catch::Approx(25.0 * result.mm_low).epsilon(1e-12));
  CHECK(std::isfinite(result.improvement_with_mm));
  CHECK(result.objective_names == std::vector<std::string>{"z1", "z2"});

  // Same config, same outcome.
  const CaseStudyResult again = run_case_study(data, cfg);
  CHECK(again.without_mm.x_best == result.without_mm.x_best);
  CHECK(again.with_mm.x_best == result.with_mm.x_best);
}

TEST_CASE("the MM objective pulls suggestions toward emptier regions", "[moo]") {
  int mm_wins = 0;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const SamplingPlan X = generate_clustered_design(60, 2, 3, 0.04, seed);
    const SyntheticDataset data = generate_synthetic_targets(X, seed);
    CaseStudyConfig cfg;
    cfg.forest.n_estimators = 20;
    cfg.forest.seed = seed;
    cfg.budget = 400;
    cfg.seed = seed + 1000;
    const CaseStudyResult result = run_case_study(data, cfg);
    if (result.improvement_with_mm >= result.improvement_without_mm) ++mm_wins;
  }
  CHECK(mm_wins >= 20);  // at least 80% of the seeded runs
}

TEST_CASE("case study rejects bad column selections", "[moo]") {
  const SamplingPlan X = generate_lhs(20, 2, 4);
  const SyntheticDataset data = generate_synthetic_targets(X, 4);
  CaseStudyConfig cfg;
  cfg.objective_b = 5;
  CHECK_THROWS_AS(run_case_study(data, cfg), invalid_argument_error);
  cfg.objective_b = 0;
  CHECK_THROWS_AS(run_case_study(data, cfg), invalid_argument_error);
}
