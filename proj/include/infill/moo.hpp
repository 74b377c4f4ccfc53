#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "infill/desirability.hpp"
#include "infill/design.hpp"
#include "infill/errors.hpp"
#include "infill/rng.hpp"
#include "infill/spacefill.hpp"
#include "infill/surrogate.hpp"
#include "infill/types.hpp"

namespace infill {

// Desirability support for the Morris-Mitchell improvement objective: a
// relative reduction of the base criterion between lo_frac and hi_frac.
inline std::pair<double, double> mm_desirability_bounds(double phi_base, double lo_frac = 0.001,
                                                        double hi_frac = 0.025) {
  if (!(phi_base > 0.0)) throw invalid_argument_error("phi_base must be positive");
  if (!(lo_frac > 0.0 && lo_frac < hi_frac))
    throw invalid_argument_error("require 0 < lo_frac < hi_frac");
  return {lo_frac * phi_base, hi_frac * phi_base};
}

// State needed to score the space-filling improvement of a candidate against
// a fixed base design.
struct MmContext {
  SamplingPlan base;
  DistanceProfile profile;
  double q = 2.0;
  int norm_p = 2;
  double phi_base = 0.0;
};

inline MmContext make_mm_context(const SamplingPlan& base, double q, int p) {
  MmContext ctx;
  ctx.base = base;
  ctx.profile = pairwise_distances(base, p, q);
  ctx.q = q;
  ctx.norm_p = p;
  ctx.phi_base = phi_intensive_from_profile(ctx.profile);
  return ctx;
}

// The scalarized objective: surrogate predictions (plus, optionally, the
// Morris-Mitchell improvement) pushed through per-objective desirabilities
// and combined with the geometric mean.
struct ObjectiveAssembly {
  std::vector<SurrogatePtr> surrogates;
  OverallDesirability specs;
  bool mm_enabled = false;
  std::optional<MmContext> mm;
  Bounds bounds;

  int prediction_count() const {
    int p = 0;
    for (const auto& s : surrogates) p += s->output_dim();
    return p;
  }

  int objective_count() const { return prediction_count() + (mm_enabled ? 1 : 0); }

  void validate() const {
    bounds.validate();
    if (surrogates.empty()) throw invalid_argument_error("assembly requires surrogates");
    for (const auto& s : surrogates)
      if (s->input_dim() != bounds.k())
        throw invalid_argument_error("surrogate input dimension does not match bounds");
    specs.validate();
    if (specs.size() != objective_count())
      throw invalid_argument_error("assembly requires one desirability spec per objective");
    if (mm_enabled) {
      if (!mm) throw invalid_argument_error("mm_enabled requires an MmContext");
      if (mm->base.k() != bounds.k())
        throw invalid_argument_error("MM base plan dimension does not match bounds");
      const double phi = phi_intensive_from_profile(mm->profile);
      if (std::abs(phi - mm->phi_base) > 1e-12 * std::max(1.0, std::abs(phi)))
        throw invalid_argument_error("MmContext phi_base is stale");
    }
  }
};

// Predicts the objective vector at x and scores it; the second member is the
// overall desirability. A candidate duplicating a base design point scores 0.
inline std::pair<Vector, double> evaluate_objective(const ObjectiveAssembly& assembly,
                                                    const Vector& x) {
  if (x.size() != assembly.bounds.k())
    throw invalid_argument_error("candidate dimension does not match bounds");
  for (int j = 0; j < x.size(); ++j)
    if (x[j] < assembly.bounds.low[j] || x[j] > assembly.bounds.high[j])
      throw invalid_argument_error("candidate lies outside the box bounds");

  Vector y(assembly.objective_count());
  int cursor = 0;
  for (const auto& surrogate : assembly.surrogates) {
    const Vector pred = surrogate->predict_one(x);
    for (int t = 0; t < pred.size(); ++t) y[cursor++] = pred[t];
  }
  if (assembly.mm_enabled)
    y[cursor] = mm_improvement(assembly.mm->base, x, assembly.mm->profile, assembly.mm->q,
                               assembly.mm->norm_p, DuplicatePolicy::lenient);

  // A -inf improvement falls below its lower bound and zeroes the score.
  std::vector<double> f(y.data(), y.data() + y.size());
  const double score = assembly.specs.evaluate(f);
  return {std::move(y), score};
}

struct TracePoint {
  int iteration = 0;
  double best_desirability = 0.0;
  Vector y;  // objective vector of the incumbent
};

struct InfillSuggestion {
  Vector x_best;
  Vector y_best;
  double desirability = 0.0;
  std::vector<TracePoint> trace;
  bool flat_landscape = false;  // desirability stayed 0 for the whole budget
};

namespace detail {

inline double reflect_into(double v, double lo, double hi) {
  while (v < lo || v > hi) {
    if (v < lo) v = 2.0 * lo - v;
    if (v > hi) v = 2.0 * hi - v;
  }
  return v;
}

inline InfillSuggestion de_run(const ObjectiveAssembly& assembly, int budget, std::uint64_t seed) {
  const int k = assembly.bounds.k();
  const int np = std::min(10 * k, 150);
  constexpr double kF = 0.8;
  constexpr double kCr = 0.9;
  const Vector& lo = assembly.bounds.low;
  const Vector& hi = assembly.bounds.high;

  Rng rng(seed);
  std::vector<Vector> pop(static_cast<std::size_t>(np));
  std::vector<Vector> pop_y(static_cast<std::size_t>(np));
  std::vector<double> pop_d(static_cast<std::size_t>(np));

  InfillSuggestion best;
  best.desirability = -1.0;
  auto consider = [&best](const Vector& x, const Vector& y, double d) {
    if (d > best.desirability) {
      best.x_best = x;
      best.y_best = y;
      best.desirability = d;
    }
  };

  int evals = 0;
  for (int i = 0; i < np; ++i) {
    Vector x(k);
    for (int j = 0; j < k; ++j) x[j] = rng.uniform(lo[j], hi[j]);
    auto [y, d] = evaluate_objective(assembly, x);
    pop[static_cast<std::size_t>(i)] = std::move(x);
    pop_y[static_cast<std::size_t>(i)] = std::move(y);
    pop_d[static_cast<std::size_t>(i)] = d;
    consider(pop[static_cast<std::size_t>(i)], pop_y[static_cast<std::size_t>(i)], d);
    ++evals;
  }
  best.trace.push_back(TracePoint{0, best.desirability, best.y_best});

  int generation = 0;
  while (evals + np <= budget) {
    ++generation;
    for (int i = 0; i < np; ++i) {
      int a = rng.uniform_int(np);
      while (a == i) a = rng.uniform_int(np);
      int b = rng.uniform_int(np);
      while (b == i || b == a) b = rng.uniform_int(np);
      int c = rng.uniform_int(np);
      while (c == i || c == a || c == b) c = rng.uniform_int(np);

      const int j_rand = rng.uniform_int(k);
      Vector trial = pop[static_cast<std::size_t>(i)];
      for (int j = 0; j < k; ++j) {
        if (j == j_rand || rng.uniform01() < kCr) {
          const double v = pop[static_cast<std::size_t>(a)][j] +
                           kF * (pop[static_cast<std::size_t>(b)][j] -
                                 pop[static_cast<std::size_t>(c)][j]);
          trial[j] = reflect_into(v, lo[j], hi[j]);
        }
      }
      auto [y, d] = evaluate_objective(assembly, trial);
      ++evals;
      if (d >= pop_d[static_cast<std::size_t>(i)]) {  // ties drift across plateaus
        pop[static_cast<std::size_t>(i)] = std::move(trial);
        pop_y[static_cast<std::size_t>(i)] = y;
        pop_d[static_cast<std::size_t>(i)] = d;
        consider(pop[static_cast<std::size_t>(i)], pop_y[static_cast<std::size_t>(i)], d);
      }
    }
    best.trace.push_back(TracePoint{generation, best.desirability, best.y_best});
  }
  best.flat_landscape = (best.desirability <= 0.0);
  return best;
}

}  // namespace detail

// Differential evolution (rand/1/bin, F=0.8, CR=0.9, population min(10k,150))
// maximizing the overall desirability within the box bounds. The trace
// records the incumbent once per generation. With restarts > 1 the best
// result across seeded restarts is returned.
inline InfillSuggestion optimize(const ObjectiveAssembly& assembly, int budget,
                                 std::uint64_t seed, int restarts = 1) {
  assembly.validate();
  if (restarts < 1) throw invalid_argument_error("optimize requires restarts >= 1");
  const int np = std::min(10 * assembly.bounds.k(), 150);
  if (budget < np)
    throw invalid_argument_error("optimize requires budget >= population size");

  InfillSuggestion best;
  best.desirability = -1.0;
  for (int r = 0; r < restarts; ++r) {
    InfillSuggestion run = detail::de_run(
        assembly, budget, restarts == 1 ? seed : derive_seed(seed, static_cast<std::uint64_t>(r)));
    if (run.desirability > best.desirability) best = std::move(run);
  }
  return best;
}

enum class Orientation { maximize, minimize };

// Indices of the non-dominated rows of Y under the given per-column
// orientations; plain O(m^2) dominance scan.
inline std::vector<int> pareto_front(const Matrix& Y,
                                     const std::vector<Orientation>& orientation) {
  const int m = static_cast<int>(Y.rows());
  const int p = static_cast<int>(Y.cols());
  if (m < 1) throw invalid_argument_error("pareto_front requires at least one row");
  if (static_cast<int>(orientation.size()) != p)
    throw invalid_argument_error("one orientation per objective is required");

  Matrix oriented(m, p);
  for (int t = 0; t < p; ++t) {
    if (orientation[static_cast<std::size_t>(t)] == Orientation::maximize)
      oriented.col(t) = Y.col(t);
    else
      oriented.col(t) = -Y.col(t);
  }

  std::vector<int> front;
  for (int i = 0; i < m; ++i) {
    bool dominated = false;
    for (int j = 0; j < m && !dominated; ++j) {
      if (j == i) continue;
      bool all_geq = true;
      bool any_gt = false;
      for (int t = 0; t < p; ++t) {
        if (oriented(j, t) < oriented(i, t)) {
          all_geq = false;
          break;
        }
        if (oriented(j, t) > oriented(i, t)) any_gt = true;
      }
      dominated = all_geq && any_gt;
    }
    if (!dominated) front.push_back(i);
  }
  return front;
}

}  // namespace infill
