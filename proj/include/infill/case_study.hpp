#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "infill/design.hpp"
#include "infill/errors.hpp"
#include "infill/forest.hpp"
#include "infill/gp.hpp"
#include "infill/moo.hpp"
#include "infill/spacefill.hpp"

namespace infill {

enum class SurrogateKind { forest, gp };

struct CaseStudyConfig {
  int objective_a = 0;  // target column indices into the dataset
  int objective_b = 1;
  DesirabilitySpec spec_a = max_spec(0.0, 1.1, 5.0);
  DesirabilitySpec spec_b = max_spec(0.0, 1.1, 5.0);
  double mm_lo_frac = 0.001;
  double mm_hi_frac = 0.025;
  double mm_scale = 5.0;
  double q = 2.0;
  int norm_p = 2;
  SurrogateKind surrogate_kind = SurrogateKind::forest;
  ForestConfig forest;
  GpConfig gp;
  int budget = 2000;
  std::uint64_t seed = 1;
  int restarts = 1;
};

struct CaseStudyResult {
  InfillSuggestion without_mm;  // two objectives
  InfillSuggestion with_mm;     // two objectives plus the MM improvement
  double phi_base = 0.0;
  double mm_low = 0.0;   // desirability support of the MM objective
  double mm_high = 0.0;
  double improvement_without_mm = 0.0;
  double improvement_with_mm = 0.0;
  std::vector<std::string> objective_names;  // the two selected target labels
};

namespace detail {

// One ground-truth simulator per selected target, fitted on all data.
inline std::vector<SurrogatePtr> fit_ground_truth(const SyntheticDataset& data,
                                                  const CaseStudyConfig& cfg) {
  if (data.p() < 2) throw invalid_argument_error("case study requires at least 2 targets");
  if (cfg.objective_a < 0 || cfg.objective_a >= data.p() || cfg.objective_b < 0 ||
      cfg.objective_b >= data.p() || cfg.objective_a == cfg.objective_b)
    throw invalid_argument_error("invalid objective column selection");
  auto fit_one = [&](int column) -> SurrogatePtr {
    if (cfg.surrogate_kind == SurrogateKind::forest)
      return fit_forest(data.X, data.Z.col(column), cfg.forest);
    return fit_gp(data.X, data.Z.col(column), cfg.gp);
  };
  return {fit_one(cfg.objective_a), fit_one(cfg.objective_b)};
}

inline ObjectiveAssembly plain_assembly(const SyntheticDataset& data,
                                        const CaseStudyConfig& cfg,
                                        std::vector<SurrogatePtr> simulators) {
  ObjectiveAssembly assembly;
  assembly.surrogates = std::move(simulators);
  assembly.specs.specs = {cfg.spec_a, cfg.spec_b};
  assembly.bounds = unit_bounds(data.X.k());
  return assembly;
}

}  // namespace detail

// The pipeline without the space-filling objective: two simulated targets
// scalarized by desirability.
inline InfillSuggestion run_plain_pipeline(const SyntheticDataset& data,
                                           const CaseStudyConfig& cfg) {
  ObjectiveAssembly assembly =
      detail::plain_assembly(data, cfg, detail::fit_ground_truth(data, cfg));
  return optimize(assembly, cfg.budget, cfg.seed, cfg.restarts);
}

// Full infill comparison: optimize the combined desirability without the
// Morris-Mitchell objective, then again with it, using the same seed and the
// same ground-truth simulators.
inline CaseStudyResult run_case_study(const SyntheticDataset& data, const CaseStudyConfig& cfg) {
  std::vector<SurrogatePtr> simulators = detail::fit_ground_truth(data, cfg);

  CaseStudyResult result;
  result.objective_names = {data.target_names[static_cast<std::size_t>(cfg.objective_a)],
                            data.target_names[static_cast<std::size_t>(cfg.objective_b)]};

  MmContext ctx = make_mm_context(data.X, cfg.q, cfg.norm_p);
  result.phi_base = ctx.phi_base;
  const auto [mm_low, mm_high] =
      mm_desirability_bounds(ctx.phi_base, cfg.mm_lo_frac, cfg.mm_hi_frac);
  result.mm_low = mm_low;
  result.mm_high = mm_high;

  ObjectiveAssembly plain = detail::plain_assembly(data, cfg, simulators);
  result.without_mm = optimize(plain, cfg.budget, cfg.seed, cfg.restarts);

  ObjectiveAssembly with_mm = plain;
  with_mm.specs.specs.push_back(max_spec(mm_low, mm_high, cfg.mm_scale));
  with_mm.mm_enabled = true;
  with_mm.mm = std::move(ctx);
  result.with_mm = optimize(with_mm, cfg.budget, cfg.seed, cfg.restarts);

  result.improvement_without_mm =
      mm_improvement(with_mm.mm->base, result.without_mm.x_best, with_mm.mm->profile, cfg.q,
                     cfg.norm_p, DuplicatePolicy::lenient);
  result.improvement_with_mm = result.with_mm.y_best[2];
  return result;
}

}  // namespace infill
