#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "infill/errors.hpp"

namespace infill {

enum class Goal { maximize, minimize, target };

// Derringer-Suich transform parameters. A and B bound the support; t0 is the
// target value (target goal only); s scales the max/min forms, s1/s2 the two
// branches of the target form.
struct DesirabilitySpec {
  Goal goal = Goal::maximize;
  double low = 0.0;     // A
  double high = 1.0;    // B
  double target = 0.0;  // t0
  double scale = 1.0;         // s
  double scale_left = 1.0;    // s1
  double scale_right = 1.0;   // s2

  void validate() const {
    if (!(low < high)) throw invalid_argument_error("desirability requires A < B");
    if (goal == Goal::target && !(low < target && target < high))
      throw invalid_argument_error("target desirability requires A < t0 < B");
    if (goal == Goal::target) {
      if (!(scale_left > 0.0 && scale_right > 0.0))
        throw invalid_argument_error("desirability scales must be positive");
    } else if (!(scale > 0.0)) {
      throw invalid_argument_error("desirability scale must be positive");
    }
  }
};

inline DesirabilitySpec max_spec(double low, double high, double scale) {
  DesirabilitySpec spec{Goal::maximize, low, high, 0.0, scale, 1.0, 1.0};
  spec.validate();
  return spec;
}

inline DesirabilitySpec min_spec(double low, double high, double scale) {
  DesirabilitySpec spec{Goal::minimize, low, high, 0.0, scale, 1.0, 1.0};
  spec.validate();
  return spec;
}

inline DesirabilitySpec target_spec(double low, double target, double high, double scale_left,
                                    double scale_right) {
  DesirabilitySpec spec{Goal::target, low, high, target, 1.0, scale_left, scale_right};
  spec.validate();
  return spec;
}

// Larger-is-better: 0 below A, ((f-A)/(B-A))^s inside, 1 above B. The
// interior branch is taken at the boundaries, so f=A gives 0 and f=B gives 1.
inline double d_max(double f, const DesirabilitySpec& spec) {
  if (f < spec.low) return 0.0;
  if (f > spec.high) return 1.0;
  return std::pow((f - spec.low) / (spec.high - spec.low), spec.scale);
}

// Smaller-is-better: 1 below A, ((f-B)/(A-B))^s inside, 0 above B.
inline double d_min(double f, const DesirabilitySpec& spec) {
  if (f < spec.low) return 1.0;
  if (f > spec.high) return 0.0;
  return std::pow((f - spec.high) / (spec.low - spec.high), spec.scale);
}

// Target-is-best: rises on [A, t0], falls on [t0, B], 0 outside.
inline double d_target(double f, const DesirabilitySpec& spec) {
  if (f < spec.low || f > spec.high) return 0.0;
  if (f <= spec.target)
    return std::pow((f - spec.low) / (spec.target - spec.low), spec.scale_left);
  return std::pow((f - spec.high) / (spec.target - spec.high), spec.scale_right);
}

inline double desirability(double f, const DesirabilitySpec& spec) {
  switch (spec.goal) {
    case Goal::maximize: return d_max(f, spec);
    case Goal::minimize: return d_min(f, spec);
    case Goal::target: return d_target(f, spec);
  }
  throw invalid_argument_error("unknown desirability goal");
}

// Unweighted geometric mean of R individual desirabilities. Zero as soon as
// any component is zero.
inline double overall(std::span<const double> d) {
  if (d.empty()) throw invalid_argument_error("overall desirability requires R >= 1");
  double product = 1.0;
  for (const double v : d) {
    if (!(v >= 0.0 && v <= 1.0))
      throw invalid_argument_error("individual desirabilities must lie in [0,1]");
    product *= v;
  }
  return std::pow(product, 1.0 / static_cast<double>(d.size()));
}

// A bank of per-objective transforms applied element-wise, combined with the
// geometric mean.
struct OverallDesirability {
  std::vector<DesirabilitySpec> specs;

  int size() const { return static_cast<int>(specs.size()); }

  void validate() const {
    if (specs.empty()) throw invalid_argument_error("OverallDesirability requires R >= 1");
    for (const auto& spec : specs) spec.validate();
  }

  // Transforms the objective vector f and returns the overall score;
  // d_out, when given, receives the individual desirabilities.
  double evaluate(std::span<const double> f, std::vector<double>* d_out = nullptr) const {
    if (static_cast<int>(f.size()) != size())
      throw invalid_argument_error("objective vector length does not match spec count");
    std::vector<double> d(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) d[i] = desirability(f[i], specs[i]);
    const double score = overall(d);
    if (d_out) *d_out = std::move(d);
    return score;
  }
};

}  // namespace infill
