#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "infill/design.hpp"
#include "infill/errors.hpp"
#include "infill/rng.hpp"
#include "infill/types.hpp"

namespace infill {

// Pairs closer than this are treated as coincident points.
inline constexpr double kDuplicateTolerance = 1e-12;
// Distances equal within this relative tolerance collapse into one (d, J) entry.
inline constexpr double kGroupRelTolerance = 1e-9;

enum class DuplicatePolicy { strict, lenient };

// Sorted distinct pairwise distances with multiplicities: the incremental
// state of the intensive Morris-Mitchell criterion.
struct DistanceProfile {
  std::vector<double> d;        // strictly increasing, all > duplicate tolerance
  std::vector<std::int64_t> J;  // multiplicity per distance
  std::int64_t pair_count = 0;  // M = n(n-1)/2
  double q = 2.0;
  int norm_p = 2;
  double sum_dq = 0.0;  // cached sum J_i d_i^{-q}; +inf when degenerate
  bool degenerate = false;  // a pair fell below the duplicate tolerance
};

struct MmResult {
  double quality = 0.0;
  DistanceProfile profile;
};

namespace detail {

inline double dist_neg_pow(double dist, double q) {
  if (q == 2.0) return 1.0 / (dist * dist);
  return std::pow(dist, -q);
}

inline double minkowski(const Matrix& pts, int a, int b, int p) {
  double s = 0.0;
  for (int j = 0; j < pts.cols(); ++j) {
    const double diff = std::abs(pts(a, j) - pts(b, j));
    s += (p == 2) ? diff * diff : diff;
  }
  return (p == 2) ? std::sqrt(s) : s;
}

inline double minkowski_to_point(const Matrix& pts, int a, const Vector& x, int p) {
  double s = 0.0;
  for (int j = 0; j < pts.cols(); ++j) {
    const double diff = std::abs(pts(a, j) - x[j]);
    s += (p == 2) ? diff * diff : diff;
  }
  return (p == 2) ? std::sqrt(s) : s;
}

// Group a sorted distance list into (d, J) entries. Values join the current
// group while they stay within the relative tolerance of its first member.
inline void group_sorted(const std::vector<double>& sorted, std::vector<double>& d,
                         std::vector<std::int64_t>& J) {
  d.clear();
  J.clear();
  for (const double v : sorted) {
    if (!d.empty() && v - d.back() <= kGroupRelTolerance * d.back()) {
      ++J.back();
    } else {
      d.push_back(v);
      J.push_back(1);
    }
  }
}

inline void validate_norm(int p) {
  if (p != 1 && p != 2) throw invalid_argument_error("norm order p must be 1 or 2");
}

inline void validate_exponent(double q) {
  if (!(q > 0.0)) throw invalid_argument_error("exponent q must be positive");
}

}  // namespace detail

// All pairwise p-norm distances of a plan, grouped with multiplicities.
// Strict mode rejects near-coincident points; lenient mode marks the profile
// degenerate so criterion values become the +inf sentinel.
inline DistanceProfile pairwise_distances(const SamplingPlan& X, int p, double q = 2.0,
                                          DuplicatePolicy policy = DuplicatePolicy::strict) {
  detail::validate_norm(p);
  detail::validate_exponent(q);
  const int n = X.n();
  if (n < 2) throw invalid_argument_error("distance evaluation requires n >= 2");

  std::vector<double> dists;
  dists.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  std::vector<std::pair<int, int>> dup_pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const double dist = detail::minkowski(X.points, a, b, p);
      if (dist < kDuplicateTolerance)
        dup_pairs.emplace_back(a, b);
      else
        dists.push_back(dist);
    }

  DistanceProfile profile;
  profile.pair_count = static_cast<std::int64_t>(n) * (n - 1) / 2;
  profile.q = q;
  profile.norm_p = p;
  if (!dup_pairs.empty()) {
    if (policy == DuplicatePolicy::strict) {
      std::string msg = "duplicate points (distance < 1e-12) at row pairs:";
      for (const auto& [a, b] : dup_pairs)
        msg += " (" + std::to_string(a) + "," + std::to_string(b) + ")";
      throw duplicate_point_error(msg, dup_pairs);
    }
    profile.degenerate = true;
    profile.sum_dq = std::numeric_limits<double>::infinity();
  }
  std::sort(dists.begin(), dists.end());
  detail::group_sorted(dists, profile.d, profile.J);
  if (!profile.degenerate) {
    double sum = 0.0;
    for (std::size_t i = 0; i < profile.d.size(); ++i)
      sum += static_cast<double>(profile.J[i]) * detail::dist_neg_pow(profile.d[i], q);
    profile.sum_dq = sum;
  }
  return profile;
}

// Phi_q = (sum J d^{-q})^{1/q}; smaller is better.
inline double phi_from_profile(const DistanceProfile& profile) {
  if (profile.degenerate) return std::numeric_limits<double>::infinity();
  return std::pow(profile.sum_dq, 1.0 / profile.q);
}

// Phi*_q = ((1/M) sum J d^{-q})^{1/q}; size-invariant form.
inline double phi_intensive_from_profile(const DistanceProfile& profile) {
  if (profile.degenerate) return std::numeric_limits<double>::infinity();
  return std::pow(profile.sum_dq / static_cast<double>(profile.pair_count), 1.0 / profile.q);
}

inline MmResult mmphi(const SamplingPlan& X, double q, int p,
                      DuplicatePolicy policy = DuplicatePolicy::strict) {
  DistanceProfile profile = pairwise_distances(X, p, q, policy);
  const double quality = phi_from_profile(profile);
  return MmResult{quality, std::move(profile)};
}

inline MmResult mmphi_intensive(const SamplingPlan& X, double q, int p,
                                DuplicatePolicy policy = DuplicatePolicy::strict) {
  DistanceProfile profile = pairwise_distances(X, p, q, policy);
  const double quality = phi_intensive_from_profile(profile);
  return MmResult{quality, std::move(profile)};
}

namespace detail {

// Distances from a candidate point to every row of the base plan.
inline std::vector<double> candidate_distances(const SamplingPlan& X, const Vector& x, int p) {
  if (x.size() != X.points.cols())
    throw invalid_argument_error("new point dimension does not match the plan");
  std::vector<double> out(static_cast<std::size_t>(X.n()));
  for (int a = 0; a < X.n(); ++a)
    out[static_cast<std::size_t>(a)] = minkowski_to_point(X.points, a, x, p);
  return out;
}

// Merge new sorted distances into an existing (d, J) grouping.
inline void merge_grouped(const std::vector<double>& d, const std::vector<std::int64_t>& J,
                          const std::vector<double>& extra_sorted, std::vector<double>& d_out,
                          std::vector<std::int64_t>& J_out) {
  d_out.clear();
  J_out.clear();
  std::size_t i = 0;
  std::size_t j = 0;
  auto emit = [&](double value, std::int64_t count) {
    if (!d_out.empty() && value - d_out.back() <= kGroupRelTolerance * d_out.back())
      J_out.back() += count;
    else {
      d_out.push_back(value);
      J_out.push_back(count);
    }
  };
  while (i < d.size() || j < extra_sorted.size()) {
    if (j == extra_sorted.size() || (i < d.size() && d[i] <= extra_sorted[j])) {
      emit(d[i], J[i]);
      ++i;
    } else {
      emit(extra_sorted[j], 1);
      ++j;
    }
  }
}

}  // namespace detail

// Intensive criterion of X plus one new point, computed from the profile of X
// and only the n new distances. Returns the updated profile for chaining.
inline MmResult mmphi_intensive_update(const SamplingPlan& X, const Vector& new_point,
                                       const DistanceProfile& profile,
                                       DuplicatePolicy policy = DuplicatePolicy::strict) {
  std::vector<double> extra = detail::candidate_distances(X, new_point, profile.norm_p);

  DistanceProfile updated;
  updated.pair_count = profile.pair_count + X.n();
  updated.q = profile.q;
  updated.norm_p = profile.norm_p;
  updated.degenerate = profile.degenerate;

  double extra_sum = 0.0;
  std::vector<std::pair<int, int>> dup_pairs;
  std::vector<double> kept;
  kept.reserve(extra.size());
  for (std::size_t a = 0; a < extra.size(); ++a) {
    if (extra[a] < kDuplicateTolerance)
      dup_pairs.emplace_back(static_cast<int>(a), X.n());
    else {
      kept.push_back(extra[a]);
      extra_sum += detail::dist_neg_pow(extra[a], profile.q);
    }
  }
  if (!dup_pairs.empty()) {
    if (policy == DuplicatePolicy::strict) {
      std::string msg = "new point duplicates existing rows:";
      for (const auto& [a, b] : dup_pairs) msg += " " + std::to_string(a);
      throw duplicate_point_error(msg, dup_pairs);
    }
    updated.degenerate = true;
  }
  std::sort(kept.begin(), kept.end());
  detail::merge_grouped(profile.d, profile.J, kept, updated.d, updated.J);
  updated.sum_dq = updated.degenerate ? std::numeric_limits<double>::infinity()
                                      : profile.sum_dq + extra_sum;
  return MmResult{phi_intensive_from_profile(updated), std::move(updated)};
}

// Improvement Phi*(X) - Phi*(X + {x}); positive when adding x improves the
// design. Lenient mode returns -inf for a candidate that duplicates an
// existing point. O(n) per candidate: no profile merge is performed.
inline double mm_improvement(const SamplingPlan& X, const Vector& x,
                             const DistanceProfile& profile, double q, int p,
                             DuplicatePolicy policy = DuplicatePolicy::lenient) {
  if (q != profile.q || p != profile.norm_p)
    throw invalid_argument_error("mm_improvement: q/p do not match the profile");
  if (profile.degenerate) return -std::numeric_limits<double>::infinity();
  const std::vector<double> extra = detail::candidate_distances(X, x, p);
  double extra_sum = 0.0;
  for (const double dist : extra) {
    if (dist < kDuplicateTolerance) {
      if (policy == DuplicatePolicy::strict)
        throw duplicate_point_error("candidate duplicates an existing point");
      return -std::numeric_limits<double>::infinity();
    }
    extra_sum += detail::dist_neg_pow(dist, q);
  }
  const double base = phi_intensive_from_profile(profile);
  const double updated = std::pow((profile.sum_dq + extra_sum) /
                                      static_cast<double>(profile.pair_count + X.n()),
                                  1.0 / q);
  return base - updated;
}

// --- Study operations -------------------------------------------------------

struct ScalingRow {
  int n = 0;
  double phi = 0.0;
  double phi_intensive = 0.0;
  std::int64_t pair_count = 0;
};

// Phi and Phi* of centered LHS designs over a range of sizes. Phi* is derived
// from Phi via the size normalization, so the identity holds exactly per row.
inline std::vector<ScalingRow> mmphi_vs_n_study(int k, const std::vector<int>& n_values,
                                                double q, int p, std::uint64_t seed) {
  std::vector<ScalingRow> rows;
  rows.reserve(n_values.size());
  for (std::size_t idx = 0; idx < n_values.size(); ++idx) {
    const int n = n_values[idx];
    if (n < 2) throw invalid_argument_error("mmphi_vs_n_study requires every n >= 2");
    const SamplingPlan plan = generate_lhs(n, k, derive_seed(seed, idx), /*centered=*/true);
    const DistanceProfile profile = pairwise_distances(plan, p, q);
    ScalingRow row;
    row.n = n;
    row.phi = phi_from_profile(profile);
    row.phi_intensive = row.phi * std::pow(static_cast<double>(profile.pair_count), -1.0 / q);
    row.pair_count = profile.pair_count;
    rows.push_back(row);
  }
  return rows;
}

enum class AdditionMode { batch, single_injection };

struct AdditionRow {
  int step = 0;              // number of points added (batch) or candidate index
  double phi_intensive = 0;  // criterion of the augmented design
  double improvement = 0;    // base Phi* minus augmented Phi*
};

// Adds uniform random points to a design. Batch mode grows the design
// cumulatively; single-injection mode evaluates each candidate against the
// original design independently.
inline std::vector<AdditionRow> point_addition_study(const SamplingPlan& X, int n_added,
                                                     AdditionMode mode, std::uint64_t seed,
                                                     double q = 2.0, int p = 2) {
  if (n_added < 1) throw invalid_argument_error("point_addition_study requires n_added >= 1");
  Rng rng(seed);
  const DistanceProfile base_profile = pairwise_distances(X, p, q, DuplicatePolicy::lenient);
  const double base_phi = phi_intensive_from_profile(base_profile);

  std::vector<AdditionRow> rows;
  rows.push_back(AdditionRow{0, base_phi, 0.0});

  Matrix pts = X.points;
  DistanceProfile profile = base_profile;
  for (int t = 1; t <= n_added; ++t) {
    Vector x(X.k());
    for (int j = 0; j < X.k(); ++j) x[j] = rng.uniform01();
    if (mode == AdditionMode::batch) {
      const SamplingPlan current(pts, default_names(X.k(), "x"));
      MmResult updated = mmphi_intensive_update(current, x, profile, DuplicatePolicy::lenient);
      rows.push_back(AdditionRow{t, updated.quality, base_phi - updated.quality});
      profile = std::move(updated.profile);
      pts.conservativeResize(pts.rows() + 1, Eigen::NoChange);
      pts.row(pts.rows() - 1) = x.transpose();
    } else {
      const double improvement =
          mm_improvement(X, x, base_profile, q, p, DuplicatePolicy::lenient);
      rows.push_back(AdditionRow{t, base_phi - improvement, improvement});
    }
  }
  return rows;
}

struct SigmaRow {
  double sigma = 0.0;
  double mean_improvement = 0.0;
  double std_improvement = 0.0;
};

struct NoiseSweepResult {
  std::vector<SigmaRow> rows;
  // Mean improvement of uniform random candidates on the same design.
  double uniform_mean_improvement = 0.0;
};

// Perturbs randomly chosen existing points with isotropic Gaussian noise
// (clipped to the cube) and records the Morris-Mitchell improvement of each
// perturbed candidate against the original design.
inline NoiseSweepResult noise_sigma_sweep(const SamplingPlan& X, const std::vector<double>& sigmas,
                                          int reps, std::uint64_t seed, double q = 2.0, int p = 2) {
  if (reps < 1) throw invalid_argument_error("noise_sigma_sweep requires reps >= 1");
  for (const double s : sigmas)
    if (!(s > 0.0)) throw invalid_argument_error("noise_sigma_sweep requires sigmas > 0");

  const DistanceProfile profile = pairwise_distances(X, p, q, DuplicatePolicy::lenient);
  Rng rng(seed);

  auto improvement_of = [&](const Vector& x) {
    return mm_improvement(X, x, profile, q, p, DuplicatePolicy::lenient);
  };

  NoiseSweepResult result;
  for (const double sigma : sigmas) {
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(reps));
    for (int r = 0; r < reps; ++r) {
      Vector x(X.k());
      double imp = -std::numeric_limits<double>::infinity();
      for (int attempt = 0; attempt < 100 && !std::isfinite(imp); ++attempt) {
        const int row = rng.uniform_int(X.n());
        for (int j = 0; j < X.k(); ++j)
          x[j] = std::clamp(X.points(row, j) + sigma * rng.normal(), 0.0, 1.0);
        imp = improvement_of(x);
      }
      values.push_back(imp);
    }
    double mean = 0.0;
    for (const double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (const double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(values.size());
    result.rows.push_back(SigmaRow{sigma, mean, std::sqrt(var)});
  }

  double uniform_mean = 0.0;
  for (int r = 0; r < reps; ++r) {
    Vector x(X.k());
    for (int j = 0; j < X.k(); ++j) x[j] = rng.uniform01();
    uniform_mean += improvement_of(x);
  }
  result.uniform_mean_improvement = uniform_mean / reps;
  return result;
}

}  // namespace infill
