#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "infill/errors.hpp"
#include "infill/rng.hpp"
#include "infill/types.hpp"

namespace infill {

inline std::vector<std::string> default_names(int count, const std::string& prefix) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) names.push_back(prefix + std::to_string(i + 1));
  return names;
}

// A design of n points in the unit cube [0,1]^k, one row per point.
struct SamplingPlan {
  Matrix points;
  std::vector<std::string> feature_names;

  SamplingPlan() = default;

  explicit SamplingPlan(Matrix pts, std::vector<std::string> names = {})
      : points(std::move(pts)), feature_names(std::move(names)) {
    if (points.rows() < 1 || points.cols() < 1)
      throw invalid_data_error("sampling plan must have at least one row and one column");
    if (!points.allFinite())
      throw invalid_data_error("sampling plan contains non-finite entries");
    if ((points.array() < 0.0).any() || (points.array() > 1.0).any())
      throw invalid_data_error("sampling plan entries must lie in [0,1]; normalize first");
    if (feature_names.empty())
      feature_names = default_names(static_cast<int>(points.cols()), "x");
    if (static_cast<int>(feature_names.size()) != points.cols())
      throw invalid_argument_error("feature name count does not match column count");
    std::set<std::string> uniq(feature_names.begin(), feature_names.end());
    if (static_cast<int>(uniq.size()) != points.cols())
      throw invalid_argument_error("feature names must be unique");
  }

  int n() const { return static_cast<int>(points.rows()); }
  int k() const { return static_cast<int>(points.cols()); }
};

struct Bounds {
  Vector low;
  Vector high;

  int k() const { return static_cast<int>(low.size()); }

  void validate() const {
    if (low.size() != high.size() || low.size() == 0)
      throw invalid_argument_error("bounds vectors must be non-empty and of equal length");
    for (int i = 0; i < low.size(); ++i)
      if (!(low[i] < high[i]))
        throw invalid_argument_error("bounds require low[i] < high[i]");
  }
};

inline Bounds unit_bounds(int k) {
  return Bounds{Vector::Zero(k), Vector::Ones(k)};
}

// Design points paired with target values, both normalized to [0,1].
struct SyntheticDataset {
  SamplingPlan X;
  Matrix Z;  // n x p
  std::vector<std::string> target_names;

  int p() const { return static_cast<int>(Z.cols()); }
};

// Stratified Latin hypercube: each column is a random permutation of the n
// strata. Centered mode places points at stratum centers (pi(i)+0.5)/n,
// otherwise uniformly within each stratum.
inline SamplingPlan generate_lhs(int n, int k, std::uint64_t seed, bool centered = true) {
  if (n < 2) throw invalid_argument_error("generate_lhs requires n >= 2");
  if (k < 1) throw invalid_argument_error("generate_lhs requires k >= 1");
  Rng rng(seed);
  Matrix pts(n, k);
  for (int j = 0; j < k; ++j) {
    const std::vector<int> perm = rng.permutation(n);
    for (int i = 0; i < n; ++i) {
      const double offset = centered ? 0.5 : rng.uniform01();
      pts(i, j) = (perm[static_cast<std::size_t>(i)] + offset) / n;
    }
  }
  return SamplingPlan(std::move(pts));
}

namespace detail {

// d^{-q} from the accumulated p-norm power s = sum_j |dx_j|^p, i.e. s^{-q/p}.
inline double inv_dist_pow(double s, double q, int p) {
  const double e = q / p;
  if (e == 1.0) return 1.0 / s;
  return std::pow(s, -e);
}

inline double pair_power_accum(const Matrix& pts, int a, int b, int p) {
  double s = 0.0;
  for (int j = 0; j < pts.cols(); ++j) {
    const double diff = std::abs(pts(a, j) - pts(b, j));
    s += (p == 2) ? diff * diff : diff;
  }
  return s;
}

}  // namespace detail

// Column-swap hill climb on an LHS, minimizing the Morris-Mitchell criterion.
// A swap exchanges two entries within one column, which preserves the
// one-point-per-stratum property. The swap is accepted only on a strict
// decrease of sum d^{-q}, so the criterion never increases.
inline SamplingPlan optimize_lhs(int n, int k, double q, int p, int iterations,
                                 std::uint64_t seed) {
  if (q <= 0.0) throw invalid_argument_error("optimize_lhs requires q > 0");
  if (p != 1 && p != 2) throw invalid_argument_error("optimize_lhs requires p in {1,2}");
  if (iterations < 0) throw invalid_argument_error("optimize_lhs requires iterations >= 0");
  SamplingPlan plan = generate_lhs(n, k, seed, /*centered=*/true);
  Matrix& pts = plan.points;

  // Pairwise accumulations s_ab = sum_j |dx_j|^p; only rows a and b of a
  // swapped column change, so updates touch 2(n-2) pairs.
  Matrix acc = Matrix::Zero(n, n);
  double total = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const double s = detail::pair_power_accum(pts, a, b, p);
      acc(a, b) = acc(b, a) = s;
      total += detail::inv_dist_pow(s, q, p);
    }

  Rng rng(derive_seed(seed, 0x5eedull));
  std::vector<double> new_row_i(static_cast<std::size_t>(n));
  std::vector<double> new_row_j(static_cast<std::size_t>(n));
  for (int it = 0; it < iterations; ++it) {
    const int col = rng.uniform_int(k);
    const int i = rng.uniform_int(n);
    int j = rng.uniform_int(n - 1);
    if (j >= i) ++j;

    const double xi = pts(i, col);
    const double xj = pts(j, col);
    double delta = 0.0;
    for (int r = 0; r < n; ++r) {
      if (r == i || r == j) continue;
      const double xr = pts(r, col);
      const double di_old = std::abs(xi - xr);
      const double dj_old = std::abs(xj - xr);
      const double si_new =
          acc(i, r) - ((p == 2) ? di_old * di_old : di_old) + ((p == 2) ? dj_old * dj_old : dj_old);
      const double sj_new =
          acc(j, r) - ((p == 2) ? dj_old * dj_old : dj_old) + ((p == 2) ? di_old * di_old : di_old);
      new_row_i[static_cast<std::size_t>(r)] = si_new;
      new_row_j[static_cast<std::size_t>(r)] = sj_new;
      delta += detail::inv_dist_pow(si_new, q, p) - detail::inv_dist_pow(acc(i, r), q, p);
      delta += detail::inv_dist_pow(sj_new, q, p) - detail::inv_dist_pow(acc(j, r), q, p);
    }
    if (delta < -1e-12 * total) {
      pts(i, col) = xj;
      pts(j, col) = xi;
      for (int r = 0; r < n; ++r) {
        if (r == i || r == j) continue;
        acc(i, r) = acc(r, i) = new_row_i[static_cast<std::size_t>(r)];
        acc(j, r) = acc(r, j) = new_row_j[static_cast<std::size_t>(r)];
      }
      total += delta;
    }
  }
  return plan;
}

// Affine map of raw data into the unit cube, clipped to [0,1].
inline SamplingPlan normalize(const Matrix& raw, const Bounds& bounds,
                              std::vector<std::string> names = {}) {
  bounds.validate();
  if (raw.cols() != bounds.low.size())
    throw invalid_argument_error("normalize: column count does not match bounds");
  if (!raw.allFinite()) throw invalid_data_error("normalize: non-finite entries");
  Matrix out(raw.rows(), raw.cols());
  for (int j = 0; j < raw.cols(); ++j) {
    const double lo = bounds.low[j];
    const double span = bounds.high[j] - bounds.low[j];
    for (int i = 0; i < raw.rows(); ++i)
      out(i, j) = std::clamp((raw(i, j) - lo) / span, 0.0, 1.0);
  }
  return SamplingPlan(std::move(out), std::move(names));
}

inline Matrix denormalize(const SamplingPlan& plan, const Bounds& bounds) {
  bounds.validate();
  if (plan.k() != bounds.k())
    throw invalid_argument_error("denormalize: column count does not match bounds");
  Matrix out(plan.n(), plan.k());
  for (int j = 0; j < plan.k(); ++j)
    for (int i = 0; i < plan.n(); ++i)
      out(i, j) = bounds.low[j] + plan.points(i, j) * (bounds.high[j] - bounds.low[j]);
  return out;
}

// Synthetic stand-in for an unplanned industrial design: tight isotropic
// clusters plus, in 2-D and above, a share of points strung along
// axis-aligned "lanes".
inline SamplingPlan generate_clustered_design(int n, int k, int n_clusters, double spread,
                                              std::uint64_t seed) {
  if (n < 2) throw invalid_argument_error("generate_clustered_design requires n >= 2");
  if (k < 1) throw invalid_argument_error("generate_clustered_design requires k >= 1");
  if (n_clusters < 1) throw invalid_argument_error("generate_clustered_design requires n_clusters >= 1");
  if (!(spread > 0.0 && spread < 0.5))
    throw invalid_argument_error("generate_clustered_design requires 0 < spread < 0.5");

  Rng rng(seed);
  Matrix centers(n_clusters, k);
  for (int c = 0; c < n_clusters; ++c)
    for (int j = 0; j < k; ++j) centers(c, j) = rng.uniform(0.15, 0.85);

  const int n_lanes = (k >= 2 && n_clusters >= 2) ? std::min(2, n_clusters - 1) : 0;
  const int n_lane_points = (n_lanes > 0) ? n / 5 : 0;
  const int n_cluster_points = n - n_lane_points;

  struct Lane {
    int axis;
    Vector base;
  };
  std::vector<Lane> lanes;
  for (int l = 0; l < n_lanes; ++l) {
    Lane lane;
    lane.axis = rng.uniform_int(k);
    lane.base = Vector(k);
    for (int j = 0; j < k; ++j) lane.base[j] = rng.uniform(0.1, 0.9);
    lanes.push_back(std::move(lane));
  }

  Matrix pts(n, k);
  for (int i = 0; i < n_cluster_points; ++i) {
    const int c = i % n_clusters;
    for (int j = 0; j < k; ++j)
      pts(i, j) = std::clamp(centers(c, j) + spread * rng.normal(), 0.0, 1.0);
  }
  for (int i = 0; i < n_lane_points; ++i) {
    const Lane& lane = lanes[static_cast<std::size_t>(i % n_lanes)];
    const int row = n_cluster_points + i;
    for (int j = 0; j < k; ++j) {
      if (j == lane.axis)
        pts(row, j) = rng.uniform(0.1, 0.9);
      else
        pts(row, j) = std::clamp(lane.base[j] + (spread / 3.0) * rng.normal(), 0.0, 1.0);
    }
  }
  return SamplingPlan(std::move(pts));
}

// Two fixed smooth multimodal target functions of the inputs, optionally
// perturbed with Gaussian noise, then min-max rescaled per column. See the
// README for the exact formulas.
inline SyntheticDataset generate_synthetic_targets(const SamplingPlan& X, std::uint64_t seed,
                                                   double noise_sigma = 0.0) {
  if (noise_sigma < 0.0) throw invalid_argument_error("noise_sigma must be >= 0");
  const int n = X.n();
  const int k = X.k();
  Matrix z(n, 2);
  for (int i = 0; i < n; ++i) {
    double g1 = 0.0;
    double s_lo = 0.0;
    double s_hi = 0.0;
    for (int j = 0; j < k; ++j) {
      const double x = X.points(i, j);
      g1 += std::sin(2.7 * std::numbers::pi * x + 0.4 * j) / (1.0 + 0.3 * j);
      s_lo += (x - 0.3) * (x - 0.3);
      s_hi += (x - 0.75) * (x - 0.75);
    }
    z(i, 0) = g1;
    z(i, 1) = std::exp(-6.0 * s_lo) + 0.6 * std::exp(-12.0 * s_hi);
  }
  if (noise_sigma > 0.0) {
    Rng rng(derive_seed(seed, 0x7a67ull));
    for (int j = 0; j < 2; ++j)
      for (int i = 0; i < n; ++i) z(i, j) += noise_sigma * rng.normal();
  }
  for (int j = 0; j < 2; ++j) {
    const double lo = z.col(j).minCoeff();
    const double hi = z.col(j).maxCoeff();
    const double span = hi - lo;
    for (int i = 0; i < n; ++i) z(i, j) = (span > 0.0) ? (z(i, j) - lo) / span : 0.0;
  }
  return SyntheticDataset{X, std::move(z), default_names(2, "z")};
}

}  // namespace infill
