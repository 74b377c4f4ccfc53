#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include "infill/design.hpp"
#include "infill/errors.hpp"
#include "infill/rng.hpp"
#include "infill/surrogate.hpp"
#include "infill/types.hpp"

namespace infill {

struct ForestConfig {
  int n_estimators = 100;
  std::optional<int> max_depth;  // empty = grow until pure
  int min_samples_leaf = 1;
  bool bootstrap = true;
  std::uint64_t seed = 0;

  void validate() const {
    if (n_estimators < 1) throw invalid_argument_error("n_estimators must be >= 1");
    if (min_samples_leaf < 1) throw invalid_argument_error("min_samples_leaf must be >= 1");
    if (max_depth && *max_depth < 0) throw invalid_argument_error("max_depth must be >= 0");
  }
};

namespace detail {

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  Vector value;  // per-target leaf mean
};

// CART regression tree with exact split search over midpoints of sorted
// unique feature values. The split criterion is the summed per-target
// within-node squared error; ties go to the lowest feature index, then the
// lowest threshold.
class RegressionTree {
 public:
  void fit(const Matrix& X, const Matrix& Y, std::vector<int> rows, const ForestConfig& cfg) {
    nodes_.clear();
    build(X, Y, std::move(rows), cfg, 0);
  }

  Vector predict_row(const Eigen::Ref<const Eigen::RowVectorXd>& x) const {
    int node = 0;
    while (nodes_[static_cast<std::size_t>(node)].feature >= 0) {
      const TreeNode& nd = nodes_[static_cast<std::size_t>(node)];
      node = (x[nd.feature] <= nd.threshold) ? nd.left : nd.right;
    }
    return nodes_[static_cast<std::size_t>(node)].value;
  }

 private:
  std::vector<TreeNode> nodes_;

  static Vector leaf_value(const Matrix& Y, const std::vector<int>& rows) {
    const int p = static_cast<int>(Y.cols());
    Vector value(p);
    for (int t = 0; t < p; ++t) {
      double lo = std::numeric_limits<double>::infinity();
      double hi = -lo;
      double sum = 0.0;
      for (const int r : rows) {
        const double y = Y(r, t);
        lo = std::min(lo, y);
        hi = std::max(hi, y);
        sum += y;
      }
      // Constant targets reproduce exactly instead of accumulating rounding.
      value[t] = (lo == hi) ? lo : sum / static_cast<double>(rows.size());
    }
    return value;
  }

  static bool is_pure(const Matrix& Y, const std::vector<int>& rows) {
    for (int t = 0; t < Y.cols(); ++t)
      for (std::size_t i = 1; i < rows.size(); ++i)
        if (Y(rows[i], t) != Y(rows[0], t)) return false;
    return true;
  }

  int build(const Matrix& X, const Matrix& Y, std::vector<int> rows, const ForestConfig& cfg,
            int depth) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back(TreeNode{});

    const int m = static_cast<int>(rows.size());
    const bool depth_capped = cfg.max_depth && depth >= *cfg.max_depth;
    if (m < 2 * cfg.min_samples_leaf || m < 2 || depth_capped || is_pure(Y, rows)) {
      nodes_[static_cast<std::size_t>(id)].value = leaf_value(Y, rows);
      return id;
    }

    const int p = static_cast<int>(Y.cols());
    double best_score = std::numeric_limits<double>::infinity();
    int best_feature = -1;
    double best_threshold = 0.0;

    std::vector<int> order(rows);
    std::vector<double> sum_l(static_cast<std::size_t>(p));
    std::vector<double> sq_l(static_cast<std::size_t>(p));
    std::vector<double> sum_all(static_cast<std::size_t>(p));
    std::vector<double> sq_all(static_cast<std::size_t>(p));
    for (int t = 0; t < p; ++t) {
      double s = 0.0, s2 = 0.0;
      for (const int r : rows) {
        s += Y(r, t);
        s2 += Y(r, t) * Y(r, t);
      }
      sum_all[static_cast<std::size_t>(t)] = s;
      sq_all[static_cast<std::size_t>(t)] = s2;
    }

    for (int f = 0; f < X.cols(); ++f) {
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return X(a, f) < X(b, f); });
      if (X(order.front(), f) == X(order.back(), f)) continue;  // constant feature

      std::fill(sum_l.begin(), sum_l.end(), 0.0);
      std::fill(sq_l.begin(), sq_l.end(), 0.0);
      for (int i = 0; i < m - 1; ++i) {
        const int r = order[static_cast<std::size_t>(i)];
        for (int t = 0; t < p; ++t) {
          sum_l[static_cast<std::size_t>(t)] += Y(r, t);
          sq_l[static_cast<std::size_t>(t)] += Y(r, t) * Y(r, t);
        }
        const double xa = X(r, f);
        const double xb = X(order[static_cast<std::size_t>(i + 1)], f);
        if (xa == xb) continue;  // not a boundary between distinct values
        const int nl = i + 1;
        const int nr = m - nl;
        if (nl < cfg.min_samples_leaf || nr < cfg.min_samples_leaf) continue;
        double score = 0.0;
        for (int t = 0; t < p; ++t) {
          const std::size_t ti = static_cast<std::size_t>(t);
          const double sr = sum_all[ti] - sum_l[ti];
          const double qr = sq_all[ti] - sq_l[ti];
          score += (sq_l[ti] - sum_l[ti] * sum_l[ti] / nl) + (qr - sr * sr / nr);
        }
        if (score < best_score) {
          best_score = score;
          best_feature = f;
          best_threshold = (xa + xb) / 2.0;
        }
      }
    }

    if (best_feature < 0) {  // all features constant on this node
      nodes_[static_cast<std::size_t>(id)].value = leaf_value(Y, rows);
      return id;
    }

    std::vector<int> left_rows, right_rows;
    for (const int r : rows)
      (X(r, best_feature) <= best_threshold ? left_rows : right_rows).push_back(r);
    rows.clear();
    rows.shrink_to_fit();

    const int left = build(X, Y, std::move(left_rows), cfg, depth + 1);
    const int right = build(X, Y, std::move(right_rows), cfg, depth + 1);
    TreeNode& node = nodes_[static_cast<std::size_t>(id)];
    node.feature = best_feature;
    node.threshold = best_threshold;
    node.left = left;
    node.right = right;
    return id;
  }
};

}  // namespace detail

// Bagged ensemble of multi-output CART trees; predictions are the mean over
// trees. Fully deterministic per (data, config, seed).
class RandomForest final : public Surrogate {
 public:
  RandomForest(const Matrix& X, const Matrix& Y, ForestConfig cfg) : cfg_(cfg) {
    cfg.validate();
    if (X.rows() < 2) throw invalid_data_error("fit_forest requires at least 2 samples");
    if (Y.rows() != X.rows()) throw invalid_data_error("X and Y row counts differ");
    if (Y.cols() < 1) throw invalid_data_error("Y must have at least one target column");
    if (!X.allFinite() || !Y.allFinite())
      throw invalid_data_error("training data contains non-finite values");
    input_dim_ = static_cast<int>(X.cols());
    output_dim_ = static_cast<int>(Y.cols());

    const int n = static_cast<int>(X.rows());
    trees_.resize(static_cast<std::size_t>(cfg.n_estimators));
    for (int t = 0; t < cfg.n_estimators; ++t) {
      Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(t)));
      std::vector<int> rows(static_cast<std::size_t>(n));
      if (cfg.bootstrap)
        for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)] = rng.uniform_int(n);
      else
        std::iota(rows.begin(), rows.end(), 0);
      trees_[static_cast<std::size_t>(t)].fit(X, Y, std::move(rows), cfg);
    }
  }

  int input_dim() const override { return input_dim_; }
  int output_dim() const override { return output_dim_; }
  const ForestConfig& config() const { return cfg_; }

 protected:
  Matrix predict_impl(const Matrix& X_new) const override {
    Matrix out = Matrix::Zero(X_new.rows(), output_dim_);
    for (int i = 0; i < X_new.rows(); ++i) {
      Vector acc = Vector::Zero(output_dim_);
      Vector lo = Vector::Constant(output_dim_, std::numeric_limits<double>::infinity());
      Vector hi = -lo;
      for (const auto& tree : trees_) {
        const Vector v = tree.predict_row(X_new.row(i));
        acc += v;
        lo = lo.cwiseMin(v);
        hi = hi.cwiseMax(v);
      }
      for (int t = 0; t < output_dim_; ++t)
        // Unanimous trees reproduce the value without averaging noise.
        out(i, t) = (lo[t] == hi[t]) ? lo[t] : acc[t] / static_cast<double>(trees_.size());
    }
    return out;
  }

 private:
  ForestConfig cfg_;
  int input_dim_ = 0;
  int output_dim_ = 0;
  std::vector<detail::RegressionTree> trees_;
};

inline SurrogatePtr fit_forest(const SamplingPlan& X, const Matrix& Y, const ForestConfig& cfg) {
  return std::make_shared<RandomForest>(X.points, Y, cfg);
}

}  // namespace infill
