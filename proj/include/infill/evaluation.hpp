#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "infill/design.hpp"
#include "infill/errors.hpp"
#include "infill/forest.hpp"
#include "infill/gp.hpp"
#include "infill/numfmt.hpp"
#include "infill/rng.hpp"
#include "infill/surrogate.hpp"

namespace infill {

// A named way to fit a surrogate; lets the harnesses evaluate several model
// families side by side.
struct ModelSpec {
  std::string name;
  std::function<SurrogatePtr(const SamplingPlan&, const Matrix&)> fit;
};

inline ModelSpec forest_model(ForestConfig cfg = {}, std::string name = "Random Forest") {
  return ModelSpec{std::move(name), [cfg](const SamplingPlan& X, const Matrix& Y) {
                     return fit_forest(X, Y, cfg);
                   }};
}

inline ModelSpec gp_model(GpConfig cfg = {}, std::string name = "Gaussian Process") {
  return ModelSpec{std::move(name),
                   [cfg](const SamplingPlan& X, const Matrix& Y) { return fit_gp(X, Y, cfg); }};
}

inline std::vector<double> mse_per_target(const Matrix& y_true, const Matrix& y_pred) {
  std::vector<double> out(static_cast<std::size_t>(y_true.cols()));
  for (int t = 0; t < y_true.cols(); ++t)
    out[static_cast<std::size_t>(t)] =
        (y_true.col(t) - y_pred.col(t)).squaredNorm() / static_cast<double>(y_true.rows());
  return out;
}

inline std::vector<double> mae_per_target(const Matrix& y_true, const Matrix& y_pred) {
  std::vector<double> out(static_cast<std::size_t>(y_true.cols()));
  for (int t = 0; t < y_true.cols(); ++t)
    out[static_cast<std::size_t>(t)] =
        (y_true.col(t) - y_pred.col(t)).cwiseAbs().sum() / static_cast<double>(y_true.rows());
  return out;
}

struct HoldoutMetrics {
  std::string model;
  std::vector<double> mse;  // per target
  std::vector<double> mae;  // per target
  Matrix y_true;            // test rows, for predicted-vs-actual plots
  Matrix y_pred;
};

struct HoldoutReport {
  std::vector<int> train_rows;
  std::vector<int> test_rows;
  std::vector<HoldoutMetrics> models;
};

// Seeded shuffle split. The test size is round-half-up of test_size * n, so
// e.g. 0.3 * 213 = 63.9 gives 64 test rows.
inline HoldoutReport train_test_evaluate(const SamplingPlan& X, const Matrix& Y, double test_size,
                                         const std::vector<ModelSpec>& models,
                                         std::uint64_t seed) {
  if (!(test_size > 0.0 && test_size < 1.0))
    throw invalid_argument_error("test_size must lie in (0, 1)");
  if (Y.rows() != X.n()) throw invalid_data_error("X and Y row counts differ");
  const int n = X.n();
  const int n_test = static_cast<int>(std::floor(test_size * n + 0.5));
  const int n_train = n - n_test;
  if (n_train < 2) throw invalid_argument_error("split leaves fewer than 2 training rows");
  if (n_test < 1) throw invalid_argument_error("split leaves no test rows");

  Rng rng(seed);
  std::vector<int> order = rng.permutation(n);
  HoldoutReport report;
  report.test_rows.assign(order.begin(), order.begin() + n_test);
  report.train_rows.assign(order.begin() + n_test, order.end());

  Matrix x_train(n_train, X.k()), y_train(n_train, Y.cols());
  Matrix x_test(n_test, X.k()), y_test(n_test, Y.cols());
  for (int i = 0; i < n_train; ++i) {
    x_train.row(i) = X.points.row(report.train_rows[static_cast<std::size_t>(i)]);
    y_train.row(i) = Y.row(report.train_rows[static_cast<std::size_t>(i)]);
  }
  for (int i = 0; i < n_test; ++i) {
    x_test.row(i) = X.points.row(report.test_rows[static_cast<std::size_t>(i)]);
    y_test.row(i) = Y.row(report.test_rows[static_cast<std::size_t>(i)]);
  }

  const SamplingPlan train_plan(x_train, default_names(X.k(), "x"));
  for (const auto& spec : models) {
    const SurrogatePtr model = spec.fit(train_plan, y_train);
    HoldoutMetrics metrics;
    metrics.model = spec.name;
    metrics.y_true = y_test;
    metrics.y_pred = model->predict(x_test);
    metrics.mse = mse_per_target(metrics.y_true, metrics.y_pred);
    metrics.mae = mae_per_target(metrics.y_true, metrics.y_pred);
    report.models.push_back(std::move(metrics));
  }
  return report;
}

struct CvStats {
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation over folds
  double min = 0.0;
  double max = 0.0;
};

inline CvStats cv_stats(const std::vector<double>& values) {
  CvStats stats;
  stats.min = *std::min_element(values.begin(), values.end());
  stats.max = *std::max_element(values.begin(), values.end());
  for (const double v : values) stats.mean += v;
  stats.mean /= static_cast<double>(values.size());
  double var = 0.0;
  for (const double v : values) var += (v - stats.mean) * (v - stats.mean);
  stats.stddev = std::sqrt(var / static_cast<double>(values.size()));
  return stats;
}

struct CvReport {
  std::vector<std::string> targets;
  std::vector<std::string> models;
  std::vector<std::vector<int>> fold_rows;
  // fold scores indexed [model][target][fold]; positive MSE / MAE
  std::vector<std::vector<std::vector<double>>> mse;
  std::vector<std::vector<std::vector<double>>> mae;

  struct Row {
    std::string target;
    std::string model;
    std::string metric;
    CvStats stats;
  };

  // Rows ordered target, then metric (MSE before MAE), then model.
  std::vector<Row> summary() const {
    std::vector<Row> rows;
    for (std::size_t t = 0; t < targets.size(); ++t)
      for (const std::string metric : {"MSE", "MAE"})
        for (std::size_t m = 0; m < models.size(); ++m) {
          const auto& folds = (metric == std::string("MSE")) ? mse[m][t] : mae[m][t];
          rows.push_back(Row{targets[t], models[m], metric, cv_stats(folds)});
        }
    return rows;
  }

  // Pipe-delimited summary: | Target | Model | Metric | Mean | Std | Min | Max |
  // with values rounded to 4 decimals and trailing zeros trimmed.
  std::string to_table() const {
    const std::vector<Row> rows = summary();
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"Target", "Model", "Metric", "Mean", "Std", "Min", "Max"});
    for (const Row& row : rows)
      cells.push_back({row.target, row.model, row.metric, fmt_rounded_trim(row.stats.mean, 4),
                       fmt_rounded_trim(row.stats.stddev, 4), fmt_rounded_trim(row.stats.min, 4),
                       fmt_rounded_trim(row.stats.max, 4)});
    std::vector<std::size_t> width(7, 0);
    for (const auto& row : cells)
      for (std::size_t c = 0; c < 7; ++c) width[c] = std::max(width[c], row[c].size());

    auto pad_left = [](const std::string& s, std::size_t w) {
      return std::string(w - s.size(), ' ') + s;
    };
    auto pad_right = [](const std::string& s, std::size_t w) {
      return s + std::string(w - s.size(), ' ');
    };

    std::string out;
    for (std::size_t r = 0; r < cells.size(); ++r) {
      out += "|";
      for (std::size_t c = 0; c < 7; ++c) {
        const bool numeric = c >= 3;
        const std::string& value = cells[r][c];
        out += " " + (numeric && r > 0 ? pad_left(value, width[c]) : pad_right(value, width[c])) +
               " |";
      }
      out += "\n";
      if (r == 0) {
        out += "|";
        for (std::size_t c = 0; c < 7; ++c) {
          const bool numeric = c >= 3;
          if (numeric)
            out += std::string(width[c] + 1, '-') + ":|";
          else
            out += ":" + std::string(width[c] + 1, '-') + "|";
        }
        out += "\n";
      }
    }
    return out;
  }

  // Negated per-fold means in the raw sklearn-style convention.
  std::string raw_text() const {
    std::string out;
    for (std::size_t m = 0; m < models.size(); ++m) {
      out += models[m] + "\n";
      for (std::size_t t = 0; t < targets.size(); ++t)
        out += "Cross-validating target " + std::to_string(t + 1) + "/" +
               std::to_string(targets.size()) + "...\n";
      out += "CV Scores Mean:\n";
      auto mean_of = [](const std::vector<double>& folds) {
        double s = 0.0;
        for (const double v : folds) s += v;
        return s / static_cast<double>(folds.size());
      };
      out += "  NMSE: [";
      for (std::size_t t = 0; t < targets.size(); ++t)
        out += std::string(t ? ", " : "") + "'" + fmt_fixed(-mean_of(mse[m][t]), 2) + "'";
      out += "]\n  NMAE: [";
      for (std::size_t t = 0; t < targets.size(); ++t)
        out += std::string(t ? ", " : "") + "'" + fmt_fixed(-mean_of(mae[m][t]), 2) + "'";
      out += "]\n";
    }
    return out;
  }
};

// Seeded k-fold cross-validation; every row lands in exactly one fold. Fold
// scores are stored positive; the raw text view negates them.
inline CvReport cross_validate(const SamplingPlan& X, const Matrix& Y, int k_folds,
                               const std::vector<ModelSpec>& models, std::uint64_t seed,
                               std::vector<std::string> target_names = {}) {
  if (k_folds < 2) throw invalid_argument_error("cross_validate requires k_folds >= 2");
  const int n = X.n();
  if (n < k_folds) throw invalid_argument_error("cross_validate requires n >= k_folds");
  if (Y.rows() != n) throw invalid_data_error("X and Y row counts differ");
  const int p = static_cast<int>(Y.cols());
  if (target_names.empty()) target_names = default_names(p, "z");

  Rng rng(seed);
  const std::vector<int> order = rng.permutation(n);
  std::vector<std::vector<int>> folds(static_cast<std::size_t>(k_folds));
  const int base = n / k_folds;
  const int extra = n % k_folds;
  int cursor = 0;
  for (int f = 0; f < k_folds; ++f) {
    const int size = base + (f < extra ? 1 : 0);
    for (int i = 0; i < size; ++i) folds[static_cast<std::size_t>(f)].push_back(order[cursor++]);
  }

  CvReport report;
  report.targets = std::move(target_names);
  report.fold_rows = folds;
  for (const auto& spec : models) report.models.push_back(spec.name);
  report.mse.assign(models.size(), std::vector<std::vector<double>>(static_cast<std::size_t>(p)));
  report.mae.assign(models.size(), std::vector<std::vector<double>>(static_cast<std::size_t>(p)));

  for (std::size_t m = 0; m < models.size(); ++m) {
    for (int f = 0; f < k_folds; ++f) {
      const std::vector<int>& test_rows = folds[static_cast<std::size_t>(f)];
      std::vector<int> train_rows;
      train_rows.reserve(static_cast<std::size_t>(n - static_cast<int>(test_rows.size())));
      for (int g = 0; g < k_folds; ++g)
        if (g != f)
          train_rows.insert(train_rows.end(), folds[static_cast<std::size_t>(g)].begin(),
                            folds[static_cast<std::size_t>(g)].end());

      Matrix x_train(train_rows.size(), X.k()), y_train(train_rows.size(), p);
      for (std::size_t i = 0; i < train_rows.size(); ++i) {
        x_train.row(static_cast<int>(i)) = X.points.row(train_rows[i]);
        y_train.row(static_cast<int>(i)) = Y.row(train_rows[i]);
      }
      Matrix x_test(test_rows.size(), X.k()), y_test(test_rows.size(), p);
      for (std::size_t i = 0; i < test_rows.size(); ++i) {
        x_test.row(static_cast<int>(i)) = X.points.row(test_rows[i]);
        y_test.row(static_cast<int>(i)) = Y.row(test_rows[i]);
      }

      const SurrogatePtr model =
          models[m].fit(SamplingPlan(x_train, default_names(X.k(), "x")), y_train);
      const Matrix y_pred = model->predict(x_test);
      const std::vector<double> fold_mse = mse_per_target(y_test, y_pred);
      const std::vector<double> fold_mae = mae_per_target(y_test, y_pred);
      for (int t = 0; t < p; ++t) {
        report.mse[m][static_cast<std::size_t>(t)].push_back(fold_mse[static_cast<std::size_t>(t)]);
        report.mae[m][static_cast<std::size_t>(t)].push_back(fold_mae[static_cast<std::size_t>(t)]);
      }
    }
  }
  return report;
}

}  // namespace infill
