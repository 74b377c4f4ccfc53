#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "infill/design.hpp"
#include "infill/errors.hpp"
#include "infill/surrogate.hpp"
#include "infill/types.hpp"

namespace infill {

struct GpConfig {
  // Candidate length scales for the marginal-likelihood grid fit. Empty means
  // 25 log-spaced values in [1e-2, 1e1]; a single value fixes the scale.
  std::vector<double> length_scale_grid;
  double signal_variance = 1.0;
  double noise_jitter = 1e-8;

  void validate() const {
    if (!(signal_variance > 0.0)) throw invalid_argument_error("signal_variance must be > 0");
    if (!(noise_jitter > 0.0)) throw invalid_argument_error("noise_jitter must be > 0");
    for (const double l : length_scale_grid)
      if (!(l > 0.0)) throw invalid_argument_error("length scales must be > 0");
  }
};

inline std::vector<double> default_length_scale_grid() {
  std::vector<double> grid(25);
  for (int i = 0; i < 25; ++i) grid[static_cast<std::size_t>(i)] = std::pow(10.0, -2.0 + 3.0 * i / 24.0);
  return grid;
}

// Zero-mean Gaussian process per target with a squared-exponential kernel and
// a single shared length scale, chosen by maximizing the log marginal
// likelihood over the grid. Predictions for all targets are stacked
// column-wise in training order.
class GaussianProcess final : public Surrogate {
 public:
  GaussianProcess(const Matrix& X, const Matrix& Y, GpConfig cfg) : cfg_(cfg) {
    cfg.validate();
    if (X.rows() < 2) throw invalid_data_error("fit_gp requires at least 2 samples");
    if (Y.rows() != X.rows()) throw invalid_data_error("X and Y row counts differ");
    if (!X.allFinite() || !Y.allFinite())
      throw invalid_data_error("training data contains non-finite values");
    X_ = X;
    input_dim_ = static_cast<int>(X.cols());
    output_dim_ = static_cast<int>(Y.cols());

    const std::vector<double> grid =
        cfg.length_scale_grid.empty() ? default_length_scale_grid() : cfg.length_scale_grid;
    const Matrix sq_dists = squared_distances(X);

    alphas_.resize(static_cast<std::size_t>(output_dim_));
    length_scales_.resize(static_cast<std::size_t>(output_dim_));
    for (int t = 0; t < output_dim_; ++t) {
      double best_lml = -std::numeric_limits<double>::infinity();
      Vector best_alpha;
      double best_scale = grid.front();
      for (const double scale : grid) {
        Vector alpha;
        const double lml = fit_scale(sq_dists, Y.col(t), scale, alpha);
        if (lml > best_lml) {
          best_lml = lml;
          best_alpha = std::move(alpha);
          best_scale = scale;
        }
      }
      alphas_[static_cast<std::size_t>(t)] = std::move(best_alpha);
      length_scales_[static_cast<std::size_t>(t)] = best_scale;
    }
  }

  int input_dim() const override { return input_dim_; }
  int output_dim() const override { return output_dim_; }
  const std::vector<double>& length_scales() const { return length_scales_; }

 protected:
  Matrix predict_impl(const Matrix& X_new) const override {
    Matrix out(X_new.rows(), output_dim_);
    for (int i = 0; i < X_new.rows(); ++i) {
      for (int t = 0; t < output_dim_; ++t) {
        const double ls = length_scales_[static_cast<std::size_t>(t)];
        const Vector& alpha = alphas_[static_cast<std::size_t>(t)];
        double mean = 0.0;
        for (int a = 0; a < X_.rows(); ++a) {
          const double sq = (X_.row(a) - X_new.row(i)).squaredNorm();
          mean += alpha[a] * cfg_.signal_variance * std::exp(-sq / (2.0 * ls * ls));
        }
        out(i, t) = mean;
      }
    }
    return out;
  }

 private:
  GpConfig cfg_;
  Matrix X_;
  int input_dim_ = 0;
  int output_dim_ = 0;
  std::vector<Vector> alphas_;
  std::vector<double> length_scales_;

  static Matrix squared_distances(const Matrix& X) {
    const int n = static_cast<int>(X.rows());
    Matrix out(n, n);
    for (int a = 0; a < n; ++a) {
      out(a, a) = 0.0;
      for (int b = a + 1; b < n; ++b) {
        const double sq = (X.row(a) - X.row(b)).squaredNorm();
        out(a, b) = out(b, a) = sq;
      }
    }
    return out;
  }

  // Returns the log marginal likelihood for one length scale, escalating the
  // diagonal jitter up to 1e-4 if the Cholesky factorization fails.
  double fit_scale(const Matrix& sq_dists, const Vector& y, double scale, Vector& alpha) const {
    const int n = static_cast<int>(y.size());
    Matrix kernel(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        kernel(a, b) = cfg_.signal_variance * std::exp(-sq_dists(a, b) / (2.0 * scale * scale));

    double jitter = cfg_.noise_jitter;
    while (true) {
      Matrix k = kernel + jitter * Matrix::Identity(n, n);
      Eigen::LLT<Matrix> llt(k);
      if (llt.info() == Eigen::Success) {
        alpha = llt.solve(y);
        double log_det_half = 0.0;
        for (int i = 0; i < n; ++i) log_det_half += std::log(llt.matrixL()(i, i));
        return -0.5 * y.dot(alpha) - log_det_half -
               0.5 * n * std::log(2.0 * std::numbers::pi);
      }
      jitter *= 10.0;
      if (jitter > 1e-4)
        throw numerical_error("GP kernel is not positive definite after jitter escalation");
    }
  }
};

inline SurrogatePtr fit_gp(const SamplingPlan& X, const Matrix& Y, const GpConfig& cfg) {
  return std::make_shared<GaussianProcess>(X.points, Y, cfg);
}

}  // namespace infill
