#pragma once

#include <functional>
#include <memory>
#include <utility>

#include "infill/errors.hpp"
#include "infill/types.hpp"

namespace infill {

// A trained multi-target regressor over the unit cube.
class Surrogate {
 public:
  virtual ~Surrogate() = default;

  virtual int input_dim() const = 0;
  virtual int output_dim() const = 0;

  // Predicts an m x output_dim matrix; m may be zero.
  Matrix predict(const Matrix& X_new) const {
    if (X_new.cols() != input_dim())
      throw invalid_argument_error("predict: input dimension mismatch");
    if (X_new.rows() == 0) return Matrix(0, output_dim());
    Matrix out = predict_impl(X_new);
    if (!out.allFinite()) throw numerical_error("predict produced non-finite values");
    return out;
  }

  Vector predict_one(const Vector& x) const {
    return predict(x.transpose()).row(0).transpose();
  }

 protected:
  virtual Matrix predict_impl(const Matrix& X_new) const = 0;
};

using SurrogatePtr = std::shared_ptr<const Surrogate>;

// Wraps a plain function as a surrogate; handy for analytic simulators and
// optimizer sanity checks.
class CallableSurrogate final : public Surrogate {
 public:
  using Fn = std::function<Vector(const Vector&)>;

  CallableSurrogate(int input_dim, int output_dim, Fn fn)
      : input_dim_(input_dim), output_dim_(output_dim), fn_(std::move(fn)) {
    if (input_dim_ < 1 || output_dim_ < 1)
      throw invalid_argument_error("CallableSurrogate dimensions must be >= 1");
  }

  int input_dim() const override { return input_dim_; }
  int output_dim() const override { return output_dim_; }

 protected:
  Matrix predict_impl(const Matrix& X_new) const override {
    Matrix out(X_new.rows(), output_dim_);
    for (int i = 0; i < X_new.rows(); ++i)
      out.row(i) = fn_(X_new.row(i).transpose()).transpose();
    return out;
  }

 private:
  int input_dim_;
  int output_dim_;
  Fn fn_;
};

// Surrogate predicting each input coordinate unchanged.
inline SurrogatePtr identity_surrogate(int k) {
  return std::make_shared<CallableSurrogate>(k, k, [](const Vector& x) { return x; });
}

}  // namespace infill
