#pragma once

#include <memory>

#include "mdopt/core.hpp"

namespace mdopt {

// Monotone piecewise-cubic interpolant (Fritsch-Carlson tangents): preserves
// the monotonicity of the sample data and clamps evaluation to the sample
// range.  Copyable cheaply (shared immutable data).
class MonotoneCurve {
 public:
  MonotoneCurve() = default;
  MonotoneCurve(Vec xs, Vec ys);  // xs strictly increasing, same length as ys

  double operator()(double x) const;
  double deriv(double x) const;

  double x_min() const;
  double x_max() const;
  bool empty() const { return !d_; }

 private:
  struct Data {
    Vec xs, ys, ms;  // nodes, values, tangents
  };
  std::shared_ptr<const Data> d_;
};

}  // namespace mdopt
