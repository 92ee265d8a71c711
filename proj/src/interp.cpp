#include "mdopt/interp.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace mdopt {

MonotoneCurve::MonotoneCurve(Vec xs, Vec ys) {
  assert(xs.size() == ys.size() && xs.size() >= 2);
  const int n = static_cast<int>(xs.size());
  Vec d(n - 1), m(n);
  for (int i = 0; i + 1 < n; ++i)
    d[i] = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
  m[0] = d[0];
  m[n - 1] = d[n - 2];
  for (int i = 1; i + 1 < n; ++i) {
    if (d[i - 1] * d[i] <= 0.0) {
      m[i] = 0.0;
    } else {
      m[i] = 0.5 * (d[i - 1] + d[i]);
    }
  }
  // Fritsch-Carlson limiter: keep each interval's tangents within 3x its
  // secant so the cubic stays monotone on the interval.
  for (int i = 0; i + 1 < n; ++i) {
    if (d[i] == 0.0) {
      m[i] = m[i + 1] = 0.0;
      continue;
    }
    const double a = m[i] / d[i];
    const double b = m[i + 1] / d[i];
    if (a > 3.0) m[i] = 3.0 * d[i];
    if (b > 3.0) m[i + 1] = 3.0 * d[i];
    if (a < 0.0) m[i] = 0.0;
    if (b < 0.0) m[i + 1] = 0.0;
  }
  auto data = std::make_shared<Data>();
  data->xs = std::move(xs);
  data->ys = std::move(ys);
  data->ms = std::move(m);
  d_ = std::move(data);
}

double MonotoneCurve::x_min() const { return d_->xs.front(); }
double MonotoneCurve::x_max() const { return d_->xs.back(); }

namespace {
int interval_of(const Vec& xs, double x) {
  const int n = static_cast<int>(xs.size());
  if (x <= xs.front()) return 0;
  if (x >= xs[n - 2]) return n - 2;
  const int k = static_cast<int>(std::upper_bound(xs.begin(), xs.end(), x) -
                                 xs.begin()) -
                1;
  return std::clamp(k, 0, n - 2);
}
}  // namespace

double MonotoneCurve::operator()(double x) const {
  const auto& xs = d_->xs;
  const auto& ys = d_->ys;
  const auto& ms = d_->ms;
  x = std::clamp(x, xs.front(), xs.back());
  const int i = interval_of(xs, x);
  const double h = xs[i + 1] - xs[i];
  const double t = (x - xs[i]) / h;
  const double t2 = t * t, t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * ys[i] + (t3 - 2 * t2 + t) * h * ms[i] +
         (-2 * t3 + 3 * t2) * ys[i + 1] + (t3 - t2) * h * ms[i + 1];
}

double MonotoneCurve::deriv(double x) const {
  const auto& xs = d_->xs;
  const auto& ys = d_->ys;
  const auto& ms = d_->ms;
  x = std::clamp(x, xs.front(), xs.back());
  const int i = interval_of(xs, x);
  const double h = xs[i + 1] - xs[i];
  const double t = (x - xs[i]) / h;
  const double t2 = t * t;
  return ((6 * t2 - 6 * t) * ys[i] + (3 * t2 - 4 * t + 1) * h * ms[i] +
          (-6 * t2 + 6 * t) * ys[i + 1] + (3 * t2 - 2 * t) * h * ms[i + 1]) /
         h;
}

}  // namespace mdopt
