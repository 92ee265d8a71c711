#include "mdopt/distributions.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>

#include "mdopt/quadrature.hpp"

namespace mdopt {

void log_line(LogLevel lvl, const std::string& msg) {
  if (static_cast<int>(log_level()) >= static_cast<int>(lvl))
    std::cerr << "[mdopt] " << msg << "\n";
}

MarginalDensity MarginalDensity::uniform(double a, double b) {
  if (!(a < b)) throw std::invalid_argument("uniform: need a < b");
  return MarginalDensity(Family::kUniform, a, b, a, b, 1.0);
}

MarginalDensity MarginalDensity::beta(double a, double b) {
  if (!(a >= 1.0) || !(b >= 1.0))
    throw std::invalid_argument("beta: need shape parameters >= 1");
  return MarginalDensity(Family::kBeta, a, b, 0.0, 1.0, 1.0);
}

MarginalDensity MarginalDensity::exponential(double lambda, std::optional<double> T) {
  if (!(lambda > 0)) throw std::invalid_argument("exponential: need lambda > 0");
  const double t = T.value_or(14.0 / lambda);
  const double norm = 1.0 - std::exp(-lambda * t);
  return MarginalDensity(Family::kExponential, lambda, 0.0, 0.0, t, norm);
}

MarginalDensity MarginalDensity::power_law(double k, std::optional<double> T) {
  if (!(k > 1.0)) throw std::invalid_argument("power_law: need k > 1");
  // Tail beyond T is (1+T)^(1-k); keep it below 1e-6 by default.
  const double t = T.value_or(std::pow(10.0, 6.0 / (k - 1.0)) - 1.0 + 1e-3);
  const double norm = 1.0 - std::pow(1.0 + t, 1.0 - k);
  return MarginalDensity(Family::kPowerLaw, k, 0.0, 0.0, t, norm);
}

double MarginalDensity::pdf(double z) const {
  if (z < lo_ || z > hi_) return 0.0;
  switch (family_) {
    case Family::kUniform:
      return 1.0 / (b_ - a_);
    case Family::kBeta: {
      const double lb = std::lgamma(a_) + std::lgamma(b_) - std::lgamma(a_ + b_);
      double v = 1.0;
      if (a_ != 1.0) v *= std::pow(z, a_ - 1.0);
      if (b_ != 1.0) v *= std::pow(1.0 - z, b_ - 1.0);
      return v * std::exp(-lb);
    }
    case Family::kExponential:
      return a_ * std::exp(-a_ * z) / norm_;
    case Family::kPowerLaw:
      return (a_ - 1.0) / std::pow(1.0 + z, a_) / norm_;
  }
  return 0.0;
}

double MarginalDensity::pdf_deriv(double z) const {
  if (z < lo_ || z > hi_) return 0.0;
  switch (family_) {
    case Family::kUniform:
      return 0.0;
    case Family::kBeta: {
      // f'(z) = f(z) * ((a-1)/z - (b-1)/(1-z)), with the singular terms absent
      // when the corresponding exponent vanishes.
      double s = 0.0;
      if (a_ != 1.0) s += (a_ - 1.0) / z;
      if (b_ != 1.0) s -= (b_ - 1.0) / (1.0 - z);
      return pdf(z) * s;
    }
    case Family::kExponential:
      return -a_ * pdf(z);
    case Family::kPowerLaw:
      return -a_ / (1.0 + z) * pdf(z);
  }
  return 0.0;
}

double MarginalDensity::cdf(double z) const {
  if (z <= lo_) return 0.0;
  if (z >= hi_) return 1.0;
  switch (family_) {
    case Family::kUniform:
      return (z - a_) / (b_ - a_);
    case Family::kBeta: {
      if (a_ == 1.0) return 1.0 - std::pow(1.0 - z, b_);  // closed form
      if (b_ == 1.0) return std::pow(z, a_);
      // General case: integrate the density (smooth for shapes >= 1).
      return integrate_1d([this](double t) { return pdf(t); }, 0.0, z, 1e-12, 40);
    }
    case Family::kExponential:
      return (1.0 - std::exp(-a_ * z)) / norm_;
    case Family::kPowerLaw:
      return (1.0 - std::pow(1.0 + z, 1.0 - a_)) / norm_;
  }
  return 0.0;
}

double MarginalDensity::virtual_value(double z) const {
  return z - (1.0 - cdf(z)) / pdf(z);
}

std::string MarginalDensity::family_name() const {
  switch (family_) {
    case Family::kUniform: return "uniform";
    case Family::kBeta: return "beta";
    case Family::kExponential: return "exponential";
    case Family::kPowerLaw: return "power_law";
  }
  return "?";
}

ProductDensity::ProductDensity(std::vector<MarginalDensity> marginals)
    : marginals_(std::move(marginals)) {
  if (marginals_.empty()) throw std::invalid_argument("ProductDensity: empty");
  Vec lo, hi;
  for (const auto& m : marginals_) {
    lo.push_back(m.support_lo());
    hi.push_back(m.support_hi());
  }
  box_ = Box(lo, hi);
}

double ProductDensity::eval_density(const Vec& x) const {
  double v = 1.0;
  for (int i = 0; i < dim(); ++i) v *= marginals_[i].pdf(x[i]);
  return v;
}

Vec ProductDensity::eval_gradient(const Vec& x) const {
  // d/dx_i of prod f_j = f_i'(x_i) * prod_{j != i} f_j(x_j).
  Vec g(dim());
  for (int i = 0; i < dim(); ++i) {
    double v = marginals_[i].pdf_deriv(x[i]);
    for (int j = 0; j < dim(); ++j)
      if (j != i) v *= marginals_[j].pdf(x[j]);
    g[i] = v;
  }
  return g;
}

}  // namespace mdopt
