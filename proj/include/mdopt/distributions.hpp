#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mdopt/core.hpp"

namespace mdopt {

// One-dimensional value distribution of a single good, given by its density on
// a bounded support interval. Families with unbounded support (exponential,
// power-law) are truncated and renormalized; the truncation point is chosen so
// the discarded tail is negligible, and can be overridden.
class MarginalDensity {
 public:
  enum class Family { kUniform, kBeta, kExponential, kPowerLaw };

  static MarginalDensity uniform(double a, double b);
  // Beta(a, b) on [0, 1] with a, b >= 1 (density z^(a-1) (1-z)^(b-1) / B(a,b)).
  static MarginalDensity beta(double a, double b);
  // Exponential(lambda), truncated to [0, T]; default T = 14 / lambda
  // (discarded tail ~8e-7).
  static MarginalDensity exponential(double lambda,
                                     std::optional<double> T = std::nullopt);
  // Density (k-1) / (1+z)^k on [0, inf), truncated to [0, T]; default T makes
  // the discarded tail (1+T)^(1-k) < 1e-6.
  static MarginalDensity power_law(double k, std::optional<double> T = std::nullopt);

  Family family() const { return family_; }
  double param_a() const { return a_; }
  double param_b() const { return b_; }
  double support_lo() const { return lo_; }
  double support_hi() const { return hi_; }

  double pdf(double z) const;
  double pdf_deriv(double z) const;
  double cdf(double z) const;

  // Myerson virtual value z - (1 - F(z)) / f(z).
  double virtual_value(double z) const;

  std::string family_name() const;

 private:
  MarginalDensity(Family f, double a, double b, double lo, double hi, double norm)
      : family_(f), a_(a), b_(b), lo_(lo), hi_(hi), norm_(norm) {}

  Family family_;
  double a_ = 0, b_ = 0;   // family parameters
  double lo_ = 0, hi_ = 0; // support
  double norm_ = 1;        // mass kept after truncation (divides the raw pdf)
};

// Product of independent marginals: the buyer's type density on the box.
class ProductDensity {
 public:
  explicit ProductDensity(std::vector<MarginalDensity> marginals);

  int dim() const { return static_cast<int>(marginals_.size()); }
  const MarginalDensity& marginal(int i) const { return marginals_[i]; }
  const Box& box() const { return box_; }

  double eval_density(const Vec& x) const;
  // Gradient of the joint density.
  Vec eval_gradient(const Vec& x) const;
  // Virtual value of coordinate i at level z.
  double virtual_value(int i, double z) const { return marginals_[i].virtual_value(z); }

 private:
  std::vector<MarginalDensity> marginals_;
  Box box_;
};

}  // namespace mdopt
