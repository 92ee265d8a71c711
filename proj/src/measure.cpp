#include "mdopt/measure.hpp"

#include <cmath>

namespace mdopt {

namespace {
double clamp_sign(double v, int clamp) {
  if (clamp > 0) return std::max(v, 0.0);
  if (clamp < 0) return std::max(-v, 0.0);
  return v;
}
}  // namespace

double SignedMeasure::clamped_mass(const Region& region, int clamp,
                                   double tol) const {
  const int n = dim();
  const Box& b = box();
  double total = 0.0;

  auto interior = [this, clamp](const Vec& x) {
    return clamp_sign(interior_density(x), clamp);
  };
  total += integrate_region(interior, b, region, tol);

  for (int axis = 0; axis < n; ++axis) {
    for (int orient : {+1, -1}) {
      const double value = orient > 0 ? b.hi[axis] : b.lo[axis];
      if (n == 1) {
        Vec p(1, value);
        if (region.contains(p, 1e-12))
          total += clamp_sign(facet_density(axis, orient, p), clamp);
        continue;
      }
      auto surf = [this, axis, orient, clamp](const Vec& x) {
        return clamp_sign(facet_density(axis, orient, x), clamp);
      };
      total += integrate_facet(surf, b, region, axis, value, tol);
    }
  }

  for (const Atom& a : atoms())
    if (region.contains(a.point, 1e-12)) total += clamp_sign(a.weight, clamp);
  return total;
}

double SignedMeasure::mass(const Region& region, double tol) const {
  return clamped_mass(region, 0, tol);
}
double SignedMeasure::positive_mass(const Region& region, double tol) const {
  return clamped_mass(region, +1, tol);
}
double SignedMeasure::negative_mass(const Region& region, double tol) const {
  return clamped_mass(region, -1, tol);
}
double SignedMeasure::total_mass(double tol) const {
  return mass(Region::all(dim()), tol);
}

double SignedMeasure::integrate(const std::function<double(const Vec&)>& g,
                                const Region& region, double tol) const {
  const int n = dim();
  const Box& b = box();
  double total = 0.0;

  auto interior = [this, &g](const Vec& x) {
    return g(x) * interior_density(x);
  };
  total += integrate_region(interior, b, region, tol);

  for (int axis = 0; axis < n; ++axis) {
    for (int orient : {+1, -1}) {
      const double value = orient > 0 ? b.hi[axis] : b.lo[axis];
      if (n == 1) {
        Vec p(1, value);
        if (region.contains(p, 1e-12))
          total += g(p) * facet_density(axis, orient, p);
        continue;
      }
      auto surf = [this, axis, orient, &g](const Vec& x) {
        return g(x) * facet_density(axis, orient, x);
      };
      total += integrate_facet(surf, b, region, axis, value, tol);
    }
  }

  for (const Atom& a : atoms())
    if (region.contains(a.point, 1e-12)) total += g(a.point) * a.weight;
  return total;
}

TransformedMeasure::TransformedMeasure(ProductDensity density)
    : density_(std::move(density)) {
  atoms_.push_back({density_.box().lo, 1.0});
}

double TransformedMeasure::interior_density(const Vec& x) const {
  const int n = dim();
  const Vec grad = density_.eval_gradient(x);
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += grad[i] * x[i];
  return -(s + (n + 1) * density_.eval_density(x));
}

double TransformedMeasure::facet_density(int axis, int orient, Vec x) const {
  const Box& b = box();
  x[axis] = orient > 0 ? b.hi[axis] : b.lo[axis];
  const double f = density_.eval_density(x);
  return orient > 0 ? f * b.hi[axis] : -f * b.lo[axis];
}

HypercubeMeasure::HypercubeMeasure(int n, double c) : n_(n), c_(c) {
  box_.lo.assign(n, 0.0);
  box_.hi.assign(n, 1.0);
  atoms_.push_back({Vec(n, 0.0), 1.0});
}

double HypercubeMeasure::interior_density(const Vec&) const {
  return -(n_ + 1.0);
}

double HypercubeMeasure::facet_density(int /*axis*/, int orient, Vec) const {
  return orient > 0 ? c_ + 1.0 : -c_;
}

}  // namespace mdopt
