#pragma once

#include <functional>
#include <vector>

#include "mdopt/core.hpp"
#include "mdopt/distributions.hpp"
#include "mdopt/region.hpp"

namespace mdopt {

// A signed measure on a box made of three parts: point atoms, an absolutely
// continuous interior density, and surface densities on the boundary facets.
// All the solver machinery consumes this interface.
class SignedMeasure {
 public:
  struct Atom {
    Vec point;
    double weight = 0.0;
  };

  virtual ~SignedMeasure() = default;

  virtual int dim() const = 0;
  virtual const Box& box() const = 0;
  virtual double interior_density(const Vec& x) const = 0;
  // Surface density on facet (axis, orient): orient +1 is {x_axis = hi},
  // -1 is {x_axis = lo}.  The axis coordinate of x is ignored.
  virtual double facet_density(int axis, int orient, Vec x) const = 0;
  virtual const std::vector<Atom>& atoms() const = 0;

  // Signed mass of region ∩ box (atoms included when inside the region);
  // clamp selects the positive part (+1), negative-part magnitude (-1), or
  // the signed value (0).
  double mass(const Region& region, double tol = 1e-9) const;
  double positive_mass(const Region& region, double tol = 1e-9) const;
  double negative_mass(const Region& region, double tol = 1e-9) const;
  double total_mass(double tol = 1e-9) const;

  // Integral of g against the measure over region ∩ box.
  double integrate(const std::function<double(const Vec&)>& g,
                   const Region& region, double tol = 1e-9) const;

 private:
  double clamped_mass(const Region& region, int clamp, double tol) const;
};

// The measure attached to a product density f on X = Π[lo_i, hi_i]:
//   * a unit atom at the low corner,
//   * interior density  -(∇f(x)·x + (n+1) f(x)),
//   * facet surface density  f(x) (x·n̂)  with n̂ the outward normal
//     (top facets +f·hi_i, bottom facets -f·lo_i).
// Total mass is zero; the expected revenue of a price menu equals the
// integral of its buyer utility against this measure.
class TransformedMeasure : public SignedMeasure {
 public:
  explicit TransformedMeasure(ProductDensity density);

  int dim() const override { return density_.dim(); }
  const Box& box() const override { return density_.box(); }
  double interior_density(const Vec& x) const override;
  double facet_density(int axis, int orient, Vec x) const override;
  const std::vector<Atom>& atoms() const override { return atoms_; }

  const ProductDensity& density() const { return density_; }
  const Vec& atom_point() const { return atoms_[0].point; }

 private:
  ProductDensity density_;
  std::vector<Atom> atoms_;
};

// One-parameter family on the unit cube [0,1]^n: a unit atom at the origin,
// constant interior density -(n+1), bottom-facet density -c and top-facet
// density c+1.  At c = 0 this is the measure of the uniform density; larger c
// steepens the boundary weighting (ratio rho = (c+1)/c).  Total mass is zero.
class HypercubeMeasure : public SignedMeasure {
 public:
  HypercubeMeasure(int n, double c);

  int dim() const override { return n_; }
  const Box& box() const override { return box_; }
  double interior_density(const Vec& x) const override;
  double facet_density(int axis, int orient, Vec x) const override;
  const std::vector<Atom>& atoms() const override { return atoms_; }

  double weight() const { return c_; }

 private:
  int n_;
  double c_;
  Box box_;
  std::vector<Atom> atoms_;
};

}  // namespace mdopt
