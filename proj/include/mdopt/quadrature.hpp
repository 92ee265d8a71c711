#pragma once

#include <functional>

#include "mdopt/core.hpp"

namespace mdopt {

// Adaptive 1-D integration: Gauss-Kronrod 7/15 panels with interval halving
// until the embedded error estimate |K15 - G7| falls within tol (absolute,
// split across subintervals) or the depth cap is reached. The estimate lives
// inside each panel, so a derivative kink cannot silently cancel between a
// parent panel and its halves; piecewise-smooth integrands converge to the
// requested tolerance because splitting isolates the kink.
double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    double tol, int max_depth = 48);

// Fixed order-4 Gauss-Legendre panel on [a, b] (no subdivision).
double gl4(const std::function<double(double)>& f, double a, double b);

// Root of f on [a, b] by bisection with secant acceleration; f(a) and f(b)
// must have opposite signs (or one of them be zero).
double find_root(const std::function<double(double)>& f, double a, double b,
                 double xtol = 1e-12);

}  // namespace mdopt
