#include "mdopt/quadrature.hpp"

#include <cmath>

namespace mdopt {

namespace {

// Order-4 Gauss-Legendre nodes/weights on [-1, 1].
constexpr double kNodes[4] = {-0.8611363115940526, -0.3399810435848563,
                              0.3399810435848563, 0.8611363115940526};
constexpr double kWeights[4] = {0.3478548451374538, 0.6521451548625461,
                               0.6521451548625461, 0.3478548451374538};

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
// Nonnegative abscissae; entries 1, 3, 5, 7 are the embedded Gauss nodes.
constexpr double kKronrodX[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993945, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr double kKronrodW[8] = {
    0.02293532201052922, 0.06309209262997855, 0.10479001032225018,
    0.14065325971552592, 0.16900472663926790, 0.19035057806478540,
    0.20443294007529889, 0.20948214108472782};
constexpr double kGaussW[4] = {0.12948496616886969, 0.27970539148927664,
                               0.38183005050511894, 0.41795918367346939};

struct Panel {
  double value;  // 15-point estimate
  double err;    // |15-point - embedded 7-point|
};

// One Gauss-Kronrod pass over [a, b]. The error is measured inside the panel
// by comparing the two embedded rules, so it cannot be fooled by cancellation
// between a parent estimate and its two halves the way same-rule halving
// estimates can (a derivative kink near a panel midpoint makes those agree
// while both are wrong).
Panel kpanel(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double acc15 = kKronrodW[7] * fc;
  double acc7 = kGaussW[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kKronrodX[i];
    const double s = f(c - dx) + f(c + dx);
    acc15 += kKronrodW[i] * s;
    if (i % 2 == 1) acc7 += kGaussW[(i - 1) / 2] * s;
  }
  return Panel{h * acc15, h * std::abs(acc15 - acc7)};
}

double adapt(const std::function<double(double)>& f, double a, double b,
             const Panel& whole, double tol, int depth) {
  if (depth <= 0 || whole.err <= tol) return whole.value;
  const double m = 0.5 * (a + b);
  return adapt(f, a, m, kpanel(f, a, m), 0.5 * tol, depth - 1) +
         adapt(f, m, b, kpanel(f, m, b), 0.5 * tol, depth - 1);
}

}  // namespace

double gl4(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < 4; ++i) s += kWeights[i] * f(c + h * kNodes[i]);
  return h * s;
}

double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    double tol, int max_depth) {
  if (!(b > a)) return 0.0;
  // Seed with a 4-way split so that integrands with interior structure are
  // not accepted prematurely off a single coarse panel.
  double total = 0.0;
  const double q = 0.25 * (b - a);
  for (int i = 0; i < 4; ++i) {
    const double lo = a + i * q;
    const double hi = (i == 3) ? b : lo + q;
    total += adapt(f, lo, hi, kpanel(f, lo, hi), 0.25 * tol, max_depth);
  }
  return total;
}

double find_root(const std::function<double(double)>& f, double a, double b,
                 double xtol) {
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0) {
    // No bracketed sign change: return the endpoint closer to zero.
    return std::abs(fa) < std::abs(fb) ? a : b;
  }
  for (int it = 0; it < 200 && b - a > xtol; ++it) {
    // Secant proposal, guarded to stay inside the bracket.
    double m = 0.5 * (a + b);
    const double denom = fb - fa;
    if (std::abs(denom) > 1e-300) {
      const double s = a - fa * (b - a) / denom;
      const double margin = 0.01 * (b - a);
      if (s > a + margin && s < b - margin) m = s;
    }
    const double fm = f(m);
    if (fm == 0.0) return m;
    if (fa * fm < 0.0) {
      b = m;
      fb = fm;
    } else {
      a = m;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace mdopt
