#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace mdopt {

using Vec = std::vector<double>;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Axis-aligned box: the support of an instance and the domain of every grid.
struct Box {
  Vec lo, hi;

  Box() = default;
  Box(Vec lo_, Vec hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo.size() != hi.size()) throw std::invalid_argument("Box: dim mismatch");
    for (std::size_t i = 0; i < lo.size(); ++i)
      if (!(lo[i] <= hi[i])) throw std::invalid_argument("Box: lo > hi");
  }

  int dim() const { return static_cast<int>(lo.size()); }

  double volume() const {
    double v = 1.0;
    for (int i = 0; i < dim(); ++i) v *= hi[i] - lo[i];
    return v;
  }

  bool contains(const Vec& x, double tol = 0.0) const {
    for (int i = 0; i < dim(); ++i)
      if (x[i] < lo[i] - tol || x[i] > hi[i] + tol) return false;
    return true;
  }
};

inline double l1_dist(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Componentwise partial order used by monotone couplings: a >= b on every axis.
inline bool dominates_componentwise(const Vec& a, const Vec& b, double tol = 0.0) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i] - tol) return false;
  return true;
}

// Logging controlled by the MDOPT_LOG environment variable
// (unset/empty: quiet, "info": progress lines, "debug": verbose).
enum class LogLevel : int { kQuiet = 0, kInfo = 1, kDebug = 2 };

inline LogLevel log_level() {
  static const LogLevel lvl = [] {
    const char* e = std::getenv("MDOPT_LOG");
    if (!e || !*e) return LogLevel::kQuiet;
    std::string s(e);
    if (s == "debug" || s == "2") return LogLevel::kDebug;
    if (s == "info" || s == "1") return LogLevel::kInfo;
    return LogLevel::kQuiet;
  }();
  return lvl;
}

void log_line(LogLevel lvl, const std::string& msg);

}  // namespace mdopt
