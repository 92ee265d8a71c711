#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "mdopt/dominance.hpp"

using namespace mdopt;

namespace {

const Box kUnit2({0.0, 0.0}, {1.0, 1.0});

GridMeasure zeros(const GridSpec& g) { return GridMeasure{g, Vec(g.size(), 0.0)}; }

GridMeasure random_measure(const GridSpec& g, std::mt19937_64& rng,
                           double total = 1.0) {
  std::uniform_real_distribution<double> U(0.0, 1.0);
  GridMeasure m = zeros(g);
  double s = 0.0;
  for (double& v : m.mass) s += (v = U(rng) * (U(rng) < 0.4 ? 0.0 : 1.0));
  if (s <= 0.0) m.mass[0] = s = 1.0;
  for (double& v : m.mass) v *= total / s;
  return m;
}

// Push random up-moves through b so the result dominates it by construction.
GridMeasure lift_randomly(const GridMeasure& b, std::mt19937_64& rng) {
  GridMeasure a = b;
  std::uniform_real_distribution<double> U(0.0, 1.0);
  const GridSpec& g = a.grid;
  for (int pass = 0; pass < 2; ++pass)
    for (int v = 0; v < g.size(); ++v) {
      if (a.mass[v] <= 0.0) continue;
      for (int axis = 0; axis < g.dim(); ++axis) {
        const int up = g.neighbor(v, axis, +1);
        if (up < 0 || U(rng) < 0.5) continue;
        const double amt = a.mass[v] * U(rng);
        a.mass[v] -= amt;
        a.mass[up] += amt;
      }
    }
  return a;
}

}  // namespace

TEST_CASE("first order: direct mass lifting") {
  const GridSpec g = GridSpec::regular(kUnit2, 3);
  GridMeasure b = zeros(g), a = zeros(g);
  b.mass[g.flat({0, 0})] = 1.0;
  a.mass[g.flat({2, 1})] = 1.0;
  const FirstOrderResult up = first_order_dominates(a, b);
  CHECK(up.dominates);
  // The coupling transports b onto a moving only upward.
  Vec carried = b.mass;
  for (const auto& mv : up.coupling.moves) {
    CHECK(dominates_componentwise(g.node(mv.to), g.node(mv.from), 1e-12));
    carried[mv.from] -= mv.amount;
    carried[mv.to] += mv.amount;
  }
  for (int v = 0; v < g.size(); ++v)
    CHECK(carried[v] == doctest::Approx(a.mass[v]).epsilon(1e-9).scale(1.0));

  const FirstOrderResult down = first_order_dominates(b, a);
  CHECK_FALSE(down.dominates);
  CHECK(down.deficit < -0.9);  // the witness upset holds all of a, none of b
  // The witness node set is up-closed.
  std::vector<char> in(g.size(), 0);
  for (int v : down.failure_upset) in[v] = 1;
  for (int v : down.failure_upset)
    for (int axis = 0; axis < 2; ++axis) {
      const int u = g.neighbor(v, axis, +1);
      if (u >= 0) CHECK(in[u] == 1);
    }
}

TEST_CASE("first order: incomparable measures fail both ways") {
  const GridSpec g = GridSpec::regular(kUnit2, 3);
  GridMeasure a = zeros(g), b = zeros(g);
  a.mass[g.flat({2, 0})] = 1.0;  // right edge
  b.mass[g.flat({0, 2})] = 1.0;  // top edge
  CHECK_FALSE(first_order_dominates(a, b).dominates);
  CHECK_FALSE(first_order_dominates(b, a).dominates);
}

TEST_CASE("first order matches the exhaustive upset scan on random pairs") {
  std::mt19937_64 rng(20240817);
  int positives = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int nx = 2 + static_cast<int>(rng() % 3);
    const int ny = 2 + static_cast<int>(rng() % 3);
    const GridSpec g = GridSpec::regular(kUnit2, {nx, ny});
    const GridMeasure b = random_measure(g, rng);
    const GridMeasure a =
        (trial % 2 == 0) ? lift_randomly(b, rng) : random_measure(g, rng);
    const FirstOrderResult r = first_order_dominates(a, b, 1e-9);
    const double gap = min_upset_gap(a, b);
    if (r.dominates) {
      ++positives;
      CHECK(gap >= -1e-7);
    } else {
      CHECK(gap < 1e-9);
      CHECK(r.deficit <= 1e-9);
      // The witness upset can be no better than the exhaustive minimum.
      CHECK(gap <= r.deficit + 1e-7);
    }
  }
  CHECK(positives >= 20);  // the lifted half must mostly come out positive
}

TEST_CASE("first-order dominance implies up-move transformability") {
  std::mt19937_64 rng(99);
  const GridSpec g = GridSpec::regular(kUnit2, 4);
  for (int trial = 0; trial < 10; ++trial) {
    const GridMeasure b = random_measure(g, rng);
    const GridMeasure a = lift_randomly(b, rng);
    REQUIRE(first_order_dominates(a, b).dominates);
    const ConvexOrderResult c = convex_dominates(a, b, {+1, +1});
    CHECK(c.dominates);
  }
}

TEST_CASE("second order: spreads and downward moves") {
  const GridSpec g = GridSpec::regular(kUnit2, 5);
  GridMeasure center = zeros(g), split = zeros(g);
  center.mass[g.flat({2, 2})] = 1.0;
  split.mass[g.flat({0, 2})] = 0.5;
  split.mass[g.flat({4, 2})] = 0.5;
  // A point mass second-order dominates its mean-preserving spread ...
  CHECK(second_order_dominates(center, split).dominates);
  // ... but not conversely; the witness is concave, nondecreasing, and
  // integrates higher against the spread than against the point mass.
  const ConvexOrderResult r = second_order_dominates(split, center);
  CHECK_FALSE(r.dominates);
  REQUIRE(r.witness.size() == static_cast<std::size_t>(g.size()));
  CHECK(r.separation < -1e-6);
  // The call wraps the reverse transformability query, so separation pairs
  // the witness with (center - split); negating the witness yields the
  // concave nondecreasing function that integrates higher against the
  // spread than against the point mass.
  double paired = 0.0, w_center = 0.0, w_split = 0.0;
  for (int v = 0; v < g.size(); ++v) {
    paired += r.witness[v] * (center.mass[v] - split.mass[v]);
    w_center += -r.witness[v] * center.mass[v];
    w_split += -r.witness[v] * split.mass[v];
  }
  CHECK(paired == doctest::Approx(r.separation).epsilon(1e-9).scale(1.0));
  CHECK(w_center > w_split + 1e-6);

  GridMeasure top = zeros(g), bottom = zeros(g);
  top.mass[g.flat({3, 4})] = 1.0;
  bottom.mass[g.flat({3, 1})] = 1.0;
  CHECK(second_order_dominates(top, bottom).dominates);
  CHECK_FALSE(second_order_dominates(bottom, top).dominates);
}

TEST_CASE("transformability with directed moves") {
  const GridSpec g = GridSpec::regular(kUnit2, {3, 2});
  GridMeasure a = zeros(g), b = zeros(g);
  b.mass[g.flat({0, 0})] = 1.0;
  a.mass[g.flat({2, 0})] = 1.0;
  // Up-moves along axis 0 reach the target.
  CHECK(convex_dominates(a, b, {+1, 0}).dominates);
  // Down-moves cannot, and the witness decreases along axis 0.
  const ConvexOrderResult r = convex_dominates(a, b, {-1, 0});
  CHECK_FALSE(r.dominates);
  CHECK(r.separation < -1e-9);
  // Frozen axes cannot either.
  CHECK_FALSE(convex_dominates(a, b, {0, 0}).dominates);

  // On success the reported op vector reproduces a from b.
  const ConvexOrderResult ok = convex_dominates(a, b, {+1, 0});
  Vec mass = b.mass;
  apply_grid_ops(ok.ops, ok.op_values, mass);
  for (int v = 0; v < g.size(); ++v)
    CHECK(mass[v] == doctest::Approx(a.mass[v]).epsilon(1e-8).scale(1.0));
}

TEST_CASE("transformability witness is admissible for its move directions") {
  const GridSpec g = GridSpec::regular(kUnit2, 4);
  std::mt19937_64 rng(5);
  int failures = 0;
  for (int trial = 0; trial < 30 && failures < 8; ++trial) {
    const GridMeasure a = random_measure(g, rng);
    const GridMeasure b = random_measure(g, rng);
    const std::vector<int> dirs = {static_cast<int>(rng() % 3) - 1,
                                   static_cast<int>(rng() % 3) - 1};
    const ConvexOrderResult r = convex_dominates(a, b, dirs);
    if (r.dominates || r.witness.empty()) continue;
    ++failures;
    CHECK(r.separation < 1e-12);
    // Monotonicity along each allowed move direction.
    for (int v = 0; v < g.size(); ++v)
      for (int axis = 0; axis < 2; ++axis) {
        if (dirs[axis] == 0) continue;
        const int up = g.neighbor(v, axis, +1);
        if (up < 0) continue;
        const double d = r.witness[up] - r.witness[v];
        if (dirs[axis] > 0) CHECK(d >= -1e-7);
        if (dirs[axis] < 0) CHECK(d <= 1e-7);
      }
    // Midpoint convexity along every spread direction.
    for (int v = 0; v < g.size(); ++v) {
      const auto idx = g.multi(v);
      for (const auto& dvec : spread_directions(2, 2)) {
        auto p = idx, q = idx;
        bool inside = true;
        for (int axis = 0; axis < 2; ++axis) {
          p[axis] += dvec[axis];
          q[axis] -= dvec[axis];
          if (p[axis] < 0 || p[axis] >= g.shape[axis] || q[axis] < 0 ||
              q[axis] >= g.shape[axis])
            inside = false;
        }
        if (!inside) continue;
        const double mid = 2.0 * r.witness[v];
        CHECK(r.witness[g.flat(p)] + r.witness[g.flat(q)] >= mid - 1e-7);
      }
    }
  }
  CHECK(failures >= 3);
}

TEST_CASE("transformability is reflexive and monotone under slack") {
  const GridSpec g = GridSpec::regular(kUnit2, 3);
  std::mt19937_64 rng(17);
  const GridMeasure a = random_measure(g, rng);
  CHECK(convex_dominates(a, a, {0, 0}).dominates);
  CHECK(second_order_dominates(a, a).dominates);
}
