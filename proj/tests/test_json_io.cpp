#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>

#include "doctest.h"
#include "mdopt/json_io.hpp"

using namespace mdopt;

TEST_CASE("instance round trip: product of marginals") {
  const std::string text = R"({
    "name": "mixed",
    "type": "product",
    "marginals": [
      {"family": "uniform", "a": 4.0, "b": 16.0},
      {"family": "beta", "a": 1.0, "b": 2.0},
      {"family": "exponential", "rate": 2.0, "truncate": 10.5},
      {"family": "power_law", "k": 6.0}
    ]
  })";
  const InstanceSpec spec = parse_instance(text);
  CHECK(spec.kind == InstanceSpec::Kind::kProduct);
  CHECK(spec.name == "mixed");
  REQUIRE(spec.marginals.size() == 4);
  CHECK(spec.marginals[0].support_hi() == doctest::Approx(16.0));
  CHECK(spec.marginals[2].support_hi() == doctest::Approx(10.5));

  const InstanceSpec again = parse_instance(instance_to_json(spec));
  REQUIRE(again.marginals.size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(again.marginals[i].family() == spec.marginals[i].family());
    CHECK(again.marginals[i].support_lo() ==
          doctest::Approx(spec.marginals[i].support_lo()));
    CHECK(again.marginals[i].support_hi() ==
          doctest::Approx(spec.marginals[i].support_hi()));
    CHECK(again.marginals[i].pdf(0.3 + 0.1 * i) ==
          doctest::Approx(spec.marginals[i].pdf(0.3 + 0.1 * i)));
  }
  const auto mu = again.measure();
  CHECK(mu->dim() == 4);
}

TEST_CASE("instance round trip: weighted cube") {
  const InstanceSpec spec =
      parse_instance(R"({"name":"cube","type":"hypercube","n":3,"c":1.0})");
  CHECK(spec.kind == InstanceSpec::Kind::kHypercube);
  CHECK(spec.cube_n == 3);
  CHECK(spec.cube_c == doctest::Approx(1.0));
  const auto mu = spec.measure();
  CHECK(mu->interior_density({0.5, 0.5, 0.5}) == doctest::Approx(-4.0));
  const InstanceSpec again = parse_instance(instance_to_json(spec));
  CHECK(again.cube_n == 3);
  CHECK_THROWS(again.product());
}

TEST_CASE("invalid instances are rejected") {
  CHECK_THROWS(parse_instance(R"({"type":"product"})"));
  CHECK_THROWS(parse_instance(R"({"type":"nonsense","marginals":[]})"));
  CHECK_THROWS(parse_instance(
      R"({"type":"product","marginals":[{"family":"uniform","a":2,"b":1}]})"));
  CHECK_THROWS(parse_instance("not json at all"));
}

TEST_CASE("menu round trip") {
  Menu m;
  m.items.push_back({{1.0, 0.0}, 2.0 / 3.0});
  m.items.push_back({{1.0, 1.0}, (4.0 - std::sqrt(2.0)) / 3.0});
  const Menu again = parse_menu(menu_to_json(m));
  REQUIRE(again.items.size() == 2);
  CHECK(again.items[0].alloc[0] == doctest::Approx(1.0));
  CHECK(again.items[1].price == doctest::Approx(m.items[1].price));
  CHECK_THROWS(parse_menu(R"({"items":[{"alloc":[1.0]}]})"));  // no price
}

TEST_CASE("grid measure round trip") {
  GridMeasure gm;
  gm.grid = GridSpec::regular(Box({0.0, 4.0}, {1.0, 7.0}), {3, 4});
  gm.mass.assign(12, 0.0);
  gm.mass[5] = -1.25;
  gm.mass[0] = 2.5;
  const GridMeasure again = parse_grid_measure(grid_measure_to_json(gm));
  CHECK(again.grid.shape == gm.grid.shape);
  CHECK(again.grid.box.lo[1] == doctest::Approx(4.0));
  CHECK(again.mass[5] == doctest::Approx(-1.25));
  CHECK(again.total() == doctest::Approx(gm.total()));
}

TEST_CASE("solution dump round trip preserves the certificate data") {
  const InstanceSpec spec = parse_instance(
      R"({"name":"sq","type":"product","marginals":[
          {"family":"uniform","a":0.0,"b":1.0},
          {"family":"uniform","a":0.0,"b":1.0}]})");
  const auto mu = spec.measure();
  const GridMeasure gm =
      discretize_measure(*mu, GridSpec::regular(mu->box(), 7), 1e-10);
  const TransportLP tlp = build_transport_lp(gm, 2);
  const TransportSolution sol = solve_transport(gm);
  REQUIRE(sol.status == LPStatus::kOptimal);
  REQUIRE(sol.cert.ok);

  const std::string text =
      solution_to_json(tlp, sol, 2, instance_to_json(spec));
  const LoadedSolution back = parse_solution(text);
  CHECK(back.shape == std::vector<int>{7, 7});
  CHECK(back.spread_radius == 2);
  CHECK(back.objective == doctest::Approx(sol.objective).epsilon(1e-12));
  REQUIRE(back.u.size() == sol.cert.u.size());
  for (std::size_t i = 0; i < back.u.size(); ++i)
    CHECK(back.u[i] == doctest::Approx(sol.cert.u[i]).epsilon(1e-12));

  // Re-expanding the sparse ops reproduces a verifiable primal vector.
  const InstanceSpec spec2 = parse_instance(back.instance_json);
  const auto mu2 = spec2.measure();
  const GridMeasure gm2 =
      discretize_measure(*mu2, GridSpec::regular(mu2->box(), back.shape),
                         1e-10);
  const TransportLP tlp2 = build_transport_lp(gm2, back.spread_radius);
  Vec x(tlp2.lp.cols.size(), 0.0);
  for (const auto& [j, v] : back.ops) x[j] = v;
  const DualCertificate cert = verify_certificate(tlp2, gm2, x, back.u, 1e-7);
  CHECK(cert.ok);
  CHECK(cert.value == doctest::Approx(sol.objective).epsilon(1e-7));
}

TEST_CASE("text files write and read back") {
  const std::string path = "/tmp/mdopt_io_test.txt";
  write_text_file(path, "line one\nline two\n");
  CHECK(read_text_file(path) == "line one\nline two\n");
  std::remove(path.c_str());
  CHECK_THROWS(read_text_file("/tmp/mdopt_io_test_missing.txt"));
}
