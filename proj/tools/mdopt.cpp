// Command-line front end: solve discretized instances, verify certificates,
// certify menus and partitions, decide stochastic orders, export pictures.
//
// Exit codes: 0 success / affirmative answer, 1 negative answer from a
// decision procedure, 2 usage or input error, 3 solver failure.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mdopt/dominance.hpp"
#include "mdopt/duality.hpp"
#include "mdopt/json_io.hpp"
#include "mdopt/mechanisms.hpp"
#include "mdopt/render.hpp"

using namespace mdopt;

namespace {

GridSpec make_grid(const SignedMeasure& mu, int nodes,
                   const std::vector<int>& shape) {
  if (!shape.empty()) {
    if (static_cast<int>(shape.size()) != mu.dim())
      throw std::runtime_error("--shape length does not match the instance");
    return GridSpec::regular(mu.box(), shape);
  }
  return GridSpec::regular(mu.box(), nodes);
}

void print_report(const MenuOptimalityReport& rep) {
  for (const auto& r : rep.regions) {
    std::printf("  region %-10s", r.label.c_str());
    if (r.skipped) {
      std::printf("empty\n");
      continue;
    }
    std::printf("%-18s pos %.8g  neg %.8g  grid",
                r.dominated ? "transformable" : "NOT transformable",
                r.pos_mass, r.neg_mass);
    for (std::size_t a = 0; a < r.grid.shape.size(); ++a)
      std::printf("%s%d", a ? "x" : " ", r.grid.shape[a]);
    if (!r.detail.dominates && !r.detail.witness.empty())
      std::printf("  separation %.3g", r.detail.separation);
    std::printf("\n");
  }
}

int run_solve(const std::string& instance, int nodes,
              const std::vector<int>& shape, int spread_radius,
              double quad_tol, int max_iterations, const std::string& out) {
  const InstanceSpec spec = load_instance(instance);
  const auto mu = spec.measure();
  const GridSpec grid = make_grid(*mu, nodes, shape);
  const GridMeasure gm = discretize_measure(*mu, grid, quad_tol);
  SimplexOptions sopt;
  sopt.max_iterations = max_iterations;
  const TransportSolution sol = solve_transport(gm, spread_radius, sopt);
  if (sol.status != LPStatus::kOptimal) {
    std::fprintf(stderr, "solver failed (status %d)\n",
                 static_cast<int>(sol.status));
    return 3;
  }
  std::printf("grid");
  for (std::size_t a = 0; a < grid.shape.size(); ++a)
    std::printf("%s%d", a ? "x" : " ", grid.shape[a]);
  std::printf(", %d nodes\n", grid.size());
  std::printf("optimal revenue (discretized): %.12g\n", sol.objective);
  std::printf("certificate value:             %.12g\n", sol.cert.value);
  std::printf("duality gap:                   %.3g\n", duality_gap(sol));
  std::printf("iterations: %d, certificate %s\n", sol.iterations,
              sol.cert.ok ? "valid" : "INVALID");
  if (!out.empty()) {
    const TransportLP tlp = build_transport_lp(gm, spread_radius);
    write_text_file(out, solution_to_json(tlp, sol, spread_radius,
                                          instance_to_json(spec)));
    std::printf("wrote %s\n", out.c_str());
  }
  return sol.cert.ok ? 0 : 3;
}

int run_verify(const std::string& solution, const std::string& instance,
               double quad_tol, double tol) {
  const LoadedSolution s = load_solution(solution);
  const std::string itext =
      instance.empty() ? s.instance_json : read_text_file(instance);
  if (itext.empty())
    throw std::runtime_error("no instance embedded; pass --instance");
  const InstanceSpec spec = parse_instance(itext);
  const auto mu = spec.measure();
  const GridSpec grid = GridSpec::regular(mu->box(), s.shape);
  const GridMeasure gm = discretize_measure(*mu, grid, quad_tol);
  const TransportLP tlp = build_transport_lp(gm, s.spread_radius);
  Vec x(tlp.lp.cols.size(), 0.0);
  for (const auto& [j, v] : s.ops) {
    if (j < 0 || j >= static_cast<int>(x.size()))
      throw std::runtime_error("operation index out of range");
    x[j] = v;
  }
  const DualCertificate cert = verify_certificate(tlp, gm, x, s.u, tol);
  std::printf("certificate value:  %.12g (objective %.12g)\n", cert.value,
              s.objective);
  std::printf("cone membership:    %s\n", cert.cone.ok ? "ok" : "VIOLATED");
  std::printf("worst reduced cost: %.3g\n", cert.worst_reduced);
  std::printf("complementarity:    %.3g\n", cert.worst_slack);
  std::printf("primal residual:    %.3g\n", cert.primal_residual);
  std::printf("certificate %s\n", cert.ok ? "valid" : "INVALID");
  return cert.ok ? 0 : 1;
}

MenuOptimalityOptions make_opts(double target_h, int spread_radius,
                                double quad_tol, double feas_scale,
                                int max_per_axis, int max_total) {
  MenuOptimalityOptions o;
  o.target_h = target_h;
  o.spread_radius = spread_radius;
  o.quad_tol = quad_tol;
  o.feas_scale = feas_scale;
  o.max_nodes_per_axis = max_per_axis;
  o.max_total_nodes = max_total;
  return o;
}

int run_check(const std::string& instance, const std::string& menu_path,
              double bundle_price, bool bundle_balance,
              const MenuOptimalityOptions& opts, const std::string& out) {
  const InstanceSpec spec = load_instance(instance);
  const auto mu = spec.measure();
  MenuOptimalityReport rep;
  if (!menu_path.empty()) {
    const Menu menu = load_menu(menu_path);
    rep = check_optimal_menu(*mu, menu, opts);
  } else {
    double price = bundle_price;
    if (bundle_balance) {
      double lo = 0.0, hi = 0.0;
      for (int a = 0; a < mu->dim(); ++a) {
        lo += mu->box().lo[a];
        hi += mu->box().hi[a];
      }
      price = bundle_price_by_mass(*mu, lo, hi, opts.quad_tol);
      std::printf("balanced bundle price: %.12g\n", price);
    }
    if (price <= 0.0)
      throw std::runtime_error(
          "pass --menu, --bundle-price, or --bundle-balance");
    rep = check_grand_bundling(*mu, price, opts);
  }
  print_report(rep);
  std::printf("verdict: %s\n",
              rep.ok ? "optimal on all region checks" : "not certified");
  if (!out.empty()) {
    write_text_file(out, report_to_json(rep));
    std::printf("wrote %s\n", out.c_str());
  }
  return rep.ok ? 0 : 1;
}

int run_partition(const std::string& instance, int samples, bool do_check,
                  bool do_well_formed, std::uint64_t seed,
                  const MenuOptimalityOptions& opts, const std::string& out,
                  const std::string& svg, const std::string& menu_out,
                  int per_branch) {
  const InstanceSpec spec = load_instance(instance);
  const auto mu = spec.measure();
  if (mu->dim() != 2)
    throw std::runtime_error("partition requires a 2-good instance");
  const Partition2D p = canonical_partition(*mu, samples);
  std::printf("bundle price: %.12g\n", p.price);
  std::printf("critical abscissas: x %.12g, y %.12g\n", p.x_crit, p.y_crit);
  std::printf("left strip: %s, bottom strip: %s\n",
              p.has_A ? "present" : "empty", p.has_B ? "present" : "empty");
  int rc = 0;
  if (do_well_formed) {
    const WellFormedReport wf = check_well_formed(p, 41, seed);
    std::printf(
        "well-formed: %s (cover misses %g, overlaps %g, continuity %.3g, "
        "alloc %.3g, ic %.3g)\n",
        wf.ok ? "yes" : "NO", wf.worst_cover, wf.worst_overlap,
        wf.worst_continuity, wf.worst_alloc, wf.worst_ic);
    if (!wf.ok) rc = 1;
  }
  if (do_check) {
    const MenuOptimalityReport rep = check_partition(*mu, p, opts);
    print_report(rep);
    std::printf("verdict: %s\n", rep.ok ? "optimal on all region checks"
                                        : "not certified");
    if (!rep.ok) rc = 1;
  }
  if (!out.empty()) {
    write_text_file(out, partition_to_json(p));
    std::printf("wrote %s\n", out.c_str());
  }
  if (!menu_out.empty()) {
    write_text_file(menu_out, menu_to_json(partition_menu(p, per_branch)));
    std::printf("wrote %s\n", menu_out.c_str());
  }
  if (!svg.empty()) {
    write_text_file(svg, render_partition_svg(p));
    std::printf("wrote %s\n", svg.c_str());
  }
  return rc;
}

int run_dominance(const std::string& a_path, const std::string& b_path,
                  const std::string& order) {
  const GridMeasure a = load_grid_measure(a_path);
  const GridMeasure b = load_grid_measure(b_path);
  if (a.grid.shape != b.grid.shape)
    throw std::runtime_error("measures live on different grids");
  if (order == "first") {
    const FirstOrderResult r = first_order_dominates(a, b);
    if (r.dominates) {
      std::printf("first-order dominance holds (%zu coupling moves)\n",
                  r.coupling.moves.size());
      return 0;
    }
    std::printf(
        "first-order dominance fails: up-closed witness set of %zu nodes, "
        "deficit %.6g\n",
        r.failure_upset.size(), r.deficit);
    return 1;
  }
  if (order == "second") {
    const ConvexOrderResult r = second_order_dominates(a, b);
    if (r.dominates) {
      std::printf("second-order dominance holds\n");
      return 0;
    }
    std::printf("second-order dominance fails (separation %.6g)\n",
                r.separation);
    return 1;
  }
  throw std::runtime_error("--order must be first or second");
}

int run_hypercube(int n, double c, double price, bool balance,
                  bool check_bundling, const MenuOptimalityOptions& opts) {
  const NotBundlingBound bound = notbundling_bound(n, c);
  std::printf("negative mass of the unit simplex: %.9g\n", bound.value);
  std::printf("atom outweighs it: %s\n", bound.certifies ? "yes" : "no");
  if (bound.certifies)
    std::printf("=> no single bundle price can be optimal\n");
  if (!check_bundling && !balance) return 0;
  const HypercubeMeasure mu(n, c);
  double p = price;
  if (balance || p <= 0.0) {
    p = bundle_price_by_mass(mu, 0.0, static_cast<double>(n), opts.quad_tol);
    std::printf("balanced bundle price: %.12g\n", p);
  }
  if (!check_bundling) return 0;
  const MenuOptimalityReport rep = check_grand_bundling(mu, p, opts);
  print_report(rep);
  std::printf("grand bundling at %.6g: %s\n", p,
              rep.ok ? "certified optimal" : "not certified");
  return rep.ok ? 0 : 1;
}

int run_render(const std::string& instance, const std::string& menu_path,
               bool partition, int samples, int raster,
               const std::string& out) {
  const InstanceSpec spec = load_instance(instance);
  const auto mu = spec.measure();
  RenderOptions ropt;
  ropt.raster = raster;
  std::string svg;
  if (partition) {
    if (mu->dim() != 2)
      throw std::runtime_error("partition rendering needs 2 goods");
    svg = render_partition_svg(canonical_partition(*mu, samples), ropt);
  } else if (!menu_path.empty()) {
    svg = render_menu_svg(load_menu(menu_path), mu->box(), ropt);
  } else {
    throw std::runtime_error("pass --menu or --partition");
  }
  write_text_file(out, svg);
  std::printf("wrote %s\n", out.c_str());
  return 0;
}

int run_measure(const std::string& instance, int nodes,
                const std::vector<int>& shape, double quad_tol,
                const std::string& out) {
  const InstanceSpec spec = load_instance(instance);
  const auto mu = spec.measure();
  const GridSpec grid = make_grid(*mu, nodes, shape);
  const GridMeasure gm = discretize_measure(*mu, grid, quad_tol);
  std::printf("nodes: %d\n", grid.size());
  std::printf("total mass:    %.12g\n", gm.total());
  std::printf("positive part: %.12g\n", gm.positive_total());
  std::printf("negative part: %.12g\n", gm.negative_total());
  if (!out.empty()) {
    write_text_file(out, grid_measure_to_json(gm));
    std::printf("wrote %s\n", out.c_str());
  }
  return 0;
}

// --------------------------------------------------------- example goldens

int run_examples(const std::string& dir, const std::string& filter) {
  namespace fs = std::filesystem;
  using nlohmann::json;
  const fs::path gdir = fs::path(dir) / "goldens";
  if (!fs::exists(gdir))
    throw std::runtime_error("no goldens directory under " + dir);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(gdir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  int pass = 0, fail = 0;
  auto report = [&](const std::string& name, bool ok,
                    const std::string& detail) {
    std::printf("%s  %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                detail.empty() ? "" : "  ", detail.c_str());
    (ok ? pass : fail)++;
  };

  for (const fs::path& f : files) {
    const std::string stem = f.stem().string();
    if (!filter.empty() && stem.find(filter) == std::string::npos) continue;
    json g;
    try {
      g = json::parse(read_text_file(f.string()));
    } catch (const std::exception& e) {
      report(stem, false, e.what());
      continue;
    }
    InstanceSpec spec;
    std::unique_ptr<SignedMeasure> mu;
    try {
      const std::string ipath =
          (fs::path(dir) / g.at("instance").get<std::string>()).string();
      spec = load_instance(ipath);
      mu = spec.measure();
    } catch (const std::exception& e) {
      report(stem, false, e.what());
      continue;
    }

    for (const json& t : g.at("tasks")) {
      const std::string kind = t.at("task").get<std::string>();
      const std::string name = stem + ":" + kind;
      try {
        if (kind == "revenue") {
          const Menu menu = parse_menu(t.at("menu").dump());
          const double got = menu_revenue(menu, spec.product());
          const double want = t.at("expect").get<double>();
          const double tol = t.at("tol").get<double>();
          char d[96];
          std::snprintf(d, sizeof(d), "revenue %.10g (expect %.10g)", got,
                        want);
          report(name, std::abs(got - want) <= tol, d);
        } else if (kind == "solve") {
          std::vector<int> shape;
          if (t.contains("shape")) shape = t.at("shape").get<std::vector<int>>();
          const int nodes = t.value("nodes", 11);
          const GridSpec grid = make_grid(*mu, nodes, shape);
          const GridMeasure gm = discretize_measure(*mu, grid, 1e-9);
          const TransportSolution sol = solve_transport(gm);
          const double want = t.at("expect").get<double>();
          const double rel = t.value("rel_tol", 0.02);
          const double gap_tol = t.value("gap_tol", 1e-6);
          const bool ok = sol.status == LPStatus::kOptimal && sol.cert.ok &&
                          std::abs(sol.objective - want) <= rel * want &&
                          std::abs(duality_gap(sol)) <=
                              gap_tol * (1.0 + std::abs(sol.objective));
          char d[96];
          std::snprintf(d, sizeof(d), "revenue %.8g (expect %.8g)",
                        sol.objective, want);
          report(name, ok, d);
        } else if (kind == "partition") {
          const int samples = t.value("samples", 121);
          const Partition2D p = canonical_partition(*mu, samples);
          bool ok = true;
          std::string detail;
          const double want = t.at("expect_price").get<double>();
          const double tol = t.value("tol", 1e-3);
          char d[96];
          std::snprintf(d, sizeof(d), "price %.8g (expect %.8g)", p.price,
                        want);
          detail = d;
          ok = ok && std::abs(p.price - want) <= tol;
          if (t.contains("expect_x_crit"))
            ok = ok && std::abs(p.x_crit -
                                t.at("expect_x_crit").get<double>()) <=
                           t.value("crit_tol", 1e-3);
          if (t.contains("expect_y_crit"))
            ok = ok && std::abs(p.y_crit -
                                t.at("expect_y_crit").get<double>()) <=
                           t.value("crit_tol", 1e-3);
          if (t.value("expect_no_strips", false))
            ok = ok && !p.has_A && !p.has_B;
          if (t.value("well_formed", false))
            ok = ok && check_well_formed(p, 41, 0).ok;
          report(name, ok, detail);
        } else if (kind == "bound") {
          if (spec.kind != InstanceSpec::Kind::kHypercube)
            throw std::runtime_error("bound task needs a hypercube instance");
          const NotBundlingBound b =
              notbundling_bound(spec.cube_n, spec.cube_c);
          const bool ok =
              std::abs(b.value - t.at("expect").get<double>()) <=
                  t.value("tol", 1e-6) &&
              b.certifies == t.at("certifies").get<bool>();
          char d[96];
          std::snprintf(d, sizeof(d), "value %.8g", b.value);
          report(name, ok, d);
        } else if (kind == "check") {
          const Menu menu = parse_menu(t.at("menu").dump());
          MenuOptimalityOptions opts;
          opts.target_h = t.value("target_h", 0.05);
          const MenuOptimalityReport rep = check_optimal_menu(*mu, menu, opts);
          report(name, rep.ok == t.value("expect_ok", true), "");
        } else if (kind == "bundle_check") {
          MenuOptimalityOptions opts;
          opts.target_h = t.value("target_h", 0.06);
          double lo = 0.0, hi = 0.0;
          for (int a = 0; a < mu->dim(); ++a) {
            lo += mu->box().lo[a];
            hi += mu->box().hi[a];
          }
          const double p = bundle_price_by_mass(*mu, lo, hi);
          const MenuOptimalityReport rep = check_grand_bundling(*mu, p, opts);
          report(name, rep.ok == t.value("expect_ok", true), "");
        } else {
          report(name, false, "unknown task kind");
        }
      } catch (const std::exception& e) {
        report(name, false, e.what());
      }
    }
  }
  std::printf("%d passed, %d failed\n", pass, fail);
  return fail == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimal multi-good selling mechanisms via discretized "
               "mass rearrangement"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for randomized spot checks");

  // solve
  auto* solve = app.add_subcommand("solve", "solve a discretized instance");
  std::string s_instance, s_out;
  int s_nodes = 15, s_radius = 2, s_maxit = 400000;
  std::vector<int> s_shape;
  double s_qtol = 1e-9;
  solve->add_option("--instance", s_instance, "instance JSON")->required();
  solve->add_option("--nodes", s_nodes, "nodes per axis");
  solve->add_option("--shape", s_shape, "explicit node counts per axis");
  solve->add_option("--spread-radius", s_radius, "spread direction radius");
  solve->add_option("--quad-tol", s_qtol, "discretization tolerance");
  solve->add_option("--max-iterations", s_maxit, "simplex iteration cap");
  solve->add_option("--out", s_out, "write solution JSON here");

  // verify
  auto* verify = app.add_subcommand("verify", "re-verify a solution dump");
  std::string v_solution, v_instance;
  double v_qtol = 1e-9, v_tol = 1e-7;
  verify->add_option("--solution", v_solution, "solution JSON")->required();
  verify->add_option("--instance", v_instance, "instance override");
  verify->add_option("--quad-tol", v_qtol, "discretization tolerance");
  verify->add_option("--tol", v_tol, "verification tolerance");

  // check
  auto* check = app.add_subcommand("check", "certify a menu's optimality");
  std::string c_instance, c_menu, c_out;
  double c_price = 0.0, c_h = 0.05, c_qtol = 1e-9, c_feas = 1e-6;
  bool c_balance = false;
  int c_radius = 2, c_per_axis = 81, c_total = 1700;
  check->add_option("--instance", c_instance, "instance JSON")->required();
  check->add_option("--menu", c_menu, "menu JSON");
  check->add_option("--bundle-price", c_price, "grand-bundle price");
  check->add_flag("--bundle-balance", c_balance,
                  "balance the bundle price from the measure");
  check->add_option("--target-h", c_h, "sub-grid step");
  check->add_option("--spread-radius", c_radius, "spread direction radius");
  check->add_option("--quad-tol", c_qtol, "discretization tolerance");
  check->add_option("--feas-scale", c_feas, "relative feasibility slack");
  check->add_option("--max-nodes-per-axis", c_per_axis, "sub-grid axis cap");
  check->add_option("--max-total-nodes", c_total, "sub-grid size cap");
  check->add_option("--out", c_out, "write report JSON here");

  // partition
  auto* part = app.add_subcommand("partition",
                                  "derive the four-region decomposition");
  std::string p_instance, p_out, p_svg, p_menu_out;
  int p_samples = 161, p_per_branch = 32;
  bool p_check = false, p_wf = false;
  double p_h = 0.05, p_qtol = 1e-9, p_feas = 1e-6;
  int p_per_axis = 81, p_total = 1700;
  part->add_option("--instance", p_instance, "instance JSON")->required();
  part->add_option("--samples", p_samples, "boundary curve samples");
  part->add_flag("--check", p_check, "run the four region checks");
  part->add_flag("--well-formed", p_wf, "run structural audit");
  part->add_option("--target-h", p_h, "sub-grid step for --check");
  part->add_option("--quad-tol", p_qtol, "discretization tolerance");
  part->add_option("--feas-scale", p_feas, "relative feasibility slack");
  part->add_option("--max-nodes-per-axis", p_per_axis, "sub-grid axis cap");
  part->add_option("--max-total-nodes", p_total, "sub-grid size cap");
  part->add_option("--out", p_out, "write partition JSON here");
  part->add_option("--svg", p_svg, "write an SVG picture here");
  part->add_option("--menu-out", p_menu_out, "write the tangent menu here");
  part->add_option("--per-branch", p_per_branch, "tangent items per strip");

  // dominance
  auto* dom = app.add_subcommand("dominance",
                                 "decide stochastic order between dumps");
  std::string d_a, d_b, d_order = "first";
  dom->add_option("--a", d_a, "grid measure JSON (candidate dominator)")
      ->required();
  dom->add_option("--b", d_b, "grid measure JSON")->required();
  dom->add_option("--order", d_order, "first or second");

  // hypercube
  auto* cube = app.add_subcommand("hypercube",
                                  "weighted-cube bundling diagnostics");
  int h_n = 2;
  double h_c = 0.0, h_price = 0.0, h_h = 0.06;
  bool h_balance = false, h_check = false;
  cube->add_option("--n", h_n, "number of goods")->required();
  cube->add_option("--c", h_c, "boundary weight")->required();
  cube->add_option("--price", h_price, "bundle price to check");
  cube->add_flag("--balance", h_balance, "compute the balanced bundle price");
  cube->add_flag("--check-bundling", h_check, "run the bundling check");
  cube->add_option("--target-h", h_h, "sub-grid step");

  // render
  auto* render = app.add_subcommand("render", "write an SVG picture");
  std::string r_instance, r_menu, r_out;
  bool r_partition = false;
  int r_samples = 121, r_raster = 240;
  render->add_option("--instance", r_instance, "instance JSON")->required();
  render->add_option("--menu", r_menu, "menu JSON to draw");
  render->add_flag("--partition", r_partition, "draw the derived partition");
  render->add_option("--samples", r_samples, "boundary curve samples");
  render->add_option("--raster", r_raster, "classification resolution");
  render->add_option("--out", r_out, "output SVG path")->required();

  // measure
  auto* meas = app.add_subcommand("measure", "discretize and dump a measure");
  std::string m_instance, m_out;
  int m_nodes = 15;
  std::vector<int> m_shape;
  double m_qtol = 1e-9;
  meas->add_option("--instance", m_instance, "instance JSON")->required();
  meas->add_option("--nodes", m_nodes, "nodes per axis");
  meas->add_option("--shape", m_shape, "explicit node counts per axis");
  meas->add_option("--quad-tol", m_qtol, "discretization tolerance");
  meas->add_option("--out", m_out, "write grid measure JSON here");

  // examples
  auto* ex = app.add_subcommand("examples", "bundled example instances");
  auto* ex_run = ex->add_subcommand("run", "run instances against goldens");
  std::string e_dir = "data", e_filter;
  ex_run->add_option("--dir", e_dir, "data directory");
  ex_run->add_option("--filter", e_filter, "only names containing this");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*solve)
      return run_solve(s_instance, s_nodes, s_shape, s_radius, s_qtol, s_maxit,
                       s_out);
    if (*verify) return run_verify(v_solution, v_instance, v_qtol, v_tol);
    if (*check)
      return run_check(c_instance, c_menu, c_price, c_balance,
                       make_opts(c_h, c_radius, c_qtol, c_feas, c_per_axis,
                                 c_total),
                       c_out);
    if (*part)
      return run_partition(p_instance, p_samples, p_check, p_wf, seed,
                           make_opts(p_h, 2, p_qtol, p_feas, p_per_axis,
                                     p_total),
                           p_out, p_svg, p_menu_out, p_per_branch);
    if (*dom) return run_dominance(d_a, d_b, d_order);
    if (*cube)
      return run_hypercube(h_n, h_c, h_price, h_balance, h_check,
                           make_opts(h_h, 2, 1e-9, 1e-6, 81, 1700));
    if (*render)
      return run_render(r_instance, r_menu, r_partition, r_samples, r_raster,
                        r_out);
    if (*meas) return run_measure(m_instance, m_nodes, m_shape, m_qtol, m_out);
    if (*ex) {
      if (*ex_run) return run_examples(e_dir, e_filter);
      std::fprintf(stderr, "usage: mdopt examples run [--dir DIR]\n");
      return 2;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
