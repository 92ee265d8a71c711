#include "mdopt/json_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace mdopt {

using nlohmann::json;

ProductDensity InstanceSpec::product() const {
  if (kind != Kind::kProduct)
    throw std::runtime_error("instance is not a product density");
  return ProductDensity(marginals);
}

std::unique_ptr<SignedMeasure> InstanceSpec::measure() const {
  if (kind == Kind::kHypercube)
    return std::make_unique<HypercubeMeasure>(cube_n, cube_c);
  return std::make_unique<TransformedMeasure>(product());
}

namespace {

MarginalDensity marginal_from_json(const json& j) {
  const std::string family = j.at("family").get<std::string>();
  std::optional<double> trunc;
  if (j.contains("truncate")) trunc = j.at("truncate").get<double>();
  if (family == "uniform")
    return MarginalDensity::uniform(j.at("a").get<double>(),
                                    j.at("b").get<double>());
  if (family == "beta")
    return MarginalDensity::beta(j.at("a").get<double>(),
                                 j.at("b").get<double>());
  if (family == "exponential")
    return MarginalDensity::exponential(j.at("rate").get<double>(), trunc);
  if (family == "power_law")
    return MarginalDensity::power_law(j.at("k").get<double>(), trunc);
  throw std::runtime_error("unknown marginal family: " + family);
}

json marginal_to_json(const MarginalDensity& m) {
  json j;
  j["family"] = m.family_name();
  switch (m.family()) {
    case MarginalDensity::Family::kUniform:
    case MarginalDensity::Family::kBeta:
      j["a"] = m.param_a();
      j["b"] = m.param_b();
      break;
    case MarginalDensity::Family::kExponential:
      j["rate"] = m.param_a();
      j["truncate"] = m.support_hi();
      break;
    case MarginalDensity::Family::kPowerLaw:
      j["k"] = m.param_a();
      j["truncate"] = m.support_hi();
      break;
  }
  return j;
}

json grid_to_json(const GridSpec& g) {
  json j;
  j["lo"] = g.box.lo;
  j["hi"] = g.box.hi;
  j["shape"] = g.shape;
  return j;
}

GridSpec grid_from_json(const json& j) {
  Box box(j.at("lo").get<Vec>(), j.at("hi").get<Vec>());
  return GridSpec{box, j.at("shape").get<std::vector<int>>()};
}

}  // namespace

InstanceSpec parse_instance(const std::string& text) {
  const json j = json::parse(text);
  InstanceSpec spec;
  if (j.contains("name")) spec.name = j.at("name").get<std::string>();
  const std::string type =
      j.contains("type") ? j.at("type").get<std::string>() : "product";
  if (type == "hypercube") {
    spec.kind = InstanceSpec::Kind::kHypercube;
    spec.cube_n = j.at("n").get<int>();
    spec.cube_c = j.at("c").get<double>();
    return spec;
  }
  if (type != "product") throw std::runtime_error("unknown instance type");
  spec.kind = InstanceSpec::Kind::kProduct;
  for (const json& m : j.at("marginals"))
    spec.marginals.push_back(marginal_from_json(m));
  if (spec.marginals.empty())
    throw std::runtime_error("instance needs at least one marginal");
  return spec;
}

InstanceSpec load_instance(const std::string& path) {
  return parse_instance(read_text_file(path));
}

std::string instance_to_json(const InstanceSpec& spec) {
  json j;
  if (!spec.name.empty()) j["name"] = spec.name;
  if (spec.kind == InstanceSpec::Kind::kHypercube) {
    j["type"] = "hypercube";
    j["n"] = spec.cube_n;
    j["c"] = spec.cube_c;
  } else {
    j["type"] = "product";
    j["marginals"] = json::array();
    for (const auto& m : spec.marginals)
      j["marginals"].push_back(marginal_to_json(m));
  }
  return j.dump(2);
}

Menu parse_menu(const std::string& text) {
  const json j = json::parse(text);
  Menu menu;
  for (const json& it : j.at("items"))
    menu.items.push_back(
        {it.at("alloc").get<Vec>(), it.at("price").get<double>()});
  return menu;
}

Menu load_menu(const std::string& path) {
  return parse_menu(read_text_file(path));
}

std::string menu_to_json(const Menu& menu) {
  json j;
  j["items"] = json::array();
  for (const MenuItem& it : menu.items)
    j["items"].push_back({{"alloc", it.alloc}, {"price", it.price}});
  return j.dump(2);
}

GridMeasure parse_grid_measure(const std::string& text) {
  const json j = json::parse(text);
  GridMeasure m{grid_from_json(j.at("grid")), j.at("mass").get<Vec>()};
  if (static_cast<int>(m.mass.size()) != m.grid.size())
    throw std::runtime_error("grid measure: mass size does not match grid");
  return m;
}

GridMeasure load_grid_measure(const std::string& path) {
  return parse_grid_measure(read_text_file(path));
}

std::string grid_measure_to_json(const GridMeasure& m) {
  json j;
  j["grid"] = grid_to_json(m.grid);
  j["mass"] = m.mass;
  return j.dump();
}

std::string solution_to_json(const TransportLP& tlp,
                             const TransportSolution& sol, int spread_radius,
                             const std::string& instance_json) {
  json j;
  if (!instance_json.empty()) j["instance"] = json::parse(instance_json);
  j["grid"] = grid_to_json(tlp.grid);
  j["spread_radius"] = spread_radius;
  j["objective"] = sol.objective;
  j["iterations"] = sol.iterations;
  j["u"] = sol.cert.u;
  json ops = json::array();
  for (std::size_t k = 0; k < sol.op_values.size(); ++k) {
    if (sol.op_values[k] <= 1e-12) continue;
    const GridOp& op = tlp.ops[k];
    json o;
    o["j"] = k;
    o["value"] = sol.op_values[k];
    switch (op.kind) {
      case GridOp::kTransport:
        o["kind"] = "transport";
        o["node"] = op.node;
        o["axis"] = op.axis;
        o["to"] = op.to;
        break;
      case GridOp::kUpMove:
        o["kind"] = "up";
        o["node"] = op.node;
        o["axis"] = op.axis;
        o["to"] = op.to;
        break;
      case GridOp::kSpread:
        o["kind"] = "spread";
        o["node"] = op.node;
        o["dir"] = op.dir;
        break;
    }
    ops.push_back(std::move(o));
  }
  j["ops"] = std::move(ops);
  json cert;
  cert["value"] = sol.cert.value;
  cert["ok"] = sol.cert.ok;
  cert["worst_reduced"] = sol.cert.worst_reduced;
  cert["worst_slack"] = sol.cert.worst_slack;
  cert["primal_residual"] = sol.cert.primal_residual;
  cert["cone_ok"] = sol.cert.cone.ok;
  j["certificate"] = std::move(cert);
  return j.dump(2);
}

LoadedSolution parse_solution(const std::string& text) {
  const json j = json::parse(text);
  LoadedSolution s;
  if (j.contains("instance")) s.instance_json = j.at("instance").dump();
  s.shape = j.at("grid").at("shape").get<std::vector<int>>();
  s.spread_radius = j.at("spread_radius").get<int>();
  s.objective = j.at("objective").get<double>();
  s.u = j.at("u").get<Vec>();
  for (const json& o : j.at("ops"))
    s.ops.push_back({o.at("j").get<int>(), o.at("value").get<double>()});
  return s;
}

LoadedSolution load_solution(const std::string& path) {
  return parse_solution(read_text_file(path));
}

std::string report_to_json(const MenuOptimalityReport& rep) {
  json j;
  j["ok"] = rep.ok;
  j["regions"] = json::array();
  for (const RegionCheckResult& r : rep.regions) {
    json e;
    e["label"] = r.label;
    e["item"] = r.item;
    e["dirs"] = r.dirs;
    e["skipped"] = r.skipped;
    e["transformable"] = r.dominated;
    e["positive_mass"] = r.pos_mass;
    e["negative_mass"] = r.neg_mass;
    e["imbalance"] = r.imbalance;
    if (!r.skipped) e["shape"] = r.grid.shape;
    if (!r.detail.dominates && !r.detail.witness.empty())
      e["separation"] = r.detail.separation;
    j["regions"].push_back(std::move(e));
  }
  return j.dump(2);
}

std::string partition_to_json(const Partition2D& p, int curve_samples) {
  json j;
  j["box"] = {{"lo", p.box.lo}, {"hi", p.box.hi}};
  j["price"] = p.price;
  j["x_crit"] = p.x_crit;
  j["y_crit"] = p.y_crit;
  j["has_left_strip"] = p.has_A;
  j["has_bottom_strip"] = p.has_B;
  json sig = json::array(), tau = json::array();
  const int M = std::max(2, curve_samples);
  for (int k = 0; k < M; ++k) {
    const double x =
        p.box.lo[0] + (p.box.hi[0] - p.box.lo[0]) * k / (M - 1);
    const double y =
        p.box.lo[1] + (p.box.hi[1] - p.box.lo[1]) * k / (M - 1);
    sig.push_back({x, p.sigma(x)});
    tau.push_back({y, p.tau(y)});
  }
  j["sigma"] = std::move(sig);
  j["tau"] = std::move(tau);
  return j.dump(2);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace mdopt
