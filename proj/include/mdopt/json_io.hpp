#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mdopt/duality.hpp"
#include "mdopt/measure.hpp"
#include "mdopt/mechanisms.hpp"

namespace mdopt {

// An instance description: either a product of marginal densities (solved
// through its transformed measure) or a weighted-cube measure given directly.
struct InstanceSpec {
  enum class Kind { kProduct, kHypercube };
  Kind kind = Kind::kProduct;
  std::string name;
  std::vector<MarginalDensity> marginals;  // kind == kProduct
  int cube_n = 2;                          // kind == kHypercube
  double cube_c = 0.0;

  ProductDensity product() const;  // throws unless kind == kProduct
  std::unique_ptr<SignedMeasure> measure() const;
};

InstanceSpec parse_instance(const std::string& text);
InstanceSpec load_instance(const std::string& path);
std::string instance_to_json(const InstanceSpec& spec);

Menu parse_menu(const std::string& text);
Menu load_menu(const std::string& path);
std::string menu_to_json(const Menu& menu);

GridMeasure parse_grid_measure(const std::string& text);
GridMeasure load_grid_measure(const std::string& path);
std::string grid_measure_to_json(const GridMeasure& m);

// Transport solution dump: embedded instance, grid shape, node potentials,
// nonzero operations as sparse (column, value) pairs, certificate summary.
std::string solution_to_json(const TransportLP& tlp,
                             const TransportSolution& sol, int spread_radius,
                             const std::string& instance_json);

struct LoadedSolution {
  std::string instance_json;
  std::vector<int> shape;
  int spread_radius = 2;
  double objective = 0.0;
  GridFunction u;
  std::vector<std::pair<int, double>> ops;  // (column index, value)
};

LoadedSolution parse_solution(const std::string& text);
LoadedSolution load_solution(const std::string& path);

std::string report_to_json(const MenuOptimalityReport& rep);
std::string partition_to_json(const Partition2D& p, int curve_samples = 200);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace mdopt
