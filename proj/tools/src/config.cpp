#include "config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "wavecone/error.hpp"
#include "wavecone/io.hpp"
#include "wavecone/solitons.hpp"

namespace wavecone::cli {

namespace pt = boost::property_tree;

namespace {

const std::set<std::string> kKeys = {
    "run.dimension",     "run.T",          "grid.r_max",          "grid.dr",
    "scheme.cfl",        "scheme.theta",   "scheme.stride",       "data.kind",
    "data.amplitude",    "data.velocity",  "data.center",         "data.width",
    "data.a",            "data.lambda",    "data.file",           "diagnostics.A",
    "diagnostics.alpha", "diagnostics.center_offset",             "diagnostics.eta_min",
    "diagnostics.eta_max",                 "diagnostics.ell",     "diagnostics.samples",
    "diagnostics.snapshot_nodes",          "diagnostics.seed",
};

std::vector<double> parse_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = item.find_last_not_of(" \t");
    try {
      std::size_t used = 0;
      const std::string tok = item.substr(b, e - b + 1);
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ConfigError("key '" + key + "': cannot parse list entry '" + item + "'");
    }
  }
  if (out.empty()) throw ConfigError("key '" + key + "': empty list");
  return out;
}

template <class T>
void read(const pt::ptree& tree, const std::string& key, T& value) {
  const auto node = tree.get_optional<std::string>(key);
  if (!node) return;
  try {
    value = tree.get<T>(key);
  } catch (const pt::ptree_bad_data&) {
    throw ConfigError("key '" + key + "': bad value '" + *node + "'");
  }
}

double bump(double r, double center, double width) {
  const double s = (r - center) / width;
  if (std::abs(s) >= 1.0) return 0.0;
  const double q = 1.0 - s * s;
  return q * q * q * q;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  pt::ptree tree;
  try {
    pt::read_ini(path.string(), tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  for (const auto& [section, body] : tree) {
    for (const auto& [key, value] : body) {
      (void)value;
      if (!kKeys.count(section + "." + key)) {
        throw ConfigError("unknown config key '" + section + "." + key + "'");
      }
    }
  }

  ExperimentConfig c;
  read(tree, "run.dimension", c.dimension);
  read(tree, "run.T", c.T);
  read(tree, "grid.r_max", c.r_max);
  read(tree, "grid.dr", c.dr);
  read(tree, "scheme.cfl", c.cfl);
  read(tree, "scheme.theta", c.theta);
  read(tree, "scheme.stride", c.stride);
  read(tree, "data.kind", c.data.kind);
  read(tree, "data.amplitude", c.data.amplitude);
  read(tree, "data.velocity", c.data.velocity);
  read(tree, "data.center", c.data.center);
  read(tree, "data.width", c.data.width);
  read(tree, "data.a", c.data.a);
  read(tree, "data.lambda", c.data.lambda);
  std::string file;
  read(tree, "data.file", file);
  if (!file.empty()) {
    c.data.file = std::filesystem::path(file);
    if (c.data.file.is_relative()) c.data.file = path.parent_path() / c.data.file;
  }
  if (auto s = tree.get_optional<std::string>("diagnostics.A")) c.A = parse_list("diagnostics.A", *s);
  read(tree, "diagnostics.alpha", c.alpha);
  read(tree, "diagnostics.center_offset", c.center_offset);
  read(tree, "diagnostics.eta_min", c.eta_min);
  read(tree, "diagnostics.eta_max", c.eta_max);
  if (auto s = tree.get_optional<std::string>("diagnostics.ell")) {
    c.ell = parse_list("diagnostics.ell", *s);
  }
  read(tree, "diagnostics.samples", c.samples);
  read(tree, "diagnostics.snapshot_nodes", c.snapshot_nodes);
  read(tree, "diagnostics.seed", c.seed);

  (void)c.dim();  // validates the dimension
  if (!(c.T >= 0.0)) throw ConfigError("run.T must be >= 0");
  if (!(c.dr > 0.0)) throw ConfigError("grid.dr must be positive");
  if (c.r_max < 0.0) throw ConfigError("grid.r_max must be >= 0");
  if (c.stride == 0) throw ConfigError("scheme.stride must be positive");
  if (!(c.alpha > 0.0)) throw ConfigError("diagnostics.alpha must be positive");
  if (!(c.eta_max > c.eta_min)) throw ConfigError("diagnostics.eta_min must be below eta_max");
  const std::set<std::string> kinds = {"zero", "bump", "ground_state", "csv"};
  if (!kinds.count(c.data.kind)) throw ConfigError("data.kind must be zero, bump, ground_state or csv");
  if (c.data.kind == "bump" && !(c.data.width > 0.0)) throw ConfigError("data.width must be positive");
  if (c.data.kind == "csv") {
    if (c.data.file.empty()) throw ConfigError("data.kind = csv needs data.file");
    if (!std::filesystem::exists(c.data.file)) {
      throw ConfigError("data.file '" + c.data.file.string() + "' does not exist");
    }
  }
  return c;
}

SchemeOptions ExperimentConfig::scheme() const {
  SchemeOptions s;
  s.cfl = cfl;
  s.blowup_threshold = theta;
  s.snapshot_stride = stride;
  s.boundary = data.kind == "ground_state" ? BoundaryPolicy::frozen : BoundaryPolicy::causal;
  return s;
}

double ExperimentConfig::grid_radius() const {
  if (r_max > 0.0) return r_max;
  double support = 0.0;
  if (data.kind == "bump") support = std::max(0.0, data.center + data.width);
  if (data.kind == "ground_state") support = 40.0;
  const double room = support + T + 4.0;
  return std::ceil(room / dr) * dr;
}

RadialState ExperimentConfig::initial_state() const {
  if (data.kind == "csv") {
    std::ifstream in(data.file);
    if (!in) throw ConfigError("cannot open '" + data.file.string() + "'");
    return read_state_csv(in);
  }
  const auto grid = RadialGrid::from_spacing(grid_radius(), dr);
  if (data.kind == "zero") return RadialState::zero(grid);
  if (data.kind == "ground_state") return ground_state(grid, dim(), data.a, data.lambda);
  const auto d = data;
  return RadialState::from_functions(
      grid, [&](double r) { return d.amplitude * bump(r, d.center, d.width); },
      [&](double r) { return d.velocity * bump(r, d.center, d.width); });
}

}  // namespace wavecone::cli
