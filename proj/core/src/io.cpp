#include "wavecone/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "wavecone/error.hpp"

namespace wavecone {

std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

// Splits a CSV line on commas (no quoting: all fields are numeric or bare words).
std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) {
    while (!field.empty() && (field.back() == '\r' || field.back() == ' ')) field.pop_back();
    while (!field.empty() && field.front() == ' ') field.erase(field.begin());
    out.push_back(field);
  }
  return out;
}

double parse(const std::string& s, std::size_t line) {
  double x = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ConfigError("line " + std::to_string(line) + ": cannot parse number '" + s + "'");
  }
  return x;
}

// Numeric table with a header naming its columns.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;

  std::size_t find(const std::string& name) const {
    for (std::size_t j = 0; j < header.size(); ++j) {
      if (header[j] == name) return j;
    }
    throw ConfigError("missing CSV column '" + name + "'");
  }
  bool has(const std::string& name) const {
    for (const auto& h : header) {
      if (h == name) return true;
    }
    return false;
  }
};

Table read_table(std::istream& is) {
  Table t;
  std::string line;
  if (!std::getline(is, line)) throw ConfigError("empty CSV input");
  t.header = split(line);
  t.columns.resize(t.header.size());
  std::size_t n = 1;
  while (std::getline(is, line)) {
    ++n;
    if (line.empty() || line == "\r") continue;
    const auto fields = split(line);
    if (fields.size() != t.header.size()) {
      throw ConfigError("line " + std::to_string(n) + ": expected " +
                        std::to_string(t.header.size()) + " fields");
    }
    for (std::size_t j = 0; j < fields.size(); ++j) t.columns[j].push_back(parse(fields[j], n));
  }
  return t;
}

// Spacing of a uniform coordinate column.
double uniform_spacing(const std::vector<double>& x, const char* name) {
  if (x.size() < 2) throw ConfigError(std::string("column '") + name + "' needs two rows");
  const double h = (x.back() - x.front()) / static_cast<double>(x.size() - 1);
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (std::abs(x[i] - x[i - 1] - h) > 1e-9 * std::max(1.0, std::abs(h))) {
      throw ConfigError(std::string("column '") + name + "' is not uniformly spaced");
    }
  }
  return h;
}

}  // namespace

void write_profile_csv(std::ostream& os, const RadiationProfile& p) {
  os << "eta,G,g\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    os << format_double(p.eta(i)) << ',' << format_double(p.G[i]) << ','
       << format_double(p.has_primitive() ? p.g[i] : 0.0) << '\n';
  }
}

RadiationProfile read_profile_csv(std::istream& is, Dimension dim) {
  const Table t = read_table(is);
  const auto& eta = t.columns[t.find("eta")];
  RadiationProfile p;
  p.dim = dim;
  p.d_eta = uniform_spacing(eta, "eta");
  p.eta_min = eta.front();
  p.G = t.columns[t.find("G")];
  if (t.has("g")) {
    p.g = t.columns[t.find("g")];
  } else {
    p.attach_primitive();
  }
  return p;
}

void write_state_csv(std::ostream& os, const RadialState& s) {
  os << "r,u,ut\n";
  for (std::size_t i = 0; i < s.grid.size(); ++i) {
    os << format_double(s.grid.node(i)) << ',' << format_double(s.u[i]) << ','
       << format_double(s.v[i]) << '\n';
  }
}

RadialState read_state_csv(std::istream& is) {
  const Table t = read_table(is);
  const auto& r = t.columns[t.find("r")];
  uniform_spacing(r, "r");
  if (std::abs(r.front()) > 1e-12) throw ConfigError("column 'r' must start at 0");
  const auto grid = RadialGrid::from_nodes(r.back(), r.size());
  RadialState s{grid, 0.0, t.columns[t.find("u")], t.columns[t.find("ut")]};
  s.validate();
  return s;
}

void write_snapshots_csv(std::ostream& os, const Trajectory& traj, std::size_t node_stride) {
  if (node_stride == 0) node_stride = 1;
  os << "t,r,u,ut\n";
  for (const auto& s : traj.snapshots) {
    const std::string t = format_double(s.t);
    for (std::size_t i = 0; i < s.grid.size(); i += node_stride) {
      os << t << ',' << format_double(s.grid.node(i)) << ',' << format_double(s.u[i]) << ','
         << format_double(s.v[i]) << '\n';
    }
  }
}

void write_virial_csv(std::ostream& os, const VirialReport& report) {
  os << "t,identity,lhs,rhs,residual\n";
  for (const auto& row : report.rows) {
    os << format_double(row.t) << ',' << row.identity << ',' << format_double(row.lhs) << ','
       << format_double(row.rhs) << ',' << format_double(row.residual) << '\n';
  }
}

}  // namespace wavecone
