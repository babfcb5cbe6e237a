#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <thread>

#include "CLI11.hpp"
#include "config.hpp"
#include "json.hpp"
#include "manifest.hpp"
#include "pool.hpp"
#include "wavecone/energy.hpp"
#include "wavecone/error.hpp"
#include "wavecone/functionals.hpp"
#include "wavecone/geometry.hpp"
#include "wavecone/io.hpp"
#include "wavecone/nonlinear.hpp"
#include "wavecone/radiation.hpp"
#include "wavecone/solitons.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace wavecone::cli {
namespace {

struct Context {
  ExperimentConfig config;
  fs::path out;
  std::size_t threads = 1;
  std::vector<std::string> outputs;

  std::ofstream open(const std::string& name) {
    std::ofstream f(out / name, std::ios::binary);
    if (!f) throw ConfigError("cannot write '" + (out / name).string() + "'");
    outputs.push_back(name);
    return f;
  }
  void write_json(const std::string& name, const json& j) { open(name) << j.dump(2) << '\n'; }
};

// JSON numbers keep full precision; non-finite values become null.
json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

const char* status_name(RunStatus s) { return s == RunStatus::global ? "global" : "blowup"; }

json energy_series_json(const Trajectory& traj) {
  json series = json::array();
  const auto e = traj.energy_series();
  for (std::size_t j = 0; j < e.size(); ++j) {
    series.push_back({{"t", traj.snapshots[j].t}, {"energy", number(e[j])}});
  }
  return series;
}

Trajectory run(const ExperimentConfig& c) {
  return evolve_nonlinear(c.initial_state(), c.T, c.dim(), c.scheme());
}

void cmd_simulate(Context& ctx) {
  const auto traj = run(ctx.config);
  json j;
  j["status"] = status_name(traj.status);
  j["t_end_or_blowup"] = traj.t_end;
  j["energy_series"] = energy_series_json(traj);
  j["defect_series"] = json::array();
  ctx.write_json("trajectory.json", j);
  auto f = ctx.open("snapshots.csv");
  write_snapshots_csv(f, traj, ctx.config.snapshot_nodes);
}

void cmd_exterior(Context& ctx) {
  const auto& c = ctx.config;
  const auto traj = run(c);
  if (traj.status != RunStatus::global) {
    throw PreconditionError("exterior diagnostics need a global trajectory; the run blew up at t = " +
                            format_double(traj.t_end));
  }
  const auto times = traj.times();
  struct Result {
    double energy = 0.0, radiated = 0.0;
    std::vector<double> defect;
  };
  std::vector<Result> results(c.A.size());
  parallel_for(c.A.size(), ctx.threads, [&](std::size_t k) {
    const auto scat = extract_scattering_part(traj, c.A[k]);
    results[k].energy = scat.energy;
    results[k].radiated = scat.profile.norm_squared();
    results[k].defect = exterior_defect_series(traj, scat, c.A[k], times);
  });

  json defects = json::array();
  auto csv = ctx.open("exterior.csv");
  csv << "A,t,defect\n";
  for (std::size_t k = 0; k < c.A.size(); ++k) {
    for (std::size_t j = 0; j < times.size(); ++j) {
      csv << format_double(c.A[k]) << ',' << format_double(times[j]) << ','
          << format_double(results[k].defect[j]) << '\n';
      defects.push_back({{"A", c.A[k]}, {"t", times[j]}, {"defect", number(results[k].defect[j])}});
    }
  }
  auto summary = ctx.open("exterior_summary.csv");
  summary << "A,E,E_L,radiated\n";
  const double e0 = energy(traj.snapshots.front(), traj.dim).total;
  for (std::size_t k = 0; k < c.A.size(); ++k) {
    summary << format_double(c.A[k]) << ',' << format_double(e0) << ','
            << format_double(results[k].energy) << ',' << format_double(results[k].radiated) << '\n';
  }
  json j;
  j["status"] = status_name(traj.status);
  j["t_end_or_blowup"] = traj.t_end;
  j["energy_series"] = energy_series_json(traj);
  j["defect_series"] = defects;
  ctx.write_json("trajectory.json", j);
}

double relative_l2(const RadiationProfile& ref, const RadiationProfile& got) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    const double d = ref.G[i] - got.G_at(ref.eta(i));
    num += d * d;
    den += ref.G[i] * ref.G[i];
  }
  return std::sqrt(num / den);
}

LinearEvolution free_wave(const RadialState& data, Dimension dim, double cfl) {
  return {data, dim, dim.value() == 3 ? LinearMethod::exact_3d : LinearMethod::numeric, cfl};
}

void cmd_radiation(Context& ctx) {
  const auto& c = ctx.config;
  const Dimension dim = c.dim();
  const auto data = c.initial_state();
  const auto ev = free_wave(data, dim, c.cfl);
  const auto profile = extract_radiation(ev, c.T, c.eta_min, c.eta_max);
  {
    auto f = ctx.open("radiation.csv");
    write_profile_csv(f, profile);
  }
  InverseOptions inv;
  inv.dr = c.dr;
  inv.cfl = c.cfl;

  json j;
  const double e_l = linear_energy(data, dim);
  j["E_L"] = e_l;
  j["G_norm_squared"] = profile.norm_squared();
  j["isometry_relative_error"] = number(std::abs(profile.norm_squared() - e_l) / e_l);
  j["incoming_residual"] = incoming_residual(ev, c.T, c.eta_min, c.eta_max);

  // Even dimensions leave a tail behind the cone, so the extracted profile is
  // only invertible when it vanishes at both ends of the window.
  try {
    const auto back = inverse_radiation(profile, inv);
    auto f = ctx.open("reconstructed.csv");
    write_state_csv(f, back);
    const auto diff = combine(1.0, data, -1.0, resample(back, data.grid));
    j["reconstruction_relative_error"] = number(std::sqrt(linear_energy(diff, dim) / e_l));
  } catch (const RangeError& e) {
    j["reconstruction_relative_error"] = nullptr;
    j["reconstruction_skipped"] = e.what();
  }

  // extract o inverse on a Gaussian primitive centred in the window
  const double center = 0.5 * (c.eta_min + c.eta_max);
  const double width = (c.eta_max - c.eta_min) / 20.0;
  const auto gauss = gaussian_profile(dim, center, width, c.eta_min, c.eta_max, c.dr);
  auto rt_data = inverse_radiation(gauss, inv);
  rt_data = resample(rt_data, RadialGrid::from_spacing(rt_data.grid.r_max() + c.T + 8.0, c.dr));
  const auto rt = extract_radiation(free_wave(rt_data, dim, c.cfl), c.T, c.eta_min, c.eta_max);
  j["roundtrip"] = {{"center", center}, {"width", width}, {"relative_l2_error", relative_l2(gauss, rt)}};
  ctx.write_json("radiation_report.json", j);
}

void cmd_soliton(Context& ctx) {
  const auto& c = ctx.config;
  const Dimension dim = c.dim();
  const double e_w = ground_state_energy(dim);
  std::vector<double> energies(c.ell.size());
  parallel_for(c.ell.size(), ctx.threads, [&](std::size_t k) {
    SolitonSpec spec;
    spec.ell.assign(static_cast<std::size_t>(dim.value()), 0.0);
    spec.ell[0] = c.ell[k];
    energies[k] = soliton_energy(spec, dim);
  });
  auto table = ctx.open("soliton_energy.csv");
  table << "ell,energy,ratio,expected\n";
  for (std::size_t k = 0; k < c.ell.size(); ++k) {
    table << format_double(c.ell[k]) << ',' << format_double(energies[k]) << ','
          << format_double(energies[k] / e_w) << ','
          << format_double(1.0 / std::sqrt(1.0 - c.ell[k] * c.ell[k])) << '\n';
  }

  json j;
  j["energy_W"] = e_w;
  const double r_cut = 10.0;
  const double coarse = elliptic_residual(RadialGrid::from_spacing(2.0 * r_cut, c.dr), dim, r_cut);
  const double fine = elliptic_residual(RadialGrid::from_spacing(2.0 * r_cut, 0.5 * c.dr), dim, r_cut);
  j["elliptic_residual"] = {{"dr", c.dr}, {"coarse", coarse}, {"fine", fine},
                            {"order", std::log2(coarse / fine)}};
  const auto data = c.initial_state();
  if (data.sup_norm() > 0.0) {
    const auto fit = fit_soliton(data, dim);
    j["fit"] = {{"lambda", fit.lambda}, {"sign", fit.sign}, {"residual", fit.residual}};
  }
  ctx.write_json("soliton_checks.json", j);
}

void cmd_virial(Context& ctx) {
  const auto& c = ctx.config;
  const auto traj = run(c);
  const auto rep = virial_report(traj, c.alpha, c.center_offset);
  {
    auto f = ctx.open("virial.csv");
    write_virial_csv(f, rep);
  }
  auto q = ctx.open("virial_quantities.csv");
  q << "t,a,b,c,d\n";
  for (std::size_t j = 0; j < rep.times.size(); ++j) {
    q << format_double(rep.times[j]) << ',' << format_double(rep.a[j]) << ','
      << format_double(rep.b[j]) << ',' << format_double(rep.c[j]) << ','
      << format_double(rep.d[j]) << '\n';
  }
  json j;
  j["status"] = status_name(traj.status);
  j["pohozaev_relative_residual"] =
      localized_pohozaev_check(c.dim(), c.alpha, c.center_offset).relative_residual;
  for (const auto& name : virial_identities()) j["max_residual"][name] = rep.max_residual(name);
  ctx.write_json("virial_summary.json", j);
}

void cmd_channels(Context& ctx) {
  const auto& c = ctx.config;
  if (c.dimension != 3) throw ConfigError("channels of energy are computed for N = 3 only");
  const auto data = c.initial_state();
  const auto grid = data.grid;
  std::vector<double> times;
  for (double t = 0.0; t <= c.T + 1e-12; t += 0.5) times.push_back(t);
  const RadialState cases[2] = {
      RadialState{grid, 0.0, data.u, std::vector<double>(grid.size(), 0.0)},
      RadialState{grid, 0.0, std::vector<double>(grid.size(), 0.0), data.u}};
  const char* names[2] = {"position", "velocity"};
  std::vector<std::vector<ChannelSample>> rows(2);
  parallel_for(2, ctx.threads, [&](std::size_t k) { rows[k] = channels_exterior_energy(cases[k], times); });
  auto f = ctx.open("channels.csv");
  f << "t,case,exterior,fraction\n";
  for (std::size_t k = 0; k < 2; ++k) {
    for (const auto& s : rows[k]) {
      f << format_double(s.t) << ',' << names[k] << ',' << format_double(s.exterior) << ','
        << format_double(s.fraction) << '\n';
    }
  }
}

json report_json(const PropertyReport& r) {
  return {{"checked", r.checked}, {"violations", r.violations}, {"min_slack", r.min_slack}};
}

bool cmd_geometry(Context& ctx) {
  const auto& c = ctx.config;
  json j;
  bool ok = true;
  json lemma = json::array();
  const ConeParams cases[] = {{10.0, 0.1, 1.0}, {0.0, 0.1, 1.0}, {2.0, 0.7, 50.0}};
  for (const auto& p : cases) {
    const auto rep = cone_property_check(p, c.samples, c.dimension, c.seed);
    ok = ok && rep.small_ball.ok() && rep.wide_angle.ok() && rep.shell_angle.ok();
    lemma.push_back({{"tau", p.tau},
                     {"theta", p.theta},
                     {"ell", p.ell},
                     {"small_ball", report_json(rep.small_ball)},
                     {"wide_angle", report_json(rep.wide_angle)},
                     {"shell_angle", report_json(rep.shell_angle)},
                     {"shell_angle_2x", report_json(rep.shell_angle_2x)}});
  }
  j["lemma"] = lemma;
  const auto cos_rep = cos_inequality_check(10000);
  ok = ok && cos_rep.ok();
  j["cosine"] = report_json(cos_rep);

  UniformSource rng(c.seed);
  double worst = 0.0;
  constexpr int kPoints = 16;
  for (int k = 0; k < kPoints; ++k) {
    double x[3];
    for (double& v : x) v = 4.0 * rng.next() - 2.0;
    const double theta = 0.05 + 1.4 * rng.next();
    const double exact = dist_gamma(x, theta);
    const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    const double sampled = dist_gamma_sampled(x, theta, 1000, 1000, 2.0 * r + 1.0);
    if (exact > 0.0) worst = std::max(worst, std::abs(sampled - exact) / exact);
  }
  ok = ok && worst <= 1e-3;
  j["dist_oracle"] = {{"points", kPoints}, {"max_relative_error", worst}};
  j["ok"] = ok;
  ctx.write_json("geometry.json", j);
  return ok;
}

}  // namespace
}  // namespace wavecone::cli

int main(int argc, char** argv) {
  using namespace wavecone;
  using namespace wavecone::cli;

  CLI::App app{"wavecone: experiments for the focusing energy-critical wave equation"};
  app.require_subcommand(1);
  std::string config_path;
  std::string out_dir = "out";
  std::uint64_t seed = 42;
  bool seed_given = false;
  std::size_t threads = 0;
  app.add_option("--config", config_path, "INI experiment configuration")->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "output directory");
  app.add_option_function<std::uint64_t>(
      "--seed", [&](std::uint64_t s) { seed = s, seed_given = true; }, "random seed (default 42)");
  app.add_option("--threads", threads, "worker threads (0 = all cores)");

  const char* commands[][2] = {
      {"simulate", "nonlinear run: trajectory summary and snapshots"},
      {"radiation", "radiation field, isometry and round trip through the inverse"},
      {"exterior", "scattering parts and exterior defect curves over the A list"},
      {"soliton", "energy law of boosted solitons, residual checks and fit"},
      {"virial", "localized virial identities with exact remainders"},
      {"channels", "exterior energy of free waves with (v0, 0) and (0, v1) data"},
      {"geometry-selftest", "cone geometry properties and the cosine inequality"}};
  for (const auto& cmd : commands) app.add_subcommand(cmd[0], cmd[1]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  const auto start = std::chrono::steady_clock::now();
  Context ctx;
  std::string command = app.get_subcommands().front()->get_name();
  try {
    std::string config_text;
    if (!config_path.empty()) {
      ctx.config = load_config(config_path);
      config_text = read_file(config_path);
    }
    if (seed_given) ctx.config.seed = seed;
    ctx.threads = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    ctx.out = out_dir;
    fs::create_directories(ctx.out);

    bool ok = true;
    if (command == "simulate") cmd_simulate(ctx);
    else if (command == "radiation") cmd_radiation(ctx);
    else if (command == "exterior") cmd_exterior(ctx);
    else if (command == "soliton") cmd_soliton(ctx);
    else if (command == "virial") cmd_virial(ctx);
    else if (command == "channels") cmd_channels(ctx);
    else ok = cmd_geometry(ctx);

    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    json manifest;
    manifest["command"] = command;
    manifest["config"] = config_path;
    manifest["config_sha256"] = sha256_hex(config_text);
    manifest["seed"] = ctx.config.seed;
    manifest["threads"] = ctx.threads;
    manifest["versions"] = json::parse(versions_json());
    manifest["wall_time_s"] = wall;
    manifest["outputs"] = ctx.outputs;
    std::ofstream(ctx.out / "manifest.json") << manifest.dump(2) << '\n';
    if (!ok) {
      std::cerr << "error: code=property_failure report=" << (ctx.out / "geometry.json").string()
                << '\n';
      return 4;
    }
    return 0;
  } catch (const AccuracyError& e) {
    const auto report = ctx.out / "error_report.json";
    std::error_code ec;
    fs::create_directories(ctx.out, ec);
    std::ofstream(report) << json{{"command", command}, {"code", e.code()}, {"message", e.what()}}.dump(2)
                          << '\n';
    std::cerr << "error: code=" << e.code() << " report=" << report.string()
              << " message=" << json(e.what()).dump() << '\n';
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: code=" << e.code() << " message=" << json(e.what()).dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: code=internal message=" << json(e.what()).dump() << '\n';
    return 1;
  }
}
