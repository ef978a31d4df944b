#include "cfs_tool/cli.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "cfs/config.hpp"
#include "cfs/report.hpp"
#include "cfs/sampling.hpp"
#include "cfs/validation.hpp"

namespace cfs::tool {

namespace fs = std::filesystem;

namespace {

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

Vec3 parse_vec3(const std::string& text, const char* flag) {
  Vec3 v;
  std::size_t pos = 0;
  for (int k = 0; k < 3; ++k) {
    const std::size_t end = k < 2 ? text.find(',', pos) : text.size();
    if (end == std::string::npos) throw UsageError(std::string(flag) + ": expected x,y,z");
    const std::string field = text.substr(pos, end - pos);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
      throw UsageError(std::string(flag) + ": not a number: '" + field + "'");
    }
    v[k] = value;
    pos = end + 1;
  }
  if (!is_finite(v)) throw UsageError(std::string(flag) + ": values must be finite");
  return v;
}

// "all" or "1-2,3-4"
PairFilter parse_pairs(const std::string& text) {
  if (text == "all") return PairFilter::all();
  std::vector<LegPair> pairs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw UsageError("--pairs: expected i-j, got '" + item + "'");
    try {
      pairs.push_back(leg_pair(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1))));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--pairs: ") + e.what());
    }
  }
  if (pairs.empty()) throw UsageError("--pairs: empty list");
  return PairFilter(std::move(pairs));
}

void write_file(const fs::path& path, const std::function<void(std::ostream&)>& body) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open output file: " + path.string());
  body(f);
  if (!f) throw std::runtime_error("failed writing: " + path.string());
}

fs::path resolve(const OutputBlock& out, const std::string& override_dir, const std::string& name) {
  return fs::path(override_dir.empty() ? out.directory : override_dir) / name;
}

int cmd_validate(const RunConfigFile& cfg, const std::string& out_dir, unsigned threads, std::ostream& out) {
  const ValidationReport report = validate_cfs(cfg.validation_config(), RunOptions{threads});
  const auto& o = cfg.output;
  if (o.write_json) {
    write_file(resolve(o, out_dir, o.summary_json), [&](std::ostream& f) { f << validation_summary_json(report); });
  }
  if (o.write_csv) {
    write_file(resolve(o, out_dir, o.samples_csv), [&](std::ostream& f) { write_validation_csv(f, report); });
    write_file(resolve(o, out_dir, o.unsafe_csv), [&](std::ostream& f) { write_unsafe_csv(f, report); });
  }
  out << "verdict: " << to_string(report.verdict) << "\n"
      << "samples: " << report.total_samples << " (" << report.radii.size() << " spheres x "
      << report.directions_per_sphere << " directions)\n"
      << "unsafe: " << report.unsafe.size() << ", inside r3: " << report.unsafe_inside_cfs.size() << "\n"
      << "time: " << format_fixed(report.seconds, 3) << " s\n";
  return report.verdict == Verdict::validated ? kExitOk : kExitViolated;
}

int cmd_estimate(const RunConfigFile& cfg, const std::string& out_dir, unsigned threads, std::ostream& out) {
  const EstimateParams params = cfg.estimate_params();
  const Vec3 orientation = cfg.estimate_orientation();
  const CfsEstimate est = estimate_cfs(cfg.arch, orientation, params, RunOptions{threads});
  const auto& o = cfg.output;
  if (o.write_json) {
    write_file(resolve(o, out_dir, o.estimate_json),
               [&](std::ostream& f) { f << estimate_summary_json(est, cfg.arch, orientation, params); });
  }
  out << "r3_est: " << format_fixed(est.r3) << " mm" << (est.censored ? " (censored at r_max)" : "") << "\n";
  return kExitOk;
}

int cmd_dump_samples(const RunConfigFile& cfg, const std::string& out_path, std::ostream& out) {
  const ValidationConfig vc = cfg.validation_config();
  vc.validate();
  const SampleSet set = shell_samples(vc.shell(), vc.n_s);
  if (out_path.empty() || out_path == "-") {
    write_samples_csv(out, set);
  } else {
    write_file(out_path, [&](std::ostream& f) { write_samples_csv(f, set); });
  }
  return kExitOk;
}

int cmd_check_pose(const RunConfigFile& cfg, const std::string& p_text, const std::string& c_text,
                   const std::string& pairs_text, std::ostream& out) {
  Pose pose;
  pose.p = p_text.empty() ? cfg.arch.neutral_point() : parse_vec3(p_text, "--p");
  pose.c = c_text.empty() ? Vec3::Zero() : parse_vec3(c_text, "--c");
  PairFilter pairs = PairFilter::all();
  if (!pairs_text.empty()) {
    pairs = parse_pairs(pairs_text);
  } else if (cfg.scenario) {
    pairs = cfg.scenario->pairs;
  }
  const PoseClearance pc = pose_min_clearance(cfg.arch, pose, pairs);
  out << pose_clearance_json(cfg.arch, pose, pc);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Collision-free sphere validation for semi-regular Stewart-Gough platforms", "cfsval"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::string out_path;
  std::string p_text;
  std::string c_text;
  std::string pairs_text;
  unsigned threads = 1;

  auto* validate = app.add_subcommand("validate", "Validate a collision-free radius over a sampled shell");
  validate->add_option("--config", config_path, "JSON run configuration")->required();
  validate->add_option("--output-dir", out_dir, "Override output.directory");
  validate->add_option("--threads", threads, "Worker threads (0 = auto); never changes outputs");

  auto* estimate = app.add_subcommand("estimate", "Estimate the collision-free radius by ray search");
  estimate->add_option("--config", config_path, "JSON run configuration")->required();
  estimate->add_option("--output-dir", out_dir, "Override output.directory");
  estimate->add_option("--threads", threads, "Worker threads (0 = auto); never changes outputs");

  auto* dump = app.add_subcommand("dump-samples", "Write the shell samples as CSV");
  dump->add_option("--config", config_path, "JSON run configuration")->required();
  dump->add_option("--out", out_path, "Output CSV path (default: stdout)");

  auto* check = app.add_subcommand("check-pose", "Print pairwise leg clearances for one pose");
  check->add_option("--config", config_path, "JSON run configuration")->required();
  check->add_option("--p", p_text, "Platform position x,y,z in mm (default: neutral point)");
  check->add_option("--c", c_text, "Rodrigues parameters c1,c2,c3 (default: 0,0,0)");
  check->add_option("--pairs", pairs_text, "all or i-j,... (default: scenario pairs or all)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "cfsval: " << e.what() << "\n" << "Run with --help for usage.\n";
    return kExitUsage;
  }

  try {
    const RunConfigFile cfg = load_config(config_path);
    if (*validate) return cmd_validate(cfg, out_dir, threads, out);
    if (*estimate) return cmd_estimate(cfg, out_dir, threads, out);
    if (*dump) return cmd_dump_samples(cfg, out_path, out);
    if (*check) return cmd_check_pose(cfg, p_text, c_text, pairs_text, out);
  } catch (const ConfigError& e) {
    err << "cfsval: config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "cfsval: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cfs::tool
