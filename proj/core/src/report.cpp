#include "cfs/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

namespace cfs {

using nlohmann::ordered_json;

std::string format_fixed(double value, int decimals) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed, decimals);
  if (ec != std::errc()) throw std::runtime_error("format_fixed: value does not fit");
  std::string s(buf.data(), ptr);
  // Avoid "-0.000000" for tiny negatives that round to zero.
  if (s.starts_with('-') && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

namespace {

ordered_json vec_json(const Vec3& v) { return ordered_json::array({v.x(), v.y(), v.z()}); }

double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

ordered_json arch_json(const ArchitectureParams& a) {
  return {{"r_f_mm", a.r_f},
          {"r_m_mm", a.r_m},
          {"gamma_f_deg", rad_to_deg(a.gamma_f)},
          {"gamma_m_deg", rad_to_deg(a.gamma_m)},
          {"r_c_mm", a.r_c},
          {"z0_mm", a.z0}};
}

ordered_json pairs_json(const PairFilter& f) {
  if (f.is_all()) return "all";
  auto arr = ordered_json::array();
  for (const auto& p : f.pairs()) arr.push_back({p.i, p.j});
  return arr;
}

ordered_json pair_json(const LegPair& p) { return ordered_json::array({p.i, p.j}); }

ordered_json sample_json(const SampleResult& s) {
  return {{"index", s.index},
          {"position_mm", vec_json(s.position)},
          {"radius_mm", s.radius},
          {"min_clearance_mm", s.min_clearance},
          {"worst_pair", pair_json(s.worst_pair)}};
}

void write_row_prefix(std::ostream& out, const SampleResult& s) {
  out << s.index << ',' << format_fixed(s.position.x()) << ',' << format_fixed(s.position.y()) << ','
      << format_fixed(s.position.z()) << ',' << format_fixed(s.radius) << ',' << format_fixed(s.min_clearance)
      << ',' << s.worst_pair.i << ',' << s.worst_pair.j;
}

}  // namespace

void write_samples_csv(std::ostream& out, const SampleSet& samples) {
  out << "x,y,z,radius\n";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& p = samples.points[i];
    out << format_fixed(p.x()) << ',' << format_fixed(p.y()) << ',' << format_fixed(p.z()) << ','
        << format_fixed(samples.radius_of(i)) << '\n';
  }
}

void write_validation_csv(std::ostream& out, const ValidationReport& report) {
  out << "index,x,y,z,radius,min_clearance,worst_i,worst_j,safe\n";
  for (const auto& s : report.samples) {
    write_row_prefix(out, s);
    out << ',' << (s.safe ? 1 : 0) << '\n';
  }
}

void write_unsafe_csv(std::ostream& out, const ValidationReport& report) {
  out << "index,x,y,z,radius,min_clearance,worst_i,worst_j,inside_cfs\n";
  for (const auto& s : report.unsafe) {
    write_row_prefix(out, s);
    out << ',' << (s.radius <= report.config.r3 + kInsideTolerance ? 1 : 0) << '\n';
  }
}

std::string validation_summary_json(const ValidationReport& report) {
  const auto& cfg = report.config;

  double min_inside = std::numeric_limits<double>::infinity();
  std::size_t inside_count = 0;
  for (const auto& s : report.samples) {
    if (s.radius <= cfg.r3 + kInsideTolerance) {
      ++inside_count;
      min_inside = std::min(min_inside, s.min_clearance);
    }
  }

  ordered_json unsafe_radius = nullptr;
  if (!report.unsafe.empty()) {
    const auto it = std::min_element(report.unsafe.begin(), report.unsafe.end(),
                                     [](const auto& a, const auto& b) { return a.radius < b.radius; });
    unsafe_radius = it->radius;
  }

  std::map<std::pair<int, int>, std::size_t> by_pair;
  for (const auto& s : report.unsafe) ++by_pair[{s.worst_pair.i, s.worst_pair.j}];
  auto pair_counts = ordered_json::array();
  for (const auto& [p, n] : by_pair) pair_counts.push_back({{"pair", {p.first, p.second}}, {"count", n}});

  auto inside = ordered_json::array();
  for (const auto& s : report.unsafe_inside_cfs) inside.push_back(sample_json(s));

  ordered_json doc = {
      {"verdict", std::string(to_string(report.verdict))},
      {"config",
       {{"architecture", arch_json(cfg.arch)},
        {"rodrigues", vec_json(cfg.orientation)},
        {"r3_mm", cfg.r3},
        {"delta", cfg.delta},
        {"delta_r_mm", cfg.delta_r},
        {"n_s", cfg.n_s},
        {"pairs", pairs_json(cfg.pairs)}}},
      {"shell",
       {{"center_mm", vec_json(report.shell.center)},
        {"r_inner_mm", report.shell.r_inner},
        {"r_outer_mm", report.shell.r_outer},
        {"delta_r_mm", report.shell.delta_r},
        {"radii_mm", report.radii}}},
      {"directions_per_sphere", report.directions_per_sphere},
      {"total_samples", report.total_samples},
      {"samples_inside_cfs", inside_count},
      {"unsafe_count", report.unsafe.size()},
      {"unsafe_inside_cfs_count", report.unsafe_inside_cfs.size()},
      {"min_unsafe_radius_mm", unsafe_radius},
      {"min_clearance_inside_cfs_mm", inside_count ? ordered_json(min_inside) : ordered_json(nullptr)},
      {"unsafe_by_worst_pair", pair_counts},
      {"unsafe_inside_cfs", inside},
  };
  return doc.dump(2) + "\n";
}

std::string estimate_summary_json(const CfsEstimate& est, const ArchitectureParams& arch,
                                  const Vec3& orientation, const EstimateParams& params) {
  ordered_json doc = {
      {"r3_est_mm", est.r3},
      {"censored", est.censored},
      {"limiting_direction", vec_json(est.limiting_direction)},
      {"limiting_point_mm", vec_json(arch.neutral_point() + est.r3 * est.limiting_direction)},
      {"directions", est.directions},
      {"config",
       {{"architecture", arch_json(arch)},
        {"rodrigues", vec_json(orientation)},
        {"n_directions", params.n_directions},
        {"r_max_mm", params.r_max},
        {"tol_mm", params.tol},
        {"pairs", pairs_json(params.pairs)}}},
  };
  return doc.dump(2) + "\n";
}

std::string pose_clearance_json(const ArchitectureParams& arch, const Pose& pose, const PoseClearance& pc) {
  auto records = ordered_json::array();
  for (const auto& r : pc.records) {
    records.push_back({{"pair", pair_json(r.pair)},
                       {"clearance_mm", r.clearance},
                       {"colliding", r.colliding},
                       {"witness_i_mm", vec_json(r.witness_i)},
                       {"witness_j_mm", vec_json(r.witness_j)}});
  }
  auto lengths = ordered_json::array();
  for (double l : leg_lengths(arch, pose)) lengths.push_back(l);
  ordered_json doc = {
      {"pose", {{"p_mm", vec_json(pose.p)}, {"rodrigues", vec_json(pose.c)}}},
      {"leg_lengths_mm", lengths},
      {"min_clearance_mm", pc.min_clearance},
      {"worst_pair", pair_json(pc.worst_pair)},
      {"colliding", pc.colliding()},
      {"records", records},
  };
  return doc.dump(2) + "\n";
}

}  // namespace cfs
