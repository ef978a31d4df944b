#include "cfs/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include <json.hpp>

namespace cfs {

using nlohmann::json;

namespace {

// Typed access to one JSON object with dotted-path diagnostics.
class Block {
 public:
  Block(const json& node, std::string path) : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) fail(path_, "must be an object");
  }

  void allow_only(std::initializer_list<const char*> keys) const {
    const std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& [key, _] : node_.items()) {
      if (!allowed.contains(key)) fail(child(key), "unknown field: " + child(key));
    }
  }

  bool has(const char* key) const { return node_.contains(key); }

  const json& at(const char* key) const {
    if (!node_.contains(key)) fail(child(key), "missing field: " + child(key));
    return node_.at(key);
  }

  double number(const char* key) const {
    const json& v = at(key);
    if (!v.is_number()) fail(child(key), child(key) + ": expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) fail(child(key), child(key) + ": must be finite");
    return d;
  }

  double positive(const char* key) const {
    const double d = number(key);
    if (!(d > 0.0)) fail(child(key), child(key) + ": must be > 0");
    return d;
  }

  std::optional<double> optional_positive(const char* key) const {
    if (!has(key)) return std::nullopt;
    return positive(key);
  }

  std::size_t count(const char* key) const {
    const json& v = at(key);
    if (!v.is_number_integer() || v.get<long long>() < 1) {
      fail(child(key), child(key) + ": expected a positive integer");
    }
    return static_cast<std::size_t>(v.get<long long>());
  }

  std::string string(const char* key) const {
    const json& v = at(key);
    if (!v.is_string()) fail(child(key), child(key) + ": expected a string");
    return v.get<std::string>();
  }

  Vec3 vec3(const char* key) const {
    const json& v = at(key);
    if (!v.is_array() || v.size() != 3) fail(child(key), child(key) + ": expected [x, y, z]");
    Vec3 out;
    for (int k = 0; k < 3; ++k) {
      if (!v[k].is_number()) fail(child(key), child(key) + ": expected numbers");
      out[k] = v[k].get<double>();
    }
    if (!is_finite(out)) fail(child(key), child(key) + ": must be finite");
    return out;
  }

  PairFilter pairs(const char* key) const {
    const json& v = at(key);
    if (v.is_string()) {
      if (v.get<std::string>() != "all") fail(child(key), child(key) + R"(: expected "all" or [[i, j], ...])");
      return PairFilter::all();
    }
    if (!v.is_array() || v.empty()) fail(child(key), child(key) + ": expected \"all\" or a non-empty list of [i, j]");
    std::vector<LegPair> list;
    for (const auto& p : v) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
        fail(child(key), child(key) + ": each pair must be [i, j]");
      }
      try {
        list.push_back(leg_pair(p[0].get<int>(), p[1].get<int>()));
      } catch (const std::invalid_argument& e) {
        fail(child(key), child(key) + ": " + e.what());
      }
    }
    return PairFilter(std::move(list));
  }

  Block sub(const char* key) const { return Block(at(key), child(key)); }

  std::string child(const char* key) const { return path_.empty() ? key : path_ + "." + key; }
  std::string child(const std::string& key) const { return child(key.c_str()); }

  [[noreturn]] static void fail(const std::string& key, const std::string& message) {
    throw ConfigError(key, message);
  }

 private:
  const json& node_;
  std::string path_;
};

ArchitectureParams parse_architecture(const Block& b) {
  b.allow_only({"r_f_mm", "r_m_mm", "gamma_f_deg", "gamma_m_deg", "r_c_mm", "z0_mm"});
  ArchitectureParams arch;
  arch.r_f = b.positive("r_f_mm");
  arch.r_m = b.positive("r_m_mm");
  arch.gamma_f = deg_to_rad(b.number("gamma_f_deg"));
  arch.gamma_m = deg_to_rad(b.number("gamma_m_deg"));
  arch.r_c = b.positive("r_c_mm");
  arch.z0 = b.positive("z0_mm");
  for (const auto* key : {"gamma_f_deg", "gamma_m_deg"}) {
    const double deg = b.number(key);
    if (!(deg > 0.0 && deg < 60.0)) Block::fail(b.child(key), b.child(key) + ": must lie in (0, 60)");
  }
  return arch;
}

ScenarioBlock parse_scenario(const Block& b) {
  b.allow_only({"rodrigues", "r3_mm", "delta", "delta_r_mm", "n_s", "pairs", "r_inner_mm", "r_outer_mm"});
  ScenarioBlock s;
  s.rodrigues = b.vec3("rodrigues");
  s.r3 = b.positive("r3_mm");
  if (b.has("delta")) {
    s.delta = b.number("delta");
    if (!(s.delta > 0.0 && s.delta < 1.0)) Block::fail(b.child("delta"), b.child("delta") + ": must lie in (0, 1)");
  }
  s.delta_r = b.positive("delta_r_mm");
  s.n_s = b.count("n_s");
  if (b.has("pairs")) s.pairs = b.pairs("pairs");
  s.r_inner = b.optional_positive("r_inner_mm");
  s.r_outer = b.optional_positive("r_outer_mm");
  const double lo = s.r_inner.value_or(s.r3 * (1.0 - s.delta));
  const double hi = s.r_outer.value_or(s.r3 * (1.0 + s.delta));
  if (!(lo < hi)) {
    Block::fail(b.child("r_outer_mm"), b.child("r_outer_mm") + ": shell requires r_inner < r_outer");
  }
  return s;
}

EstimateBlock parse_estimate(const Block& b) {
  b.allow_only({"n_directions", "r_max_mm", "tol_mm", "rodrigues", "pairs"});
  EstimateBlock e;
  if (b.has("n_directions")) e.n_directions = b.count("n_directions");
  e.r_max = b.positive("r_max_mm");
  if (b.has("tol_mm")) e.tol = b.positive("tol_mm");
  if (!(e.tol < e.r_max)) Block::fail(b.child("tol_mm"), b.child("tol_mm") + ": must be < r_max_mm");
  if (b.has("rodrigues")) e.rodrigues = b.vec3("rodrigues");
  if (b.has("pairs")) e.pairs = b.pairs("pairs");
  return e;
}

OutputBlock parse_output(const Block& b) {
  b.allow_only({"directory", "summary_json", "samples_csv", "unsafe_csv", "estimate_json", "formats"});
  OutputBlock o;
  if (b.has("directory")) o.directory = b.string("directory");
  if (b.has("summary_json")) o.summary_json = b.string("summary_json");
  if (b.has("samples_csv")) o.samples_csv = b.string("samples_csv");
  if (b.has("unsafe_csv")) o.unsafe_csv = b.string("unsafe_csv");
  if (b.has("estimate_json")) o.estimate_json = b.string("estimate_json");
  if (b.has("formats")) {
    const json& f = b.at("formats");
    if (!f.is_array()) Block::fail(b.child("formats"), b.child("formats") + ": expected a list");
    o.write_json = false;
    o.write_csv = false;
    for (const auto& item : f) {
      const std::string name = item.is_string() ? item.get<std::string>() : "";
      if (name == "json") {
        o.write_json = true;
      } else if (name == "csv") {
        o.write_csv = true;
      } else {
        Block::fail(b.child("formats"), b.child("formats") + R"(: entries must be "json" or "csv")");
      }
    }
  }
  return o;
}

}  // namespace

RunConfigFile parse_config(std::string_view text) {
  json doc;
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    doc = json::object();
  } else {
    try {
      doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
      throw ConfigError("", std::string("malformed JSON: ") + e.what());
    }
  }
  const Block root(doc, "");
  root.allow_only({"architecture", "scenario", "estimate", "output"});

  RunConfigFile cfg;
  cfg.arch = parse_architecture(root.sub("architecture"));
  if (root.has("scenario")) cfg.scenario = parse_scenario(root.sub("scenario"));
  if (root.has("estimate")) cfg.estimate = parse_estimate(root.sub("estimate"));
  if (root.has("output")) cfg.output = parse_output(root.sub("output"));
  return cfg;
}

RunConfigFile load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("", "cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

ValidationConfig RunConfigFile::validation_config() const {
  if (!scenario) throw ConfigError("scenario", "missing field: scenario");
  ValidationConfig v;
  v.arch = arch;
  v.orientation = scenario->rodrigues;
  v.r3 = scenario->r3;
  v.delta = scenario->delta;
  v.delta_r = scenario->delta_r;
  v.n_s = scenario->n_s;
  v.pairs = scenario->pairs;
  v.r_inner = scenario->r_inner;
  v.r_outer = scenario->r_outer;
  return v;
}

Vec3 RunConfigFile::estimate_orientation() const {
  if (estimate && estimate->rodrigues) return *estimate->rodrigues;
  if (scenario) return scenario->rodrigues;
  throw ConfigError("estimate.rodrigues", "missing field: estimate.rodrigues (or scenario.rodrigues)");
}

EstimateParams RunConfigFile::estimate_params() const {
  if (!estimate) throw ConfigError("estimate", "missing field: estimate");
  EstimateParams p;
  p.n_directions = estimate->n_directions;
  p.r_max = estimate->r_max;
  p.tol = estimate->tol;
  if (estimate->pairs) {
    p.pairs = *estimate->pairs;
  } else if (scenario) {
    p.pairs = scenario->pairs;
  }
  return p;
}

}  // namespace cfs
