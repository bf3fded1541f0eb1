#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "plasmon/bie.hpp"
#include "plasmon/charpoly.hpp"
#include "plasmon/errors.hpp"
#include "plasmon/field.hpp"
#include "plasmon/geometry.hpp"
#include "plasmon/materials.hpp"
#include "plasmon/spectrum.hpp"

#ifndef PLASMON_VERSION
#define PLASMON_VERSION "1.0.0"
#endif

namespace plasmon::io {

using nlohmann::json;

struct GridOptions {
  BoundingBox box;
  int nx = 101;
  int ny = 101;
  bool gradient = false;
  bool normalize = true;
};

struct SweepOptions {
  int layers = 17;
  double ratio = 0.8;
  std::vector<double> scales{1, 2, 3, 4, 5};
};

struct Tolerances {
  SpectrumTolerances spectrum;
  FieldTolerances field;
  int combinatorial_cap = kDefaultCombinatorialCap;
};

/// Everything a command may need. Blocks not given stay empty and the
/// command decides whether that is an error.
struct RunConfig {
  std::optional<LayerStack> stack;
  MaterialConfig material;
  std::optional<DrudeParams> drude;
  int n = 1;
  std::optional<Parity> parity;
  std::optional<int> mode_rank;
  std::optional<double> delta;
  std::optional<BackgroundField> background;
  std::optional<GridOptions> grid;
  std::optional<SweepOptions> sweep;
  std::vector<bie::CurveSpec> curves;
  std::vector<int> nodes{128, 256, 512};
  Tolerances tol;
};

namespace detail {

inline void reject_unknown(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items())
    if (!ok.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
}

template <class T>
T get(const json& j, const char* key, const std::string& where) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("missing or malformed '" + std::string(key) + "' in " + where);
  }
}

template <class T>
T get_or(const json& j, const char* key, T fallback, const std::string& where) {
  return j.contains(key) ? get<T>(j, key, where) : fallback;
}

inline std::array<double, 2> range(const json& j, const char* key, const std::string& where) {
  const auto v = get<std::vector<double>>(j, key, where);
  if (v.size() != 2) throw ConfigError("'" + std::string(key) + "' in " + where + " must be [min, max]");
  return {v[0], v[1]};
}

}  // namespace detail

inline LayerStack parse_geometry(const json& j) {
  detail::reject_unknown(j, {"R", "xi", "semimajor"}, "geometry");
  const double R = detail::get<double>(j, "R", "geometry");
  if (j.contains("xi") == j.contains("semimajor")) throw ConfigError("geometry needs exactly one of 'xi' or 'semimajor'");
  if (j.contains("xi")) return LayerStack(R, detail::get<std::vector<double>>(j, "xi", "geometry"));
  std::vector<double> xi;
  for (double b : detail::get<std::vector<double>>(j, "semimajor", "geometry")) xi.push_back(xi_from_semimajor(b, R));
  return LayerStack(R, xi);
}

inline std::vector<bie::CurveSpec> parse_curve(const json& j) {
  detail::reject_unknown(j, {"type", "R", "xi", "coeffs", "scale"}, "curve");
  const auto type = detail::get<std::string>(j, "type", "curve");
  std::vector<bie::CurveSpec> out;
  if (type == "confocal") {
    if (j.contains("coeffs") || j.contains("scale")) throw ConfigError("confocal curve takes only R and xi");
    const double R = detail::get<double>(j, "R", "curve");
    const json& xi = j.at("xi");
    if (xi.is_array()) {
      for (double x : detail::get<std::vector<double>>(j, "xi", "curve")) out.push_back(bie::CurveSpec::confocal(R, x));
    } else {
      out.push_back(bie::CurveSpec::confocal(R, detail::get<double>(j, "xi", "curve")));
    }
  } else if (type == "polar") {
    if (j.contains("R") || j.contains("xi")) throw ConfigError("polar curve takes only coeffs and scale");
    out.push_back(bie::CurveSpec::polar(detail::get<std::vector<double>>(j, "coeffs", "curve"),
                                        detail::get_or<double>(j, "scale", 1.0, "curve")));
  } else {
    throw ConfigError("curve type must be 'confocal' or 'polar'");
  }
  return out;
}

inline RunConfig parse_config(const json& j) {
  detail::reject_unknown(j,
                         {"geometry", "material", "drude", "n", "parity", "mode_rank", "delta", "background", "grid",
                          "sweep", "curves", "nodes", "tolerances"},
                         "config");
  RunConfig c;
  if (j.contains("geometry")) c.stack = parse_geometry(j.at("geometry"));
  if (j.contains("material")) {
    const json& m = j.at("material");
    detail::reject_unknown(m, {"sigma0", "sigma_star", "delta"}, "material");
    c.material = MaterialConfig(detail::get_or<double>(m, "sigma0", 1.0, "material"),
                                detail::get_or<double>(m, "sigma_star", 1.0, "material"),
                                detail::get_or<double>(m, "delta", 0.0, "material"));
  }
  if (j.contains("drude")) {
    const json& d = j.at("drude");
    detail::reject_unknown(d, {"sigma_prime", "omega_p", "tau"}, "drude");
    const DrudeParams def;
    c.drude = DrudeParams(detail::get_or<double>(d, "sigma_prime", def.sigma_prime, "drude"),
                          detail::get_or<double>(d, "omega_p", def.omega_p, "drude"),
                          detail::get_or<double>(d, "tau", def.tau, "drude"));
  }
  // Drude constants are physical; the background then defaults to (1.33)^2 sigma'.
  if (c.drude && !(j.contains("material") && j.at("material").contains("sigma0")))
    c.material.sigma0 = 1.33 * 1.33 * c.drude->sigma_prime;
  c.n = detail::get_or<int>(j, "n", 1, "config");
  if (c.n < 1) throw ConfigError("n must be >= 1");
  if (j.contains("parity")) c.parity = parse_parity(detail::get<std::string>(j, "parity", "config"));
  if (j.contains("mode_rank")) {
    c.mode_rank = detail::get<int>(j, "mode_rank", "config");
    if (*c.mode_rank < 0) throw ConfigError("mode_rank must be >= 0");
  }
  if (j.contains("delta")) {
    c.delta = detail::get<double>(j, "delta", "config");
    if (!(*c.delta >= 0.0)) throw ConfigError("delta must be >= 0");
  }
  if (j.contains("background")) {
    if (!j.at("background").is_array()) throw ConfigError("background must be a list of terms");
    std::vector<FieldTerm> terms;
    for (const auto& t : j.at("background")) {
      detail::reject_unknown(t, {"n", "a_even", "a_odd"}, "background term");
      terms.push_back({detail::get<int>(t, "n", "background term"), detail::get_or<double>(t, "a_even", 0.0, "background term"),
                       detail::get_or<double>(t, "a_odd", 0.0, "background term")});
    }
    c.background = BackgroundField(terms);
  }
  if (j.contains("grid")) {
    const json& g = j.at("grid");
    detail::reject_unknown(g, {"x1", "x2", "nx", "ny", "gradient", "normalize"}, "grid");
    GridOptions o;
    const auto x1 = detail::range(g, "x1", "grid");
    const auto x2 = detail::range(g, "x2", "grid");
    o.box = {x1[0], x1[1], x2[0], x2[1]};
    o.nx = detail::get_or<int>(g, "nx", o.nx, "grid");
    o.ny = detail::get_or<int>(g, "ny", o.ny, "grid");
    o.gradient = detail::get_or<bool>(g, "gradient", false, "grid");
    o.normalize = detail::get_or<bool>(g, "normalize", true, "grid");
    if (o.nx < 2 || o.ny < 2) throw ConfigError("grid resolution must be >= 2 per axis");
    if (!(o.box.x1_max > o.box.x1_min) || !(o.box.x2_max > o.box.x2_min)) throw ConfigError("empty grid box");
    c.grid = o;
  }
  if (j.contains("sweep")) {
    const json& s = j.at("sweep");
    detail::reject_unknown(s, {"layers", "ratio", "scales"}, "sweep");
    SweepOptions o;
    o.layers = detail::get_or<int>(s, "layers", o.layers, "sweep");
    o.ratio = detail::get_or<double>(s, "ratio", o.ratio, "sweep");
    o.scales = detail::get_or<std::vector<double>>(s, "scales", o.scales, "sweep");
    if (o.layers < 1 || o.scales.empty()) throw ConfigError("sweep needs layers >= 1 and at least one scale");
    c.sweep = o;
  }
  if (j.contains("curves")) {
    if (!j.at("curves").is_array()) throw ConfigError("curves must be a list");
    for (const auto& cj : j.at("curves"))
      for (auto& spec : parse_curve(cj)) c.curves.push_back(spec);
  }
  if (j.contains("nodes")) {
    c.nodes = detail::get<std::vector<int>>(j, "nodes", "config");
    for (int m : c.nodes)
      if (m < 8 || m % 2) throw ConfigError("node counts must be even and >= 8");
  }
  if (j.contains("tolerances")) {
    const json& t = j.at("tolerances");
    detail::reject_unknown(t, {"cross_route", "realness", "spectral_slack", "max_condition", "residual", "combinatorial_cap"},
                           "tolerances");
    auto& s = c.tol.spectrum;
    s.cross_route = detail::get_or<double>(t, "cross_route", s.cross_route, "tolerances");
    s.realness = detail::get_or<double>(t, "realness", s.realness, "tolerances");
    s.spectral_slack = detail::get_or<double>(t, "spectral_slack", s.spectral_slack, "tolerances");
    c.tol.field.max_condition = detail::get_or<double>(t, "max_condition", c.tol.field.max_condition, "tolerances");
    c.tol.field.residual = detail::get_or<double>(t, "residual", c.tol.field.residual, "tolerances");
    c.tol.combinatorial_cap = detail::get_or<int>(t, "combinatorial_cap", c.tol.combinatorial_cap, "tolerances");
  }
  return c;
}

inline RunConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(j);
}

inline RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

/// Canonical JSON of the effective configuration; feeds the config hash.
inline json to_json(const RunConfig& c) {
  json j;
  if (c.stack) j["geometry"] = {{"R", c.stack->focal()}, {"xi", c.stack->xi()}};
  j["material"] = {{"sigma0", c.material.sigma0}, {"sigma_star", c.material.sigma_star}, {"delta", c.material.delta}};
  if (c.drude) j["drude"] = {{"sigma_prime", c.drude->sigma_prime}, {"omega_p", c.drude->omega_p}, {"tau", c.drude->tau}};
  j["n"] = c.n;
  if (c.parity) j["parity"] = to_string(*c.parity);
  if (c.mode_rank) j["mode_rank"] = *c.mode_rank;
  if (c.delta) j["delta"] = *c.delta;
  if (c.background) {
    json terms = json::array();
    for (const auto& t : c.background->terms) terms.push_back({{"n", t.n}, {"a_even", t.a_even}, {"a_odd", t.a_odd}});
    j["background"] = terms;
  }
  if (c.grid) {
    const auto& g = *c.grid;
    j["grid"] = {{"x1", {g.box.x1_min, g.box.x1_max}}, {"x2", {g.box.x2_min, g.box.x2_max}}, {"nx", g.nx},
                 {"ny", g.ny}, {"gradient", g.gradient}, {"normalize", g.normalize}};
  }
  if (c.sweep) j["sweep"] = {{"layers", c.sweep->layers}, {"ratio", c.sweep->ratio}, {"scales", c.sweep->scales}};
  if (!c.curves.empty()) {
    json cs = json::array();
    for (const auto& s : c.curves) {
      if (s.kind == bie::CurveSpec::Kind::Confocal)
        cs.push_back({{"type", "confocal"}, {"R", s.focal}, {"xi", s.xi}});
      else
        cs.push_back({{"type", "polar"}, {"coeffs", s.coeffs}, {"scale", s.scale}});
    }
    j["curves"] = cs;
  }
  j["nodes"] = c.nodes;
  j["tolerances"] = {{"cross_route", c.tol.spectrum.cross_route},     {"realness", c.tol.spectrum.realness},
                     {"spectral_slack", c.tol.spectrum.spectral_slack}, {"max_condition", c.tol.field.max_condition},
                     {"residual", c.tol.field.residual},               {"combinatorial_cap", c.tol.combinatorial_cap}};
  return j;
}

inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string config_hash(const RunConfig& c) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(to_json(c).dump())));
  return buf;
}

/// 17 significant digits, '.' decimal point regardless of locale.
inline std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  for (char& ch : s)
    if (ch == ',') ch = '.';
  return s;
}

/// Fixed 4-decimal form used when reproducing printed tables.
inline std::string fmt4(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  std::string s(buf);
  for (char& ch : s)
    if (ch == ',') ch = '.';
  return s == "-0.0000" ? "0.0000" : s;
}

/// Comment lines ('#') prefixed to every CSV payload.
inline std::string metadata_header(const std::string& command, const RunConfig& c) {
  std::ostringstream os;
  os << "# plasmon " << PLASMON_VERSION << "\n";
  os << "# command: " << command << "\n";
  os << "# config_hash: fnv1a64:" << config_hash(c) << "\n";
  const auto& t = c.tol;
  os << "# tolerances: cross_route=" << fmt(t.spectrum.cross_route) << " realness=" << fmt(t.spectrum.realness)
     << " spectral_slack=" << fmt(t.spectrum.spectral_slack) << " max_condition=" << fmt(t.field.max_condition)
     << " residual=" << fmt(t.field.residual) << "\n";
  return os.str();
}

/// Splits CSV text into data rows, skipping '#' comment lines and the header.
inline std::vector<std::vector<std::string>> read_csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace plasmon::io
