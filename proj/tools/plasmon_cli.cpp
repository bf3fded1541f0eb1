// plasmon_cli: modes, characteristic polynomials, fields, disk sweeps and
// boundary-integral checks for confocal elliptic layer stacks.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "plasmon/plasmon.hpp"

namespace fs = std::filesystem;
using namespace plasmon;
using io::fmt;
using io::json;

namespace {

enum Exit { kOk = 0, kConfig = 1, kNumerical = 2, kResonance = 3 };

struct Options {
  std::string config_path;
  std::string preset_name;
  std::string out_dir;
  std::string fixtures_dir = "fixtures";
  bool check = false;
  bool write_fixture = false;
  std::optional<int> n;
  std::string parity;
  std::optional<double> delta;
  std::optional<int> layers;
  std::vector<double> xi;
  std::optional<double> focal;
  std::optional<int> mode_rank;
  bool gradient = false;
  bool table = false;
  std::optional<int> nx, ny;
  std::string geometry;
  std::optional<double> tol_cross_route, tol_realness, tol_spectral_slack, tol_max_condition, tol_residual;
  std::optional<int> tol_cap;
};

/// Files to write plus the compact numeric fingerprint used by --check.
struct Outputs {
  std::map<std::string, std::string> files;
  std::string primary;
  std::string fingerprint;
};

constexpr double kDefaultDelta = 1e-5;

io::RunConfig resolve_config(const Options& o, std::optional<Preset>& preset_out) {
  if (!o.config_path.empty() && !o.preset_name.empty()) throw ConfigError("--config and --preset are exclusive");
  io::RunConfig c;
  if (!o.config_path.empty()) c = io::load_config(o.config_path);
  if (!o.preset_name.empty()) {
    const Preset p = preset(o.preset_name);
    c.stack = p.stack;
    c.n = p.n;
    if (p.kind == PresetKind::Sweep) c.sweep = io::SweepOptions{p.sweep_layers, p.sweep_ratio, p.sweep_scales};
    if (p.kind == PresetKind::Field) c.grid = io::GridOptions{p.box, p.nx, p.ny, p.gradient, true};
    preset_out = p;
  }
  if (!o.xi.empty()) {
    if (o.layers && *o.layers != static_cast<int>(o.xi.size()))
      throw ConfigError("--layers does not match the number of --xi values");
    c.stack = LayerStack(o.focal.value_or(1.0), o.xi);
  } else if (o.layers || o.focal) {
    throw ConfigError("--layers/--R need --xi");
  }
  if (o.n) {
    if (*o.n < 1) throw ConfigError("--n must be >= 1");
    c.n = *o.n;
  }
  if (!o.parity.empty()) c.parity = parse_parity(o.parity);
  if (o.mode_rank) c.mode_rank = *o.mode_rank;
  if (o.delta) {
    if (!(*o.delta >= 0.0)) throw ConfigError("--delta must be >= 0");
    c.delta = *o.delta;
  }
  if (o.gradient || o.nx || o.ny) {
    if (!c.grid) c.grid = io::GridOptions{};
    if (o.gradient) c.grid->gradient = true;
    if (o.nx) c.grid->nx = *o.nx;
    if (o.ny) c.grid->ny = *o.ny;
    if (c.grid->nx < 2 || c.grid->ny < 2) throw ConfigError("grid resolution must be >= 2 per axis");
  }
  auto& t = c.tol;
  if (o.tol_cross_route) t.spectrum.cross_route = *o.tol_cross_route;
  if (o.tol_realness) t.spectrum.realness = *o.tol_realness;
  if (o.tol_spectral_slack) t.spectrum.spectral_slack = *o.tol_spectral_slack;
  if (o.tol_max_condition) t.field.max_condition = *o.tol_max_condition;
  if (o.tol_residual) t.field.residual = *o.tol_residual;
  if (o.tol_cap) t.combinatorial_cap = *o.tol_cap;
  return c;
}

const LayerStack& need_stack(const io::RunConfig& c) {
  if (!c.stack) throw ConfigError("no geometry: give --preset, --config with a geometry block, or --xi");
  return *c.stack;
}

std::vector<Parity> parities(const io::RunConfig& c) {
  if (c.parity) return {*c.parity};
  return {Parity::Even, Parity::Odd};
}

std::string header(const std::string& command, const io::RunConfig& c, const std::optional<Preset>& p) {
  std::string h = io::metadata_header(command, c);
  if (p) h += "# preset: " + p->name + "\n";
  return h;
}

// ---------------------------------------------------------------- modes

Outputs cmd_modes(const io::RunConfig& c, const std::optional<Preset>& p, bool table) {
  const auto& stack = need_stack(c);
  const auto set = modes(stack, c.n, c.tol.spectrum, c.material.sigma0);
  std::ostringstream csv, fp;
  csv << header("modes", c, p) << "# route_deviation: " << fmt(set.route_deviation) << "\n";
  csv << "parity,rank,lambda,sigma1" << (c.drude ? ",omega" : "") << "\n";
  fp << "parity,rank,lambda,sigma1\n";
  json j;
  j["n"] = c.n;
  j["route_deviation"] = set.route_deviation;
  j["modes"] = json::array();
  for (Parity par : parities(c)) {
    for (const auto& m : par == Parity::Even ? set.even : set.odd) {
      const std::string sig = m.sigma1 ? fmt(*m.sigma1) : "inf";
      csv << to_string(par) << "," << m.rank << "," << fmt(m.lambda) << "," << sig;
      fp << to_string(par) << "," << m.rank << "," << fmt(m.lambda) << "," << sig << "\n";
      json row{{"parity", to_string(par)}, {"rank", m.rank}, {"lambda", m.lambda}};
      if (m.sigma1) row["sigma1"] = *m.sigma1;
      if (c.drude) {
        try {
          const double w = resonant_frequency(m.lambda, *c.drude, c.material.sigma0);
          csv << "," << fmt(w);
          row["omega"] = w;
        } catch (const NoRealFrequency&) {
          csv << ",";
        }
      }
      csv << "\n";
      j["modes"].push_back(row);
    }
  }
  Outputs out;
  out.files["modes.csv"] = csv.str();
  out.files["modes.json"] = j.dump(2) + "\n";
  if (table) {
    // Printed-table layout: 4 decimals, one row per rank.
    std::ostringstream t;
    t << header("modes", c, p) << "rank,lambda_plus,sigma_plus,lambda_minus,sigma_minus\n";
    for (std::size_t r = 0; r < set.even.size(); ++r) {
      t << r << "," << io::fmt4(set.even[r].lambda) << "," << io::fmt4(set.even[r].sigma1.value_or(NAN)) << ","
        << io::fmt4(set.odd[r].lambda) << "," << io::fmt4(set.odd[r].sigma1.value_or(NAN)) << "\n";
    }
    out.files["table.csv"] = t.str();
  }
  out.primary = table ? out.files["table.csv"] : out.files["modes.csv"];
  out.fingerprint = fp.str();
  return out;
}

// ---------------------------------------------------------------- charpoly

Outputs cmd_charpoly(const io::RunConfig& c, const std::optional<Preset>& p) {
  const auto& stack = need_stack(c);
  std::ostringstream coeffs, span, fp;
  coeffs << header("charpoly", c, p) << "parity,k,coefficient\n";
  span << header("charpoly", c, p) << "parity,lambda,value\n";
  fp << "parity,kind,index,value\n";
  json summary;
  for (Parity par : parities(c)) {
    const CharPoly poly = build_charpoly(stack, c.n, par, c.tol.combinatorial_cap);
    for (std::size_t k = 0; k < poly.coeffs.size(); ++k) {
      coeffs << to_string(par) << "," << k << "," << fmt(poly.coeffs[k]) << "\n";
      fp << to_string(par) << ",coeff," << k << "," << fmt(poly.coeffs[k]) << "\n";
    }
    const auto roots = parity_roots(stack, c.n, par, c.tol.spectrum);
    for (std::size_t k = 0; k < roots.size(); ++k) fp << to_string(par) << ",root," << k << "," << fmt(roots[k]) << "\n";
    const double lo = roots.back(), hi = roots.front();
    double worst = 0.0;
    constexpr int kSpan = 1000;
    for (int i = 0; i < kSpan; ++i) {
      const double lam = lo + (hi - lo) * i / (kSpan - 1);
      const double v = eval(poly, lam);
      worst = std::max(worst, std::abs(v));
      span << to_string(par) << "," << fmt(lam) << "," << fmt(v) << "\n";
    }
    summary[std::string(to_string(par))] = {{"min_root", lo}, {"max_root", hi}, {"max_abs_on_span", worst}};
  }
  Outputs out;
  out.files["charpoly_coefficients.csv"] = coeffs.str();
  out.files["charpoly_span.csv"] = span.str();
  out.files["charpoly_summary.json"] = summary.dump(2) + "\n";
  out.primary = coeffs.str() + "# span summary: " + summary.dump() + "\n";
  out.fingerprint = fp.str();
  return out;
}

// ---------------------------------------------------------------- sweep

Outputs cmd_sweep(const io::RunConfig& c, const std::optional<Preset>& p) {
  const io::SweepOptions s = c.sweep.value_or(io::SweepOptions{});
  const auto pts = disk_degeneration_sweep(s.layers, s.ratio, s.scales, c.n, c.tol.spectrum);
  std::ostringstream csv;
  csv << header("sweep-disk", c, p) << "# gap norm: euclidean\n";
  csv << "# log_slope: " << fmt(sweep_log_slope(pts)) << " (expected about " << -2 * c.n << ")\n";
  csv << "L,min_xi,gap\n";
  std::ostringstream fp;
  fp << "L,min_xi,gap\n";
  for (const auto& pt : pts) {
    csv << fmt(pt.scale) << "," << fmt(pt.min_xi) << "," << fmt(pt.gap) << "\n";
    fp << fmt(pt.scale) << "," << fmt(pt.min_xi) << "," << fmt(pt.gap) << "\n";
  }
  Outputs out;
  out.files["sweep.csv"] = csv.str();
  out.primary = csv.str();
  out.fingerprint = fp.str();
  return out;
}

// ---------------------------------------------------------------- field

json polylines(const FieldGrid& g) {
  json all = json::array();
  for (const auto& line : g.interfaces) {
    json pts = json::array();
    for (const auto& q : line) pts.push_back({q.x1, q.x2});
    all.push_back(pts);
  }
  return all;
}

Outputs cmd_field(const io::RunConfig& c, const std::optional<Preset>& p) {
  const auto& stack = need_stack(c);
  const io::GridOptions grid = c.grid.value_or(io::GridOptions{});
  const double delta = c.delta.value_or(kDefaultDelta);
  const auto set = modes(stack, c.n, c.tol.spectrum, c.material.sigma0);
  const GridQuantity q = grid.gradient ? GridQuantity::GradientMagnitude : GridQuantity::RealPart;
  Outputs out;
  std::ostringstream summary, fp;
  summary << header("field", c, p) << "# delta: " << fmt(delta) << "\n";
  summary << "parity,rank,lambda_re,lambda_im,normalization,argmax_x1,argmax_x2,file\n";
  fp << "parity,rank,lambda_re,normalization,argmax_x1,argmax_x2,samples\n";
  for (Parity par : parities(c)) {
    const auto& list = par == Parity::Even ? set.even : set.odd;
    for (const auto& m : list) {
      if (c.mode_rank && *c.mode_rank != m.rank) continue;
      const cdouble lam(m.lambda, delta);
      const BackgroundField h = c.background.value_or(BackgroundField::single(c.n, par));
      const auto sol = solve_densities(stack, lam, h, c.tol.field);
      const auto g = field_grid(sol, grid.box, grid.nx, grid.ny, q, grid.normalize);
      std::size_t best = 0;
      for (std::size_t i = 0; i < g.values.size(); ++i)
        if (std::abs(g.values[i]) > std::abs(g.values[best])) best = i;
      const double ax = g.x1[best % static_cast<std::size_t>(g.nx)];
      const double ay = g.x2[best / static_cast<std::size_t>(g.nx)];

      const std::string stem = "field_" + std::string(to_string(par)) + "_" + std::to_string(m.rank);
      std::ostringstream csv;
      csv << header("field", c, p);
      csv << (q == GridQuantity::RealPart ? "x1,x2,re,im\n" : "x1,x2,gradmag\n");
      for (int iy = 0; iy < g.ny; ++iy) {
        for (int ix = 0; ix < g.nx; ++ix) {
          const auto idx = static_cast<std::size_t>(iy) * static_cast<std::size_t>(g.nx) + static_cast<std::size_t>(ix);
          csv << fmt(g.x1[static_cast<std::size_t>(ix)]) << "," << fmt(g.x2[static_cast<std::size_t>(iy)]) << ","
              << fmt(g.values[idx]);
          if (q == GridQuantity::RealPart) csv << "," << fmt(g.imag[idx]);
          csv << "\n";
        }
      }
      out.files[stem + ".csv"] = csv.str();
      json side{{"config", io::to_json(c)},
                {"lambda", {lam.real(), lam.imag()}},
                {"delta", delta},
                {"parity", to_string(par)},
                {"rank", m.rank},
                {"quantity", q == GridQuantity::RealPart ? "re" : "gradmag"},
                {"normalization", g.normalization},
                {"interfaces", polylines(g)}};
      out.files[stem + ".json"] = side.dump() + "\n";
      summary << to_string(par) << "," << m.rank << "," << fmt(lam.real()) << "," << fmt(lam.imag()) << ","
              << fmt(g.normalization) << "," << fmt(ax) << "," << fmt(ay) << "," << stem << ".csv\n";
      // Mirror-symmetric fields tie at +-x; |x| keeps the fingerprint stable.
      // A 5 x 5 subsample of the grid pins the field shape.
      fp << to_string(par) << "," << m.rank << "," << fmt(lam.real()) << "," << fmt(g.normalization) << ","
         << fmt(std::abs(ax)) << "," << fmt(std::abs(ay));
      for (int sy = 0; sy < 5; ++sy)
        for (int sx = 0; sx < 5; ++sx) {
          const auto ix = static_cast<std::size_t>((g.nx - 1) * sx / 4);
          const auto iy = static_cast<std::size_t>((g.ny - 1) * sy / 4);
          fp << "," << fmt(g.values[iy * static_cast<std::size_t>(g.nx) + ix]);
        }
      fp << "\n";
    }
  }
  out.files["field_summary.csv"] = summary.str();
  out.primary = summary.str();
  out.fingerprint = fp.str();
  return out;
}

// ---------------------------------------------------------------- bie-validate

std::vector<bie::CurveSpec> bie_geometry(const io::RunConfig& c, const std::string& name) {
  if (!c.curves.empty()) return c.curves;
  if (name == "circle") return {bie::CurveSpec::circle(1.0)};
  if (name == "ellipse") return {bie::CurveSpec::confocal(1.0, 0.6)};
  if (name == "confocal") return bie::confocal_curves(LayerStack(1.0, {1.0, 0.7, 0.4}));
  if (name == "close") return bie::confocal_curves(LayerStack(1.0, {0.5, 0.45, 0.4}));
  if (name == "perturbed") {
    std::vector<bie::CurveSpec> out;
    for (double s : {1.0, 0.8, 0.6}) out.push_back(bie::CurveSpec::polar({1.0, 0.0, 0.0, 0.1}, s));
    return out;
  }
  if (name.empty() && c.stack) return bie::confocal_curves(*c.stack);
  throw ConfigError("bie-validate needs curves: --geometry {circle,ellipse,confocal,close,perturbed}, a config "
                    "'curves' block, or a layer stack");
}

Outputs cmd_bie(const io::RunConfig& c, const std::optional<Preset>& p, const std::string& geometry) {
  const auto specs = bie_geometry(c, geometry);
  bool confocal = true;
  for (const auto& s : specs) confocal = confocal && s.kind == bie::CurveSpec::Kind::Confocal;
  json report;
  report["version"] = PLASMON_VERSION;
  report["config_hash"] = io::config_hash(c);
  report["curves"] = static_cast<int>(specs.size());
  report["refinement"] = json::array();
  std::ostringstream fp;
  fp << "M,calderon,self_adjointness,max_abs_eig,max_imag\n";
  double prev_c = INFINITY, prev_s = INFINITY;
  bool monotone = true;
  for (int M : c.nodes) {
    const double cr = bie::calderon_residual(specs, M);
    const double sr = bie::self_adjointness_residual(specs, M);
    const auto ev = bie::block_np_spectrum(bie::discretize_all(specs, M));
    double mabs = 0.0, mim = 0.0;
    for (const auto& z : ev) {
      mabs = std::max(mabs, std::abs(z));
      mim = std::max(mim, std::abs(z.imag()));
    }
    // Residuals already at rounding level cannot decrease further.
    constexpr double kFloor = 1e-12;
    monotone = monotone && (cr < prev_c || cr < kFloor) && (sr < prev_s || sr < kFloor);
    prev_c = cr;
    prev_s = sr;
    json row{{"M", M}, {"calderon", cr}, {"self_adjointness", sr}, {"max_abs_eigenvalue", mabs}, {"max_imag", mim}};
    if (confocal) {
      LayerStack stack(specs.front().focal, [&] {
        std::vector<double> xs;
        for (const auto& s : specs) xs.push_back(s.xi);
        return xs;
      }());
      double worst = 0.0;
      for (int n = 1; n <= 6; ++n) {
        std::vector<double> targets;
        for (Parity par : {Parity::Even, Parity::Odd})
          for (double l : modes(stack, n, c.tol.spectrum).lambdas(par)) targets.push_back(-l);
        worst = std::max(worst, bie::worst_containment(ev, targets));
      }
      row["analytic_containment"] = worst;
    }
    report["refinement"].push_back(row);
    fp << M << "," << fmt(cr) << "," << fmt(sr) << "," << fmt(mabs) << "," << fmt(mim) << "\n";
  }
  report["residuals_decrease_or_converged"] = monotone;
  Outputs out;
  out.files["bie_report.json"] = report.dump(2) + "\n";
  out.primary = out.files["bie_report.json"];
  out.fingerprint = fp.str();
  return out;
}

// ---------------------------------------------------------------- check

bool numbers_match(const std::string& a, const std::string& b) {
  if (a == b) return true;
  try {
    std::size_t pa = 0, pb = 0;
    const double x = std::stod(a, &pa), y = std::stod(b, &pb);
    if (pa != a.size() || pb != b.size()) return false;
    return std::abs(x - y) <= 1e-8 * std::max(std::abs(x), std::abs(y)) + 1e-12;
  } catch (const std::exception&) {
    return false;
  }
}

int compare_fingerprint(const std::string& fresh, const fs::path& fixture) {
  std::ifstream in(fixture);
  if (!in) {
    std::cerr << "error: fixture " << fixture << " not found\n";
    return kConfig;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  const auto want = io::read_csv_rows(ss.str());
  const auto got = io::read_csv_rows(fresh);
  if (want.size() != got.size()) {
    std::cerr << "drift: " << got.size() << " rows vs " << want.size() << " in " << fixture << "\n";
    return kNumerical;
  }
  for (std::size_t r = 0; r < want.size(); ++r) {
    if (want[r].size() != got[r].size()) {
      std::cerr << "drift: row " << r << " has a different column count\n";
      return kNumerical;
    }
    for (std::size_t k = 0; k < want[r].size(); ++k) {
      if (!numbers_match(want[r][k], got[r][k])) {
        std::cerr << "drift: row " << r << " column " << k << ": " << got[r][k] << " vs fixture " << want[r][k] << "\n";
        return kNumerical;
      }
    }
  }
  std::cout << "check ok: " << fixture.string() << " (" << want.size() << " rows)\n";
  return kOk;
}

int emit(const std::string& command, const Outputs& out, const Options& o) {
  if (o.check || o.write_fixture) {
    if (o.preset_name.empty()) throw ConfigError("--check/--write-fixture need --preset");
    const fs::path fixture = fs::path(o.fixtures_dir) / (command + "_" + o.preset_name + ".csv");
    if (o.write_fixture) {
      fs::create_directories(o.fixtures_dir);
      std::ofstream(fixture) << "# fingerprint for " << command << " --preset " << o.preset_name << "\n"
                             << out.fingerprint;
      std::cout << "wrote " << fixture.string() << "\n";
      return kOk;
    }
    return compare_fingerprint(out.fingerprint, fixture);
  }
  if (o.out_dir.empty()) {
    std::cout << out.primary;
    return kOk;
  }
  fs::create_directories(o.out_dir);
  for (const auto& [name, body] : out.files) {
    std::ofstream f(fs::path(o.out_dir) / name);
    if (!f) throw ConfigError("cannot write to " + o.out_dir);
    f << body;
  }
  std::cout << "wrote " << out.files.size() << " file(s) to " << o.out_dir << "\n";
  return kOk;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--config", o.config_path, "JSON run configuration");
  sub->add_option("--preset", o.preset_name, "named configuration")
      ->check(CLI::IsMember(preset_names()));
  sub->add_option("--out", o.out_dir, "output directory (default: print the main table)");
  sub->add_option("--n", o.n, "angular order");
  sub->add_option("--parity", o.parity, "even or odd (default both)");
  sub->add_option("--layers", o.layers, "number of layers (must match --xi)");
  sub->add_option("--xi", o.xi, "elliptic radii, outermost first")->delimiter(',');
  sub->add_option("--R", o.focal, "focal half-distance");
  sub->add_flag("--check", o.check, "compare against the committed fixture");
  sub->add_flag("--write-fixture", o.write_fixture, "regenerate the fixture for this preset");
  sub->add_option("--fixtures", o.fixtures_dir, "fixture directory");
  sub->add_option("--tol-cross-route", o.tol_cross_route);
  sub->add_option("--tol-realness", o.tol_realness);
  sub->add_option("--tol-spectral-slack", o.tol_spectral_slack);
  sub->add_option("--tol-max-condition", o.tol_max_condition);
  sub->add_option("--tol-residual", o.tol_residual);
  sub->add_option("--tol-combinatorial-cap", o.tol_cap);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plasmon modes and fields of confocal elliptic layer stacks"};
  app.set_version_flag("--version", PLASMON_VERSION);
  app.require_subcommand(1);
  Options o;

  auto* m = app.add_subcommand("modes", "plasmon eigenvalues and resonant conductivities");
  add_common(m, o);
  m->add_flag("--table", o.table, "also write the 4-decimal table layout");
  auto* cp = app.add_subcommand("charpoly", "characteristic polynomial coefficients and span values");
  add_common(cp, o);
  auto* f = app.add_subcommand("field", "perturbed field grids at each resonance");
  add_common(f, o);
  f->add_option("--delta", o.delta, "imaginary shift added to each resonant lambda (default 1e-5)");
  f->add_option("--mode-rank", o.mode_rank, "only this rank (0 = largest lambda)");
  f->add_flag("--gradient", o.gradient, "sample |grad(u - H)| instead of Re(u - H)");
  f->add_option("--nx", o.nx, "grid points along x1");
  f->add_option("--ny", o.ny, "grid points along x2");
  auto* sw = app.add_subcommand("sweep-disk", "even/odd splitting as the stack grows towards disks");
  add_common(sw, o);
  auto* b = app.add_subcommand("bie-validate", "Nystrom cross-checks of the layer-potential operators");
  add_common(b, o);
  b->add_option("--geometry", o.geometry, "circle, ellipse, confocal, close or perturbed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kConfig;
  }

  try {
    std::optional<Preset> p;
    io::RunConfig c = resolve_config(o, p);
    const bool table = o.table || (p && p->kind == PresetKind::Modes);
    if (m->parsed()) return emit("modes", cmd_modes(c, p, table), o);
    if (cp->parsed()) return emit("charpoly", cmd_charpoly(c, p), o);
    if (f->parsed()) return emit("field", cmd_field(c, p), o);
    if (sw->parsed()) return emit("sweep-disk", cmd_sweep(c, p), o);
    if (b->parsed()) return emit("bie-validate", cmd_bie(c, p, o.geometry), o);
  } catch (const AtResonance& e) {
    std::cerr << "error: " << e.what() << "\n(use --delta > 0 to evaluate next to a resonance)\n";
    return kResonance;
  } catch (const CrossValidationFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumerical;
  } catch (const NumericalInstability& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumerical;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  }
  return kConfig;
}
