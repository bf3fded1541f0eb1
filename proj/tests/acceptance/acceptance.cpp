// Acceptance runner: `acceptance <id>` checks one criterion, no argument runs
// all of them. One PASS/FAIL line per criterion; exit status 1 on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "../reference_values.hpp"
#include "../support.hpp"
#include "plasmon/plasmon.hpp"

using namespace plasmon;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Verdict table_check(const LayerStack& stack, int n, const reference::ModeTable& t) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto set = modes(stack, n);
  const double runtime = seconds_since(t0);
  double dl = 0.0, ds = 0.0;
  int lambda_bad = 0, sigma_bad = 0;
  const bool sizes = static_cast<int>(set.even.size()) == t.size && static_cast<int>(set.odd.size()) == t.size;
  if (sizes) {
    for (int j = 0; j < t.size; ++j) {
      const auto u = static_cast<std::size_t>(j);
      for (const auto& [got, want] : {std::pair{set.even[u].lambda, t.lambda_plus[u]}, {set.odd[u].lambda, t.lambda_minus[u]}}) {
        dl = std::max(dl, std::abs(got - want));
        lambda_bad += std::abs(got - want) > 5e-5;
      }
      for (const auto& [got, want] : {std::pair{*set.even[u].sigma1, t.sigma_plus[u]}, {*set.odd[u].sigma1, t.sigma_minus[u]}}) {
        const double rel = std::abs(got - want) / std::abs(want);
        ds = std::max(ds, rel);
        sigma_bad += rel > 5e-4;
      }
    }
  }
  const bool pass = sizes && lambda_bad == 0 && sigma_bad == 0 && runtime < 2.0;
  return {pass, "max|dlambda|=" + fmt("%.2e", dl) + " (bad " + std::to_string(lambda_bad) + "/" +
                    std::to_string(2 * t.size) + "), max rel dsigma1=" + fmt("%.2e", ds) + " (bad " +
                    std::to_string(sigma_bad) + "/" + std::to_string(2 * t.size) + "), runtime=" + fmt("%.3f", runtime) +
                    " s"};
}

// Random suite shared by criteria 3, 4 and 6: N <= 12, xi in (0, 20), n <= 8.
struct SuiteCase {
  LayerStack stack;
  int n;
};

std::vector<SuiteCase> random_suite() {
  proptest::Gen g(20240601);
  std::vector<SuiteCase> out;
  for (int i = 0; i < 100; ++i) {
    const int N = g.integer(1, 12);
    const auto s = g.stack(N, 1e-3, 20.0);
    out.push_back({s, g.integer(1, 8)});
  }
  return out;
}

std::vector<double> real_roots(const CharPoly& p) {
  std::vector<double> r;
  for (const auto& z : companion_roots(p)) r.push_back(z.real());
  return sorted_descending(r);
}

Verdict c1() { return table_check(table1_stack(), 1, reference::kTable1); }
Verdict c2() { return table_check(table2_stack(), 2, reference::kTable2); }

Verdict c3() {
  double worst = 0.0;
  for (const auto& c : random_suite()) {
    auto plus = real_roots(build_charpoly(c.stack, c.n, 1));
    auto minus = real_roots(build_charpoly(c.stack, c.n, -1));
    std::sort(plus.begin(), plus.end());
    std::vector<double> neg;
    for (double v : minus) neg.push_back(-v);
    std::sort(neg.begin(), neg.end());
    for (std::size_t j = 0; j < plus.size(); ++j) worst = std::max(worst, std::abs(plus[j] - neg[j]));
  }
  return {worst <= 1e-10, "100 configs, max |root+ - (-root-)|=" + fmt("%.2e", worst)};
}

Verdict c4() {
  double worst = 0.0;
  for (const auto& c : random_suite()) {
    for (int sign : {1, -1})
      for (const auto& z : companion_roots(build_charpoly(c.stack, c.n, sign))) worst = std::max(worst, std::abs(z));
  }
  return {worst <= 0.5 + 1e-10, "max |root| over 100 configs=" + fmt("%.15f", worst)};
}

Verdict c5() {
  proptest::Gen g(5150);
  double worst = 0.0;
  int configs = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int N = g.integer(1, 10);
    const auto s = g.stack(N, 0.01, 10.0);
    const int n = g.integer(1, 8);
    const auto f = build_charpoly(s, n, Parity::Even);
    const double sign = ((N / 2) % 2 == 0) ? 1.0 : -1.0;
    for (int j = 0; j < 20; ++j) {
      const cdouble lam = g.complex_in(0.7);
      const cdouble dense = determinant(build_gpm(s, lam, n, Parity::Even).entries);
      const cdouble rec = recursion_determinant(s, lam, n, Parity::Even, 1);
      const cdouble poly = sign * eval(f, lam);
      worst = std::max({worst, proptest::rel_err(dense, rec), proptest::rel_err(dense, poly), proptest::rel_err(rec, poly)});
    }
    ++configs;
  }
  return {worst <= 1e-9, std::to_string(configs) + " configs x 20 lambda, max pairwise rel err=" + fmt("%.2e", worst)};
}

Verdict c6() {
  double worst = 0.0;
  for (const auto& c : random_suite()) {
    for (Parity p : {Parity::Even, Parity::Odd}) {
      std::vector<double> np;
      for (const auto& z : eigenvalues(build_np(c.stack, c.n, p).entries)) np.push_back(-z.real());
      worst = std::max(worst, multiset_distance(np, real_roots(build_charpoly(c.stack, c.n, p))));
    }
  }
  return {worst <= 1e-8, "max multiset distance eig(-K^T) vs roots=" + fmt("%.2e", worst)};
}

std::int64_t h_brute(int N, int k) {
  std::int64_t h = 0;
  for (std::uint32_t mask = 0; mask < (1u << N); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    int sum = 0;
    for (int i = 0; i < N; ++i)
      if (mask & (1u << i)) sum += i + 1;
    h += (sum % 2 == 0) ? 1 : -1;
  }
  return h;
}

Verdict c7() {
  int mismatches = 0, checked = 0;
  for (int N = 1; N <= 20; ++N)
    for (int k = 0; k <= N; ++k) {
      mismatches += h_coeff(N, k) != h_brute(N, k);
      ++checked;
    }
  int closed_bad = 0;
  for (int N = 1; N <= 20; ++N) {
    closed_bad += h_coeff(N, 1) != ((N % 2 == 0 ? 1 : -1) - 1) / 2;
    if (N >= 2) closed_bad += h_coeff(N, 2) != -(N / 2);
    closed_bad += h_coeff(N, N) != (((N * (N + 1) / 2) % 2 == 0) ? 1 : -1);
  }
  for (int M = 1; M <= 10; ++M)
    for (int k = 1; k <= M; ++k) closed_bad += h_coeff(2 * M, 2 * k - 1) != 0;
  return {mismatches == 0 && closed_bad == 0, std::to_string(checked) + " (N,k) pairs vs brute force, " +
                                                  std::to_string(mismatches) + " mismatches, " +
                                                  std::to_string(closed_bad) + " closed-form violations"};
}

Verdict c8() {
  bool ok = true;
  std::string detail;
  for (int N : {3, 4, 5}) {
    for (int sign : {1, -1}) {
      double prev = INFINITY;
      detail += "N=" + std::to_string(N) + (sign > 0 ? "+" : "-") + ":";
      for (double eps : {1e-1, 1e-2, 1e-3}) {
        std::vector<double> xi;
        for (int k = N; k >= 1; --k) xi.push_back(eps * k);
        const double d = multiset_distance(real_roots(build_charpoly(LayerStack(1.0, xi), 1, sign)), thin_strip_roots(N, sign));
        ok = ok && d < prev;
        prev = d;
        detail += " " + fmt("%.1e", d);
      }
      detail += "; ";
    }
  }
  return {ok, "root-to-limit distance for eps=1e-1,1e-2,1e-3: " + detail};
}

Verdict c9() {
  const auto pts = disk_degeneration_sweep(17, 0.8, {1, 2, 3, 4, 5}, 1);
  bool decreasing = true;
  std::string gaps;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    if (j) decreasing = decreasing && pts[j].gap < pts[j - 1].gap;
    gaps += fmt("%.3e", pts[j].gap) + (j + 1 < pts.size() ? "," : "");
  }
  const double slope = sweep_log_slope(pts);
  const bool small = pts.back().gap < 1e-6;
  const bool slope_ok = std::abs(slope + 2.0) <= 0.2 * 2.0;
  return {decreasing && small && slope_ok, "gaps L=1..5: " + gaps + "; decreasing=" + (decreasing ? "yes" : "no") +
                                               ", gap(L=5)<1e-6: " + (small ? "yes" : "no") +
                                               ", log-slope=" + fmt("%.3f", slope) + " (target -2 +/- 0.4)"};
}

Verdict c10() {
  proptest::Gen g(1010);
  double cont = 0.0, flux = 0.0, repr = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int N = g.integer(1, 5);
    const LayerStack s(g.uniform(0.5, 2.0), g.radii(N, 0.1, 2.0));
    const cdouble lam(g.uniform(-0.6, 0.6), g.uniform(0.02, 0.3));
    const int first = g.integer(1, 3);
    const BackgroundField h({{first, g.uniform(-1, 1), g.uniform(-1, 1)}, {first + g.integer(1, 2), g.uniform(-1, 1), g.uniform(-1, 1)}});
    const auto sol = solve_densities(s, lam, h);
    const cdouble s1 = sigma_from_lambda(lam, 1.0);
    for (int k = 1; k <= N; ++k) {
      double scale_u = 0.0, du = 0.0, scale_f = 0.0, df = 0.0;
      for (int j = 0; j < 64; ++j) {
        const double eta = kTwoPi * (j + 0.5) / 64;
        const EllipticPoint p(s.xi(k), eta);
        const cdouble in = perturbed_potential(sol, p, Side::Inside), out = perturbed_potential(sol, p, Side::Outside);
        scale_u = std::max(scale_u, std::abs(in));
        du = std::max(du, std::abs(in - out));
        const cdouble sig_out = (k - 1) % 2 == 1 ? s1 : cdouble(1.0, 0.0);
        const cdouble sig_in = k % 2 == 1 ? s1 : cdouble(1.0, 0.0);
        const cdouble fo = sig_out * interface_flux(sol, k, eta, Side::Outside);
        const cdouble fi = sig_in * interface_flux(sol, k, eta, Side::Inside);
        scale_f = std::max(scale_f, std::abs(fo));
        df = std::max(df, std::abs(fo - fi));
      }
      cont = std::max(cont, du / scale_u);
      flux = std::max(flux, df / scale_f);
    }
    for (int j = 0; j < 5; ++j) {
      const EllipticPoint p(g.uniform(0.0, 3.0), g.uniform(0.0, kTwoPi));
      const cdouble a = perturbed_potential(sol, p), b = perturbed_potential_by_layers(sol, p);
      repr = std::max(repr, std::abs(a - b) / std::max(1.0, std::abs(a)));
    }
  }
  // Exterior decay along a ray, H with orders 2 and 5.
  const LayerStack s(1.0, {1.2, 0.9, 0.5});
  const auto sol = solve_densities(s, {0.15, 0.05}, BackgroundField({{2, 1.0, 0.4}, {5, 0.8, -0.3}}));
  double mx = 0, my = 0, sxy = 0, sxx = 0;
  std::vector<double> xs, ys;
  for (int j = 0; j <= 40; ++j) {
    xs.push_back(s.xi(1) + 2.0 + 4.0 * j / 40);
    ys.push_back(std::log(std::abs(perturbed_potential(sol, {xs.back(), 0.3}))));
    mx += xs.back();
    my += ys.back();
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(ys.size());
  for (std::size_t j = 0; j < xs.size(); ++j) {
    sxy += (xs[j] - mx) * (ys[j] - my);
    sxx += (xs[j] - mx) * (xs[j] - mx);
  }
  const double slope = sxy / sxx;
  const bool pass = cont <= 1e-8 && flux <= 1e-6 && repr <= 1e-10 && std::abs(slope + 2.0) <= 0.02 * 2.0;
  return {pass, "continuity=" + fmt("%.2e", cont) + ", flux=" + fmt("%.2e", flux) + ", closed-form vs summation=" +
                    fmt("%.2e", repr) + " (100 pts), decay slope=" + fmt("%.4f", slope) + " (n_min=2)"};
}

Verdict c11() {
  const Preset p = preset("fig12");
  const auto set = modes(p.stack, p.n);
  double worst = 0.0;
  int count = 0;
  for (Parity par : {Parity::Even, Parity::Odd}) {
    for (double lam : set.lambdas(par)) {
      const auto sol = solve_densities(p.stack, {lam, 1e-5}, BackgroundField::single(p.n, par));
      const auto g = field_grid(sol, p.box, p.nx, p.ny, GridQuantity::GradientMagnitude, true);
      std::size_t best = 0;
      for (std::size_t i = 0; i < g.values.size(); ++i)
        if (g.values[i] > g.values[best]) best = i;
      const auto e = cartesian_to_elliptic(g.x1[best % static_cast<std::size_t>(g.nx)],
                                           g.x2[best / static_cast<std::size_t>(g.nx)], p.stack.focal());
      worst = std::max(worst, std::min({e.eta, std::abs(e.eta - M_PI), kTwoPi - e.eta}));
      ++count;
    }
  }
  return {count == 6 && worst <= 0.1, std::to_string(count) + " modes on a " + std::to_string(p.nx) + "x" +
                                          std::to_string(p.ny) + " grid, worst angular distance of argmax to {0, pi}=" +
                                          fmt("%.4f", worst)};
}

Verdict c12() {
  using namespace plasmon::bie;
  double ellipse = 0.0;
  {
    const double xi0 = 0.6;
    const auto ev = block_np_spectrum(discretize_all({CurveSpec::confocal(1.0, xi0)}, 256));
    for (int n = 1; n <= 8; ++n) {
      const double v = 0.5 * std::exp(-2.0 * n * xi0);
      ellipse = std::max(ellipse, worst_containment(ev, {v, -v}));
    }
  }
  double stack_err = 0.0;
  {
    const LayerStack s(1.0, {1.0, 0.7, 0.4});
    const auto ev = block_np_spectrum(discretize_all(confocal_curves(s), 384));
    for (int n = 1; n <= 6; ++n) {
      std::vector<double> targets;
      const auto m = modes(s, n);
      for (Parity par : {Parity::Even, Parity::Odd})
        for (double l : m.lambdas(par)) targets.push_back(-l);
      stack_err = std::max(stack_err, worst_containment(ev, targets));
    }
  }
  double circle = 0.0;
  for (const auto& z : eigenvalues(assemble_kstar_block(discretize(CurveSpec::circle(1.0), 64))))
    circle = std::max(circle, std::min(std::abs(z - cdouble(0.5, 0.0)), std::abs(z)));
  const auto specs = confocal_curves(LayerStack(1.0, {0.5, 0.45, 0.4}));
  std::vector<double> cr, sr;
  for (int M : {128, 256, 512}) {
    cr.push_back(calderon_residual(specs, M));
    sr.push_back(self_adjointness_residual(specs, M));
  }
  const bool mono = cr[1] < cr[0] && cr[2] < cr[1] && sr[1] < sr[0] && sr[2] < sr[1];
  const bool pass = ellipse <= 1e-8 && stack_err <= 1e-6 && circle <= 1e-12 && mono;
  return {pass, "ellipse=" + fmt("%.2e", ellipse) + ", 3-layer containment=" + fmt("%.2e", stack_err) +
                    ", circle=" + fmt("%.2e", circle) + ", calderon " + fmt("%.1e", cr[0]) + ">" + fmt("%.1e", cr[1]) +
                    ">" + fmt("%.1e", cr[2]) + ", self-adjointness " + fmt("%.1e", sr[0]) + ">" + fmt("%.1e", sr[1]) +
                    ">" + fmt("%.1e", sr[2])};
}

Verdict c13() {
  const auto stack = table1_stack();
  const auto poly = build_charpoly(stack, 1, 1);
  const auto roots = real_roots(poly);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double lam = roots.back() + (roots.front() - roots.back()) * i / 999.0;
    worst = std::max(worst, std::abs(eval(poly, lam)));
  }
  return {worst < 1e-9, "max |f+| on 1000-point span=" + fmt("%.2e", worst)};
}

const std::vector<std::pair<const char*, std::function<Verdict()>>>& criteria() {
  static const std::vector<std::pair<const char*, std::function<Verdict()>>> list{
      {"unit-step stack table", c1},
      {"geometric stack table", c2},
      {"root symmetry", c3},
      {"spectral bound", c4},
      {"triple-route determinant", c5},
      {"eigenvalue/root equivalence", c6},
      {"h-coefficients", c7},
      {"thin-strip limit", c8},
      {"disk limit", c9},
      {"field correctness", c10},
      {"gradient localization", c11},
      {"BIE cross-validation", c12},
      {"char. polynomial on span", c13},
  };
  return list;
}

bool run(int id) {
  const auto& [name, fn] = criteria()[static_cast<std::size_t>(id - 1)];
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = fn();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  std::printf("%s criterion %d (%s): %s [%.2f s]\n", v.pass ? "PASS" : "FAIL", id, name, v.detail.c_str(),
              seconds_since(t0));
  std::fflush(stdout);
  return v.pass;
}

}  // namespace

int main(int argc, char** argv) {
  const int total = static_cast<int>(criteria().size());
  if (argc > 1) {
    const int id = std::atoi(argv[1]);
    if (id < 1 || id > total) {
      std::fprintf(stderr, "usage: acceptance [1..%d]\n", total);
      return 2;
    }
    return run(id) ? 0 : 1;
  }
  int failed = 0;
  for (int id = 1; id <= total; ++id) failed += !run(id);
  return failed ? 1 : 0;
}
