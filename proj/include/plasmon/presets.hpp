#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "plasmon/errors.hpp"
#include "plasmon/field.hpp"
#include "plasmon/geometry.hpp"
#include "plasmon/spectrum.hpp"

namespace plasmon {

/// Layers with equally spaced semi-major axes b_k = b_N + (N - k) T.
inline LayerStack equidistant_semimajor(int N, double focal, double b_inner, double spacing) {
  if (N < 1 || !(spacing > 0.0)) throw ConfigError("equidistant stack needs N >= 1 and T > 0");
  std::vector<double> xi;
  for (int k = 1; k <= N; ++k) xi.push_back(xi_from_semimajor(b_inner + (N - k) * spacing, focal));
  return LayerStack(focal, xi);
}

enum class PresetKind { Modes, CharPoly, Sweep, Field };

struct Preset {
  std::string name;
  PresetKind kind = PresetKind::Modes;
  LayerStack stack{1.0, {1.0}};
  int n = 1;
  // sweep
  int sweep_layers = 0;
  double sweep_ratio = 0.8;
  std::vector<double> sweep_scales;
  // field
  BoundingBox box;
  int nx = 0;
  int ny = 0;
  bool gradient = false;
};

inline const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"table1", "table2", "fig5",  "fig8",
                                              "fig9",   "fig10",  "fig11-analog", "fig12"};
  return names;
}

inline LayerStack table1_stack() {
  std::vector<double> xi;
  for (int i = 1; i <= 15; ++i) xi.push_back(16.0 - i);
  return LayerStack(1.0, xi);
}

inline LayerStack table2_stack() { return geometric_stack(16, 16.0, 0.8); }

inline Preset preset(const std::string& name) {
  Preset p;
  p.name = name;
  if (name == "table1" || name == "fig5") {
    p.kind = name == "table1" ? PresetKind::Modes : PresetKind::CharPoly;
    p.stack = table1_stack();
    p.n = 1;
  } else if (name == "table2" || name == "fig8") {
    p.kind = name == "table2" ? PresetKind::Modes : PresetKind::CharPoly;
    p.stack = table2_stack();
    p.n = 2;
  } else if (name == "fig9") {
    p.kind = PresetKind::Sweep;
    p.n = 1;
    p.sweep_layers = 17;
    p.sweep_ratio = 0.8;
    p.sweep_scales = {1, 2, 3, 4, 5};
    p.stack = geometric_stack(17, 17.0, 0.8);
  } else if (name == "fig10") {
    p.kind = PresetKind::Field;
    p.stack = equidistant_semimajor(4, 0.9, 1.0, 0.2);
    p.n = 6;
    p.box = {-2.0, 2.0, -1.6, 1.6};
    p.nx = 201;
    p.ny = 161;
  } else if (name == "fig11-analog") {
    // Nearly circular confocal layers: focal length chosen so the innermost radius is about 1.
    p.kind = PresetKind::Field;
    std::vector<double> xi;
    for (int k = 1; k <= 8; ++k) xi.push_back(8.0 + 0.05 * (8 - k));
    p.stack = LayerStack(2.0 * std::exp(-8.0), xi);
    p.n = 6;
    p.box = {-2.0, 2.0, -2.0, 2.0};
    p.nx = 201;
    p.ny = 201;
  } else if (name == "fig12") {
    // Thin ellipses; the grid must resolve semi-minor axes of a few hundredths.
    p.kind = PresetKind::Field;
    p.stack = equidistant_semimajor(3, 1.0, 1.0001, 0.00045);
    p.n = 7;
    p.box = {-1.1, 1.1, -0.06, 0.06};
    p.nx = 1201;
    p.ny = 301;
    p.gradient = true;
  } else {
    throw ConfigError("unknown preset '" + name + "'");
  }
  return p;
}

}  // namespace plasmon
