#pragma once

#include <string>
#include <vector>

#include "gkz/fan.hpp"
#include "gkz/secondary.hpp"

/// SVG 1.1 renderings. Coordinates are decimal approximations with 12
/// significant digits; every geometric decision is made exactly upstream.
namespace gkz::svg {

enum class PlotKind { Polytope, Fan, Secondary };

PlotKind kind_from_string(const std::string& s);
std::string to_string(PlotKind k);

struct PlotSpec {
  PlotKind kind = PlotKind::Fan;
  Rational xmin = -3, xmax = 3, ymin = -3, ymax = 3;
  Rational ray_length = 2;
  bool dashed_virtual = true;

  /// Throws InvalidInput on an empty viewport or a nonpositive ray length.
  void validate() const;
};

/// P_b with its constraint lines; lines of virtual generators are dashed.
std::string plot_polytope(const Calibration& c, const VectorS& b, const PlotSpec& spec);

/// Rays h(e_i) scaled to the ray length, shaded maximal cones, virtual rays dashed.
std::string plot_fan(const QuantumFan& f, const PlotSpec& spec);

/// Gale generators and chamber rays for n - d = 2, with marked points.
std::string plot_secondary(const GaleData& g, const SecondaryFan& sf, const std::vector<VectorS>& marked,
                           const PlotSpec& spec);

}  // namespace gkz::svg
