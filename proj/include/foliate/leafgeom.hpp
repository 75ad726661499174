#pragma once

// Closed-form leaves of (x^2-1) e^z and (x^2+y^2-1) e^z, exact spiral
// intervals, and SVG/CSV figures.

#include "foliate/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace foliate {

enum class PlanarBranch { Outer, Inner, Vertical };
enum class SpatialBranch { Cylinder, Paraboloid, VerticalCylinder };

std::string_view to_string(PlanarBranch b);
std::string_view to_string(SpatialBranch b);

struct PlanarPoint {
  double x;
  double z;
};

struct PlanarLeafSample {
  double c = 1;
  double level = 0;
  PlanarBranch branch = PlanarBranch::Outer;
  std::vector<PlanarPoint> points;
};

struct SpatialPoint {
  double x;
  double y;
  double z;
};

struct SpatialLeafSample {
  double c = 1;
  double level = 0;
  SpatialBranch branch = SpatialBranch::Cylinder;
  std::vector<SpatialPoint> points;
};

// Outer/Inner: [lo, hi] is an x range inside |x| > 1 or |x| < 1.
// Vertical: [lo, hi] is a z range, points split between x = -1 and x = 1.
// Throws DomainError.
PlanarLeafSample planar_leaf(double c, PlanarBranch branch, double lo, double hi, int n);
PlanarLeafSample planar_leaf_serial(double c, PlanarBranch branch, double lo, double hi, int n);

struct SpatialGrid {
  // radius range (Cylinder, Paraboloid) or z range (VerticalCylinder)
  double lo;
  double hi;
  int n_radial;
  int n_theta;
};

SpatialLeafSample spatial_leaf(double c, SpatialBranch branch, const SpatialGrid& grid);
SpatialLeafSample spatial_leaf_serial(double c, SpatialBranch branch, const SpatialGrid& grid);

double planar_level(double x, double z);
double spatial_level(double x, double y, double z);

double max_residual(const PlanarLeafSample& s);
double max_residual(const SpatialLeafSample& s);
double max_residual_serial(const PlanarLeafSample& s);
double max_residual_serial(const SpatialLeafSample& s);

// Height at which the inner (paraboloid) leaf crosses x = 0.
double axis_height(double c);

struct SpiralInterval {
  int k;
  Rational i;   // 1 - 2^-k
  Rational lo;  // I_k = [i_k, i_{k+1}]
  Rational hi;
};

// k = 1..n, n <= 60. Throws InvalidArgument.
std::vector<SpiralInterval> spiral_intervals(int n);

struct Segment2 {
  PlanarPoint a;
  PlanarPoint b;
};

// Level set of planar_level on a grid; crossings refined by bisection.
std::vector<Segment2> marching_squares(double level, double x0, double x1, double z0, double z1,
                                       int nx, int nz);

struct Figure {
  std::string svg;
  std::string csv;
};

// Known ids: planar-foliation, reeb-annulus, c-foliation, spiral-annulus,
// suspension-annulus, interval-ladder. Throws UnknownFigure / InvalidArgument.
Figure render_figure(const std::string& id, const std::map<std::string, std::string>& params);
std::vector<std::string> figure_ids();

// Writes the SVG to `path` and the CSV next to it. Returns the CSV path.
std::string render(const std::string& id, const std::map<std::string, std::string>& params,
                   const std::string& path);

}  // namespace foliate
