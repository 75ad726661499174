#include "foliate/leafgeom.hpp"

#include "foliate/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

namespace foliate {

std::string_view to_string(PlanarBranch b) {
  switch (b) {
    case PlanarBranch::Outer: return "outer";
    case PlanarBranch::Inner: return "inner";
    case PlanarBranch::Vertical: return "vertical";
  }
  return "?";
}

std::string_view to_string(SpatialBranch b) {
  switch (b) {
    case SpatialBranch::Cylinder: return "cylinder";
    case SpatialBranch::Paraboloid: return "paraboloid";
    case SpatialBranch::VerticalCylinder: return "vertical_cylinder";
  }
  return "?";
}

double planar_level(double x, double z) { return (x - 1) * (x + 1) * std::exp(z); }

double spatial_level(double x, double y, double z) { return (x * x + y * y - 1) * std::exp(z); }

double axis_height(double c) { return 2 * std::log(c); }

namespace {

[[noreturn]] void domain(const std::string& msg) { throw Error(ErrorCode::DomainError, msg); }

double lerp(double lo, double hi, int i, int n) {
  if (n == 1) return lo;
  if (i == n - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

double level_for(PlanarBranch b, double c) {
  switch (b) {
    case PlanarBranch::Outer: return c * c;
    case PlanarBranch::Inner: return -c * c;
    default: return 0;
  }
}

void check_planar(double c, PlanarBranch b, double lo, double hi, int n) {
  if (n < 1) domain("need at least one sample");
  if (!(lo <= hi)) domain("empty range");
  if (b == PlanarBranch::Vertical) return;
  if (!(c > 0)) domain("c must be positive");
  if (b == PlanarBranch::Outer) {
    bool right = lo > 1 && hi > 1;
    bool left = lo < -1 && hi < -1;
    if (!right && !left) domain("outer range must stay in |x| > 1");
  } else if (!(std::abs(lo) < 1 && std::abs(hi) < 1)) {
    domain("inner range must stay in |x| < 1");
  }
}

PlanarPoint planar_point(double c, PlanarBranch b, double lo, double hi, int n, int i) {
  if (b == PlanarBranch::Vertical) {
    // first half on x = -1, second on x = 1
    int half = (n + 1) / 2;
    if (i < half) return {-1.0, lerp(lo, hi, i, half)};
    return {1.0, lerp(lo, hi, i - half, n - half)};
  }
  double x = lerp(lo, hi, i, n);
  double d = (x - 1) * (x + 1);
  double z = 2 * std::log(c) - std::log(b == PlanarBranch::Outer ? d : -d);
  return {x, z};
}

PlanarLeafSample planar_header(double c, PlanarBranch b, int n) {
  PlanarLeafSample s;
  s.c = c;
  s.branch = b;
  s.level = level_for(b, c);
  s.points.resize(static_cast<std::size_t>(n));
  return s;
}

void check_spatial(double c, SpatialBranch b, const SpatialGrid& g) {
  if (g.n_radial < 1 || g.n_theta < 1) domain("need at least one sample");
  if (!(g.lo <= g.hi)) domain("empty range");
  if (b == SpatialBranch::VerticalCylinder) return;
  if (!(c > 0)) domain("c must be positive");
  if (b == SpatialBranch::Cylinder && !(g.lo > 1)) domain("cylinder radii must exceed 1");
  if (b == SpatialBranch::Paraboloid && !(g.lo >= 0 && g.hi < 1)) {
    domain("paraboloid radii must lie in [0, 1)");
  }
}

SpatialPoint spatial_point(double c, SpatialBranch b, const SpatialGrid& g, int k) {
  int i = k / g.n_theta;
  int j = k % g.n_theta;
  double theta = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(g.n_theta);
  double r = 1, z;
  if (b == SpatialBranch::VerticalCylinder) {
    z = lerp(g.lo, g.hi, i, g.n_radial);
  } else {
    r = lerp(g.lo, g.hi, i, g.n_radial);
    double d = (r - 1) * (r + 1);
    z = 2 * std::log(c) - std::log(b == SpatialBranch::Cylinder ? d : -d);
  }
  if (r == 0) return {0, 0, z};
  return {r * std::cos(theta), r * std::sin(theta), z};
}

SpatialLeafSample spatial_header(double c, SpatialBranch b, const SpatialGrid& g) {
  SpatialLeafSample s;
  s.c = c;
  s.branch = b;
  s.level = b == SpatialBranch::Cylinder ? c * c : b == SpatialBranch::Paraboloid ? -c * c : 0;
  s.points.resize(static_cast<std::size_t>(g.n_radial) * static_cast<std::size_t>(g.n_theta));
  return s;
}

}  // namespace

PlanarLeafSample planar_leaf(double c, PlanarBranch b, double lo, double hi, int n) {
  check_planar(c, b, lo, hi, n);
  auto s = planar_header(c, b, n);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) s.points[static_cast<std::size_t>(i)] = planar_point(c, b, lo, hi, n, i);
  return s;
}

PlanarLeafSample planar_leaf_serial(double c, PlanarBranch b, double lo, double hi, int n) {
  check_planar(c, b, lo, hi, n);
  auto s = planar_header(c, b, n);
  for (int i = 0; i < n; ++i) s.points[static_cast<std::size_t>(i)] = planar_point(c, b, lo, hi, n, i);
  return s;
}

SpatialLeafSample spatial_leaf(double c, SpatialBranch b, const SpatialGrid& g) {
  check_spatial(c, b, g);
  auto s = spatial_header(c, b, g);
  const int total = static_cast<int>(s.points.size());
#pragma omp parallel for schedule(static)
  for (int k = 0; k < total; ++k) s.points[static_cast<std::size_t>(k)] = spatial_point(c, b, g, k);
  return s;
}

SpatialLeafSample spatial_leaf_serial(double c, SpatialBranch b, const SpatialGrid& g) {
  check_spatial(c, b, g);
  auto s = spatial_header(c, b, g);
  const int total = static_cast<int>(s.points.size());
  for (int k = 0; k < total; ++k) s.points[static_cast<std::size_t>(k)] = spatial_point(c, b, g, k);
  return s;
}

double max_residual(const PlanarLeafSample& s) {
  double m = 0;
  const int n = static_cast<int>(s.points.size());
#pragma omp parallel for reduction(max : m) schedule(static)
  for (int i = 0; i < n; ++i) {
    const auto& p = s.points[static_cast<std::size_t>(i)];
    m = std::max(m, std::abs(planar_level(p.x, p.z) - s.level));
  }
  return m;
}

double max_residual_serial(const PlanarLeafSample& s) {
  double m = 0;
  for (const auto& p : s.points) m = std::max(m, std::abs(planar_level(p.x, p.z) - s.level));
  return m;
}

double max_residual(const SpatialLeafSample& s) {
  double m = 0;
  const int n = static_cast<int>(s.points.size());
#pragma omp parallel for reduction(max : m) schedule(static)
  for (int i = 0; i < n; ++i) {
    const auto& p = s.points[static_cast<std::size_t>(i)];
    m = std::max(m, std::abs(spatial_level(p.x, p.y, p.z) - s.level));
  }
  return m;
}

double max_residual_serial(const SpatialLeafSample& s) {
  double m = 0;
  for (const auto& p : s.points) m = std::max(m, std::abs(spatial_level(p.x, p.y, p.z) - s.level));
  return m;
}

std::vector<SpiralInterval> spiral_intervals(int n) {
  if (n < 0 || n > 60) throw Error(ErrorCode::InvalidArgument, "spiral_intervals needs 0 <= n <= 60");
  std::vector<SpiralInterval> out;
  Rational sum(0);
  for (int k = 1; k <= n; ++k) {
    sum += Rational(1, std::int64_t(1) << k);
    Rational next = sum + Rational(1, std::int64_t(1) << (k + 1));
    out.push_back({k, sum, sum, next});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Marching squares

std::vector<Segment2> marching_squares(double level, double x0, double x1, double z0, double z1,
                                       int nx, int nz) {
  if (nx < 1 || nz < 1) domain("grid needs at least one cell");
  auto X = [&](int i) { return x0 + (x1 - x0) * i / nx; };
  auto Z = [&](int j) { return z0 + (z1 - z0) * j / nz; };
  auto g = [&](double x, double z) { return planar_level(x, z) - level; };
  auto refine = [&](PlanarPoint a, PlanarPoint b) {
    double ga = g(a.x, a.z);
    for (int it = 0; it < 100; ++it) {
      PlanarPoint m{(a.x + b.x) / 2, (a.z + b.z) / 2};
      if ((m.x == a.x && m.z == a.z) || (m.x == b.x && m.z == b.z)) break;
      double gm = g(m.x, m.z);
      if ((gm < 0) == (ga < 0)) {
        a = m;
        ga = gm;
      } else {
        b = m;
      }
    }
    double ga2 = std::abs(g(a.x, a.z)), gb2 = std::abs(g(b.x, b.z));
    return ga2 <= gb2 ? a : b;
  };
  std::vector<Segment2> out;
  for (int j = 0; j < nz; ++j) {
    for (int i = 0; i < nx; ++i) {
      PlanarPoint c[4] = {{X(i), Z(j)}, {X(i + 1), Z(j)}, {X(i + 1), Z(j + 1)}, {X(i), Z(j + 1)}};
      double v[4];
      for (int k = 0; k < 4; ++k) v[k] = g(c[k].x, c[k].z);
      std::vector<PlanarPoint> hits;
      for (int k = 0; k < 4; ++k) {
        int l = (k + 1) % 4;
        if ((v[k] < 0) != (v[l] < 0)) hits.push_back(refine(c[k], c[l]));
      }
      if (hits.size() == 2) {
        out.push_back({hits[0], hits[1]});
      } else if (hits.size() == 4) {
        double centre = g((c[0].x + c[2].x) / 2, (c[0].z + c[2].z) / 2);
        if ((centre < 0) == (v[0] < 0)) {
          out.push_back({hits[0], hits[1]});
          out.push_back({hits[2], hits[3]});
        } else {
          out.push_back({hits[0], hits[3]});
          out.push_back({hits[1], hits[2]});
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Figures

namespace {

std::string num(double v) {
  if (std::abs(v) < 5e-7) v = 0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string g12(double v) {
  if (v == 0) v = 0;  // drops the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct Canvas {
  double x0, x1, y0, y1;
  static constexpr double size = 600, margin = 20;
  std::ostringstream body;

  double sx(double x) const { return margin + (x - x0) / (x1 - x0) * (size - 2 * margin); }
  double sy(double y) const { return size - margin - (y - y0) / (y1 - y0) * (size - 2 * margin); }

  void path(const std::string& cls, const std::vector<PlanarPoint>& pts) {
    if (pts.empty()) return;
    body << "  <path class=\"" << cls << "\" d=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      body << (i ? " L " : "M ") << num(sx(pts[i].x)) << ' ' << num(sy(pts[i].z));
    }
    body << "\"/>\n";
  }
  void segments(const std::string& cls, const std::vector<Segment2>& segs) {
    if (segs.empty()) return;
    body << "  <path class=\"" << cls << "\" d=\"";
    for (std::size_t i = 0; i < segs.size(); ++i) {
      body << (i ? " M " : "M ") << num(sx(segs[i].a.x)) << ' ' << num(sy(segs[i].a.z)) << " L "
           << num(sx(segs[i].b.x)) << ' ' << num(sy(segs[i].b.z));
    }
    body << "\"/>\n";
  }
  void line(const std::string& cls, double xa, double ya, double xb, double yb) {
    body << "  <line class=\"" << cls << "\" x1=\"" << num(sx(xa)) << "\" y1=\"" << num(sy(ya))
         << "\" x2=\"" << num(sx(xb)) << "\" y2=\"" << num(sy(yb)) << "\"/>\n";
  }
  void circle(const std::string& cls, double r) {
    body << "  <circle class=\"" << cls << "\" cx=\"" << num(sx(0)) << "\" cy=\"" << num(sy(0))
         << "\" r=\"" << num(r / (x1 - x0) * (size - 2 * margin)) << "\"/>\n";
  }
  void text(double x, double y, const std::string& s) {
    body << "  <text x=\"" << num(sx(x)) << "\" y=\"" << num(sy(y)) << "\">" << s << "</text>\n";
  }
  std::string svg(const std::string& title) const {
    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"600\" "
         "viewBox=\"0 0 600 600\">\n"
      << "  <title>" << title << "</title>\n"
      << "  <style>path,line,circle{fill:none;stroke:black;stroke-width:1}"
         ".vertical,.leaf{stroke-width:2}.transverse{stroke-dasharray:4 3}"
         ".tick{stroke:#a00}</style>\n"
      << body.str() << "</svg>\n";
    return o.str();
  }
};

struct Csv {
  std::ostringstream o;
  Csv() { o << "x,z,level,branch\n"; }
  void row(double x, double z, double level, std::string_view branch) {
    o << g12(x) << ',' << g12(z) << ',' << g12(level) << ',' << branch << '\n';
  }
  void rows(const PlanarLeafSample& s) {
    for (const auto& p : s.points) row(p.x, p.z, s.level, to_string(s.branch));
  }
};

using Params = std::map<std::string, std::string>;

double param_double(const Params& p, const std::string& key, double dflt) {
  auto it = p.find(key);
  if (it == p.end()) return dflt;
  try {
    std::size_t used = 0;
    double v = std::stod(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, "parameter " + key + " is not a number: " + it->second);
  }
}

int param_int(const Params& p, const std::string& key, int dflt) {
  double v = param_double(p, key, dflt);
  if (v != std::floor(v)) throw Error(ErrorCode::InvalidArgument, "parameter " + key + " must be an integer");
  return static_cast<int>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<double> param_levels(const Params& p, const std::string& key, std::vector<double> dflt) {
  auto it = p.find(key);
  if (it == p.end()) return dflt;
  std::vector<double> out;
  for (const auto& part : split(it->second, ',')) {
    Params one{{key, part}};
    double v = param_double(one, key, 0);
    if (!(v > 0)) throw Error(ErrorCode::InvalidArgument, "levels must be positive");
    out.push_back(v);
  }
  return out;
}

void only(const Params& p, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : p) {
    if (std::find_if(keys.begin(), keys.end(), [&](const char* x) { return k == x; }) == keys.end()) {
      throw Error(ErrorCode::InvalidArgument, "unknown parameter '" + k + "'");
    }
  }
}

Figure planar_foliation(const Params& p) {
  only(p, {"c", "grid", "xmax", "zmax"});
  auto levels = param_levels(p, "c", {0.5, 1, 2});
  int grid = param_int(p, "grid", 120);
  double xm = param_double(p, "xmax", 3), zm = param_double(p, "zmax", 4);
  if (grid < 2 || !(xm > 1) || !(zm > 0)) throw Error(ErrorCode::InvalidArgument, "bad window");
  Canvas cv{-xm, xm, -zm, zm, {}};
  Csv csv;
  auto emit = [&](double level, const char* cls) {
    auto segs = marching_squares(level, -xm, xm, -zm, zm, grid, grid);
    cv.segments(cls, segs);
    for (const auto& s : segs) {
      for (const auto& q : {s.a, s.b}) {
        std::string_view br = level > 0 ? "outer" : level < 0 ? "inner" : "vertical";
        csv.row(q.x, q.z, level, br);
      }
    }
  };
  emit(0, "vertical");
  for (double c : levels) {
    emit(c * c, "contour");
    emit(-c * c, "contour");
  }
  return {cv.svg("planar foliation"), csv.o.str()};
}

Figure reeb_annulus(const Params& p) {
  only(p, {"c", "n", "zmin", "zmax"});
  auto levels = param_levels(p, "c", {0.5, 1, 2});
  int n = param_int(p, "n", 200);
  double z0 = param_double(p, "zmin", -3), z1 = param_double(p, "zmax", 5);
  if (n < 2 || !(z1 > z0)) throw Error(ErrorCode::InvalidArgument, "bad window");
  Canvas cv{-1.25, 1.25, z0, z1, {}};
  Csv csv;
  cv.line("vertical", -1, z0, -1, z1);
  cv.line("vertical", 1, z0, 1, z1);
  csv.rows(planar_leaf(1, PlanarBranch::Vertical, z0, z1, 2 * n));
  for (double c : levels) {
    double bottom = axis_height(c);
    double t = c * c * std::exp(-z1);
    if (bottom < z0 || t >= 1) {
      throw Error(ErrorCode::InvalidArgument, "level c=" + g12(c) + " leaves the window");
    }
    double xmax = std::sqrt(1 - t);
    auto left = planar_leaf(c, PlanarBranch::Inner, -xmax, 0, n);
    auto right = planar_leaf(c, PlanarBranch::Inner, 0, xmax, n);
    std::vector<PlanarPoint> lp(left.points.begin(), left.points.end());
    cv.path("curve", lp);
    cv.path("curve", right.points);
    csv.rows(left);
    csv.rows(right);
  }
  return {cv.svg("Reeb annulus"), csv.o.str()};
}

std::vector<PlanarPoint> polar(const std::vector<PlanarPoint>& pts, double sign, double radius_of_x(double)) {
  std::vector<PlanarPoint> out;
  out.reserve(pts.size());
  for (const auto& q : pts) {
    double r = radius_of_x(q.x);
    double th = sign * 2 * std::numbers::pi * q.z;
    out.push_back({r * std::cos(th), r * std::sin(th)});
  }
  return out;
}

Figure c_foliation(const Params& p) {
  only(p, {"r", "c", "n"});
  double r = param_double(p, "r", 2);
  auto levels = param_levels(p, "c", {0.5, 1, 2});
  int n = param_int(p, "n", 600);
  if (!(r > 1) || n < 2) throw Error(ErrorCode::InvalidArgument, "c-foliation needs r > 1");
  Canvas cv{-r * 1.1, r * 1.1, -r * 1.1, r * 1.1, {}};
  Csv csv;
  cv.circle("leaf", 1);
  cv.circle("transverse", r);
  for (double c : levels) {
    // geometric spacing towards x = 1
    PlanarLeafSample s;
    s.c = c;
    s.level = c * c;
    s.branch = PlanarBranch::Outer;
    for (int i = 0; i < n; ++i) {
      double x = 1 + (r - 1) * std::pow(10.0, -4.0 * (n - 1 - i) / (n - 1));
      auto one = planar_leaf(c, PlanarBranch::Outer, x, x, 1);
      s.points.push_back(one.points[0]);
    }
    cv.path("ray", polar(s.points, 1, [](double x) { return x; }));
    csv.rows(s);
  }
  return {cv.svg("C foliation"), csv.o.str()};
}

// Spiral leaf across a band [ra, rb]: inner-branch leaf with its halves
// joined so the angle runs monotonically from one boundary to the other.
void spiral_band(Canvas& cv, Csv& csv, double ra, double rb, double sign, int n) {
  const double c = 1, xmax = 1 - 1e-3;
  auto left = planar_leaf(c, PlanarBranch::Inner, -xmax, 0, n);
  auto right = planar_leaf(c, PlanarBranch::Inner, 0, xmax, n);
  std::vector<PlanarPoint> pts;
  for (const auto& q : left.points) pts.push_back({q.x, -q.z});
  for (std::size_t i = 1; i < right.points.size(); ++i) pts.push_back(right.points[i]);
  std::vector<PlanarPoint> drawn;
  for (const auto& q : pts) {
    double r = ra + (rb - ra) * (q.x + 1) / 2;
    double th = sign * 2 * std::numbers::pi * q.z / 4;
    drawn.push_back({r * std::cos(th), r * std::sin(th)});
  }
  cv.path("spiral", drawn);
  csv.rows(left);
  csv.rows(right);
}

Figure spiral_annulus(const Params& p) {
  only(p, {"direction", "n"});
  std::string dir = p.count("direction") ? p.at("direction") : "cw";
  if (dir != "cw" && dir != "ccw") throw Error(ErrorCode::InvalidArgument, "direction must be cw or ccw");
  int n = param_int(p, "n", 300);
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be >= 2");
  Canvas cv{-2.2, 2.2, -2.2, 2.2, {}};
  Csv csv;
  cv.circle("leaf", 1);
  cv.circle("leaf", 2);
  spiral_band(cv, csv, 1, 2, dir == "cw" ? -1 : 1, n);
  return {cv.svg(dir == "cw" ? "clockwise spiral annulus" : "anticlockwise spiral annulus"),
          csv.o.str()};
}

Figure suspension_annulus_figure(const Params& p) {
  only(p, {"bands", "n"});
  std::string band_list = p.count("bands") ? p.at("bands") : "circle:1/4,cw:1/2,circle:1/4";
  int n = param_int(p, "n", 200);
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be >= 2");
  std::vector<std::pair<std::string, double>> bands;
  double total = 0;
  for (const auto& part : split(band_list, ',')) {
    auto kv = split(part, ':');
    if (kv.size() != 2) throw Error(ErrorCode::InvalidArgument, "band '" + part + "' is not kind:width");
    if (kv[0] != "circle" && kv[0] != "cw" && kv[0] != "ccw" && kv[0] != "reeb") {
      throw Error(ErrorCode::InvalidArgument, "unknown band kind '" + kv[0] + "'");
    }
    double w;
    try {
      Rational r = parse_rational(kv[1]);
      w = boost::rational_cast<double>(r);
    } catch (const Error&) {
      throw Error(ErrorCode::InvalidArgument, "bad band width '" + kv[1] + "'");
    }
    if (!(w > 0)) throw Error(ErrorCode::InvalidArgument, "band widths must be positive");
    bands.emplace_back(kv[0], w);
    total += w;
  }
  Canvas cv{-2.2, 2.2, -2.2, 2.2, {}};
  Csv csv;
  cv.circle("leaf", 1);
  cv.circle("leaf", 2);
  double r = 1;
  for (const auto& [kind, w] : bands) {
    double rb = r + w / total;
    if (kind == "circle") {
      for (int k = 1; k <= 3; ++k) cv.circle("leaf", r + (rb - r) * k / 4);
    } else if (kind == "reeb") {
      // two halves of an inner leaf, asymptotic to both band edges
      auto half = planar_leaf(1, PlanarBranch::Inner, -(1 - 1e-3), 1 - 1e-3, n);
      std::vector<PlanarPoint> drawn;
      for (const auto& q : half.points) {
        double rr = r + (rb - r) * (q.x + 1) / 2;
        double th = 2 * std::numbers::pi * q.z / 4;
        drawn.push_back({rr * std::cos(th), rr * std::sin(th)});
      }
      cv.path("reeb", drawn);
      csv.rows(half);
    } else {
      spiral_band(cv, csv, r, rb, kind == "cw" ? -1 : 1, n);
    }
    if (rb < 2 - 1e-12) cv.circle("leaf", rb);
    r = rb;
  }
  return {cv.svg("suspension annulus"), csv.o.str()};
}

Figure interval_ladder(const Params& p) {
  only(p, {"n"});
  int n = param_int(p, "n", 6);
  if (n < 0 || n > 60) throw Error(ErrorCode::InvalidArgument, "n must be in 0..60");
  Canvas cv{-0.05, 1.05, -0.5, 0.5, {}};
  Csv csv;
  cv.line("axis", 0, 0, 1, 0);
  for (const auto& iv : spiral_intervals(n)) {
    double x = boost::rational_cast<double>(iv.i);
    cv.line("tick", x, -0.1, x, 0.1);
    if (iv.k <= 8) cv.text(x, 0.15 + 0.05 * (iv.k % 2), format_rational(iv.i));
    csv.row(x, 0, iv.k, "tick");
  }
  return {cv.svg("interval ladder"), csv.o.str()};
}

}  // namespace

std::vector<std::string> figure_ids() {
  return {"planar-foliation", "reeb-annulus", "c-foliation", "spiral-annulus", "suspension-annulus",
          "interval-ladder"};
}

Figure render_figure(const std::string& id, const Params& params) {
  if (id == "planar-foliation") return planar_foliation(params);
  if (id == "reeb-annulus") return reeb_annulus(params);
  if (id == "c-foliation") return c_foliation(params);
  if (id == "spiral-annulus") return spiral_annulus(params);
  if (id == "suspension-annulus") return suspension_annulus_figure(params);
  if (id == "interval-ladder") return interval_ladder(params);
  throw Error(ErrorCode::UnknownFigure, "unknown figure '" + id + "'");
}

std::string render(const std::string& id, const Params& params, const std::string& path) {
  auto fig = render_figure(id, params);
  std::string csv_path = path;
  auto dot = csv_path.rfind('.');
  auto slash = csv_path.rfind('/');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) csv_path.resize(dot);
  csv_path += ".csv";
  for (const auto& [p, text] : {std::pair{path, fig.svg}, std::pair{csv_path, fig.csv}}) {
    std::ofstream out(p);
    if (!out) throw Error(ErrorCode::IoError, "cannot write '" + p + "'");
    out << text;
    if (!out) throw Error(ErrorCode::IoError, "write failed for '" + p + "'");
  }
  return csv_path;
}

}  // namespace foliate
