#pragma once

// One-dimensional foliation models on the interval, the annulus and the
// torus. An interval homeomorphism f fixing 0 and 1 is kept only through its
// fixed set and the sign of f(t) - t on each complementary interval.

#include "foliate/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace foliate {

// Primitive integer pair naming an essential simple closed curve on a torus.
// Meridian is (1, 0), longitude (0, 1).
class Slope {
 public:
  Slope(std::int64_t p, std::int64_t q);

  static Slope meridian() { return Slope(1, 0); }
  static Slope longitude() { return Slope(0, 1); }

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }

  auto operator<=>(const Slope&) const = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

std::string to_string(const Slope& s);

// 2x2 integer matrix of determinant +-1, acting on slopes by
// (p, q) -> (a p + b q, c p + d q).
class GluingMap {
 public:
  GluingMap(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  static GluingMap identity() { return GluingMap(1, 0, 0, 1); }
  // Exchanges meridian and longitude.
  static GluingMap swap() { return GluingMap(0, 1, 1, 0); }

  std::int64_t a() const { return m_[0]; }
  std::int64_t b() const { return m_[1]; }
  std::int64_t c() const { return m_[2]; }
  std::int64_t d() const { return m_[3]; }
  std::int64_t determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
  bool is_plus_minus_identity() const;

  Slope apply(const Slope& s) const;
  GluingMap inverse() const;
  // (*this)(other(x)).
  GluingMap compose(const GluingMap& other) const;

  auto operator<=>(const GluingMap&) const = default;

 private:
  std::array<std::int64_t, 4> m_;
};

std::string to_string(const GluingMap& m);

enum class SegmentLabel { Fixed, Above, Below };

struct Segment {
  Rational lo;
  Rational hi;
  SegmentLabel label;

  bool is_point() const { return lo == hi; }
  bool operator==(const Segment&) const = default;
};

class IntervalDynamics {
 public:
  // Validates the partition and merges adjacent same-label segments.
  explicit IntervalDynamics(std::vector<Segment> segments);

  static IntervalDynamics identity();
  // f(t) > t (Above) or f(t) < t (Below) on the whole open interval.
  static IntervalDynamics monotone(SegmentLabel label);

  const std::vector<Segment>& segments() const { return segments_; }
  bool is_identity() const;
  bool spiral_free() const;
  // Some t in (0, 1) with f(t) = t.
  bool has_interior_fixed_point() const;
  // A Fixed segment of positive width contained in the open interval.
  bool has_strictly_interior_fixed_segment() const;

  bool operator==(const IntervalDynamics&) const = default;

 private:
  std::vector<Segment> segments_;
};

std::string to_string(const IntervalDynamics& f);

IntervalDynamics invert(const IntervalDynamics& f);

enum class BandKind { Circle, SpiralCW, SpiralCCW, Reeb };

struct Band {
  BandKind kind;
  Rational width;
  // +1 / -1 for Reeb bands, 0 otherwise.
  int reeb_polarity = 0;

  bool operator==(const Band&) const = default;
};

Band circle_band(Rational width);
Band cw_band(Rational width);
Band ccw_band(Rational width);
Band reeb_band(Rational width, int polarity);

// Band decomposition of a 1-D foliation of an annulus whose boundary circles
// are leaves. Widths are rescaled to sum to 1; adjacent Circle bands merge.
class AnnulusFoliation1D {
 public:
  explicit AnnulusFoliation1D(std::vector<Band> bands);

  static AnnulusFoliation1D circles() {
    return AnnulusFoliation1D({circle_band(Rational(1))});
  }

  const std::vector<Band>& bands() const { return bands_; }
  bool has_reeb_band() const;
  bool has_spiral_band() const;
  bool is_circle_foliation() const;

  bool operator==(const AnnulusFoliation1D&) const = default;

 private:
  std::vector<Band> bands_;
};

// Same band kinds (and Reeb polarities) in the same order, widths ignored.
bool isotopy_equal(const AnnulusFoliation1D& a, const AnnulusFoliation1D& b);

std::string to_string(const AnnulusFoliation1D& g);

struct DenseLinear {
  std::string tag;
  Rational approx;

  bool operator==(const DenseLinear& o) const { return tag == o.tag; }
};

struct CircleFoliation {
  Slope slope;
  bool operator==(const CircleFoliation&) const = default;
};

struct Banded {
  Slope base_slope;
  AnnulusFoliation1D annulus;
  bool operator==(const Banded&) const = default;
};

class TorusFoliation1D {
 public:
  using Variant = std::variant<DenseLinear, CircleFoliation, Banded>;

  // A Banded value with a single Circle band is stored as CircleFoliation.
  explicit TorusFoliation1D(Variant v);

  const Variant& variant() const { return v_; }
  bool has_reeb_band() const;
  // Image under a torus gluing map. Dense tags are relabelled unless the map
  // is +-identity.
  TorusFoliation1D mapped(const GluingMap& m) const;

  bool operator==(const TorusFoliation1D&) const = default;

 private:
  Variant v_;
};

std::string to_string(const TorusFoliation1D& t);

enum class TorusClass { Dense, CircleFoliation, CirclesWithSpirals, HasReebAnnuli };

std::string_view to_string(TorusClass c);

// +1 reads Above as clockwise; -1 is the opposite chart orientation.
enum class DirectionConvention { Standard = 1, Opposite = -1 };

IntervalDynamics derive_holonomy_from_annulus(
    const AnnulusFoliation1D& g,
    DirectionConvention convention = DirectionConvention::Standard);

AnnulusFoliation1D suspension_annulus(
    const IntervalDynamics& f,
    DirectionConvention convention = DirectionConvention::Standard);

TorusClass classify_torus_foliation(const TorusFoliation1D& t);

}  // namespace foliate
