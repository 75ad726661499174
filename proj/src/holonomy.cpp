#include "foliate/holonomy.hpp"

#include "foliate/error.hpp"

#include <numeric>
#include <sstream>

namespace foliate {

Slope::Slope(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) {
    throw Error(ErrorCode::InvalidArgument, "slope (0,0) is not a curve");
  }
  std::int64_t g = std::gcd(p, q);
  p /= g;
  q /= g;
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  p_ = p;
  q_ = q;
}

std::string to_string(const Slope& s) {
  return "(" + std::to_string(s.p()) + "," + std::to_string(s.q()) + ")";
}

GluingMap::GluingMap(std::int64_t a, std::int64_t b, std::int64_t c,
                     std::int64_t d)
    : m_{a, b, c, d} {
  auto det = a * d - b * c;
  if (det != 1 && det != -1) {
    throw Error(ErrorCode::InvalidArgument,
                "gluing matrix has determinant " + std::to_string(det) +
                    ", expected +-1");
  }
}

bool GluingMap::is_plus_minus_identity() const {
  return m_[1] == 0 && m_[2] == 0 && m_[0] == m_[3];
}

Slope GluingMap::apply(const Slope& s) const {
  return Slope(m_[0] * s.p() + m_[1] * s.q(), m_[2] * s.p() + m_[3] * s.q());
}

GluingMap GluingMap::inverse() const {
  auto det = determinant();
  return GluingMap(m_[3] * det, -m_[1] * det, -m_[2] * det, m_[0] * det);
}

GluingMap GluingMap::compose(const GluingMap& o) const {
  return GluingMap(a() * o.a() + b() * o.c(), a() * o.b() + b() * o.d(),
                   c() * o.a() + d() * o.c(), c() * o.b() + d() * o.d());
}

std::string to_string(const GluingMap& m) {
  std::ostringstream os;
  os << "[[" << m.a() << "," << m.b() << "],[" << m.c() << "," << m.d()
     << "]]";
  return os.str();
}

// ---------------------------------------------------------------------------
// Interval dynamics

namespace {

std::vector<Segment> merge_same_labels(std::vector<Segment> in) {
  std::vector<Segment> out;
  for (auto& s : in) {
    if (!out.empty() && out.back().label == s.label) {
      out.back().hi = s.hi;
    } else {
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace

IntervalDynamics::IntervalDynamics(std::vector<Segment> segments) {
  if (segments.empty()) {
    throw Error(ErrorCode::InvalidArgument, "interval dynamics needs segments");
  }
  if (segments.front().lo != Rational(0) || segments.back().hi != Rational(1)) {
    throw Error(ErrorCode::InvalidArgument,
                "segments must start at 0 and end at 1");
  }
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto& s = segments[i];
    if (s.lo > s.hi || (s.lo == s.hi && s.label != SegmentLabel::Fixed)) {
      throw Error(ErrorCode::InvalidArgument,
                  "degenerate non-fixed segment at index " + std::to_string(i));
    }
    if (i + 1 < segments.size() && s.hi != segments[i + 1].lo) {
      throw Error(ErrorCode::InvalidArgument,
                  "segments are not contiguous at index " + std::to_string(i));
    }
  }
  segments_ = merge_same_labels(std::move(segments));
  if (segments_.front().label != SegmentLabel::Fixed ||
      segments_.back().label != SegmentLabel::Fixed) {
    throw Error(ErrorCode::InvalidArgument, "0 and 1 must be fixed points");
  }
}

IntervalDynamics IntervalDynamics::identity() {
  return IntervalDynamics({{Rational(0), Rational(1), SegmentLabel::Fixed}});
}

IntervalDynamics IntervalDynamics::monotone(SegmentLabel label) {
  if (label == SegmentLabel::Fixed) return identity();
  return IntervalDynamics({{Rational(0), Rational(0), SegmentLabel::Fixed},
                           {Rational(0), Rational(1), label},
                           {Rational(1), Rational(1), SegmentLabel::Fixed}});
}

bool IntervalDynamics::is_identity() const {
  return segments_.size() == 1;
}

bool IntervalDynamics::spiral_free() const { return is_identity(); }

bool IntervalDynamics::has_interior_fixed_point() const {
  for (const auto& s : segments_) {
    if (s.label != SegmentLabel::Fixed) continue;
    if (s.hi > Rational(0) && s.lo < Rational(1)) return true;
  }
  return false;
}

bool IntervalDynamics::has_strictly_interior_fixed_segment() const {
  for (const auto& s : segments_) {
    if (s.label == SegmentLabel::Fixed && s.lo > Rational(0) && s.hi < Rational(1) && s.lo < s.hi) {
      return true;
    }
  }
  return false;
}

std::string to_string(const IntervalDynamics& f) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& s : f.segments()) {
    if (!first) os << ", ";
    first = false;
    switch (s.label) {
      case SegmentLabel::Fixed: os << "Fixed "; break;
      case SegmentLabel::Above: os << "Above "; break;
      case SegmentLabel::Below: os << "Below "; break;
    }
    if (s.is_point()) {
      os << "{" << format_rational(s.lo) << "}";
    } else {
      os << format_rational(s.lo) << ".." << format_rational(s.hi);
    }
  }
  os << "]";
  return os.str();
}

IntervalDynamics invert(const IntervalDynamics& f) {
  auto segs = f.segments();
  for (auto& s : segs) {
    if (s.label == SegmentLabel::Above) {
      s.label = SegmentLabel::Below;
    } else if (s.label == SegmentLabel::Below) {
      s.label = SegmentLabel::Above;
    }
  }
  return IntervalDynamics(std::move(segs));
}

// ---------------------------------------------------------------------------
// Annulus foliations

Band circle_band(Rational width) { return {BandKind::Circle, width, 0}; }
Band cw_band(Rational width) { return {BandKind::SpiralCW, width, 0}; }
Band ccw_band(Rational width) { return {BandKind::SpiralCCW, width, 0}; }
Band reeb_band(Rational width, int polarity) {
  return {BandKind::Reeb, width, polarity};
}

AnnulusFoliation1D::AnnulusFoliation1D(std::vector<Band> bands) {
  if (bands.empty()) {
    throw Error(ErrorCode::InvalidArgument, "annulus foliation needs a band");
  }
  Rational total(0);
  for (const auto& b : bands) {
    if (b.width <= Rational(0)) {
      throw Error(ErrorCode::InvalidArgument, "band width must be positive");
    }
    if ((b.kind == BandKind::Reeb) != (b.reeb_polarity != 0)) {
      throw Error(ErrorCode::InvalidArgument,
                  "reeb polarity is set exactly for Reeb bands");
    }
    if (b.kind == BandKind::Reeb && b.reeb_polarity != 1 &&
        b.reeb_polarity != -1) {
      throw Error(ErrorCode::InvalidArgument, "reeb polarity must be +-1");
    }
    total += b.width;
  }
  for (auto& b : bands) {
    b.width /= total;
    if (!bands_.empty() && b.kind == BandKind::Circle &&
        bands_.back().kind == BandKind::Circle) {
      bands_.back().width += b.width;
    } else {
      bands_.push_back(b);
    }
  }
}

bool AnnulusFoliation1D::has_reeb_band() const {
  for (const auto& b : bands_) {
    if (b.kind == BandKind::Reeb) return true;
  }
  return false;
}

bool AnnulusFoliation1D::has_spiral_band() const {
  for (const auto& b : bands_) {
    if (b.kind == BandKind::SpiralCW || b.kind == BandKind::SpiralCCW) {
      return true;
    }
  }
  return false;
}

bool AnnulusFoliation1D::is_circle_foliation() const {
  return bands_.size() == 1 && bands_.front().kind == BandKind::Circle;
}

bool isotopy_equal(const AnnulusFoliation1D& a, const AnnulusFoliation1D& b) {
  if (a.bands().size() != b.bands().size()) return false;
  for (std::size_t i = 0; i < a.bands().size(); ++i) {
    if (a.bands()[i].kind != b.bands()[i].kind ||
        a.bands()[i].reeb_polarity != b.bands()[i].reeb_polarity) {
      return false;
    }
  }
  return true;
}

std::string to_string(const AnnulusFoliation1D& g) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& b : g.bands()) {
    if (!first) os << ", ";
    first = false;
    switch (b.kind) {
      case BandKind::Circle: os << "Circle"; break;
      case BandKind::SpiralCW: os << "SpiralCW"; break;
      case BandKind::SpiralCCW: os << "SpiralCCW"; break;
      case BandKind::Reeb: os << "Reeb"; break;
    }
    os << "(" << format_rational(b.width);
    if (b.kind == BandKind::Reeb) os << (b.reeb_polarity > 0 ? ",+1" : ",-1");
    os << ")";
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// Torus foliations

namespace {

// Dense tags carry the frame they are seen in: "base" or "base@a,b,c,d".
std::string retag(const std::string& tag, const GluingMap& m) {
  auto at = tag.find('@');
  GluingMap frame = GluingMap::identity();
  std::string base = tag;
  if (at != std::string::npos) {
    base = tag.substr(0, at);
    std::int64_t v[4];
    std::istringstream is(tag.substr(at + 1));
    char comma;
    is >> v[0] >> comma >> v[1] >> comma >> v[2] >> comma >> v[3];
    frame = GluingMap(v[0], v[1], v[2], v[3]);
  }
  GluingMap next = m.compose(frame);
  if (next.is_plus_minus_identity()) return base;
  std::ostringstream os;
  os << base << "@" << next.a() << "," << next.b() << "," << next.c() << "," << next.d();
  return os.str();
}

}  // namespace

TorusFoliation1D::TorusFoliation1D(Variant v) : v_(std::move(v)) {
  if (auto* b = std::get_if<Banded>(&v_)) {
    if (b->annulus.is_circle_foliation()) {
      v_ = CircleFoliation{b->base_slope};
    }
  }
}

bool TorusFoliation1D::has_reeb_band() const {
  auto* b = std::get_if<Banded>(&v_);
  return b != nullptr && b->annulus.has_reeb_band();
}

TorusFoliation1D TorusFoliation1D::mapped(const GluingMap& m) const {
  return std::visit(
      [&](const auto& x) -> TorusFoliation1D {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, DenseLinear>) {
          if (m.is_plus_minus_identity()) return TorusFoliation1D(x);
          Rational den = Rational(m.c()) * x.approx + Rational(m.d());
          Rational approx = den == Rational(0)
                                ? Rational(0)
                                : (Rational(m.a()) * x.approx + Rational(m.b())) / den;
          return TorusFoliation1D(DenseLinear{retag(x.tag, m), approx});
        } else if constexpr (std::is_same_v<T, CircleFoliation>) {
          return TorusFoliation1D(CircleFoliation{m.apply(x.slope)});
        } else {
          return TorusFoliation1D(Banded{m.apply(x.base_slope), x.annulus});
        }
      },
      v_);
}

std::string to_string(const TorusFoliation1D& t) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, DenseLinear>) {
          return "DenseLinear(" + x.tag + ")";
        } else if constexpr (std::is_same_v<T, CircleFoliation>) {
          return "CircleFoliation" + to_string(x.slope);
        } else {
          return "Banded" + to_string(x.base_slope) + to_string(x.annulus);
        }
      },
      t.variant());
}

std::string_view to_string(TorusClass c) {
  switch (c) {
    case TorusClass::Dense: return "dense";
    case TorusClass::CircleFoliation: return "circle_foliation";
    case TorusClass::CirclesWithSpirals: return "circles_with_spirals";
    case TorusClass::HasReebAnnuli: return "has_reeb_annuli";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Holonomy <-> band decompositions

IntervalDynamics derive_holonomy_from_annulus(const AnnulusFoliation1D& g,
                                              DirectionConvention convention) {
  const bool standard = convention == DirectionConvention::Standard;
  std::vector<Segment> segs;
  Rational pos(0);
  auto ensure_fixed_at = [&](const Rational& t) {
    if (segs.empty() || segs.back().label != SegmentLabel::Fixed) {
      segs.push_back({t, t, SegmentLabel::Fixed});
    }
  };
  for (const auto& b : g.bands()) {
    Rational next = pos + b.width;
    switch (b.kind) {
      case BandKind::Reeb:
        throw Error(ErrorCode::NotASuspension,
                    "annulus foliation " + to_string(g) +
                        " has a Reeb band; use generalized spiraling");
      case BandKind::Circle:
        segs.push_back({pos, next, SegmentLabel::Fixed});
        break;
      case BandKind::SpiralCW:
      case BandKind::SpiralCCW: {
        ensure_fixed_at(pos);
        bool above = (b.kind == BandKind::SpiralCW) == standard;
        segs.push_back(
            {pos, next, above ? SegmentLabel::Above : SegmentLabel::Below});
        break;
      }
    }
    pos = next;
  }
  ensure_fixed_at(Rational(1));
  return IntervalDynamics(std::move(segs));
}

AnnulusFoliation1D suspension_annulus(const IntervalDynamics& f,
                                      DirectionConvention convention) {
  const bool standard = convention == DirectionConvention::Standard;
  std::vector<Band> bands;
  for (const auto& s : f.segments()) {
    Rational w = s.hi - s.lo;
    switch (s.label) {
      case SegmentLabel::Fixed:
        if (w > 0) bands.push_back(circle_band(w));
        break;
      case SegmentLabel::Above:
        bands.push_back(standard ? cw_band(w) : ccw_band(w));
        break;
      case SegmentLabel::Below:
        bands.push_back(standard ? ccw_band(w) : cw_band(w));
        break;
    }
  }
  return AnnulusFoliation1D(std::move(bands));
}

TorusClass classify_torus_foliation(const TorusFoliation1D& t) {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, DenseLinear>) {
          return TorusClass::Dense;
        } else if constexpr (std::is_same_v<T, CircleFoliation>) {
          return TorusClass::CircleFoliation;
        } else {
          if (x.annulus.has_reeb_band()) return TorusClass::HasReebAnnuli;
          if (x.annulus.has_spiral_band()) return TorusClass::CirclesWithSpirals;
          return TorusClass::CircleFoliation;
        }
      },
      t.variant());
}

}  // namespace foliate
