#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "foliate/error.hpp"
#include "foliate/holonomy.hpp"

using namespace foliate;

namespace {

Rational R(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

// Independent mapper: one segment per band, then glue endpoint points and merge
// runs by hand.
std::vector<std::tuple<Rational, Rational, char>> oracle_segments(
    const std::vector<Band>& bands) {
  std::vector<std::tuple<Rational, Rational, char>> raw;
  Rational total(0);
  for (auto& b : bands) total += b.width;
  Rational pos(0);
  for (auto& b : bands) {
    Rational w = b.width / total;
    char c = b.kind == BandKind::Circle ? 'F' : b.kind == BandKind::SpiralCW ? 'A' : 'B';
    raw.emplace_back(pos, pos + w, c);
    pos += w;
  }
  std::vector<std::tuple<Rational, Rational, char>> out;
  if (std::get<2>(raw.front()) != 'F') out.emplace_back(R(0), R(0), 'F');
  for (auto& s : raw) {
    if (!out.empty() && std::get<2>(out.back()) == std::get<2>(s)) {
      std::get<1>(out.back()) = std::get<1>(s);
    } else if (!out.empty() && std::get<2>(out.back()) != 'F' && std::get<2>(s) != 'F') {
      out.emplace_back(std::get<0>(s), std::get<0>(s), 'F');
      out.push_back(s);
    } else {
      out.push_back(s);
    }
  }
  if (std::get<2>(out.back()) != 'F') out.emplace_back(R(1), R(1), 'F');
  return out;
}

bool matches(const IntervalDynamics& f,
             const std::vector<std::tuple<Rational, Rational, char>>& want) {
  if (f.segments().size() != want.size()) return false;
  for (std::size_t i = 0; i < want.size(); ++i) {
    const auto& s = f.segments()[i];
    char c = s.label == SegmentLabel::Fixed ? 'F' : s.label == SegmentLabel::Above ? 'A' : 'B';
    if (s.lo != std::get<0>(want[i]) || s.hi != std::get<1>(want[i]) || c != std::get<2>(want[i]))
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("slope canonical form") {
  CHECK(Slope(2, 4) == Slope(1, 2));
  CHECK(Slope(-1, -2) == Slope(1, 2));
  CHECK(Slope(-3, 0) == Slope(1, 0));
  CHECK(Slope(1, -1) == Slope(-1, 1));
  CHECK_THROWS_AS(Slope(0, 0), Error);
}

TEST_CASE("gluing map action") {
  CHECK(GluingMap::swap().apply(Slope::meridian()) == Slope::longitude());
  CHECK_THROWS_AS(GluingMap(2, 0, 0, 1), Error);
  GluingMap m(2, 1, 1, 1);
  CHECK(m.compose(m.inverse()) == GluingMap::identity());
  CHECK(m.inverse().apply(m.apply(Slope(3, 5))) == Slope(3, 5));
  CHECK(GluingMap(-1, 0, 0, -1).is_plus_minus_identity());
}

TEST_CASE("interval dynamics validation") {
  CHECK_THROWS_AS(IntervalDynamics({{R(0), R(1), SegmentLabel::Above}}), Error);
  CHECK_THROWS_AS(IntervalDynamics({{R(0), R(1, 2), SegmentLabel::Fixed}}), Error);
  CHECK_THROWS_AS(IntervalDynamics({{R(0), R(0), SegmentLabel::Fixed},
                                    {R(0), R(0), SegmentLabel::Above},
                                    {R(0), R(1), SegmentLabel::Fixed}}),
                  Error);
  IntervalDynamics merged({{R(0), R(1, 4), SegmentLabel::Fixed},
                           {R(1, 4), R(1, 2), SegmentLabel::Fixed},
                           {R(1, 2), R(1), SegmentLabel::Fixed}});
  CHECK(merged.is_identity());
}

TEST_CASE("derive holonomy examples") {
  auto id = derive_holonomy_from_annulus(AnnulusFoliation1D({circle_band(R(1))}));
  CHECK(id == IntervalDynamics::identity());

  auto f = derive_holonomy_from_annulus(
      AnnulusFoliation1D({circle_band(R(1, 4)), cw_band(R(1, 2)), circle_band(R(1, 4))}));
  CHECK(f == IntervalDynamics({{R(0), R(1, 4), SegmentLabel::Fixed},
                               {R(1, 4), R(3, 4), SegmentLabel::Above},
                               {R(3, 4), R(1), SegmentLabel::Fixed}}));

  std::vector<Band> bands{circle_band(R(1, 8)), cw_band(R(3, 8)), circle_band(R(1, 8)),
                          ccw_band(R(3, 8))};
  auto g = derive_holonomy_from_annulus(AnnulusFoliation1D(bands));
  CHECK(matches(g, oracle_segments(bands)));
  CHECK(g == IntervalDynamics({{R(0), R(1, 8), SegmentLabel::Fixed},
                               {R(1, 8), R(1, 2), SegmentLabel::Above},
                               {R(1, 2), R(5, 8), SegmentLabel::Fixed},
                               {R(5, 8), R(1), SegmentLabel::Below},
                               {R(1), R(1), SegmentLabel::Fixed}}));
  CHECK(invert(invert(g)) == g);

  CHECK_THROWS_AS(derive_holonomy_from_annulus(
                      AnnulusFoliation1D({circle_band(R(1, 4)), reeb_band(R(1, 2), 1),
                                          circle_band(R(1, 4))})),
                  Error);
}

TEST_CASE("adjacent spirals get a fixed point between them") {
  std::vector<Band> bands{cw_band(R(1, 2)), ccw_band(R(1, 2))};
  auto f = derive_holonomy_from_annulus(AnnulusFoliation1D(bands));
  CHECK(matches(f, oracle_segments(bands)));
  CHECK(f.has_interior_fixed_point());
  CHECK_FALSE(f.has_strictly_interior_fixed_segment());
  std::vector<Band> same{cw_band(R(1, 2)), cw_band(R(1, 2))};
  auto a = AnnulusFoliation1D(same);
  CHECK(a.bands().size() == 2);
  CHECK(suspension_annulus(derive_holonomy_from_annulus(a)) == a);
}

TEST_CASE("suspension annulus examples") {
  CHECK(suspension_annulus(IntervalDynamics::identity()) == AnnulusFoliation1D::circles());
  auto cw = suspension_annulus(IntervalDynamics::monotone(SegmentLabel::Above));
  CHECK(cw == AnnulusFoliation1D({cw_band(R(1))}));
  auto ccw = suspension_annulus(IntervalDynamics::monotone(SegmentLabel::Above),
                                DirectionConvention::Opposite);
  CHECK(ccw == AnnulusFoliation1D({ccw_band(R(1))}));

  IntervalDynamics t0({{R(0), R(0), SegmentLabel::Fixed},
                       {R(0), R(1, 3), SegmentLabel::Above},
                       {R(1, 3), R(2, 3), SegmentLabel::Fixed},
                       {R(2, 3), R(1), SegmentLabel::Below},
                       {R(1), R(1), SegmentLabel::Fixed}});
  auto a = suspension_annulus(t0);
  REQUIRE(a.bands().size() == 3);
  CHECK(a.bands()[1].kind == BandKind::Circle);
}

TEST_CASE("invert") {
  CHECK(invert(IntervalDynamics::identity()) == IntervalDynamics::identity());
  CHECK(invert(IntervalDynamics::monotone(SegmentLabel::Above)) ==
        IntervalDynamics::monotone(SegmentLabel::Below));
}

TEST_CASE("classification") {
  CHECK(classify_torus_foliation(TorusFoliation1D(DenseLinear{"phi", R(13, 8)})) ==
        TorusClass::Dense);
  CHECK(classify_torus_foliation(TorusFoliation1D(CircleFoliation{Slope(1, 0)})) ==
        TorusClass::CircleFoliation);
  CHECK(classify_torus_foliation(TorusFoliation1D(Banded{
            Slope(1, 0), AnnulusFoliation1D({circle_band(R(1, 4)), reeb_band(R(1, 2), -1),
                                             circle_band(R(1, 4))})})) ==
        TorusClass::HasReebAnnuli);
  CHECK(classify_torus_foliation(TorusFoliation1D(
            Banded{Slope(1, 0), AnnulusFoliation1D({cw_band(R(1))})})) ==
        TorusClass::CirclesWithSpirals);
  // single circle band collapses to a circle foliation
  TorusFoliation1D b(Banded{Slope(0, 1), AnnulusFoliation1D::circles()});
  CHECK(std::holds_alternative<CircleFoliation>(b.variant()));
}

TEST_CASE("isotopy equality ignores widths") {
  AnnulusFoliation1D a({circle_band(R(1, 4)), cw_band(R(3, 4))});
  AnnulusFoliation1D b({circle_band(R(1, 2)), cw_band(R(1, 2))});
  CHECK_FALSE(a == b);
  CHECK(isotopy_equal(a, b));
  CHECK_FALSE(isotopy_equal(a, AnnulusFoliation1D({circle_band(R(1, 2)), ccw_band(R(1, 2))})));
}

TEST_CASE("torus foliation mapping") {
  TorusFoliation1D d(DenseLinear{"phi", R(8, 5)});
  CHECK(d.mapped(GluingMap::identity()) == d);
  auto m = d.mapped(GluingMap::swap());
  CHECK_FALSE(m == d);
  CHECK(std::get<DenseLinear>(m.variant()).approx == R(5, 8));
  CHECK(m.mapped(GluingMap::swap()) == d);
  GluingMap t(1, 1, 0, 1);
  CHECK(d.mapped(t).mapped(t.inverse()) == d);
  TorusFoliation1D c(CircleFoliation{Slope(1, 0)});
  CHECK(c.mapped(GluingMap::swap()) == TorusFoliation1D(CircleFoliation{Slope(0, 1)}));
}
