#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "foliate/blocks.hpp"
#include "foliate/error.hpp"

using namespace foliate;

namespace {
Rational R(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

IntervalDynamics above() { return IntervalDynamics::monotone(SegmentLabel::Above); }
}  // namespace

TEST_CASE("turbulization boundaries") {
  auto tp = make_turbulization(Sign::Outward, Slope::meridian());
  REQUIRE(tp.boundaries().size() == 2);
  CHECK(boundary_foliation(tp, 0).leaf_sign() == Sign::Outward);
  CHECK(boundary_foliation(tp, 1) ==
        BoundaryComponent{1, TransverseBoundary{TorusFoliation1D(CircleFoliation{Slope(1, 0)})}});
  auto tm = make_turbulization(Sign::Inward, Slope::longitude());
  CHECK(boundary_foliation(tm, 0).leaf_sign() == Sign::Inward);
  CHECK(std::get<TransverseBoundary>(boundary_foliation(tm, 1).tangency).foliation ==
        TorusFoliation1D(CircleFoliation{Slope(0, 1)}));
  CHECK_FALSE(tp.flags().has_reeb_component);
  CHECK_FALSE(tp.flags().has_interior_torus_leaf);
  CHECK_THROWS_AS(boundary_foliation(tp, 2), Error);
}

TEST_CASE("reeb and L blocks") {
  auto r = make_reeb();
  CHECK(r.flags().has_reeb_component);
  CHECK(boundary_foliation(r, 0).is_leaf());
  auto l = make_lblock(Sign::Inward);
  CHECK(l.flags().has_embedded_reeb_annulus);
  CHECK(boundary_foliation(l, 1).leaf_sign() == boundary_foliation(l, 0).leaf_sign());
}

TEST_CASE("spiraling") {
  auto s1 = make_spiraling({1, IntervalDynamics::identity(), "h7", Direction::CCW}, Sign::Outward);
  CHECK(s1.as<Spiraling>().params.direction == Direction::CW);
  CHECK(s1.as<Spiraling>().params.h == kIdentityLabel);
  CHECK(normalize(s1) == make_turbulization(Sign::Outward, Slope::meridian()));

  auto s2 = make_spiraling({2, IntervalDynamics::identity()}, Sign::Outward);
  CHECK(s2.flags().compact_leaf_genera.empty());
  CHECK(normalize(s2) == s2);

  auto sw = make_spiraling({1, above()}, Sign::Inward);
  const auto& mixed = std::get<MixedBoundary>(boundary_foliation(sw, 1).tangency);
  CHECK(mixed.annulus == AnnulusFoliation1D({cw_band(R(1))}));
  CHECK(mixed.annulus == suspension_annulus(above()));
  CHECK(mixed.tangent_sign == Sign::Outward);

  IntervalDynamics fixed_mid({{R(0), R(0), SegmentLabel::Fixed},
                              {R(0), R(1, 3), SegmentLabel::Above},
                              {R(1, 3), R(2, 3), SegmentLabel::Fixed},
                              {R(2, 3), R(1), SegmentLabel::Below},
                              {R(1), R(1), SegmentLabel::Fixed}});
  CHECK(make_spiraling({1, fixed_mid}, Sign::Outward).flags().has_interior_torus_leaf);
  auto g3 = make_spiraling({3, fixed_mid}, Sign::Outward);
  CHECK_FALSE(g3.flags().has_interior_torus_leaf);
  CHECK(g3.flags().compact_leaf_genera == std::vector<int>{3});
}

TEST_CASE("generalized spiraling") {
  auto circ = make_generalized_spiraling(AnnulusFoliation1D::circles(), "id", Direction::CW,
                                         Sign::Outward);
  CHECK(normalize(circ) == make_turbulization(Sign::Outward, Slope::meridian()));

  AnnulusFoliation1D reeb({circle_band(R(1, 4)), reeb_band(R(1, 2), 1), circle_band(R(1, 4))});
  auto gr = make_generalized_spiraling(reeb, "id", Direction::CW, Sign::Outward);
  CHECK(gr.flags().has_embedded_reeb_annulus);
  CHECK(normalize(gr) == gr);

  AnnulusFoliation1D spiral({circle_band(R(1, 4)), cw_band(R(1, 2)), circle_band(R(1, 4))});
  Block raw(GeneralizedSpiraling{spiral, "rot", Direction::CW}, Sign::Inward);
  auto n = normalize(raw);
  CHECK(n == make_spiraling({1, derive_holonomy_from_annulus(spiral), "rot", Direction::CW},
                            Sign::Inward));
  CHECK(n == make_generalized_spiraling(spiral, "rot", Direction::CW, Sign::Inward));
  CHECK(normalize(n) == n);
}

TEST_CASE("generalized turbulization") {
  auto dense = make_generalized_turbulization(Sign::Outward, DenseLinear{"phi", R(8, 5)});
  CHECK(normalize(dense) == dense);
  auto rat = make_generalized_turbulization(Sign::Inward, R(2, 3));
  CHECK(normalize(rat) == make_turbulization(Sign::Inward, Slope(2, 3)));
}

TEST_CASE("suspension and products") {
  auto s = make_suspension(above());
  CHECK_FALSE(s.flags().has_interior_torus_leaf);
  CHECK(boundary_foliation(s, 1).leaf_sign() == Sign::Inward);
  auto p = make_product(2, Fiber::Circle, 2);
  CHECK(p.boundaries().size() == 2);
  CHECK(p.boundaries()[0].is_transverse());
  CHECK(p.flags().compact_leaf_genera.empty());
  auto closed = make_product(1, Fiber::Circle, 0);
  CHECK(closed.flags().has_interior_torus_leaf);
  CHECK(closed.interior_leaves()->self_loop);
  CHECK_THROWS_AS(make_product(1, Fiber::Interval, 2), Error);
}

TEST_CASE("catalog blocks") {
  auto q = make_catalog(CatalogName::WaldhausenCompact);
  CHECK_FALSE(q.flags().transversely_orientable);
  CHECK(catalog_traits(CatalogName::WaldhausenCompact).taut);
  CHECK_FALSE(catalog_traits(CatalogName::WaldhausenTypeIIb).taut);
  CHECK(make_catalog(CatalogName::WaldhausenTypeIIb).flags().transversely_orientable);
}

TEST_CASE("flipped reverses leaf signs") {
  auto s = make_suspension(above(), Sign::Outward).flipped();
  CHECK(boundary_foliation(s, 0).leaf_sign() == Sign::Inward);
  CHECK(boundary_foliation(s, 1).leaf_sign() == Sign::Outward);
}
