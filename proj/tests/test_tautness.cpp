#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "foliate/catalog.hpp"
#include "foliate/error.hpp"
#include "foliate/generator.hpp"
#include "foliate/tautness.hpp"

using namespace foliate;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

using V = TautnessVerdict::Value;

}  // namespace

TEST_CASE("sep torus rule") {
  auto bad = check_sep_torus(fg_bad(1));
  REQUIRE(bad);
  CHECK(bad->first == NonTautReason::SameOrientationBoundary);
  CHECK(!check_sep_torus(fg_good(1)));

  auto twice = double_assembly(catalog_assembly("sgxs1_detaut"));
  CHECK(twice.is_closed());
  auto sep = check_sep_torus(twice);
  REQUIRE(sep);
  CHECK(sep->first == NonTautReason::SeparatingCompactLeaf);
  auto v = decide_tautness(twice);
  CHECK(v.value == V::NonTaut);
  CHECK(v.reason == NonTautReason::SeparatingCompactLeaf);
}

TEST_CASE("verdicts") {
  auto good = decide_tautness(fg_good(1));
  REQUIRE(good.value == V::Taut);
  REQUIRE(good.certificate);
  REQUIRE(good.certificate->arcs.size() == 1);
  CHECK(good.certificate->arcs[0].blocks == std::vector<std::string>{"t_minus", "p", "t_plus"});
  CHECK(validate_certificate(fg_good(1), *good.certificate));

  auto bad = decide_tautness(fg_bad(1));
  CHECK(bad.value == V::NonTaut);
  CHECK(bad.reason == NonTautReason::SameOrientationBoundary);

  auto s3 = decide_tautness(catalog_assembly("reeb_s3"));
  CHECK(s3.reason == NonTautReason::ReebComponent);

  // an L block is bounded by two same-sign leaves, so cutting it out
  // always leaves a bad region
  for (Sign cap : {Sign::Outward, Sign::Inward}) {
    Assembly l;
    l = add_block(l, "l", make_lblock(Sign::Outward));
    l = add_block(l, "t1", make_turbulization(Sign::Inward, Slope(1, 0)));
    l = add_block(l, "p", make_product(0, Fiber::Circle, 2));
    l = add_block(l, "t2", make_turbulization(cap, Slope(1, 0)));
    l = glue(l, {"l", 0}, {"t1", 0}, GluingMap::identity());
    l = glue(l, {"t1", 1}, {"p", 0}, GluingMap::identity());
    l = glue(l, {"t2", 1}, {"p", 1}, GluingMap::identity());
    auto lv = decide_tautness(l);
    CHECK(lv.value == V::NonTaut);
    REQUIRE(lv.region);
    if (orientation_verdict(l) == OrientationVerdict::Good) {
      CHECK(lv.region->blocks == std::vector<std::string>{"l"});
    } else {
      CHECK(lv.region->cut.empty());
    }
  }

  // embedded Reeb annulus between two generalized spiraling blocks
  auto g = AnnulusFoliation1D({circle_band(Rational(1, 2)), reeb_band(Rational(1, 2), 1)});
  bool seen_good = false;
  for (Sign s2 : {Sign::Outward, Sign::Inward}) {
    Assembly e;
    e = add_block(e, "a", make_generalized_spiraling(g, kIdentityLabel, Direction::CW, Sign::Outward));
    e = add_block(e, "b", make_generalized_spiraling(g, kIdentityLabel, Direction::CW, s2));
    try {
      e = glue(e, {"a", 1}, {"b", 1}, GluingMap::identity());
    } catch (const Error&) {
      continue;
    }
    if (orientation_verdict(e) != OrientationVerdict::Good) continue;
    seen_good = true;
    auto ev = decide_tautness(e);
    CHECK(ev.value == V::HypothesesNotMet);
    CHECK(std::find(ev.hypotheses_violated.begin(), ev.hypotheses_violated.end(),
                    "embedded_reeb_annulus") != ev.hypotheses_violated.end());
  }
  CHECK(seen_good);

  Assembly ra = singleton("g", make_generalized_spiraling(
                                   AnnulusFoliation1D({circle_band(Rational(1, 2)),
                                                       reeb_band(Rational(1, 2), 1)}),
                                   kIdentityLabel, Direction::CW, Sign::Outward));
  CHECK(decide_tautness(ra).reason == NonTautReason::ReebAnnulusOnBoundary);
}

TEST_CASE("certificate tampering is caught") {
  auto a = fg_good(2);
  auto c = *decide_tautness(a).certificate;
  CHECK(validate_certificate(a, c));
  auto broken = c;
  broken.arcs[0].gluings[0] = 7;
  CHECK(!validate_certificate(a, broken));
  broken = c;
  std::swap(broken.arcs[0].start, broken.arcs[0].end);
  CHECK(!validate_certificate(a, broken));
  broken = c;
  broken.arcs.clear();
  CHECK(!validate_certificate(a, broken));
  CHECK(!validate_certificate(fg_bad(2), c));
}

TEST_CASE("main equivalence on random corpus") {
  int taut = 0, non_taut = 0;
  for (int i = 0; i < 1500; ++i) {
    auto rng = rng_for(21, i);
    auto a = random_hypothesis_assembly(rng, i % 4 == 0);
    CAPTURE(to_string(a));
    auto v = decide_tautness(a);
    REQUIRE(v.value != V::HypothesesNotMet);
    auto o = orientation_verdict(a);
    bool good = o == OrientationVerdict::Good || (o == OrientationVerdict::NotApplicable && a.is_closed());
    CHECK(v.is_taut() == good);
    if (v.is_taut()) {
      ++taut;
      REQUIRE(v.certificate);
      std::string why;
      CHECK_MESSAGE(validate_certificate(a, *v.certificate, &why), why);
    } else {
      ++non_taut;
      CHECK(has_torus_leaf(a));
    }
    CHECK(goodman_validate(a).pass);
  }
  CHECK(taut > 100);
  CHECK(non_taut > 100);
}

TEST_CASE("never taut when the region rule fires") {
  for (int i = 0; i < 1500; ++i) {
    auto rng = rng_for(23, i);
    auto a = random_grammar_assembly(rng);
    auto v = decide_tautness(a);
    if (check_sep_torus(a)) CHECK(!v.is_taut());
    if (v.is_non_taut()) CHECK(has_torus_leaf(a));
    CHECK(goodman_validate(a).pass);
  }
}

TEST_CASE("torus neighbourhoods") {
  using TN = TorusNeighborhood;
  CHECK(classify_torus_neighborhood(TorusFoliation1D(DenseLinear{"phi", Rational(8, 5)})) ==
        TN::TStarComponent);
  CHECK(classify_torus_neighborhood(TorusFoliation1D(CircleFoliation{Slope(1, 0)})) ==
        TN::TComponent);
  auto spiral = AnnulusFoliation1D({circle_band(Rational(1, 2)), cw_band(Rational(1, 2))});
  CHECK(classify_torus_neighborhood(TorusFoliation1D(Banded{Slope(1, 0), spiral})) ==
        TN::S1Component);
  auto reeb = AnnulusFoliation1D({circle_band(Rational(1, 2)), reeb_band(Rational(1, 2), -1)});
  CHECK(classify_torus_neighborhood(TorusFoliation1D(Banded{Slope(0, 1), reeb})) ==
        TN::SStarComponent);
}

TEST_CASE("reeb deletion") {
  auto s3 = catalog_assembly("reeb_s3");
  CHECK(code_of([&] { delete_reeb(s3, "r1"); }) == ErrorCode::NotDeletable);
  CHECK(code_of([&] { delete_reeb(s3, "r2"); }) == ErrorCode::NotDeletable);

  auto s2 = catalog_assembly("reeb_s2xs1");
  for (const char* r : {"r1", "r2"}) {
    auto d = delete_reeb(s2, r);
    CHECK(d.blocks().size() == 2);
    for (const auto& [id, b] : d.blocks()) CHECK(b.is<TrivialSolidTorus>());
    CHECK(d.gluings()[0].map == GluingMap::identity());
    CHECK(decide_tautness(d).is_taut());
  }

  CHECK(code_of([] { delete_reeb(fg_good(1), "p"); }) == ErrorCode::InvalidArgument);
  Assembly lonely;
  lonely = add_block(lonely, "r", make_reeb());
  lonely = add_block(lonely, "s", make_suspension(IntervalDynamics::monotone(SegmentLabel::Above), Sign::Inward));
  lonely = glue(lonely, {"r", 0}, {"s", 0}, GluingMap::identity());
  CHECK(code_of([&] { delete_reeb(lonely, "r"); }) == ErrorCode::NotAdjacentToTurbulization);

  // suspension padding between R and the turbulization is skipped
  Assembly pad;
  pad = add_block(pad, "r", make_reeb(Sign::Outward));
  pad = add_block(pad, "s", make_suspension(IntervalDynamics::monotone(SegmentLabel::Below), Sign::Inward));
  pad = add_block(pad, "t", make_turbulization(Sign::Inward, Slope(1, 0)));
  pad = add_block(pad, "p", make_product(1, Fiber::Circle, 1));
  pad = glue(pad, {"r", 0}, {"s", 0}, GluingMap::identity());
  pad = glue(pad, {"s", 1}, {"t", 0}, GluingMap::identity());
  pad = glue(pad, {"t", 1}, {"p", 0}, GluingMap::identity());
  auto cleaned = simplify(delete_reeb(pad, "r"));
  CHECK(cleaned.blocks().size() == 1);
  CHECK(cleaned.block("p") == make_product(1, Fiber::Circle, 0));
}

TEST_CASE("detaut") {
  auto t3 = catalog_assembly("t3_product");
  auto d = detaut(t3, "b0");
  CHECK(decide_tautness(d.bounded).value == V::NonTaut);
  CHECK(!d.reeb_formed);
  CHECK(boundary_leaves(d.bounded).size() == 1);
  for (const auto& [id, b] : d.bounded.blocks()) CHECK(!b.flags().has_reeb_component);
  auto closed = decide_tautness(d.closed_with_reeb);
  CHECK(closed.reason == NonTautReason::ReebComponent);
  CHECK(goodman_validate(d.bounded).pass);
  CHECK(goodman_validate(d.closed_with_reeb).pass);

  // removing the Reeb block again gives back the product
  std::string rid;
  for (const auto& [id, b] : d.closed_with_reeb.blocks()) {
    if (b.is<ReebSolidTorus>()) rid = id;
  }
  auto back = simplify(delete_reeb(d.closed_with_reeb, rid));
  REQUIRE(back.blocks().size() == 1);
  CHECK(back.blocks().begin()->second == make_product(1, Fiber::Circle, 0));

  auto s2 = delete_reeb(catalog_assembly("reeb_s2xs1"), "r1");
  auto ds = detaut(s2, "r1");
  CHECK(ds.reeb_formed);

  CHECK(code_of([] { detaut(fg_bad(1), "p"); }) == ErrorCode::NotTaut);
  CHECK(code_of([] { detaut(fg_good(1), "t_plus"); }) == ErrorCode::NoTransverseLoopThroughSite);
}

TEST_CASE("goodman") {
  for (const auto& n : catalog_names()) {
    CAPTURE(n);
    CHECK(goodman_validate(catalog_assembly(n)).pass);
  }
  auto g = goodman_validate(fg_bad(1));
  CHECK(g.applicable);
  bool third = false;
  for (const auto& c : g.checks) {
    if (c.name == "same_sign_boundary_is_tori") third = c.applicable && c.pass;
  }
  CHECK(third);
  CHECK(!goodman_validate(catalog_assembly("t3_L1")).applicable);
}

TEST_CASE("attach spiraling") {
  auto mixed = singleton("s", make_spiraling(SpiralingParams{}, Sign::Outward));
  // free Mixed boundary at s#1 with a circle annulus, tangent part Inward
  auto a = normalize_assembly(attach_spiraling(mixed, {"s", 1}, "n"));
  CHECK(a.block("n").is<Turbulization>());

  SpiralingParams p2;
  p2.genus = 2;
  p2.f = derive_holonomy_from_annulus(AnnulusFoliation1D({cw_band(Rational(1))}));
  auto g2 = singleton("s", make_spiraling(p2, Sign::Outward));
  auto b = attach_spiraling(g2, {"s", 1}, "n");
  REQUIRE(b.block("n").is<Spiraling>());
  CHECK(b.block("n").as<Spiraling>().params.genus == 2);
  CHECK(b.gluings().size() == 1);

  Assembly rb;
  rb = add_block(rb, "t", make_generalized_turbulization(Sign::Outward, Rational(0)));
  auto circ = attach_spiraling(rb, {"t", 1}, "n", Sign::Inward);
  CHECK(circ.block("n").sign() == Sign::Inward);

  auto dense = singleton("d", make_generalized_turbulization(Sign::Outward, DenseLinear{"phi", Rational(8, 5)}));
  CHECK(code_of([&] { attach_spiraling(dense, {"d", 1}, "n"); }) == ErrorCode::KindMismatch);
  CHECK(code_of([&] { attach_spiraling(dense, {"d", 0}, "n"); }) == ErrorCode::KindMismatch);
}
