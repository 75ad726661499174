#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "foliate/assembly.hpp"
#include "foliate/catalog.hpp"
#include "foliate/error.hpp"
#include "foliate/generator.hpp"

#include <numeric>

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

// Cut along the leaf and count pieces with a plain union-find.
bool separates_by_flood(const Assembly& a, const InteriorLeaf& leaf) {
  std::vector<std::string> names;
  std::map<Slot, int> node_of;
  int n = 0;
  for (const auto& [id, b] : a.blocks()) {
    auto split = b.interior_leaves();
    if (leaf.block && *leaf.block == id && split && !split->self_loop) {
      for (int i : split->side0) node_of[{id, i}] = n;
      for (int i : split->side1) node_of[{id, i}] = n + 1;
      n += 2;
    } else {
      for (int i = 0; i < static_cast<int>(b.boundaries().size()); ++i) node_of[{id, i}] = n;
      n += 1;
    }
  }
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (std::size_t i = 0; i < a.gluings().size(); ++i) {
    if (leaf.gluing && *leaf.gluing == i) continue;
    const auto& g = a.gluings()[i];
    parent[find(node_of.at(g.from))] = find(node_of.at(g.to));
  }
  int roots = 0;
  for (int i = 0; i < n; ++i) roots += find(i) == i;
  return roots > 1;
}

Assembly two_reeb(const GluingMap& m) {
  Assembly a;
  a = add_block(a, "r1", make_reeb());
  a = add_block(a, "r2", make_reeb());
  return glue(a, {"r1", 0}, {"r2", 0}, m);
}

}  // namespace

TEST_CASE("glue basics") {
  auto s3 = two_reeb(GluingMap::swap());
  CHECK(s3.is_closed());
  CHECK(s3.gluings().size() == 1);
  CHECK(s3.gluings()[0].kind == GluingKind::LeafToLeaf);
  CHECK(interior_leaves(s3).size() == 1);
  CHECK(is_separating(s3, interior_leaves(s3)[0]));

  Assembly a;
  a = add_block(a, "t", make_turbulization(Sign::Outward, Slope(1, 0)));
  a = add_block(a, "v", make_trivial_solid_torus());
  CHECK(code_of([&] { glue(a, {"t", 1}, {"v", 0}, GluingMap::swap()); }) == ErrorCode::SlopeMismatch);
  CHECK(code_of([&] { glue(a, {"t", 0}, {"v", 0}, GluingMap::identity()); }) == ErrorCode::KindMismatch);
  CHECK(code_of([&] { glue(a, {"t", 5}, {"v", 0}, GluingMap::identity()); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([&] { glue(a, {"x", 0}, {"v", 0}, GluingMap::identity()); }) == ErrorCode::UnknownBlock);
  auto b = glue(a, {"t", 1}, {"v", 0}, GluingMap(1, 3, 0, 1));
  CHECK(code_of([&] { glue(b, {"v", 0}, {"t", 0}, GluingMap::identity()); }) == ErrorCode::SlotOccupied);
  CHECK(b.free_boundaries() == std::vector<Slot>{{"t", 0}});

  Assembly g;
  g = add_block(g, "x", make_product(2, Fiber::Interval, 0));
  g = add_block(g, "y", make_product(2, Fiber::Interval, 0));
  CHECK(code_of([&] { glue(g, {"x", 1}, {"y", 0}, GluingMap::swap()); }) == ErrorCode::KindMismatch);
  g = add_block(g, "r", make_reeb());
  CHECK(code_of([&] { glue(g, {"x", 1}, {"r", 0}, GluingMap::identity()); }) == ErrorCode::KindMismatch);
}

TEST_CASE("canonical gluing order") {
  auto a = two_reeb(GluingMap(1, 1, 0, 1));
  Assembly b;
  b = add_block(b, "r1", make_reeb());
  b = add_block(b, "r2", make_reeb());
  b = glue(b, {"r2", 0}, {"r1", 0}, GluingMap(1, 1, 0, 1).inverse());
  CHECK(a == b);
}

TEST_CASE("glue unglue round trip") {
  for (int i = 0; i < 300; ++i) {
    auto rng = rng_for(11, i);
    auto a = random_grammar_assembly(rng);
    for (std::size_t k = 0; k < a.gluings().size(); ++k) {
      const auto g = a.gluings()[k];
      auto back = glue(unglue(a, k), g.from, g.to, g.map);
      CHECK(back == a);
    }
  }
}

TEST_CASE("separation agrees with flood fill") {
  int leaves = 0;
  for (int i = 0; i < 1500; ++i) {
    auto rng = rng_for(3, i);
    auto a = random_grammar_assembly(rng);
    for (const auto& l : interior_leaves(a)) {
      ++leaves;
      CAPTURE(to_string(a));
      CAPTURE(to_string(l));
      CHECK(is_separating(a, l) == separates_by_flood(a, l));
    }
  }
  CHECK(leaves > 500);
}

TEST_CASE("unknown leaf") {
  auto a = singleton("t", make_turbulization(Sign::Outward, Slope(1, 0)));
  CHECK(code_of([&] { is_separating(a, InteriorLeaf{std::nullopt, std::string("t"), 1}); }) ==
        ErrorCode::UnknownLeaf);
  CHECK(code_of([&] { is_separating(a, InteriorLeaf{std::size_t(4), std::nullopt, 1}); }) ==
        ErrorCode::UnknownLeaf);
}

TEST_CASE("L constructions") {
  auto l1 = catalog_assembly("t3_L1");
  auto r1 = propagate_orientation(l1);
  CHECK(!r1.orientable);
  CHECK(r1.witness_cycle == std::vector<std::size_t>{0});
  CHECK(!is_separating(l1, interior_leaves(l1)[0]));

  auto l2 = catalog_assembly("t3_L2");
  auto r2 = propagate_orientation(l2);
  CHECK(r2.orientable);
  CHECK(r2.signing.at("la") == 1);
  CHECK(r2.signing.at("lb") == 1);
  for (const auto& l : interior_leaves(l2)) CHECK(!is_separating(l2, l));
  CHECK(all_signings(l2).size() == 2);
}

TEST_CASE("orientation witness is an odd cycle") {
  int bad = 0;
  for (int i = 0; i < 2000; ++i) {
    auto rng = rng_for(5, i);
    auto a = random_grammar_assembly(rng);
    auto r = propagate_orientation(a);
    if (r.orientable) {
      for (std::size_t k = 0; k < a.gluings().size(); ++k) {
        auto c = orientation_constraint(a, k);
        int su = r.signing.at(c.u), sv = r.signing.at(c.v);
        CHECK((su == sv) == (c.parity == 0));
      }
      continue;
    }
    if (r.intrinsic_witness) {
      CHECK(!a.block(*r.intrinsic_witness).flags().transversely_orientable);
      continue;
    }
    ++bad;
    REQUIRE(!r.witness_cycle.empty());
    int parity = 0;
    std::map<std::string, int> degree;
    for (auto e : r.witness_cycle) {
      auto c = orientation_constraint(a, e);
      parity ^= c.parity;
      degree[c.u]++;
      degree[c.v]++;
    }
    CHECK(parity == 1);
    for (const auto& [b, d] : degree) CHECK(d % 2 == 0);
  }
  CHECK(bad > 0);
}

TEST_CASE("boundary leaves of the fg family") {
  for (int g = 0; g < 3; ++g) {
    auto good = boundary_leaves(fg_good(g));
    REQUIRE(good.size() == 2);
    CHECK(good[0].sign != good[1].sign);
    auto bad = boundary_leaves(fg_bad(g));
    REQUIRE(bad.size() == 2);
    CHECK(bad[0].sign == bad[1].sign);
  }
  CHECK(code_of([] { boundary_leaves(catalog_assembly("t3_L1")); }) == ErrorCode::NotOrientable);
}

TEST_CASE("double") {
  auto d = double_assembly(fg_good(1));
  CHECK(d.is_closed());
  CHECK(d.blocks().size() == 6);
  CHECK(d.has_block("p~"));
  CHECK(propagate_orientation(d).orientable);
  CHECK(code_of([] {
          double_assembly(singleton("v", make_trivial_solid_torus()));
        }) == ErrorCode::TransverseBoundaryPresent);
}

TEST_CASE("simplify") {
  auto disc = singleton("p", make_product(0, Fiber::Circle, 1));
  auto s = simplify(disc);
  CHECK(s.block("p").is<TrivialSolidTorus>());

  Assembly a;
  a = add_block(a, "v", make_trivial_solid_torus());
  a = add_block(a, "t", make_turbulization(Sign::Inward, Slope(1, 0)));
  a = glue(a, {"t", 1}, {"v", 0}, GluingMap::identity());
  auto r = simplify(a);
  REQUIRE(r.blocks().size() == 1);
  CHECK(r.block("v") == make_reeb(Sign::Inward));

  for (int i = 0; i < 300; ++i) {
    auto rng = rng_for(9, i);
    auto x = simplify(random_grammar_assembly(rng));
    CHECK(simplify(x) == x);
  }
}

TEST_CASE("normalize assembly") {
  Assembly a;
  a = add_block(a, "s", make_spiraling(SpiralingParams{}, Sign::Inward));
  a = add_block(a, "p", make_product(1, Fiber::Circle, 1));
  a = glue(a, {"s", 1}, {"p", 0}, GluingMap::identity());
  auto n = normalize_assembly(a);
  CHECK(n.block("s") == make_turbulization(Sign::Inward, Slope(1, 0)));
  CHECK(n.gluings().size() == 1);
  CHECK(normalize_assembly(n) == n);
}
