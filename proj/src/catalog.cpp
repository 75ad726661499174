#include "foliate/catalog.hpp"

#include "foliate/error.hpp"
#include "foliate/tautness.hpp"

#include <functional>
#include <utility>

namespace foliate {

namespace {

Assembly two_reeb(const GluingMap& m) {
  Assembly a;
  a = add_block(a, "r1", make_reeb(Sign::Outward));
  a = add_block(a, "r2", make_reeb(Sign::Outward));
  return glue(a, {"r1", 0}, {"r2", 0}, m);
}

Assembly t3_l1() {
  Assembly a = singleton("l", make_lblock(Sign::Outward));
  return glue(a, {"l", 0}, {"l", 1}, GluingMap::identity());
}

Assembly t3_l2() {
  Assembly a;
  a = add_block(a, "la", make_lblock(Sign::Outward));
  a = add_block(a, "lb", make_lblock(Sign::Inward));
  a = glue(a, {"la", 0}, {"lb", 0}, GluingMap::identity());
  return glue(a, {"la", 1}, {"lb", 1}, GluingMap::identity());
}

Assembly circle_product(int genus) {
  return singleton("b0", make_product(genus, Fiber::Circle, 0, Sign::Outward));
}

using Maker = std::function<Assembly()>;

const std::vector<std::pair<std::string, Maker>>& table() {
  static const std::vector<std::pair<std::string, Maker>> t = {
      {"reeb_s3", [] { return two_reeb(GluingMap::swap()); }},
      {"reeb_s2xs1", [] { return two_reeb(GluingMap::identity()); }},
      {"t3_L1", t3_l1},
      {"t3_L2", t3_l2},
      {"q_compact", [] { return singleton("q", make_catalog(CatalogName::WaldhausenCompact)); }},
      {"q_spiral", [] { return singleton("q", make_catalog(CatalogName::WaldhausenSpiral)); }},
      {"q_typeIIb", [] { return singleton("q", make_catalog(CatalogName::WaldhausenTypeIIb)); }},
      {"fg_good_0", [] { return fg_good(0); }},
      {"fg_good_1", [] { return fg_good(1); }},
      {"fg_good_2", [] { return fg_good(2); }},
      {"fg_bad_0", [] { return fg_bad(0); }},
      {"fg_bad_1", [] { return fg_bad(1); }},
      {"fg_bad_2", [] { return fg_bad(2); }},
      {"t3_product", [] { return circle_product(1); }},
      {"sgxs1_product", [] { return circle_product(2); }},
      {"sgxs1_detaut", [] { return detaut(circle_product(2), "b0").bounded; }},
  };
  return t;
}

Assembly fg(int genus, Sign second) {
  if (genus < 0) throw Error(ErrorCode::InvalidArgument, "genus must be >= 0");
  Assembly a;
  a = add_block(a, "p", make_product(genus, Fiber::Circle, 2, Sign::Outward));
  a = add_block(a, "t_plus", make_turbulization(Sign::Outward, Slope::meridian()));
  a = add_block(a, "t_minus", make_turbulization(second, Slope::meridian()));
  a = glue(a, {"t_plus", 1}, {"p", 0}, GluingMap::identity());
  return glue(a, {"t_minus", 1}, {"p", 1}, GluingMap::identity());
}

}  // namespace

Assembly fg_good(int genus) { return fg(genus, Sign::Inward); }
Assembly fg_bad(int genus) { return fg(genus, Sign::Outward); }

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& [name, make] : table()) out.push_back(name);
  return out;
}

Assembly catalog_assembly(const std::string& name) {
  for (const auto& [n, make] : table()) {
    if (n == name) return make();
  }
  throw Error(ErrorCode::UnknownName, "no catalog entry '" + name + "'");
}

}  // namespace foliate
