#include "foliate/blocks.hpp"

#include "foliate/error.hpp"

#include <sstream>

namespace foliate {

std::string_view to_string(Sign s) { return s == Sign::Outward ? "outward" : "inward"; }

Sign BoundaryComponent::leaf_sign() const {
  if (auto* l = std::get_if<LeafBoundary>(&tangency)) return l->sign;
  throw Error(ErrorCode::KindMismatch, "boundary is not a leaf");
}

std::string to_string(const BoundaryComponent& b) {
  std::ostringstream os;
  os << "g" << b.genus << ":";
  if (auto* l = std::get_if<LeafBoundary>(&b.tangency)) {
    os << "Leaf(" << to_string(l->sign) << ")";
  } else if (auto* t = std::get_if<TransverseBoundary>(&b.tangency)) {
    os << "Transverse(" << to_string(t->foliation) << ")";
  } else {
    const auto& m = std::get<MixedBoundary>(b.tangency);
    os << "Mixed(" << m.tangent_part_genus << "," << to_string(m.annulus) << ","
       << to_string(m.tangent_sign) << ")";
  }
  return os.str();
}

std::string rotation_label(const Rational& angle) {
  return "rotation(" + format_rational(angle) + ")";
}

std::string_view to_string(CatalogName n) {
  switch (n) {
    case CatalogName::WaldhausenCompact: return "waldhausen_compact";
    case CatalogName::WaldhausenSpiral: return "waldhausen_spiral";
    case CatalogName::WaldhausenTypeIIb: return "waldhausen_type_iib";
  }
  return "?";
}

CatalogTraits catalog_traits(CatalogName n) {
  switch (n) {
    case CatalogName::WaldhausenCompact: return {true, false, true, true};
    case CatalogName::WaldhausenSpiral: return {true, false, true, false};
    case CatalogName::WaldhausenTypeIIb: return {false, true, true, false};
  }
  return {false, false, false, false};
}

namespace {

BoundaryComponent leaf(int genus, Sign s) { return {genus, LeafBoundary{s}}; }

BoundaryComponent circles(Slope s) {
  return {1, TransverseBoundary{TorusFoliation1D(CircleFoliation{s})}};
}

}  // namespace

Block::Block(Kind kind, Sign sign) : kind_(std::move(kind)), sign_(sign) {
  if (auto* sp = std::get_if<Spiraling>(&kind_); sp && sp->params.f.is_identity()) {
    sp->params.h = kIdentityLabel;
    sp->params.direction = Direction::CW;
  }
  const Sign s = sign_;
  std::visit(
      [&](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, ReebSolidTorus>) {
          boundaries_ = {leaf(1, s)};
          flags_.has_reeb_component = true;
        } else if constexpr (std::is_same_v<T, Turbulization>) {
          boundaries_ = {leaf(1, s), circles(k.slope)};
        } else if constexpr (std::is_same_v<T, GeneralizedTurbulization>) {
          if (auto* r = std::get_if<Rational>(&k.rotation)) {
            boundaries_ = {leaf(1, s), circles(Slope(r->numerator(), r->denominator()))};
          } else {
            boundaries_ = {leaf(1, s),
                           {1, TransverseBoundary{TorusFoliation1D(
                                   std::get<DenseLinear>(k.rotation))}}};
          }
        } else if constexpr (std::is_same_v<T, Spiraling>) {
          const auto& p = k.params;
          if (p.genus < 1) {
            throw Error(ErrorCode::InvalidArgument, "spiraling genus must be >= 1");
          }
          boundaries_ = {leaf(p.genus, s),
                         {p.genus, MixedBoundary{p.genus, suspension_annulus(p.f), flip(s)}}};
          if (p.f.has_strictly_interior_fixed_segment()) {
            flags_.has_interior_torus_leaf = p.genus == 1;
            flags_.compact_leaf_genera.push_back(p.genus);
          }
        } else if constexpr (std::is_same_v<T, GeneralizedSpiraling>) {
          boundaries_ = {leaf(1, s), {1, MixedBoundary{1, k.g, flip(s)}}};
          flags_.has_embedded_reeb_annulus = k.g.has_reeb_band();
          bool interior_circles = false;
          for (std::size_t i = 1; i + 1 < k.g.bands().size(); ++i) {
            if (k.g.bands()[i].kind == BandKind::Circle) interior_circles = true;
          }
          if (interior_circles) {
            flags_.has_interior_torus_leaf = true;
            flags_.compact_leaf_genera.push_back(1);
          }
        } else if constexpr (std::is_same_v<T, SuspensionBlock>) {
          boundaries_ = {leaf(1, s), leaf(1, flip(s))};
          if (k.f.has_interior_fixed_point()) {
            flags_.has_interior_torus_leaf = true;
            flags_.compact_leaf_genera.push_back(1);
          }
        } else if constexpr (std::is_same_v<T, LBlock>) {
          boundaries_ = {leaf(1, s), leaf(1, s)};
          flags_.has_embedded_reeb_annulus = true;
        } else if constexpr (std::is_same_v<T, TrivialSolidTorus>) {
          sign_ = Sign::Outward;
          boundaries_ = {circles(Slope::meridian())};
        } else if constexpr (std::is_same_v<T, ProductBlock>) {
          if (k.genus < 0 || k.punctures < 0) {
            throw Error(ErrorCode::InvalidArgument, "product genus/punctures must be >= 0");
          }
          if (k.fiber == Fiber::Interval) {
            if (k.punctures != 0) {
              throw Error(ErrorCode::InvalidArgument,
                          "interval-fibre product takes no punctures");
            }
            if (k.genus < 1) {
              throw Error(ErrorCode::InvalidArgument,
                          "interval-fibre product needs genus >= 1");
            }
            boundaries_ = {leaf(k.genus, s), leaf(k.genus, flip(s))};
            flags_.compact_leaf_genera.push_back(k.genus);
            flags_.has_interior_torus_leaf = k.genus == 1;
          } else {
            for (int i = 0; i < k.punctures; ++i) boundaries_.push_back(circles(Slope::meridian()));
            if (k.punctures == 0) {
              flags_.compact_leaf_genera.push_back(k.genus);
              flags_.has_interior_torus_leaf = k.genus == 1;
            }
          }
        } else if constexpr (std::is_same_v<T, CatalogBlock>) {
          auto tr = catalog_traits(k.name);
          sign_ = Sign::Outward;
          boundaries_ = {leaf(1, Sign::Outward)};
          flags_.transversely_orientable = tr.transversely_orientable;
          if (k.name == CatalogName::WaldhausenCompact) {
            flags_.has_interior_torus_leaf = true;
            flags_.compact_leaf_genera.push_back(1);
          }
        }
      },
      kind_);
}

std::optional<InteriorLeafSplit> Block::interior_leaves() const {
  if (flags_.compact_leaf_genera.empty()) return std::nullopt;
  InteriorLeafSplit split{flags_.compact_leaf_genera.front(), {}, {}, false};
  if (auto* p = std::get_if<ProductBlock>(&kind_); p && p->fiber == Fiber::Circle) {
    split.self_loop = true;
    return split;
  }
  if (is<CatalogBlock>()) {
    split.side0 = {0};
    return split;
  }
  split.side0 = {0};
  split.side1 = {1};
  return split;
}

Block Block::flipped() const { return Block(kind_, flip(sign_)); }

std::string kind_name(const Block& b) {
  return std::visit(
      [](const auto& k) -> std::string {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, ReebSolidTorus>) return "reeb";
        else if constexpr (std::is_same_v<T, Turbulization>) return "turbulization";
        else if constexpr (std::is_same_v<T, GeneralizedTurbulization>)
          return "generalized_turbulization";
        else if constexpr (std::is_same_v<T, Spiraling>) return "spiraling";
        else if constexpr (std::is_same_v<T, GeneralizedSpiraling>)
          return "generalized_spiraling";
        else if constexpr (std::is_same_v<T, SuspensionBlock>) return "suspension";
        else if constexpr (std::is_same_v<T, LBlock>) return "L";
        else if constexpr (std::is_same_v<T, TrivialSolidTorus>) return "trivial_solid_torus";
        else if constexpr (std::is_same_v<T, ProductBlock>) return "product";
        else return "catalog";
      },
      b.kind());
}

std::string to_string(const Block& b) {
  std::ostringstream os;
  os << kind_name(b) << "[" << to_string(b.sign()) << "]";
  std::visit(
      [&](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Turbulization>) {
          os << to_string(k.slope);
        } else if constexpr (std::is_same_v<T, GeneralizedTurbulization>) {
          if (auto* r = std::get_if<Rational>(&k.rotation)) {
            os << "(" << format_rational(*r) << ")";
          } else {
            os << "(" << std::get<DenseLinear>(k.rotation).tag << ")";
          }
        } else if constexpr (std::is_same_v<T, Spiraling>) {
          os << "(g=" << k.params.genus << "," << to_string(k.params.f) << ","
             << k.params.h << "," << (k.params.direction == Direction::CW ? "cw" : "ccw")
             << ")";
        } else if constexpr (std::is_same_v<T, GeneralizedSpiraling>) {
          os << "(" << to_string(k.g) << "," << k.h << ","
             << (k.direction == Direction::CW ? "cw" : "ccw") << ")";
        } else if constexpr (std::is_same_v<T, SuspensionBlock>) {
          os << "(" << to_string(k.f) << ")";
        } else if constexpr (std::is_same_v<T, ProductBlock>) {
          os << "(g=" << k.genus << "," << (k.fiber == Fiber::Circle ? "circle" : "interval")
             << ",k=" << k.punctures << ")";
        } else if constexpr (std::is_same_v<T, CatalogBlock>) {
          os << "(" << to_string(k.name) << ")";
        }
      },
      b.kind());
  return os.str();
}

Block make_reeb(Sign sign) { return Block(ReebSolidTorus{}, sign); }

Block make_turbulization(Sign sign, Slope slope) {
  return Block(Turbulization{slope}, sign);
}

Block make_generalized_turbulization(Sign sign,
                                     std::variant<Rational, DenseLinear> rotation) {
  return Block(GeneralizedTurbulization{std::move(rotation)}, sign);
}

Block make_spiraling(const SpiralingParams& p, Sign sign) { return Block(Spiraling{p}, sign); }

Block make_generalized_spiraling(const AnnulusFoliation1D& g, const std::string& h,
                                 Direction direction, Sign sign) {
  if (!g.has_reeb_band()) {
    return make_spiraling({1, derive_holonomy_from_annulus(g), h, direction}, sign);
  }
  return Block(GeneralizedSpiraling{g, h, direction}, sign);
}

Block make_suspension(const IntervalDynamics& f, Sign sign) {
  return Block(SuspensionBlock{f}, sign);
}

Block make_lblock(Sign sign) { return Block(LBlock{}, sign); }

Block make_trivial_solid_torus() { return Block(TrivialSolidTorus{}); }

Block make_product(int genus, Fiber fiber, int punctures, Sign sign) {
  return Block(ProductBlock{genus, fiber, punctures}, sign);
}

Block make_catalog(CatalogName name) { return Block(CatalogBlock{name}); }

namespace {

std::optional<Block> rewrite_once(const Block& b) {
  if (auto* s = std::get_if<Spiraling>(&b.kind())) {
    if (s->params.genus == 1 && s->params.f.is_identity()) {
      return make_turbulization(b.sign(), Slope::meridian());
    }
  } else if (auto* t = std::get_if<GeneralizedTurbulization>(&b.kind())) {
    if (auto* r = std::get_if<Rational>(&t->rotation)) {
      return make_turbulization(b.sign(), Slope(r->numerator(), r->denominator()));
    }
  } else if (auto* g = std::get_if<GeneralizedSpiraling>(&b.kind())) {
    if (!g->g.has_reeb_band()) {
      return make_spiraling({1, derive_holonomy_from_annulus(g->g), g->h, g->direction},
                            b.sign());
    }
  }
  return std::nullopt;
}

}  // namespace

Block normalize(const Block& b) {
  Block cur = b;
  while (auto next = rewrite_once(cur)) cur = *next;
  return cur;
}

const BoundaryComponent& boundary_foliation(const Block& b, int idx) {
  if (idx < 0 || idx >= static_cast<int>(b.boundaries().size())) {
    throw Error(ErrorCode::IndexOutOfRange,
                "boundary index " + std::to_string(idx) + " out of range for " +
                    kind_name(b) + " with " + std::to_string(b.boundaries().size()) +
                    " boundaries");
  }
  return b.boundaries()[idx];
}

std::optional<Sign> contact_sign(const BoundaryComponent& c) {
  if (auto* l = std::get_if<LeafBoundary>(&c.tangency)) return l->sign;
  if (auto* m = std::get_if<MixedBoundary>(&c.tangency)) return m->tangent_sign;
  return std::nullopt;
}

std::optional<TorusFoliation1D> transverse_foliation(const BoundaryComponent& c) {
  if (c.genus != 1) return std::nullopt;
  if (auto* t = std::get_if<TransverseBoundary>(&c.tangency)) return t->foliation;
  if (auto* m = std::get_if<MixedBoundary>(&c.tangency)) {
    return TorusFoliation1D(Banded{Slope::meridian(), m->annulus});
  }
  return std::nullopt;
}

}  // namespace foliate
