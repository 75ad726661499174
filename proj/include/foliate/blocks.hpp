#pragma once

// Canonical foliated pieces and their typed boundary data.

#include "foliate/holonomy.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace foliate {

// Co-orientation of a boundary leaf relative to the block.
enum class Sign { Outward = 1, Inward = -1 };

inline Sign flip(Sign s) { return s == Sign::Outward ? Sign::Inward : Sign::Outward; }
inline int value(Sign s) { return static_cast<int>(s); }
inline Sign sign_of(int v) { return v >= 0 ? Sign::Outward : Sign::Inward; }
std::string_view to_string(Sign s);

struct LeafBoundary {
  Sign sign;
  bool operator==(const LeafBoundary&) const = default;
};

struct TransverseBoundary {
  TorusFoliation1D foliation;
  bool operator==(const TransverseBoundary&) const = default;
};

// Tangent surface part plus one transverse annulus.
struct MixedBoundary {
  int tangent_part_genus;
  AnnulusFoliation1D annulus;
  Sign tangent_sign;
  bool operator==(const MixedBoundary&) const = default;
};

struct BoundaryComponent {
  int genus;
  std::variant<LeafBoundary, TransverseBoundary, MixedBoundary> tangency;

  bool is_leaf() const { return std::holds_alternative<LeafBoundary>(tangency); }
  bool is_transverse() const {
    return std::holds_alternative<TransverseBoundary>(tangency);
  }
  bool is_mixed() const { return std::holds_alternative<MixedBoundary>(tangency); }
  Sign leaf_sign() const;
  bool operator==(const BoundaryComponent&) const = default;
};

std::string to_string(const BoundaryComponent& b);

enum class Direction { CW, CCW };

// Opaque gluing label, compared syntactically.
inline const std::string kIdentityLabel = "id";
std::string rotation_label(const Rational& angle);

struct SpiralingParams {
  int genus = 1;
  IntervalDynamics f = IntervalDynamics::identity();
  std::string h = kIdentityLabel;
  Direction direction = Direction::CW;
  bool operator==(const SpiralingParams&) const = default;
};

struct ReebSolidTorus {
  bool operator==(const ReebSolidTorus&) const = default;
};
struct Turbulization {
  Slope slope;
  bool operator==(const Turbulization&) const = default;
};
struct GeneralizedTurbulization {
  std::variant<Rational, DenseLinear> rotation;
  bool operator==(const GeneralizedTurbulization&) const = default;
};
struct Spiraling {
  SpiralingParams params;
  bool operator==(const Spiraling&) const = default;
};
struct GeneralizedSpiraling {
  AnnulusFoliation1D g;
  std::string h = kIdentityLabel;
  Direction direction = Direction::CW;
  bool operator==(const GeneralizedSpiraling&) const = default;
};
struct SuspensionBlock {
  IntervalDynamics f;
  bool operator==(const SuspensionBlock&) const = default;
};
struct LBlock {
  bool operator==(const LBlock&) const = default;
};
struct TrivialSolidTorus {
  bool operator==(const TrivialSolidTorus&) const = default;
};

enum class Fiber { Interval, Circle };

// F x I or F x S^1 where F has the given genus and punctures. For the circle
// fibre each puncture gives a transverse torus, (1,0) = puncture curve,
// (0,1) = fibre.
struct ProductBlock {
  int genus = 0;
  Fiber fiber = Fiber::Interval;
  int punctures = 0;
  bool operator==(const ProductBlock&) const = default;
};

enum class CatalogName { WaldhausenCompact, WaldhausenSpiral, WaldhausenTypeIIb };

struct CatalogBlock {
  CatalogName name;
  bool operator==(const CatalogBlock&) const = default;
};

std::string_view to_string(CatalogName n);

struct CatalogTraits {
  bool taut;
  bool transversely_orientable;
  bool reebless;
  bool interior_torus_leaves_separating;
};

CatalogTraits catalog_traits(CatalogName n);

struct BlockFlags {
  bool has_reeb_component = false;
  bool has_embedded_reeb_annulus = false;
  bool has_interior_torus_leaf = false;
  bool transversely_orientable = true;
  // Genera of closed leaves in the interior (one entry per family).
  std::vector<int> compact_leaf_genera;
};

// How a family of interior closed leaves cuts the block.
struct InteriorLeafSplit {
  int genus;
  // Boundary indices on each side; empty sides are allowed.
  std::vector<int> side0;
  std::vector<int> side1;
  // Cutting leaves the block connected (closed F x S^1).
  bool self_loop = false;
};

class Block {
 public:
  using Kind = std::variant<ReebSolidTorus, Turbulization, GeneralizedTurbulization,
                            Spiraling, GeneralizedSpiraling, SuspensionBlock, LBlock,
                            TrivialSolidTorus, ProductBlock, CatalogBlock>;

  explicit Block(Kind kind, Sign sign = Sign::Outward);

  const Kind& kind() const { return kind_; }
  Sign sign() const { return sign_; }
  const std::vector<BoundaryComponent>& boundaries() const { return boundaries_; }
  const BlockFlags& flags() const { return flags_; }
  std::optional<InteriorLeafSplit> interior_leaves() const;

  template <class T>
  bool is() const {
    return std::holds_alternative<T>(kind_);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(kind_);
  }

  // Same kind with every co-orientation reversed.
  Block flipped() const;

  bool operator==(const Block& o) const { return kind_ == o.kind_ && sign_ == o.sign_; }

 private:
  Kind kind_;
  Sign sign_;
  std::vector<BoundaryComponent> boundaries_;
  BlockFlags flags_;
};

// Stable short name used by the file format.
std::string kind_name(const Block& b);
std::string to_string(const Block& b);

Block make_reeb(Sign sign = Sign::Outward);
Block make_turbulization(Sign sign, Slope slope);
Block make_generalized_turbulization(Sign sign,
                                     std::variant<Rational, DenseLinear> rotation);
Block make_spiraling(const SpiralingParams& p, Sign sign);
// Reeb-free input yields the equivalent genus-1 spiraling block.
Block make_generalized_spiraling(const AnnulusFoliation1D& g, const std::string& h,
                                 Direction direction, Sign sign);
Block make_suspension(const IntervalDynamics& f, Sign sign = Sign::Outward);
Block make_lblock(Sign sign = Sign::Outward);
Block make_trivial_solid_torus();
Block make_product(int genus, Fiber fiber, int punctures, Sign sign = Sign::Outward);
Block make_catalog(CatalogName name);

Block normalize(const Block& b);

const BoundaryComponent& boundary_foliation(const Block& b, int idx);

// Sign carried by the tangent part of a boundary (leaf or mixed).
std::optional<Sign> contact_sign(const BoundaryComponent& c);

// Foliation seen on a genus-1 boundary that is not a leaf. A mixed boundary
// reads as circles of slope (1,0) with its annulus inserted.
std::optional<TorusFoliation1D> transverse_foliation(const BoundaryComponent& c);

}  // namespace foliate
