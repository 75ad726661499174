#pragma once

// Tautness decision, certificates, and the rewrites that change tautness.

#include "foliate/assembly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace foliate {

enum class OrientationVerdict { Good, Bad, NotApplicable };
std::string_view to_string(OrientationVerdict v);

OrientationVerdict orientation_verdict(const Assembly& a);

enum class NonTautReason {
  SameOrientationBoundary,
  SeparatingCompactLeaf,
  ReebComponent,
  ReebAnnulusOnBoundary,
};
std::string_view to_string(NonTautReason r);

// A path through blocks; gluings[i] joins blocks[i] and blocks[i+1].
struct ArcPath {
  Slot start;
  Slot end;
  std::vector<std::string> blocks;
  std::vector<std::size_t> gluings;
  bool operator==(const ArcPath&) const = default;
};

struct ArcCertificate {
  enum class Kind { Arcs, Loop, SplitArcs, Intrinsic };
  Kind kind = Kind::Arcs;
  // Arcs / SplitArcs: one path per boundary leaf class, Inward -> Outward.
  std::vector<ArcPath> arcs;
  // Loop: either a block with an internal transverse circle, or a cycle.
  std::optional<std::string> loop_block;
  std::vector<std::string> loop_blocks;
  std::vector<std::size_t> loop_gluings;
  // SplitArcs: leaf gluings cut before searching.
  std::vector<std::size_t> cut;
  bool operator==(const ArcCertificate&) const = default;
};

std::string_view to_string(ArcCertificate::Kind k);

// Cut-and-region witness behind a NonTaut verdict.
struct RegionWitness {
  std::vector<InteriorLeaf> cut;
  std::vector<std::string> blocks;
  // Boundary pieces of the region and their common sign.
  std::vector<std::string> boundary;
  Sign sign = Sign::Outward;
};

struct TautnessVerdict {
  enum class Value { Taut, NonTaut, HypothesesNotMet };
  Value value = Value::HypothesesNotMet;
  std::optional<NonTautReason> reason;
  std::optional<ArcCertificate> certificate;
  std::vector<std::string> hypotheses_violated;
  std::optional<RegionWitness> region;
  // Block or gluing that triggered the verdict, when there is one.
  std::optional<std::string> trigger;

  bool is_taut() const { return value == Value::Taut; }
  bool is_non_taut() const { return value == Value::NonTaut; }
};

std::string_view to_string(TautnessVerdict::Value v);

// Region rule: a piece cut out along compact leaves, orientable on its own,
// whose boundary is all leaves with one common sign.
std::optional<std::pair<NonTautReason, RegionWitness>> check_sep_torus(const Assembly& a);

TautnessVerdict decide_tautness(const Assembly& a);

// Graph-level check of a certificate against the assembly.
bool validate_certificate(const Assembly& a, const ArcCertificate& c, std::string* why = nullptr);

enum class TorusNeighborhood { TStarComponent, TComponent, S1Component, SStarComponent };
std::string_view to_string(TorusNeighborhood n);
TorusNeighborhood classify_torus_neighborhood(const TorusFoliation1D& t);

// Replaces a Reeb block and its turbulization collar by a trivially foliated
// solid torus. Throws NotDeletable / NotAdjacentToTurbulization.
Assembly delete_reeb(const Assembly& a, const std::string& reeb_id);

struct DetautResult {
  Assembly bounded;
  Assembly closed_with_reeb;
  bool reeb_formed = false;
  std::string new_leaf_block;
};

// Throws NotTaut / NoTransverseLoopThroughSite.
DetautResult detaut(const Assembly& a, const std::string& site);

struct GoodmanCheck {
  std::string name;
  bool applicable = false;
  bool pass = true;
  std::string witness;
};

struct GoodmanReport {
  bool applicable = false;
  bool pass = true;
  std::vector<GoodmanCheck> checks;
};

GoodmanReport goodman_validate(const Assembly& a);

// Attaches a spiraling block on the given boundary. For transverse targets
// the sign of the new leaf is `sign`; on a mixed target it follows the
// tangent part. Throws ReebBandAtHigherGenus.
Assembly attach_spiraling(const Assembly& a, const Slot& boundary, const std::string& new_id,
                          Sign sign = Sign::Outward, const std::string& h = kIdentityLabel);

// True iff some genus-1 compact leaf exists (boundary, glued or interior).
bool has_torus_leaf(const Assembly& a);

}  // namespace foliate
