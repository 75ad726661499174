#pragma once

// Graphs of blocks glued along boundary components.

#include "foliate/blocks.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace foliate {

struct Slot {
  std::string block;
  int idx = 0;
  auto operator<=>(const Slot&) const = default;
};

std::string to_string(const Slot& s);

enum class GluingKind { LeafToLeaf, TransverseToTransverse };

struct Gluing {
  Slot from;
  Slot to;
  GluingMap map = GluingMap::identity();
  GluingKind kind = GluingKind::LeafToLeaf;
  // Mixed to Mixed: the tangent parts meet like leaves.
  bool tangent_contact = false;
  bool operator==(const Gluing&) const = default;
};

class Assembly {
 public:
  Assembly() = default;

  const std::map<std::string, Block>& blocks() const { return blocks_; }
  const std::vector<Gluing>& gluings() const { return gluings_; }
  const Block& block(const std::string& id) const;
  bool has_block(const std::string& id) const { return blocks_.count(id) != 0; }
  const BoundaryComponent& boundary(const Slot& s) const;

  // Gluing index touching the slot, if any.
  std::optional<std::size_t> gluing_at(const Slot& s) const;
  std::vector<Slot> free_boundaries() const;
  bool is_closed() const { return free_boundaries().empty(); }

  // Throws Disconnected for multi-component graphs and UnknownBlock for
  // dangling gluings.
  void validate() const;

  bool operator==(const Assembly&) const = default;

 private:
  friend Assembly add_block(const Assembly&, const std::string&, const Block&);
  friend Assembly glue(const Assembly&, const Slot&, const Slot&, const GluingMap&);
  friend Assembly unglue(const Assembly&, std::size_t);
  friend Assembly replace_block(const Assembly&, const std::string&, const Block&);
  friend Assembly remove_block(const Assembly&, const std::string&);

  std::map<std::string, Block> blocks_;
  std::vector<Gluing> gluings_;
};

Assembly add_block(const Assembly& a, const std::string& id, const Block& b);
// Checks slot freedom, kind compatibility and transverse foliation agreement.
// Throws SlotOccupied, KindMismatch, SlopeMismatch.
Assembly glue(const Assembly& a, const Slot& from, const Slot& to, const GluingMap& map);
Assembly unglue(const Assembly& a, std::size_t gluing_index);
// Swaps in a block with the same boundary count; gluings are kept unchecked.
Assembly replace_block(const Assembly& a, const std::string& id, const Block& b);
// Drops a block and every gluing that touches it.
Assembly remove_block(const Assembly& a, const std::string& id);

// Single-block assembly.
Assembly singleton(const std::string& id, const Block& b);

std::string to_string(const Assembly& a);

// Either a LeafToLeaf gluing or the family of closed leaves inside a block.
struct InteriorLeaf {
  std::optional<std::size_t> gluing;
  std::optional<std::string> block;
  int genus = 1;
  auto operator<=>(const InteriorLeaf&) const = default;
};

std::vector<InteriorLeaf> interior_leaves(const Assembly& a);
std::string to_string(const InteriorLeaf& l);

// Throws UnknownLeaf.
bool is_separating(const Assembly& a, const InteriorLeaf& leaf);

// Orientation constraint graph: one variable per block, one constraint per
// gluing. parity 0 means equal signs, 1 opposite.
struct OrientationConstraint {
  std::size_t gluing;
  std::string u;
  std::string v;
  int parity;
};

OrientationConstraint orientation_constraint(const Assembly& a, std::size_t gluing_index);

struct OrientationResult {
  bool orientable = false;
  // Block multipliers, +1 or -1; the lexicographically first block is +1.
  std::map<std::string, int> signing;
  // Gluing indices of a cycle with odd total parity.
  std::vector<std::size_t> witness_cycle;
  // A block that is not transversely orientable by itself.
  std::optional<std::string> intrinsic_witness;
};

OrientationResult propagate_orientation(const Assembly& a);

// Every consistent signing (two for a connected orientable assembly).
std::vector<std::map<std::string, int>> all_signings(const Assembly& a);

struct BoundaryLeaf {
  Slot slot;
  int genus;
  Sign sign;
  bool operator==(const BoundaryLeaf&) const = default;
};

// Signs under the canonical signing. Throws NotOrientable.
std::vector<BoundaryLeaf> boundary_leaves(const Assembly& a);

// Mirror ids get a trailing "~". Throws TransverseBoundaryPresent.
Assembly double_assembly(const Assembly& a);

// Merges chains of identity-like cappings: solid tori capping circle
// products, P(0, circle, 1) -> solid torus, solid torus + matching
// turbulization -> Reeb component.
Assembly simplify(const Assembly& a);

// Applies block normalization everywhere and recomputes gluing kinds.
Assembly normalize_assembly(const Assembly& a);

// SL(2,Z) matrix sending (1,0) to s.
GluingMap frame_for(const Slope& s);

}  // namespace foliate
