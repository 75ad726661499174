#include "foliate/tautness.hpp"

#include "foliate/error.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>

namespace foliate {

std::string_view to_string(OrientationVerdict v) {
  switch (v) {
    case OrientationVerdict::Good: return "good";
    case OrientationVerdict::Bad: return "bad";
    case OrientationVerdict::NotApplicable: return "not_applicable";
  }
  return "?";
}

std::string_view to_string(NonTautReason r) {
  switch (r) {
    case NonTautReason::SameOrientationBoundary: return "same_orientation_boundary";
    case NonTautReason::SeparatingCompactLeaf: return "separating_compact_leaf";
    case NonTautReason::ReebComponent: return "reeb_component";
    case NonTautReason::ReebAnnulusOnBoundary: return "reeb_annulus_on_boundary";
  }
  return "?";
}

std::string_view to_string(ArcCertificate::Kind k) {
  switch (k) {
    case ArcCertificate::Kind::Arcs: return "arcs";
    case ArcCertificate::Kind::Loop: return "loop";
    case ArcCertificate::Kind::SplitArcs: return "split_arcs";
    case ArcCertificate::Kind::Intrinsic: return "intrinsic";
  }
  return "?";
}

std::string_view to_string(TautnessVerdict::Value v) {
  switch (v) {
    case TautnessVerdict::Value::Taut: return "taut";
    case TautnessVerdict::Value::NonTaut: return "non-taut";
    case TautnessVerdict::Value::HypothesesNotMet: return "hypotheses-not-met";
  }
  return "?";
}

std::string_view to_string(TorusNeighborhood n) {
  switch (n) {
    case TorusNeighborhood::TStarComponent: return "t_star_component";
    case TorusNeighborhood::TComponent: return "t_component";
    case TorusNeighborhood::S1Component: return "s1_component";
    case TorusNeighborhood::SStarComponent: return "s_star_component";
  }
  return "?";
}

OrientationVerdict orientation_verdict(const Assembly& a) {
  if (!propagate_orientation(a).orientable) return OrientationVerdict::NotApplicable;
  auto leaves = boundary_leaves(a);
  if (leaves.empty()) return OrientationVerdict::NotApplicable;
  for (const auto& l : leaves) {
    if (l.sign != leaves.front().sign) return OrientationVerdict::Good;
  }
  return OrientationVerdict::Bad;
}

// ---------------------------------------------------------------------------
// Region rule

namespace {

struct RegionNode {
  std::string block;
  std::vector<int> slots;
};

struct RegionEdge {
  int u;
  int v;
  int parity;
  // index into the cuttable leaf list, or -1
  int leaf = -1;
  // gluing index or -1 for a block-interior family
  int gluing = -1;
};

struct RegionGraph {
  std::vector<RegionNode> nodes;
  std::vector<RegionEdge> edges;
  std::map<Slot, int> slot_node;
  std::vector<InteriorLeaf> leaves;
};

RegionGraph build_region_graph(const Assembly& a) {
  RegionGraph rg;
  rg.leaves = interior_leaves(a);
  std::map<std::string, std::pair<int, int>> halves;
  for (const auto& [id, b] : a.blocks()) {
    auto split = b.interior_leaves();
    int n0 = static_cast<int>(rg.nodes.size());
    rg.nodes.push_back({id, {}});
    int n1 = n0;
    if (split && !split->self_loop) {
      n1 = static_cast<int>(rg.nodes.size());
      rg.nodes.push_back({id, {}});
    }
    halves[id] = {n0, n1};
    for (int i = 0; i < static_cast<int>(b.boundaries().size()); ++i) {
      bool side1 = split && std::count(split->side1.begin(), split->side1.end(), i);
      int n = side1 ? n1 : n0;
      rg.nodes[n].slots.push_back(i);
      rg.slot_node[{id, i}] = n;
    }
  }
  for (std::size_t i = 0; i < a.gluings().size(); ++i) {
    const auto& g = a.gluings()[i];
    auto c = orientation_constraint(a, i);
    RegionEdge e{rg.slot_node.at(g.from), rg.slot_node.at(g.to), c.parity, -1,
                 static_cast<int>(i)};
    for (std::size_t k = 0; k < rg.leaves.size(); ++k) {
      if (rg.leaves[k].gluing == i) e.leaf = static_cast<int>(k);
    }
    rg.edges.push_back(e);
  }
  for (std::size_t k = 0; k < rg.leaves.size(); ++k) {
    if (!rg.leaves[k].block) continue;
    auto [n0, n1] = halves.at(*rg.leaves[k].block);
    rg.edges.push_back({n0, n1, 0, static_cast<int>(k), -1});
  }
  return rg;
}

struct Piece {
  std::string label;
  Sign sign;
};

// Looks for a bad region after cutting the leaves in `mask`.
std::optional<RegionWitness> bad_region(const Assembly& a, const RegionGraph& rg,
                                        std::uint32_t mask) {
  const int n = static_cast<int>(rg.nodes.size());
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (v, parity)
  for (const auto& e : rg.edges) {
    if (e.leaf >= 0 && (mask >> e.leaf & 1)) continue;
    adj[e.u].push_back({e.v, e.parity});
    if (e.u != e.v) adj[e.v].push_back({e.u, e.parity});
  }
  std::vector<int> comp(n, -1), sign(n, 0);
  std::vector<bool> orientable;
  int ncomp = 0;
  for (int r = 0; r < n; ++r) {
    if (comp[r] != -1) continue;
    bool ok = true;
    comp[r] = ncomp;
    sign[r] = 1;
    std::deque<int> q{r};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      if (!a.block(rg.nodes[u].block).flags().transversely_orientable) ok = false;
      for (auto [v, p] : adj[u]) {
        int want = p ? -sign[u] : sign[u];
        if (comp[v] == -1) {
          comp[v] = ncomp;
          sign[v] = want;
          q.push_back(v);
        } else if (sign[v] != want) {
          ok = false;
        }
      }
    }
    orientable.push_back(ok);
    ++ncomp;
  }

  std::vector<std::vector<Piece>> pieces(ncomp);
  std::vector<bool> has_non_leaf(ncomp, false);
  for (int u = 0; u < n; ++u) {
    const auto& id = rg.nodes[u].block;
    for (int idx : rg.nodes[u].slots) {
      Slot s{id, idx};
      if (a.gluing_at(s)) continue;
      const auto& bc = a.boundary(s);
      if (!bc.is_leaf()) {
        has_non_leaf[comp[u]] = true;
        continue;
      }
      pieces[comp[u]].push_back({to_string(s), sign_of(sign[u] * value(bc.leaf_sign()))});
    }
  }
  for (const auto& e : rg.edges) {
    if (e.leaf < 0 || !(mask >> e.leaf & 1)) continue;
    if (e.gluing >= 0) {
      const auto& g = a.gluings()[e.gluing];
      for (const auto& s : {g.from, g.to}) {
        int u = rg.slot_node.at(s);
        pieces[comp[u]].push_back(
            {"cut:" + to_string(s), sign_of(sign[u] * value(a.boundary(s).leaf_sign()))});
      }
    } else {
      const auto& id = *rg.leaves[e.leaf].block;
      const auto& b = a.block(id);
      int s0 = b.boundaries().empty() || !b.boundaries()[0].is_leaf()
                   ? 1
                   : value(b.boundaries()[0].leaf_sign());
      pieces[comp[e.u]].push_back({"cut:" + id + "/0", sign_of(-sign[e.u] * s0)});
      pieces[comp[e.v]].push_back({"cut:" + id + "/1", sign_of(sign[e.v] * s0)});
    }
  }
  for (int c = 0; c < ncomp; ++c) {
    if (!orientable[c] || has_non_leaf[c] || pieces[c].empty()) continue;
    bool same = std::all_of(pieces[c].begin(), pieces[c].end(),
                            [&](const Piece& p) { return p.sign == pieces[c].front().sign; });
    if (!same) continue;
    RegionWitness w;
    for (std::size_t k = 0; k < rg.leaves.size(); ++k) {
      if (mask >> k & 1) w.cut.push_back(rg.leaves[k]);
    }
    std::set<std::string> bl;
    for (int u = 0; u < n; ++u) {
      if (comp[u] == c) bl.insert(rg.nodes[u].block);
    }
    w.blocks.assign(bl.begin(), bl.end());
    for (const auto& p : pieces[c]) w.boundary.push_back(p.label);
    w.sign = pieces[c].front().sign;
    return w;
  }
  return std::nullopt;
}

constexpr std::size_t kMaxSubsetLeaves = 12;

}  // namespace

std::optional<std::pair<NonTautReason, RegionWitness>> check_sep_torus(const Assembly& a) {
  auto rg = build_region_graph(a);
  const std::size_t L = rg.leaves.size();
  std::vector<std::uint32_t> masks;
  if (L <= kMaxSubsetLeaves) {
    for (std::uint32_t m = 0; m < (1u << L); ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t x, std::uint32_t y) {
      return std::popcount(x) < std::popcount(y);
    });
  } else {
    masks.push_back(0);
    for (std::size_t k = 0; k < L; ++k) masks.push_back(1u << k);
  }
  for (auto m : masks) {
    auto w = bad_region(a, rg, m);
    if (!w) continue;
    NonTautReason reason = NonTautReason::SameOrientationBoundary;
    if (std::popcount(m) == 1 && is_separating(a, w->cut.front())) {
      reason = NonTautReason::SeparatingCompactLeaf;
    }
    return std::make_pair(reason, *w);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Certificates

namespace {

std::map<std::string, std::vector<std::pair<std::string, std::size_t>>> block_adjacency(
    const Assembly& a) {
  std::map<std::string, std::vector<std::pair<std::string, std::size_t>>> adj;
  for (std::size_t i = 0; i < a.gluings().size(); ++i) {
    const auto& g = a.gluings()[i];
    adj[g.from.block].push_back({g.to.block, i});
    if (g.from.block != g.to.block) adj[g.to.block].push_back({g.from.block, i});
  }
  for (auto& [k, v] : adj) std::sort(v.begin(), v.end());
  return adj;
}

std::vector<ArcPath> arc_certificates(const Assembly& a) {
  auto leaves = boundary_leaves(a);
  auto adj = block_adjacency(a);
  std::vector<ArcPath> arcs;
  for (const auto& b : leaves) {
    std::map<std::string, int> dist;
    std::deque<std::string> q;
    for (const auto& t : leaves) {
      if (t.sign != b.sign && !dist.count(t.slot.block)) {
        dist[t.slot.block] = 0;
        q.push_back(t.slot.block);
      }
    }
    while (!q.empty()) {
      auto u = q.front();
      q.pop_front();
      for (const auto& [v, e] : adj[u]) {
        if (!dist.count(v)) {
          dist[v] = dist[u] + 1;
          q.push_back(v);
        }
      }
    }
    if (!dist.count(b.slot.block)) continue;
    ArcPath p;
    p.blocks.push_back(b.slot.block);
    std::string cur = b.slot.block;
    while (dist[cur] > 0) {
      for (const auto& [v, e] : adj[cur]) {
        if (dist.count(v) && dist[v] == dist[cur] - 1) {
          p.gluings.push_back(e);
          p.blocks.push_back(v);
          cur = v;
          break;
        }
      }
    }
    Slot target;
    for (const auto& t : leaves) {
      if (t.sign != b.sign && t.slot.block == cur) {
        target = t.slot;
        break;
      }
    }
    if (b.sign == Sign::Inward) {
      p.start = b.slot;
      p.end = target;
    } else {
      p.start = target;
      p.end = b.slot;
      std::reverse(p.blocks.begin(), p.blocks.end());
      std::reverse(p.gluings.begin(), p.gluings.end());
    }
    if (std::find(arcs.begin(), arcs.end(), p) == arcs.end()) arcs.push_back(p);
  }
  return arcs;
}

bool is_loop_block(const Block& b) {
  if (b.is<TrivialSolidTorus>()) return true;
  auto* p = std::get_if<ProductBlock>(&b.kind());
  return p && p->fiber == Fiber::Circle;
}

std::optional<ArcCertificate> loop_certificate(const Assembly& a) {
  ArcCertificate c;
  c.kind = ArcCertificate::Kind::Loop;
  for (const auto& [id, b] : a.blocks()) {
    if (is_loop_block(b)) {
      c.loop_block = id;
      return c;
    }
  }
  // shortest cycle through the block graph
  auto adj = block_adjacency(a);
  std::optional<std::pair<std::vector<std::string>, std::vector<std::size_t>>> best;
  for (std::size_t e = 0; e < a.gluings().size(); ++e) {
    const auto& g = a.gluings()[e];
    // path from g.to back to g.from avoiding edge e
    std::map<std::string, std::pair<std::string, std::size_t>> prev;
    std::set<std::string> seen{g.to.block};
    std::deque<std::string> q{g.to.block};
    while (!q.empty() && !seen.count(g.from.block)) {
      auto u = q.front();
      q.pop_front();
      for (const auto& [v, f] : adj[u]) {
        if (f == e || seen.count(v)) continue;
        seen.insert(v);
        prev[v] = {u, f};
        q.push_back(v);
      }
    }
    std::vector<std::string> blocks;
    std::vector<std::size_t> edges;
    if (g.from.block == g.to.block) {
      blocks = {g.from.block};
      edges = {e};
    } else {
      if (!seen.count(g.from.block)) continue;
      blocks.push_back(g.from.block);
      edges.push_back(e);
      std::vector<std::string> back;
      std::vector<std::size_t> back_e;
      std::string cur = g.from.block;
      while (cur != g.to.block) {
        back_e.push_back(prev[cur].second);
        cur = prev[cur].first;
        back.push_back(cur);
      }
      std::reverse(back.begin(), back.end());
      std::reverse(back_e.begin(), back_e.end());
      for (auto& x : back) blocks.push_back(x);
      for (auto& x : back_e) edges.push_back(x);
    }
    if (!best || blocks.size() < best->first.size()) best = {blocks, edges};
  }
  if (!best) return std::nullopt;
  c.loop_blocks = best->first;
  c.loop_gluings = best->second;
  return c;
}

bool joins(const Gluing& g, const std::string& x, const std::string& y) {
  return (g.from.block == x && g.to.block == y) || (g.from.block == y && g.to.block == x);
}

bool validate_arcs(const Assembly& a, const std::vector<ArcPath>& arcs, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  auto r = propagate_orientation(a);
  if (!r.orientable) return fail("assembly not transversely orientable");
  if (arcs.empty()) return fail("no arcs");
  auto leaves = boundary_leaves(a);
  std::set<Slot> covered;
  for (const auto& p : arcs) {
    if (p.blocks.empty() || p.gluings.size() + 1 != p.blocks.size()) return fail("malformed path");
    for (std::size_t i = 0; i < p.gluings.size(); ++i) {
      if (p.gluings[i] >= a.gluings().size()) return fail("gluing index out of range");
      if (!joins(a.gluings()[p.gluings[i]], p.blocks[i], p.blocks[i + 1]))
        return fail("consecutive blocks do not share gluing " + std::to_string(p.gluings[i]));
    }
    if (p.start.block != p.blocks.front() || p.end.block != p.blocks.back())
      return fail("endpoints not on end blocks");
    auto find_leaf = [&](const Slot& s) -> const BoundaryLeaf* {
      for (const auto& l : leaves) {
        if (l.slot == s) return &l;
      }
      return nullptr;
    };
    auto* ls = find_leaf(p.start);
    auto* le = find_leaf(p.end);
    if (!ls || !le) return fail("endpoint is not a free boundary leaf");
    if (ls->sign != Sign::Inward || le->sign != Sign::Outward)
      return fail("endpoints do not run inward to outward");
    covered.insert(p.start);
    covered.insert(p.end);
  }
  for (const auto& l : leaves) {
    if (!covered.count(l.slot)) return fail("boundary leaf " + to_string(l.slot) + " not covered");
  }
  return true;
}

Assembly cut_assembly(const Assembly& a, std::vector<std::size_t> cut) {
  std::sort(cut.rbegin(), cut.rend());
  Assembly out = a;
  for (auto i : cut) out = unglue(out, i);
  return out;
}

}  // namespace

bool validate_certificate(const Assembly& a, const ArcCertificate& c, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  switch (c.kind) {
    case ArcCertificate::Kind::Arcs:
      return validate_arcs(a, c.arcs, why);
    case ArcCertificate::Kind::SplitArcs: {
      for (auto i : c.cut) {
        if (i >= a.gluings().size() || a.gluings()[i].kind != GluingKind::LeafToLeaf)
          return fail("cut is not a leaf gluing");
      }
      return validate_arcs(cut_assembly(a, c.cut), c.arcs, why);
    }
    case ArcCertificate::Kind::Loop: {
      if (c.loop_block) {
        if (!a.has_block(*c.loop_block) || !is_loop_block(a.block(*c.loop_block)))
          return fail("loop block has no transverse circle");
        return true;
      }
      const auto n = c.loop_blocks.size();
      if (n == 0 || c.loop_gluings.size() != n) return fail("malformed loop");
      for (std::size_t i = 0; i < n; ++i) {
        if (c.loop_gluings[i] >= a.gluings().size()) return fail("gluing index out of range");
        if (!joins(a.gluings()[c.loop_gluings[i]], c.loop_blocks[i], c.loop_blocks[(i + 1) % n]))
          return fail("loop does not close");
      }
      return true;
    }
    case ArcCertificate::Kind::Intrinsic: {
      if (a.blocks().size() != 1) return fail("intrinsic certificate on a composite assembly");
      const auto& b = a.blocks().begin()->second;
      if (!b.is<CatalogBlock>() || !catalog_traits(b.as<CatalogBlock>().name).taut)
        return fail("block is not intrinsically taut");
      return true;
    }
  }
  return fail("unknown certificate kind");
}

// ---------------------------------------------------------------------------
// Decision

namespace {

bool circle_product(const Block& b) {
  auto* p = std::get_if<ProductBlock>(&b.kind());
  return p && p->fiber == Fiber::Circle;
}

struct Hypotheses {
  std::vector<std::string> violated;
  // interior torus leaves other than closed circle-product fibres
  bool other_interior_torus = false;
};

Hypotheses collect_hypotheses(const Assembly& a, bool orientable) {
  Hypotheses h;
  bool boundary_bad = false;
  for (const auto& s : a.free_boundaries()) {
    const auto& b = a.boundary(s);
    if (!b.is_leaf() || b.genus != 1) boundary_bad = true;
  }
  bool interior = false;
  for (const auto& g : a.gluings()) {
    if (g.kind == GluingKind::LeafToLeaf && a.boundary(g.from).genus == 1) {
      interior = true;
      h.other_interior_torus = true;
    }
  }
  bool reeb_annulus = false;
  for (const auto& [id, b] : a.blocks()) {
    if (b.flags().has_interior_torus_leaf) {
      interior = true;
      if (!circle_product(b)) h.other_interior_torus = true;
    }
    if (b.flags().has_embedded_reeb_annulus) reeb_annulus = true;
  }
  if (boundary_bad) h.violated.push_back("boundary_not_all_torus_leaves");
  if (interior) h.violated.push_back("interior_torus_leaf");
  if (reeb_annulus) h.violated.push_back("embedded_reeb_annulus");
  if (!orientable) h.violated.push_back("not_transversely_orientable");
  return h;
}

bool meets_hypotheses(const Assembly& a) {
  return propagate_orientation(a).orientable &&
         collect_hypotheses(a, true).violated.empty();
}

bool connected(const Assembly& a) {
  try {
    a.validate();
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

TautnessVerdict decide_tautness(const Assembly& a) {
  TautnessVerdict v;
  for (const auto& [id, b] : a.blocks()) {
    if (b.flags().has_reeb_component) {
      v.value = TautnessVerdict::Value::NonTaut;
      v.reason = NonTautReason::ReebComponent;
      v.trigger = id;
      return v;
    }
  }
  for (const auto& s : a.free_boundaries()) {
    const auto& b = a.boundary(s);
    bool reeb = false;
    if (auto* m = std::get_if<MixedBoundary>(&b.tangency)) reeb = m->annulus.has_reeb_band();
    if (auto* t = std::get_if<TransverseBoundary>(&b.tangency)) reeb = t->foliation.has_reeb_band();
    if (reeb) {
      v.value = TautnessVerdict::Value::NonTaut;
      v.reason = NonTautReason::ReebAnnulusOnBoundary;
      v.trigger = to_string(s);
      return v;
    }
  }
  if (a.blocks().size() == 1 && a.blocks().begin()->second.is<CatalogBlock>()) {
    const auto& [id, b] = *a.blocks().begin();
    if (catalog_traits(b.as<CatalogBlock>().name).taut) {
      v.value = TautnessVerdict::Value::Taut;
      ArcCertificate c;
      c.kind = ArcCertificate::Kind::Intrinsic;
      v.certificate = c;
    } else {
      v.value = TautnessVerdict::Value::NonTaut;
      v.reason = NonTautReason::SameOrientationBoundary;
    }
    v.trigger = id;
    return v;
  }
  if (auto hit = check_sep_torus(a)) {
    v.value = TautnessVerdict::Value::NonTaut;
    v.reason = hit->first;
    v.region = hit->second;
    return v;
  }
  const bool orientable = propagate_orientation(a).orientable;
  auto hyp = collect_hypotheses(a, orientable);
  if (!orientable) {
    v.value = TautnessVerdict::Value::HypothesesNotMet;
    v.hypotheses_violated = hyp.violated;
    return v;
  }
  if (a.is_closed()) {
    bool only_fibres = true;
    for (const auto& h : hyp.violated) {
      if (h != "interior_torus_leaf") only_fibres = false;
    }
    if (hyp.other_interior_torus) only_fibres = false;
    if (only_fibres) {
      if (auto c = loop_certificate(a)) {
        v.value = TautnessVerdict::Value::Taut;
        v.certificate = c;
        return v;
      }
    }
    // every torus leaf a leaf gluing: cut them all and argue on the rest
    bool all_edges = true;
    std::vector<std::size_t> cut;
    for (std::size_t i = 0; i < a.gluings().size(); ++i) {
      if (a.gluings()[i].kind == GluingKind::LeafToLeaf) cut.push_back(i);
    }
    for (const auto& [id, b] : a.blocks()) {
      if (b.flags().has_interior_torus_leaf) all_edges = false;
    }
    if (all_edges && !cut.empty()) {
      Assembly m = cut_assembly(a, cut);
      if (connected(m) && meets_hypotheses(m) &&
          orientation_verdict(m) == OrientationVerdict::Good) {
        v.value = TautnessVerdict::Value::Taut;
        ArcCertificate c;
        c.kind = ArcCertificate::Kind::SplitArcs;
        c.cut = cut;
        c.arcs = arc_certificates(m);
        v.certificate = c;
        return v;
      }
    }
    v.value = TautnessVerdict::Value::HypothesesNotMet;
    v.hypotheses_violated = hyp.violated;
    return v;
  }
  if (hyp.violated.empty()) {
    if (orientation_verdict(a) == OrientationVerdict::Good) {
      v.value = TautnessVerdict::Value::Taut;
      ArcCertificate c;
      c.arcs = arc_certificates(a);
      v.certificate = c;
    } else {
      v.value = TautnessVerdict::Value::NonTaut;
      v.reason = NonTautReason::SameOrientationBoundary;
    }
    return v;
  }
  v.value = TautnessVerdict::Value::HypothesesNotMet;
  v.hypotheses_violated = hyp.violated;
  return v;
}

TorusNeighborhood classify_torus_neighborhood(const TorusFoliation1D& t) {
  switch (classify_torus_foliation(t)) {
    case TorusClass::Dense: return TorusNeighborhood::TStarComponent;
    case TorusClass::CircleFoliation: return TorusNeighborhood::TComponent;
    case TorusClass::CirclesWithSpirals: return TorusNeighborhood::S1Component;
    case TorusClass::HasReebAnnuli: return TorusNeighborhood::SStarComponent;
  }
  return TorusNeighborhood::TComponent;
}

// ---------------------------------------------------------------------------
// Reeb deletion

namespace {

GluingMap map_out(const Gluing& g, const Slot& s) {
  return g.from == s ? g.map : g.map.inverse();
}

Slot far_end(const Gluing& g, const Slot& s) { return g.from == s ? g.to : g.from; }

Assembly assemble(const std::map<std::string, Block>& blocks, const std::vector<Gluing>& gs) {
  Assembly out;
  for (const auto& [id, b] : blocks) out = add_block(out, id, b);
  for (const auto& g : gs) out = glue(out, g.from, g.to, g.map);
  return out;
}

}  // namespace

Assembly delete_reeb(const Assembly& a, const std::string& reeb_id) {
  const auto& r = a.block(reeb_id);
  if (!r.is<ReebSolidTorus>()) {
    throw Error(ErrorCode::InvalidArgument, "block '" + reeb_id + "' is not a Reeb component");
  }
  const Slot rs{reeb_id, 0};
  std::set<std::string> removed;
  std::set<std::size_t> dropped;
  GluingMap acc = GluingMap::identity();  // R coordinates -> current
  Slot cur = rs;
  Slot nb;
  for (;;) {
    auto gi = a.gluing_at(cur);
    if (!gi) {
      throw Error(ErrorCode::NotAdjacentToTurbulization,
                  "Reeb component '" + reeb_id + "' has a free boundary");
    }
    const auto& g = a.gluings()[*gi];
    dropped.insert(*gi);
    acc = map_out(g, cur).compose(acc);
    nb = far_end(g, cur);
    const auto& nbb = a.block(nb.block);
    if (!nbb.is<SuspensionBlock>() || nb.block == reeb_id || removed.count(nb.block)) break;
    removed.insert(nb.block);
    cur = {nb.block, 1 - nb.idx};
  }
  const GluingMap to_r = acc.inverse();
  Block nbb = normalize(a.block(nb.block));

  std::map<std::string, Block> blocks = a.blocks();
  std::vector<Gluing> gs;
  for (std::size_t i = 0; i < a.gluings().size(); ++i) {
    if (!dropped.count(i)) gs.push_back(a.gluings()[i]);
  }
  for (const auto& id : removed) blocks.erase(id);

  if (nbb.is<Turbulization>() && nb.idx == 0 && nb.block != reeb_id) {
    Slope s = nbb.as<Turbulization>().slope;
    Slope in_r = to_r.apply(s);
    if (!(in_r == Slope::meridian())) {
      throw Error(ErrorCode::NotDeletable,
                  "turbulization circles " + to_string(s) + " map to " + to_string(in_r) +
                      " on '" + reeb_id + "', not its meridian");
    }
    Slot t1{nb.block, 1};
    std::vector<Gluing> next;
    for (const auto& g : gs) {
      if (g.from == t1 || g.to == t1) {
        next.push_back({rs, far_end(g, t1), map_out(g, t1).compose(acc)});
      } else {
        next.push_back(g);
      }
    }
    blocks.erase(nb.block);
    blocks.at(reeb_id) = make_trivial_solid_torus();
    return assemble(blocks, next);
  }
  if (nbb.is<ReebSolidTorus>() && nb.block != reeb_id) {
    Slope in_r = to_r.apply(Slope::meridian());
    if (!(in_r == Slope::meridian())) {
      throw Error(ErrorCode::NotDeletable,
                  "meridian of '" + nb.block + "' maps to " + to_string(in_r) + " on '" +
                      reeb_id + "', not its meridian");
    }
    blocks.at(reeb_id) = make_trivial_solid_torus();
    blocks.at(nb.block) = make_trivial_solid_torus();
    gs.push_back({rs, nb, acc});
    return assemble(blocks, gs);
  }
  throw Error(ErrorCode::NotAdjacentToTurbulization,
              "Reeb component '" + reeb_id + "' meets " + kind_name(a.block(nb.block)) +
                  " block '" + nb.block + "'");
}

// ---------------------------------------------------------------------------
// De-tautening

namespace {

std::string fresh_id(const Assembly& a, const std::string& base) {
  if (!a.has_block(base)) return base;
  for (int i = 2;; ++i) {
    auto id = base + std::to_string(i);
    if (!a.has_block(id)) return id;
  }
}

}  // namespace

DetautResult detaut(const Assembly& a, const std::string& site) {
  const auto& b = a.block(site);
  ProductBlock p;
  if (b.is<TrivialSolidTorus>()) {
    p = {0, Fiber::Circle, 1};
  } else if (circle_product(b)) {
    p = b.as<ProductBlock>();
  } else {
    throw Error(ErrorCode::NoTransverseLoopThroughSite,
                "no transverse circle through " + kind_name(b) + " block '" + site + "'");
  }
  auto verdict = decide_tautness(a);
  if (!verdict.is_taut()) {
    throw Error(ErrorCode::NotTaut, std::string("input is ") +
                                        std::string(to_string(verdict.value)) +
                                        "; de-tautening needs a taut assembly");
  }
  std::map<std::string, Block> blocks = a.blocks();
  std::vector<Gluing> gs = a.gluings();
  blocks.at(site) = make_product(p.genus, Fiber::Circle, p.punctures + 1, b.sign());
  auto tid = fresh_id(a, site + "_t");
  blocks.emplace(tid, make_turbulization(Sign::Outward, Slope::meridian()));
  gs.push_back({{site, p.punctures}, {tid, 1}, GluingMap::identity()});

  DetautResult out;
  out.bounded = simplify(assemble(blocks, gs));
  out.new_leaf_block = out.bounded.has_block(tid) ? tid : site;
  for (const auto& [id, blk] : out.bounded.blocks()) {
    if (blk.flags().has_reeb_component) out.reeb_formed = true;
  }
  Slot leaf{out.new_leaf_block, 0};
  Sign s = out.bounded.boundary(leaf).leaf_sign();
  auto rid = fresh_id(out.bounded, site + "_r");
  out.closed_with_reeb = glue(add_block(out.bounded, rid, make_reeb(flip(s))), leaf, {rid, 0},
                              GluingMap::identity());
  return out;
}

// ---------------------------------------------------------------------------
// Goodman-style checks

bool has_torus_leaf(const Assembly& a) {
  for (const auto& s : a.free_boundaries()) {
    const auto& b = a.boundary(s);
    if (b.is_leaf() && b.genus == 1) return true;
  }
  for (const auto& g : a.gluings()) {
    if (g.kind == GluingKind::LeafToLeaf && a.boundary(g.from).genus == 1) return true;
  }
  for (const auto& [id, b] : a.blocks()) {
    if (b.flags().has_interior_torus_leaf) return true;
  }
  return false;
}

GoodmanReport goodman_validate(const Assembly& a) {
  GoodmanReport rep;
  if (!propagate_orientation(a).orientable) return rep;
  rep.applicable = true;
  auto verdict = decide_tautness(a);

  GoodmanCheck c1{"non_taut_has_torus_leaf", verdict.is_non_taut(), true, ""};
  if (c1.applicable) {
    c1.pass = has_torus_leaf(a);
    if (!c1.pass) c1.witness = "non-taut without any torus leaf";
  }

  GoodmanCheck c2{"separating_leaves_are_tori", false, true, ""};
  bool all_leaf_boundary = true;
  auto free = a.free_boundaries();
  for (const auto& s : free) {
    if (!a.boundary(s).is_leaf()) all_leaf_boundary = false;
  }
  std::optional<Assembly> closed;
  if (free.empty()) {
    closed = a;
  } else if (all_leaf_boundary) {
    closed = double_assembly(a);
  }
  if (closed && propagate_orientation(*closed).orientable) {
    c2.applicable = true;
    for (const auto& l : interior_leaves(*closed)) {
      if (l.genus != 1 && is_separating(*closed, l)) {
        c2.pass = false;
        c2.witness = "separating genus-" + std::to_string(l.genus) + " leaf at " + to_string(l);
        break;
      }
    }
  }

  GoodmanCheck c3{"same_sign_boundary_is_tori", false, true, ""};
  if (all_leaf_boundary && !free.empty()) {
    auto leaves = boundary_leaves(a);
    bool same = std::all_of(leaves.begin(), leaves.end(),
                            [&](const BoundaryLeaf& l) { return l.sign == leaves.front().sign; });
    if (same) {
      c3.applicable = true;
      for (const auto& l : leaves) {
        if (l.genus != 1) {
          c3.pass = false;
          c3.witness = "boundary leaf " + to_string(l.slot) + " has genus " + std::to_string(l.genus);
          break;
        }
      }
    }
  }
  rep.checks = {c1, c2, c3};
  for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
  return rep;
}

// ---------------------------------------------------------------------------
// Spiraling attachment

Assembly attach_spiraling(const Assembly& a, const Slot& boundary, const std::string& new_id,
                          Sign sign, const std::string& h) {
  if (a.gluing_at(boundary)) {
    throw Error(ErrorCode::SlotOccupied, "slot " + to_string(boundary) + " is already glued");
  }
  const auto& bc = a.boundary(boundary);
  int genus = bc.genus;
  std::optional<AnnulusFoliation1D> g;
  GluingMap map = GluingMap::identity();
  if (auto* m = std::get_if<MixedBoundary>(&bc.tangency)) {
    g = m->annulus;
    sign = m->tangent_sign;
  } else if (auto* t = std::get_if<TransverseBoundary>(&bc.tangency)) {
    if (auto* c = std::get_if<CircleFoliation>(&t->foliation.variant())) {
      g = AnnulusFoliation1D::circles();
      map = frame_for(c->slope);
    } else if (auto* bd = std::get_if<Banded>(&t->foliation.variant())) {
      g = bd->annulus;
      map = frame_for(bd->base_slope);
    } else {
      throw Error(ErrorCode::KindMismatch,
                  "dense transverse torus at " + to_string(boundary) + " has no circle leaves");
    }
  } else {
    throw Error(ErrorCode::KindMismatch,
                "spiraling attaches to a mixed or transverse boundary, " + to_string(boundary) +
                    " is a leaf");
  }
  Block nb = make_reeb();
  if (g->has_reeb_band()) {
    if (genus != 1) {
      throw Error(ErrorCode::ReebBandAtHigherGenus,
                  "annulus " + to_string(*g) + " has a Reeb band on a genus-" +
                      std::to_string(genus) + " boundary");
    }
    nb = Block(GeneralizedSpiraling{*g, h, Direction::CW}, sign);
  } else {
    nb = make_spiraling({genus, derive_holonomy_from_annulus(*g), h, Direction::CW}, sign);
  }
  return glue(add_block(a, new_id, nb), {new_id, 1}, boundary, map);
}

}  // namespace foliate
