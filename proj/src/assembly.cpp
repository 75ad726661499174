#include "foliate/assembly.hpp"

#include "foliate/error.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace foliate {

std::string to_string(const Slot& s) { return s.block + "#" + std::to_string(s.idx); }

const Block& Assembly::block(const std::string& id) const {
  auto it = blocks_.find(id);
  if (it == blocks_.end()) throw Error(ErrorCode::UnknownBlock, "unknown block '" + id + "'");
  return it->second;
}

const BoundaryComponent& Assembly::boundary(const Slot& s) const {
  return boundary_foliation(block(s.block), s.idx);
}

std::optional<std::size_t> Assembly::gluing_at(const Slot& s) const {
  for (std::size_t i = 0; i < gluings_.size(); ++i) {
    if (gluings_[i].from == s || gluings_[i].to == s) return i;
  }
  return std::nullopt;
}

std::vector<Slot> Assembly::free_boundaries() const {
  std::set<Slot> used;
  for (const auto& g : gluings_) {
    used.insert(g.from);
    used.insert(g.to);
  }
  std::vector<Slot> out;
  for (const auto& [id, b] : blocks_) {
    for (int i = 0; i < static_cast<int>(b.boundaries().size()); ++i) {
      Slot s{id, i};
      if (!used.count(s)) out.push_back(s);
    }
  }
  return out;
}

void Assembly::validate() const {
  if (blocks_.empty()) throw Error(ErrorCode::InvalidArgument, "assembly has no blocks");
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& g : gluings_) {
    block(g.from.block);
    block(g.to.block);
    adj[g.from.block].push_back(g.to.block);
    adj[g.to.block].push_back(g.from.block);
  }
  std::set<std::string> seen{blocks_.begin()->first};
  std::deque<std::string> q{blocks_.begin()->first};
  while (!q.empty()) {
    auto u = q.front();
    q.pop_front();
    for (const auto& v : adj[u]) {
      if (seen.insert(v).second) q.push_back(v);
    }
  }
  if (seen.size() != blocks_.size()) {
    for (const auto& [id, b] : blocks_) {
      if (!seen.count(id)) {
        throw Error(ErrorCode::Disconnected,
                    "assembly is not connected: block '" + id + "' is unreachable from '" +
                        blocks_.begin()->first + "'");
      }
    }
  }
}

Assembly add_block(const Assembly& a, const std::string& id, const Block& b) {
  if (id.empty()) throw Error(ErrorCode::InvalidArgument, "block id must be non-empty");
  if (a.blocks_.count(id)) {
    throw Error(ErrorCode::InvalidArgument, "duplicate block id '" + id + "'");
  }
  Assembly out = a;
  out.blocks_.emplace(id, b);
  return out;
}

Assembly singleton(const std::string& id, const Block& b) { return add_block(Assembly{}, id, b); }

namespace {

void sort_gluings(std::vector<Gluing>& gs) {
  for (auto& g : gs) {
    if (g.to < g.from) {
      std::swap(g.from, g.to);
      g.map = g.map.inverse();
    }
  }
  std::sort(gs.begin(), gs.end(),
            [](const Gluing& x, const Gluing& y) { return x.from < y.from; });
}

// Fills kind / tangent_contact and checks compatibility.
void classify_gluing(const Assembly& a, Gluing& g) {
  const auto& bf = a.boundary(g.from);
  const auto& bt = a.boundary(g.to);
  auto where = to_string(g.from) + " -> " + to_string(g.to);
  if (bf.genus != bt.genus) {
    throw Error(ErrorCode::KindMismatch, "genus mismatch gluing " + where);
  }
  if (bf.is_leaf() != bt.is_leaf()) {
    throw Error(ErrorCode::KindMismatch, "leaf glued to a non-leaf boundary at " + where);
  }
  if (bf.genus != 1 && !(g.map == GluingMap::identity())) {
    throw Error(ErrorCode::KindMismatch,
                "higher-genus boundaries glue only by the identity at " + where);
  }
  g.tangent_contact = bf.is_mixed() && bt.is_mixed();
  if (bf.is_leaf()) {
    g.kind = GluingKind::LeafToLeaf;
    return;
  }
  g.kind = GluingKind::TransverseToTransverse;
  if (bf.genus != 1) {
    if (!g.tangent_contact) {
      throw Error(ErrorCode::KindMismatch, "higher-genus transverse gluing at " + where);
    }
    if (!(std::get<MixedBoundary>(bf.tangency).annulus ==
          std::get<MixedBoundary>(bt.tangency).annulus)) {
      throw Error(ErrorCode::SlopeMismatch, "annulus foliations differ at " + where);
    }
    return;
  }
  auto ff = transverse_foliation(bf);
  auto ft = transverse_foliation(bt);
  auto mapped = ff->mapped(g.map);
  if (!(mapped == *ft)) {
    throw Error(ErrorCode::SlopeMismatch, "transverse foliations do not correspond at " +
                                              where + ": " + to_string(mapped) + " vs " +
                                              to_string(*ft) + " under " + to_string(g.map));
  }
}

}  // namespace

Assembly glue(const Assembly& a, const Slot& from, const Slot& to, const GluingMap& map) {
  a.boundary(from);
  a.boundary(to);
  if (from == to) {
    throw Error(ErrorCode::SlotOccupied, "cannot glue " + to_string(from) + " to itself");
  }
  for (const auto& s : {from, to}) {
    if (a.gluing_at(s)) {
      throw Error(ErrorCode::SlotOccupied, "slot " + to_string(s) + " is already glued");
    }
  }
  Gluing g{from, to, map};
  classify_gluing(a, g);
  Assembly out = a;
  out.gluings_.push_back(g);
  sort_gluings(out.gluings_);
  return out;
}

Assembly unglue(const Assembly& a, std::size_t gluing_index) {
  if (gluing_index >= a.gluings_.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "gluing index " + std::to_string(gluing_index) + " out of range");
  }
  Assembly out = a;
  out.gluings_.erase(out.gluings_.begin() + static_cast<std::ptrdiff_t>(gluing_index));
  return out;
}

Assembly replace_block(const Assembly& a, const std::string& id, const Block& b) {
  const auto& old = a.block(id);
  if (old.boundaries().size() != b.boundaries().size()) {
    throw Error(ErrorCode::InvalidArgument, "replacement changes boundary count of '" + id + "'");
  }
  Assembly out = a;
  out.blocks_.at(id) = b;
  return out;
}

Assembly remove_block(const Assembly& a, const std::string& id) {
  a.block(id);
  Assembly out = a;
  out.blocks_.erase(id);
  std::erase_if(out.gluings_,
                [&](const Gluing& g) { return g.from.block == id || g.to.block == id; });
  return out;
}

std::string to_string(const Assembly& a) {
  std::ostringstream os;
  for (const auto& [id, b] : a.blocks()) os << id << ": " << to_string(b) << "\n";
  for (const auto& g : a.gluings()) {
    os << to_string(g.from) << " -- " << to_string(g.to) << " " << to_string(g.map)
       << (g.kind == GluingKind::LeafToLeaf ? " leaf" : " transverse")
       << (g.tangent_contact ? " tangent" : "") << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Interior leaves and separation

std::vector<InteriorLeaf> interior_leaves(const Assembly& a) {
  std::vector<InteriorLeaf> out;
  for (std::size_t i = 0; i < a.gluings().size(); ++i) {
    const auto& g = a.gluings()[i];
    if (g.kind == GluingKind::LeafToLeaf) {
      out.push_back({i, std::nullopt, a.boundary(g.from).genus});
    }
  }
  for (const auto& [id, b] : a.blocks()) {
    if (auto s = b.interior_leaves()) out.push_back({std::nullopt, id, s->genus});
  }
  return out;
}

std::string to_string(const InteriorLeaf& l) {
  if (l.gluing) return "gluing " + std::to_string(*l.gluing);
  return "block " + *l.block;
}

namespace {

struct MultiGraph {
  int n = 0;
  // (u, v) per edge id
  std::vector<std::pair<int, int>> edges;
};

struct SplitGraph {
  MultiGraph g;
  std::map<Slot, int> slot_node;
  std::map<std::string, int> virtual_edge;  // block id -> edge id
};

SplitGraph build_split_graph(const Assembly& a) {
  SplitGraph sg;
  std::map<std::string, std::pair<int, int>> nodes;
  for (const auto& [id, b] : a.blocks()) {
    auto split = b.interior_leaves();
    int n0 = sg.g.n++;
    int n1 = n0;
    if (split && !split->self_loop) n1 = sg.g.n++;
    nodes[id] = {n0, n1};
    for (int i = 0; i < static_cast<int>(b.boundaries().size()); ++i) {
      bool side1 = split && std::count(split->side1.begin(), split->side1.end(), i);
      sg.slot_node[{id, i}] = side1 ? n1 : n0;
    }
  }
  for (const auto& gl : a.gluings()) {
    sg.g.edges.emplace_back(sg.slot_node.at(gl.from), sg.slot_node.at(gl.to));
  }
  for (const auto& [id, b] : a.blocks()) {
    if (b.interior_leaves()) {
      sg.virtual_edge[id] = static_cast<int>(sg.g.edges.size());
      sg.g.edges.emplace_back(nodes[id].first, nodes[id].second);
    }
  }
  return sg;
}

// Tarjan low-link bridge detection on a multigraph.
std::vector<bool> bridges(const MultiGraph& g) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    auto [u, v] = g.edges[e];
    adj[u].push_back({v, e});
    if (u != v) adj[v].push_back({u, e});
  }
  std::vector<int> tin(g.n, -1), low(g.n, 0);
  std::vector<bool> is_bridge(g.edges.size(), false);
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int u, int parent_edge) {
    tin[u] = low[u] = timer++;
    for (auto [v, e] : adj[u]) {
      if (e == parent_edge) continue;
      if (tin[v] != -1) {
        low[u] = std::min(low[u], tin[v]);
      } else {
        dfs(v, e);
        low[u] = std::min(low[u], low[v]);
        if (low[v] > tin[u]) is_bridge[e] = true;
      }
    }
  };
  for (int u = 0; u < g.n; ++u) {
    if (tin[u] == -1) dfs(u, -1);
  }
  return is_bridge;
}

}  // namespace

bool is_separating(const Assembly& a, const InteriorLeaf& leaf) {
  auto sg = build_split_graph(a);
  int edge = -1;
  if (leaf.gluing) {
    if (*leaf.gluing >= a.gluings().size() ||
        a.gluings()[*leaf.gluing].kind != GluingKind::LeafToLeaf) {
      throw Error(ErrorCode::UnknownLeaf, "no leaf at " + to_string(leaf));
    }
    edge = static_cast<int>(*leaf.gluing);
  } else if (leaf.block) {
    auto it = sg.virtual_edge.find(*leaf.block);
    if (it == sg.virtual_edge.end()) {
      throw Error(ErrorCode::UnknownLeaf, "no interior leaf in " + to_string(leaf));
    }
    edge = it->second;
  } else {
    throw Error(ErrorCode::UnknownLeaf, "empty leaf reference");
  }
  return bridges(sg.g)[edge];
}

// ---------------------------------------------------------------------------
// Orientation

OrientationConstraint orientation_constraint(const Assembly& a, std::size_t i) {
  const auto& g = a.gluings().at(i);
  OrientationConstraint c{i, g.from.block, g.to.block, 0};
  if (g.kind == GluingKind::LeafToLeaf || g.tangent_contact) {
    int cu = value(*contact_sign(a.boundary(g.from)));
    int cv = value(*contact_sign(a.boundary(g.to)));
    c.parity = (-cu * cv == 1) ? 0 : 1;
  }
  return c;
}

OrientationResult propagate_orientation(const Assembly& a) {
  OrientationResult res;
  for (const auto& [id, b] : a.blocks()) {
    if (!b.flags().transversely_orientable) {
      res.intrinsic_witness = id;
      return res;
    }
  }
  std::map<std::string, std::vector<OrientationConstraint>> adj;
  for (std::size_t i = 0; i < a.gluings().size(); ++i) {
    auto c = orientation_constraint(a, i);
    adj[c.u].push_back(c);
    if (c.u != c.v) adj[c.v].push_back(c);
  }
  std::map<std::string, int> sign;
  std::map<std::string, std::optional<std::size_t>> parent_edge;
  std::map<std::string, std::string> parent;
  for (const auto& [root, b] : a.blocks()) {
    if (sign.count(root)) continue;
    sign[root] = 1;
    parent_edge[root] = std::nullopt;
    std::deque<std::string> q{root};
    while (!q.empty()) {
      auto u = q.front();
      q.pop_front();
      for (const auto& c : adj[u]) {
        const auto& v = c.u == u ? c.v : c.u;
        int want = c.parity ? -sign[u] : sign[u];
        if (!sign.count(v)) {
          sign[v] = want;
          parent_edge[v] = c.gluing;
          parent[v] = u;
          q.push_back(v);
        } else if (sign[v] != want) {
          // odd cycle: tree paths to the root plus this edge
          auto path_up = [&](std::string x) {
            std::vector<std::pair<std::string, std::size_t>> p;
            while (parent_edge[x]) {
              p.push_back({x, *parent_edge[x]});
              x = parent[x];
            }
            return p;
          };
          auto pu = path_up(u);
          auto pv = path_up(v);
          while (!pu.empty() && !pv.empty() && pu.back().second == pv.back().second) {
            pu.pop_back();
            pv.pop_back();
          }
          for (auto& [node, e] : pu) res.witness_cycle.push_back(e);
          for (auto it = pv.rbegin(); it != pv.rend(); ++it) res.witness_cycle.push_back(it->second);
          res.witness_cycle.push_back(c.gluing);
          return res;
        }
      }
    }
  }
  res.orientable = true;
  res.signing = std::move(sign);
  return res;
}

std::vector<std::map<std::string, int>> all_signings(const Assembly& a) {
  auto r = propagate_orientation(a);
  if (!r.orientable) return {};
  // one free flip per connected component
  std::map<std::string, std::string> comp;
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& g : a.gluings()) {
    adj[g.from.block].push_back(g.to.block);
    adj[g.to.block].push_back(g.from.block);
  }
  std::vector<std::string> roots;
  for (const auto& [id, b] : a.blocks()) {
    if (comp.count(id)) continue;
    roots.push_back(id);
    comp[id] = id;
    std::deque<std::string> q{id};
    while (!q.empty()) {
      auto u = q.front();
      q.pop_front();
      for (const auto& v : adj[u]) {
        if (!comp.count(v)) {
          comp[v] = id;
          q.push_back(v);
        }
      }
    }
  }
  std::vector<std::map<std::string, int>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << roots.size()); ++mask) {
    auto s = r.signing;
    for (std::size_t k = 0; k < roots.size(); ++k) {
      if (mask >> k & 1) {
        for (auto& [id, v] : s) {
          if (comp[id] == roots[k]) v = -v;
        }
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<BoundaryLeaf> boundary_leaves(const Assembly& a) {
  auto r = propagate_orientation(a);
  if (!r.orientable) {
    throw Error(ErrorCode::NotOrientable, "assembly is not transversely orientable");
  }
  std::vector<BoundaryLeaf> out;
  for (const auto& s : a.free_boundaries()) {
    const auto& b = a.boundary(s);
    if (!b.is_leaf()) continue;
    out.push_back({s, b.genus, sign_of(r.signing.at(s.block) * value(b.leaf_sign()))});
  }
  return out;
}

Assembly double_assembly(const Assembly& a) {
  auto free = a.free_boundaries();
  for (const auto& s : free) {
    if (!a.boundary(s).is_leaf()) {
      throw Error(ErrorCode::TransverseBoundaryPresent,
                  "cannot double: free boundary " + to_string(s) + " is not a leaf");
    }
  }
  Assembly out = a;
  for (const auto& [id, b] : a.blocks()) out = add_block(out, id + "~", b.flipped());
  for (const auto& g : a.gluings()) {
    out = glue(out, {g.from.block + "~", g.from.idx}, {g.to.block + "~", g.to.idx}, g.map);
  }
  for (const auto& s : free) out = glue(out, s, {s.block + "~", s.idx}, GluingMap::identity());
  return out;
}

GluingMap frame_for(const Slope& s) {
  // extended Euclid: p*y - q*x = 1
  std::int64_t p = s.p(), q = s.q();
  std::int64_t old_r = p, r = q, old_s = 1, s1 = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t k = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - k * r);
    std::tie(old_s, s1) = std::make_pair(s1, old_s - k * s1);
    std::tie(old_t, t) = std::make_pair(t, old_t - k * t);
  }
  // p*old_s + q*old_t = old_r = +-1
  std::int64_t y = old_s * old_r;
  std::int64_t x = -old_t * old_r;
  return GluingMap(p, x, q, y);
}

// ---------------------------------------------------------------------------
// Rewrites on assemblies

namespace {

// Map taking coordinates of `from_block` side to the other side of gluing g.
GluingMap map_out_of(const Gluing& g, const std::string& block, int idx) {
  if (g.from.block == block && g.from.idx == idx) return g.map;
  return g.map.inverse();
}

Slot other_end(const Gluing& g, const Slot& s) { return g.from == s ? g.to : g.from; }

struct Rebuild {
  std::map<std::string, Block> blocks;
  std::vector<Gluing> gluings;  // raw, re-glued through glue()
};

Assembly rebuild(const Rebuild& r) {
  Assembly out;
  for (const auto& [id, b] : r.blocks) out = add_block(out, id, b);
  for (const auto& g : r.gluings) out = glue(out, g.from, g.to, g.map);
  return out;
}

Rebuild unpack(const Assembly& a) { return {a.blocks(), a.gluings()}; }

bool simplify_step(const Assembly& a, Assembly& out) {
  // P(0, circle, 1) is a trivially foliated solid torus.
  for (const auto& [id, b] : a.blocks()) {
    if (auto* p = std::get_if<ProductBlock>(&b.kind());
        p && p->fiber == Fiber::Circle && p->genus == 0 && p->punctures == 1) {
      auto r = unpack(a);
      r.blocks.at(id) = make_trivial_solid_torus();
      out = rebuild(r);
      return true;
    }
  }
  // Solid torus capping a puncture of a circle product.
  for (std::size_t i = 0; i < a.gluings().size(); ++i) {
    const auto& g = a.gluings()[i];
    for (const auto& [vs, ps] : {std::pair{g.from, g.to}, std::pair{g.to, g.from}}) {
      const auto& v = a.block(vs.block);
      const auto& pb = a.block(ps.block);
      auto* p = std::get_if<ProductBlock>(&pb.kind());
      if (!v.is<TrivialSolidTorus>() || !p || p->fiber != Fiber::Circle || vs.block == ps.block)
        continue;
      if (!(map_out_of(g, vs.block, vs.idx).apply(Slope::meridian()) == Slope::meridian()))
        continue;
      auto r = unpack(a);
      r.blocks.erase(vs.block);
      r.blocks.at(ps.block) = make_product(p->genus, p->fiber, p->punctures - 1, pb.sign());
      r.gluings.erase(r.gluings.begin() + static_cast<std::ptrdiff_t>(i));
      for (auto& h : r.gluings) {
        for (Slot* s : {&h.from, &h.to}) {
          if (s->block == ps.block && s->idx > ps.idx) --s->idx;
        }
      }
      out = rebuild(r);
      return true;
    }
  }
  // Solid torus plus a turbulization whose circles are its meridians.
  for (std::size_t i = 0; i < a.gluings().size(); ++i) {
    const auto& g = a.gluings()[i];
    for (const auto& [vs, ts] : {std::pair{g.from, g.to}, std::pair{g.to, g.from}}) {
      const auto& v = a.block(vs.block);
      const auto& tb = a.block(ts.block);
      if (!v.is<TrivialSolidTorus>() || !tb.is<Turbulization>() || ts.idx != 1) continue;
      GluingMap t_to_v = map_out_of(g, ts.block, ts.idx);
      if (!(t_to_v.apply(tb.as<Turbulization>().slope) == Slope::meridian())) continue;
      auto r = unpack(a);
      r.gluings.erase(r.gluings.begin() + static_cast<std::ptrdiff_t>(i));
      if (auto j = a.gluing_at({ts.block, 0})) {
        const auto& h = a.gluings()[*j];
        Slot far = other_end(h, {ts.block, 0});
        GluingMap m = map_out_of(h, ts.block, 0).compose(t_to_v.inverse());
        std::erase(r.gluings, h);
        r.gluings.push_back({{vs.block, 0}, far, m});
      }
      r.blocks.erase(ts.block);
      r.blocks.at(vs.block) = make_reeb(tb.sign());
      out = rebuild(r);
      return true;
    }
  }
  return false;
}

}  // namespace

Assembly simplify(const Assembly& a) {
  Assembly cur = a;
  Assembly next;
  while (simplify_step(cur, next)) cur = next;
  return cur;
}

Assembly normalize_assembly(const Assembly& a) {
  auto r = unpack(a);
  for (auto& [id, b] : r.blocks) b = normalize(b);
  return rebuild(r);
}

}  // namespace foliate
