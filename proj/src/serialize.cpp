#include "foliate/serialize.hpp"

#include "foliate/error.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace foliate {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& msg) {
  throw Error(ErrorCode::ParseError, path + ": " + msg);
}

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path, "missing field '" + key + "'");
  return *it;
}

std::int64_t get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get<std::string>();
}

Rational get_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  try {
    return parse_rational(get_string(j, path));
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

Sign get_sign(const json& j, const std::string& key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) return Sign::Outward;
  auto s = get_string(*it, path + "." + key);
  if (s == "outward") return Sign::Outward;
  if (s == "inward") return Sign::Inward;
  bad(path + "." + key, "expected \"outward\" or \"inward\"");
}

std::string opt_string(const json& j, const std::string& key, const std::string& dflt,
                       const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) return dflt;
  return get_string(*it, path + "." + key);
}

Direction get_direction(const json& j, const std::string& path) {
  auto s = opt_string(j, "direction", "cw", path);
  if (s == "cw") return Direction::CW;
  if (s == "ccw") return Direction::CCW;
  bad(path + ".direction", "expected \"cw\" or \"ccw\"");
}

json dynamics_to_json(const IntervalDynamics& f) {
  json out = json::array();
  for (const auto& s : f.segments()) {
    std::string label = s.label == SegmentLabel::Fixed   ? "fixed"
                        : s.label == SegmentLabel::Above ? "above"
                                                         : "below";
    out.push_back(json::array({format_rational(s.lo), format_rational(s.hi), label}));
  }
  return out;
}

IntervalDynamics dynamics_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected a list of [lo, hi, label]");
  std::vector<Segment> segs;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto p = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 3) bad(p, "expected [lo, hi, label]");
    auto label = get_string(j[i][2], p + "[2]");
    SegmentLabel l;
    if (label == "fixed") l = SegmentLabel::Fixed;
    else if (label == "above") l = SegmentLabel::Above;
    else if (label == "below") l = SegmentLabel::Below;
    else bad(p + "[2]", "unknown label '" + label + "'");
    segs.push_back({get_rational(j[i][0], p + "[0]"), get_rational(j[i][1], p + "[1]"), l});
  }
  try {
    return IntervalDynamics(std::move(segs));
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

json annulus_to_json(const AnnulusFoliation1D& g) {
  json out = json::array();
  for (const auto& b : g.bands()) {
    json jb;
    switch (b.kind) {
      case BandKind::Circle: jb["kind"] = "circle"; break;
      case BandKind::SpiralCW: jb["kind"] = "cw"; break;
      case BandKind::SpiralCCW: jb["kind"] = "ccw"; break;
      case BandKind::Reeb: jb["kind"] = "reeb"; break;
    }
    jb["width"] = format_rational(b.width);
    if (b.kind == BandKind::Reeb) jb["polarity"] = b.reeb_polarity;
    out.push_back(jb);
  }
  return out;
}

AnnulusFoliation1D annulus_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected a list of bands");
  std::vector<Band> bands;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto p = path + "[" + std::to_string(i) + "]";
    auto kind = get_string(field(j[i], "kind", p), p + ".kind");
    Rational w = get_rational(field(j[i], "width", p), p + ".width");
    if (kind == "circle") bands.push_back(circle_band(w));
    else if (kind == "cw") bands.push_back(cw_band(w));
    else if (kind == "ccw") bands.push_back(ccw_band(w));
    else if (kind == "reeb")
      bands.push_back(reeb_band(w, static_cast<int>(get_int(field(j[i], "polarity", p),
                                                            p + ".polarity"))));
    else bad(p + ".kind", "unknown band kind '" + kind + "'");
  }
  try {
    return AnnulusFoliation1D(std::move(bands));
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

json slope_to_json(const Slope& s) { return json::array({s.p(), s.q()}); }

Slope slope_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) bad(path, "expected [p, q]");
  try {
    return Slope(get_int(j[0], path + "[0]"), get_int(j[1], path + "[1]"));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    bad(path, e.what());
  }
}

CatalogName catalog_name_from(const std::string& s, const std::string& path) {
  for (auto n : {CatalogName::WaldhausenCompact, CatalogName::WaldhausenSpiral,
                 CatalogName::WaldhausenTypeIIb}) {
    if (to_string(n) == s) return n;
  }
  bad(path, "unknown catalog block '" + s + "'");
}

}  // namespace

json block_to_json(const Block& b) {
  json params = json::object();
  std::visit(
      [&](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (!std::is_same_v<T, TrivialSolidTorus> && !std::is_same_v<T, CatalogBlock>) {
          params["sign"] = std::string(to_string(b.sign()));
        }
        if constexpr (std::is_same_v<T, Turbulization>) {
          params["slope"] = slope_to_json(k.slope);
        } else if constexpr (std::is_same_v<T, GeneralizedTurbulization>) {
          if (auto* r = std::get_if<Rational>(&k.rotation)) {
            params["rotation"] = format_rational(*r);
          } else {
            const auto& d = std::get<DenseLinear>(k.rotation);
            params["dense"] = {{"tag", d.tag}, {"approx", format_rational(d.approx)}};
          }
        } else if constexpr (std::is_same_v<T, Spiraling>) {
          params["genus"] = k.params.genus;
          params["f"] = dynamics_to_json(k.params.f);
          params["h"] = k.params.h;
          params["direction"] = k.params.direction == Direction::CW ? "cw" : "ccw";
        } else if constexpr (std::is_same_v<T, GeneralizedSpiraling>) {
          params["annulus"] = annulus_to_json(k.g);
          params["h"] = k.h;
          params["direction"] = k.direction == Direction::CW ? "cw" : "ccw";
        } else if constexpr (std::is_same_v<T, SuspensionBlock>) {
          params["f"] = dynamics_to_json(k.f);
        } else if constexpr (std::is_same_v<T, ProductBlock>) {
          params["genus"] = k.genus;
          params["fiber"] = k.fiber == Fiber::Circle ? "circle" : "interval";
          params["punctures"] = k.punctures;
        } else if constexpr (std::is_same_v<T, CatalogBlock>) {
          params["name"] = std::string(to_string(k.name));
        }
      },
      b.kind());
  return params;
}

Block block_from_json(const json& j, const std::string& path) {
  auto kind = get_string(field(j, "kind", path), path + ".kind");
  const std::string pp = path + ".params";
  json params = j.contains("params") ? j["params"] : json::object();
  if (!params.is_object()) bad(pp, "expected an object");
  Sign sign = get_sign(params, "sign", pp);
  try {
    if (kind == "reeb") return make_reeb(sign);
    if (kind == "turbulization")
      return make_turbulization(sign, slope_from_json(field(params, "slope", pp), pp + ".slope"));
    if (kind == "generalized_turbulization") {
      if (params.contains("rotation"))
        return make_generalized_turbulization(sign, get_rational(params["rotation"], pp + ".rotation"));
      const auto& d = field(params, "dense", pp);
      return make_generalized_turbulization(
          sign, DenseLinear{get_string(field(d, "tag", pp + ".dense"), pp + ".dense.tag"),
                            get_rational(field(d, "approx", pp + ".dense"), pp + ".dense.approx")});
    }
    if (kind == "spiraling") {
      SpiralingParams p;
      p.genus = static_cast<int>(get_int(field(params, "genus", pp), pp + ".genus"));
      p.f = params.contains("f") ? dynamics_from_json(params["f"], pp + ".f")
                                 : IntervalDynamics::identity();
      p.h = opt_string(params, "h", kIdentityLabel, pp);
      p.direction = get_direction(params, pp);
      return make_spiraling(p, sign);
    }
    if (kind == "generalized_spiraling") {
      return Block(GeneralizedSpiraling{annulus_from_json(field(params, "annulus", pp), pp + ".annulus"),
                                        opt_string(params, "h", kIdentityLabel, pp),
                                        get_direction(params, pp)},
                   sign);
    }
    if (kind == "suspension")
      return make_suspension(dynamics_from_json(field(params, "f", pp), pp + ".f"), sign);
    if (kind == "L") return make_lblock(sign);
    if (kind == "trivial_solid_torus") return make_trivial_solid_torus();
    if (kind == "product") {
      auto fiber = get_string(field(params, "fiber", pp), pp + ".fiber");
      if (fiber != "circle" && fiber != "interval") bad(pp + ".fiber", "expected circle or interval");
      int punctures = params.contains("punctures")
                          ? static_cast<int>(get_int(params["punctures"], pp + ".punctures"))
                          : 0;
      return make_product(static_cast<int>(get_int(field(params, "genus", pp), pp + ".genus")),
                          fiber == "circle" ? Fiber::Circle : Fiber::Interval, punctures, sign);
    }
    if (kind == "catalog")
      return make_catalog(
          catalog_name_from(get_string(field(params, "name", pp), pp + ".name"), pp + ".name"));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    bad(path, e.what());
  }
  bad(path + ".kind", "unknown block kind '" + kind + "'");
}

json assembly_to_json(const Assembly& a) {
  json out;
  out["version"] = 1;
  out["blocks"] = json::array();
  for (const auto& [id, b] : a.blocks()) {
    out["blocks"].push_back({{"id", id}, {"kind", kind_name(b)}, {"params", block_to_json(b)}});
  }
  out["gluings"] = json::array();
  for (const auto& g : a.gluings()) {
    json jg;
    jg["from"] = json::array({g.from.block, g.from.idx});
    jg["to"] = json::array({g.to.block, g.to.idx});
    jg["matrix"] = json::array({json::array({g.map.a(), g.map.b()}),
                                json::array({g.map.c(), g.map.d()})});
    if (g.tangent_contact) jg["contact"] = "tangent";
    out["gluings"].push_back(jg);
  }
  return out;
}

Assembly assembly_from_json(const json& j) {
  if (!j.is_object()) bad("$", "expected an object");
  auto version = get_int(field(j, "version", "$"), "$.version");
  if (version != 1) bad("$.version", "unsupported version " + std::to_string(version));
  const auto& blocks = field(j, "blocks", "$");
  if (!blocks.is_array()) bad("$.blocks", "expected a list");
  Assembly a;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    auto p = "blocks[" + std::to_string(i) + "]";
    auto id = get_string(field(blocks[i], "id", p), p + ".id");
    if (id.empty()) bad(p + ".id", "empty id");
    if (!ids.insert(id).second) bad(p + ".id", "duplicate id '" + id + "'");
    a = add_block(a, id, block_from_json(blocks[i], p));
  }
  json gluings = j.contains("gluings") ? j["gluings"] : json::array();
  if (!gluings.is_array()) bad("$.gluings", "expected a list");
  for (std::size_t i = 0; i < gluings.size(); ++i) {
    auto p = "gluings[" + std::to_string(i) + "]";
    auto slot = [&](const char* key) {
      const auto& s = field(gluings[i], key, p);
      auto sp = p + "." + key;
      if (!s.is_array() || s.size() != 2) bad(sp, "expected [id, index]");
      Slot out{get_string(s[0], sp + "[0]"), static_cast<int>(get_int(s[1], sp + "[1]"))};
      if (!a.has_block(out.block)) bad(sp + "[0]", "unknown block '" + out.block + "'");
      if (out.idx < 0 || out.idx >= static_cast<int>(a.block(out.block).boundaries().size()))
        bad(sp + "[1]", "boundary index " + std::to_string(out.idx) + " out of range");
      return out;
    };
    Slot from = slot("from");
    Slot to = slot("to");
    const auto& m = field(gluings[i], "matrix", p);
    auto mp = p + ".matrix";
    if (!m.is_array() || m.size() != 2 || !m[0].is_array() || m[0].size() != 2 ||
        !m[1].is_array() || m[1].size() != 2)
      bad(mp, "expected [[a,b],[c,d]]");
    std::int64_t v[4] = {get_int(m[0][0], mp), get_int(m[0][1], mp), get_int(m[1][0], mp),
                         get_int(m[1][1], mp)};
    std::int64_t det = v[0] * v[3] - v[1] * v[2];
    if (det != 1 && det != -1) bad(mp, "determinant " + std::to_string(det) + ", expected +-1");
    try {
      a = glue(a, from, to, GluingMap(v[0], v[1], v[2], v[3]));
    } catch (const Error& e) {
      bad(p, std::string(to_string(e.code())) + ": " + e.what());
    }
    if (gluings[i].contains("contact")) {
      auto c = get_string(gluings[i]["contact"], p + ".contact");
      bool tangent = a.gluings()[*a.gluing_at(from)].tangent_contact;
      if (c != "tangent" || !tangent) bad(p + ".contact", "contact does not match the boundaries");
    }
  }
  try {
    a.validate();
  } catch (const Error& e) {
    bad("$", e.what());
  }
  return a;
}

std::string emit_assembly(const Assembly& a) { return assembly_to_json(a).dump(2) + "\n"; }

Assembly parse_assembly(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size() + 1; ++i) {
      if (i > 0 && text[i - 1] == '\n') {
        ++line;
        col = 1;
      } else if (i > 0) {
        ++col;
      }
    }
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
  }
  return assembly_from_json(j);
}

Assembly load_assembly(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_assembly(ss.str());
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed for '" + path + "'");
}

// ---------------------------------------------------------------------------
// Reports

namespace {

json slot_json(const Slot& s) { return json::array({s.block, s.idx}); }

json certificate_json(const ArcCertificate& c) {
  json out;
  out["kind"] = std::string(to_string(c.kind));
  if (c.kind == ArcCertificate::Kind::Arcs || c.kind == ArcCertificate::Kind::SplitArcs) {
    out["arcs"] = json::array();
    for (const auto& p : c.arcs) {
      out["arcs"].push_back({{"start", slot_json(p.start)},
                             {"end", slot_json(p.end)},
                             {"blocks", p.blocks},
                             {"gluings", p.gluings}});
    }
    if (c.kind == ArcCertificate::Kind::SplitArcs) out["cut"] = c.cut;
  } else if (c.kind == ArcCertificate::Kind::Loop) {
    if (c.loop_block) {
      out["block"] = *c.loop_block;
    } else {
      out["blocks"] = c.loop_blocks;
      out["gluings"] = c.loop_gluings;
    }
  }
  return out;
}

}  // namespace

json verdict_to_json(const Assembly& a, const TautnessVerdict& v) {
  (void)a;
  json out;
  out["verdict"] = std::string(to_string(v.value));
  if (v.reason) out["reason"] = std::string(to_string(*v.reason));
  if (v.certificate) out["certificate"] = certificate_json(*v.certificate);
  if (!v.hypotheses_violated.empty()) out["hypotheses_violated"] = v.hypotheses_violated;
  if (v.trigger) out["trigger"] = *v.trigger;
  if (v.region) {
    json r;
    r["cut"] = json::array();
    for (const auto& l : v.region->cut) r["cut"].push_back(to_string(l));
    r["blocks"] = v.region->blocks;
    r["boundary"] = v.region->boundary;
    r["sign"] = std::string(to_string(v.region->sign));
    out["region"] = r;
  }
  return out;
}

json check_report(const Assembly& a) {
  auto v = decide_tautness(a);
  json out = verdict_to_json(a, v);
  auto orient = propagate_orientation(a);
  out["transversely_orientable"] = orient.orientable;
  json o;
  if (orient.orientable) {
    o["verdict"] = std::string(to_string(orientation_verdict(a)));
    json signing = json::object();
    for (const auto& [id, s] : orient.signing) signing[id] = s;
    o["signing"] = signing;
    json bl = json::array();
    for (const auto& l : boundary_leaves(a)) {
      bl.push_back({{"slot", slot_json(l.slot)}, {"genus", l.genus},
                    {"sign", std::string(to_string(l.sign))}});
    }
    o["boundary_leaves"] = bl;
  } else if (orient.intrinsic_witness) {
    o["witness_block"] = *orient.intrinsic_witness;
  } else {
    o["witness_cycle"] = orient.witness_cycle;
  }
  out["orientation"] = o;

  auto g = goodman_validate(a);
  json gj;
  gj["applicable"] = g.applicable;
  gj["pass"] = g.pass;
  json checks = json::array();
  for (const auto& c : g.checks) {
    json cj{{"name", c.name}, {"applicable", c.applicable}, {"pass", c.pass}};
    if (!c.witness.empty()) cj["witness"] = c.witness;
    checks.push_back(cj);
  }
  gj["checks"] = checks;
  out["goodman"] = gj;

  bool reebless = true;
  for (const auto& [id, b] : a.blocks()) {
    if (b.flags().has_reeb_component) reebless = false;
  }
  out["reebless"] = reebless;

  json leaves = json::array();
  for (const auto& s : a.free_boundaries()) {
    const auto& bc = a.boundary(s);
    if (bc.is_leaf() && bc.genus == 1) {
      leaves.push_back({{"location", "boundary " + to_string(s)}, {"separating", false}});
    }
  }
  for (const auto& l : interior_leaves(a)) {
    if (l.genus != 1) continue;
    leaves.push_back({{"location", to_string(l)}, {"separating", is_separating(a, l)}});
  }
  out["torus_leaves"] = leaves;
  return out;
}

}  // namespace foliate
