#include "foliate/generator.hpp"

#include "foliate/error.hpp"

#include <string>

namespace foliate {

namespace {

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

Sign random_sign(Rng& rng) { return coin(rng) ? Sign::Outward : Sign::Inward; }

// [[e,b],[0,e']] keeps the meridian a meridian.
GluingMap fibre_map(Rng& rng) {
  int e = coin(rng) ? 1 : -1;
  int f = coin(rng) ? 1 : -1;
  return GluingMap(e, uniform(rng, -2, 2), 0, f);
}

Slope random_slope(Rng& rng) {
  for (;;) {
    int p = uniform(rng, -4, 4), q = uniform(rng, 0, 4);
    if (std::gcd(p, q) == 1) return Slope(p, q);
  }
}

std::string id(const char* base, int i) { return std::string(base) + std::to_string(i); }

}  // namespace

AnnulusFoliation1D random_annulus(Rng& rng, int max_bands, bool allow_reeb) {
  int n = uniform(rng, 1, max_bands);
  std::vector<Band> bands;
  for (int i = 0; i < n; ++i) {
    Rational w(uniform(rng, 1, 16), 16);
    int k = uniform(rng, 0, allow_reeb ? 3 : 2);
    if (k == 0 && !bands.empty() && bands.back().kind == BandKind::Circle) k = 1;
    switch (k) {
      case 0: bands.push_back(circle_band(w)); break;
      case 1: bands.push_back(cw_band(w)); break;
      case 2: bands.push_back(ccw_band(w)); break;
      default: bands.push_back(reeb_band(w, coin(rng) ? 1 : -1)); break;
    }
  }
  return AnnulusFoliation1D(std::move(bands));
}

IntervalDynamics random_dynamics(Rng& rng, int max_segments) {
  return derive_holonomy_from_annulus(random_annulus(rng, max_segments, false));
}

Block random_block(Rng& rng) {
  Sign s = random_sign(rng);
  switch (uniform(rng, 0, 11)) {
    case 0: return make_reeb(s);
    case 1: return make_turbulization(s, random_slope(rng));
    case 2: return make_generalized_turbulization(s, Rational(uniform(rng, -5, 5), uniform(rng, 1, 6)));
    case 3:
      return make_generalized_turbulization(
          s, DenseLinear{"phi" + std::to_string(uniform(rng, 0, 3)), Rational(uniform(rng, 1, 99), 64)});
    case 4:
    case 5: {
      SpiralingParams p;
      p.genus = uniform(rng, 1, 3);
      p.f = coin(rng, 0.3) ? IntervalDynamics::identity() : random_dynamics(rng);
      p.h = coin(rng) ? std::string(kIdentityLabel) : rotation_label(Rational(uniform(rng, 1, 7), 8));
      p.direction = coin(rng) ? Direction::CW : Direction::CCW;
      return make_spiraling(p, s);
    }
    case 6:
      // raw constructor so non-canonical forms reach normalize
      return Block(GeneralizedSpiraling{random_annulus(rng), kIdentityLabel,
                                        coin(rng) ? Direction::CW : Direction::CCW},
                   s);
    case 7: return make_suspension(random_dynamics(rng), s);
    case 8: return make_lblock(s);
    case 9: return make_trivial_solid_torus();
    case 10:
      if (coin(rng)) return make_product(uniform(rng, 1, 3), Fiber::Interval, 0, s);
      return make_product(uniform(rng, 0, 3), Fiber::Circle, uniform(rng, 0, 3), s);
    default:
      return make_catalog(static_cast<CatalogName>(uniform(rng, 0, 2)));
  }
}

namespace {

// Cap a transverse meridian circle boundary with a torus-leaf-bounded piece.
Assembly cap(Assembly a, const Slot& slot, int k, Rng& rng) {
  std::string cid = id("c", k);
  Sign s = random_sign(rng);
  switch (uniform(rng, 0, 2)) {
    case 0: {
      a = add_block(a, cid, make_turbulization(s, Slope::meridian()));
      return glue(a, {cid, 1}, slot, GluingMap(1, uniform(rng, -2, 2), 0, 1));
    }
    case 1: {
      a = add_block(a, cid, make_generalized_turbulization(s, Rational(uniform(rng, -4, 4), uniform(rng, 1, 4))));
      const auto& bc = a.block(cid).boundaries()[1];
      const auto& cf = std::get<CircleFoliation>(
          std::get<TransverseBoundary>(bc.tangency).foliation.variant());
      return glue(a, {cid, 1}, slot, frame_for(cf.slope).inverse());
    }
    default: {
      SpiralingParams p;
      a = add_block(a, cid, make_spiraling(p, s));
      try {
        return glue(a, {cid, 1}, slot, GluingMap::identity());
      } catch (const Error&) {
        a = remove_block(a, cid);
        a = add_block(a, cid, make_turbulization(s, Slope::meridian()));
        return glue(a, {cid, 1}, slot, GluingMap::identity());
      }
    }
  }
}

Assembly product_network(Rng& rng, bool trivial_tori) {
  Assembly a;
  int n = uniform(rng, 1, 4);
  std::vector<Slot> open;
  for (int i = 0; i < n; ++i) {
    if (i > 0 && open.empty()) break;
    int punct = uniform(rng, 1, 3);
    int genus = uniform(rng, 0, 2);
    std::string bid = id("p", i);
    a = add_block(a, bid, make_product(genus, Fiber::Circle, punct, Sign::Outward));
    std::vector<Slot> mine;
    for (int j = 0; j < punct; ++j) mine.push_back({bid, j});
    if (i > 0) {
      int pick = uniform(rng, 0, static_cast<int>(open.size()) - 1);
      a = glue(a, open[pick], mine.back(), fibre_map(rng));
      open.erase(open.begin() + pick);
      mine.pop_back();
    }
    for (auto& m : mine) open.push_back(m);
  }
  // occasional extra cycle
  while (open.size() > 2 && coin(rng, 0.3)) {
    Slot x = open.back();
    open.pop_back();
    int pick = uniform(rng, 0, static_cast<int>(open.size()) - 1);
    a = glue(a, open[pick], x, fibre_map(rng));
    open.erase(open.begin() + pick);
  }
  int k = 0;
  bool placed_v = false;
  for (std::size_t i = 0; i < open.size(); ++i) {
    bool want_v = (trivial_tori && !placed_v) || coin(rng, 0.25);
    bool closed_ok = i + 1 < open.size() || coin(rng, 0.15) || (trivial_tori && !placed_v);
    if (want_v && closed_ok) {
      std::string vid = id("v", k++);
      a = add_block(a, vid, make_trivial_solid_torus());
      a = glue(a, {vid, 0}, open[i], fibre_map(rng));
      placed_v = true;
    } else {
      a = cap(a, open[i], k++, rng);
    }
  }
  return a;
}

}  // namespace

Assembly random_hypothesis_assembly(Rng& rng, bool trivial_tori) {
  if (trivial_tori) return product_network(rng, true);
  switch (uniform(rng, 0, 9)) {
    case 0: {
      Assembly a;
      std::string tag = "phi" + std::to_string(uniform(rng, 0, 3));
      a = add_block(a, "d0", make_generalized_turbulization(random_sign(rng), DenseLinear{tag, Rational(13, 8)}));
      a = add_block(a, "d1", make_generalized_turbulization(random_sign(rng), DenseLinear{tag, Rational(13, 8)}));
      return glue(a, {"d0", 1}, {"d1", 1}, GluingMap::identity());
    }
    case 1: {
      IntervalDynamics f = IntervalDynamics::monotone(coin(rng) ? SegmentLabel::Above : SegmentLabel::Below);
      return singleton("s0", make_suspension(f, random_sign(rng)));
    }
    default:
      return product_network(rng, false);
  }
}

Assembly random_grammar_assembly(Rng& rng, int max_blocks) {
  int n = uniform(rng, 1, max_blocks);
  Assembly a;
  auto free_slots = [&](const Assembly& x) { return x.free_boundaries(); };
  auto try_glue = [&](const Assembly& x, const Slot& u, const Slot& v) -> std::optional<Assembly> {
    const auto& bu = x.boundary(u);
    const auto& bv = x.boundary(v);
    if (bu.genus != bv.genus) return std::nullopt;
    std::vector<GluingMap> cands;
    if (bu.genus == 1) {
      cands.push_back(fibre_map(rng));
      cands.push_back(GluingMap::identity());
      cands.push_back(GluingMap::swap());
      if (bu.is_transverse() && bv.is_transverse()) {
        auto fu = std::get<TransverseBoundary>(bu.tangency).foliation.variant();
        auto fv = std::get<TransverseBoundary>(bv.tangency).foliation.variant();
        auto* cu = std::get_if<CircleFoliation>(&fu);
        auto* cv = std::get_if<CircleFoliation>(&fv);
        if (cu && cv) cands.insert(cands.begin(), frame_for(cv->slope).compose(frame_for(cu->slope).inverse()));
      }
    } else {
      cands.push_back(GluingMap::identity());
    }
    for (const auto& m : cands) {
      try {
        return glue(x, u, v, m);
      } catch (const Error&) {
      }
    }
    return std::nullopt;
  };
  for (int i = 0; i < n; ++i) {
    std::string bid = id("b", i);
    for (int attempt = 0; attempt < 20; ++attempt) {
      Block b = random_block(rng);
      if (b.is<CatalogBlock>() && i > 0) continue;
      Assembly next = add_block(a, bid, b);
      if (i == 0) {
        a = next;
        break;
      }
      auto mine = std::vector<Slot>();
      auto others = std::vector<Slot>();
      for (const auto& s : free_slots(next)) (s.block == bid ? mine : others).push_back(s);
      if (mine.empty() || others.empty()) continue;
      const Slot u = mine[uniform(rng, 0, static_cast<int>(mine.size()) - 1)];
      std::optional<Assembly> done;
      for (int t = 0; t < 6 && !done; ++t) {
        done = try_glue(next, others[uniform(rng, 0, static_cast<int>(others.size()) - 1)], u);
      }
      if (done) {
        a = *done;
        break;
      }
    }
  }
  // extra gluings, self-gluings allowed
  int extra = uniform(rng, 0, 3);
  for (int e = 0; e < extra; ++e) {
    auto fs = free_slots(a);
    if (fs.size() < 2) break;
    int i = uniform(rng, 0, static_cast<int>(fs.size()) - 1);
    int j = uniform(rng, 0, static_cast<int>(fs.size()) - 1);
    if (i == j) continue;
    if (auto done = try_glue(a, fs[i], fs[j])) a = *done;
  }
  return a;
}

}  // namespace foliate
