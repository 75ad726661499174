#include "foliate/catalog.hpp"
#include "foliate/error.hpp"
#include "foliate/generator.hpp"
#include "foliate/leafgeom.hpp"
#include "foliate/serialize.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <set>

using namespace foliate;

namespace {

constexpr int kInputError = 1;
constexpr int kInternalError = 2;

void print_human(const json& r) {
  std::cout << "verdict: " << r["verdict"].get<std::string>();
  if (r.contains("reason")) std::cout << " (" << r["reason"].get<std::string>() << ")";
  std::cout << "\n";
  if (r.contains("hypotheses_violated")) {
    std::cout << "hypotheses violated:";
    for (const auto& h : r["hypotheses_violated"]) std::cout << ' ' << h.get<std::string>();
    std::cout << "\n";
  }
  if (r.contains("certificate")) std::cout << "certificate: " << r["certificate"].dump() << "\n";
  if (r.contains("region")) std::cout << "region: " << r["region"].dump() << "\n";
  std::cout << "transversely orientable: " << (r["transversely_orientable"].get<bool>() ? "yes" : "no")
            << "\n";
  if (r["orientation"].contains("verdict")) {
    std::cout << "orientation: " << r["orientation"]["verdict"].get<std::string>() << "\n";
  }
  std::cout << "reebless: " << (r["reebless"].get<bool>() ? "yes" : "no") << "\n";
  std::cout << "goodman: "
            << (!r["goodman"]["applicable"].get<bool>() ? "n/a"
                : r["goodman"]["pass"].get<bool>()      ? "pass"
                                                        : "FAIL")
            << "\n";
  for (const auto& t : r["torus_leaves"]) {
    std::cout << "torus leaf: " << t["location"].get<std::string>()
              << (t["separating"].get<bool>() ? " (separating)" : "") << "\n";
  }
}

int cmd_check(const std::string& path, bool as_json) {
  auto a = load_assembly(path);
  auto r = check_report(a);
  if (as_json) {
    std::cout << r.dump(2) << "\n";
  } else {
    print_human(r);
  }
  return 0;
}

int cmd_catalog(const std::string& action, const std::string& name, const std::string& out) {
  if (action == "list") {
    for (const auto& n : catalog_names()) std::cout << n << "\n";
    return 0;
  }
  if (action != "emit") throw Error(ErrorCode::InvalidArgument, "catalog action must be list or emit");
  if (name.empty()) throw Error(ErrorCode::InvalidArgument, "catalog emit needs a name");
  auto text = emit_assembly(catalog_assembly(name));
  if (out.empty()) {
    std::cout << text;
  } else {
    save_text(out, text);
  }
  return 0;
}

void diff_summary(const Assembly& before, const Assembly& after) {
  for (const auto& [id, b] : before.blocks()) {
    if (!after.has_block(id)) {
      std::cout << "- " << id << " " << kind_name(b) << "\n";
    } else if (!(after.block(id) == b)) {
      std::cout << "~ " << id << " " << kind_name(b) << " -> " << kind_name(after.block(id)) << "\n";
    }
  }
  for (const auto& [id, b] : after.blocks()) {
    if (!before.has_block(id)) std::cout << "+ " << id << " " << kind_name(b) << "\n";
  }
  std::cout << "gluings: " << before.gluings().size() << " -> " << after.gluings().size() << "\n";
}

int cmd_rewrite(const std::string& path, bool normalize_flag, const std::vector<std::string>& deletes,
                const std::string& detaut_site, const std::string& out) {
  const auto original = load_assembly(path);
  for (const auto& [id, b] : original.blocks()) {
    if (b.is<CatalogBlock>() && (normalize_flag || !deletes.empty() || !detaut_site.empty())) {
      throw Error(ErrorCode::InvalidArgument, "catalog block '" + id + "' does not take rewrites");
    }
  }
  Assembly a = original;
  if (normalize_flag) a = normalize_assembly(a);
  for (const auto& id : deletes) {
    // a previous deletion may already have replaced this block
    if (a.has_block(id) && a.block(id).is<TrivialSolidTorus>() && original.has_block(id) &&
        original.block(id).is<ReebSolidTorus>()) {
      std::cout << "skip " << id << ": already deleted\n";
      continue;
    }
    a = delete_reeb(a, id);
  }
  if (!detaut_site.empty()) {
    auto d = detaut(a, detaut_site);
    a = d.bounded;
    std::cout << "new leaf at " << d.new_leaf_block << (d.reeb_formed ? " (Reeb component formed)" : "")
              << "\n";
  }
  diff_summary(original, a);
  save_text(out, emit_assembly(a));
  return 0;
}

int cmd_render(const std::string& figure, const std::vector<std::string>& kvs, const std::string& out) {
  std::map<std::string, std::string> params;
  for (const auto& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorCode::InvalidArgument, "parameter '" + kv + "' is not key=value");
    }
    params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  auto csv = render(figure, params, out);
  std::cout << out << "\n" << csv << "\n";
  return 0;
}

// Runs the generated corpus through the analysis invariants.
int cmd_fuzz(int count) {
  std::uint64_t seed = 1;
  if (const char* env = std::getenv("FOLIATE_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, std::string("FOLIATE_SEED is not an integer: ") + env);
    }
  }
  int failures = 0;
  auto fail = [&](int i, const std::string& what, const Assembly& a) {
    if (++failures <= 10) std::cerr << "case " << i << ": " << what << "\n" << emit_assembly(a);
  };
  for (int i = 0; i < count; ++i) {
    auto rng = rng_for(seed, static_cast<std::uint64_t>(i));
    auto h = random_hypothesis_assembly(rng, i % 4 == 0);
    auto v = decide_tautness(h);
    auto o = orientation_verdict(h);
    bool good = o == OrientationVerdict::Good || (o == OrientationVerdict::NotApplicable && h.is_closed());
    if (v.value == TautnessVerdict::Value::HypothesesNotMet) fail(i, "generator left the hypotheses", h);
    else if (v.is_taut() != good) fail(i, "verdict disagrees with orientation", h);
    else if (v.is_taut() && (!v.certificate || !validate_certificate(h, *v.certificate)))
      fail(i, "invalid certificate", h);
    auto g = random_grammar_assembly(rng);
    if (!goodman_validate(g).pass) fail(i, "goodman check failed", g);
    if (!(parse_assembly(emit_assembly(g)) == g)) fail(i, "serialization round trip", g);
  }
  std::cout << "seed " << seed << ": " << count << " cases, " << failures << " failures\n";
  return failures ? kInternalError : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"foliated 3-manifold assemblies: tautness checks, rewrites, figures"};
  app.require_subcommand(1);

  std::string check_path;
  bool check_json = false;
  auto* check = app.add_subcommand("check", "analyze an assembly file");
  check->add_option("file", check_path)->required();
  check->add_flag("--json", check_json, "machine-readable report");

  std::string cat_action, cat_name, cat_out;
  auto* cat = app.add_subcommand("catalog", "list or emit reference assemblies");
  cat->add_option("action", cat_action, "list | emit")->required();
  cat->add_option("name", cat_name);
  cat->add_option("--out", cat_out);

  std::string rw_path, rw_detaut, rw_out;
  bool rw_normalize = false;
  std::vector<std::string> rw_delete;
  auto* rw = app.add_subcommand("rewrite", "apply rewrites and write the result");
  rw->add_option("file", rw_path)->required();
  rw->add_flag("--normalize", rw_normalize);
  rw->add_option("--delete-reeb", rw_delete)->allow_extra_args(false);
  rw->add_option("--detaut", rw_detaut);
  rw->add_option("--out", rw_out)->required();

  std::string fig, fig_out;
  std::vector<std::string> fig_params;
  auto* rd = app.add_subcommand("render", "draw a figure as SVG plus CSV samples");
  rd->add_option("figure", fig)->required();
  rd->add_option("params", fig_params, "key=value ...");
  rd->add_option("--out", fig_out)->required();

  int fuzz_count = 1000;
  auto* fz = app.add_subcommand("fuzz", "random corpus self-check (seed from FOLIATE_SEED)");
  fz->add_option("--count", fuzz_count)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kInputError;
  }

  try {
    if (*check) return cmd_check(check_path, check_json);
    if (*cat) return cmd_catalog(cat_action, cat_name, cat_out);
    if (*rw) return cmd_rewrite(rw_path, rw_normalize, rw_delete, rw_detaut, rw_out);
    if (*rd) return cmd_render(fig, fig_params, fig_out);
    if (*fz) return cmd_fuzz(fuzz_count);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInternalError;
}
