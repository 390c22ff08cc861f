// Command-line surface for twisted (skew) group-ring codes: load a crossed
// system from JSON or a named preset, run per-system analyses, or run the
// whole verification catalog.
//
// exit codes: 0 ok, 1 violated invariant, 2 input/validation error,
//             3 budget exceeded

#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gring/abelianize.hpp"
#include "gring/catalog.hpp"
#include "gring/checkable.hpp"
#include "gring/codes.hpp"
#include "gring/hatgroup.hpp"
#include "gring/json_io.hpp"

using nlohmann::json;
using namespace gring;

namespace {

struct CommonOpts {
  std::string system_file;
  std::string preset;
  std::string format = "json";
  uint64_t budget = 0;  // 0 = module default
  int jobs = 1;
  uint64_t seed = 12345;
  bool verify = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_system = true) {
  if (needs_system) {
    cmd->add_option("--system", o.system_file, "crossed-system JSON file");
    cmd->add_option("--preset", o.preset, "named catalog system (see `gring presets`)");
  }
  cmd->add_option("--format", o.format, "json|text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--budget", o.budget, "search/enumeration budget override");
  cmd->add_option("--jobs", o.jobs, "worker threads for sweeps");
  cmd->add_option("--seed", o.seed, "seed for randomized runs");
  cmd->add_flag("--verify", o.verify, "re-verify reported witnesses independently");
}

SystemPtr resolve_system(const CommonOpts& o) {
  if (!o.system_file.empty()) return load_system_file(o.system_file);
  if (!o.preset.empty()) return catalog_system(o.preset);
  fail(Error::Kind::InvalidArgument, "provide --system FILE or --preset NAME");
}

void emit(const CommonOpts& o, const json& j, const std::string& text) {
  if (o.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_validate(const CommonOpts& o) {
  SystemPtr sys = resolve_system(o);
  ValidationReport rep = validate_crossed_system(*sys);
  std::ostringstream text;
  text << sys->name << ": " << (rep.ok() ? "valid" : "INVALID") << ", " << rep.violations.size() << " violations\n";
  for (const auto& v : rep.violations) text << "  condition " << v.condition << ": " << v.detail << "\n";
  emit(o, to_json(rep), text.str());
  return rep.ok() ? 0 : 2;
}

int cmd_ring_info(const CommonOpts& o) {
  SystemPtr sys = resolve_system(o);
  ValidationReport rep = validate_crossed_system(*sys);
  json j = {{"name", sys->name},
            {"q", sys->field->q()},
            {"p", sys->field->p()},
            {"m", sys->field->m()},
            {"group", sys->group->name()},
            {"group_order", sys->n()},
            {"dim_p", sys->dim_p()},
            {"twisted_only", sys->twisted_only},
            {"valid", rep.ok()}};
  std::ostringstream text;
  text << sys->name << ": |G|=" << sys->n() << ", q=" << sys->field->q() << ", dim_p=" << sys->dim_p()
       << (sys->twisted_only ? ", sigma trivial" : ", skew") << (rep.ok() ? ", valid" : ", INVALID") << "\n";
  emit(o, j, text.str());
  return rep.ok() ? 0 : 2;
}

int cmd_hat_report(const CommonOpts& o) {
  SystemPtr sys = resolve_system(o);
  TransferReport rep = hat_transfer_report(sys);
  std::ostringstream text;
  text << "|G^|=" << rep.order << " p-nilpotent G/G^: " << rep.p_nilpotent_G << "/" << rep.p_nilpotent_hat
       << " cyclic-Sylow G/G^: " << rep.sylow_cyclic_G << "/" << rep.sylow_cyclic_hat
       << " agree: " << rep.lemma1_agrees << "," << rep.lemma2_agrees << "\n";
  emit(o, to_json(rep), text.str());
  return rep.lemma1_agrees && rep.lemma2_agrees ? 0 : 1;
}

Side parse_side(const std::string& s) {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  if (s == "two" || s == "two-sided") return Side::TwoSided;
  fail(Error::Kind::InvalidArgument, "side must be left|right|two");
}

int cmd_ideals(const CommonOpts& o, const std::string& side_s, bool all) {
  SystemPtr sys = resolve_system(o);
  Side side = parse_side(side_s);
  uint64_t budget = o.budget ? o.budget : 1'000'000;
  auto ideals = all ? enumerate_all_ideals(sys, side, budget) : enumerate_principal_ideals(sys, side, budget);
  json rows = json::array();
  std::ostringstream text;
  text << ideals.size() << " " << side_name(side) << " ideals\n";
  for (const auto& h : ideals) {
    json row = {{"dim_p", h.dim_p}, {"k_linear", h.k_linear}, {"side", side_name(h.side)}};
    if (h.k_linear) row["dim_K"] = h.dim_K;
    json basis = json::array();
    for (const auto& r : h.basis.rows()) basis.push_back(elem_from_fp(sys, r).coeffs);
    row["basis"] = basis;
    rows.push_back(std::move(row));
    text << "  dim_p " << h.dim_p << (h.k_linear ? " (dim_K " + std::to_string(h.dim_K) + ")" : "") << "\n";
  }
  emit(o, json{{"system", sys->name}, {"count", ideals.size()}, {"ideals", rows}}, text.str());
  return 0;
}

int cmd_distance(const CommonOpts& o, std::vector<uint32_t> generator) {
  SystemPtr sys = resolve_system(o);
  uint64_t budget = o.budget ? o.budget : 10'000'000;
  if (generator.empty()) fail(Error::Kind::InvalidArgument, "provide --generator codes");
  if (static_cast<int>(generator.size()) != sys->n()) fail(Error::Kind::InvalidArgument, "generator length != |G|");
  RingElem v{sys, generator};
  LinearCode code = code_from_ideal(principal_ideal(v, Side::Right));
  code.params.d = min_distance(code, budget);
  json j = code_to_json(code, generator);
  std::ostringstream text;
  text << "[" << code.params.n << ", " << (code.params.k >= 0 ? std::to_string(code.params.k) : "k_p=" + std::to_string(code.params.k_p))
       << ", " << code.params.d << "]\n";
  emit(o, j, text.str());
  return 0;
}

int cmd_bound(const CommonOpts& o, bool all_elements, bool all_principal, std::vector<uint32_t> generator) {
  SystemPtr sys = resolve_system(o);
  json rows = json::array();
  std::ostringstream text;
  bool violated = false;
  if (all_elements) {
    for_each_element(sys, [&](const RingElem& f) {
      if (f.is_zero()) return true;
      BoundReport b = bound_report(f);
      if (!b.holds) violated = true;
      rows.push_back(to_json(b));
      return true;
    });
    text << rows.size() << " elements checked\n";
  } else if (all_principal) {
    uint64_t budget = o.budget ? o.budget : 1'000'000;
    for (const auto& ideal : enumerate_principal_ideals(sys, Side::Right, budget)) {
      if (ideal.dim_p == 0) continue;
      if (!ideal.k_linear) {
        rows.push_back(json{{"skipped", "not K-linear"}, {"dim_p", ideal.dim_p}});
        continue;
      }
      LinearCode code = code_from_ideal(ideal);
      code.params.d = min_distance(code);
      BoundReport b = bound_report(code);
      if (!b.holds || !b.amgm_holds) violated = true;
      rows.push_back(to_json(b));
    }
    text << rows.size() << " principal-ideal codes checked\n";
  } else {
    if (generator.empty()) fail(Error::Kind::InvalidArgument, "provide --generator, --all-elements or --all-principal");
    RingElem v{sys, generator};
    BoundReport b = bound_report(v);
    if (!b.holds) violated = true;
    rows.push_back(to_json(b));
    text << "support " << b.support << " rank " << b.rank << " product " << b.product << " holds " << b.holds << "\n";
  }
  text << (violated ? "BOUND VIOLATED\n" : "bound holds on every row\n");
  emit(o, json{{"system", sys->name}, {"rows", rows}, {"violated", violated}}, text.str());
  return violated ? 1 : 0;
}

int cmd_checkable(const CommonOpts& o) {
  SystemPtr sys = resolve_system(o);
  uint64_t budget = o.budget ? o.budget : 1'000'000;
  CheckableScan s = code_checkable_scan(sys, budget);
  bool verify_ok = true;
  if (o.verify) {
    // recheck each witness: Ann_r(witness) must equal the scanned ideal
    auto ideals = enumerate_all_ideals(sys, Side::Right, budget);
    for (size_t i = 0; i < ideals.size() && i < s.rows.size(); ++i)
      if (s.rows[i].witness) {
        RingElem v{sys, *s.rows[i].witness};
        verify_ok = verify_ok && annihilator(v, Side::Right).basis == ideals[i].basis;
      }
  }
  json j = to_json(s);
  if (o.verify) j["witnesses_reverified"] = verify_ok;
  std::ostringstream text;
  text << sys->name << ": hypothesis " << (s.hypothesis_holds ? "holds" : "fails") << ", all_checkable "
       << s.all_checkable << ", cross-consistent " << s.cross_consistent << "\n";
  emit(o, j, text.str());
  if (!s.proposition_ok || !s.cross_consistent || !verify_ok) return 1;
  return 0;
}

int cmd_abelian(const CommonOpts& o, int max_dim) {
  SystemPtr sys = resolve_system(o);
  uint64_t budget = o.budget ? o.budget : 10'000'000;
  json rows = json::array();
  std::ostringstream text;
  int stalls = 0;
  for (const auto& ideal : enumerate_all_ideals(sys, Side::TwoSided)) {
    if (!ideal.k_linear || ideal.dim_K < 1 || ideal.dim_K > max_dim) continue;
    ReduceResult red = abelian_reduce(ideal, budget);
    bool verified = red.ok && verify_reduction(ideal, red);
    if (!red.ok) ++stalls;
    json row = to_json(red);
    row["dim_K"] = ideal.dim_K;
    row["verified"] = verified;
    rows.push_back(std::move(row));
    text << "dim " << ideal.dim_K << ": " << (red.ok ? "reduced to " + red.final_sys->group->name() : "STALLED")
         << (verified ? " (verified)" : "") << "\n";
  }
  emit(o, json{{"system", sys->name}, {"ideals", rows}, {"stalls", stalls}}, text.str());
  return stalls ? 1 : 0;
}

int cmd_extremal(const CommonOpts& o) {
  SystemPtr sys = resolve_system(o);
  uint64_t budget = o.budget ? o.budget : 1'000'000;
  json rows = json::array();
  std::ostringstream text;
  bool failures = false;
  for (const auto& ideal : enumerate_principal_ideals(sys, Side::Right, budget)) {
    if (ideal.dim_p == 0 || !ideal.k_linear) continue;
    LinearCode code = code_from_ideal(ideal);
    code.params.d = min_distance(code);
    bool extremal = static_cast<long long>(code.params.d) * code.params.k == code.params.n;
    json row = {{"n", code.params.n}, {"k", code.params.k}, {"d", code.params.d}, {"extremal", extremal}};
    if (extremal) {
      try {
        ExtremalWitness w = extremal_decompose(code);
        row["witness"] = {{"c", w.c.coeffs}, {"H", w.H}};
      } catch (const Error& e) {
        row["error"] = e.what();
        failures = true;
      }
    }
    rows.push_back(std::move(row));
  }
  text << rows.size() << " principal-ideal codes listed\n";
  emit(o, json{{"system", sys->name}, {"codes", rows}}, text.str());
  return failures ? 1 : 0;
}

int cmd_search(const CommonOpts& o, int min_d, std::vector<int> target) {
  SystemPtr sys = resolve_system(o);
  uint64_t budget = o.budget ? o.budget : 1'000'000;
  SearchFilter filter;
  filter.min_d = min_d;
  if (!target.empty()) {
    if (target.size() != 3) fail(Error::Kind::InvalidArgument, "--target needs n,k_p,d");
    CodeParams t;
    t.n = target[0];
    t.k_p = target[1];
    t.d = target[2];
    filter.target = t;
  }
  auto hits = search_codes(sys, filter, budget, o.jobs);
  json rows = json::array();
  std::ostringstream text;
  for (const auto& h : hits) {
    rows.push_back({{"n", h.params.n},
                    {"k", h.params.k >= 0 ? json(h.params.k) : json(nullptr)},
                    {"k_p", h.params.k_p},
                    {"d", h.params.d},
                    {"k_linear", h.k_linear},
                    {"generator", h.generator}});
    text << "[" << h.params.n << ", k_p " << h.params.k_p << ", " << h.params.d << "]"
         << (h.k_linear ? "" : " (F_p-linear only)") << "\n";
  }
  emit(o, json{{"system", sys->name}, {"codes", rows}}, text.str());
  return 0;
}

int cmd_presets(const CommonOpts& o) {
  json rows = json::array();
  std::ostringstream text;
  for (const auto& e : catalog()) {
    rows.push_back({{"name", e.name}, {"order", e.group_order}, {"skew", e.skew}});
    text << e.name << " (|G|=" << e.group_order << (e.skew ? ", skew" : "") << ")\n";
  }
  emit(o, rows, text.str());
  return 0;
}

int cmd_catalog(const CommonOpts& o) {
  auto results = run_acceptance(o.seed);
  json rows = json::array();
  bool gating_fail = false;
  std::ostringstream text;
  for (const auto& r : results) {
    rows.push_back({{"id", r.id},
                    {"name", r.name},
                    {"pass", r.pass},
                    {"gating", r.gating},
                    {"detail", r.detail},
                    {"seconds", r.seconds}});
    text << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << (r.gating ? "" : " (non-gating)") << " — "
         << r.name << "\n    " << r.detail << "\n";
    if (r.gating && !r.pass) gating_fail = true;
  }
  emit(o, json{{"criteria", rows}, {"ok", !gating_fail}}, text.str());
  return gating_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twisted (skew) group-ring codes"};
  app.require_subcommand(1);
  CommonOpts o;

  auto* validate = app.add_subcommand("validate", "check the crossed-system identities");
  add_common(validate, o);
  auto* ring_info = app.add_subcommand("ring-info", "basic ring facts");
  add_common(ring_info, o);
  auto* hat = app.add_subcommand("hat-report", "hat-group transfer report");
  add_common(hat, o);

  auto* ideals = app.add_subcommand("ideals", "enumerate ideals");
  add_common(ideals, o);
  std::string side_s = "right";
  bool all_ideals = false;
  ideals->add_option("--side", side_s, "left|right|two");
  ideals->add_flag("--all", all_ideals, "close principal ideals under sums");

  auto* distance = app.add_subcommand("distance", "parameters of a principal-ideal code");
  add_common(distance, o);
  std::vector<uint32_t> generator;
  distance->add_option("--generator", generator, "field codes of the generator")->delimiter(',');

  auto* bound = app.add_subcommand("bound", "support-rank / d*dim bound reports");
  add_common(bound, o);
  bool all_elements = false, all_principal = false;
  std::vector<uint32_t> bgen;
  bound->add_flag("--all-elements", all_elements, "every nonzero ring element");
  bound->add_flag("--all-principal", all_principal, "every principal right-ideal code");
  bound->add_option("--generator", bgen, "single element form")->delimiter(',');

  auto* checkable = app.add_subcommand("checkable", "checkability scan of all right ideals");
  add_common(checkable, o);

  auto* abelian = app.add_subcommand("abelian", "reduce dim<=3 two-sided ideals to abelian group codes");
  add_common(abelian, o);
  int max_dim = 3;
  abelian->add_option("--max-dim", max_dim, "largest dim_K to reduce");

  auto* extremal = app.add_subcommand("extremal", "decompose codes attaining d*dim = |G|");
  add_common(extremal, o);

  auto* search = app.add_subcommand("search", "sweep principal-ideal codes and rank by (d, k_p)");
  add_common(search, o);
  int min_d = 0;
  std::vector<int> target;
  search->add_option("--min-d", min_d, "keep codes with d >= this");
  search->add_option("--target", target, "n,k_p,d filter")->delimiter(',');

  auto* presets = app.add_subcommand("presets", "list named catalog systems");
  add_common(presets, o, false);
  auto* cat = app.add_subcommand("catalog", "run the full verification suite");
  add_common(cat, o, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(o);
    if (ring_info->parsed()) return cmd_ring_info(o);
    if (hat->parsed()) return cmd_hat_report(o);
    if (ideals->parsed()) return cmd_ideals(o, side_s, all_ideals);
    if (distance->parsed()) return cmd_distance(o, generator);
    if (bound->parsed()) return cmd_bound(o, all_elements, all_principal, bgen);
    if (checkable->parsed()) return cmd_checkable(o);
    if (abelian->parsed()) return cmd_abelian(o, max_dim);
    if (extremal->parsed()) return cmd_extremal(o);
    if (search->parsed()) return cmd_search(o, min_d, target);
    if (presets->parsed()) return cmd_presets(o);
    if (cat->parsed()) return cmd_catalog(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.kind() == Error::Kind::BudgetExceeded) return 3;
    if (e.kind() == Error::Kind::ReductionStalled || e.kind() == Error::Kind::DecompositionFailed) return 1;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
