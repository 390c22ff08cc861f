#include "gring/json_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace gring {

using nlohmann::json;

SystemPtr system_from_json(const json& j) {
  if (!j.contains("field") || !j.contains("group")) fail(Error::Kind::InvalidArgument, "system needs field and group");
  const json& jf = j.at("field");
  int p = jf.at("p").get<int>();
  int m = jf.value("m", 1);
  std::optional<std::vector<int>> modulus;
  if (jf.contains("modulus")) modulus = jf.at("modulus").get<std::vector<int>>();
  auto field = std::make_shared<const FiniteField>(p, m, modulus);

  const json& jg = j.at("group");
  std::shared_ptr<const FiniteGroup> group;
  if (jg.contains("builtin"))
    group = std::make_shared<const FiniteGroup>(FiniteGroup::builtin(jg.at("builtin").get<std::string>()));
  else if (jg.contains("table"))
    group = std::make_shared<const FiniteGroup>(
        FiniteGroup::from_table(jg.at("table").get<std::vector<std::vector<int>>>(), "G"));
  else
    fail(Error::Kind::InvalidArgument, "group needs builtin or table");
  int n = group->size();

  SigmaAction sigma = SigmaAction::trivial_on(n);
  if (j.contains("sigma")) {
    sigma.exps = j.at("sigma").get<std::vector<int>>();
    if (static_cast<int>(sigma.exps.size()) != n) fail(Error::Kind::InvalidArgument, "sigma length mismatch");
  }
  Cocycle alpha = Cocycle::trivial(n);
  if (j.contains("alpha")) {
    auto rows = j.at("alpha").get<std::vector<std::vector<uint32_t>>>();
    if (static_cast<int>(rows.size()) == n) {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) alpha.at(x, y) = rows[static_cast<size_t>(x)][static_cast<size_t>(y)];
    } else if (static_cast<int>(rows.size()) == n - 1) {
      // identity row/column omitted
      for (int x = 1; x < n; ++x)
        for (int y = 1; y < n; ++y) alpha.at(x, y) = rows[static_cast<size_t>(x - 1)][static_cast<size_t>(y - 1)];
    } else {
      fail(Error::Kind::InvalidArgument, "alpha must be n x n or (n-1) x (n-1)");
    }
  }
  std::string name = j.value("name", std::string());
  return make_system(field, group, std::move(sigma), std::move(alpha), name);
}

SystemPtr load_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Error::Kind::InvalidArgument, "cannot open system file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(Error::Kind::InvalidArgument, std::string("bad JSON: ") + e.what());
  }
  return system_from_json(j);
}

json system_to_json(const CrossedSystem& sys) {
  json j;
  j["name"] = sys.name;
  j["field"] = {{"p", sys.field->p()}, {"m", sys.field->m()}, {"modulus", sys.field->modulus()}};
  j["group"] = {{"table", sys.group->table_rows()}, {"name", sys.group->name()}};
  j["sigma"] = sys.sigma.exps;
  std::vector<std::vector<uint32_t>> rows(static_cast<size_t>(sys.n()));
  for (int x = 0; x < sys.n(); ++x) {
    rows[static_cast<size_t>(x)].resize(static_cast<size_t>(sys.n()));
    for (int y = 0; y < sys.n(); ++y) rows[static_cast<size_t>(x)][static_cast<size_t>(y)] = sys.alpha_at(x, y);
  }
  j["alpha"] = rows;
  return j;
}

json to_json(const ValidationReport& r) {
  json arr = json::array();
  for (const auto& v : r.violations)
    arr.push_back({{"condition", v.condition}, {"x", v.x}, {"y", v.y}, {"z", v.z}, {"detail", v.detail}});
  return {{"valid", r.ok()}, {"violations", arr}};
}

json to_json(const TransferReport& r) {
  return {{"order", r.order},
          {"p_nilpotent_G", r.p_nilpotent_G},
          {"p_nilpotent_hat", r.p_nilpotent_hat},
          {"sylow_cyclic_G", r.sylow_cyclic_G},
          {"sylow_cyclic_hat", r.sylow_cyclic_hat},
          {"lemma1_agrees", r.lemma1_agrees},
          {"lemma2_agrees", r.lemma2_agrees}};
}

json to_json(const CheckableScan& s) {
  json rows = json::array();
  for (const auto& r : s.rows) {
    json row = {{"dim_p", r.dim_p}, {"checkable", r.checkable}, {"cross_consistent", r.cross_consistent}};
    if (r.witness)
      row["witness"] = *r.witness;
    else
      row["witness"] = nullptr;
    rows.push_back(std::move(row));
  }
  return {{"hypothesis", {{"p_nilpotent", s.hypothesis_p_nilpotent}, {"sylow_cyclic", s.hypothesis_sylow_cyclic}}},
          {"ideals", rows},
          {"all_checkable", s.all_checkable},
          {"cross_consistent", s.cross_consistent},
          {"proposition_ok", s.proposition_ok}};
}

json to_json(const BoundReport& r) {
  return {{"support", r.support},     {"rank", r.rank},   {"rank_is_K", r.rank_is_K},
          {"group_order", r.group_order}, {"product", r.product}, {"holds", r.holds},
          {"amgm_holds", r.amgm_holds}};
}

json code_to_json(const LinearCode& code, const std::vector<uint32_t>& generator) {
  json j;
  j["n"] = code.params.n;
  if (code.params.k >= 0)
    j["k"] = code.params.k;
  else
    j["k"] = nullptr;
  j["k_p"] = code.params.k_p;
  j["d"] = code.params.d;
  j["generator"] = generator;
  return j;
}

json witness_to_json(const MonomialWitness& w, const std::string& target_group) {
  return {{"perm", w.perm}, {"diag", w.diag}, {"target_group", target_group}};
}

json to_json(const ReduceResult& r) {
  json steps = json::array();
  for (const auto& s : r.steps) {
    json st = witness_to_json(s.witness, s.target_group);
    st["kind"] = s.kind;
    st["note"] = s.note;
    steps.push_back(std::move(st));
  }
  return {{"ok", r.ok},
          {"steps", steps},
          {"final_group", r.final_sys ? r.final_sys->group->name() : ""},
          {"log", r.log}};
}

}  // namespace gring
