#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gring/crossed.hpp"

namespace gring {

// Named systems exercised by the verification suite. Expected structural
// facts are recomputed by the suite, never trusted.
struct CatalogEntry {
  std::string name;
  std::function<SystemPtr()> build;
  bool skew = false;
  int group_order = 0;
  std::optional<bool> expect_p_nilpotent;
  std::optional<bool> expect_sylow_cyclic;
};

const std::vector<CatalogEntry>& catalog();
SystemPtr catalog_system(const std::string& name);  // cached, validated
std::vector<std::string> catalog_names();

// Non-coboundary twisted C4 over F_3 (the negacyclic-style twist). Kept out
// of the main catalog: its two-dimensional ideals beat every length-4
// abelian group code weight distribution, so no monomial reduction exists.
SystemPtr build_twisted_c4_f3();

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  bool gating = true;
  std::string detail;
  double seconds = 0.0;
};

std::vector<CriterionResult> run_acceptance(uint64_t seed = 12345);

}  // namespace gring
