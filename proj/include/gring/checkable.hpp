#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gring/ring.hpp"

namespace gring {

// Searches v with Ann_r(v) = I. Any witness annihilates I from the left,
// so the search runs over Ann_l(I) only; this is sound and complete.
std::optional<RingElem> is_checkable(const IdealHandle& right_ideal, uint64_t budget = 1'000'000);

// Searches w in L with R w = L.
std::optional<RingElem> left_principal_witness(const IdealHandle& left_ideal, uint64_t budget = 1'000'000);

struct CheckableRow {
  int dim_p = 0;
  bool checkable = false;
  std::optional<std::vector<uint32_t>> witness;
  bool left_ann_principal = false;
  bool cross_consistent = false;  // checkable <=> Ann_l(I) principal
};

struct CheckableScan {
  bool hypothesis_p_nilpotent = false;
  bool hypothesis_sylow_cyclic = false;
  bool hypothesis_holds = false;
  std::vector<CheckableRow> rows;
  bool all_checkable = false;
  bool cross_consistent = false;
  bool proposition_ok = false;  // hypothesis_holds implies all_checkable
};

// Enumerates every right ideal (principal ideals closed under sums) and
// tests checkability; both directions of the Frobenius cross-check are
// computed independently per ideal.
CheckableScan code_checkable_scan(const SystemPtr& sys, uint64_t budget = 1'000'000);

}  // namespace gring
