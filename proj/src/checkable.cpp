#include "gring/checkable.hpp"

namespace gring {

namespace {

// all F_p-combinations of the basis rows of a space, zero vector first
void for_each_member(const SystemPtr& sys, const FpSpace& space, uint64_t budget,
                     const std::function<bool(const RingElem&)>& f) {
  int p = sys->field->p();
  int k = static_cast<int>(space.dim());
  uint64_t total = 1;
  for (int i = 0; i < k; ++i) {
    total *= static_cast<uint64_t>(p);
    if (total > budget) fail(Error::Kind::BudgetExceeded, "ideal member sweep exceeds budget");
  }
  std::vector<uint8_t> digits(static_cast<size_t>(k), 0);
  std::vector<uint8_t> acc(static_cast<size_t>(sys->dim_p()), 0);
  for (uint64_t step = 0;; ++step) {
    if (!f(elem_from_fp(sys, acc))) return;
    if (step + 1 >= total) return;
    int i = 0;
    for (;; ++i) {
      // adding one more copy of row i; a p-1 -> 0 carry also adds one copy
      const auto& row = space.rows()[static_cast<size_t>(i)];
      for (size_t c = 0; c < acc.size(); ++c) acc[c] = static_cast<uint8_t>((acc[c] + row[c]) % p);
      if (++digits[static_cast<size_t>(i)] < p) break;
      digits[static_cast<size_t>(i)] = 0;
    }
  }
}

}  // namespace

std::optional<RingElem> is_checkable(const IdealHandle& right_ideal, uint64_t budget) {
  const SystemPtr& sys = right_ideal.sys;
  IdealHandle left_ann = annihilator(right_ideal, Side::Left);
  std::optional<RingElem> witness;
  for_each_member(sys, left_ann.basis, budget, [&](const RingElem& v) {
    IdealHandle ann = annihilator(v, Side::Right);
    if (ann.basis == right_ideal.basis) {
      witness = v;
      return false;
    }
    return true;
  });
  return witness;
}

std::optional<RingElem> left_principal_witness(const IdealHandle& left_ideal, uint64_t budget) {
  const SystemPtr& sys = left_ideal.sys;
  std::optional<RingElem> witness;
  for_each_member(sys, left_ideal.basis, budget, [&](const RingElem& w) {
    IdealHandle gen = principal_ideal(w, Side::Left);
    if (gen.basis == left_ideal.basis) {
      witness = w;
      return false;
    }
    return true;
  });
  return witness;
}

CheckableScan code_checkable_scan(const SystemPtr& sys, uint64_t budget) {
  CheckableScan scan;
  int p = sys->field->p();
  scan.hypothesis_p_nilpotent = is_p_nilpotent(*sys->group, p).nilpotent;
  scan.hypothesis_sylow_cyclic = sylow_cyclic(*sys->group, p);
  scan.hypothesis_holds = scan.hypothesis_p_nilpotent && scan.hypothesis_sylow_cyclic;
  scan.all_checkable = true;
  scan.cross_consistent = true;
  for (const auto& ideal : enumerate_all_ideals(sys, Side::Right, budget)) {
    CheckableRow row;
    row.dim_p = ideal.dim_p;
    auto w = is_checkable(ideal, budget);
    row.checkable = w.has_value();
    if (w) row.witness = w->coeffs;
    row.left_ann_principal = left_principal_witness(annihilator(ideal, Side::Left), budget).has_value();
    row.cross_consistent = row.checkable == row.left_ann_principal;
    scan.all_checkable = scan.all_checkable && row.checkable;
    scan.cross_consistent = scan.cross_consistent && row.cross_consistent;
    scan.rows.push_back(std::move(row));
  }
  scan.proposition_ok = !scan.hypothesis_holds || scan.all_checkable;
  return scan;
}

}  // namespace gring
