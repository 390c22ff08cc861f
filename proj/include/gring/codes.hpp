#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gring/ring.hpp"

namespace gring {

struct CodeParams {
  int n = 0;
  int k = -1;    // dimension over K; -1 when the code is not K-linear
  int k_p = 0;   // dimension over the prime field
  int d = -1;    // minimum weight in K-symbols; -1 when not yet computed
};

// Length-|G| code over K attached to an ideal; codewords are the K-symbol
// contractions of the prime-field basis combinations. Weight counts nonzero
// K-symbols indexed by G, matching supp(f).
struct LinearCode {
  SystemPtr sys;
  FpSpace basis;  // prime-field basis, n*m coordinates
  bool k_linear = false;
  CodeParams params;

  bool is_zero() const { return basis.dim() == 0; }
  // contraction of one basis combination into a K-vector of length n
  std::vector<uint32_t> codeword(const std::vector<uint8_t>& fp_coeffs) const;
  std::vector<std::vector<uint32_t>> all_codewords(uint64_t budget = 10'000'000) const;
};

LinearCode code_from_ideal(const IdealHandle& ideal);

// Exact minimum over all p^k_p - 1 nonzero codewords. Enumeration walks the
// coefficient odometer with incremental row updates and exits early at d=1.
int min_distance(const LinearCode& code, uint64_t budget = 10'000'000);

// Greedy maximal sequence g_1..g_t with S g_i escaping the union of the
// previous translates; scans G in index order.
std::pair<int, std::vector<int>> s_rank(const FiniteGroup& g, const std::vector<int>& s);

struct BoundReport {
  int support = 0;
  int rank = 0;          // rank_K(T_f) or dim_K; dim over F_p when !rank_is_K
  bool rank_is_K = true; // false only for non-K-linear skew ideals (flagged, unverified by the bound)
  int group_order = 0;
  long long product = 0;
  bool holds = false;
  bool amgm_holds = false;  // 2 sqrt|G| <= d + dim <= |G| + 1 (code form only)
};

BoundReport bound_report(const RingElem& f);
BoundReport bound_report(const LinearCode& code);  // requires k_linear, else NotKLinear

struct ExtremalWitness {
  RingElem c;
  std::vector<int> H;  // subgroup members, |H| = d
};

// For a code with d * dim_K = |G|: returns (c, H) with H = supp(c) a
// subgroup, dim_K(c K^alpha H) = 1 and C = c K^alpha G, all verified.
ExtremalWitness extremal_decompose(const LinearCode& code);

// C = c K^alpha G for c supported in H with dim_K(c K^alpha H) = 1; the
// resulting parameters [|G|, [G:H], |H|] are verified by brute force.
LinearCode extremal_construct(const SystemPtr& sys, const std::vector<int>& H, const RingElem& c);

struct SearchFilter {
  int min_d = 0;
  std::optional<CodeParams> target;  // match on (n, k_p, d)
};

struct SearchHit {
  CodeParams params;
  bool k_linear = false;
  std::vector<uint32_t> generator;
};

// Enumerates principal right-ideal codes, deduplicated by canonical basis,
// ranked by (d, k_p) descending.
std::vector<SearchHit> search_codes(const SystemPtr& sys, const SearchFilter& filter, uint64_t budget = 1'000'000,
                                    int jobs = 1);

std::vector<int> weight_distribution(const LinearCode& code, uint64_t budget = 10'000'000);

}  // namespace gring
