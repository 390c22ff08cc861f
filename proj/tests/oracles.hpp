#pragma once

// Test-side oracles, independent of the library implementation paths they
// cross-check: naive polynomial arithmetic, subset scans, and plain
// exhaustive enumerations.

#include <algorithm>
#include <set>
#include <vector>

#include "gring/codes.hpp"
#include "gring/ring.hpp"

namespace oracle {

// schoolbook (a*b mod f) over F_p on coefficient vectors, lowest first
inline std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& f,
                                    int p) {
  std::vector<int> r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  int df = static_cast<int>(f.size()) - 1;
  for (int i = static_cast<int>(r.size()) - 1; i >= df; --i) {
    int c = r[static_cast<size_t>(i)];
    if (!c) continue;
    for (int j = 0; j <= df; ++j) {
      size_t idx = static_cast<size_t>(i - df + j);
      r[idx] = ((r[idx] - c * f[static_cast<size_t>(j)]) % p + p) % p;
    }
  }
  r.resize(static_cast<size_t>(df));
  return r;
}

// trial division by every monic polynomial of degree 1..deg/2
inline bool poly_irreducible(const std::vector<int>& f, int p) {
  int deg = static_cast<int>(f.size()) - 1;
  if (deg <= 0) return false;
  if (deg == 1) return true;
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      std::vector<int> g(static_cast<size_t>(d + 1), 0);
      long long c = code;
      for (int i = 0; i < d; ++i) {
        g[static_cast<size_t>(i)] = static_cast<int>(c % p);
        c /= p;
      }
      g[static_cast<size_t>(d)] = 1;
      // remainder of f by g
      std::vector<int> r = f;
      for (int i = deg; i >= d; --i) {
        int lead = r[static_cast<size_t>(i)];
        if (!lead) continue;
        for (int j = 0; j <= d; ++j) {
          size_t idx = static_cast<size_t>(i - d + j);
          r[idx] = ((r[idx] - lead * g[static_cast<size_t>(j)]) % p + p) % p;
        }
      }
      bool zero = true;
      for (int i = 0; i < d; ++i) zero = zero && r[static_cast<size_t>(i)] == 0;
      if (zero) return false;
    }
  }
  return true;
}

// every subgroup of g found by scanning all subsets containing the identity
// (feasible for |G| <= ~16)
inline std::vector<std::vector<int>> all_subgroups_by_subset_scan(const gring::FiniteGroup& g) {
  std::vector<std::vector<int>> out;
  int n = g.size();
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & 1u)) continue;
    std::vector<int> set;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) set.push_back(i);
    bool closed = true;
    for (int a : set)
      for (int b : set)
        if (!(mask & (1u << g.mul(a, b)))) {
          closed = false;
          break;
        }
    if (closed) out.push_back(set);
  }
  return out;
}

// plain odometer over all nonzero combinations, weights recomputed from
// scratch per word
inline int naive_min_distance(const gring::LinearCode& code) {
  auto words = code.all_codewords();
  int best = code.params.n + 1;
  for (size_t i = 1; i < words.size(); ++i) {
    int w = 0;
    for (auto c : words[i])
      if (c) ++w;
    best = std::min(best, w);
  }
  return best;
}

// right annihilator by scanning every ring element
inline std::vector<std::vector<uint32_t>> naive_right_annihilator(const gring::RingElem& v) {
  std::vector<std::vector<uint32_t>> out;
  gring::for_each_element(v.sys, [&](const gring::RingElem& a) {
    if (gring::ring_mul(v, a).is_zero()) out.push_back(a.coeffs);
    return true;
  });
  return out;
}

}  // namespace oracle
