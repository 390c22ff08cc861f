#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gring/gf.hpp"
#include "gring/groups.hpp"

namespace gring {

// Action of G on the field, stored as Frobenius exponents: element g acts
// as a -> a^(p^exps[g]). Aut(F_{p^m}) is cyclic generated by Frobenius, so
// this is lossless; over a field the first crossed-system identity
// collapses to "exps is a homomorphism into Z/m".
struct SigmaAction {
  std::vector<int> exps;

  bool trivial() const {
    for (int e : exps)
      if (e) return false;
    return true;
  }
  static SigmaAction trivial_on(int n) { return SigmaAction{std::vector<int>(static_cast<size_t>(n), 0)}; }
};

// |G| x |G| table of unit field codes, tab[x*n+y] = alpha(x, y).
struct Cocycle {
  int n = 0;
  std::vector<uint32_t> tab;

  uint32_t at(int x, int y) const { return tab[static_cast<size_t>(x) * static_cast<size_t>(n) + static_cast<size_t>(y)]; }
  uint32_t& at(int x, int y) { return tab[static_cast<size_t>(x) * static_cast<size_t>(n) + static_cast<size_t>(y)]; }
  static Cocycle trivial(int n) { return Cocycle{n, std::vector<uint32_t>(static_cast<size_t>(n) * static_cast<size_t>(n), 1)}; }
};

struct CrossedSystem {
  std::shared_ptr<const FiniteField> field;
  std::shared_ptr<const FiniteGroup> group;
  SigmaAction sigma;
  Cocycle alpha;
  bool twisted_only = true;  // sigma trivial: ordinary twisted group ring
  std::string name;

  int n() const { return group->size(); }
  int dim_p() const { return group->size() * field->m(); }
  uint32_t sigma_apply(int g, uint32_t a) const { return field->frobenius(a, sigma.exps[static_cast<size_t>(g)]); }
  uint32_t alpha_at(int x, int y) const { return alpha.at(x, y); }
};

using SystemPtr = std::shared_ptr<const CrossedSystem>;

SystemPtr make_system(std::shared_ptr<const FiniteField> field, std::shared_ptr<const FiniteGroup> group,
                      SigmaAction sigma, Cocycle alpha, std::string name = "");

struct Violation {
  int condition = 0;  // 1: action compatibility, 2: cocycle identity, 3: normalization, 0: shape/units
  int x = -1, y = -1, z = -1;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks conditions 1-3 exhaustively (all pairs / triples). Report-only.
ValidationReport validate_crossed_system(const CrossedSystem& sys);

// delta-lambda(g,h) = lambda(g) * sigma(g)(lambda(h)) * lambda(gh)^{-1};
// with trivial sigma this is the plain 2-coboundary formula. lambda must
// consist of units with lambda(e) = 1.
Cocycle coboundary_from_lambda(const FiniteField& field, const FiniteGroup& group, const SigmaAction& sigma,
                               const std::vector<uint32_t>& lambda);

// Exhaustive search for lambda with delta-lambda = alpha; sigma-trivial
// systems only. Candidates are scanned in odometer order over unit codes,
// (q-1)^(n-1) of them.
std::optional<std::vector<uint32_t>> is_coboundary(const FiniteField& field, const FiniteGroup& group,
                                                   const Cocycle& alpha, uint64_t budget = 10'000'000);

// Backtracking over the free entries alpha(x,y), x,y != e, with cocycle
// identity propagation. Returns the complete list of valid tables.
std::vector<Cocycle> enumerate_cocycles(const FiniteField& field, const FiniteGroup& group, const SigmaAction& sigma,
                                        uint64_t budget = 1'000'000);

// alpha(g^i, g^j) = c^((i+j) div k) on the cyclic group of order k.
Cocycle cyclic_twist_cocycle(const FiniteField& field, int k, uint32_t c);

// Pullback along the quotient projection.
Cocycle inflate_cocycle(const FiniteGroup& group, const std::vector<int>& proj, const Cocycle& alpha_q);

}  // namespace gring
