#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gring/ring.hpp"

namespace gring {

// The auxiliary group on F*_{p^m} x G with
//   (a,g)(b,h) = (a sigma(g)(b) alpha(g,h), gh).
// Element (a,g) is encoded as (a-1)*|G| + g, so (1,e) lands at index 0.
struct HatGroup {
  SystemPtr sys;
  FiniteGroup group;

  int size() const { return group.size(); }
  int encode(uint32_t unit, int g) const { return static_cast<int>(unit - 1) * sys->n() + g; }
  std::pair<uint32_t, int> decode(int idx) const {
    return {static_cast<uint32_t>(idx / sys->n()) + 1, idx % sys->n()};
  }
};

// Builds the full Cayley table and validates the group axioms; also checks
// the closed-form inverse (sigma(y^-1)(1/(x alpha(y,y^-1))), y^-1) against
// the table for every element.
HatGroup build_hat_group(const SystemPtr& sys);

// (a,g)^b by the closed-form product prod_{k=0..b-1} alpha(g,g^k) sigma(g^k)(a).
int hat_power(const HatGroup& hat, int idx, int b);

// psi(a (b,c)-bar) = (a b) c-bar, extended F_p-linearly; input is a vector
// of F_p coefficients indexed by hat-group elements.
RingElem psi_map(const HatGroup& hat, const std::vector<uint8_t>& coeffs);

// Multiplicativity of psi on all |G-hat|^2 basis pairs.
bool psi_multiplicative(const HatGroup& hat, std::string* first_failure = nullptr);

struct TransferReport {
  int order = 0;
  bool p_nilpotent_G = false, p_nilpotent_hat = false;
  bool sylow_cyclic_G = false, sylow_cyclic_hat = false;
  bool lemma1_agrees = false;  // p-nilpotency transfers
  bool lemma2_agrees = false;  // cyclic Sylow transfers
};

// Both sides computed independently on the two Cayley tables; the report
// never derives one column from the other.
TransferReport hat_transfer_report(const SystemPtr& sys);

}  // namespace gring
