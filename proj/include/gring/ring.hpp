#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gring/crossed.hpp"
#include "gring/fpmat.hpp"

namespace gring {

// Element of F_{p^m}^alpha[G; sigma]: coefficient of g-bar at index g.
struct RingElem {
  SystemPtr sys;
  std::vector<uint32_t> coeffs;

  bool is_zero() const {
    for (auto c : coeffs)
      if (c) return false;
    return true;
  }
  int support_size() const {
    int s = 0;
    for (auto c : coeffs)
      if (c) ++s;
    return s;
  }
};

RingElem ring_zero(const SystemPtr& sys);
RingElem ring_one(const SystemPtr& sys);
RingElem ring_basis_elem(const SystemPtr& sys, uint32_t b, int g);
RingElem ring_add(const RingElem& x, const RingElem& y);
RingElem ring_sub(const RingElem& x, const RingElem& y);
// Left module scaling b * (c g-bar) = (b c) g-bar.
RingElem ring_scale(uint32_t b, const RingElem& x);
// (a x-bar)(b y-bar) = a sigma(x)(b) alpha(x,y) (xy)-bar, extended bilinearly.
RingElem ring_mul(const RingElem& x, const RingElem& y);
bool ring_eq(const RingElem& x, const RingElem& y);

// Prime-field expansion: index g*m + j carries digit j of the coefficient
// at g (group-major, field-coordinate-minor).
std::vector<uint8_t> elem_to_fp(const RingElem& x);
RingElem elem_from_fp(const SystemPtr& sys, const std::vector<uint8_t>& v);

enum class Side { Left, Right, TwoSided, Subspace };
const char* side_name(Side s);

// A subspace of the ring over the prime field, in canonical reduced row
// echelon form; dim_K is populated exactly when the subspace is closed
// under left K-scaling.
struct IdealHandle {
  SystemPtr sys;
  Side side = Side::Subspace;
  FpSpace basis;
  bool k_linear = false;
  int dim_p = 0;
  int dim_K = -1;

  bool contains(const RingElem& x) const { return basis.contains(elem_to_fp(x)); }
};

IdealHandle make_handle(const SystemPtr& sys, Side side, const FpSpace& space);
IdealHandle make_handle_from_elems(const SystemPtr& sys, Side side, const std::vector<RingElem>& gens);

// Matrix over F_p of v -> f*v (Left) or v -> v*f (Right), acting on
// prime-field coordinates; column c is the image of basis vector c.
std::vector<std::vector<uint8_t>> mul_matrix(const RingElem& f, Side side);

IdealHandle principal_ideal(const RingElem& v, Side side);

// annihilator(v, Right) = Ann_r(v) = {a : v a = 0}; Left dually. For a
// handle, the intersection of the element annihilators over its basis.
IdealHandle annihilator(const RingElem& v, Side side);
IdealHandle annihilator(const IdealHandle& ideal, Side side);

bool is_ideal(const IdealHandle& h, Side side);

std::vector<IdealHandle> enumerate_principal_ideals(const SystemPtr& sys, Side side, uint64_t budget = 1'000'000);
// All one- or two-sided ideals: principal ideals closed under pairwise sums.
std::vector<IdealHandle> enumerate_all_ideals(const SystemPtr& sys, Side side, uint64_t budget = 1'000'000);

// Ann_l(Ann_r(L)) == L for a left ideal L (Frobenius property).
bool double_annihilator_check(const IdealHandle& left_ideal);

// Iterates all q^n ring elements in code order; f(elem) returning false stops.
void for_each_element(const SystemPtr& sys, const std::function<bool(const RingElem&)>& f);

}  // namespace gring
