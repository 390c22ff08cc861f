#include "gring/ring.hpp"

#include <functional>
#include <map>
#include <set>

namespace gring {

namespace {

void check_same_system(const RingElem& x, const RingElem& y) {
  if (x.sys.get() != y.sys.get()) fail(Error::Kind::SystemMismatch, "elements belong to different systems");
}

}  // namespace

const char* side_name(Side s) {
  switch (s) {
    case Side::Left: return "left";
    case Side::Right: return "right";
    case Side::TwoSided: return "two-sided";
    default: return "subspace";
  }
}

RingElem ring_zero(const SystemPtr& sys) { return RingElem{sys, std::vector<uint32_t>(static_cast<size_t>(sys->n()), 0)}; }

RingElem ring_one(const SystemPtr& sys) {
  auto e = ring_zero(sys);
  e.coeffs[0] = 1;
  return e;
}

RingElem ring_basis_elem(const SystemPtr& sys, uint32_t b, int g) {
  auto e = ring_zero(sys);
  e.coeffs[static_cast<size_t>(g)] = b;
  return e;
}

RingElem ring_add(const RingElem& x, const RingElem& y) {
  check_same_system(x, y);
  RingElem r = x;
  for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = x.sys->field->add(x.coeffs[i], y.coeffs[i]);
  return r;
}

RingElem ring_sub(const RingElem& x, const RingElem& y) {
  check_same_system(x, y);
  RingElem r = x;
  for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = x.sys->field->sub(x.coeffs[i], y.coeffs[i]);
  return r;
}

RingElem ring_scale(uint32_t b, const RingElem& x) {
  RingElem r = x;
  for (auto& c : r.coeffs) c = x.sys->field->mul(b, c);
  return r;
}

RingElem ring_mul(const RingElem& x, const RingElem& y) {
  check_same_system(x, y);
  const CrossedSystem& s = *x.sys;
  const FiniteField& f = *s.field;
  const FiniteGroup& g = *s.group;
  RingElem r = ring_zero(x.sys);
  int n = s.n();
  for (int a = 0; a < n; ++a) {
    uint32_t ca = x.coeffs[static_cast<size_t>(a)];
    if (!ca) continue;
    for (int b = 0; b < n; ++b) {
      uint32_t cb = y.coeffs[static_cast<size_t>(b)];
      if (!cb) continue;
      uint32_t t = f.mul(ca, s.sigma_apply(a, cb));
      t = f.mul(t, s.alpha_at(a, b));
      int ab = g.mul(a, b);
      r.coeffs[static_cast<size_t>(ab)] = f.add(r.coeffs[static_cast<size_t>(ab)], t);
    }
  }
  return r;
}

bool ring_eq(const RingElem& x, const RingElem& y) { return x.sys.get() == y.sys.get() && x.coeffs == y.coeffs; }

std::vector<uint8_t> elem_to_fp(const RingElem& x) {
  const FiniteField& f = *x.sys->field;
  int n = x.sys->n(), m = f.m();
  std::vector<uint8_t> v(static_cast<size_t>(n * m), 0);
  for (int g = 0; g < n; ++g) {
    uint32_t c = x.coeffs[static_cast<size_t>(g)];
    for (int j = 0; j < m; ++j) {
      v[static_cast<size_t>(g * m + j)] = static_cast<uint8_t>(c % static_cast<uint32_t>(f.p()));
      c /= static_cast<uint32_t>(f.p());
    }
  }
  return v;
}

RingElem elem_from_fp(const SystemPtr& sys, const std::vector<uint8_t>& v) {
  const FiniteField& f = *sys->field;
  int n = sys->n(), m = f.m();
  RingElem r = ring_zero(sys);
  for (int g = 0; g < n; ++g) {
    uint32_t c = 0;
    for (int j = m - 1; j >= 0; --j) c = c * static_cast<uint32_t>(f.p()) + v[static_cast<size_t>(g * m + j)];
    r.coeffs[static_cast<size_t>(g)] = c;
  }
  return r;
}

IdealHandle make_handle(const SystemPtr& sys, Side side, const FpSpace& space) {
  IdealHandle h;
  h.sys = sys;
  h.side = side;
  h.basis = space;
  h.dim_p = static_cast<int>(space.dim());
  int m = sys->field->m();
  // closed under left scaling by every field basis element?
  h.k_linear = true;
  for (const auto& row : space.rows()) {
    RingElem x = elem_from_fp(sys, row);
    for (int j = 1; j < m && h.k_linear; ++j) {
      RingElem sx = ring_scale(sys->field->pow(static_cast<uint32_t>(sys->field->p()), j), x);
      if (!space.contains(elem_to_fp(sx))) h.k_linear = false;
    }
    if (!h.k_linear) break;
  }
  h.dim_K = h.k_linear ? h.dim_p / m : -1;
  return h;
}

IdealHandle make_handle_from_elems(const SystemPtr& sys, Side side, const std::vector<RingElem>& gens) {
  FpSpace s(sys->field->p(), static_cast<size_t>(sys->dim_p()));
  for (const auto& e : gens) s.insert(elem_to_fp(e));
  return make_handle(sys, side, s);
}

std::vector<std::vector<uint8_t>> mul_matrix(const RingElem& f, Side side) {
  const SystemPtr& sys = f.sys;
  int d = sys->dim_p(), m = sys->field->m();
  std::vector<std::vector<uint8_t>> mat(static_cast<size_t>(d), std::vector<uint8_t>(static_cast<size_t>(d), 0));
  for (int col = 0; col < d; ++col) {
    RingElem e = ring_basis_elem(sys, sys->field->pow(static_cast<uint32_t>(sys->field->p()), col % m), col / m);
    RingElem y = side == Side::Left ? ring_mul(f, e) : ring_mul(e, f);
    auto v = elem_to_fp(y);
    for (int r = 0; r < d; ++r) mat[static_cast<size_t>(r)][static_cast<size_t>(col)] = v[static_cast<size_t>(r)];
  }
  return mat;
}

namespace {

std::vector<RingElem> side_generators(const SystemPtr& sys) {
  std::vector<RingElem> gens;
  int m = sys->field->m();
  for (int g = 0; g < sys->n(); ++g)
    for (int j = 0; j < m; ++j)
      gens.push_back(ring_basis_elem(sys, sys->field->pow(static_cast<uint32_t>(sys->field->p()), j), g));
  return gens;
}

}  // namespace

IdealHandle principal_ideal(const RingElem& v, Side side) {
  const SystemPtr& sys = v.sys;
  FpSpace space(sys->field->p(), static_cast<size_t>(sys->dim_p()));
  auto gens = side_generators(sys);
  if (side == Side::Left || side == Side::Right) {
    // one-sided products of v with the module generators span the ideal
    for (const auto& g : gens) space.insert(elem_to_fp(side == Side::Right ? ring_mul(v, g) : ring_mul(g, v)));
  } else if (side == Side::TwoSided) {
    for (const auto& a : gens) {
      RingElem av = ring_mul(a, v);
      for (const auto& b : gens) space.insert(elem_to_fp(ring_mul(av, b)));
    }
  } else {
    space.insert(elem_to_fp(v));
  }
  return make_handle(sys, side, space);
}

IdealHandle annihilator(const RingElem& v, Side side) {
  const SystemPtr& sys = v.sys;
  auto mat = mul_matrix(v, side == Side::Right ? Side::Left : Side::Right);
  FpSpace ker = kernel_space(sys->field->p(), static_cast<size_t>(sys->dim_p()), mat);
  return make_handle(sys, side, ker);
}

IdealHandle annihilator(const IdealHandle& ideal, Side side) {
  const SystemPtr& sys = ideal.sys;
  std::vector<std::vector<uint8_t>> stacked;
  for (const auto& row : ideal.basis.rows()) {
    auto mat = mul_matrix(elem_from_fp(sys, row), side == Side::Right ? Side::Left : Side::Right);
    for (auto& r : mat) stacked.push_back(std::move(r));
  }
  if (stacked.empty()) {
    // annihilator of the zero ideal is the whole ring
    FpSpace whole(sys->field->p(), static_cast<size_t>(sys->dim_p()));
    for (const auto& g : side_generators(sys)) whole.insert(elem_to_fp(g));
    return make_handle(sys, side, whole);
  }
  FpSpace ker = kernel_space(sys->field->p(), static_cast<size_t>(sys->dim_p()), stacked);
  return make_handle(sys, side, ker);
}

bool is_ideal(const IdealHandle& h, Side side) {
  const SystemPtr& sys = h.sys;
  auto gens = side_generators(sys);
  for (const auto& row : h.basis.rows()) {
    RingElem w = elem_from_fp(sys, row);
    for (const auto& g : gens) {
      if ((side == Side::Right || side == Side::TwoSided) && !h.basis.contains(elem_to_fp(ring_mul(w, g)))) return false;
      if ((side == Side::Left || side == Side::TwoSided) && !h.basis.contains(elem_to_fp(ring_mul(g, w)))) return false;
    }
  }
  return true;
}

void for_each_element(const SystemPtr& sys, const std::function<bool(const RingElem&)>& f) {
  int n = sys->n();
  uint32_t q = sys->field->q();
  RingElem v = ring_zero(sys);
  while (true) {
    if (!f(v)) return;
    int i = 0;
    for (; i < n; ++i) {
      if (++v.coeffs[static_cast<size_t>(i)] < q) break;
      v.coeffs[static_cast<size_t>(i)] = 0;
    }
    if (i == n) return;
  }
}

std::vector<IdealHandle> enumerate_principal_ideals(const SystemPtr& sys, Side side, uint64_t budget) {
  uint64_t total = 1;
  for (int i = 0; i < sys->n(); ++i) {
    total *= sys->field->q();
    if (total > budget) fail(Error::Kind::BudgetExceeded, "element sweep exceeds budget");
  }
  std::map<std::vector<uint8_t>, IdealHandle> seen;
  if (side == Side::TwoSided) {
    // dedupe by the (cheaper) right span first; two-sided closure once per class
    std::map<std::vector<uint8_t>, std::vector<uint8_t>> right_to_two;
    for_each_element(sys, [&](const RingElem& v) {
      IdealHandle r = principal_ideal(v, Side::Right);
      auto k = r.basis.key();
      auto it = right_to_two.find(k);
      if (it == right_to_two.end()) {
        IdealHandle two = principal_ideal(v, Side::TwoSided);
        auto k2 = two.basis.key();
        right_to_two.emplace(std::move(k), k2);
        seen.emplace(std::move(k2), std::move(two));
      }
      return true;
    });
  } else {
    for_each_element(sys, [&](const RingElem& v) {
      IdealHandle h = principal_ideal(v, side);
      auto k = h.basis.key();
      if (!seen.count(k)) seen.emplace(std::move(k), std::move(h));
      return true;
    });
  }
  std::vector<IdealHandle> out;
  out.reserve(seen.size());
  for (auto& [k, h] : seen) out.push_back(std::move(h));
  return out;
}

std::vector<IdealHandle> enumerate_all_ideals(const SystemPtr& sys, Side side, uint64_t budget) {
  auto principal = enumerate_principal_ideals(sys, side, budget);
  std::map<std::vector<uint8_t>, IdealHandle> seen;
  for (auto& h : principal) seen.emplace(h.basis.key(), h);
  // close under pairwise sums to a fixed point
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<const IdealHandle*> cur;
    cur.reserve(seen.size());
    for (auto& [k, h] : seen) cur.push_back(&h);
    for (size_t i = 0; i < cur.size() && !grew; ++i)
      for (size_t j = i + 1; j < cur.size(); ++j) {
        FpSpace s = sum_spaces(cur[i]->basis, cur[j]->basis);
        auto key = s.key();
        if (!seen.count(key)) {
          seen.emplace(std::move(key), make_handle(sys, side, s));
          grew = true;
          break;
        }
      }
  }
  std::vector<IdealHandle> out;
  out.reserve(seen.size());
  for (auto& [k, h] : seen) out.push_back(std::move(h));
  return out;
}

bool double_annihilator_check(const IdealHandle& left_ideal) {
  IdealHandle i = annihilator(left_ideal, Side::Right);
  IdealHandle back = annihilator(i, Side::Left);
  return back.basis == left_ideal.basis;
}

}  // namespace gring
