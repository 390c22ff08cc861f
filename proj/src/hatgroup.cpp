#include "gring/hatgroup.hpp"

#include <sstream>

namespace gring {

HatGroup build_hat_group(const SystemPtr& sys) {
  const FiniteField& f = *sys->field;
  const FiniteGroup& g = *sys->group;
  int n = g.size();
  uint32_t units = f.q() - 1;
  int order = static_cast<int>(units) * n;
  std::vector<std::vector<int>> table(static_cast<size_t>(order), std::vector<int>(static_cast<size_t>(order)));
  auto enc = [&](uint32_t a, int x) { return static_cast<int>(a - 1) * n + x; };
  for (uint32_t a = 1; a <= units; ++a)
    for (int x = 0; x < n; ++x)
      for (uint32_t b = 1; b <= units; ++b)
        for (int y = 0; y < n; ++y) {
          uint32_t c = f.mul(f.mul(a, sys->sigma_apply(x, b)), sys->alpha_at(x, y));
          table[static_cast<size_t>(enc(a, x))][static_cast<size_t>(enc(b, y))] = enc(c, g.mul(x, y));
        }
  HatGroup hat;
  hat.sys = sys;
  hat.group = FiniteGroup::from_table(table, sys->name + "^");

  // closed-form inverse must match the table inverse everywhere
  for (int idx = 0; idx < order; ++idx) {
    auto [x, y] = hat.decode(idx);
    int yi = g.inv(y);
    uint32_t c = sys->sigma_apply(yi, f.inv(f.mul(x, sys->alpha_at(y, yi))));
    if (hat.group.inv(idx) != hat.encode(c, yi))
      fail(Error::Kind::NotAGroup, "closed-form inverse disagrees with the Cayley table");
  }
  return hat;
}

int hat_power(const HatGroup& hat, int idx, int b) {
  const CrossedSystem& sys = *hat.sys;
  const FiniteField& f = *sys.field;
  const FiniteGroup& g = *sys.group;
  auto [a, x] = hat.decode(idx);
  uint32_t acc = 1;
  int xk = 0;  // x^k
  for (int k = 0; k < b; ++k) {
    acc = f.mul(acc, f.mul(sys.alpha_at(x, xk), sys.sigma_apply(xk, a)));
    xk = g.mul(xk, x);
  }
  return hat.encode(acc, g.pow(x, b));
}

RingElem psi_map(const HatGroup& hat, const std::vector<uint8_t>& coeffs) {
  const SystemPtr& sys = hat.sys;
  RingElem r = ring_zero(sys);
  for (int idx = 0; idx < hat.size(); ++idx) {
    uint8_t a = coeffs[static_cast<size_t>(idx)];
    if (!a) continue;
    auto [b, c] = hat.decode(idx);
    uint32_t v = sys->field->mul(static_cast<uint32_t>(a), b);
    r.coeffs[static_cast<size_t>(c)] = sys->field->add(r.coeffs[static_cast<size_t>(c)], v);
  }
  return r;
}

bool psi_multiplicative(const HatGroup& hat, std::string* first_failure) {
  int order = hat.size();
  std::vector<RingElem> images;
  images.reserve(static_cast<size_t>(order));
  for (int i = 0; i < order; ++i) {
    std::vector<uint8_t> e(static_cast<size_t>(order), 0);
    e[static_cast<size_t>(i)] = 1;
    images.push_back(psi_map(hat, e));
  }
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      const RingElem& lhs = images[static_cast<size_t>(hat.group.mul(i, j))];
      RingElem rhs = ring_mul(images[static_cast<size_t>(i)], images[static_cast<size_t>(j)]);
      if (!ring_eq(lhs, rhs)) {
        if (first_failure) {
          std::ostringstream os;
          os << "psi(x y) != psi(x) psi(y) at pair (" << i << "," << j << ")";
          *first_failure = os.str();
        }
        return false;
      }
    }
  return true;
}

TransferReport hat_transfer_report(const SystemPtr& sys) {
  int p = sys->field->p();
  HatGroup hat = build_hat_group(sys);
  TransferReport r;
  r.order = hat.size();
  r.p_nilpotent_G = is_p_nilpotent(*sys->group, p).nilpotent;
  r.p_nilpotent_hat = is_p_nilpotent(hat.group, p).nilpotent;
  r.sylow_cyclic_G = sylow_cyclic(*sys->group, p);
  r.sylow_cyclic_hat = sylow_cyclic(hat.group, p);
  r.lemma1_agrees = r.p_nilpotent_G == r.p_nilpotent_hat;
  r.lemma2_agrees = r.sylow_cyclic_G == r.sylow_cyclic_hat;
  return r;
}

}  // namespace gring
