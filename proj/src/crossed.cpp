#include "gring/crossed.hpp"

#include <sstream>

namespace gring {

SystemPtr make_system(std::shared_ptr<const FiniteField> field, std::shared_ptr<const FiniteGroup> group,
                      SigmaAction sigma, Cocycle alpha, std::string name) {
  auto sys = std::make_shared<CrossedSystem>();
  sys->field = std::move(field);
  sys->group = std::move(group);
  int n = sys->group->size();
  if (static_cast<int>(sigma.exps.size()) != n) fail(Error::Kind::InvalidArgument, "sigma length must equal |G|");
  if (alpha.n != n) fail(Error::Kind::InvalidArgument, "alpha must be |G| x |G|");
  for (auto& e : sigma.exps) {
    e %= sys->field->m();
    if (e < 0) e += sys->field->m();
  }
  sys->sigma = std::move(sigma);
  sys->alpha = std::move(alpha);
  sys->twisted_only = sys->sigma.trivial();
  if (name.empty()) {
    std::ostringstream os;
    os << "F" << sys->field->q() << (sys->twisted_only ? "" : ";skew") << "[" << sys->group->name() << "]";
    name = os.str();
  }
  sys->name = std::move(name);
  return sys;
}

ValidationReport validate_crossed_system(const CrossedSystem& sys) {
  ValidationReport rep;
  const FiniteField& f = *sys.field;
  const FiniteGroup& g = *sys.group;
  int n = g.size(), m = f.m();

  if (sys.sigma.exps[0] != 0)
    rep.violations.push_back({0, 0, -1, -1, "sigma(e) must be the identity automorphism"});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!f.is_unit(sys.alpha_at(x, y))) {
        std::ostringstream os;
        os << "alpha(" << x << "," << y << ") is not a unit";
        rep.violations.push_back({0, x, y, -1, os.str()});
      }
  if (!rep.ok()) return rep;  // unit failures make the identities meaningless

  // condition 1: sigma(x) o sigma(y) = sigma(xy). Checked two ways: on the
  // Frobenius exponents and directly on a generating element.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool hom = (sys.sigma.exps[static_cast<size_t>(x)] + sys.sigma.exps[static_cast<size_t>(y)]) % m ==
                 sys.sigma.exps[static_cast<size_t>(g.mul(x, y))];
      uint32_t w = f.primitive();
      bool direct = sys.sigma_apply(x, sys.sigma_apply(y, w)) == sys.sigma_apply(g.mul(x, y), w);
      if (hom != direct) {
        rep.violations.push_back({1, x, y, -1, "exponent and direct action checks disagree"});
      } else if (!hom) {
        std::ostringstream os;
        os << "sigma(" << x << ")sigma(" << y << ") != sigma(" << g.mul(x, y) << ")";
        rep.violations.push_back({1, x, y, -1, os.str()});
      }
    }

  // condition 3
  for (int x = 0; x < n; ++x)
    if (sys.alpha_at(x, 0) != 1 || sys.alpha_at(0, x) != 1) {
      std::ostringstream os;
      os << "alpha(" << x << ",e) or alpha(e," << x << ") != 1";
      rep.violations.push_back({3, x, -1, -1, os.str()});
    }

  // condition 2: alpha(x,y) alpha(xy,z) = sigma(x)(alpha(y,z)) alpha(x,yz)
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        uint32_t lhs = f.mul(sys.alpha_at(x, y), sys.alpha_at(g.mul(x, y), z));
        uint32_t rhs = f.mul(sys.sigma_apply(x, sys.alpha_at(y, z)), sys.alpha_at(x, g.mul(y, z)));
        if (lhs != rhs) {
          std::ostringstream os;
          os << "cocycle identity fails at (" << x << "," << y << "," << z << ")";
          rep.violations.push_back({2, x, y, z, os.str()});
        }
      }
  return rep;
}

Cocycle coboundary_from_lambda(const FiniteField& field, const FiniteGroup& group, const SigmaAction& sigma,
                               const std::vector<uint32_t>& lambda) {
  int n = group.size();
  if (static_cast<int>(lambda.size()) != n) fail(Error::Kind::InvalidArgument, "lambda length must equal |G|");
  if (lambda[0] != 1) fail(Error::Kind::InvalidArgument, "lambda(e) must be 1");
  for (uint32_t v : lambda)
    if (!field.is_unit(v)) fail(Error::Kind::ZeroLambdaEntry, "lambda entries must be units");
  Cocycle a = Cocycle::trivial(n);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      uint32_t v = field.mul(lambda[static_cast<size_t>(g)],
                             field.frobenius(lambda[static_cast<size_t>(h)], sigma.exps[static_cast<size_t>(g)]));
      a.at(g, h) = field.div(v, lambda[static_cast<size_t>(group.mul(g, h))]);
    }
  return a;
}

std::optional<std::vector<uint32_t>> is_coboundary(const FiniteField& field, const FiniteGroup& group,
                                                   const Cocycle& alpha, uint64_t budget) {
  int n = group.size();
  uint32_t units = field.q() - 1;
  uint64_t total = 1;
  for (int i = 1; i < n; ++i) {
    total *= units;
    if (total > budget) fail(Error::Kind::BudgetExceeded, "coboundary search space exceeds budget");
  }
  std::vector<uint32_t> lambda(static_cast<size_t>(n), 1);
  std::vector<uint32_t> idx(static_cast<size_t>(n), 0);  // odometer over unit codes 1..q-1
  for (uint64_t step = 0; step < total; ++step) {
    for (int i = 1; i < n; ++i) lambda[static_cast<size_t>(i)] = idx[static_cast<size_t>(i)] + 1;
    bool match = true;
    for (int g = 0; g < n && match; ++g)
      for (int h = 0; h < n && match; ++h) {
        uint32_t v = field.div(field.mul(lambda[static_cast<size_t>(g)], lambda[static_cast<size_t>(h)]),
                               lambda[static_cast<size_t>(group.mul(g, h))]);
        if (v != alpha.at(g, h)) match = false;
      }
    if (match) return lambda;
    for (int i = 1; i < n; ++i) {
      if (++idx[static_cast<size_t>(i)] < units) break;
      idx[static_cast<size_t>(i)] = 0;
    }
  }
  return std::nullopt;
}

namespace {

struct CocycleSearch {
  const FiniteField& f;
  const FiniteGroup& g;
  const CrossedSystem* sys_for_sigma;
  const SigmaAction& sigma;
  int n;
  uint64_t budget;
  uint64_t nodes = 0;
  std::vector<uint32_t> tab;  // 0 = unassigned
  std::vector<Cocycle> out;

  uint32_t sig(int x, uint32_t a) const { return f.frobenius(a, sigma.exps[static_cast<size_t>(x)]); }
  uint32_t sig_inv(int x, uint32_t a) const {
    int e = sigma.exps[static_cast<size_t>(x)];
    return f.frobenius(a, (f.m() - e) % f.m());
  }
  uint32_t& at(int x, int y) { return tab[static_cast<size_t>(x) * static_cast<size_t>(n) + static_cast<size_t>(y)]; }
  uint32_t get(int x, int y) const { return tab[static_cast<size_t>(x) * static_cast<size_t>(n) + static_cast<size_t>(y)]; }

  // The identity alpha(x,y) alpha(xy,z) = sigma(x)(alpha(y,z)) alpha(x,yz)
  // determines any one unassigned factor from the other three.
  // Returns false on contradiction; appends forced assignments to trail.
  bool propagate(std::vector<std::pair<int, int>>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z) {
            int xy = g.mul(x, y), yz = g.mul(y, z);
            uint32_t a = get(x, y), b = get(xy, z), c = get(y, z), d = get(x, yz);
            int unknown = (!a) + (!b) + (!c) + (!d);
            if (unknown > 1) continue;
            if (unknown == 0) {
              if (f.mul(a, b) != f.mul(sig(x, c), d)) return false;
              continue;
            }
            uint32_t v;
            int ux, uy;
            if (!a) {
              v = f.div(f.mul(sig(x, c), d), b);
              ux = x;
              uy = y;
            } else if (!b) {
              v = f.div(f.mul(sig(x, c), d), a);
              ux = xy;
              uy = z;
            } else if (!c) {
              v = sig_inv(x, f.div(f.mul(a, b), d));
              ux = y;
              uy = z;
            } else {
              v = f.div(f.mul(a, b), sig(x, c));
              ux = x;
              uy = yz;
            }
            if (!v) return false;
            at(ux, uy) = v;
            trail.push_back({ux, uy});
            changed = true;
          }
    }
    return true;
  }

  void undo(std::vector<std::pair<int, int>>& trail, size_t mark) {
    while (trail.size() > mark) {
      auto [x, y] = trail.back();
      trail.pop_back();
      at(x, y) = 0;
    }
  }

  void search(std::vector<std::pair<int, int>>& trail) {
    if (++nodes > budget) fail(Error::Kind::BudgetExceeded, "cocycle enumeration exceeded budget");
    int fx = -1, fy = -1;
    for (int x = 1; x < n && fx < 0; ++x)
      for (int y = 1; y < n; ++y)
        if (!get(x, y)) {
          fx = x;
          fy = y;
          break;
        }
    if (fx < 0) {
      Cocycle c;
      c.n = n;
      c.tab = tab;
      out.push_back(std::move(c));
      return;
    }
    for (uint32_t v = 1; v < f.q(); ++v) {
      size_t mark = trail.size();
      at(fx, fy) = v;
      trail.push_back({fx, fy});
      if (propagate(trail)) search(trail);
      undo(trail, mark);
    }
  }
};

}  // namespace

std::vector<Cocycle> enumerate_cocycles(const FiniteField& field, const FiniteGroup& group, const SigmaAction& sigma,
                                        uint64_t budget) {
  int n = group.size();
  CocycleSearch s{field, group, nullptr, sigma, n, budget, 0, {}, {}};
  s.tab.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    s.at(x, 0) = 1;
    s.at(0, x) = 1;
  }
  std::vector<std::pair<int, int>> trail;
  if (!s.propagate(trail)) return {};
  s.search(trail);
  return s.out;
}

Cocycle cyclic_twist_cocycle(const FiniteField& field, int k, uint32_t c) {
  if (!field.is_unit(c)) fail(Error::Kind::InvalidArgument, "twist constant must be a unit");
  Cocycle a = Cocycle::trivial(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a.at(i, j) = field.pow(c, (i + j) / k);
  return a;
}

Cocycle inflate_cocycle(const FiniteGroup& group, const std::vector<int>& proj, const Cocycle& alpha_q) {
  int n = group.size();
  Cocycle a = Cocycle::trivial(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) a.at(x, y) = alpha_q.at(proj[static_cast<size_t>(x)], proj[static_cast<size_t>(y)]);
  return a;
}

}  // namespace gring
