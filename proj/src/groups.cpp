#include "gring/groups.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

namespace gring {

namespace {

std::vector<int> compose_perm(const std::vector<int>& f, const std::vector<int>& g) {
  // (f*g)(x) = f(g(x))
  std::vector<int> r(f.size());
  for (size_t x = 0; x < f.size(); ++x) r[x] = f[static_cast<size_t>(g[x])];
  return r;
}

bool perm_even(const std::vector<int>& p) {
  int inversions = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

FiniteGroup from_permutations(std::vector<std::vector<int>> elems, const std::string& name) {
  std::sort(elems.begin(), elems.end());
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto prod = compose_perm(elems[static_cast<size_t>(i)], elems[static_cast<size_t>(j)]);
      auto it = index.find(prod);
      if (it == index.end()) fail(Error::Kind::NotAGroup, "permutation set not closed");
      table[static_cast<size_t>(i)][static_cast<size_t>(j)] = it->second;
    }
  return FiniteGroup::from_table(table, name);
}

}  // namespace

void FiniteGroup::finish_build() {
  size_t n = static_cast<size_t>(n_);
  // Latin square
  for (size_t i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (size_t j = 0; j < n; ++j) {
      int r = table_[i * n + j], c = table_[j * n + i];
      if (r < 0 || r >= n_ || c < 0 || c >= n_) fail(Error::Kind::NotAGroup, "table entry out of range");
      if (row[static_cast<size_t>(r)] || col[static_cast<size_t>(c)]) fail(Error::Kind::NotAGroup, "table is not a Latin square");
      row[static_cast<size_t>(r)] = col[static_cast<size_t>(c)] = true;
    }
  }
  for (int j = 0; j < n_; ++j)
    if (mul(0, j) != j || mul(j, 0) != j) fail(Error::Kind::NotAGroup, "index 0 is not an identity");
  // associativity: full for n <= 64, deterministic sample above
  auto check_triple = [&](int a, int b, int c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail(Error::Kind::NotAGroup, "associativity fails");
  };
  if (n_ <= 64) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c) check_triple(a, b, c);
  } else {
    uint64_t state = 0x9e3779b97f4a7c15ull;
    for (int t = 0; t < 200000; ++t) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      int a = static_cast<int>((state >> 33) % static_cast<uint64_t>(n_));
      int b = static_cast<int>((state >> 17) % static_cast<uint64_t>(n_));
      int c = static_cast<int>(state % static_cast<uint64_t>(n_));
      check_triple(a, b, c);
    }
  }
  inverse_.assign(n, 0);
  for (int i = 0; i < n_; ++i) {
    int found = -1;
    for (int j = 0; j < n_; ++j)
      if (mul(i, j) == 0) {
        found = j;
        break;
      }
    if (found < 0 || mul(found, i) != 0) fail(Error::Kind::NotAGroup, "missing inverse");
    inverse_[static_cast<size_t>(i)] = found;
  }
  order_.assign(n, 1);
  for (int i = 0; i < n_; ++i) {
    int v = i, ord = 1;
    while (v != 0) {
      v = mul(v, i);
      ++ord;
    }
    order_[static_cast<size_t>(i)] = ord;
  }
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table, std::string name) {
  FiniteGroup g;
  g.n_ = static_cast<int>(table.size());
  g.name_ = std::move(name);
  if (g.n_ == 0) fail(Error::Kind::NotAGroup, "empty table");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != g.n_) fail(Error::Kind::NotAGroup, "table is not square");
  // locate the identity and relabel it to index 0
  int e = -1;
  for (int i = 0; i < g.n_ && e < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < g.n_; ++j)
      if (table[static_cast<size_t>(i)][static_cast<size_t>(j)] != j || table[static_cast<size_t>(j)][static_cast<size_t>(i)] != j) {
        ok = false;
        break;
      }
    if (ok) e = i;
  }
  if (e < 0) fail(Error::Kind::NotAGroup, "no identity element");
  std::vector<int> relabel(static_cast<size_t>(g.n_));
  for (int i = 0; i < g.n_; ++i) relabel[static_cast<size_t>(i)] = i < e ? i + 1 : (i == e ? 0 : i);
  g.table_.assign(static_cast<size_t>(g.n_) * static_cast<size_t>(g.n_), 0);
  for (int i = 0; i < g.n_; ++i)
    for (int j = 0; j < g.n_; ++j)
      g.table_[static_cast<size_t>(relabel[static_cast<size_t>(i)]) * static_cast<size_t>(g.n_) +
               static_cast<size_t>(relabel[static_cast<size_t>(j)])] =
          relabel[static_cast<size_t>(table[static_cast<size_t>(i)][static_cast<size_t>(j)])];
  g.finish_build();
  return g;
}

FiniteGroup FiniteGroup::cyclic(int k) {
  if (k < 1) fail(Error::Kind::InvalidArgument, "cyclic order must be positive");
  std::vector<std::vector<int>> t(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(k)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) t[static_cast<size_t>(i)][static_cast<size_t>(j)] = (i + j) % k;
  return from_table(t, "C" + std::to_string(k));
}

FiniteGroup FiniteGroup::klein4() {
  auto g = direct_product(cyclic(2), cyclic(2));
  g.set_name("K4");
  return g;
}

FiniteGroup FiniteGroup::dihedral(int k) {
  if (k < 2) fail(Error::Kind::InvalidArgument, "dihedral parameter must be >= 2");
  if (k == 2) {
    auto g = klein4();
    g.set_name("D2");
    return g;
  }
  std::vector<std::vector<int>> elems;
  std::vector<int> r(static_cast<size_t>(k)), s(static_cast<size_t>(k));
  for (int x = 0; x < k; ++x) {
    r[static_cast<size_t>(x)] = (x + 1) % k;
    s[static_cast<size_t>(x)] = (k - x) % k;
  }
  std::vector<int> rot(static_cast<size_t>(k));
  std::iota(rot.begin(), rot.end(), 0);
  for (int i = 0; i < k; ++i) {
    elems.push_back(rot);
    elems.push_back(compose_perm(s, rot));
    rot = compose_perm(r, rot);
  }
  return from_permutations(elems, "D" + std::to_string(k));
}

FiniteGroup FiniteGroup::symmetric3() {
  std::vector<std::vector<int>> elems;
  std::vector<int> p = {0, 1, 2};
  do elems.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return from_permutations(elems, "S3");
}

FiniteGroup FiniteGroup::alternating4() {
  std::vector<std::vector<int>> elems;
  std::vector<int> p = {0, 1, 2, 3};
  do {
    if (perm_even(p)) elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return from_permutations(elems, "A4");
}

FiniteGroup FiniteGroup::quaternion8() {
  // elements (s, a): index s*4 + a with a in {1, i, j, k}, s the sign
  static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  // sign[a][b]: extra minus in (axis a)*(axis b); e.g. i*j=k, j*i=-k
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int sx = x / 4, ax = x % 4, sy = y / 4, ay = y % 4;
      int a = axis[ax][ay];
      int s = (sx + sy + sign[ax][ay]) % 2;
      t[static_cast<size_t>(x)][static_cast<size_t>(y)] = s * 4 + a;
    }
  return from_table(t, "Q8");
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  int n = a.size() * b.size();
  std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int x1 = x / b.size(), x2 = x % b.size(), y1 = y / b.size(), y2 = y % b.size();
      t[static_cast<size_t>(x)][static_cast<size_t>(y)] = a.mul(x1, y1) * b.size() + b.mul(x2, y2);
    }
  return from_table(t, a.name() + "x" + b.name());
}

FiniteGroup FiniteGroup::builtin(const std::string& name) {
  std::string s;
  for (char c : name) s += static_cast<char>(::tolower(c));
  if (s == "s3") return symmetric3();
  if (s == "a4") return alternating4();
  if (s == "q8") return quaternion8();
  if (s == "k4" || s == "klein4" || s == "v4") return klein4();
  if (s.size() >= 2 && (s[0] == 'c' || s[0] == 'd')) {
    int k = std::atoi(s.c_str() + 1);
    if (k > 0) return s[0] == 'c' ? cyclic(k) : dihedral(k);
  }
  fail(Error::Kind::InvalidArgument, "unknown builtin group: " + name);
}

int FiniteGroup::pow(int g, int e) const {
  if (e < 0) return pow(inv(g), -e);
  int r = 0;
  while (e--) r = mul(r, g);
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (mul(i, j) != mul(j, i)) return false;
  return true;
}

bool FiniteGroup::is_cyclic_group() const {
  for (int i = 0; i < n_; ++i)
    if (order(i) == n_) return true;
  return n_ == 1;
}

std::vector<std::vector<int>> FiniteGroup::table_rows() const {
  std::vector<std::vector<int>> t(static_cast<size_t>(n_), std::vector<int>(static_cast<size_t>(n_)));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t[static_cast<size_t>(i)][static_cast<size_t>(j)] = mul(i, j);
  return t;
}

bool Subgroup::contains(int x) const { return std::binary_search(members.begin(), members.end(), x); }

Subgroup generate(const FiniteGroup& g, const std::vector<int>& gens) {
  std::set<int> closure = {0};
  std::vector<int> work = {0};
  for (int x : gens)
    if (!closure.count(x)) {
      closure.insert(x);
      work.push_back(x);
    }
  while (!work.empty()) {
    int a = work.back();
    work.pop_back();
    std::vector<int> cur(closure.begin(), closure.end());
    for (int b : cur) {
      for (int prod : {g.mul(a, b), g.mul(b, a), g.inv(a)})
        if (!closure.count(prod)) {
          closure.insert(prod);
          work.push_back(prod);
        }
    }
  }
  Subgroup s;
  s.parent = &g;
  s.members.assign(closure.begin(), closure.end());
  return s;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& set) {
  std::set<int> s(set.begin(), set.end());
  if (!s.count(0)) return false;
  for (int a : s)
    for (int b : s)
      if (!s.count(g.mul(a, b))) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, const std::vector<int>& set) {
  if (!is_subgroup(g, set)) return false;
  std::set<int> s(set.begin(), set.end());
  for (int x = 0; x < g.size(); ++x)
    for (int a : s)
      if (!s.count(g.conj(x, a))) return false;
  return true;
}

bool is_cyclic_subset(const FiniteGroup& g, const std::vector<int>& set) {
  std::set<int> s(set.begin(), set.end());
  for (int a : s) {
    std::set<int> gen;
    int v = 0;
    do {
      gen.insert(v);
      v = g.mul(v, a);
    } while (v != 0);
    if (gen == s) return true;
  }
  return false;
}

Quotient quotient_with_projection(const FiniteGroup& g, const Subgroup& n) {
  if (n.parent != &g) fail(Error::Kind::InvalidArgument, "subgroup belongs to another group");
  if (!is_normal(g, n.members)) fail(Error::Kind::NotNormal, "subgroup is not normal");
  int size = g.size();
  std::vector<int> proj(static_cast<size_t>(size), -1);
  std::vector<int> reps;
  for (int x = 0; x < size; ++x) {
    if (proj[static_cast<size_t>(x)] >= 0) continue;
    int idx = static_cast<int>(reps.size());
    reps.push_back(x);  // smallest member of the coset; identity coset first
    for (int u : n.members) proj[static_cast<size_t>(g.mul(u, x))] = idx;
  }
  int s = static_cast<int>(reps.size());
  std::vector<std::vector<int>> t(static_cast<size_t>(s), std::vector<int>(static_cast<size_t>(s)));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      t[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          proj[static_cast<size_t>(g.mul(reps[static_cast<size_t>(i)], reps[static_cast<size_t>(j)]))];
  Quotient q;
  q.group = FiniteGroup::from_table(t, g.name() + "/N");
  q.projection = std::move(proj);
  q.reps = std::move(reps);
  return q;
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  std::vector<int> comms;
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b) comms.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  return generate(g, comms);
}

int p_part(int n, int p) {
  int r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

Subgroup sylow_subgroup(const FiniteGroup& g, int p) {
  int target = p_part(g.size(), p);
  Subgroup s;
  s.parent = &g;
  s.members = {0};
  if (target == 1) return s;
  std::vector<int> pelems;
  for (int x = 0; x < g.size(); ++x) {
    int o = g.order(x);
    while (o % p == 0) o /= p;
    if (o == 1 && x != 0) pelems.push_back(x);
  }
  // Any p-subgroup below Sylow order extends by some p-element whose closure
  // stays a p-group (normalizer growth), so this loop always reaches target.
  while (s.size() < target) {
    bool grew = false;
    for (int x : pelems) {
      if (s.contains(x)) continue;
      auto gens = s.members;
      gens.push_back(x);
      Subgroup t = generate(g, gens);
      if (t.size() <= target && p_part(t.size(), p) == t.size()) {
        s = std::move(t);
        grew = true;
        break;
      }
    }
    if (!grew) fail(Error::Kind::NotAGroup, "sylow search failed to extend");
  }
  return s;
}

bool sylow_cyclic(const FiniteGroup& g, int p) { return is_cyclic_subset(g, sylow_subgroup(g, p).members); }

PNilpotency is_p_nilpotent(const FiniteGroup& g, int p) {
  std::vector<int> coprime;
  for (int x = 0; x < g.size(); ++x)
    if (g.order(x) % p != 0) coprime.push_back(x);
  std::set<int> s(coprime.begin(), coprime.end());
  PNilpotency r;
  for (int a : coprime)
    for (int b : coprime)
      if (!s.count(g.mul(a, b))) {
        r.nilpotent = false;
        r.violating = {a, b};
        return r;
      }
  r.nilpotent = true;
  r.complement.parent = &g;
  r.complement.members = coprime;
  return r;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> out;
  std::vector<std::vector<int>> work = {{0}};
  seen.insert({0});
  while (!work.empty()) {
    auto cur = work.back();
    work.pop_back();
    Subgroup s;
    s.parent = &g;
    s.members = cur;
    out.push_back(s);
    for (int x = 0; x < g.size(); ++x) {
      if (std::binary_search(cur.begin(), cur.end(), x)) continue;
      auto gens = cur;
      gens.push_back(x);
      auto t = generate(g, gens);
      if (seen.insert(t.members).second) work.push_back(t.members);
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.members.size() != b.members.size() ? a.members.size() < b.members.size() : a.members < b.members;
  });
  return out;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g) {
  std::vector<Subgroup> out;
  for (auto& s : all_subgroups(g))
    if (is_normal(g, s.members)) out.push_back(s);
  return out;
}

FiniteGroup subgroup_as_group(const Subgroup& s, std::vector<int>* index_map) {
  const FiniteGroup& g = *s.parent;
  if (!is_subgroup(g, s.members)) fail(Error::Kind::NotASubgroup, "member set is not a subgroup");
  int k = s.size();
  std::map<int, int> pos;
  for (int i = 0; i < k; ++i) pos[s.members[static_cast<size_t>(i)]] = i;
  std::vector<std::vector<int>> t(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(k)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      t[static_cast<size_t>(i)][static_cast<size_t>(j)] = pos.at(g.mul(s.members[static_cast<size_t>(i)], s.members[static_cast<size_t>(j)]));
  if (index_map) *index_map = s.members;
  return FiniteGroup::from_table(t, "H" + std::to_string(k));
}

}  // namespace gring
