#include "gring/codes.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

namespace gring {

std::vector<uint32_t> LinearCode::codeword(const std::vector<uint8_t>& fp_coeffs) const {
  const FiniteField& f = *sys->field;
  int n = sys->n();
  std::vector<uint32_t> w(static_cast<size_t>(n), 0);
  for (size_t r = 0; r < basis.dim(); ++r) {
    uint8_t c = fp_coeffs[r];
    if (!c) continue;
    RingElem e = elem_from_fp(sys, basis.rows()[r]);
    for (int g = 0; g < n; ++g)
      w[static_cast<size_t>(g)] = f.add(w[static_cast<size_t>(g)], f.mul(c, e.coeffs[static_cast<size_t>(g)]));
  }
  return w;
}

namespace {

// Contracted basis rows as K-vectors, reused by the enumeration loops.
std::vector<std::vector<uint32_t>> k_rows(const LinearCode& code) {
  std::vector<std::vector<uint32_t>> rows;
  rows.reserve(code.basis.dim());
  for (const auto& r : code.basis.rows()) rows.push_back(elem_from_fp(code.sys, r).coeffs);
  return rows;
}

uint64_t pow_checked(uint64_t base, int e, uint64_t cap) {
  uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    r *= base;
    if (r > cap) fail(Error::Kind::BudgetExceeded, "codeword enumeration exceeds budget");
  }
  return r;
}

// Walks all nonzero F_p-combinations of the rows. Each odometer step adds
// one row to the running codeword per touched digit (a p-1 -> 0 carry is
// also a single addition since -(p-1) = 1 mod p). visit returns false to stop.
void enumerate_codewords(const LinearCode& code, uint64_t budget,
                         const std::function<bool(const std::vector<uint32_t>&, int)>& visit) {
  const FiniteField& f = *code.sys->field;
  int p = f.p();
  int k = static_cast<int>(code.basis.dim());
  if (k == 0) return;
  uint64_t total = pow_checked(static_cast<uint64_t>(p), k, budget);
  auto rows = k_rows(code);
  int n = code.sys->n();
  std::vector<uint32_t> w(static_cast<size_t>(n), 0);
  std::vector<uint8_t> digit(static_cast<size_t>(k), 0);
  int weight = 0;
  auto add_row = [&](int r) {
    const auto& row = rows[static_cast<size_t>(r)];
    for (int g = 0; g < n; ++g) {
      uint32_t before = w[static_cast<size_t>(g)];
      uint32_t after = f.add(before, row[static_cast<size_t>(g)]);
      w[static_cast<size_t>(g)] = after;
      weight += (after != 0) - (before != 0);
    }
  };
  for (uint64_t step = 1; step < total; ++step) {
    int i = 0;
    for (;; ++i) {
      add_row(i);
      if (++digit[static_cast<size_t>(i)] < p) break;
      digit[static_cast<size_t>(i)] = 0;
    }
    (void)i;
    if (!visit(w, weight)) return;
  }
}

}  // namespace

std::vector<std::vector<uint32_t>> LinearCode::all_codewords(uint64_t budget) const {
  std::vector<std::vector<uint32_t>> out;
  out.push_back(std::vector<uint32_t>(static_cast<size_t>(sys->n()), 0));
  enumerate_codewords(*this, budget, [&](const std::vector<uint32_t>& w, int) {
    out.push_back(w);
    return true;
  });
  return out;
}

LinearCode code_from_ideal(const IdealHandle& ideal) {
  LinearCode c;
  c.sys = ideal.sys;
  c.basis = ideal.basis;
  c.k_linear = ideal.k_linear;
  c.params.n = ideal.sys->n();
  c.params.k_p = ideal.dim_p;
  c.params.k = ideal.k_linear ? ideal.dim_K : -1;
  return c;
}

int min_distance(const LinearCode& code, uint64_t budget) {
  if (code.is_zero()) fail(Error::Kind::ZeroCode, "minimum distance of the zero code");
  int best = code.params.n + 1;
  enumerate_codewords(code, budget, [&](const std::vector<uint32_t>&, int weight) {
    if (weight < best) best = weight;
    return best > 1;
  });
  return best;
}

std::vector<int> weight_distribution(const LinearCode& code, uint64_t budget) {
  std::vector<int> dist(static_cast<size_t>(code.params.n) + 1, 0);
  dist[0] = 1;
  if (code.is_zero()) return dist;
  enumerate_codewords(code, budget, [&](const std::vector<uint32_t>&, int weight) {
    ++dist[static_cast<size_t>(weight)];
    return true;
  });
  return dist;
}

std::pair<int, std::vector<int>> s_rank(const FiniteGroup& g, const std::vector<int>& s) {
  if (s.empty()) fail(Error::Kind::InvalidArgument, "S must be nonempty");
  std::vector<bool> covered(static_cast<size_t>(g.size()), false);
  std::vector<int> seq;
  for (int x = 0; x < g.size(); ++x) {
    bool escapes = false;
    for (int e : s)
      if (!covered[static_cast<size_t>(g.mul(e, x))]) {
        escapes = true;
        break;
      }
    if (!escapes) continue;
    seq.push_back(x);
    for (int e : s) covered[static_cast<size_t>(g.mul(e, x))] = true;
  }
  return {static_cast<int>(seq.size()), seq};
}

BoundReport bound_report(const RingElem& f) {
  BoundReport r;
  r.group_order = f.sys->n();
  r.support = f.support_size();
  IdealHandle image = principal_ideal(f, Side::Right);  // image of T_f: v -> f v is f R
  if (image.k_linear) {
    r.rank = image.dim_K;
    r.rank_is_K = true;
  } else {
    r.rank = image.dim_p;
    r.rank_is_K = false;
  }
  r.product = static_cast<long long>(r.support) * r.rank;
  r.holds = f.is_zero() ? true : r.product >= r.group_order;
  r.amgm_holds = true;
  return r;
}

BoundReport bound_report(const LinearCode& code) {
  if (!code.k_linear)
    fail(Error::Kind::NotKLinear, "bound over dim_K refused for a non-K-linear code");
  if (code.is_zero()) fail(Error::Kind::ZeroCode, "bound report of the zero code");
  BoundReport r;
  r.group_order = code.params.n;
  int d = code.params.d >= 0 ? code.params.d : min_distance(code);
  r.support = d;
  r.rank = code.params.k;
  r.rank_is_K = true;
  r.product = static_cast<long long>(d) * r.rank;
  r.holds = r.product >= r.group_order;
  long long sum = d + r.rank;
  r.amgm_holds = 4ll * r.group_order <= sum * sum && sum <= r.group_order + 1;
  return r;
}

namespace {

// K-span of {c * (b h-bar) : b field basis, h in H}
IdealHandle span_cKH(const SystemPtr& sys, const RingElem& c, const std::vector<int>& H) {
  std::vector<RingElem> gens;
  for (int h : H)
    for (int j = 0; j < sys->field->m(); ++j)
      gens.push_back(ring_mul(c, ring_basis_elem(sys, sys->field->pow(static_cast<uint32_t>(sys->field->p()), j), h)));
  return make_handle_from_elems(sys, Side::Subspace, gens);
}

}  // namespace

ExtremalWitness extremal_decompose(const LinearCode& code) {
  const SystemPtr& sys = code.sys;
  if (!code.k_linear) fail(Error::Kind::NotKLinear, "extremal decomposition needs a K-linear code");
  if (code.is_zero()) fail(Error::Kind::ZeroCode, "extremal decomposition of the zero code");
  int n = code.params.n;
  int d = code.params.d >= 0 ? code.params.d : min_distance(code);
  if (static_cast<long long>(d) * code.params.k != n)
    fail(Error::Kind::DecompositionFailed, "code does not attain d * dim = |G|");

  // first minimum-weight codeword in enumeration order
  std::vector<uint32_t> cw;
  enumerate_codewords(code, 10'000'000, [&](const std::vector<uint32_t>& w, int weight) {
    if (weight == d) {
      cw = w;
      return false;
    }
    return true;
  });
  RingElem c = ring_zero(sys);
  c.coeffs = cw;
  // translate so the identity lies in the support
  if (!c.coeffs[0]) {
    int h = 0;
    while (!c.coeffs[static_cast<size_t>(h)]) ++h;
    c = ring_mul(c, ring_basis_elem(sys, 1, sys->group->inv(h)));
    if (!code.basis.contains(elem_to_fp(c)))
      fail(Error::Kind::DecompositionFailed, "translated codeword left the code; input was not a right ideal");
  }
  std::vector<int> H;
  for (int g = 0; g < n; ++g)
    if (c.coeffs[static_cast<size_t>(g)]) H.push_back(g);
  if (static_cast<int>(H.size()) != d || !is_subgroup(*sys->group, H))
    fail(Error::Kind::DecompositionFailed, "support of the minimum-weight codeword is not a subgroup");
  IdealHandle ckh = span_cKH(sys, c, H);
  if (!ckh.k_linear || ckh.dim_K != 1)
    fail(Error::Kind::DecompositionFailed, "c K^alpha H is not one-dimensional");
  IdealHandle ckg = principal_ideal(c, Side::Right);
  if (ckg.basis != code.basis) fail(Error::Kind::DecompositionFailed, "c K^alpha G differs from the code");
  return ExtremalWitness{std::move(c), std::move(H)};
}

LinearCode extremal_construct(const SystemPtr& sys, const std::vector<int>& H, const RingElem& c) {
  if (!sys->twisted_only) fail(Error::Kind::InvalidArgument, "extremal construction requires trivial sigma");
  if (c.sys.get() != sys.get()) fail(Error::Kind::SystemMismatch, "generator belongs to another system");
  if (!is_subgroup(*sys->group, H)) fail(Error::Kind::NotASubgroup, "H is not a subgroup");
  for (int g = 0; g < sys->n(); ++g)
    if (c.coeffs[static_cast<size_t>(g)] && !std::binary_search(H.begin(), H.end(), g))
      fail(Error::Kind::InvalidArgument, "generator support must lie in H");
  IdealHandle ckh = span_cKH(sys, c, H);
  if (!ckh.k_linear || ckh.dim_K != 1) fail(Error::Kind::NotOneDimensional, "c K^alpha H must be one-dimensional");
  LinearCode code = code_from_ideal(principal_ideal(c, Side::Right));
  code.params.d = min_distance(code);
  int hsize = static_cast<int>(H.size());
  int index = sys->n() / hsize;
  if (code.params.d != hsize || code.params.k != index)
    fail(Error::Kind::DecompositionFailed, "constructed code missed [|G|, [G:H], |H|]");
  return code;
}

std::vector<SearchHit> search_codes(const SystemPtr& sys, const SearchFilter& filter, uint64_t budget, int jobs) {
  uint64_t total = 1;
  for (int i = 0; i < sys->n(); ++i) {
    total *= sys->field->q();
    if (total > budget) fail(Error::Kind::BudgetExceeded, "generator sweep exceeds budget");
  }
  // map canonical basis -> smallest generator code vector
  std::map<std::vector<uint8_t>, std::vector<uint32_t>> classes;
  auto sweep = [&](uint64_t lo, uint64_t hi, std::map<std::vector<uint8_t>, std::vector<uint32_t>>& out) {
    int n = sys->n();
    uint32_t q = sys->field->q();
    RingElem v = ring_zero(sys);
    for (uint64_t idx = lo; idx < hi; ++idx) {
      uint64_t t = idx;
      for (int i = 0; i < n; ++i) {
        v.coeffs[static_cast<size_t>(i)] = static_cast<uint32_t>(t % q);
        t /= q;
      }
      IdealHandle h = principal_ideal(v, Side::Right);
      auto key = h.basis.key();
      auto it = out.find(key);
      if (it == out.end()) out.emplace(std::move(key), v.coeffs);
    }
  };
  if (jobs <= 1) {
    sweep(0, total, classes);
  } else {
    std::vector<std::map<std::vector<uint8_t>, std::vector<uint32_t>>> parts(static_cast<size_t>(jobs));
    std::vector<std::thread> threads;
    uint64_t chunk = (total + static_cast<uint64_t>(jobs) - 1) / static_cast<uint64_t>(jobs);
    for (int t = 0; t < jobs; ++t) {
      uint64_t lo = chunk * static_cast<uint64_t>(t), hi = std::min(total, lo + chunk);
      if (lo >= hi) break;
      threads.emplace_back([&, lo, hi, t] { sweep(lo, hi, parts[static_cast<size_t>(t)]); });
    }
    for (auto& th : threads) th.join();
    for (auto& part : parts)
      for (auto& [k, v] : part) {
        auto it = classes.find(k);
        if (it == classes.end() || v < it->second) classes[k] = v;
      }
  }
  std::vector<SearchHit> hits;
  for (auto& [key, gen] : classes) {
    RingElem v{sys, gen};
    IdealHandle h = principal_ideal(v, Side::Right);
    if (h.dim_p == 0) continue;
    LinearCode code = code_from_ideal(h);
    code.params.d = min_distance(code);
    if (code.params.d < filter.min_d) continue;
    if (filter.target) {
      if (filter.target->n != code.params.n || filter.target->k_p != code.params.k_p ||
          filter.target->d != code.params.d)
        continue;
    }
    hits.push_back(SearchHit{code.params, code.k_linear, gen});
  }
  std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
    if (a.params.d != b.params.d) return a.params.d > b.params.d;
    if (a.params.k_p != b.params.k_p) return a.params.k_p > b.params.k_p;
    return a.generator < b.generator;
  });
  return hits;
}

}  // namespace gring
