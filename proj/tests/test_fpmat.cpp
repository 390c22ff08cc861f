#include <doctest.h>

#include <random>

#include "gring/fpmat.hpp"

using namespace gring;

TEST_CASE("rref form is canonical regardless of insertion order") {
  FpSpace a(3, 4), b(3, 4);
  std::vector<std::vector<uint8_t>> vs = {{1, 2, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 2}};
  for (const auto& v : vs) a.insert(v);
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) b.insert(*it);
  CHECK(a == b);
  CHECK(a.key() == b.key());
  for (const auto& v : vs) CHECK(a.contains(v));
}

TEST_CASE("pivots are one and cleared in both directions") {
  FpSpace s(5, 3);
  s.insert({2, 1, 0});
  s.insert({0, 3, 1});
  for (size_t r = 0; r < s.dim(); ++r) {
    size_t piv = s.pivots()[r];
    CHECK(s.rows()[r][piv] == 1);
    for (size_t other = 0; other < s.dim(); ++other)
      if (other != r) CHECK(s.rows()[other][piv] == 0);
  }
}

TEST_CASE("kernel of a small map over F2") {
  // M = [1 1] has kernel spanned by (1,1)
  FpSpace ker = kernel_space(2, 2, {{1, 1}});
  CHECK(ker.dim() == 1);
  CHECK(ker.contains({1, 1}));
  CHECK(!ker.contains({1, 0}));
}

TEST_CASE("rank plus nullity equals column count") {
  std::mt19937 rng(7);
  for (int p : {2, 3, 5}) {
    for (int trial = 0; trial < 20; ++trial) {
      size_t rows = 1 + rng() % 5, cols = 1 + rng() % 6;
      std::vector<std::vector<uint8_t>> m(rows, std::vector<uint8_t>(cols));
      for (auto& r : m)
        for (auto& x : r) x = static_cast<uint8_t>(rng() % static_cast<uint32_t>(p));
      size_t rank = rank_of(p, m);
      FpSpace ker = kernel_space(p, cols, m);
      CHECK(rank + ker.dim() == cols);
      for (const auto& kv : ker.rows()) {
        auto y = mat_vec(p, m, kv);
        for (auto c : y) CHECK(c == 0);
      }
    }
  }
}

TEST_CASE("sum of spaces") {
  FpSpace a(2, 3), b(2, 3);
  a.insert({1, 0, 0});
  b.insert({0, 1, 0});
  FpSpace s = sum_spaces(a, b);
  CHECK(s.dim() == 2);
  CHECK(s.contains({1, 1, 0}));
  CHECK(!s.contains({0, 0, 1}));
}
