#include "gring/fpmat.hpp"

#include <algorithm>

namespace gring {

int inv_mod(int a, int p) {
  a %= p;
  if (a < 0) a += p;
  for (int b = 1; b < p; ++b)
    if ((a * b) % p == 1) return b;
  return 0;
}

bool FpSpace::insert(std::vector<uint8_t> v) {
  v = reduce(std::move(v));
  std::size_t piv = cols_;
  for (std::size_t c = 0; c < cols_; ++c)
    if (v[c]) {
      piv = c;
      break;
    }
  if (piv == cols_) return false;
  int s = inv_mod(v[piv], p_);
  for (auto& x : v) x = static_cast<uint8_t>((x * s) % p_);
  // clear the new pivot column in existing rows
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    int c = rows_[r][piv];
    if (!c) continue;
    for (std::size_t j = piv; j < cols_; ++j)
      rows_[r][j] = static_cast<uint8_t>((rows_[r][j] + (p_ - c) * v[j]) % p_);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, piv);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
  return true;
}

std::vector<uint8_t> FpSpace::reduce(std::vector<uint8_t> v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    int c = v[pivots_[r]];
    if (!c) continue;
    const auto& row = rows_[r];
    for (std::size_t j = pivots_[r]; j < cols_; ++j)
      v[j] = static_cast<uint8_t>((v[j] + (p_ - c) * row[j]) % p_);
  }
  return v;
}

bool FpSpace::contains(const std::vector<uint8_t>& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](uint8_t x) { return x == 0; });
}

bool FpSpace::contains_space(const FpSpace& other) const {
  for (const auto& r : other.rows())
    if (!contains(r)) return false;
  return true;
}

std::vector<uint8_t> FpSpace::key() const {
  std::vector<uint8_t> k;
  k.reserve(rows_.size() * cols_ + 1);
  k.push_back(static_cast<uint8_t>(rows_.size()));
  for (const auto& r : rows_) k.insert(k.end(), r.begin(), r.end());
  return k;
}

FpSpace span_of(int p, std::size_t cols, const std::vector<std::vector<uint8_t>>& vecs) {
  FpSpace s(p, cols);
  for (const auto& v : vecs) s.insert(v);
  return s;
}

FpSpace sum_spaces(const FpSpace& a, const FpSpace& b) {
  FpSpace s = a;
  for (const auto& r : b.rows()) s.insert(r);
  return s;
}

FpSpace kernel_space(int p, std::size_t cols, const std::vector<std::vector<uint8_t>>& m) {
  std::vector<std::vector<uint8_t>> a = m;
  std::size_t nrows = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < nrows; ++c) {
    std::size_t sel = nrows;
    for (std::size_t i = r; i < nrows; ++i)
      if (a[i][c]) {
        sel = i;
        break;
      }
    if (sel == nrows) continue;
    std::swap(a[r], a[sel]);
    int s = inv_mod(a[r][c], p);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = static_cast<uint8_t>((a[r][j] * s) % p);
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r || !a[i][c]) continue;
      int f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        a[i][j] = static_cast<uint8_t>((a[i][j] + (p - f) * a[r][j]) % p);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  FpSpace ker(p, cols);
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<uint8_t> x(cols, 0);
    x[f] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      x[pivot_col[i]] = static_cast<uint8_t>((p - a[i][f]) % p);
    ker.insert(std::move(x));
  }
  return ker;
}

std::size_t rank_of(int p, std::vector<std::vector<uint8_t>> m) {
  if (m.empty()) return 0;
  FpSpace s(p, m[0].size());
  for (auto& r : m) s.insert(std::move(r));
  return s.dim();
}

std::vector<uint8_t> mat_vec(int p, const std::vector<std::vector<uint8_t>>& m, const std::vector<uint8_t>& x) {
  std::vector<uint8_t> y(m.size(), 0);
  for (std::size_t r = 0; r < m.size(); ++r) {
    int acc = 0;
    for (std::size_t c = 0; c < x.size(); ++c) acc += m[r][c] * x[c];
    y[r] = static_cast<uint8_t>(acc % p);
  }
  return y;
}

}  // namespace gring
