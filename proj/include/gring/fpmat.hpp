#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gring {

int inv_mod(int a, int p);

// Row space over F_p kept in reduced row echelon form at all times.
// Rows are ordered by pivot column, pivots are 1, and pivot columns are
// cleared above and below, so equal spaces have identical rows. All
// subspace comparisons and dedup keys in the project rely on that.
class FpSpace {
 public:
  FpSpace() : p_(2), cols_(0) {}
  FpSpace(int p, std::size_t cols) : p_(p), cols_(cols) {}

  int p() const { return p_; }
  std::size_t cols() const { return cols_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<std::vector<uint8_t>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Returns true if the vector enlarged the space.
  bool insert(std::vector<uint8_t> v);
  bool contains(const std::vector<uint8_t>& v) const;
  std::vector<uint8_t> reduce(std::vector<uint8_t> v) const;
  bool contains_space(const FpSpace& other) const;

  bool operator==(const FpSpace& o) const { return p_ == o.p_ && cols_ == o.cols_ && rows_ == o.rows_; }
  bool operator!=(const FpSpace& o) const { return !(*this == o); }

  // Flattened canonical rows, usable as a map/set key.
  std::vector<uint8_t> key() const;

 private:
  int p_;
  std::size_t cols_;
  std::vector<std::vector<uint8_t>> rows_;
  std::vector<std::size_t> pivots_;
};

FpSpace span_of(int p, std::size_t cols, const std::vector<std::vector<uint8_t>>& vecs);
FpSpace sum_spaces(const FpSpace& a, const FpSpace& b);

// Null space {x : M x = 0} of a rows x cols matrix given row-wise.
FpSpace kernel_space(int p, std::size_t cols, const std::vector<std::vector<uint8_t>>& m);

std::size_t rank_of(int p, std::vector<std::vector<uint8_t>> m);

std::vector<uint8_t> mat_vec(int p, const std::vector<std::vector<uint8_t>>& m, const std::vector<uint8_t>& x);

}  // namespace gring
