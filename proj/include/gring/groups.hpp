#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gring/errors.hpp"

namespace gring {

// Finite group as a Cayley table. The identity is always index 0; tables
// built from other indexings are relabeled at construction. Latin-square
// and associativity checks run at construction (full for n <= 64,
// a deterministic sample above).
class FiniteGroup {
 public:
  FiniteGroup() = default;  // empty; fill via the factories
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table, std::string name = "G");
  // names: C<k>, D<k> (order 2k), S3, A4, Q8, K4 (case-insensitive)
  static FiniteGroup builtin(const std::string& name);
  static FiniteGroup cyclic(int k);
  static FiniteGroup dihedral(int k);
  static FiniteGroup symmetric3();
  static FiniteGroup alternating4();
  static FiniteGroup quaternion8();
  static FiniteGroup klein4();
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

  int size() const { return n_; }
  int mul(int i, int j) const { return table_[static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j)]; }
  int inv(int i) const { return inverse_[static_cast<size_t>(i)]; }
  int order(int i) const { return order_[static_cast<size_t>(i)]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int pow(int g, int e) const;
  bool is_abelian() const;
  bool is_cyclic_group() const;
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  std::vector<std::vector<int>> table_rows() const;

 private:
  int n_ = 0;
  std::vector<int> table_, inverse_, order_;
  std::string name_;
  void finish_build();  // validates, fills inverse/order
};

struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<int> members;  // sorted, contains 0

  int size() const { return static_cast<int>(members.size()); }
  bool contains(int x) const;
};

Subgroup generate(const FiniteGroup& g, const std::vector<int>& gens);
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& set);
bool is_normal(const FiniteGroup& g, const std::vector<int>& set);
bool is_cyclic_subset(const FiniteGroup& g, const std::vector<int>& set);

struct Quotient {
  FiniteGroup group;
  std::vector<int> projection;  // parent index -> quotient index
  std::vector<int> reps;        // coset representatives, reps[0] = identity
};

Quotient quotient_with_projection(const FiniteGroup& g, const Subgroup& n);

Subgroup commutator_subgroup(const FiniteGroup& g);

// Sylow p-subgroup by greedy closure over p-elements; {e} when p does not
// divide |G|.
Subgroup sylow_subgroup(const FiniteGroup& g, int p);
bool sylow_cyclic(const FiniteGroup& g, int p);

struct PNilpotency {
  bool nilpotent = false;
  Subgroup complement;              // valid when nilpotent
  std::pair<int, int> violating{-1, -1};  // valid when not
};

// Decides p-nilpotency from the definition: the elements of order coprime
// to p form a subgroup (the normal p-complement) iff that set is closed
// under multiplication.
PNilpotency is_p_nilpotent(const FiniteGroup& g, int p);

std::vector<Subgroup> all_subgroups(const FiniteGroup& g);
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g);

// The subgroup as a standalone group; index_map[i] = parent index of element i.
FiniteGroup subgroup_as_group(const Subgroup& s, std::vector<int>* index_map = nullptr);

int p_part(int n, int p);

}  // namespace gring
