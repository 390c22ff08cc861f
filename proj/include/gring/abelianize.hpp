#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gring/codes.hpp"
#include "gring/ring.hpp"

namespace gring {

// Subgroup N acting on an ideal by u-bar * x = lambda(u) * x; lambda is
// indexed by position in N.members. The compatibility identity
// lambda(uv) alpha(u,v) = lambda(u) lambda(v) is forced by associativity
// and rechecked on detection.
struct ScalarAction {
  Subgroup N;
  std::vector<uint32_t> lambda;

  uint32_t lambda_of(int parent_index) const;
};

std::optional<ScalarAction> detect_scalar_action(const IdealHandle& ideal, const Subgroup& n);

// Monomial map between length-n codes: y[perm[i]] = diag[i] * x[i].
struct MonomialWitness {
  std::vector<int> perm;
  std::vector<uint32_t> diag;

  static MonomialWitness identity(const SystemPtr& sys);
};

std::vector<uint32_t> apply_witness(const FiniteField& f, const MonomialWitness& w, const std::vector<uint32_t>& x);
// first a, then b
MonomialWitness compose_witness(const FiniteField& f, const MonomialWitness& a, const MonomialWitness& b);

// Matched coset data for transporting an ideal from K^alpha G to K H:
// G/N and H/F are identified coset-by-coset, tau matches N with F.
struct TransportPlan {
  Subgroup N;
  FiniteGroup H;
  std::vector<int> F_members;   // normal subgroup of H, |F| = |N|
  std::vector<int> g_reps;      // coset representatives in G, g_reps[0] = e
  std::vector<int> h_reps;      // matched representatives in H
  std::vector<int> coset_of;    // G index -> coset index
  std::vector<int> tau;         // position in N.members -> H index of the F image
  std::vector<std::vector<int>> k_table;  // coset multiplication
  std::string h_name;
};

// H = A x (G/N) with A abelian of order |N|: A = C_{|N|} when
// cyclic_factor, else N itself as a group.
TransportPlan make_product_plan(const SystemPtr& sys, const Subgroup& n, bool cyclic_factor);
void validate_plan(const SystemPtr& sys, const TransportPlan& plan);

struct TransportResult {
  SystemPtr target_sys;  // untwisted system on H
  IdealHandle image;
  MonomialWitness witness;
  bool paper_relation_literal = true;  // the printed coefficient relation, which swaps
                                       // lambda(u) and lambda(u^-1); logged, not used
  bool diag_repaired = false;          // a diagonal correction was required for ideal-ness
  std::vector<std::string> notes;
};

// Position u g_i maps to h_i tau(u) with diagonal factor lambda(u)/alpha(u, g_i);
// the coefficient relation a_{u g} = alpha(u,g) a_g / lambda(u) is verified on
// every element of the ideal. When the raw image is not an ideal of K H,
// a diagonal correction is searched exhaustively and recorded.
TransportResult scalar_transport(const IdealHandle& ideal, const ScalarAction& action, const TransportPlan& plan,
                                 uint64_t repair_budget = 1'000'000);

struct Dim1Untwist {
  std::vector<uint32_t> lambda;  // full map G -> K*, delta-lambda = alpha
  MonomialWitness witness;       // identity permutation, diag = lambda
};

// Extracts lambda from g-bar v = lambda(g) v on the generator of a
// one-dimensional ideal and certifies alpha = delta-lambda.
Dim1Untwist dim1_untwist(const IdealHandle& ideal);

enum class EquivMode { Permutation, Monomial };

// Backtracking over column assignments with scalars, pruned by projected
// codeword multisets; weight distributions are compared first.
std::optional<MonomialWitness> equivalence_search(const LinearCode& c1, const LinearCode& c2, EquivMode mode,
                                                  uint64_t budget = 2'000'000);

struct ReduceStep {
  std::string kind;  // "untwist" | "transport" | "diag-repair"
  MonomialWitness witness;
  std::string target_group;
  std::string note;
};

struct ReduceResult {
  bool ok = false;
  std::vector<ReduceStep> steps;
  SystemPtr final_sys;
  IdealHandle final_ideal;
  std::vector<std::string> log;

  MonomialWitness composed(const FiniteField& f) const;
};

// Case analysis for dim_K <= 3 over sigma-trivial systems: one-dimensional
// (sub)ideals certify alpha as a coboundary and untwist the whole algebra;
// a two-dimensional subideal triggers the beta_3 dichotomy; simple ideals
// transport over the commutator subgroup to G' x G/G'. Recursion continues
// until the ambient group is abelian and alpha is trivial.
ReduceResult abelian_reduce(const IdealHandle& ideal, uint64_t budget = 10'000'000);

// Re-applies the composed witness chain to every codeword of the source.
bool verify_reduction(const IdealHandle& source, const ReduceResult& red);

}  // namespace gring
