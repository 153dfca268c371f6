#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "prop/fpmatrix.hpp"
#include "prop/word.hpp"

namespace prop {

// ---------------------------------------------------------------------------
// One-skeleton of the free simplicial resolution of a presentation.
//
// Level n is the free group on the base generators X_0 (constant in n) plus
// one generator y_{l,t} per relator l and monotone surjection t: [n] -> [1].
// Such a t is fixed by its step s in 1..n (t(j) = 1 iff j >= s), so level n
// carries n generators per relator. Generator order within a level: the d
// base generators first, then relator l's generators at d + l*n + (s-1).

struct SimplicialSkeleton {
  std::uint32_t num_base = 0;
  std::uint32_t num_relators = 0;
  std::uint32_t top_level = 0;
  std::vector<std::string> base_names;
  std::vector<GroupWord> relators;
  /// faces[n][i][g]: image of generator g of level n under d_i, n = 1..L
  /// (faces[0] is empty).
  std::vector<std::vector<std::vector<GroupWord>>> faces;
  /// degeneracies[n][i][g]: image under s_i, level n -> n+1, n = 0..L-1.
  std::vector<std::vector<std::vector<GroupWord>>> degeneracies;

  std::uint32_t num_generators(std::uint32_t level) const noexcept {
    return num_base + num_relators * level;
  }
  /// Index of y_{l,t} at `level` for the surjection with step `step`.
  std::uint32_t relator_generator(std::uint32_t level, std::uint32_t relator,
                                  std::uint32_t step) const noexcept {
    return num_base + relator * level + (step - 1);
  }
  /// "x1" for base generators, "y1_0011" for y_{1,t} with t written as its
  /// value string.
  std::string generator_label(std::uint32_t level, std::uint32_t gen) const;
  std::vector<std::string> generator_labels(std::uint32_t level) const;

  GroupWord face(std::uint32_t level, std::uint32_t i, const GroupWord& w) const;
  GroupWord degeneracy(std::uint32_t level, std::uint32_t i, const GroupWord& w) const;
};

/// Throws InputError for L < 1.
SimplicialSkeleton build_one_skeleton(const Presentation& pres, std::uint32_t L);

struct IdentityViolation {
  /// e.g. "d_i d_j = d_{j-1} d_i".
  std::string identity;
  std::uint32_t level = 0;
  std::string generator;
  std::uint32_t i = 0;
  std::uint32_t j = 0;
};

struct IdentityReport {
  std::uint64_t checks = 0;
  std::vector<IdentityViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Evaluates all five simplicial identities on every generator of every
/// level where both sides are defined within 0..L.
IdentityReport check_simplicial_identities(const SimplicialSkeleton& sk);

/// <a,b> = a b a^-1 (s_0 d_1(a) · b · s_0 d_1(a)^-1)^-1 on level-1 words.
GroupWord peiffer_commutator(const GroupWord& a, const GroupWord& b,
                             const SimplicialSkeleton& sk);

/// {x,y} = [s_0 x, s_1 y][s_1 y, s_1 x] on level 2, with [u,v] = u^-1 v^-1 u v.
GroupWord peiffer_lifting(const GroupWord& x, const GroupWord& y, const SimplicialSkeleton& sk);

struct PeifferLiftingResult {
  bool d0_trivial = false;
  bool d1_trivial = false;
  /// d_2{x,y} equals the Peiffer commutator <x^-1, y^-1>^-1 as a reduced word.
  bool d2_matches = false;
  bool ok() const noexcept { return d0_trivial && d1_trivial && d2_matches; }
};

/// Checks d_0{x,y} = d_1{x,y} = 1 and d_2{x,y} = <x^-1, y^-1>^-1. With this
/// commutator convention, <x^-1, y^-1>^-1 is the Peiffer element that the
/// substitution x -> x^-1, y -> y^-1 relates to <x,y>; both generate the
/// same Peiffer subgroup. Throws InputError unless x, y lie in Ker d_0 at
/// level 1 and the skeleton has L >= 2.
PeifferLiftingResult peiffer_lifting_check(const GroupWord& x, const GroupWord& y,
                                           const SimplicialSkeleton& sk);

/// Generator images under every face and degeneracy, keyed by label.
nlohmann::json to_json(const SimplicialSkeleton& sk);

// ---------------------------------------------------------------------------
// Simplicial F_p-modules and homology.

/// Levels 0..L of finite-dimensional F_p spaces with face and degeneracy
/// matrices acting on column vectors.
struct SimplicialFpModule {
  std::uint32_t p = 2;
  std::vector<std::size_t> dims;
  /// faces[n][i]: dims[n-1] x dims[n], n = 1..L (faces[0] empty).
  std::vector<std::vector<FpMatrix>> faces;
  /// degeneracies[n][i]: dims[n+1] x dims[n], n = 0..L-1.
  std::vector<std::vector<FpMatrix>> degeneracies;

  std::uint32_t top_level() const noexcept {
    return dims.empty() ? 0 : static_cast<std::uint32_t>(dims.size() - 1);
  }
  /// Throws InputError if shapes are inconsistent or an identity fails.
  void validate() const;
};

/// dim pi_q = dim H_q(N, d_last) for q = 0..q_max, using the normalized
/// complex N_n = intersection of Ker d_i for i < n. Requires q_max < L.
std::vector<std::size_t> moore_homology(const SimplicialFpModule& module, std::uint32_t q_max);

/// Multiplication table of a finite group on elements 0..order-1.
class FiniteGroupTable {
 public:
  /// Validates closure, associativity, identity and inverses.
  explicit FiniteGroupTable(std::vector<std::vector<std::uint32_t>> table);

  static FiniteGroupTable cyclic(std::uint32_t order);
  static FiniteGroupTable from_json(const nlohmann::json& j);

  std::uint32_t order() const noexcept { return static_cast<std::uint32_t>(table_.size()); }
  std::uint32_t identity() const noexcept { return identity_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return table_[a][b]; }

 private:
  std::vector<std::vector<std::uint32_t>> table_;
  std::uint32_t identity_ = 0;
};

inline constexpr std::uint64_t kBarComplexLimit = 2'000'000;

/// dim H_q(G, F_p) for q = 0..q_max from the chain complex of W-bar G with
/// boundary sum (-1)^i d_i. Throws GuardrailError when |G|^(q_max+1) exceeds
/// kBarComplexLimit without override.
std::vector<std::size_t> wbar_homology(const FiniteGroupTable& g, std::uint32_t p,
                                       std::uint32_t q_max, bool override_guardrail = false);

/// dim of the E^1_{n,m} term: sum over compositions (i_1..i_n) of m into n
/// nonnegative parts of prod h[i_j + 1], where h[q] = dim H_q for q >= 1 is
/// passed as h_from_one[q-1]. Throws InputError if n < 1 or h is too short.
std::uint64_t e1_dimensions(const std::vector<std::uint64_t>& h_from_one, std::uint32_t n,
                            std::uint32_t m);

}  // namespace prop
