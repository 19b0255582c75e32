#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weylcert/hyperplane.hpp"
#include "weylcert/rootsys.hpp"
#include "weylcert/weightset.hpp"

namespace weylcert {

/// One flag per clause of the non-smoothness certificate. The last two are
/// always evaluated but only required when delta = 1.
struct CertificateFlags {
  bool omega_in_orbit = false;
  bool codim_one = false;                // span(Omega) is a hyperplane
  bool inequality = false;               // delta * ||<Lambda> \ H|| > |Delta \ H| + 6
  bool omega_difference_free = false;    // (Omega - Omega) ∩ Delta = ∅
  bool two_lambda_clear = false;         // 2 lambda ∉ Delta ∪ (Delta + Delta)
  bool omega_sum_free = false;           // (Omega + Omega) ∩ Delta = ∅
};

/// A candidate witness (Omega, H = span Omega) together with every count the
/// clauses need and the resulting verdict.
struct Certificate {
  Weight lambda;
  std::vector<Weight> omega;
  std::optional<Hyperplane> hyperplane;
  int delta = 1;
  std::size_t weights_off_set = 0;
  std::int64_t weights_off_multiset = 0;
  std::int64_t roots_off = 0;
  CertificateFlags flags;
  bool valid = false;
  /// Empty when valid; otherwise "<clause>: <detail>" for the first failing clause.
  std::string reason;

  std::int64_t lhs() const { return delta * weights_off_multiset; }
  std::int64_t rhs() const { return roots_off + 6; }
};

/// Evaluates every clause for Omega ⊆ Lambda = W lambda.
Certificate check_nosm(const WeightSystem& ws, std::span<const Weight> omega);

/// Rebuilds the weight system from scratch and re-checks `cert`; true iff the
/// fresh evaluation is valid and agrees with the stored counts.
bool revalidate(const RootSystem& rs, const Certificate& cert);

/// 2 lambda ∉ Delta ∪ (Delta + Delta).
bool check_two_lambda(const RootSystem& rs, const Weight& lambda);

struct BmsCheck {
  bool holds = false;  // delta * ||<Lambda> \ H|| <= |Delta \ H| + 6
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

BmsCheck check_bms(const WeightSystem& ws, const Hyperplane& h);

/// Eigenvalue multiplicities of a semisimple operator with spectrum {0, +1, -1},
/// and the exterior power k.
struct RankProfile {
  int n = 0;
  int k = 0;
  int zero = 0;
  int plus = 0;
  int minus = 0;
};

/// Rank of the induced operator on the k-th exterior power: C(n, k) minus the
/// number of k-subsets of the spectrum summing to 0. Throws ArgumentError for
/// k > n or inconsistent multiplicities.
std::int64_t exterior_rank(const RankProfile& p);

/// Rank profile of h_alpha acting on the defining representation.
RankProfile vector_rank_profile(const RootSystem& rs, const Weight& alpha, int k);

struct RankContradiction {
  RankProfile profile;
  std::int64_t exterior_rank = 0;       // rank on the k-th exterior power
  std::int64_t roots_off = 0;           // |Delta \ alpha^perp| = dim [h_alpha, g]
  int delta = 1;
  bool contradiction = false;           // delta * exterior_rank > roots_off + 6
  std::int64_t direct_weight_count = 0; // ||<Lambda> \ alpha^perp|| of L(lambda) itself
};

/// Compares the k-th exterior-power rank of h_alpha with |Delta \ alpha^perp| + 6.
RankContradiction rank_contradiction(const RootSystem& rs, const Weight& lambda, const Weight& alpha, int k);

}  // namespace weylcert
