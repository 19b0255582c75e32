#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "weylcert/criteria.hpp"
#include "weylcert/rootsys.hpp"
#include "weylcert/weight.hpp"

// Slow, independent reference implementations for cross-checking.
namespace weylcert::oracle {

inline constexpr std::size_t kMaxHullPoints = 10000;
inline constexpr int kMaxHullRank = 6;
inline constexpr int kMaxOrbitRank = 6;
inline constexpr std::int64_t kMaxSubsets = 1000000;

/// mu ∈ conv(points), decided by an exact phase-one simplex. Throws
/// OracleScaleError beyond kMaxHullPoints points or rank kMaxHullRank.
bool hull_membership_exact(std::span<const Weight> points, const Weight& mu);

/// All signed permutations of lambda (even sign changes for D), deduplicated and sorted.
std::vector<Weight> orbit_naive(const RootSystem& rs, const Weight& lambda);

/// Counts the k-subsets of the spectrum with nonzero sum one by one.
std::int64_t exterior_rank_naive(const RankProfile& p);

}  // namespace weylcert::oracle
