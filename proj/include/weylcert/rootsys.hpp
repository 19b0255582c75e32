#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "weylcert/hyperplane.hpp"
#include "weylcert/linalg.hpp"
#include "weylcert/rational.hpp"
#include "weylcert/weight.hpp"

namespace weylcert {

enum class Family : char { B = 'B', C = 'C', D = 'D' };

Family parse_family(std::string_view text);
char to_char(Family f);
/// Smallest rank handled for each family: B2, C3, D4.
int min_rank(Family f);
inline constexpr int kMaxRank = 16;

/// (mu, alpha^vee) = 2 (mu, alpha) / (alpha, alpha). Throws ArgumentError on alpha = 0.
Rational pairing(const Weight& mu, const Weight& alpha);

/// Root systems B_r, C_r, D_r in the standard epsilon model:
///   B: {±e_i, ±e_i±e_j},  C: {±2e_i, ±e_i±e_j},  D: {±e_i±e_j}
/// with simple roots a_i = e_i - e_{i+1} (i < r) and a_r = e_r, 2e_r, e_{r-1}+e_r.
/// Immutable after construction.
class RootSystem {
 public:
  /// Throws ArgumentError when `rank` is outside [min_rank(family), kMaxRank].
  static RootSystem build(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  /// "B3"
  std::string label() const;

  /// All roots, sorted.
  const std::vector<Weight>& roots() const { return roots_; }
  /// Roots whose first nonzero coordinate is positive, sorted.
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const std::vector<Weight>& fundamental_weights() const { return fundamental_weights_; }
  /// Half the sum of the positive roots.
  const Weight& rho() const { return rho_; }

  bool is_root(const Weight& w) const { return root_set_.contains(w); }

  /// 2^r r! for B and C, 2^(r-1) r! for D.
  std::uint64_t weyl_order() const;
  /// |P/Q| from the Smith form of the Cartan matrix.
  std::int64_t pq_index() const;
  /// Nontrivial invariant factors of P/Q.
  std::vector<std::int64_t> pq_invariant_factors() const;

  /// a_ij = (alpha_i, alpha_j^vee).
  linalg::IntegerMatrix cartan_matrix() const;

  /// Coefficients c with w = sum c_i alpha_i.
  std::vector<Rational> simple_root_coefficients(const Weight& w) const;
  /// (mu, alpha_i^vee) for each simple root. Throws LatticeError if mu is not in P.
  std::vector<std::int64_t> fundamental_coefficients(const Weight& mu) const;
  bool in_weight_lattice(const Weight& mu) const;
  Weight from_fundamental(std::span<const std::int64_t> coeffs) const;

  /// Weights of the defining (vector) representation: ±e_i, plus 0 for B.
  std::vector<Weight> vector_representation_weights() const;

 private:
  RootSystem() = default;

  Family family_ = Family::B;
  int rank_ = 0;
  std::vector<Weight> roots_;
  std::vector<Weight> positive_roots_;
  std::vector<Weight> simple_roots_;
  std::vector<Weight> fundamental_weights_;
  Weight rho_;
  std::unordered_set<Weight, WeightHash> root_set_;
  linalg::RationalMatrix simple_basis_inverse_;
};

/// Detected Dynkin type of an indecomposable simple system.
struct SubsystemType {
  char letter = '?';  // 'A', 'B', 'C', 'D', or '?' for anything else
  int rank = 0;

  std::string label() const { return std::string(1, letter) + std::to_string(rank); }
  friend bool operator==(const SubsystemType&, const SubsystemType&) = default;
};

/// An ordered simple system, usually a subset of Pi or the simple system of a
/// root subsystem.
struct SimpleSubsystem {
  std::vector<Weight> roots;
  /// 1-based positions in Pi when drawn from it; empty otherwise.
  std::vector<int> simple_indices;
  bool connected = false;
  /// Set only for connected diagrams.
  std::optional<SubsystemType> type;
  /// The roots renumbered in standard (Bourbaki) order when the type is A/B/C/D.
  std::vector<Weight> standard_order;
};

/// Builds the Dynkin data (connectivity, type, standard order) for `roots`.
/// Type detection is insensitive to the input order.
SimpleSubsystem make_subsystem(std::vector<Weight> roots, std::vector<int> simple_indices = {});

/// The distinguished boundary subset of an indecomposable B/C/D simple system:
///   B_n: {a_1} if n >= 5, else {a_1, a_n};  C_n: {a_1, a_2};
///   D_n: {a_1} if n >= 7, else {a_1, a_{n-1}, a_n}.
/// Throws UnsupportedTypeError for anything else.
std::vector<Weight> boundary_subset(const SimpleSubsystem& pi);

/// All connected subdiagrams of Pi with exactly r - 2 vertices. Throws
/// ArgumentError for r <= 2.
std::vector<SimpleSubsystem> pc_family(const RootSystem& rs);

/// Simple system of the root subsystem Delta ∩ H with respect to Delta+ ∩ H.
SimpleSubsystem subsystem_simple_system(const RootSystem& rs, const Hyperplane& h);

}  // namespace weylcert
