#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "taufp/quiver.hpp"
#include "taufp/spectral.hpp"

namespace taufp {

/// A finite lattice given by its Hasse diagram. Covers are stored as
/// (upper, lower) pairs; `upper_covers(x)` is the set of direct predecessors
/// dp(x) and `lower_covers(x)` the set of direct successors ds(x).
class FiniteLattice {
 public:
  using Cover = std::pair<std::string, std::string>;  // (upper, lower)

  enum class Validation {
    /// Acyclic, transitively reduced, bounded, and every pair has a join.
    Full,
    /// Skip the quadratic pairwise join scan (for posets known to be lattices).
    Structural,
  };

  /// Pairwise validation is only attempted up to this size under `Full`.
  static constexpr std::size_t kPairwiseLimit = 4000;
  /// Order bitsets are materialized up to this size.
  static constexpr std::size_t kBitsetLimit = 20000;

  static FiniteLattice from_covers(std::vector<std::string> elements,
                                   const std::vector<Cover>& covers,
                                   Validation validation = Validation::Full);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& elements() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::size_t index_of(const std::string& name) const;

  std::size_t top() const noexcept { return top_; }
  std::size_t bottom() const noexcept { return bottom_; }

  const std::vector<std::size_t>& upper_covers(std::size_t x) const { return up_.at(x); }
  const std::vector<std::size_t>& lower_covers(std::size_t x) const { return down_.at(x); }

  /// Length of the longest chain from the bottom to x.
  int height(std::size_t x) const { return height_.at(x); }

  bool leq(std::size_t a, std::size_t b) const;
  std::size_t join(std::size_t a, std::size_t b) const;
  std::size_t meet(std::size_t a, std::size_t b) const;

  /// All covers as (upper, lower) name pairs, ordered by upper then lower index.
  std::vector<Cover> covers() const;

  FiniteLattice opposite() const;

 private:
  FiniteLattice() = default;
  void build_order();
  std::size_t extremal_bound(std::size_t a, std::size_t b, bool upward) const;
  bool reaches(std::size_t from, std::size_t target, bool downward) const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
  std::vector<int> height_;
  std::vector<int> depth_;  // longest chain from x to the top
  std::size_t top_ = 0;
  std::size_t bottom_ = 0;
  // above_[x] has bit y set iff x <= y; below_[x] has bit y set iff y <= x.
  std::vector<std::vector<std::uint64_t>> above_;
  std::vector<std::vector<std::uint64_t>> below_;
};

/// The quiver Q(x, Y) on Y subset of dp(x): an arrow y -> y' whenever
/// y != y' and y is not a lower cover of the join of y and y'.
Quiver q_of(const FiniteLattice& lattice, std::size_t x, const std::vector<std::size_t>& ys);

struct LatticeFpdim {
  double value = 0.0;
  std::size_t witness = 0;
};

/// max over non-maximal x of rho(Q(x, dp(x))), with the first element (in
/// declaration order) attaining it.
LatticeFpdim fpdim_lattice(const FiniteLattice& lattice, double tol = kDefaultTol);

}  // namespace taufp
