#include "taufp/lattice.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "taufp/error.hpp"

namespace taufp {

namespace {

using Bits = std::vector<std::uint64_t>;

inline void set_bit(Bits& b, std::size_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }
inline bool test_bit(const Bits& b, std::size_t i) { return (b[i >> 6] >> (i & 63)) & 1U; }

template <class F>
void for_each_bit(const Bits& b, F&& f) {
  for (std::size_t w = 0; w < b.size(); ++w) {
    std::uint64_t word = b[w];
    while (word != 0) {
      const int t = std::countr_zero(word);
      f(w * 64 + static_cast<std::size_t>(t));
      word &= word - 1;
    }
  }
}

}  // namespace

FiniteLattice FiniteLattice::from_covers(std::vector<std::string> elements,
                                         const std::vector<Cover>& covers,
                                         Validation validation) {
  FiniteLattice l;
  l.names_ = std::move(elements);
  const std::size_t n = l.names_.size();
  if (n == 0) invalid("a lattice needs at least one element");
  for (std::size_t i = 0; i < n; ++i) {
    if (!l.index_.emplace(l.names_[i], i).second) {
      invalid("duplicate element '" + l.names_[i] + "'");
    }
  }
  l.up_.assign(n, {});
  l.down_.assign(n, {});
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [upper, lower] : covers) {
    const std::size_t u = l.index_of(upper);
    const std::size_t d = l.index_of(lower);
    if (u == d) invalid("element '" + upper + "' covers itself");
    if (!seen.emplace(u, d).second) invalid("duplicate cover " + upper + " > " + lower);
    l.up_[d].push_back(u);
    l.down_[u].push_back(d);
  }
  for (auto& v : l.up_) std::sort(v.begin(), v.end());
  for (auto& v : l.down_) std::sort(v.begin(), v.end());

  // Kahn's algorithm from the minimal elements upward.
  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<std::size_t> pending(n);
  for (std::size_t i = 0; i < n; ++i) {
    pending[i] = l.down_[i].size();
    if (pending[i] == 0) order.push_back(i);
  }
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (std::size_t u : l.up_[order[k]]) {
      if (--pending[u] == 0) order.push_back(u);
    }
  }
  if (order.size() != n) invalid("cover relation contains a cycle");

  std::vector<std::size_t> maximal, minimal;
  for (std::size_t i = 0; i < n; ++i) {
    if (l.up_[i].empty()) maximal.push_back(i);
    if (l.down_[i].empty()) minimal.push_back(i);
  }
  if (maximal.size() > 1) {
    invalid("no join for (" + l.names_[maximal[0]] + "," + l.names_[maximal[1]] + ")");
  }
  if (minimal.size() > 1) {
    invalid("no meet for (" + l.names_[minimal[0]] + "," + l.names_[minimal[1]] + ")");
  }
  l.top_ = maximal.front();
  l.bottom_ = minimal.front();

  l.height_.assign(n, 0);
  for (std::size_t x : order) {
    for (std::size_t d : l.down_[x]) l.height_[x] = std::max(l.height_[x], l.height_[d] + 1);
  }
  l.depth_.assign(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (std::size_t u : l.up_[*it]) l.depth_[*it] = std::max(l.depth_[*it], l.depth_[u] + 1);
  }
  if (n <= kBitsetLimit) {
    const std::size_t words = (n + 63) / 64;
    l.above_.assign(n, Bits(words, 0));
    l.below_.assign(n, Bits(words, 0));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      Bits& b = l.above_[*it];
      set_bit(b, *it);
      for (std::size_t u : l.up_[*it]) {
        for (std::size_t w = 0; w < words; ++w) b[w] |= l.above_[u][w];
      }
    }
    for (std::size_t x : order) {
      Bits& b = l.below_[x];
      set_bit(b, x);
      for (std::size_t d : l.down_[x]) {
        for (std::size_t w = 0; w < words; ++w) b[w] |= l.below_[d][w];
      }
    }
  }

  // Transitive reduction: a cover (u, d) must be the only route from u to d.
  for (std::size_t d = 0; d < n; ++d) {
    for (std::size_t u : l.up_[d]) {
      for (std::size_t z : l.up_[d]) {
        if (z != u && l.leq(z, u)) {
          invalid("cover " + l.names_[u] + " > " + l.names_[d] + " is implied by " +
                  l.names_[u] + " >= " + l.names_[z] + " > " + l.names_[d]);
        }
      }
    }
  }

  if (validation == Validation::Full && n <= kPairwiseLimit) {
    // A finite poset with a bottom in which every pair has a join is a lattice.
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) l.join(a, b);
    }
  }
  return l;
}

std::size_t FiniteLattice::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) invalid("unknown lattice element '" + name + "'");
  return it->second;
}

bool FiniteLattice::reaches(std::size_t from, std::size_t target, bool downward) const {
  // Walk covers from `from` towards `target`, pruning by chain length: any
  // element strictly between them is strictly further from the far end.
  const auto& level = downward ? height_ : depth_;
  const auto& next = downward ? down_ : up_;
  std::vector<std::size_t> stack{from};
  std::vector<bool> visited(size(), false);
  visited[from] = true;
  while (!stack.empty()) {
    const std::size_t z = stack.back();
    stack.pop_back();
    if (z == target) return true;
    if (level[z] <= level[target]) continue;
    for (std::size_t w : next[z]) {
      if (!visited[w]) {
        visited[w] = true;
        stack.push_back(w);
      }
    }
  }
  return false;
}

bool FiniteLattice::leq(std::size_t a, std::size_t b) const {
  if (a == b) return true;
  if (!above_.empty()) return test_bit(above_[a], b);
  if (height_[b] <= height_[a]) return false;
  return reaches(b, a, /*downward=*/true);
}

std::size_t FiniteLattice::extremal_bound(std::size_t a, std::size_t b, bool upward) const {
  // The join is the unique minimal common upper bound (dually for the meet).
  std::vector<std::size_t> bounds;
  if (!above_.empty()) {
    const auto& sets = upward ? above_ : below_;
    Bits common = sets[a];
    for (std::size_t w = 0; w < common.size(); ++w) common[w] &= sets[b][w];
    for_each_bit(common, [&](std::size_t z) { bounds.push_back(z); });
  } else {
    const auto& next = upward ? up_ : down_;
    std::vector<std::size_t> frontier{a};
    std::vector<bool> visited(size(), false);
    visited[a] = true;
    while (!frontier.empty()) {
      const std::size_t z = frontier.back();
      frontier.pop_back();
      if (upward ? leq(b, z) : leq(z, b)) bounds.push_back(z);
      for (std::size_t w : next[z]) {
        if (!visited[w]) {
          visited[w] = true;
          frontier.push_back(w);
        }
      }
    }
    std::sort(bounds.begin(), bounds.end());
  }
  std::vector<std::size_t> extremal;
  const auto& inward = upward ? down_ : up_;
  for (std::size_t z : bounds) {
    const bool has_inner = std::any_of(inward[z].begin(), inward[z].end(), [&](std::size_t w) {
      return std::binary_search(bounds.begin(), bounds.end(), w);
    });
    if (!has_inner) extremal.push_back(z);
  }
  if (extremal.size() != 1) {
    invalid(std::string(upward ? "no join" : "no meet") + " for (" + names_[a] + "," +
            names_[b] + ")");
  }
  return extremal.front();
}

std::size_t FiniteLattice::join(std::size_t a, std::size_t b) const {
  return extremal_bound(a, b, /*upward=*/true);
}

std::size_t FiniteLattice::meet(std::size_t a, std::size_t b) const {
  return extremal_bound(a, b, /*upward=*/false);
}

std::vector<FiniteLattice::Cover> FiniteLattice::covers() const {
  std::vector<Cover> out;
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::size_t d : down_[u]) out.emplace_back(names_[u], names_[d]);
  }
  return out;
}

FiniteLattice FiniteLattice::opposite() const {
  FiniteLattice l = *this;
  std::swap(l.up_, l.down_);
  std::swap(l.height_, l.depth_);
  std::swap(l.top_, l.bottom_);
  std::swap(l.above_, l.below_);
  return l;
}

Quiver q_of(const FiniteLattice& lattice, std::size_t x, const std::vector<std::size_t>& ys) {
  if (ys.empty()) invalid("Q(x, Y) needs a nonempty Y");
  const auto& dp = lattice.upper_covers(x);
  for (std::size_t y : ys) {
    if (!std::binary_search(dp.begin(), dp.end(), y)) {
      invalid("'" + lattice.name(y) + "' is not a direct predecessor of '" + lattice.name(x) + "'");
    }
  }
  const std::size_t m = ys.size();
  std::vector<std::string> labels;
  for (std::size_t y : ys) labels.push_back(lattice.name(y));
  std::vector<int> adj(m * m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      // y and y' both cover x, so they are incomparable; their join covers y
      // exactly when some upper cover of y already lies above y'.
      const auto& up = lattice.upper_covers(ys[a]);
      const bool join_covers_y = std::any_of(up.begin(), up.end(), [&](std::size_t z) {
        return lattice.leq(ys[b], z);
      });
      adj[a * m + b] = join_covers_y ? 0 : 1;
    }
  }
  return Quiver::from_matrix(std::move(labels), std::move(adj));
}

LatticeFpdim fpdim_lattice(const FiniteLattice& lattice, double tol) {
  LatticeFpdim best;
  best.witness = lattice.size() == 1 ? lattice.top() : lattice.bottom();
  bool have = false;
  for (std::size_t x = 0; x < lattice.size(); ++x) {
    if (x == lattice.top()) continue;
    const auto& dp = lattice.upper_covers(x);
    double rho = 0.0;
    if (dp.size() >= 2) rho = spectral_radius(q_of(lattice, x, dp), tol);
    if (!have || rho > best.value + tol) {
      best.value = rho;
      best.witness = x;
      have = true;
    }
  }
  return best;
}

}  // namespace taufp
