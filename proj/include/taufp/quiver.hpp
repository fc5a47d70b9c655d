#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

namespace taufp {

/// A finite quiver stored as a dense arrow-count matrix. Index order of the
/// adjacency matrix is the order of `labels()`.
class Quiver {
 public:
  struct Arrow {
    std::string src;
    std::string dst;
    int mult = 1;
  };

  Quiver() = default;

  /// Builds from labels and a list of arrows; repeated (src, dst) entries
  /// accumulate. Throws on unknown or duplicate labels and zero multiplicity.
  Quiver(std::vector<std::string> labels, const std::vector<Arrow>& arrows);

  /// Builds from a raw row-major adjacency matrix.
  static Quiver from_matrix(std::vector<std::string> labels,
                            std::vector<int> adj);

  /// Vertices named "1".."n" with the given adjacency.
  static Quiver from_matrix(std::size_t n, std::vector<int> adj);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<int>& matrix() const noexcept { return adj_; }

  int arrows(std::size_t i, std::size_t j) const { return adj_[i * size() + j]; }
  std::size_t index_of(const std::string& label) const;

  long long total_arrows() const;
  bool has_loops() const;
  bool has_multiple_arrows() const;
  bool is_bipartite() const;

  /// Subquiver induced on the given vertex indices (in the given order).
  Quiver induced(const std::vector<std::size_t>& vertices) const;

  bool operator==(const Quiver&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<int> adj_;
};

/// Same vertices, all loops removed.
Quiver loop_removed(const Quiver& q);

/// Every vertex i splits into a source "i+" and a sink "i-"; each arrow
/// i -> j becomes i+ -> j-. Sources are listed first.
Quiver separated_quiver(const Quiver& q);

/// Weakly connected components as induced subquivers, ordered by their
/// smallest vertex index.
std::vector<Quiver> connected_components(const Quiver& q);

struct DynkinClass {
  enum class Kind { Dynkin, Extended, Other };
  Kind kind = Kind::Other;
  char family = '?';  // 'A', 'D' or 'E'
  int rank = 0;

  /// "A4", "~D4", "other".
  std::string name() const;
  bool operator==(const DynkinClass&) const = default;
};

/// Classifies the underlying (unoriented) graph of a connected quiver as a
/// simply-laced Dynkin diagram, an extended one, or neither.
DynkinClass classify_underlying_graph(const Quiver& q);

std::string to_dot(const Quiver& q);

}  // namespace taufp
