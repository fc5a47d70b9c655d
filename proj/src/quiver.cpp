#include "taufp/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

#include "taufp/error.hpp"

namespace taufp {

namespace {

void check_labels(const std::vector<std::string>& labels) {
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) invalid("duplicate vertex label '" + l + "'");
  }
}

}  // namespace

Quiver::Quiver(std::vector<std::string> labels, const std::vector<Arrow>& arrows)
    : labels_(std::move(labels)), adj_(labels_.size() * labels_.size(), 0) {
  check_labels(labels_);
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels_.size(); ++i) index.emplace(labels_[i], i);
  for (const auto& a : arrows) {
    auto s = index.find(a.src);
    auto t = index.find(a.dst);
    if (s == index.end()) invalid("unknown vertex '" + a.src + "'");
    if (t == index.end()) invalid("unknown vertex '" + a.dst + "'");
    if (a.mult <= 0) {
      invalid("arrow " + a.src + "->" + a.dst + " has multiplicity " +
              std::to_string(a.mult));
    }
    adj_[s->second * size() + t->second] += a.mult;
  }
}

Quiver Quiver::from_matrix(std::vector<std::string> labels, std::vector<int> adj) {
  if (adj.size() != labels.size() * labels.size()) {
    invalid("adjacency matrix does not match the number of vertices");
  }
  check_labels(labels);
  for (int v : adj) {
    if (v < 0) invalid("negative arrow count");
  }
  Quiver q;
  q.labels_ = std::move(labels);
  q.adj_ = std::move(adj);
  return q;
}

Quiver Quiver::from_matrix(std::size_t n, std::vector<int> adj) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);
  return from_matrix(std::move(labels), std::move(adj));
}

std::size_t Quiver::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) invalid("unknown vertex '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

long long Quiver::total_arrows() const {
  return std::accumulate(adj_.begin(), adj_.end(), 0LL);
}

bool Quiver::has_loops() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (arrows(i, i) > 0) return true;
  }
  return false;
}

bool Quiver::has_multiple_arrows() const {
  return std::any_of(adj_.begin(), adj_.end(), [](int v) { return v > 1; });
}

bool Quiver::is_bipartite() const {
  const std::size_t n = size();
  for (std::size_t v = 0; v < n; ++v) {
    bool in = false;
    bool out = false;
    for (std::size_t u = 0; u < n; ++u) {
      in = in || arrows(u, v) > 0;
      out = out || arrows(v, u) > 0;
    }
    if (in && out) return false;
  }
  return true;
}

Quiver Quiver::induced(const std::vector<std::size_t>& vertices) const {
  const std::size_t m = vertices.size();
  std::vector<std::string> labels;
  labels.reserve(m);
  std::vector<int> adj(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    labels.push_back(labels_.at(vertices[a]));
    for (std::size_t b = 0; b < m; ++b) adj[a * m + b] = arrows(vertices[a], vertices[b]);
  }
  return from_matrix(std::move(labels), std::move(adj));
}

Quiver loop_removed(const Quiver& q) {
  std::vector<int> adj = q.matrix();
  for (std::size_t i = 0; i < q.size(); ++i) adj[i * q.size() + i] = 0;
  return Quiver::from_matrix(q.labels(), std::move(adj));
}

Quiver separated_quiver(const Quiver& q) {
  const std::size_t n = q.size();
  std::vector<std::string> labels;
  labels.reserve(2 * n);
  for (const auto& l : q.labels()) labels.push_back(l + "+");
  for (const auto& l : q.labels()) labels.push_back(l + "-");
  std::vector<int> adj(4 * n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) adj[i * 2 * n + (n + j)] = q.arrows(i, j);
  }
  return Quiver::from_matrix(std::move(labels), std::move(adj));
}

std::vector<Quiver> connected_components(const Quiver& q) {
  const std::size_t n = q.size();
  std::vector<int> comp(n, -1);
  std::vector<Quiver> out;
  for (std::size_t start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<std::size_t> members{start};
    comp[start] = id;
    for (std::size_t k = 0; k < members.size(); ++k) {
      const std::size_t v = members[k];
      for (std::size_t u = 0; u < n; ++u) {
        if (comp[u] < 0 && (q.arrows(v, u) > 0 || q.arrows(u, v) > 0)) {
          comp[u] = id;
          members.push_back(u);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(q.induced(members));
  }
  return out;
}

std::string DynkinClass::name() const {
  switch (kind) {
    case Kind::Dynkin:
      return std::string(1, family) + std::to_string(rank);
    case Kind::Extended:
      return "~" + std::string(1, family) + std::to_string(rank);
    case Kind::Other:
      break;
  }
  return "other";
}

namespace {

DynkinClass dynkin(char f, int r) { return {DynkinClass::Kind::Dynkin, f, r}; }
DynkinClass extended(char f, int r) { return {DynkinClass::Kind::Extended, f, r}; }
DynkinClass other() { return {}; }

// Number of vertices on the arm leaving `center` through `first`, assuming
// the walk only meets degree-2 vertices until a leaf.
int arm_length(const std::vector<std::vector<std::size_t>>& nbrs, std::size_t center,
               std::size_t first) {
  int len = 1;
  std::size_t prev = center;
  std::size_t cur = first;
  while (nbrs[cur].size() == 2) {
    const std::size_t next = nbrs[cur][0] == prev ? nbrs[cur][1] : nbrs[cur][0];
    prev = cur;
    cur = next;
    ++len;
  }
  return nbrs[cur].size() == 1 ? len : -1;
}

}  // namespace

DynkinClass classify_underlying_graph(const Quiver& q) {
  const std::size_t n = q.size();
  if (n == 0 || connected_components(q).size() != 1) {
    invalid("classify_underlying_graph needs a connected quiver");
  }
  if (q.has_loops()) return other();

  std::vector<std::vector<std::size_t>> nbrs(n);
  std::size_t edges = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int m = q.arrows(i, j) + q.arrows(j, i);
      if (m == 0) continue;
      if (m >= 2) {
        // The only multigraph admitted is the Kronecker shape.
        return (n == 2 && m == 2) ? extended('A', 1) : other();
      }
      nbrs[i].push_back(j);
      nbrs[j].push_back(i);
      ++edges;
    }
  }
  const int v = static_cast<int>(n);
  if (n == 1) return dynkin('A', 1);

  if (edges == n) {
    const bool cycle = std::all_of(nbrs.begin(), nbrs.end(),
                                   [](const auto& nb) { return nb.size() == 2; });
    return cycle ? extended('A', v - 1) : other();
  }
  if (edges != n - 1) return other();

  std::vector<std::size_t> branch;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t d = nbrs[i].size();
    if (d > 4) return other();
    if (d == 4) return n == 5 ? extended('D', 4) : other();
    if (d == 3) branch.push_back(i);
  }

  if (branch.empty()) return dynkin('A', v);

  if (branch.size() == 1) {
    std::vector<int> arms;
    for (std::size_t nb : nbrs[branch[0]]) arms.push_back(arm_length(nbrs, branch[0], nb));
    std::sort(arms.begin(), arms.end());
    const int a = arms[0], b = arms[1], c = arms[2];
    if (a == 1 && b == 1) return dynkin('D', v);
    if (a == 1 && b == 2 && c >= 2 && c <= 4) return dynkin('E', v);
    if (a == 2 && b == 2 && c == 2) return extended('E', 6);
    if (a == 1 && b == 3 && c == 3) return extended('E', 7);
    if (a == 1 && b == 2 && c == 5) return extended('E', 8);
    return other();
  }

  if (branch.size() == 2) {
    // ~D_n: both branch vertices carry two pendant leaves.
    for (std::size_t bv : branch) {
      int leaves = 0;
      for (std::size_t nb : nbrs[bv]) leaves += nbrs[nb].size() == 1 ? 1 : 0;
      if (leaves != 2) return other();
    }
    return extended('D', v - 1);
  }
  return other();
}

namespace {

std::string dot_id(const std::string& label) {
  const bool plain = !label.empty() && std::all_of(label.begin(), label.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
  return plain ? label : "\"" + label + "\"";
}

}  // namespace

std::string to_dot(const Quiver& q) {
  if (q.empty()) return "digraph { }";
  std::ostringstream os;
  os << "digraph {\n";
  for (const auto& l : q.labels()) os << "  " << dot_id(l) << ";\n";
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      for (int k = 0; k < q.arrows(i, j); ++k) {
        os << "  " << dot_id(q.labels()[i]) << " -> " << dot_id(q.labels()[j]) << ";\n";
      }
    }
  }
  os << "}";
  return os.str();
}

}  // namespace taufp
