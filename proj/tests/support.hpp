#pragma once

// Shared helpers for the unit and acceptance suites: Dynkin diagrams as plain
// edge lists, their imaginary roots, bipartite orientations and random quivers.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "taufp/quiver.hpp"

namespace support {

struct Graph {
  std::string name;
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // 1-based; repeated edges are parallel
  std::vector<long long> delta;            // imaginary root (extended diagrams only)
};

inline Graph path_graph(int n) {
  Graph g{"A" + std::to_string(n), n, {}, {}};
  for (int i = 1; i < n; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

inline Graph dynkin_a(int n) { return path_graph(n); }

inline Graph dynkin_d(int n) {
  Graph g = path_graph(n - 1);
  g.name = "D" + std::to_string(n);
  g.vertices = n;
  g.edges.emplace_back(n - 2, n);
  return g;
}

// Chain 1..n-1 with a leaf at vertex 3.
inline Graph dynkin_e(int n) {
  Graph g = path_graph(n - 1);
  g.name = "E" + std::to_string(n);
  g.vertices = n;
  g.edges.emplace_back(3, n);
  return g;
}

// ~A_n: a cycle on n+1 vertices; ~A_1 is a double edge.
inline Graph extended_a(int n) {
  Graph g{"~A" + std::to_string(n), n + 1, {}, std::vector<long long>(static_cast<std::size_t>(n + 1), 1)};
  if (n == 1) {
    g.edges = {{1, 2}, {1, 2}};
    return g;
  }
  for (int i = 1; i <= n; ++i) g.edges.emplace_back(i, i + 1);
  g.edges.emplace_back(n + 1, 1);
  return g;
}

// ~D_n: path 1..n-1, leaf n at 2, leaf n+1 at n-2.
inline Graph extended_d(int n) {
  Graph g = path_graph(n - 1);
  g.name = "~D" + std::to_string(n);
  g.vertices = n + 1;
  g.edges.emplace_back(2, n);
  g.edges.emplace_back(n - 2, n + 1);
  g.delta.assign(static_cast<std::size_t>(n + 1), 2);
  for (int leaf : {1, n - 1, n, n + 1}) g.delta[static_cast<std::size_t>(leaf - 1)] = 1;
  return g;
}

inline Graph extended_e(int n) {
  Graph g;
  g.name = "~E" + std::to_string(n);
  if (n == 6) {  // centre 1 with arms 1-2-3, 1-4-5, 1-6-7
    g.vertices = 7;
    g.edges = {{1, 2}, {2, 3}, {1, 4}, {4, 5}, {1, 6}, {6, 7}};
    g.delta = {3, 2, 1, 2, 1, 2, 1};
  } else if (n == 7) {  // chain 1..7, leaf 8 at 4
    g = path_graph(7);
    g.vertices = 8;
    g.edges.emplace_back(4, 8);
    g.delta = {1, 2, 3, 4, 3, 2, 1, 2};
  } else {  // chain 1..8, leaf 9 at 3
    g = path_graph(8);
    g.vertices = 9;
    g.edges.emplace_back(3, 9);
    g.delta = {2, 4, 6, 5, 4, 3, 2, 1, 3};
  }
  g.name = "~E" + std::to_string(n);
  return g;
}

/// Two-colouring of a bipartite graph (colour of vertex 1 is 0); empty if
/// the graph has an odd cycle.
inline std::vector<int> two_colouring(const Graph& g) {
  std::vector<int> colour(static_cast<std::size_t>(g.vertices), -1);
  for (int s = 0; s < g.vertices; ++s) {
    if (colour[static_cast<std::size_t>(s)] >= 0) continue;
    colour[static_cast<std::size_t>(s)] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (auto [a, b] : g.edges) {
        int w = -1;
        if (a - 1 == v) w = b - 1;
        if (b - 1 == v) w = a - 1;
        if (w < 0) continue;
        int& cw = colour[static_cast<std::size_t>(w)];
        if (cw < 0) {
          cw = 1 - colour[static_cast<std::size_t>(v)];
          stack.push_back(w);
        } else if (cw == colour[static_cast<std::size_t>(v)]) {
          return {};
        }
      }
    }
  }
  return colour;
}

/// Orientation with every vertex of colour `source_colour` a source.
inline taufp::Quiver bipartite_orientation(const Graph& g, const std::vector<int>& colour, int source_colour) {
  const auto n = static_cast<std::size_t>(g.vertices);
  std::vector<int> adj(n * n, 0);
  for (auto [a, b] : g.edges) {
    auto u = static_cast<std::size_t>(a - 1), v = static_cast<std::size_t>(b - 1);
    if (colour[u] != source_colour) std::swap(u, v);
    ++adj[u * n + v];
  }
  return taufp::Quiver::from_matrix(n, std::move(adj));
}

/// Both bipartite orientations (sources = colour 0, sources = colour 1).
inline std::vector<taufp::Quiver> bipartite_orientations(const Graph& g) {
  const auto colour = two_colouring(g);
  if (colour.empty()) return {};
  return {bipartite_orientation(g, colour, 0), bipartite_orientation(g, colour, 1)};
}

/// Restriction of a vertex vector to the sinks of a bipartite quiver.
inline std::vector<long long> restrict_to_sinks(const taufp::Quiver& q, const std::vector<long long>& v) {
  std::vector<long long> out;
  for (std::size_t i = 0; i < q.size(); ++i) {
    bool sink = true;
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (q.arrows(i, j) != 0) sink = false;
    }
    if (sink) out.push_back(v[i]);
  }
  return out;
}

/// Random quiver on 1..max_n vertices with entries in [0, max_mult], each
/// entry nonzero with probability `density`.
inline taufp::Quiver random_quiver(std::mt19937_64& rng, std::size_t max_n, int max_mult, double density,
                                   bool loops = true) {
  std::uniform_int_distribution<std::size_t> size_dist(1, max_n);
  std::uniform_int_distribution<int> mult_dist(1, max_mult);
  std::bernoulli_distribution keep(density);
  const std::size_t n = size_dist(rng);
  std::vector<int> adj(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((i != j || loops) && keep(rng)) adj[i * n + j] = mult_dist(rng);
    }
  }
  return taufp::Quiver::from_matrix(n, std::move(adj));
}

/// Random (not necessarily full) subquiver: a vertex subset with each
/// arrow count lowered at random.
inline taufp::Quiver random_subquiver(std::mt19937_64& rng, const taufp::Quiver& q) {
  std::vector<std::size_t> keep;
  std::bernoulli_distribution coin(0.7);
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (coin(rng)) keep.push_back(i);
  }
  const std::size_t k = keep.size();
  std::vector<int> adj(k * k, 0);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      const int m = q.arrows(keep[a], keep[b]);
      if (m > 0) adj[a * k + b] = std::uniform_int_distribution<int>(0, m)(rng);
    }
  }
  return taufp::Quiver::from_matrix(k, std::move(adj));
}

/// Whether the quiver has a directed cycle (loops included), by Kahn's algorithm.
inline bool has_cycle(const taufp::Quiver& q) {
  const std::size_t n = q.size();
  std::vector<int> indeg(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (q.arrows(i, j) > 0) ++indeg[j];
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push_back(i);
  std::size_t seen = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++seen;
    for (std::size_t j = 0; j < n; ++j) {
      if (q.arrows(v, j) > 0 && --indeg[j] == 0) ready.push_back(j);
    }
  }
  return seen != n;
}

}  // namespace support
