#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "taufp/lattice.hpp"

namespace taufp {

/// Cartan matrix of a Dynkin diagram together with a symmetrizer
/// D = multiplier * D_min.
struct CartanData {
  char type = 'A';
  int rank = 1;
  std::vector<int> matrix;       // row-major rank x rank
  std::vector<int> symmetrizer;  // diagonal of D
  int multiplier = 1;

  bool minimal() const noexcept { return multiplier == 1; }
  int at(int i, int j) const { return matrix[static_cast<std::size_t>(i * rank + j)]; }
  /// "B3", "G2", ...
  std::string name() const { return std::string(1, type) + std::to_string(rank); }
};

/// Valid (type, rank): A n>=1, B/C n>=2, D n>=4, E n in {6,7,8}, F4, G2.
bool valid_dynkin(char type, int rank);

/// Cartan matrix with the minimal symmetrizer. Diagram conventions:
/// B_n has n-1 => n, C_n has n => n-1, F_4 has 2 => 3, G_2 has 1 => 2.
CartanData cartan_matrix(char type, int rank);

/// Diagonal of the symmetrizer with multiplier c; checks D*C is symmetric.
std::vector<int> symmetrizer(char type, int rank, int c);

/// Cartan data with the symmetrizer scaled by c.
CartanData cartan_data(char type, int rank, int c = 1);

/// Order of the Weyl group of the given type.
unsigned long long weyl_group_order(char type, int rank);

struct WeylElement {
  std::vector<int> mat;   // action on simple-root coordinates, row-major
  std::vector<int> word;  // one reduced word, 1-based generator indices
  int length = 0;

  bool operator==(const WeylElement& o) const { return mat == o.mat; }
};

/// The Weyl group W(C) in its integer reflection representation:
/// s_i(alpha_j) = alpha_j - c_ji alpha_i.
class CoxeterGroup {
 public:
  explicit CoxeterGroup(CartanData cartan);

  const CartanData& cartan() const noexcept { return cartan_; }
  int rank() const noexcept { return cartan_.rank; }

  WeylElement identity() const;
  /// The generator s_i (1-based).
  WeylElement generator(int i) const;
  /// True iff l(w s_i) = l(w) + 1, i.e. w(alpha_i) is a positive root.
  bool is_ascent(const WeylElement& w, int i) const;
  /// Right multiplication w * s_i.
  WeylElement apply_generator(const WeylElement& w, int i) const;
  WeylElement multiply(const WeylElement& u, const WeylElement& v) const;
  WeylElement inverse(const WeylElement& w) const;
  /// Reduced word and length recomputed from the matrix by peeling descents.
  WeylElement from_matrix(std::vector<int> mat) const;

  /// Coxeter matrix entry m_ij (1-based).
  int coxeter_m(int i, int j) const;

 private:
  std::vector<int> mul(const std::vector<int>& a, const std::vector<int>& b) const;

  CartanData cartan_;
  std::vector<std::vector<int>> gens_;
};

struct WeakOrder {
  CoxeterGroup group;
  std::vector<WeylElement> elements;  // aligned with lattice indices
  FiniteLattice lattice;              // right weak order, identity at the bottom
  std::unordered_map<std::string, std::size_t> by_matrix;

  std::size_t index_of(const WeylElement& w) const;
};

constexpr unsigned long long kDefaultBudget = 60000;

/// Right weak order by BFS from the identity along ascents. Elements are
/// named by their first-discovered reduced word ("e", "s1", "s1s2", ...).
WeakOrder weak_order(const CartanData& cartan, unsigned long long budget = kDefaultBudget);
WeakOrder weak_order(char type, int rank, unsigned long long budget = kDefaultBudget);

/// The maximum w_0 of the weak order.
const WeylElement& longest_element(const WeakOrder& order);

/// w_0(J): the join of the generators s_j, j in J (1-based).
const WeylElement& parabolic_longest(const WeakOrder& order, const std::vector<int>& subset);

/// "s1s2s1"; "e" for the identity.
std::string word_name(const std::vector<int>& word);

}  // namespace taufp
