#include "taufp/coxeter.hpp"

#include <algorithm>
#include <cstring>
#include <unordered_map>

#include "taufp/error.hpp"

namespace taufp {

bool valid_dynkin(char type, int rank) {
  switch (type) {
    case 'A':
      return rank >= 1;
    case 'B':
    case 'C':
      return rank >= 2;
    case 'D':
      return rank >= 4;
    case 'E':
      return rank >= 6 && rank <= 8;
    case 'F':
      return rank == 4;
    case 'G':
      return rank == 2;
    default:
      return false;
  }
}

namespace {

void require_valid(char type, int rank) {
  if (!valid_dynkin(type, rank)) {
    invalid(std::string("no Dynkin diagram of type ") + type + std::to_string(rank));
  }
}

CartanData build_cartan(char type, int rank) {
  require_valid(type, rank);
  CartanData c;
  c.type = type;
  c.rank = rank;
  const auto n = static_cast<std::size_t>(rank);
  c.matrix.assign(n * n, 0);
  auto set = [&](int i, int j, int cij, int cji) {  // 1-based
    c.matrix[static_cast<std::size_t>((i - 1) * rank + (j - 1))] = cij;
    c.matrix[static_cast<std::size_t>((j - 1) * rank + (i - 1))] = cji;
  };
  for (int i = 1; i <= rank; ++i) c.matrix[static_cast<std::size_t>((i - 1) * rank + (i - 1))] = 2;

  switch (type) {
    case 'A':
      for (int i = 1; i < rank; ++i) set(i, i + 1, -1, -1);
      break;
    case 'B':
      for (int i = 1; i < rank - 1; ++i) set(i, i + 1, -1, -1);
      set(rank - 1, rank, -1, -2);
      break;
    case 'C':
      for (int i = 1; i < rank - 1; ++i) set(i, i + 1, -1, -1);
      set(rank, rank - 1, -1, -2);
      break;
    case 'D':
      for (int i = 1; i < rank - 2; ++i) set(i, i + 1, -1, -1);
      set(rank - 2, rank - 1, -1, -1);
      set(rank - 2, rank, -1, -1);
      break;
    case 'E':
      set(1, 2, -1, -1);
      set(2, 3, -1, -1);
      set(3, 4, -1, -1);
      set(3, 5, -1, -1);
      for (int i = 5; i < rank; ++i) set(i, i + 1, -1, -1);
      break;
    case 'F':
      set(1, 2, -1, -1);
      set(2, 3, -1, -2);
      set(3, 4, -1, -1);
      break;
    case 'G':
      set(1, 2, -1, -3);
      break;
    default:
      break;
  }
  return c;
}

}  // namespace

CartanData cartan_matrix(char type, int rank) {
  CartanData c = build_cartan(type, rank);
  c.symmetrizer = symmetrizer(type, rank, 1);
  return c;
}

std::vector<int> symmetrizer(char type, int rank, int c) {
  require_valid(type, rank);
  if (c < 1) invalid("symmetrizer multiplier must be >= 1, got " + std::to_string(c));
  const auto n = static_cast<std::size_t>(rank);
  std::vector<int> d(n, 1);
  switch (type) {
    case 'B':
      std::fill(d.begin(), d.end() - 1, 2);
      break;
    case 'C':
      d.back() = 2;
      break;
    case 'F':
      d = {2, 2, 1, 1};
      break;
    case 'G':
      d = {3, 1};
      break;
    default:
      break;
  }
  for (int& v : d) v *= c;

  const CartanData cm = build_cartan(type, rank);
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      if (d[static_cast<std::size_t>(i)] * cm.at(i, j) != d[static_cast<std::size_t>(j)] * cm.at(j, i)) {
        inconsistent("D*C is not symmetric for " + cm.name());
      }
    }
  }
  return d;
}

CartanData cartan_data(char type, int rank, int c) {
  CartanData data = cartan_matrix(type, rank);
  data.symmetrizer = symmetrizer(type, rank, c);
  data.multiplier = c;
  return data;
}

unsigned long long weyl_group_order(char type, int rank) {
  require_valid(type, rank);
  auto factorial = [](int k) {
    unsigned long long f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<unsigned long long>(i);
    return f;
  };
  switch (type) {
    case 'A':
      return factorial(rank + 1);
    case 'B':
    case 'C':
      return (1ULL << rank) * factorial(rank);
    case 'D':
      return (1ULL << (rank - 1)) * factorial(rank);
    case 'E':
      return rank == 6 ? 51840ULL : (rank == 7 ? 2903040ULL : 696729600ULL);
    case 'F':
      return 1152;
    case 'G':
      return 12;
    default:
      return 0;
  }
}

// ---------------------------------------------------------------------------

CoxeterGroup::CoxeterGroup(CartanData cartan) : cartan_(std::move(cartan)) {
  const int n = cartan_.rank;
  for (int i = 0; i < n; ++i) {
    std::vector<int> s(static_cast<std::size_t>(n * n), 0);
    for (int k = 0; k < n; ++k) s[static_cast<std::size_t>(k * n + k)] = 1;
    // Column j holds s_i(alpha_j) = alpha_j - c_ji alpha_i.
    for (int j = 0; j < n; ++j) s[static_cast<std::size_t>(i * n + j)] -= cartan_.at(j, i);
    gens_.push_back(std::move(s));
  }
}

std::vector<int> CoxeterGroup::mul(const std::vector<int>& a, const std::vector<int>& b) const {
  const int n = rank();
  std::vector<int> c(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const int aik = a[static_cast<std::size_t>(i * n + k)];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) {
        c[static_cast<std::size_t>(i * n + j)] += aik * b[static_cast<std::size_t>(k * n + j)];
      }
    }
  }
  return c;
}

WeylElement CoxeterGroup::identity() const {
  const int n = rank();
  WeylElement e;
  e.mat.assign(static_cast<std::size_t>(n * n), 0);
  for (int k = 0; k < n; ++k) e.mat[static_cast<std::size_t>(k * n + k)] = 1;
  return e;
}

WeylElement CoxeterGroup::generator(int i) const { return apply_generator(identity(), i); }

bool CoxeterGroup::is_ascent(const WeylElement& w, int i) const {
  const int n = rank();
  if (i < 1 || i > n) invalid("generator index out of range: " + std::to_string(i));
  // Roots are either nonnegative or nonpositive; test column i of w.
  for (int r = 0; r < n; ++r) {
    if (w.mat[static_cast<std::size_t>(r * n + (i - 1))] < 0) return false;
  }
  return true;
}

WeylElement CoxeterGroup::apply_generator(const WeylElement& w, int i) const {
  const bool ascent = is_ascent(w, i);
  std::vector<int> mat = mul(w.mat, gens_[static_cast<std::size_t>(i - 1)]);
  if (ascent) {
    WeylElement out{std::move(mat), w.word, w.length + 1};
    out.word.push_back(i);
    return out;
  }
  if (!w.word.empty() && w.word.back() == i) {
    WeylElement out{std::move(mat), w.word, w.length - 1};
    out.word.pop_back();
    return out;
  }
  return from_matrix(std::move(mat));
}

WeylElement CoxeterGroup::from_matrix(std::vector<int> mat) const {
  WeylElement cur{mat, {}, 0};
  std::vector<int> reversed;
  // Peel right descents until the identity is reached.
  for (;;) {
    int descent = 0;
    for (int i = 1; i <= rank() && descent == 0; ++i) {
      if (!is_ascent(cur, i)) descent = i;
    }
    if (descent == 0) break;
    cur.mat = mul(cur.mat, gens_[static_cast<std::size_t>(descent - 1)]);
    reversed.push_back(descent);
  }
  if (cur.mat != identity().mat) inconsistent("matrix is not in the Weyl group");
  WeylElement out{std::move(mat), {reversed.rbegin(), reversed.rend()}, 0};
  out.length = static_cast<int>(out.word.size());
  return out;
}

WeylElement CoxeterGroup::multiply(const WeylElement& u, const WeylElement& v) const {
  WeylElement w = u;
  for (int i : v.word) w = apply_generator(w, i);
  return w;
}

WeylElement CoxeterGroup::inverse(const WeylElement& w) const {
  WeylElement out = identity();
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) out = apply_generator(out, *it);
  return out;
}

int CoxeterGroup::coxeter_m(int i, int j) const {
  if (i == j) return 1;
  switch (cartan_.at(i - 1, j - 1) * cartan_.at(j - 1, i - 1)) {
    case 0:
      return 2;
    case 1:
      return 3;
    case 2:
      return 4;
    case 3:
      return 6;
    default:
      inconsistent("Cartan matrix is not of finite type");
  }
}

// ---------------------------------------------------------------------------

std::string word_name(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i);
  return s;
}

namespace {

std::string key_of(const std::vector<int>& mat) {
  std::string key(mat.size(), '\0');
  for (std::size_t i = 0; i < mat.size(); ++i) key[i] = static_cast<char>(mat[i]);
  return key;
}

}  // namespace

std::size_t WeakOrder::index_of(const WeylElement& w) const {
  auto it = by_matrix.find(key_of(w.mat));
  if (it == by_matrix.end()) invalid("element is not in this Weyl group");
  return it->second;
}

WeakOrder weak_order(const CartanData& cartan, unsigned long long budget) {
  const unsigned long long order = weyl_group_order(cartan.type, cartan.rank);
  if (order > budget) {
    budget_exceeded("weak order of " + cartan.name() + " has " + std::to_string(order) +
                    " elements; budget is " + std::to_string(budget));
  }
  CoxeterGroup group(cartan);
  std::vector<WeylElement> elements{group.identity()};
  std::unordered_map<std::string, std::size_t> seen{{key_of(elements[0].mat), 0}};
  std::vector<FiniteLattice::Cover> covers;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (upper, lower)
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (int i = 1; i <= group.rank(); ++i) {
      if (!group.is_ascent(elements[k], i)) continue;
      WeylElement next = group.apply_generator(elements[k], i);
      auto [it, fresh] = seen.emplace(key_of(next.mat), elements.size());
      if (fresh) elements.push_back(std::move(next));
      edges.emplace_back(it->second, k);
    }
  }
  if (elements.size() != order) {
    inconsistent("BFS found " + std::to_string(elements.size()) + " elements in W(" +
                 cartan.name() + "), expected " + std::to_string(order));
  }
  std::vector<std::string> names;
  names.reserve(elements.size());
  for (const auto& w : elements) names.push_back(word_name(w.word));
  covers.reserve(edges.size());
  for (auto [u, d] : edges) covers.emplace_back(names[u], names[d]);
  FiniteLattice lattice = FiniteLattice::from_covers(std::move(names), covers,
                                                     FiniteLattice::Validation::Structural);
  return WeakOrder{std::move(group), std::move(elements), std::move(lattice), std::move(seen)};
}

WeakOrder weak_order(char type, int rank, unsigned long long budget) {
  return weak_order(cartan_matrix(type, rank), budget);
}

const WeylElement& longest_element(const WeakOrder& order) {
  return order.elements[order.lattice.top()];
}

const WeylElement& parabolic_longest(const WeakOrder& order, const std::vector<int>& subset) {
  if (subset.empty()) invalid("w0(J) needs a nonempty J");
  std::size_t acc = 0;
  bool first = true;
  for (int j : subset) {
    const std::size_t s = order.lattice.index_of(word_name({j}));
    acc = first ? s : order.lattice.join(acc, s);
    first = false;
  }
  return order.elements[acc];
}

}  // namespace taufp
