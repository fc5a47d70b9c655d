#include "taufp/nakayama.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "taufp/error.hpp"

namespace taufp {

NakayamaAlgebra NakayamaAlgebra::make(Shape shape, std::vector<int> kupisch) {
  const int n = static_cast<int>(kupisch.size());
  if (n == 0) invalid("Kupisch series is empty");
  auto at = [&](int i) { return kupisch[static_cast<std::size_t>(i - 1)]; };
  auto fail = [&](const std::string& why) {
    std::ostringstream os;
    os << "invalid Kupisch series (";
    for (int i = 0; i < n; ++i) os << (i ? "," : "") << kupisch[static_cast<std::size_t>(i)];
    os << "): " << why;
    invalid(os.str());
  };
  if (shape == Shape::Linear) {
    if (at(1) != 1) fail("l_1 must be 1");
    for (int i = 2; i <= n; ++i) {
      if (at(i) < 2) fail("l_" + std::to_string(i) + " must be at least 2");
      if (at(i) > at(i - 1) + 1) fail("l_" + std::to_string(i) + " exceeds l_" + std::to_string(i - 1) + " + 1");
    }
  } else {
    for (int i = 1; i <= n; ++i) {
      const int prev = at(i == 1 ? n : i - 1);
      if (at(i) < 2) fail("l_" + std::to_string(i) + " must be at least 2");
      if (at(i) > prev + 1) fail("l_" + std::to_string(i) + " exceeds its predecessor + 1");
    }
  }
  return NakayamaAlgebra(shape, std::move(kupisch));
}

int NakayamaAlgebra::wrap(int i) const {
  if (shape_ == Shape::Linear) return i;
  const int k = n();
  return ((i - 1) % k + k) % k + 1;
}

bool NakayamaAlgebra::exists(const Uniserial& m) const {
  if (m.len < 1) return false;
  if (shape_ == Shape::Linear) {
    if (m.socle < 1 || m.socle + m.len - 1 > n()) return false;
  } else if (m.socle < 1 || m.socle > n()) {
    return false;
  }
  return m.len <= proj_length(top(m));
}

Uniserial NakayamaAlgebra::projective(int k) const {
  if (shape_ == Shape::Linear && (k < 1 || k > n())) invalid("no vertex " + std::to_string(k));
  const int t = wrap(k);
  const int len = proj_length(t);
  return {wrap(t - len + 1), len};
}

std::string NakayamaAlgebra::describe() const {
  std::string s = shape_ == Shape::Linear ? "linear " : "cyclic ";
  for (std::size_t i = 0; i < kupisch_.size(); ++i) {
    s += (i ? "," : "") + std::to_string(kupisch_[i]);
  }
  return s;
}

std::string module_name(const Uniserial& m) {
  return "M(" + std::to_string(m.socle) + ";" + std::to_string(m.len) + ")";
}

std::string pair_name(const TauPair& p) {
  std::string s;
  for (std::size_t i = 0; i < p.mods.size(); ++i) s += (i ? "+" : "") + module_name(p.mods[i]);
  if (s.empty()) s = "0";
  s += "|";
  if (p.projs.empty()) s += "0";
  for (std::size_t i = 0; i < p.projs.size(); ++i) {
    s += (i ? "+P(" : "P(") + std::to_string(p.projs[i]) + ")";
  }
  return s;
}

namespace {

void require_module(const NakayamaAlgebra& a, const Uniserial& m) {
  if (!a.exists(m)) invalid(module_name(m) + " is not a module over " + a.describe());
}

void require_enumerable(const NakayamaAlgebra& a, int max_vertices) {
  if (a.n() > max_vertices) {
    budget_exceeded("enumeration is limited to " + std::to_string(max_vertices) +
                    " vertices; algebra has " + std::to_string(a.n()));
  }
}

int hom_raw(const NakayamaAlgebra& a, const Uniserial& m, const Uniserial& n) {
  const int r = m.socle + m.len - n.socle;
  const int lim = std::min(m.len, n.len);
  if (a.shape() == Shape::Linear) return (r >= 1 && r <= lim) ? 1 : 0;
  const int k = a.n();
  int count = 0;
  for (int j = 1; j <= lim; ++j) {
    if (((j - r) % k + k) % k == 0) ++count;
  }
  return count;
}

}  // namespace

std::vector<Uniserial> indecomposables(const NakayamaAlgebra& a) {
  std::vector<Uniserial> out;
  for (int t = 1; t <= a.n(); ++t) {
    for (int l = 1; l <= a.proj_length(t); ++l) out.push_back({a.wrap(t - l + 1), l});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Uniserial> tau(const NakayamaAlgebra& a, const Uniserial& m) {
  require_module(a, m);
  if (a.is_projective(m)) return std::nullopt;
  Uniserial t{a.wrap(m.socle - 1), m.len};
  if (!a.exists(t)) inconsistent("tau of " + module_name(m) + " does not exist");
  return t;
}

int hom_dim(const NakayamaAlgebra& a, const Uniserial& m, const Uniserial& n) {
  require_module(a, m);
  require_module(a, n);
  return hom_raw(a, m, n);
}

int ext_dim(const NakayamaAlgebra& a, const Uniserial& m, const Uniserial& n) {
  require_module(a, m);
  require_module(a, n);
  if (a.is_projective(m)) return 0;
  const Uniserial p0 = a.projective(a.top(m));
  const Uniserial k{p0.socle, p0.len - m.len};
  const int e = hom_raw(a, k, n) - hom_raw(a, p0, n) + hom_raw(a, m, n);
  if (e < 0) inconsistent("negative Ext dimension for " + module_name(m) + ", " + module_name(n));
  return e;
}

bool is_brick(const NakayamaAlgebra& a, const Uniserial& m) {
  require_module(a, m);
  const bool brick = m.len <= a.n();
  if (brick != (hom_raw(a, m, m) == 1)) inconsistent("brick test disagrees with End(" + module_name(m) + ")");
  return brick;
}

std::vector<Uniserial> bricks(const NakayamaAlgebra& a) {
  std::vector<Uniserial> out;
  for (const auto& m : indecomposables(a)) {
    if (is_brick(a, m)) out.push_back(m);
  }
  return out;
}

bool is_tau_rigid_module(const NakayamaAlgebra& a, const Uniserial& m) {
  require_module(a, m);
  const auto t = tau(a, m);
  const bool rigid = !t || m.len < a.n();
  if (rigid != (!t || hom_raw(a, m, *t) == 0)) {
    inconsistent("tau-rigidity test disagrees with Hom(M, tau M) for " + module_name(m));
  }
  return rigid;
}

namespace {

bool modules_compatible(const NakayamaAlgebra& a, const Uniserial& x, const Uniserial& y) {
  const auto tx = tau(a, x);
  const auto ty = tau(a, y);
  return (!ty || hom_raw(a, x, *ty) == 0) && (!tx || hom_raw(a, y, *tx) == 0);
}

bool proj_compatible(const NakayamaAlgebra& a, int k, const Uniserial& m) {
  return hom_raw(a, a.projective(k), m) == 0;
}

}  // namespace

bool is_tau_rigid_pair(const NakayamaAlgebra& a, const TauPair& p) {
  for (std::size_t i = 0; i < p.mods.size(); ++i) {
    if (!is_tau_rigid_module(a, p.mods[i])) return false;
    for (std::size_t j = i + 1; j < p.mods.size(); ++j) {
      if (p.mods[i] == p.mods[j] || !modules_compatible(a, p.mods[i], p.mods[j])) return false;
    }
    for (int k : p.projs) {
      if (!proj_compatible(a, k, p.mods[i])) return false;
    }
  }
  for (std::size_t i = 0; i < p.projs.size(); ++i) {
    const int k = p.projs[i];
    if (k < 1 || k > a.n()) invalid("no vertex " + std::to_string(k));
    for (std::size_t j = i + 1; j < p.projs.size(); ++j) {
      if (p.projs[j] == k) return false;
    }
  }
  return true;
}

std::vector<TauPair> tau_tilting_pairs(const NakayamaAlgebra& a, int max_vertices) {
  require_enumerable(a, max_vertices);
  const int n = a.n();
  std::vector<Uniserial> mods;
  for (const auto& m : indecomposables(a)) {
    if (is_tau_rigid_module(a, m)) mods.push_back(m);
  }
  // Candidates: modules first, then projective markers 1..n.
  const std::size_t nm = mods.size();
  const std::size_t total = nm + static_cast<std::size_t>(n);
  std::vector<std::vector<char>> ok(total, std::vector<char>(total, 1));
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = i + 1; j < total; ++j) {
      bool c = true;
      if (i < nm && j < nm) {
        c = modules_compatible(a, mods[i], mods[j]);
      } else if (i < nm) {
        c = proj_compatible(a, static_cast<int>(j - nm) + 1, mods[i]);
      }
      ok[i][j] = ok[j][i] = c;
    }
  }

  std::vector<TauPair> out;
  std::vector<std::size_t> chosen;
  auto dfs = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(chosen.size()) == n) {
      TauPair p;
      for (std::size_t c : chosen) {
        if (c < nm) {
          p.mods.push_back(mods[c]);
        } else {
          p.projs.push_back(static_cast<int>(c - nm) + 1);
        }
      }
      out.push_back(std::move(p));
      return;
    }
    for (std::size_t c = start; c < total; ++c) {
      if (std::all_of(chosen.begin(), chosen.end(), [&](std::size_t d) { return ok[c][d] != 0; })) {
        chosen.push_back(c);
        self(self, c + 1);
        chosen.pop_back();
      }
    }
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool pair_geq(const NakayamaAlgebra& a, const TauPair& x, const TauPair& y) {
  for (int k : x.projs) {
    if (!std::binary_search(y.projs.begin(), y.projs.end(), k)) return false;
  }
  for (const auto& mx : x.mods) {
    const auto t = tau(a, mx);
    if (!t) continue;
    for (const auto& my : y.mods) {
      if (hom_raw(a, my, *t) != 0) return false;
    }
  }
  return true;
}

TauTiltingPoset tau_tiltp_lattice(const NakayamaAlgebra& a, int max_vertices) {
  std::vector<TauPair> pairs = tau_tilting_pairs(a, max_vertices);
  const std::size_t m = pairs.size();
  std::vector<std::vector<char>> gt(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && pair_geq(a, pairs[i], pairs[j])) gt[i][j] = 1;
    }
  }
  std::vector<std::string> names;
  for (const auto& p : pairs) names.push_back(pair_name(p));
  std::vector<FiniteLattice::Cover> covers;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!gt[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < m && cover; ++k) {
        if (gt[i][k] && gt[k][j]) cover = false;
      }
      if (cover) covers.emplace_back(names[i], names[j]);
    }
  }
  FiniteLattice lattice = FiniteLattice::from_covers(names, covers);

  TauPair top, bottom;
  for (int k = 1; k <= a.n(); ++k) {
    top.mods.push_back(a.projective(k));
    bottom.projs.push_back(k);
  }
  std::sort(top.mods.begin(), top.mods.end());
  if (pairs[lattice.top()] != top || pairs[lattice.bottom()] != bottom) {
    inconsistent("tau-tilting poset of " + a.describe() + " has unexpected extremes");
  }
  return {std::move(pairs), std::move(lattice)};
}

std::vector<Semibrick> semibricks(const NakayamaAlgebra& a, int max_vertices) {
  require_enumerable(a, max_vertices);
  const std::vector<Uniserial> bs = bricks(a);
  std::vector<Semibrick> out;
  Semibrick cur;
  auto dfs = [&](auto&& self, std::size_t start) -> void {
    out.push_back(cur);
    for (std::size_t i = start; i < bs.size(); ++i) {
      const bool orth = std::all_of(cur.begin(), cur.end(), [&](const Uniserial& s) {
        return hom_raw(a, s, bs[i]) == 0 && hom_raw(a, bs[i], s) == 0;
      });
      if (!orth) continue;
      cur.push_back(bs[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  dfs(dfs, 0);
  return out;
}

Quiver ext_quiver(const NakayamaAlgebra& a, const Semibrick& s) {
  const std::size_t k = s.size();
  std::vector<std::string> labels;
  std::vector<int> adj(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(module_name(s[i]));
    for (std::size_t j = 0; j < k; ++j) adj[i * k + j] = ext_dim(a, s[i], s[j]);
  }
  return Quiver::from_matrix(std::move(labels), std::move(adj));
}

double fpdim_nakayama(const NakayamaAlgebra& a, double tol, int max_vertices) {
  double best = 0.0;
  for (const auto& s : semibricks(a, max_vertices)) {
    if (!s.empty()) best = std::max(best, spectral_radius(ext_quiver(a, s), tol));
  }
  return best;
}

TauPair bongartz_completion(const NakayamaAlgebra& a, const Uniserial& m, int max_vertices) {
  if (!is_tau_rigid_module(a, m)) invalid(module_name(m) + " is not tau-rigid");
  const int n = a.n();
  if (a.is_projective(m)) {
    TauPair top;
    for (int k = 1; k <= n; ++k) top.mods.push_back(a.projective(k));
    std::sort(top.mods.begin(), top.mods.end());
    return top;
  }

  std::optional<TauPair> formula;
  if (a.shape() == Shape::Cyclic) {
    TauPair p;
    p.mods.push_back(m);
    for (int j = 1; j < m.len; ++j) p.mods.push_back({m.socle, j});
    for (int k = m.len; k < n; ++k) p.mods.push_back(a.projective(k + m.socle - 1));
    std::sort(p.mods.begin(), p.mods.end());
    p.mods.erase(std::unique(p.mods.begin(), p.mods.end()), p.mods.end());
    if (static_cast<int>(p.mods.size()) != n || !is_tau_rigid_pair(a, p)) {
      inconsistent("Bongartz completion of " + module_name(m) + " is not tau-tilting");
    }
    formula = std::move(p);
    if (n > max_vertices) return *formula;
  }

  // Maximum of the pairs having M as a summand.
  const auto pairs = tau_tilting_pairs(a, max_vertices);
  std::vector<const TauPair*> with_m;
  for (const auto& p : pairs) {
    if (std::binary_search(p.mods.begin(), p.mods.end(), m)) with_m.push_back(&p);
  }
  const TauPair* best = nullptr;
  for (const TauPair* p : with_m) {
    if (std::all_of(with_m.begin(), with_m.end(), [&](const TauPair* q) { return pair_geq(a, *p, *q); })) {
      best = p;
      break;
    }
  }
  if (!best) inconsistent("no maximum among pairs containing " + module_name(m));
  if (formula && *formula != *best) {
    inconsistent("Bongartz completion of " + module_name(m) + " is " + pair_name(*best) +
                 ", formula gives " + pair_name(*formula));
  }
  return *best;
}

int self_ext_bound(const NakayamaAlgebra& a) {
  int best = 0;
  for (const auto& b : bricks(a)) best = std::max(best, ext_dim(a, b, b));
  return best;
}

SandwichReport sandwich(const NakayamaAlgebra& a, double tol, int max_vertices) {
  SandwichReport r;
  const TauTiltingPoset poset = tau_tiltp_lattice(a, max_vertices);
  r.fpdim_lattice = fpdim_lattice(poset.lattice, tol).value;
  r.d_b = self_ext_bound(a);
  r.fpdim = fpdim_nakayama(a, tol, max_vertices);
  r.pair_count = poset.pairs.size();
  r.semibrick_count = semibricks(a, max_vertices).size();
  constexpr double slack = 1e-9;
  r.bounds_hold = std::max(r.fpdim_lattice, static_cast<double>(r.d_b)) <= r.fpdim + slack &&
                  r.fpdim <= r.fpdim_lattice + r.d_b + slack;
  r.counts_match = r.pair_count == r.semibrick_count;
  return r;
}

std::vector<int> canonical_form(const Quiver& q) {
  const std::size_t n = q.size();
  if (n > 6) invalid("canonical form is limited to 6 vertices");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> cur{static_cast<int>(n)};
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) cur.push_back(q.arrows(perm[i], perm[j]));
    }
    if (best.empty() || cur < best) best = std::move(cur);
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (best.empty()) best.push_back(0);
  return best;
}

bool ext_quivers_match_lattice_quivers(const NakayamaAlgebra& a, int max_vertices) {
  std::set<std::vector<int>> from_ext;
  for (const auto& s : semibricks(a, max_vertices)) {
    if (!s.empty()) from_ext.insert(canonical_form(loop_removed(ext_quiver(a, s))));
  }
  const TauTiltingPoset poset = tau_tiltp_lattice(a, max_vertices);
  const FiniteLattice& l = poset.lattice;
  std::set<std::vector<int>> from_lattice;
  for (std::size_t x = 0; x < l.size(); ++x) {
    const auto& dp = l.upper_covers(x);
    const std::size_t k = dp.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
      std::vector<std::size_t> ys;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask >> i & 1U) ys.push_back(dp[i]);
      }
      from_lattice.insert(canonical_form(q_of(l, x, ys)));
    }
  }
  return from_ext == from_lattice;
}

}  // namespace taufp
