#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "taufp/lattice.hpp"
#include "taufp/quiver.hpp"
#include "taufp/spectral.hpp"

namespace taufp {

// Nakayama algebras on the linear quiver 1 <- 2 <- ... <- n or the cyclic
// quiver obtained by adding n -> ... -> 1 (arrow 1 -> n), given by their
// Kupisch series: kupisch[i-1] is the length of the projective P(i).
//
// Indecomposable modules are uniserial, written M(i;l) by socle i and length
// l; their composition factors from the socle up are i, i+1, ..., i+l-1.

enum class Shape { Linear, Cyclic };

struct Uniserial {
  int socle = 1;
  int len = 1;

  auto operator<=>(const Uniserial&) const = default;
};

struct TauPair {
  std::vector<Uniserial> mods;  // sorted
  std::vector<int> projs;       // vertices k of the P(k) in the second slot, sorted

  auto operator<=>(const TauPair&) const = default;
};

/// Enumeration operations refuse algebras with more vertices than this.
constexpr int kDefaultMaxVertices = 5;

class NakayamaAlgebra {
 public:
  /// Linear: l_1 = 1 and 2 <= l_i <= min(l_{i-1} + 1, i) for i >= 2.
  /// Cyclic: l_i >= 2 and l_i <= l_{i-1} + 1 with indices mod n.
  static NakayamaAlgebra make(Shape shape, std::vector<int> kupisch);

  Shape shape() const noexcept { return shape_; }
  int n() const noexcept { return static_cast<int>(kupisch_.size()); }
  const std::vector<int>& kupisch() const noexcept { return kupisch_; }
  /// Length of P(k).
  int proj_length(int k) const { return kupisch_.at(static_cast<std::size_t>(wrap(k) - 1)); }

  /// Vertex index reduced into 1..n (identity for linear algebras).
  int wrap(int i) const;
  int top(const Uniserial& m) const { return wrap(m.socle + m.len - 1); }
  bool exists(const Uniserial& m) const;
  bool is_projective(const Uniserial& m) const { return m.len == proj_length(top(m)); }
  Uniserial projective(int k) const;
  Uniserial simple(int k) const { return {wrap(k), 1}; }

  /// "linear 1,2,3" / "cyclic 2,2,2".
  std::string describe() const;

 private:
  NakayamaAlgebra(Shape shape, std::vector<int> kupisch)
      : shape_(shape), kupisch_(std::move(kupisch)) {}

  Shape shape_;
  std::vector<int> kupisch_;
};

std::string module_name(const Uniserial& m);
std::string pair_name(const TauPair& p);

/// All indecomposables, sorted by (socle, length).
std::vector<Uniserial> indecomposables(const NakayamaAlgebra& a);

/// Auslander-Reiten translate: M(i-1;l) for non-projective M(i;l), else zero.
std::optional<Uniserial> tau(const NakayamaAlgebra& a, const Uniserial& m);

/// dim Hom(M(a;k), M(b;l)) = #{ j in [1, min(k,l)] : j = a + k - b (mod n) },
/// with no reduction mod n for linear algebras.
int hom_dim(const NakayamaAlgebra& a, const Uniserial& m, const Uniserial& n);

/// dim Ext^1(M, N) from 0 -> K -> P(top M) -> M -> 0.
int ext_dim(const NakayamaAlgebra& a, const Uniserial& m, const Uniserial& n);

bool is_brick(const NakayamaAlgebra& a, const Uniserial& m);
std::vector<Uniserial> bricks(const NakayamaAlgebra& a);
bool is_tau_rigid_module(const NakayamaAlgebra& a, const Uniserial& m);
bool is_tau_rigid_pair(const NakayamaAlgebra& a, const TauPair& p);

/// Every tau-tilting pair (|mods| + |projs| = n), sorted.
std::vector<TauPair> tau_tilting_pairs(const NakayamaAlgebra& a,
                                       int max_vertices = kDefaultMaxVertices);

/// (M, P) >= (M', P') iff Hom(M', tau M) = 0 and P is contained in P'.
bool pair_geq(const NakayamaAlgebra& a, const TauPair& x, const TauPair& y);

struct TauTiltingPoset {
  std::vector<TauPair> pairs;  // aligned with lattice indices
  FiniteLattice lattice;
};

/// The poset of tau-tilting pairs with its Hasse diagram, validated as a
/// lattice with maximum (A, 0) and minimum (0, A).
TauTiltingPoset tau_tiltp_lattice(const NakayamaAlgebra& a,
                                  int max_vertices = kDefaultMaxVertices);

using Semibrick = std::vector<Uniserial>;

/// All semibricks including the empty one.
std::vector<Semibrick> semibricks(const NakayamaAlgebra& a,
                                  int max_vertices = kDefaultMaxVertices);

Quiver ext_quiver(const NakayamaAlgebra& a, const Semibrick& s);

/// sup of rho(Ext-quiver) over all semibricks, by exhaustive enumeration.
double fpdim_nakayama(const NakayamaAlgebra& a, double tol = kDefaultTol,
                      int max_vertices = kDefaultMaxVertices);

/// Bongartz completion (M~, 0) of (M, 0). For a non-projective M over a
/// cyclic algebra it is M + (+)_{1<=j<l} M(i;j) + (+)_{l<=k<n} P(k+i-1); a
/// projective M completes to (A, 0); other cases search the enumerated poset.
TauPair bongartz_completion(const NakayamaAlgebra& a, const Uniserial& m,
                            int max_vertices = kDefaultMaxVertices);

/// max dim Ext^1(S, S) over bricks S.
int self_ext_bound(const NakayamaAlgebra& a);

struct SandwichReport {
  double fpdim_lattice = 0.0;
  int d_b = 0;
  double fpdim = 0.0;
  std::size_t semibrick_count = 0;
  std::size_t pair_count = 0;
  bool bounds_hold = false;
  bool counts_match = false;

  bool pass() const { return bounds_hold && counts_match; }
};

/// max{FPdim(tau-tiltp), d_b} <= FPdim(A) <= FPdim(tau-tiltp) + d_b (to 1e-9),
/// together with |semibricks| = |tau-tilting pairs|.
SandwichReport sandwich(const NakayamaAlgebra& a, double tol = kDefaultTol,
                        int max_vertices = kDefaultMaxVertices);

/// Minimum adjacency matrix over all vertex relabelings (at most 6 vertices).
std::vector<int> canonical_form(const Quiver& q);

/// Whether the loop-removed Ext-quivers of nonempty semibricks and the
/// quivers Q(x, Y) of the tau-tilting lattice agree up to isomorphism.
bool ext_quivers_match_lattice_quivers(const NakayamaAlgebra& a,
                                       int max_vertices = kDefaultMaxVertices);

}  // namespace taufp
