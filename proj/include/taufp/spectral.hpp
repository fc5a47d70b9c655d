#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "taufp/quiver.hpp"

namespace taufp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Polynomial with exact integer coefficients, lowest degree first.
/// The zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial x();

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(int k) const;

  double eval(double x) const;

  /// All distinct real roots, ascending, each located to within `tol`.
  std::vector<double> real_roots(double tol = 1e-13) const;
  /// Largest real root; throws if there is none.
  double largest_real_root(double tol = 1e-13) const;

  /// e.g. "x^2 - x - 1".
  std::string to_string() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  bool operator==(const IntPolynomial&) const = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// det(xI - M(Q)) by Faddeev-LeVerrier over exact integers.
IntPolynomial char_poly(const Quiver& q);

constexpr double kDefaultTol = 1e-12;

/// Spectral radius of the adjacency matrix. Each strongly connected
/// component is handled by power iteration on M_C + I with Collatz-Wielandt
/// bracketing; acyclic components contribute 0. With `verify`, the result is
/// recomputed from the characteristic polynomial and must agree to 10*tol.
double spectral_radius(const Quiver& q, double tol = kDefaultTol, bool verify = false);

/// Largest real root of char_poly(q): the exact route.
double spectral_radius_exact(const Quiver& q, double tol = kDefaultTol);

/// Closed-form spectral radius of the Gabriel quiver of the generalized
/// preprojective algebra of the given Dynkin type.
double dynkin_rho(char type, int rank, bool minimal);

/// Characteristic polynomials f_1..f_{n_max} of the minimal B_n preprojective
/// quivers, checked against f_{n+1} = (x-1) f_n - f_{n-1} and the root formula.
std::vector<IntPolynomial> bn_family_char_polys(int n_max);

/// The minimal B_n preprojective quiver: double path with loops at 1..n-1.
Quiver bn_minimal_quiver(int n);

/// Symmetric integer matrix, row-major.
struct SymIntMatrix {
  std::size_t n = 0;
  std::vector<long long> entries;

  long long at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
  bool operator==(const SymIntMatrix&) const = default;
};

/// Gram matrix 4I - A^T A of the quadratic form q_Delta on sink coordinates
/// of a bipartite quiver (sinks = vertices without outgoing arrows, in label
/// order). Throws on non-bipartite input.
SymIntMatrix gram_matrix(const Quiver& delta);

/// Sink labels of a bipartite quiver in coordinate order.
std::vector<std::string> sink_labels(const Quiver& delta);

struct Definiteness {
  enum class Kind { PositiveDefinite, PositiveSemidefiniteSingular, Indefinite };
  Kind kind = Kind::Indefinite;
  /// Primitive integer basis of ker G; populated only when semidefinite.
  std::vector<std::vector<BigInt>> kernel_basis;
};

Definiteness definiteness(const SymIntMatrix& g);

/// True iff G v = 0 exactly.
bool in_kernel(const SymIntMatrix& g, const std::vector<long long>& v);

}  // namespace taufp
