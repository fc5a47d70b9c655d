#include "taufp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "taufp/error.hpp"

namespace taufp {

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::x() { return IntPolynomial{0, 1}; }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

double IntPolynomial::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + it->convert_to<double>();
  }
  return acc;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    BigInt c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (c != 1 || k == 0) os << c;
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Sturm-sequence root isolation over exact rationals.

namespace {

using RatPoly = std::vector<Rational>;  // lowest degree first

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const IntPolynomial& p) {
  RatPoly r;
  for (const auto& c : p.coeffs()) r.emplace_back(c);
  return r;
}

RatPoly derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long long>(k));
  trim(d);
  return d;
}

// Returns (quotient, remainder).
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  trim(a);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

RatPoly gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

int sign_at(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

class SturmChain {
 public:
  explicit SturmChain(const IntPolynomial& p) {
    RatPoly f = to_rat(p);
    RatPoly g = gcd(f, derivative(f));
    if (g.size() > 1) f = divmod(f, g).first;
    chain_.push_back(f);
    chain_.push_back(derivative(f));
    while (chain_.back().size() > 1) {
      RatPoly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
      if (r.empty()) break;
      for (auto& c : r) c = -c;
      chain_.push_back(std::move(r));
    }
    // Cauchy bound on the roots.
    const RatPoly& lead = chain_.front();
    Rational m = 0;
    for (std::size_t i = 0; i + 1 < lead.size(); ++i) {
      Rational v = abs(lead[i] / lead.back());
      if (v > m) m = v;
    }
    bound_ = Rational(1) + m;
  }

  int variations(const Rational& x) const {
    int last = 0;
    int count = 0;
    for (const auto& p : chain_) {
      const int s = sign_at(p, x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  // Number of distinct real roots in (a, b].
  int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

  const Rational& bound() const { return bound_; }
  int degree() const { return static_cast<int>(chain_.front().size()) - 1; }

 private:
  std::vector<RatPoly> chain_;
  Rational bound_;
};

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace

std::vector<double> IntPolynomial::real_roots(double tol) const {
  if (is_zero()) invalid("the zero polynomial has no isolated roots");
  if (degree() == 0) return {};
  const SturmChain sturm(*this);
  std::vector<double> roots;
  std::function<void(Rational, Rational, int)> isolate = [&](Rational lo, Rational hi, int n) {
    if (n == 0) return;
    if (n == 1) {
      while (to_double(hi - lo) >= tol) {
        const Rational mid = (lo + hi) / 2;
        if (sturm.count(lo, mid) == 1) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      roots.push_back(to_double((lo + hi) / 2));
      return;
    }
    const Rational mid = (lo + hi) / 2;
    isolate(lo, mid, sturm.count(lo, mid));
    isolate(mid, hi, sturm.count(mid, hi));
  };
  const Rational lo = -sturm.bound() - 1;
  const Rational hi = sturm.bound();
  isolate(lo, hi, sturm.count(lo, hi));
  return roots;
}

double IntPolynomial::largest_real_root(double tol) const {
  if (is_zero() || degree() == 0) invalid("polynomial has no roots");
  const SturmChain sturm(*this);
  Rational lo = -sturm.bound() - 1;
  Rational hi = sturm.bound();
  if (sturm.count(lo, hi) == 0) invalid("polynomial has no real roots");
  // Invariant: at least one root in (lo, hi], none above hi.
  while (to_double(hi - lo) >= tol) {
    const Rational mid = (lo + hi) / 2;
    if (sturm.count(mid, hi) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return to_double((lo + hi) / 2);
}

// ---------------------------------------------------------------------------
// Characteristic polynomial

IntPolynomial char_poly(const Quiver& q) {
  const std::size_t n = q.size();
  if (n == 0) return IntPolynomial{1};
  using Mat = std::vector<BigInt>;
  Mat a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) a[i] = q.matrix()[i];

  auto mul = [n](const Mat& x, const Mat& y) {
    Mat z(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (x[i * n + k] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) z[i * n + j] += x[i * n + k] * y[k * n + j];
      }
    }
    return z;
  };

  // Faddeev-LeVerrier: M_1 = I, c_{n-k} = -tr(A M_k) / k,
  // M_{k+1} = A M_k + c_{n-k} I.
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  Mat m(n * n);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Mat am = mul(a, m);
    BigInt tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am[i * n + i];
    if (tr % static_cast<long long>(k) != 0) inconsistent("Faddeev-LeVerrier: inexact division");
    c[n - k] = -tr / static_cast<long long>(k);
    for (std::size_t i = 0; i < n; ++i) am[i * n + i] += c[n - k];
    m = std::move(am);
  }
  return IntPolynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// Spectral radius

namespace {

std::vector<std::vector<std::size_t>> strongly_connected_components(const Quiver& q) {
  const std::size_t n = q.size();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> out;
  int counter = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w = 0; w < n; ++w) {
      if (q.arrows(v, w) == 0) continue;
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] < 0) visit(v);
  }
  return out;
}

constexpr long kMaxIterations = 2'000'000;

// Perron root of an irreducible block via power iteration on B = M + I.
// Returns a negative value if the bracket failed to close.
double shifted_power_iteration(const Quiver& block, double tol) {
  const std::size_t m = block.size();
  std::vector<double> x(m, 1.0), y(m);
  for (long it = 0; it < kMaxIterations; ++it) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    double ymax = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      double s = x[i];
      for (std::size_t j = 0; j < m; ++j) s += block.arrows(i, j) * x[j];
      y[i] = s;
      const double r = s / x[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
      ymax = std::max(ymax, s);
    }
    if (hi - lo < tol) return 0.5 * (lo + hi) - 1.0;
    for (std::size_t i = 0; i < m; ++i) x[i] = y[i] / ymax;
  }
  return -1.0;
}

}  // namespace

double spectral_radius(const Quiver& q, double tol, bool verify) {
  if (!(tol > 0.0)) invalid("spectral_radius: tolerance must be positive");
  if (q.empty()) return 0.0;
  double rho = 0.0;
  for (const auto& comp : strongly_connected_components(q)) {
    if (comp.size() == 1 && q.arrows(comp[0], comp[0]) == 0) continue;
    const Quiver block = q.induced(comp);
    double r = shifted_power_iteration(block, tol);
    if (r < 0.0) r = spectral_radius_exact(block, tol);
    rho = std::max(rho, r);
  }
  if (verify) {
    const double exact = spectral_radius_exact(q, tol);
    if (std::abs(exact - rho) > 10.0 * tol) {
      std::ostringstream os;
      os.precision(17);
      os << "spectral_radius: power iteration " << rho << " disagrees with exact root " << exact;
      inconsistent(os.str());
    }
  }
  return rho;
}

double spectral_radius_exact(const Quiver& q, double tol) {
  if (!(tol > 0.0)) invalid("spectral_radius: tolerance must be positive");
  if (q.empty()) return 0.0;
  // Perron-Frobenius: rho of a nonnegative matrix is its largest real eigenvalue.
  return char_poly(q).largest_real_root(tol / 4);
}

// ---------------------------------------------------------------------------
// Closed forms

double dynkin_rho(char type, int rank, bool minimal) {
  using std::numbers::pi;
  const double n = rank;
  auto bad = [&] {
    invalid(std::string("no Dynkin diagram of type ") + type + std::to_string(rank));
  };
  double simply_laced = 0.0;  // spectral radius of the underlying graph
  switch (type) {
    case 'A':
      if (rank < 1) bad();
      simply_laced = 2 * std::cos(pi / (n + 1));
      break;
    case 'B':
    case 'C':
      if (rank < 2) bad();
      simply_laced = 2 * std::cos(pi / (n + 1));
      break;
    case 'D':
      if (rank < 4) bad();
      simply_laced = 2 * std::cos(pi / (2 * (n - 1)));
      break;
    case 'E': {
      if (rank < 6 || rank > 8) bad();
      const double h = rank == 6 ? 12 : (rank == 7 ? 18 : 30);
      simply_laced = 2 * std::cos(pi / h);
      break;
    }
    case 'F':
      if (rank != 4) bad();
      simply_laced = 2 * std::cos(pi / 5);
      break;
    case 'G':
      if (rank != 2) bad();
      simply_laced = 2 * std::cos(pi / 3);
      break;
    default:
      bad();
  }
  if (!minimal) return 1 + simply_laced;
  switch (type) {
    case 'B':
      return 1 + 2 * std::cos(2 * pi / (2 * n + 1));
    case 'C':
      return 2 * std::cos(pi / (2 * n + 1));
    case 'F':
      return (1 + std::sqrt(13.0)) / 2;
    case 'G':
      return (1 + std::sqrt(5.0)) / 2;
    default:
      return simply_laced;
  }
}

Quiver bn_minimal_quiver(int n) {
  if (n < 1) invalid("B_n quiver needs n >= 1");
  const auto m = static_cast<std::size_t>(n);
  std::vector<int> adj(m * m, 0);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    adj[i * m + i + 1] = 1;
    adj[(i + 1) * m + i] = 1;
    adj[i * m + i] = 1;
  }
  return Quiver::from_matrix(m, std::move(adj));
}

std::vector<IntPolynomial> bn_family_char_polys(int n_max) {
  if (n_max < 2) invalid("bn_family_char_polys needs n_max >= 2");
  std::vector<IntPolynomial> f;
  for (int n = 1; n <= n_max; ++n) f.push_back(char_poly(bn_minimal_quiver(n)));

  const IntPolynomial x_minus_1{-1, 1};
  for (int n = 2; n < n_max; ++n) {
    const auto k = static_cast<std::size_t>(n);
    if (f[k] != x_minus_1 * f[k - 1] - f[k - 2]) {
      inconsistent("B_n recurrence fails at n = " + std::to_string(n + 1));
    }
  }
  for (int n = 1; n <= n_max; ++n) {
    std::vector<double> expected;
    for (int k = 1; k <= n; ++k) {
      expected.push_back(1 + 2 * std::cos(2 * k * std::numbers::pi / (2 * n + 1)));
    }
    std::sort(expected.begin(), expected.end());
    const auto roots = f[static_cast<std::size_t>(n - 1)].real_roots();
    bool ok = roots.size() == expected.size();
    for (std::size_t i = 0; ok && i < roots.size(); ++i) ok = std::abs(roots[i] - expected[i]) < 1e-9;
    if (!ok) inconsistent("B_n root formula fails at n = " + std::to_string(n));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Quadratic forms of bipartite quivers

std::vector<std::string> sink_labels(const Quiver& delta) {
  std::vector<std::string> out;
  for (std::size_t v = 0; v < delta.size(); ++v) {
    bool has_out = false;
    for (std::size_t u = 0; u < delta.size(); ++u) has_out = has_out || delta.arrows(v, u) > 0;
    if (!has_out) out.push_back(delta.labels()[v]);
  }
  return out;
}

SymIntMatrix gram_matrix(const Quiver& delta) {
  if (!delta.is_bipartite()) invalid("gram_matrix needs a bipartite quiver");
  std::vector<std::size_t> sinks, sources;
  for (std::size_t v = 0; v < delta.size(); ++v) {
    bool has_out = false;
    for (std::size_t u = 0; u < delta.size(); ++u) has_out = has_out || delta.arrows(v, u) > 0;
    (has_out ? sources : sinks).push_back(v);
  }
  SymIntMatrix g;
  g.n = sinks.size();
  g.entries.assign(g.n * g.n, 0);
  for (std::size_t a = 0; a < g.n; ++a) {
    for (std::size_t b = 0; b < g.n; ++b) {
      long long ata = 0;
      for (std::size_t s : sources) {
        ata += static_cast<long long>(delta.arrows(s, sinks[a])) * delta.arrows(s, sinks[b]);
      }
      g.entries[a * g.n + b] = (a == b ? 4 : 0) - ata;
    }
  }
  return g;
}

namespace {

// Primitive integer basis of the null space, from the reduced row echelon form.
std::vector<std::vector<BigInt>> null_space(const SymIntMatrix& g) {
  const std::size_t n = g.n;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = g.at(i, j);
  }
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(n, false);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = row;
    while (p < n && m[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < n; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    is_pivot[col] = true;
    ++row;
  }
  std::vector<std::vector<BigInt>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) {
      v[static_cast<std::size_t>(pivot_col_of_row[r])] = -m[r][free];
    }
    BigInt den = 1;
    for (const auto& x : v) den = boost::multiprecision::lcm(den, denominator(x));
    std::vector<BigInt> iv(n);
    BigInt g_all = 0;
    for (std::size_t i = 0; i < n; ++i) {
      iv[i] = numerator(v[i]) * (den / denominator(v[i]));
      g_all = boost::multiprecision::gcd(g_all, iv[i]);
    }
    if (g_all > 1) {
      for (auto& x : iv) x /= g_all;
    }
    basis.push_back(std::move(iv));
  }
  return basis;
}

}  // namespace

Definiteness definiteness(const SymIntMatrix& g) {
  const std::size_t n = g.n;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = g.at(i, j);
  }
  // Symmetric elimination with diagonal pivoting: G is congruent to
  // diag(pivots) (+) S, where S is the remaining Schur complement.
  std::vector<bool> done(n, false);
  std::size_t remaining = n;
  Definiteness out;
  while (remaining > 0) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      if (m[i][i] < 0) return out;  // Indefinite
      if (m[i][i] > 0 && p == n) p = i;
    }
    if (p == n) {
      // Zero diagonal on the rest: PSD iff the whole block vanishes.
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (!done[i] && !done[j] && m[i][j] != 0) return out;
        }
      }
      out.kind = Definiteness::Kind::PositiveSemidefiniteSingular;
      out.kernel_basis = null_space(g);
      return out;
    }
    done[p] = true;
    --remaining;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || m[i][p] == 0) continue;
      const Rational f = m[i][p] / m[p][p];
      for (std::size_t j = 0; j < n; ++j) {
        if (!done[j]) m[i][j] -= f * m[p][j];
      }
    }
  }
  out.kind = Definiteness::Kind::PositiveDefinite;
  return out;
}

bool in_kernel(const SymIntMatrix& g, const std::vector<long long>& v) {
  if (v.size() != g.n) return false;
  for (std::size_t i = 0; i < g.n; ++i) {
    long long s = 0;
    for (std::size_t j = 0; j < g.n; ++j) s += g.at(i, j) * v[j];
    if (s != 0) return false;
  }
  return true;
}

}  // namespace taufp
