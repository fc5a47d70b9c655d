#include "taufp/preproj.hpp"

#include <cmath>
#include <sstream>

#include "taufp/error.hpp"

namespace taufp {

Quiver gabriel_quiver(const CartanData& cartan) {
  const auto n = static_cast<std::size_t>(cartan.rank);
  std::vector<int> adj(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && cartan.at(static_cast<int>(i), static_cast<int>(j)) != 0) adj[i * n + j] = 1;
    }
    // epsilon_i^{c_i} is a relation, so the loop is in rad^2 only when c_i = 1.
    if (cartan.symmetrizer[i] >= 2) adj[i * n + i] = 1;
  }
  return Quiver::from_matrix(n, std::move(adj));
}

double fpdim_preproj(const CartanData& cartan, double tol) {
  const double rho = spectral_radius(gabriel_quiver(cartan), tol);
  const double closed = dynkin_rho(cartan.type, cartan.rank, cartan.minimal());
  if (std::abs(rho - closed) > 1e-9) {
    std::ostringstream os;
    os.precision(15);
    os << "rho(Q) = " << rho << " for " << cartan.name() << " (c = " << cartan.multiplier
       << ") but the closed form gives " << closed;
    inconsistent(os.str());
  }
  return rho;
}

FiniteLattice tau_tiltp_model(const CartanData& cartan, unsigned long long budget) {
  return weak_order(cartan, budget).lattice.opposite();
}

std::vector<PreprojRow> preproj_table(double tol) {
  const std::vector<std::pair<char, int>> types = {
      {'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'A', 5}, {'A', 6}, {'B', 2}, {'B', 3},
      {'B', 4}, {'C', 2}, {'C', 3}, {'C', 4}, {'D', 4}, {'D', 5}, {'E', 6}, {'F', 4},
      {'G', 2}};
  std::vector<PreprojRow> rows;
  for (int c : {1, 2}) {
    for (auto [type, rank] : types) {
      PreprojRow row;
      row.cartan = cartan_data(type, rank, c);
      row.computed = spectral_radius(gabriel_quiver(row.cartan), tol);
      row.closed_form = dynkin_rho(type, rank, c == 1);
      row.pass = std::abs(row.computed - row.closed_form) <= 1e-9;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace taufp
