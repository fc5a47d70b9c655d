#pragma once

#include <vector>

#include "taufp/coxeter.hpp"
#include "taufp/quiver.hpp"

namespace taufp {

/// Gabriel quiver of the generalized preprojective algebra Pi(C, D): one
/// arrow each way along every Dynkin edge, plus a loop at vertex i whenever
/// the symmetrizer entry at i is at least 2.
Quiver gabriel_quiver(const CartanData& cartan);

/// rho(gabriel_quiver), cross-checked against dynkin_rho to 1e-9.
double fpdim_preproj(const CartanData& cartan, double tol = kDefaultTol);

/// The tau-tilting poset of Pi(C, D)^op modelled as the opposite of the
/// right weak order on W(C). Independent of the symmetrizer.
FiniteLattice tau_tiltp_model(const CartanData& cartan,
                              unsigned long long budget = kDefaultBudget);

struct PreprojRow {
  CartanData cartan;
  double computed = 0.0;
  double closed_form = 0.0;
  bool pass = false;
};

/// The closed-form table rows for A1..A6, B2..B4, C2..C4, D4, D5, E6, F4, G2,
/// each with the minimal symmetrizer and with multiplier 2.
std::vector<PreprojRow> preproj_table(double tol = kDefaultTol);

}  // namespace taufp
