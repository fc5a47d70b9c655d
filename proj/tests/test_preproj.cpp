#include <cmath>

#include "doctest.h"
#include "taufp/error.hpp"
#include "taufp/preproj.hpp"

using namespace taufp;

namespace {

std::vector<std::size_t> loops_of(const Quiver& q) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q.arrows(i, i) > 0) out.push_back(i + 1);
  return out;
}

}  // namespace

TEST_CASE("Gabriel quivers") {
  const Quiver a3 = gabriel_quiver(cartan_data('A', 3));
  CHECK(a3.matrix() == std::vector<int>{0, 1, 0, 1, 0, 1, 0, 1, 0});
  CHECK(loops_of(gabriel_quiver(cartan_data('B', 3))) == std::vector<std::size_t>{1, 2});
  CHECK(loops_of(gabriel_quiver(cartan_data('C', 3))) == std::vector<std::size_t>{3});
  CHECK(loops_of(gabriel_quiver(cartan_data('G', 2))) == std::vector<std::size_t>{1});
  CHECK(loops_of(gabriel_quiver(cartan_data('F', 4))) == std::vector<std::size_t>{1, 2});
  const Quiver a2c2 = gabriel_quiver(cartan_data('A', 2, 2));
  CHECK(a2c2.matrix() == std::vector<int>{1, 1, 1, 1});
  for (char t : {'A', 'B', 'C', 'D', 'E', 'F', 'G'}) {
    const int r = t == 'E' ? 6 : (t == 'F' ? 4 : (t == 'G' ? 2 : 4));
    CHECK(!gabriel_quiver(cartan_data(t, r)).has_multiple_arrows());
    CHECK(loops_of(gabriel_quiver(cartan_data(t, r, 2))).size() == static_cast<std::size_t>(r));
  }
}

TEST_CASE("FPdim of preprojective algebras") {
  CHECK(fpdim_preproj(cartan_data('A', 3)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(fpdim_preproj(cartan_data('F', 4)) == doctest::Approx((1 + std::sqrt(13.0)) / 2).epsilon(1e-12));
  CHECK(fpdim_preproj(cartan_data('D', 4, 2)) == doctest::Approx(1 + std::sqrt(3.0)).epsilon(1e-12));
  CHECK(fpdim_preproj(cartan_data('A', 3, 2)) == doctest::Approx(1 + std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("table rows") {
  const auto rows = preproj_table();
  CHECK(rows.size() == 34);
  for (const auto& row : rows) {
    INFO(row.cartan.name() << " c=" << row.cartan.multiplier);
    CHECK(row.pass);
  }
}

TEST_CASE("loops add at most one") {
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 4}, {'B', 3}, {'C', 4}, {'D', 5}, {'F', 4}, {'G', 2}}) {
    for (int c : {1, 2}) {
      const Quiver q = gabriel_quiver(cartan_data(t, r, c));
      const double with = spectral_radius(q);
      const double without = spectral_radius(loop_removed(q));
      CHECK(without <= with + 1e-9);
      CHECK(with <= without + 1 + 1e-9);
      if (c == 2) CHECK(std::abs(with - without - 1) <= 1e-9);
    }
  }
}

TEST_CASE("tau-tilting model") {
  const FiniteLattice a2 = tau_tiltp_model(cartan_data('A', 2));
  CHECK(a2.size() == 6);
  CHECK(a2.name(a2.top()) == "e");
  CHECK(tau_tiltp_model(cartan_data('B', 2)).size() == 8);
  CHECK(tau_tiltp_model(cartan_data('B', 2, 2)).size() == 8);
}
