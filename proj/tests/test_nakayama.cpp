#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "rep_oracle.hpp"
#include "taufp/error.hpp"
#include "taufp/nakayama.hpp"

using namespace taufp;

namespace {

NakayamaAlgebra lin(std::vector<int> k) { return NakayamaAlgebra::make(Shape::Linear, std::move(k)); }
NakayamaAlgebra cyc(std::vector<int> k) { return NakayamaAlgebra::make(Shape::Cyclic, std::move(k)); }

std::set<std::string> names(const std::vector<Uniserial>& ms) {
  std::set<std::string> out;
  for (const auto& m : ms) out.insert(module_name(m));
  return out;
}

}  // namespace

TEST_CASE("Kupisch validation") {
  CHECK_NOTHROW(lin({1, 2, 3}));
  CHECK_NOTHROW(lin({1, 2, 2, 3}));
  CHECK_NOTHROW(cyc({2, 2, 2}));
  CHECK_NOTHROW(cyc({5}));
  CHECK_THROWS_AS(cyc({1, 2, 2}), Error);
  CHECK_THROWS_AS(lin({2, 2}), Error);
  CHECK_THROWS_AS(lin({1, 3}), Error);
  CHECK_THROWS_AS(lin({1, 1}), Error);
  CHECK_THROWS_AS(cyc({2, 4}), Error);
  CHECK_THROWS_AS(cyc({}), Error);
  CHECK(cyc({2, 3}).describe() == "cyclic 2,3");
}

TEST_CASE("indecomposables") {
  CHECK(names(indecomposables(lin({1, 2}))) == std::set<std::string>{"M(1;1)", "M(2;1)", "M(1;2)"});
  CHECK(indecomposables(cyc({2, 2, 2})).size() == 6);
  CHECK(indecomposables(cyc({3, 3, 3})).size() == 9);
  const NakayamaAlgebra a = cyc({3, 3, 3});
  CHECK(a.projective(3) == Uniserial{1, 3});
  CHECK(a.top({1, 3}) == 3);
  CHECK(!a.exists({1, 4}));
  CHECK(lin({1, 2}).projective(2) == Uniserial{1, 2});
}

TEST_CASE("Auslander-Reiten translate") {
  const NakayamaAlgebra a = cyc({2, 2, 2});
  CHECK(tau(a, {2, 1}) == Uniserial{1, 1});
  CHECK(tau(a, {1, 1}) == Uniserial{3, 1});
  for (int k = 1; k <= 3; ++k) CHECK(!tau(a, a.projective(k)).has_value());
  CHECK(!tau(lin({1, 2}), {1, 1}).has_value());
  CHECK_THROWS_AS(tau(a, {1, 3}), Error);
}

TEST_CASE("Hom dimensions") {
  const NakayamaAlgebra a = cyc({3, 3, 3});
  CHECK(hom_dim(a, {1, 3}, {1, 3}) == 1);
  CHECK(hom_dim(cyc({4, 4, 4}), {1, 4}, {1, 4}) == 2);
  CHECK(hom_dim(lin({1, 2}), {1, 2}, {1, 1}) == 0);
  CHECK(hom_dim(lin({1, 2}), {1, 2}, {2, 1}) == 1);
  CHECK(hom_dim(lin({1, 2}), {1, 1}, {1, 2}) == 1);
  CHECK(hom_dim(lin({1, 2}), {2, 1}, {1, 2}) == 0);
  CHECK(hom_dim(a, a.projective(1), {1, 1}) == 1);
  CHECK(hom_dim(a, a.projective(3), {1, 1}) == 0);
  for (const auto& m : bricks(a)) CHECK(hom_dim(a, m, m) == 1);
}

TEST_CASE("Ext dimensions") {
  const NakayamaAlgebra a = lin({1, 2});
  CHECK(ext_dim(a, {2, 1}, {1, 1}) == 1);
  CHECK(ext_dim(a, {1, 1}, {2, 1}) == 0);
  const NakayamaAlgebra c = cyc({2, 2, 2});
  for (int i = 1; i <= 3; ++i) CHECK(ext_dim(c, c.simple(i), c.simple(i)) == 0);
  for (const auto& alg : {a, c, cyc({3, 2, 3}), cyc({4})}) {
    for (int k = 1; k <= alg.n(); ++k)
      for (const auto& n : indecomposables(alg)) CHECK(ext_dim(alg, alg.projective(k), n) == 0);
  }
  CHECK(ext_dim(cyc({5}), {1, 1}, {1, 1}) == 1);
}

TEST_CASE("Ext between simples is the Gabriel quiver") {
  for (auto shape : {Shape::Linear, Shape::Cyclic}) {
    for (const auto& a : corpus::algebras(shape, 3)) {
      const int n = a.n();
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          bool arrow = a.wrap(i - 1) == j;
          if (shape == Shape::Linear) arrow = i >= 2 && j == i - 1;
          CHECK(ext_dim(a, a.simple(i), a.simple(j)) == (arrow ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("closed forms match the representation oracle") {
  for (const auto& a : {lin({1, 2, 3}), lin({1, 2, 2, 3}), cyc({2, 2, 2}), cyc({3, 3, 3}), cyc({4, 4, 4}),
                        cyc({3, 2, 3, 4}), cyc({6}), cyc({5, 4})}) {
    const auto ind = indecomposables(a);
    for (const auto& m : ind) {
      for (const auto& n : ind) {
        CHECK(hom_dim(a, m, n) == oracle::hom(a, m, n));
        CHECK(ext_dim(a, m, n) == oracle::ext(a, m, n));
      }
    }
  }
}

TEST_CASE("bricks and tau-rigid modules") {
  const NakayamaAlgebra a = cyc({3, 3, 3});
  CHECK(is_brick(a, {1, 3}));
  CHECK(!is_brick(cyc({4, 4, 4}), {1, 4}));
  for (int i = 1; i <= 3; ++i) CHECK(is_brick(a, a.simple(i)));
  for (int k = 1; k <= 3; ++k) CHECK(is_tau_rigid_module(a, a.projective(k)));
  CHECK(is_tau_rigid_module(a, {1, 3}));
  CHECK(!is_tau_rigid_module(cyc({4, 4, 4}), {1, 3}));
}

TEST_CASE("tau-rigid pairs") {
  const NakayamaAlgebra a = cyc({3, 3, 3});
  CHECK(is_tau_rigid_pair(a, TauPair{{}, {1, 2, 3}}));
  CHECK(is_tau_rigid_pair(a, TauPair{{a.projective(1), a.projective(2), a.projective(3)}, {}}));
  CHECK(!is_tau_rigid_pair(a, TauPair{{{1, 1}}, {1}}));
  CHECK(is_tau_rigid_pair(a, TauPair{{{1, 1}}, {3}}));
  CHECK(is_tau_rigid_pair(a, TauPair{{{1, 1}}, {1}}) == (hom_dim(a, a.projective(1), {1, 1}) == 0));
}

TEST_CASE("tau-tilting pairs and semibricks") {
  const NakayamaAlgebra a = lin({1, 2});
  CHECK(tau_tilting_pairs(a).size() == 5);
  const auto sb = semibricks(a);
  CHECK(sb.size() == 5);
  std::set<std::set<std::string>> got;
  for (const auto& s : sb) got.insert(names(s));
  CHECK(got == std::set<std::set<std::string>>{
                   {"M(1;1)", "M(2;1)"}, {"M(1;2)"}, {"M(1;1)"}, {"M(2;1)"}, {}});
  const NakayamaAlgebra c = cyc({2, 2, 2});
  CHECK(tau_tilting_pairs(c).size() == semibricks(c).size());
  CHECK_THROWS_AS(tau_tilting_pairs(cyc({2, 2, 2, 2, 2, 2})), Error);
  try {
    semibricks(cyc({2, 2, 2, 2, 2, 2}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("the tau-tilting poset is a lattice with the expected extremes") {
  for (auto shape : {Shape::Linear, Shape::Cyclic}) {
    for (const auto& a : corpus::algebras(shape, 3)) {
      const TauTiltingPoset p = tau_tiltp_lattice(a);
      CHECK(p.pairs[p.lattice.top()].projs.empty());
      CHECK(p.pairs[p.lattice.bottom()].mods.empty());
      for (const auto& pair : p.pairs) {
        CHECK(is_tau_rigid_pair(a, pair));
        CHECK(pair.mods.size() + pair.projs.size() == static_cast<std::size_t>(a.n()));
      }
    }
  }
}

TEST_CASE("FPdim of Nakayama algebras") {
  CHECK(fpdim_nakayama(cyc({2, 2, 2})) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fpdim_nakayama(cyc({4, 4, 4})) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fpdim_nakayama(lin({1, 2, 3})) == 0.0);
  CHECK(fpdim_nakayama(lin({1, 2, 2, 3})) == 0.0);
}

TEST_CASE("Ext-quivers are unions of paths and cycles") {
  for (const auto& a : {cyc({3, 3, 3}), cyc({4, 4, 4}), cyc({5, 4, 5, 6}), lin({1, 2, 3, 3})}) {
    for (const auto& s : semibricks(a)) {
      const Quiver q = ext_quiver(a, s);
      for (std::size_t i = 0; i < q.size(); ++i) {
        int out = 0, in = 0;
        for (std::size_t j = 0; j < q.size(); ++j) {
          out += q.arrows(i, j);
          in += q.arrows(j, i);
        }
        CHECK(out <= 1);
        CHECK(in <= 1);
      }
      CHECK(spectral_radius(q) <= 1.0 + 1e-9);
    }
  }
}

TEST_CASE("Bongartz completion") {
  const NakayamaAlgebra a = cyc({3, 3, 3});
  const TauPair b = bongartz_completion(a, {1, 1});
  CHECK(b.projs.empty());
  CHECK(names(b.mods) == std::set<std::string>{"M(1;1)", module_name(a.projective(1)), module_name(a.projective(2))});
  const TauPair top = bongartz_completion(a, a.projective(2));
  CHECK(top.mods.size() == 3);
  CHECK(std::all_of(top.mods.begin(), top.mods.end(), [&](const Uniserial& m) { return a.is_projective(m); }));
  CHECK_THROWS_AS(bongartz_completion(cyc({4, 4, 4}), {1, 3}), Error);

  for (const auto& alg : corpus::algebras(Shape::Cyclic, 4)) {
    for (const auto& m : indecomposables(alg)) {
      if (!is_tau_rigid_module(alg, m)) continue;
      const TauPair p = bongartz_completion(alg, m);
      CHECK(p.mods.size() == static_cast<std::size_t>(alg.n()));
    }
  }
  for (const auto& alg : corpus::algebras(Shape::Linear, 4)) {
    for (const auto& m : indecomposables(alg)) {
      const TauPair p = bongartz_completion(alg, m);
      CHECK(std::binary_search(p.mods.begin(), p.mods.end(), m));
    }
  }
}

TEST_CASE("self-extension bound") {
  CHECK(self_ext_bound(cyc({2, 2, 2})) == 0);
  CHECK(self_ext_bound(cyc({3, 3, 3})) == 0);
  CHECK(self_ext_bound(lin({1, 2, 3})) == 0);
  CHECK(self_ext_bound(cyc({5})) == 1);
}

TEST_CASE("sandwich") {
  const SandwichReport r = sandwich(cyc({3, 3, 3}));
  CHECK(r.pass());
  CHECK(r.fpdim_lattice == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.d_b == 0);
  CHECK(r.fpdim == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("canonical forms") {
  const Quiver a = Quiver::from_matrix(3, {0, 1, 0, 0, 0, 1, 0, 0, 0});
  const Quiver b = Quiver::from_matrix(3, {0, 0, 0, 1, 0, 0, 0, 1, 0});
  CHECK(canonical_form(a) == canonical_form(b));
  CHECK(canonical_form(a) != canonical_form(Quiver::from_matrix(3, {0, 1, 1, 0, 0, 0, 0, 0, 0})));
  CHECK(canonical_form(Quiver()) == canonical_form(Quiver()));
  CHECK_THROWS_AS(canonical_form(Quiver::from_matrix(7, std::vector<int>(49, 0))), Error);
}

TEST_CASE("Ext-quivers of semibricks are the lattice quivers") {
  for (auto shape : {Shape::Linear, Shape::Cyclic}) {
    for (const auto& a : corpus::algebras(shape, 3)) {
      INFO(a.describe());
      CHECK(ext_quivers_match_lattice_quivers(a));
    }
  }
}
