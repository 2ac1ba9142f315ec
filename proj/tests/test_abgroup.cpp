#include <doctest.h>

#include <random>

#include "gradedbloc/bicharacter.hpp"
#include "gradedbloc/classify.hpp"
#include "support/oracles.hpp"

using namespace gradedbloc;

namespace {

oracle::Group raw(const AbGroup& g) { return {g.free_rank(), g.torsion()}; }

std::vector<std::vector<std::int64_t>> coords(const std::vector<Elt>& xs) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& x : xs) out.push_back(x.coords);
  return out;
}

Bicharacter bichar(const FinSubgroup& T, const std::vector<std::vector<std::pair<int, int>>>& rows) {
  std::vector<std::vector<QmodZ>> t;
  for (const auto& r : rows) {
    t.emplace_back();
    for (const auto& [n, d] : r) t.back().emplace_back(n, d);
  }
  return {T, t};
}

}  // namespace

TEST_CASE("groups parse and reduce torsion coordinates") {
  const AbGroup g = AbGroup::parse("ZxZ2xZ4");
  CHECK(g.free_rank() == 1);
  CHECK(g.torsion() == std::vector<std::int64_t>{2, 4});
  const Elt x = g.make({-3, 5, -1});
  CHECK(x.coords == std::vector<std::int64_t>{-3, 1, 3});
  CHECK(g.order(x) == 0);
  CHECK(g.order(g.make({0, 1, 2})) == 2);
  CHECK(g.order(g.make({0, 1, 1})) == 4);
  CHECK(AbGroup::parse("1").rank() == 0);
  CHECK(AbGroup::parse("1").size() == 1);
  CHECK_THROWS_AS(AbGroup::parse("Z2y"), std::invalid_argument);
  CHECK_THROWS_AS(AbGroup::parse("Z1x"), std::invalid_argument);
  CHECK_THROWS_AS(g.size(), std::domain_error);
}

TEST_CASE("with_z places the new factor first") {
  const AbGroup g = AbGroup::parse("Z2");
  const AbGroup gz = g.with_z();
  CHECK(gz.free_rank() == 1);
  const Elt x = gz.lift_z(-2, g.make({1}));
  CHECK(x.coords == std::vector<std::int64_t>{-2, 1});
  CHECK(g.drop_z(x) == g.make({1}));
}

TEST_CASE("quotient of Z2xZ4 by an element of order 2") {
  const AbGroup g = AbGroup::parse("Z2xZ4");
  const Quotient q = quotient(g, {g.make({1, 2})});
  CHECK(q.group.size() == 4);
  // the projection is a surjective homomorphism with the right kernel
  std::set<Elt> image;
  for (const auto& x : g.elements()) {
    image.insert(q.projection(x));
    for (const auto& y : g.elements()) CHECK(q.projection(g.add(x, y)) == q.group.add(q.projection(x), q.projection(y)));
  }
  CHECK(image.size() == 4);
  CHECK(q.projection(g.make({1, 2})) == q.group.identity());
  CHECK(q.projection(g.make({1, 0})) != q.group.identity());
}

TEST_CASE("subgroup element lists agree with a brute-force closure") {
  std::mt19937 rng(7);
  for (const char* name : {"Z2xZ2", "Z2xZ4", "Z3xZ3", "Z2xZ2xZ2", "Z6", "Z4xZ4"}) {
    const AbGroup g = AbGroup::parse(name);
    const auto els = g.elements();
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Elt> gens;
      const int k = static_cast<int>(rng() % 3);
      for (int i = 0; i < k; ++i) gens.push_back(els[rng() % els.size()]);
      const FinSubgroup T(g, gens);
      const auto expect = oracle::closure(raw(g), coords(gens), g.rank());
      std::set<std::vector<std::int64_t>> got;
      for (const auto& x : T.elements()) got.insert(x.coords);
      CHECK(got == expect);
      CHECK(T.elements().front() == g.identity());
      for (const auto& x : els) {
        const Elt r = T.coset_rep(x);
        CHECK(T.contains(g.sub(x, r)));
        for (const auto& t : T.elements()) CHECK_FALSE(g.add(x, t) < r);
      }
    }
  }
}

TEST_CASE("bicharacter evaluation") {
  const AbGroup z22 = AbGroup::parse("Z2xZ2");
  const FinSubgroup T(z22, {z22.generator(0), z22.generator(1)});
  const Bicharacter b = bichar(T, {{{0, 1}, {1, 2}}, {{1, 2}, {0, 1}}});
  CHECK(b(z22.generator(0), z22.generator(0)) == QmodZ(0, 1));
  CHECK(b(z22.generator(1), z22.generator(0)) == QmodZ(1, 2));

  const AbGroup z33 = AbGroup::parse("Z3xZ3");
  const FinSubgroup T3(z33, {z33.generator(0), z33.generator(1)});
  const Bicharacter b3 = bichar(T3, {{{0, 1}, {1, 3}}, {{-1, 3}, {0, 1}}});
  CHECK(b3(z33.scale(2, z33.generator(0)), z33.generator(1)) == QmodZ(2, 3));
  const FinSubgroup C3(z33, {z33.generator(0)});
  CHECK_THROWS_AS(Bicharacter::zero(C3)(z33.generator(0), z33.generator(1)), std::domain_error);
}

TEST_CASE("ill-formed generator tables are rejected") {
  const AbGroup z22 = AbGroup::parse("Z2xZ2");
  const FinSubgroup T(z22, {z22.generator(0), z22.generator(1)});
  CHECK_THROWS_AS(bichar(T, {{{0, 1}, {1, 4}}, {{3, 4}, {0, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(bichar(T, {{{1, 2}, {1, 2}}, {{1, 2}, {0, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(bichar(T, {{{0, 1}}}), std::invalid_argument);
}

TEST_CASE("radicals") {
  const AbGroup z22 = AbGroup::parse("Z2xZ2");
  const FinSubgroup T(z22, {z22.generator(0), z22.generator(1)});
  CHECK(Bicharacter::zero(T).radical() == T);
  CHECK(bichar(T, {{{0, 1}, {1, 2}}, {{1, 2}, {0, 1}}}).radical().size() == 1);

  const AbGroup z222 = AbGroup::parse("Z2xZ2xZ2");
  const FinSubgroup T3(z222, {z222.generator(0), z222.generator(1), z222.generator(2)});
  const Bicharacter b = bichar(T3, {{{0, 1}, {1, 2}, {0, 1}}, {{1, 2}, {0, 1}, {0, 1}}, {{0, 1}, {0, 1}, {0, 1}}});
  CHECK(b.radical() == FinSubgroup(z222, {z222.generator(2)}));
}

TEST_CASE("property: every bicharacter is alternating, bimultiplicative and matches the expanded table") {
  for (const char* name : {"Z2xZ2", "Z2xZ4", "Z3xZ3", "Z2xZ2xZ2", "Z4xZ4", "Z2xZ2xZ2xZ2"}) {
    const AbGroup g = AbGroup::parse(name);
    std::vector<Elt> gens;
    for (int i = 0; i < g.rank(); ++i) gens.push_back(g.generator(i));
    const FinSubgroup T(g, gens);
    for (const auto& b : all_bicharacters(T)) {
      std::vector<std::vector<oracle::Frac>> table;
      for (const auto& row : b.gen_table()) {
        table.emplace_back();
        for (const auto& v : row) table.back().push_back(oracle::Frac::make(v.num(), v.den()));
      }
      const auto expect = oracle::expand_bicharacter(raw(g), coords(gens), table, g.rank());
      for (const auto& u : T.elements()) {
        CHECK(b(u, u).is_zero());
        for (const auto& v : T.elements()) {
          const auto e = expect.at({u.coords, v.coords});
          CHECK(b(u, v) == QmodZ(e.num, e.den));
          for (const auto& w : T.elements()) CHECK(b(g.add(u, v), w) == b(u, w) + b(v, w));
        }
      }
      // non-degenerate implies a square order; the radical is a subgroup
      const FinSubgroup rad = b.radical();
      for (const auto& x : rad.elements())
        for (const auto& y : rad.elements()) CHECK(rad.contains(g.add(x, y)));
      if (b.is_nondegenerate()) {
        const auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(T.size()))));
        CHECK(r * r == T.size());
      }
    }
  }
}

TEST_CASE("symplectic bases") {
  const AbGroup z22 = AbGroup::parse("Z2xZ2");
  const FinSubgroup T(z22, {z22.generator(0), z22.generator(1)});
  const auto sb = symplectic_basis(bichar(T, {{{0, 1}, {1, 2}}, {{1, 2}, {0, 1}}}));
  REQUIRE(sb.size() == 1);
  CHECK(sb[0].ell == 2);

  const AbGroup z33 = AbGroup::parse("Z3xZ3");
  const FinSubgroup T3(z33, {z33.generator(0), z33.generator(1)});
  const auto b3 = bichar(T3, {{{0, 1}, {1, 3}}, {{2, 3}, {0, 1}}});
  const auto sb3 = symplectic_basis(b3);
  REQUIRE(sb3.size() == 1);
  CHECK(sb3[0].ell == 3);
  CHECK(b3(sb3[0].u, sb3[0].v) == QmodZ(1, 3));

  CHECK(symplectic_basis(Bicharacter::zero(FinSubgroup::trivial(z22))).empty());
  CHECK_THROWS_WITH_AS(symplectic_basis(Bicharacter::zero(T)), "degenerate bicharacter", std::invalid_argument);
}

TEST_CASE("property: symplectic bases regenerate T and reproduce beta") {
  for (const char* name : {"Z2xZ2", "Z3xZ3", "Z4xZ4", "Z2xZ2xZ2xZ2", "Z2xZ4xZ2xZ4"}) {
    const AbGroup g = AbGroup::parse(name);
    std::vector<Elt> gens;
    for (int i = 0; i < g.rank(); ++i) gens.push_back(g.generator(i));
    const FinSubgroup T(g, gens);
    int nondeg = 0;
    for (const auto& b : all_bicharacters(T)) {
      if (!b.is_nondegenerate()) continue;
      ++nondeg;
      const auto sb = symplectic_basis(b);
      std::vector<std::vector<std::int64_t>> pair_gens;
      std::int64_t prod = 1;
      for (std::size_t i = 0; i < sb.size(); ++i) {
        pair_gens.push_back(sb[i].u.coords);
        pair_gens.push_back(sb[i].v.coords);
        prod *= sb[i].ell * sb[i].ell;
        CHECK(g.order(sb[i].u) == sb[i].ell);
        CHECK(g.order(sb[i].v) == sb[i].ell);
        CHECK(b(sb[i].u, sb[i].v) == QmodZ(1, sb[i].ell));
        for (std::size_t j = 0; j < sb.size(); ++j) {
          if (i == j) continue;
          CHECK(b(sb[i].u, sb[j].u).is_zero());
          CHECK(b(sb[i].u, sb[j].v).is_zero());
          CHECK(b(sb[i].v, sb[j].v).is_zero());
        }
      }
      CHECK(prod == static_cast<std::int64_t>(T.size()));
      CHECK(oracle::closure(raw(g), pair_gens, g.rank()).size() == T.size());
    }
    CHECK(nondeg > 0);
  }
}

TEST_CASE("quadratic forms") {
  const AbGroup z2 = AbGroup::parse("Z2");
  const FinSubgroup T(z2, {z2.generator(0)});
  const Character chi = Character::canonical_for(z2, z2.generator(0));
  CHECK(chi(z2.generator(0)) == QmodZ(1, 2));
  const AbGroup one = AbGroup::parse("1");
  const QuadraticForm eta_bar(FinSubgroup::trivial(one), {QmodZ()});
  const GroupHom pi = GroupHom::trivial(z2, one);
  const QuadraticForm eta = quadratic_from_char(T, chi, eta_bar, pi);
  CHECK(eta(z2.identity()).is_zero());
  CHECK(eta(z2.generator(0)) == QmodZ(1, 2));
  CHECK(eta.polarizes_to(Bicharacter::zero(T)));
  CHECK_THROWS_AS(QuadraticForm(T, {QmodZ(), QmodZ(1, 4)}), std::invalid_argument);
}

TEST_CASE("quadratic form of a Type II context polarizes to beta") {
  const AbGroup g = AbGroup::parse("Z2xZ2xZ2");
  const FinSubgroup T(g, {g.generator(0), g.generator(1), g.generator(2)});
  const Bicharacter b = bichar(T, {{{0, 1}, {1, 2}, {0, 1}}, {{1, 2}, {0, 1}, {0, 1}}, {{0, 1}, {0, 1}, {0, 1}}});
  const TypeIIContext ctx = type2_context(g, T, b);
  CHECK(ctx.f == g.generator(2));
  CHECK(ctx.chi(ctx.f) == QmodZ(1, 2));
  CHECK(ctx.eta(g.identity()).is_zero());
  CHECK(ctx.eta(ctx.f) == QmodZ(1, 2));
  CHECK(ctx.eta.polarizes_to(b));
  CHECK(ctx.eta_bar.polarizes_to(ctx.beta_bar));
}

TEST_CASE("property: canonical characters are well defined") {
  for (const char* name : {"Z2", "Z4", "Z2xZ4", "ZxZ2", "Z6xZ2", "Z2xZ2xZ2"}) {
    const AbGroup g = AbGroup::parse(name);
    const AbGroup tors(0, g.torsion());
    for (const auto& tf : tors.elements()) {
      std::vector<std::int64_t> c(g.free_rank(), 0);
      c.insert(c.end(), tf.coords.begin(), tf.coords.end());
      const Elt f = g.make(c);
      if (g.order(f) != 2) continue;
      const Character chi = Character::canonical_for(g, f);
      CHECK(chi(f) == QmodZ(1, 2));
      for (int i = 0; i < g.rank(); ++i) {
        const Elt x = g.generator(i);
        if (i < g.free_rank()) {
          CHECK(chi(x).is_zero());
        } else {
          CHECK(g.order(x) % chi(x).order() == 0);
        }
      }
      for (const auto& y : tors.elements()) {
        std::vector<std::int64_t> yc(g.free_rank(), 0);
        yc.insert(yc.end(), y.coords.begin(), y.coords.end());
        const Elt ye = g.make(yc);
        CHECK(g.order(ye) % chi(ye).order() == 0);
        CHECK(chi(g.add(ye, f)) == chi(ye) + chi(f));
      }
    }
  }
}
