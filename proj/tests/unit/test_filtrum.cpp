#include <set>

#include "doctest.h"
#include "filt/error.hpp"
#include "filt/filter.hpp"
#include "filt/filtrum.hpp"
#include "filt/monoid.hpp"
#include "filt/space.hpp"

using namespace filt;

namespace {
  std::vector<FiniteMonoid> sample() {
    return {monoids::trivial(),      monoids::zmod_mul(4),     monoids::zmod_mul(6),
            monoids::zmod_mul(8),    monoids::zmod_mul(12),    monoids::chain(4),
            monoids::nilpotent(3),   monoids::powerset_meet(2), monoids::truncated_free(2, 1),
            monoids::cyclic_group(3)};
  }

  // Unions of basis sets, by brute force over subsets of the monoid.
  std::set<std::uint64_t> basis_unions(Filtrum const& phi) {
    std::set<std::uint64_t> out;
    auto                    n = phi.monoid().size();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      std::uint64_t u = 0;
      for (element_id f = 0; f < n; ++f) {
        if ((s >> f) & 1U) {
          for (std::size_t i = 0; i < phi.size(); ++i) {
            if (phi[i].contains(f)) {
              u |= std::uint64_t{1} << i;
            }
          }
        }
      }
      out.insert(u);
    }
    return out;
  }
}  // namespace

TEST_CASE("basis sets of Z/6") {
  Filtrum phi(monoids::zmod_mul(6));
  REQUIRE(phi.size() == 4);
  auto d3 = phi.basis_set(3);
  CHECK(d3.count() == 2);
  CHECK(d3.contains(static_cast<point_id>(phi.index_of(ElementSet(6, {1, 3, 5})))));
  CHECK(d3.contains(static_cast<point_id>(phi.index_of(ElementSet::full(6)))));
  CHECK(phi.basis_set(1).is_full());
  CHECK(phi.basis_set(0).count() == 1);
  CHECK(phi.basis_set(0).contains(3));

  PointSet top(4, {3});
  CHECK(phi.is_open(top));
  PointSet bottom(4, {static_cast<point_id>(phi.units_point())});
  CHECK_FALSE(phi.is_open(bottom));
  CHECK(phi.is_open(PointSet(4)));
  CHECK(phi.is_open(PointSet::full(4)));
}

TEST_CASE("open rule agrees with unions of basis sets") {
  for (auto const& m : sample()) {
    Filtrum phi(m);
    auto    unions = basis_unions(phi);
    for (std::uint64_t u = 0; u < (std::uint64_t{1} << phi.size()); ++u) {
      CHECK(phi.is_open(PointSet::from_mask(phi.size(), u)) == (unions.count(u) == 1));
    }
  }
}

TEST_CASE("inclusion order and the units point") {
  for (auto const& m : sample()) {
    Filtrum phi(m);
    for (std::size_t i = 0; i < phi.size(); ++i) {
      CHECK(phi.includes(phi.units_point(), i));
      for (std::size_t j = 0; j < phi.size(); ++j) {
        CHECK(phi.includes(i, j) == phi[i].is_subset_of(phi[j]));
      }
    }
  }
}

TEST_CASE("filtrum spaces") {
  CHECK(filtrum_space(Filtrum(monoids::trivial())).size() == 1);

  auto z4 = filtrum_space(Filtrum(monoids::zmod_mul(4)));
  CHECK(z4.size() == 2);
  CHECK(z4.opens().size() == 3);

  Filtrum phi(monoids::zmod_mul(6));
  auto    x = filtrum_space(phi);
  CHECK(x.size() == 4);
  CHECK(x.is_t0());
  for (point_id p = 0; p < x.size(); ++p) {
    bool closed = x.is_closed(PointSet(4, {p}));
    CHECK(closed == (p == phi.units_point()));
  }
  CHECK(x.is_connected());
}

TEST_CASE("pullback and pushforward along Z/6 -> Z/3") {
  auto      z6 = monoids::zmod_mul(6);
  auto      z3 = monoids::zmod_mul(3);
  MonoidHom h(z6, z3, {0, 1, 2, 0, 1, 2});
  CHECK(pullback(h, ElementSet(3, {1, 2})) == ElementSet(6, {1, 2, 4, 5}));
  CHECK(pullback(h, units(z3)).is_subset_of(z6.full_set()));
  CHECK(units(z6).is_subset_of(pullback(h, units(z3))));
  CHECK(pushforward(h, ElementSet(6, {1, 3, 5})).is_full());
  CHECK(pushforward(h, units(z6)) == units(z3));

  auto fx = fixfilters(h);
  // surjective: every target filter is fix
  CHECK(fx.target.size() == all_filters(z3).size());
  CHECK(fx.source.size() == fx.target.size());
  CHECK_THROWS_AS(pullback(h, ElementSet(6, {1})), filt::error);
}

TEST_CASE("units inclusion") {
  auto      z6 = monoids::zmod_mul(6);
  auto      c2 = monoids::cyclic_group(2);
  MonoidHom h(c2, z6, {1, 5});
  CHECK(pushforward(h, ElementSet(2, {0})) == units(z6));
}

TEST_CASE("round trips are monotone") {
  auto z12 = monoids::zmod_mul(12);
  auto z4  = monoids::zmod_mul(4);
  std::vector<element_id> map(12);
  for (element_id x = 0; x < 12; ++x) {
    map[x] = x % 4;
  }
  MonoidHom h(z12, z4, map);
  for (auto const& f : all_filters(z12)) {
    CHECK(f.is_subset_of(pullback(h, pushforward(h, f))));
  }
  for (auto const& g : all_filters(z4)) {
    CHECK(pushforward(h, pullback(h, g)).is_subset_of(g));
  }
}

TEST_CASE("fixfilters of a localization are the filters above") {
  auto z12 = monoids::zmod_mul(12);
  auto f   = ElementSet(12, {1, 3, 5, 7, 9, 11});
  REQUIRE(is_filter(z12, f));
  auto frac = fraction_monoid(z12, f);
  auto fx   = fixfilters(frac.canonical);
  std::vector<ElementSet> above;
  for (auto const& g : all_filters(z12)) {
    if (f.is_subset_of(g)) {
      above.push_back(g);
    }
  }
  CHECK(fx.source.filters() == above);
}

TEST_CASE("product homeomorphism counts") {
  auto a = product_homeomorphism(monoids::zmod_mul(2), monoids::zmod_mul(2));
  CHECK(a.ok());
  CHECK(a.map.size() == 4);
  auto b = product_homeomorphism(monoids::zmod_mul(4), monoids::zmod_mul(6));
  CHECK(b.ok());
  CHECK(b.map.size() == 8);
  auto c = product_homeomorphism(monoids::trivial(), monoids::zmod_mul(6));
  CHECK(c.ok());
  CHECK(c.map.size() == 4);
}

TEST_CASE("principal quotient has a homeomorphic filtrum") {
  auto m = monoids::zmod_mul(12);
  auto q = principal_quotient(m);
  CHECK(Filtrum(m).size() == Filtrum(q.monoid).size());
  auto pb = pullback_map(q.projection, Filtrum(m), Filtrum(q.monoid));
  CHECK(pb.is_homeomorphism());
}

TEST_CASE("filter names") {
  CHECK(filter_name(ElementSet(6, {1, 5})) == "{1,5}");
}
