#include <algorithm>
#include <random>

#include "doctest.h"
#include "filt/error.hpp"
#include "filt/filter.hpp"
#include "filt/monoid.hpp"
#include "oracles.hpp"

using namespace filt;

namespace {
  oracle::Table table_of(FiniteMonoid const& m) {
    oracle::Table t(m.size(), std::vector<int>(m.size()));
    for (element_id a = 0; a < m.size(); ++a) {
      for (element_id b = 0; b < m.size(); ++b) {
        t[a][b] = static_cast<int>(m.mul(a, b));
      }
    }
    return t;
  }

  std::vector<oracle::Mask> masks(FilterFamily const& fam) {
    std::vector<oracle::Mask> out;
    for (auto const& f : fam) {
      out.push_back(f.to_mask());
    }
    return out;
  }

  std::vector<FiniteMonoid> sample_monoids() {
    std::vector<FiniteMonoid> out;
    for (std::size_t n = 1; n <= 12; ++n) {
      out.push_back(monoids::zmod_mul(n));
    }
    for (std::size_t k = 2; k <= 5; ++k) {
      out.push_back(monoids::chain(k));
      out.push_back(monoids::nilpotent(k - 1));
      out.push_back(monoids::cyclic_group(k));
    }
    out.push_back(monoids::powerset_meet(3));
    out.push_back(monoids::truncated_free(2, 2));
    out.push_back(monoids::truncated_free(1, 3));
    out.push_back(product_monoid(monoids::zmod_mul(2), monoids::zmod_mul(6)).monoid);
    out.push_back(product_monoid(monoids::chain(2), monoids::zmod_mul(4)).monoid);
    return out;
  }

  ElementSet S(std::size_t n, std::initializer_list<element_id> xs) {
    return ElementSet(n, xs);
  }
}  // namespace

TEST_CASE("filters of Z/6") {
  auto m   = monoids::zmod_mul(6);
  auto fam = all_filters(m);
  REQUIRE(fam.size() == 4);
  CHECK(fam[0] == S(6, {1, 5}));
  CHECK(fam[1] == S(6, {1, 3, 5}));
  CHECK(fam[2] == S(6, {1, 2, 4, 5}));
  CHECK(fam[3] == ElementSet::full(6));
  auto uf = ultrafilters(m);
  REQUIRE(uf.size() == 2);
  CHECK(uf[0] == S(6, {1, 3, 5}));
  CHECK(uf[1] == S(6, {1, 2, 4, 5}));
}

TEST_CASE("filters of Z/4 and the trivial monoid") {
  auto fam = all_filters(monoids::zmod_mul(4));
  REQUIRE(fam.size() == 2);
  CHECK(fam[0] == S(4, {1, 3}));
  CHECK(fam[1].is_full());
  CHECK(all_filters(monoids::trivial()).size() == 1);
}

TEST_CASE("is_filter reports the first violated axiom") {
  auto m = monoids::zmod_mul(6);
  CHECK(is_filter(m, units(m)));
  CHECK(is_filter(m, m.full_set()));
  CHECK(check_filter(m, S(6, {5})).axiom == 1);
  auto z8 = monoids::zmod_mul(8);
  // 3*3 = 1 stays, 3*5 = 7 leaves the set
  CHECK(check_filter(z8, S(8, {1, 3, 5})).axiom == 2);
  CHECK(check_filter(m, S(6, {1, 3})).axiom == 3);
  CHECK_THROWS_AS(Filter(m, S(6, {1, 3})), filt::error);
}

TEST_CASE("generate") {
  auto m = monoids::zmod_mul(6);
  CHECK(generate(m, m.empty_set()) == S(6, {1, 5}));
  CHECK(generate(m, S(6, {2})) == S(6, {1, 2, 4, 5}));
  CHECK(generate(m, S(6, {0})).is_full());
  CHECK(principal_filter(m, 3) == S(6, {1, 3, 5}));
  CHECK(join(m, S(6, {1, 3, 5}), S(6, {1, 2, 4, 5})).is_full());
}

TEST_CASE("closure enumeration matches the subset oracle") {
  for (auto const& m : sample_monoids()) {
    if (m.size() > 16) {
      continue;
    }
    auto t      = table_of(m);
    auto expect = oracle::filters(t, static_cast<int>(m.one()));
    CHECK(masks(all_filters(m)) == expect);
    CHECK(masks(all_filters(m, FilterAlgorithm::oracle)) == expect);
  }
}

TEST_CASE("ultrafilters match maximal consistent oracle filters") {
  for (auto const& m : sample_monoids()) {
    if (!m.has_zero() || m.size() < 2 || m.size() > 16) {
      continue;
    }
    auto t  = table_of(m);
    auto uf = ultrafilters(m);
    CHECK(masks(uf) == oracle::ultrafilters(t, static_cast<int>(m.one()), static_cast<int>(*m.zero())));
    for (auto const& f : uf) {
      CHECK(satisfies_ultrafilter_criterion(m, f));
    }
    for (auto const& f : all_filters(m)) {
      if (!is_consistent(m, f)) {
        continue;
      }
      CHECK(satisfies_ultrafilter_criterion(m, f) == uf.contains(f));
    }
  }
}

TEST_CASE("ultrafilter preconditions") {
  CHECK_THROWS_AS(ultrafilters(monoids::cyclic_group(3)), filt::error);
  CHECK_THROWS_AS(ultrafilters(monoids::zmod_mul(1)), filt::error);
}

TEST_CASE("generated filter is the intersection of filters above") {
  std::mt19937_64 rng(3);
  for (auto const& m : sample_monoids()) {
    auto fam = all_filters(m);
    for (int round = 0; round < 10; ++round) {
      ElementSet s(m.size());
      for (element_id x = 0; x < m.size(); ++x) {
        if (rng() % 4 == 0) {
          s.insert(x);
        }
      }
      auto meet = m.full_set();
      for (auto const& f : fam) {
        if (s.is_subset_of(f)) {
          meet &= f;
        }
      }
      CHECK(generate(m, s) == meet);
    }
    for (auto const& f : fam) {
      for (auto const& g : fam) {
        CHECK(is_filter(m, f & g));
      }
    }
  }
}

TEST_CASE("integral and reduced monoids") {
  // Z/7 is integral: the nonzerodivisors are the only ultrafilter
  auto z7 = monoids::zmod_mul(7);
  auto uf = ultrafilters(z7);
  REQUIRE(uf.size() == 1);
  CHECK(uf[0] == nonzerodivisors(z7));
  for (std::size_t n : {6U, 10U}) {
    auto m    = monoids::zmod_mul(n);
    auto meet = m.full_set();
    for (auto const& f : ultrafilters(m)) {
      meet &= f;
    }
    CHECK(meet == nonzerodivisors(m));
  }
}

TEST_CASE("maximal filters avoiding a pseudoideal") {
  auto m  = monoids::zmod_mul(12);
  auto u  = units(m);
  auto z  = S(12, {0});
  CHECK(maximal_filters_avoiding(m, u, z) == ultrafilters(m));
  auto all = maximal_filters_avoiding(m, u, m.empty_set());
  REQUIRE(all.size() == 1);
  CHECK(all[0].is_full());

  auto a   = S(12, {0, 6});  // pseudoideal: multiples of 6
  CHECK(is_pseudoideal(m, a));
  auto fam = maximal_filters_avoiding(m, u, a);
  CHECK(fam.size() > 0);
  for (auto const& f : fam) {
    CHECK_FALSE(f.intersects(a));
    CHECK(satisfies_avoidance_criterion(m, f, a));
  }

  CHECK_THROWS_AS(maximal_filters_avoiding(m, S(12, {1, 5, 7}), z), filt::error);
  CHECK_THROWS_AS(maximal_filters_avoiding(m, u, S(12, {2})), filt::error);
  CHECK_THROWS_AS(maximal_filters_avoiding(m, u, S(12, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11})), filt::error);
}

TEST_CASE("caps") {
  Limits tiny;
  tiny.closure_cap = 4;
  try {
    all_filters(monoids::zmod_mul(6), FilterAlgorithm::closure, tiny);
    FAIL("expected cap");
  } catch (filt::error const& e) {
    CHECK(e.code() == errc::cap_exceeded);
  }
}

TEST_CASE("minimal and maximal sets") {
  std::vector<ElementSet> fam{S(4, {0}), S(4, {0, 1}), S(4, {2}), S(4, {0, 1, 2})};
  CHECK(minimal_sets(fam) == std::vector<ElementSet>{S(4, {0}), S(4, {2})});
  CHECK(maximal_sets(fam) == std::vector<ElementSet>{S(4, {0, 1, 2})});
}
