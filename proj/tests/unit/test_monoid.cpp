#include "doctest.h"
#include "filt/error.hpp"
#include "filt/filter.hpp"
#include "filt/monoid.hpp"
#include "oracles.hpp"

using namespace filt;

namespace {
  std::vector<std::vector<element_id>> rows(oracle::Table const& t) {
    std::vector<std::vector<element_id>> out;
    for (auto const& r : t) {
      out.emplace_back(r.begin(), r.end());
    }
    return out;
  }

  errc code_of(auto&& fn) {
    try {
      fn();
    } catch (filt::error const& e) {
      return e.code();
    }
    FAIL("no error raised");
    return errc::property_violation;
  }
}  // namespace

TEST_CASE("zmod tables match the oracle") {
  for (int n = 1; n <= 12; ++n) {
    auto m = monoids::zmod_mul(n);
    CHECK(m.size() == static_cast<std::size_t>(n));
    auto t = oracle::zmod_mul(n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        CHECK(m.mul(a, b) == static_cast<element_id>(t[a][b]));
      }
    }
  }
}

TEST_CASE("validation errors") {
  auto t = rows(oracle::zmod_mul(4));
  CHECK_NOTHROW(validate_monoid(t, 1, 0));

  auto bad = t;
  bad[2][3] = bad[3][2] = 1;
  CHECK(code_of([&] { validate_monoid(bad, 1, 0); }) == errc::non_associative);

  auto noncomm = t;
  noncomm[2][3] = 0;
  CHECK(code_of([&] { validate_monoid(noncomm, 1, 0); }) == errc::non_commutative);

  CHECK(code_of([&] { validate_monoid(t, 2, 0); }) == errc::bad_identity);
  CHECK(code_of([&] { validate_monoid(t, 1, 2); }) == errc::bad_zero);
  CHECK(code_of([&] { validate_monoid(t, 7, 0); }) == errc::shape_error);

  auto ragged = t;
  ragged[1].pop_back();
  CHECK(code_of([&] { validate_monoid(ragged, 1, 0); }) == errc::shape_error);

  auto out_of_range = t;
  out_of_range[0][0] = 9;
  CHECK(code_of([&] { validate_monoid(out_of_range, 1, 0); }) == errc::shape_error);
}

TEST_CASE("divisibility, units and nilpotents") {
  auto z12 = monoids::zmod_mul(12);
  CHECK(divides(z12, 4, 8));
  CHECK_FALSE(divides(z12, 8, 4 * 1 + 3));
  CHECK(units(z12) == ElementSet(12, {1, 5, 7, 11}));
  CHECK(is_nilpotent(z12, 6));
  CHECK_FALSE(is_nilpotent(z12, 4));
  CHECK_FALSE(is_reduced(z12));
  CHECK(is_reduced(monoids::zmod_mul(6)));
  CHECK(nonzerodivisors(monoids::zmod_mul(6)) == ElementSet(6, {1, 5}));
  CHECK(find_annihilator(z12) == std::optional<element_id>{0});

  for (int n = 1; n <= 12; ++n) {
    auto m = monoids::zmod_mul(n);
    auto t = oracle::zmod_mul(n);
    for (int g = 0; g < n; ++g) {
      for (int f = 0; f < n; ++f) {
        CHECK(divides(m, g, f) == oracle::divides(t, g, f));
      }
    }
  }
}

TEST_CASE("named monoids validate") {
  CHECK(monoids::trivial().size() == 1);
  CHECK(monoids::cyclic_group(5).size() == 5);
  CHECK(units(monoids::cyclic_group(5)).is_full());
  CHECK(monoids::chain(4).size() == 4);
  CHECK(monoids::powerset_meet(3).size() == 8);
  CHECK(is_idempotent(monoids::powerset_meet(3)));
  CHECK(monoids::nilpotent(3).has_zero());
  CHECK(monoids::truncated_free(2, 2).size() == 9);
}

TEST_CASE("homomorphisms") {
  auto z6 = monoids::zmod_mul(6);
  auto z3 = monoids::zmod_mul(3);
  MonoidHom h(z6, z3, {0, 1, 2, 0, 1, 2});
  CHECK(h.is_surjective());
  CHECK_FALSE(h.is_injective());
  CHECK(h.preserves_zero());
  CHECK(h.preimage(ElementSet(3, {1})) == ElementSet(6, {1, 4}));
  CHECK(h.image(ElementSet(6, {2, 5})) == ElementSet(3, {2}));
  CHECK(compose(h, identity_hom(z6)).map() == h.map());

  CHECK(code_of([&] { MonoidHom(z6, z3, {0, 2, 2, 0, 1, 2}); }) == errc::not_a_homomorphism);
  CHECK(code_of([&] { MonoidHom(z6, z3, {0, 1, 2}); }) == errc::not_a_homomorphism);
}

TEST_CASE("product monoid") {
  auto z4 = monoids::zmod_mul(4);
  auto z6 = monoids::zmod_mul(6);
  auto p  = product_monoid(z4, z6);
  CHECK(p.monoid.size() == 24);
  CHECK(p.monoid.one() == ProductMonoid::pair(6, 1, 1));
  CHECK(p.monoid.zero() == std::optional<element_id>{ProductMonoid::pair(6, 0, 0)});
  CHECK(p.first.is_surjective());
  CHECK(p.second.is_surjective());
  auto x = ProductMonoid::pair(6, 2, 3);
  auto y = ProductMonoid::pair(6, 3, 5);
  CHECK(p.monoid.mul(x, y) == ProductMonoid::pair(6, 2, 3));

  Limits small;
  small.product_cap = 10;
  CHECK(code_of([&] { product_monoid(z4, z6, small); }) == errc::size_overflow);
}

TEST_CASE("fraction monoid at a filter") {
  auto z6 = monoids::zmod_mul(6);
  // localizing at the units changes nothing
  auto at_units = fraction_monoid(z6, units(z6));
  CHECK(find_isomorphism(at_units.monoid, z6).has_value());
  // at {1,3,5}: 2 becomes zero, 3 becomes a unit
  auto f  = fraction_monoid(z6, ElementSet(6, {1, 3, 5}));
  CHECK(f.monoid.size() == 2);
  CHECK(f.canonical(2) == f.canonical(0));
  CHECK(units(f.monoid).contains(f.canonical(3)));
  CHECK_THROWS_AS(fraction_monoid(z6, ElementSet(6, {1, 2})), filt::error);
}

TEST_CASE("principal quotient identifies equal principal filters") {
  auto z12 = monoids::zmod_mul(12);
  auto q   = principal_quotient(z12);
  for (element_id a = 0; a < 12; ++a) {
    for (element_id b = 0; b < 12; ++b) {
      bool same = principal_filter(z12, a) == principal_filter(z12, b);
      CHECK((q.projection(a) == q.projection(b)) == same);
    }
  }
  CHECK(q.projection.is_surjective());
}

TEST_CASE("isomorphism search") {
  auto c4 = monoids::cyclic_group(4);
  auto u5 = monoids::zmod_mul(5);
  CHECK_FALSE(find_isomorphism(c4, u5).has_value());
  CHECK(find_isomorphism(monoids::chain(3), monoids::chain(3)).has_value());
}
