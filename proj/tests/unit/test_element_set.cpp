#include <random>

#include "doctest.h"
#include "filt/element_set.hpp"
#include "filt/error.hpp"

using filt::ElementSet;

TEST_CASE("element set basics") {
  ElementSet s(10, {1, 3, 7});
  CHECK(s.count() == 3);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(4));
  CHECK_FALSE(s.contains(99));
  CHECK(s.first() == 1);
  CHECK(s.members() == std::vector<filt::element_id>{1, 3, 7});
  s.erase(3);
  s.insert(9);
  CHECK(s.members() == std::vector<filt::element_id>{1, 7, 9});
  CHECK(s.complement().count() == 7);
  CHECK(ElementSet::full(10).is_full());
  CHECK(ElementSet(10).empty());
}

TEST_CASE("element set algebra against masks") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    std::uint64_t a = rng() & 0xFFFFF;
    std::uint64_t b = rng() & 0xFFFFF;
    auto          x = ElementSet::from_mask(20, a);
    auto          y = ElementSet::from_mask(20, b);
    CHECK((x | y).to_mask() == (a | b));
    CHECK((x & y).to_mask() == (a & b));
    CHECK((x - y).to_mask() == (a & ~b));
    CHECK(x.complement().to_mask() == (~a & 0xFFFFF));
    CHECK(x.is_subset_of(y) == ((a & ~b) == 0));
    CHECK(x.intersects(y) == ((a & b) != 0));
    CHECK(x.count() == static_cast<std::size_t>(__builtin_popcountll(a)));
  }
}

TEST_CASE("wide universes") {
  ElementSet s(150, {0, 64, 149});
  CHECK(s.count() == 3);
  CHECK(s.complement().count() == 147);
  CHECK(ElementSet::full(150).count() == 150);
  CHECK(s.to_string() == "{0,64,149}");
}

TEST_CASE("universe mismatch is rejected") {
  ElementSet a(4);
  ElementSet b(5);
  CHECK_THROWS_AS(a |= b, filt::error);
}
