#include <random>

#include "doctest.h"
#include "filt/error.hpp"
#include "filt/space.hpp"
#include "oracles.hpp"

using namespace filt;

namespace {
  // random preorder as a reflexive-transitive closure
  std::vector<std::vector<bool>> random_preorder(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      leq[i][i] = true;
      for (std::size_t j = 0; j < n; ++j) {
        if (rng() % 4 == 0) {
          leq[i][j] = true;
        }
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (leq[i][k] && leq[k][j]) {
            leq[i][j] = true;
          }
        }
      }
    }
    return leq;
  }

  std::vector<oracle::Mask> nbhd_masks(FiniteSpace const& x) {
    std::vector<oracle::Mask> out;
    for (auto const& u : x.minimal_opens()) {
      out.push_back(u.to_mask());
    }
    return out;
  }
}  // namespace

TEST_CASE("named spaces") {
  auto s = spaces::sierpinski();
  CHECK(s.opens().size() == 3);
  CHECK(s.is_open(PointSet(2, {0})));
  CHECK_FALSE(s.is_open(PointSet(2, {1})));
  CHECK(s.is_closed(PointSet(2, {1})));
  CHECK(s.specializes(1, 0));
  CHECK_FALSE(s.specializes(0, 1));
  CHECK(s.is_t0());
  CHECK(s.is_sober());
  CHECK_FALSE(s.is_hausdorff());

  CHECK(spaces::discrete(3).opens().size() == 8);
  CHECK(spaces::discrete(3).is_hausdorff());
  CHECK(spaces::discrete(3).is_totally_disconnected());
  CHECK_FALSE(spaces::discrete(2).is_connected());
  CHECK(spaces::indiscrete(3).opens().size() == 2);
  CHECK_FALSE(spaces::indiscrete(2).is_t0());
  CHECK_FALSE(spaces::indiscrete(2).is_sober());
  CHECK(spaces::chain(4).opens().size() == 5);
  CHECK(spaces::point().size() == 1);
}

TEST_CASE("opens match the oracle on random preorders") {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 200; ++round) {
    auto x = spaces::from_preorder(random_preorder(rng, 1 + rng() % 6));
    std::vector<oracle::Mask> got;
    for (auto const& u : x.opens()) {
      got.push_back(u.to_mask());
    }
    std::sort(got.begin(), got.end());
    auto expect = oracle::opens(nbhd_masks(x));
    CHECK(got == expect);
    for (std::uint64_t u = 0; u < (std::uint64_t{1} << x.size()); ++u) {
      auto set = PointSet::from_mask(x.size(), u);
      CHECK(x.is_open(set) == std::binary_search(expect.begin(), expect.end(), u));
      CHECK(x.interior(set).is_subset_of(set));
      CHECK(set.is_subset_of(x.closure(set)));
      CHECK(x.is_closed(x.closure(set)));
    }
  }
}

TEST_CASE("construction from opens") {
  auto x = FiniteSpace::from_opens({"a", "b"}, {PointSet(2), PointSet(2, {0}), PointSet::full(2)});
  CHECK(x == spaces::sierpinski());
  try {
    FiniteSpace::from_opens({"a", "b", "c"},
                            {PointSet(3), PointSet(3, {0}), PointSet(3, {1}), PointSet::full(3)});
    FAIL("not closed under union");
  } catch (filt::error const& e) {
    CHECK(e.code() == errc::not_closed_under_ops);
  }
  auto b = FiniteSpace::from_basis({"a", "b", "c"}, {PointSet(3, {0, 1}), PointSet(3, {1}), PointSet(3, {1, 2})});
  CHECK(b.minimal_open(1) == PointSet(3, {1}));
  CHECK(b.minimal_open(0) == PointSet(3, {0, 1}));
  CHECK_THROWS_AS(FiniteSpace::from_basis({"a", "b", "c"}, {PointSet(3, {0, 1}), PointSet(3, {1, 2})}), filt::error);
}

TEST_CASE("subspaces and products") {
  auto c = spaces::chain(3);
  auto sub = c.subspace(PointSet(3, {0, 2}));
  CHECK(sub.size() == 2);
  CHECK(sub.specializes(1, 0));
  auto p = product_space(spaces::sierpinski(), spaces::sierpinski());
  CHECK(p.size() == 4);
  CHECK(p.opens().size() == 6);
  CHECK(c.is_dense(PointSet(3, {0})));
  CHECK_FALSE(c.is_dense(PointSet(3, {2})));
}

TEST_CASE("continuous maps are monotone") {
  auto s = spaces::sierpinski();
  auto d = spaces::discrete(2);
  auto i = spaces::indiscrete(2);
  CHECK_NOTHROW(ContinuousMap(d, i, {0, 1}));
  CHECK_NOTHROW(ContinuousMap(d, s, {0, 1}));
  try {
    ContinuousMap(i, d, {0, 1});
    FAIL("not continuous");
  } catch (filt::error const& e) {
    CHECK(e.code() == errc::not_continuous);
  }
  ContinuousMap id = identity_map(s);
  CHECK(id.is_homeomorphism());
  ContinuousMap closed_pt(spaces::point(), s, {1});
  ContinuousMap open_pt(spaces::point(), s, {0});
  CHECK(closed_pt.is_embedding());
  CHECK(open_pt.is_embedding());
  CHECK(closed_pt.is_closed_map());
  CHECK_FALSE(open_pt.is_closed_map());
  CHECK_FALSE(ContinuousMap(d, i, {0, 1}).carries_initial_topology());
  CHECK(compose(id, closed_pt).map() == closed_pt.map());
}

TEST_CASE("irreducible sets") {
  auto s = spaces::sierpinski();
  CHECK(s.is_irreducible_set(PointSet::full(2)));
  CHECK_FALSE(spaces::discrete(2).is_irreducible_set(PointSet::full(2)));
  CHECK_FALSE(s.is_irreducible_set(PointSet(2)));
}
