#include <cmath>
#include <random>

#include "doctest.h"
#include "filt/error.hpp"
#include "filt/filter.hpp"
#include "filt/filtrum.hpp"
#include "filt/monoid.hpp"
#include "filt/topo.hpp"

using namespace filt;

namespace {
  ElementSet ids(TopMonoid const& t, std::initializer_list<PointSet> opens) {
    ElementSet out(t.size());
    for (auto const& u : opens) {
      out.insert(t.id_of(u));
    }
    return out;
  }

  std::vector<FiniteSpace> small_spaces() {
    std::vector<FiniteSpace> out{spaces::point(),        spaces::sierpinski(),  spaces::discrete(2),
                                 spaces::indiscrete(2),  spaces::chain(3),      spaces::discrete(3),
                                 spaces::indiscrete(3)};
    // V shape: two closed points below one open point, and its dual
    out.push_back(spaces::from_preorder({{true, true, true}, {false, true, false}, {false, false, true}}));
    out.push_back(spaces::from_preorder({{true, false, false}, {false, true, false}, {true, true, true}}));
    out.push_back(spaces::from_preorder({{true, true, false}, {true, true, false}, {false, false, true}}));
    return out;
  }

  // brute force over open families
  bool irreducible_oracle(TopMonoid const& t, ElementSet const& f) {
    std::size_t n = t.size();
    for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << n); ++fam) {
      PointSet u    = t.space().empty_set();
      bool     some = false;
      for (element_id i = 0; i < n; ++i) {
        if ((fam >> i) & 1U) {
          u |= t.open(i);
          some = some || f.contains(i);
        }
      }
      if (f.contains(t.id_of(u)) && !some) {
        return false;
      }
    }
    return true;
  }

  bool quasicompact_oracle(TopMonoid const& t, ElementSet const& f) {
    for (element_id a = 0; a < t.size(); ++a) {
      for (element_id b = 0; b < t.size(); ++b) {
        if (f.contains(t.id_of(t.open(a) | t.open(b))) && !f.contains(a) && !f.contains(b)) {
          return false;
        }
      }
    }
    return true;
  }
}  // namespace

TEST_CASE("top monoids") {
  CHECK(TopMonoid(spaces::sierpinski()).size() == 3);
  CHECK(TopMonoid(spaces::discrete(2)).size() == 4);
  CHECK(TopMonoid(spaces::indiscrete(4)).size() == 2);
  TopMonoid t(spaces::sierpinski());
  CHECK(t.open(t.empty()).empty());
  CHECK(t.open(t.whole()).is_full());
  for (element_id a = 0; a < t.size(); ++a) {
    for (element_id b = 0; b < t.size(); ++b) {
      CHECK(t.open(t.monoid().mul(a, b)) == (t.open(a) & t.open(b)));
      // divisibility is the superset relation
      CHECK(divides(t.monoid(), a, b) == t.open(b).is_subset_of(t.open(a)));
    }
  }
}

TEST_CASE("neighbourhood filters") {
  TopMonoid t(spaces::sierpinski());
  CHECK(neighborhood_filter(t, PointSet(2)).is_full());
  CHECK(neighborhood_filter(t, PointSet(2, {0})) == ids(t, {PointSet(2, {0}), PointSet::full(2)}));
  CHECK(neighborhood_filter(t, PointSet::full(2)) == ids(t, {PointSet::full(2)}));
  CHECK(point_filter(t, 1) == ids(t, {PointSet::full(2)}));
}

TEST_CASE("quasicompact and irreducible filters against brute force") {
  for (auto const& x : small_spaces()) {
    TopMonoid t(x);
    for (auto const& f : all_filters(t.monoid())) {
      CHECK(is_quasicompact_filter(t, f) == quasicompact_oracle(t, f));
      CHECK(is_irreducible_filter(t, f) == irreducible_oracle(t, f));
      PointSet conv = x.empty_set();
      for (point_id p = 0; p < x.size(); ++p) {
        if (point_filter(t, p).is_subset_of(f)) {
          conv.insert(p);
        }
      }
      CHECK(convergence_points(t, f) == conv);
    }
    for (point_id p = 0; p < x.size(); ++p) {
      CHECK(is_irreducible_filter(t, point_filter(t, p)));
    }
    CHECK(is_quasicompact_filter(t, t.monoid().full_set()));
    CHECK_FALSE(is_irreducible_filter(t, t.monoid().full_set()));
    for (auto const& u : ultrafilters(t.monoid())) {
      CHECK(is_quasicompact_filter(t, u));
    }
  }
}

TEST_CASE("convergence") {
  TopMonoid d(spaces::discrete(2));
  CHECK(convergence_points(d, ids(d, {PointSet::full(2)})).empty());
  CHECK(convergence_points(d, d.monoid().full_set()).is_full());
}

TEST_CASE("irreducible closed sets") {
  auto count = [](FiniteSpace const& x) {
    auto b = irreducible_filter_closed_set_bijection(TopMonoid(x));
    CHECK(b.ok);
    CHECK(b.closed_sets.size() == b.filters.size());
    return b.filters.size();
  };
  CHECK(count(spaces::sierpinski()) == 2);
  CHECK(count(spaces::discrete(2)) == 2);
  CHECK(count(spaces::point()) == 1);
  for (auto const& x : small_spaces()) {
    count(x);
  }
}

TEST_CASE("pushforward and pullback") {
  auto   d = spaces::discrete(2);
  TopMap collapse(ContinuousMap(d, spaces::point(), {0, 0}));
  auto   xd = ids(collapse.source(), {PointSet::full(2)});
  CHECK(pushforward_filter(collapse, xd) == point_filter(collapse.target(), 0));

  auto   s = spaces::sierpinski();
  TopMap id(identity_map(s));
  for (auto const& f : all_filters(id.source().monoid())) {
    CHECK(pushforward_filter(id, f) == f);
    CHECK(pullback_filter(id, f) == f);
  }

  // open point a of the Sierpinski space as an open subspace
  TopMap open_pt(ContinuousMap(spaces::point(), s, {0}));
  CHECK(pullback_filter(open_pt, point_filter(open_pt.target(), 0)) == point_filter(open_pt.source(), 0));

  // closed point b: pulling back and pushing forward U(a) grows it
  TopMap closed_pt(ContinuousMap(spaces::point(), s, {1}));
  auto   ua   = point_filter(closed_pt.target(), 0);
  auto   back = pushforward_filter(closed_pt, pullback_filter(closed_pt, ua));
  CHECK(ua.is_subset_of(back));
  CHECK(ua != back);

  for (auto const& x : small_spaces()) {
    for (auto const& y : small_spaces()) {
      if (x.size() > 2 || y.size() > 3) {
        continue;
      }
      // all maps: pick monotone assignments by brute force
      std::vector<point_id> map(x.size(), 0);
      for (std::size_t code = 0; code < static_cast<std::size_t>(std::pow(y.size(), x.size())); ++code) {
        std::size_t c = code;
        for (auto& v : map) {
          v = static_cast<point_id>(c % y.size());
          c /= y.size();
        }
        try {
          TopMap phi(ContinuousMap(x, y, map));
          for (auto const& f : all_filters(phi.source().monoid())) {
            CHECK(pullback_filter(phi, pushforward_filter(phi, f)).is_subset_of(f));
          }
          for (auto const& g : all_filters(phi.target().monoid())) {
            CHECK(g.is_subset_of(pushforward_filter(phi, pullback_filter(phi, g))));
          }
          CHECK(all_filters_fix(phi) == initial_topology(phi));
          CHECK(all_point_filters_fix(phi) == initial_topology(phi));
          auto cm = closed_map_criterion(phi);
          CHECK(cm.closed == cm.criterion);
          if (phi.map().is_surjective()) {
            CHECK(is_filterhaft(phi));
          }
        } catch (filt::error const& e) {
          CHECK(e.code() == errc::not_continuous);
        }
      }
    }
  }
}

TEST_CASE("fixness and initial topologies") {
  auto   s = spaces::sierpinski();
  TopMap sub(ContinuousMap(spaces::point(), s, {1}));
  CHECK(all_filters_fix(sub));
  CHECK(initial_topology(sub));
  TopMap coarse(ContinuousMap(spaces::discrete(2), spaces::indiscrete(2), {0, 1}));
  CHECK_FALSE(all_filters_fix(coarse));
  CHECK_FALSE(initial_topology(coarse));
  TopMap homeo(identity_map(spaces::chain(3)));
  CHECK(all_filters_fix(homeo));
}

TEST_CASE("closed map criterion") {
  auto s = spaces::sierpinski();
  CHECK(closed_map_criterion(TopMap(ContinuousMap(spaces::discrete(3), spaces::discrete(2), {0, 1, 1}))).criterion);
  auto open_pt = closed_map_criterion(TopMap(ContinuousMap(spaces::point(), s, {0})));
  CHECK_FALSE(open_pt.closed);
  CHECK_FALSE(open_pt.criterion);
  auto closed_pt = closed_map_criterion(TopMap(ContinuousMap(spaces::point(), s, {1})));
  CHECK(closed_pt.closed);
  CHECK(closed_pt.criterion);
}

TEST_CASE("embedding into the filtrum") {
  auto e = embed(TopMonoid(spaces::sierpinski()));
  CHECK(e.consistent.count() == 2);
  CHECK(e.continuous);
  CHECK(e.initial);
  CHECK(e.injective);
  CHECK(e.dense);

  auto d = embed(TopMonoid(spaces::discrete(2)));
  CHECK(d.consistent.count() == 3);
  CHECK(d.dense);

  auto p = embed(TopMonoid(spaces::point()));
  CHECK(p.consistent.count() == 1);

  auto i = embed(TopMonoid(spaces::indiscrete(2)));
  CHECK_FALSE(i.injective);
  CHECK(i.initial);

  for (auto const& x : small_spaces()) {
    TopMonoid t(x);
    CHECK(is_filterhaft(TopMap(embedding_into_consistent(t))));
    auto em = embed(t);
    CHECK(em.injective == x.is_t0());
  }
}

TEST_CASE("sobrification") {
  auto s = sobrify(spaces::sierpinski());
  CHECK(s.space.size() == 2);
  CHECK(s.unit.is_homeomorphism());
  CHECK(s.lattice_isomorphism);
  CHECK(sobrify(spaces::discrete(2)).unit.is_homeomorphism());
  auto i = sobrify(spaces::indiscrete(2));
  CHECK(i.space.size() == 1);
  for (auto const& x : small_spaces()) {
    auto once = sobrify(x);
    CHECK(once.lattice_isomorphism);
    CHECK(once.space.is_sober());
    auto twice = sobrify(once.space);
    CHECK(twice.unit.is_homeomorphism());
  }
}

TEST_CASE("characterization") {
  auto s = characterize_filtrum_space(spaces::sierpinski());
  CHECK(s.success);
  CHECK(s.local_opens.size() == 2);
  CHECK(s.homeomorphism);
  REQUIRE(s.monoid.has_value());
  CHECK(Filtrum(*s.monoid).size() == 2);

  auto d = characterize_filtrum_space(spaces::discrete(2));
  CHECK_FALSE(d.success);
  CHECK(d.failed_condition == 2);

  auto i = characterize_filtrum_space(spaces::indiscrete(2));
  CHECK_FALSE(i.success);
  CHECK(i.failed_condition == 1);

  for (auto const& m : {monoids::zmod_mul(6), monoids::zmod_mul(12), monoids::chain(4), monoids::powerset_meet(2)}) {
    auto c = characterize_filtrum_space(filtrum_space(Filtrum(m)));
    CHECK(c.success);
    CHECK(c.homeomorphism);
  }
}
