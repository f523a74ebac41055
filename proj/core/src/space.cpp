#include "filt/space.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>

#include "filt/error.hpp"

namespace filt {

  namespace {
    void check_points(std::size_t n, PointSet const& s) {
      if (s.universe() != n) {
        raise(errc::carrier_mismatch,
              "point set over " + std::to_string(s.universe()) + " points used with a space of "
                  + std::to_string(n));
      }
    }

    // Smallest member of `family` containing x, assuming the family is
    // closed under intersections.
    std::vector<PointSet> minimal_from_family(std::size_t n, std::vector<PointSet> const& family) {
      std::vector<PointSet> minimal(n, PointSet::full(n));
      for (point_id x = 0; x < n; ++x) {
        for (auto const& u : family) {
          if (u.contains(x)) {
            minimal[x] &= u;
          }
        }
      }
      return minimal;
    }

    std::vector<std::size_t> component_labels(FiniteSpace const& s) {
      std::vector<std::size_t> parent(s.size());
      std::iota(parent.begin(), parent.end(), std::size_t{0});
      auto find = [&](std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      };
      for (point_id x = 0; x < s.size(); ++x) {
        s.minimal_open(x).for_each([&](point_id y) { parent[find(x)] = find(y); });
      }
      std::vector<std::size_t> out(s.size());
      for (std::size_t x = 0; x < s.size(); ++x) {
        out[x] = find(x);
      }
      return out;
    }
  }  // namespace

  std::vector<std::string> FiniteSpace::default_names(std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(std::to_string(i));
    }
    return out;
  }

  FiniteSpace FiniteSpace::from_opens(std::vector<std::string> names, std::vector<PointSet> opens) {
    std::size_t n = names.size();
    for (auto const& u : opens) {
      if (u.universe() != n) {
        raise(errc::shape_error, "open set over " + std::to_string(u.universe()) + " points, expected "
                                     + std::to_string(n));
      }
    }
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    if (!std::binary_search(opens.begin(), opens.end(), PointSet(n))) {
      raise(errc::shape_error, "the empty set is not listed as open");
    }
    if (!std::binary_search(opens.begin(), opens.end(), PointSet::full(n))) {
      raise(errc::shape_error, "the whole space is not listed as open");
    }
    for (std::size_t i = 0; i < opens.size(); ++i) {
      for (std::size_t j = i + 1; j < opens.size(); ++j) {
        if (!std::binary_search(opens.begin(), opens.end(), opens[i] | opens[j])) {
          raise(errc::not_closed_under_ops,
                "union of " + opens[i].to_string() + " and " + opens[j].to_string() + " is not open",
                {i, j});
        }
        if (!std::binary_search(opens.begin(), opens.end(), opens[i] & opens[j])) {
          raise(errc::not_closed_under_ops,
                "intersection of " + opens[i].to_string() + " and " + opens[j].to_string() + " is not open",
                {i, j});
        }
      }
    }
    return FiniteSpace(std::move(names), minimal_from_family(n, opens));
  }

  FiniteSpace FiniteSpace::from_basis(std::vector<std::string> names, std::vector<PointSet> const& basis) {
    std::size_t n = names.size();
    for (auto const& b : basis) {
      if (b.universe() != n) {
        raise(errc::shape_error, "basis set over the wrong number of points");
      }
    }
    std::vector<PointSet> minimal(n, PointSet::full(n));
    std::vector<bool>     covered(n, false);
    for (point_id x = 0; x < n; ++x) {
      for (auto const& b : basis) {
        if (b.contains(x)) {
          minimal[x] &= b;
          covered[x] = true;
        }
      }
      if (!covered[x]) {
        raise(errc::not_closed_under_ops, "point " + std::to_string(x) + " lies in no basis set", {x});
      }
    }
    // For a basis, the intersection of the members around x must again
    // contain a member around x, which then equals minimal[x].
    for (point_id x = 0; x < n; ++x) {
      bool found = std::any_of(basis.begin(), basis.end(), [&](PointSet const& b) {
        return b.contains(x) && b.is_subset_of(minimal[x]);
      });
      if (!found) {
        raise(errc::not_closed_under_ops, "basis sets around " + std::to_string(x) + " do not refine", {x});
      }
    }
    return FiniteSpace(std::move(names), std::move(minimal));
  }

  FiniteSpace FiniteSpace::from_minimal_neighbourhoods(std::vector<std::string> names, std::vector<PointSet> minimal) {
    std::size_t n = names.size();
    if (minimal.size() != n) {
      raise(errc::shape_error, "one minimal neighbourhood per point is required");
    }
    for (point_id x = 0; x < n; ++x) {
      check_points(n, minimal[x]);
      if (!minimal[x].contains(x)) {
        raise(errc::shape_error, "neighbourhood of " + std::to_string(x) + " misses the point", {x});
      }
      bool ok = true;
      minimal[x].for_each([&](point_id y) {
        if (!minimal[y].is_subset_of(minimal[x])) {
          ok = false;
        }
      });
      if (!ok) {
        raise(errc::not_closed_under_ops, "neighbourhoods are not transitive at " + std::to_string(x), {x});
      }
    }
    return FiniteSpace(std::move(names), std::move(minimal));
  }

  bool FiniteSpace::is_open(PointSet const& u) const {
    check_points(size(), u);
    bool ok = true;
    u.for_each([&](point_id x) {
      if (ok && !_minimal[x].is_subset_of(u)) {
        ok = false;
      }
    });
    return ok;
  }

  bool FiniteSpace::is_closed(PointSet const& a) const {
    return is_open(a.complement());
  }

  PointSet FiniteSpace::closure(PointSet const& a) const {
    check_points(size(), a);
    PointSet out(size());
    for (point_id y = 0; y < size(); ++y) {
      if (_minimal[y].intersects(a)) {
        out.insert(y);
      }
    }
    return out;
  }

  PointSet FiniteSpace::interior(PointSet const& a) const {
    check_points(size(), a);
    PointSet out(size());
    for (point_id x = 0; x < size(); ++x) {
      if (_minimal[x].is_subset_of(a)) {
        out.insert(x);
      }
    }
    return out;
  }

  PointSet FiniteSpace::saturation(PointSet const& a) const {
    check_points(size(), a);
    PointSet out(size());
    a.for_each([&](point_id x) { out |= _minimal[x]; });
    return out;
  }

  std::vector<PointSet> FiniteSpace::opens(Limits const& limits) const {
    std::set<PointSet>   seen{PointSet(size())};
    std::deque<PointSet> queue{PointSet(size())};
    while (!queue.empty()) {
      PointSet u = std::move(queue.front());
      queue.pop_front();
      for (point_id x = 0; x < size(); ++x) {
        if (u.contains(x)) {
          continue;
        }
        PointSet v = u | _minimal[x];
        if (seen.insert(v).second) {
          if (seen.size() > limits.open_sets_cap) {
            raise(errc::cap_exceeded,
                  "space has more than " + std::to_string(limits.open_sets_cap) + " open sets");
          }
          queue.push_back(std::move(v));
        }
      }
    }
    return {seen.begin(), seen.end()};
  }

  std::vector<PointSet> FiniteSpace::closed_sets(Limits const& limits) const {
    std::vector<PointSet> out;
    for (auto const& u : opens(limits)) {
      out.push_back(u.complement());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool FiniteSpace::is_t0() const {
    for (point_id x = 0; x < size(); ++x) {
      for (point_id y = x + 1; y < size(); ++y) {
        if (_minimal[x] == _minimal[y]) {
          return false;
        }
      }
    }
    return true;
  }

  bool FiniteSpace::is_connected() const {
    if (size() == 0) {
      return true;
    }
    auto labels = component_labels(*this);
    return std::all_of(labels.begin(), labels.end(), [&](std::size_t l) { return l == labels[0]; });
  }

  bool FiniteSpace::is_hausdorff() const {
    for (point_id x = 0; x < size(); ++x) {
      for (point_id y = x + 1; y < size(); ++y) {
        if (_minimal[x].intersects(_minimal[y])) {
          return false;
        }
      }
    }
    return true;
  }

  bool FiniteSpace::is_totally_disconnected() const {
    auto labels = component_labels(*this);
    std::sort(labels.begin(), labels.end());
    return std::adjacent_find(labels.begin(), labels.end()) == labels.end();
  }

  bool FiniteSpace::has_clopen_basis() const {
    return std::all_of(_minimal.begin(), _minimal.end(), [this](PointSet const& u) { return is_closed(u); });
  }

  bool FiniteSpace::is_irreducible_set(PointSet const& a) const {
    check_points(size(), a);
    if (a.empty()) {
      return false;
    }
    auto members = a.members();
    for (auto x : members) {
      for (auto y : members) {
        if (!(_minimal[x] & _minimal[y]).intersects(a)) {
          return false;
        }
      }
    }
    return true;
  }

  bool FiniteSpace::is_sober() const {
    std::vector<PointSet> point_closures;
    for (point_id x = 0; x < size(); ++x) {
      point_closures.push_back(closure(PointSet(size(), {x})));
    }
    for (auto const& a : closed_sets()) {
      if (!is_irreducible_set(a)) {
        continue;
      }
      auto generic = std::count(point_closures.begin(), point_closures.end(), a);
      if (generic != 1) {
        return false;
      }
    }
    return true;
  }

  bool FiniteSpace::is_dense(PointSet const& a) const {
    return closure(a).is_full();
  }

  FiniteSpace FiniteSpace::subspace(PointSet const& keep) const {
    check_points(size(), keep);
    auto                     ids = keep.members();
    std::vector<std::size_t> index(size(), SIZE_MAX);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      index[ids[i]] = i;
    }
    std::vector<std::string> names;
    std::vector<PointSet>    minimal;
    for (auto x : ids) {
      names.push_back(_names[x]);
      PointSet n(ids.size());
      (_minimal[x] & keep).for_each([&](point_id y) { n.insert(static_cast<point_id>(index[y])); });
      minimal.push_back(std::move(n));
    }
    return FiniteSpace(std::move(names), std::move(minimal));
  }

  FiniteSpace product_space(FiniteSpace const& x, FiniteSpace const& y) {
    std::size_t              nx = x.size();
    std::size_t              ny = y.size();
    std::vector<std::string> names;
    std::vector<PointSet>    minimal;
    for (point_id a = 0; a < nx; ++a) {
      for (point_id b = 0; b < ny; ++b) {
        names.push_back("(" + x.names()[a] + "," + y.names()[b] + ")");
        PointSet n(nx * ny);
        x.minimal_open(a).for_each([&](point_id c) {
          y.minimal_open(b).for_each([&](point_id d) { n.insert(static_cast<point_id>(c * ny + d)); });
        });
        minimal.push_back(std::move(n));
      }
    }
    return FiniteSpace::from_minimal_neighbourhoods(std::move(names), std::move(minimal));
  }

  ContinuousMap::ContinuousMap(FiniteSpace source, FiniteSpace target, std::vector<point_id> map)
      : _source(std::move(source)), _target(std::move(target)), _map(std::move(map)) {
    if (_map.size() != _source.size()) {
      raise(errc::shape_error,
            "map has " + std::to_string(_map.size()) + " entries, source has " + std::to_string(_source.size())
                + " points");
    }
    for (std::size_t x = 0; x < _map.size(); ++x) {
      if (_map[x] >= _target.size()) {
        raise(errc::shape_error, "image of point " + std::to_string(x) + " is out of range", {x});
      }
    }
    for (point_id y = 0; y < _target.size(); ++y) {
      if (!_source.is_open(preimage(_target.minimal_open(y)))) {
        raise(errc::not_continuous,
              "preimage of the open set " + _target.minimal_open(y).to_string() + " is not open",
              {y});
      }
    }
  }

  PointSet ContinuousMap::image(PointSet const& a) const {
    check_points(_source.size(), a);
    PointSet out(_target.size());
    a.for_each([&](point_id x) { out.insert(_map[x]); });
    return out;
  }

  PointSet ContinuousMap::preimage(PointSet const& b) const {
    check_points(_target.size(), b);
    PointSet out(_source.size());
    for (point_id x = 0; x < _map.size(); ++x) {
      if (b.contains(_map[x])) {
        out.insert(x);
      }
    }
    return out;
  }

  bool ContinuousMap::is_injective() const noexcept {
    std::vector<bool> hit(_target.size(), false);
    for (auto y : _map) {
      if (hit[y]) {
        return false;
      }
      hit[y] = true;
    }
    return true;
  }

  bool ContinuousMap::is_surjective() const noexcept {
    std::vector<bool> hit(_target.size(), false);
    for (auto y : _map) {
      hit[y] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  bool ContinuousMap::carries_initial_topology() const {
    for (point_id x = 0; x < _source.size(); ++x) {
      if (_source.minimal_open(x) != preimage(_target.minimal_open(_map[x]))) {
        return false;
      }
    }
    return true;
  }

  bool ContinuousMap::is_embedding() const {
    return is_injective() && carries_initial_topology();
  }

  bool ContinuousMap::is_homeomorphism() const {
    return is_embedding() && is_surjective();
  }

  bool ContinuousMap::is_closed_map(Limits const& limits) const {
    for (auto const& a : _source.closed_sets(limits)) {
      if (!_target.is_closed(image(a))) {
        return false;
      }
    }
    return true;
  }

  ContinuousMap identity_map(FiniteSpace const& x) {
    std::vector<point_id> map(x.size());
    std::iota(map.begin(), map.end(), point_id{0});
    return ContinuousMap(x, x, std::move(map));
  }

  ContinuousMap compose(ContinuousMap const& second, ContinuousMap const& first) {
    if (!(first.target() == second.source())) {
      raise(errc::type_mismatch, "compose: target of first is not the source of second");
    }
    std::vector<point_id> map(first.source().size());
    for (point_id x = 0; x < map.size(); ++x) {
      map[x] = second(first(x));
    }
    return ContinuousMap(first.source(), second.target(), std::move(map));
  }

  namespace spaces {

    FiniteSpace discrete(std::size_t n) {
      std::vector<PointSet> minimal;
      for (point_id x = 0; x < n; ++x) {
        minimal.emplace_back(n, std::initializer_list<element_id>{x});
      }
      return FiniteSpace::from_minimal_neighbourhoods(FiniteSpace::default_names(n), std::move(minimal));
    }

    FiniteSpace indiscrete(std::size_t n) {
      return FiniteSpace::from_minimal_neighbourhoods(FiniteSpace::default_names(n),
                                                      std::vector<PointSet>(n, PointSet::full(n)));
    }

    FiniteSpace chain(std::size_t n) {
      std::vector<PointSet> minimal;
      for (point_id x = 0; x < n; ++x) {
        PointSet u(n);
        for (point_id y = 0; y <= x; ++y) {
          u.insert(y);
        }
        minimal.push_back(std::move(u));
      }
      return FiniteSpace::from_minimal_neighbourhoods(FiniteSpace::default_names(n), std::move(minimal));
    }

    FiniteSpace sierpinski() {
      return FiniteSpace::from_minimal_neighbourhoods({"a", "b"}, {PointSet(2, {0}), PointSet(2, {0, 1})});
    }

    FiniteSpace point() {
      return discrete(1);
    }

    FiniteSpace from_preorder(std::vector<std::vector<bool>> const& leq) {
      std::size_t           n = leq.size();
      std::vector<PointSet> minimal;
      for (point_id x = 0; x < n; ++x) {
        PointSet u(n);
        for (point_id y = 0; y < n; ++y) {
          if (leq[x][y]) {
            u.insert(y);
          }
        }
        minimal.push_back(std::move(u));
      }
      return FiniteSpace::from_minimal_neighbourhoods(FiniteSpace::default_names(n), std::move(minimal));
    }

  }  // namespace spaces

}  // namespace filt
