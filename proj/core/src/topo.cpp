#include "filt/topo.hpp"

#include <algorithm>
#include <string>

#include "filt/error.hpp"

namespace filt {

  namespace {
    void check_filter_carrier(TopMonoid const& t, ElementSet const& f) {
      if (f.universe() != t.size()) {
        raise(errc::type_mismatch,
              "filter over " + std::to_string(f.universe()) + " opens used with a space having "
                  + std::to_string(t.size()));
      }
    }

    std::string point_list(FiniteSpace const& x, PointSet const& s) {
      std::string out = "{";
      bool        first = true;
      s.for_each([&](point_id p) {
        if (!first) {
          out += ',';
        }
        out += x.names()[p];
        first = false;
      });
      return out + "}";
    }

    std::optional<ContinuousMap> try_map(FiniteSpace const& source, FiniteSpace const& target, std::vector<point_id> map) {
      try {
        return ContinuousMap(source, target, std::move(map));
      } catch (error const& e) {
        if (e.code() != errc::not_continuous) {
          throw;
        }
        return std::nullopt;
      }
    }
  }  // namespace

  TopMonoid::TopMonoid(FiniteSpace space, Limits const& limits)
      : _space(std::move(space)), _opens(_space.opens(limits)), _monoid(monoids::trivial()) {
    std::size_t             k = _opens.size();
    std::vector<element_id> table(k * k);
    for (std::size_t u = 0; u < k; ++u) {
      for (std::size_t v = u; v < k; ++v) {
        element_id w       = id_of(_opens[u] & _opens[v]);
        table[u * k + v] = w;
        table[v * k + u] = w;
      }
    }
    _monoid = detail::make_monoid_unchecked(k, std::move(table), static_cast<element_id>(k - 1), 0);
  }

  element_id TopMonoid::id_of(PointSet const& u) const {
    auto it = std::lower_bound(_opens.begin(), _opens.end(), u);
    if (it == _opens.end() || *it != u) {
      raise(errc::index_out_of_range, u.to_string() + " is not an open set");
    }
    return static_cast<element_id>(it - _opens.begin());
  }

  FiniteMonoid top_monoid(FiniteSpace const& x, Limits const& limits) {
    return TopMonoid(x, limits).monoid();
  }

  ElementSet neighborhood_filter(TopMonoid const& t, PointSet const& points) {
    if (points.universe() != t.space().size()) {
      raise(errc::carrier_mismatch, "point set is not over this space");
    }
    ElementSet out(t.size());
    for (element_id u = 0; u < t.size(); ++u) {
      if (points.is_subset_of(t.open(u))) {
        out.insert(u);
      }
    }
    return out;
  }

  ElementSet point_filter(TopMonoid const& t, point_id x) {
    return neighborhood_filter(t, PointSet(t.space().size(), {x}));
  }

  bool is_quasicompact_filter(TopMonoid const& t, ElementSet const& f) {
    check_filter_carrier(t, f);
    for (element_id u = 0; u < t.size(); ++u) {
      if (f.contains(u)) {
        continue;
      }
      for (element_id v = u; v < t.size(); ++v) {
        if (!f.contains(v) && f.contains(t.id_of(t.open(u) | t.open(v)))) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_irreducible_filter(TopMonoid const& t, ElementSet const& f) {
    check_filter_carrier(t, f);
    bool ok = true;
    f.for_each([&](element_id w) {
      if (!ok) {
        return;
      }
      PointSet covered(t.space().size());
      for (element_id u = 0; u < t.size(); ++u) {
        if (!f.contains(u) && t.open(u).is_subset_of(t.open(w))) {
          covered |= t.open(u);
        }
      }
      if (covered == t.open(w)) {
        ok = false;
      }
    });
    return ok;
  }

  PointSet convergence_points(TopMonoid const& t, ElementSet const& f) {
    check_filter_carrier(t, f);
    PointSet outside(t.space().size());
    for (element_id u = 0; u < t.size(); ++u) {
      if (!f.contains(u)) {
        outside |= t.open(u);
      }
    }
    return outside.complement();
  }

  std::vector<ElementSet> quasicompact_filters(TopMonoid const& t, Limits const& limits) {
    std::vector<ElementSet> out;
    for (auto const& f : all_filters(t.monoid(), FilterAlgorithm::closure, limits)) {
      if (is_quasicompact_filter(t, f)) {
        out.push_back(f);
      }
    }
    return out;
  }

  std::vector<ElementSet> irreducible_filters(TopMonoid const& t, Limits const& limits) {
    std::vector<ElementSet> out;
    for (auto const& f : all_filters(t.monoid(), FilterAlgorithm::closure, limits)) {
      if (is_irreducible_filter(t, f)) {
        out.push_back(f);
      }
    }
    return out;
  }

  std::vector<PointSet> irreducible_closed_sets(FiniteSpace const& x, Limits const& limits) {
    std::vector<PointSet> out;
    for (auto const& a : x.closed_sets(limits)) {
      if (x.is_irreducible_set(a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  IrreducibleBijection irreducible_filter_closed_set_bijection(TopMonoid const& t, Limits const& limits) {
    IrreducibleBijection out;
    out.closed_sets = irreducible_closed_sets(t.space(), limits);
    out.filters     = irreducible_filters(t, limits);
    out.ok          = out.closed_sets.size() == out.filters.size();
    std::vector<bool> hit(out.filters.size(), false);
    for (auto const& a : out.closed_sets) {
      ElementSet f(t.size());
      for (element_id u = 0; u < t.size(); ++u) {
        if (t.open(u).intersects(a)) {
          f.insert(u);
        }
      }
      auto it = std::find(out.filters.begin(), out.filters.end(), f);
      if (it == out.filters.end()) {
        out.ok = false;
        out.to_filter.push_back(SIZE_MAX);
        continue;
      }
      auto j = static_cast<std::size_t>(it - out.filters.begin());
      if (hit[j] || convergence_points(t, f) != a) {
        out.ok = false;
      }
      hit[j] = true;
      out.to_filter.push_back(j);
    }
    for (auto const& f : out.filters) {
      auto a = convergence_points(t, f);
      if (std::find(out.closed_sets.begin(), out.closed_sets.end(), a) == out.closed_sets.end()) {
        out.ok = false;
      }
    }
    return out;
  }

  TopMap::TopMap(ContinuousMap phi, Limits const& limits)
      : _phi(std::move(phi)), _source(_phi.source(), limits), _target(_phi.target(), limits) {}

  MonoidHom TopMap::inverse_image() const {
    std::vector<element_id> map;
    for (element_id v = 0; v < _target.size(); ++v) {
      map.push_back(_source.id_of(_phi.preimage(_target.open(v))));
    }
    return MonoidHom(_target.monoid(), _source.monoid(), std::move(map));
  }

  ElementSet pushforward_filter(TopMap const& phi, ElementSet const& f) {
    check_filter_carrier(phi.source(), f);
    auto const& ty = phi.target();
    ElementSet  out(ty.size());
    for (element_id v = 0; v < ty.size(); ++v) {
      if (f.contains(phi.source().id_of(phi.map().preimage(ty.open(v))))) {
        out.insert(v);
      }
    }
    return out;
  }

  ElementSet pullback_filter(TopMap const& phi, ElementSet const& g) {
    check_filter_carrier(phi.target(), g);
    auto const& tx = phi.source();
    ElementSet  gens(tx.size());
    g.for_each([&](element_id v) { gens.insert(tx.id_of(phi.map().preimage(phi.target().open(v)))); });
    return generate(tx.monoid(), gens);
  }

  bool all_filters_fix(TopMap const& phi, Limits const& limits) {
    for (auto const& f : all_filters(phi.source().monoid(), FilterAlgorithm::closure, limits)) {
      if (pullback_filter(phi, pushforward_filter(phi, f)) != f) {
        return false;
      }
    }
    return true;
  }

  bool all_point_filters_fix(TopMap const& phi) {
    for (point_id x = 0; x < phi.source().space().size(); ++x) {
      auto f = point_filter(phi.source(), x);
      if (pullback_filter(phi, pushforward_filter(phi, f)) != f) {
        return false;
      }
    }
    return true;
  }

  bool initial_topology(TopMap const& phi) {
    return phi.map().carries_initial_topology();
  }

  ClosedMapCheck closed_map_criterion(TopMap const& phi, Limits const& limits) {
    ClosedMapCheck out;
    out.closed    = phi.map().is_closed_map(limits);
    out.criterion = true;
    for (point_id y = 0; y < phi.target().space().size(); ++y) {
      auto lhs = pullback_filter(phi, point_filter(phi.target(), y));
      auto rhs = neighborhood_filter(phi.source(), phi.map().preimage(PointSet(phi.target().space().size(), {y})));
      if (lhs != rhs) {
        out.criterion = false;
      }
    }
    return out;
  }

  bool is_filterhaft(TopMap const& phi) {
    auto const&           ty = phi.target();
    std::vector<PointSet> pre;
    for (element_id v = 0; v < ty.size(); ++v) {
      pre.push_back(phi.map().preimage(ty.open(v)));
    }
    // hull[v]: union of every V' whose preimage lies in that of V.
    std::vector<PointSet> hull(ty.size(), PointSet(ty.space().size()));
    for (element_id v = 0; v < ty.size(); ++v) {
      for (element_id v2 = 0; v2 < ty.size(); ++v2) {
        if (pre[v2].is_subset_of(pre[v])) {
          hull[v] |= ty.open(v2);
        }
      }
    }
    for (point_id y = 0; y < ty.space().size(); ++y) {
      for (element_id w = 0; w < ty.size(); ++w) {
        if (!ty.open(w).contains(y)) {
          continue;
        }
        bool found = false;
        for (element_id v = 0; v < ty.size() && !found; ++v) {
          found = ty.open(v).contains(y) && ty.open(v).is_subset_of(ty.open(w)) && hull[v].is_subset_of(ty.open(w));
        }
        if (!found) {
          return false;
        }
      }
    }
    return true;
  }

  Embedding embed(TopMonoid const& t, Limits const& limits) {
    Filtrum     phi(t.monoid(), limits);
    FiniteSpace space = filtrum_space(phi, limits);
    Embedding   out{phi, space, phi.consistent_points(), {}};
    for (point_id x = 0; x < t.space().size(); ++x) {
      out.map.push_back(static_cast<point_id>(phi.index_of(point_filter(t, x))));
    }
    auto c         = try_map(t.space(), space, out.map);
    out.continuous = c.has_value();
    out.initial    = c && c->carries_initial_topology();
    out.injective  = c && c->is_injective();
    PointSet image(space.size());
    for (auto i : out.map) {
      image.insert(i);
    }
    out.dense = image.is_subset_of(out.consistent) && out.consistent.is_subset_of(space.closure(image));
    return out;
  }

  ContinuousMap embedding_into_consistent(TopMonoid const& t, Limits const& limits) {
    auto                     e   = embed(t, limits);
    auto                     sub = e.space.subspace(e.consistent);
    auto                     ids = e.consistent.members();
    std::vector<point_id>    map;
    for (auto i : e.map) {
      map.push_back(static_cast<point_id>(std::lower_bound(ids.begin(), ids.end(), i) - ids.begin()));
    }
    return ContinuousMap(t.space(), sub, std::move(map));
  }

  UniversalExtension universal_extension(TopMap const& phi, Limits const& limits) {
    auto const&        tx = phi.source();
    Filtrum            filt_x(tx.monoid(), limits);
    FiniteSpace        space = filtrum_space(filt_x, limits);
    UniversalExtension out;
    for (point_id y = 0; y < phi.target().space().size(); ++y) {
      out.psi.push_back(static_cast<point_id>(filt_x.index_of(pullback_filter(phi, point_filter(phi.target(), y)))));
    }
    auto c             = try_map(phi.target().space(), space, out.psi);
    out.psi_continuous = c.has_value();
    out.psi_embedding  = c && c->is_embedding();
    out.restricts_to_embedding = true;
    for (point_id x = 0; x < tx.space().size(); ++x) {
      if (out.psi[phi.map()(x)] != filt_x.index_of(point_filter(tx, x))) {
        out.restricts_to_embedding = false;
      }
    }
    return out;
  }

  Sobrification sobrify(FiniteSpace const& x, Limits const& limits) {
    TopMonoid               t(x, limits);
    auto                    points = irreducible_filters(t, limits);
    std::size_t             n      = points.size();
    std::vector<PointSet>   minimal;
    std::vector<std::string> names;
    std::vector<PointSet>   point_closures;
    for (point_id p = 0; p < x.size(); ++p) {
      point_closures.push_back(x.closure(PointSet(x.size(), {p})));
    }
    for (auto const& f : points) {
      // The smallest member of a filter of a finite lattice of opens.
      element_id w = f.first();
      f.for_each([&](element_id u) { w = t.monoid().mul(w, u); });
      PointSet nbhd(n);
      for (std::size_t j = 0; j < n; ++j) {
        if (points[j].contains(w)) {
          nbhd.insert(static_cast<point_id>(j));
        }
      }
      minimal.push_back(std::move(nbhd));
      auto a       = convergence_points(t, f);
      auto generic = std::count(point_closures.begin(), point_closures.end(), a);
      if (generic == 1) {
        auto it = std::find(point_closures.begin(), point_closures.end(), a);
        names.push_back(x.names()[static_cast<std::size_t>(it - point_closures.begin())]);
      } else {
        names.push_back(point_list(x, a));
      }
    }
    auto                  space = FiniteSpace::from_minimal_neighbourhoods(std::move(names), std::move(minimal));
    std::vector<point_id> unit;
    for (point_id p = 0; p < x.size(); ++p) {
      auto it = std::find(points.begin(), points.end(), point_filter(t, p));
      if (it == points.end()) {
        raise(errc::property_violation, "point filter of " + x.names()[p] + " is not irreducible", {p});
      }
      unit.push_back(static_cast<point_id>(it - points.begin()));
    }
    Sobrification out{space, points, ContinuousMap(x, space, std::move(unit)), false};

    std::vector<PointSet> images;
    for (element_id u = 0; u < t.size(); ++u) {
      PointSet d(n);
      for (std::size_t j = 0; j < n; ++j) {
        if (points[j].contains(u)) {
          d.insert(static_cast<point_id>(j));
        }
      }
      images.push_back(std::move(d));
    }
    auto target_opens = space.opens(limits);
    bool ok           = target_opens.size() == images.size();
    for (auto const& d : images) {
      ok = ok && std::binary_search(target_opens.begin(), target_opens.end(), d);
    }
    auto sorted = images;
    std::sort(sorted.begin(), sorted.end());
    ok = ok && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    for (element_id u = 0; u < t.size() && ok; ++u) {
      for (element_id v = 0; v < t.size() && ok; ++v) {
        ok = images[t.id_of(t.open(u) & t.open(v))] == (images[u] & images[v])
             && images[t.id_of(t.open(u) | t.open(v))] == (images[u] | images[v]);
      }
    }
    out.lattice_isomorphism = ok;
    return out;
  }

  namespace {
    // Distinct intersections of nonempty subfamilies, used when the family
    // is too large to enumerate subfamilies.
    std::vector<PointSet> intersection_closure(std::vector<PointSet> const& family) {
      std::vector<PointSet> out = family;
      bool                  grew = true;
      while (grew) {
        grew = false;
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        std::size_t size = out.size();
        for (std::size_t i = 0; i < size; ++i) {
          for (std::size_t j = i + 1; j < size; ++j) {
            auto m = out[i] & out[j];
            if (!std::binary_search(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(size), m)
                && std::find(out.begin() + static_cast<std::ptrdiff_t>(size), out.end(), m) == out.end()) {
              out.push_back(m);
              grew = true;
            }
          }
        }
      }
      return out;
    }
  }  // namespace

  Characterization characterize_filtrum_space(FiniteSpace const& x, Limits const& limits) {
    Characterization out;
    std::size_t      n = x.size();
    out.local_opens    = x.minimal_opens();
    std::sort(out.local_opens.begin(), out.local_opens.end());
    out.local_opens.erase(std::unique(out.local_opens.begin(), out.local_opens.end()), out.local_opens.end());
    auto const& d = out.local_opens;
    auto fail = [&](int condition, std::vector<std::size_t> witness, std::string message) {
      out.failed_condition = condition;
      out.witness          = std::move(witness);
      out.message          = std::move(message);
      return out;
    };
    // A point is neighbourhood-poorest in t when t lies in its minimal
    // neighbourhood.
    auto has_poorest = [&](PointSet const& s) {
      bool found = false;
      s.for_each([&](point_id p) {
        if (!found && s.is_subset_of(x.minimal_open(p))) {
          found = true;
        }
      });
      return found;
    };

    for (point_id a = 0; a < n; ++a) {
      for (point_id b = a + 1; b < n; ++b) {
        if (x.minimal_open(a) == x.minimal_open(b)) {
          return fail(1, {a, b}, "points " + x.names()[a] + " and " + x.names()[b] + " have the same neighbourhoods");
        }
      }
    }
    if (!std::binary_search(d.begin(), d.end(), x.full_set())) {
      return fail(2, {}, "the space has no neighbourhood-poorest point");
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
      for (std::size_t j = i + 1; j < d.size(); ++j) {
        if (!std::binary_search(d.begin(), d.end(), d[i] & d[j])) {
          return fail(3, {i, j}, "intersection of local opens " + d[i].to_string() + " and " + d[j].to_string() + " is not local");
        }
      }
    }
    for (auto const& u : x.opens(limits)) {
      PointSet cover(n);
      for (auto const& l : d) {
        if (l.is_subset_of(u)) {
          cover |= l;
        }
      }
      if (cover != u) {
        auto ids = u.members();
        return fail(4, {ids.begin(), ids.end()}, "open set " + u.to_string() + " is not a union of local opens");
      }
    }
    if (d.size() <= 16) {
      std::uint64_t families = std::uint64_t{1} << d.size();
      for (std::uint64_t mask = 1; mask < families; ++mask) {
        PointSet meet = x.full_set();
        for (std::size_t i = 0; i < d.size(); ++i) {
          if (((mask >> i) & 1U) != 0) {
            meet &= d[i];
          }
        }
        std::vector<std::size_t> family;
        for (std::size_t i = 0; i < d.size(); ++i) {
          if (((mask >> i) & 1U) != 0) {
            family.push_back(i);
          }
        }
        if (!has_poorest(meet)) {
          return fail(5, family, "intersection " + meet.to_string() + " has no neighbourhood-poorest point");
        }
        // Finite refinement: the index family is itself finite, so J = I.
        for (std::size_t k = 0; k < d.size(); ++k) {
          if (meet.is_subset_of(d[k])) {
            PointSet sub = x.full_set();
            for (auto i : family) {
              sub &= d[i];
            }
            if (!sub.is_subset_of(d[k])) {
              family.push_back(k);
              return fail(6, family, "no finite subfamily refines into " + d[k].to_string());
            }
          }
        }
      }
    } else {
      for (auto const& meet : intersection_closure(d)) {
        if (!has_poorest(meet)) {
          auto ids = meet.members();
          return fail(5, {ids.begin(), ids.end()}, "intersection " + meet.to_string() + " has no neighbourhood-poorest point");
        }
        for (std::size_t k = 0; k < d.size(); ++k) {
          if (meet.is_subset_of(d[k])) {
            PointSet sub = x.full_set();
            for (auto const& l : d) {
              if (meet.is_subset_of(l)) {
                sub &= l;
              }
            }
            if (!sub.is_subset_of(d[k])) {
              return fail(6, {k}, "no finite subfamily refines into " + d[k].to_string());
            }
          }
        }
      }
    }

    std::size_t             k = d.size();
    std::vector<element_id> table(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        auto m = d[i] & d[j];
        table[i * k + j] = static_cast<element_id>(std::lower_bound(d.begin(), d.end(), m) - d.begin());
      }
    }
    element_id one    = static_cast<element_id>(std::lower_bound(d.begin(), d.end(), x.full_set()) - d.begin());
    PointSet   bottom = x.full_set();
    for (auto const& l : d) {
      bottom &= l;
    }
    element_id zero = static_cast<element_id>(std::lower_bound(d.begin(), d.end(), bottom) - d.begin());
    out.monoid      = validate_monoid(k, std::move(table), one, zero);
    Filtrum     phi(*out.monoid, limits);
    FiniteSpace target = filtrum_space(phi, limits);
    for (point_id p = 0; p < n; ++p) {
      ElementSet f(k);
      for (std::size_t i = 0; i < k; ++i) {
        if (d[i].contains(p)) {
          f.insert(static_cast<element_id>(i));
        }
      }
      auto idx = phi.points().index_of(f);
      if (!idx) {
        return fail(0, {p}, "psi(" + x.names()[p] + ") is not a filter");
      }
      out.psi.push_back(static_cast<point_id>(*idx));
    }
    auto c            = try_map(x, target, out.psi);
    out.homeomorphism = c && c->is_homeomorphism();
    out.success       = out.homeomorphism;
    if (!out.success) {
      out.message = "psi is not a homeomorphism";
    }
    return out;
  }

}  // namespace filt
