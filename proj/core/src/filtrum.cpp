#include "filt/filtrum.hpp"

#include <algorithm>
#include <string>

#include "filt/error.hpp"

namespace filt {

  Filtrum::Filtrum(FiniteMonoid const& m, Limits const& limits)
      : _points(all_filters(m, FilterAlgorithm::closure, limits)) {
    std::size_t n = _points.size();
    _up.assign(n, PointSet(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (_points[i].is_subset_of(_points[j])) {
          _up[i].insert(static_cast<point_id>(j));
        }
      }
    }
    _principal.resize(m.size());
    for (element_id f = 0; f < m.size(); ++f) {
      _principal[f] = index_of(principal_filter(m, f));
    }
  }

  std::size_t Filtrum::index_of(ElementSet const& f) const {
    auto i = _points.index_of(f);
    if (!i) {
      raise(errc::not_a_filter, f.to_string() + " is not a point of the filtrum");
    }
    return *i;
  }

  PointSet Filtrum::basis_set(element_id f) const {
    if (f >= monoid().size()) {
      raise(errc::index_out_of_range, "element " + std::to_string(f) + " out of range", {f});
    }
    PointSet out(size());
    for (std::size_t i = 0; i < size(); ++i) {
      if (_points[i].contains(f)) {
        out.insert(static_cast<point_id>(i));
      }
    }
    return out;
  }

  PointSet Filtrum::basis_union(ElementSet const& n) const {
    PointSet out(size());
    n.for_each([&](element_id f) { out |= basis_set(f); });
    return out;
  }

  bool Filtrum::is_upward_closed(PointSet const& u) const {
    bool ok = true;
    u.for_each([&](point_id i) {
      if (ok && !_up[i].is_subset_of(u)) {
        ok = false;
      }
    });
    return ok;
  }

  PointSet Filtrum::upward_closure(PointSet const& u) const {
    PointSet out(size());
    u.for_each([&](point_id i) { out |= _up[i]; });
    return out;
  }

  bool Filtrum::is_open(PointSet const& u) const {
    if (u.universe() != size()) {
      raise(errc::carrier_mismatch, "point set is not over this filtrum");
    }
    if (!is_upward_closed(u)) {
      return false;
    }
    bool ok = true;
    u.for_each([&](point_id i) {
      if (!ok) {
        return;
      }
      bool found = false;
      _points[i].for_each([&](element_id f) {
        if (!found && u.contains(static_cast<point_id>(_principal[f]))) {
          found = true;
        }
      });
      ok = found;
    });
    return ok;
  }

  PointSet Filtrum::consistent_points() const {
    PointSet out(size());
    for (std::size_t i = 0; i < size(); ++i) {
      if (is_consistent(monoid(), _points[i])) {
        out.insert(static_cast<point_id>(i));
      }
    }
    return out;
  }

  PointSet Filtrum::ultrafilter_points() const {
    PointSet consistent = consistent_points();
    PointSet out(size());
    consistent.for_each([&](point_id i) {
      if ((_up[i] & consistent) == PointSet(size(), {i})) {
        out.insert(i);
      }
    });
    return out;
  }

  std::string filter_name(ElementSet const& f) {
    return f.to_string();
  }

  FiniteSpace filtrum_space(Filtrum const& phi, Limits const& limits) {
    if (phi.size() > limits.space_points_cap) {
      raise(errc::cap_exceeded,
            "filtrum has " + std::to_string(phi.size()) + " points, cap is "
                + std::to_string(limits.space_points_cap));
    }
    std::vector<std::string> names;
    std::vector<PointSet>    minimal;
    for (std::size_t i = 0; i < phi.size(); ++i) {
      names.push_back(filter_name(phi[i]));
      // Every filter of a finite monoid is principal, so up(F) = D(f) for
      // the product f of its members.
      minimal.push_back(phi.up(i));
    }
    return FiniteSpace::from_minimal_neighbourhoods(std::move(names), std::move(minimal));
  }

  ElementSet pullback(MonoidHom const& h, ElementSet const& g) {
    if (g.universe() != h.target().size()) {
      raise(errc::carrier_mismatch, "pullback: filter is not over the target monoid");
    }
    return h.preimage(g);
  }

  ElementSet pushforward(MonoidHom const& h, ElementSet const& f) {
    if (f.universe() != h.source().size()) {
      raise(errc::carrier_mismatch, "pushforward: filter is not over the source monoid");
    }
    return generate(h.target(), h.image(f));
  }

  ContinuousMap pullback_map(MonoidHom const& h, Filtrum const& source, Filtrum const& target, Limits const& limits) {
    if (!(source.monoid() == h.source()) || !(target.monoid() == h.target())) {
      raise(errc::carrier_mismatch, "pullback_map: filtra do not match the homomorphism");
    }
    std::vector<point_id> map;
    for (std::size_t j = 0; j < target.size(); ++j) {
      map.push_back(static_cast<point_id>(source.index_of(pullback(h, target[j]))));
    }
    return ContinuousMap(filtrum_space(target, limits), filtrum_space(source, limits), std::move(map));
  }

  Fixfilters fixfilters(MonoidHom const& h, Limits const& limits) {
    auto                    src = all_filters(h.source(), FilterAlgorithm::closure, limits);
    auto                    tgt = all_filters(h.target(), FilterAlgorithm::closure, limits);
    std::vector<ElementSet> src_fix;
    std::vector<ElementSet> tgt_fix;
    for (auto const& f : src) {
      if (pullback(h, pushforward(h, f)) == f) {
        src_fix.push_back(f);
      }
    }
    for (auto const& g : tgt) {
      if (pushforward(h, pullback(h, g)) == g) {
        tgt_fix.push_back(g);
      }
    }
    Fixfilters out{FilterFamily(h.source(), std::move(src_fix)), FilterFamily(h.target(), std::move(tgt_fix)), {}};
    if (out.source.size() != out.target.size()) {
      raise(errc::property_violation,
            "fixfilter families have sizes " + std::to_string(out.source.size()) + " and "
                + std::to_string(out.target.size()));
    }
    for (std::size_t i = 0; i < out.source.size(); ++i) {
      auto g = pushforward(h, out.source[i]);
      auto j = out.target.index_of(g);
      if (!j || pullback(h, out.target[*j]) != out.source[i]) {
        raise(errc::property_violation, "pushforward of fixfilter " + out.source[i].to_string() + " is not fix");
      }
      out.forward.push_back(*j);
    }
    for (std::size_t a = 0; a < out.source.size(); ++a) {
      for (std::size_t b = 0; b < out.source.size(); ++b) {
        bool lhs = out.source[a].is_subset_of(out.source[b]);
        bool rhs = out.target[out.forward[a]].is_subset_of(out.target[out.forward[b]]);
        if (lhs != rhs) {
          raise(errc::property_violation, "fixfilter bijection does not preserve inclusion", {a, b});
        }
      }
    }
    return out;
  }

  ProductCertificate product_homeomorphism(FiniteMonoid const& m1, FiniteMonoid const& m2, Limits const& limits) {
    ProductCertificate cert{product_monoid(m1, m2, limits), {}, false, false, false};
    auto const&        pm = cert.product;
    Filtrum            phi(pm.monoid, limits);
    Filtrum            phi1(m1, limits);
    Filtrum            phi2(m2, limits);
    std::size_t        n2 = m2.size();

    std::vector<bool> hit(phi1.size() * phi2.size(), false);
    cert.bijective = phi.size() == phi1.size() * phi2.size();
    cert.splits    = true;
    for (std::size_t i = 0; i < phi.size(); ++i) {
      auto f1 = pushforward(pm.first, phi[i]);
      auto f2 = pushforward(pm.second, phi[i]);
      auto j1 = phi1.index_of(f1);
      auto j2 = phi2.index_of(f2);
      cert.map.emplace_back(j1, j2);
      std::size_t k = j1 * phi2.size() + j2;
      if (hit[k]) {
        cert.bijective = false;
      }
      hit[k] = true;
      ElementSet rebuilt(pm.monoid.size());
      f1.for_each([&](element_id a) {
        f2.for_each([&](element_id b) { rebuilt.insert(ProductMonoid::pair(n2, a, b)); });
      });
      if (rebuilt != phi[i]) {
        cert.splits = false;
      }
    }
    if (!cert.bijective) {
      return cert;
    }
    auto                  target = product_space(filtrum_space(phi1, limits), filtrum_space(phi2, limits));
    std::vector<point_id> map;
    for (auto [j1, j2] : cert.map) {
      map.push_back(static_cast<point_id>(j1 * phi2.size() + j2));
    }
    try {
      ContinuousMap c(filtrum_space(phi, limits), target, std::move(map));
      cert.homeomorphism = c.is_homeomorphism();
    } catch (error const& e) {
      if (e.code() != errc::not_continuous) {
        throw;
      }
      cert.homeomorphism = false;
    }
    return cert;
  }

}  // namespace filt
