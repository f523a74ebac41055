#ifndef FILT_FILTRUM_HPP_
#define FILT_FILTRUM_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "filt/element_set.hpp"
#include "filt/filter.hpp"
#include "filt/limits.hpp"
#include "filt/monoid.hpp"
#include "filt/space.hpp"

namespace filt {

  // The space of all filters of a finite monoid.  Points are indices into
  // points() (bitmask order); open sets are PointSets over those indices.
  class Filtrum {
   public:
    // Enumerates the filters with the closure algorithm.  Throws
    // cap_exceeded from the enumeration.
    explicit Filtrum(FiniteMonoid const& m, Limits const& limits = {});

    FiniteMonoid const& monoid() const noexcept {
      return _points.carrier();
    }
    FilterFamily const& points() const noexcept {
      return _points;
    }
    std::size_t size() const noexcept {
      return _points.size();
    }
    ElementSet const& operator[](std::size_t i) const noexcept {
      return _points[i];
    }

    // Throws not_a_filter if f is not a point.
    std::size_t index_of(ElementSet const& f) const;

    // points()[i] is a subset of points()[j].
    bool includes(std::size_t i, std::size_t j) const noexcept {
      return _up[i].contains(static_cast<point_id>(j));
    }
    // Points containing point i.
    PointSet const& up(std::size_t i) const noexcept {
      return _up[i];
    }
    // Index of F(f).
    std::size_t principal(element_id f) const noexcept {
      return _principal[f];
    }
    // Index of the units filter, the unique closed point.
    std::size_t units_point() const noexcept {
      return _principal[monoid().one()];
    }

    // D(f) = points containing f.  Throws index_out_of_range.
    PointSet basis_set(element_id f) const;
    // Union of D(f) over f in n.
    PointSet basis_union(ElementSet const& n) const;

    // Upward closed and every member F has some f in F with F(f) in u.
    bool is_open(PointSet const& u) const;

    PointSet upward_closure(PointSet const& u) const;
    bool     is_upward_closed(PointSet const& u) const;

    // Points not containing the zero (all points without a declared zero).
    PointSet consistent_points() const;
    // Maximal consistent points.
    PointSet ultrafilter_points() const;

   private:
    FilterFamily             _points;
    std::vector<PointSet>    _up;
    std::vector<std::size_t> _principal;
  };

  // The filtrum as a FiniteSpace; point names are the member lists.  Throws
  // cap_exceeded when there are more than limits.space_points_cap points.
  FiniteSpace filtrum_space(Filtrum const& phi, Limits const& limits = {});

  // "{0,2,4}" style name of a filter.
  std::string filter_name(ElementSet const& f);

  // Preimage of a target filter.  Throws carrier_mismatch.
  ElementSet pullback(MonoidHom const& h, ElementSet const& g);
  // Filter generated by the image.  Throws carrier_mismatch.
  ElementSet pushforward(MonoidHom const& h, ElementSet const& f);

  // The induced continuous map Filt(target) -> Filt(source).
  ContinuousMap pullback_map(MonoidHom const& h,
                             Filtrum const&   source,
                             Filtrum const&   target,
                             Limits const&    limits = {});

  struct Fixfilters {
    FilterFamily source;
    FilterFamily target;
    // pushforward of source[i] is target[forward[i]], and pullback of
    // target[forward[i]] is source[i].
    std::vector<std::size_t> forward;
  };

  // Throws cap_exceeded, and property_violation if pushforward/pullback
  // fail to be mutually inverse, order-preserving bijections.
  Fixfilters fixfilters(MonoidHom const& h, Limits const& limits = {});

  struct ProductCertificate {
    ProductMonoid product;
    // map[i] = (j1, j2): product filter i projects to filters j1 of M1 and
    // j2 of M2.
    std::vector<std::pair<std::size_t, std::size_t>> map;
    bool                                             bijective = false;
    bool                                             splits = false;
    bool                                             homeomorphism = false;

    bool ok() const noexcept {
      return bijective && splits && homeomorphism;
    }
  };

  // F -> (p1(F), p2(F)) checked against the explicit finite topologies,
  // including F = p1(F) x p2(F).  Throws cap_exceeded / size_overflow.
  ProductCertificate product_homeomorphism(FiniteMonoid const& m1, FiniteMonoid const& m2, Limits const& limits = {});

}  // namespace filt

#endif  // FILT_FILTRUM_HPP_
