#ifndef FILT_TOPO_HPP_
#define FILT_TOPO_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "filt/element_set.hpp"
#include "filt/filter.hpp"
#include "filt/filtrum.hpp"
#include "filt/limits.hpp"
#include "filt/monoid.hpp"
#include "filt/space.hpp"

namespace filt {

  // The monoid of open sets of a finite space under intersection.  Element
  // ids follow the bitmask order of the opens, so the empty set (the zero)
  // is id 0 and the whole space (the identity) is the last id.
  class TopMonoid {
   public:
    // Throws cap_exceeded when the space has too many open sets.
    explicit TopMonoid(FiniteSpace space, Limits const& limits = {});

    FiniteSpace const& space() const noexcept {
      return _space;
    }
    FiniteMonoid const& monoid() const noexcept {
      return _monoid;
    }
    std::vector<PointSet> const& opens() const noexcept {
      return _opens;
    }
    std::size_t size() const noexcept {
      return _opens.size();
    }
    PointSet const& open(element_id u) const noexcept {
      return _opens[u];
    }
    // Throws index_out_of_range if u is not open.
    element_id id_of(PointSet const& u) const;
    element_id whole() const noexcept {
      return _monoid.one();
    }
    element_id empty() const noexcept {
      return *_monoid.zero();
    }

   private:
    FiniteSpace           _space;
    std::vector<PointSet> _opens;
    FiniteMonoid          _monoid;
  };

  // Element per open, table = intersection, one = X, zero = empty set.
  FiniteMonoid top_monoid(FiniteSpace const& x, Limits const& limits = {});

  // Topological filters are ElementSets over TopMonoid ids.

  // {U open : T subset of U}.  Throws carrier_mismatch.
  ElementSet neighborhood_filter(TopMonoid const& t, PointSet const& points);
  ElementSet point_filter(TopMonoid const& t, point_id x);

  // U u V in F implies U in F or V in F.
  bool is_quasicompact_filter(TopMonoid const& t, ElementSet const& f);
  // Any union in F has a member in F; includes the empty union, so
  // irreducible filters are consistent.  Decided exactly by checking that no
  // W in F is the union of the non-members it contains.
  bool is_irreducible_filter(TopMonoid const& t, ElementSet const& f);
  // X minus the union of the opens not in F.
  PointSet convergence_points(TopMonoid const& t, ElementSet const& f);

  std::vector<ElementSet> quasicompact_filters(TopMonoid const& t, Limits const& limits = {});
  std::vector<ElementSet> irreducible_filters(TopMonoid const& t, Limits const& limits = {});
  std::vector<PointSet>   irreducible_closed_sets(FiniteSpace const& x, Limits const& limits = {});

  struct IrreducibleBijection {
    std::vector<PointSet>   closed_sets;
    std::vector<ElementSet> filters;
    // filters[to_filter[i]] = {U : U meets closed_sets[i]}.
    std::vector<std::size_t> to_filter;
    bool                     ok = false;
  };

  IrreducibleBijection irreducible_filter_closed_set_bijection(TopMonoid const& t, Limits const& limits = {});

  // A continuous map with the open-set monoids of both ends.
  class TopMap {
   public:
    explicit TopMap(ContinuousMap phi, Limits const& limits = {});

    ContinuousMap const& map() const noexcept {
      return _phi;
    }
    TopMonoid const& source() const noexcept {
      return _source;
    }
    TopMonoid const& target() const noexcept {
      return _target;
    }
    // V -> preimage of V, a hom Top(Y) -> Top(X).
    MonoidHom inverse_image() const;

   private:
    ContinuousMap _phi;
    TopMonoid     _source;
    TopMonoid     _target;
  };

  // {V : preimage(V) in F}.  Throws type_mismatch.
  ElementSet pushforward_filter(TopMap const& phi, ElementSet const& f);
  // Filter generated by the preimages of members of G.  Throws
  // type_mismatch.
  ElementSet pullback_filter(TopMap const& phi, ElementSet const& g);

  // Every filter F on X satisfies pullback(pushforward(F)) = F.
  bool all_filters_fix(TopMap const& phi, Limits const& limits = {});
  // The same for the point filters U(x) only.
  bool all_point_filters_fix(TopMap const& phi);
  bool initial_topology(TopMap const& phi);

  struct ClosedMapCheck {
    // Images of closed sets are closed.
    bool closed = false;
    // pullback(U(y)) = U(preimage(y)) for every y.
    bool criterion = false;
  };

  ClosedMapCheck closed_map_criterion(TopMap const& phi, Limits const& limits = {});

  // For every y and open W containing y there is an open V with
  // y in V subset of W such that preimage(V') subset of preimage(V) forces
  // V' subset of W.
  bool is_filterhaft(TopMap const& phi);

  struct Embedding {
    Filtrum filtrum;
    // Filtrum of Top(X) as a space.
    FiniteSpace space;
    // Indices (into filtrum points) of the consistent filters.
    PointSet consistent;
    // x -> index of U(x).
    std::vector<point_id> map;
    bool                  continuous = false;
    bool                  initial = false;
    bool                  injective = false;
    bool                  dense = false;
  };

  // x -> U(x) into the filtrum of Top(X).
  Embedding embed(TopMonoid const& t, Limits const& limits = {});

  // The embedding as a continuous map into the consistent subspace.
  ContinuousMap embedding_into_consistent(TopMonoid const& t, Limits const& limits = {});

  struct UniversalExtension {
    // psi(y) = pullback(U(y)) as indices into the filtrum of Top(X).
    std::vector<point_id> psi;
    bool                  psi_continuous = false;
    bool                  psi_embedding = false;
    // psi o phi equals x -> U(x).
    bool                  restricts_to_embedding = false;
  };

  UniversalExtension universal_extension(TopMap const& phi, Limits const& limits = {});

  struct Sobrification {
    FiniteSpace space;
    // Irreducible filters of X, in bitmask order; point i of space.
    std::vector<ElementSet> points;
    // x -> U(x).
    ContinuousMap unit;
    // U -> D(U) = {F : U in F} is a bijection Top(X) -> Top(X') preserving
    // intersections and unions.
    bool lattice_isomorphism = false;
  };

  // Throws cap_exceeded.
  Sobrification sobrify(FiniteSpace const& x, Limits const& limits = {});

  struct Characterization {
    bool success = false;
    // 1..6 on failure.
    int                      failed_condition = 0;
    std::vector<std::size_t> witness;
    std::string              message;
    // Local open sets (minimal neighbourhoods), bitmask order.
    std::vector<PointSet> local_opens;
    // On success: local_opens under intersection, and psi(x) = {D : x in D}
    // as indices into the filtrum of that monoid.
    std::optional<FiniteMonoid> monoid;
    std::vector<point_id>       psi;
    bool                        homeomorphism = false;
  };

  Characterization characterize_filtrum_space(FiniteSpace const& x, Limits const& limits = {});

}  // namespace filt

#endif  // FILT_TOPO_HPP_
