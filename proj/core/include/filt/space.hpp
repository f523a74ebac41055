#ifndef FILT_SPACE_HPP_
#define FILT_SPACE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "filt/element_set.hpp"
#include "filt/limits.hpp"

namespace filt {

  using point_id = element_id;

  // A finite topological space.  Internally the topology is held as the
  // minimal open neighbourhood N(x) of every point, which determines it; the
  // full list of open sets is materialised on request.
  class FiniteSpace {
   public:
    // Throws shape_error for out-of-range indices or a missing empty/full
    // set, and not_closed_under_ops (witness: the two open indices in the
    // sorted family) when a union or intersection is missing.
    static FiniteSpace from_opens(std::vector<std::string> names, std::vector<PointSet> opens);

    // The topology generated by `basis` as a subbasis-free basis: every
    // point must lie in some member and intersections must be unions of
    // members.  Throws not_closed_under_ops otherwise.
    static FiniteSpace from_basis(std::vector<std::string> names, std::vector<PointSet> const& basis);

    // The topology whose minimal neighbourhoods are `minimal`.  Requires
    // x in minimal[x] and y in minimal[x] => minimal[y] subset of minimal[x].
    static FiniteSpace from_minimal_neighbourhoods(std::vector<std::string> names, std::vector<PointSet> minimal);

    // Points 0..n-1 named "0", "1", ...
    static std::vector<std::string> default_names(std::size_t n);

    std::size_t size() const noexcept {
      return _names.size();
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    PointSet const& minimal_open(point_id x) const noexcept {
      return _minimal[x];
    }
    std::vector<PointSet> const& minimal_opens() const noexcept {
      return _minimal;
    }

    PointSet empty_set() const {
      return PointSet(size());
    }
    PointSet full_set() const {
      return PointSet::full(size());
    }

    bool is_open(PointSet const& u) const;
    bool is_closed(PointSet const& a) const;
    PointSet closure(PointSet const& a) const;
    PointSet interior(PointSet const& a) const;
    // Smallest open set containing a.
    PointSet saturation(PointSet const& a) const;

    // All open sets, sorted in bitmask order.  Throws cap_exceeded when
    // there are more than limits.open_sets_cap of them.
    std::vector<PointSet> opens(Limits const& limits = {}) const;
    std::vector<PointSet> closed_sets(Limits const& limits = {}) const;

    // x <= y iff every open neighbourhood of x contains y.
    bool specializes(point_id x, point_id y) const noexcept {
      return _minimal[x].contains(y);
    }

    bool is_t0() const;
    bool is_connected() const;
    // Always true on a finite carrier; kept for symmetry with the checks.
    bool is_quasicompact() const noexcept {
      return true;
    }
    bool is_hausdorff() const;
    bool is_totally_disconnected() const;
    // Every minimal neighbourhood is closed, so the clopen sets form a basis.
    bool has_clopen_basis() const;
    bool is_irreducible_set(PointSet const& a) const;
    // Every irreducible closed set is the closure of exactly one point.
    bool is_sober() const;
    bool is_dense(PointSet const& a) const;

    // Points of `keep` in increasing id order.
    FiniteSpace subspace(PointSet const& keep) const;

    friend bool operator==(FiniteSpace const& lhs, FiniteSpace const& rhs) noexcept {
      return lhs._names == rhs._names && lhs._minimal == rhs._minimal;
    }

   private:
    FiniteSpace(std::vector<std::string> names, std::vector<PointSet> minimal)
        : _names(std::move(names)), _minimal(std::move(minimal)) {}

    std::vector<std::string> _names;
    std::vector<PointSet>    _minimal;
  };

  // Pairing id = x * |Y| + y.
  FiniteSpace product_space(FiniteSpace const& x, FiniteSpace const& y);

  class ContinuousMap {
   public:
    // Throws not_continuous (witness: target point whose minimal
    // neighbourhood has a non-open preimage) or shape_error.
    ContinuousMap(FiniteSpace source, FiniteSpace target, std::vector<point_id> map);

    FiniteSpace const& source() const noexcept {
      return _source;
    }
    FiniteSpace const& target() const noexcept {
      return _target;
    }
    std::vector<point_id> const& map() const noexcept {
      return _map;
    }
    point_id operator()(point_id x) const noexcept {
      return _map[x];
    }

    PointSet image(PointSet const& a) const;
    PointSet preimage(PointSet const& b) const;

    bool is_injective() const noexcept;
    bool is_surjective() const noexcept;
    bool is_homeomorphism() const;
    // Injective and the source carries the initial topology.
    bool is_embedding() const;
    bool carries_initial_topology() const;
    // Images of closed sets are closed.
    bool is_closed_map(Limits const& limits = {}) const;

   private:
    FiniteSpace           _source;
    FiniteSpace           _target;
    std::vector<point_id> _map;
  };

  ContinuousMap identity_map(FiniteSpace const& x);
  // second o first
  ContinuousMap compose(ContinuousMap const& second, ContinuousMap const& first);

  namespace spaces {
    FiniteSpace discrete(std::size_t n);
    FiniteSpace indiscrete(std::size_t n);
    // Opens {}, {0}, {0,1}, ..., X: point 0 is open, point n-1 is closed.
    FiniteSpace chain(std::size_t n);
    // Points a (open) and b (closed).
    FiniteSpace sierpinski();
    FiniteSpace point();
    // Alexandrov topology of a preorder given as leq[x][y] (x <= y); opens
    // are up-sets.
    FiniteSpace from_preorder(std::vector<std::vector<bool>> const& leq);
  }  // namespace spaces

}  // namespace filt

#endif  // FILT_SPACE_HPP_
