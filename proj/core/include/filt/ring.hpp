#ifndef FILT_RING_HPP_
#define FILT_RING_HPP_

#include <cstddef>
#include <memory>
#include <vector>

#include "filt/element_set.hpp"
#include "filt/limits.hpp"
#include "filt/monoid.hpp"

namespace filt {

  // A finite commutative ring with one, over dense ids.  Zero and one are
  // read off the tables.
  class FiniteRing {
   public:
    // Throws shape_error or not_a_ring naming the failed axiom.
    static FiniteRing validate(std::size_t size, std::vector<element_id> add, std::vector<element_id> mul);
    static FiniteRing validate(std::vector<std::vector<element_id>> const& add,
                               std::vector<std::vector<element_id>> const& mul);

    std::size_t size() const noexcept {
      return _data->size;
    }
    element_id zero() const noexcept {
      return _data->zero;
    }
    element_id one() const noexcept {
      return _data->one;
    }
    element_id add(element_id x, element_id y) const noexcept {
      return _data->add[x * _data->size + y];
    }
    element_id mul(element_id x, element_id y) const noexcept {
      return _data->mul[x * _data->size + y];
    }
    element_id neg(element_id x) const noexcept {
      return _data->neg[x];
    }
    element_id sub(element_id x, element_id y) const noexcept {
      return add(x, neg(y));
    }
    std::vector<element_id> const& add_table() const noexcept {
      return _data->add;
    }
    std::vector<element_id> const& mul_table() const noexcept {
      return _data->mul;
    }

    // The multiplicative monoid with zero declared.
    FiniteMonoid const& mult_monoid() const noexcept {
      return _data->monoid;
    }

    bool is_zero_ring() const noexcept {
      return size() == 1;
    }
    bool is_boolean() const noexcept;

   private:
    struct Data {
      std::size_t             size = 0;
      std::vector<element_id> add;
      std::vector<element_id> mul;
      std::vector<element_id> neg;
      element_id              zero = 0;
      element_id              one = 0;
      FiniteMonoid            monoid;
    };

    explicit FiniteRing(std::shared_ptr<Data const> data) : _data(std::move(data)) {}
    static FiniteRing assemble(std::size_t size, std::vector<element_id> add, std::vector<element_id> mul, bool check);

    friend FiniteRing product_ring(FiniteRing const&, FiniteRing const&, Limits const&);

    std::shared_ptr<Data const> _data;
  };

  // Pairing id = x1 * |R2| + x2.  Throws size_overflow.
  FiniteRing product_ring(FiniteRing const& r1, FiniteRing const& r2, Limits const& limits = {});

  bool       is_ideal(FiniteRing const& r, ElementSet const& s);
  ElementSet ideal_generated(FiniteRing const& r, ElementSet const& s);
  // Sorted in bitmask order.  Throws cap_exceeded above limits.closure_cap.
  std::vector<ElementSet> all_ideals(FiniteRing const& r, Limits const& limits = {});
  // Proper ideals whose complement is multiplicatively closed.
  std::vector<ElementSet> prime_ideals(FiniteRing const& r, Limits const& limits = {});
  std::vector<ElementSet> minimal_primes(FiniteRing const& r, Limits const& limits = {});
  // Minimal members of the primes containing a.
  std::vector<ElementSet> minimal_primes_over(FiniteRing const& r, ElementSet const& a, Limits const& limits = {});
  ElementSet              nilradical(FiniteRing const& r);
  // {1 + x : x in a}.
  ElementSet one_plus(FiniteRing const& r, ElementSet const& a);

  struct QuotientRing {
    FiniteRing ring;
    // projection[x] = coset id of x; cosets ordered by smallest member.
    std::vector<element_id> projection;
    std::vector<ElementSet> cosets;

    // The projection as a hom of multiplicative monoids.
    MonoidHom monoid_hom(FiniteRing const& source) const;
  };

  // Throws not_an_ideal.
  QuotientRing quotient_ring(FiniteRing const& r, ElementSet const& a);

  struct ComplementDecomposition {
    // Primes disjoint from the filter, in bitmask order.
    std::vector<ElementSet> primes;
    // Their union equals the complement of the filter.
    bool covers = false;
    // For every subfamily Q of all primes, the complement of the union of
    // Q is a filter.  Empty subfamily: the whole ring.
    bool converse = false;
    // First subfamily (as indices into the prime list) whose complement
    // failed, if any.
    std::vector<std::size_t> converse_witness;

    bool ok() const noexcept {
      return covers && converse;
    }
  };

  // Throws not_a_filter.
  ComplementDecomposition filter_complement_decomposition(FiniteRing const& r,
                                                          ElementSet const& f,
                                                          Limits const&     limits = {});

  struct UltrafilterDuality {
    std::vector<ElementSet> ultrafilters;
    std::vector<ElementSet> minimal_primes;
    // complement of ultrafilters[i] is minimal_primes[match[i]].
    std::vector<std::size_t> match;
    bool                     ok = false;
  };

  // Throws zero_ring.
  UltrafilterDuality minimal_prime_ultrafilter_duality(FiniteRing const& r, Limits const& limits = {});

  struct BooleanCorrespondence {
    std::vector<ElementSet> ideals;
    std::vector<ElementSet> filters;
    // filters[to_filter[i]] = {1 - e : e in ideals[i]}.
    std::vector<std::size_t> to_filter;
    std::size_t              ultrafilter_count = 0;
    bool                     bijective = false;
    // Ultrafilter iff for every e exactly one of e, 1 - e is a member.
    bool criterion = false;
    // Every filter is the intersection of the ultrafilters containing it.
    bool intersections = false;

    bool ok() const noexcept {
      return bijective && criterion && intersections;
    }
  };

  // Throws not_boolean.
  BooleanCorrespondence boolean_ideal_filter_correspondence(FiniteRing const& r, Limits const& limits = {});

  // f + x in F for all f in F, x in a.  Also recomputes fixness along the
  // quotient map R -> R/a and throws property_violation if the two
  // disagree.  Throws not_an_ideal, not_a_filter.
  bool fix_modulo_ideal(FiniteRing const& r, ElementSet const& a, ElementSet const& f);
  // F equals the pullback of the pushforward along R -> R/a.
  bool is_fix_along_quotient(FiniteRing const& r, ElementSet const& a, ElementSet const& f);

  namespace rings {
    FiniteRing zmod(std::size_t n);
    // (Z/2)^k with componentwise operations, id bits = coordinates.
    FiniteRing boolean(std::size_t k);
    // The field with four elements: 0, 1, w, w + 1 as ids 0..3.
    FiniteRing f4();
    // Z/2[x]/(x^2): 0, 1, x, 1 + x as ids 0..3.
    FiniteRing dual_numbers_z2();
  }  // namespace rings

}  // namespace filt

#endif  // FILT_RING_HPP_
