#ifndef FILT_FILTER_HPP_
#define FILT_FILTER_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "filt/element_set.hpp"
#include "filt/limits.hpp"
#include "filt/monoid.hpp"

namespace filt {

  // Result of checking the three filter axioms.  `axiom` is 1 (identity),
  // 2 (products) or 3 (divisors) for the first one that fails, 0 if S is a
  // filter.
  struct FilterCheck {
    int                     axiom = 0;
    std::vector<element_id> witness;
    std::string             message;

    explicit operator bool() const noexcept {
      return axiom == 0;
    }
  };

  FilterCheck check_filter(FiniteMonoid const& m, ElementSet const& s);
  bool        is_filter(FiniteMonoid const& m, ElementSet const& s);

  // A subset of a monoid known to satisfy the filter axioms.
  class Filter {
   public:
    // Throws not_a_filter with the failing axiom in the message.
    Filter(FiniteMonoid carrier, ElementSet members);

    FiniteMonoid const& carrier() const noexcept {
      return _carrier;
    }
    ElementSet const& members() const noexcept {
      return _members;
    }
    bool contains(element_id x) const noexcept {
      return _members.contains(x);
    }

    friend bool operator==(Filter const& lhs, Filter const& rhs) noexcept {
      return lhs._members == rhs._members && lhs._carrier == rhs._carrier;
    }

   private:
    FiniteMonoid _carrier;
    ElementSet   _members;
  };

  // Filters of one monoid, sorted ascending in bitmask order, no duplicates.
  class FilterFamily {
   public:
    FilterFamily(FiniteMonoid carrier, std::vector<ElementSet> filters);

    FiniteMonoid const& carrier() const noexcept {
      return _carrier;
    }
    std::vector<ElementSet> const& filters() const noexcept {
      return _filters;
    }
    std::size_t size() const noexcept {
      return _filters.size();
    }
    ElementSet const& operator[](std::size_t i) const noexcept {
      return _filters[i];
    }
    auto begin() const noexcept {
      return _filters.begin();
    }
    auto end() const noexcept {
      return _filters.end();
    }

    // Position of f, or nullopt.
    std::optional<std::size_t> index_of(ElementSet const& f) const;
    bool                       contains(ElementSet const& f) const {
      return index_of(f).has_value();
    }

    friend bool operator==(FilterFamily const& lhs, FilterFamily const& rhs) noexcept {
      return lhs._filters == rhs._filters && lhs._carrier == rhs._carrier;
    }

   private:
    FiniteMonoid            _carrier;
    std::vector<ElementSet> _filters;
  };

  // Smallest filter containing s: divisors of products of members of s
  // (the empty product being one).
  ElementSet generate(FiniteMonoid const& m, ElementSet const& s);
  // F(f) = generate({f}).
  ElementSet principal_filter(FiniteMonoid const& m, element_id f);
  // The filter generated by f and g, F(f, g) = F(fg).
  ElementSet join(FiniteMonoid const& m, ElementSet const& f, ElementSet const& g);

  enum class FilterAlgorithm {
    // Scan all 2^|M| subsets; |M| <= limits.enumeration_cap.
    oracle,
    // Close the units filter under joins with single elements;
    // |M| <= limits.closure_cap.
    closure,
  };

  // Throws cap_exceeded.
  FilterFamily all_filters(FiniteMonoid const& m,
                           FilterAlgorithm     algorithm = FilterAlgorithm::closure,
                           Limits const&       limits    = {});

  // Without a declared zero every filter counts as consistent.
  bool is_consistent(FiniteMonoid const& m, ElementSet const& f);

  // gf^n = 0 for every g outside f, for some n <= |M| and some member f.
  bool satisfies_ultrafilter_criterion(FiniteMonoid const& m, ElementSet const& f);

  // Maximal consistent filters.  Throws no_zero_element, zero_equals_one,
  // and property_violation if a result disagrees with the criterion above.
  FilterFamily ultrafilters(FiniteMonoid const& m, Limits const& limits = {});

  bool is_multiplicatively_closed(FiniteMonoid const& m, ElementSet const& s);
  // Closed under multiplication by arbitrary elements.
  bool is_pseudoideal(FiniteMonoid const& m, ElementSet const& a);

  // For every g outside f: g^n f' in a for some n <= |M| and member f'.
  bool satisfies_avoidance_criterion(FiniteMonoid const& m, ElementSet const& f, ElementSet const& a);

  // Filters maximal among those containing s and disjoint from a.  Throws
  // not_multiplicatively_closed, not_pseudoideal, not_disjoint, and
  // property_violation if a result fails the criterion above.
  FilterFamily maximal_filters_avoiding(FiniteMonoid const& m,
                                        ElementSet const&   s,
                                        ElementSet const&   a,
                                        Limits const&       limits = {});

  // Members of `family` that contain no other member / are contained in no
  // other member.
  std::vector<ElementSet> minimal_sets(std::vector<ElementSet> const& family);
  std::vector<ElementSet> maximal_sets(std::vector<ElementSet> const& family);

}  // namespace filt

#endif  // FILT_FILTER_HPP_
