#ifndef FILT_FACTORIAL_HPP_
#define FILT_FACTORIAL_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "filt/element_set.hpp"
#include "filt/limits.hpp"
#include "filt/monoid.hpp"

// The free commutative monoid on a finite set of primes P.  An element is
// its exponent vector; a filter is determined by the primes it contains, so
// filters are represented as subsets of P.
namespace filt::factorial {

  using Exponents = std::vector<std::uint64_t>;
  using PrimeSubset = ElementSet;

  // Primes with a positive exponent.
  PrimeSubset support(Exponents const& f);

  // g lies in F(f) iff support(g) is contained in support(f).
  PrimeSubset principal_filter(Exponents const& f);
  bool        member(Exponents const& g, PrimeSubset const& filter);

  // Throws arity_mismatch.
  Exponents product(Exponents const& f, Exponents const& g);

  // Exponent 1 on every prime of the subset: an element generating it.
  Exponents principal_generator(PrimeSubset const& s);

  // Throws empty_list, arity_mismatch.
  PrimeSubset intersect_filters(std::vector<PrimeSubset> const& filters);

  // Disjoint supports.  Throws arity_mismatch.
  bool coprime(Exponents const& f, Exponents const& g);

  // Minimal elements under the componentwise order, sorted and without
  // duplicates.  Computed by recursive projection and checked against the
  // pairwise scan; throws property_violation if they differ and
  // arity_mismatch for ragged input.
  std::vector<Exponents> minimal_elements(std::vector<Exponents> const& set);

  // The two algorithms on their own.
  std::vector<Exponents> minimal_elements_recursive(std::vector<Exponents> const& set);
  std::vector<Exponents> minimal_elements_pairwise(std::vector<Exponents> const& set);

  // Ids of the truncated model, exponents capped at `cap`: mixed radix with
  // base cap + 1, prime 0 least significant.
  element_id encode(Exponents const& f, std::size_t cap);
  Exponents  decode(element_id id, std::size_t primes, std::size_t cap);

  struct TruncatedModel {
    FiniteMonoid monoid;
    std::size_t  primes = 0;
    std::size_t  cap = 0;
    std::size_t  filter_count = 0;
    std::size_t  consistent_count = 0;
    // Filters correspond one-to-one to subsets of P via the primes they
    // contain.
    bool bijective = false;
    // Every filter is generated by the primes it contains.
    bool regenerates = false;
    // Filter membership agrees with member() on supports.
    bool supports_agree = false;

    bool ok() const noexcept {
      return bijective && regenerates && supports_agree;
    }
  };

  // Exponent vectors with entries capped at `cap` under capped addition.
  // No zero is declared, so every filter (including the whole monoid)
  // counts as consistent.
  TruncatedModel check_truncated_model(std::size_t primes, std::size_t cap = 2, Limits const& limits = {});

}  // namespace filt::factorial

#endif  // FILT_FACTORIAL_HPP_
