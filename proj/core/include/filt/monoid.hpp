#ifndef FILT_MONOID_HPP_
#define FILT_MONOID_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "filt/element_set.hpp"
#include "filt/limits.hpp"

namespace filt {

  class FiniteMonoid;

  namespace detail {
    // Skips the O(n^3) law checks; only for tables that are correct by
    // construction (products of validated monoids and the like).
    FiniteMonoid make_monoid_unchecked(std::size_t               size,
                                       std::vector<element_id>   table,
                                       element_id                one,
                                       std::optional<element_id> zero);
  }  // namespace detail

  // A finite commutative monoid given by its Cayley table over the dense ids
  // 0, ..., size() - 1.
  //
  // Instances are immutable and only produced by validate_monoid() (or by the
  // constructions below, which are correct by construction).  Copies share the
  // table, so passing a FiniteMonoid by value is cheap.
  class FiniteMonoid {
   public:
    FiniteMonoid() = delete;

    std::size_t size() const noexcept {
      return _data->size;
    }

    element_id one() const noexcept {
      return _data->one;
    }

    std::optional<element_id> zero() const noexcept {
      return _data->zero;
    }

    bool has_zero() const noexcept {
      return _data->zero.has_value();
    }

    element_id mul(element_id x, element_id y) const noexcept {
      return _data->table[static_cast<std::size_t>(x) * _data->size + y];
    }

    std::span<element_id const> row(element_id x) const noexcept {
      return {_data->table.data() + static_cast<std::size_t>(x) * _data->size, _data->size};
    }

    std::vector<element_id> const& table() const noexcept {
      return _data->table;
    }

    // x^n with x^0 = one.
    element_id power(element_id x, std::size_t n) const noexcept;

    // Non-fatal findings of validation, e.g. an annihilator that was not
    // declared as zero.
    std::vector<std::string> const& warnings() const noexcept {
      return _data->warnings;
    }

    ElementSet empty_set() const {
      return ElementSet(size());
    }

    ElementSet full_set() const {
      return ElementSet::full(size());
    }

    // Same table, identity and zero declaration.
    friend bool operator==(FiniteMonoid const& lhs, FiniteMonoid const& rhs) noexcept;

   private:
    struct Data {
      std::size_t               size = 0;
      std::vector<element_id>   table;
      element_id                one = 0;
      std::optional<element_id> zero;
      std::vector<std::string>  warnings;
    };

    explicit FiniteMonoid(std::shared_ptr<Data const> data) : _data(std::move(data)) {}

    friend FiniteMonoid validate_monoid(std::size_t,
                                        std::vector<element_id>,
                                        element_id,
                                        std::optional<element_id>);
    friend FiniteMonoid detail::make_monoid_unchecked(std::size_t,
                                                      std::vector<element_id>,
                                                      element_id,
                                                      std::optional<element_id>);

    std::shared_ptr<Data const> _data;
  };

  // Validates a row-major table.  Throws filt::error with code shape_error,
  // bad_identity, non_commutative, non_associative or bad_zero naming the
  // first violated law; checks run in that order.  The witness holds the
  // offending ids (associativity triple, commutativity pair, ...).
  FiniteMonoid validate_monoid(std::size_t               size,
                               std::vector<element_id>   table,
                               element_id                one,
                               std::optional<element_id> zero = std::nullopt);

  FiniteMonoid validate_monoid(std::vector<std::vector<element_id>> const& rows,
                               element_id                                  one,
                               std::optional<element_id>                   zero = std::nullopt);

  // A validated homomorphism source -> target.  Zero preservation is
  // recorded, not required.
  class MonoidHom {
   public:
    MonoidHom(FiniteMonoid source, FiniteMonoid target, std::vector<element_id> map);

    FiniteMonoid const& source() const noexcept {
      return _source;
    }
    FiniteMonoid const& target() const noexcept {
      return _target;
    }
    std::vector<element_id> const& map() const noexcept {
      return _map;
    }
    element_id operator()(element_id x) const noexcept {
      return _map[x];
    }

    bool preserves_zero() const noexcept {
      return _preserves_zero;
    }
    bool is_surjective() const noexcept;
    bool is_injective() const noexcept;

    ElementSet image(ElementSet const& s) const;
    ElementSet preimage(ElementSet const& s) const;

   private:
    FiniteMonoid            _source;
    FiniteMonoid            _target;
    std::vector<element_id> _map;
    bool                    _preserves_zero = false;
  };

  MonoidHom identity_hom(FiniteMonoid const& m);
  // second o first
  MonoidHom compose(MonoidHom const& second, MonoidHom const& first);

  bool       divides(FiniteMonoid const& m, element_id g, element_id f);
  ElementSet divisors_of(FiniteMonoid const& m, element_id f);
  ElementSet units(FiniteMonoid const& m);
  // Throws no_zero_element when m has no declared zero.
  ElementSet nonzerodivisors(FiniteMonoid const& m);
  bool       is_nilpotent(FiniteMonoid const& m, element_id x);
  // No nilpotent elements other than zero (true when there is no zero).
  bool is_reduced(FiniteMonoid const& m);
  std::optional<element_id> find_annihilator(FiniteMonoid const& m);
  bool                      is_idempotent(FiniteMonoid const& m);

  struct ProductMonoid {
    FiniteMonoid monoid;
    MonoidHom    first;
    MonoidHom    second;

    // Row-major pairing: id = i1 * |M2| + i2.
    static element_id pair(std::size_t second_size, element_id i1, element_id i2) noexcept {
      return static_cast<element_id>(i1 * second_size + i2);
    }
  };

  // Throws size_overflow when |M1| * |M2| exceeds limits.product_cap.  The
  // product has a zero iff both factors do.
  ProductMonoid product_monoid(FiniteMonoid const& m1, FiniteMonoid const& m2, Limits const& limits = {});

  struct FractionMonoid {
    FiniteMonoid monoid;
    MonoidHom    canonical;
    // Lexicographically smallest (a, f) of each class, indexed by class id.
    std::vector<std::pair<element_id, element_id>> representatives;
  };

  // Localisation at a filter: pairs (a, f) with f in the filter, identified
  // when a g h = b f h for some h in the filter.  Throws not_a_filter.
  FractionMonoid fraction_monoid(FiniteMonoid const& m, ElementSet const& filter);

  struct PrincipalQuotient {
    FiniteMonoid monoid;
    MonoidHom    projection;
    // Members of each class, classes ordered by smallest member.
    std::vector<ElementSet> classes;
  };

  // Quotient by f ~ g iff F(f) = F(g).
  PrincipalQuotient principal_quotient(FiniteMonoid const& m);

  // Backtracking search for a bijection phi with phi(xy) = phi(x)phi(y),
  // phi(one) = one.  Zero declarations are ignored.
  std::optional<std::vector<element_id>> find_isomorphism(FiniteMonoid const& m, FiniteMonoid const& n);

  // Small constructors used by the corpus, tests and benchmarks.
  namespace monoids {
    FiniteMonoid trivial();
    // (Z/n, *), zero = 0, one = 1 (n >= 2).
    FiniteMonoid zmod_mul(std::size_t n);
    // (Z/n, +) a group, no zero.
    FiniteMonoid cyclic_group(std::size_t n);
    // {0, ..., k-1} under min, one = k-1, zero = 0.
    FiniteMonoid chain(std::size_t k);
    // Subsets of an n-set under intersection, one = full set, zero = empty.
    FiniteMonoid powerset_meet(std::size_t n);
    // {1, x, ..., x^k = 0}: ids are exponents, k >= 1.
    FiniteMonoid nilpotent(std::size_t k);
    // Exponent vectors over `primes` generators with entries capped at
    // `cap`; no zero is declared even though the all-cap vector annihilates.
    FiniteMonoid truncated_free(std::size_t primes, std::size_t cap);
  }  // namespace monoids

}  // namespace filt

#endif  // FILT_MONOID_HPP_
