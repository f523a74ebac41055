#ifndef FILT_ERROR_HPP_
#define FILT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace filt {

  // Every failure raised by the library carries one of these codes.  The
  // names returned by to_string() are the stable, machine-readable
  // identifiers used in CLI diagnostics.
  enum class errc {
    shape_error,
    non_associative,
    non_commutative,
    bad_identity,
    bad_zero,
    index_out_of_range,
    no_zero_element,
    zero_equals_one,
    size_overflow,
    not_a_filter,
    not_a_homomorphism,
    cap_exceeded,
    not_multiplicatively_closed,
    not_pseudoideal,
    not_disjoint,
    carrier_mismatch,
    not_a_ring,
    not_an_ideal,
    zero_ring,
    not_boolean,
    empty_list,
    arity_mismatch,
    division_by_zero,
    zero_element,
    bad_bound,
    not_closed_under_ops,
    not_continuous,
    type_mismatch,
    property_violation,
  };

  std::string_view to_string(errc code) noexcept;

  class error : public std::runtime_error {
   public:
    error(errc code, std::string const& what, std::vector<std::size_t> witness = {})
        : std::runtime_error(what), _code(code), _witness(std::move(witness)) {}

    errc code() const noexcept {
      return _code;
    }

    // Element ids (or point ids) that exhibit the failure, e.g. the
    // associativity triple.  Empty when there is nothing to point at.
    std::vector<std::size_t> const& witness() const noexcept {
      return _witness;
    }

   private:
    errc                     _code;
    std::vector<std::size_t> _witness;
  };

  [[noreturn]] void raise(errc code, std::string const& what, std::vector<std::size_t> witness = {});

}  // namespace filt

#endif  // FILT_ERROR_HPP_
