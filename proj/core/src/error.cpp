#include "filt/error.hpp"

namespace filt {

  std::string_view to_string(errc code) noexcept {
    switch (code) {
      case errc::shape_error:
        return "ShapeError";
      case errc::non_associative:
        return "NonAssociative";
      case errc::non_commutative:
        return "NonCommutative";
      case errc::bad_identity:
        return "BadIdentity";
      case errc::bad_zero:
        return "BadZero";
      case errc::index_out_of_range:
        return "IndexOutOfRange";
      case errc::no_zero_element:
        return "NoZeroElement";
      case errc::zero_equals_one:
        return "ZeroEqualsOne";
      case errc::size_overflow:
        return "SizeOverflow";
      case errc::not_a_filter:
        return "NotAFilter";
      case errc::not_a_homomorphism:
        return "NotAHomomorphism";
      case errc::cap_exceeded:
        return "CapExceeded";
      case errc::not_multiplicatively_closed:
        return "NotMultiplicativelyClosed";
      case errc::not_pseudoideal:
        return "NotPseudoideal";
      case errc::not_disjoint:
        return "NotDisjoint";
      case errc::carrier_mismatch:
        return "CarrierMismatch";
      case errc::not_a_ring:
        return "NotARing";
      case errc::not_an_ideal:
        return "NotAnIdeal";
      case errc::zero_ring:
        return "ZeroRing";
      case errc::not_boolean:
        return "NotBoolean";
      case errc::empty_list:
        return "EmptyList";
      case errc::arity_mismatch:
        return "ArityMismatch";
      case errc::division_by_zero:
        return "DivisionByZero";
      case errc::zero_element:
        return "ZeroElement";
      case errc::bad_bound:
        return "BadBound";
      case errc::not_closed_under_ops:
        return "NotClosedUnderOps";
      case errc::not_continuous:
        return "NotContinuous";
      case errc::type_mismatch:
        return "TypeMismatch";
      case errc::property_violation:
        return "PropertyViolation";
    }
    return "Unknown";
  }

  void raise(errc code, std::string const& what, std::vector<std::size_t> witness) {
    throw error(code, std::string(to_string(code)) + ": " + what, std::move(witness));
  }

}  // namespace filt
