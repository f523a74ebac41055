#ifndef FILT_LIMITS_HPP_
#define FILT_LIMITS_HPP_

#include <cstddef>

namespace filt {

  // Size bounds for the exponential parts of the library.  Validation never
  // consults these; only operations that enumerate subsets or open sets do.
  struct Limits {
    // |M| bound for the 2^|M| subset-scan oracle.
    std::size_t enumeration_cap = 24;
    // |M| bound for closure-based filter enumeration and ideal enumeration.
    std::size_t closure_cap = 256;
    // Carrier bound for product_monoid / product rings.
    std::size_t product_cap = 4096;
    // Point bound for spaces that get their open sets materialised.
    std::size_t space_points_cap = 64;
    // Bound on the number of open sets materialised for one space.
    std::size_t open_sets_cap = 1U << 16;
    // Worker threads for the parallel subset scan (results are identical
    // for every value).
    unsigned jobs = 1;

    // Defaults overridden by FILT_ENUM_CAP, FILT_CLOSURE_CAP and FILT_JOBS when set.
    static Limits from_environment();
  };

}  // namespace filt

#endif  // FILT_LIMITS_HPP_
