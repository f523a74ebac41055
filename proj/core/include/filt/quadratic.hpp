#ifndef FILT_QUADRATIC_HPP_
#define FILT_QUADRATIC_HPP_

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

// Exact arithmetic in Z[sqrt(-5)], used to certify membership in principal
// filters by explicit divisibility witnesses.
namespace filt::quadratic {

  using Integer = boost::multiprecision::cpp_int;

  // a + b sqrt(-5)
  struct QuadInt {
    Integer a;
    Integer b;

    QuadInt() = default;
    QuadInt(Integer a_, Integer b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}  // NOLINT(google-explicit-constructor)

    bool is_zero() const {
      return a == 0 && b == 0;
    }
    QuadInt conj() const {
      return {a, -b};
    }

    friend QuadInt operator+(QuadInt const& x, QuadInt const& y) {
      return {x.a + y.a, x.b + y.b};
    }
    friend QuadInt operator-(QuadInt const& x, QuadInt const& y) {
      return {x.a - y.a, x.b - y.b};
    }
    friend QuadInt operator-(QuadInt const& x) {
      return {-x.a, -x.b};
    }
    friend QuadInt operator*(QuadInt const& x, QuadInt const& y) {
      return {x.a * y.a - 5 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend bool operator==(QuadInt const& x, QuadInt const& y) {
      return x.a == y.a && x.b == y.b;
    }
  };

  // a^2 + 5 b^2
  Integer norm(QuadInt const& x);

  QuadInt power(QuadInt const& x, unsigned n);

  // "-4+2√-5", "9", "-2", "√-5"
  std::string to_string(QuadInt const& x);

  // f / g when it lies in Z[sqrt(-5)].  Throws division_by_zero.
  std::optional<QuadInt> exact_quotient(QuadInt const& f, QuadInt const& g);

  // g | f.  Throws division_by_zero.
  bool divides(QuadInt const& g, QuadInt const& f);

  // norm(g) does not divide norm(f), which rules out g | f.
  bool norm_refutes(QuadInt const& g, QuadInt const& f);

  // Either a certificate g * witness = f^n with the smallest such
  // n <= bound, or "unknown up to bound".  Never asserts non-membership.
  struct Membership {
    bool     member = false;
    unsigned n = 0;
    QuadInt  witness;
    unsigned bound = 0;
  };

  // Throws zero_element if f or g is zero, bad_bound if bound < 1.
  Membership member_bounded(QuadInt const& g, QuadInt const& f, unsigned bound);

}  // namespace filt::quadratic

#endif  // FILT_QUADRATIC_HPP_
