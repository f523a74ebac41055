#include "filt/quadratic.hpp"

#include "filt/error.hpp"

namespace filt::quadratic {

  Integer norm(QuadInt const& x) {
    return x.a * x.a + 5 * x.b * x.b;
  }

  QuadInt power(QuadInt const& x, unsigned n) {
    QuadInt result{1, 0};
    QuadInt base = x;
    while (n > 0) {
      if ((n & 1U) != 0) {
        result = result * base;
      }
      base = base * base;
      n >>= 1U;
    }
    return result;
  }

  std::string to_string(QuadInt const& x) {
    if (x.b == 0) {
      return x.a.str();
    }
    std::string out;
    if (x.a != 0) {
      out = x.a.str();
      if (x.b > 0) {
        out += '+';
      }
    }
    if (x.b == -1) {
      out += '-';
    } else if (x.b != 1) {
      out += x.b.str();
    }
    out += "√-5";
    return out;
  }

  std::optional<QuadInt> exact_quotient(QuadInt const& f, QuadInt const& g) {
    if (g.is_zero()) {
      raise(errc::division_by_zero, "division by zero in Z[sqrt(-5)]");
    }
    // f / g = f conj(g) / norm(g)
    QuadInt n = f * g.conj();
    Integer d = norm(g);
    if (n.a % d != 0 || n.b % d != 0) {
      return std::nullopt;
    }
    return QuadInt{n.a / d, n.b / d};
  }

  bool divides(QuadInt const& g, QuadInt const& f) {
    return exact_quotient(f, g).has_value();
  }

  bool norm_refutes(QuadInt const& g, QuadInt const& f) {
    Integer ng = norm(g);
    if (ng == 0) {
      raise(errc::division_by_zero, "norm of zero");
    }
    return norm(f) % ng != 0;
  }

  Membership member_bounded(QuadInt const& g, QuadInt const& f, unsigned bound) {
    if (f.is_zero() || g.is_zero()) {
      raise(errc::zero_element, "member_bounded needs nonzero g and f");
    }
    if (bound < 1) {
      raise(errc::bad_bound, "exponent bound must be at least 1");
    }
    QuadInt p = f;
    for (unsigned n = 1; n <= bound; ++n) {
      if (auto q = exact_quotient(p, g)) {
        return {true, n, *q, bound};
      }
      p = p * f;
    }
    return {false, 0, {}, bound};
  }

}  // namespace filt::quadratic
