#include <random>

#include "doctest.h"
#include "filt/error.hpp"
#include "filt/quadratic.hpp"

using namespace filt::quadratic;

namespace {
  QuadInt const w{1, 1};  // 1 + sqrt(-5)
}

TEST_CASE("identities") {
  CHECK(w * w == QuadInt(-4, 2));
  CHECK(QuadInt(2, -1) * QuadInt(2, 1) == QuadInt(9));
  CHECK(w * w == QuadInt(-2) * QuadInt(2, -1));
  CHECK(norm(w) == 6);
  CHECK(power(w, 2) == QuadInt(-4, 2));
  CHECK(to_string(QuadInt(-4, 2)) == "-4+2√-5");
}

TEST_CASE("norm is multiplicative") {
  std::mt19937_64 rng(77);
  auto            pick = [&] { return Integer(static_cast<long>(rng() % 201) - 100); };
  for (int round = 0; round < 1000; ++round) {
    QuadInt x(pick(), pick());
    QuadInt y(pick(), pick());
    CHECK(norm(x * y) == norm(x) * norm(y));
    if (!y.is_zero() && divides(y, x)) {
      CHECK(norm(x) % norm(y) == 0);
    }
    if (!y.is_zero()) {
      CHECK(divides(y, x * y));
      CHECK(exact_quotient(x * y, y) == std::optional<QuadInt>(x));
    }
  }
}

TEST_CASE("divisibility") {
  CHECK(divides(QuadInt(2), QuadInt(-4, 2)));
  CHECK(exact_quotient(QuadInt(-4, 2), QuadInt(2)) == std::optional<QuadInt>(QuadInt(-2, 1)));
  CHECK(divides(w, w));
  CHECK_FALSE(divides(QuadInt(2), w));
  CHECK_THROWS_AS(divides(QuadInt(0), w), filt::error);
  for (unsigned n = 0; n <= 20; ++n) {
    auto p = power(QuadInt(2), n);
    CHECK_FALSE(divides(w, p));
    CHECK(norm_refutes(w, p));
  }
  // large exponents stay exact
  auto big = power(w, 60);
  CHECK(norm(big) == boost::multiprecision::pow(Integer(6), 60));
}

TEST_CASE("bounded membership") {
  auto a = member_bounded(QuadInt(2), w, 4);
  CHECK(a.member);
  CHECK(a.n == 2);
  CHECK(a.witness == QuadInt(-2, 1));

  auto b = member_bounded(QuadInt(2, -1), QuadInt(3), 4);
  CHECK(b.member);
  CHECK(b.n == 2);
  CHECK(b.witness == QuadInt(2, 1));

  auto c = member_bounded(QuadInt(2, -1), w, 4);
  CHECK(c.member);
  CHECK(c.n == 2);
  CHECK(c.witness == QuadInt(-2));

  auto d = member_bounded(QuadInt(7, 3), QuadInt(7, 3), 1);
  CHECK(d.member);
  CHECK(d.n == 1);
  CHECK(d.witness == QuadInt(1));

  auto e = member_bounded(w, QuadInt(2), 6);
  CHECK_FALSE(e.member);
  CHECK(e.bound == 6);

  CHECK_THROWS_AS(member_bounded(w, QuadInt(0), 3), filt::error);
  CHECK_THROWS_AS(member_bounded(w, QuadInt(2), 0), filt::error);
}
