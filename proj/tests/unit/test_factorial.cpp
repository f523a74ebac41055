#include <random>

#include "doctest.h"
#include "filt/error.hpp"
#include "filt/factorial.hpp"
#include "oracles.hpp"

using namespace filt;
using namespace filt::factorial;

namespace {
  // g divides some power f^n, n <= bound
  bool divides_power(Exponents const& g, Exponents const& f, std::uint64_t bound) {
    for (std::uint64_t n = 0; n <= bound; ++n) {
      bool ok = true;
      for (std::size_t i = 0; i < g.size(); ++i) {
        ok = ok && g[i] <= n * f[i];
      }
      if (ok) {
        return true;
      }
    }
    return false;
  }

  Exponents random_vector(std::mt19937_64& rng, std::size_t n, std::uint64_t max) {
    Exponents v(n);
    for (auto& x : v) {
      x = rng() % (max + 1);
    }
    return v;
  }
}  // namespace

TEST_CASE("principal filters are supports") {
  CHECK(principal_filter({0, 0, 0}).empty());
  CHECK(principal_filter({2, 1, 0}) == ElementSet(3, {0, 1}));
  CHECK(member({5, 0, 0}, principal_filter({1, 1, 0})));
  CHECK_FALSE(member({0, 0, 1}, principal_filter({1, 1, 0})));
  CHECK(principal_generator(ElementSet(3, {0, 2})) == Exponents{1, 0, 1});
}

TEST_CASE("membership agrees with the power-divisor oracle") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 500; ++round) {
    auto f = random_vector(rng, 4, 3);
    auto g = random_vector(rng, 4, 3);
    CHECK(member(g, principal_filter(f)) == divides_power(g, f, 4));
  }
}

TEST_CASE("principal filter of a product") {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 200; ++round) {
    auto f = random_vector(rng, 4, 2);
    auto g = random_vector(rng, 4, 2);
    CHECK(principal_filter(product(f, g)) == (principal_filter(f) | principal_filter(g)));
  }
}

TEST_CASE("intersections") {
  auto a = principal_filter({2, 1});
  auto b = principal_filter({3, 0});
  CHECK(intersect_filters({a, b}) == ElementSet(2, {0}));
  CHECK(intersect_filters({a, a}) == a);
  CHECK(intersect_filters({principal_filter({2, 0}), principal_filter({0, 3})}).empty());
  CHECK_THROWS_AS(intersect_filters({}), filt::error);

  // membership in an intersection against the oracle
  std::mt19937_64 rng(21);
  for (int round = 0; round < 300; ++round) {
    std::vector<Exponents>   fs;
    std::vector<PrimeSubset> filters;
    for (int i = 0; i < 3; ++i) {
      fs.push_back(random_vector(rng, 4, 2));
      filters.push_back(principal_filter(fs.back()));
    }
    auto meet = intersect_filters(filters);
    auto gen  = principal_generator(meet);
    auto g    = random_vector(rng, 4, 3);
    bool in_all = true;
    for (auto const& f : fs) {
      in_all = in_all && divides_power(g, f, 4);
    }
    CHECK(member(g, meet) == in_all);
    CHECK(principal_filter(gen) == meet);
  }
}

TEST_CASE("coprimality") {
  CHECK(coprime({2, 0}, {0, 3}));
  CHECK_FALSE(coprime({1, 1}, {0, 1}));
  CHECK(coprime({0, 0}, {4, 4}));
  std::mt19937_64 rng(2);
  for (int round = 0; round < 200; ++round) {
    auto f = random_vector(rng, 3, 2);
    auto g = random_vector(rng, 3, 2);
    CHECK(coprime(f, g) == intersect_filters({principal_filter(f), principal_filter(g)}).empty());
  }
}

TEST_CASE("minimal elements") {
  std::vector<Exponents> s{{3, 0}, {0, 3}, {1, 1}, {2, 2}};
  std::vector<Exponents> expect{{0, 3}, {1, 1}, {3, 0}};
  auto                   got = minimal_elements(s);
  std::sort(got.begin(), got.end());
  CHECK(got == expect);
  CHECK(minimal_elements({{4, 2}}) == std::vector<Exponents>{{4, 2}});
  CHECK(minimal_elements({{1}, {2}, {3}}) == std::vector<Exponents>{{1}});
  CHECK_THROWS_AS(minimal_elements({{1, 2}, {1}}), filt::error);
}

TEST_CASE("recursive minimal elements agree with the oracle") {
  std::mt19937_64 rng(1234);
  for (int round = 0; round < 500; ++round) {
    std::size_t            n     = 1 + rng() % 5;
    std::size_t            count = 1 + rng() % 12;
    std::vector<Exponents> s;
    for (std::size_t i = 0; i < count; ++i) {
      s.push_back(random_vector(rng, n, 10));
    }
    auto got = minimal_elements_recursive(s);
    std::sort(got.begin(), got.end());
    CHECK(got == oracle::minimal(s));
    auto pair = minimal_elements_pairwise(s);
    std::sort(pair.begin(), pair.end());
    CHECK(pair == got);
  }
}

TEST_CASE("truncated model") {
  for (std::size_t p = 1; p <= 4; ++p) {
    auto model = check_truncated_model(p);
    CHECK(model.ok());
    CHECK(model.filter_count == (std::size_t{1} << p));
  }
  for (element_id id = 0; id < 27; ++id) {
    CHECK(encode(decode(id, 3, 2), 2) == id);
  }
}
