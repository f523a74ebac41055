#include "filt/ring.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "filt/error.hpp"
#include "filt/filter.hpp"
#include "filt/filtrum.hpp"

namespace filt {

  namespace {
    void check_carrier(FiniteRing const& r, ElementSet const& s) {
      if (s.universe() != r.size()) {
        raise(errc::carrier_mismatch,
              "set over " + std::to_string(s.universe()) + " ids used with a ring of size "
                  + std::to_string(r.size()));
      }
    }

    std::optional<element_id> identity_of(std::size_t n, std::vector<element_id> const& t) {
      for (element_id e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) {
          ok = t[e * n + x] == x && t[x * n + e] == x;
        }
        if (ok) {
          return e;
        }
      }
      return std::nullopt;
    }

    void check_commutative_associative(std::size_t n, std::vector<element_id> const& t, char const* op) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (t[x * n + y] != t[y * n + x]) {
            raise(errc::not_a_ring, std::string(op) + " is not commutative", {x, y});
          }
        }
      }
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          for (std::size_t z = 0; z < n; ++z) {
            if (t[t[x * n + y] * n + z] != t[x * n + t[y * n + z]]) {
              raise(errc::not_a_ring, std::string(op) + " is not associative", {x, y, z});
            }
          }
        }
      }
    }
  }  // namespace

  FiniteRing FiniteRing::assemble(std::size_t size, std::vector<element_id> add, std::vector<element_id> mul, bool check) {
    if (size == 0) {
      raise(errc::shape_error, "a ring needs at least one element");
    }
    if (add.size() != size * size || mul.size() != size * size) {
      raise(errc::shape_error, "tables must have " + std::to_string(size * size) + " entries");
    }
    for (std::size_t i = 0; i < add.size(); ++i) {
      if (add[i] >= size || mul[i] >= size) {
        raise(errc::shape_error, "table entry out of range", {i / size, i % size});
      }
    }
    auto zero = identity_of(size, add);
    if (!zero) {
      raise(errc::not_a_ring, "addition has no neutral element");
    }
    auto one = identity_of(size, mul);
    if (!one) {
      raise(errc::not_a_ring, "multiplication has no neutral element");
    }
    std::vector<element_id> neg(size, 0);
    for (element_id x = 0; x < size; ++x) {
      bool found = false;
      for (element_id y = 0; y < size && !found; ++y) {
        if (add[x * size + y] == *zero) {
          neg[x] = y;
          found  = true;
        }
      }
      if (!found) {
        raise(errc::not_a_ring, "element " + std::to_string(x) + " has no additive inverse", {x});
      }
    }
    if (check) {
      check_commutative_associative(size, add, "addition");
      check_commutative_associative(size, mul, "multiplication");
      for (std::size_t x = 0; x < size; ++x) {
        for (std::size_t y = 0; y < size; ++y) {
          for (std::size_t z = 0; z < size; ++z) {
            if (mul[x * size + add[y * size + z]] != add[mul[x * size + y] * size + mul[x * size + z]]) {
              raise(errc::not_a_ring, "distributivity fails", {x, y, z});
            }
          }
        }
      }
    }
    auto monoid = detail::make_monoid_unchecked(size, mul, *one, *zero);
    auto data   = std::make_shared<Data const>(Data{size, std::move(add), std::move(mul), std::move(neg), *zero, *one, monoid});
    return FiniteRing(std::move(data));
  }

  FiniteRing FiniteRing::validate(std::size_t size, std::vector<element_id> add, std::vector<element_id> mul) {
    return assemble(size, std::move(add), std::move(mul), true);
  }

  FiniteRing FiniteRing::validate(std::vector<std::vector<element_id>> const& add,
                                  std::vector<std::vector<element_id>> const& mul) {
    std::size_t n = add.size();
    if (mul.size() != n) {
      raise(errc::shape_error, "add and mul tables differ in size");
    }
    std::vector<element_id> a;
    std::vector<element_id> m;
    for (std::size_t i = 0; i < n; ++i) {
      if (add[i].size() != n || mul[i].size() != n) {
        raise(errc::shape_error, "row " + std::to_string(i) + " has the wrong length", {i});
      }
      a.insert(a.end(), add[i].begin(), add[i].end());
      m.insert(m.end(), mul[i].begin(), mul[i].end());
    }
    return validate(n, std::move(a), std::move(m));
  }

  bool FiniteRing::is_boolean() const noexcept {
    for (element_id x = 0; x < size(); ++x) {
      if (mul(x, x) != x) {
        return false;
      }
    }
    return true;
  }

  FiniteRing product_ring(FiniteRing const& r1, FiniteRing const& r2, Limits const& limits) {
    std::size_t n1 = r1.size();
    std::size_t n2 = r2.size();
    if (n1 * n2 > limits.product_cap) {
      raise(errc::size_overflow, "product ring exceeds the cap " + std::to_string(limits.product_cap));
    }
    std::size_t             n = n1 * n2;
    std::vector<element_id> add(n * n);
    std::vector<element_id> mul(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto a1 = static_cast<element_id>(a / n2);
        auto a2 = static_cast<element_id>(a % n2);
        auto b1 = static_cast<element_id>(b / n2);
        auto b2 = static_cast<element_id>(b % n2);
        add[a * n + b] = static_cast<element_id>(r1.add(a1, b1) * n2 + r2.add(a2, b2));
        mul[a * n + b] = static_cast<element_id>(r1.mul(a1, b1) * n2 + r2.mul(a2, b2));
      }
    }
    return FiniteRing::assemble(n, std::move(add), std::move(mul), false);
  }

  bool is_ideal(FiniteRing const& r, ElementSet const& s) {
    check_carrier(r, s);
    if (!s.contains(r.zero())) {
      return false;
    }
    auto members = s.members();
    for (auto x : members) {
      for (auto y : members) {
        if (!s.contains(r.add(x, y))) {
          return false;
        }
      }
      for (element_id t = 0; t < r.size(); ++t) {
        if (!s.contains(r.mul(t, x))) {
          return false;
        }
      }
    }
    return true;
  }

  ElementSet ideal_generated(FiniteRing const& r, ElementSet const& s) {
    check_carrier(r, s);
    ElementSet out = s;
    out.insert(r.zero());
    bool changed = true;
    while (changed) {
      changed      = false;
      auto members = out.members();
      for (auto x : members) {
        for (element_id t = 0; t < r.size(); ++t) {
          element_id p = r.mul(t, x);
          if (!out.contains(p)) {
            out.insert(p);
            changed = true;
          }
        }
        for (auto y : members) {
          element_id q = r.add(x, y);
          if (!out.contains(q)) {
            out.insert(q);
            changed = true;
          }
        }
      }
    }
    return out;
  }

  std::vector<ElementSet> all_ideals(FiniteRing const& r, Limits const& limits) {
    if (r.size() > limits.closure_cap) {
      raise(errc::cap_exceeded, "ideal enumeration needs |R| <= " + std::to_string(limits.closure_cap));
    }
    ElementSet             start(r.size(), {r.zero()});
    std::set<ElementSet>   seen{start};
    std::deque<ElementSet> queue{start};
    while (!queue.empty()) {
      ElementSet a = std::move(queue.front());
      queue.pop_front();
      for (element_id x = 0; x < r.size(); ++x) {
        if (a.contains(x)) {
          continue;
        }
        ElementSet s = a;
        s.insert(x);
        auto b = ideal_generated(r, s);
        if (seen.insert(b).second) {
          queue.push_back(std::move(b));
        }
      }
    }
    return {seen.begin(), seen.end()};
  }

  std::vector<ElementSet> prime_ideals(FiniteRing const& r, Limits const& limits) {
    std::vector<ElementSet> out;
    for (auto const& p : all_ideals(r, limits)) {
      if (!p.contains(r.one()) && is_multiplicatively_closed(r.mult_monoid(), p.complement())) {
        out.push_back(p);
      }
    }
    return out;
  }

  std::vector<ElementSet> minimal_primes(FiniteRing const& r, Limits const& limits) {
    return minimal_sets(prime_ideals(r, limits));
  }

  std::vector<ElementSet> minimal_primes_over(FiniteRing const& r, ElementSet const& a, Limits const& limits) {
    check_carrier(r, a);
    std::vector<ElementSet> over;
    for (auto const& p : prime_ideals(r, limits)) {
      if (a.is_subset_of(p)) {
        over.push_back(p);
      }
    }
    return minimal_sets(over);
  }

  ElementSet nilradical(FiniteRing const& r) {
    ElementSet out(r.size());
    for (element_id x = 0; x < r.size(); ++x) {
      element_id p = x;
      for (std::size_t n = 1; n <= r.size(); ++n) {
        if (p == r.zero()) {
          out.insert(x);
          break;
        }
        p = r.mul(p, x);
      }
    }
    return out;
  }

  ElementSet one_plus(FiniteRing const& r, ElementSet const& a) {
    check_carrier(r, a);
    ElementSet out(r.size());
    a.for_each([&](element_id x) { out.insert(r.add(r.one(), x)); });
    return out;
  }

  MonoidHom QuotientRing::monoid_hom(FiniteRing const& source) const {
    return MonoidHom(source.mult_monoid(), ring.mult_monoid(), projection);
  }

  QuotientRing quotient_ring(FiniteRing const& r, ElementSet const& a) {
    check_carrier(r, a);
    if (!is_ideal(r, a)) {
      raise(errc::not_an_ideal, a.to_string() + " is not an ideal");
    }
    std::size_t             n = r.size();
    std::vector<element_id> projection(n, UINT32_MAX);
    std::vector<ElementSet> cosets;
    for (element_id x = 0; x < n; ++x) {
      if (projection[x] != UINT32_MAX) {
        continue;
      }
      ElementSet c(n);
      a.for_each([&](element_id y) { c.insert(r.add(x, y)); });
      c.for_each([&](element_id y) { projection[y] = static_cast<element_id>(cosets.size()); });
      cosets.push_back(std::move(c));
    }
    std::size_t             k = cosets.size();
    std::vector<element_id> add(k * k);
    std::vector<element_id> mul(k * k);
    for (std::size_t c = 0; c < k; ++c) {
      for (std::size_t d = 0; d < k; ++d) {
        add[c * k + d] = projection[r.add(cosets[c].first(), cosets[d].first())];
        mul[c * k + d] = projection[r.mul(cosets[c].first(), cosets[d].first())];
      }
    }
    return QuotientRing{FiniteRing::validate(k, std::move(add), std::move(mul)), std::move(projection), std::move(cosets)};
  }

  ComplementDecomposition filter_complement_decomposition(FiniteRing const& r, ElementSet const& f, Limits const& limits) {
    check_carrier(r, f);
    auto const& m = r.mult_monoid();
    if (!is_filter(m, f)) {
      raise(errc::not_a_filter, f.to_string() + " is not a filter of the multiplicative monoid");
    }
    auto                    primes = prime_ideals(r, limits);
    ComplementDecomposition out;
    ElementSet              covered(r.size());
    for (auto const& p : primes) {
      if (!p.intersects(f)) {
        out.primes.push_back(p);
        covered |= p;
      }
    }
    out.covers   = covered == f.complement();
    out.converse = true;
    if (primes.size() < 20) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << primes.size()); ++mask) {
        ElementSet u(r.size());
        for (std::size_t i = 0; i < primes.size(); ++i) {
          if (((mask >> i) & 1U) != 0) {
            u |= primes[i];
          }
        }
        if (!is_filter(m, u.complement())) {
          out.converse = false;
          for (std::size_t i = 0; i < primes.size(); ++i) {
            if (((mask >> i) & 1U) != 0) {
              out.converse_witness.push_back(i);
            }
          }
          break;
        }
      }
    }
    return out;
  }

  UltrafilterDuality minimal_prime_ultrafilter_duality(FiniteRing const& r, Limits const& limits) {
    if (r.is_zero_ring()) {
      raise(errc::zero_ring, "the zero ring has no prime ideals");
    }
    UltrafilterDuality out;
    auto               ultras = ultrafilters(r.mult_monoid(), limits);
    out.ultrafilters.assign(ultras.begin(), ultras.end());
    out.minimal_primes = minimal_primes(r, limits);
    out.ok             = out.ultrafilters.size() == out.minimal_primes.size();
    std::vector<bool> used(out.minimal_primes.size(), false);
    for (auto const& u : out.ultrafilters) {
      auto c  = u.complement();
      auto it = std::find(out.minimal_primes.begin(), out.minimal_primes.end(), c);
      if (it == out.minimal_primes.end()) {
        out.ok = false;
        out.match.push_back(SIZE_MAX);
        continue;
      }
      auto j = static_cast<std::size_t>(it - out.minimal_primes.begin());
      if (used[j]) {
        out.ok = false;
      }
      used[j] = true;
      out.match.push_back(j);
    }
    for (auto const& p : out.minimal_primes) {
      if (std::find(out.ultrafilters.begin(), out.ultrafilters.end(), p.complement()) == out.ultrafilters.end()) {
        out.ok = false;
      }
    }
    return out;
  }

  BooleanCorrespondence boolean_ideal_filter_correspondence(FiniteRing const& r, Limits const& limits) {
    if (!r.is_boolean()) {
      raise(errc::not_boolean, "x^2 = x fails for some element");
    }
    auto const&           m = r.mult_monoid();
    BooleanCorrespondence out;
    out.ideals  = all_ideals(r, limits);
    auto family = all_filters(m, FilterAlgorithm::closure, limits);
    out.filters.assign(family.begin(), family.end());
    out.bijective = out.ideals.size() == out.filters.size();
    std::vector<bool> hit(out.filters.size(), false);
    for (auto const& a : out.ideals) {
      ElementSet g(r.size());
      a.for_each([&](element_id e) { g.insert(r.sub(r.one(), e)); });
      auto j = family.index_of(g);
      if (!j || hit[*j]) {
        out.bijective = false;
        out.to_filter.push_back(SIZE_MAX);
        continue;
      }
      hit[*j] = true;
      out.to_filter.push_back(*j);
      // Inverse direction: {1 - f : f in F} must give back a.
      ElementSet back(r.size());
      g.for_each([&](element_id x) { back.insert(r.sub(r.one(), x)); });
      if (back != a) {
        out.bijective = false;
      }
    }
    auto ultras = ultrafilters(m, limits);
    out.ultrafilter_count = ultras.size();
    out.criterion         = true;
    for (auto const& f : out.filters) {
      bool either_or = true;
      for (element_id e = 0; e < r.size(); ++e) {
        if (f.contains(e) == f.contains(r.sub(r.one(), e))) {
          either_or = false;
        }
      }
      if (either_or != ultras.contains(f)) {
        out.criterion = false;
      }
    }
    out.intersections = true;
    for (auto const& f : out.filters) {
      ElementSet meet = ElementSet::full(r.size());
      for (auto const& u : ultras) {
        if (f.is_subset_of(u)) {
          meet &= u;
        }
      }
      if (meet != f) {
        out.intersections = false;
      }
    }
    return out;
  }

  bool is_fix_along_quotient(FiniteRing const& r, ElementSet const& a, ElementSet const& f) {
    auto q = quotient_ring(r, a);
    auto h = q.monoid_hom(r);
    return pullback(h, pushforward(h, f)) == f;
  }

  bool fix_modulo_ideal(FiniteRing const& r, ElementSet const& a, ElementSet const& f) {
    check_carrier(r, a);
    check_carrier(r, f);
    if (!is_ideal(r, a)) {
      raise(errc::not_an_ideal, a.to_string() + " is not an ideal");
    }
    if (!is_filter(r.mult_monoid(), f)) {
      raise(errc::not_a_filter, f.to_string() + " is not a filter");
    }
    bool criterion = true;
    f.for_each([&](element_id x) {
      a.for_each([&](element_id y) {
        if (!f.contains(r.add(x, y))) {
          criterion = false;
        }
      });
    });
    if (criterion != is_fix_along_quotient(r, a, f)) {
      raise(errc::property_violation,
            "fixness of " + f.to_string() + " modulo " + a.to_string() + " disagrees with the quotient map");
    }
    return criterion;
  }

  namespace rings {

    FiniteRing zmod(std::size_t n) {
      std::vector<element_id> add(n * n);
      std::vector<element_id> mul(n * n);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          add[x * n + y] = static_cast<element_id>((x + y) % n);
          mul[x * n + y] = static_cast<element_id>((x * y) % n);
        }
      }
      return FiniteRing::validate(n, std::move(add), std::move(mul));
    }

    FiniteRing boolean(std::size_t k) {
      std::size_t             n = std::size_t{1} << k;
      std::vector<element_id> add(n * n);
      std::vector<element_id> mul(n * n);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          add[x * n + y] = static_cast<element_id>(x ^ y);
          mul[x * n + y] = static_cast<element_id>(x & y);
        }
      }
      return FiniteRing::validate(n, std::move(add), std::move(mul));
    }

    FiniteRing f4() {
      // Elements a + b w as bits (a, b); w^2 = w + 1.
      std::vector<element_id> add(16);
      std::vector<element_id> mul(16);
      for (unsigned x = 0; x < 4; ++x) {
        for (unsigned y = 0; y < 4; ++y) {
          add[x * 4 + y] = x ^ y;
          unsigned a0 = x & 1U, a1 = x >> 1U, b0 = y & 1U, b1 = y >> 1U;
          unsigned c0 = (a0 & b0) ^ (a1 & b1);
          unsigned c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
          mul[x * 4 + y] = c0 | (c1 << 1U);
        }
      }
      return FiniteRing::validate(4, std::move(add), std::move(mul));
    }

    FiniteRing dual_numbers_z2() {
      // Elements a + b x as bits (a, b); x^2 = 0.
      std::vector<element_id> add(16);
      std::vector<element_id> mul(16);
      for (unsigned x = 0; x < 4; ++x) {
        for (unsigned y = 0; y < 4; ++y) {
          add[x * 4 + y] = x ^ y;
          unsigned a0 = x & 1U, a1 = x >> 1U, b0 = y & 1U, b1 = y >> 1U;
          unsigned c0 = a0 & b0;
          unsigned c1 = (a0 & b1) ^ (a1 & b0);
          mul[x * 4 + y] = c0 | (c1 << 1U);
        }
      }
      return FiniteRing::validate(4, std::move(add), std::move(mul));
    }

  }  // namespace rings

}  // namespace filt
