#include "filt/monoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "filt/error.hpp"

namespace filt {

  namespace {
    std::string ids(std::initializer_list<std::size_t> xs) {
      std::string out;
      for (auto x : xs) {
        if (!out.empty()) {
          out += ", ";
        }
        out += std::to_string(x);
      }
      return out;
    }

    void check_index(FiniteMonoid const& m, element_id x) {
      if (x >= m.size()) {
        raise(errc::index_out_of_range,
              "element " + std::to_string(x) + " outside monoid of size " + std::to_string(m.size()),
              {x});
      }
    }

    // Divisors of the powers of f, i.e. the principal filter F(f).
    ElementSet principal(FiniteMonoid const& m, element_id f) {
      ElementSet powers(m.size());
      element_id p = m.one();
      while (!powers.contains(p)) {
        powers.insert(p);
        p = m.mul(p, f);
      }
      ElementSet out(m.size());
      for (element_id g = 0; g < m.size(); ++g) {
        auto row = m.row(g);
        for (auto v : row) {
          if (powers.contains(v)) {
            out.insert(g);
            break;
          }
        }
      }
      return out;
    }
  }  // namespace

  namespace detail {
    FiniteMonoid make_monoid_unchecked(std::size_t               size,
                                       std::vector<element_id>   table,
                                       element_id                one,
                                       std::optional<element_id> zero) {
      auto data   = std::make_shared<FiniteMonoid::Data>();
      data->size  = size;
      data->table = std::move(table);
      data->one   = one;
      data->zero  = zero;
      return FiniteMonoid(std::move(data));
    }
  }  // namespace detail

  element_id FiniteMonoid::power(element_id x, std::size_t n) const noexcept {
    element_id result = one();
    element_id base   = x;
    while (n > 0) {
      if ((n & 1U) != 0) {
        result = mul(result, base);
      }
      base = mul(base, base);
      n >>= 1U;
    }
    return result;
  }

  bool operator==(FiniteMonoid const& lhs, FiniteMonoid const& rhs) noexcept {
    if (lhs._data == rhs._data) {
      return true;
    }
    return lhs.size() == rhs.size() && lhs.one() == rhs.one() && lhs.zero() == rhs.zero()
           && lhs.table() == rhs.table();
  }

  FiniteMonoid validate_monoid(std::size_t               size,
                               std::vector<element_id>   table,
                               element_id                one,
                               std::optional<element_id> zero) {
    if (size == 0) {
      raise(errc::shape_error, "a monoid needs at least one element");
    }
    if (table.size() != size * size) {
      raise(errc::shape_error,
            "table has " + std::to_string(table.size()) + " entries, expected "
                + std::to_string(size * size));
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i] >= size) {
        raise(errc::shape_error,
              "entry (" + ids({i / size, i % size}) + ") = " + std::to_string(table[i])
                  + " is out of range",
              {i / size, i % size});
      }
    }
    if (one >= size) {
      raise(errc::shape_error, "identity " + std::to_string(one) + " is out of range", {one});
    }
    if (zero && *zero >= size) {
      raise(errc::shape_error, "zero " + std::to_string(*zero) + " is out of range", {*zero});
    }
    auto at = [&](std::size_t x, std::size_t y) { return table[x * size + y]; };
    for (std::size_t x = 0; x < size; ++x) {
      if (at(one, x) != x || at(x, one) != x) {
        raise(errc::bad_identity,
              std::to_string(one) + " is not neutral for " + std::to_string(x),
              {one, x});
      }
    }
    for (std::size_t x = 0; x < size; ++x) {
      for (std::size_t y = x + 1; y < size; ++y) {
        if (at(x, y) != at(y, x)) {
          raise(errc::non_commutative, "x*y != y*x for (" + ids({x, y}) + ")", {x, y});
        }
      }
    }
    for (std::size_t x = 0; x < size; ++x) {
      for (std::size_t y = 0; y < size; ++y) {
        std::size_t xy = at(x, y);
        for (std::size_t z = 0; z < size; ++z) {
          if (at(xy, z) != at(x, at(y, z))) {
            raise(errc::non_associative,
                  "(x*y)*z != x*(y*z) for (" + ids({x, y, z}) + ")",
                  {x, y, z});
          }
        }
      }
    }
    if (zero) {
      for (std::size_t x = 0; x < size; ++x) {
        if (at(*zero, x) != *zero) {
          raise(errc::bad_zero,
                std::to_string(*zero) + " does not annihilate " + std::to_string(x),
                {*zero, x});
        }
      }
    }
    auto data   = std::make_shared<FiniteMonoid::Data>();
    data->size  = size;
    data->table = std::move(table);
    data->one   = one;
    data->zero  = zero;
    FiniteMonoid m(data);
    if (!zero) {
      if (auto z = find_annihilator(m)) {
        data->warnings.push_back("element " + std::to_string(*z)
                                 + " annihilates every element but is not declared as zero");
      }
    }
    return m;
  }

  FiniteMonoid validate_monoid(std::vector<std::vector<element_id>> const& rows,
                               element_id                                  one,
                               std::optional<element_id>                   zero) {
    std::size_t             size = rows.size();
    std::vector<element_id> table;
    table.reserve(size * size);
    for (std::size_t i = 0; i < size; ++i) {
      if (rows[i].size() != size) {
        raise(errc::shape_error,
              "row " + std::to_string(i) + " has " + std::to_string(rows[i].size())
                  + " entries, expected " + std::to_string(size),
              {i});
      }
      table.insert(table.end(), rows[i].begin(), rows[i].end());
    }
    return validate_monoid(size, std::move(table), one, zero);
  }

  MonoidHom::MonoidHom(FiniteMonoid source, FiniteMonoid target, std::vector<element_id> map)
      : _source(std::move(source)), _target(std::move(target)), _map(std::move(map)) {
    if (_map.size() != _source.size()) {
      raise(errc::not_a_homomorphism,
            "map has " + std::to_string(_map.size()) + " entries, source has "
                + std::to_string(_source.size()));
    }
    for (std::size_t x = 0; x < _map.size(); ++x) {
      if (_map[x] >= _target.size()) {
        raise(errc::not_a_homomorphism,
              "image of " + std::to_string(x) + " is outside the target",
              {x});
      }
    }
    if (_map[_source.one()] != _target.one()) {
      raise(errc::not_a_homomorphism, "identity is not mapped to identity", {_source.one()});
    }
    for (element_id x = 0; x < _source.size(); ++x) {
      for (element_id y = x; y < _source.size(); ++y) {
        if (_map[_source.mul(x, y)] != _target.mul(_map[x], _map[y])) {
          raise(errc::not_a_homomorphism,
                "map(x*y) != map(x)*map(y) for (" + ids({x, y}) + ")",
                {x, y});
        }
      }
    }
    _preserves_zero = _source.has_zero() && _target.has_zero() && _map[*_source.zero()] == *_target.zero();
  }

  bool MonoidHom::is_surjective() const noexcept {
    std::vector<bool> hit(_target.size(), false);
    for (auto y : _map) {
      hit[y] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  bool MonoidHom::is_injective() const noexcept {
    std::vector<bool> hit(_target.size(), false);
    for (auto y : _map) {
      if (hit[y]) {
        return false;
      }
      hit[y] = true;
    }
    return true;
  }

  ElementSet MonoidHom::image(ElementSet const& s) const {
    if (s.universe() != _source.size()) {
      raise(errc::carrier_mismatch, "set is not over the source monoid");
    }
    ElementSet out(_target.size());
    s.for_each([&](element_id x) { out.insert(_map[x]); });
    return out;
  }

  ElementSet MonoidHom::preimage(ElementSet const& s) const {
    if (s.universe() != _target.size()) {
      raise(errc::carrier_mismatch, "set is not over the target monoid");
    }
    ElementSet out(_source.size());
    for (element_id x = 0; x < _map.size(); ++x) {
      if (s.contains(_map[x])) {
        out.insert(x);
      }
    }
    return out;
  }

  MonoidHom identity_hom(FiniteMonoid const& m) {
    std::vector<element_id> map(m.size());
    std::iota(map.begin(), map.end(), element_id{0});
    return MonoidHom(m, m, std::move(map));
  }

  MonoidHom compose(MonoidHom const& second, MonoidHom const& first) {
    if (!(first.target() == second.source())) {
      raise(errc::carrier_mismatch, "compose: target of first is not the source of second");
    }
    std::vector<element_id> map(first.source().size());
    for (element_id x = 0; x < map.size(); ++x) {
      map[x] = second(first(x));
    }
    return MonoidHom(first.source(), second.target(), std::move(map));
  }

  bool divides(FiniteMonoid const& m, element_id g, element_id f) {
    check_index(m, g);
    check_index(m, f);
    auto row = m.row(g);
    return std::find(row.begin(), row.end(), f) != row.end();
  }

  ElementSet divisors_of(FiniteMonoid const& m, element_id f) {
    check_index(m, f);
    ElementSet out(m.size());
    for (element_id g = 0; g < m.size(); ++g) {
      auto row = m.row(g);
      if (std::find(row.begin(), row.end(), f) != row.end()) {
        out.insert(g);
      }
    }
    return out;
  }

  ElementSet units(FiniteMonoid const& m) {
    return divisors_of(m, m.one());
  }

  ElementSet nonzerodivisors(FiniteMonoid const& m) {
    if (!m.has_zero()) {
      raise(errc::no_zero_element, "nonzerodivisors needs a declared zero");
    }
    element_id z = *m.zero();
    ElementSet out(m.size());
    for (element_id f = 0; f < m.size(); ++f) {
      bool ok = true;
      for (element_id g = 0; g < m.size() && ok; ++g) {
        if (g != z && m.mul(f, g) == z) {
          ok = false;
        }
      }
      if (ok) {
        out.insert(f);
      }
    }
    return out;
  }

  bool is_nilpotent(FiniteMonoid const& m, element_id x) {
    check_index(m, x);
    if (!m.has_zero()) {
      return false;
    }
    element_id p = x;
    for (std::size_t n = 1; n <= m.size(); ++n) {
      if (p == *m.zero()) {
        return true;
      }
      p = m.mul(p, x);
    }
    return false;
  }

  bool is_reduced(FiniteMonoid const& m) {
    if (!m.has_zero()) {
      return true;
    }
    for (element_id x = 0; x < m.size(); ++x) {
      if (x != *m.zero() && is_nilpotent(m, x)) {
        return false;
      }
    }
    return true;
  }

  std::optional<element_id> find_annihilator(FiniteMonoid const& m) {
    for (element_id z = 0; z < m.size(); ++z) {
      auto row = m.row(z);
      if (std::all_of(row.begin(), row.end(), [z](element_id v) { return v == z; })) {
        return z;
      }
    }
    return std::nullopt;
  }

  bool is_idempotent(FiniteMonoid const& m) {
    for (element_id x = 0; x < m.size(); ++x) {
      if (m.mul(x, x) != x) {
        return false;
      }
    }
    return true;
  }

  ProductMonoid product_monoid(FiniteMonoid const& m1, FiniteMonoid const& m2, Limits const& limits) {
    std::size_t n1 = m1.size();
    std::size_t n2 = m2.size();
    if (n1 * n2 > limits.product_cap) {
      raise(errc::size_overflow,
            "product of sizes " + std::to_string(n1) + " and " + std::to_string(n2)
                + " exceeds the cap " + std::to_string(limits.product_cap));
    }
    std::size_t             n = n1 * n2;
    std::vector<element_id> table(n * n);
    for (element_id a = 0; a < n; ++a) {
      for (element_id b = 0; b < n; ++b) {
        table[a * n + b] = ProductMonoid::pair(n2, m1.mul(a / n2, b / n2), m2.mul(a % n2, b % n2));
      }
    }
    std::optional<element_id> zero;
    if (m1.has_zero() && m2.has_zero()) {
      zero = ProductMonoid::pair(n2, *m1.zero(), *m2.zero());
    }
    auto m = detail::make_monoid_unchecked(n, std::move(table), ProductMonoid::pair(n2, m1.one(), m2.one()), zero);
    std::vector<element_id> p1(n);
    std::vector<element_id> p2(n);
    for (element_id a = 0; a < n; ++a) {
      p1[a] = static_cast<element_id>(a / n2);
      p2[a] = static_cast<element_id>(a % n2);
    }
    return ProductMonoid{m, MonoidHom(m, m1, std::move(p1)), MonoidHom(m, m2, std::move(p2))};
  }

  FractionMonoid fraction_monoid(FiniteMonoid const& m, ElementSet const& filter) {
    if (filter.universe() != m.size()) {
      raise(errc::carrier_mismatch, "filter is not over this monoid");
    }
    if (!filter.contains(m.one())) {
      raise(errc::not_a_filter, "filter does not contain the identity", {m.one()});
    }
    auto fs = filter.members();
    for (auto f : fs) {
      for (auto g : fs) {
        if (!filter.contains(m.mul(f, g))) {
          raise(errc::not_a_filter, "filter is not closed under products", {f, g});
        }
      }
      for (element_id d = 0; d < m.size(); ++d) {
        if (!filter.contains(d) && divides(m, d, f)) {
          raise(errc::not_a_filter, "filter is not closed under divisors", {d, f});
        }
      }
    }
    // Pairs (a, fs[j]) in lexicographic (a, f) order since fs is ascending.
    std::size_t              k = fs.size();
    std::size_t              n = m.size();
    std::size_t              pairs = n * k;
    std::vector<std::size_t> cls(pairs, SIZE_MAX);
    std::vector<std::pair<element_id, element_id>> reps;
    auto equivalent = [&](element_id a, element_id f, element_id b, element_id g) {
      element_id ag = m.mul(a, g);
      element_id bf = m.mul(b, f);
      for (auto h : fs) {
        if (m.mul(ag, h) == m.mul(bf, h)) {
          return true;
        }
      }
      return false;
    };
    for (std::size_t p = 0; p < pairs; ++p) {
      if (cls[p] != SIZE_MAX) {
        continue;
      }
      std::size_t c  = reps.size();
      element_id  a  = static_cast<element_id>(p / k);
      element_id  f  = fs[p % k];
      reps.emplace_back(a, f);
      for (std::size_t q = p; q < pairs; ++q) {
        if (cls[q] == SIZE_MAX && equivalent(a, f, static_cast<element_id>(q / k), fs[q % k])) {
          cls[q] = c;
        }
      }
    }
    std::vector<std::size_t> index_of(n, SIZE_MAX);
    for (std::size_t j = 0; j < k; ++j) {
      index_of[fs[j]] = j;
    }
    auto class_of = [&](element_id a, element_id f) { return static_cast<element_id>(cls[a * k + index_of[f]]); };
    std::size_t             size = reps.size();
    std::vector<element_id> table(size * size);
    for (std::size_t x = 0; x < size; ++x) {
      for (std::size_t y = 0; y < size; ++y) {
        table[x * size + y] = class_of(m.mul(reps[x].first, reps[y].first), m.mul(reps[x].second, reps[y].second));
      }
    }
    std::optional<element_id> zero;
    if (m.has_zero()) {
      zero = class_of(*m.zero(), m.one());
    }
    auto                    q = validate_monoid(size, std::move(table), class_of(m.one(), m.one()), zero);
    std::vector<element_id> map(n);
    for (element_id a = 0; a < n; ++a) {
      map[a] = class_of(a, m.one());
    }
    return FractionMonoid{q, MonoidHom(m, q, std::move(map)), std::move(reps)};
  }

  PrincipalQuotient principal_quotient(FiniteMonoid const& m) {
    std::size_t                     n = m.size();
    std::map<ElementSet, element_id> seen;
    std::vector<ElementSet>         classes;
    std::vector<element_id>         map(n);
    for (element_id x = 0; x < n; ++x) {
      auto key = principal(m, x);
      auto it  = seen.find(key);
      if (it == seen.end()) {
        it = seen.emplace(key, static_cast<element_id>(classes.size())).first;
        classes.emplace_back(n);
      }
      map[x] = it->second;
      classes[it->second].insert(x);
    }
    std::size_t             size = classes.size();
    std::vector<element_id> table(size * size);
    for (std::size_t c = 0; c < size; ++c) {
      for (std::size_t d = 0; d < size; ++d) {
        element_id value = map[m.mul(classes[c].first(), classes[d].first())];
        classes[c].for_each([&](element_id x) {
          classes[d].for_each([&](element_id y) {
            if (map[m.mul(x, y)] != value) {
              raise(errc::property_violation, "principal quotient is not well defined", {x, y});
            }
          });
        });
        table[c * size + d] = value;
      }
    }
    std::optional<element_id> zero;
    if (m.has_zero()) {
      zero = map[*m.zero()];
    }
    auto q = validate_monoid(size, std::move(table), map[m.one()], zero);
    return PrincipalQuotient{q, MonoidHom(m, q, std::move(map)), std::move(classes)};
  }

  namespace {
    struct IsoSearch {
      FiniteMonoid const&     m;
      FiniteMonoid const&     n;
      std::vector<element_id> order;
      std::vector<element_id> phi;
      std::vector<bool>       used;
      std::vector<std::size_t> sig_m;
      std::vector<std::size_t> sig_n;

      bool consistent(element_id x) const {
        for (element_id y = 0; y < m.size(); ++y) {
          if (phi[y] == UINT32_MAX) {
            continue;
          }
          element_id xy = m.mul(x, y);
          if (phi[xy] != UINT32_MAX && phi[xy] != n.mul(phi[x], phi[y])) {
            return false;
          }
        }
        return true;
      }

      bool extend(std::size_t depth) {
        if (depth == order.size()) {
          return true;
        }
        element_id x = order[depth];
        for (element_id t = 0; t < n.size(); ++t) {
          if (used[t] || sig_m[x] != sig_n[t]) {
            continue;
          }
          phi[x]  = t;
          used[t] = true;
          if (consistent(x) && extend(depth + 1)) {
            return true;
          }
          phi[x]  = UINT32_MAX;
          used[t] = false;
        }
        return false;
      }
    };

    // Isomorphism-invariant data of an element: square idempotent, unit,
    // divisor count, orbit length of powers.
    std::vector<std::size_t> signatures(FiniteMonoid const& m) {
      auto                     u = units(m);
      std::vector<std::size_t> out(m.size());
      for (element_id x = 0; x < m.size(); ++x) {
        ElementSet  seen(m.size());
        element_id  p = x;
        std::size_t orbit = 0;
        while (!seen.contains(p)) {
          seen.insert(p);
          p = m.mul(p, x);
          ++orbit;
        }
        std::size_t sig = divisors_of(m, x).count();
        sig             = sig * 64 + orbit;
        sig             = sig * 2 + (m.mul(x, x) == x ? 1 : 0);
        sig             = sig * 2 + (u.contains(x) ? 1 : 0);
        out[x]          = sig;
      }
      return out;
    }
  }  // namespace

  std::optional<std::vector<element_id>> find_isomorphism(FiniteMonoid const& m, FiniteMonoid const& n) {
    if (m.size() != n.size()) {
      return std::nullopt;
    }
    IsoSearch s{m, n, {}, std::vector<element_id>(m.size(), UINT32_MAX), std::vector<bool>(n.size(), false),
                signatures(m), signatures(n)};
    auto a = s.sig_m;
    auto b = s.sig_n;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
      return std::nullopt;
    }
    if (s.sig_m[m.one()] != s.sig_n[n.one()]) {
      return std::nullopt;
    }
    s.phi[m.one()]  = n.one();
    s.used[n.one()] = true;
    for (element_id x = 0; x < m.size(); ++x) {
      if (x != m.one()) {
        s.order.push_back(x);
      }
    }
    if (!s.extend(0)) {
      return std::nullopt;
    }
    return s.phi;
  }

  namespace monoids {

    FiniteMonoid trivial() {
      return validate_monoid(1, {0}, 0, 0);
    }

    FiniteMonoid zmod_mul(std::size_t n) {
      std::vector<element_id> table(n * n);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          table[x * n + y] = static_cast<element_id>((x * y) % n);
        }
      }
      return validate_monoid(n, std::move(table), static_cast<element_id>(1 % n), 0);
    }

    FiniteMonoid cyclic_group(std::size_t n) {
      std::vector<element_id> table(n * n);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          table[x * n + y] = static_cast<element_id>((x + y) % n);
        }
      }
      return validate_monoid(n, std::move(table), 0);
    }

    FiniteMonoid chain(std::size_t k) {
      std::vector<element_id> table(k * k);
      for (std::size_t x = 0; x < k; ++x) {
        for (std::size_t y = 0; y < k; ++y) {
          table[x * k + y] = static_cast<element_id>(std::min(x, y));
        }
      }
      return validate_monoid(k, std::move(table), static_cast<element_id>(k - 1), 0);
    }

    FiniteMonoid powerset_meet(std::size_t n) {
      std::size_t             size = std::size_t{1} << n;
      std::vector<element_id> table(size * size);
      for (std::size_t x = 0; x < size; ++x) {
        for (std::size_t y = 0; y < size; ++y) {
          table[x * size + y] = static_cast<element_id>(x & y);
        }
      }
      return validate_monoid(size, std::move(table), static_cast<element_id>(size - 1), 0);
    }

    FiniteMonoid nilpotent(std::size_t k) {
      std::size_t             size = k + 1;
      std::vector<element_id> table(size * size);
      for (std::size_t x = 0; x < size; ++x) {
        for (std::size_t y = 0; y < size; ++y) {
          table[x * size + y] = static_cast<element_id>(std::min(x + y, k));
        }
      }
      return validate_monoid(size, std::move(table), 0, static_cast<element_id>(k));
    }

    FiniteMonoid truncated_free(std::size_t primes, std::size_t cap) {
      std::size_t base = cap + 1;
      std::size_t size = 1;
      for (std::size_t i = 0; i < primes; ++i) {
        size *= base;
      }
      std::vector<element_id> table(size * size);
      for (std::size_t x = 0; x < size; ++x) {
        for (std::size_t y = 0; y < size; ++y) {
          std::size_t a = x;
          std::size_t b = y;
          std::size_t out = 0;
          std::size_t scale = 1;
          for (std::size_t i = 0; i < primes; ++i) {
            out += std::min(a % base + b % base, cap) * scale;
            a /= base;
            b /= base;
            scale *= base;
          }
          table[x * size + y] = static_cast<element_id>(out);
        }
      }
      return validate_monoid(size, std::move(table), 0);
    }

  }  // namespace monoids

}  // namespace filt
