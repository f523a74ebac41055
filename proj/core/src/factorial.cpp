#include "filt/factorial.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "filt/error.hpp"
#include "filt/filter.hpp"

namespace filt::factorial {

  namespace {
    void same_arity(std::size_t a, std::size_t b) {
      if (a != b) {
        raise(errc::arity_mismatch, "arity " + std::to_string(a) + " vs " + std::to_string(b), {a, b});
      }
    }

    bool leq(Exponents const& a, Exponents const& b) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
          return false;
        }
      }
      return true;
    }

    std::vector<Exponents> normalise(std::vector<Exponents> set) {
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
      return set;
    }

    Exponents drop(Exponents const& a, std::size_t i) {
      Exponents out;
      out.reserve(a.size() - 1);
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (j != i) {
          out.push_back(a[j]);
        }
      }
      return out;
    }

    // Input is sorted and duplicate-free.
    std::vector<Exponents> recurse(std::vector<Exponents> const& m) {
      std::size_t n = m.front().size();
      if (n == 0 || m.size() == 1) {
        return {m.front()};
      }
      if (n == 1) {
        return {m.front()};
      }
      std::vector<Exponents>   candidates;
      std::vector<std::uint64_t> bound(n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        std::map<Exponents, std::size_t> best;
        for (std::size_t k = 0; k < m.size(); ++k) {
          auto key = drop(m[k], i);
          auto it  = best.find(key);
          if (it == best.end() || m[k][i] < m[it->second][i]) {
            best[key] = k;
          }
        }
        std::vector<Exponents> projection;
        projection.reserve(best.size());
        for (auto const& [key, k] : best) {
          projection.push_back(key);
        }
        for (auto const& p : recurse(projection)) {
          auto const& z = m[best.at(p)];
          bound[i]      = std::max(bound[i], z[i]);
          candidates.push_back(z);
        }
      }
      // A minimal element whose projections are all non-minimal lies
      // strictly below every bound.
      for (auto const& z : m) {
        bool below = true;
        for (std::size_t i = 0; i < n && below; ++i) {
          below = z[i] < bound[i];
        }
        if (below) {
          candidates.push_back(z);
        }
      }
      return minimal_elements_pairwise(candidates);
    }
  }  // namespace

  PrimeSubset support(Exponents const& f) {
    PrimeSubset out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] > 0) {
        out.insert(static_cast<element_id>(i));
      }
    }
    return out;
  }

  PrimeSubset principal_filter(Exponents const& f) {
    return support(f);
  }

  bool member(Exponents const& g, PrimeSubset const& filter) {
    same_arity(g.size(), filter.universe());
    return support(g).is_subset_of(filter);
  }

  Exponents product(Exponents const& f, Exponents const& g) {
    same_arity(f.size(), g.size());
    Exponents out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      out[i] = f[i] + g[i];
    }
    return out;
  }

  Exponents principal_generator(PrimeSubset const& s) {
    Exponents out(s.universe(), 0);
    s.for_each([&](element_id i) { out[i] = 1; });
    return out;
  }

  PrimeSubset intersect_filters(std::vector<PrimeSubset> const& filters) {
    if (filters.empty()) {
      raise(errc::empty_list, "intersect_filters needs at least one filter");
    }
    PrimeSubset out = filters.front();
    for (auto const& f : filters) {
      same_arity(out.universe(), f.universe());
      out &= f;
    }
    return out;
  }

  bool coprime(Exponents const& f, Exponents const& g) {
    same_arity(f.size(), g.size());
    return !support(f).intersects(support(g));
  }

  std::vector<Exponents> minimal_elements_pairwise(std::vector<Exponents> const& set) {
    auto                   m = normalise(set);
    std::vector<Exponents> out;
    for (auto const& a : m) {
      bool dominated = std::any_of(m.begin(), m.end(), [&](Exponents const& b) { return b != a && leq(b, a); });
      if (!dominated) {
        out.push_back(a);
      }
    }
    return out;
  }

  std::vector<Exponents> minimal_elements_recursive(std::vector<Exponents> const& set) {
    if (set.empty()) {
      return {};
    }
    for (auto const& a : set) {
      same_arity(set.front().size(), a.size());
    }
    return normalise(recurse(normalise(set)));
  }

  std::vector<Exponents> minimal_elements(std::vector<Exponents> const& set) {
    auto fast  = minimal_elements_recursive(set);
    auto check = minimal_elements_pairwise(set);
    if (fast != check) {
      raise(errc::property_violation, "recursive and pairwise minimal elements disagree");
    }
    return fast;
  }

  element_id encode(Exponents const& f, std::size_t cap) {
    std::size_t id    = 0;
    std::size_t scale = 1;
    for (auto e : f) {
      id += std::min<std::size_t>(e, cap) * scale;
      scale *= cap + 1;
    }
    return static_cast<element_id>(id);
  }

  Exponents decode(element_id id, std::size_t primes, std::size_t cap) {
    Exponents out(primes);
    for (std::size_t i = 0; i < primes; ++i) {
      out[i] = id % (cap + 1);
      id /= static_cast<element_id>(cap + 1);
    }
    return out;
  }

  TruncatedModel check_truncated_model(std::size_t primes, std::size_t cap, Limits const& limits) {
    if (cap == 0) {
      raise(errc::bad_bound, "exponent cap must be positive");
    }
    TruncatedModel out{monoids::truncated_free(primes, cap), primes, cap};
    auto const&    m      = out.monoid;
    auto           family = all_filters(m, FilterAlgorithm::closure, limits);
    out.filter_count      = family.size();
    for (auto const& f : family) {
      if (is_consistent(m, f)) {
        ++out.consistent_count;
      }
    }
    std::vector<element_id> prime_ids;
    for (std::size_t i = 0; i < primes; ++i) {
      Exponents e(primes, 0);
      e[i] = 1;
      prime_ids.push_back(encode(e, cap));
    }
    std::vector<bool> seen(std::size_t{1} << primes, false);
    out.bijective      = family.size() == (std::size_t{1} << primes);
    out.regenerates    = true;
    out.supports_agree = true;
    for (auto const& f : family) {
      PrimeSubset s(primes);
      ElementSet  irreducibles(m.size());
      for (std::size_t i = 0; i < primes; ++i) {
        if (f.contains(prime_ids[i])) {
          s.insert(static_cast<element_id>(i));
          irreducibles.insert(prime_ids[i]);
        }
      }
      auto key = s.to_mask();
      if (seen[key]) {
        out.bijective = false;
      }
      seen[key] = true;
      if (generate(m, irreducibles) != f) {
        out.regenerates = false;
      }
      for (element_id g = 0; g < m.size(); ++g) {
        if (f.contains(g) != member(decode(g, primes, cap), s)) {
          out.supports_agree = false;
        }
      }
    }
    return out;
  }

}  // namespace filt::factorial
