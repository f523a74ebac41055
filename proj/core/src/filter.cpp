#include "filt/filter.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <thread>

#include "filt/error.hpp"

namespace filt {

  namespace {
    void check_carrier(FiniteMonoid const& m, ElementSet const& s) {
      if (s.universe() != m.size()) {
        raise(errc::carrier_mismatch,
              "set over " + std::to_string(s.universe()) + " ids used with a monoid of size "
                  + std::to_string(m.size()));
      }
    }

    // Elements g whose row meets `targets`, i.e. divisors of some target.
    ElementSet divisor_closure(FiniteMonoid const& m, ElementSet const& targets) {
      ElementSet out(m.size());
      for (element_id g = 0; g < m.size(); ++g) {
        for (auto v : m.row(g)) {
          if (targets.contains(v)) {
            out.insert(g);
            break;
          }
        }
      }
      return out;
    }

    // Per-element bit tables used by the subset scan (|M| <= 64).
    struct MaskTables {
      std::size_t                n = 0;
      std::uint64_t              one_bit = 0;
      std::vector<std::uint64_t> divisors;
      std::vector<element_id>    table;

      explicit MaskTables(FiniteMonoid const& m) : n(m.size()), divisors(m.size(), 0), table(m.table()) {
        one_bit = std::uint64_t{1} << m.one();
        for (element_id g = 0; g < n; ++g) {
          for (auto v : m.row(g)) {
            divisors[v] |= std::uint64_t{1} << g;
          }
        }
      }

      bool is_filter(std::uint64_t mask) const noexcept {
        if ((mask & one_bit) == 0) {
          return false;
        }
        for (std::uint64_t w = mask; w != 0; w &= w - 1) {
          auto f = static_cast<std::size_t>(__builtin_ctzll(w));
          if ((divisors[f] & ~mask) != 0) {
            return false;
          }
        }
        for (std::uint64_t w = mask; w != 0; w &= w - 1) {
          auto f = static_cast<std::size_t>(__builtin_ctzll(w));
          for (std::uint64_t v = w; v != 0; v &= v - 1) {
            auto g = static_cast<std::size_t>(__builtin_ctzll(v));
            if (((mask >> table[f * n + g]) & 1U) == 0) {
              return false;
            }
          }
        }
        return true;
      }
    };

    std::vector<ElementSet> scan_subsets(FiniteMonoid const& m, unsigned jobs) {
      MaskTables    tables(m);
      std::uint64_t total = std::uint64_t{1} << m.size();
      jobs                = std::max(1U, jobs);
      if (total < 4096) {
        jobs = 1;
      }
      std::vector<std::vector<std::uint64_t>> found(jobs);
      auto                                    work = [&](unsigned j) {
        std::uint64_t lo = total / jobs * j;
        std::uint64_t hi = j + 1 == jobs ? total : total / jobs * (j + 1);
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
          if (tables.is_filter(mask)) {
            found[j].push_back(mask);
          }
        }
      };
      if (jobs == 1) {
        work(0);
      } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) {
          pool.emplace_back(work, j);
        }
        for (auto& t : pool) {
          t.join();
        }
      }
      // Chunks are contiguous and ascending, so concatenation is sorted.
      std::vector<ElementSet> out;
      for (auto const& chunk : found) {
        for (auto mask : chunk) {
          out.push_back(ElementSet::from_mask(m.size(), mask));
        }
      }
      return out;
    }

    std::vector<ElementSet> closure_filters(FiniteMonoid const& m, ElementSet const& start) {
      std::set<ElementSet>   seen{start};
      std::deque<ElementSet> queue{start};
      while (!queue.empty()) {
        ElementSet f = std::move(queue.front());
        queue.pop_front();
        for (element_id x = 0; x < m.size(); ++x) {
          if (f.contains(x)) {
            continue;
          }
          ElementSet s = f;
          s.insert(x);
          auto g = generate(m, s);
          if (seen.insert(g).second) {
            queue.push_back(std::move(g));
          }
        }
      }
      return {seen.begin(), seen.end()};
    }

    bool power_times_member_in(FiniteMonoid const& m, ElementSet const& f, element_id g, ElementSet const& target) {
      element_id p = g;
      for (std::size_t n = 1; n <= m.size(); ++n) {
        bool hit = false;
        f.for_each([&](element_id x) {
          if (!hit && target.contains(m.mul(p, x))) {
            hit = true;
          }
        });
        if (hit) {
          return true;
        }
        p = m.mul(p, g);
      }
      return false;
    }
  }  // namespace

  FilterCheck check_filter(FiniteMonoid const& m, ElementSet const& s) {
    check_carrier(m, s);
    if (!s.contains(m.one())) {
      return {1, {m.one()}, "identity " + std::to_string(m.one()) + " is missing"};
    }
    auto members = s.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i; j < members.size(); ++j) {
        element_id p = m.mul(members[i], members[j]);
        if (!s.contains(p)) {
          return {2,
                  {members[i], members[j], p},
                  "product of " + std::to_string(members[i]) + " and " + std::to_string(members[j]) + " is "
                      + std::to_string(p) + ", not a member"};
        }
      }
    }
    for (auto f : members) {
      for (element_id g = 0; g < m.size(); ++g) {
        if (!s.contains(g)) {
          auto row = m.row(g);
          if (std::find(row.begin(), row.end(), f) != row.end()) {
            return {3, {g, f}, std::to_string(g) + " divides " + std::to_string(f) + " but is not a member"};
          }
        }
      }
    }
    return {};
  }

  bool is_filter(FiniteMonoid const& m, ElementSet const& s) {
    return static_cast<bool>(check_filter(m, s));
  }

  Filter::Filter(FiniteMonoid carrier, ElementSet members) : _carrier(std::move(carrier)), _members(std::move(members)) {
    auto check = check_filter(_carrier, _members);
    if (!check) {
      std::vector<std::size_t> witness(check.witness.begin(), check.witness.end());
      raise(errc::not_a_filter, "axiom " + std::to_string(check.axiom) + ": " + check.message, witness);
    }
  }

  FilterFamily::FilterFamily(FiniteMonoid carrier, std::vector<ElementSet> filters)
      : _carrier(std::move(carrier)), _filters(std::move(filters)) {
    std::sort(_filters.begin(), _filters.end());
    _filters.erase(std::unique(_filters.begin(), _filters.end()), _filters.end());
  }

  std::optional<std::size_t> FilterFamily::index_of(ElementSet const& f) const {
    auto it = std::lower_bound(_filters.begin(), _filters.end(), f);
    if (it == _filters.end() || *it != f) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _filters.begin());
  }

  ElementSet generate(FiniteMonoid const& m, ElementSet const& s) {
    check_carrier(m, s);
    // Multiplicative closure of s and one.
    ElementSet              closed(m.size());
    std::vector<element_id> stack{m.one()};
    closed.insert(m.one());
    auto gens = s.members();
    while (!stack.empty()) {
      element_id x = stack.back();
      stack.pop_back();
      for (auto g : gens) {
        element_id y = m.mul(x, g);
        if (!closed.contains(y)) {
          closed.insert(y);
          stack.push_back(y);
        }
      }
    }
    return divisor_closure(m, closed);
  }

  ElementSet principal_filter(FiniteMonoid const& m, element_id f) {
    if (f >= m.size()) {
      raise(errc::index_out_of_range, "element " + std::to_string(f) + " out of range", {f});
    }
    return generate(m, ElementSet(m.size(), {f}));
  }

  ElementSet join(FiniteMonoid const& m, ElementSet const& f, ElementSet const& g) {
    return generate(m, f | g);
  }

  FilterFamily all_filters(FiniteMonoid const& m, FilterAlgorithm algorithm, Limits const& limits) {
    if (algorithm == FilterAlgorithm::oracle) {
      std::size_t cap = std::min<std::size_t>(limits.enumeration_cap, 40);
      if (m.size() > cap) {
        raise(errc::cap_exceeded,
              "subset scan needs |M| <= " + std::to_string(cap) + ", got " + std::to_string(m.size()));
      }
      return FilterFamily(m, scan_subsets(m, limits.jobs));
    }
    if (m.size() > limits.closure_cap) {
      raise(errc::cap_exceeded,
            "filter enumeration needs |M| <= " + std::to_string(limits.closure_cap) + ", got "
                + std::to_string(m.size()));
    }
    return FilterFamily(m, closure_filters(m, units(m)));
  }

  bool is_consistent(FiniteMonoid const& m, ElementSet const& f) {
    check_carrier(m, f);
    return !m.has_zero() || !f.contains(*m.zero());
  }

  bool satisfies_ultrafilter_criterion(FiniteMonoid const& m, ElementSet const& f) {
    if (!m.has_zero()) {
      raise(errc::no_zero_element, "the ultrafilter criterion needs a declared zero");
    }
    return satisfies_avoidance_criterion(m, f, ElementSet(m.size(), {*m.zero()}));
  }

  FilterFamily ultrafilters(FiniteMonoid const& m, Limits const& limits) {
    if (!m.has_zero()) {
      raise(errc::no_zero_element, "ultrafilters need a declared zero");
    }
    if (*m.zero() == m.one()) {
      raise(errc::zero_equals_one, "the trivial monoid with 0 = 1 has no consistent filter");
    }
    auto                    all = all_filters(m, FilterAlgorithm::closure, limits);
    std::vector<ElementSet> consistent;
    for (auto const& f : all) {
      if (is_consistent(m, f)) {
        consistent.push_back(f);
      }
    }
    auto maximal = maximal_sets(consistent);
    for (auto const& f : consistent) {
      bool is_max = std::find(maximal.begin(), maximal.end(), f) != maximal.end();
      if (is_max != satisfies_ultrafilter_criterion(m, f)) {
        auto ids = f.members();
        raise(errc::property_violation,
              "ultrafilter criterion disagrees with maximality for " + f.to_string(),
              std::vector<std::size_t>(ids.begin(), ids.end()));
      }
    }
    return FilterFamily(m, std::move(maximal));
  }

  bool is_multiplicatively_closed(FiniteMonoid const& m, ElementSet const& s) {
    check_carrier(m, s);
    auto members = s.members();
    for (auto x : members) {
      for (auto y : members) {
        if (!s.contains(m.mul(x, y))) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_pseudoideal(FiniteMonoid const& m, ElementSet const& a) {
    check_carrier(m, a);
    bool ok = true;
    a.for_each([&](element_id x) {
      for (auto v : m.row(x)) {
        if (!a.contains(v)) {
          ok = false;
        }
      }
    });
    return ok;
  }

  bool satisfies_avoidance_criterion(FiniteMonoid const& m, ElementSet const& f, ElementSet const& a) {
    check_carrier(m, f);
    check_carrier(m, a);
    for (element_id g = 0; g < m.size(); ++g) {
      if (!f.contains(g) && !power_times_member_in(m, f, g, a)) {
        return false;
      }
    }
    return true;
  }

  FilterFamily maximal_filters_avoiding(FiniteMonoid const& m,
                                        ElementSet const&   s,
                                        ElementSet const&   a,
                                        Limits const&       limits) {
    check_carrier(m, s);
    check_carrier(m, a);
    if (!is_multiplicatively_closed(m, s)) {
      raise(errc::not_multiplicatively_closed, "S is not closed under products");
    }
    if (!is_pseudoideal(m, a)) {
      raise(errc::not_pseudoideal, "a is not closed under multiplication by monoid elements");
    }
    if (s.intersects(a)) {
      auto both = (s & a).members();
      raise(errc::not_disjoint, "S and a intersect", std::vector<std::size_t>(both.begin(), both.end()));
    }
    auto                    all = all_filters(m, FilterAlgorithm::closure, limits);
    std::vector<ElementSet> candidates;
    for (auto const& f : all) {
      if (s.is_subset_of(f) && !f.intersects(a)) {
        candidates.push_back(f);
      }
    }
    auto maximal = maximal_sets(candidates);
    for (auto const& f : maximal) {
      if (!satisfies_avoidance_criterion(m, f, a)) {
        raise(errc::property_violation, "maximal filter " + f.to_string() + " fails the avoidance criterion");
      }
    }
    return FilterFamily(m, std::move(maximal));
  }

  std::vector<ElementSet> minimal_sets(std::vector<ElementSet> const& family) {
    std::vector<ElementSet> out;
    for (auto const& f : family) {
      bool minimal = std::none_of(family.begin(), family.end(), [&](ElementSet const& g) {
        return g != f && g.is_subset_of(f);
      });
      if (minimal) {
        out.push_back(f);
      }
    }
    return out;
  }

  std::vector<ElementSet> maximal_sets(std::vector<ElementSet> const& family) {
    std::vector<ElementSet> out;
    for (auto const& f : family) {
      bool maximal = std::none_of(family.begin(), family.end(), [&](ElementSet const& g) {
        return g != f && f.is_subset_of(g);
      });
      if (maximal) {
        out.push_back(f);
      }
    }
    return out;
  }

}  // namespace filt
