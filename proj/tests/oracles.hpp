#ifndef FILT_TESTS_ORACLES_HPP_
#define FILT_TESTS_ORACLES_HPP_

// Brute-force reference computations written straight from the
// definitions.  They work on plain tables and bitmasks and share no code
// with the library.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

  using Mask  = std::uint64_t;
  using Table = std::vector<std::vector<int>>;

  inline bool has(Mask s, int x) {
    return ((s >> x) & 1U) != 0;
  }

  inline Table zmod_mul(int n) {
    Table t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        t[a][b] = (a * b) % n;
      }
    }
    return t;
  }

  inline Table zmod_add(int n) {
    Table t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        t[a][b] = (a + b) % n;
      }
    }
    return t;
  }

  // g divides f: g h = f for some h.
  inline bool divides(Table const& t, int g, int f) {
    for (int h = 0; h < static_cast<int>(t.size()); ++h) {
      if (t[g][h] == f) {
        return true;
      }
    }
    return false;
  }

  inline bool is_filter(Table const& t, int one, Mask s) {
    int n = static_cast<int>(t.size());
    if (!has(s, one)) {
      return false;
    }
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (has(s, a) && has(s, b) && !has(s, t[a][b])) {
          return false;
        }
        // b divides a member a
        if (has(s, a) && divides(t, b, a) && !has(s, b)) {
          return false;
        }
      }
    }
    return true;
  }

  // Every filter, ascending as integers.
  inline std::vector<Mask> filters(Table const& t, int one) {
    std::vector<Mask> out;
    Mask              limit = Mask{1} << t.size();
    for (Mask s = 0; s < limit; ++s) {
      if (is_filter(t, one, s)) {
        out.push_back(s);
      }
    }
    return out;
  }

  inline std::vector<Mask> ultrafilters(Table const& t, int one, int zero) {
    std::vector<Mask> consistent;
    for (auto f : filters(t, one)) {
      if (!has(f, zero)) {
        consistent.push_back(f);
      }
    }
    std::vector<Mask> out;
    for (auto f : consistent) {
      bool maximal = std::none_of(consistent.begin(), consistent.end(),
                                  [&](Mask g) { return g != f && (f & g) == f; });
      if (maximal) {
        out.push_back(f);
      }
    }
    return out;
  }

  // Proper ideals of a ring whose complement is closed under products and
  // contains one.
  inline std::vector<Mask> prime_ideals(Table const& add, Table const& mul, int zero, int one) {
    int               n = static_cast<int>(add.size());
    std::vector<Mask> out;
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
      if (!has(s, zero) || has(s, one)) {
        continue;
      }
      bool ok = true;
      for (int a = 0; a < n && ok; ++a) {
        for (int b = 0; b < n && ok; ++b) {
          if (has(s, a) && has(s, b) && !has(s, add[a][b])) {
            ok = false;
          }
          if (has(s, a) && !has(s, mul[a][b])) {
            ok = false;
          }
          if (!has(s, a) && !has(s, b) && has(s, mul[a][b])) {
            ok = false;
          }
        }
      }
      // closure under negation follows from finiteness and addition
      if (ok) {
        out.push_back(s);
      }
    }
    return out;
  }

  // Opens of the topology with minimal neighbourhoods nbhd: sets containing
  // the neighbourhood of each of their points.
  inline std::vector<Mask> opens(std::vector<Mask> const& nbhd) {
    std::vector<Mask> out;
    int               n = static_cast<int>(nbhd.size());
    for (Mask u = 0; u < (Mask{1} << n); ++u) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) {
        ok = !has(u, x) || (nbhd[x] & ~u) == 0;
      }
      if (ok) {
        out.push_back(u);
      }
    }
    return out;
  }

  // Componentwise-minimal vectors, sorted, no duplicates.
  inline std::vector<std::vector<std::uint64_t>> minimal(std::vector<std::vector<std::uint64_t>> set) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    std::vector<std::vector<std::uint64_t>> out;
    for (auto const& a : set) {
      bool dominated = false;
      for (auto const& b : set) {
        if (b == a) {
          continue;
        }
        bool le = true;
        for (std::size_t i = 0; i < a.size(); ++i) {
          le = le && b[i] <= a[i];
        }
        dominated = dominated || le;
      }
      if (!dominated) {
        out.push_back(a);
      }
    }
    return out;
  }

}  // namespace oracle

#endif  // FILT_TESTS_ORACLES_HPP_
