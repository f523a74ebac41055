#include "filt_cli/corpus.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

#include "filt/error.hpp"
#include "filt/filter.hpp"
#include "filt/filtrum.hpp"
#include "filt/topo.hpp"

namespace filt::cli {

  namespace {
    using Matrix = std::vector<std::vector<bool>>;

    // Relations containing the diagonal, one per bitmask over the
    // off-diagonal pairs.
    Matrix relation(std::size_t n, std::uint32_t mask) {
      Matrix      leq(n, std::vector<bool>(n, false));
      std::size_t bit = 0;
      for (std::size_t i = 0; i < n; ++i) {
        leq[i][i] = true;
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j) {
            leq[i][j] = ((mask >> bit) & 1U) != 0;
            ++bit;
          }
        }
      }
      return leq;
    }

    bool transitive(Matrix const& r) {
      std::size_t n = r.size();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t k = 0; k < n && r[i][j]; ++k) {
            if (r[j][k] && !r[i][k]) {
              return false;
            }
          }
        }
      }
      return true;
    }

    bool antisymmetric(Matrix const& r) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        for (std::size_t j = i + 1; j < r.size(); ++j) {
          if (r[i][j] && r[j][i]) {
            return false;
          }
        }
      }
      return true;
    }

    std::uint64_t canonical_code(Matrix const& r) {
      std::size_t              n = r.size();
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::uint64_t best = UINT64_MAX;
      do {
        std::uint64_t code = 0;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            code = (code << 1U) | (r[perm[i]][perm[j]] ? 1U : 0U);
          }
        }
        best = std::min(best, code);
      } while (std::next_permutation(perm.begin(), perm.end()));
      return best;
    }

    template <typename T>
    void add(std::vector<Named<T>>& out, std::string id, T value) {
      out.push_back({std::move(id), std::move(value)});
    }

    std::string call(char const* name, std::size_t n) {
      return std::string(name) + "(" + std::to_string(n) + ")";
    }

    void build_monoids(Corpus& c) {
      auto& m = c.monoids;
      add(m, "trivial", monoids::trivial());
      for (std::size_t n = 2; n <= 12; ++n) {
        add(m, call("zmod_mul", n), monoids::zmod_mul(n));
      }
      for (std::size_t n = 2; n <= 5; ++n) {
        add(m, call("cyclic_group", n), monoids::cyclic_group(n));
      }
      for (std::size_t k = 2; k <= 5; ++k) {
        add(m, call("chain", k), monoids::chain(k));
      }
      for (std::size_t n = 1; n <= 3; ++n) {
        add(m, call("powerset_meet", n), monoids::powerset_meet(n));
      }
      for (std::size_t k = 1; k <= 4; ++k) {
        add(m, call("nilpotent", k), monoids::nilpotent(k));
      }
      add(m, "truncated_free(1,2)", monoids::truncated_free(1, 2));
      add(m, "truncated_free(2,1)", monoids::truncated_free(2, 1));
      add(m, "truncated_free(2,2)", monoids::truncated_free(2, 2));
      add(m, "truncated_free(3,1)", monoids::truncated_free(3, 1));
      add(m, "mult(f4)", rings::f4().mult_monoid());
      add(m, "mult(dual_numbers_z2)", rings::dual_numbers_z2().mult_monoid());
      add(m, "top(sierpinski)", top_monoid(spaces::sierpinski()));
      add(m, "top(discrete(2))", top_monoid(spaces::discrete(2)));
      add(m, "top(chain(3))", top_monoid(spaces::chain(3)));
      add(m, "zmod_mul(2)*zmod_mul(3)", product_monoid(monoids::zmod_mul(2), monoids::zmod_mul(3)).monoid);
      add(m, "zmod_mul(2)*zmod_mul(2)", product_monoid(monoids::zmod_mul(2), monoids::zmod_mul(2)).monoid);
      add(m, "chain(2)*nilpotent(2)", product_monoid(monoids::chain(2), monoids::nilpotent(2)).monoid);
      add(m, "zmod_mul(4)*cyclic_group(2)", product_monoid(monoids::zmod_mul(4), monoids::cyclic_group(2)).monoid);
      add(m, "zmod_mul(4)*zmod_mul(6)", product_monoid(monoids::zmod_mul(4), monoids::zmod_mul(6)).monoid);
      auto z6 = monoids::zmod_mul(6);
      add(m, "fraction(zmod_mul(6),{1,3,5})", fraction_monoid(z6, generate(z6, ElementSet(6, {3}))).monoid);
      auto z12 = monoids::zmod_mul(12);
      add(m, "fraction(zmod_mul(12),F(2))", fraction_monoid(z12, principal_filter(z12, 2)).monoid);
      add(m, "principal_quotient(zmod_mul(12))", principal_quotient(z12).monoid);
    }

    void build_rings(Corpus& c) {
      auto& r = c.rings;
      for (std::size_t n = 2; n <= 12; ++n) {
        add(r, call("zmod", n), rings::zmod(n));
      }
      for (std::size_t k = 1; k <= 3; ++k) {
        add(r, call("boolean", k), rings::boolean(k));
      }
      add(r, "f4", rings::f4());
      add(r, "dual_numbers_z2", rings::dual_numbers_z2());
      add(r, "zmod(2)*zmod(3)", product_ring(rings::zmod(2), rings::zmod(3)));
      add(r, "zmod(2)*zmod(4)", product_ring(rings::zmod(2), rings::zmod(4)));
      add(r, "zmod(3)*zmod(3)", product_ring(rings::zmod(3), rings::zmod(3)));
      add(r, "zmod(4)*zmod(3)", product_ring(rings::zmod(4), rings::zmod(3)));
      add(r, "zmod(2)*dual_numbers_z2", product_ring(rings::zmod(2), rings::dual_numbers_z2()));
      add(r, "zmod(2)*zmod(6)", product_ring(rings::zmod(2), rings::zmod(6)));
    }

    void build_spaces(Corpus& c) {
      auto& s = c.spaces;
      add(s, "sierpinski", spaces::sierpinski());
      add(s, "discrete2", spaces::discrete(2));
      add(s, "indiscrete2", spaces::indiscrete(2));
      for (std::size_t n = 1; n <= 5; ++n) {
        add(s, call("discrete", n), spaces::discrete(n));
        add(s, call("indiscrete", n), spaces::indiscrete(n));
        add(s, call("chain", n), spaces::chain(n));
      }
      for (std::size_t n = 1; n <= 4; ++n) {
        std::size_t i = 0;
        for (auto const& leq : partial_orders(n)) {
          add(s, "poset" + std::to_string(n) + "#" + std::to_string(i++), spaces::from_preorder(leq));
        }
      }
      for (std::size_t n = 2; n <= 4; ++n) {
        std::size_t i = 0;
        for (auto const& leq : preorders_up_to_iso(n)) {
          if (!antisymmetric(leq)) {
            add(s, "preorder" + std::to_string(n) + "#" + std::to_string(i), spaces::from_preorder(leq));
          }
          ++i;
        }
      }
      for (auto const& [id, m] : c.monoids) {
        Filtrum phi(m);
        if (phi.size() <= 12) {
          add(s, "filtrum(" + id + ")", filtrum_space(phi));
        }
      }
    }

    std::vector<FiniteMonoid> small_monoids() {
      return {monoids::trivial(),      monoids::zmod_mul(2), monoids::zmod_mul(3), monoids::zmod_mul(4),
              monoids::chain(2),       monoids::chain(3),    monoids::nilpotent(1), monoids::nilpotent(2),
              monoids::cyclic_group(2), monoids::cyclic_group(3), monoids::powerset_meet(2)};
    }

    std::vector<std::string> small_monoid_ids() {
      return {"trivial",  "zmod_mul(2)", "zmod_mul(3)", "zmod_mul(4)", "chain(2)", "chain(3)",
              "nilpotent(1)", "nilpotent(2)", "cyclic_group(2)", "cyclic_group(3)", "powerset_meet(2)"};
    }

    void build_homs(Corpus& c) {
      auto& h   = c.homs;
      auto  ms  = small_monoids();
      auto  ids = small_monoid_ids();
      for (std::size_t i = 0; i < ms.size(); ++i) {
        for (std::size_t j = 0; j < ms.size(); ++j) {
          std::size_t k = 0;
          for (auto& hom : all_homs(ms[i], ms[j])) {
            add(h, ids[i] + "->" + ids[j] + "#" + std::to_string(k++), std::move(hom));
          }
        }
      }
      auto quotient = [&](std::size_t n, std::size_t d) {
        auto r = rings::zmod(n);
        ElementSet a(n);
        for (std::size_t x = 0; x < n; x += d) {
          a.insert(static_cast<element_id>(x));
        }
        auto q = quotient_ring(r, a);
        add(h, "quotient(zmod(" + std::to_string(n) + ")->zmod(" + std::to_string(d) + "))", q.monoid_hom(r));
      };
      quotient(6, 3);
      quotient(6, 2);
      quotient(12, 4);
      quotient(12, 6);
      quotient(4, 2);
      quotient(8, 4);
      auto p = product_monoid(monoids::zmod_mul(4), monoids::zmod_mul(6));
      add(h, "first(zmod_mul(4)*zmod_mul(6))", p.first);
      add(h, "second(zmod_mul(4)*zmod_mul(6))", p.second);
      for (auto const& [id, m] : c.monoids) {
        if (m.size() <= 16) {
          add(h, "principal_quotient(" + id + ")", principal_quotient(m).projection);
        }
      }
      for (auto n : {6U, 12U}) {
        auto m = monoids::zmod_mul(n);
        for (auto const& f : all_filters(m)) {
          add(h, "fraction(zmod_mul(" + std::to_string(n) + ")," + filter_name(f) + ")", fraction_monoid(m, f).canonical);
        }
      }
      add(h, "units(zmod_mul(6))", MonoidHom(monoids::cyclic_group(2), monoids::zmod_mul(6), {1, 5}));
    }

    void build_maps(Corpus& c) {
      auto&                    maps = c.maps;
      std::vector<FiniteSpace> small;
      std::vector<std::string> ids;
      for (std::size_t n = 1; n <= 3; ++n) {
        std::size_t i = 0;
        for (auto const& leq : preorders_up_to_iso(n)) {
          small.push_back(spaces::from_preorder(leq));
          ids.push_back("preorder" + std::to_string(n) + "#" + std::to_string(i++));
        }
      }
      for (std::size_t i = 0; i < small.size(); ++i) {
        for (std::size_t j = 0; j < small.size(); ++j) {
          std::size_t k = 0;
          for (auto& phi : all_continuous_maps(small[i], small[j])) {
            add(maps, ids[i] + "->" + ids[j] + "#" + std::to_string(k++), std::move(phi));
          }
        }
      }
      auto s = spaces::sierpinski();
      add(maps, "open_point_inclusion", ContinuousMap(s.subspace(PointSet(2, {0})), s, {0}));
      add(maps, "closed_point_inclusion", ContinuousMap(s.subspace(PointSet(2, {1})), s, {1}));
      add(maps, "discrete2->indiscrete2", ContinuousMap(spaces::discrete(2), spaces::indiscrete(2), {0, 1}));
      add(maps, "discrete2->point", ContinuousMap(spaces::discrete(2), spaces::point(), {0, 0}));
      for (std::size_t i = 0; i < small.size(); ++i) {
        add(maps, "embed(" + ids[i] + ")", embedding_into_consistent(TopMonoid(small[i])));
      }
    }

    void build_pairs(Corpus& c) {
      auto ms  = small_monoids();
      auto ids = small_monoid_ids();
      ms.push_back(monoids::zmod_mul(6));
      ids.emplace_back("zmod_mul(6)");
      for (std::size_t i = 0; i < ms.size(); ++i) {
        for (std::size_t j = i; j < ms.size(); ++j) {
          add(c.pairs, ids[i] + "*" + ids[j], MonoidPair{ms[i], ms[j]});
        }
      }
    }
  }  // namespace

  std::vector<Matrix> partial_orders(std::size_t n) {
    std::vector<Matrix> out;
    std::uint32_t       masks = std::uint32_t{1} << (n * (n - 1));
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
      auto r = relation(n, mask);
      if (antisymmetric(r) && transitive(r)) {
        out.push_back(std::move(r));
      }
    }
    return out;
  }

  std::vector<Matrix> preorders_up_to_iso(std::size_t n) {
    std::vector<Matrix>     out;
    std::set<std::uint64_t> seen;
    std::uint32_t           masks = std::uint32_t{1} << (n * (n - 1));
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
      auto r = relation(n, mask);
      if (transitive(r) && seen.insert(canonical_code(r)).second) {
        out.push_back(std::move(r));
      }
    }
    return out;
  }

  std::vector<MonoidHom> all_homs(FiniteMonoid const& m, FiniteMonoid const& n) {
    std::vector<MonoidHom>  out;
    std::size_t             size = m.size();
    std::vector<element_id> map(size, 0);
    std::vector<bool>       set(size, false);
    map[m.one()] = n.one();
    set[m.one()] = true;
    // Consistency of every product whose factors and result are assigned.
    auto consistent = [&]() {
      for (element_id a = 0; a < size; ++a) {
        for (element_id b = 0; b < size && set[a]; ++b) {
          auto ab = m.mul(a, b);
          if (set[b] && set[ab] && map[ab] != n.mul(map[a], map[b])) {
            return false;
          }
        }
      }
      return true;
    };
    auto rec = [&](auto&& self, element_id x) -> void {
      if (x == size) {
        out.emplace_back(m, n, map);
        return;
      }
      if (set[x]) {
        self(self, x + 1);
        return;
      }
      for (element_id y = 0; y < n.size(); ++y) {
        map[x] = y;
        set[x] = true;
        if (consistent()) {
          self(self, x + 1);
        }
        set[x] = false;
      }
    };
    rec(rec, 0);
    return out;
  }

  std::vector<ContinuousMap> all_continuous_maps(FiniteSpace const& x, FiniteSpace const& y) {
    std::vector<ContinuousMap> out;
    std::size_t                total = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
      total *= y.size();
    }
    std::vector<point_id> map(x.size());
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (auto& p : map) {
        p = static_cast<point_id>(c % y.size());
        c /= y.size();
      }
      // Continuous iff monotone for the specialization preorder.
      bool monotone = true;
      for (point_id a = 0; a < x.size() && monotone; ++a) {
        for (point_id b = 0; b < x.size() && monotone; ++b) {
          if (x.specializes(a, b) && !y.specializes(map[a], map[b])) {
            monotone = false;
          }
        }
      }
      if (monotone) {
        out.emplace_back(x, y, map);
      }
    }
    return out;
  }

  Corpus const& corpus() {
    static Corpus const instance = [] {
      Corpus c;
      build_monoids(c);
      build_rings(c);
      build_spaces(c);
      build_homs(c);
      build_maps(c);
      build_pairs(c);
      return c;
    }();
    return instance;
  }

}  // namespace filt::cli
