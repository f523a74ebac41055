#include "filt_cli/laws.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <set>
#include <thread>
#include <type_traits>

#include "filt/error.hpp"
#include "filt/factorial.hpp"
#include "filt/filter.hpp"
#include "filt/filtrum.hpp"
#include "filt/quadratic.hpp"
#include "filt/topo.hpp"

namespace filt::cli {

  namespace {
    template <typename T, std::size_t I = 0>
    constexpr std::size_t subject_index() {
      if constexpr (std::is_same_v<T, std::variant_alternative_t<I, Subject>>) {
        return I;
      } else {
        return subject_index<T, I + 1>();
      }
    }

    template <typename T, typename Fn>
    Law make(std::string id, std::string anchor, std::string suite, Fn fn) {
      return {std::move(id), std::move(anchor), std::move(suite), subject_index<T>(),
              [fn](Subject const& s, Limits const& limits) { return fn(std::get<T>(s), limits); }};
    }

    json set_json(ElementSet const& s) {
      return members(s);
    }

    json sets_json(std::vector<ElementSet> const& v) {
      json out = json::array();
      for (auto const& s : v) {
        out.push_back(set_json(s));
      }
      return out;
    }

    std::vector<ElementSet> filters_of(FiniteMonoid const& m, Limits const& limits) {
      return all_filters(m, FilterAlgorithm::closure, limits).filters();
    }

    bool has_proper_zero(FiniteMonoid const& m) {
      return m.zero() && *m.zero() != m.one();
    }

    ElementSet intersection(std::vector<ElementSet> const& family, ElementSet start) {
      for (auto const& f : family) {
        start &= f;
      }
      return start;
    }

    // ---- monoids and filters ------------------------------------------

    Verdict units_in_filters(FiniteMonoid const& m, Limits const& limits) {
      auto u = units(m);
      for (auto const& f : filters_of(m, limits)) {
        if (!u.is_subset_of(f)) {
          return Verdict::fail({{"filter", set_json(f)}, {"units", set_json(u)}});
        }
      }
      return Verdict::pass();
    }

    Verdict divides_preorder(FiniteMonoid const& m, Limits const&) {
      std::size_t       n = m.size();
      std::vector<bool> d(n * n);
      for (element_id g = 0; g < n; ++g) {
        for (element_id f = 0; f < n; ++f) {
          d[g * n + f] = divides(m, g, f);
        }
      }
      for (element_id a = 0; a < n; ++a) {
        if (!d[a * n + a]) {
          return Verdict::fail({{"not_reflexive", a}});
        }
        for (element_id b = 0; b < n; ++b) {
          for (element_id c = 0; c < n; ++c) {
            if (d[a * n + b] && d[b * n + c] && !d[a * n + c]) {
              return Verdict::fail({{"not_transitive", {a, b, c}}});
            }
          }
        }
      }
      return Verdict::pass();
    }

    Verdict fraction_at_units(FiniteMonoid const& m, Limits const&) {
      if (m.size() > 16) {
        return Verdict::skip("over size guard");
      }
      auto frac = fraction_monoid(m, units(m));
      if (!find_isomorphism(frac.monoid, m)) {
        return Verdict::fail({{"fraction_size", frac.monoid.size()}, {"size", m.size()}});
      }
      return Verdict::pass();
    }

    Verdict principal_quotient_law(FiniteMonoid const& m, Limits const& limits) {
      auto q  = principal_quotient(m);
      auto f1 = filters_of(m, limits).size();
      auto f2 = filters_of(q.monoid, limits).size();
      if (f1 != f2) {
        return Verdict::fail({{"filters", f1}, {"quotient_filters", f2}});
      }
      for (element_id f = 0; f < m.size(); ++f) {
        auto image = pushforward(q.projection, principal_filter(m, f));
        if (image != principal_filter(q.monoid, q.projection(f))) {
          return Verdict::fail({{"element", f}, {"image", set_json(image)}});
        }
      }
      return Verdict::pass();
    }

    Verdict product_projections(FiniteMonoid const& m, Limits const& limits) {
      auto z2 = monoids::zmod_mul(2);
      if (m.size() * 2 > limits.product_cap) {
        return Verdict::skip("over size guard");
      }
      auto p = product_monoid(m, z2, limits);
      // Re-validate the maps from scratch.
      MonoidHom first(p.monoid, m, p.first.map());
      MonoidHom second(p.monoid, z2, p.second.map());
      if (!first.is_surjective() || !second.is_surjective()) {
        return Verdict::fail({{"message", "projection not surjective"}});
      }
      return Verdict::pass();
    }

    Verdict oracle_equivalence(FiniteMonoid const& m, Limits const& limits) {
      if (m.size() > 16) {
        return Verdict::skip("over size guard");
      }
      auto oracle  = all_filters(m, FilterAlgorithm::oracle, limits);
      auto closure = all_filters(m, FilterAlgorithm::closure, limits);
      if (oracle.filters() != closure.filters()) {
        return Verdict::fail({{"oracle", sets_json(oracle.filters())}, {"closure", sets_json(closure.filters())}});
      }
      return Verdict::pass();
    }

    Verdict generate_is_intersection(FiniteMonoid const& m, Limits const& limits) {
      auto                    family = filters_of(m, limits);
      std::vector<ElementSet> subsets;
      if (m.size() <= 10) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.size()); ++mask) {
          subsets.push_back(ElementSet::from_mask(m.size(), mask));
        }
      } else {
        for (element_id a = 0; a < m.size(); ++a) {
          for (element_id b = a; b < m.size(); ++b) {
            subsets.push_back(ElementSet(m.size(), {a, b}));
          }
        }
      }
      for (auto const& s : subsets) {
        ElementSet meet = m.full_set();
        for (auto const& f : family) {
          if (s.is_subset_of(f)) {
            meet &= f;
          }
        }
        if (generate(m, s) != meet) {
          return Verdict::fail({{"set", set_json(s)}, {"generated", set_json(generate(m, s))}, {"intersection", set_json(meet)}});
        }
      }
      return Verdict::pass();
    }

    Verdict intersections_closed(FiniteMonoid const& m, Limits const& limits) {
      auto family = filters_of(m, limits);
      for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
          auto meet = family[i] & family[j];
          if (!is_filter(m, meet)) {
            return Verdict::fail({{"first", set_json(family[i])}, {"second", set_json(family[j])}});
          }
        }
      }
      return Verdict::pass();
    }

    Verdict ultrafilter_above_consistent(FiniteMonoid const& m, Limits const& limits) {
      if (!has_proper_zero(m)) {
        return Verdict::skip();
      }
      auto ultra = ultrafilters(m, limits);
      for (auto const& f : filters_of(m, limits)) {
        if (!is_consistent(m, f)) {
          continue;
        }
        bool above = std::any_of(ultra.begin(), ultra.end(), [&](ElementSet const& u) { return f.is_subset_of(u); });
        if (!above) {
          return Verdict::fail({{"filter", set_json(f)}});
        }
      }
      return Verdict::pass();
    }

    Verdict ultrafilter_criterion(FiniteMonoid const& m, Limits const& limits) {
      if (!has_proper_zero(m)) {
        return Verdict::skip();
      }
      std::vector<ElementSet> consistent;
      for (auto const& f : filters_of(m, limits)) {
        if (is_consistent(m, f)) {
          consistent.push_back(f);
        }
      }
      auto maximal = maximal_sets(consistent);
      for (auto const& f : consistent) {
        bool is_max = std::find(maximal.begin(), maximal.end(), f) != maximal.end();
        if (is_max != satisfies_ultrafilter_criterion(m, f)) {
          return Verdict::fail({{"filter", set_json(f)}, {"maximal", is_max}});
        }
      }
      if (ultrafilters(m, limits).filters() != maximal) {
        return Verdict::fail({{"ultrafilters", sets_json(ultrafilters(m, limits).filters())}, {"maximal", sets_json(maximal)}});
      }
      return Verdict::pass();
    }

    Verdict reduced_nonzerodivisors(FiniteMonoid const& m, Limits const& limits) {
      if (!has_proper_zero(m) || !is_reduced(m)) {
        return Verdict::skip();
      }
      auto ultra = ultrafilters(m, limits).filters();
      auto meet  = intersection(ultra, m.full_set());
      if (meet != nonzerodivisors(m)) {
        return Verdict::fail({{"nonzerodivisors", set_json(nonzerodivisors(m))}, {"intersection", set_json(meet)}});
      }
      return Verdict::pass();
    }

    Verdict maximal_avoiding(FiniteMonoid const& m, Limits const& limits) {
      if (!has_proper_zero(m)) {
        return Verdict::skip();
      }
      auto u      = units(m);
      auto family = filters_of(m, limits);
      if (maximal_filters_avoiding(m, u, ElementSet(m.size(), {*m.zero()}), limits).filters()
          != ultrafilters(m, limits).filters()) {
        return Verdict::fail({{"message", "maximal filters avoiding zero differ from the ultrafilters"}});
      }
      for (element_id x = 0; x < m.size(); ++x) {
        if (u.contains(x)) {
          continue;
        }
        ElementSet a(m.size());
        for (element_id y = 0; y < m.size(); ++y) {
          a.insert(m.mul(x, y));
        }
        std::vector<ElementSet> disjoint;
        for (auto const& f : family) {
          if (!f.intersects(a)) {
            disjoint.push_back(f);
          }
        }
        auto expected = maximal_sets(disjoint);
        auto got      = maximal_filters_avoiding(m, u, a, limits).filters();
        if (got != expected) {
          return Verdict::fail({{"pseudoideal", set_json(a)}, {"got", sets_json(got)}, {"expected", sets_json(expected)}});
        }
      }
      return Verdict::pass();
    }

    // ---- rings ----------------------------------------------------------

    ElementSet complement(ElementSet const& s) {
      return s.complement();
    }

    Verdict complement_primes(FiniteRing const& r, Limits const& limits) {
      for (auto const& f : filters_of(r.mult_monoid(), limits)) {
        auto d = filter_complement_decomposition(r, f, limits);
        if (!d.ok()) {
          return Verdict::fail({{"filter", set_json(f)}, {"covers", d.covers}, {"converse", d.converse},
                                {"converse_witness", d.converse_witness}});
        }
      }
      return Verdict::pass();
    }

    Verdict avoiding_minimal_primes(FiniteRing const& r, Limits const& limits) {
      if (r.is_zero_ring()) {
        return Verdict::skip();
      }
      auto const& m = r.mult_monoid();
      for (auto const& a : all_ideals(r, limits)) {
        if (a.contains(r.one())) {
          continue;
        }
        std::vector<ElementSet> got;
        for (auto const& f : maximal_filters_avoiding(m, units(m), a, limits)) {
          got.push_back(complement(f));
        }
        std::sort(got.begin(), got.end());
        auto expected = minimal_primes_over(r, a, limits);
        std::sort(expected.begin(), expected.end());
        if (got != expected) {
          return Verdict::fail({{"ideal", set_json(a)}, {"complements", sets_json(got)}, {"minimal_primes", sets_json(expected)}});
        }
      }
      return Verdict::pass();
    }

    Verdict ultrafilter_duality(FiniteRing const& r, Limits const& limits) {
      if (r.is_zero_ring()) {
        return Verdict::skip();
      }
      auto d = minimal_prime_ultrafilter_duality(r, limits);
      if (!d.ok) {
        return Verdict::fail({{"ultrafilters", sets_json(d.ultrafilters)}, {"minimal_primes", sets_json(d.minimal_primes)}});
      }
      return Verdict::pass();
    }

    Verdict boolean_correspondence(FiniteRing const& r, Limits const& limits) {
      if (!r.is_boolean()) {
        return Verdict::skip();
      }
      auto c = boolean_ideal_filter_correspondence(r, limits);
      if (!c.ok()) {
        return Verdict::fail({{"bijective", c.bijective}, {"criterion", c.criterion}, {"intersections", c.intersections}});
      }
      return Verdict::pass();
    }

    Verdict minimal_prime_points(FiniteRing const& r, Limits const& limits) {
      if (r.is_zero_ring()) {
        return Verdict::skip();
      }
      Filtrum     phi(r.mult_monoid(), limits);
      FiniteSpace space = filtrum_space(phi, limits);
      PointSet    primes(phi.size());
      PointSet    minimal(phi.size());
      for (auto const& p : prime_ideals(r, limits)) {
        primes.insert(static_cast<point_id>(phi.index_of(complement(p))));
      }
      for (auto const& p : minimal_primes(r, limits)) {
        minimal.insert(static_cast<point_id>(phi.index_of(complement(p))));
      }
      auto y = space.subspace(minimal);
      if (!y.is_hausdorff() || !y.is_totally_disconnected()) {
        return Verdict::fail({{"points", set_json(minimal)}, {"hausdorff", y.is_hausdorff()}});
      }
      auto closure = space.closure(minimal);
      if (!primes.is_subset_of(closure) || !phi.consistent_points().is_subset_of(closure)) {
        return Verdict::fail({{"points", set_json(minimal)}, {"closure", set_json(closure)}});
      }
      return Verdict::pass();
    }

    Verdict fix_modulo_prime(FiniteRing const& r, Limits const& limits) {
      auto primes = prime_ideals(r, limits);
      for (auto const& a : all_ideals(r, limits)) {
        for (auto const& p : primes) {
          bool fix = fix_modulo_ideal(r, a, complement(p));
          if (fix != a.is_subset_of(p)) {
            return Verdict::fail({{"ideal", set_json(a)}, {"prime", set_json(p)}, {"fix", fix}});
          }
        }
      }
      return Verdict::pass();
    }

    // ---- factorial model and Z[sqrt(-5)] --------------------------------

    using factorial::Exponents;

    Exponents random_vector(std::mt19937_64& rng, std::size_t n, std::uint64_t max) {
      std::uniform_int_distribution<std::uint64_t> dist(0, max);
      Exponents                                    out(n);
      for (auto& e : out) {
        e = dist(rng);
      }
      return out;
    }

    // g in F(f): g divides some power of f, i.e. g <= k f with k = max(g).
    bool divides_power(Exponents const& g, Exponents const& f) {
      std::uint64_t k = g.empty() ? 0 : *std::max_element(g.begin(), g.end());
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] > k * f[i]) {
          return false;
        }
      }
      return true;
    }

    Verdict prime_subset_bijection(std::monostate, Limits const& limits) {
      for (std::size_t p = 1; p <= 4; ++p) {
        auto model = factorial::check_truncated_model(p, 2, limits);
        if (!model.ok() || model.filter_count != (std::size_t{1} << p)) {
          return Verdict::fail({{"primes", p}, {"filters", model.filter_count}, {"bijective", model.bijective},
                                {"regenerates", model.regenerates}, {"supports_agree", model.supports_agree}});
        }
      }
      return Verdict::pass();
    }

    Verdict principal_union(std::monostate, Limits const&) {
      std::mt19937_64 rng(11);
      for (int trial = 0; trial < 200; ++trial) {
        auto f = random_vector(rng, 4, 3);
        auto g = random_vector(rng, 4, 3);
        if (factorial::principal_filter(factorial::product(f, g))
            != (factorial::principal_filter(f) | factorial::principal_filter(g))) {
          return Verdict::fail({{"f", f}, {"g", g}});
        }
      }
      return Verdict::pass();
    }

    Verdict intersection_membership(std::monostate, Limits const&) {
      std::mt19937_64 rng(12);
      for (int trial = 0; trial < 300; ++trial) {
        std::size_t                    k = 1 + static_cast<std::size_t>(trial % 3);
        std::vector<Exponents>         fs;
        std::vector<factorial::PrimeSubset> filters;
        for (std::size_t i = 0; i < k; ++i) {
          fs.push_back(random_vector(rng, 4, 2));
          filters.push_back(factorial::principal_filter(fs.back()));
        }
        auto meet = factorial::intersect_filters(filters);
        auto g    = random_vector(rng, 4, 2);
        bool all  = std::all_of(fs.begin(), fs.end(), [&](Exponents const& f) { return divides_power(g, f); });
        if (all != factorial::member(g, meet)) {
          return Verdict::fail({{"g", g}, {"generators", fs}});
        }
        auto gen = factorial::principal_generator(meet);
        if (factorial::member(g, factorial::principal_filter(gen)) != all || factorial::support(gen) != meet) {
          return Verdict::fail({{"g", g}, {"generator", gen}});
        }
      }
      return Verdict::pass();
    }

    Verdict coprime_units(std::monostate, Limits const&) {
      std::mt19937_64 rng(13);
      for (int trial = 0; trial < 300; ++trial) {
        auto f    = random_vector(rng, 4, 2);
        auto g    = random_vector(rng, 4, 2);
        auto meet = factorial::intersect_filters({factorial::principal_filter(f), factorial::principal_filter(g)});
        if (factorial::coprime(f, g) != meet.empty()) {
          return Verdict::fail({{"f", f}, {"g", g}});
        }
      }
      return Verdict::pass();
    }

    Verdict dickson(std::monostate, Limits const&) {
      std::mt19937_64                            rng(14);
      std::uniform_int_distribution<std::size_t> arity(1, 5);
      std::uniform_int_distribution<std::size_t> count(1, 30);
      for (int trial = 0; trial < 500; ++trial) {
        std::size_t            n = arity(rng);
        std::vector<Exponents> set;
        for (std::size_t i = count(rng); i > 0; --i) {
          set.push_back(random_vector(rng, n, 10));
        }
        if (factorial::minimal_elements_recursive(set) != factorial::minimal_elements_pairwise(set)) {
          return Verdict::fail({{"set", set}});
        }
      }
      return Verdict::pass();
    }

    using quadratic::QuadInt;

    json quad_json(QuadInt const& x) {
      return quadratic::to_string(x);
    }

    Verdict norm_multiplicative(std::monostate, Limits const&) {
      std::mt19937_64                    rng(15);
      std::uniform_int_distribution<int> coef(-100, 100);
      for (int trial = 0; trial < 1000; ++trial) {
        QuadInt x{coef(rng), coef(rng)};
        QuadInt y{coef(rng), coef(rng)};
        if (quadratic::norm(x * y) != quadratic::norm(x) * quadratic::norm(y)) {
          return Verdict::fail({{"x", quad_json(x)}, {"y", quad_json(y)}});
        }
      }
      return Verdict::pass();
    }

    Verdict divides_norm(std::monostate, Limits const&) {
      std::mt19937_64                    rng(16);
      std::uniform_int_distribution<int> coef(-6, 6);
      for (int trial = 0; trial < 1000; ++trial) {
        QuadInt g{coef(rng), coef(rng)};
        QuadInt h{coef(rng), coef(rng)};
        if (g.is_zero()) {
          continue;
        }
        QuadInt f = trial % 2 == 0 ? g * h : h;
        if (trial % 2 == 0 && !quadratic::divides(g, f)) {
          return Verdict::fail({{"g", quad_json(g)}, {"f", quad_json(f)}});
        }
        if (quadratic::divides(g, f) && quadratic::norm(f) % quadratic::norm(g) != 0) {
          return Verdict::fail({{"g", quad_json(g)}, {"f", quad_json(f)}});
        }
      }
      return Verdict::pass();
    }

    Verdict quadratic_identities(std::monostate, Limits const&) {
      QuadInt a{1, 1};
      QuadInt b{2, -1};
      QuadInt c{2, 1};
      if (!(quadratic::power(a, 2) == QuadInt{-4, 2})) {
        return Verdict::fail({{"square", quad_json(quadratic::power(a, 2))}});
      }
      if (!(b * c == QuadInt{9, 0})) {
        return Verdict::fail({{"product", quad_json(b * c)}});
      }
      if (!(quadratic::power(a, 2) == QuadInt{-2, 0} * b)) {
        return Verdict::fail({{"product", quad_json(QuadInt{-2, 0} * b)}});
      }
      return Verdict::pass();
    }

    Verdict member_certificates(std::monostate, Limits const&) {
      struct Case {
        QuadInt g, f, witness;
      };
      std::vector<Case> cases = {{{-4, 2}, {1, 1}, {1, 0}}, {{2, -1}, {3, 0}, {2, 1}}, {{2, -1}, {1, 1}, {-2, 0}}};
      for (auto const& c : cases) {
        auto r = quadratic::member_bounded(c.g, c.f, 4);
        if (!r.member || r.n != 2 || !(r.witness == c.witness) || !(c.g * r.witness == quadratic::power(c.f, r.n))) {
          return Verdict::fail({{"g", quad_json(c.g)}, {"f", quad_json(c.f)}, {"n", r.n}, {"witness", quad_json(r.witness)}});
        }
      }
      QuadInt power{1, 0};
      for (unsigned n = 1; n <= 20; ++n) {
        power = power * QuadInt{2, 0};
        if (!quadratic::norm_refutes(QuadInt{1, 1}, power) || quadratic::divides(QuadInt{1, 1}, power)) {
          return Verdict::fail({{"n", n}});
        }
      }
      return Verdict::pass();
    }

    // ---- filtrum --------------------------------------------------------

    bool small_filtrum(Filtrum const& phi, Limits const& limits) {
      return phi.size() <= limits.space_points_cap;
    }

    Verdict basis_units(FiniteMonoid const& m, Limits const& limits) {
      Filtrum phi(m, limits);
      auto    u = units(m);
      for (element_id f = 0; f < m.size(); ++f) {
        if (phi.basis_set(f).is_full() != u.contains(f)) {
          return Verdict::fail({{"element", f}});
        }
      }
      return Verdict::pass();
    }

    std::vector<PointSet> union_closure(std::vector<PointSet> basis, std::size_t n) {
      std::set<PointSet> seen{PointSet(n)};
      std::vector<PointSet> frontier{PointSet(n)};
      while (!frontier.empty()) {
        std::vector<PointSet> next;
        for (auto const& u : frontier) {
          for (auto const& b : basis) {
            auto v = u | b;
            if (seen.insert(v).second) {
              next.push_back(v);
            }
          }
        }
        frontier = std::move(next);
      }
      return {seen.begin(), seen.end()};
    }

    Verdict open_rule(FiniteMonoid const& m, Limits const& limits) {
      Filtrum phi(m, limits);
      if (phi.size() > 12) {
        return Verdict::skip("over size guard");
      }
      std::vector<PointSet> basis;
      for (element_id f = 0; f < m.size(); ++f) {
        basis.push_back(phi.basis_set(f));
      }
      auto unions = union_closure(basis, phi.size());
      auto opens  = filtrum_space(phi, limits).opens(limits);
      if (unions != opens) {
        return Verdict::fail({{"unions", sets_json(unions)}, {"opens", sets_json(opens)}});
      }
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << phi.size()); ++mask) {
        auto u = PointSet::from_mask(phi.size(), mask);
        if (phi.is_open(u) != std::binary_search(opens.begin(), opens.end(), u)) {
          return Verdict::fail({{"set", set_json(u)}, {"rule", phi.is_open(u)}});
        }
      }
      return Verdict::pass();
    }

    Verdict basis_order(FiniteMonoid const& m, Limits const& limits) {
      Filtrum phi(m, limits);
      for (element_id f = 0; f < m.size(); ++f) {
        for (element_id g = 0; g < m.size(); ++g) {
          bool lhs = phi.basis_set(f).is_subset_of(phi.basis_set(g));
          bool rhs = principal_filter(m, g).is_subset_of(principal_filter(m, f));
          if (lhs != rhs) {
            return Verdict::fail({{"f", f}, {"g", g}});
          }
        }
      }
      return Verdict::pass();
    }

    Verdict basis_cover(FiniteMonoid const& m, Limits const& limits) {
      Filtrum phi(m, limits);
      if (!small_filtrum(phi, limits)) {
        return Verdict::skip("over size guard");
      }
      auto opens = filtrum_space(phi, limits).opens(limits);
      for (element_id f = 0; f < m.size(); ++f) {
        auto     d = phi.basis_set(f);
        PointSet rest(phi.size());
        for (auto const& v : opens) {
          if (!d.is_subset_of(v)) {
            rest |= v;
          }
        }
        if (d.is_subset_of(rest)) {
          return Verdict::fail({{"element", f}, {"basis_set", set_json(d)}});
        }
      }
      return Verdict::pass();
    }

    Verdict basis_bottom(FiniteMonoid const& m, Limits const& limits) {
      Filtrum phi(m, limits);
      if (!small_filtrum(phi, limits)) {
        return Verdict::skip("over size guard");
      }
      std::set<PointSet> basis;
      for (element_id f = 0; f < m.size(); ++f) {
        basis.insert(phi.basis_set(f));
      }
      for (auto const& u : filtrum_space(phi, limits).opens(limits)) {
        bool bottom = false;
        u.for_each([&](point_id i) {
          bool below_all = true;
          u.for_each([&](point_id j) { below_all = below_all && phi.includes(i, j); });
          bottom = bottom || below_all;
        });
        if (bottom != basis.contains(u)) {
          return Verdict::fail({{"open", set_json(u)}, {"has_bottom", bottom}});
        }
      }
      return Verdict::pass();
    }

    Verdict t0_closed_point(FiniteMonoid const& m, Limits const& limits) {
      Filtrum phi(m, limits);
      if (!small_filtrum(phi, limits)) {
        return Verdict::skip("over size guard");
      }
      auto space = filtrum_space(phi, limits);
      if (!space.is_t0()) {
        return Verdict::fail({{"message", "filtrum is not T0"}});
      }
      PointSet closed_points(phi.size());
      for (point_id i = 0; i < phi.size(); ++i) {
        PointSet p(phi.size(), {i});
        if (space.is_closed(p)) {
          closed_points.insert(i);
        }
      }
      if (closed_points != PointSet(phi.size(), {static_cast<point_id>(phi.units_point())})) {
        return Verdict::fail({{"closed_points", set_json(closed_points)}, {"units_point", phi.units_point()}});
      }
      return Verdict::pass();
    }

    Verdict quasicompact_connected(FiniteMonoid const& m, Limits const& limits) {
      Filtrum phi(m, limits);
      if (!small_filtrum(phi, limits)) {
        return Verdict::skip("over size guard");
      }
      auto space = filtrum_space(phi, limits);
      if (!space.is_quasicompact() || !space.is_connected()) {
        return Verdict::fail({{"connected", space.is_connected()}});
      }
      return Verdict::pass();
    }

    Verdict consistent_closed(FiniteMonoid const& m, Limits const& limits) {
      if (!m.zero()) {
        return Verdict::skip();
      }
      Filtrum phi(m, limits);
      if (!small_filtrum(phi, limits)) {
        return Verdict::skip("over size guard");
      }
      auto space      = filtrum_space(phi, limits);
      auto consistent = phi.consistent_points();
      if (!space.is_closed(consistent)) {
        return Verdict::fail({{"consistent", set_json(consistent)}});
      }
      for (element_id f = 0; f < m.size(); ++f) {
        bool empty = !phi.basis_set(f).intersects(consistent);
        if (empty != is_nilpotent(m, f)) {
          return Verdict::fail({{"element", f}, {"empty", empty}});
        }
      }
      return Verdict::pass();
    }

    Verdict ultrafilters_hausdorff(FiniteMonoid const& m, Limits const& limits) {
      if (!has_proper_zero(m)) {
        return Verdict::skip();
      }
      Filtrum phi(m, limits);
      if (!small_filtrum(phi, limits)) {
        return Verdict::skip("over size guard");
      }
      auto space = filtrum_space(phi, limits);
      auto ultra = phi.ultrafilter_points();
      auto y     = space.subspace(ultra);
      if (!y.is_hausdorff() || !y.has_clopen_basis()) {
        return Verdict::fail({{"ultrafilters", set_json(ultra)}});
      }
      if (!phi.consistent_points().is_subset_of(space.closure(ultra))) {
        return Verdict::fail({{"ultrafilters", set_json(ultra)}, {"closure", set_json(space.closure(ultra))}});
      }
      return Verdict::pass();
    }

    Verdict principal_quotient_homeomorphic(FiniteMonoid const& m, Limits const& limits) {
      auto    q = principal_quotient(m);
      Filtrum source(m, limits);
      Filtrum target(q.monoid, limits);
      if (!small_filtrum(source, limits)) {
        return Verdict::skip("over size guard");
      }
      auto map = pullback_map(q.projection, source, target, limits);
      if (!map.is_homeomorphism()) {
        return Verdict::fail({{"map", map.map()}});
      }
      return Verdict::pass();
    }

    Verdict fraction_fixfilters(FiniteMonoid const& m, Limits const& limits) {
      if (m.size() > 12) {
        return Verdict::skip("over size guard");
      }
      auto family = filters_of(m, limits);
      for (auto const& f : family) {
        auto                    h = fraction_monoid(m, f).canonical;
        std::vector<ElementSet> above;
        for (auto const& g : family) {
          if (f.is_subset_of(g)) {
            above.push_back(g);
          }
        }
        auto fix = fixfilters(h, limits);
        if (fix.source.filters() != above) {
          return Verdict::fail({{"filter", set_json(f)}, {"fixfilters", sets_json(fix.source.filters())}});
        }
      }
      return Verdict::pass();
    }

    Verdict product_law(MonoidPair const& p, Limits const& limits) {
      auto cert = product_homeomorphism(p.first, p.second, limits);
      auto n1   = filters_of(p.first, limits).size();
      auto n2   = filters_of(p.second, limits).size();
      if (!cert.ok() || cert.map.size() != n1 * n2) {
        return Verdict::fail({{"product_filters", cert.map.size()}, {"first", n1}, {"second", n2},
                              {"bijective", cert.bijective}, {"splits", cert.splits}, {"homeomorphism", cert.homeomorphism}});
      }
      return Verdict::pass();
    }

    // ---- homs -------------------------------------------------------------

    Verdict round_trip_monotone(MonoidHom const& h, Limits const& limits) {
      for (auto const& f : filters_of(h.source(), limits)) {
        if (!f.is_subset_of(pullback(h, pushforward(h, f)))) {
          return Verdict::fail({{"source_filter", set_json(f)}});
        }
      }
      for (auto const& g : filters_of(h.target(), limits)) {
        if (!pushforward(h, pullback(h, g)).is_subset_of(g)) {
          return Verdict::fail({{"target_filter", set_json(g)}});
        }
      }
      return Verdict::pass();
    }

    Verdict fixfilter_homeomorphism(MonoidHom const& h, Limits const& limits) {
      Filtrum source(h.source(), limits);
      Filtrum target(h.target(), limits);
      if (!small_filtrum(source, limits) || !small_filtrum(target, limits)) {
        return Verdict::skip("over size guard");
      }
      auto     fix = fixfilters(h, limits);
      PointSet s(source.size());
      PointSet t(target.size());
      for (auto const& f : fix.source) {
        s.insert(static_cast<point_id>(source.index_of(f)));
      }
      for (auto const& g : fix.target) {
        t.insert(static_cast<point_id>(target.index_of(g)));
      }
      auto xs = filtrum_space(source, limits).subspace(s);
      auto ys = filtrum_space(target, limits).subspace(t);
      std::vector<point_id> map;
      for (auto j : fix.forward) {
        map.push_back(static_cast<point_id>(j));
      }
      ContinuousMap phi(xs, ys, map);
      if (!phi.is_homeomorphism()) {
        return Verdict::fail({{"forward", fix.forward}});
      }
      return Verdict::pass();
    }

    Verdict surjective_all_fix(MonoidHom const& h, Limits const& limits) {
      if (!h.is_surjective()) {
        return Verdict::skip();
      }
      auto fix = fixfilters(h, limits);
      auto all = filters_of(h.target(), limits);
      if (fix.target.filters() != all) {
        return Verdict::fail({{"fix", sets_json(fix.target.filters())}, {"all", sets_json(all)}});
      }
      return Verdict::pass();
    }

    Verdict principal_fix_suffices(MonoidHom const& h, Limits const& limits) {
      bool all = true;
      for (auto const& f : filters_of(h.source(), limits)) {
        all = all && pullback(h, pushforward(h, f)) == f;
      }
      bool principal = true;
      for (element_id f = 0; f < h.source().size(); ++f) {
        auto p    = principal_filter(h.source(), f);
        principal = principal && pullback(h, pushforward(h, p)) == p;
      }
      if (all != principal) {
        return Verdict::fail({{"all_fix", all}, {"principal_fix", principal}});
      }
      return Verdict::pass();
    }

    Verdict pullback_continuous(MonoidHom const& h, Limits const& limits) {
      Filtrum source(h.source(), limits);
      Filtrum target(h.target(), limits);
      if (!small_filtrum(source, limits) || !small_filtrum(target, limits)) {
        return Verdict::skip("over size guard");
      }
      auto map = pullback_map(h, source, target, limits);
      for (element_id f = 0; f < h.source().size(); ++f) {
        if (map.preimage(source.basis_set(f)) != target.basis_set(h(f))) {
          return Verdict::fail({{"element", f}});
        }
      }
      return Verdict::pass();
    }

    Verdict pushforward_functorial(MonoidHom const& h, Limits const& limits) {
      auto q = principal_quotient(h.target());
      auto c = compose(q.projection, h);
      for (auto const& f : filters_of(h.source(), limits)) {
        if (pushforward(c, f) != pushforward(q.projection, pushforward(h, f))) {
          return Verdict::fail({{"filter", set_json(f)}});
        }
      }
      return Verdict::pass();
    }

    // ---- spaces -----------------------------------------------------------

    bool small_space(FiniteSpace const& x) {
      return x.size() <= 6;
    }

    Verdict top_monoid_valid(FiniteSpace const& x, Limits const& limits) {
      auto m = top_monoid(x, limits);
      validate_monoid(m.size(), m.table(), m.one(), m.zero());
      return Verdict::pass();
    }

    Verdict quasicompact_converges(FiniteSpace const& x, Limits const& limits) {
      TopMonoid t(x, limits);
      for (auto const& f : quasicompact_filters(t, limits)) {
        auto     c = convergence_points(t, f);
        PointSet direct(x.size());
        for (point_id p = 0; p < x.size(); ++p) {
          if (point_filter(t, p).is_subset_of(f)) {
            direct.insert(p);
          }
        }
        if (c.empty() || c != direct) {
          return Verdict::fail({{"filter", set_json(f)}, {"convergence", set_json(c)}});
        }
      }
      return Verdict::pass();
    }

    Verdict irreducible_bijection(FiniteSpace const& x, Limits const& limits) {
      auto b = irreducible_filter_closed_set_bijection(TopMonoid(x, limits), limits);
      if (!b.ok) {
        return Verdict::fail({{"closed_sets", sets_json(b.closed_sets)}, {"filters", sets_json(b.filters)}});
      }
      return Verdict::pass();
    }

    Verdict consistent_quasicompact_irreducible(FiniteSpace const& x, Limits const& limits) {
      TopMonoid t(x, limits);
      for (auto const& f : quasicompact_filters(t, limits)) {
        if (is_consistent(t.monoid(), f) && !is_irreducible_filter(t, f)) {
          return Verdict::fail({{"filter", set_json(f)}});
        }
      }
      return Verdict::pass();
    }

    Verdict quasicompact_intersection(FiniteSpace const& x, Limits const& limits) {
      TopMonoid t(x, limits);
      auto      qc = quasicompact_filters(t, limits);
      for (auto const& f : filters_of(t.monoid(), limits)) {
        ElementSet meet = t.monoid().full_set();
        for (auto const& q : qc) {
          if (f.is_subset_of(q)) {
            meet &= q;
          }
        }
        if (meet != f) {
          return Verdict::fail({{"filter", set_json(f)}, {"intersection", set_json(meet)}});
        }
      }
      return Verdict::pass();
    }

    Verdict sober_neighbourhood_filters(FiniteSpace const& x, Limits const& limits) {
      if (!x.is_sober()) {
        return Verdict::skip();
      }
      TopMonoid t(x, limits);
      for (auto const& f : filters_of(t.monoid(), limits)) {
        PointSet s(x.size());
        for (point_id p = 0; p < x.size(); ++p) {
          if (f.is_subset_of(point_filter(t, p))) {
            s.insert(p);
          }
        }
        if (neighborhood_filter(t, s) != f) {
          return Verdict::fail({{"filter", set_json(f)}, {"points", set_json(s)}});
        }
      }
      return Verdict::pass();
    }

    Verdict embedding_dense(FiniteSpace const& x, Limits const& limits) {
      if (!small_space(x)) {
        return Verdict::skip("over size guard");
      }
      auto e = embed(TopMonoid(x, limits), limits);
      if (!e.continuous || !e.initial || !e.dense || e.injective != x.is_t0()) {
        return Verdict::fail({{"continuous", e.continuous}, {"initial", e.initial}, {"dense", e.dense},
                              {"injective", e.injective}, {"t0", x.is_t0()}});
      }
      return Verdict::pass();
    }

    Verdict embedding_filterhaft(FiniteSpace const& x, Limits const& limits) {
      if (!small_space(x)) {
        return Verdict::skip("over size guard");
      }
      TopMap phi(embedding_into_consistent(TopMonoid(x, limits), limits), limits);
      if (!is_filterhaft(phi)) {
        return Verdict::fail({{"map", phi.map().map()}});
      }
      return Verdict::pass();
    }

    Verdict sobrification(FiniteSpace const& x, Limits const& limits) {
      auto s = sobrify(x, limits);
      if (!s.lattice_isomorphism || !s.space.is_sober()) {
        return Verdict::fail({{"lattice_isomorphism", s.lattice_isomorphism}, {"sober", s.space.is_sober()}});
      }
      auto twice = sobrify(s.space, limits);
      if (!twice.unit.is_homeomorphism()) {
        return Verdict::fail({{"message", "sobrification is not idempotent"}, {"unit", twice.unit.map()}});
      }
      if (x.is_sober() && !s.unit.is_homeomorphism()) {
        return Verdict::fail({{"message", "sober space differs from its sobrification"}, {"unit", s.unit.map()}});
      }
      return Verdict::pass();
    }

    Verdict characterization_certificate(FiniteSpace const& x, Limits const& limits) {
      auto c = characterize_filtrum_space(x, limits);
      if (c.success != c.homeomorphism || (c.failed_condition == 0 && !c.success)) {
        return Verdict::fail({{"success", c.success}, {"condition", c.failed_condition}, {"message", c.message}});
      }
      return Verdict::pass();
    }

    Verdict characterize_round_trip(FiniteMonoid const& m, Limits const& limits) {
      Filtrum phi(m, limits);
      if (phi.size() > 12) {
        return Verdict::skip("over size guard");
      }
      auto c = characterize_filtrum_space(filtrum_space(phi, limits), limits);
      if (!c.success || !c.homeomorphism) {
        return Verdict::fail({{"condition", c.failed_condition}, {"witness", c.witness}, {"message", c.message}});
      }
      return Verdict::pass();
    }

    // ---- continuous maps ------------------------------------------------

    Verdict pushforward_neighbourhood(ContinuousMap const& map, Limits const& limits) {
      TopMap      phi(map, limits);
      auto const& x = map.source();
      if (x.size() > 8) {
        return Verdict::skip("over size guard");
      }
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << x.size()); ++mask) {
        auto s   = PointSet::from_mask(x.size(), mask);
        auto lhs = pushforward_filter(phi, neighborhood_filter(phi.source(), s));
        auto rhs = neighborhood_filter(phi.target(), map.image(s));
        if (lhs != rhs) {
          return Verdict::fail({{"points", set_json(s)}, {"pushforward", set_json(lhs)}, {"expected", set_json(rhs)}});
        }
      }
      return Verdict::pass();
    }

    Verdict pushforward_preserves(ContinuousMap const& map, Limits const& limits) {
      TopMap phi(map, limits);
      for (auto const& f : filters_of(phi.source().monoid(), limits)) {
        auto g = pushforward_filter(phi, f);
        if (!is_filter(phi.target().monoid(), g)) {
          return Verdict::fail({{"filter", set_json(f)}, {"message", "image is not a filter"}});
        }
        if (is_quasicompact_filter(phi.source(), f) && !is_quasicompact_filter(phi.target(), g)) {
          return Verdict::fail({{"filter", set_json(f)}, {"message", "quasicompactness lost"}});
        }
        if (is_irreducible_filter(phi.source(), f) && !is_irreducible_filter(phi.target(), g)) {
          return Verdict::fail({{"filter", set_json(f)}, {"message", "irreducibility lost"}});
        }
      }
      return Verdict::pass();
    }

    Verdict map_round_trip(ContinuousMap const& map, Limits const& limits) {
      TopMap phi(map, limits);
      for (auto const& f : filters_of(phi.source().monoid(), limits)) {
        if (!pullback_filter(phi, pushforward_filter(phi, f)).is_subset_of(f)) {
          return Verdict::fail({{"source_filter", set_json(f)}});
        }
      }
      for (auto const& g : filters_of(phi.target().monoid(), limits)) {
        if (!g.is_subset_of(pushforward_filter(phi, pullback_filter(phi, g)))) {
          return Verdict::fail({{"target_filter", set_json(g)}});
        }
      }
      return Verdict::pass();
    }

    Verdict fix_iff_initial(ContinuousMap const& map, Limits const& limits) {
      TopMap phi(map, limits);
      bool   all     = all_filters_fix(phi, limits);
      bool   points  = all_point_filters_fix(phi);
      bool   initial = initial_topology(phi);
      if (all != initial || points != initial) {
        return Verdict::fail({{"all_fix", all}, {"point_filters_fix", points}, {"initial", initial}});
      }
      return Verdict::pass();
    }

    Verdict closed_criterion(ContinuousMap const& map, Limits const& limits) {
      auto c = closed_map_criterion(TopMap(map, limits), limits);
      if (c.closed != c.criterion) {
        return Verdict::fail({{"closed", c.closed}, {"criterion", c.criterion}});
      }
      return Verdict::pass();
    }

    Verdict surjective_filterhaft(ContinuousMap const& map, Limits const& limits) {
      if (!map.is_surjective()) {
        return Verdict::skip();
      }
      if (!is_filterhaft(TopMap(map, limits))) {
        return Verdict::fail({{"map", map.map()}});
      }
      return Verdict::pass();
    }

    Verdict universal_extension_law(ContinuousMap const& map, Limits const& limits) {
      auto const& y = map.target();
      if (!map.is_embedding() || !y.is_t0() || !y.is_dense(map.image(map.source().full_set()))) {
        return Verdict::skip();
      }
      TopMap phi(map, limits);
      if (!is_filterhaft(phi)) {
        return Verdict::skip();
      }
      auto u = universal_extension(phi, limits);
      if (!u.psi_continuous || !u.psi_embedding || !u.restricts_to_embedding) {
        return Verdict::fail({{"psi", u.psi}, {"continuous", u.psi_continuous}, {"embedding", u.psi_embedding},
                              {"restricts", u.restricts_to_embedding}});
      }
      return Verdict::pass();
    }

    std::vector<Law> build() {
      std::vector<Law> v;
      using M = FiniteMonoid;
      using R = FiniteRing;
      using S = FiniteSpace;
      using H = MonoidHom;
      using C = ContinuousMap;
      using G = std::monostate;

      v.push_back(make<M>("monoid.units_in_every_filter", "the units lie in every filter", "ch1", units_in_filters));
      v.push_back(make<M>("monoid.divisibility_preorder", "divisibility is reflexive and transitive", "ch1", divides_preorder));
      v.push_back(make<M>("monoid.fraction_at_units", "localizing at the units gives back the monoid", "ch1", fraction_at_units));
      v.push_back(make<M>("monoid.principal_quotient",
                          "the principal quotient has as many filters and maps principal filters to principal filters",
                          "ch1", principal_quotient_law));
      v.push_back(make<M>("monoid.product_projections", "product projections are surjective homomorphisms", "ch1",
                          product_projections));
      v.push_back(make<M>("filter.oracle_equivalence", "closure enumeration finds exactly the filters of the subset scan",
                          "ch1", oracle_equivalence));
      v.push_back(make<M>("filter.generated_is_intersection",
                          "the generated filter is the intersection of all filters containing the set", "ch1",
                          generate_is_intersection));
      v.push_back(make<M>("filter.intersection_closed", "the intersection of two filters is a filter", "ch1",
                          intersections_closed));
      v.push_back(make<M>("filter.ultrafilter_above_consistent", "every consistent filter lies in an ultrafilter", "ch1",
                          ultrafilter_above_consistent));
      v.push_back(make<M>("filter.ultrafilter_criterion",
                          "a consistent filter is maximal iff each outsider g has g^n f = 0 for a member f", "ch1",
                          ultrafilter_criterion));
      v.push_back(make<M>("filter.reduced_nonzerodivisors",
                          "in a reduced monoid the nonzerodivisors are the intersection of the ultrafilters", "ch1",
                          reduced_nonzerodivisors));
      v.push_back(make<M>("filter.maximal_avoiding_pseudoideal",
                          "filters maximal outside a pseudoideal are found exactly by the avoidance search", "ch1",
                          maximal_avoiding));
      v.push_back(make<R>("ring.filter_complement_primes", "a subset is a filter iff its complement is a union of primes",
                          "ch1", complement_primes));
      v.push_back(make<R>("ring.avoiding_ideal_minimal_primes",
                          "filters maximal outside an ideal are the complements of the minimal primes over it", "ch1",
                          avoiding_minimal_primes));
      v.push_back(make<R>("ring.ultrafilter_minimal_prime_duality",
                          "ultrafilters are exactly the complements of the minimal primes", "ch1", ultrafilter_duality));
      v.push_back(make<R>("ring.boolean_ideal_filter_correspondence",
                          "in a boolean ring e -> 1-e matches ideals with filters, and ultrafilters hold exactly one of e, 1-e",
                          "ch1", boolean_correspondence));
      v.push_back(make<G>("factorial.prime_subset_bijection",
                          "filters of the free monoid correspond to subsets of the primes and are generated by their primes",
                          "ch1", prime_subset_bijection));
      v.push_back(make<G>("factorial.principal_of_product", "F(fg) is spanned by the supports of f and g", "ch1",
                          principal_union));
      v.push_back(make<G>("factorial.intersection_of_principal",
                          "g lies in every F(f_i) iff its support lies in the common support, which is principal", "ch1",
                          intersection_membership));
      v.push_back(make<G>("factorial.coprime_meet_units", "F(f) and F(g) meet in the units iff f and g are coprime", "ch1",
                          coprime_units));
      v.push_back(make<G>("factorial.minimal_elements",
                          "recursive projection and pairwise scan find the same minimal exponent vectors", "ch1", dickson));
      v.push_back(make<G>("quadratic.norm_multiplicative", "the norm on Z[sqrt(-5)] is multiplicative", "ch1",
                          norm_multiplicative));
      v.push_back(make<G>("quadratic.divisibility_divides_norm", "g | f implies norm(g) | norm(f)", "ch1", divides_norm));
      v.push_back(make<G>("quadratic.identities", "(1+sqrt(-5))^2 = -4+2sqrt(-5) = -2(2-sqrt(-5)) and 9 = (2-sqrt(-5))(2+sqrt(-5))",
                          "ch1", quadratic_identities));
      v.push_back(make<G>("quadratic.membership_certificates",
                          "bounded membership finds the n = 2 certificates, and norms rule out (1+sqrt(-5)) | 2^n", "ch1",
                          member_certificates));

      v.push_back(make<M>("filtrum.basis_full_iff_unit", "D(f) is the whole filtrum iff f is a unit", "ch2", basis_units));
      v.push_back(make<M>("filtrum.open_rule", "open sets are the unions of basis sets, decided by the upward-closure rule",
                          "ch2", open_rule));
      v.push_back(make<M>("filtrum.basis_order", "D(f) lies in D(g) iff F(g) lies in F(f)", "ch2", basis_order));
      v.push_back(make<M>("filtrum.basis_cover", "every open cover of D(f) has a single member covering it", "ch2",
                          basis_cover));
      v.push_back(make<M>("filtrum.basis_sets_have_bottom",
                          "an open set is a basis set iff it contains a filter included in all its members", "ch2",
                          basis_bottom));
      v.push_back(make<M>("filtrum.t0_unique_closed_point", "the filtrum is T0 and the units form its only closed point",
                          "ch2", t0_closed_point));
      v.push_back(make<M>("filtrum.quasicompact_connected", "the filtrum is quasicompact and connected", "ch2",
                          quasicompact_connected));
      v.push_back(make<M>("filtrum.consistent_closed",
                          "consistent filters form a closed set on which D(f) is empty iff f is nilpotent", "ch2",
                          consistent_closed));
      v.push_back(make<M>("filtrum.ultrafilters_hausdorff",
                          "ultrafilters form a Hausdorff subspace with clopen basis, dense among consistent filters", "ch2",
                          ultrafilters_hausdorff));
      v.push_back(make<M>("filtrum.principal_quotient_homeomorphic",
                          "the filtrum of the principal quotient is homeomorphic to the filtrum", "ch2",
                          principal_quotient_homeomorphic));
      v.push_back(make<M>("filtrum.fraction_fixfilters", "fixfilters of a localization at F are the filters containing F",
                          "ch2", fraction_fixfilters));
      v.push_back(make<MonoidPair>("filtrum.product",
                                   "the filtrum of a product is homeomorphic to the product of the filtra", "ch2",
                                   product_law));
      v.push_back(make<H>("hom.round_trip_monotone",
                          "pullback after pushforward grows a filter, pushforward after pullback shrinks one", "ch2",
                          round_trip_monotone));
      v.push_back(make<H>("hom.fixfilter_homeomorphism", "pushforward maps fixfilters homeomorphically onto fixfilters",
                          "ch2", fixfilter_homeomorphism));
      v.push_back(make<H>("hom.surjective_target_fix", "every target filter is fix along a surjective homomorphism",
                          "ch2", surjective_all_fix));
      v.push_back(make<H>("hom.principal_fix_suffices", "all filters are fix iff all principal filters are fix", "ch2",
                          principal_fix_suffices));
      v.push_back(make<H>("hom.pullback_continuous", "pullback is continuous with preimage of D(f) equal to D(h(f))",
                          "ch2", pullback_continuous));
      v.push_back(make<H>("hom.pushforward_functorial", "pushforward along a composite is the composite of pushforwards",
                          "ch2", pushforward_functorial));
      v.push_back(make<R>("ring.minimal_prime_points",
                          "minimal-prime complements form a dense, Hausdorff, totally disconnected subspace", "ch2",
                          minimal_prime_points));
      v.push_back(make<R>("ring.fix_modulo_ideal", "a prime complement is fix modulo an ideal iff the ideal lies in the prime",
                          "ch2", fix_modulo_prime));

      v.push_back(make<S>("top.monoid_valid", "open sets under intersection form a commutative monoid with zero", "ch3",
                          top_monoid_valid));
      v.push_back(make<S>("top.quasicompact_converges",
                          "every quasicompact filter converges, to exactly the points whose neighbourhoods it holds", "ch3",
                          quasicompact_converges));
      v.push_back(make<S>("top.irreducible_closed_sets",
                          "irreducible filters correspond to nonempty irreducible closed sets", "ch3", irreducible_bijection));
      v.push_back(make<S>("top.consistent_quasicompact_irreducible", "consistent quasicompact filters are irreducible",
                          "ch3", consistent_quasicompact_irreducible));
      v.push_back(make<S>("top.quasicompact_intersection",
                          "every filter is the intersection of the quasicompact filters containing it", "ch3",
                          quasicompact_intersection));
      v.push_back(make<S>("top.sober_neighbourhood_filters",
                          "on a sober space every filter is the neighbourhood filter of the points it converges to", "ch3",
                          sober_neighbourhood_filters));
      v.push_back(make<S>("top.embedding_dense",
                          "x -> U(x) is continuous, initial and dense among consistent filters, injective iff T0", "ch3",
                          embedding_dense));
      v.push_back(make<S>("top.embedding_filterhaft", "x -> U(x) into the consistent filters is filterhaft", "ch3",
                          embedding_filterhaft));
      v.push_back(make<S>("top.sobrification",
                          "the sobrification is sober, idempotent, lattice-isomorphic on opens, and trivial on sober spaces",
                          "ch3", sobrification));
      v.push_back(make<S>("top.characterization_certificate",
                          "a successful characterization carries a verified homeomorphism", "ch3",
                          characterization_certificate));
      v.push_back(make<M>("top.characterize_filtrum",
                          "the filtrum of a monoid is recognised as a filtrum space", "ch3", characterize_round_trip));
      v.push_back(make<C>("map.pushforward_neighbourhood", "the pushforward of U(T) is U(image of T)", "ch3",
                          pushforward_neighbourhood));
      v.push_back(make<C>("map.pushforward_preserves", "pushforward keeps filters quasicompact and irreducible", "ch3",
                          pushforward_preserves));
      v.push_back(make<C>("map.round_trip", "pullback after pushforward shrinks a filter, the other way round grows one",
                          "ch3", map_round_trip));
      v.push_back(make<C>("map.fix_iff_initial",
                          "all filters are fix iff all point filters are fix iff the source carries the initial topology",
                          "ch3", fix_iff_initial));
      v.push_back(make<C>("map.closed_criterion", "a map is closed iff the pullback of U(y) is U(preimage of y)", "ch3",
                          closed_criterion));
      v.push_back(make<C>("map.surjective_filterhaft", "surjective continuous maps are filterhaft", "ch3",
                          surjective_filterhaft));
      v.push_back(make<C>("map.universal_extension",
                          "for a dense filterhaft embedding into a T0 space, y -> pullback U(y) is an embedding extending x -> U(x)",
                          "ch3", universal_extension_law));
      return v;
    }
  }  // namespace

  std::vector<Law> const& laws() {
    static std::vector<Law> const registry = build();
    return registry;
  }

  std::vector<SuiteInstance> corpus_instances() {
    auto const&                c = corpus();
    std::vector<SuiteInstance> out;
    out.push_back({"builtin", std::monostate{}});
    for (auto const& [id, m] : c.monoids) {
      out.push_back({"monoid:" + id, m});
    }
    for (auto const& [id, r] : c.rings) {
      out.push_back({"ring:" + id, r});
    }
    for (auto const& [id, s] : c.spaces) {
      out.push_back({"space:" + id, s});
    }
    for (auto const& [id, h] : c.homs) {
      out.push_back({"hom:" + id, h});
    }
    for (auto const& [id, m] : c.maps) {
      out.push_back({"map:" + id, m});
    }
    for (auto const& [id, p] : c.pairs) {
      out.push_back({"pair:" + id, p});
    }
    return out;
  }

  std::vector<SuiteInstance> document_instances(std::string const& id, Document const& doc) {
    std::vector<SuiteInstance> out;
    std::visit(
        [&](auto const& value) {
          out.push_back({id, value});
          if constexpr (std::is_same_v<std::decay_t<decltype(value)>, FiniteRing>) {
            out.push_back({id + ":mult", value.mult_monoid()});
          }
        },
        doc.value);
    return out;
  }

  json axiom_failure_record(std::string const& instance, std::string const& error, std::string const& message,
                            std::vector<std::size_t> const& witness) {
    json record;
    record["law"]            = "document.axioms";
    record["anchor"]         = "the document satisfies the axioms of its kind";
    record["instance"]       = instance;
    record["status"]         = "fail";
    record["counterexample"] = {{"error", error}, {"message", message}, {"witness", witness}};
    return record;
  }

  SuiteResult run_suite(std::string const&                selection,
                        std::vector<SuiteInstance> const& instances,
                        unsigned                          jobs,
                        Limits const&                     limits) {
    if (selection != "all" && selection != "ch1" && selection != "ch2" && selection != "ch3") {
      raise(errc::shape_error, "unknown law set \"" + selection + "\"");
    }
    struct Task {
      Law const*           law;
      SuiteInstance const* instance;
    };
    std::vector<Task> tasks;
    for (auto const& law : laws()) {
      if (selection != "all" && law.suite != selection) {
        continue;
      }
      for (auto const& inst : instances) {
        if (inst.subject.index() == law.subject) {
          tasks.push_back({&law, &inst});
        }
      }
    }
    std::vector<Verdict>     verdicts(tasks.size());
    std::atomic<std::size_t> next{0};
    Limits                   inner = limits;
    inner.jobs                     = 1;
    auto worker                    = [&]() {
      for (std::size_t i = next++; i < tasks.size(); i = next++) {
        try {
          verdicts[i] = tasks[i].law->check(tasks[i].instance->subject, inner);
        } catch (error const& e) {
          if (e.code() == errc::cap_exceeded || e.code() == errc::size_overflow) {
            verdicts[i] = Verdict::skip(e.what());
          } else {
            verdicts[i] = Verdict::fail({{"error", std::string(to_string(e.code()))}, {"message", e.what()}, {"witness", e.witness()}});
          }
        } catch (std::exception const& e) {
          verdicts[i] = Verdict::fail({{"error", "exception"}, {"message", e.what()}});
        }
      }
    };
    unsigned                 n = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1))));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) {
      pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
      t.join();
    }

    SuiteResult out;
    json        records = json::array();
    std::size_t passed = 0, failed = 0, skipped = 0;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      auto const& v = verdicts[i];
      json record;
      record["law"]      = tasks[i].law->id;
      record["anchor"]   = tasks[i].law->anchor;
      record["instance"] = tasks[i].instance->id;
      if (v.status == Verdict::Status::skip) {
        record["status"] = "skip";
        record["reason"] = v.counterexample;
        ++skipped;
      } else if (v.status == Verdict::Status::pass) {
        record["status"] = "pass";
        ++passed;
      } else {
        record["status"]         = "fail";
        record["counterexample"] = v.counterexample;
        ++failed;
        out.all_passed = false;
      }
      records.push_back(std::move(record));
    }
    out.report["suite"]   = selection;
    out.report["records"] = std::move(records);
    out.report["summary"] = {{"total", passed + failed + skipped}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}};
    return out;
  }

}  // namespace filt::cli
