#include "filt_cli/commands.hpp"

#include <functional>
#include <sstream>

#include "filt/error.hpp"
#include "filt/filter.hpp"
#include "filt/filtrum.hpp"
#include "filt/topo.hpp"
#include "filt_cli/documents.hpp"
#include "filt_cli/laws.hpp"

namespace filt::cli {

  namespace {
    int exit_for(errc code) {
      switch (code) {
        case errc::cap_exceeded:
        case errc::size_overflow:
          return exit_cap;
        case errc::property_violation:
          return exit_violation;
        default:
          return exit_invalid;
      }
    }

    Outcome guarded(std::function<Outcome()> const& body) {
      try {
        return body();
      } catch (error const& e) {
        json diag;
        diag["error"]   = std::string(to_string(e.code()));
        diag["message"] = e.what();
        diag["witness"] = e.witness();
        return {exit_for(e.code()), {}, diag.dump() + "\n"};
      }
    }

    Outcome emit(json const& doc) {
      return {exit_ok, doc.dump(2) + "\n", {}};
    }

    // DOT string literal.
    std::string quoted(std::string const& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out + "\"";
    }

    bool is_axiom_failure(errc code) {
      switch (code) {
        case errc::non_associative:
        case errc::non_commutative:
        case errc::bad_identity:
        case errc::bad_zero:
        case errc::not_a_ring:
        case errc::not_a_homomorphism:
        case errc::not_continuous:
        case errc::not_closed_under_ops:
          return true;
        default:
          return false;
      }
    }
  }  // namespace

  Outcome cmd_filters(std::string const& file, Limits const& limits) {
    return guarded([&] {
      auto m      = as_monoid(load_file(file));
      auto family = all_filters(m, FilterAlgorithm::closure, limits);
      std::vector<ElementSet> ultra;
      if (m.zero() && *m.zero() != m.one()) {
        ultra = ultrafilters(m, limits).filters();
      }
      json list = json::array();
      for (std::size_t i = 0; i < family.size(); ++i) {
        auto const& f = family[i];
        json        entry;
        entry["id"]          = i;
        entry["members"]     = members(f);
        entry["bits"]        = f.to_bits();
        entry["consistent"]  = is_consistent(m, f);
        entry["ultrafilter"] = std::find(ultra.begin(), ultra.end(), f) != ultra.end();
        list.push_back(std::move(entry));
      }
      json doc;
      doc["kind"]    = "filters";
      doc["size"]    = m.size();
      doc["count"]   = family.size();
      doc["filters"] = std::move(list);
      return emit(doc);
    });
  }

  Outcome cmd_filtrum(std::string const& file, std::string const& format, Limits const& limits) {
    return guarded([&]() -> Outcome {
      if (format != "dot" && format != "json") {
        raise(errc::shape_error, "unknown format \"" + format + "\"");
      }
      auto    m = as_monoid(load_file(file));
      Filtrum phi(m, limits);
      auto    n = phi.size();
      if (format == "dot") {
        std::ostringstream out;
        out << "digraph filtrum {\n  rankdir=BT;\n  node [shape=ellipse];\n";
        for (std::size_t i = 0; i < n; ++i) {
          out << "  n" << i << " [label=" << quoted(filter_name(phi[i]));
          if (i == phi.units_point()) {
            out << ", shape=doublecircle";
          }
          out << "];\n";
        }
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !phi.includes(i, j)) {
              continue;
            }
            bool cover = true;
            for (std::size_t k = 0; k < n && cover; ++k) {
              cover = k == i || k == j || !(phi.includes(i, k) && phi.includes(k, j));
            }
            if (cover) {
              out << "  n" << i << " -> n" << j << ";\n";
            }
          }
        }
        out << "}\n";
        return {exit_ok, out.str(), {}};
      }
      auto consistent = phi.consistent_points();
      json points     = json::array();
      for (std::size_t i = 0; i < n; ++i) {
        points.push_back({{"id", i}, {"members", members(phi[i])}, {"consistent", consistent.contains(static_cast<point_id>(i))}});
      }
      json basis = json::array();
      for (element_id f = 0; f < m.size(); ++f) {
        basis.push_back({{"element", f}, {"points", members(phi.basis_set(f))}});
      }
      json opens = nullptr;
      try {
        opens = filtrum_space(phi, limits).opens(limits).size();
      } catch (error const& e) {
        if (e.code() != errc::cap_exceeded) {
          throw;
        }
      }
      json doc;
      doc["kind"]         = "filtrum";
      doc["points"]       = std::move(points);
      doc["closed_point"] = phi.units_point();
      doc["basis"]        = std::move(basis);
      doc["open_sets"]    = opens;
      return emit(doc);
    });
  }

  Outcome cmd_fixfilters(std::string const& file, Limits const& limits) {
    return guarded([&] {
      auto doc = load_file(file);
      auto hom = std::get_if<MonoidHom>(&doc.value);
      if (hom == nullptr) {
        raise(errc::type_mismatch, "fixfilters needs a monoid_hom document, got " + doc.kind);
      }
      auto fix  = fixfilters(*hom, limits);
      auto side = [&](FiniteMonoid const& m, FilterFamily const& fixed) {
        auto family = all_filters(m, FilterAlgorithm::closure, limits);
        json list   = json::array();
        for (auto const& f : family) {
          list.push_back({{"members", members(f)}, {"fix", fixed.contains(f)}});
        }
        return json{{"filters", std::move(list)}, {"fix_count", fixed.size()}, {"all_fix", fixed.size() == family.size()}};
      };
      json pairs = json::array();
      for (std::size_t i = 0; i < fix.source.size(); ++i) {
        pairs.push_back({{"source", members(fix.source[i])}, {"target", members(fix.target[fix.forward[i]])}});
      }
      json out;
      out["kind"]      = "fixfilters";
      out["source"]    = side(hom->source(), fix.source);
      out["target"]    = side(hom->target(), fix.target);
      out["bijection"] = std::move(pairs);
      return emit(out);
    });
  }

  Outcome cmd_characterize(std::string const& file, Limits const& limits) {
    return guarded([&] {
      auto doc = load_file(file);
      auto x   = std::get_if<FiniteSpace>(&doc.value);
      if (x == nullptr) {
        raise(errc::type_mismatch, "characterize needs a space document, got " + doc.kind);
      }
      auto c     = characterize_filtrum_space(*x, limits);
      json local = json::array();
      for (auto const& d : c.local_opens) {
        local.push_back(members(d));
      }
      json out;
      out["kind"]        = "characterization";
      out["local_opens"] = std::move(local);
      out["verdict"]     = c.success ? "success" : "failure";
      if (c.success) {
        out["monoid"]        = to_json(*c.monoid);
        out["psi"]           = c.psi;
        out["homeomorphism"] = c.homeomorphism;
      } else {
        out["condition"] = c.failed_condition;
        out["witness"]   = c.witness;
        out["message"]   = c.message;
      }
      return emit(out);
    });
  }

  Outcome cmd_sobrify(std::string const& file, std::string const& format, Limits const& limits) {
    return guarded([&]() -> Outcome {
      if (format != "dot" && format != "json") {
        raise(errc::shape_error, "unknown format \"" + format + "\"");
      }
      auto doc = load_file(file);
      auto x   = std::get_if<FiniteSpace>(&doc.value);
      if (x == nullptr) {
        raise(errc::type_mismatch, "sobrify needs a space document, got " + doc.kind);
      }
      auto s = sobrify(*x, limits);
      if (format == "json") {
        return emit(to_json(s.space));
      }
      std::ostringstream out;
      out << "digraph sobrification {\n  rankdir=LR;\n";
      for (point_id p = 0; p < x->size(); ++p) {
        out << "  x" << p << " [label=" << quoted(x->names()[p]) << "];\n";
      }
      for (point_id p = 0; p < s.space.size(); ++p) {
        out << "  s" << p << " [label=" << quoted(s.space.names()[p]) << ", shape=box];\n";
      }
      for (point_id p = 0; p < x->size(); ++p) {
        out << "  x" << p << " -> s" << s.unit(p) << ";\n";
      }
      out << "}\n";
      return {exit_ok, out.str(), {}};
    });
  }

  Outcome cmd_specialization(std::string const& file, Limits const&) {
    return guarded([&]() -> Outcome {
      auto doc = load_file(file);
      auto x   = std::get_if<FiniteSpace>(&doc.value);
      if (x == nullptr) {
        raise(errc::type_mismatch, "specialization needs a space document, got " + doc.kind);
      }
      auto               leq = [&](point_id a, point_id b) { return x->specializes(a, b); };
      auto               eqv = [&](point_id a, point_id b) { return leq(a, b) && leq(b, a); };
      std::ostringstream out;
      out << "digraph specialization {\n  rankdir=BT;\n";
      for (point_id p = 0; p < x->size(); ++p) {
        out << "  p" << p << " [label=" << quoted(x->names()[p]) << "];\n";
      }
      for (point_id a = 0; a < x->size(); ++a) {
        for (point_id b = 0; b < x->size(); ++b) {
          if (a == b || !leq(a, b)) {
            continue;
          }
          bool cover = true;
          if (!eqv(a, b)) {
            for (point_id z = 0; z < x->size() && cover; ++z) {
              cover = eqv(z, a) || eqv(z, b) || !(leq(a, z) && leq(z, b));
            }
          }
          if (cover) {
            out << "  p" << a << " -> p" << b << ";\n";
          }
        }
      }
      out << "}\n";
      return {exit_ok, out.str(), {}};
    });
  }

  Outcome cmd_product(std::string const& first, std::string const& second, Limits const& limits) {
    return guarded([&] {
      auto m1 = as_monoid(load_file(first));
      auto m2 = as_monoid(load_file(second));
      return emit(to_json(product_monoid(m1, m2, limits).monoid));
    });
  }

  Outcome cmd_suite(std::vector<std::string> const& files, std::string const& laws, unsigned jobs, Limits const& limits) {
    return guarded([&] {
      std::vector<SuiteInstance> instances;
      std::vector<json>          broken;
      if (files.empty()) {
        instances = corpus_instances();
      }
      for (auto const& file : files) {
        try {
          auto more = document_instances(file, load_file(file));
          instances.insert(instances.end(), more.begin(), more.end());
        } catch (error const& e) {
          if (!is_axiom_failure(e.code())) {
            throw;
          }
          broken.push_back(axiom_failure_record(file, std::string(to_string(e.code())), e.what(), e.witness()));
        }
      }
      auto result = run_suite(laws, instances, jobs, limits);
      if (!broken.empty()) {
        json records = json::array();
        for (auto& r : broken) {
          records.push_back(std::move(r));
        }
        for (auto& r : result.report["records"]) {
          records.push_back(std::move(r));
        }
        result.report["records"] = std::move(records);
        auto& summary            = result.report["summary"];
        summary["total"]         = summary["total"].get<std::size_t>() + broken.size();
        summary["failed"]        = summary["failed"].get<std::size_t>() + broken.size();
        result.all_passed        = false;
      }
      Outcome out = emit(result.report);
      if (!result.all_passed) {
        out.code = exit_violation;
      }
      return out;
    });
  }

}  // namespace filt::cli
