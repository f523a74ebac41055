#include "filt_cli/documents.hpp"

#include <fstream>
#include <sstream>

#include "filt/error.hpp"

namespace filt::cli {

  namespace {
    json const& field(json const& doc, char const* key) {
      auto it = doc.find(key);
      if (it == doc.end()) {
        raise(errc::shape_error, std::string("missing field \"") + key + "\"");
      }
      return *it;
    }

    std::size_t index(json const& v, char const* what) {
      if (!v.is_number_integer() || v.get<long long>() < 0) {
        raise(errc::shape_error, std::string(what) + " must be a non-negative integer");
      }
      return v.get<std::size_t>();
    }

    std::vector<std::vector<element_id>> table(json const& v, char const* what) {
      if (!v.is_array()) {
        raise(errc::shape_error, std::string(what) + " must be an array of rows");
      }
      std::vector<std::vector<element_id>> rows;
      for (auto const& row : v) {
        if (!row.is_array()) {
          raise(errc::shape_error, std::string(what) + " must be an array of rows");
        }
        std::vector<element_id> r;
        for (auto const& x : row) {
          r.push_back(static_cast<element_id>(index(x, what)));
        }
        rows.push_back(std::move(r));
      }
      return rows;
    }

    void check_size(json const& doc, std::size_t rows) {
      if (doc.contains("size") && index(doc["size"], "size") != rows) {
        raise(errc::shape_error, "\"size\" does not match the table");
      }
    }

    Document load_reference(json const& v, std::filesystem::path const& base_dir) {
      if (v.is_string()) {
        return load_file(base_dir / v.get<std::string>());
      }
      if (v.is_object()) {
        return load_document(v, base_dir);
      }
      raise(errc::shape_error, "source/target must be an inline document or a file name");
    }

    json rows_of(std::vector<element_id> const& t, std::size_t n) {
      json rows = json::array();
      for (std::size_t i = 0; i < n; ++i) {
        rows.push_back(std::vector<element_id>(t.begin() + static_cast<std::ptrdiff_t>(i * n),
                                               t.begin() + static_cast<std::ptrdiff_t>((i + 1) * n)));
      }
      return rows;
    }
  }  // namespace

  json parse_file(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      raise(errc::shape_error, "cannot open " + path.string());
    }
    try {
      return json::parse(in);
    } catch (json::exception const& e) {
      raise(errc::shape_error, path.string() + ": " + e.what());
    }
  }

  Document load_file(std::filesystem::path const& path) {
    return load_document(parse_file(path), path.parent_path());
  }

  Document load_document(json const& doc, std::filesystem::path const& base_dir) {
    if (!doc.is_object()) {
      raise(errc::shape_error, "document must be a JSON object");
    }
    auto const& kind_field = field(doc, "kind");
    if (!kind_field.is_string()) {
      raise(errc::shape_error, "\"kind\" must be a string");
    }
    auto kind = kind_field.get<std::string>();
    try {
      if (kind == "monoid") {
        auto rows = table(field(doc, "mul"), "mul");
        check_size(doc, rows.size());
        std::optional<element_id> zero;
        if (doc.contains("zero") && !doc["zero"].is_null()) {
          zero = static_cast<element_id>(index(doc["zero"], "zero"));
        }
        auto one = static_cast<element_id>(index(field(doc, "one"), "one"));
        return {kind, validate_monoid(rows, one, zero)};
      }
      if (kind == "ring") {
        auto add = table(field(doc, "add"), "add");
        auto mul = table(field(doc, "mul"), "mul");
        check_size(doc, add.size());
        return {kind, FiniteRing::validate(add, mul)};
      }
      if (kind == "space") {
        auto const& pts = field(doc, "points");
        if (!pts.is_array()) {
          raise(errc::shape_error, "\"points\" must be an array of names");
        }
        std::vector<std::string> names;
        for (auto const& p : pts) {
          if (!p.is_string()) {
            raise(errc::shape_error, "point names must be strings");
          }
          names.push_back(p.get<std::string>());
        }
        auto                  rows = table(field(doc, "opens"), "opens");
        std::vector<PointSet> opens;
        for (auto const& r : rows) {
          for (auto x : r) {
            if (x >= names.size()) {
              raise(errc::shape_error, "open set refers to point " + std::to_string(x), {x});
            }
          }
          opens.emplace_back(names.size(), r);
        }
        return {kind, FiniteSpace::from_opens(std::move(names), std::move(opens))};
      }
      if (kind == "monoid_hom" || kind == "continuous_map") {
        auto source = load_reference(field(doc, "source"), base_dir);
        auto target = load_reference(field(doc, "target"), base_dir);
        std::vector<element_id> map;
        auto const&             m = field(doc, "map");
        if (!m.is_array()) {
          raise(errc::shape_error, "\"map\" must be an array");
        }
        for (auto const& x : m) {
          map.push_back(static_cast<element_id>(index(x, "map")));
        }
        if (kind == "monoid_hom") {
          return {kind, MonoidHom(as_monoid(source), as_monoid(target), std::move(map))};
        }
        auto const* xs = std::get_if<FiniteSpace>(&source.value);
        auto const* ys = std::get_if<FiniteSpace>(&target.value);
        if (xs == nullptr || ys == nullptr) {
          raise(errc::shape_error, "continuous_map needs space documents");
        }
        return {kind, ContinuousMap(*xs, *ys, std::move(map))};
      }
    } catch (json::exception const& e) {
      raise(errc::shape_error, e.what());
    }
    raise(errc::shape_error, "unknown kind \"" + kind + "\"");
  }

  FiniteMonoid as_monoid(Document const& doc) {
    if (auto const* m = std::get_if<FiniteMonoid>(&doc.value)) {
      return *m;
    }
    if (auto const* r = std::get_if<FiniteRing>(&doc.value)) {
      return r->mult_monoid();
    }
    raise(errc::type_mismatch, "expected a monoid or ring document, got " + doc.kind);
  }

  json members(ElementSet const& s) {
    return s.members();
  }

  json to_json(FiniteMonoid const& m) {
    json out;
    out["kind"] = "monoid";
    out["size"] = m.size();
    out["mul"]  = rows_of(m.table(), m.size());
    out["one"]  = m.one();
    out["zero"] = m.zero() ? json(*m.zero()) : json(nullptr);
    return out;
  }

  json to_json(FiniteRing const& r) {
    json out;
    out["kind"] = "ring";
    out["size"] = r.size();
    out["add"]  = rows_of(r.add_table(), r.size());
    out["mul"]  = rows_of(r.mul_table(), r.size());
    return out;
  }

  json to_json(FiniteSpace const& x) {
    json out;
    out["kind"]   = "space";
    out["points"] = x.names();
    json opens    = json::array();
    for (auto const& u : x.opens()) {
      opens.push_back(members(u));
    }
    out["opens"] = std::move(opens);
    return out;
  }

  json to_json(MonoidHom const& h) {
    json out;
    out["kind"]   = "monoid_hom";
    out["source"] = to_json(h.source());
    out["target"] = to_json(h.target());
    out["map"]    = h.map();
    return out;
  }

  json to_json(ContinuousMap const& phi) {
    json out;
    out["kind"]   = "continuous_map";
    out["source"] = to_json(phi.source());
    out["target"] = to_json(phi.target());
    out["map"]    = phi.map();
    return out;
  }

}  // namespace filt::cli
