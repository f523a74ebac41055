#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"
#include "filt/error.hpp"
#include "filt/filter.hpp"
#include "filt_cli/commands.hpp"
#include "filt_cli/corpus.hpp"
#include "filt_cli/documents.hpp"
#include "filt_cli/laws.hpp"

using namespace filt;
using namespace filt::cli;

namespace {
  std::string data(std::string const& name) {
    return std::string(FILT_DATA_DIR) + "/" + name;
  }

  json parse(std::string const& text) {
    return json::parse(text);
  }

  std::filesystem::path scratch(std::string const& name, std::string const& text) {
    auto dir = std::filesystem::temp_directory_path() / "filt_cli_test";
    std::filesystem::create_directories(dir);
    auto path = dir / name;
    std::ofstream(path) << text;
    return path;
  }
}  // namespace

TEST_CASE("loading documents") {
  auto m = load_file(data("z6.json"));
  CHECK(m.kind == "monoid");
  CHECK(std::get<FiniteMonoid>(m.value).size() == 6);

  auto r = load_file(data("boolean2.json"));
  CHECK(r.kind == "ring");
  CHECK(as_monoid(r).size() == 4);

  auto h = load_file(data("z6_to_z3.json"));
  CHECK(std::get<MonoidHom>(h.value).target().size() == 3);

  auto s = load_file(data("sierpinski.json"));
  CHECK(std::get<FiniteSpace>(s.value) == spaces::sierpinski());

  auto c = load_file(data("open_point_inclusion.json"));
  CHECK(c.kind == "continuous_map");
}

TEST_CASE("documents round trip through json") {
  auto m = monoids::zmod_mul(5);
  CHECK(std::get<FiniteMonoid>(load_document(to_json(m)).value) == m);
  auto x = spaces::chain(3);
  CHECK(std::get<FiniteSpace>(load_document(to_json(x)).value) == x);
  auto r    = rings::zmod(4);
  auto back = std::get<FiniteRing>(load_document(to_json(r)).value);
  CHECK(back.mul_table() == r.mul_table());
  CHECK(back.add_table() == r.add_table());
}

TEST_CASE("bad documents") {
  auto expect = [](json const& doc, errc code) {
    try {
      load_document(doc);
      FAIL("accepted " << doc.dump());
    } catch (filt::error const& e) {
      CHECK(e.code() == code);
    }
  };
  expect(json::parse(R"({"kind":"monoid","size":2,"mul":[[0,0]],"one":1})"), errc::shape_error);
  expect(json::parse(R"({"kind":"wheel"})"), errc::shape_error);
  expect(json::parse(R"({"size":1})"), errc::shape_error);
  expect(json::parse(R"({"kind":"monoid","size":"two"})"), errc::shape_error);
  expect(json::parse(R"({"kind":"space","points":["a","b","c"],"opens":[[],[0],[1],[0,1,2]]})"),
         errc::not_closed_under_ops);
  expect(json::parse(R"({"kind":"space","points":["a","b"],"opens":[[],[0],[0,7]]})"), errc::shape_error);
}

TEST_CASE("filters command") {
  auto o = cmd_filters(data("z6.json"), {});
  REQUIRE(o.code == exit_ok);
  auto j = parse(o.out);
  CHECK(j["count"] == 4);
  int ultra = 0;
  for (auto const& f : j["filters"]) {
    ultra += f["ultrafilter"].get<bool>() ? 1 : 0;
  }
  CHECK(ultra == 2);
  CHECK(j["filters"][1]["members"] == json::parse("[1,3,5]"));
}

TEST_CASE("filtrum command") {
  auto dot = cmd_filtrum(data("z4.json"), "dot", {});
  REQUIRE(dot.code == exit_ok);
  CHECK(dot.out.find("digraph filtrum") == 0);
  CHECK(dot.out.find("n0 [label=\"{1,3}\", shape=doublecircle];") != std::string::npos);
  CHECK(dot.out.find("n0 -> n1;") != std::string::npos);

  auto j = parse(cmd_filtrum(data("z6.json"), "json", {}).out);
  CHECK(j["points"].size() == 4);
  CHECK(j["closed_point"] == 0);
  CHECK(cmd_filtrum(data("z6.json"), "svg", {}).code == exit_invalid);
}

TEST_CASE("fixfilters command") {
  auto j = parse(cmd_fixfilters(data("identity_z6.json"), {}).out);
  for (auto const& f : j["source"]["filters"]) {
    CHECK(f["fix"] == true);
  }
  for (auto const& f : j["target"]["filters"]) {
    CHECK(f["fix"] == true);
  }
  auto q = parse(cmd_fixfilters(data("z6_to_z3.json"), {}).out);
  for (auto const& f : q["target"]["filters"]) {
    CHECK(f["fix"] == true);
  }
  CHECK(cmd_fixfilters(data("z6.json"), {}).code == exit_invalid);
}

TEST_CASE("characterize and sobrify commands") {
  auto s = parse(cmd_characterize(data("sierpinski.json"), {}).out);
  CHECK(s["verdict"] == "success");
  CHECK(s["homeomorphism"] == true);
  auto d = parse(cmd_characterize(data("discrete2.json"), {}).out);
  CHECK(d["verdict"] == "failure");
  CHECK(d["condition"] == 2);

  auto so = cmd_sobrify(data("indiscrete2.json"), "json", {});
  REQUIRE(so.code == exit_ok);
  auto sj = parse(so.out);
  CHECK(sj.dump().find("\"points\"") != std::string::npos);
  CHECK(cmd_sobrify(data("sierpinski.json"), "dot", {}).out.find("digraph") == 0);
  CHECK(cmd_specialization(data("sierpinski.json"), {}).out.find("digraph") == 0);
}

TEST_CASE("product command builds a loadable document") {
  auto o = cmd_product(data("z4.json"), data("z6.json"), {});
  REQUIRE(o.code == exit_ok);
  auto doc = load_document(parse(o.out));
  auto m   = std::get<FiniteMonoid>(doc.value);
  CHECK(m.size() == 24);
  CHECK(all_filters(m).size() == 8);
  CHECK(std::get<FiniteMonoid>(load_file(data("z4_x_z6.json")).value) == m);
}

TEST_CASE("exit codes and diagnostics") {
  auto bad = cmd_filters(data("malformed_z3.json"), {});
  CHECK(bad.code == exit_invalid);
  auto diag = parse(bad.err);
  CHECK(diag["error"] == "ShapeError");
  CHECK(bad.out.empty());

  auto corrupt = cmd_filters(data("corrupted_z4.json"), {});
  CHECK(corrupt.code == exit_invalid);
  CHECK(parse(corrupt.err)["error"] == "NonAssociative");

  auto suite = cmd_suite({data("corrupted_z4.json")}, "all", 1, {});
  CHECK(suite.code == exit_violation);
  auto report = parse(suite.out);
  CHECK(report["summary"]["failed"].get<int>() >= 1);
  bool found = false;
  for (auto const& r : report["records"]) {
    if (r["law"] == "document.axioms") {
      found = true;
      CHECK(r["status"] == "fail");
      CHECK(r.contains("counterexample"));
    }
  }
  CHECK(found);

  Limits tiny;
  tiny.closure_cap = 4;
  CHECK(cmd_filters(data("z6.json"), tiny).code == exit_cap);
  CHECK(cmd_filters(data("nope.json"), {}).code == exit_invalid);

  auto garbage = scratch("garbage.json", "{not json");
  CHECK(cmd_filters(garbage.string(), {}).code == exit_invalid);
}

TEST_CASE("suite on documents") {
  auto o = cmd_suite({data("z6.json"), data("z6_ring.json"), data("sierpinski.json"), data("z6_to_z3.json")}, "all", 2, {});
  CHECK(o.code == exit_ok);
  auto j = parse(o.out);
  CHECK(j["suite"] == "all");
  CHECK(j["summary"]["failed"] == 0);
  CHECK(j["summary"]["total"].get<int>() == static_cast<int>(j["records"].size()));
  CHECK(cmd_suite({data("z6.json")}, "ch9", 1, {}).code == exit_invalid);
}

TEST_CASE("suite reports do not depend on the worker count") {
  std::vector<std::string> files{data("z6.json"), data("boolean3.json"), data("sierpinski.json"),
                                 data("open_point_inclusion.json"), data("z6_localized.json")};
  auto one = cmd_suite(files, "all", 1, {}).out;
  CHECK(cmd_suite(files, "all", 3, {}).out == one);
  CHECK(cmd_suite(files, "all", 8, {}).out == one);
}

TEST_CASE("corpus") {
  auto const& c = corpus();
  CHECK(c.monoids.size() >= 40);
  CHECK(c.rings.size() >= 20);
  CHECK(c.spaces.size() >= 100);
  CHECK(partial_orders(3).size() == 19);
  CHECK(partial_orders(4).size() == 219);
  CHECK(preorders_up_to_iso(3).size() == 9);
  CHECK(all_homs(monoids::zmod_mul(2), monoids::zmod_mul(2)).size() >= 1);
  CHECK(all_continuous_maps(spaces::sierpinski(), spaces::sierpinski()).size() == 3);
  std::set<std::string> ids;
  for (auto const& m : c.monoids) {
    CHECK(ids.insert(m.id).second);
  }
}
