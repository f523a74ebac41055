#ifndef FILT_CLI_DOCUMENTS_HPP_
#define FILT_CLI_DOCUMENTS_HPP_

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "filt/monoid.hpp"
#include "filt/ring.hpp"
#include "filt/space.hpp"

namespace filt::cli {

  using json = nlohmann::ordered_json;

  using Structure = std::variant<FiniteMonoid, FiniteRing, FiniteSpace, MonoidHom, ContinuousMap>;

  struct Document {
    std::string kind;
    Structure   value;
  };

  // Schema problems raise shape_error; law violations raise the code of
  // the validator (non_associative, not_continuous, ...).  File references
  // inside hom and map documents resolve against base_dir.
  Document load_document(json const& doc, std::filesystem::path const& base_dir = {});
  Document load_file(std::filesystem::path const& path);
  json     parse_file(std::filesystem::path const& path);

  // Monoid documents as is, ring documents through their multiplication.
  // Throws type_mismatch for other kinds.
  FiniteMonoid as_monoid(Document const& doc);

  json to_json(FiniteMonoid const& m);
  json to_json(FiniteRing const& r);
  json to_json(FiniteSpace const& x);
  json to_json(MonoidHom const& h);
  json to_json(ContinuousMap const& phi);

  json members(ElementSet const& s);

}  // namespace filt::cli

#endif  // FILT_CLI_DOCUMENTS_HPP_
