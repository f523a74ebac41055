#ifndef FILT_CLI_COMMANDS_HPP_
#define FILT_CLI_COMMANDS_HPP_

#include <string>
#include <vector>

#include "filt/limits.hpp"

namespace filt::cli {

  enum exit_code : int {
    exit_ok        = 0,
    exit_invalid   = 1,
    exit_violation = 2,
    exit_cap       = 3,
  };

  // What a command would print; main() writes it out.  Errors are reported
  // on err as one JSON diagnostic line.
  struct Outcome {
    int         code = exit_ok;
    std::string out;
    std::string err;
  };

  Outcome cmd_filters(std::string const& file, Limits const& limits);
  // format: "dot" or "json".
  Outcome cmd_filtrum(std::string const& file, std::string const& format, Limits const& limits);
  Outcome cmd_fixfilters(std::string const& file, Limits const& limits);
  Outcome cmd_characterize(std::string const& file, Limits const& limits);
  // format: "json" emits the sobrified space document, "dot" the unit map.
  Outcome cmd_sobrify(std::string const& file, std::string const& format, Limits const& limits);
  // DOT of the specialization order of a space.
  Outcome cmd_specialization(std::string const& file, Limits const& limits);
  // Monoid document of the product of two monoid (or ring) documents.
  Outcome cmd_product(std::string const& first, std::string const& second, Limits const& limits);
  // files empty means the built-in corpus.
  Outcome cmd_suite(std::vector<std::string> const& files, std::string const& laws, unsigned jobs, Limits const& limits);

}  // namespace filt::cli

#endif  // FILT_CLI_COMMANDS_HPP_
