#ifndef FILT_CLI_LAWS_HPP_
#define FILT_CLI_LAWS_HPP_

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "filt/limits.hpp"
#include "filt_cli/corpus.hpp"
#include "filt_cli/documents.hpp"

namespace filt::cli {

  // What a law is checked on.  monostate stands for the built-in model
  // checks (factorial monoids, Z[sqrt(-5)]) that take no document.
  using Subject = std::variant<std::monostate, FiniteMonoid, FiniteRing, FiniteSpace, MonoidHom, ContinuousMap, MonoidPair>;

  struct Verdict {
    enum class Status { pass, fail, skip };
    Status status = Status::pass;
    json   counterexample;

    static Verdict pass() {
      return {};
    }
    static Verdict skip(std::string reason = "outside the law's hypotheses") {
      return {Status::skip, json(std::move(reason))};
    }
    static Verdict fail(json counterexample) {
      return {Status::fail, std::move(counterexample)};
    }
  };

  struct Law {
    std::string id;
    // The statement being checked, in words.
    std::string anchor;
    // "ch1", "ch2" or "ch3".
    std::string suite;
    // Index of the Subject alternative this law applies to.
    std::size_t                                                 subject = 0;
    std::function<Verdict(Subject const&, Limits const&)>       check;
  };

  std::vector<Law> const& laws();

  struct SuiteInstance {
    std::string id;
    Subject     subject;
  };

  // Every corpus structure plus the built-in model instance.
  std::vector<SuiteInstance> corpus_instances();
  // A loaded document; rings also contribute their multiplicative monoid.
  std::vector<SuiteInstance> document_instances(std::string const& id, Document const& doc);

  struct SuiteResult {
    json report;
    bool all_passed = true;
  };

  // selection: "ch1", "ch2", "ch3" or "all".  Records are ordered by law,
  // then instance, whatever the number of jobs.
  SuiteResult run_suite(std::string const&                selection,
                        std::vector<SuiteInstance> const& instances,
                        unsigned                          jobs,
                        Limits const&                     limits);

  // A failed record for a document that did not pass its own axioms.
  json axiom_failure_record(std::string const& instance, std::string const& error, std::string const& message,
                            std::vector<std::size_t> const& witness);

}  // namespace filt::cli

#endif  // FILT_CLI_LAWS_HPP_
