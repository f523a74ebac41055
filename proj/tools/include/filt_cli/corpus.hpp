#ifndef FILT_CLI_CORPUS_HPP_
#define FILT_CLI_CORPUS_HPP_

#include <string>
#include <vector>

#include "filt/monoid.hpp"
#include "filt/ring.hpp"
#include "filt/space.hpp"

// The validation corpus: small structures on which every law is checked
// exhaustively.  Built once, in a fixed order.
namespace filt::cli {

  template <typename T>
  struct Named {
    std::string id;
    T           value;
  };

  struct MonoidPair {
    FiniteMonoid first;
    FiniteMonoid second;
  };

  struct Corpus {
    std::vector<Named<FiniteMonoid>>  monoids;
    std::vector<Named<FiniteRing>>    rings;
    std::vector<Named<FiniteSpace>>   spaces;
    std::vector<Named<MonoidHom>>     homs;
    std::vector<Named<ContinuousMap>> maps;
    std::vector<Named<MonoidPair>>    pairs;
  };

  Corpus const& corpus();

  // Partial orders on n labelled points as leq matrices.
  std::vector<std::vector<std::vector<bool>>> partial_orders(std::size_t n);
  // Preorders on n points, one per isomorphism class.
  std::vector<std::vector<std::vector<bool>>> preorders_up_to_iso(std::size_t n);
  std::vector<MonoidHom>     all_homs(FiniteMonoid const& m, FiniteMonoid const& n);
  std::vector<ContinuousMap> all_continuous_maps(FiniteSpace const& x, FiniteSpace const& y);

}  // namespace filt::cli

#endif  // FILT_CLI_CORPUS_HPP_
