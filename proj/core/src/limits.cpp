#include "filt/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace filt {

  namespace {
    template <typename T>
    bool parse_positive(char const* text, T& out) {
      if (text == nullptr) {
        return false;
      }
      std::string_view sv(text);
      T                value{};
      auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), value);
      if (ec != std::errc{} || ptr != sv.data() + sv.size() || value == 0) {
        return false;
      }
      out = value;
      return true;
    }
  }  // namespace

  Limits Limits::from_environment() {
    Limits limits;
    parse_positive(std::getenv("FILT_ENUM_CAP"), limits.enumeration_cap);
    parse_positive(std::getenv("FILT_CLOSURE_CAP"), limits.closure_cap);
    parse_positive(std::getenv("FILT_JOBS"), limits.jobs);
    return limits;
  }

}  // namespace filt
