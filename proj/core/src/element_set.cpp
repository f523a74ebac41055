#include "filt/element_set.hpp"

#include <bit>
#include <string>

#include "filt/error.hpp"

namespace filt {

  namespace {
    std::size_t word_count(std::size_t universe) {
      return (universe + 63) / 64;
    }
  }  // namespace

  ElementSet::ElementSet(std::size_t universe) : _universe(universe), _words(word_count(universe), 0) {}

  ElementSet::ElementSet(std::size_t universe, std::initializer_list<element_id> members)
      : ElementSet(universe) {
    for (auto x : members) {
      insert(x);
    }
  }

  ElementSet::ElementSet(std::size_t universe, std::vector<element_id> const& members)
      : ElementSet(universe) {
    for (auto x : members) {
      insert(x);
    }
  }

  ElementSet ElementSet::full(std::size_t universe) {
    ElementSet s(universe);
    for (auto& w : s._words) {
      w = ~std::uint64_t{0};
    }
    s.trim();
    return s;
  }

  ElementSet ElementSet::from_mask(std::size_t universe, std::uint64_t mask) {
    if (universe > 64) {
      raise(errc::index_out_of_range, "from_mask needs a universe of at most 64 ids");
    }
    ElementSet s(universe);
    if (universe > 0) {
      s._words[0] = mask;
      s.trim();
    }
    return s;
  }

  void ElementSet::insert(element_id x) {
    if (x >= _universe) {
      raise(errc::index_out_of_range,
            "id " + std::to_string(x) + " outside universe of size " + std::to_string(_universe),
            {x});
    }
    _words[x >> 6] |= std::uint64_t{1} << (x & 63);
  }

  void ElementSet::erase(element_id x) {
    if (x < _universe) {
      _words[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
    }
  }

  std::size_t ElementSet::count() const noexcept {
    std::size_t total = 0;
    for (auto w : _words) {
      total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
  }

  bool ElementSet::empty() const noexcept {
    for (auto w : _words) {
      if (w != 0) {
        return false;
      }
    }
    return true;
  }

  bool ElementSet::is_full() const noexcept {
    return count() == _universe;
  }

  bool ElementSet::is_subset_of(ElementSet const& other) const noexcept {
    if (_universe != other._universe) {
      return false;
    }
    for (std::size_t i = 0; i < _words.size(); ++i) {
      if ((_words[i] & ~other._words[i]) != 0) {
        return false;
      }
    }
    return true;
  }

  bool ElementSet::intersects(ElementSet const& other) const noexcept {
    std::size_t n = std::min(_words.size(), other._words.size());
    for (std::size_t i = 0; i < n; ++i) {
      if ((_words[i] & other._words[i]) != 0) {
        return true;
      }
    }
    return false;
  }

  void ElementSet::check_universe(ElementSet const& other) const {
    if (_universe != other._universe) {
      raise(errc::carrier_mismatch,
            "set operation on universes of size " + std::to_string(_universe) + " and "
                + std::to_string(other._universe));
    }
  }

  ElementSet& ElementSet::operator|=(ElementSet const& other) {
    check_universe(other);
    for (std::size_t i = 0; i < _words.size(); ++i) {
      _words[i] |= other._words[i];
    }
    return *this;
  }

  ElementSet& ElementSet::operator&=(ElementSet const& other) {
    check_universe(other);
    for (std::size_t i = 0; i < _words.size(); ++i) {
      _words[i] &= other._words[i];
    }
    return *this;
  }

  ElementSet& ElementSet::operator-=(ElementSet const& other) {
    check_universe(other);
    for (std::size_t i = 0; i < _words.size(); ++i) {
      _words[i] &= ~other._words[i];
    }
    return *this;
  }

  ElementSet ElementSet::complement() const {
    ElementSet s(*this);
    for (auto& w : s._words) {
      w = ~w;
    }
    s.trim();
    return s;
  }

  element_id ElementSet::first() const noexcept {
    for (std::size_t w = 0; w < _words.size(); ++w) {
      if (_words[w] != 0) {
        return static_cast<element_id>(w * 64 + static_cast<std::size_t>(std::countr_zero(_words[w])));
      }
    }
    return static_cast<element_id>(_universe);
  }

  std::vector<element_id> ElementSet::members() const {
    std::vector<element_id> out;
    out.reserve(count());
    for_each([&out](element_id x) { out.push_back(x); });
    return out;
  }

  std::string ElementSet::to_string() const {
    std::string out = "{";
    bool        first_member = true;
    for_each([&](element_id x) {
      if (!first_member) {
        out += ',';
      }
      out += std::to_string(x);
      first_member = false;
    });
    out += '}';
    return out;
  }

  std::string ElementSet::to_bits() const {
    std::string out(_universe, '0');
    for_each([&out](element_id x) { out[x] = '1'; });
    return out;
  }

  std::size_t ElementSet::hash() const noexcept {
    std::size_t h = std::hash<std::size_t>{}(_universe);
    for (auto w : _words) {
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  std::strong_ordering operator<=>(ElementSet const& lhs, ElementSet const& rhs) noexcept {
    if (auto c = lhs._universe <=> rhs._universe; c != 0) {
      return c;
    }
    for (std::size_t i = lhs._words.size(); i-- > 0;) {
      if (auto c = lhs._words[i] <=> rhs._words[i]; c != 0) {
        return c;
      }
    }
    return std::strong_ordering::equal;
  }

  void ElementSet::trim() noexcept {
    if (_words.empty()) {
      return;
    }
    std::size_t used = _universe & 63;
    if (used != 0) {
      _words.back() &= (std::uint64_t{1} << used) - 1;
    }
  }

}  // namespace filt
