#ifndef FILT_ELEMENT_SET_HPP_
#define FILT_ELEMENT_SET_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace filt {

  using element_id = std::uint32_t;

  // A subset of {0, ..., universe - 1}.  Used for subsets of monoid
  // elements, of filtrum points and of space points alike.
  //
  // The ordering is the "bitmask" order: a set is compared as the unsigned
  // integer whose bit i is set iff i is a member.  All canonical families in
  // the library are sorted this way.
  class ElementSet {
   public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe);
    ElementSet(std::size_t universe, std::initializer_list<element_id> members);
    ElementSet(std::size_t universe, std::vector<element_id> const& members);

    static ElementSet full(std::size_t universe);
    // universe must be <= 64.
    static ElementSet from_mask(std::size_t universe, std::uint64_t mask);

    std::size_t universe() const noexcept {
      return _universe;
    }

    bool contains(element_id x) const noexcept {
      return x < _universe && ((_words[x >> 6] >> (x & 63)) & 1U) != 0;
    }

    void insert(element_id x);
    void erase(element_id x);

    std::size_t count() const noexcept;
    bool        empty() const noexcept;
    bool        is_full() const noexcept;

    bool is_subset_of(ElementSet const& other) const noexcept;
    bool intersects(ElementSet const& other) const noexcept;

    ElementSet& operator|=(ElementSet const& other);
    ElementSet& operator&=(ElementSet const& other);
    ElementSet& operator-=(ElementSet const& other);

    friend ElementSet operator|(ElementSet lhs, ElementSet const& rhs) {
      return lhs |= rhs;
    }
    friend ElementSet operator&(ElementSet lhs, ElementSet const& rhs) {
      return lhs &= rhs;
    }
    friend ElementSet operator-(ElementSet lhs, ElementSet const& rhs) {
      return lhs -= rhs;
    }

    ElementSet complement() const;

    // Smallest member, or universe() when empty.
    element_id first() const noexcept;

    std::vector<element_id> members() const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
      for (std::size_t w = 0; w < _words.size(); ++w) {
        std::uint64_t word = _words[w];
        while (word != 0) {
          int bit = __builtin_ctzll(word);
          fn(static_cast<element_id>(w * 64 + static_cast<std::size_t>(bit)));
          word &= word - 1;
        }
      }
    }

    // Only meaningful when universe() <= 64.
    std::uint64_t to_mask() const noexcept {
      return _words.empty() ? 0 : _words[0];
    }

    // "{0,2,4}"
    std::string to_string() const;
    // Character i is '1' iff i is a member.
    std::string to_bits() const;

    std::size_t hash() const noexcept;

    friend bool operator==(ElementSet const& lhs, ElementSet const& rhs) noexcept {
      return lhs._universe == rhs._universe && lhs._words == rhs._words;
    }

    friend std::strong_ordering operator<=>(ElementSet const& lhs, ElementSet const& rhs) noexcept;

   private:
    void check_universe(ElementSet const& other) const;
    void trim() noexcept;

    std::size_t                _universe = 0;
    std::vector<std::uint64_t> _words;
  };

  using PointSet = ElementSet;

}  // namespace filt

template <>
struct std::hash<filt::ElementSet> {
  std::size_t operator()(filt::ElementSet const& s) const noexcept {
    return s.hash();
  }
};

#endif  // FILT_ELEMENT_SET_HPP_
