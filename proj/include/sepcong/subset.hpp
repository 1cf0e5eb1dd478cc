#pragma once

#include <bit>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace sepcong {

  /// Index of an element of a finite semigroup, 0-based.
  using Element = std::uint32_t;

  /// Largest order representable by a SubsetMask.
  inline constexpr std::size_t kMaxOrder = 64;

  /// A subset of {0, ..., order-1} stored as a bit mask.
  class SubsetMask {
   public:
    constexpr SubsetMask() = default;

    SubsetMask(std::size_t order, std::uint64_t bits) : _bits(bits), _order(order) {
      if (order > kMaxOrder) {
        throw InvalidArgument("subset order " + std::to_string(order) + " exceeds "
                              + std::to_string(kMaxOrder));
      }
      if ((bits & ~full_bits(order)) != 0) {
        throw InvalidArgument("subset mask has bits beyond order "
                              + std::to_string(order));
      }
    }

    static SubsetMask empty(std::size_t order) {
      return SubsetMask(order, 0);
    }

    static SubsetMask full(std::size_t order) {
      return SubsetMask(order, full_bits(order));
    }

    static SubsetMask singleton(std::size_t order, Element e) {
      SubsetMask m = empty(order);
      m.insert(e);
      return m;
    }

    template <typename Range>
    static SubsetMask from_elements(std::size_t order, Range const& elts) {
      SubsetMask m = empty(order);
      for (auto e : elts) {
        m.insert(static_cast<Element>(e));
      }
      return m;
    }

    static SubsetMask from_elements(std::size_t order, std::initializer_list<Element> elts) {
      return from_elements<std::initializer_list<Element>>(order, elts);
    }

    static constexpr std::uint64_t full_bits(std::size_t order) noexcept {
      return order >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1;
    }

    std::size_t order() const noexcept {
      return _order;
    }
    std::uint64_t bits() const noexcept {
      return _bits;
    }

    bool contains(Element e) const noexcept {
      return e < _order && ((_bits >> e) & 1U) != 0;
    }

    void insert(Element e) {
      if (e >= _order) {
        throw InvalidArgument("element " + std::to_string(e) + " out of range for order "
                              + std::to_string(_order));
      }
      _bits |= std::uint64_t{1} << e;
    }

    std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(_bits));
    }
    bool is_empty() const noexcept {
      return _bits == 0;
    }
    bool is_full() const noexcept {
      return _bits == full_bits(_order);
    }
    /// Nonempty and not the whole set.
    bool is_proper() const noexcept {
      return !is_empty() && !is_full();
    }

    SubsetMask complement() const noexcept {
      return raw(_order, ~_bits & full_bits(_order));
    }

    bool subset_of(SubsetMask other) const noexcept {
      return (_bits & ~other._bits) == 0;
    }

    bool intersects(SubsetMask other) const noexcept {
      return (_bits & other._bits) != 0;
    }

    /// Calls f(e) for every element e of the subset, ascending.
    template <typename F>
    void for_each(F&& f) const {
      for (std::uint64_t b = _bits; b != 0; b &= b - 1) {
        f(static_cast<Element>(std::countr_zero(b)));
      }
    }

    std::vector<Element> elements() const {
      std::vector<Element> out;
      out.reserve(size());
      for_each([&out](Element e) { out.push_back(e); });
      return out;
    }

    friend SubsetMask operator&(SubsetMask a, SubsetMask b) noexcept {
      return raw(a._order, a._bits & b._bits);
    }
    friend SubsetMask operator|(SubsetMask a, SubsetMask b) noexcept {
      return raw(a._order, a._bits | b._bits);
    }
    SubsetMask& operator&=(SubsetMask other) noexcept {
      _bits &= other._bits;
      return *this;
    }
    SubsetMask& operator|=(SubsetMask other) noexcept {
      _bits |= other._bits;
      return *this;
    }

    friend bool operator==(SubsetMask, SubsetMask) = default;
    // Orders by mask value first; masks of one semigroup share the order.
    friend auto operator<=>(SubsetMask, SubsetMask) = default;

   private:
    static SubsetMask raw(std::size_t order, std::uint64_t bits) noexcept {
      SubsetMask m;
      m._order = order;
      m._bits  = bits;
      return m;
    }

    std::uint64_t _bits = 0;
    std::size_t _order  = 0;
  };

  /// "1,2" for {1,2}; "-" for the empty set.
  inline std::string to_string(SubsetMask m) {
    if (m.is_empty()) {
      return "-";
    }
    std::string out;
    m.for_each([&out](Element e) {
      if (!out.empty()) {
        out += ',';
      }
      out += std::to_string(e);
    });
    return out;
  }

  namespace detail {
    inline Element parse_element(std::string_view tok, std::size_t order) {
      unsigned long long v = 0;
      auto const* first = tok.data();
      auto const* last  = tok.data() + tok.size();
      auto [ptr, ec]    = std::from_chars(first, last, v);
      if (tok.empty() || ec != std::errc{} || ptr != last) {
        throw ParseError(0, "not an element index: '" + std::string(tok) + "'");
      }
      if (v >= order) {
        throw ParseError(0, "element " + std::string(tok) + " out of range for order "
                                + std::to_string(order));
      }
      return static_cast<Element>(v);
    }

    inline std::vector<std::string_view> split(std::string_view s, char sep) {
      std::vector<std::string_view> out;
      std::size_t start = 0;
      while (true) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) {
          return out;
        }
        start = pos + 1;
      }
    }
  }  // namespace detail

  /// Inverse of to_string(SubsetMask). Duplicates are rejected.
  inline SubsetMask parse_subset(std::string_view text, std::size_t order) {
    SubsetMask m = SubsetMask::empty(order);
    if (text == "-") {
      return m;
    }
    for (auto tok : detail::split(text, ',')) {
      Element e = detail::parse_element(tok, order);
      if (m.contains(e)) {
        throw ParseError(0, "duplicate element " + std::to_string(e) + " in subset");
      }
      m.insert(e);
    }
    return m;
  }

  /// Calls f(A) for every subset A of an n-element set, in ascending mask order.
  template <typename F>
  void for_each_subset(std::size_t order, F&& f) {
    if (order >= 64) {
      throw InvalidArgument("cannot enumerate all subsets of order "
                            + std::to_string(order));
    }
    std::uint64_t const count = std::uint64_t{1} << order;
    for (std::uint64_t bits = 0; bits < count; ++bits) {
      f(SubsetMask(order, bits));
    }
  }

}  // namespace sepcong
