#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "subset.hpp"

namespace sepcong {

  /// A set partition of {0, ..., n-1} in normalized restricted-growth form:
  /// class ids are assigned in order of first appearance, so the class of
  /// the smallest element of each block is numbered ascending.
  class Partition {
   public:
    Partition() = default;

    /// Normalizes an arbitrary labelling; equal labels mean the same block.
    explicit Partition(std::span<std::uint32_t const> labels) : _class_of(labels.size()) {
      if (labels.size() > kMaxOrder) {
        throw InvalidArgument("partition size exceeds " + std::to_string(kMaxOrder));
      }
      std::vector<std::pair<std::uint32_t, std::uint32_t>> seen;  // label -> id
      for (std::size_t i = 0; i < labels.size(); ++i) {
        auto it = std::find_if(seen.begin(), seen.end(),
                               [&](auto const& p) { return p.first == labels[i]; });
        if (it == seen.end()) {
          seen.emplace_back(labels[i], static_cast<std::uint32_t>(seen.size()));
          _class_of[i] = seen.back().second;
        } else {
          _class_of[i] = it->second;
        }
      }
      _num_classes = seen.size();
    }

    explicit Partition(std::vector<std::uint32_t> const& labels)
        : Partition(std::span<std::uint32_t const>(labels)) {}

    static Partition identity(std::size_t n) {
      std::vector<std::uint32_t> labels(n);
      for (std::size_t i = 0; i < n; ++i) {
        labels[i] = static_cast<std::uint32_t>(i);
      }
      return Partition(labels);
    }

    static Partition universal(std::size_t n) {
      return Partition(std::vector<std::uint32_t>(n, 0));
    }

    std::size_t size() const noexcept {
      return _class_of.size();
    }
    std::size_t num_classes() const noexcept {
      return _num_classes;
    }
    std::uint32_t class_of(Element e) const {
      return _class_of.at(e);
    }
    std::span<std::uint32_t const> labels() const noexcept {
      return _class_of;
    }
    bool same_class(Element a, Element b) const {
      return _class_of.at(a) == _class_of.at(b);
    }

    bool is_identity() const noexcept {
      return _num_classes == _class_of.size();
    }
    bool is_universal() const noexcept {
      return _num_classes <= 1;
    }

    SubsetMask class_mask(std::size_t id) const {
      if (id >= _num_classes) {
        throw InvalidArgument("class id " + std::to_string(id) + " out of range");
      }
      SubsetMask m = SubsetMask::empty(size());
      for (std::size_t i = 0; i < size(); ++i) {
        if (_class_of[i] == id) {
          m.insert(static_cast<Element>(i));
        }
      }
      return m;
    }

    std::vector<SubsetMask> classes() const {
      std::vector<SubsetMask> out(_num_classes, SubsetMask::empty(size()));
      for (std::size_t i = 0; i < size(); ++i) {
        out[_class_of[i]].insert(static_cast<Element>(i));
      }
      return out;
    }

    /// True iff every block of *this lies inside a block of coarser.
    bool refines(Partition const& coarser) const {
      if (coarser.size() != size()) {
        throw InvalidArgument("partition sizes differ");
      }
      std::vector<std::int64_t> image(_num_classes, -1);
      for (std::size_t i = 0; i < size(); ++i) {
        auto& slot = image[_class_of[i]];
        if (slot < 0) {
          slot = coarser._class_of[i];
        } else if (slot != coarser._class_of[i]) {
          return false;
        }
      }
      return true;
    }

    friend bool operator==(Partition const&, Partition const&) = default;
    friend auto operator<=>(Partition const& x, Partition const& y) {
      return x._class_of <=> y._class_of;
    }

   private:
    std::vector<std::uint32_t> _class_of;
    std::size_t                _num_classes = 0;
  };

  /// The coarsest partition refining both arguments (intersection of the
  /// equivalence relations).
  inline Partition common_refinement(Partition const& x, Partition const& y) {
    if (x.size() != y.size()) {
      throw InvalidArgument("partition sizes differ");
    }
    std::vector<std::uint32_t> labels(x.size());
    auto const                 width = static_cast<std::uint32_t>(y.num_classes());
    for (std::size_t i = 0; i < x.size(); ++i) {
      labels[i] = x.labels()[i] * width + y.labels()[i];
    }
    return Partition(labels);
  }

  /// Blocks separated by ';', elements by ',', e.g. "0;1,2" for {{0},{1,2}}.
  inline std::string to_string(Partition const& p) {
    std::string out;
    auto        blocks = p.classes();
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      if (k != 0) {
        out += ';';
      }
      out += to_string(blocks[k]);
    }
    return out;
  }

  /// Inverse of to_string(Partition). Every element of {0..n-1} must occur
  /// exactly once.
  inline Partition parse_partition(std::string_view text, std::size_t n) {
    constexpr auto             unset = ~std::uint32_t{0};
    std::vector<std::uint32_t> labels(n, unset);
    std::uint32_t              block = 0;
    for (auto part : detail::split(text, ';')) {
      if (part.empty() || part == "-") {
        throw ParseError(0, "empty block in partition '" + std::string(text) + "'");
      }
      for (auto tok : detail::split(part, ',')) {
        Element e = detail::parse_element(tok, n);
        if (labels[e] != unset) {
          throw ParseError(0, "element " + std::to_string(e) + " occurs twice in partition");
        }
        labels[e] = block;
      }
      ++block;
    }
    for (std::size_t e = 0; e < n; ++e) {
      if (labels[e] == unset) {
        throw ParseError(0, "element " + std::to_string(e) + " missing from partition");
      }
    }
    return Partition(labels);
  }

  /// Calls f(labels) for every set partition of an n-set, as restricted
  /// growth strings in lexicographic order. labels is a span over n ids.
  template <typename F>
  void for_each_set_partition(std::size_t n, F&& f) {
    if (n == 0) {
      return;
    }
    std::vector<std::uint32_t> a(n, 0);
    // prefix_max[i] = max(a[0..i])
    std::vector<std::uint32_t> prefix_max(n, 0);
    while (true) {
      f(std::span<std::uint32_t const>(a));
      std::size_t i = n - 1;
      while (i > 0 && a[i] > prefix_max[i - 1]) {
        --i;
      }
      if (i == 0) {
        return;
      }
      ++a[i];
      prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
      for (std::size_t j = i + 1; j < n; ++j) {
        a[j]          = 0;
        prefix_max[j] = prefix_max[i];
      }
    }
  }

}  // namespace sepcong
