#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"
#include "semigroup.hpp"
#include "subset.hpp"

namespace sepcong {

  /// Default cap on the order accepted by enumerate_congruences (Bell(8) = 4140).
  inline constexpr std::size_t kDefaultCongruenceCap = 8;

  /// a and b share a class but c*a, c*b (left) or a*c, b*c (right) do not.
  struct CompatibilityWitness {
    Element a;
    Element b;
    Element c;
    bool    left;

    friend bool operator==(CompatibilityWitness, CompatibilityWitness) = default;
  };

  inline void require_same_size(Semigroup const& s, Partition const& p) {
    if (p.size() != s.order()) {
      throw InvalidArgument("partition has " + std::to_string(p.size())
                            + " entries but the semigroup has order "
                            + std::to_string(s.order()));
    }
  }

  /// First violation of two-sided compatibility, scanning a < b, then c.
  inline std::optional<CompatibilityWitness>
  find_compatibility_violation(Semigroup const& s, Partition const& p) {
    require_same_size(s, p);
    auto const n = static_cast<Element>(s.order());
    for (Element a = 0; a < n; ++a) {
      for (Element b = a + 1; b < n; ++b) {
        if (!p.same_class(a, b)) {
          continue;
        }
        for (Element c = 0; c < n; ++c) {
          if (!p.same_class(s(c, a), s(c, b))) {
            return CompatibilityWitness{a, b, c, true};
          }
          if (!p.same_class(s(a, c), s(b, c))) {
            return CompatibilityWitness{a, b, c, false};
          }
        }
      }
    }
    return std::nullopt;
  }

  inline bool is_congruence(Semigroup const& s, Partition const& p) {
    return !find_compatibility_violation(s, p).has_value();
  }

  class NotACongruence : public Error {
   public:
    NotACongruence(Partition const& p, CompatibilityWitness w)
        : Error("partition " + to_string(p) + " is not a congruence: " + std::to_string(w.a)
                + " ~ " + std::to_string(w.b) + " but multiplying on the "
                + (w.left ? "left" : "right") + " by " + std::to_string(w.c)
                + " separates them"),
          _witness(w) {}

    CompatibilityWitness witness() const noexcept {
      return _witness;
    }

   private:
    CompatibilityWitness _witness;
  };

  /// A partition known to be compatible with the product of a semigroup.
  class Congruence {
   public:
    Congruence(Semigroup const& s, Partition p) : _partition(std::move(p)) {
      if (auto w = find_compatibility_violation(s, _partition)) {
        throw NotACongruence(_partition, *w);
      }
    }

    Partition const& partition() const noexcept {
      return _partition;
    }
    std::size_t num_classes() const noexcept {
      return _partition.num_classes();
    }
    std::uint32_t class_of(Element e) const {
      return _partition.class_of(e);
    }
    SubsetMask class_mask(std::size_t id) const {
      return _partition.class_mask(id);
    }
    std::vector<SubsetMask> classes() const {
      return _partition.classes();
    }
    bool is_universal() const noexcept {
      return _partition.is_universal();
    }

    friend bool operator==(Congruence const&, Congruence const&) = default;

   private:
    Partition _partition;
  };

  /// All congruences of s in restricted-growth (lexicographic) order.
  inline std::vector<Congruence> enumerate_congruences(Semigroup const& s,
                                                       std::size_t cap = kDefaultCongruenceCap) {
    if (s.order() > cap) {
      throw CapExceeded("enumerate_congruences", s.order(), cap);
    }
    std::vector<Congruence> out;
    for_each_set_partition(s.order(), [&](std::span<std::uint32_t const> labels) {
      Partition p(labels);
      if (is_congruence(s, p)) {
        out.emplace_back(s, std::move(p));
      }
    });
    return out;
  }

  /// S/p with classes numbered by least element; class_map[x] is the class of x.
  struct Quotient {
    Semigroup            semigroup;
    std::vector<Element> class_map;
  };

  inline Quotient quotient(Semigroup const& s, Congruence const& p) {
    require_same_size(s, p.partition());
    std::size_t const    k = p.num_classes();
    std::vector<Element> rep(k, 0);
    std::vector<bool>    seen(k, false);
    std::vector<Element> class_map(s.order());
    for (Element x = 0; x < s.order(); ++x) {
      auto c       = p.class_of(x);
      class_map[x] = c;
      if (!seen[c]) {
        seen[c] = true;
        rep[c]  = x;
      }
    }
    std::vector<Element> cells(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        cells[i * k + j] = p.class_of(s(rep[i], rep[j]));
      }
    }
    return Quotient{Semigroup(k, std::move(cells)), std::move(class_map)};
  }

  /// The two-sided identity of s, if any.
  inline std::optional<Element> identity_element(Semigroup const& s) {
    for (Element e = 0; e < s.order(); ++e) {
      bool ok = true;
      for (Element x = 0; x < s.order() && ok; ++x) {
        ok = s(e, x) == x && s(x, e) == x;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  struct MonoidWitness {
    SubsetMask identity_class;
  };

  /// A monoid congruence is one whose quotient has an identity element.
  /// Returns the class of s acting as that identity.
  inline std::optional<MonoidWitness> classify_monoid_congruence(Semigroup const& s,
                                                                 Congruence const& p) {
    auto q = quotient(s, p);
    auto e = identity_element(q.semigroup);
    if (!e) {
      return std::nullopt;
    }
    return MonoidWitness{p.class_mask(*e)};
  }

  /// Union of the classes with the given ids.
  inline SubsetMask class_union(Congruence const& p, std::span<std::size_t const> ids) {
    SubsetMask out = SubsetMask::empty(p.partition().size());
    for (auto id : ids) {
      out |= p.class_mask(id);
    }
    return out;
  }

  /// True iff every class lies wholly inside or wholly outside a.
  inline bool is_class_union(Partition const& p, SubsetMask a) {
    if (a.order() != p.size()) {
      throw InvalidArgument("subset order does not match partition size");
    }
    for (auto const& block : p.classes()) {
      if (block.intersects(a) && !block.subset_of(a)) {
        return false;
      }
    }
    return true;
  }

  inline bool is_class_union(Congruence const& p, SubsetMask a) {
    return is_class_union(p.partition(), a);
  }

}  // namespace sepcong
