#pragma once

#include <string_view>

#include "errors.hpp"
#include "semigroup.hpp"
#include "subset.hpp"

namespace sepcong {

  inline void require_same_order(Semigroup const& s, SubsetMask a) {
    if (a.order() != s.order()) {
      throw InvalidArgument("subset of order " + std::to_string(a.order())
                            + " used with a semigroup of order " + std::to_string(s.order()));
    }
  }

  /// Elements x with xA ⊆ A and Ax ⊆ A. The empty set has idealizer S.
  inline SubsetMask idealizer(Semigroup const& s, SubsetMask a) {
    require_same_order(s, a);
    SubsetMask out = s.none();
    for (Element x = 0; x < s.order(); ++x) {
      bool stable = true;
      a.for_each([&](Element y) { stable = stable && a.contains(s(x, y)) && a.contains(s(y, x)); });
      if (stable) {
        out.insert(x);
      }
    }
    return out;
  }

  /// Id(A) ∩ Id(S \ A): the elements that stabilize both A and its complement.
  inline SubsetMask separator(Semigroup const& s, SubsetMask a) {
    return idealizer(s, a) & idealizer(s, a.complement());
  }

  enum class SeparatorSide { InA, InComplement, WholeS, Empty };

  inline std::string_view to_string(SeparatorSide side) {
    switch (side) {
      case SeparatorSide::InA:
        return "InA";
      case SeparatorSide::InComplement:
        return "InComplement";
      case SeparatorSide::WholeS:
        return "WholeS";
      case SeparatorSide::Empty:
        return "Empty";
    }
    return "?";
  }

  /// Raised when a separator meets both A and S \ A. Never expected to
  /// happen; kept as an error so sweeps can report it.
  class StraddlingSeparator : public Error {
   public:
    StraddlingSeparator(SubsetMask a, SubsetMask sep)
        : Error("Sep(" + to_string(a) + ") = " + to_string(sep)
                + " meets both the subset and its complement"),
          _subset(a),
          _separator(sep) {}

    SubsetMask subset() const noexcept {
      return _subset;
    }
    SubsetMask separator() const noexcept {
      return _separator;
    }

   private:
    SubsetMask _subset;
    SubsetMask _separator;
  };

  namespace detail {
    inline SeparatorSide classify_side(SubsetMask a, SubsetMask sep) {
      if (!a.is_proper()) {
        return SeparatorSide::WholeS;
      }
      if (sep.is_empty()) {
        return SeparatorSide::Empty;
      }
      if (sep.subset_of(a)) {
        return SeparatorSide::InA;
      }
      if (sep.subset_of(a.complement())) {
        return SeparatorSide::InComplement;
      }
      throw StraddlingSeparator(a, sep);
    }
  }  // namespace detail

  struct SeparatorReport {
    SubsetMask    subset;
    SubsetMask    idealizer_of_subset;
    SubsetMask    idealizer_of_complement;
    SubsetMask    separator;
    SeparatorSide side;
  };

  /// Side is WholeS when A is empty or all of S.
  inline SeparatorReport separator_report(Semigroup const& s, SubsetMask a) {
    SeparatorReport r{a, idealizer(s, a), idealizer(s, a.complement()), {}, SeparatorSide::WholeS};
    r.separator = r.idealizer_of_subset & r.idealizer_of_complement;
    r.side      = detail::classify_side(a, r.separator);
    return r;
  }

  /// Which side of the cut A | S\A the separator lies on. A must be proper.
  inline SeparatorSide sep_side(Semigroup const& s, SubsetMask a) {
    require_same_order(s, a);
    if (!a.is_proper()) {
      throw InvalidArgument("sep_side needs a nonempty proper subset, got " + to_string(a));
    }
    return detail::classify_side(a, separator(s, a));
  }

  /// Two-sided unitary: ab ∈ U with a ∈ U forces b ∈ U, and with b ∈ U forces a ∈ U.
  inline bool is_unitary(Semigroup const& s, SubsetMask u) {
    require_same_order(s, u);
    for (Element a = 0; a < s.order(); ++a) {
      for (Element b = 0; b < s.order(); ++b) {
        if (!u.contains(s(a, b))) {
          continue;
        }
        if (u.contains(a) != u.contains(b)) {
          return false;
        }
      }
    }
    return true;
  }

  /// Nonempty and closed under the product.
  inline bool is_subsemigroup(Semigroup const& s, SubsetMask h) {
    require_same_order(s, h);
    if (h.is_empty()) {
      return false;
    }
    bool closed = true;
    h.for_each([&](Element x) { h.for_each([&](Element y) { closed = closed && h.contains(s(x, y)); }); });
    return closed;
  }

}  // namespace sepcong
