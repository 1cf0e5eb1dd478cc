#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"
#include "relations.hpp"
#include "semigroup.hpp"
#include "separator.hpp"
#include "subset.hpp"

namespace sepcong {

  /// Default cap for whole-powerset scans such as maximal_family.
  inline constexpr std::size_t kDefaultSubsetCap = 20;

  /// The relation H...a = {(x, y) : xay ∈ H} as an n x n bit matrix;
  /// row x holds the y with xay ∈ H.
  class RelationFingerprint {
   public:
    RelationFingerprint(std::size_t order, std::vector<std::uint64_t> rows)
        : _order(order), _rows(std::move(rows)) {}

    std::size_t order() const noexcept {
      return _order;
    }
    bool at(Element x, Element y) const {
      return ((_rows.at(x) >> y) & 1U) != 0;
    }
    std::span<std::uint64_t const> rows() const noexcept {
      return _rows;
    }

    friend bool operator==(RelationFingerprint const&, RelationFingerprint const&) = default;

   private:
    std::size_t                _order;
    std::vector<std::uint64_t> _rows;
  };

  namespace detail {

    /// right_preimage[z] = {y : zy ∈ H}.
    inline std::vector<std::uint64_t> right_preimages(Semigroup const& s, SubsetMask h) {
      std::vector<std::uint64_t> out(s.order(), 0);
      for (Element z = 0; z < s.order(); ++z) {
        for (Element y = 0; y < s.order(); ++y) {
          if (h.contains(s(z, y))) {
            out[z] |= std::uint64_t{1} << y;
          }
        }
      }
      return out;
    }

    struct WordsHash {
      std::size_t operator()(std::vector<std::uint64_t> const& v) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
        for (auto w : v) {
          h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
      }
    };

    /// Groups elements a by the concatenated fingerprint rows of H_i...a over
    /// all members H_i. Equal keys are confirmed by full vector equality.
    inline Partition group_by_fingerprints(Semigroup const& s, std::span<SubsetMask const> members) {
      std::size_t const n = s.order();
      std::vector<std::vector<std::uint64_t>> keys(n);
      for (auto& k : keys) {
        k.reserve(members.size() * n);
      }
      for (auto const& h : members) {
        auto pre = right_preimages(s, h);
        for (Element a = 0; a < n; ++a) {
          for (Element x = 0; x < n; ++x) {
            keys[a].push_back(pre[s(x, a)]);
          }
        }
      }
      std::unordered_map<std::vector<std::uint64_t>, std::uint32_t, WordsHash> ids;
      std::vector<std::uint32_t>                                               labels(n);
      for (Element a = 0; a < n; ++a) {
        auto [it, inserted] = ids.try_emplace(keys[a], static_cast<std::uint32_t>(ids.size()));
        labels[a]           = it->second;
      }
      return Partition(labels);
    }

  }  // namespace detail

  inline RelationFingerprint h_dots_a(Semigroup const& s, SubsetMask h, Element a) {
    require_same_order(s, h);
    if (a >= s.order()) {
      throw InvalidArgument("element " + std::to_string(a) + " out of range");
    }
    auto                       pre = detail::right_preimages(s, h);
    std::vector<std::uint64_t> rows(s.order());
    for (Element x = 0; x < s.order(); ++x) {
      rows[x] = pre[s(x, a)];
    }
    return RelationFingerprint(s.order(), std::move(rows));
  }

  /// The fingerprint grouping behind p_h, without the compatibility check.
  inline Partition p_h_partition(Semigroup const& s, SubsetMask h) {
    require_same_order(s, h);
    SubsetMask const one[] = {h};
    return detail::group_by_fingerprints(s, one);
  }

  /// P_H: a ~ b iff H...a = H...b. A congruence for every subset H.
  inline Congruence p_h(Semigroup const& s, SubsetMask h) {
    return Congruence(s, p_h_partition(s, h));
  }

  ////////////////////////////////////////////////////////////////////////
  // Families (H; H_i, I)
  ////////////////////////////////////////////////////////////////////////

  class FamilyError : public Error {
   public:
    enum class Reason { EmptyMembers, IntersectionMismatch, NotSubsemigroup, Unvalidated };

    FamilyError(Reason r, std::string const& msg, SubsetMask h, SubsetMask intersection)
        : Error(msg), _reason(r), _h(h), _intersection(intersection) {}

    Reason reason() const noexcept {
      return _reason;
    }
    SubsetMask h() const noexcept {
      return _h;
    }
    /// Intersection of the members' separators, when computed.
    SubsetMask intersection() const noexcept {
      return _intersection;
    }

   private:
    Reason     _reason;
    SubsetMask _h;
    SubsetMask _intersection;
  };

  /// A family of subsets H_i together with H. Members are kept sorted by
  /// mask value with duplicates removed. Only validate_family and
  /// maximal_family produce validated families.
  class FamilySpec {
   public:
    /// An unchecked family; p_family rejects it.
    static FamilySpec unvalidated(SubsetMask h, std::vector<SubsetMask> members) {
      return FamilySpec(h, std::move(members), false);
    }

    SubsetMask h() const noexcept {
      return _h;
    }
    std::span<SubsetMask const> members() const noexcept {
      return _members;
    }
    bool validated() const noexcept {
      return _validated;
    }

    friend bool operator==(FamilySpec const&, FamilySpec const&) = default;

   private:
    friend FamilySpec validate_family(Semigroup const&, SubsetMask, std::vector<SubsetMask>);

    FamilySpec(SubsetMask h, std::vector<SubsetMask> members, bool validated)
        : _h(h), _members(std::move(members)), _validated(validated) {
      std::sort(_members.begin(), _members.end());
      _members.erase(std::unique(_members.begin(), _members.end()), _members.end());
    }

    SubsetMask              _h;
    std::vector<SubsetMask> _members;
    bool                    _validated;
  };

  /// Checks I ≠ ∅, H = ∩ Sep(H_i) and that H is a subsemigroup.
  inline FamilySpec validate_family(Semigroup const& s, SubsetMask h, std::vector<SubsetMask> members) {
    using Reason = FamilyError::Reason;
    require_same_order(s, h);
    for (auto m : members) {
      require_same_order(s, m);
    }
    FamilySpec fam(h, std::move(members), false);
    if (fam.members().empty()) {
      throw FamilyError(Reason::EmptyMembers, "family has no members", h, s.all());
    }
    SubsetMask meet = s.all();
    for (auto m : fam.members()) {
      meet &= separator(s, m);
    }
    if (meet != h) {
      throw FamilyError(Reason::IntersectionMismatch,
                        "separators of the members intersect to " + to_string(meet)
                            + ", not H = " + to_string(h),
                        h, meet);
    }
    if (!is_subsemigroup(s, h)) {
      throw FamilyError(Reason::NotSubsemigroup, "H = " + to_string(h) + " is not a subsemigroup",
                        h, meet);
    }
    fam._validated = true;
    return fam;
  }

  /// The fingerprint grouping behind p_family, without the compatibility check.
  inline Partition p_family_partition(Semigroup const& s, FamilySpec const& fam) {
    if (!fam.validated()) {
      throw FamilyError(FamilyError::Reason::Unvalidated, "family has not been validated",
                        fam.h(), fam.h());
    }
    return detail::group_by_fingerprints(s, fam.members());
  }

  /// P(H; H_i, I): a ~ b iff H_i...a = H_i...b for every member.
  inline Congruence p_family(Semigroup const& s, FamilySpec const& fam) {
    return Congruence(s, p_family_partition(s, fam));
  }

  /// All subsets A with H ⊆ Sep(A), ascending, validated as a family.
  inline FamilySpec maximal_family(Semigroup const& s, SubsetMask h,
                                   std::size_t cap = kDefaultSubsetCap) {
    require_same_order(s, h);
    if (s.order() > cap) {
      throw CapExceeded("maximal_family", s.order(), cap);
    }
    std::vector<SubsetMask> members;
    for_each_subset(s.order(), [&](SubsetMask a) {
      if (h.subset_of(separator(s, a))) {
        members.push_back(a);
      }
    });
    return validate_family(s, h, std::move(members));
  }

  /// H first, then the members; subsets in their string form, space separated.
  inline std::string format_family(FamilySpec const& fam) {
    std::string out = to_string(fam.h());
    for (auto m : fam.members()) {
      out += ' ';
      out += to_string(m);
    }
    return out;
  }

  /// Parses "H A1 A2 ..." into (H, members) without validating.
  inline std::pair<SubsetMask, std::vector<SubsetMask>> parse_family(std::string_view text,
                                                                     std::size_t      order) {
    std::vector<SubsetMask> parts;
    std::size_t             pos = 0;
    while (pos < text.size()) {
      auto b = text.find_first_not_of(" \t", pos);
      if (b == std::string_view::npos) {
        break;
      }
      auto e = text.find_first_of(" \t", b);
      parts.push_back(parse_subset(text.substr(b, e == std::string_view::npos ? e : e - b), order));
      pos = e == std::string_view::npos ? text.size() : e;
    }
    if (parts.empty()) {
      throw ParseError(0, "family string is empty");
    }
    SubsetMask h = parts.front();
    parts.erase(parts.begin());
    return {h, std::move(parts)};
  }

}  // namespace sepcong
