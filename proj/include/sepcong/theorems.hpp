#pragma once

#include <array>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"
#include "pcongruence.hpp"
#include "relations.hpp"
#include "semigroup.hpp"
#include "separator.hpp"
#include "subset.hpp"

namespace sepcong {

  ////////////////////////////////////////////////////////////////////////
  // Results
  ////////////////////////////////////////////////////////////////////////

  enum class TheoremId : std::size_t {
    ClassUnionSeparator = 0,  // separator of a union of classes
    FamilyCongruence,         // P(H; H_i, I) is a congruence, H_i and H saturated
    ConstructionForward,      // H is the identity class of S / P(H; H_i, I)
    ConstructionConverse,     // p = P(H; S_k, K)
    Sandwich,                 // P(H; H_i, I) ⊆ p ⊆ P_H over the maximal family
    NonUniversalExistence     // non-universal monoid congruence <=> some proper Sep A ≠ ∅
  };

  inline constexpr std::size_t kNumTheorems = 6;

  inline constexpr std::array<TheoremId, kNumTheorems> kAllTheorems = {
      TheoremId::ClassUnionSeparator, TheoremId::FamilyCongruence,
      TheoremId::ConstructionForward, TheoremId::ConstructionConverse,
      TheoremId::Sandwich,            TheoremId::NonUniversalExistence};

  /// Short labels used in reports: T1, T2, T3F, T3C, T4, C5.
  inline std::string_view to_string(TheoremId id) {
    constexpr std::array<std::string_view, kNumTheorems> names
        = {"T1", "T2", "T3F", "T3C", "T4", "C5"};
    return names[static_cast<std::size_t>(id)];
  }

  inline std::optional<TheoremId> parse_theorem_id(std::string_view s) {
    for (auto id : kAllTheorems) {
      if (to_string(id) == s) {
        return id;
      }
    }
    return std::nullopt;
  }

  enum class Status { Pass, Fail, NotApplicable, Candidate };

  inline std::string_view to_string(Status s) {
    switch (s) {
      case Status::Pass:
        return "pass";
      case Status::Fail:
        return "fail";
      case Status::NotApplicable:
        return "not-applicable";
      case Status::Candidate:
        return "candidate";
    }
    return "?";
  }

  /// Hunt runs the commutative-only checks on non-commutative semigroups and
  /// reports violations there as Candidate rather than Fail.
  enum class CheckMode { Strict, Hunt };

  /// Inputs needed to replay a check. Unused fields stay empty.
  struct Witness {
    std::optional<Partition>  congruence;
    std::vector<std::size_t>  selection;
    std::optional<SubsetMask> h;
    std::vector<SubsetMask>   members;
    std::optional<SubsetMask> subset;

    friend bool operator==(Witness const&, Witness const&) = default;
  };

  struct TheoremResult {
    TheoremId                id;
    Status                   status = Status::Pass;
    std::string              detail;
    std::optional<Witness>   witness;
    std::vector<std::string> notes;
  };

  namespace detail {

    inline TheoremResult not_applicable(TheoremId id, std::string why) {
      return TheoremResult{id, Status::NotApplicable, std::move(why), std::nullopt, {}};
    }

    /// Whether a commutative-only check should run, and how a violation is filed.
    inline std::optional<Status> violation_status(Semigroup const& s, CheckMode mode) {
      if (s.is_commutative()) {
        return Status::Fail;
      }
      if (mode == CheckMode::Hunt) {
        return Status::Candidate;
      }
      return std::nullopt;
    }

    inline TheoremResult violated(TheoremId id, Status st, std::string detail, Witness w) {
      return TheoremResult{id, st, std::move(detail), std::move(w), {}};
    }

    inline std::string describe(CompatibilityWitness w) {
      return std::to_string(w.a) + " ~ " + std::to_string(w.b) + " separated by "
             + (w.left ? "left" : "right") + " multiplication with " + std::to_string(w.c);
    }

    inline Witness family_witness(SubsetMask h, std::span<SubsetMask const> members) {
      Witness w;
      w.h = h;
      w.members.assign(members.begin(), members.end());
      return w;
    }

  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Individual checks
  ////////////////////////////////////////////////////////////////////////

  /// Sep(U) is empty or saturated by p, where U is the union of the selected classes.
  inline TheoremResult check_theorem1(Semigroup const& s, Congruence const& p,
                                      std::span<std::size_t const> selection) {
    constexpr auto id = TheoremId::ClassUnionSeparator;
    for (auto c : selection) {
      if (c >= p.num_classes()) {
        throw InvalidArgument("class id " + std::to_string(c) + " out of range");
      }
    }
    SubsetMask const u   = class_union(p, selection);
    SubsetMask const sep = separator(s, u);
    if (sep.is_empty() || is_class_union(p, sep)) {
      return TheoremResult{id, Status::Pass, {}, std::nullopt, {}};
    }
    Witness w;
    w.congruence = p.partition();
    w.selection.assign(selection.begin(), selection.end());
    w.subset = u;
    return detail::violated(id, Status::Fail,
                            "Sep(" + to_string(u) + ") = " + to_string(sep)
                                + " is not a union of classes",
                            std::move(w));
  }

  /// P(H; H_i, I) is a congruence and every H_i and H are unions of its classes.
  inline TheoremResult check_theorem2(Semigroup const& s, FamilySpec const& fam) {
    constexpr auto id   = TheoremId::FamilyCongruence;
    Partition      part = p_family_partition(s, fam);
    auto           w    = detail::family_witness(fam.h(), fam.members());
    if (auto bad = find_compatibility_violation(s, part)) {
      return detail::violated(id, Status::Fail,
                              "P(H;H_i,I) = " + to_string(part)
                                  + " is not a congruence: " + detail::describe(*bad),
                              std::move(w));
    }
    for (auto m : fam.members()) {
      if (!is_class_union(part, m)) {
        return detail::violated(id, Status::Fail,
                                "member " + to_string(m) + " splits a class of " + to_string(part),
                                std::move(w));
      }
    }
    if (!is_class_union(part, fam.h())) {
      return detail::violated(id, Status::Fail,
                              "H = " + to_string(fam.h()) + " splits a class of " + to_string(part),
                              std::move(w));
    }
    return TheoremResult{id, Status::Pass, {}, std::nullopt, {}};
  }

  /// For commutative S: H is a single class of P(H; H_i, I) and is the
  /// identity of the quotient.
  inline TheoremResult check_theorem3_forward(Semigroup const& s, FamilySpec const& fam,
                                              CheckMode mode = CheckMode::Strict) {
    constexpr auto id = TheoremId::ConstructionForward;
    auto           st = detail::violation_status(s, mode);
    if (!st) {
      return detail::not_applicable(id, "semigroup is not commutative");
    }
    Partition  part = p_family_partition(s, fam);
    SubsetMask h    = fam.h();
    auto       w    = detail::family_witness(h, fam.members());
    if (auto bad = find_compatibility_violation(s, part)) {
      return detail::violated(id, *st, "P(H;H_i,I) is not a congruence: " + detail::describe(*bad),
                              std::move(w));
    }
    Element const first = h.elements().front();
    if (part.class_mask(part.class_of(first)) != h) {
      return detail::violated(id, *st,
                              "H = " + to_string(h) + " is not a single class of "
                                  + to_string(part),
                              std::move(w));
    }
    auto monoid = classify_monoid_congruence(s, Congruence(s, part));
    if (!monoid) {
      return detail::violated(id, *st, "quotient by " + to_string(part) + " has no identity",
                              std::move(w));
    }
    if (monoid->identity_class != h) {
      return detail::violated(id, *st,
                              "identity class is " + to_string(monoid->identity_class)
                                  + ", not H = " + to_string(h),
                              std::move(w));
    }
    return TheoremResult{id, Status::Pass, {}, std::nullopt, {}};
  }

  /// For commutative S and a monoid congruence p with identity class H:
  /// H = ∩ Sep(S_k) over the classes S_k, the family validates, and
  /// P(H; S_k, K) = p.
  inline TheoremResult check_theorem3_converse(Semigroup const& s, Congruence const& p,
                                               CheckMode mode = CheckMode::Strict) {
    constexpr auto id = TheoremId::ConstructionConverse;
    auto           st = detail::violation_status(s, mode);
    if (!st) {
      return detail::not_applicable(id, "semigroup is not commutative");
    }
    auto monoid = classify_monoid_congruence(s, p);
    if (!monoid) {
      return detail::not_applicable(id, "not a monoid congruence");
    }
    SubsetMask const h       = monoid->identity_class;
    auto const       classes = p.classes();
    Witness          w;
    w.congruence = p.partition();
    SubsetMask meet = s.all();
    for (auto c : classes) {
      meet &= separator(s, c);
    }
    if (meet != h) {
      return detail::violated(id, *st,
                              "intersection of class separators is " + to_string(meet)
                                  + ", identity class is " + to_string(h),
                              std::move(w));
    }
    try {
      auto fam   = validate_family(s, h, classes);
      auto recon = p_family_partition(s, fam);
      if (recon != p.partition()) {
        return detail::violated(id, *st,
                                "reconstruction gives " + to_string(recon) + ", expected "
                                    + to_string(p.partition()),
                                std::move(w));
      }
    } catch (FamilyError const& e) {
      return detail::violated(id, *st, std::string("class family rejected: ") + e.what(),
                              std::move(w));
    }
    return TheoremResult{id, Status::Pass, {}, std::nullopt, {}};
  }

  /// For commutative S and a monoid congruence p with identity class H:
  /// P(H; H_i, I) over the maximal family refines p, and p refines P_H.
  inline TheoremResult check_theorem4(Semigroup const& s, Congruence const& p,
                                      CheckMode   mode       = CheckMode::Strict,
                                      std::size_t subset_cap = kDefaultSubsetCap) {
    constexpr auto id = TheoremId::Sandwich;
    auto           st = detail::violation_status(s, mode);
    if (!st) {
      return detail::not_applicable(id, "semigroup is not commutative");
    }
    auto monoid = classify_monoid_congruence(s, p);
    if (!monoid) {
      return detail::not_applicable(id, "not a monoid congruence");
    }
    SubsetMask const h = monoid->identity_class;
    Witness          w;
    w.congruence = p.partition();
    w.h          = h;
    if (separator(s, h) != h) {
      return detail::violated(id, *st,
                              "Sep(H) = " + to_string(separator(s, h)) + " differs from H = "
                                  + to_string(h),
                              std::move(w));
    }
    std::optional<FamilySpec> fam;
    try {
      fam = maximal_family(s, h, subset_cap);
    } catch (FamilyError const& e) {
      return detail::violated(id, *st, std::string("maximal family rejected: ") + e.what(),
                              std::move(w));
    }
    Partition lower = p_family_partition(s, *fam);
    Partition upper = p_h_partition(s, h);
    if (!lower.refines(p.partition())) {
      return detail::violated(id, *st,
                              "P(H;H_i,I) = " + to_string(lower) + " does not refine p = "
                                  + to_string(p.partition()),
                              std::move(w));
    }
    if (!p.partition().refines(upper)) {
      return detail::violated(id, *st,
                              "p = " + to_string(p.partition()) + " does not refine P_H = "
                                  + to_string(upper),
                              std::move(w));
    }
    return TheoremResult{id, Status::Pass, {}, std::nullopt, {}};
  }

  /// Left side of the existence equivalence: some monoid congruence has at
  /// least two classes.
  inline bool has_nonuniversal_monoid_congruence(Semigroup const& s,
                                                 std::size_t cap = kDefaultCongruenceCap) {
    for (auto const& p : enumerate_congruences(s, cap)) {
      if (!p.is_universal() && classify_monoid_congruence(s, p)) {
        return true;
      }
    }
    return false;
  }

  /// Right side: some subset A with ∅ ⊂ A ⊂ S has Sep(A) ≠ ∅.
  inline bool has_separated_proper_subset(Semigroup const& s, std::size_t cap = kDefaultSubsetCap) {
    if (s.order() > cap) {
      throw CapExceeded("subset scan", s.order(), cap);
    }
    bool found = false;
    for_each_subset(s.order(), [&](SubsetMask a) {
      found = found || (a.is_proper() && !separator(s, a).is_empty());
    });
    return found;
  }

  /// The existence equivalence, plus its construction: for every proper A
  /// with Sep(A) ≠ ∅, Sep(A) is the identity class of S / P_A and P_A is not
  /// universal. The alternative reading with P_{Sep A} is evaluated too and
  /// any disagreement between the two readings is recorded in notes.
  inline TheoremResult check_corollary5(Semigroup const& s, CheckMode mode = CheckMode::Strict,
                                        std::size_t congruence_cap = kDefaultCongruenceCap,
                                        std::size_t subset_cap     = kDefaultSubsetCap) {
    constexpr auto id = TheoremId::NonUniversalExistence;
    auto           st = detail::violation_status(s, mode);
    if (!st) {
      return detail::not_applicable(id, "semigroup is not commutative");
    }
    bool const lhs = has_nonuniversal_monoid_congruence(s, congruence_cap);
    bool const rhs = has_separated_proper_subset(s, subset_cap);
    TheoremResult result{id, Status::Pass,
                         std::string("lhs=") + (lhs ? "true" : "false")
                             + " rhs=" + (rhs ? "true" : "false"),
                         std::nullopt, {}};
    if (lhs != rhs) {
      return detail::violated(id, *st, "equivalence broken: " + result.detail, Witness{});
    }
    auto identity_class_of = [&](SubsetMask gen) -> std::optional<SubsetMask> {
      Partition part = p_h_partition(s, gen);
      if (part.is_universal() || !is_congruence(s, part)) {
        return std::nullopt;
      }
      auto m = classify_monoid_congruence(s, Congruence(s, part));
      return m ? std::optional<SubsetMask>(m->identity_class) : std::nullopt;
    };
    std::optional<TheoremResult> failure;
    for_each_subset(s.order(), [&](SubsetMask a) {
      if (failure || !a.is_proper()) {
        return;
      }
      SubsetMask const sep = separator(s, a);
      if (sep.is_empty()) {
        return;
      }
      bool const by_subset = identity_class_of(a) == sep;
      bool const by_sep    = identity_class_of(sep) == sep;
      if (by_subset != by_sep) {
        result.notes.push_back("A=" + to_string(a) + ": P_A reading "
                               + (by_subset ? "holds" : "fails") + ", P_SepA reading "
                               + (by_sep ? "holds" : "fails"));
      }
      if (!by_subset) {
        Witness w;
        w.subset = a;
        failure  = detail::violated(id, *st,
                                    "Sep(" + to_string(a) + ") = " + to_string(sep)
                                        + " is not the identity class of a non-universal S/P_A",
                                    std::move(w));
      }
    });
    if (failure) {
      failure->notes = std::move(result.notes);
      return *failure;
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Replay
  ////////////////////////////////////////////////////////////////////////

  /// Re-runs the check a result came from, using only its witness.
  inline TheoremResult replay(Semigroup const& s, TheoremResult const& r,
                              CheckMode mode = CheckMode::Strict) {
    if (!r.witness) {
      if (r.id == TheoremId::NonUniversalExistence) {
        return check_corollary5(s, mode);
      }
      throw InvalidArgument("result carries no witness to replay");
    }
    Witness const& w = *r.witness;
    switch (r.id) {
      case TheoremId::ClassUnionSeparator:
        return check_theorem1(s, Congruence(s, *w.congruence), w.selection);
      case TheoremId::FamilyCongruence:
      case TheoremId::ConstructionForward: {
        FamilySpec fam = [&] {
          try {
            return validate_family(s, *w.h, w.members);
          } catch (FamilyError const&) {
            return FamilySpec::unvalidated(*w.h, w.members);
          }
        }();
        if (!fam.validated()) {
          return detail::violated(r.id, Status::Fail, "family does not validate", w);
        }
        return r.id == TheoremId::FamilyCongruence ? check_theorem2(s, fam)
                                                   : check_theorem3_forward(s, fam, mode);
      }
      case TheoremId::ConstructionConverse:
        return check_theorem3_converse(s, Congruence(s, *w.congruence), mode);
      case TheoremId::Sandwich:
        return check_theorem4(s, Congruence(s, *w.congruence), mode);
      case TheoremId::NonUniversalExistence:
        return check_corollary5(s, mode);
    }
    throw InvalidArgument("unknown theorem id");
  }

  ////////////////////////////////////////////////////////////////////////
  // Whole-semigroup verification
  ////////////////////////////////////////////////////////////////////////

  struct VerifyOptions {
    /// Which checks run; indexed by TheoremId.
    std::array<bool, kNumTheorems> enabled = {true, true, true, true, true, true};
    /// T1 over every class selection, and T2/T3F over every
    /// validating subfamily of each maximal family.
    bool          exhaustive_selections = false;
    std::size_t   random_selections     = 4;
    /// Class-count limit for exhaustive T1 selections.
    std::size_t   exhaustive_class_cap = 16;
    /// Maximal families larger than this are not expanded into subfamilies.
    std::size_t   subfamily_cap  = 10;
    bool          hunt           = false;
    std::uint64_t seed           = 0;
    std::size_t   congruence_cap = kDefaultCongruenceCap;
    std::size_t   subset_cap     = kDefaultSubsetCap;
    unsigned      jobs           = 1;

    bool runs(TheoremId id) const {
      return enabled[static_cast<std::size_t>(id)];
    }
  };

  struct TheoremTally {
    std::size_t pass           = 0;
    std::size_t fail           = 0;
    std::size_t not_applicable = 0;
    std::size_t candidate      = 0;

    std::size_t checks() const noexcept {
      return pass + fail + not_applicable + candidate;
    }

    void add(Status s) noexcept {
      switch (s) {
        case Status::Pass:
          ++pass;
          break;
        case Status::Fail:
          ++fail;
          break;
        case Status::NotApplicable:
          ++not_applicable;
          break;
        case Status::Candidate:
          ++candidate;
          break;
      }
    }

    /// "fail" if anything failed, else "candidate", "pass", "not-applicable", "skipped".
    std::string_view summary() const noexcept {
      if (fail > 0) {
        return "fail";
      }
      if (candidate > 0) {
        return "candidate";
      }
      if (pass > 0) {
        return "pass";
      }
      if (not_applicable > 0) {
        return "not-applicable";
      }
      return "skipped";
    }
  };

  struct SemigroupReport {
    std::size_t                              index = 0;
    Semigroup                                semigroup;
    std::size_t                              congruences        = 0;
    std::size_t                              monoid_congruences = 0;
    std::array<TheoremTally, kNumTheorems>   tallies{};
    std::optional<std::pair<bool, bool>>     corollary;  // (lhs, rhs)
    /// Failed and candidate results, in the order they were produced.
    std::vector<TheoremResult>               findings;
    std::vector<std::string>                 notes;
    std::optional<std::string>               error;

    explicit SemigroupReport(Semigroup s) : semigroup(std::move(s)) {}

    TheoremTally const& tally(TheoremId id) const {
      return tallies[static_cast<std::size_t>(id)];
    }

    std::size_t failures() const noexcept {
      std::size_t f = error ? 1 : 0;
      for (auto const& t : tallies) {
        f += t.fail;
      }
      return f;
    }

    std::size_t candidates() const noexcept {
      std::size_t c = 0;
      for (auto const& t : tallies) {
        c += t.candidate;
      }
      return c;
    }
  };

  struct VerificationReport {
    std::vector<SemigroupReport> entries;
    double                       elapsed_seconds = 0.0;

    std::size_t failures() const noexcept {
      std::size_t f = 0;
      for (auto const& e : entries) {
        f += e.failures();
      }
      return f;
    }

    std::size_t candidates() const noexcept {
      std::size_t c = 0;
      for (auto const& e : entries) {
        c += e.candidates();
      }
      return c;
    }

    std::size_t notes() const noexcept {
      std::size_t c = 0;
      for (auto const& e : entries) {
        c += e.notes.size();
      }
      return c;
    }
  };

  namespace detail {

    inline void record(SemigroupReport& rep, TheoremResult r) {
      rep.tallies[static_cast<std::size_t>(r.id)].add(r.status);
      for (auto& n : r.notes) {
        rep.notes.push_back(std::move(n));
      }
      r.notes.clear();
      if (r.status == Status::Fail || r.status == Status::Candidate) {
        rep.findings.push_back(std::move(r));
      }
    }

    /// Class selections for T1: every subset of classes when
    /// exhaustive, else each single class, all classes, none, and
    /// random_selections seeded draws.
    inline std::vector<std::vector<std::size_t>>
    class_selections(std::size_t k, VerifyOptions const& opt, std::size_t corpus_index,
                     std::size_t congruence_index) {
      std::vector<std::vector<std::size_t>> out;
      auto from_bits = [k](std::uint64_t bits) {
        std::vector<std::size_t> sel;
        for (std::size_t c = 0; c < k; ++c) {
          if ((bits >> c) & 1U) {
            sel.push_back(c);
          }
        }
        return sel;
      };
      if (opt.exhaustive_selections && k <= opt.exhaustive_class_cap) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
          out.push_back(from_bits(bits));
        }
        return out;
      }
      std::set<std::uint64_t> chosen;
      std::uint64_t const     all = SubsetMask::full_bits(k);
      chosen.insert(0);
      chosen.insert(all);
      for (std::size_t c = 0; c < k; ++c) {
        chosen.insert(std::uint64_t{1} << c);
      }
      std::seed_seq   seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                        static_cast<std::uint32_t>(corpus_index),
                        static_cast<std::uint32_t>(congruence_index)};
      std::mt19937_64 rng(seq);
      for (std::size_t r = 0; r < opt.random_selections; ++r) {
        chosen.insert(rng() & all);
      }
      for (auto bits : chosen) {
        out.push_back(from_bits(bits));
      }
      return out;
    }

    using FamilyKeys = std::set<std::pair<std::uint64_t, std::vector<std::uint64_t>>>;

    /// True the first time a (H, members) family is offered.
    inline bool first_sighting(FamilyKeys& seen, SubsetMask h, std::span<SubsetMask const> members) {
      std::vector<std::uint64_t> bits;
      for (auto m : members) {
        bits.push_back(m.bits());
      }
      std::sort(bits.begin(), bits.end());
      bits.erase(std::unique(bits.begin(), bits.end()), bits.end());
      return seen.emplace(h.bits(), std::move(bits)).second;
    }

  }  // namespace detail

  /// Runs every enabled check over one semigroup. Deterministic for a fixed
  /// seed and corpus index.
  inline SemigroupReport verify_all(Semigroup const& s, VerifyOptions const& opt,
                                    std::size_t corpus_index = 0) {
    if (s.order() > opt.congruence_cap) {
      throw CapExceeded("verify", s.order(), opt.congruence_cap);
    }
    if (s.order() > opt.subset_cap) {
      throw CapExceeded("verify", s.order(), opt.subset_cap);
    }
    CheckMode const mode = opt.hunt ? CheckMode::Hunt : CheckMode::Strict;
    SemigroupReport rep(s);
    rep.index = corpus_index;

    auto const congruences = enumerate_congruences(s, opt.congruence_cap);
    rep.congruences        = congruences.size();
    std::vector<std::optional<MonoidWitness>> monoid;
    for (auto const& p : congruences) {
      monoid.push_back(classify_monoid_congruence(s, p));
      if (monoid.back()) {
        ++rep.monoid_congruences;
      }
    }

    if (opt.runs(TheoremId::ClassUnionSeparator)) {
      for (std::size_t i = 0; i < congruences.size(); ++i) {
        for (auto const& sel :
             detail::class_selections(congruences[i].num_classes(), opt, corpus_index, i)) {
          detail::record(rep, check_theorem1(s, congruences[i], sel));
        }
      }
    }

    bool const family_checks
        = opt.runs(TheoremId::FamilyCongruence) || opt.runs(TheoremId::ConstructionForward);
    if (family_checks) {
      detail::FamilyKeys seen;
      auto run_family = [&](FamilySpec const& fam) {
        if (!detail::first_sighting(seen, fam.h(), fam.members())) {
          return;
        }
        if (opt.runs(TheoremId::FamilyCongruence)) {
          detail::record(rep, check_theorem2(s, fam));
        }
        if (opt.runs(TheoremId::ConstructionForward)) {
          detail::record(rep, check_theorem3_forward(s, fam, mode));
        }
      };

      // Singleton families {A} with H = Sep(A) ≠ ∅.
      for_each_subset(s.order(), [&](SubsetMask a) {
        SubsetMask const sep = separator(s, a);
        if (sep.is_empty()) {
          return;
        }
        SubsetMask const one[] = {a};
        try {
          run_family(validate_family(s, sep, {a}));
        } catch (FamilyError const& e) {
          detail::record(rep, detail::violated(TheoremId::FamilyCongruence, Status::Fail,
                                               std::string("singleton family rejected: ") + e.what(),
                                               detail::family_witness(sep, one)));
        }
      });

      std::set<std::uint64_t> identity_classes;
      for (std::size_t i = 0; i < congruences.size(); ++i) {
        if (!monoid[i]) {
          continue;
        }
        SubsetMask const h = monoid[i]->identity_class;
        try {
          run_family(validate_family(s, h, congruences[i].classes()));
        } catch (FamilyError const&) {
          // Reported by the converse check.
        }
        identity_classes.insert(h.bits());
      }

      for (auto bits : identity_classes) {
        SubsetMask const          h(s.order(), bits);
        std::optional<FamilySpec> maximal;
        try {
          maximal = maximal_family(s, h, opt.subset_cap);
        } catch (FamilyError const&) {
          continue;  // Reported by the sandwich check.
        }
        run_family(*maximal);
        auto const members = maximal->members();
        if (!opt.exhaustive_selections || members.size() > opt.subfamily_cap) {
          continue;
        }
        std::vector<SubsetMask> seps;
        for (auto m : members) {
          seps.push_back(separator(s, m));
        }
        for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << members.size()); ++pick) {
          SubsetMask              meet = s.all();
          std::vector<SubsetMask> chosen;
          for (std::size_t j = 0; j < members.size(); ++j) {
            if ((pick >> j) & 1U) {
              meet &= seps[j];
              chosen.push_back(members[j]);
            }
          }
          if (meet == h) {
            run_family(validate_family(s, h, std::move(chosen)));
          }
        }
      }
    }

    for (std::size_t i = 0; i < congruences.size(); ++i) {
      if (opt.runs(TheoremId::ConstructionConverse)) {
        detail::record(rep, check_theorem3_converse(s, congruences[i], mode));
      }
      if (opt.runs(TheoremId::Sandwich)) {
        detail::record(rep, check_theorem4(s, congruences[i], mode, opt.subset_cap));
      }
    }

    if (opt.runs(TheoremId::NonUniversalExistence)) {
      auto r = check_corollary5(s, mode, opt.congruence_cap, opt.subset_cap);
      if (r.status != Status::NotApplicable) {
        rep.corollary = std::make_pair(has_nonuniversal_monoid_congruence(s, opt.congruence_cap),
                                       has_separated_proper_subset(s, opt.subset_cap));
      }
      detail::record(rep, std::move(r));
    }
    return rep;
  }

  /// verify_all over each semigroup on up to opt.jobs threads. Entries are
  /// ordered by corpus index; a semigroup that cannot be verified (for
  /// example above the caps) is reported with an error and counts as a failure.
  inline VerificationReport sweep_corpus(std::span<Semigroup const> corpus, VerifyOptions const& opt) {
    auto const                                   start = std::chrono::steady_clock::now();
    std::vector<std::optional<SemigroupReport>> slots(corpus.size());
    std::atomic<std::size_t>                     next{0};
    auto                                         worker = [&] {
      for (std::size_t i = next++; i < corpus.size(); i = next++) {
        try {
          slots[i] = verify_all(corpus[i], opt, i);
        } catch (Error const& e) {
          SemigroupReport bad(corpus[i]);
          bad.index = i;
          bad.error = e.what();
          slots[i]  = std::move(bad);
        }
      }
    };
    unsigned const jobs = std::max(1U, opt.jobs);
    if (jobs == 1 || corpus.size() < 2) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < std::min<std::size_t>(jobs, corpus.size()); ++w) {
        pool.emplace_back(worker);
      }
    }
    VerificationReport report;
    for (auto& slot : slots) {
      report.entries.push_back(std::move(*slot));
    }
    report.elapsed_seconds
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  }

}  // namespace sepcong
