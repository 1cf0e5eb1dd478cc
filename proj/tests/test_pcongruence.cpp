#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace sepcong;
using fixtures::set;

TEST(HDotsA, Examples) {
  auto e3 = fixtures::e3();
  auto f  = h_dots_a(e3, set(e3, {0}), 1);
  std::set<std::pair<int, int>> got;
  for (Element x = 0; x < 3; ++x) {
    for (Element y = 0; y < 3; ++y) {
      if (f.at(x, y)) {
        got.emplace(x, y);
      }
    }
  }
  EXPECT_EQ(got, (std::set<std::pair<int, int>>{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}}));

  for (auto const& s : fixtures::all_up_to(2)) {
    for (Element a = 0; a < s.order(); ++a) {
      auto all  = h_dots_a(s, s.all(), a);
      auto none = h_dots_a(s, s.none(), a);
      for (Element x = 0; x < s.order(); ++x) {
        for (Element y = 0; y < s.order(); ++y) {
          EXPECT_TRUE(all.at(x, y));
          EXPECT_FALSE(none.at(x, y));
        }
      }
    }
  }
}

TEST(HDotsA, MatchesTripleProduct) {
  for (auto const& s : fixtures::all_up_to(3)) {
    for_each_subset(s.order(), [&](SubsetMask h) {
      for (Element a = 0; a < s.order(); ++a) {
        auto f = h_dots_a(s, h, a);
        for (Element x = 0; x < s.order(); ++x) {
          for (Element y = 0; y < s.order(); ++y) {
            ASSERT_EQ(f.at(x, y), h.contains(s(x, s(a, y))));
          }
        }
      }
    });
  }
}

TEST(PH, Examples) {
  auto e3 = fixtures::e3();
  EXPECT_EQ(to_string(p_h(e3, set(e3, {1, 2})).partition()), "0;1,2");
  auto e2 = fixtures::e2();
  EXPECT_TRUE(p_h(e2, set(e2, {0})).is_universal());
  auto e1 = fixtures::e1();
  EXPECT_TRUE(p_h(e1, set(e1, {1})).partition().is_identity());
}

TEST(PH, IsCongruenceAndMatchesPairwiseDefinition) {
  for (auto const& s : fixtures::all_up_to(3)) {
    int const  n = static_cast<int>(s.order());
    auto const t = fixtures::table_of(s);
    for_each_subset(s.order(), [&](SubsetMask h) {
      auto part = p_h_partition(s, h);
      ASSERT_TRUE(is_congruence(s, part));
      ASSERT_EQ(fixtures::labels_of(part), oracle::p_h(n, t, fixtures::set_of(h)));
      // complementing H gives the same relation
      ASSERT_EQ(part, p_h_partition(s, h.complement()));
    });
  }
}

TEST(ValidateFamily, Examples) {
  auto e3  = fixtures::e3();
  auto fam = validate_family(e3, set(e3, {1, 2}), {set(e3, {0}), set(e3, {1, 2})});
  EXPECT_TRUE(fam.validated());

  try {
    validate_family(e3, set(e3, {1, 2}), {set(e3, {1})});
    FAIL() << "expected FamilyError";
  } catch (FamilyError const& e) {
    EXPECT_EQ(e.reason(), FamilyError::Reason::IntersectionMismatch);
    EXPECT_EQ(e.intersection(), set(e3, {1}));
  }

  for (auto const& s : {fixtures::e1(), fixtures::e2(), e3, fixtures::e5()}) {
    EXPECT_TRUE(validate_family(s, s.all(), {s.all()}).validated());
  }
}

TEST(ValidateFamily, Errors) {
  auto e3 = fixtures::e3();
  try {
    validate_family(e3, set(e3, {1, 2}), {});
    FAIL();
  } catch (FamilyError const& e) {
    EXPECT_EQ(e.reason(), FamilyError::Reason::EmptyMembers);
  }
  // E2: Sep{0} = ∅, so H = ∅ matches the intersection but is not a subsemigroup.
  auto e2 = fixtures::e2();
  try {
    validate_family(e2, e2.none(), {set(e2, {0})});
    FAIL();
  } catch (FamilyError const& e) {
    EXPECT_EQ(e.reason(), FamilyError::Reason::NotSubsemigroup);
  }
}

TEST(ValidateFamily, SortsAndDeduplicates) {
  auto e3  = fixtures::e3();
  auto fam = validate_family(e3, set(e3, {1, 2}), {set(e3, {1, 2}), set(e3, {0}), set(e3, {1, 2})});
  ASSERT_EQ(fam.members().size(), 2U);
  EXPECT_EQ(fam.members()[0], set(e3, {0}));
  EXPECT_EQ(fam.members()[1], set(e3, {1, 2}));
}

TEST(PFamily, Examples) {
  auto e3  = fixtures::e3();
  auto fam = validate_family(e3, set(e3, {1, 2}), {e3.none(), set(e3, {0}), set(e3, {1, 2}), e3.all()});
  EXPECT_EQ(to_string(p_family(e3, fam).partition()), "0;1,2");

  auto e2   = fixtures::e2();
  auto fam2 = validate_family(e2, e2.all(), {e2.none(), e2.all()});
  EXPECT_TRUE(p_family(e2, fam2).is_universal());

  EXPECT_THROW(p_family(e3, FamilySpec::unvalidated(set(e3, {1, 2}), {set(e3, {0})})), FamilyError);
}

TEST(PFamily, SingletonFamilyEqualsPH) {
  for (auto const& s : fixtures::all_up_to(3)) {
    for_each_subset(s.order(), [&](SubsetMask a) {
      auto sep = separator(s, a);
      if (sep.is_empty()) {
        return;
      }
      auto fam = validate_family(s, sep, {a});
      ASSERT_EQ(p_family(s, fam).partition(), p_h(s, a).partition());
    });
  }
}

namespace {
  // Validating families drawn from the maximal family of each nonempty H = Sep(H).
  template <typename F>
  void for_each_small_family(Semigroup const& s, F&& f) {
    for_each_subset(s.order(), [&](SubsetMask h) {
      if (h.is_empty() || separator(s, h) != h || !is_subsemigroup(s, h)) {
        return;
      }
      auto maximal = maximal_family(s, h);
      auto members = maximal.members();
      for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << members.size()); ++pick) {
        std::vector<SubsetMask> chosen;
        SubsetMask              meet = s.all();
        for (std::size_t j = 0; j < members.size(); ++j) {
          if ((pick >> j) & 1U) {
            chosen.push_back(members[j]);
            meet &= separator(s, members[j]);
          }
        }
        if (meet == h) {
          f(validate_family(s, h, chosen));
        }
      }
    });
  }
}  // namespace

TEST(PFamily, CommonRefinementAndOracle) {
  for (auto const& s : fixtures::all_up_to(3)) {
    int const  n = static_cast<int>(s.order());
    auto const t = fixtures::table_of(s);
    for_each_small_family(s, [&](FamilySpec const& fam) {
      auto      got  = p_family_partition(s, fam);
      Partition meet = Partition::universal(s.order());
      std::vector<oracle::Set> sets;
      for (auto m : fam.members()) {
        meet = common_refinement(meet, p_h(s, m).partition());
        sets.push_back(fixtures::set_of(m));
      }
      ASSERT_EQ(got, meet);
      ASSERT_EQ(fixtures::labels_of(got), oracle::p_family(n, t, sets));
      ASSERT_TRUE(is_congruence(s, got));
    });
  }
}

TEST(PFamily, AddingMembersRefines) {
  for (auto const& s : fixtures::all_up_to(3)) {
    for_each_small_family(s, [&](FamilySpec const& fam) {
      auto maximal = maximal_family(s, fam.h());
      ASSERT_TRUE(p_family(s, maximal).partition().refines(p_family(s, fam).partition()));
    });
  }
}

TEST(MaximalFamily, Examples) {
  auto e3 = fixtures::e3();
  EXPECT_EQ(format_family(maximal_family(e3, set(e3, {1, 2}))), "1,2 - 0 1,2 0,1,2");
  auto e1 = fixtures::e1();
  EXPECT_EQ(format_family(maximal_family(e1, set(e1, {1}))), "1 - 0 1 0,1");
  auto e2 = fixtures::e2();
  EXPECT_EQ(format_family(maximal_family(e2, e2.all())), "0,1 - 0,1");
}

TEST(MaximalFamily, MatchesScanOracle) {
  for (auto const& s : fixtures::all_up_to(3)) {
    int const  n = static_cast<int>(s.order());
    auto const t = fixtures::table_of(s);
    for_each_subset(s.order(), [&](SubsetMask h) {
      if (h.is_empty() || separator(s, h) != h || !is_subsemigroup(s, h)) {
        return;
      }
      std::vector<oracle::Set> expected;
      for (auto const& a : oracle::all_subsets(n)) {
        if (oracle::subset_of(fixtures::set_of(h), oracle::separator(n, t, a))) {
          expected.push_back(a);
        }
      }
      std::vector<oracle::Set> got;
      auto                     fam = maximal_family(s, h);
      for (auto m : fam.members()) {
        got.push_back(fixtures::set_of(m));
      }
      std::sort(expected.begin(), expected.end());
      std::sort(got.begin(), got.end());
      ASSERT_EQ(got, expected);
    });
  }
}

TEST(MaximalFamily, Errors) {
  auto e1 = fixtures::e1();
  // Sep{0} = Sep{1} = {1}, so H = {0} is never below a separator except of ∅ and S.
  EXPECT_THROW(maximal_family(e1, set(e1, {0})), FamilyError);
  EXPECT_THROW(maximal_family(make_named("null", 21), SubsetMask::full(21)), CapExceeded);
}

TEST(FamilyString, RoundTrip) {
  auto e3        = fixtures::e3();
  auto fam       = maximal_family(e3, set(e3, {1, 2}));
  auto [h, mems] = parse_family(format_family(fam), 3);
  EXPECT_EQ(validate_family(e3, h, mems), fam);
  EXPECT_THROW(parse_family("  ", 3), ParseError);
}
