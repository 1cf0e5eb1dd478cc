#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace sepcong;
using fixtures::set;

namespace {
  std::size_t count_failures(VerificationReport const& r) {
    return r.failures();
  }
}  // namespace

TEST(ClassUnionSeparator, Examples) {
  auto                           e3 = fixtures::e3();
  Congruence                     p(e3, parse_partition("0;1,2", 3));
  std::vector<std::size_t> const units = {p.class_of(1)};
  EXPECT_EQ(check_theorem1(e3, p, units).status, Status::Pass);

  auto                           e5 = fixtures::e5();
  Congruence                     q(e5, Partition::identity(3));
  std::vector<std::size_t> const mid = {1};
  EXPECT_EQ(check_theorem1(e5, q, mid).status, Status::Pass);
  std::vector<std::size_t> const bad = {3};
  EXPECT_THROW(check_theorem1(e5, q, bad), InvalidArgument);
}

TEST(ClassUnionSeparator, ExhaustiveOverSmallSemigroups) {
  for (auto const& s : fixtures::all_up_to(3)) {
    for (auto const& p : enumerate_congruences(s)) {
      std::size_t const k = p.num_classes();
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
        std::vector<std::size_t> sel;
        for (std::size_t c = 0; c < k; ++c) {
          if ((bits >> c) & 1U) {
            sel.push_back(c);
          }
        }
        auto r = check_theorem1(s, p, sel);
        ASSERT_EQ(r.status, Status::Pass) << format_table(s) << r.detail;
      }
    }
  }
}

TEST(FamilyCongruence, Examples) {
  auto e3 = fixtures::e3();
  EXPECT_EQ(check_theorem2(e3, maximal_family(e3, set(e3, {1, 2}))).status, Status::Pass);
  auto e2 = fixtures::e2();
  EXPECT_EQ(check_theorem2(e2, validate_family(e2, e2.all(), {e2.all()})).status, Status::Pass);
  EXPECT_THROW(check_theorem2(e3, FamilySpec::unvalidated(set(e3, {1}), {set(e3, {1})})),
               FamilyError);
}

TEST(ConstructionForward, Examples) {
  auto e3 = fixtures::e3();
  auto r  = check_theorem3_forward(e3, validate_family(e3, set(e3, {1, 2}), {set(e3, {0})}));
  EXPECT_EQ(r.status, Status::Pass) << r.detail;

  auto e1 = fixtures::e1();
  EXPECT_EQ(check_theorem3_forward(e1, maximal_family(e1, set(e1, {1}))).status, Status::Pass);
}

TEST(ConstructionConverse, Examples) {
  auto e5 = fixtures::e5();
  for (auto const& p : enumerate_congruences(e5)) {
    auto r = check_theorem3_converse(e5, p);
    EXPECT_EQ(r.status, Status::Pass) << to_string(p.partition()) << r.detail;
  }
  auto e2 = fixtures::e2();
  EXPECT_EQ(check_theorem3_converse(e2, Congruence(e2, Partition::identity(2))).status,
            Status::NotApplicable);
}

TEST(Sandwich, Examples) {
  auto       e3 = fixtures::e3();
  Congruence p(e3, parse_partition("0;1,2", 3));
  EXPECT_EQ(check_theorem4(e3, p).status, Status::Pass);
  auto e2 = fixtures::e2();
  EXPECT_EQ(check_theorem4(e2, Congruence(e2, Partition::identity(2))).status,
            Status::NotApplicable);
  EXPECT_EQ(check_theorem4(e2, Congruence(e2, Partition::universal(2))).status, Status::Pass);
}

TEST(NonUniversalExistence, TruthValues) {
  auto rhs_of = [](Semigroup const& s) {
    return check_corollary5(s).detail;
  };
  EXPECT_EQ(rhs_of(fixtures::e1()), "lhs=true rhs=true");
  EXPECT_EQ(rhs_of(fixtures::e2()), "lhs=false rhs=false");
  EXPECT_EQ(rhs_of(fixtures::e3()), "lhs=true rhs=true");
  EXPECT_EQ(rhs_of(fixtures::e5()), "lhs=true rhs=true");
  for (auto const& s : {fixtures::e1(), fixtures::e2(), fixtures::e3(), fixtures::e5()}) {
    EXPECT_EQ(check_corollary5(s).status, Status::Pass);
  }
}

TEST(StrictMode, NonCommutativeIsNotApplicable) {
  auto left_zero = parse_table("2\n0 0\n1 1");
  ASSERT_FALSE(left_zero.is_commutative());
  EXPECT_EQ(check_corollary5(left_zero).status, Status::NotApplicable);
  for (auto const& p : enumerate_congruences(left_zero)) {
    EXPECT_EQ(check_theorem3_converse(left_zero, p).status, Status::NotApplicable);
    EXPECT_EQ(check_theorem4(left_zero, p).status, Status::NotApplicable);
  }
  auto rep = verify_all(left_zero, VerifyOptions{});
  EXPECT_EQ(rep.tally(TheoremId::NonUniversalExistence).not_applicable, 1U);
  EXPECT_FALSE(rep.corollary);
}

TEST(VerifyAll, WorkedExamples) {
  struct Case {
    Semigroup   s;
    std::size_t congruences;
    std::size_t monoid;
  };
  // Counts frozen from the naive partition filter in oracles.hpp.
  std::vector<Case> const cases = {
      {fixtures::e1(), 2, 2},
      {fixtures::e2(), 2, 1},
      {fixtures::e3(), 3, 3},
      {fixtures::e5(), 4, 4},
  };
  for (auto const& c : cases) {
    auto rep = verify_all(c.s, VerifyOptions{});
    EXPECT_EQ(rep.congruences, c.congruences) << format_table(c.s);
    EXPECT_EQ(rep.monoid_congruences, c.monoid) << format_table(c.s);
    EXPECT_EQ(rep.failures(), 0U) << format_table(c.s);
    EXPECT_EQ(rep.candidates(), 0U);
  }
}

TEST(VerifyAll, MonoidCountsMatchOracle) {
  for (auto const& s : fixtures::commutative_up_to(3)) {
    int const   n = static_cast<int>(s.order());
    auto const  t = fixtures::table_of(s);
    std::size_t expected = 0;
    auto const  all      = oracle::congruences(n, t);
    for (auto const& labels : all) {
      expected += oracle::monoid_identity_class(n, t, labels).has_value() ? 1 : 0;
    }
    auto rep = verify_all(s, VerifyOptions{});
    ASSERT_EQ(rep.congruences, all.size());
    ASSERT_EQ(rep.monoid_congruences, expected);
  }
}

TEST(Sweep, OrderTwoCommutative) {
  auto corpus = enumerate_commutative(2);
  auto rep    = sweep_corpus(corpus, VerifyOptions{});
  EXPECT_EQ(rep.entries.size(), 6U);
  EXPECT_EQ(count_failures(rep), 0U);
}

TEST(Sweep, WorkedExamplesAndEmpty) {
  std::vector<Semigroup> corpus = {fixtures::e1(), fixtures::e2(), fixtures::e3(), fixtures::e5()};
  EXPECT_EQ(sweep_corpus(corpus, VerifyOptions{}).failures(), 0U);
  std::vector<Semigroup> none;
  auto                   rep = sweep_corpus(none, VerifyOptions{});
  EXPECT_TRUE(rep.entries.empty());
  EXPECT_EQ(rep.failures(), 0U);
}

TEST(Sweep, ExhaustiveCommutativeUpToThree) {
  VerifyOptions opt;
  opt.exhaustive_selections = true;
  auto corpus               = fixtures::commutative_up_to(3);
  auto rep                  = sweep_corpus(corpus, opt);
  for (auto const& e : rep.entries) {
    for (auto const& f : e.findings) {
      ADD_FAILURE() << format_table(e.semigroup) << to_string(f.id) << ": " << f.detail;
    }
  }
  EXPECT_EQ(rep.failures(), 0U);
}

TEST(Sweep, CapExceededIsReportedAsFailure) {
  std::vector<Semigroup> corpus = {make_named("null", 9)};
  auto                   rep    = sweep_corpus(corpus, VerifyOptions{});
  ASSERT_EQ(rep.entries.size(), 1U);
  EXPECT_TRUE(rep.entries[0].error);
  EXPECT_EQ(rep.failures(), 1U);
}

TEST(Sweep, DeterministicAcrossJobs) {
  auto          corpus = enumerate_commutative(3);
  VerifyOptions a;
  a.seed = 7;
  VerifyOptions b = a;
  b.jobs          = 4;
  auto ra         = sweep_corpus(corpus, a);
  auto rb         = sweep_corpus(corpus, b);
  ASSERT_EQ(ra.entries.size(), rb.entries.size());
  for (std::size_t i = 0; i < ra.entries.size(); ++i) {
    EXPECT_EQ(ra.entries[i].index, i);
    EXPECT_EQ(rb.entries[i].index, i);
    EXPECT_EQ(ra.entries[i].semigroup, rb.entries[i].semigroup);
    for (auto id : kAllTheorems) {
      EXPECT_EQ(ra.entries[i].tally(id).pass, rb.entries[i].tally(id).pass);
    }
  }
}

TEST(Hunt, CandidatesReplay) {
  VerifyOptions opt;
  opt.hunt    = true;
  auto corpus = enumerate_all(3);
  std::vector<Semigroup> non_comm;
  for (auto const& s : corpus) {
    if (!s.is_commutative()) {
      non_comm.push_back(s);
    }
  }
  auto rep = sweep_corpus(non_comm, opt);
  EXPECT_EQ(rep.failures(), 0U);
  for (auto const& e : rep.entries) {
    for (auto const& f : e.findings) {
      ASSERT_EQ(f.status, Status::Candidate);
      auto again = replay(e.semigroup, f, CheckMode::Hunt);
      EXPECT_EQ(again.status, Status::Candidate) << format_table(e.semigroup) << f.detail;
      EXPECT_EQ(again.detail, f.detail);
    }
  }
}

TEST(Replay, PassingFixtureReplaysAsPass) {
  auto       e3 = fixtures::e3();
  Congruence p(e3, parse_partition("0;1,2", 3));
  Witness    w;
  w.congruence = p.partition();
  TheoremResult r{TheoremId::Sandwich, Status::Pass, {}, w, {}};
  EXPECT_EQ(replay(e3, r).status, Status::Pass);
  TheoremResult bare{TheoremId::Sandwich, Status::Pass, {}, std::nullopt, {}};
  EXPECT_THROW(replay(e3, bare), InvalidArgument);
}

TEST(TheoremId, Labels) {
  EXPECT_EQ(to_string(TheoremId::ClassUnionSeparator), "T1");
  EXPECT_EQ(to_string(TheoremId::NonUniversalExistence), "C5");
  EXPECT_EQ(parse_theorem_id("T3C"), TheoremId::ConstructionConverse);
  EXPECT_EQ(parse_theorem_id("T9"), std::nullopt);
}

TEST(Replay, RejectedFamilyReplaysAsFail) {
  auto    e3 = fixtures::e3();
  Witness w;
  w.h       = set(e3, {2});
  w.members = {set(e3, {1})};
  TheoremResult r{TheoremId::FamilyCongruence, Status::Fail, {}, w, {}};
  EXPECT_EQ(replay(e3, r).status, Status::Fail);

  TheoremResult forward{TheoremId::ConstructionForward, Status::Pass, {}, std::nullopt, {}};
  forward.witness = Witness{std::nullopt, {}, set(e3, {1, 2}), {set(e3, {0})}, std::nullopt};
  EXPECT_EQ(replay(e3, forward).status, Status::Pass);
}
