#include <algorithm>
#include <set>
#include <variant>

#include <gtest/gtest.h>

#include "cantor/coding.hpp"
#include "cantor/errors.hpp"
#include "cantor/lambda_set.hpp"
#include "helpers.hpp"

using namespace cantor;
using testing_support::random_unit;
using testing_support::rng;
using testing_support::word;

namespace {

std::set<Word> as_set(const std::vector<Word>& words) { return {words.begin(), words.end()}; }

std::set<Word> words_of(std::initializer_list<const char*> texts) {
  std::set<Word> out;
  for (const char* t : texts) out.insert(word(t));
  return out;
}

double mid(const Bracket& b) { return b.midpoint().to_double(); }

/// Endpoint codes evaluated at the bracket ends must straddle x.
void expect_certified(const Bracket& b) {
  if (!b.code().explicit_tail()) {
    EXPECT_EQ(b.lo(), Rational(1, b.base()));
    return;
  }
  EXPECT_LE(eval_pi(b.code(), b.lo()), b.x()) << b.code().str();
  EXPECT_GE(eval_pi(b.code(), b.hi()), b.x()) << b.code().str();
}

}  // namespace

TEST(LambdaHull, ClosedForm) {
  const auto [lo, hi] = lambda_hull(Rational(1, 2), 2);
  EXPECT_EQ(lo, Rational(1, 3));
  EXPECT_EQ(hi, Rational(1, 2));
  EXPECT_EQ(lambda_hull(Rational(2, 5), 3).first, Rational(1, 6));
}

// ---- admissible words --------------------------------------------------------

TEST(AdmissibleWords, LengthTwo) { EXPECT_EQ(as_set(admissible_words(Rational(1, 2), 2, 2)), words_of({"10", "11"})); }

TEST(AdmissibleWords, LengthThree) {
  EXPECT_EQ(as_set(admissible_words(Rational(1, 2), 2, 3)), words_of({"100", "101", "110", "111"}));
}

TEST(AdmissibleWords, LengthOneIsEmpty) {
  EXPECT_TRUE(admissible_words(Rational(1, 2), 2, 1).empty());
  EXPECT_TRUE(oracle::admissible(1, 2, 2, 1).empty());
}

TEST(AdmissibleWords, SortedByIncreasingParameter) {
  const auto words = admissible_words(Rational(3, 7), 3, 4);
  EXPECT_TRUE(std::is_sorted(words.begin(), words.end(), std::greater<>()));
}

TEST(AdmissibleWords, MatchBruteForceEnumeration) {
  auto gen = rng(20);
  for (int i = 0; i < 60; ++i) {
    const int m = 2 + static_cast<int>(gen() % 2);
    const Rational x = random_unit(gen, 40);
    const long p = x.numerator().get_si();
    const long q = x.denominator().get_si();
    for (std::size_t n = 1; n <= (m == 2 ? 8U : 5U); ++n) {
      std::set<Word> expected;
      for (const auto& w : oracle::admissible(p, q, m, n)) expected.insert(testing_support::to_word(w));
      EXPECT_EQ(as_set(admissible_words(x, m, n)), expected) << x.str() << " m=" << m << " n=" << n;
    }
  }
}

// ---- basic intervals -----------------------------------------------------------

TEST(BasicInterval, TopLeftInterval) {
  const auto iv = basic_interval(Rational(1, 2), 2, word("11"));
  EXPECT_EQ(compare_to(iv.left, Rational(1, 3)), std::strong_ordering::equal);
  EXPECT_NEAR(mid(iv.right), 0.366025, 5e-7);
}

TEST(BasicInterval, ReachesTheMaximum) {
  const auto iv = basic_interval(Rational(1, 2), 2, word("10"));
  EXPECT_NEAR(mid(iv.left), 0.396608, 5e-7);
  EXPECT_EQ(iv.right.lo(), Rational(1, 2));
  EXPECT_EQ(iv.right.hi(), Rational(1, 2));
}

TEST(BasicInterval, ChildSharesParentEndpoint) {
  const auto child = basic_interval(Rational(1, 2), 2, word("110"));
  const auto parent = basic_interval(Rational(1, 2), 2, word("11"));
  EXPECT_NEAR(mid(child.left), 0.352201, 5e-7);
  EXPECT_EQ(child.right.code().canonical(), parent.right.code().canonical());
  EXPECT_EQ(compare_brackets(child.right, parent.right), std::strong_ordering::equal);
}

TEST(BasicInterval, RejectsInadmissibleWords) {
  EXPECT_THROW((void)basic_interval(Rational(1, 2), 2, word("01")), NotAdmissible);
  EXPECT_THROW((void)basic_interval(Rational(1, 2), 2, word("1")), NotAdmissible);
}

// ---- covers -----------------------------------------------------------------------

TEST(Cover, DepthThreeFigureRow) {
  const auto level = cover(Rational(1, 2), 2, 3);
  ASSERT_EQ(level.intervals.size(), 4U);
  const double expected[4][2] = {{1.0 / 3, 0.342508}, {0.352201, 0.366025}, {0.396608, 0.423854}, {0.435958, 0.5}};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(mid(level.intervals[i].left), expected[i][0], 5e-7) << i;
    EXPECT_NEAR(mid(level.intervals[i].right), expected[i][1], 5e-7) << i;
  }
}

TEST(Cover, DepthFourOuterIntervals) {
  const auto level = cover(Rational(1, 2), 2, 4);
  ASSERT_EQ(level.intervals.size(), 8U);
  EXPECT_EQ(compare_to(level.intervals.front().left, Rational(1, 3)), std::strong_ordering::equal);
  EXPECT_NEAR(mid(level.intervals.front().right), 0.336197, 5e-7);
  EXPECT_NEAR(mid(level.intervals.back().left), 0.461249, 5e-7);
  EXPECT_EQ(level.intervals.back().right.lo(), Rational(1, 2));
}

TEST(Cover, DepthTwoHasOneGap) {
  const auto level = cover(Rational(1, 2), 2, 2);
  ASSERT_EQ(level.gaps.size(), 1U);
  EXPECT_NEAR(mid(level.gaps[0].left), 0.366025, 5e-7);
  EXPECT_NEAR(mid(level.gaps[0].right), 0.396608, 5e-7);
}

TEST(Cover, RejectsTooShallowDepth) {
  EXPECT_THROW((void)cover(Rational(1, 2), 2, 1), DomainError);
  EXPECT_THROW((void)cover(Rational(3, 2), 2, 3), DomainError);
}

TEST(Cover, HullIsExactForRandomPoints) {
  auto gen = rng(21);
  const int bases[] = {2, 3, 5, 10};
  for (int i = 0; i < 30; ++i) {
    const int m = bases[gen() % 4];
    const Rational x = random_unit(gen, 50);
    const std::size_t depth = GreedyExpansion(x, m).first_defect();
    const auto level = cover(x, m, depth);
    EXPECT_EQ(level.hull_lo, x / (Rational(m - 1) + x));
    EXPECT_EQ(level.hull_hi, Rational(1, m));
    EXPECT_EQ(compare_to(level.intervals.front().left, level.hull_lo), std::strong_ordering::equal);
    EXPECT_EQ(compare_to(level.intervals.back().right, level.hull_hi), std::strong_ordering::equal);
  }
}

TEST(Cover, StructuralInvariantsOnRandomPoints) {
  auto gen = rng(22);
  for (int i = 0; i < 12; ++i) {
    const int m = 2 + static_cast<int>(gen() % 2);
    const Rational x = random_unit(gen, 30);
    const std::size_t first = GreedyExpansion(x, m).first_defect();
    const auto levels = cover_levels(x, m, first + (m == 2 ? 5 : 3));
    Rational previous_total;
    for (std::size_t li = 0; li < levels.size(); ++li) {
      const auto& level = levels[li];
      EXPECT_TRUE(level.warnings.empty());
      ASSERT_EQ(level.gaps.size() + 1, level.intervals.size());
      Rational total_upper;
      Rational total_lower;
      for (std::size_t k = 0; k < level.intervals.size(); ++k) {
        const auto& iv = level.intervals[k];
        EXPECT_EQ(compare_brackets(iv.left, iv.right), std::strong_ordering::less);
        EXPECT_GE(iv.left.lo(), level.hull_lo - default_tolerance());
        EXPECT_LE(iv.right.hi(), level.hull_hi);
        expect_certified(iv.left);
        expect_certified(iv.right);
        if (k > 0) {
          EXPECT_EQ(compare_brackets(level.intervals[k - 1].right, iv.left), std::strong_ordering::less);
          EXPECT_GT(level.intervals[k - 1].word, iv.word);
        }
        total_upper += iv.length_upper();
        total_lower += iv.length_lower();
      }
      if (li > 0) {
        EXPECT_LT(total_upper, previous_total);
        // Each child lies in exactly one parent: the one named by its prefix.
        const auto& parents = levels[li - 1].intervals;
        for (const auto& child : level.intervals) {
          int containing = 0;
          for (const auto& parent : parents) {
            if (compare_brackets(parent.left, child.left) <= 0 && compare_brackets(child.right, parent.right) <= 0) {
              ++containing;
              EXPECT_TRUE(std::equal(parent.word.begin(), parent.word.end(), child.word.begin()));
            }
          }
          EXPECT_EQ(containing, 1);
        }
      }
      previous_total = total_lower;
    }
  }
}

TEST(Cover, LevelsAgreeWithSingleDepthCovers) {
  const auto levels = cover_levels(Rational(2, 7), 3, 4);
  for (const auto& level : levels) {
    const auto single = cover(Rational(2, 7), 3, level.depth);
    ASSERT_EQ(single.intervals.size(), level.intervals.size());
    for (std::size_t i = 0; i < single.intervals.size(); ++i) {
      EXPECT_EQ(single.intervals[i].left, level.intervals[i].left);
      EXPECT_EQ(single.intervals[i].right, level.intervals[i].right);
    }
  }
}

TEST(Cover, ThreadCountDoesNotChangeResults) {
  const auto one = cover(Rational(3, 7), 2, 7, {default_tolerance(), 1});
  const auto four = cover(Rational(3, 7), 2, 7, {default_tolerance(), 4});
  ASSERT_EQ(one.intervals.size(), four.intervals.size());
  for (std::size_t i = 0; i < one.intervals.size(); ++i) {
    EXPECT_EQ(one.intervals[i].left, four.intervals[i].left);
    EXPECT_EQ(one.intervals[i].right, four.intervals[i].right);
  }
}

TEST(Cover, ParametersInsideGapsAreNotMembers) {
  auto gen = rng(23);
  for (int i = 0; i < 10; ++i) {
    const int m = 2 + static_cast<int>(gen() % 2);
    const Rational x = random_unit(gen, 30);
    const std::size_t depth = GreedyExpansion(x, m).first_defect() + 3;
    const auto level = cover(x, m, depth);
    for (const auto& gap : level.gaps) {
      const Rational lambda = (gap.left.hi() + gap.right.lo()) / Rational(2);
      const auto r = membership(x, lambda, m);
      ASSERT_TRUE(std::holds_alternative<NotMember>(r.verdict)) << x.str() << " at " << lambda.str();
      EXPECT_LE(std::get<NotMember>(r.verdict).step, depth + 1);
    }
  }
}
