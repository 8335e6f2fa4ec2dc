#include <gtest/gtest.h>

#include "oracles.hpp"
#include "srgforge/action.hpp"
#include "srgforge/construct.hpp"

using namespace srgforge;

namespace {

PermutationGroup sym(std::size_t n) {
  std::string cycle = "(";
  for (std::size_t i = 1; i <= n; ++i) cycle += std::to_string(i) + (i < n ? "," : ")");
  return PermutationGroup(n, {Permutation::from_cycles("(1,2)", n), Permutation::from_cycles(cycle, n)});
}

}  // namespace

TEST(CosetAction, S5OnPairs) {
  // S5 acting on 2-subsets: H = S2 x S3, index 10, rank 3 (Petersen scheme).
  const auto g = sym(5);
  const auto h = PermutationGroup(5, {Permutation::from_cycles("(1,2)", 5), Permutation::from_cycles("(3,4,5)", 5),
                                      Permutation::from_cycles("(3,4)", 5)});
  const auto act = coset_action(g, h);
  EXPECT_EQ(act.degree(), 10U);
  EXPECT_EQ(act.rank(), 3U);
  EXPECT_TRUE(is_primitive(act));
  const auto& subs = suborbits(act);
  EXPECT_EQ(subs[0].points, std::vector<Point>{0});
  EXPECT_EQ(subs[1].size(), 3U);
  EXPECT_EQ(subs[2].size(), 6U);
  EXPECT_EQ(act.image_group().order(), 120U);
}

TEST(CosetAction, MatchesNaiveCosetEnumeration) {
  const auto g = sym(6);
  const std::vector<PermutationGroup> subs = {
      PermutationGroup(6, {Permutation::from_cycles("(1,2,3)", 6), Permutation::from_cycles("(1,2)", 6)}),
      PermutationGroup(6, {Permutation::from_cycles("(1,2)(3,4)", 6), Permutation::from_cycles("(1,3)(2,4)", 6)}),
      PermutationGroup(6, {Permutation::from_cycles("(1,2,3,4,5,6)", 6)}),
      PermutationGroup(6, {Permutation::from_cycles("(1,2)(3,4)(5,6)", 6), Permutation::from_cycles("(1,3,5)(2,4,6)", 6),
                           Permutation::from_cycles("(1,2)", 6)}),
  };
  const auto all = oracle::closure(g.generators(), 6);
  for (const auto& h : subs) {
    const auto act = coset_action(g, h);
    const auto naive = oracle::cosets(all, oracle::closure(h.generators(), 6), g.generators());
    EXPECT_EQ(act.degree(), naive.index);
    EXPECT_EQ(act.rank(), naive.rank);
    std::vector<std::size_t> sizes;
    for (const auto& s : act.suborbits()) sizes.push_back(s.size());
    std::sort(sizes.begin(), sizes.end());
    EXPECT_EQ(sizes, naive.suborbit_sizes);
    EXPECT_EQ(is_primitive(act), naive.primitive);
  }
}

TEST(CosetAction, SuborbitsOrderedAndPaired) {
  // Z7 regular action: every nontrivial suborbit is a point; x pairs with -x.
  const auto g = PermutationGroup(7, {Permutation::from_cycles("(1,2,3,4,5,6,7)", 7)});
  const auto act = coset_action(g, PermutationGroup::trivial(7));
  ASSERT_EQ(act.rank(), 7U);
  for (std::size_t i = 1; i < 7; ++i) {
    EXPECT_FALSE(act.suborbits()[i].self_paired);
    EXPECT_EQ(act.suborbits()[act.suborbits()[i].paired_with].paired_with, i);
    EXPECT_EQ(&paired_orbit(act, act.suborbits()[i]), &act.suborbits()[act.suborbits()[i].paired_with]);
  }
  for (std::size_t i = 1; i < 7; ++i) EXPECT_LT(act.suborbits()[i - 1].least(), act.suborbits()[i].least());
  EXPECT_TRUE(is_primitive(act));  // prime degree
}

TEST(CosetAction, CarrierAndOrbital) {
  const auto g = sym(5);
  const auto h = g.stabilizer(0);
  const auto act = coset_action(g, h);
  for (Point p = 0; p < act.degree(); ++p) {
    EXPECT_EQ(act.carrier(p)[act.base_point()], p);
    EXPECT_EQ(act.orbital(p, p), 0U);
  }
  EXPECT_EQ(act.orbital(0, 3), act.suborbit_of(3));
}

TEST(CosetAction, Imprimitive) {
  // D8 on 4 points preserves {1,3},{2,4}.
  const auto g = PermutationGroup(4, {Permutation::from_cycles("(1,2,3,4)", 4), Permutation::from_cycles("(1,3)", 4)});
  const auto act = coset_action(g, g.stabilizer(0));
  EXPECT_FALSE(is_primitive(act));
  const auto block = minimal_block(act.generator_images(), 0, act.image_of(Permutation::from_cycles("(1,3)(2,4)", 4))[0]);
  EXPECT_EQ(std::count(block.begin(), block.end(), true), 2);
}

TEST(CosetAction, Errors) {
  const auto g = sym(5);
  const auto not_sub = PermutationGroup(6, {Permutation::from_cycles("(1,6)", 6)});
  EXPECT_THROW(coset_action(g, not_sub), InputError);
  const auto a5 = PermutationGroup(5, {Permutation::from_cycles("(1,2,3)", 5), Permutation::from_cycles("(1,2,3,4,5)", 5)});
  EXPECT_THROW(coset_action(a5, PermutationGroup(5, {Permutation::from_cycles("(1,2)", 5)})), InputError);
  EXPECT_THROW(coset_action(g, PermutationGroup::trivial(5), 100), BoundExceeded);
  const auto act = coset_action(g, g.stabilizer(0));
  Suborbit bogus;
  bogus.points = {1, 2};
  EXPECT_THROW(paired_orbit(act, bogus), InputError);
}
