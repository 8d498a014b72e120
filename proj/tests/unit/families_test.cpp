#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "porigami/errors.hpp"
#include "porigami/families.hpp"
#include "porigami/pgroup_props.hpp"

using namespace porigami;
using fixtures::perm;

TEST(Semidirect, Examples) {
  const auto d8 = semidirect_cyclic(2, 2, 1, -1);
  EXPECT_EQ(d8.group.order(), 8u);
  EXPECT_EQ(commutator(d8.x, d8.y).order(), 2u);
  EXPECT_EQ(conjugate(d8.x, d8.y), d8.x.inverse());

  const auto ab = semidirect_cyclic(3, 2, 1, 1);
  EXPECT_TRUE(ab.group.is_abelian());
  EXPECT_EQ(ab.group.order(), 27u);

  const auto g3 = semidirect_cyclic(3, 2, 1, 4);
  EXPECT_EQ(commutator(g3.x, g3.y), g3.x.pow(3));
  EXPECT_EQ(commutator(g3.x, g3.y).order(), 3u);
}

TEST(Semidirect, Errors) {
  EXPECT_THROW(semidirect_cyclic(3, 2, 1, 3), InvalidTwist);
  EXPECT_THROW(semidirect_cyclic(3, 2, 1, 2), InvalidTwist);
  EXPECT_THROW(semidirect_cyclic(4, 2, 1, 1), RangeError);
  EXPECT_THROW(semidirect_cyclic(2, 40, 1, 1), RangeError);
}

TEST(Strata, Examples) {
  const auto a = strata_family(2, 5, 3);
  EXPECT_EQ(a.group.order(), 32u);
  EXPECT_EQ(group_exponent(derived_subgroup(a.group)), 8u);
  EXPECT_EQ(commutator(strata_family(2, 4, 0).x, strata_family(2, 4, 0).y).order(), 1u);
  EXPECT_EQ(commutator(strata_family(3, 7, 3).x, strata_family(3, 7, 3).y).order(), 27u);
  EXPECT_THROW(strata_family(2, 4, 3), RangeError);
  EXPECT_THROW(strata_family(3, 6, 3), RangeError);
}

TEST(MaximalClass, Examples) {
  const auto d16 = maximal_class_family(MaximalClassKind::kDihedral, 4);
  EXPECT_EQ(d16.group.order(), 16u);
  EXPECT_EQ(nilpotency_class(d16.group).nilpotency_class, 3u);
  const auto q8 = maximal_class_family(MaximalClassKind::kQuaternion, 3);
  const auto report = property_c(q8.group);
  EXPECT_TRUE(report.holds);
  EXPECT_EQ(report.orders_found, (std::set<std::uint64_t>{2}));
  const auto sd16 = maximal_class_family(MaximalClassKind::kSemidihedral, 4);
  EXPECT_EQ(commutator(sd16.x, sd16.y), sd16.x.pow(2));
  EXPECT_EQ(commutator(sd16.x, sd16.y).order(), 4u);
  EXPECT_THROW(maximal_class_family(MaximalClassKind::kDihedral, 2), RangeError);
}

TEST(MaximalClass, PrintedSemidihedralCollapsesAtOrder8) {
  // r^-1 = r^(2^(n-2)-1) = r when n = 3, so the presentation is abelian.
  const auto sd8 = maximal_class_family(MaximalClassKind::kSemidihedral, 3);
  EXPECT_EQ(sd8.group.order(), 8u);
  EXPECT_TRUE(sd8.group.is_abelian());
}

TEST(MaximalClass, PresentationText) {
  EXPECT_EQ(maximal_class_presentation(MaximalClassKind::kDihedral, 3).to_string(), "<r,s | r^4, s^2, s^-1*r*s*r>");
}

TEST(SylowWreath, Generators) {
  EXPECT_EQ(sylow_wreath_generator(2, 4, 1, 1), perm("(1,9)(2,10)(3,11)(4,12)(5,13)(6,14)(7,15)(8,16)"));
  const Permutation x = sylow_wreath_generator(2, 4, 1, 1) * sylow_wreath_generator(2, 4, 2, 1) *
                        sylow_wreath_generator(2, 4, 3, 1) * sylow_wreath_generator(2, 4, 4, 1);
  EXPECT_EQ(x, perm("(1,9,5,13,3,11,7,15,2,10,6,14,4,12,8,16)"));
  EXPECT_THROW(sylow_wreath_generator(2, 4, 5, 1), RangeError);
  EXPECT_THROW(sylow_wreath_generator(2, 4, 2, 3), RangeError);
  EXPECT_EQ(sylow_group(2, 4).order(), 32768u);
  EXPECT_EQ(sylow_group(3, 2).order(), 81u);
}

TEST(SylowWreath, ConjugationRelation) {
  for (const auto [p, r] : {std::pair{2u, 4u}, std::pair{3u, 3u}}) {
    for (unsigned i = 1; i <= r; ++i)
      for (std::uint64_t j = 1; j <= oracle::ipow(p, i - 1); ++j)
        for (unsigned k = i; k <= r; ++k)
          for (std::uint64_t l = 1; l <= oracle::ipow(p, k - 1); ++l) {
            std::uint64_t expected = l;
            const std::uint64_t span = oracle::ipow(p, k - i);
            if (i < k && (j - 1) * span < l && l <= j * span) {
              const std::uint64_t shift = oracle::ipow(p, k - i - 1);
              const std::uint64_t lo = (j - 1) * span + 1;
              expected = lo + (l - lo + shift) % span;
            }
            const Permutation c = conjugate(sylow_wreath_generator(p, r, k, l), sylow_wreath_generator(p, r, i, j));
            ASSERT_EQ(c, sylow_wreath_generator(p, r, k, expected))
                << "p=" << p << " i=" << i << " j=" << j << " k=" << k << " l=" << l;
          }
  }
}

TEST(Counterexample, H2) {
  const CounterexampleGenerators c = counterexample_generators(2);
  EXPECT_EQ(c.x, perm("(1,9,5,13,3,11,7,15,2,10,6,14,4,12,8,16)"));
  EXPECT_EQ(c.x_prime, c.x.pow(3));
  EXPECT_EQ(commutator(c.y, c.x).order(), 2u);
  EXPECT_EQ(commutator(c.y, c.x_prime).order(), 4u);
  const Group a(std::vector<Permutation>{c.x, c.y}), b(std::vector<Permutation>{c.x_prime, c.y});
  EXPECT_TRUE(same_subgroup(a, b));
}

TEST(Counterexample, H3AndH5) {
  const CounterexampleGenerators c3 = counterexample_generators(3);
  EXPECT_EQ(commutator(c3.y, c3.x).order(), 9u);
  EXPECT_EQ(commutator(c3.y, c3.x_prime).order(), 3u);

  const CounterexampleGenerators c5 = counterexample_generators(5);
  const Permutation k = commutator(c5.y, c5.x);
  // The commutator restricted to the block p^3+1 .. p^3+p^2 is one p^2-cycle.
  std::vector<Point> orbit{126};
  for (Point q = k(126); q != 126; q = k(q)) orbit.push_back(q);
  EXPECT_EQ(orbit.size(), 25u);
  for (Point q : orbit) {
    EXPECT_GE(q, 126u);
    EXPECT_LE(q, 150u);
  }
}

TEST(Wollmilchsau, Groups) {
  EXPECT_EQ(wollmilchsau_group(2).group.order(), 32u);
  for (unsigned n = 1; n <= 4; ++n) {
    const auto w = wollmilchsau_group(n);
    const Group d = derived_subgroup(w.group);
    EXPECT_EQ(d.order(), oracle::ipow(2, n));
    EXPECT_EQ(group_exponent(d), oracle::ipow(2, n));
  }
  EXPECT_THROW(wollmilchsau_group(0), RangeError);
}

TEST(Alternating, Examples) {
  const AlternatingExample a5 = alternating_example(5);
  EXPECT_EQ(commutator(a5.first.first, a5.first.second).order(), 3u);
  EXPECT_EQ(commutator(a5.second.first, a5.second.second).order(), 5u);
  EXPECT_EQ(a5.group.order(), 60u);
  // For even n the n-cycle is odd, so the pair generates S_n.
  const AlternatingExample a6 = alternating_example(6);
  EXPECT_EQ(a6.group.order(), 720u);
  EXPECT_EQ(oracle::closure_size({oracle::from_lib(a6.first.first), oracle::from_lib(a6.first.second)}, 6), 720u);
  EXPECT_THROW(alternating_example(4), RangeError);
}

TEST(MultiplicativeOrder, Examples) {
  EXPECT_EQ(multiplicative_order(1, 7), 1u);
  EXPECT_EQ(multiplicative_order(4, 27), 9u);
  EXPECT_EQ(multiplicative_order(-1, 8), 2u);
  EXPECT_THROW(multiplicative_order(3, 9), NotCoprime);
  for (unsigned p : {3u, 5u, 7u})
    for (unsigned k = 1; k <= 5; ++k) {
      const std::uint64_t m = oracle::ipow(p, k + 1);
      EXPECT_EQ(multiplicative_order(p + 1, m), oracle::mult_order(p + 1, m));
      EXPECT_EQ(multiplicative_order(p + 1, m), oracle::ipow(p, k));
    }
}

TEST(Sampler, Deterministic) {
  const auto a = random_two_generated_subgroup(2, 4, 17);
  const auto b = random_two_generated_subgroup(2, 4, 17);
  EXPECT_EQ(a.x, b.x);
  EXPECT_EQ(a.y, b.y);
  const auto c = random_two_generated_subgroup(2, 4, 18);
  EXPECT_TRUE(a.x != c.x || a.y != c.y);
  const Group p = sylow_group(2, 4);
  EXPECT_TRUE(p.contains(a.x));
  EXPECT_TRUE(p.contains(a.y));
}

TEST(Sampler, BelowIsInRange) {
  const Group p = sylow_group(3, 2);
  ElementSampler s(p.chain(), 5);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) ++hits[s.below(7)];
  for (int h : hits) EXPECT_GT(h, 800);
}

TEST(Tower, Dihedral) {
  const TowerReport t = tower_report(TowerFamily::kDihedralStaircase, 3, 8);
  ASSERT_EQ(t.levels.size(), 6u);
  for (const auto& l : t.levels) {
    EXPECT_EQ(l.commutator_order, oracle::ipow(2, l.level - 2));
    EXPECT_EQ(l.singularity_count, 4u);
  }
  EXPECT_TRUE(t.diverging);
}

TEST(Tower, WollmilchsauAndAbelian) {
  const TowerReport w = tower_report(TowerFamily::kWollmilchsau, 1, 4);
  for (const auto& l : w.levels) {
    EXPECT_EQ(l.commutator_order, oracle::ipow(2, l.level));
    EXPECT_EQ(l.singularity_count, oracle::ipow(2, l.level + 1));
  }
  EXPECT_TRUE(w.diverging);
  const TowerReport a = tower_report(TowerFamily::kAbelian, 1, 4, 3);
  for (const auto& l : a.levels) EXPECT_EQ(l.commutator_order, 1u);
  EXPECT_FALSE(a.diverging);
  EXPECT_THROW(tower_report(TowerFamily::kDihedralStaircase, 5, 4), RangeError);
}

TEST(Search, FindsAndRechecks) {
  const SearchResult r = search_counterexample(2, 4, 7, 100000);
  ASSERT_TRUE(r.found);
  EXPECT_EQ(commutator(*r.x, *r.y).order(), r.commutator_order);
  EXPECT_EQ(commutator(*r.x, r.y->pow(3)).order(), r.shifted_commutator_order);
  EXPECT_NE(r.commutator_order, r.shifted_commutator_order);
  const SearchResult again = search_counterexample(2, 4, 7, 100000);
  EXPECT_EQ(again.iterations, r.iterations);
  EXPECT_EQ(*again.x, *r.x);
}

TEST(Search, WeaklyPowerClosedPredicate) {
  const SearchResult r =
      search_counterexample(2, 4, 3, 100000, SearchPredicate::kOrderMismatchAndWeaklyPowerClosedDerived);
  ASSERT_TRUE(r.found);
  EXPECT_NE(r.commutator_order, r.shifted_commutator_order);
  const Group g(std::vector<Permutation>{*r.x, *r.y}, 2);
  EXPECT_TRUE(is_weakly_power_closed(derived_subgroup(g)));
}

TEST(PresentationImages, W1InsideQ8) {
  const auto q = fixtures::q8();
  const auto images = find_presentation_images(q.group, wollmilchsau_presentation(1));
  ASSERT_TRUE(images);
  EXPECT_TRUE(is_generating_pair(q.group, images->first, images->second));
  EXPECT_FALSE(find_presentation_images(fixtures::d8().group, wollmilchsau_presentation(1)));
}
