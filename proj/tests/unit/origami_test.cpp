#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "porigami/errors.hpp"
#include "porigami/families.hpp"
#include "porigami/origami.hpp"

using namespace porigami;

namespace {

Origami origami_of(const GroupWithPair& g) { return make_origami(g.group, g.x, g.y); }

}  // namespace

TEST(Origami, Construction) {
  const auto q = fixtures::q8();
  EXPECT_NO_THROW(make_origami(q.group, q.x, q.y));
  EXPECT_THROW(make_origami(q.group, q.x, q.x.pow(2)), NotGeneratingPair);
  EXPECT_THROW(make_origami(q.group, q.x, fixtures::perm("(1,2)", q.group.degree())), MembershipError);
}

TEST(Singularities, Examples) {
  const SingularityData w = singularity_data(origami_of(fixtures::q8()));
  EXPECT_EQ(w.multiplicity, 2u);
  EXPECT_EQ(w.count, 4u);
  EXPECT_EQ(w.genus, 3u);
  EXPECT_EQ(w.stratum(), "H(4 x 1)");

  const SingularityData torus = singularity_data(origami_of(strata_family(3, 3, 0)));
  EXPECT_EQ(torus.stratum(), "H(0)");
  EXPECT_EQ(torus.genus, 1u);

  const SingularityData g3 = singularity_data(origami_of(strata_family(3, 3, 1)));
  EXPECT_EQ(g3.stratum(), "H(9 x 2)");
  EXPECT_EQ(g3.count, 9u);
}

TEST(Singularities, CountingEquation) {
  for (const auto& gp : {strata_family(2, 6, 2), strata_family(3, 5, 2), wollmilchsau_group(3),
                         maximal_class_family(MaximalClassKind::kQuaternion, 5)}) {
    const SingularityData s = singularity_data(origami_of(gp));
    EXPECT_EQ(s.multiplicity * s.count, gp.group.order());
    EXPECT_EQ(2 * s.genus - 2, s.count * (s.multiplicity - 1));
  }
}

TEST(Cylinders, DihedralExamples) {
  const auto d = fixtures::d8();
  const auto h = cylinder_decomposition(origami_of(d), Direction::kHorizontal);
  ASSERT_EQ(h.cylinders.size(), 2u);
  for (const auto& c : h.cylinders) EXPECT_EQ(c.circumference, 4u);

  const auto h2 = cylinder_decomposition(make_origami(d.group, d.y, d.x * d.y), Direction::kHorizontal);
  ASSERT_EQ(h2.cylinders.size(), 4u);
  for (const auto& c : h2.cylinders) EXPECT_EQ(c.circumference, 2u);
}

TEST(Cylinders, G3Example) {
  const Origami o = origami_of(strata_family(3, 3, 1));
  for (const auto& c : cylinder_decomposition(o, Direction::kHorizontal).cylinders) EXPECT_EQ(c.circumference, 9u);
  for (const auto& c : cylinder_decomposition(o, Direction::kVertical).cylinders) EXPECT_EQ(c.circumference, 3u);
}

TEST(Cylinders, PartitionSquaresAndMatchBruteForce) {
  for (const auto& gp : {strata_family(2, 5, 2), strata_family(3, 4, 1), wollmilchsau_group(2)}) {
    const Origami o = origami_of(gp);
    const oracle::Table t = fixtures::table_of(gp.group);
    for (const Direction dir : {Direction::kHorizontal, Direction::kVertical}) {
      const auto dec = cylinder_decomposition(o, dir);
      std::vector<int> hits(gp.group.order(), 0);
      std::multiset<std::size_t> lengths;
      for (const auto& c : dec.cylinders) {
        EXPECT_EQ(c.squares.size(), c.circumference);
        lengths.insert(c.circumference);
        for (auto s : c.squares) ++hits[s];
      }
      for (int h : hits) EXPECT_EQ(h, 1);
      const auto step = fixtures::idx(t, dir == Direction::kHorizontal ? gp.x : gp.y);
      EXPECT_EQ(lengths, oracle::cycle_lengths(t, step));
    }
  }
}

TEST(VertexClasses, Examples) {
  const VertexClasses w = vertex_classes(origami_of(fixtures::q8()));
  EXPECT_EQ(w.count, 4u);
  for (auto s : w.sizes()) EXPECT_EQ(s, 8u);

  const VertexClasses ab = vertex_classes(origami_of(strata_family(2, 3, 0)));
  EXPECT_EQ(ab.count, 8u);
  for (auto s : ab.sizes()) EXPECT_EQ(s, 4u);

  const VertexClasses g3 = vertex_classes(origami_of(strata_family(3, 3, 1)));
  EXPECT_EQ(g3.count, 9u);
  for (auto s : g3.sizes()) EXPECT_EQ(s, 12u);
}

TEST(VertexClasses, MatchBruteForceGluing) {
  for (const auto& gp : {fixtures::d8(), strata_family(2, 6, 3), strata_family(3, 5, 2), wollmilchsau_group(2)}) {
    const oracle::Table t = fixtures::table_of(gp.group);
    const VertexClasses v = vertex_classes(origami_of(gp));
    EXPECT_EQ(v.count, oracle::vertex_count(t, fixtures::idx(t, gp.x), fixtures::idx(t, gp.y)));
    const std::uint64_t a = commutator(gp.x, gp.y).order();
    EXPECT_EQ(v.count, gp.group.order() / a);
    for (auto s : v.sizes()) EXPECT_EQ(s, 4 * a);
  }
}

TEST(Equality, Examples) {
  const auto d = fixtures::d8();
  const Origami a = make_origami(d.group, d.x, d.y);
  const Origami b = make_origami(d.group, d.y, d.x * d.y);
  EXPECT_FALSE(origami_equal(a, b));
  EXPECT_TRUE(origami_equal(a, a));

  const auto q = fixtures::q8();
  const Origami w = origami_of(q);
  for (const auto& u : q.group.elements())
    for (const auto& v : q.group.elements())
      if (is_generating_pair(q.group, u, v)) EXPECT_TRUE(origami_equal(w, make_origami(q.group, u, v)));
  EXPECT_THROW(origami_equal(w, a), InputError);
}

TEST(Equality, CanonicalKeyAgrees) {
  const auto gp = strata_family(2, 4, 1);
  const auto& elems = gp.group.elements();
  const Origami base = origami_of(gp);
  const auto key = canonical_key(base);
  const oracle::Table t = fixtures::table_of(gp.group);
  const auto x = fixtures::idx(t, gp.x), y = fixtures::idx(t, gp.y);
  for (const auto& u : elems)
    for (const auto& v : elems) {
      if (!is_generating_pair(gp.group, u, v)) continue;
      const Origami o = make_origami(gp.group, u, v);
      const bool eq = origami_equal(base, o);
      ASSERT_EQ(eq, canonical_key(o) == key);
      ASSERT_EQ(eq, oracle::extends(t, x, y, fixtures::idx(t, u), fixtures::idx(t, v)));
    }
}

TEST(Sl2, Actions) {
  const auto d = fixtures::d8();
  const Origami o = make_origami(d.group, d.y, d.x * d.y);
  const Origami t = sl2_act(Sl2Generator::kT, o);
  EXPECT_EQ(t.x(), d.y);
  EXPECT_EQ(t.y(), d.x);
  EXPECT_TRUE(origami_equal(t, make_origami(d.group, d.y, d.x)));

  const Origami s = sl2_act(Sl2Generator::kS, o);
  EXPECT_EQ(s.x(), o.y().inverse());
  EXPECT_EQ(s.y(), o.x());
  Origami four = o;
  for (int i = 0; i < 4; ++i) four = sl2_act(Sl2Generator::kS, four);
  EXPECT_EQ(four.x(), o.x());
  EXPECT_EQ(four.y(), o.y());
  const Origami back = sl2_act(Sl2Generator::kTInverse, sl2_act(Sl2Generator::kT, o));
  EXPECT_EQ(back.x(), o.x());
  EXPECT_EQ(back.y(), o.y());
  const Origami back_s = sl2_act(Sl2Generator::kSInverse, s);
  EXPECT_EQ(back_s.x(), o.x());
  EXPECT_EQ(back_s.y(), o.y());
}

TEST(Sl2, StratumPreserved) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned n = 3 + static_cast<unsigned>(rng() % 4);
    const unsigned k = static_cast<unsigned>(rng() % (n - 1));
    const Origami o = origami_of(strata_family(2, n, k));
    const auto st = singularity_data(o).stratum();
    for (const auto g : {Sl2Generator::kS, Sl2Generator::kT, Sl2Generator::kSInverse, Sl2Generator::kTInverse})
      ASSERT_EQ(singularity_data(sl2_act(g, o)).stratum(), st);
  }
}

TEST(Sl2, Orbits) {
  EXPECT_EQ(sl2_orbit(origami_of(fixtures::q8()), 100).size(), 1u);

  const auto torus = sl2_orbit(origami_of(strata_family(3, 2, 0)), 100);
  for (const auto& o : torus) EXPECT_EQ(singularity_data(o).stratum(), "H(0)");

  const auto d = fixtures::d8();
  const auto orbit = sl2_orbit(make_origami(d.group, d.y, d.x * d.y), 100);
  const Origami target = make_origami(d.group, d.y, d.x);
  EXPECT_EQ(std::count_if(orbit.begin(), orbit.end(), [&](const Origami& o) { return origami_equal(o, target); }), 1);
  EXPECT_THROW(sl2_orbit(origami_of(strata_family(3, 5, 2)), 2), CapExceeded);
}
