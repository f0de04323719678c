#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "lozenge/errors.hpp"
#include "lozenge/group.hpp"
#include "lozenge/lozenge.hpp"

using namespace lozenge;

namespace {

// eta^i in closed form: even powers shift the diagonal, odd powers also swap.
OrbitPoint closed_form_eta(const OrbitPoint& o, int i) {
  const int half = i >= 0 ? i / 2 : -((-i + 1) / 2);
  if (i % 2 == 0) return {o.u + half, o.s + half};
  return {o.s + half, o.u + half + 1};
}

}  // namespace

TEST(Lozenge, CornersOfTheBaseExample) {
  const Lozenge l = lozenge_of({0.2, 0.9});
  EXPECT_EQ(l.corner(), (OrbitPoint{0.2, 0.9}));
  EXPECT_DOUBLE_EQ(l.opposite().u, 0.9);
  EXPECT_DOUBLE_EQ(l.opposite().s, 1.2);
  EXPECT_EQ(contains(l, {0.5, 1.0}), Membership::Inside);
  EXPECT_EQ(contains(l, l.corner()), Membership::Outside);
  EXPECT_EQ(contains(l, l.opposite()), Membership::Outside);
  EXPECT_EQ(contains(l, l.center()), Membership::Inside);
  EXPECT_EQ(contains(l, {0.2, 1.0}), Membership::BoundaryAmbiguous);
  EXPECT_EQ(contains(l, {0.5, 1.2}), Membership::BoundaryAmbiguous);
  EXPECT_EQ(contains(l, {0.95, 1.0}), Membership::Outside);
}

TEST(Lozenge, InteriorIsNonEmptyForEveryStripPoint) {
  auto rng = fixtures::seeded(20);
  for (int i = 0; i < 500; ++i) {
    const auto o = fixtures::random_orbit_point(rng);
    const Lozenge l(o);
    EXPECT_GT(l.u_range().length(), 0.0);
    EXPECT_GT(l.s_range().length(), 0.0);
    EXPECT_EQ(contains(l, l.center()), Membership::Inside);
  }
}

TEST(Chain, ClosedFormCornersAndDisjointSides) {
  auto rng = fixtures::seeded(21);
  std::uniform_int_distribution<int> start(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const auto o = fixtures::random_orbit_point(rng);
    const int lo = start(rng);
    const Chain chain(o, lo, lo + 6);
    for (int i = lo; i <= lo + 6; ++i)
      EXPECT_LE(max_distance(chain.corner(i), closed_form_eta(o, i)), 1e-12) << i;
    EXPECT_TRUE(check_side_disjoint(chain));
  }
}

TEST(Chain, ShiftAndBetween) {
  const Chain c = chain_between({0.2, 0.9}, 3);
  EXPECT_EQ(c.size(), 3);
  EXPECT_EQ(c.lo(), 0);
  const Chain d = c.shifted(2);
  EXPECT_EQ(d.lo(), 2);
  EXPECT_EQ(d.hi(), 5);
  EXPECT_THROW(Chain({0.2, 0.9}, 3, 1), Error);
}

TEST(Stabilized, GeneratorAndItsSquare) {
  const auto group = modular_torus();
  const auto a = group.generators[0];
  const auto orbit = orbit_of_element(a);
  EXPECT_TRUE(check_stabilized(orbit.stabilizer, lozenge_of(orbit.point)));
  const auto a2 = element_from_word(group, "aa");
  const auto orbit2 = orbit_of_element(a2);
  EXPECT_LE(max_distance(orbit2.point, orbit.point), 1e-12);
  EXPECT_TRUE(check_stabilized(orbit2.stabilizer, lozenge_of(orbit.point)));
}

TEST(Stabilized, WrongOffsetIsDetected) {
  const auto a = modular_torus().generators[0];
  const auto orbit = orbit_of_element(a);
  const auto wrong = orbit.stabilizer.shifted(1);
  EXPECT_FALSE(check_stabilized(wrong, lozenge_of(orbit.point)));
  EXPECT_GT(max_distance(act(wrong, orbit.point), orbit.point), 0.5);
}

TEST(Simplicity, SimpleAndNonSimpleWords) {
  const auto group = modular_torus();
  const auto ab = orbit_of_element(element_from_word(group, "ab"));
  EXPECT_TRUE(simplicity_check(chain_between(ab.point, 1), group, 8).no_witness());
  const auto aabb = orbit_of_element(element_from_word(group, "aabb"));
  const auto chain = chain_between(aabb.point, 1);
  const auto cert = simplicity_check(chain, group, 8);
  ASSERT_TRUE(cert.witness.has_value());
  EXPECT_EQ(cert.depth, 8);
  EXPECT_TRUE(reverify(chain, *cert.witness));
  EXPECT_EQ(format_word(cert.witness->element.word()), "ab");
}

TEST(Simplicity, DepthZeroSeesOnlyTheIdentity) {
  auto rng = fixtures::seeded(22);
  const auto group = modular_torus();
  for (int i = 0; i < 20; ++i) {
    const auto cert = simplicity_check(chain_between(fixtures::random_orbit_point(rng), 1 + i % 4), group, 0);
    EXPECT_TRUE(cert.no_witness());
    EXPECT_EQ(cert.depth, 0);
  }
}

TEST(Simplicity, CorpusAgreesWithFrozenOracle) {
  const auto group = modular_torus();
  ElementCache cache(group);
  const auto elements = cache.elements(6);
  for (const auto& w : fixtures::kCorpus) {
    const auto o = orbit_of_element(element_from_word(group, w.word)).point;
    const auto cert = simplicity_check(chain_between(o, 1), elements, 6);
    EXPECT_EQ(cert.no_witness(), w.simple) << w.word;
  }
}

TEST(Simplicity, ReverifyRejectsMovedWitness) {
  const auto group = modular_torus();
  const auto o = orbit_of_element(element_from_word(group, "aabb")).point;
  const auto chain = chain_between(o, 1);
  auto cert = simplicity_check(chain, group, 6);
  ASSERT_TRUE(cert.witness.has_value());
  auto moved = *cert.witness;
  moved.offset += 1;
  EXPECT_FALSE(reverify(chain, moved));
  moved = *cert.witness;
  moved.lozenge_index = 5;
  EXPECT_FALSE(reverify(chain, moved));
}
