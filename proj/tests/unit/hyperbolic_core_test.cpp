#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "corpus.hpp"
#include "lozenge/errors.hpp"
#include "lozenge/group.hpp"
#include "lozenge/lift.hpp"
#include "lozenge/mobius.hpp"

using namespace lozenge;

namespace {

MobiusElement A() { return modular_torus().generators[0]; }
MobiusElement B() { return modular_torus().generators[1]; }

void expect_matrix(const MobiusElement& g, const MobiusElement::Matrix& m, double tol = 1e-12) {
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(g.matrix()[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(i)], tol) << i;
}

double chart(double x) { return 0.5 + std::atan(x) / std::numbers::pi; }

}  // namespace

TEST(Circle, ChartSendsInfinityToZero) {
  EXPECT_DOUBLE_EQ(CirclePoint::infinity().angle(), 0.0);
  EXPECT_DOUBLE_EQ(CirclePoint::from_real(0.0).angle(), 0.5);
  EXPECT_NEAR(CirclePoint::from_real(1.0).angle(), 0.75, 1e-15);
  EXPECT_NEAR(CirclePoint::from_vector(1.0, 0.0).angle(), 0.0, 1e-15);
  EXPECT_NEAR(CirclePoint::from_vector(-3.0, 1.0).angle(), chart(-3.0), 1e-15);
}

TEST(Circle, OpenArcWrapsAroundZero) {
  const CirclePoint from(0.9), to(0.1);
  EXPECT_TRUE(in_open_arc(CirclePoint(0.95), from, to));
  EXPECT_TRUE(in_open_arc(CirclePoint(0.05), from, to));
  EXPECT_FALSE(in_open_arc(CirclePoint(0.5), from, to));
  EXPECT_FALSE(in_open_arc(from, from, to));
  EXPECT_NEAR(circle_distance(CirclePoint(0.95), CirclePoint(0.05)), 0.1, 1e-15);
}

TEST(Word, ReductionAndInverse) {
  EXPECT_EQ(reduce_word({1, 2, -2, -1, 2}), (Word{2}));
  EXPECT_EQ(inverse_word({1, -2, 2}), (Word{-2, 2, -1}));
  EXPECT_EQ(format_word({1, -2, -1}), "aBA");
  EXPECT_EQ(format_word({}), "1");
  EXPECT_EQ(parse_word("aBA", 2), (Word{1, -2, -1}));
  EXPECT_EQ(parse_word("1", 2), Word{});
  EXPECT_EQ(parse_word("aA", 2), Word{});
}

TEST(Word, UnknownLettersAreRejected) {
  try {
    parse_word("xyz", 2);
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownGenerator);
  }
  try {
    parse_word("a-b", 2);
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}

TEST(Mobius, ComposeWithIdentityAndInverse) {
  expect_matrix(compose(MobiusElement(), A()), A().matrix());
  const auto id = compose(A(), A().inverse());
  expect_matrix(id, {1, 0, 0, 1});
  EXPECT_TRUE(id.word().empty());
  EXPECT_EQ(classify(id).kind, Kind::Identity);
}

TEST(Mobius, ComposeModularTorusPair) {
  // direct multiplication [[1,1],[1,2]] [[1,-1],[-1,2]] = [[0,1],[-1,3]]
  const auto ab = compose(A(), B());
  expect_matrix(ab, {0, 1, -1, 3});
  EXPECT_EQ(format_word(ab.word()), "ab");
  EXPECT_NEAR(ab.trace(), 3.0, 1e-15);
  EXPECT_EQ(classify(ab).kind, Kind::Hyperbolic);
}

TEST(Mobius, DeterminantStaysOneUnderLongProducts) {
  auto rng = fixtures::seeded(1);
  std::uniform_int_distribution<int> letter(0, 3);
  const int letters[] = {1, -1, 2, -2};
  const auto group = modular_torus();
  MobiusElement g;
  for (int i = 0; i < 40; ++i) {
    const int l = letters[letter(rng)];
    g = compose(g, l > 0 ? group.generators[static_cast<std::size_t>(l - 1)]
                         : group.generators[static_cast<std::size_t>(-l - 1)].inverse());
    EXPECT_NEAR(g.determinant(), 1.0, 1e-12);
    EXPECT_EQ(reduce_word(g.word()), g.word());
  }
}

TEST(Mobius, SignNormalizationIsProjective) {
  const auto g = MobiusElement::from_matrix({-1, -1, -1, -2});
  expect_matrix(g, {1, 1, 1, 2});
  const auto h = MobiusElement::from_matrix({4, 0, 0, 0.25});
  EXPECT_NEAR(h.determinant(), 1.0, 1e-15);
  EXPECT_THROW(MobiusElement::from_matrix({1, 0, 0, -1}), Error);
}

TEST(Classify, TraceCases) {
  EXPECT_EQ(classify(A()).kind, Kind::Hyperbolic);
  EXPECT_EQ(classify(MobiusElement::from_matrix({1, 1, 0, 1})).kind, Kind::Parabolic);
  EXPECT_EQ(classify(MobiusElement::from_matrix({0, -1, 1, 0})).kind, Kind::Elliptic);
  EXPECT_EQ(classify(MobiusElement()).kind, Kind::Identity);
}

TEST(Classify, CommutatorIsParabolicWithTraceMinusTwo) {
  const auto group = modular_torus();
  const auto c = element_from_word(group, "abAB");
  expect_matrix(c, {1, 0, 6, 1});  // sign-normalized [[-1,0],[-6,-1]]
  // the unnormalized product has trace -2
  const auto m = [&] {
    auto mul = [](const MobiusElement::Matrix& x, const MobiusElement::Matrix& y) {
      return MobiusElement::Matrix{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
                                   x[2] * y[1] + x[3] * y[3]};
    };
    const MobiusElement::Matrix a{1, 1, 1, 2}, b{1, -1, -1, 2}, ai{2, -1, -1, 1}, bi{2, 1, 1, 1};
    return mul(mul(mul(a, b), ai), bi);
  }();
  EXPECT_EQ(m[0] + m[3], -2.0);
  EXPECT_EQ(classify(c).kind, Kind::Parabolic);
}

TEST(Axis, GeneratorAFixedPointsFromQuadraticFormula) {
  // x^2 + x - 1 = 0: attracting (sqrt5 - 1)/2, repelling -(sqrt5 + 1)/2
  const double att = (std::sqrt(5.0) - 1.0) / 2.0;
  const double rep = -(std::sqrt(5.0) + 1.0) / 2.0;
  const auto axis = axis_endpoints(A());
  EXPECT_NEAR(axis.attracting.angle(), chart(att), 1e-12);
  EXPECT_NEAR(axis.repelling.angle(), chart(rep), 1e-12);
  EXPECT_NEAR(A().apply(att), att, 1e-12);
  // derivative 1/(cx+d)^2 < 1 at the attracting point
  EXPECT_LT(1.0 / std::pow(att + 2.0, 2), 1.0);
}

TEST(Axis, InverseSwapsEndpoints) {
  for (const auto& w : fixtures::kCorpus) {
    const auto g = element_from_word(modular_torus(), w.word);
    const auto x = axis_endpoints(g);
    const auto y = axis_endpoints(g.inverse());
    EXPECT_NEAR(circle_distance(x.attracting, y.repelling), 0.0, 1e-12) << w.word;
    EXPECT_NEAR(circle_distance(x.repelling, y.attracting), 0.0, 1e-12) << w.word;
  }
}

TEST(Axis, ParabolicHasNoAxis) {
  try {
    axis_endpoints(MobiusElement::from_matrix({1, 1, 0, 1}));
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotHyperbolic);
  }
}

TEST(Enumerate, ReducedWordCounts) {
  EXPECT_EQ(projected_count(2, 0), 1u);
  EXPECT_EQ(projected_count(2, 2), 17u);
  EXPECT_EQ(projected_count(2, 3), 53u);
  const auto group = modular_torus();
  EXPECT_EQ(enumerate_elements(group, 0).size(), 1u);
  EXPECT_TRUE(enumerate_elements(group, 0).front().word().empty());
  EXPECT_EQ(enumerate_elements(group, 2).size(), 17u);
  EXPECT_EQ(enumerate_elements(group, 3).size(), 53u);
  // free group: no projective coincidences even at depth 8
  EXPECT_EQ(enumerate_elements(group, 8).size(), projected_count(2, 8));
}

TEST(Enumerate, CanonicalOrder) {
  const auto e = enumerate_elements(modular_torus(), 2);
  EXPECT_EQ(format_word(e[1].word()), "a");
  EXPECT_EQ(format_word(e[2].word()), "A");
  EXPECT_EQ(format_word(e[3].word()), "b");
  EXPECT_EQ(format_word(e[4].word()), "B");
  EXPECT_EQ(format_word(e[5].word()), "aa");
  EXPECT_EQ(format_word(e[6].word()), "ab");
  EXPECT_EQ(format_word(e[7].word()), "aB");
  EXPECT_EQ(format_word(e[8].word()), "AA");
}

TEST(Enumerate, CapIsEnforced) {
  EnumerationOptions options;
  options.cap = 100;
  try {
    enumerate_elements(modular_torus(), 4, options);
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DepthTooLarge);
  }
}

TEST(Enumerate, OctagonRelatorCollapsesWords) {
  const auto group = octagon_genus2();
  // g0 g1^-1 g2 g3^-1 g0^-1 g1 g2^-1 g3 = 1
  const auto r = element_from_word(group, "aBcDAbCd");
  EXPECT_LT(projective_distance(r, MobiusElement()), 1e-9);
  for (const auto& g : group.generators) EXPECT_NEAR(std::abs(g.trace()), 2.0 * (1.0 + std::numbers::sqrt2), 1e-12);
  // half-relators identify words of length 4, so the count drops below the free count
  EXPECT_LT(enumerate_elements(group, 4).size(), projected_count(4, 4));
}

TEST(Enumerate, ElementFromWordMatchesEnumerationBitForBit) {
  const auto group = modular_torus();
  for (const auto& e : enumerate_elements(group, 6)) {
    const auto f = element_from_word(group, e.word());
    EXPECT_EQ(e.matrix(), f.matrix()) << format_word(e.word());
  }
}

TEST(ElementCache, PrefixesMatchFreshEnumeration) {
  const auto group = modular_torus();
  ElementCache cache(group);
  const auto deep = cache.elements(5);
  EXPECT_EQ(deep.size(), projected_count(2, 5));
  const auto shallow = cache.elements(3);
  const auto fresh = enumerate_elements(group, 3);
  ASSERT_EQ(shallow.size(), fresh.size());
  for (std::size_t i = 0; i < fresh.size(); ++i) EXPECT_EQ(shallow[i].word(), fresh[i].word());
}

TEST(Group, ValidationOfExplicitGenerators) {
  const MobiusElement::Matrix almost[] = {{1.0, 1.0, 1.0, 2.0 - 1e-9}};
  const auto g = make_group("near", almost);
  EXPECT_NEAR(g.generators[0].determinant(), 1.0, 1e-15);
  const MobiusElement::Matrix bad[] = {{0.9, 0.0, 0.0, 1.0}};
  try {
    make_group("bad", bad);
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ValidationError);
  }
  const MobiusElement::Matrix identity[] = {{1.0, 0.0, 0.0, 1.0}};
  EXPECT_THROW(make_group("id", identity), Error);
  EXPECT_NE(fingerprint(modular_torus()), fingerprint(octagon_genus2()));
  EXPECT_EQ(fingerprint(modular_torus()), fingerprint(modular_torus()));
}

TEST(Lift, IdentityAndOffsets) {
  EXPECT_DOUBLE_EQ(lift(MobiusElement(), 0)(0.25), 0.25);
  EXPECT_DOUBLE_EQ(lift(MobiusElement(), 3)(0.25), 3.25);
}

TEST(Lift, DegreeOneAndMonotone) {
  auto rng = fixtures::seeded(2);
  std::uniform_real_distribution<double> x_dist(-5.0, 5.0);
  const auto elements = enumerate_elements(modular_torus(), 4);
  for (int i = 0; i < 100; ++i) {
    const double x = x_dist(rng);
    const auto a = lift(A(), 0);
    EXPECT_NEAR(a(x + 1.0) - a(x), 1.0, 1e-10);
    const auto& g = elements[static_cast<std::size_t>(i) % elements.size()];
    const auto h = lift(g, i % 3 - 1);
    EXPECT_NEAR(h(x + 1.0) - h(x), 1.0, 1e-10);
    EXPECT_LT(h(x), h(x + 1e-3));
  }
}

TEST(Lift, CanonicalNormalizationAndInverse) {
  auto rng = fixtures::seeded(3);
  std::uniform_real_distribution<double> x_dist(-2.0, 2.0);
  for (const auto& g : enumerate_elements(modular_torus(), 4)) {
    const auto h = lift(g, 0);
    EXPECT_GE(h(0.0), 0.0);
    EXPECT_LT(h(0.0), 1.0);
    const auto inv = h.inverse();
    for (int i = 0; i < 5; ++i) {
      const double x = x_dist(rng);
      EXPECT_NEAR(inv(h(x)), x, 1e-9) << format_word(g.word());
    }
    // the lift projects to the boundary action
    const double x = x_dist(rng);
    EXPECT_NEAR(circle_distance(CirclePoint(h(x)), g.apply(CirclePoint(x))), 0.0, 1e-10);
  }
}
