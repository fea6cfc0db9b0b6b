#include <gtest/gtest.h>

#include "giryq/measure.hpp"
#include "giryq/random.hpp"
#include "oracles.hpp"

namespace giryq {
namespace {

Rational R(const char* s) { return parse_rational(s); }

SpaceRef two() { return make_space("Y", {"y1", "y2"}); }
SpaceRef three() { return make_space("X", {"x1", "x2", "x3"}); }

TEST(RationalTest, ParsesFractionsAndIntegers) {
  EXPECT_EQ(R("3/10"), Rational(3, 10));
  EXPECT_EQ(R("6/20"), Rational(3, 10));
  EXPECT_EQ(R("1"), Rational(1));
  EXPECT_EQ(R("-7/4"), Rational(-7, 4));
  EXPECT_EQ(to_string(R("6/20")), "3/10");
  EXPECT_EQ(to_string(R("4/2")), "2");
}

TEST(RationalTest, RejectsDecimalsAndGarbage) {
  for (const char* bad : {"0.5", "1e3", "", "/3", "3/", "1/0", "a/b", " 1"}) {
    try {
      parse_rational(bad);
      FAIL() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::parse_error) << bad;
    }
  }
}

TEST(RationalTest, DecimalRendering) {
  EXPECT_EQ(to_decimal(Rational(14, 25)), "0.560000");
  EXPECT_EQ(to_decimal(Rational(47, 70)), "0.671429");
  EXPECT_EQ(to_decimal(Rational(2, 3), 3), "0.667");
  EXPECT_EQ(to_decimal(Rational(-1, 8), 2), "-0.13");
  EXPECT_EQ(to_decimal(Rational(1)), "1.000000");
}

TEST(FiniteSpaceTest, RejectsDuplicateAndEmpty) {
  EXPECT_THROW(make_space("X", {"a", "a"}), Error);
  EXPECT_THROW(make_space("X", {}), Error);
  auto s = three();
  EXPECT_EQ(s->index_of("x2"), 1u);
  EXPECT_FALSE(s->index_of("nope"));
}

TEST(DistTest, ConstructsDiracAndExampleArgmin) {
  const Dist d = dist_new(two(), {R("1"), R("0")});
  EXPECT_EQ(d, Dist::dirac(two(), 0));
  const Dist p = dist_new(three(), {R("2/5"), R("3/5"), R("0")});
  EXPECT_EQ(p[0], Rational(2, 5));
  EXPECT_EQ(p[2], 0);
}

TEST(DistTest, RejectsBadMass) {
  try {
    dist_new(two(), {R("1/2"), R("2/3")});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::mass_not_one);
  }
  try {
    dist_new(two(), {R("3/2"), R("-1/2")});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::negative_weight);
  }
  try {
    dist_new(two(), {R("1")});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::dimension_mismatch);
  }
}

TEST(DistTest, EqualityNeedsSameSpace) {
  auto a = make_space("A", {"p", "q"});
  auto b = make_space("B", {"p", "q"});
  EXPECT_FALSE(Dist::dirac(a, 0) == Dist::dirac(b, 0));
  EXPECT_TRUE(Dist::dirac(a, 0) == Dist::dirac(make_space("A", {"p", "q"}), 0));
}

TEST(TvTest, NormExamples) {
  const Dist p = dist_new(two(), {R("7/10"), R("3/10")});
  const Dist u = dist_new(two(), {R("1/2"), R("1/2")});
  EXPECT_EQ(tv_norm(p - p), 0);
  // |1/5| + |-1/5|
  EXPECT_EQ(tv_norm(p - u), Rational(2, 5));
  EXPECT_EQ(tv_norm(Dist::dirac(two(), 0) - Dist::dirac(two(), 1)), 2);
  EXPECT_EQ((p - u).total_mass(), 0);
}

TEST(TvTest, MetricExamples) {
  const Dist p = dist_new(two(), {R("7/10"), R("3/10")});
  const Dist u = dist_new(two(), {R("1/2"), R("1/2")});
  EXPECT_EQ(tv_metric(p, p), 0);
  EXPECT_EQ(tv_metric(Dist::dirac(two(), 0), Dist::dirac(two(), 1)), 1);
  // Frozen from the subset oracle: subsets {}, {y1}, {y2}, {y1,y2}.
  EXPECT_EQ(oracle::tv_by_subsets(p, u), Rational(1, 5));
  EXPECT_EQ(tv_metric(p, u), Rational(1, 5));
  EXPECT_THROW(tv_metric(p, Dist::dirac(three(), 0)), Error);
}

TEST(TvTest, MatchesSubsetOracleAndHalfNorm) {
  Sampler s(11);
  for (int i = 0; i < 150; ++i) {
    auto x = s.space("x", 1, 12);
    auto p = s.dist(x), q = s.dist(x);
    ASSERT_EQ(tv_metric(p, q), oracle::tv_by_subsets(p, q));
    ASSERT_EQ(tv_metric(p, q) * 2, tv_norm(p - q));
  }
}

TEST(TvTest, IsAMetric) {
  Sampler s(12);
  for (int i = 0; i < 200; ++i) {
    auto x = s.space("x", 1, 6);
    auto p = s.dist(x), q = s.dist(x), r = s.dist(x);
    ASSERT_EQ(tv_metric(p, q), tv_metric(q, p));
    ASSERT_LE(tv_metric(p, r), tv_metric(p, q) + tv_metric(q, r));
    ASSERT_EQ(tv_metric(p, q) == 0, p == q);
  }
}

TEST(TvTest, NoDriftUnderMixing) {
  Sampler s(13);
  auto x = s.space("x", 5, 5);
  Dist p = s.dist(x);
  for (int i = 0; i < 50; ++i) {
    const Dist q = s.dist(x);
    std::vector<Rational> w(x->size());
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = p[k] * Rational(1, 3) + q[k] * Rational(2, 3);
    p = Dist(x, w);  // throws if the mass drifted from 1
  }
  Rational total = 0;
  for (const auto& w : p.weights()) total += w;
  EXPECT_EQ(total, 1);
}

TEST(FinSuppTest, ConstructionRules) {
  const Dist p1 = Dist::dirac(two(), 0);
  const Dist p2 = Dist::dirac(two(), 1);
  const auto d = finsupp_new<Dist>({p1}, {Rational(1)});
  EXPECT_EQ(d.size(), 1u);
  EXPECT_EQ(d, FinSuppMeasure<Dist>::dirac(p1));
  const auto mix = finsupp_new<Dist>({p1, p2}, {Rational(1, 2), Rational(1, 2)});
  EXPECT_EQ(mix.weight_of(p2), Rational(1, 2));
  try {
    finsupp_new<Dist>({p1, p1}, {Rational(1, 2), Rational(1, 2)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::duplicate_atom);
  }
  EXPECT_THROW(finsupp_new<Dist>({p1, p2}, {Rational(1, 2), Rational(1, 3)}), Error);
  EXPECT_THROW(finsupp_new<Dist>({p1, p2}, {Rational(3, 2), Rational(-1, 2)}), Error);
}

TEST(FinSuppTest, PrunesZerosAndIgnoresOrder) {
  const auto a = finsupp_new<std::string>({"a", "b", "c"}, {Rational(1, 4), Rational(0), Rational(3, 4)});
  EXPECT_EQ(a.size(), 2u);
  const auto b = finsupp_new<std::string>({"c", "a"}, {Rational(3, 4), Rational(1, 4)});
  EXPECT_EQ(a, b);
  const auto c = FinSuppMeasure<std::string>::collect({{"a", Rational(1, 8)}, {"c", Rational(3, 4)}, {"a", Rational(1, 8)}});
  EXPECT_EQ(a, c);
}

}  // namespace
}  // namespace giryq
