#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "equidesign/design_gen.hpp"
#include "equidesign/effects.hpp"

namespace equi {
namespace {

Monomial x(int i) { return Monomial::variable(i); }

const DesignPoly kE42 = make_design(4, {{}, {1}, {2}, {1, 2}, {1, 2, 3}, {1, 2, 4}, {1, 2, 3, 4}});

TEST(Order, GradedLex) {
  const OrderedDesign od = order_vertices(kE42);
  const std::vector<Monomial> want{Monomial::one(), x(1), x(2), x(1) * x(2),
                                   x(1) * x(2) * x(3), x(1) * x(2) * x(4),
                                   x(1) * x(2) * x(3) * x(4)};
  EXPECT_EQ(od.vertices, want);
  EXPECT_EQ(od.size(), 7U);
  EXPECT_EQ(order_vertices(make_design(2, {{}})).vertices, std::vector<Monomial>{Monomial::one()});
  EXPECT_EQ(order_vertices(make_design(2, {{2}, {1}})).vertices, (std::vector<Monomial>{x(1), x(2)}));
  EXPECT_THROW(order_vertices(DesignPoly(2)), std::invalid_argument);
}

TEST(Incidence, WorkedExampleDirectionTwo) {
  const OrderedDesign od = order_vertices(kE42);
  const EffectIncidence inc = build_incidence(od, 2);
  ASSERT_EQ(inc.pairs.size(), 2U);
  EXPECT_EQ(inc.pairs[0].row, 0U);
  EXPECT_EQ(inc.pairs[0].col, 2U);
  EXPECT_EQ(inc.pairs[0].sign, 1);
  EXPECT_EQ(inc.pairs[1].row, 1U);
  EXPECT_EQ(inc.pairs[1].col, 3U);
  EXPECT_EQ(inc.pairs[1].sign, 1);

  const auto j = dense_j(inc, od.size());
  EXPECT_EQ(j[0][2], 1);
  EXPECT_EQ(j[1][3], 1);
  EXPECT_EQ(j[0][0], -1);
  EXPECT_EQ(j[1][1], -1);
  int nonzero = 0;
  for (const auto& row : j) {
    for (int v : row) nonzero += v != 0 ? 1 : 0;
  }
  EXPECT_EQ(nonzero, 4);

  const std::vector<double> f{1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0};
  const auto e = elementary_effects(inc, f, 0.5);
  EXPECT_EQ(e, (std::vector<double>{(4.0 - 1.0) / 0.5, (8.0 - 2.0) / 0.5}));
}

TEST(Incidence, PathAndEmptyDirection) {
  const OrderedDesign od = order_vertices(gen_path(2));
  const auto inc = build_incidence(od, 1);
  ASSERT_EQ(inc.pairs.size(), 1U);
  EXPECT_EQ(inc.pairs[0].row, 0U);
  EXPECT_EQ(inc.pairs[0].col, 1U);
  EXPECT_EQ(inc.pairs[0].sign, 1);
  EXPECT_TRUE(build_incidence(order_vertices(make_design(3, {{}, {1}})), 3).pairs.empty());
  EXPECT_THROW(build_incidence(od, 0), std::invalid_argument);
  EXPECT_THROW(build_incidence(od, 3), std::invalid_argument);
}

TEST(Incidence, LowerEndpointAlwaysComesFirst) {
  // Adjacent vertices differ in degree by one, so graded-lex lists the lower one first.
  Rng rng(8);
  for (int k = 0; k < 20; ++k) {
    const auto rd = randomize(gen_H(7, 5), rng);
    const OrderedDesign od = order_vertices(rd.design);
    for (int i = 1; i <= 7; ++i) {
      for (const auto& p : build_incidence(od, i).pairs) {
        EXPECT_EQ(p.sign, 1);
        EXPECT_FALSE(od.vertices[p.row].has(i));
      }
    }
  }
}

TEST(Effects, SignedDifferences) {
  EffectIncidence inc{1, {{0, 1, 1}, {2, 3, -1}}};
  const std::vector<double> f{0.0, 1.0, 5.0, 2.0};
  EXPECT_EQ(elementary_effects(inc, f, 1.0), (std::vector<double>{1.0, 3.0}));
  EXPECT_THROW(elementary_effects(inc, f, 0.0), std::invalid_argument);
  const std::vector<double> shortf{0.0, 1.0};
  EXPECT_THROW(elementary_effects(inc, shortf, 1.0), std::invalid_argument);
}

TEST(Effects, ConstantAndLinear) {
  const OrderedDesign od = order_vertices(gen_G(5, 3));
  const Point base{0.0, 0.25, 0.0, 0.5, 0.25};
  const Embedding emb = embed(od, base, 0.5);
  const std::vector<double> a{3.0, -1.0, 0.5, 7.0, -2.0};
  std::vector<double> constant(od.size(), 4.0), linear;
  for (const auto& p : emb.points) {
    double s = 0.0;
    for (std::size_t k = 0; k < 5; ++k) s += a[k] * p[k];
    linear.push_back(s);
  }
  for (int i = 1; i <= 5; ++i) {
    const auto inc = build_incidence(od, i);
    for (double e : elementary_effects(inc, constant, 0.5)) EXPECT_EQ(e, 0.0);
    for (double e : elementary_effects(inc, linear, 0.5)) EXPECT_NEAR(e, a[i - 1], 1e-12);
  }
}

TEST(Randomize, IdentityAndClosure) {
  EXPECT_EQ(apply(kE42, identity_randomization(4)), kE42);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const auto rd = randomize(gen_G(6, 3), rng);
    EXPECT_EQ(rd.design.size(), gen_G(6, 3).size());
    EXPECT_EQ(is_equitable(rd.design).multiplicity, 3U);
    EXPECT_EQ(apply(gen_G(6, 3), rd.transform), rd.design);
  }
}

TEST(Embed, Examples) {
  const OrderedDesign path = order_vertices(gen_path(2));
  const Point base{0.25, 0.5};
  const Embedding e = embed(path, base, 0.25);
  EXPECT_EQ(e.points, (std::vector<Point>{{0.25, 0.5}, {0.5, 0.5}, {0.5, 0.75}}));

  const OrderedDesign cube = order_vertices(DesignPoly::full(3));
  const Point zero(3, 0.0);
  const Embedding bits = embed(cube, zero, 1.0);
  for (std::size_t k = 0; k < cube.size(); ++k) {
    for (int c = 0; c < 3; ++c) {
      EXPECT_EQ(bits.points[k][static_cast<std::size_t>(c)], cube.vertices[k].has(c + 1) ? 1.0 : 0.0);
    }
  }
}

TEST(Embed, EdgesDifferByDelta) {
  const OrderedDesign od = order_vertices(gen_M(8, 2));
  Rng rng(4);
  const Point base = sample_base(8, 2.0 / 3.0, 4, rng);
  const Embedding e = embed(od, base, 2.0 / 3.0);
  for (int i = 1; i <= 8; ++i) {
    for (const auto& p : build_incidence(od, i).pairs) {
      for (std::size_t k = 0; k < 8; ++k) {
        const double diff = e.points[p.col][k] - e.points[p.row][k];
        const double want = k + 1 == static_cast<std::size_t>(i) ? p.sign * 2.0 / 3.0 : 0.0;
        EXPECT_NEAR(diff, want, 1e-15);
      }
    }
  }
}

TEST(Embed, Errors) {
  const OrderedDesign od = order_vertices(gen_path(2));
  EXPECT_THROW(embed(od, Point{0.8, 0.0}, 0.25), std::invalid_argument);
  EXPECT_THROW(embed(od, Point{-0.1, 0.0}, 0.25), std::invalid_argument);
  EXPECT_THROW(embed(od, Point{0.0}, 0.25), std::invalid_argument);
  EXPECT_THROW(embed(od, Point{0.0, 0.0}, 0.0), std::invalid_argument);
  EXPECT_THROW(embed(od, Point{0.0, 0.0}, 1.5), std::invalid_argument);
}

TEST(SampleBase, Grid) {
  Rng rng(1);
  for (int k = 0; k < 20; ++k) EXPECT_EQ(sample_base(5, 1.0, 2, rng), Point(5, 0.0));
  std::set<double> seen;
  for (int k = 0; k < 50; ++k) {
    for (double b : sample_base(10, 2.0 / 3.0, 4, rng)) seen.insert(b);
  }
  EXPECT_EQ(seen, (std::set<double>{0.0, 1.0 / 3.0}));
  EXPECT_DOUBLE_EQ(default_delta(4), 2.0 / 3.0);
  EXPECT_THROW(sample_base(3, 0.5, 1, rng), std::invalid_argument);
  EXPECT_THROW(default_delta(1), std::invalid_argument);
}

}  // namespace
}  // namespace equi
