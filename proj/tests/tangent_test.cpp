#include <gtest/gtest.h>

#include "taylor/parser.hpp"
#include "taylor/tangent.hpp"

using taylor::Rational;
using taylor::TowerValue;
using taylor::Word;

namespace {

std::vector<Rational> R(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

TowerValue<Rational> tower(std::size_t level, std::size_t dim, std::initializer_list<long long> xs) {
  return TowerValue<Rational>(level, dim, R(xs));
}

}  // namespace

TEST(Tower, ProjWord) {
  const auto t = tower(1, 1, {4, 7});
  EXPECT_EQ(taylor::proj_word(t, Word::parse("0")), R({4}));
  EXPECT_EQ(taylor::proj_word(t, Word::parse("1")), R({7}));
  EXPECT_THROW(taylor::proj_word(t, Word::parse("00")), taylor::DomainError);
}

TEST(Tower, SecondPushOfSquare) {
  // T^2(x^2) at (x,u,v,w) = (x^2, 2xu, 2xv, 2uv + 2xw).
  const auto t2 = taylor::iterated_push(taylor::parse_map("x0^2"), 2);
  EXPECT_EQ(t2.arity(), 4U);
  const long long x = 3, u = 5, v = -2, w = 7;
  const auto out = taylor::tower_push(t2, 2, tower(2, 1, {x, u, v, w}));
  EXPECT_EQ(out.flat(), R({x * x, 2 * x * u, 2 * x * v, 2 * u * v + 2 * x * w}));
  EXPECT_EQ(taylor::proj_word(out, Word::parse("11")), R({2 * u * v + 2 * x * w}));
}

TEST(Tower, TangentPushExamples) {
  const auto tf = taylor::tangent_push(taylor::parse_map("x0^2"));
  EXPECT_EQ(taylor::eval<Rational>(tf, R({3, 5})), R({9, 30}));
  const auto tid = taylor::tangent_push(taylor::identity_map(2));
  EXPECT_EQ(taylor::eval<Rational>(tid, R({1, 2, 3, 4})), R({1, 2, 3, 4}));
  const auto tlin = taylor::tangent_push(taylor::parse_map("3*x0"));
  EXPECT_EQ(taylor::eval<Rational>(tlin, R({2, 5})), R({6, 15}));
  EXPECT_EQ(taylor::iterated_push(taylor::parse_map("x0^2"), 0).arity(), 1U);
  // pi_1 pushed twice is the 4-fold product of the projection.
  const auto tp = taylor::iterated_push(taylor::projection_map(2, {1}), 2);
  EXPECT_EQ(taylor::eval<Rational>(tp, R({1, 2, 3, 4, 5, 6, 7, 8})), R({2, 4, 6, 8}));
  EXPECT_THROW(taylor::iterated_push(taylor::parse_map("x0"), 13), taylor::DomainError);
}

TEST(Tower, IteratedDerivativeIsLastCoordinate) {
  const auto f = taylor::parse_map("x0^3*x1 + x1^2", 2);
  const auto t3 = taylor::iterated_push(f, 3);
  const auto d3 = taylor::iterated_derivative(f, 3);
  std::vector<Rational> p;
  for (int i = 0; i < 16; ++i) p.emplace_back(i % 5 - 2, 1 + i % 3);
  const auto full = taylor::eval<Rational>(t3, p);
  EXPECT_EQ(taylor::eval<Rational>(d3, p)[0], full[7]);
}

TEST(Tower, Eta) {
  const auto x = R({2, 3});
  EXPECT_EQ(taylor::tower_eta<Rational>(x, 1).flat(), R({2, 3, 0, 0}));
  EXPECT_EQ(taylor::tower_eta<Rational>(x, 0).flat(), x);
  EXPECT_EQ(taylor::tower_eta<Rational>(std::vector<Rational>{5}, 2).flat(), R({5, 0, 0, 0}));
}

TEST(Tower, Mu) {
  EXPECT_EQ(taylor::tower_mu(tower(2, 1, {1, 2, 3, 4})).flat(), R({1, 5}));
  EXPECT_THROW(taylor::tower_mu(tower(1, 1, {1, 2})), taylor::DomainError);
  // Level 4 -> 2 against the split enumeration written out by hand:
  // coordinate 11 = in(00,11) + in(10,01) + in(01,10) + in(11,00).
  std::vector<Rational> flat;
  for (int i = 0; i < 16; ++i) flat.emplace_back(i * i + 1);
  const auto out = taylor::tower_mu(TowerValue<Rational>(4, 1, flat));
  EXPECT_EQ(out.flat()[0], flat[0]);
  EXPECT_EQ(out.flat()[1], flat[1] + flat[4]);
  EXPECT_EQ(out.flat()[2], flat[2] + flat[8]);
  EXPECT_EQ(out.flat()[3], flat[12] + flat[3] + flat[6] + flat[9]);
}

TEST(Tower, Swap) {
  const auto t = tower(2, 1, {1, 2, 3, 4});
  EXPECT_EQ(taylor::tower_swap(t, 1, 1).flat(), R({1, 3, 2, 4}));
  EXPECT_EQ(taylor::tower_swap(taylor::tower_swap(t, 1, 1), 1, 1), t);
  EXPECT_THROW(taylor::tower_swap(t, 1, 2), taylor::DomainError);
  // Level 3 with n = 1, m = 2 and back.
  std::vector<Rational> flat;
  for (int i = 0; i < 8; ++i) flat.emplace_back(i);
  const TowerValue<Rational> t3(3, 1, flat);
  EXPECT_EQ(taylor::tower_swap(taylor::tower_swap(t3, 1, 2), 2, 1), t3);
}

TEST(Tower, Scale) {
  EXPECT_EQ(taylor::tower_scale(tower(1, 1, {3, 5}), Rational(7)).flat(), R({3, 35}));
  const auto t = tower(2, 1, {1, 1, 1, 1});
  EXPECT_EQ(taylor::tower_scale(t, Rational(1)), t);
  EXPECT_EQ(taylor::tower_scale(t, Rational(2)).flat(), R({1, 2, 2, 4}));
}

TEST(Tower, Lift) {
  EXPECT_EQ(taylor::tower_lift(tower(1, 1, {3, 5})).flat(), R({3, 0, 0, 5}));
}

TEST(Tower, Reshape) {
  std::vector<Rational> flat;
  for (int i = 0; i < 8; ++i) flat.emplace_back(i);
  const TowerValue<Rational> t(3, 1, flat);
  const auto o = taylor::as_outer(t, 1);
  EXPECT_EQ(o.level(), 2U);
  EXPECT_EQ(o.dim(), 2U);
  EXPECT_EQ(taylor::from_outer(o, 1), t);
  const auto m = taylor::map_inner<Rational>(t, 1, [](const TowerValue<Rational>& b) {
    return taylor::tower_scale(b, Rational(10));
  });
  EXPECT_EQ(m.flat(), R({0, 10, 2, 30, 4, 50, 6, 70}));
}
