#include <gtest/gtest.h>

#include <cmath>

#include "taylor/jet.hpp"
#include "taylor/parser.hpp"

using taylor::Jet;
using taylor::JetOfJets;
using taylor::Method;
using taylor::Rational;
using taylor::Word;

namespace {

std::vector<Rational> R(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

Jet<Rational> jet1(std::initializer_list<long long> xs) { return Jet<Rational>(xs.size() - 1, 1, R(xs)); }

const std::vector<Method> kAll{Method::Direct, Method::Inductive, Method::Tower, Method::Operational};

}  // namespace

TEST(Snode, Examples) {
  auto [a, b] = taylor::snode(jet1({5, 7}));
  EXPECT_EQ(a.flat(), R({5}));
  EXPECT_EQ(b.flat(), R({7}));
  std::tie(a, b) = taylor::snode(jet1({1, 2, 4}));
  EXPECT_EQ(a.flat(), R({1, 2}));
  EXPECT_EQ(b.flat(), R({1, 4}));
  std::tie(a, b) = taylor::snode(jet1({1, 3, 6, 9}));
  EXPECT_EQ(a.flat(), R({1, 3, 6}));
  EXPECT_EQ(b.flat(), R({1, 4, 9}));
  EXPECT_THROW(taylor::snode(jet1({1})), taylor::DomainError);
}

TEST(Stree, LevelTwoAndThree) {
  const auto t2 = taylor::stree(jet1({10, 6, 5}));
  EXPECT_EQ(taylor::proj_word(t2, Word::parse("00")), R({10}));
  EXPECT_EQ(taylor::proj_word(t2, Word::parse("10")), R({6}));
  EXPECT_EQ(taylor::proj_word(t2, Word::parse("01")), R({3}));
  EXPECT_EQ(taylor::proj_word(t2, Word::parse("11")), R({5}));
  const auto t3 = taylor::stree(jet1({1, 6, 9, 5}));
  EXPECT_EQ(taylor::proj_word(t3, Word::parse("011"))[0], Rational(3));
  EXPECT_EQ(taylor::stree(jet1({4})).flat(), R({4}));
}

TEST(Stree, InductiveMatchesClosedForm) {
  for (std::size_t n = 0; n <= 6; ++n) {
    std::vector<Rational> flat;
    for (std::size_t k = 0; k <= n; ++k) flat.emplace_back(static_cast<long long>(k * k + 2));
    const Jet<Rational> j(n, 1, flat);
    EXPECT_EQ(taylor::stree(j), taylor::stree_inductive(j)) << n;
    EXPECT_EQ(taylor::stree_inverse(taylor::stree(j)), j);
  }
}

TEST(Streebis, Examples) {
  const auto t = taylor::streebis(jet1({1, 2, 3}));
  EXPECT_EQ(t.flat(), R({1, 2, 2, 3}));
  EXPECT_EQ(taylor::streebis(jet1({9})).flat(), R({9}));
}

TEST(Push, CubeInstanceAllMethods) {
  const auto f = taylor::parse_map("x0^3");
  for (Method m : kAll) {
    EXPECT_EQ(taylor::taylor_push(f, jet1({1, 1, 2}), m).flat(), R({1, 3, 9})) << taylor::method_name(m);
  }
  EXPECT_EQ(taylor::taylor_push(f, jet1({1, 1, 2}), Method::Bis).flat(), R({1, 3, 12}));
}

TEST(Push, OrderZeroAndOne) {
  const auto f = taylor::parse_map("x0^2*x1 - x1", 2);
  const Jet<Rational> j0(0, 2, R({2, 3}));
  const Jet<Rational> j1(1, 2, R({2, 3, 5, 7}));
  // T f = (f(x), df(x,u)) with df = 2 x0 x1 u0 + x0^2 u1 - u1.
  const auto tf = R({9, 2 * 2 * 3 * 5 + 4 * 7 - 7});
  for (Method m : {Method::Direct, Method::Inductive, Method::Tower, Method::Operational, Method::Bis}) {
    EXPECT_EQ(taylor::taylor_push(f, j0, m).flat(), R({9}));
    EXPECT_EQ(taylor::taylor_push(f, j1, m).flat(), tf);
  }
}

TEST(Push, IdentityAndLinear) {
  const auto j = Jet<Rational>(3, 2, R({1, 2, 3, 4, 5, 6, 7, 8}));
  const auto lin = taylor::parse_map("(2*x0 - x1, 3*x1)");
  for (Method m : kAll) {
    EXPECT_EQ(taylor::taylor_push(taylor::identity_map(2), j, m), j);
    EXPECT_EQ(taylor::taylor_push(lin, j, m), taylor::apply_coefficientwise(lin, j));
  }
}

TEST(Push, Operational) {
  const auto e = taylor::taylor_push(taylor::parse_map("exp(x0)"), Jet<double>(3, 1, {0, 1, 0, 0}), Method::Operational);
  const double want[] = {1, 1, 0.5, 1.0 / 6};
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(e.flat()[k], want[k], 1e-15);
  EXPECT_EQ(taylor::taylor_push(taylor::parse_map("x0*x0"), jet1({1, 1, 2}), Method::Operational).flat(), R({1, 2, 5}));
  EXPECT_EQ(taylor::taylor_push(taylor::parse_map("5", 1), jet1({1, 1, 2}), Method::Operational).flat(), R({5, 0, 0}));
  EXPECT_THROW(taylor::taylor_push(taylor::parse_map("exp(x0)"), jet1({0, 1}), Method::Operational), taylor::DomainError);
  EXPECT_THROW(taylor::taylor_push(taylor::parse_map("1/x0"), jet1({0, 1}), Method::Operational), taylor::DomainError);
  EXPECT_THROW(taylor::taylor_push(taylor::parse_map("ln(x0)"), Jet<double>(1, 1, {0, 1}), Method::Operational),
               taylor::DomainError);
  // 1/(1 - e) = 1 + e + e^2 + ...
  EXPECT_EQ(taylor::taylor_push(taylor::parse_map("1/x0"), jet1({1, -1, 0, 0}), Method::Operational).flat(),
            R({1, 1, 1, 1}));
}

TEST(Push, TranscendentalAgainstClosedForms) {
  const auto s = taylor::taylor_push(taylor::parse_map("(sin(x0), cos(x0), ln(x0 + 1))"),
                                     Jet<double>(5, 1, {0, 1, 0, 0, 0, 0}), Method::Operational);
  const double sin_c[] = {0, 1, 0, -1.0 / 6, 0, 1.0 / 120};
  const double cos_c[] = {1, 0, -0.5, 0, 1.0 / 24, 0};
  const double ln_c[] = {0, 1, -0.5, 1.0 / 3, -0.25, 0.2};
  for (int k = 0; k <= 5; ++k) {
    EXPECT_NEAR(s.coeff(k)[0], sin_c[k], 1e-15);
    EXPECT_NEAR(s.coeff(k)[1], cos_c[k], 1e-15);
    EXPECT_NEAR(s.coeff(k)[2], ln_c[k], 1e-15);
  }
}

TEST(Push, OrderCaps) {
  const auto f = taylor::parse_map("x0^2");
  EXPECT_THROW(taylor::taylor_push(f, Jet<Rational>(9, 1), Method::Direct), taylor::DomainError);
  EXPECT_NO_THROW(taylor::taylor_push(f, Jet<Rational>(64, 1), Method::Operational));
  EXPECT_THROW(taylor::taylor_push(f, Jet<Rational>(65, 1), Method::Operational), taylor::DomainError);
}

TEST(TaylorMap, SymbolicMatchesNumeric) {
  const auto f = taylor::parse_map("(x0^2*x1 + x1^3, x0 - x1^2)");
  const Jet<Rational> j(3, 2, R({1, 2, -1, 3, 2, 0, 1, -2}));
  const auto want = taylor::taylor_push(f, j, Method::Direct);
  for (Method m : {Method::Direct, Method::Inductive, Method::Tower, Method::Operational}) {
    const auto tf = taylor::taylor_map(f, 3, m);
    EXPECT_EQ(tf.arity(), 8U);
    EXPECT_EQ(tf.coarity(), 8U);
    EXPECT_EQ(taylor::eval<Rational>(tf, j.flat()), want.flat()) << taylor::method_name(m);
  }
  EXPECT_EQ(taylor::eval<Rational>(taylor::taylor_map(f, 3, Method::Bis), j.flat()),
            taylor::taylor_push(f, j, Method::Bis).flat());
}

TEST(JetMonad, Operations) {
  JetOfJets<Rational> g(2, 1);
  long long v = 1;
  for (std::size_t i = 0; i <= 2; ++i)
    for (std::size_t j = 0; j <= 2; ++j) g.at(i, j)[0] = Rational(v++);
  // a00 = 1, a01 = 2, a02 = 3, a10 = 4, a11 = 5, a20 = 7.
  EXPECT_EQ(taylor::jet_mu(g).flat(), R({1, 6, 15}));
  EXPECT_EQ(taylor::jet_scale(jet1({1, 1, 1}), Rational(2)).flat(), R({1, 2, 4}));
  const auto j = jet1({3, 5, 7});
  EXPECT_EQ(taylor::jet_mu(taylor::jet_eta_inner(j)), j);
  EXPECT_EQ(taylor::jet_mu(taylor::jet_eta_outer(j)), j);
  // lift is not a section of mu: only the diagonal survives, at degree 2i.
  EXPECT_EQ(taylor::jet_mu(taylor::jet_lift(j)).flat(), R({3, 0, 5}));
  EXPECT_EQ(taylor::jet_swap(taylor::jet_swap(g)), g);
  EXPECT_EQ(taylor::jet_swap(g).at(0, 1)[0], Rational(4));
  EXPECT_EQ(taylor::jet_truncate(j, 1).flat(), R({3, 5}));
  EXPECT_THROW(taylor::jet_truncate(j, 3), taylor::DomainError);
  EXPECT_EQ(taylor::jet_eta<Rational>(R({4}), 2).flat(), R({4, 0, 0}));
}

TEST(Kleisli, DualNumberComposition) {
  // f(x) = (x^2, x) and g(y) = (y^3, 2y) as order-1 Kleisli maps.
  const taylor::KleisliMap f{1, taylor::parse_map("(x0^2, x0)")};
  const taylor::KleisliMap g{1, taylor::parse_map("(x0^3, 2*x0)")};
  const auto gf = taylor::kleisli_compose(g, f);
  const auto x = R({3});
  const auto out = taylor::kleisli_apply<Rational>(gf, x);
  // g0(f0) + (g1(f0) + dg0(f0, f1)) e with f0 = 9, f1 = 3.
  EXPECT_EQ(out.flat(), R({729, 18 + 3 * 81 * 3}));
}

TEST(Kleisli, PureEmbedding) {
  const auto g = taylor::parse_map("x0^2 + 1");
  const auto f = taylor::parse_map("x0^3");
  const auto gf = taylor::kleisli_compose(taylor::kleisli_pure(g, 3), taylor::kleisli_pure(f, 3));
  EXPECT_EQ(taylor::kleisli_apply<Rational>(gf, R({2})).flat(), R({65, 0, 0, 0}));
}

TEST(Kleisli, SquareAfterCubeJet) {
  // f(x) = T_3(x^3)(x, 1, 0, 0) as a Kleisli map; composing with pure g = x^2
  // gives T_3(x^6) on the same source jet.
  const std::size_t n = 3;
  const auto cube = taylor::taylor_map(taylor::parse_map("x0^3"), n);
  std::vector<taylor::Expr> source{taylor::Expr::var(0), taylor::Expr::constant(1), taylor::Expr(), taylor::Expr()};
  const taylor::KleisliMap f{n, taylor::compose(cube, taylor::SmoothMap(1, source))};
  const taylor::KleisliMap g_pure = taylor::kleisli_pure(taylor::parse_map("x0^2"), n);
  const auto h = taylor::kleisli_compose(g_pure, f);
  const auto got = taylor::kleisli_apply<Rational>(h, R({1}));
  const auto want = taylor::taylor_push(taylor::parse_map("x0^6"), jet1({1, 1, 0, 0}), Method::Direct);
  EXPECT_EQ(got, want);
}

TEST(Strength, PartialPush) {
  const auto f = taylor::parse_map("x0*x1");
  const auto c = R({7});
  const auto out = taylor::partial_push<Rational>(f, 1, 0, jet1({2, 1}), c);
  EXPECT_EQ(out.flat(), R({14, 7}));
  const auto g = taylor::parse_map("x0^2 + 0*x1", 2);
  const auto out2 = taylor::partial_push<Rational>(g, 1, 1, jet1({5, 1, 1}), R({3}));
  EXPECT_EQ(out2.flat(), R({9, 0, 0}));
}

TEST(Strength, SymbolicMapsMatchNumeric) {
  const Jet<Rational> a(2, 2, R({1, 2, 3, 4, 5, 6}));
  const auto y = R({7});
  EXPECT_EQ(taylor::eval<Rational>(taylor::strength_map(2, 1, 2, 0), R({1, 2, 3, 4, 5, 6, 7})),
            taylor::strength_left<Rational>(a, y).flat());
  EXPECT_EQ(taylor::eval<Rational>(taylor::strength_map(1, 2, 2, 1), R({7, 1, 2, 3, 4, 5, 6})),
            taylor::strength_right<Rational>(y, a).flat());
}

TEST(Methods, Names) {
  for (Method m : {Method::Direct, Method::Inductive, Method::Tower, Method::Operational, Method::Bis}) {
    EXPECT_EQ(taylor::parse_method(taylor::method_name(m)), m);
  }
  EXPECT_FALSE(taylor::parse_method("newton").has_value());
}
