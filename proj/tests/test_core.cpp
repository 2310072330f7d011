#include <gtest/gtest.h>

#include <random>

#include "mutalg/error.hpp"
#include "mutalg/expr.hpp"
#include "mutalg/matrix.hpp"
#include "mutalg/poly.hpp"
#include "mutalg/substitute.hpp"
#include "support.hpp"

using namespace mutalg;
using testing_support::ctx;
using testing_support::evaluate;
using testing_support::lp;
using testing_support::rf;

TEST(Context, EqualityIsByNames) {
  EXPECT_EQ(ctx({"a", "b"}), ctx({"a", "b"}));
  EXPECT_FALSE(ctx({"a", "b"}) == ctx({"b", "a"}));
  EXPECT_EQ(ctx({"a", "b"}).index_of("b"), 1u);
  EXPECT_FALSE(ctx({"a"}).index_of("q"));
}

TEST(Context, RejectsDuplicatesAndBadNames) {
  EXPECT_THROW(ctx({"a", "a"}), Error);
  EXPECT_THROW(ctx({"1a"}), Error);
  EXPECT_THROW(ctx({"a"}).extended({"a"}), Error);
  EXPECT_EQ(ctx({"a"}).extended({"b"}), ctx({"a", "b"}));
}

TEST(Laurent, NoZeroCoefficientsStored) {
  auto c = ctx({"x", "y"});
  auto f = lp("x + y - x", c);
  EXPECT_EQ(f.size(), 1u);
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ((f - f).size(), 0u);
}

TEST(Laurent, GrlexLeadingTerm) {
  auto c = ctx({"x", "y"});
  auto f = lp("y^2 + x*y + x^3*y^(-3) + 7", c);
  EXPECT_EQ(f.leading_term().first, (Exponent{1, 1}));
  EXPECT_EQ(f.total_degree(), 2);
  EXPECT_EQ(f.min_exponent(), (Exponent{0, -3}));
  EXPECT_EQ(f.max_exponent(), (Exponent{3, 2}));
  EXPECT_THROW(LaurentPolynomial(c).total_degree(), Error);
}

TEST(Laurent, ArithmeticMatchesEvaluation) {
  std::mt19937_64 rng(7);
  auto c = ctx({"x", "y", "z"});
  for (int t = 0; t < 100; ++t) {
    auto f = testing_support::random_laurent(c, rng, 4, -2, 2);
    auto g = testing_support::random_laurent(c, rng, 3, -2, 2);
    auto p = testing_support::random_point(3, rng);
    EXPECT_EQ(evaluate(f * g, p), evaluate(f, p) * evaluate(g, p));
    EXPECT_EQ(evaluate(f + g, p), evaluate(f, p) + evaluate(g, p));
    EXPECT_EQ(evaluate(f - g, p), evaluate(f, p) - evaluate(g, p));
    EXPECT_EQ(evaluate(f.pow(3), p), evaluate(f, p) * evaluate(f, p) * evaluate(f, p));
  }
}

TEST(Laurent, NegativePowerOnlyForMonomials) {
  auto c = ctx({"x", "y"});
  EXPECT_EQ(lp("x^2*y", c).pow(-2), lp("x^(-4)*y^(-2)", c));
  EXPECT_THROW(lp("x + y", c).pow(-1), Error);
}

TEST(Laurent, MixedContextsRejected) {
  EXPECT_THROW(lp("x", ctx({"x"})) + lp("x", ctx({"x", "y"})), Error);
}

TEST(Poly, ExactDivision) {
  auto c = ctx({"x", "y"});
  auto q = exact_divide(lp("x^2 - y^2", c), lp("x + y", c));
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, lp("x - y", c));
  EXPECT_FALSE(exact_divide(lp("x^2 + y^2", c), lp("x + y", c)));
  EXPECT_THROW(exact_divide(lp("x^(-1)", c), lp("x", c)), Error);
}

TEST(Poly, GcdIsMonicCommonFactor) {
  auto c = ctx({"x", "y", "z"});
  auto g = lp("x*y + z", c);
  auto f1 = g * lp("3*x - y^2", c);
  auto f2 = g * lp("2*z + 1", c) * lp("x", c);
  EXPECT_EQ(gcd(f1, f2), g);
  EXPECT_EQ(gcd(lp("2*x + 4", c), lp("6*x + 12", c)), lp("x + 2", c));
  EXPECT_EQ(gcd(lp("x", c), lp("y", c)), lp("1", c));
  EXPECT_EQ(gcd(LaurentPolynomial(c), lp("3*y + 3", c)), lp("y + 1", c));
}

TEST(Poly, GcdRandomCommonFactors) {
  std::mt19937_64 rng(11);
  auto c = ctx({"x", "y"});
  for (int t = 0; t < 40; ++t) {
    auto g = testing_support::random_laurent(c, rng, 2, 0, 2);
    auto a = testing_support::random_laurent(c, rng, 2, 0, 2);
    auto b = testing_support::random_laurent(c, rng, 2, 0, 2);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    auto d = gcd(g * a, g * b);
    EXPECT_TRUE(exact_divide(g * a, d));
    EXPECT_TRUE(exact_divide(g * b, d));
    EXPECT_TRUE(exact_divide(d, make_monic(g)));
  }
}

TEST(RationalFunction, NormalFormCancelsAndMakesDenominatorMonic) {
  auto c = ctx({"a", "b", "c"});
  auto f = rf("((a*c - b) + b)/a", c);
  EXPECT_EQ(f, rf("c", c));
  EXPECT_TRUE(f.as_laurent());
  auto g = rf("(2*a)/(4*a*b + 2)", c);
  EXPECT_EQ(g.numerator(), lp("1/2*a", c));
  EXPECT_EQ(g.denominator(), lp("a*b + 1/2", c));
  EXPECT_EQ(rf("a/(-b)", c), rf("-a/b", c));
}

TEST(RationalFunction, ArithmeticMatchesEvaluation) {
  std::mt19937_64 rng(13);
  auto c = ctx({"x", "y"});
  for (int t = 0; t < 60; ++t) {
    auto fd = testing_support::random_laurent(c, rng, 2, 0, 2);
    auto gd = testing_support::random_laurent(c, rng, 2, 0, 2);
    if (fd.is_zero() || gd.is_zero()) continue;
    auto f = RationalFunction::normalize(testing_support::random_laurent(c, rng, 2, -1, 2), fd);
    auto g = RationalFunction::normalize(testing_support::random_laurent(c, rng, 2, -1, 2), gd);
    auto p = testing_support::random_point(2, rng);
    try {
      Rational fv = evaluate(f, p), gv = evaluate(g, p);
      EXPECT_EQ(evaluate(f + g, p), fv + gv);
      EXPECT_EQ(evaluate(f * g, p), fv * gv);
      if (gv != 0 && !g.is_zero()) {
        EXPECT_EQ(evaluate(f / g, p), fv / gv);
      }
    } catch (const std::domain_error&) {
    }
  }
}

TEST(RationalFunction, DivisionByZeroThrows) {
  auto c = ctx({"x"});
  EXPECT_THROW(rf("x", c) / RationalFunction(c), Error);
  EXPECT_THROW(RationalFunction(c).inverse(), Error);
  EXPECT_THROW(rf("1/(x - x)", c), Error);
}

TEST(Expr, RoundTrip) {
  auto c = ctx({"x", "y", "T11"});
  for (const char* text : {"x^2*y - 1/2*x^(-1)", "(x + 1)/(y - 2)", "-T11^3 + 5", "0", "x^(-2)*(x + y)^3/(T11 + 1)"}) {
    auto f = rf(text, c);
    EXPECT_EQ(rf(format_expr(f), c), f) << text;
  }
}

TEST(Expr, Precedence) {
  auto c = ctx({"x"});
  EXPECT_EQ(rf("-x^2", c), rf("-(x^2)", c));
  EXPECT_EQ(rf("2*x^3", c), rf("2*(x^3)", c));
  EXPECT_EQ(rf("x - 1 - 1", c), rf("x - 2", c));
  EXPECT_EQ(rf("x/2/2", c), rf("x/4", c));
}

TEST(Expr, ErrorsCarryOffsets) {
  auto c = ctx({"x", "y"});
  try {
    parse_expr("x + * y", c);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 5u);
  }
  EXPECT_THROW(parse_expr("x + q", c), ParseError);
  EXPECT_THROW(parse_expr("(x + y", c), ParseError);
  EXPECT_THROW(parse_expr("x y", c), ParseError);
  EXPECT_THROW(parse_expr("x^y", c), ParseError);
  EXPECT_THROW(parse_expr("", c), ParseError);
  EXPECT_THROW(parse_laurent("1/(x + y)", c), Error);
}

TEST(Substitute, IsARingMap) {
  std::mt19937_64 rng(17);
  auto src = ctx({"a", "b"});
  auto dst = ctx({"u", "v"});
  std::vector<RationalFunction> images{rf("u*v + 1", dst), rf("u/(v - 3)", dst)};
  for (int t = 0; t < 30; ++t) {
    auto f = testing_support::random_laurent(src, rng, 3, -1, 2);
    auto g = testing_support::random_laurent(src, rng, 3, -1, 2);
    EXPECT_EQ(substitute(f * g, images, dst), substitute(f, images, dst) * substitute(g, images, dst));
    EXPECT_EQ(substitute(f + g, images, dst), substitute(f, images, dst) + substitute(g, images, dst));
  }
  EXPECT_EQ(substitute(rf("a^2/b", src), images, dst), rf("(u*v + 1)^2*(v - 3)/u", dst));
}

TEST(Substitute, Errors) {
  auto src = ctx({"a", "b"});
  EXPECT_THROW(substitute(rf("a", src), {rf("a", src)}, src), Error);
  EXPECT_THROW(substitute(rf("1/a", src), std::vector<RationalFunction>{RationalFunction(src), rf("b", src)}, src), Error);
  std::map<std::string, RationalFunction> by_name{{"a", rf("b", src)}};
  EXPECT_THROW(substitute(rf("a*b", src), by_name, src), Error);
}

TEST(Matrix, RankAndInverse) {
  IntMatrix b{{0, 1}, {-1, 0}, {1, 1}};
  EXPECT_EQ(rank(b), 2u);
  EXPECT_EQ(rank(IntMatrix{{1, 2}, {2, 4}}), 1u);
  IntMatrix u{{1, 0, 0}, {0, -1, 1}, {0, 0, 1}};
  auto inv = unimodular_inverse(u);
  ASSERT_TRUE(inv);
  EXPECT_EQ(u * *inv, IntMatrix::identity(3));
  EXPECT_FALSE(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}));
  EXPECT_EQ(stack_rows(IntMatrix{{1, 2}}, IntMatrix{{3, 4}}), (IntMatrix{{1, 2}, {3, 4}}));
  EXPECT_THROW(stack_rows(IntMatrix{{1}}, IntMatrix{{1, 2}}), Error);
  EXPECT_EQ(format_matrix(IntMatrix{{1, -2}, {10, 0}}), " 1 -2\n10  0\n");
}
