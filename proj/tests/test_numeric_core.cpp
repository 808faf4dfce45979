#include "hyperinv/errors.hpp"
#include "hyperinv/rat.hpp"
#include "hyperinv/valuation.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hyperinv;

TEST(Valuation, Examples) {
  EXPECT_EQ(val(Rat(9, 2), 3), Order(2));
  EXPECT_EQ(val(Rat(3), 2), Order(0));
  EXPECT_TRUE(val(Rat(0), 5).is_infinite());
  EXPECT_EQ(val(Rat(2, 27), 3), Order(-3));
  EXPECT_EQ(val(Rat(-50), 5), Order(2));
}

TEST(Valuation, RejectsComposite) {
  EXPECT_THROW(val(Rat(3), 9), ValidationError);
  EXPECT_THROW(Valuation(1), ValidationError);
  try {
    Valuation v(15);
  } catch (const ValidationError& e) {
    EXPECT_STREQ(e.what(), "not a prime");
  }
}

TEST(Valuation, LogAbs) {
  EXPECT_EQ(log_abs(Rat(9), 3), Rat(-2));
  EXPECT_EQ(log_abs(Rat(1, 3), 3), Rat(1));
  EXPECT_EQ(log_abs(Rat(5), 3), Rat(0));
  EXPECT_THROW(log_abs(Rat(0), 3), ValidationError);
}

TEST(Valuation, OddRequirement) {
  EXPECT_THROW(Valuation(2).require_odd(), ValidationError);
  EXPECT_NO_THROW(Valuation(3).require_odd());
}

TEST(Order, InfinityOrdering) {
  EXPECT_LT(Order(1000000), Order::infinity());
  EXPECT_EQ((Order(3) + Order::infinity()), Order::infinity());
  EXPECT_EQ(Order::infinity().str(), "inf");
  EXPECT_THROW((void)Order::infinity().value(), ValidationError);
}

TEST(Rat, ParseAndPrint) {
  EXPECT_EQ(Rat::parse("6/4").str(), "3/2");
  EXPECT_EQ(Rat::parse("-6/3").str(), "-2");
  EXPECT_EQ(Rat::parse("+7").str(), "7");
  EXPECT_EQ(Rat::parse("0/5").str(), "0");
  for (const char* bad : {"", "1/", "/2", "1/0", "1.5", "a", "1/-2", "--1"}) {
    EXPECT_THROW(Rat::parse(bad), ValidationError) << bad;
  }
  EXPECT_EQ(ProjRat::parse("inf").str(), "inf");
  EXPECT_TRUE(ProjRat::parse("inf").is_infinite());
  EXPECT_EQ(ProjRat::parse("-4/6").value(), Rat(-2, 3));
}

TEST(Rat, PowAndDivision) {
  EXPECT_EQ(pow(Rat(-2, 3), 3), Rat(-8, 27));
  EXPECT_EQ(pow(Rat(2, 3), -2), Rat(9, 4));
  EXPECT_EQ(pow(Rat(5), 0), Rat(1));
  EXPECT_THROW(Rat(1) / Rat(0), ValidationError);
}

// Property: printing then parsing is the identity, and the printed form is reduced.
TEST(RatProperty, PrintParseRoundTrip) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  for (int it = 0; it < 2000; ++it) {
    const Rat x(num(rng), den(rng));
    const Rat y = Rat::parse(x.str());
    ASSERT_EQ(x, y);
    ASSERT_EQ(y.str(), x.str());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
    ASSERT_TRUE(x.is_zero() ? x.den() == 1 : g == 1);
    ASSERT_GT(x.den(), 0);
  }
}

// Property: nu(xy) = nu(x) + nu(y) and nu(x+y) >= min(nu(x), nu(y)).
TEST(ValuationProperty, UltrametricAndMultiplicative) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-5000, 5000);
  std::uniform_int_distribution<long> den(1, 5000);
  for (long p : {3L, 5L, 7L, 11L}) {
    const Valuation v(p);
    for (int it = 0; it < 1000; ++it) {
      const Rat x(num(rng), den(rng));
      const Rat y(num(rng), den(rng));
      ASSERT_GE(v.order(x + y), std::min(v.order(x), v.order(y))) << x << " " << y << " p=" << p;
      ASSERT_EQ(v.order(x * y), v.order(x) + v.order(y));
    }
  }
}
