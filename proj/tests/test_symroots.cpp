#include "hyperinv/errors.hpp"
#include "hyperinv/symroots.hpp"
#include "hyperinv/verify.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

using namespace hyperinv;

namespace {

const RootConfig kSequential(2, {0, 1, 2, 3, 4, 5});
// p = 3: three residue classes, each split once at level 2.
const RootConfig kClustered(2, {0, 9, 1, 10, 2, 11});

// Oracle from the definition: tau(x) = c (x - a_i)/(x - a_j) sends a_i to 0 and
// a_j to infinity, and c^{2g} is fixed by prod_{k != i,j} tau(a_k) = 1.
Rat symroot_pow_by_normalization(const RootConfig& cfg, const Triple& t) {
  const int g = cfg.genus();
  auto base = [&](std::size_t k) { return (cfg.at(k) - cfg.at(t.i)) / (cfg.at(k) - cfg.at(t.j)); };
  Rat prod(1);
  for (std::size_t k = 0; k < cfg.size(); ++k) {
    if (k != t.i && k != t.j) prod *= base(k);
  }
  // The normalization forces c^{2g} = 1/prod, and l = tau(a_k).
  return pow(base(t.k), 2L * g) / prod;
}

// Oracle: nu(l) = nu(a_i-a_k) - nu(a_j-a_k) + (1/2g) sum_{r != i,j} (nu(a_j-a_r) - nu(a_i-a_r)).
Rat symroot_val_by_sum(const RootConfig& cfg, const Valuation& v, const Triple& t) {
  auto nu = [&](std::size_t a, std::size_t b) { return v.finite_order(cfg.at(a) - cfg.at(b)); };
  long sum = 0;
  for (std::size_t r = 0; r < cfg.size(); ++r) {
    if (r != t.i && r != t.j) sum += nu(t.j, r) - nu(t.i, r);
  }
  return Rat(nu(t.i, t.k) - nu(t.j, t.k)) + Rat(sum, 2L * cfg.genus());
}

// Oracle: product over ordered pairs of distinct roots of x * prod (x - l_ijk), with the
// 2g-th root taken numerically and an arbitrary root of unity zeta applied.
std::complex<double> float_discriminant(const RootConfig& cfg, std::size_t i, std::size_t j, int zeta_power) {
  const int g = cfg.genus();
  const double two_g = 2.0 * g;
  double t_pow = 1.0;
  for (std::size_t r = 0; r < cfg.size(); ++r) {
    if (r != i && r != j) t_pow *= ((cfg.at(j) - cfg.at(r)) / (cfg.at(i) - cfg.at(r))).to_double();
  }
  const std::complex<double> t =
      std::pow(std::complex<double>(t_pow, 0.0), 1.0 / two_g) * std::polar(1.0, 2.0 * std::numbers::pi * zeta_power / two_g);
  std::vector<std::complex<double>> roots{0.0};
  for (std::size_t k = 0; k < cfg.size(); ++k) {
    if (k == i || k == j) continue;
    roots.push_back(((cfg.at(i) - cfg.at(k)) / (cfg.at(j) - cfg.at(k))).to_double() * t);
  }
  std::complex<double> prod = 1.0;
  for (std::size_t a = 0; a < roots.size(); ++a) {
    for (std::size_t b = 0; b < roots.size(); ++b) {
      if (a != b) prod *= roots[a] - roots[b];
    }
  }
  return prod;
}

}  // namespace

TEST(RootConfig, Invariants) {
  EXPECT_THROW(RootConfig(1, {0, 1, 2, 3}), ValidationError);
  EXPECT_THROW(RootConfig(2, {0, 1, 2, 3, 4}), ValidationError);
  EXPECT_THROW(RootConfig(2, {0, 1, 2, 3, 4, 4}), ValidationError);
  EXPECT_THROW(RootConfig(2, {ProjRat::infinity(), ProjRat::infinity(), 1, 2, 3, 4}), ValidationError);
  EXPECT_NO_THROW(RootConfig(2, {ProjRat::infinity(), 0, 1, 2, 3, 4}));
}

TEST(NormalizeFinite, MovesInfinity) {
  const RootConfig cfg(2, {ProjRat::infinity(), 0, 1, 2, 3, 4});
  const RootConfig out = normalize_finite(cfg);
  EXPECT_TRUE(out.all_finite());
  EXPECT_EQ(out.note(), "x -> 1/(x - 5)");
  EXPECT_EQ(out.at(0), Rat(0));
  EXPECT_EQ(out.at(1), Rat(-1, 5));
}

TEST(NormalizeFinite, IdentityOnFiniteConfig) {
  EXPECT_EQ(normalize_finite(kSequential), kSequential);
  EXPECT_TRUE(normalize_finite(kSequential).note().empty());
}

TEST(SymrootPow, WorkedExample) { EXPECT_EQ(symroot_pow(kSequential, {0, 1, 2}), Rat(16, 5)); }

TEST(SymrootPow, RequiresFiniteRoots) {
  const RootConfig cfg(2, {ProjRat::infinity(), 0, 1, 2, 3, 4});
  EXPECT_THROW(symroot_pow(cfg, {0, 1, 2}), ValidationError);
  EXPECT_THROW(symroot_pow(kSequential, {0, 0, 2}), ValidationError);
  EXPECT_THROW(symroot_pow(kSequential, {0, 1, 6}), ValidationError);
}

TEST(SymrootPow, TranslationInvariant) {
  std::vector<ProjRat> shifted;
  for (const auto& r : kSequential.roots()) shifted.emplace_back(r.value() + Rat(7));
  const RootConfig moved(2, shifted);
  for (const Triple& t : all_triples(6)) EXPECT_EQ(symroot_pow(moved, t), symroot_pow(kSequential, t));
}

TEST(SymrootPow, MatchesNormalizationDefinition) {
  Rng rng(21);
  for (int g : {2, 3, 4}) {
    for (int c = 0; c < 30; ++c) {
      const RootConfig cfg = random_config(rng, g, false);
      for (const Triple& t : {Triple{0, 1, 2}, Triple{3, 0, 5}, Triple{5, 4, 1}}) {
        ASSERT_EQ(symroot_pow(cfg, t), symroot_pow_by_normalization(cfg, t));
      }
    }
  }
}

TEST(SymrootPow, AntisymmetryAndCocycle) {
  Rng rng(4);
  for (int g : {2, 3, 4}) {
    for (int c = 0; c < 20; ++c) {
      const RootConfig cfg = normalize_finite(random_config(rng, g));
      for (const Triple& t : all_triples(cfg.size())) {
        ASSERT_EQ(symroot_pow(cfg, t) * symroot_pow(cfg, {t.j, t.i, t.k}), Rat(1));
        ASSERT_EQ(symroot_pow(cfg, t) * symroot_pow(cfg, {t.j, t.k, t.i}) * symroot_pow(cfg, {t.k, t.i, t.j}), Rat(-1));
      }
    }
  }
}

// Property: fractional-linear changes of coordinate leave l^{2g} unchanged.
TEST(SymrootPow, MobiusInvariance) {
  Rng rng(99);
  for (int g : {2, 3, 4}) {
    for (int c = 0; c < 100; ++c) {
      const RootConfig cfg = random_config(rng, g);
      const RootConfig base = normalize_finite(cfg);
      const Triple t{0, 1, 2};
      const Rat expected = symroot_pow(base, t);
      for (int m = 0; m < 5; ++m) {
        const RootConfig moved = normalize_finite(transform(cfg, random_mobius(rng)));
        ASSERT_EQ(symroot_pow(moved, t), expected);
      }
    }
  }
}

TEST(SymrootVal, WorkedExamples) {
  const Valuation v(3);
  EXPECT_EQ(symroot_val(kClustered, v, {0, 2, 1}), Rat(2));
  EXPECT_EQ(symroot_val(kClustered, v, {0, 1, 2}), Rat(0));
  // All pairwise differences of 0..5 are units at 7.
  const RootConfig unramified(2, {0, 1, 2, 3, 4, 5});
  for (const Triple& t : all_triples(6)) EXPECT_EQ(symroot_val(unramified, Valuation(7), t), Rat(0));
}

TEST(SymrootVal, MatchesValuationSum) {
  Rng rng(8);
  for (long p : {3L, 5L, 7L}) {
    const Valuation v(p);
    for (int c = 0; c < 40; ++c) {
      const RootConfig cfg = random_config(rng, 2 + c % 3, false);
      for (const Triple& t : all_triples(cfg.size())) {
        ASSERT_EQ(symroot_val(cfg, v, t), symroot_val_by_sum(cfg, v, t));
      }
    }
  }
}

TEST(SymrootVal, RejectsCharacteristicTwo) {
  try {
    symroot_val(kSequential, Valuation(2), {0, 1, 2});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_STREQ(e.what(), "characteristic 2 excluded");
  }
  EXPECT_THROW(pairing_diff_thmC(kSequential, Valuation(2), {0, 1, 2}), ValidationError);
  EXPECT_THROW(pairing_crossratio(kSequential, Valuation(2), 0, 1, 2, 3), ValidationError);
}

TEST(CrossRatio, WorkedExampleAndErrors) {
  EXPECT_EQ(cross_ratio(kSequential, 0, 1, 2, 3), Rat(4, 3));
  EXPECT_THROW(cross_ratio(kSequential, 0, 1, 2, 2), ValidationError);
  EXPECT_THROW(cross_ratio(kSequential, 0, 1, 2, 9), ValidationError);
}

TEST(CrossRatio, QuotientOfSymmetricRoots) {
  Rng rng(31);
  for (int c = 0; c < 100; ++c) {
    const RootConfig cfg = normalize_finite(random_config(rng, 2 + c % 3));
    const long two_g = 2L * cfg.genus();
    ASSERT_EQ(symroot_pow(cfg, {0, 1, 2}) / symroot_pow(cfg, {0, 1, 3}), pow(cross_ratio(cfg, 0, 1, 2, 3), two_g));
  }
}

TEST(SymDiscriminant, ProductOverPartnersIsOne) {
  Rng rng(12);
  for (int g : {2, 3, 4}) {
    for (int c = 0; c < 10; ++c) {
      const RootConfig cfg = normalize_finite(random_config(rng, g));
      for (std::size_t i = 0; i < cfg.size(); ++i) {
        Rat prod(1);
        for (std::size_t k = 0; k < cfg.size(); ++k) {
          if (k != i) prod *= sym_discriminant(cfg, i, k);
        }
        ASSERT_EQ(prod, Rat(1));
      }
    }
  }
}

TEST(SymDiscriminant, RatioGivesSymmetricRootPower) {
  Rng rng(13);
  for (int g : {2, 3, 4}) {
    for (int c = 0; c < 10; ++c) {
      const RootConfig cfg = normalize_finite(random_config(rng, g));
      for (const Triple& t : all_triples(cfg.size())) {
        ASSERT_EQ(sym_discriminant(cfg, t.i, t.k) / sym_discriminant(cfg, t.j, t.k),
                  -pow(symroot_pow(cfg, t), 2L * g + 1));
      }
    }
  }
}

TEST(SymDiscriminant, AgreesWithFloatingDiscriminant) {
  Rng rng(14);
  for (int g : {2, 3, 4}) {
    for (int c = 0; c < 10; ++c) {
      const RootConfig cfg = random_config(rng, g, false);
      for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t j = i + 1;
        const double exact = sym_discriminant(cfg, i, j).to_double();
        for (int zeta = 0; zeta < 2 * g; ++zeta) {
          const std::complex<double> approx = float_discriminant(cfg, i, j, zeta);
          ASSERT_NEAR(approx.real(), exact, 1e-9 * std::abs(exact));
          ASSERT_NEAR(approx.imag(), 0.0, 1e-9 * std::abs(exact));
        }
      }
    }
  }
}

TEST(SymDiscriminant, Errors) {
  EXPECT_THROW(sym_discriminant(kSequential, 1, 1), ValidationError);
  EXPECT_THROW(sym_discriminant(normalize_finite(kSequential), 0, 7), ValidationError);
}

TEST(PairingDiff, WorkedExample) {
  const Valuation v(3);
  EXPECT_EQ(pairing_diff_thmC(kClustered, v, {0, 2, 1}), Rat(1));
  EXPECT_EQ(pairing_diff_thmC(kClustered, v, {2, 0, 1}), Rat(-1));
  EXPECT_EQ(pairing_diff_thmC(kSequential, Valuation(7), {0, 1, 2}), Rat(0));
}

TEST(PairingCrossRatio, WorkedExampleAgainstDirectValuation) {
  const Valuation v(3);
  // Roots 0, 1, 9, 10 sit at indices 0, 2, 1, 3.
  const Rat mu = (Rat(0) - Rat(9)) / (Rat(1) - Rat(9)) * ((Rat(1) - Rat(10)) / (Rat(0) - Rat(10)));
  const Rat direct(v.finite_order(mu), 2);
  EXPECT_EQ(direct, Rat(2));
  EXPECT_EQ(pairing_crossratio(kClustered, v, 0, 2, 1, 3), direct);
  EXPECT_EQ(pairing_crossratio(kSequential, Valuation(7), 0, 1, 2, 3), Rat(0));
}

TEST(PairingCrossRatio, DifferenceOfPairings) {
  Rng rng(77);
  for (long p : {3L, 5L}) {
    const Valuation v(p);
    for (int c = 0; c < 30; ++c) {
      const RootConfig cfg = normalize_finite(random_config(rng, 2 + c % 3));
      for (std::size_t r = 3; r < cfg.size(); ++r) {
        ASSERT_EQ(pairing_crossratio(cfg, v, 0, 1, 2, r),
                  pairing_diff_thmC(cfg, v, {0, 1, 2}) - pairing_diff_thmC(cfg, v, {0, 1, r}));
      }
    }
  }
}
