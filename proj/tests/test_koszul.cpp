#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "qfermat/hilb1.hpp"
#include "qfermat/koszul.hpp"
#include "support/oracles.hpp"

namespace qfermat {
namespace {

using testing::random_params;

QuantumParams single_entry(int n, int i, int j, int e) {
  std::vector<std::vector<long long>> raw(n, std::vector<long long>(n, 0));
  raw[i][j] = e;
  raw[j][i] = -e;
  return validate_params(n, raw);
}

bool all_triangles_vanish(const QuantumParams& p) {
  const int n = p.n();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (triangle_exponent(p, a, b, c) != 0) return false;
  return true;
}

TEST(CyCriterion, Examples) {
  const auto zero = cy_criterion(QuantumParams(5));
  EXPECT_TRUE(zero.is_cy);
  EXPECT_EQ(zero.common_value, 0);
  EXPECT_TRUE(zero.twist_is_scalar);

  const auto one = cy_criterion(single_entry(5, 0, 1, 1));
  EXPECT_FALSE(one.is_cy);
  EXPECT_EQ(one.column_sums, (std::vector<int>{4, 1, 0, 0, 0}));
  EXPECT_FALSE(one.common_value.has_value());
  EXPECT_FALSE(one.twist_is_scalar);

  const std::vector<long long> d{1, 2, 3, 4, 0};
  const auto tw = cy_criterion(from_twist(d));
  EXPECT_TRUE(tw.is_cy);
  EXPECT_EQ(tw.common_value, mod_n(std::accumulate(d.begin(), d.end(), 0LL), 5));
}

TEST(CyCriterion, SerreTwistScalars) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_params(rng, 3 + trial % 4);
    const auto r = cy_criterion(p);
    const auto field = CycloField::get(p.n());
    for (int j = 0; j < p.n(); ++j) EXPECT_EQ(r.serre_twist.scalars[j], root_of_unity(field, -r.column_sums[j]));
    const bool equal = std::adjacent_find(r.column_sums.begin(), r.column_sums.end(), std::not_equal_to<>()) ==
                       r.column_sums.end();
    EXPECT_EQ(r.is_cy, equal);
    EXPECT_EQ(r.is_cy, r.twist_is_scalar);
    EXPECT_EQ(r.is_cy, r.serre_twist.is_scalar());
  }
}

TEST(CyCriterionProperty, TwistsAreAlwaysCy) {
  for (int n = 2; n <= 4; ++n) {
    std::vector<long long> d(static_cast<std::size_t>(n), 0);
    // exhaustive over d in (Z/n)^n
    for (;;) {
      const auto r = cy_criterion(from_twist(d));
      EXPECT_TRUE(r.is_cy);
      EXPECT_EQ(r.common_value, mod_n(std::accumulate(d.begin(), d.end(), 0LL), n));
      std::size_t k = 0;
      while (k < d.size() && ++d[k] == n) d[k++] = 0;
      if (k == d.size()) break;
    }
  }
  std::mt19937_64 rng(22);
  for (int n = 5; n <= 8; ++n)
    for (int trial = 0; trial < 50; ++trial) EXPECT_TRUE(cy_criterion(from_twist(testing::random_twist(rng, n))).is_cy);
}

TEST(ExteriorAlgebra, Relations) {
  std::mt19937_64 rng(23);
  const auto p = random_params(rng, 4);
  const auto field = exterior_field(p);
  EXPECT_EQ(field->conductor(), 8);
  for (int a = 0; a < 4; ++a) {
    const auto ya = ExtElement::basis(p, 1U << a);
    EXPECT_TRUE(ext_multiply(ya, ya).is_zero());
    for (int b = 0; b < a; ++b) {
      const auto yb = ExtElement::basis(p, 1U << b);
      const auto ab = ext_multiply(ya, yb);
      ASSERT_EQ(ab.terms.size(), 1U);
      EXPECT_EQ(ab.terms.begin()->first, (1U << a) | (1U << b));
      // y_a y_b = -q_ba y_b y_a
      EXPECT_EQ(ab.terms.begin()->second, -root_of_unity(field, 2 * p.e(b, a)));
    }
  }
}

TEST(ExteriorAlgebra, Associative) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 4;
    const auto p = random_params(rng, n);
    std::uniform_int_distribution<std::uint32_t> sub(0, (1U << n) - 1);
    const auto a = ExtElement::basis(p, sub(rng));
    const auto b = ExtElement::basis(p, sub(rng));
    const auto c = ExtElement::basis(p, sub(rng));
    EXPECT_EQ(ext_multiply(ext_multiply(a, b), c), ext_multiply(a, ext_multiply(b, c)));
  }
}

TEST(Frobenius, CommutativeAnchors) {
  const auto two = frobenius_bruteforce(QuantumParams(2));
  const auto f2 = exterior_field(QuantumParams(2));
  for (const auto& c : two.scalars) EXPECT_EQ(c, -Cyclotomic::one(f2));
  const auto closed2 = frobenius_closedform(QuantumParams(2));
  for (const auto& c : closed2.scalars) EXPECT_TRUE(c.is_one());
  const auto cmp2 = compare_frobenius(QuantumParams(2));
  EXPECT_TRUE(cmp2.agree_mod_scalar);
  ASSERT_TRUE(cmp2.ratio.has_value());
  EXPECT_EQ(*cmp2.ratio, -Cyclotomic::one(f2));

  for (int n = 2; n <= 7; ++n) {
    const auto brute = frobenius_bruteforce(QuantumParams(n));
    const auto sign = (n % 2 == 1) ? Cyclotomic::one(exterior_field(QuantumParams(n)))
                                   : -Cyclotomic::one(exterior_field(QuantumParams(n)));
    for (const auto& c : brute.scalars) EXPECT_EQ(c, sign) << n;
  }
  for (const auto& c : frobenius_closedform(QuantumParams(5)).scalars) EXPECT_EQ(c, -Cyclotomic::one(c.field()));
  EXPECT_TRUE(compare_frobenius(QuantumParams(5)).agree_mod_scalar);
}

TEST(Frobenius, ClosedFormOnTwists) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 4;
    const auto d = testing::random_twist(rng, n);
    const auto c = frobenius_closedform(from_twist(d));
    const auto field = CycloField::get(2 * n);
    const long long total = std::accumulate(d.begin(), d.end(), 0LL);
    for (int j = 0; j < n; ++j) {
      Cyclotomic expected = root_of_unity(field, 2 * (n * d[j] - total));
      if (n % 2 == 1) expected = -expected;
      EXPECT_EQ(c.scalars[j], expected);
    }
  }
}

TEST(FrobeniusProperty, AgreeModuloGlobalScalar) {
  std::mt19937_64 rng(26);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto p = random_params(rng, n);
      const auto cmp = compare_frobenius(p);
      EXPECT_TRUE(cmp.agree_mod_scalar);
      for (const auto& c : cmp.bruteforce.scalars) EXPECT_EQ((2 * n) % root_of_unity_order(c), 0);
      // brute force equals (-1)^(n-1) times the inverse Serre twist scalars
      const auto serre = cy_criterion(p).serre_twist;
      for (int j = 0; j < n; ++j) {
        Cyclotomic expected = embed(serre.scalars[j], exterior_field(p));
        if (n % 2 == 0) expected = -expected;
        EXPECT_EQ(cmp.bruteforce.scalars[j], expected);
      }
    }
  }
}

TEST(Frobenius, CapacityBound) { EXPECT_THROW(frobenius_bruteforce(QuantumParams(17)), CapacityError); }

TEST(TwistRealizable, Examples) {
  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 4;
    const auto d = testing::random_twist(rng, n);
    const auto p = from_twist(d);
    const auto got = is_twist_realizable(p);
    ASSERT_TRUE(got.has_value());
    EXPECT_EQ((*got)[0], 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) EXPECT_EQ(mod_n((*got)[i] - (*got)[j], n), mod_n(d[i] - d[j], n));
  }
  EXPECT_FALSE(is_twist_realizable(single_entry(5, 0, 1, 1)).has_value());
  const auto generic = from_upper_triangle(3, std::vector<int>{1, 0, 0});
  ASSERT_TRUE(is_generic(generic));
  EXPECT_FALSE(is_twist_realizable(generic).has_value());
}

TEST(TwistRealizableProperty, IffTrianglesVanishExhaustive) {
  for (int n = 3; n <= 4; ++n) {
    std::uint64_t realizable = 0;
    const int cells = n * (n - 1) / 2;
    std::vector<int> upper(static_cast<std::size_t>(cells), 0);
    for (;;) {
      const auto p = from_upper_triangle(n, upper);
      const bool r = is_twist_realizable(p).has_value();
      EXPECT_EQ(r, all_triangles_vanish(p));
      realizable += r;
      std::size_t k = 0;
      while (k < upper.size() && ++upper[k] == n) upper[k++] = 0;
      if (k == upper.size()) break;
    }
    // twists modulo a common shift
    std::uint64_t expected = 1;
    for (int i = 1; i < n; ++i) expected *= n;
    EXPECT_EQ(realizable, expected);
  }
}

TEST(Deformation, Examples) {
  std::mt19937_64 rng(28);
  int seen_zero = 0, seen_one = 0;
  for (int trial = 0; trial < 4000 && (seen_zero < 5 || seen_one < 5); ++trial) {
    const auto p = random_params(rng, 5);
    const auto r = cy_criterion(p);
    EXPECT_TRUE(deformation_central(p, false));
    if (!r.is_cy) continue;
    if (*r.common_value == 0) {
      EXPECT_TRUE(deformation_central(p, true));
      ++seen_zero;
    } else if (*r.common_value == 1) {
      EXPECT_FALSE(deformation_central(p, true));
      ++seen_one;
    }
  }
  EXPECT_TRUE(deformation_central(QuantumParams(5), true));
  const auto ones = from_twist(std::vector<long long>{1, 0, 0, 0, 0});
  ASSERT_EQ(cy_criterion(ones).common_value, 1);
  EXPECT_FALSE(deformation_central(ones, true));
}

TEST(Dehomogenize, Examples) {
  const auto comm = dehomogenize(QuantumParams(4), 3);
  EXPECT_EQ(comm.size(), 3);
  for (int v : comm.exps) EXPECT_EQ(v, 0);
  EXPECT_EQ(comm.labels, (std::vector<int>{0, 1, 2}));

  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = random_params(rng, 3);
    const auto patch = dehomogenize(p, 2);
    EXPECT_EQ(patch.e(0, 1), mod_n(p.e(0, 1) + p.e(2, 0) + p.e(1, 2), 3));
  }
  EXPECT_THROW(dehomogenize(QuantumParams(3), 3), InputError);
}

TEST(DehomogenizeProperty, MatchesLocalizedOracle) {
  std::mt19937_64 rng(30);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto p = random_params(rng, n);
      for (int m = 0; m < n; ++m) {
        const auto patch = dehomogenize(p, m);
        EXPECT_TRUE(patch.antisymmetric());
        for (int a = 0; a < patch.size(); ++a)
          for (int b = 0; b < patch.size(); ++b)
            if (a != b)
              EXPECT_EQ(patch.e(a, b),
                        testing::localized_commutation_exponent(p, m, patch.labels[a], patch.labels[b]));
      }
    }
  }
}

TEST(DehomogenizeProperty, CommutesWithRelabeling) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 4;
    const auto p = random_params(rng, n);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const int m = static_cast<int>(rng() % static_cast<unsigned>(n));
    const auto base = dehomogenize(p, m);
    const auto moved = dehomogenize(permute(p, perm), perm[m]);
    auto slot = [](const PatchParams& patch, int label) {
      return static_cast<int>(std::find(patch.labels.begin(), patch.labels.end(), label) - patch.labels.begin());
    };
    for (int a = 0; a < base.size(); ++a)
      for (int b = 0; b < base.size(); ++b) {
        const int i = base.labels[a], j = base.labels[b];
        EXPECT_EQ(base.e(a, b), moved.e(slot(moved, perm[i]), slot(moved, perm[j])));
      }
  }
}

TEST(Dehomogenize, PrintedFormulaFlag) {
  const auto p = from_upper_triangle(3, std::vector<int>{0, 1, 0});
  const auto patch = dehomogenize(p, 2);
  // e_31 = 2, e_32 = 0: literal q12/(q31 q32) gives 0 - 2 - 0 = 1 both ways, which is not antisymmetric mod 3.
  EXPECT_FALSE(patch.printed_antisymmetric);
  EXPECT_TRUE(patch.antisymmetric());
}

}  // namespace
}  // namespace qfermat
