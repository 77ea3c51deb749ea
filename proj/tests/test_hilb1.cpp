#include <gtest/gtest.h>

#include <bit>
#include <numeric>
#include <random>

#include "qfermat/census.hpp"
#include "qfermat/hilb1.hpp"
#include "qfermat/koszul.hpp"
#include "support/oracles.hpp"

namespace qfermat {
namespace {

using testing::random_params;

Face mask(std::initializer_list<int> members) {
  Face f = 0;
  for (int m : members) f |= Face{1} << m;
  return f;
}

std::vector<Cyclotomic> random_point(std::mt19937_64& rng, int n, Face support, const FieldRef& field) {
  std::vector<Cyclotomic> xi(static_cast<std::size_t>(n), Cyclotomic::zero(field));
  for (int j : face_members(support)) xi[j] = testing::random_cyclotomic(rng, field, false);
  return xi;
}

TEST(TriangleExponent, Examples) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 4;
    const auto tw = from_twist(testing::random_twist(rng, n));
    EXPECT_EQ(triangle_exponent(tw, 0, 1, 2), 0);
    const auto p = random_params(rng, n);
    const int t = triangle_exponent(p, 0, 1, 2);
    EXPECT_EQ(triangle_exponent(p, 1, 2, 0), t);
    EXPECT_EQ(triangle_exponent(p, 2, 0, 1), t);
    EXPECT_EQ(triangle_exponent(p, 0, 2, 1), mod_n(-t, n));
  }
  const auto p = validate_params(5, {{0, 1, 0, 0, 0}, {-1, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}});
  EXPECT_EQ(triangle_exponent(p, 0, 1, 2), 1);
}

TEST(IsGeneric, Examples) {
  std::mt19937_64 rng(42);
  for (int n = 3; n <= 6; ++n) {
    EXPECT_FALSE(is_generic(QuantumParams(n)));
    EXPECT_FALSE(is_generic(from_twist(testing::random_twist(rng, n))));
  }
  EXPECT_TRUE(is_generic(from_upper_triangle(3, std::vector<int>{1, 0, 0})));
  EXPECT_THROW(is_generic(QuantumParams(2)), InputError);
  const auto w = find_witness(5, {.cy = true, .generic = true});
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(is_generic(*w));
}

TEST(FaceComplex, Examples) {
  std::mt19937_64 rng(43);
  for (int n = 3; n <= 6; ++n) {
    const auto fc = face_complex(from_twist(testing::random_twist(rng, n)));
    EXPECT_TRUE(fc.is_full);
    ASSERT_EQ(fc.maximal_faces.size(), 1U);
    EXPECT_EQ(fc.maximal_faces[0], (Face{1} << n) - 1);
  }
  const auto w = find_witness(5, {.cy = true, .generic = true});
  const auto gen = face_complex(*w);
  EXPECT_TRUE(gen.is_one_skeleton());
  EXPECT_EQ(gen.maximal_faces.size(), 10U);

  // {1,2,3} flat, every triangle through 4 nonzero.
  const auto p = validate_params(4, {{0, 0, 0, 1}, {0, 0, 0, 2}, {0, 0, 0, 0}, {-1, -2, 0, 0}});
  const auto fc = face_complex(p);
  EXPECT_FALSE(fc.is_full);
  EXPECT_FALSE(fc.is_one_skeleton());
  EXPECT_EQ(fc.maximal_faces, (std::vector<Face>{mask({0, 1, 2}), mask({0, 3}), mask({1, 3}), mask({2, 3})}));
}

TEST(FaceComplexProperty, MatchesBruteForceAndInvariants) {
  std::mt19937_64 rng(44);
  for (int n = 3; n <= 7; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      // bias toward flat triangles so larger faces show up
      const auto base = from_twist(testing::random_twist(rng, n));
      auto p = random_params(rng, n);
      if (trial % 2 == 0) {
        std::vector<int> upper = upper_triangle(base);
        std::uniform_int_distribution<std::size_t> pick(0, upper.size() - 1);
        upper[pick(rng)] = static_cast<int>(rng() % static_cast<unsigned>(n));
        p = from_upper_triangle(n, upper);
      }
      const auto fc = face_complex(p);
      auto expected = testing::brute_force_maximal_faces(p);
      auto got = fc.maximal_faces;
      std::sort(expected.begin(), expected.end());
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, expected);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          EXPECT_TRUE(std::any_of(got.begin(), got.end(), [&](Face f) { return (f & mask({i, j})) == mask({i, j}); }));
      for (Face a : got)
        for (Face b : got)
          if (a != b) EXPECT_NE(a & b, a);
      EXPECT_EQ(is_generic(p), fc.is_one_skeleton());
      EXPECT_EQ(fc.is_full, is_twist_realizable(p).has_value());
    }
  }
}

TEST(FaceComplexProperty, FullIffRealizableExhaustive) {
  for (int n = 3; n <= 4; ++n) {
    enumerate(n, [](const QuantumParams& p) {
      EXPECT_EQ(face_complex(p).is_full, is_twist_realizable(p).has_value());
      return true;
    });
  }
}

TEST(ShiftAutomorphism, Examples) {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = from_twist(testing::random_twist(rng, 3));
    const auto d = shift_automorphism(p, mask({0, 1, 2}), 0);
    EXPECT_EQ(d, (std::vector<int>{0, p.e(0, 1), mod_n(p.e(0, 1) + p.e(1, 2), 3)}));
  }
  for (int n = 3; n <= 5; ++n) {
    const auto d = shift_automorphism(QuantumParams(n), (Face{1} << n) - 1, 1);
    for (int v : d) EXPECT_EQ(v, 0);
  }
  const auto p = random_params(rng, 5);
  EXPECT_EQ(shift_automorphism(p, mask({1, 3}), 1), (std::vector<int>{0, p.e(1, 3)}));
  const auto bad = from_upper_triangle(3, std::vector<int>{1, 0, 0});
  EXPECT_THROW(shift_automorphism(bad, mask({0, 1, 2}), 0), InputError);
  EXPECT_THROW(shift_automorphism(bad, mask({0, 1}), 2), InputError);
}

TEST(ShiftAutomorphismProperty, BaseChangeShiftsByConstant) {
  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 4;
    const auto p = from_twist(testing::random_twist(rng, n));
    const Face all = (Face{1} << n) - 1;
    const int i0 = static_cast<int>(rng() % static_cast<unsigned>(n));
    const int i1 = static_cast<int>(rng() % static_cast<unsigned>(n));
    const auto d0 = shift_automorphism(p, all, i0);
    const auto d1 = shift_automorphism(p, all, i1);
    for (int j = 0; j < n; ++j) EXPECT_EQ(mod_n(d0[j] - d1[j], n), p.e(i0, i1));
  }
}

TEST(VerifyPointSequence, Examples) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 4;
    const auto p = random_params(rng, n);
    const auto field = CycloField::get(2 * n);
    for (Face f : face_complex(p).maximal_faces) {
      const auto xi = random_point(rng, n, f, field);
      EXPECT_TRUE(verify_point_sequence(p, xi, 2 * n));
    }
    const auto xi = random_point(rng, n, (Face{1} << n) - 1, CycloField::get(n));
    EXPECT_TRUE(verify_point_sequence(QuantumParams(n), xi, 5));
  }
  const auto bad = from_upper_triangle(3, std::vector<int>{1, 0, 0});
  const auto xi = random_point(rng, 3, mask({0, 1, 2}), CycloField::get(3));
  EXPECT_FALSE(verify_point_sequence(bad, xi, 1));
}

TEST(Hilb1, OverB) {
  std::mt19937_64 rng(48);
  const auto p = random_params(rng, 5);
  const auto r = hilb1(p, Algebra::B);
  EXPECT_FALSE(r.discrete);
  EXPECT_FALSE(r.total_points.has_value());
  EXPECT_EQ(r.triangles.size(), 10U);
  ASSERT_EQ(r.components.size(), r.complex.maximal_faces.size());
  for (const auto& c : r.components) {
    EXPECT_EQ(c.kind, ComponentKind::ProjectiveSpace);
    EXPECT_EQ(c.dimension, std::popcount(c.face) - 1);
  }
}

void check_generic_points(const QuantumParams& p, long long expected_total) {
  const int n = p.n();
  const auto r = hilb1(p, Algebra::A);
  ASSERT_TRUE(r.discrete);
  ASSERT_TRUE(r.total_points.has_value());
  EXPECT_EQ(*r.total_points, expected_total);
  const auto field = CycloField::get(2 * n);
  for (const auto& c : r.components) {
    EXPECT_EQ(c.kind, ComponentKind::FinitePoints);
    ASSERT_EQ(c.points.size(), static_cast<std::size_t>(n));
    const auto members = face_members(c.face);
    const int i = members[0], j = members[1];
    const auto step = root_of_unity(field, 2LL * p.e(i, j));
    for (std::size_t a = 0; a < c.points.size(); ++a) {
      const auto t = divide(c.points[a][j], c.points[a][i]);
      EXPECT_EQ(t.pow(n), -Cyclotomic::one(field));
      EXPECT_EQ((t * step).pow(n), -Cyclotomic::one(field));
      for (std::size_t b = 0; b < a; ++b) EXPECT_FALSE(c.points[a] == c.points[b]);
      EXPECT_TRUE(verify_point_sequence(p, c.points[a], 2 * n));
    }
    const int expected_len = n / std::gcd(p.e(i, j), n);
    EXPECT_EQ(c.orbit_length, expected_len);
    for (const auto& orbit : c.orbits) EXPECT_EQ(orbit.size(), static_cast<std::size_t>(expected_len));
  }
}

TEST(Hilb1, GenericCyPointCounts) {
  const auto w4 = find_witness(4, {.cy = true, .generic = true});
  ASSERT_TRUE(w4.has_value());
  check_generic_points(*w4, 24);
  EXPECT_EQ(euler_number_n4(hilb1(*w4, Algebra::A)), 24);
  const auto w5 = find_witness(5, {.cy = true, .generic = true});
  ASSERT_TRUE(w5.has_value());
  check_generic_points(*w5, 50);
  EXPECT_FALSE(is_twist_realizable(*w5).has_value());
}

TEST(Hilb1Property, TotalIsNTimesPairs) {
  std::mt19937_64 rng(49);
  int seen = 0;
  for (int trial = 0; trial < 4000 && seen < 20; ++trial) {
    const int n = 4 + trial % 3;
    const auto p = random_params(rng, n);
    if (!is_generic(p)) continue;
    ++seen;
    check_generic_points(p, static_cast<long long>(n) * n * (n - 1) / 2);
  }
  EXPECT_GE(seen, 10);
}

TEST(Hilb1, QuarticSurface) {
  std::mt19937_64 rng(50);
  const auto p = from_twist(testing::random_twist(rng, 4));
  const auto r = hilb1(p, Algebra::A);
  EXPECT_FALSE(r.discrete);
  ASSERT_EQ(r.components.size(), 1U);
  EXPECT_EQ(r.components[0].kind, ComponentKind::HypersurfaceInFace);
  EXPECT_EQ(r.components[0].dimension, 2);
  EXPECT_EQ(euler_number_n4(r), 24);
  EXPECT_THROW(euler_number_n4(hilb1(QuantumParams(5), Algebra::A)), InputError);
  EXPECT_THROW(euler_number_n4(hilb1(QuantumParams(4), Algebra::B)), InputError);
  const auto mid = validate_params(4, {{0, 0, 0, 1}, {0, 0, 0, 2}, {0, 0, 0, 0}, {-1, -2, 0, 0}});
  EXPECT_THROW(euler_number_n4(hilb1(mid, Algebra::A)), InputError);
}

}  // namespace
}  // namespace qfermat
