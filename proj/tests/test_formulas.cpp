#include <gtest/gtest.h>

#include <algorithm>

#include "lefschetz/errors.hpp"
#include "lefschetz/formulas.hpp"
#include "lefschetz/ideal.hpp"
#include "lefschetz/linalg.hpp"
#include "lefschetz/region.hpp"
#include "lefschetz/region_matrices.hpp"
#include "lefschetz/tiling.hpp"

using namespace lefschetz;

namespace {

BigInt factorial(long n) {
  BigInt f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt region_det(const MonomialIdeal& ideal, int d) {
  return abs(determinant(biadjacency(build_region(ideal, d))));
}

}  // namespace

TEST(Hyperfactorial, Values) {
  EXPECT_EQ(hyperfactorial(0), 1);
  EXPECT_EQ(hyperfactorial(1), 1);
  EXPECT_EQ(hyperfactorial(4), 12);
  BigInt prod = 1;
  for (long n = 1; n <= 15; ++n) {
    prod *= factorial(n - 1);
    EXPECT_EQ(hyperfactorial(n), prod);
  }
}

TEST(MacMahon, SmallValues) {
  EXPECT_EQ(macmahon(1, 1, 1), 2);
  EXPECT_EQ(macmahon(2, 2, 2), 20);
  for (long b = 0; b <= 6; ++b)
    for (long c = 0; c <= 6; ++c) {
      EXPECT_EQ(macmahon(0, b, c), 1);
      EXPECT_EQ(macmahon(b, c, 0), 1);
    }
}

TEST(MacMahon, MatchesPlanePartitionOracle) {
  for (long a = 0; a <= 4; ++a)
    for (long b = 0; b <= 4; ++b)
      for (long c = 0; c <= 4; ++c) EXPECT_EQ(macmahon(a, b, c), plane_partition_oracle(a, b, c));
}

TEST(MacMahon, BoxWithHeightOneIsBinomial) {
  for (long n = 0; n <= 8; ++n)
    for (long k = 0; k <= 8; ++k) EXPECT_EQ(macmahon(n, k, 1), binomial(n + k, k));
}

TEST(PlanePartitionOracle, Values) {
  for (long c = 0; c <= 6; ++c) EXPECT_EQ(plane_partition_oracle(1, 1, c), c + 1);
  EXPECT_EQ(plane_partition_oracle(2, 2, 2), 20);
  EXPECT_EQ(plane_partition_oracle(2, 6, 3), macmahon(2, 6, 3));
  EXPECT_THROW(plane_partition_oracle(5, 5, 1), DomainError);
}

TEST(SplitBinom, RZeroIsMacMahon) {
  for (long p = 0; p <= 6; ++p)
    for (long q = 0; q <= p; ++q)
      for (long n = 1; n <= 5; ++n)
        for (long m = 1; m <= n; ++m) EXPECT_EQ(split_binom_det(p, q, 0, m, n), macmahon(n, p - q, q));
}

TEST(SplitBinom, MatchesDirectDeterminant) {
  for (long p = 0; p <= 6; ++p)
    for (long q = 0; q <= 6; ++q)
      for (long r = 0; r + q <= p; ++r)
        for (long n = 1; n <= 6; ++n)
          for (long m = 1; m <= n; ++m)
            EXPECT_EQ(split_binom_det(p, q, r, m, n), determinant(split_binom_matrix(p, q, r, m, n)))
                << p << " " << q << " " << r << " " << m << " " << n;
}

TEST(SplitBinom, MatrixEntries) {
  const IntMatrix m = split_binom_matrix(5, 1, 2, 2, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const long shift = j < 2 ? 1 : 3;
      EXPECT_EQ(m(i, j), binomial(5, shift + static_cast<long>(j) - static_cast<long>(i)));
    }
  EXPECT_THROW(split_binom_det(2, 2, 1, 1, 2), DomainError);
  EXPECT_THROW(split_binom_det(6, 1, 1, 3, 2), DomainError);
}

TEST(CiEnumeration, Examples) {
  EXPECT_EQ(ci_enumeration(2, 2, 2), 2);
  EXPECT_EQ(ci_enumeration(4, 2, 2), 1);
  EXPECT_THROW(ci_enumeration(2, 2, 3), DomainError);
  EXPECT_THROW(ci_enumeration(6, 1, 1), DomainError);
  for (long a = 1; a <= 6; ++a)
    for (long b = 1; b <= 6; ++b)
      for (long c = 1; c <= 6; ++c) {
        if ((a + b + c) % 2 || a > b + c || b > a + c || c > a + b) continue;
        const long d = (a + b + c) / 2;
        const MonomialIdeal ideal({{int(a), 0, 0}, {0, int(b), 0}, {0, 0, int(c)}});
        EXPECT_EQ(ci_enumeration(a, b, c), region_det(ideal, int(d)));
      }
}

TEST(CiNest, MatchesRegionDeterminantAndPermanent) {
  int checked = 0;
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 6; ++b)
      for (int c = 1; c <= 6; ++c) {
        if ((a + b + c) % 2 || a > b + c || b > a + c || c > a + b) continue;
        const int d = (a + b + c) / 2;
        for (int al = 1; al <= 2 * (d - a); ++al)
          for (int be = 1; be <= 2 * (d - a); ++be) {
            const int ga = 2 * (d - a) - al - be;
            if (ga < 1 || al > be + ga || be > al + ga || ga > al + be) continue;
            const MonomialIdeal ideal({{a + al, 0, 0}, {0, b, 0}, {0, 0, c}, {a, be, 0}, {a, 0, ga}});
            const TriangularRegion t = build_region(ideal, d);
            const BigInt v = ci_nest_enumeration(a, b, c, al, be, ga);
            EXPECT_EQ(v, abs(determinant(biadjacency(t)))) << ideal.to_string();
            EXPECT_EQ(v, permanent(biadjacency(t))) << ideal.to_string();
            ++checked;
          }
      }
  EXPECT_GT(checked, 10);
}

TEST(CiNest, DegenerateInnerHexagon) {
  // Inner sides (d-a-al, d-a-be, d-a-ga) with one zero leave the outer count.
  EXPECT_EQ(ci_nest_enumeration(2, 4, 4, 3, 2, 1), macmahon(3, 1, 1));
  EXPECT_THROW(ci_nest_enumeration(2, 4, 4, 2, 1, 1), DomainError);
}

TEST(TwoMahonian, Examples) {
  EXPECT_EQ(two_mahonian_enumeration(3, 3, 3, 1, 2, 4), 3);
  EXPECT_EQ(two_mahonian_enumeration(3, 3, 3, 2, 1, 4), 3);
  EXPECT_EQ(count_tilings(build_region(parse_ideal("x^3,y^3,z^3,x*y^2"), 4)), 3u);
  EXPECT_THROW(two_mahonian_enumeration(3, 3, 3, 1, 1, 4), DomainError);
  EXPECT_THROW(two_mahonian_enumeration(3, 3, 3, 0, 3, 4), DomainError);
}

TEST(TwoMahonian, MatchesLatticePathDeterminant) {
  int checked = 0;
  for (int d = 2; d <= 7; ++d)
    for (int a = 1; a <= d; ++a)
      for (int b = 1; b <= d; ++b)
        for (int al = 1; al < a; ++al)
          for (int be = 1; be < b; ++be) {
            const int c = 3 * d - a - b - al - be;
            if (c < 1 || std::max({a, b, c, al + be}) > d || d > std::min({a + be, al + b, a + c, b + c})) continue;
            const TriangularRegion t = build_region(MonomialIdeal({{a, 0, 0}, {0, b, 0}, {0, 0, c}, {al, be, 0}}), d);
            const BigInt v = two_mahonian_enumeration(a, b, c, al, be, d);
            EXPECT_EQ(v, abs(determinant(lattice_path_matrix(t).matrix)));
            EXPECT_EQ(v, abs(determinant(biadjacency(t))));
            if (t.n_up() <= 20) EXPECT_EQ(v, permanent(biadjacency(t)));
            ++checked;
          }
  EXPECT_GT(checked, 100);
}

TEST(TypeOneOddMinor, Examples) {
  EXPECT_EQ(type_one_odd_minor(3, 3, 3, 1), 3);
  EXPECT_EQ(type_one_odd_minor(3, 3, 3, 2), 3);
  EXPECT_EQ(type_one_odd_minor(2, 2, 3, 1), 1);
  EXPECT_EQ(type_one_odd_minor_simplified(3, 3, 3, 1), 1);
  EXPECT_THROW(type_one_odd_minor(3, 3, 4, 1), DomainError);
  EXPECT_THROW(type_one_odd_minor(3, 3, 3, 3), DomainError);
}

TEST(TypeOneOddMinor, MatchesRegionDeterminant) {
  int checked = 0;
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b)
      for (int c = 1; c <= 6; ++c) {
        if ((a + b + c) % 2 == 0) continue;
        const int d = (a + b + c - 1) / 2;
        if (d < std::max({a, b, c})) continue;
        for (int i = std::max(0, d - b); i < a; ++i) {
          const MonomialIdeal ideal({{a, 0, 0}, {0, b, 0}, {0, 0, c}, {i, d - 1 - i, 0}});
          EXPECT_EQ(type_one_odd_minor(a, b, c, i), region_det(ideal, d)) << ideal.to_string();
          ++checked;
        }
      }
  EXPECT_GT(checked, 50);
}

TEST(PrimeBound, Guard) {
  EXPECT_NO_THROW(require_prime_factors_at_most(BigInt(12), 3, "test"));
  EXPECT_THROW(require_prime_factors_at_most(BigInt(14), 5, "test"), InternalError);
}
