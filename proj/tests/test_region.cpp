#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "lefschetz/ideal.hpp"
#include "lefschetz/linalg.hpp"
#include "lefschetz/region.hpp"
#include "lefschetz/region_matrices.hpp"
#include "lefschetz/tiling.hpp"

using namespace lefschetz;

namespace {

const char* kFigureIdeal = "x^7,y^7,z^6,x*y^4*z^2,x^3*y*z^2,x^4*y*z";

MonomialIdeal random_ideal(std::mt19937& rng, int d) {
  std::uniform_int_distribution<int> pure(1, d + 1), count(0, 4), exp(0, d - 1);
  std::vector<Monomial> gens = {{pure(rng), 0, 0}, {0, pure(rng), 0}, {0, 0, pure(rng)}};
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    const Monomial m(exp(rng), exp(rng), exp(rng));
    if (m.degree() >= 1 && m.degree() <= d - 1) gens.push_back(m);
  }
  return MonomialIdeal(gens);
}

// Oracle for tileability: try every assignment of downs to adjacent ups.
bool brute_tileable(const TriangularRegion& t) {
  if (t.n_up() != t.n_down()) return false;
  std::vector<bool> used(t.n_up());
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == t.n_down()) return true;
    for (std::size_t j : t.up_neighbors(i)) {
      if (used[j]) continue;
      used[j] = true;
      if (go(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return go(0);
}

TriangularRegion shift_down(const TriangularRegion& t, const Monomial& m) {
  std::vector<Monomial> up, down;
  for (const Monomial& u : t.up()) up.push_back(Monomial(u.x() - m.x(), u.y() - m.y(), u.z() - m.z()));
  for (const Monomial& n : t.down()) down.push_back(Monomial(n.x() - m.x(), n.y() - m.y(), n.z() - m.z()));
  return TriangularRegion(t.d() - m.degree(), up, down);
}

}  // namespace

TEST(BuildRegion, Counts) {
  const TriangularRegion full = build_region(MonomialIdeal(), 4);
  EXPECT_EQ(full.n_up(), 10u);
  EXPECT_EQ(full.n_down(), 6u);
  EXPECT_EQ(full, full_region(4));

  const TriangularRegion t5 = build_region(parse_ideal("x^4,y^4,z^4,x^2*z^2"), 5);
  EXPECT_EQ(t5.n_up(), 11u);
  EXPECT_EQ(t5.n_down(), 10u);

  const TriangularRegion hex = build_region(parse_ideal("x^2,y^2,z^2"), 3);
  EXPECT_EQ(hex.n_up(), 3u);
  EXPECT_EQ(hex.n_down(), 3u);
}

TEST(BuildRegion, MatchesHilbertFunction) {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 1 + trial % 9;
    const MonomialIdeal ideal = random_ideal(rng, d);
    const HilbertFunction h = hilbert_function(ideal, d);
    const TriangularRegion t = build_region(ideal, d);
    EXPECT_EQ(static_cast<std::int64_t>(t.n_up()), h(d - 1));
    EXPECT_EQ(static_cast<std::int64_t>(t.n_down()), h(d - 2));
    for (const Monomial& m : t.up()) EXPECT_EQ(m.degree(), d - 1);
    for (const Monomial& m : t.down()) EXPECT_EQ(m.degree(), d - 2);
    EXPECT_TRUE(std::is_sorted(t.up().begin(), t.up().end(), RevLexLess{}));
    const Balance b = balance(t);
    EXPECT_EQ(static_cast<std::int64_t>(b.n_up) - static_cast<std::int64_t>(b.n_down), h(d - 1) - h(d - 2));
  }
}

TEST(BuildRegion, AdjacencyIsDivisibility) {
  const TriangularRegion t = build_region(parse_ideal(kFigureIdeal), 8);
  for (std::size_t i = 0; i < t.n_down(); ++i) {
    std::set<std::size_t> expected;
    for (std::size_t j = 0; j < t.n_up(); ++j)
      if (t.down()[i].divides(t.up()[j])) expected.insert(j);
    const std::vector<std::size_t> got = t.up_neighbors(i);
    EXPECT_EQ(std::set<std::size_t>(got.begin(), got.end()), expected);
  }
}

TEST(Punctures, FigureRegion) {
  const std::vector<Puncture> ps = puncture_analysis(parse_ideal(kFigureIdeal), 8);
  ASSERT_EQ(ps.size(), 6u);
  std::multiset<int> fixed, floating;
  std::map<Monomial, Puncture> by_gen;
  for (const Puncture& p : ps) {
    (p.floating ? floating : fixed).insert(p.side_length);
    by_gen[p.generator] = p;
  }
  EXPECT_EQ(fixed, (std::multiset<int>{1, 1, 2}));
  EXPECT_EQ(floating, (std::multiset<int>{1, 2, 2}));
  const Puncture& a = by_gen.at(Monomial(4, 1, 1));
  EXPECT_TRUE(a.floating);
  EXPECT_EQ(a.side_length, 2);
  EXPECT_NE(std::find(a.overlap_partners.begin(), a.overlap_partners.end(), Monomial(3, 1, 2)),
            a.overlap_partners.end());
}

TEST(Punctures, CompleteIntersectionCorners) {
  const std::vector<Puncture> ps = puncture_analysis(parse_ideal("x^3,y^4,z^5"), 9);
  ASSERT_EQ(ps.size(), 3u);
  for (const Puncture& p : ps) EXPECT_FALSE(p.floating);
}

TEST(Punctures, OverlapOrTouchCriterion) {
  // x^{a+al} y^b z^c and x^a y^{b+be} z^{c+ga}: overlap or touch iff the exponent sum is at most d.
  for (int d = 3; d <= 8; ++d)
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        for (int c = 0; c <= 2; ++c)
          for (int al = 1; al <= 2; ++al)
            for (int be = 0; be <= 2; ++be)
              for (int ga = 0; ga <= 2; ++ga) {
                if (be + ga == 0) continue;
                const Monomial g1(a + al, b, c), g2(a, b + be, c + ga);
                if (g1.degree() > d - 1 || g2.degree() > d - 1) continue;
                const bool meet = punctures_overlap(g1, g2, d) || punctures_touch(g1, g2, d);
                EXPECT_EQ(meet, a + al + b + be + c + ga <= d) << g1.to_string() << " " << g2.to_string() << " d=" << d;
              }
}

TEST(Punctures, OverlapMeansSharedEdge) {
  // Oracle: two punctures overlap iff some up of one and some down of the other share an edge,
  // or they share a triangle outright.
  auto cells = [](const Monomial& g, int d) {
    std::set<std::pair<int, Monomial>> out;
    for (int k : {d - 1, d - 2})
      for (const Monomial& m : monomials_of_degree(k))
        if (g.divides(m)) out.insert({k, m});
    return out;
  };
  for (int d = 3; d <= 7; ++d) {
    std::vector<Monomial> gens;
    for (int k = 1; k <= d - 1; ++k)
      for (const Monomial& m : monomials_of_degree(k)) gens.push_back(m);
    for (const Monomial& g1 : gens)
      for (const Monomial& g2 : gens) {
        if (g1 == g2 || g1.divides(g2) || g2.divides(g1)) continue;
        const auto c1 = cells(g1, d), c2 = cells(g2, d);
        bool shared = false;
        for (const auto& c : c1) shared = shared || c2.count(c);
        for (const auto& [k1, m1] : c1)
          for (const auto& [k2, m2] : c2)
            if (k1 != k2 && (k1 < k2 ? m1.divides(m2) : m2.divides(m1))) shared = true;
        EXPECT_EQ(punctures_overlap(g1, g2, d), shared) << g1.to_string() << " " << g2.to_string() << " d=" << d;
      }
  }
}

TEST(Punctures, FloatingClosureOrderIndependent) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 3 + trial % 7;
    const MonomialIdeal ideal = random_ideal(rng, d);
    std::vector<Monomial> gens;
    for (const Monomial& g : ideal.gens())
      if (g.degree() <= d - 1) gens.push_back(g);
    std::vector<Monomial> rev(gens.rbegin(), gens.rend());
    const std::vector<bool> fwd = floating_closure(gens, d);
    std::vector<bool> back = floating_closure(rev, d);
    std::reverse(back.begin(), back.end());
    EXPECT_EQ(fwd, back);
  }
}

TEST(Balance, Examples) {
  const Balance b = balance(build_region(parse_ideal("x^4,y^4,z^4,x^2*z^2"), 5));
  EXPECT_EQ(b.kind, Heaviness::up_heavy);
  EXPECT_EQ(b.excess, 1u);
  EXPECT_EQ(balance(build_region(parse_ideal("x^2,y^4,z^4"), 5)).kind, Heaviness::balanced);
  const Balance empty = balance(TriangularRegion());
  EXPECT_EQ(empty.kind, Heaviness::balanced);
  EXPECT_EQ(empty.excess, 0u);
  EXPECT_EQ(to_string(Heaviness::down_heavy), "down-heavy");
}

TEST(MonomialSubregion, Examples) {
  const TriangularRegion t = build_region(parse_ideal(kFigureIdeal), 8);
  EXPECT_EQ(monomial_subregion(t, Monomial(0, 0, 0)), t);
  const TriangularRegion u = monomial_subregion(t, Monomial(1, 2, 1));
  EXPECT_FALSE(u.empty());
  for (const Monomial& m : u.up()) EXPECT_TRUE(Monomial(1, 2, 1).divides(m));
  for (const Monomial& m : u.down()) EXPECT_TRUE(Monomial(1, 2, 1).divides(m));
  EXPECT_TRUE(monomial_subregion(t, Monomial(3, 1, 2)).empty());
}

TEST(Tileable, Examples) {
  const TileabilityCertificate fig = is_tileable(build_region(parse_ideal(kFigureIdeal), 8));
  EXPECT_TRUE(fig.tileable);
  ASSERT_TRUE(fig.witness.has_value());
  const TriangularRegion bad = build_region(parse_ideal("x^2,y^4,z^4,x*y,x*z"), 3);
  EXPECT_EQ(bad.n_up(), bad.n_down());
  const TileabilityCertificate c = is_tileable(bad);
  EXPECT_FALSE(c.tileable);
  EXPECT_FALSE(c.hall_violator.empty());
  EXPECT_LT(c.hall_neighbourhood.size(), c.hall_violator.size());
  EXPECT_FALSE(is_tileable(build_region(parse_ideal("x^4,y^4,z^4,x^2*z^2"), 6)).tileable);
}

TEST(Tileable, MatchesBruteForceAndSubregionCriterion) {
  std::mt19937 rng(3);
  int balanced = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int d = 2 + trial % 8;
    const TriangularRegion t = build_region(random_ideal(rng, d), d);
    if (t.n_up() > 16) continue;
    const TileabilityCertificate c = is_tileable(t);
    EXPECT_EQ(c.tileable, brute_tileable(t));
    if (c.tileable) {
      // The witness is a perfect matching of adjacent triangles.
      std::set<std::size_t> ups(c.witness->up_of_down.begin(), c.witness->up_of_down.end());
      EXPECT_EQ(ups.size(), t.n_up());
      for (std::size_t i = 0; i < t.n_down(); ++i) {
        const auto nb = t.up_neighbors(i);
        EXPECT_NE(std::find(nb.begin(), nb.end(), c.witness->up_of_down[i]), nb.end());
      }
    }
    if (t.n_up() != t.n_down()) continue;
    ++balanced;
    bool heavy = false;
    for (int k = 0; k <= d - 2; ++k)
      for (const Monomial& m : monomials_of_degree(k))
        heavy = heavy || balance(monomial_subregion(t, m)).kind == Heaviness::down_heavy;
    EXPECT_EQ(c.tileable, !heavy);
  }
  EXPECT_GT(balanced, 30);
}

TEST(Tileable, BalancedSubregionFactorsCount) {
  std::mt19937 rng(4);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 3 + trial % 6;
    const TriangularRegion t = build_region(random_ideal(rng, d), d);
    if (t.n_up() != t.n_down() || t.n_up() > 18) continue;
    for (int k = 1; k <= d - 2; ++k)
      for (const Monomial& m : monomials_of_degree(k)) {
        const TriangularRegion u = monomial_subregion(t, m);
        if (u.empty() || u.n_up() != u.n_down() || !is_tileable(u).tileable) continue;
        const TriangularRegion rest = t.minus(u);
        EXPECT_EQ(is_tileable(t).tileable, is_tileable(rest).tileable);
        EXPECT_EQ(count_tilings(t), count_tilings(u) * count_tilings(rest));
        ++checked;
      }
  }
  EXPECT_GT(checked, 20);
}

TEST(Minors, CountsAndExamples) {
  const MonomialIdeal ideal = parse_ideal("x^4,y^4,z^4,x^2*z^2");
  auto count = [](MinorStream s) {
    std::size_t n = 0;
    while (auto m = s.next()) {
      EXPECT_EQ(m->n_up(), m->n_down());
      ++n;
    }
    return n;
  };
  EXPECT_EQ(count(maximal_minors(build_region(ideal, 5))), 11u);
  EXPECT_EQ(count(maximal_minors(build_region(ideal, 6))), 55u);
  EXPECT_EQ(count(restricted_maximal_minors(build_region(ideal, 5))), 2u);
  EXPECT_EQ(count(restricted_maximal_minors(build_region(ideal, 6))), 1u);

  const TriangularRegion hex = build_region(parse_ideal("x^2,y^2,z^2"), 3);
  MinorStream s = maximal_minors(hex);
  EXPECT_EQ(s.next(), hex);
  EXPECT_FALSE(s.next().has_value());
  s.reset();
  EXPECT_EQ(s.next(), hex);
}

TEST(Minors, RestrictedAreMaximalAndIdealRegions) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const int d = 3 + trial % 5;
    const MonomialIdeal ideal = random_ideal(rng, d);
    const TriangularRegion t = build_region(ideal, d);
    std::set<std::pair<std::vector<Monomial>, std::vector<Monomial>>> all;
    MinorStream m = maximal_minors(t);
    std::size_t n_max = 0;
    while (auto r = m.next()) {
      all.insert({r->up(), r->down()});
      ++n_max;
    }
    const std::size_t heavy = std::max(t.n_up(), t.n_down());
    const std::size_t excess = heavy - std::min(t.n_up(), t.n_down());
    EXPECT_EQ(BigInt(static_cast<unsigned long>(n_max)), binomial(static_cast<long>(heavy), static_cast<long>(excess)));
    MinorStream r = restricted_maximal_minors(t);
    while (auto minor = r.next()) {
      EXPECT_TRUE(all.count({minor->up(), minor->down()}));
      if (t.n_up() > t.n_down()) {
        MonomialIdeal bigger = ideal;
        for (const Monomial& u : t.up())
          if (!minor->has_up(u)) bigger = bigger.with(u);
        EXPECT_EQ(build_region(bigger, d), *minor);
      }
    }
  }
}

TEST(SplitPortions, Examples) {
  const MonomialIdeal ideal = parse_ideal("x^8,y^8,z^8,x^3*y^5,x^3*z^6");
  const TriangularRegion t = build_region(ideal, 10);
  const Portions p = split_portions(t, 3);
  EXPECT_EQ(shift_down(p.upper, Monomial(3, 0, 0)), build_region(parse_ideal("x^5,y^5,z^6"), 7));
  EXPECT_EQ(p.lower, build_region(parse_ideal("x^3,y^8,z^8"), 10));
  EXPECT_TRUE(split_portions(build_region(ideal, 3), 3).upper.empty());

  const MonomialIdeal four = parse_ideal("x^6,y^6,z^5,x^2*y^3");
  const Portions q = split_portions(build_region(four, 7), 2);
  EXPECT_EQ(shift_down(q.upper, Monomial(2, 0, 0)), build_region(parse_ideal("x^4,y^3,z^5"), 5));
}

TEST(MergePunctures, Examples) {
  // x^3 y z and x y^2 z^2 have gcd x y z and lcm of degree 7.
  const MonomialIdeal two = parse_ideal("x^9,y^9,z^9,x^3*y*z,x*y^2*z^2");
  const MonomialIdeal merged = merge_touching_punctures(two, 7);
  EXPECT_TRUE(merged.contains(Monomial(1, 1, 1)));
  EXPECT_EQ(merge_touching_punctures(two, 6), two);

  const MonomialIdeal fig = parse_ideal(kFigureIdeal);
  const MonomialIdeal fig_merged = merge_touching_punctures(fig, 8);
  EXPECT_LT(fig_merged.gens().size(), fig.gens().size());
  EXPECT_EQ(abs(determinant(biadjacency(build_region(fig, 8)))),
            abs(determinant(biadjacency(build_region(fig_merged, 8)))));
}

TEST(MergePunctures, PreservesEnumerations) {
  std::mt19937 rng(6);
  int merged = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int d = 3 + trial % 6;
    const MonomialIdeal ideal = random_ideal(rng, d);
    const TriangularRegion before = build_region(ideal, d);
    if (before.n_up() != before.n_down() || before.n_up() > 18) continue;
    const MonomialIdeal m = merge_touching_punctures(ideal, d);
    if (m == ideal) continue;
    ++merged;
    const TriangularRegion after = build_region(m, d);
    EXPECT_EQ(abs(determinant(biadjacency(before))), abs(determinant(biadjacency(after)))) << ideal.to_string();
    EXPECT_EQ(count_tilings(before), count_tilings(after)) << ideal.to_string();
  }
  EXPECT_GT(merged, 10);
}
