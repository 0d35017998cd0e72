#include <gtest/gtest.h>

#include <set>
#include <string>

#include "lefschetz/ideal.hpp"
#include "lefschetz/region.hpp"
#include "lefschetz/render.hpp"
#include "lefschetz/tiling.hpp"

using namespace lefschetz;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

// Oracle: lozenges appearing in every enumerated tiling.
std::set<std::pair<std::size_t, std::size_t>> common_lozenges(const TriangularRegion& t) {
  const std::vector<Tiling> all = enumerate_tilings(t);
  std::set<std::pair<std::size_t, std::size_t>> out;
  if (all.empty()) return out;
  for (std::size_t i = 0; i < t.n_down(); ++i) {
    bool same = true;
    for (const Tiling& tau : all) same = same && tau.up_of_down[i] == all.front().up_of_down[i];
    if (same) out.emplace(i, all.front().up_of_down[i]);
  }
  return out;
}

}  // namespace

TEST(Svg, DeterministicAndWellFormed) {
  const TriangularRegion t = build_region(parse_ideal("x^7,y^7,z^6,x*y^4*z^2,x^3*y*z^2,x^4*y*z"), 8);
  const SvgOptions opts{{}, enumerate_tilings(t).front()};
  const std::string a = render_svg(t, opts), b = render_svg(t, opts);
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("<svg"), std::string::npos);
  EXPECT_NE(a.find("</svg>"), std::string::npos);
}

TEST(Svg, UnitHexagon) {
  const TriangularRegion hex = build_region(parse_ideal("x^2,y^2,z^2"), 3);
  const std::string plain = render_svg(hex);
  EXPECT_EQ(occurrences(plain, "class=\"up\""), 3u);
  EXPECT_EQ(occurrences(plain, "class=\"down\""), 3u);
  EXPECT_EQ(occurrences(plain, "class=\"removed\""), 3u);
  EXPECT_EQ(occurrences(plain, "lozenge"), 0u);

  const std::string tiled = render_svg(hex, {{}, enumerate_tilings(hex).front()});
  EXPECT_EQ(occurrences(tiled, "class=\"lozenge\""), 3u);
  EXPECT_EQ(occurrences(tiled, "lozenge fixed"), 0u);
}

TEST(Svg, DarkPunctures) {
  const MonomialIdeal ideal = parse_ideal("x^4,y^4,z^4,x^2*z^2");
  const std::string svg = render_svg(build_region(ideal, 5), {ideal.gens(), std::nullopt});
  EXPECT_EQ(occurrences(svg, "class=\"puncture\""), 4u);
  EXPECT_EQ(occurrences(svg, "class=\"removed\""), 0u);
  // Generators of degree >= d leave no puncture.
  EXPECT_EQ(occurrences(render_svg(build_region(ideal, 4), {ideal.gens(), std::nullopt}), "class=\"puncture\""), 0u);
}

TEST(Svg, FixedLozengesShaded) {
  const TriangularRegion t = build_region(parse_ideal("x^7,y^7,z^6,x*y^4*z^2,x^3*y*z^2,x^4*y*z"), 8);
  const auto fixed = fixed_lozenges(t);
  const std::string svg = render_svg(t, {{}, enumerate_tilings(t).front()});
  EXPECT_EQ(occurrences(svg, "lozenge fixed"), fixed.size());
  EXPECT_EQ(occurrences(svg, "class=\"lozenge"), t.n_down());
}

TEST(FixedLozenges, MatchesEnumerationOracle) {
  for (const char* text : {"x^2,y^2,z^2", "x^3,y^3,z^3,x*y^2", "x^7,y^7,z^6,x*y^4*z^2,x^3*y*z^2,x^4*y*z",
                           "x^3,y^7,z^7,x*y^2,x*z^2", "x^4,y^4,z^4,x^2*z^2", "x^5,y^4,z^3,x^2*y^2*z"})
    for (int d = 2; d <= 9; ++d) {
      const TriangularRegion t = build_region(parse_ideal(text), d);
      if (t.n_up() != t.n_down() || t.n_up() > 30) continue;
      const auto got = fixed_lozenges(t);
      const std::set<std::pair<std::size_t, std::size_t>> got_set(got.begin(), got.end());
      EXPECT_EQ(got_set, common_lozenges(t))
          << text << " d=" << d;
    }
}

TEST(Ascii, Examples) {
  EXPECT_EQ(render_ascii(full_region(2)), " ^\n^v^\n");
  EXPECT_EQ(render_ascii(build_region(parse_ideal("x^2,y^2,z^2"), 3)), "  #\n ^v^\n#v^v#\n");
  const TriangularRegion t = build_region(parse_ideal("x^4,y^4,z^4,x^2*z^2"), 6);
  const std::string art = render_ascii(t);
  EXPECT_EQ(occurrences(art, "^"), t.n_up());
  EXPECT_EQ(occurrences(art, "v"), t.n_down());
  EXPECT_EQ(occurrences(art, "\n"), 6u);
}
