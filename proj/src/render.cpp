#include "lefschetz/render.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <set>

namespace lefschetz {

namespace {

constexpr double kUnit = 50.0;
constexpr double kMargin = 10.0;
const double kH = std::sqrt(3.0) / 2.0;

using Point = std::array<double, 2>;

std::array<Point, 3> up_vertices(const Monomial& m) {
  const double a = m.x(), c = m.z();
  return {{{c + a / 2, a * kH}, {c + a / 2 + 1, a * kH}, {c + a / 2 + 0.5, (a + 1) * kH}}};
}

std::array<Point, 3> down_vertices(const Monomial& n) {
  const double p = n.x(), r = n.z();
  return {{{r + (p + 1) / 2, (p + 1) * kH}, {r + (p + 1) / 2 + 1, (p + 1) * kH}, {r + p / 2 + 1, p * kH}}};
}

class SvgWriter {
public:
  explicit SvgWriter(int d) : d_(d) {}

  std::string coords(const std::vector<Point>& pts) const {
    std::string s;
    char buf[64];
    for (const Point& p : pts) {
      std::snprintf(buf, sizeof buf, "%s%.3f,%.3f", s.empty() ? "" : " ", kMargin + p[0] * kUnit,
                    kMargin + (d_ * kH - p[1]) * kUnit);
      s += buf;
    }
    return s;
  }

  void polygon(const std::vector<Point>& pts, const char* cls, const char* fill) {
    body_ += "  <polygon class=\"" + std::string(cls) + "\" points=\"" + coords(pts) + "\" fill=\"" + fill +
             "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  }

  std::string finish() const {
    char head[256];
    const double w = 2 * kMargin + d_ * kUnit;
    const double h = 2 * kMargin + d_ * kH * kUnit;
    std::snprintf(head, sizeof head,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%.3f\" height=\"%.3f\" "
                  "viewBox=\"0 0 %.3f %.3f\">\n",
                  w, h, w, h);
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n" + std::string(head) + body_ + "</svg>\n";
  }

private:
  int d_;
  std::string body_;
};

bool same_point(const Point& p, const Point& q) { return std::abs(p[0] - q[0]) < 1e-9 && std::abs(p[1] - q[1]) < 1e-9; }

// Corners of the lozenge: the up triangle with the far corner of the down
// triangle inserted across their shared edge.
std::vector<Point> rhombus(const Monomial& up, const Monomial& down) {
  const auto u = up_vertices(up);
  const auto v = down_vertices(down);
  auto in_down = [&](const Point& p) { return same_point(p, v[0]) || same_point(p, v[1]) || same_point(p, v[2]); };
  Point far = v[0];
  for (const Point& q : v)
    if (!same_point(q, u[0]) && !same_point(q, u[1]) && !same_point(q, u[2])) far = q;
  std::vector<Point> out;
  for (std::size_t i = 0; i < 3; ++i) {
    out.push_back(u[i]);
    if (in_down(u[i]) && in_down(u[(i + 1) % 3])) out.push_back(far);
  }
  return out;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> fixed_lozenges(const TriangularRegion& region) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const TileabilityCertificate cert = is_tileable(region);
  if (!cert.tileable) return out;
  const Tiling& t = *cert.witness;
  for (std::size_t i = 0; i < region.n_down(); ++i) {
    bool fixed = true;
    for (std::size_t j : region.up_neighbors(i)) {
      if (j == t.up_of_down[i]) continue;
      const Monomial up = region.up()[j];
      const Monomial down = region.down()[i];
      if (is_tileable(region.without({&up, 1}, {&down, 1})).tileable) {
        fixed = false;
        break;
      }
    }
    if (fixed) out.emplace_back(i, t.up_of_down[i]);
  }
  return out;
}

std::string render_svg(const TriangularRegion& region, const SvgOptions& options) {
  const int d = region.d();
  SvgWriter svg(d);
  const TriangularRegion full = full_region(d);
  for (const Monomial& m : full.up()) {
    const auto v = up_vertices(m);
    if (region.has_up(m)) svg.polygon({v.begin(), v.end()}, "up", "#ffffff");
    else if (options.punctures.empty()) svg.polygon({v.begin(), v.end()}, "removed", "#404040");
  }
  for (const Monomial& n : full.down()) {
    const auto v = down_vertices(n);
    if (region.has_down(n)) svg.polygon({v.begin(), v.end()}, "down", "#ffffff");
    else if (options.punctures.empty()) svg.polygon({v.begin(), v.end()}, "removed", "#404040");
  }
  for (const Monomial& g : options.punctures) {
    const int s = d - g.degree();
    if (s <= 0) continue;
    const double a = g.x(), c = g.z();
    svg.polygon({{c + a / 2, a * kH}, {c + a / 2 + s, a * kH}, {c + a / 2 + s / 2.0, (a + s) * kH}}, "puncture",
                "#404040");
  }
  if (options.tiling) {
    std::set<std::pair<std::size_t, std::size_t>> fixed;
    for (const auto& f : fixed_lozenges(region)) fixed.insert(f);
    const auto& pairs = options.tiling->up_of_down;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const bool is_fixed = fixed.count({i, pairs[i]}) > 0;
      svg.polygon(rhombus(region.up()[pairs[i]], region.down()[i]), is_fixed ? "lozenge fixed" : "lozenge",
                  is_fixed ? "#c8c8c8" : "#ffffff");
    }
  }
  return svg.finish();
}

std::string render_ascii(const TriangularRegion& region) {
  const int d = region.d();
  std::string out;
  for (int a = d - 1; a >= 0; --a) {
    std::string row(static_cast<std::size_t>(a), ' ');
    const int k = d - 1 - a;  // y + z exponent budget of the up triangles in this strip
    for (int c = 0; c <= k; ++c) {
      row += region.has_up(Monomial(a, k - c, c)) ? '^' : '#';
      if (c < k) row += region.has_down(Monomial(a, k - 1 - c, c)) ? 'v' : '#';
    }
    out += row + "\n";
  }
  return out;
}

}  // namespace lefschetz
