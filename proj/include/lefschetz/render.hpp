#ifndef LEFSCHETZ_RENDER_HPP
#define LEFSCHETZ_RENDER_HPP

#include <optional>
#include <string>
#include <vector>

#include "lefschetz/region.hpp"

namespace lefschetz {

struct SvgOptions {
  /// Generators whose punctures are drawn dark; without them every removed
  /// unit triangle is drawn dark instead.
  std::vector<Monomial> punctures;
  std::optional<Tiling> tiling;
};

/// Deterministic SVG 1.1 drawing of the region inside the side-d triangle,
/// 50px per lattice edge. Lozenges of the tiling are drawn as rhombi, and
/// those present in every tiling are shaded light gray.
std::string render_svg(const TriangularRegion& region, const SvgOptions& options = {});

/// One text row per horizontal strip, top strip first: '^' and 'v' for present
/// triangles, '#' for removed ones.
std::string render_ascii(const TriangularRegion& region);

/// Lozenges (down index -> up index) shared by all tilings of a tileable region.
std::vector<std::pair<std::size_t, std::size_t>> fixed_lozenges(const TriangularRegion& region);

}  // namespace lefschetz

#endif  // LEFSCHETZ_RENDER_HPP
