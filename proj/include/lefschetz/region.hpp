#ifndef LEFSCHETZ_REGION_HPP
#define LEFSCHETZ_REGION_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lefschetz/ideal.hpp"

namespace lefschetz {

/// A set of unit triangles of the side-d triangle: upward triangles carry
/// labels of degree d-1, downward ones labels of degree d-2. Down n and up m
/// share an edge iff m is x*n, y*n or z*n. Both label lists are kept in
/// ascending reverse-lex order, which fixes every row/column order downstream.
class TriangularRegion {
public:
  TriangularRegion() = default;
  TriangularRegion(int d, std::vector<Monomial> up, std::vector<Monomial> down);

  int d() const { return d_; }
  const std::vector<Monomial>& up() const { return up_; }
  const std::vector<Monomial>& down() const { return down_; }
  std::size_t n_up() const { return up_.size(); }
  std::size_t n_down() const { return down_.size(); }
  bool empty() const { return up_.empty() && down_.empty(); }

  std::optional<std::size_t> up_index(const Monomial& m) const;
  std::optional<std::size_t> down_index(const Monomial& m) const;
  bool has_up(const Monomial& m) const { return up_index(m).has_value(); }
  bool has_down(const Monomial& m) const { return down_index(m).has_value(); }

  /// Indices of the up triangles adjacent to down triangle `i`, in x, y, z order.
  std::vector<std::size_t> up_neighbors(std::size_t i) const;

  /// The region without the listed triangles.
  TriangularRegion without(std::span<const Monomial> ups, std::span<const Monomial> downs) const;
  /// Triangles of this region that are not in `other`.
  TriangularRegion minus(const TriangularRegion& other) const;

  friend bool operator==(const TriangularRegion&, const TriangularRegion&) = default;

private:
  int d_ = 0;
  std::vector<Monomial> up_;
  std::vector<Monomial> down_;
};

/// The whole side-d triangle.
TriangularRegion full_region(int d);

/// T_d(I): the triangles whose labels lie outside I.
TriangularRegion build_region(const MonomialIdeal& ideal, int d);

struct Puncture {
  Monomial generator;
  int side_length = 0;
  bool floating = false;
  std::vector<Monomial> overlap_partners;
  std::vector<Monomial> touch_partners;
};

/// Two punctures of T_d overlap iff deg lcm(g1, g2) < d and touch iff it equals d.
bool punctures_overlap(const Monomial& g1, const Monomial& g2, int d);
bool punctures_touch(const Monomial& g1, const Monomial& g2, int d);

/// Floating flags for the punctures of the given generators (all of degree < d),
/// computed as the closure of the boundary punctures under overlap/touch.
std::vector<bool> floating_closure(std::span<const Monomial> generators, int d);

/// One entry per minimal generator of degree <= d-1, in generator order.
std::vector<Puncture> puncture_analysis(const MonomialIdeal& ideal, int d);

enum class Heaviness { down_heavy, balanced, up_heavy };

std::string to_string(Heaviness h);

struct Balance {
  std::size_t n_up = 0;
  std::size_t n_down = 0;
  Heaviness kind = Heaviness::balanced;
  std::size_t excess = 0;

  friend bool operator==(const Balance&, const Balance&) = default;
};

Balance balance(const TriangularRegion& region);

/// The triangles of `region` whose labels are divisible by m.
TriangularRegion monomial_subregion(const TriangularRegion& region, const Monomial& m);

/// A lozenge tiling as a perfect matching: up_of_down[i] is the index in
/// region.up() of the up triangle sharing a lozenge with region.down()[i].
struct Tiling {
  std::vector<std::size_t> up_of_down;
  friend bool operator==(const Tiling&, const Tiling&) = default;
};

struct TileabilityCertificate {
  bool tileable = false;
  std::optional<Tiling> witness;
  /// For balanced untileable regions: down triangles with too few up neighbours.
  std::vector<Monomial> hall_violator;
  std::vector<Monomial> hall_neighbourhood;
};

/// Decides tileability by maximum bipartite matching.
TileabilityCertificate is_tileable(const TriangularRegion& region);

/// Restartable stream over subregions, in lexicographic order of the removed
/// index combinations.
class MinorStream {
public:
  /// Removes `k` of `candidates` (labels of up triangles when `remove_up`).
  MinorStream(TriangularRegion region, std::vector<Monomial> candidates, std::size_t k, bool remove_up);

  std::optional<TriangularRegion> next();
  void reset();
  const std::vector<Monomial>& candidates() const { return candidates_; }
  /// Labels removed by the region returned last.
  std::vector<Monomial> removed() const;

private:
  TriangularRegion region_;
  std::vector<Monomial> candidates_;
  std::size_t k_;
  bool remove_up_;
  std::vector<std::size_t> combo_;
  bool started_ = false;
  bool done_ = false;
};

/// Balanced subregions obtained by deleting `excess` triangles of the heavy orientation.
MinorStream maximal_minors(const TriangularRegion& region);

/// Lattice vertices sit on the edge shared by up m and down m/y. A-vertices are
/// up triangles whose y-neighbour is absent; E-vertices are down triangles n
/// whose neighbour y*n is absent (the vertex is labelled y*n).
inline constexpr Var kPathEdge = Var::y;
std::vector<Monomial> a_vertex_ups(const TriangularRegion& region);
std::vector<Monomial> e_vertex_downs(const TriangularRegion& region);

/// Like maximal_minors, deleting only A-vertex up triangles (up-heavy) or
/// E-vertex down triangles (down-heavy).
MinorStream restricted_maximal_minors(const TriangularRegion& region);

struct Portions {
  TriangularRegion upper;
  TriangularRegion lower;
};

/// Splits along the row `alpha` units above the bottom edge: the upper portion
/// is the monomial subregion of x^alpha, the lower one the rest.
Portions split_portions(const TriangularRegion& region, int alpha);

/// Repeatedly replaces two overlapping or touching punctures by the puncture of
/// their gcd, provided the triangles this adds to the removed set all belong to
/// T_d(I). Returns the resulting ideal.
MonomialIdeal merge_touching_punctures(const MonomialIdeal& ideal, int d);

}  // namespace lefschetz

#endif  // LEFSCHETZ_REGION_HPP
