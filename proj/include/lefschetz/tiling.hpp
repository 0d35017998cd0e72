#ifndef LEFSCHETZ_TILING_HPP
#define LEFSCHETZ_TILING_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "lefschetz/linalg.hpp"
#include "lefschetz/region.hpp"
#include "lefschetz/region_matrices.hpp"

namespace lefschetz {

/// Calls `visit` for every lozenge tiling; stops early when it returns false.
/// Tilings come in lexicographic order of up_of_down with neighbours tried in
/// x, y, z order.
void for_each_tiling(const TriangularRegion& region, const std::function<bool(const Tiling&)>& visit);

/// All tilings; throws DomainError when there are more than `limit`.
std::vector<Tiling> enumerate_tilings(const TriangularRegion& region, std::size_t limit = 1'000'000);

std::uint64_t count_tilings(const TriangularRegion& region);

/// Sign of the tiling read as the permutation down i -> up up_of_down[i].
int msgn(const Tiling& tiling);

struct LatticePath {
  std::vector<Monomial> vertices;  // degree d-1 labels from the start to the end vertex
  friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

/// Non-intersecting paths of a tiling: path i starts at A-vertex i and ends at
/// E-vertex end_index[i] (indices into the lattice point lists).
struct PathFamily {
  std::vector<LatticePath> paths;
  std::vector<std::size_t> end_index;
  friend bool operator==(const PathFamily&, const PathFamily&) = default;
};

PathFamily to_path_family(const TriangularRegion& region, const Tiling& tiling);
Tiling from_path_family(const TriangularRegion& region, const PathFamily& family);

/// Sign of the permutation i -> end_index[i].
int lpsgn(const PathFamily& family);

struct SignedEnumeration {
  std::uint64_t count = 0;
  BigInt sum_msgn;
  BigInt sum_lpsgn;
  BigInt det_z;
  BigInt det_n;
  BigInt per_z;
};

/// Enumerates the tilings of a balanced region and checks the sums against
/// det Z, det N and per Z; throws InternalError on any disagreement.
SignedEnumeration signed_enumeration(const TriangularRegion& region, std::size_t limit = 1'000'000);

}  // namespace lefschetz

#endif  // LEFSCHETZ_TILING_HPP
