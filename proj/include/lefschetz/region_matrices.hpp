#ifndef LEFSCHETZ_REGION_MATRICES_HPP
#define LEFSCHETZ_REGION_MATRICES_HPP

#include <vector>

#include "lefschetz/linalg.hpp"
#include "lefschetz/region.hpp"

namespace lefschetz {

/// Z(T): rows are the down triangles, columns the up triangles (both ascending
/// reverse-lex); entry 1 when they share an edge.
IntMatrix biadjacency(const TriangularRegion& region);

/// A lattice vertex, labelled by a monomial x^a y^b z^c of degree d-1 and
/// placed at (d-1-c, a).
struct LatticePoint {
  Monomial label;
  int px = 0;
  int py = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

LatticePoint lattice_point(const Monomial& label, int d);

struct LatticePoints {
  std::vector<LatticePoint> starts;  // A-vertices, ascending reverse-lex
  std::vector<LatticePoint> ends;    // E-vertices, ascending reverse-lex
};

struct LatticePathMatrix {
  IntMatrix matrix;  // rows starts, columns ends
  LatticePoints points;
};

/// Number of east/south lattice paths from a to e.
BigInt lattice_path_count(const LatticePoint& a, const LatticePoint& e);

/// N(T): entry (i, j) counts lattice paths from A_i to E_j.
LatticePathMatrix lattice_path_matrix(const TriangularRegion& region);

}  // namespace lefschetz

#endif  // LEFSCHETZ_REGION_MATRICES_HPP
