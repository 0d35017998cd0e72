#include "lefschetz/region_matrices.hpp"

namespace lefschetz {

IntMatrix biadjacency(const TriangularRegion& region) {
  IntMatrix z(region.n_down(), region.n_up());
  for (std::size_t i = 0; i < region.n_down(); ++i) {
    for (std::size_t j : region.up_neighbors(i)) z(i, j) = 1;
  }
  return z;
}

LatticePoint lattice_point(const Monomial& label, int d) { return {label, d - 1 - label.z(), label.x()}; }

BigInt lattice_path_count(const LatticePoint& a, const LatticePoint& e) {
  const long dx = e.px - a.px;
  const long dy = a.py - e.py;
  if (dx < 0 || dy < 0) return 0;
  return binomial(dx + dy, dx);
}

LatticePathMatrix lattice_path_matrix(const TriangularRegion& region) {
  LatticePathMatrix out;
  const int d = region.d();
  for (const Monomial& m : a_vertex_ups(region)) out.points.starts.push_back(lattice_point(m, d));
  // E labels y*n keep the order of n.
  for (const Monomial& n : e_vertex_downs(region)) out.points.ends.push_back(lattice_point(n.times(kPathEdge), d));
  const auto& s = out.points.starts;
  const auto& e = out.points.ends;
  out.matrix = IntMatrix(s.size(), e.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j) out.matrix(i, j) = lattice_path_count(s[i], e[j]);
  return out;
}

}  // namespace lefschetz
