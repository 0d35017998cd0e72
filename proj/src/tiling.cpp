#include "lefschetz/tiling.hpp"

#include <algorithm>
#include <limits>

#include "lefschetz/errors.hpp"

namespace lefschetz {

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

class TilingSearch {
public:
  TilingSearch(const TriangularRegion& region, const std::function<bool(const Tiling&)>& visit)
      : region_(region), visit_(visit), used_(region.n_up(), false) {
    neighbours_.resize(region.n_down());
    std::vector<std::size_t> last(region.n_up(), kUnset);
    for (std::size_t i = 0; i < region.n_down(); ++i) {
      neighbours_[i] = region.up_neighbors(i);
      for (std::size_t j : neighbours_[i]) last[j] = i;
    }
    closing_.resize(region.n_down());
    for (std::size_t j = 0; j < region.n_up(); ++j) {
      if (last[j] == kUnset) isolated_up_ = true;
      else closing_[last[j]].push_back(j);
    }
    tiling_.up_of_down.assign(region.n_down(), kUnset);
  }

  void run() {
    if (region_.n_up() != region_.n_down() || isolated_up_) return;
    step(0);
  }

private:
  bool step(std::size_t i) {
    if (i == region_.n_down()) return visit_(tiling_);
    for (std::size_t j : neighbours_[i]) {
      if (used_[j]) continue;
      used_[j] = true;
      tiling_.up_of_down[i] = j;
      const bool viable = std::all_of(closing_[i].begin(), closing_[i].end(), [&](std::size_t u) { return used_[u]; });
      const bool keep_going = !viable || step(i + 1);
      used_[j] = false;
      tiling_.up_of_down[i] = kUnset;
      if (!keep_going) return false;
    }
    return true;
  }

  const TriangularRegion& region_;
  const std::function<bool(const Tiling&)>& visit_;
  std::vector<std::vector<std::size_t>> neighbours_;
  std::vector<std::vector<std::size_t>> closing_;
  std::vector<bool> used_;
  bool isolated_up_ = false;
  Tiling tiling_;
};

int permutation_sign(const std::vector<std::size_t>& p) {
  std::vector<bool> seen(p.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace

void for_each_tiling(const TriangularRegion& region, const std::function<bool(const Tiling&)>& visit) {
  TilingSearch(region, visit).run();
}

std::vector<Tiling> enumerate_tilings(const TriangularRegion& region, std::size_t limit) {
  std::vector<Tiling> out;
  for_each_tiling(region, [&](const Tiling& t) {
    if (out.size() == limit) throw DomainError("more than " + std::to_string(limit) + " tilings");
    out.push_back(t);
    return true;
  });
  return out;
}

std::uint64_t count_tilings(const TriangularRegion& region) {
  std::uint64_t n = 0;
  for_each_tiling(region, [&](const Tiling&) {
    ++n;
    return true;
  });
  return n;
}

int msgn(const Tiling& tiling) { return permutation_sign(tiling.up_of_down); }

int lpsgn(const PathFamily& family) { return permutation_sign(family.end_index); }

PathFamily to_path_family(const TriangularRegion& region, const Tiling& tiling) {
  if (tiling.up_of_down.size() != region.n_down()) throw DomainError("tiling does not match the region");
  std::vector<std::size_t> down_of_up(region.n_up(), kUnset);
  for (std::size_t i = 0; i < tiling.up_of_down.size(); ++i) down_of_up.at(tiling.up_of_down[i]) = i;
  const std::vector<Monomial> ends = e_vertex_downs(region);

  PathFamily family;
  for (const Monomial& start : a_vertex_ups(region)) {
    LatticePath path{{start}};
    Monomial cur = start;
    while (true) {
      const std::size_t k = down_of_up[*region.up_index(cur)];
      if (k == kUnset) throw InternalError("unmatched up triangle " + cur.to_string());
      const Monomial n = region.down()[k];
      if (n.times(kPathEdge) == cur) throw InternalError("path reached a lozenge across the path edge");
      const Monomial next = n.times(kPathEdge);
      path.vertices.push_back(next);
      if (!region.has_up(next)) {
        const auto it = std::lower_bound(ends.begin(), ends.end(), n, RevLexLess{});
        if (it == ends.end() || *it != n) throw InternalError("path ended off an E-vertex");
        family.end_index.push_back(static_cast<std::size_t>(it - ends.begin()));
        break;
      }
      cur = next;
    }
    family.paths.push_back(std::move(path));
  }
  return family;
}

Tiling from_path_family(const TriangularRegion& region, const PathFamily& family) {
  Tiling t;
  t.up_of_down.assign(region.n_down(), kUnset);
  for (const LatticePath& path : family.paths) {
    for (std::size_t s = 0; s + 1 < path.vertices.size(); ++s) {
      const auto n = path.vertices[s + 1].divided_by(kPathEdge);
      const auto k = n ? region.down_index(*n) : std::nullopt;
      const auto j = region.up_index(path.vertices[s]);
      if (!k || !j) throw DomainError("path step leaves the region");
      if (t.up_of_down[*k] != kUnset) throw DomainError("paths share a lozenge");
      t.up_of_down[*k] = *j;
    }
  }
  for (std::size_t k = 0; k < region.n_down(); ++k) {
    if (t.up_of_down[k] != kUnset) continue;
    const auto j = region.up_index(region.down()[k].times(kPathEdge));
    if (!j) throw DomainError("down triangle left uncovered: " + region.down()[k].to_string());
    t.up_of_down[k] = *j;
  }
  std::vector<std::size_t> sorted = t.up_of_down;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw DomainError("paths intersect");
  return t;
}

SignedEnumeration signed_enumeration(const TriangularRegion& region, std::size_t limit) {
  if (region.n_up() != region.n_down()) throw DomainError("signed enumeration needs a balanced region");
  SignedEnumeration s;
  s.sum_msgn = 0;
  s.sum_lpsgn = 0;
  for_each_tiling(region, [&](const Tiling& t) {
    if (s.count == limit) throw DomainError("more than " + std::to_string(limit) + " tilings");
    ++s.count;
    s.sum_msgn += msgn(t);
    const PathFamily f = to_path_family(region, t);
    if (from_path_family(region, f) != t) throw InternalError("path family does not reproduce the tiling");
    s.sum_lpsgn += lpsgn(f);
    return true;
  });
  const IntMatrix z = biadjacency(region);
  s.det_z = determinant(z);
  s.det_n = determinant(lattice_path_matrix(region).matrix);
  s.per_z = permanent(z);
  if (s.sum_msgn != s.det_z) throw InternalError("sum of matching signs differs from det Z");
  if (s.sum_lpsgn != s.det_n) throw InternalError("sum of path signs differs from det N");
  if (s.per_z != s.count) throw InternalError("tiling count differs from per Z");
  return s;
}

}  // namespace lefschetz
