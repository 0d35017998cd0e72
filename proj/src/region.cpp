#include "lefschetz/region.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "lefschetz/errors.hpp"

namespace lefschetz {

namespace {

std::optional<std::size_t> find_sorted(const std::vector<Monomial>& v, const Monomial& m) {
  auto it = std::lower_bound(v.begin(), v.end(), m, RevLexLess{});
  if (it == v.end() || !(*it == m)) return std::nullopt;
  return static_cast<std::size_t>(it - v.begin());
}

void sort_unique(std::vector<Monomial>& v) {
  std::sort(v.begin(), v.end(), RevLexLess{});
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

TriangularRegion::TriangularRegion(int d, std::vector<Monomial> up, std::vector<Monomial> down)
    : d_(d), up_(std::move(up)), down_(std::move(down)) {
  if (d < 1) throw DomainError("region degree must be positive");
  for (const Monomial& m : up_) {
    if (m.degree() != d - 1) throw DomainError("up label " + m.to_string() + " has wrong degree");
  }
  for (const Monomial& m : down_) {
    if (m.degree() != d - 2) throw DomainError("down label " + m.to_string() + " has wrong degree");
  }
  sort_unique(up_);
  sort_unique(down_);
}

std::optional<std::size_t> TriangularRegion::up_index(const Monomial& m) const { return find_sorted(up_, m); }

std::optional<std::size_t> TriangularRegion::down_index(const Monomial& m) const {
  return find_sorted(down_, m);
}

std::vector<std::size_t> TriangularRegion::up_neighbors(std::size_t i) const {
  std::vector<std::size_t> out;
  for (Var v : kVars) {
    if (auto j = up_index(down_[i].times(v))) out.push_back(*j);
  }
  return out;
}

TriangularRegion TriangularRegion::without(std::span<const Monomial> ups,
                                           std::span<const Monomial> downs) const {
  auto keep = [](const std::vector<Monomial>& from, std::span<const Monomial> drop) {
    std::vector<Monomial> out;
    for (const Monomial& m : from) {
      if (std::find(drop.begin(), drop.end(), m) == drop.end()) out.push_back(m);
    }
    return out;
  };
  return TriangularRegion(d_, keep(up_, ups), keep(down_, downs));
}

TriangularRegion TriangularRegion::minus(const TriangularRegion& other) const {
  return without(other.up(), other.down());
}

TriangularRegion full_region(int d) { return build_region(MonomialIdeal{}, d); }

TriangularRegion build_region(const MonomialIdeal& ideal, int d) {
  std::vector<Monomial> up, down;
  for (const Monomial& m : monomials_of_degree(d - 1)) {
    if (!ideal.contains(m)) up.push_back(m);
  }
  for (const Monomial& m : monomials_of_degree(d - 2)) {
    if (!ideal.contains(m)) down.push_back(m);
  }
  return TriangularRegion(d, std::move(up), std::move(down));
}

bool punctures_overlap(const Monomial& g1, const Monomial& g2, int d) { return lcm(g1, g2).degree() < d; }

bool punctures_touch(const Monomial& g1, const Monomial& g2, int d) { return lcm(g1, g2).degree() == d; }

std::vector<bool> floating_closure(std::span<const Monomial> generators, int d) {
  const std::size_t n = generators.size();
  std::vector<bool> grounded(n, false);
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < n; ++i) {
    const Monomial& g = generators[i];
    if (g.x() == 0 || g.y() == 0 || g.z() == 0) {
      grounded[i] = true;
      queue.push_back(i);
    }
  }
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      if (grounded[j]) continue;
      if (lcm(generators[i], generators[j]).degree() <= d) {
        grounded[j] = true;
        queue.push_back(j);
      }
    }
  }
  std::vector<bool> floating(n);
  for (std::size_t i = 0; i < n; ++i) floating[i] = !grounded[i];
  return floating;
}

std::vector<Puncture> puncture_analysis(const MonomialIdeal& ideal, int d) {
  std::vector<Monomial> gens;
  for (const Monomial& g : ideal.gens()) {
    if (g.degree() <= d - 1) gens.push_back(g);
  }
  const std::vector<bool> floating = floating_closure(gens, d);
  std::vector<Puncture> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Puncture p;
    p.generator = gens[i];
    p.side_length = d - gens[i].degree();
    p.floating = floating[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j == i) continue;
      if (punctures_overlap(gens[i], gens[j], d)) p.overlap_partners.push_back(gens[j]);
      if (punctures_touch(gens[i], gens[j], d)) p.touch_partners.push_back(gens[j]);
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::string to_string(Heaviness h) {
  switch (h) {
    case Heaviness::down_heavy:
      return "down-heavy";
    case Heaviness::balanced:
      return "balanced";
    case Heaviness::up_heavy:
      return "up-heavy";
  }
  return "?";
}

Balance balance(const TriangularRegion& region) {
  Balance b;
  b.n_up = region.n_up();
  b.n_down = region.n_down();
  if (b.n_up > b.n_down) {
    b.kind = Heaviness::up_heavy;
    b.excess = b.n_up - b.n_down;
  } else if (b.n_down > b.n_up) {
    b.kind = Heaviness::down_heavy;
    b.excess = b.n_down - b.n_up;
  }
  return b;
}

TriangularRegion monomial_subregion(const TriangularRegion& region, const Monomial& m) {
  std::vector<Monomial> up, down;
  for (const Monomial& u : region.up()) {
    if (m.divides(u)) up.push_back(u);
  }
  for (const Monomial& n : region.down()) {
    if (m.divides(n)) down.push_back(n);
  }
  return TriangularRegion(region.d(), std::move(up), std::move(down));
}

namespace {

/// Hopcroft-Karp on the down/up adjacency graph. Vertices are visited in
/// reverse-lex order, so the returned matching is deterministic.
class BipartiteMatcher {
public:
  explicit BipartiteMatcher(const TriangularRegion& region)
      : adj_(region.n_down()),
        match_down_(region.n_down(), kNone),
        match_up_(region.n_up(), kNone),
        dist_(region.n_down()) {
    for (std::size_t i = 0; i < region.n_down(); ++i) adj_[i] = region.up_neighbors(i);
  }

  std::size_t run() {
    std::size_t size = 0;
    while (bfs()) {
      for (std::size_t i = 0; i < adj_.size(); ++i) {
        if (match_down_[i] == kNone && dfs(i)) ++size;
      }
    }
    return size;
  }

  const std::vector<std::size_t>& match_down() const { return match_down_; }

  /// Down vertices reachable by alternating paths from unmatched down vertices,
  /// and the up vertices they reach.
  std::pair<std::vector<std::size_t>, std::vector<std::size_t>> hall_violator() const {
    std::vector<bool> seen_down(adj_.size(), false), seen_up(match_up_.size(), false);
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < adj_.size(); ++i) {
      if (match_down_[i] == kNone) {
        seen_down[i] = true;
        queue.push_back(i);
        break;
      }
    }
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j : adj_[i]) {
        if (seen_up[j]) continue;
        seen_up[j] = true;
        const std::size_t k = match_up_[j];
        if (k != kNone && !seen_down[k]) {
          seen_down[k] = true;
          queue.push_back(k);
        }
      }
    }
    std::pair<std::vector<std::size_t>, std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < seen_down.size(); ++i) {
      if (seen_down[i]) out.first.push_back(i);
    }
    for (std::size_t j = 0; j < seen_up.size(); ++j) {
      if (seen_up[j]) out.second.push_back(j);
    }
    return out;
  }

private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

  bool bfs() {
    std::deque<std::size_t> queue;
    bool found = false;
    for (std::size_t i = 0; i < adj_.size(); ++i) {
      if (match_down_[i] == kNone) {
        dist_[i] = 0;
        queue.push_back(i);
      } else {
        dist_[i] = kInf;
      }
    }
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j : adj_[i]) {
        const std::size_t k = match_up_[j];
        if (k == kNone) {
          found = true;
        } else if (dist_[k] == kInf) {
          dist_[k] = dist_[i] + 1;
          queue.push_back(k);
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t i) {
    for (std::size_t j : adj_[i]) {
      const std::size_t k = match_up_[j];
      if (k == kNone || (dist_[k] == dist_[i] + 1 && dfs(k))) {
        match_down_[i] = j;
        match_up_[j] = i;
        return true;
      }
    }
    dist_[i] = kInf;
    return false;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_down_;
  std::vector<std::size_t> match_up_;
  std::vector<std::size_t> dist_;
};

}  // namespace

TileabilityCertificate is_tileable(const TriangularRegion& region) {
  TileabilityCertificate cert;
  if (region.n_up() != region.n_down()) return cert;
  BipartiteMatcher matcher(region);
  if (matcher.run() == region.n_down()) {
    cert.tileable = true;
    cert.witness = Tiling{matcher.match_down()};
    return cert;
  }
  auto [downs, ups] = matcher.hall_violator();
  for (std::size_t i : downs) cert.hall_violator.push_back(region.down()[i]);
  for (std::size_t j : ups) cert.hall_neighbourhood.push_back(region.up()[j]);
  return cert;
}

MinorStream::MinorStream(TriangularRegion region, std::vector<Monomial> candidates, std::size_t k,
                         bool remove_up)
    : region_(std::move(region)), candidates_(std::move(candidates)), k_(k), remove_up_(remove_up) {
  if (k_ > candidates_.size()) done_ = true;
}

void MinorStream::reset() {
  combo_.clear();
  started_ = false;
  done_ = k_ > candidates_.size();
}

std::optional<TriangularRegion> MinorStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    combo_.resize(k_);
    for (std::size_t i = 0; i < k_; ++i) combo_[i] = i;
  } else {
    // Advance to the next k-combination of {0..n-1} in lexicographic order.
    const std::size_t n = candidates_.size();
    std::size_t i = k_;
    while (i > 0 && combo_[i - 1] == n - k_ + (i - 1)) --i;
    if (i == 0) {
      done_ = true;
      return std::nullopt;
    }
    ++combo_[i - 1];
    for (std::size_t j = i; j < k_; ++j) combo_[j] = combo_[j - 1] + 1;
  }
  const std::vector<Monomial> drop = removed();
  if (remove_up_) return region_.without(drop, {});
  return region_.without({}, drop);
}

std::vector<Monomial> MinorStream::removed() const {
  std::vector<Monomial> out;
  for (std::size_t i : combo_) out.push_back(candidates_[i]);
  return out;
}

MinorStream maximal_minors(const TriangularRegion& region) {
  const Balance b = balance(region);
  if (b.kind == Heaviness::down_heavy) return MinorStream(region, region.down(), b.excess, false);
  return MinorStream(region, region.up(), b.excess, true);
}

std::vector<Monomial> a_vertex_ups(const TriangularRegion& region) {
  std::vector<Monomial> out;
  for (const Monomial& m : region.up()) {
    auto below = m.divided_by(kPathEdge);
    if (!below || !region.has_down(*below)) out.push_back(m);
  }
  return out;
}

std::vector<Monomial> e_vertex_downs(const TriangularRegion& region) {
  std::vector<Monomial> out;
  for (const Monomial& n : region.down()) {
    if (!region.has_up(n.times(kPathEdge))) out.push_back(n);
  }
  return out;
}

MinorStream restricted_maximal_minors(const TriangularRegion& region) {
  const Balance b = balance(region);
  if (b.kind == Heaviness::down_heavy) return MinorStream(region, e_vertex_downs(region), b.excess, false);
  return MinorStream(region, a_vertex_ups(region), b.excess, true);
}

Portions split_portions(const TriangularRegion& region, int alpha) {
  if (alpha < 0) throw DomainError("split row must be non-negative");
  Portions p;
  const Monomial xa(alpha, 0, 0);
  p.upper = alpha <= region.d() - 1 ? monomial_subregion(region, xa) : TriangularRegion(region.d(), {}, {});
  p.lower = region.minus(p.upper);
  return p;
}

MonomialIdeal merge_touching_punctures(const MonomialIdeal& ideal, int d) {
  MonomialIdeal current = ideal;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Monomial> gens;
    for (const Monomial& g : current.gens()) {
      if (g.degree() <= d - 1) gens.push_back(g);
    }
    for (std::size_t i = 0; i < gens.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < gens.size() && !changed; ++j) {
        const Monomial& g1 = gens[i];
        const Monomial& g2 = gens[j];
        if (lcm(g1, g2).degree() > d) continue;
        const Monomial cover = gcd(g1, g2);
        // The cover minus both punctures must lie inside T_d(I).
        bool inside = true;
        for (int k : {d - 1, d - 2}) {
          for (const Monomial& m : monomials_of_degree(k)) {
            if (!cover.divides(m) || g1.divides(m) || g2.divides(m)) continue;
            if (current.contains(m)) {
              inside = false;
              break;
            }
          }
          if (!inside) break;
        }
        if (!inside) continue;
        current = current.with(cover);
        changed = true;
      }
    }
  }
  return current;
}

}  // namespace lefschetz
