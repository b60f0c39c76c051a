#pragma once

// Incidence structures: exact 2-design verification, the Hermitian-unital and
// Witt-Bose-Shrikhande constructions, base-block orbit development and search,
// flag-transitivity testing, and isomorphism invariants.

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagdes/ffield.hpp"
#include "flagdes/permgrp.hpp"
#include "flagdes/unitary.hpp"

namespace flagdes {

class design_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters (v, b, r, k, lambda) of a 2-design.
struct DesignParams {
  std::uint64_t v = 0, b = 0, r = 0, k = 0, lambda = 0;

  friend bool operator==(const DesignParams&, const DesignParams&) = default;

  bool identities_hold() const {
    return r * (k - 1) == lambda * (v - 1) && v * r == b * k;
  }
  bool nontrivial() const { return 2 < k && k + 1 < v; }
};

/// v points {0..v-1} plus uniform-size blocks, each sorted, the list sorted.
struct Design {
  std::uint32_t v = 0;
  std::vector<std::vector<std::uint32_t>> blocks;

  std::uint32_t block_size() const {
    return blocks.empty() ? 0 : static_cast<std::uint32_t>(blocks.front().size());
  }

  void canonicalize() {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
  }
};

/// Exhaustive 2-design verification: uniform block size, constant replication
/// number over all points, constant pair count over all C(v,2) pairs,
/// nontriviality 2 < k < v-1. Throws with a witness on any failure.
inline DesignParams verify_design(const Design& d) {
  if (d.v < 2 || d.blocks.empty()) throw design_error("design needs >= 2 points and >= 1 block");
  const std::uint32_t k = d.block_size();
  for (const auto& b : d.blocks) {
    if (b.size() != k)
      throw design_error("non-uniform block size: found " + std::to_string(b.size()) +
                         " vs " + std::to_string(k));
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] >= d.v) throw design_error("block point out of range");
      if (i > 0 && b[i] <= b[i - 1]) throw design_error("block not sorted strictly");
    }
  }
  std::vector<std::uint64_t> point_count(d.v, 0);
  std::vector<std::uint64_t> pair_count(static_cast<std::size_t>(d.v) * d.v, 0);
  for (const auto& b : d.blocks)
    for (std::size_t i = 0; i < b.size(); ++i) {
      ++point_count[b[i]];
      for (std::size_t j = i + 1; j < b.size(); ++j)
        ++pair_count[static_cast<std::size_t>(b[i]) * d.v + b[j]];
    }
  const std::uint64_t r = point_count[0];
  for (std::uint32_t p = 0; p < d.v; ++p)
    if (point_count[p] != r)
      throw design_error("replication number not constant: point " + std::to_string(p) +
                         " lies on " + std::to_string(point_count[p]) + " blocks, point 0 on " +
                         std::to_string(r));
  const std::uint64_t lambda = pair_count[1];
  for (std::uint32_t i = 0; i < d.v; ++i)
    for (std::uint32_t j = i + 1; j < d.v; ++j)
      if (pair_count[static_cast<std::size_t>(i) * d.v + j] != lambda)
        throw design_error("pair count not constant: pair {" + std::to_string(i) + "," +
                           std::to_string(j) + "} lies in " +
                           std::to_string(pair_count[static_cast<std::size_t>(i) * d.v + j]) +
                           " blocks, pair {0,1} in " + std::to_string(lambda));
  DesignParams p{d.v, d.blocks.size(), r, k, lambda};
  if (!p.nontrivial())
    throw design_error("trivial design: k = " + std::to_string(k) + ", v = " + std::to_string(d.v));
  if (!p.identities_hold()) throw design_error("parameter identities violated");  // unreachable
  return p;
}

/// The Hermitian unital 2-(q^3+1, q+1, 1): points are the isotropic projective
/// points of PG(2, q^2); blocks are the (q+1)-point sections of secant lines.
inline Design hermitian_unital_over(const Field& f) {
  auto pts = isotropic_projective_points(f);
  const std::uint64_t q = f.subfield_order();
  auto point_index = [&](const ProjectivePoint& p) -> std::optional<std::uint32_t> {
    auto it = std::lower_bound(pts.begin(), pts.end(), p,
                               [&](const ProjectivePoint& a, const ProjectivePoint& b) {
                                 for (int i = 0; i < 3; ++i) {
                                   auto ai = f.index_of(a.coords[i]), bi = f.index_of(b.coords[i]);
                                   if (ai != bi) return ai < bi;
                                 }
                                 return false;
                               });
    if (it == pts.end() || !(*it == p)) return std::nullopt;
    return static_cast<std::uint32_t>(it - pts.begin());
  };
  std::set<std::vector<std::uint32_t>> blocks;
  // The line through two isotropic points meets the unital in q+1 points:
  // span {u + t*w : t} plus w itself, intersected with the isotropic set.
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      std::vector<std::uint32_t> line;
      const Vec3& u = pts[i].coords;
      const Vec3& w = pts[j].coords;
      for (std::uint64_t t = 0; t < f.order(); ++t) {
        Vec3 x;
        FieldElement s = f.from_index(t);
        for (int c = 0; c < 3; ++c) x[c] = f.add(u[c], f.mul(s, w[c]));
        if (auto idx = point_index(normalize_point(f, x))) line.push_back(*idx);
      }
      line.push_back(static_cast<std::uint32_t>(j));  // w itself (t = infinity)
      std::sort(line.begin(), line.end());
      if (line.size() != q + 1)
        throw design_error("secant section has " + std::to_string(line.size()) +
                           " isotropic points; expected q+1");
      blocks.insert(std::move(line));
    }
  }
  Design d;
  d.v = static_cast<std::uint32_t>(pts.size());
  d.blocks.assign(blocks.begin(), blocks.end());
  return d;
}

inline Design hermitian_unital(std::uint64_t q) {
  if (q < 2 || q > 5) throw design_error("Hermitian unital supported for q in {2,3,4,5}");
  std::uint64_t p = (q == 4) ? 2 : q;
  std::uint32_t a = (q == 4) ? 2 : 1;
  Field f(p, 2 * a);
  return hermitian_unital_over(f);
}

/// Witt-Bose-Shrikhande space from PSL(2, 2^n): points are the q(q-1)/2
/// cyclic subgroups of order q+1 (each the rotation part of a unique dihedral
/// subgroup of order 2(q+1)); blocks are the q^2-1 involutions, a block being
/// the set of cyclic subgroups that the involution inverts. Also returns the
/// conjugation action of PSL(2,q) on the points.
struct WbsSpace {
  Design design;
  PermGroup point_action;
  PermGroup group;
};

inline WbsSpace witt_bose_shrikhande(std::uint32_t n) {
  if (n < 3 || n > 5) throw design_error("Witt-Bose-Shrikhande supported for 3 <= n <= 5");
  const std::uint64_t q = std::uint64_t{1} << n;
  PermGroup g = psl2_action(q);

  // Collect cyclic subgroups of order q+1, keyed by their full element sets.
  using Key = std::vector<std::vector<std::uint32_t>>;
  std::map<Key, std::uint32_t> point_of;
  std::vector<Permutation> rep_generator;  // one generator per point
  std::vector<std::vector<Permutation>> members;
  auto subgroup_key = [&](const Permutation& x) {
    Key key;
    Permutation e = x;
    while (!e.is_identity()) {
      key.push_back(e.images());
      e = e.then(x);
    }
    std::sort(key.begin(), key.end());
    return key;
  };
  g.for_each_element([&](const Permutation& e) {
    if (e.order() != q + 1) return;
    Key key = subgroup_key(e);
    if (point_of.emplace(key, static_cast<std::uint32_t>(rep_generator.size())).second) {
      rep_generator.push_back(e);
      std::vector<Permutation> mem;
      for (const auto& img : key) mem.emplace_back(img);
      members.push_back(std::move(mem));
    }
  });
  const std::uint64_t expected_points = q * (q - 1) / 2;
  if (rep_generator.size() != expected_points)
    throw design_error("cyclic subgroup count " + std::to_string(rep_generator.size()) +
                       " != q(q-1)/2 = " + std::to_string(expected_points));

  auto involutions = g.elements_of_order(2);
  if (involutions.size() != q * q - 1)
    throw design_error("involution count != q^2 - 1");

  std::set<std::vector<std::uint32_t>> blocks;
  for (const auto& t : involutions) {
    std::vector<std::uint32_t> blk;
    for (std::uint32_t pt = 0; pt < rep_generator.size(); ++pt)
      if (rep_generator[pt].conjugated_by(t) == rep_generator[pt].inverse()) blk.push_back(pt);
    blocks.insert(std::move(blk));
  }
  if (blocks.size() != q * q - 1)
    throw design_error("distinct involutions produced coinciding blocks");

  Design d;
  d.v = static_cast<std::uint32_t>(rep_generator.size());
  d.blocks.assign(blocks.begin(), blocks.end());

  // Conjugation action of g on the points.
  std::vector<Permutation> action;
  for (const auto& s : g.generators()) {
    std::vector<std::uint32_t> img(d.v);
    for (std::uint32_t pt = 0; pt < d.v; ++pt) {
      Key key;
      for (const auto& m : members[pt]) key.push_back(m.conjugated_by(s).images());
      std::sort(key.begin(), key.end());
      auto it = point_of.find(key);
      if (it == point_of.end()) throw design_error("conjugation left the point set");
      img[pt] = it->second;
    }
    action.emplace_back(std::move(img));
  }
  PermGroup pa(d.v, std::move(action));
  return WbsSpace{std::move(d), std::move(pa), std::move(g)};
}

namespace detail {

inline std::vector<std::uint32_t> set_image(const Permutation& g,
                                            const std::vector<std::uint32_t>& s) {
  std::vector<std::uint32_t> t(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) t[i] = g(s[i]);
  std::sort(t.begin(), t.end());
  return t;
}

struct SetOrbitResult {
  bool canonical = false;            // no lex-smaller set encountered
  bool lambda_ok = false;            // no point pair covered more than max_pair times
  std::set<std::vector<std::uint32_t>> orbit;
};

// Orbit of a point set under group generators, with two early exits: a
// lex-smaller orbit member (start is not the canonical representative) or a
// point pair covered more than max_pair times (development cannot be a
// 2-design with that lambda). max_pair = 0 disables the pair bound.
inline SetOrbitResult set_orbit(const PermGroup& g, const std::vector<std::uint32_t>& start,
                                std::uint64_t max_pair) {
  SetOrbitResult res;
  const std::uint32_t v = g.degree();
  std::vector<std::uint64_t> pair_count(max_pair ? static_cast<std::size_t>(v) * v : 0, 0);
  auto add_pairs = [&](const std::vector<std::uint32_t>& b) {
    if (!max_pair) return true;
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j)
        if (++pair_count[static_cast<std::size_t>(b[i]) * v + b[j]] > max_pair) return false;
    return true;
  };
  std::queue<std::vector<std::uint32_t>> todo;
  res.orbit.insert(start);
  if (!add_pairs(start)) return res;
  todo.push(start);
  while (!todo.empty()) {
    auto cur = std::move(todo.front());
    todo.pop();
    for (const auto& s : g.generators()) {
      auto img = set_image(s, cur);
      if (img < start) return res;  // not canonical
      if (res.orbit.insert(img).second) {
        if (!add_pairs(img)) return res;
        todo.push(img);
      }
    }
  }
  res.canonical = true;
  res.lambda_ok = true;
  return res;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (r > (std::uint64_t{1} << 62) / (n - i)) return std::uint64_t{1} << 62;
    r = r * (n - i) / (i + 1);
  }
  return r;
}

}  // namespace detail

/// Orbit development of a base block: blocks = the g-orbit of the block as a
/// set (deduplicated). The group is block-transitive by construction.
inline Design develop_base_block(const PermGroup& g, const std::vector<std::uint32_t>& block) {
  for (auto p : block)
    if (p >= g.degree()) throw design_error("base block point out of range");
  std::vector<std::uint32_t> start = block;
  std::sort(start.begin(), start.end());
  std::set<std::vector<std::uint32_t>> orbit;
  std::queue<std::vector<std::uint32_t>> todo;
  orbit.insert(start);
  todo.push(start);
  while (!todo.empty()) {
    auto cur = std::move(todo.front());
    todo.pop();
    for (const auto& s : g.generators()) {
      auto img = detail::set_image(s, cur);
      if (orbit.insert(img).second) todo.push(img);
    }
  }
  Design d;
  d.v = g.degree();
  d.blocks.assign(orbit.begin(), orbit.end());
  return d;
}

/// All 2-designs with block size k and pair count lambda obtainable as orbit
/// developments under the transitive group g, one per orbit of k-subsets
/// (canonical representative = lexicographically least in its orbit), keeping
/// only developments with gcd(r, lambda) = 1. Deterministic order.
inline std::vector<Design> find_base_blocks(const PermGroup& g, std::uint32_t k,
                                            std::uint64_t lambda) {
  const std::uint32_t v = g.degree();
  if (k < 3 || k >= v) throw design_error("block size must satisfy 3 <= k < v");
  if (!g.is_transitive()) throw design_error("base-block search needs a transitive group");
  if (detail::binomial(v, k) > 5'000'000) throw design_error("search space exceeds C(v,k) bound");

  std::vector<Design> found;
  // The canonical representative of any orbit contains point 0 (transitivity
  // moves some member onto 0, and sets containing 0 are lex-least).
  std::vector<std::uint32_t> sub(k);
  sub[0] = 0;
  // Enumerate k-subsets {0} u {sub[1] < ... < sub[k-1]} in lex order.
  for (std::uint32_t i = 1; i < k; ++i) sub[i] = i;
  while (true) {
    auto res = detail::set_orbit(g, sub, lambda);
    if (res.canonical && res.lambda_ok) {
      Design d;
      d.v = v;
      d.blocks.assign(res.orbit.begin(), res.orbit.end());
      try {
        DesignParams p = verify_design(d);
        if (p.lambda == lambda && std::gcd(p.r, p.lambda) == 1) found.push_back(std::move(d));
      } catch (const design_error&) {
        // development is not a 2-design; skip
      }
    }
    // next combination with sub[0] pinned to 0
    std::uint32_t i = k - 1;
    while (i >= 1 && sub[i] == v - k + i) --i;
    if (i == 0) break;
    ++sub[i];
    for (std::uint32_t j = i + 1; j < k; ++j) sub[j] = sub[j - 1] + 1;
  }
  return found;
}

/// Induced permutations of g's generators on d's blocks. Throws with a witness
/// if some generator does not preserve the block set.
inline std::vector<Permutation> block_permutations(const PermGroup& g, const Design& d) {
  if (g.degree() != d.v) throw design_error("group degree != design point count");
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  for (std::uint32_t i = 0; i < d.blocks.size(); ++i) index.emplace(d.blocks[i], i);
  std::vector<Permutation> out;
  for (std::size_t s = 0; s < g.generators().size(); ++s) {
    std::vector<std::uint32_t> img(d.blocks.size());
    for (std::uint32_t i = 0; i < d.blocks.size(); ++i) {
      auto moved = detail::set_image(g.generators()[s], d.blocks[i]);
      auto it = index.find(moved);
      if (it == index.end())
        throw design_error("generator " + std::to_string(s) + " maps block " +
                           std::to_string(i) + " outside the block set");
      img[i] = it->second;
    }
    out.emplace_back(std::move(img));
  }
  return out;
}

inline PermGroup block_action(const PermGroup& g, const Design& d) {
  return PermGroup(static_cast<std::uint32_t>(d.blocks.size()), block_permutations(g, d));
}

/// Flag-transitivity, computed two independent ways that must agree:
/// (a) one orbit on flags (point, block) under the combined action;
/// (b) block-transitivity plus a block stabilizer transitive on block points.
inline bool is_flag_transitive(const PermGroup& g, const Design& d) {
  auto bperms = block_permutations(g, d);
  const std::uint32_t v = d.v;
  const std::uint32_t b = static_cast<std::uint32_t>(d.blocks.size());

  // Route (a): union-find on flags, id = block * v + point.
  std::vector<std::uint32_t> parent(static_cast<std::size_t>(b) * v);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t s = 0; s < bperms.size(); ++s)
    for (std::uint32_t bi = 0; bi < b; ++bi)
      for (auto p : d.blocks[bi]) {
        std::uint32_t from = find(bi * v + p);
        std::uint32_t to = find(bperms[s](bi) * v + g.generators()[s](p));
        if (from != to) parent[from] = to;
      }
  std::set<std::uint32_t> roots;
  for (std::uint32_t bi = 0; bi < b; ++bi)
    for (auto p : d.blocks[bi]) roots.insert(find(bi * v + p));
  bool route_a = roots.size() == 1;

  // Route (b): combined point+block action; stabilizer of block 0 must move
  // its first point onto every point of the block, and blocks form one orbit.
  std::vector<Permutation> combined;
  for (std::size_t s = 0; s < bperms.size(); ++s) {
    std::vector<std::uint32_t> img(v + b);
    for (std::uint32_t p = 0; p < v; ++p) img[p] = g.generators()[s](p);
    for (std::uint32_t bi = 0; bi < b; ++bi) img[v + bi] = v + bperms[s](bi);
    combined.emplace_back(std::move(img));
  }
  PermGroup cg(v + b, std::move(combined));
  bool block_transitive = cg.orbit(v).size() == b;
  bool route_b = false;
  if (block_transitive) {
    PermGroup stab = cg.point_stabilizer(v);  // setwise stabilizer of block 0
    auto orb = stab.orbit(d.blocks[0][0]);
    route_b = std::includes(orb.begin(), orb.end(), d.blocks[0].begin(), d.blocks[0].end());
  }
  if (route_a != route_b)
    throw std::logic_error("flag-transitivity routes disagree");  // cross-check, must not happen
  return route_a;
}

/// Multiset of |B1 ^ B2| over unordered block pairs — an isomorphism invariant.
inline std::map<std::uint32_t, std::uint64_t> intersection_profile(const Design& d) {
  std::map<std::uint32_t, std::uint64_t> profile;
  for (std::size_t i = 0; i < d.blocks.size(); ++i)
    for (std::size_t j = i + 1; j < d.blocks.size(); ++j) {
      std::vector<std::uint32_t> tmp;
      std::set_intersection(d.blocks[i].begin(), d.blocks[i].end(), d.blocks[j].begin(),
                            d.blocks[j].end(), std::back_inserter(tmp));
      ++profile[static_cast<std::uint32_t>(tmp.size())];
    }
  return profile;
}

/// Number of O'Nan configurations: 4 distinct blocks pairwise meeting in one
/// point each, the 6 intersection points distinct. Classical unitals contain
/// none, which separates designs sharing all pairwise-intersection counts.
inline std::uint64_t onan_configurations(const Design& d) {
  const std::size_t nb = d.blocks.size();
  auto meet = [&](std::size_t i, std::size_t j) -> std::optional<std::uint32_t> {
    std::vector<std::uint32_t> tmp;
    std::set_intersection(d.blocks[i].begin(), d.blocks[i].end(), d.blocks[j].begin(),
                          d.blocks[j].end(), std::back_inserter(tmp));
    if (tmp.size() == 1) return tmp[0];
    return std::nullopt;
  };
  std::uint64_t count = 0;
  for (std::size_t a = 0; a < nb; ++a)
    for (std::size_t b = a + 1; b < nb; ++b) {
      auto pab = meet(a, b);
      if (!pab) continue;
      for (std::size_t c = b + 1; c < nb; ++c) {
        auto pac = meet(a, c), pbc = meet(b, c);
        if (!pac || !pbc) continue;
        if (*pac == *pab || *pbc == *pab || *pac == *pbc) continue;
        for (std::size_t e = c + 1; e < nb; ++e) {
          auto pae = meet(a, e), pbe = meet(b, e), pce = meet(c, e);
          if (!pae || !pbe || !pce) continue;
          std::set<std::uint32_t> six{*pab, *pac, *pbc, *pae, *pbe, *pce};
          if (six.size() == 6) ++count;
        }
      }
    }
  return count;
}

/// Backtracking isomorphism test for linear spaces (lambda = 1): searches for
/// a point bijection preserving collinearity of triples.
inline bool are_isomorphic(const Design& d1, const Design& d2) {
  if (d1.v != d2.v || d1.blocks.size() != d2.blocks.size() ||
      d1.block_size() != d2.block_size())
    return false;
  const std::uint32_t v = d1.v;
  auto line_table = [&](const Design& d) {
    std::vector<std::int32_t> line(static_cast<std::size_t>(v) * v, -1);
    for (std::uint32_t bi = 0; bi < d.blocks.size(); ++bi)
      for (std::size_t i = 0; i < d.blocks[bi].size(); ++i)
        for (std::size_t j = 0; j < d.blocks[bi].size(); ++j)
          if (i != j) {
            auto& cell = line[static_cast<std::size_t>(d.blocks[bi][i]) * v + d.blocks[bi][j]];
            if (cell != -1) throw design_error("isomorphism test requires lambda = 1");
            cell = static_cast<std::int32_t>(bi);
          }
    return line;
  };
  auto l1 = line_table(d1), l2 = line_table(d2);
  auto collinear = [&](const std::vector<std::int32_t>& lt, const Design& d, std::uint32_t a,
                       std::uint32_t b, std::uint32_t c) {
    std::int32_t ln = lt[static_cast<std::size_t>(a) * v + b];
    if (ln < 0) return false;
    const auto& blk = d.blocks[static_cast<std::size_t>(ln)];
    return std::binary_search(blk.begin(), blk.end(), c);
  };
  std::vector<std::int32_t> image(v, -1);
  std::vector<bool> used(v, false);
  auto consistent = [&](std::uint32_t m, std::uint32_t im) {
    for (std::uint32_t i = 0; i < m; ++i)
      for (std::uint32_t j = i + 1; j < m; ++j)
        if (collinear(l1, d1, i, j, m) !=
            collinear(l2, d2, static_cast<std::uint32_t>(image[i]),
                      static_cast<std::uint32_t>(image[j]), im))
          return false;
    return true;
  };
  // depth-first search over point images
  std::uint32_t m = 0;
  std::vector<std::uint32_t> next(v, 0);
  while (true) {
    if (m == v) return true;
    bool placed = false;
    for (std::uint32_t im = next[m]; im < v; ++im) {
      if (used[im] || !consistent(m, im)) continue;
      image[m] = static_cast<std::int32_t>(im);
      used[im] = true;
      next[m] = im + 1;
      ++m;
      if (m < v) next[m] = 0;
      placed = true;
      break;
    }
    if (placed) continue;
    if (m == 0) return false;
    --m;
    used[static_cast<std::size_t>(image[m])] = false;
    image[m] = -1;
  }
}

/// One line of the small-design table: the socle action, search parameters,
/// and expected invariants.
struct SmallDesignCase {
  PermGroup action;
  std::uint32_t k;
  std::uint64_t lambda;
  DesignParams expected;
  std::uint64_t stabilizer_order;
};

/// The six sporadic flag-transitive designs with almost-simple unitary socle,
/// by line number 1..6: each is reproduced by base-block search over the
/// stated primitive action.
inline SmallDesignCase small_design_case(int line) {
  switch (line) {
    case 1:
      return {psl2_action(5), 3, 2, {6, 10, 5, 3, 2}, 10};
    case 2: {
      PermGroup g = psl2_action(7);
      auto h = find_subgroup_of_order(g, 24);
      if (!h) throw design_error("no order-24 subgroup found in PSL(2,7)");
      return {g.coset_action(*h), 3, 1, {7, 7, 3, 3, 1}, 24};
    }
    case 3:
      return {psl2_action(7), 4, 3, {8, 14, 7, 4, 3}, 21};
    case 4:
      return {psl2_action(9), 6, 5, {10, 15, 9, 6, 5}, 36};
    case 5: {
      PermGroup g = psl2_action(11);
      auto h = find_subgroup_of_order(g, 60);
      if (!h) throw design_error("no order-60 subgroup found in PSL(2,11)");
      return {g.coset_action(*h), 5, 2, {11, 11, 5, 5, 2}, 60};
    }
    case 6: {
      WbsSpace w = witt_bose_shrikhande(3);
      return {std::move(w.point_action), 7, 2, {28, 36, 9, 7, 2}, 18};
    }
    default:
      throw design_error("line must be 1..6");
  }
}

}  // namespace flagdes
