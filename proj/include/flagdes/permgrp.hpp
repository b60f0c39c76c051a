#pragma once

// Permutation-group engine: orbits, a deterministic Schreier-Sims stabilizer
// chain, point stabilizers, coset actions, primitivity via minimal block
// systems, subdegrees, and exhaustive element enumeration for small groups.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace flagdes {

class perm_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An immutable bijection on {0..n-1}. Composition order is fixed project-wide
/// as "apply left, then right": (a.then(b))(x) == b(a(x)).
class Permutation {
 public:
  explicit Permutation(std::vector<std::uint32_t> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (auto v : img_) {
      if (v >= img_.size() || seen[v]) throw perm_error("image vector is not a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(std::uint32_t n) {
    std::vector<std::uint32_t> img(n);
    std::iota(img.begin(), img.end(), 0u);
    return Permutation(std::move(img));
  }

  std::uint32_t degree() const { return static_cast<std::uint32_t>(img_.size()); }
  std::uint32_t operator()(std::uint32_t x) const { return img_[x]; }
  const std::vector<std::uint32_t>& images() const { return img_; }

  bool is_identity() const {
    for (std::uint32_t i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  Permutation then(const Permutation& next) const {
    if (next.degree() != degree()) throw perm_error("degree mismatch in composition");
    std::vector<std::uint32_t> img(degree());
    for (std::uint32_t i = 0; i < degree(); ++i) img[i] = next.img_[img_[i]];
    Permutation r(PrivateTag{});
    r.img_ = std::move(img);
    return r;
  }

  Permutation inverse() const {
    std::vector<std::uint32_t> img(degree());
    for (std::uint32_t i = 0; i < degree(); ++i) img[img_[i]] = i;
    Permutation r(PrivateTag{});
    r.img_ = std::move(img);
    return r;
  }

  /// Conjugate by g: g^-1 * this * g (in apply-left-then-right order).
  Permutation conjugated_by(const Permutation& g) const {
    return g.inverse().then(*this).then(g);
  }

  /// Element order: lcm of cycle lengths.
  std::uint64_t order() const {
    std::vector<bool> seen(degree(), false);
    std::uint64_t ord = 1;
    for (std::uint32_t i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (std::uint32_t j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  std::uint32_t smallest_moved_point() const {
    for (std::uint32_t i = 0; i < degree(); ++i)
      if (img_[i] != i) return i;
    throw perm_error("identity moves no point");
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.img_ <=> b.img_;
  }

 private:
  struct PrivateTag {};
  explicit Permutation(PrivateTag) {}
  std::vector<std::uint32_t> img_;
};

namespace detail {

/// Deterministic Schreier-Sims stabilizer chain. Base points are the forced
/// first point (if any) followed by the smallest moved point of each residue.
/// Strong generators are stored globally with their dropout level: a residue
/// dropped at level j fixes the first j base points, so it takes part in the
/// orbits of every level i <= j.
struct StabChain {
  struct Level {
    std::uint32_t beta;
    std::vector<std::int32_t> pos;      // point -> orbit position, -1 outside
    std::vector<std::uint32_t> orbit;   // BFS order, only ever appended to
    std::vector<Permutation> reps;      // reps[i] maps beta -> orbit[i]
    std::size_t done_orbit = 0;         // Schreier closure watermarks
    std::size_t done_sgens = 0;
  };

  std::uint32_t degree = 0;
  std::vector<Level> levels;
  std::vector<Permutation> sgens;       // strong generators
  std::vector<std::size_t> drop;        // dropout level of each strong generator

  StabChain(std::uint32_t n, const std::vector<Permutation>& gens,
            std::optional<std::uint32_t> first_base = std::nullopt)
      : degree(n) {
    if (first_base) {
      if (*first_base >= n) throw perm_error("base point out of range");
      new_level(*first_base);
    }
    for (const auto& g : gens) {
      if (g.degree() != n) throw perm_error("generator degree mismatch");
      add_residue(g, 0);
    }
    close();
  }

  /// Strong generators fixing the first `lvl` base points.
  std::vector<Permutation> stabilizer_generators(std::size_t lvl) const {
    std::vector<Permutation> out;
    for (std::size_t t = 0; t < sgens.size(); ++t)
      if (drop[t] >= lvl) out.push_back(sgens[t]);
    return out;
  }

  std::uint64_t order() const {
    std::uint64_t o = 1;
    for (const auto& lv : levels) o *= lv.orbit.size();
    return o;
  }

  // Sift g through levels[from..]; returns the residue and the level index at
  // which sifting stopped (levels.size() when fully sifted).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const {
    for (std::size_t i = from; i < levels.size(); ++i) {
      const auto& lv = levels[i];
      std::uint32_t pt = g(lv.beta);
      if (pt == lv.beta) continue;
      if (lv.pos[pt] < 0) return {std::move(g), i};
      g = g.then(lv.reps[lv.pos[pt]].inverse());
    }
    return {std::move(g), levels.size()};
  }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree) return false;
    auto [res, at] = sift(g, 0);
    return at == levels.size() && res.is_identity();
  }

  /// Applies fn to every group element, deterministically.
  template <typename Fn>
  void for_each_element(Fn&& fn) const {
    walk(levels.size(), Permutation::identity(degree), fn);
  }

 private:
  template <typename Fn>
  void walk(std::size_t lvl, const Permutation& prefix, Fn& fn) const {
    if (lvl == 0) {
      fn(prefix);
      return;
    }
    // Sifting factors every element uniquely as h.then(u) with u a rep of
    // level lvl-1 and h in the deeper stabilizer, so the level-0 rep is the
    // last factor applied.
    for (const auto& u : levels[lvl - 1].reps) walk(lvl - 1, prefix.then(u), fn);
  }

  void new_level(std::uint32_t beta) {
    Level lv;
    lv.beta = beta;
    lv.pos.assign(degree, -1);
    lv.pos[beta] = 0;
    lv.orbit = {beta};
    lv.reps = {Permutation::identity(degree)};
    levels.push_back(std::move(lv));
  }

  // Extends the orbit of level `lvl` under all eligible strong generators.
  // Existing orbit points keep their transversal representatives.
  void extend_orbit(std::size_t lvl) {
    Level& lv = levels[lvl];
    for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
      for (std::size_t t = 0; t < sgens.size(); ++t) {
        if (drop[t] < lvl) continue;
        std::uint32_t np = sgens[t](lv.orbit[i]);
        if (lv.pos[np] < 0) {
          lv.pos[np] = static_cast<std::int32_t>(lv.orbit.size());
          lv.orbit.push_back(np);
          lv.reps.push_back(lv.reps[i].then(sgens[t]));
        }
      }
    }
  }

  // Sifts g (known to fix the first `from` base points); stores a nontrivial
  // residue as a strong generator. Returns whether anything was added.
  bool add_residue(const Permutation& g, std::size_t from) {
    auto [res, at] = sift(g, from);
    if (res.is_identity()) return false;
    if (auto it = std::find(sgens.begin(), sgens.end(), res); it != sgens.end()) {
      // Known residue; deepen its dropout level if this sift proves more.
      std::size_t t = static_cast<std::size_t>(it - sgens.begin());
      if (drop[t] >= at) return false;
      drop[t] = at;
      return true;
    }
    if (at == levels.size()) new_level(res.smallest_moved_point());
    sgens.push_back(std::move(res));
    drop.push_back(at);
    return true;
  }

  // Fixpoint: every Schreier generator of every level must sift to identity.
  // Watermarks avoid reprocessing (orbit point, strong generator) pairs, which
  // is sound because orbits only grow and representatives never change.
  void close() {
    bool progress = true;
    while (progress) {
      progress = false;
      // Full pass over all levels: extending every orbit each pass guarantees
      // termination (each added residue enlarges its level's orbit next pass).
      for (std::size_t i = 0; i < levels.size(); ++i) {
        extend_orbit(i);
        const std::size_t n_orbit = levels[i].orbit.size();
        const std::size_t n_sgens = sgens.size();
        for (std::size_t oi = 0; oi < n_orbit; ++oi) {
          for (std::size_t t = 0; t < n_sgens; ++t) {
            if (drop[t] < i) continue;
            if (oi < levels[i].done_orbit && t < levels[i].done_sgens) continue;
            const Level& lv = levels[i];
            std::uint32_t img = sgens[t](lv.orbit[oi]);
            Permutation schreier =
                lv.reps[oi].then(sgens[t]).then(lv.reps[lv.pos[img]].inverse());
            if (add_residue(schreier, i + 1)) progress = true;
          }
        }
        levels[i].done_orbit = n_orbit;
        levels[i].done_sgens = n_sgens;
      }
    }
  }
};

}  // namespace detail

/// A permutation group given by generators, with a lazily built, cached
/// stabilizer chain. Immutable after construction.
class PermGroup {
 public:
  PermGroup(std::uint32_t degree, std::vector<Permutation> generators)
      : degree_(degree), gens_(std::move(generators)) {
    for (const auto& g : gens_)
      if (g.degree() != degree_) throw perm_error("generator degree mismatch");
    // Drop identity generators and duplicates, preserving first occurrence.
    std::vector<Permutation> kept;
    for (auto& g : gens_)
      if (!g.is_identity() && std::find(kept.begin(), kept.end(), g) == kept.end())
        kept.push_back(std::move(g));
    gens_ = std::move(kept);
  }

  std::uint32_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  std::vector<std::uint32_t> orbit(std::uint32_t point) const {
    if (point >= degree_) throw perm_error("point out of range");
    std::vector<bool> in(degree_, false);
    std::vector<std::uint32_t> orb{point};
    in[point] = true;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (const auto& g : gens_) {
        std::uint32_t np = g(orb[i]);
        if (!in[np]) {
          in[np] = true;
          orb.push_back(np);
        }
      }
    std::sort(orb.begin(), orb.end());
    return orb;
  }

  std::uint64_t order() const { return chain().order(); }

  bool contains(const Permutation& g) const { return chain().contains(g); }

  bool is_transitive() const {
    return degree_ > 0 && orbit(0).size() == degree_;
  }

  /// Schreier generators of the stabilizer of `point`, from a chain whose
  /// first base point is `point`.
  PermGroup point_stabilizer(std::uint32_t point) const {
    if (point >= degree_) throw perm_error("point out of range");
    detail::StabChain ch(degree_, gens_, point);
    return PermGroup(degree_, ch.stabilizer_generators(1));
  }

  /// Minimal block containing {0, delta}: union-find closure under generators.
  std::vector<std::uint32_t> minimal_block(std::uint32_t delta) const {
    std::vector<std::uint32_t> parent(degree_);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::queue<std::pair<std::uint32_t, std::uint32_t>> todo;
    parent[find(delta)] = find(0);
    todo.emplace(0, delta);
    while (!todo.empty()) {
      auto [a, b] = todo.front();
      todo.pop();
      for (const auto& g : gens_) {
        std::uint32_t ga = find(g(a)), gb = find(g(b));
        if (ga != gb) {
          parent[gb] = ga;
          todo.emplace(g(a), g(b));
        }
      }
    }
    std::uint32_t root = find(0);
    std::vector<std::uint32_t> block;
    for (std::uint32_t i = 0; i < degree_; ++i)
      if (find(i) == root) block.push_back(i);
    return block;
  }

  struct PrimitivityResult {
    bool primitive;
    std::vector<std::uint32_t> witness_block;  // nontrivial block when imprimitive
  };

  PrimitivityResult primitivity() const {
    if (!is_transitive()) throw perm_error("primitivity requires a transitive group");
    if (degree_ < 2) throw perm_error("primitivity requires degree >= 2");
    for (std::uint32_t delta = 1; delta < degree_; ++delta) {
      auto block = minimal_block(delta);
      if (block.size() > 1 && block.size() < degree_) return {false, std::move(block)};
    }
    return {true, {}};
  }

  bool is_primitive() const { return primitivity().primitive; }

  /// Orbit lengths of the stabilizer of `base` on all points; sums to degree.
  std::vector<std::uint64_t> subdegrees(std::uint32_t base) const {
    if (!is_transitive()) throw perm_error("subdegrees require a transitive group");
    PermGroup stab = point_stabilizer(base);
    std::vector<bool> seen(degree_, false);
    std::vector<std::uint64_t> lengths;
    for (std::uint32_t p = 0; p < degree_; ++p) {
      if (seen[p]) continue;
      auto orb = stab.orbit(p);
      for (auto x : orb) seen[x] = true;
      lengths.push_back(orb.size());
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
  }

  bool is_subgroup(const PermGroup& h) const {
    if (h.degree() != degree_) return false;
    for (const auto& g : h.generators())
      if (!contains(g)) return false;
    return true;
  }

  /// Action on the right cosets of h in *this; degree |this|/|h|. Coset 0 is
  /// the coset of the identity.
  PermGroup coset_action(const PermGroup& h) const {
    if (!is_subgroup(h)) throw perm_error("coset action requires a subgroup");
    std::vector<Permutation> reps{Permutation::identity(degree_)};
    auto coset_index = [&](const Permutation& x) -> std::optional<std::size_t> {
      for (std::size_t i = 0; i < reps.size(); ++i)
        if (h.contains(x.then(reps[i].inverse()))) return i;  // H x == H r_i
      return std::nullopt;
    };
    // BFS over cosets; edges[s][i] = image of coset i under generator s.
    std::vector<std::vector<std::uint32_t>> edges(gens_.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t s = 0; s < gens_.size(); ++s) {
        Permutation moved = reps[i].then(gens_[s]);
        auto j = coset_index(moved);
        if (!j) {
          j = reps.size();
          reps.push_back(std::move(moved));
          for (auto& e : edges) e.reserve(reps.size());
        }
        edges[s].resize(std::max(edges[s].size(), i + 1));
        edges[s][i] = static_cast<std::uint32_t>(*j);
      }
    }
    const std::uint32_t index = static_cast<std::uint32_t>(reps.size());
    std::vector<Permutation> action;
    for (std::size_t s = 0; s < gens_.size(); ++s) {
      std::vector<std::uint32_t> img(index);
      for (std::uint32_t i = 0; i < index; ++i) img[i] = edges[s][i];
      action.emplace_back(std::move(img));
    }
    return PermGroup(index, std::move(action));
  }

  static constexpr std::uint64_t kEnumerationBound = 1'000'000;

  template <typename Fn>
  void for_each_element(Fn&& fn) const {
    if (order() > kEnumerationBound)
      throw perm_error("group too large for exhaustive enumeration");
    chain().for_each_element(std::forward<Fn>(fn));
  }

  std::vector<Permutation> elements() const {
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(order()));
    for_each_element([&](const Permutation& g) { out.push_back(g); });
    return out;
  }

  /// All elements of exact order m, in deterministic enumeration order.
  std::vector<Permutation> elements_of_order(std::uint64_t m) const {
    std::vector<Permutation> out;
    for_each_element([&](const Permutation& g) {
      if (g.order() == m) out.push_back(g);
    });
    return out;
  }

  const detail::StabChain& chain() const {
    if (!chain_) chain_ = std::make_shared<detail::StabChain>(degree_, gens_);
    return *chain_;
  }

 private:
  std::uint32_t degree_;
  std::vector<Permutation> gens_;
  // Lazily built and shared across copies; the chain is immutable once built.
  mutable std::shared_ptr<const detail::StabChain> chain_;
};

/// Closure of a set of permutations as a PermGroup (the chain is the closure).
inline PermGroup generated_group(std::uint32_t degree, std::vector<Permutation> gens) {
  return PermGroup(degree, std::move(gens));
}

/// First subgroup of the given order generated by a pair of elements, scanning
/// element pairs in enumeration order. Only intended for |g| <= 10^6 with a
/// generating pair of orders dividing `target` (all subgroups needed here --
/// Sym4, Alt5 -- are 2-generated).
inline std::optional<PermGroup> find_subgroup_of_order(const PermGroup& g,
                                                       std::uint64_t target) {
  std::vector<Permutation> cands;
  g.for_each_element([&](const Permutation& e) {
    if (!e.is_identity() && target % e.order() == 0) cands.push_back(e);
  });
  for (std::size_t i = 0; i < cands.size(); ++i) {
    for (std::size_t j = i; j < cands.size(); ++j) {
      if (target % cands[i].then(cands[j]).order() != 0) continue;
      PermGroup sub(g.degree(), {cands[i], cands[j]});
      if (sub.order() == target) return sub;
    }
  }
  return std::nullopt;
}

/// Dihedral subgroup of order 2c built from the first order-c element and an
/// involution inverting it.
inline std::optional<PermGroup> find_dihedral_subgroup(const PermGroup& g, std::uint64_t c) {
  std::optional<Permutation> rot;
  std::vector<Permutation> invols;
  g.for_each_element([&](const Permutation& e) {
    std::uint64_t o = e.order();
    if (o == c && !rot) rot = e;
    if (o == 2) invols.push_back(e);
  });
  if (!rot) return std::nullopt;
  Permutation inv_rot = rot->inverse();
  for (const auto& t : invols) {
    if (rot->conjugated_by(t) == inv_rot) {
      PermGroup sub(g.degree(), {*rot, t});
      if (sub.order() == 2 * c) return sub;
    }
  }
  return std::nullopt;
}

}  // namespace flagdes
