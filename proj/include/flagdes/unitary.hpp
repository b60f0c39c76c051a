#pragma once

// Hermitian geometry over GF(q^2) and explicit group actions: the antidiagonal
// Hermitian form, isotropic projective points, SU(3,q) generators with their
// induced projective permutation action, and the Mobius action of
// PSL(2,q) (isomorphic to PSU(2,q)) on the projective line.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagdes/ffield.hpp"
#include "flagdes/permgrp.hpp"

namespace flagdes {

class unitary_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// 3x3 matrix over GF(q^2), row-major, acting on column vectors.
struct Mat3 {
  std::array<FieldElement, 9> e;

  const FieldElement& at(int r, int c) const { return e[3 * r + c]; }
  FieldElement& at(int r, int c) { return e[3 * r + c]; }
};

using Vec3 = std::array<FieldElement, 3>;

/// A point of PG(2, q^2): coordinates normalized so the first nonzero entry
/// is 1, making equality coordinate-wise.
struct ProjectivePoint {
  Vec3 coords;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
  friend auto operator<=>(const ProjectivePoint&, const ProjectivePoint&) = default;
};

/// h(u, v) = sum_i u_i * conj(v_{n+1-i}): the Hermitian form with antidiagonal
/// Gram matrix. Conjugate-symmetric, linear in u, semilinear in v.
inline FieldElement hermitian_form(const Field& f, const Vec3& u, const Vec3& v) {
  FieldElement s = f.zero();
  for (int i = 0; i < 3; ++i) s = f.add(s, f.mul(u[i], f.conjugate(v[2 - i])));
  return s;
}

inline ProjectivePoint normalize_point(const Field& f, Vec3 v) {
  for (int i = 0; i < 3; ++i) {
    if (!f.is_zero(v[i])) {
      FieldElement s = f.inv(v[i]);
      for (int j = 0; j < 3; ++j) v[j] = f.mul(v[j], s);
      return {v};
    }
  }
  throw unitary_error("zero vector has no projective point");
}

/// All q^3 + 1 isotropic points of PG(2, q^2) under the antidiagonal form,
/// sorted by the radix encoding of their coordinate index triples.
inline std::vector<ProjectivePoint> isotropic_projective_points(const Field& f) {
  if (f.extension_degree() % 2 != 0)
    throw unitary_error("Hermitian geometry needs a field of square order");
  const std::uint64_t Q = f.order();
  std::vector<ProjectivePoint> pts;
  // Canonical representatives of PG(2, Q): (1,y,z), (0,1,z), (0,0,1).
  auto consider = [&](Vec3 v) {
    if (f.is_zero(hermitian_form(f, v, v))) pts.push_back({std::move(v)});
  };
  consider({f.zero(), f.zero(), f.one()});
  for (std::uint64_t z = 0; z < Q; ++z)
    consider({f.zero(), f.one(), f.from_index(z)});
  for (std::uint64_t y = 0; y < Q; ++y)
    for (std::uint64_t z = 0; z < Q; ++z)
      consider({f.one(), f.from_index(y), f.from_index(z)});
  std::sort(pts.begin(), pts.end(), [&](const ProjectivePoint& a, const ProjectivePoint& b) {
    for (int i = 0; i < 3; ++i) {
      auto ai = f.index_of(a.coords[i]), bi = f.index_of(b.coords[i]);
      if (ai != bi) return ai < bi;
    }
    return false;
  });
  return pts;
}

inline Vec3 apply_matrix(const Field& f, const Mat3& m, const Vec3& v) {
  Vec3 r{f.zero(), f.zero(), f.zero()};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i] = f.add(r[i], f.mul(m.at(i, j), v[j]));
  return r;
}

inline FieldElement determinant3(const Field& f, const Mat3& m) {
  auto term = [&](int a, int b, int c) {
    return f.mul(m.at(0, a), f.mul(m.at(1, b), m.at(2, c)));
  };
  FieldElement d = term(0, 1, 2);
  d = f.add(d, term(1, 2, 0));
  d = f.add(d, term(2, 0, 1));
  d = f.sub(d, term(0, 2, 1));
  d = f.sub(d, term(1, 0, 2));
  d = f.sub(d, term(2, 1, 0));
  return d;
}

/// Checks that m preserves the form on all basis pairs and has determinant 1.
inline void check_special_unitary(const Field& f, const Mat3& m) {
  if (determinant3(f, m) != f.one()) throw unitary_error("matrix determinant is not 1");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Vec3 ei{f.zero(), f.zero(), f.zero()}, ej{f.zero(), f.zero(), f.zero()};
      ei[i] = f.one();
      ej[j] = f.one();
      FieldElement lhs = hermitian_form(f, apply_matrix(f, m, ei), apply_matrix(f, m, ej));
      if (lhs != hermitian_form(f, ei, ej))
        throw unitary_error("matrix does not preserve the Hermitian form");
    }
}

/// Generators of SU(3,q) over GF(q^2): unipotent root elements
/// [[1,a,b],[0,1,-a^q],[0,0,1]] with b + b^q = -a^{q+1}, taken over a basis of
/// a-values (plus a = 0 with a nonzero trace-zero b), a Weyl reflection, and a
/// diagonal torus generator diag(g, g^{q-1}, g^{-q}).
inline std::vector<Mat3> su3_generators(const Field& f) {
  if (f.extension_degree() % 2 != 0)
    throw unitary_error("SU(3,q) needs a field of square order q^2");
  const std::uint64_t q = f.subfield_order();
  const FieldElement z = f.zero(), o = f.one();

  auto solve_b = [&](const FieldElement& a) -> FieldElement {
    // Smallest-index b with b + b^q = -a^{q+1}; exists since the trace map
    // onto GF(q) is surjective.
    FieldElement target = f.neg(f.mul(a, f.conjugate(a)));
    for (std::uint64_t i = 0; i < f.order(); ++i) {
      FieldElement b = f.from_index(i);
      if (f.add(b, f.conjugate(b)) == target) return b;
    }
    throw std::logic_error("trace equation has no solution");  // unreachable
  };
  auto unipotent = [&](const FieldElement& a) {
    FieldElement b = solve_b(a);
    Mat3 m{{o, a, b, z, o, f.neg(f.conjugate(a)), z, z, o}};
    return m;
  };

  std::vector<Mat3> gens;
  // a over the polynomial basis of GF(q^2) spans the root group modulo center.
  for (std::uint32_t i = 0; i < f.extension_degree(); ++i) {
    std::uint64_t idx = 1;
    for (std::uint32_t k = 0; k < i; ++k) idx *= f.characteristic();
    gens.push_back(unipotent(f.from_index(idx)));
  }
  // a = 0, b a nonzero trace-zero element: the center of the root group.
  for (std::uint64_t i = 1; i < f.order(); ++i) {
    FieldElement b = f.from_index(i);
    if (f.is_zero(f.add(b, f.conjugate(b)))) {
      Mat3 m{{o, z, b, z, o, z, z, z, o}};
      gens.push_back(m);
      break;
    }
  }
  // Weyl element swapping the two isotropic basis directions.
  Mat3 w{{z, z, o, z, f.neg(o), z, o, z, z}};
  gens.push_back(w);
  // Torus generator from a multiplicative generator g of GF(q^2)*.
  FieldElement g = f.generator();
  Mat3 d{{g, z, z, z, f.pow(g, q - 1), z, z, z, f.pow(g, f.order() - 1 - q)}};
  gens.push_back(d);

  for (const auto& m : gens) check_special_unitary(f, m);
  return gens;
}

/// Permutation action of matrix generators on a listed, sorted point set.
inline PermGroup projective_action(const Field& f, const std::vector<Mat3>& gens,
                                   const std::vector<ProjectivePoint>& pts) {
  auto point_index = [&](const ProjectivePoint& p) -> std::uint32_t {
    auto it = std::lower_bound(
        pts.begin(), pts.end(), p,
        [&](const ProjectivePoint& a, const ProjectivePoint& b) {
          for (int i = 0; i < 3; ++i) {
            auto ai = f.index_of(a.coords[i]), bi = f.index_of(b.coords[i]);
            if (ai != bi) return ai < bi;
          }
          return false;
        });
    if (it == pts.end() || !(*it == p))
      throw unitary_error("generator moves a point outside the point set");
    return static_cast<std::uint32_t>(it - pts.begin());
  };
  std::vector<Permutation> perms;
  for (const auto& m : gens) {
    std::vector<std::uint32_t> img(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
      img[i] = point_index(normalize_point(f, apply_matrix(f, m, pts[i].coords)));
    perms.emplace_back(std::move(img));
  }
  return PermGroup(static_cast<std::uint32_t>(pts.size()), std::move(perms));
}

inline std::uint64_t psu3_order(std::uint64_t q) {
  return q * q * q * (q * q - 1) * (q * q * q + 1) / std::gcd<std::uint64_t>(3, q + 1);
}

inline std::uint64_t psl2_order(std::uint64_t q) {
  return q * (q * q - 1) / std::gcd<std::uint64_t>(2, q - 1);
}

/// PSU(3,q) as the induced permutation group of SU(3,q) on the q^3 + 1
/// isotropic points. Aborts unless the closure order matches the closed-form
/// |PSU(3,q)| exactly.
inline PermGroup psu3_action(std::uint64_t p, std::uint32_t a) {
  Field f(p, 2 * a);
  std::uint64_t q = f.subfield_order();
  if (q > 8) throw unitary_error("SU(3,q) explicit action supported for q <= 8");
  auto pts = isotropic_projective_points(f);
  if (pts.size() != q * q * q + 1)
    throw unitary_error("isotropic point count mismatch: expected q^3+1");
  PermGroup g = projective_action(f, su3_generators(f), pts);
  if (g.order() != psu3_order(q))
    throw unitary_error("induced group order " + std::to_string(g.order()) +
                        " does not match |PSU(3," + std::to_string(q) + ")| = " +
                        std::to_string(psu3_order(q)));
  return g;
}

inline PermGroup psu3_action(std::uint64_t q) {
  // Factor q as p^a.
  for (std::uint64_t p = 2; p <= q; ++p) {
    if (!detail::is_prime_u64(p) || q % p != 0) continue;
    std::uint32_t a = 0;
    std::uint64_t t = q;
    while (t % p == 0) {
      t /= p;
      ++a;
    }
    if (t != 1) break;
    return psu3_action(p, a);
  }
  throw unitary_error("q must be a prime power");
}

/// PSL(2,q) acting on the q+1 points of the projective line by Mobius maps.
/// Point i < q is the field element with index i; point q is infinity.
/// Generators: x -> x + b over a basis, x -> g^2 x, and x -> -1/x; together
/// a Borel subgroup plus a reflection, which generate since Borel is maximal.
inline PermGroup psl2_action(std::uint64_t q) {
  if (q < 2 || q > 32) throw unitary_error("PSL(2,q) action supported for 2 <= q <= 32");
  std::uint64_t p = 0;
  std::uint32_t a = 0;
  for (std::uint64_t c = 2; c <= q; ++c)
    if (detail::is_prime_u64(c) && q % c == 0) {
      p = c;
      std::uint64_t t = q;
      while (t % p == 0) {
        t /= p;
        ++a;
      }
      if (t != 1) throw unitary_error("q must be a prime power");
      break;
    }
  Field f(p, a);
  const std::uint32_t inf = static_cast<std::uint32_t>(q);

  auto mobius = [&](auto&& fn) {
    std::vector<std::uint32_t> img(q + 1);
    for (std::uint32_t i = 0; i <= q; ++i) img[i] = fn(i);
    return Permutation(std::move(img));
  };
  std::vector<Permutation> gens;
  for (std::uint32_t i = 0; i < a; ++i) {
    std::uint64_t idx = 1;
    for (std::uint32_t k = 0; k < i; ++k) idx *= p;
    FieldElement b = f.from_index(idx);
    gens.push_back(mobius([&](std::uint32_t x) -> std::uint32_t {
      if (x == inf) return inf;
      return static_cast<std::uint32_t>(f.index_of(f.add(f.from_index(x), b)));
    }));
  }
  FieldElement g2 = f.mul(f.generator(), f.generator());
  gens.push_back(mobius([&](std::uint32_t x) -> std::uint32_t {
    if (x == inf) return inf;
    return static_cast<std::uint32_t>(f.index_of(f.mul(f.from_index(x), g2)));
  }));
  gens.push_back(mobius([&](std::uint32_t x) -> std::uint32_t {
    if (x == inf) return 0;
    FieldElement e = f.from_index(x);
    if (f.is_zero(e)) return inf;
    return static_cast<std::uint32_t>(f.index_of(f.neg(f.inv(e))));
  }));
  PermGroup grp(static_cast<std::uint32_t>(q + 1), std::move(gens));
  if (grp.order() != psl2_order(q))
    throw unitary_error("Mobius group order " + std::to_string(grp.order()) +
                        " does not match |PSL(2," + std::to_string(q) + ")|");
  return grp;
}

}  // namespace flagdes
