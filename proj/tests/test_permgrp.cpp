#include <catch_amalgamated.hpp>

#include <numeric>

#include "flagdes/designlib.hpp"
#include "flagdes/permgrp.hpp"
#include "flagdes/unitary.hpp"

using namespace flagdes;

TEST_CASE("permutation basics") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), perm_error);
  CHECK_THROWS_AS(Permutation({0, 3}), perm_error);
  Permutation a({1, 2, 0, 3});  // 3-cycle (0 1 2)
  Permutation b({0, 1, 3, 2});  // transposition (2 3)
  // Fixed composition order: (a.then(b))(x) = b(a(x)).
  CHECK(a.then(b)(0) == 1);
  CHECK(a.then(b)(1) == 3);
  CHECK(b.then(a)(1) == 2);
  CHECK(a.inverse().then(a).is_identity());
  CHECK(a.order() == 3);
  CHECK(b.order() == 2);
  CHECK(a.then(b).order() == 4);  // (0 1 3 2)
  CHECK(Permutation::identity(4).is_identity());
  CHECK(a.smallest_moved_point() == 0);
  CHECK(b.smallest_moved_point() == 2);
  CHECK_THROWS_AS(Permutation::identity(3).smallest_moved_point(), perm_error);
  // Conjugation: fixed as g^-1 * this * g.
  Permutation g({1, 0, 2, 3});
  CHECK(b.conjugated_by(g) == b);       // disjoint support
  CHECK(a.conjugated_by(g).order() == 3);
}

TEST_CASE("orbits") {
  PermGroup trivial(5, {});
  CHECK(trivial.orbit(3) == std::vector<std::uint32_t>{3});
  CHECK(trivial.order() == 1);
  PermGroup c3(5, {Permutation({1, 2, 0, 3, 4})});
  CHECK(c3.orbit(0) == std::vector<std::uint32_t>{0, 1, 2});
  CHECK(c3.orbit(4) == std::vector<std::uint32_t>{4});
  CHECK_FALSE(c3.is_transitive());
  CHECK_THROWS_AS(c3.orbit(5), perm_error);
}

TEST_CASE("orders via the stabilizer chain") {
  PermGroup s4(4, {Permutation({1, 0, 2, 3}), Permutation({1, 2, 3, 0})});
  CHECK(s4.order() == 24);
  PermGroup s6(6, {Permutation({1, 0, 2, 3, 4, 5}), Permutation({1, 2, 3, 4, 5, 0})});
  CHECK(s6.order() == 720);
  CHECK(psl2_action(7).order() == 168);
  CHECK(psl2_action(8).order() == 504);
  CHECK(psl2_action(9).order() == 360);
}

TEST_CASE("orbit-stabilizer is exact") {
  for (auto g : {psl2_action(5), psl2_action(7), psl2_action(8)}) {
    for (std::uint32_t p = 0; p < g.degree(); ++p)
      CHECK(g.order() == g.orbit(p).size() * g.point_stabilizer(p).order());
  }
}

TEST_CASE("membership testing") {
  PermGroup g = psl2_action(7);
  const auto& gens = g.generators();
  for (const auto& a : gens)
    for (const auto& b : gens) {
      CHECK(g.contains(a.then(b)));
      CHECK(g.contains(a.inverse()));
      for (const auto& c : gens) CHECK(g.contains(a.then(b).then(c)));
    }
  // An odd permutation (transposition) is not in PSL(2,7).
  std::vector<std::uint32_t> img(8);
  std::iota(img.begin(), img.end(), 0u);
  std::swap(img[0], img[1]);
  CHECK_FALSE(g.contains(Permutation(img)));
  // Degree mismatch is never a member.
  CHECK_FALSE(g.contains(Permutation::identity(5)));
}

TEST_CASE("primitivity and minimal blocks") {
  // C4 acting regularly is imprimitive with witness block {0, 2}.
  PermGroup c4(4, {Permutation({1, 2, 3, 0})});
  auto res = c4.primitivity();
  CHECK_FALSE(res.primitive);
  CHECK(res.witness_block == std::vector<std::uint32_t>{0, 2});
  CHECK_FALSE(c4.is_primitive());

  PermGroup s4(4, {Permutation({1, 0, 2, 3}), Permutation({1, 2, 3, 0})});
  CHECK(s4.is_primitive());
  CHECK(psl2_action(8).is_primitive());
  CHECK(witt_bose_shrikhande(3).point_action.is_primitive());

  PermGroup c3(5, {Permutation({1, 2, 0, 3, 4})});
  CHECK_THROWS_AS(c3.primitivity(), perm_error);  // not transitive
}

TEST_CASE("subdegrees") {
  PermGroup s3(3, {Permutation({1, 0, 2}), Permutation({1, 2, 0})});
  CHECK(s3.subdegrees(0) == std::vector<std::uint64_t>{1, 2});
  // 2-transitive actions have subdegrees {1, n-1}.
  CHECK(psl2_action(7).subdegrees(0) == std::vector<std::uint64_t>{1, 7});
  CHECK(psu3_action(3).subdegrees(0) == std::vector<std::uint64_t>{1, 27});
  // The Witt-Bose-Shrikhande action of PSL(2,8) on 28 points has rank 4 with
  // all nontrivial subdegrees equal to 9 = |D_18| / 2.
  CHECK(witt_bose_shrikhande(3).point_action.subdegrees(0) ==
        std::vector<std::uint64_t>{1, 9, 9, 9});
}

TEST_CASE("subgroup relation and coset actions") {
  PermGroup c6(6, {Permutation({1, 2, 3, 4, 5, 0})});
  PermGroup c3(6, {Permutation({2, 3, 4, 5, 0, 1})});
  CHECK(c6.is_subgroup(c3));
  CHECK_FALSE(c3.is_subgroup(c6));
  PermGroup act = c6.coset_action(c3);
  CHECK(act.degree() == 2);
  CHECK(act.order() == 2);
  CHECK_THROWS_AS(c3.coset_action(c6), perm_error);

  // PSL(2,7) on the cosets of Sym(4): degree 7, 2-transitive.
  PermGroup g = psl2_action(7);
  auto h = find_subgroup_of_order(g, 24);
  REQUIRE(h.has_value());
  CHECK(h->order() == 24);
  PermGroup on7 = g.coset_action(*h);
  CHECK(on7.degree() == 7);
  CHECK(on7.order() == 168);
  CHECK(on7.subdegrees(0) == std::vector<std::uint64_t>{1, 6});

  // PSL(2,11) on the cosets of Alt(5): degree 11.
  PermGroup g11 = psl2_action(11);
  auto h60 = find_subgroup_of_order(g11, 60);
  REQUIRE(h60.has_value());
  PermGroup on11 = g11.coset_action(*h60);
  CHECK(on11.degree() == 11);
  CHECK(on11.order() == 660);
  CHECK(on11.is_primitive());
}

TEST_CASE("element enumeration") {
  PermGroup s3(3, {Permutation({1, 0, 2}), Permutation({1, 2, 0})});
  auto elems = s3.elements();
  CHECK(elems.size() == 6);
  std::sort(elems.begin(), elems.end());
  CHECK(std::adjacent_find(elems.begin(), elems.end()) == elems.end());  // distinct
  CHECK(s3.elements_of_order(2).size() == 3);
  CHECK(s3.elements_of_order(3).size() == 2);

  PermGroup g = psl2_action(8);
  CHECK(g.elements_of_order(2).size() == 63);
  CHECK(g.elements_of_order(9).size() == 168);
  CHECK(g.elements_of_order(3).size() == 56);
  CHECK(g.elements_of_order(7).size() == 216);
}

TEST_CASE("dihedral subgroup search") {
  // D_18 = N(C_9) inside PSL(2,8): the point stabilizer of the
  // Witt-Bose-Shrikhande action.
  auto d18 = find_dihedral_subgroup(psl2_action(8), 9);
  REQUIRE(d18.has_value());
  CHECK(d18->order() == 18);
  CHECK_FALSE(find_dihedral_subgroup(psl2_action(8), 5).has_value());
}
