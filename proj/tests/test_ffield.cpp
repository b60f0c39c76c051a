#include <catch_amalgamated.hpp>

#include "flagdes/ffield.hpp"

using namespace flagdes;

TEST_CASE("field construction validates input") {
  CHECK_THROWS_AS(Field(4, 1), field_error);   // characteristic not prime
  CHECK_THROWS_AS(Field(1, 1), field_error);
  CHECK_THROWS_AS(Field(2, 0), field_error);   // zero extension degree
  CHECK_THROWS_AS(Field(2, 21), field_error);  // exceeds 2^20 bound
  CHECK_NOTHROW(Field(2, 20));
}

TEST_CASE("smallest irreducible modulus is deterministic") {
  // GF(2): modulus x (constant term 0 is irreducible in degree 1).
  CHECK(Field(2, 1).modulus() == std::vector<std::uint32_t>{0, 1});
  // GF(4): x^2 + x + 1 is the only irreducible quadratic over GF(2).
  CHECK(Field(2, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});
  // GF(9): x^2 + 1 (index 1) is the smallest irreducible quadratic over GF(3).
  CHECK(Field(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});
  // GF(8): x^3 + x + 1 beats x^3 + x^2 + 1 lexicographically.
  CHECK(Field(2, 3).modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
}

TEST_CASE("index round trip and element labels") {
  Field f(5, 2);
  for (std::uint64_t i = 0; i < f.order(); ++i) CHECK(f.index_of(f.from_index(i)) == i);
  CHECK(f.index_of(f.zero()) == 0);
  CHECK(f.index_of(f.one()) == 1);
  CHECK_THROWS_AS(f.from_index(25), field_error);
}

TEST_CASE("field axioms hold exhaustively in small fields") {
  for (auto [p, a] : {std::pair<std::uint64_t, std::uint32_t>{2, 2},
                      {3, 2},
                      {2, 3},
                      {7, 1},
                      {3, 4}}) {
    Field f(p, a);
    const std::uint64_t n = f.order();
    for (std::uint64_t i = 0; i < n; ++i) {
      auto x = f.from_index(i);
      CHECK(f.add(x, f.neg(x)) == f.zero());
      CHECK(f.mul(x, f.one()) == x);
      if (!f.is_zero(x)) CHECK(f.mul(x, f.inv(x)) == f.one());
      // Frobenius: x^{p^a} = x.
      CHECK(f.pow(x, n) == x);
      for (std::uint64_t j = 0; j < n; ++j) {
        auto y = f.from_index(j);
        CHECK(f.add(x, y) == f.add(y, x));
        CHECK(f.mul(x, y) == f.mul(y, x));
        for (std::uint64_t k = 0; k < n && n <= 16; ++k) {
          auto z = f.from_index(k);
          CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
          CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
        }
      }
    }
  }
}

TEST_CASE("multiplicative generator and element orders") {
  Field f9(3, 2);
  CHECK(f9.element_order(f9.generator()) == 8);
  // Every nonzero element's order divides 8 and the generator realizes it.
  for (std::uint64_t i = 1; i < 9; ++i) CHECK(8 % f9.element_order(f9.from_index(i)) == 0);
  Field f7(7, 1);
  CHECK(f7.element_order(f7.generator()) == 6);
  CHECK(f7.index_of(f7.generator()) == 3);  // 3 is the least primitive root mod 7
  CHECK_THROWS_AS(f7.element_order(f7.zero()), field_error);
}

TEST_CASE("inverse in prime field matches known value") {
  Field f(7, 1);
  CHECK(f.index_of(f.inv(f.from_index(3))) == 5);  // 3 * 5 = 15 = 1 (mod 7)
  CHECK_THROWS_AS(f.inv(f.zero()), field_error);
}

TEST_CASE("conjugation is the q-power field automorphism") {
  for (auto [p, a] : {std::pair<std::uint64_t, std::uint32_t>{2, 2},
                      {3, 2},
                      {2, 4},
                      {5, 2},
                      {7, 2},
                      {2, 6}}) {
    Field f(p, a);
    const std::uint64_t q = f.subfield_order();
    std::uint64_t fixed = 0;
    for (std::uint64_t i = 0; i < f.order(); ++i) {
      auto x = f.from_index(i);
      auto cx = f.conjugate(x);
      CHECK(cx == f.pow(x, q));
      CHECK(f.conjugate(cx) == x);  // involution
      if (cx == x) ++fixed;
      for (std::uint64_t j = 0; j < std::min<std::uint64_t>(f.order(), 16); ++j) {
        auto y = f.from_index(j);
        CHECK(f.conjugate(f.add(x, y)) == f.add(cx, f.conjugate(y)));
        CHECK(f.conjugate(f.mul(x, y)) == f.mul(cx, f.conjugate(y)));
      }
    }
    CHECK(fixed == q);  // the fixed field is exactly GF(q)
  }
  CHECK_THROWS_AS(Field(2, 3).conjugate(Field(2, 3).one()), field_error);
  CHECK_THROWS_AS(Field(2, 3).subfield_order(), field_error);
}

TEST_CASE("GF(4) arithmetic table") {
  Field f(2, 2);
  auto w = f.from_index(2);                 // the class of x
  CHECK(f.mul(w, w) == f.from_index(3));    // x^2 = x + 1
  CHECK(f.conjugate(w) == f.from_index(3));  // w^2
  CHECK(f.conjugate(f.one()) == f.one());
}

TEST_CASE("mixed-field operands are rejected") {
  Field f4(2, 2), f9(3, 2);
  CHECK_THROWS_AS(f4.add(f4.one(), f9.one()), field_error);
  CHECK_THROWS_AS(f9.mul(f4.zero(), f9.one()), field_error);
}
