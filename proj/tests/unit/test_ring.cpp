#include <doctest.h>

#include <set>

#include "idealmv/error.hpp"
#include "idealmv/explicit_ideal.hpp"
#include "idealmv/ring.hpp"
#include "../support/oracle.hpp"

using namespace idealmv;

namespace {

std::vector<std::pair<std::uint64_t, std::uint32_t>> factor_list(const RingSpec& s) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (const auto& f : s.factors()) out.emplace_back(f.prime, f.exponent);
  return out;
}

std::string residues(const RingElement& x) { return x.to_string(); }

// Every ring with at most 64 elements, listed by its moduli.
const std::vector<std::string>& small_rings() {
  static const std::vector<std::string> r = {
      "Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "Z7", "Z8", "Z2xZ4", "Z2xZ2xZ2", "Z9", "Z3xZ3",
      "Z10", "Z12", "Z2xZ6", "Z16", "Z2xZ8", "Z4xZ4", "Z2xZ2xZ4", "Z2xZ2xZ2xZ2", "Z18",
      "Z3xZ6", "Z27", "Z3xZ9", "Z3xZ3xZ3", "Z25", "Z5xZ5", "Z30", "Z32", "Z2xZ16",
      "Z4xZ8", "Z2xZ2xZ8", "Z2xZ4xZ4", "Z2xZ2xZ2xZ4", "Z2xZ2xZ2xZ2xZ2", "Z36", "Z6xZ6",
      "Z49", "Z7xZ7", "Z60", "Z64", "Z2xZ2xZ2xZ2xZ2xZ2", "Z8xZ8", "Z4xZ4xZ4"};
  return r;
}

}  // namespace

TEST_CASE("parse_ring_spec splits composite moduli into prime powers") {
  CHECK(factor_list(parse_ring_spec("Z4")) == std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 2}});
  CHECK(factor_list(parse_ring_spec("Z6")) ==
        std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 1}, {3, 1}});
  CHECK(factor_list(parse_ring_spec("Z2xZ4")) ==
        std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 1}, {2, 2}});
  CHECK(factor_list(parse_ring_spec("2^3 x 3^1")) ==
        std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 3}, {3, 1}});
  CHECK(factor_list(parse_ring_spec("Z360")) ==
        std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 3}, {3, 2}, {5, 1}});
}

TEST_CASE("ring specs are canonical") {
  CHECK(parse_ring_spec("Z4xZ2") == parse_ring_spec("Z2xZ4"));
  CHECK(parse_ring_spec("Z6") == parse_ring_spec("Z3xZ2"));
  CHECK_FALSE(parse_ring_spec("Z4") == parse_ring_spec("Z2xZ2"));
  CHECK(parse_ring_spec("Z12").to_string() == "Z4 x Z3");
  const RingSpec s = parse_ring_spec("Z2xZ4");
  CHECK(s.cardinality() == 8);
  CHECK(s.ideal_count() == 6);
  CHECK(parse_ring_spec("Z30").is_reduced());
  CHECK_FALSE(parse_ring_spec("Z12").is_reduced());
  CHECK(parse_ring_spec("Z12").is_cyclic());
  CHECK_FALSE(parse_ring_spec("Z2xZ4").is_cyclic());
}

TEST_CASE("parse_ring_spec rejects malformed input") {
  CHECK_THROWS_AS(parse_ring_spec(""), ParseError);
  CHECK_THROWS_AS(parse_ring_spec("Z1"), ParseError);
  CHECK_THROWS_AS(parse_ring_spec("Z0"), ParseError);
  CHECK_THROWS_AS(parse_ring_spec("Zfour"), ParseError);
  CHECK_THROWS_AS(parse_ring_spec("Z4x"), ParseError);
  CHECK_THROWS_AS(parse_ring_spec("4^2"), ParseError);
  CHECK_THROWS_AS(parse_ring_spec("Q4"), ParseError);
  CHECK_THROWS_AS(RingSpec({}), ParseError);
}

TEST_CASE("enumerate_elements is mixed radix with the last factor fastest") {
  const auto z4 = enumerate_elements(parse_ring_spec("Z4"));
  REQUIRE(z4.size() == 4);
  CHECK(residues(z4[0]) == "(0)");
  CHECK(residues(z4[3]) == "(3)");
  const auto z22 = enumerate_elements(parse_ring_spec("Z2xZ2"));
  std::vector<std::string> got;
  for (const auto& x : z22) got.push_back(x.to_string());
  CHECK(got == std::vector<std::string>{"(0,0)", "(0,1)", "(1,0)", "(1,1)"});
  CHECK(enumerate_elements(parse_ring_spec("Z2xZ4")).size() == 8);
  CHECK_THROWS_AS(enumerate_elements(parse_ring_spec("Z512")), BoundExceeded);
}

TEST_CASE("enumerate_elements is a stable bijection onto residue tuples") {
  for (const auto& name : small_rings()) {
    const RingSpec s = parse_ring_spec(name);
    const auto a = enumerate_elements(s);
    const auto b = enumerate_elements(s);
    CHECK(a == b);
    std::set<std::vector<std::uint64_t>> seen;
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].index() == i);
      seen.insert({a[i].residues().begin(), a[i].residues().end()});
    }
    CHECK(seen.size() == s.cardinality());
  }
}

TEST_CASE("ring_arith is componentwise modular") {
  const RingSpec z23 = parse_ring_spec("Z2xZ3");
  const RingElement x(z23, {1, 2});
  CHECK((x + x).to_string() == "(0,1)");
  const RingSpec z4 = parse_ring_spec("Z4");
  CHECK((RingElement(z4, {2}) * RingElement(z4, {2})) == zero_element(z4));
  CHECK((-RingElement(z4, {1})).to_string() == "(3)");
  CHECK_THROWS_AS(x + RingElement(z4, {1}), SpecMismatch);
  CHECK_THROWS_AS(RingElement(z4, {4}), SpecMismatch);
  CHECK_THROWS_AS(RingElement(z4, {1, 1}), SpecMismatch);
}

TEST_CASE("idempotents of Z6 match a brute-force scan over integers mod 6") {
  const RingSpec z6 = parse_ring_spec("Z6");
  std::set<int> expected;
  for (int v = 0; v < 6; ++v) {
    if (v * v % 6 == v) expected.insert(v);
  }
  CHECK(expected == std::set<int>{0, 1, 3, 4});
  std::set<int> got;
  for (int v = 0; v < 6; ++v) {
    const RingElement x = element_from_integer(z6, v);
    if (x * x == x) got.insert(v);
  }
  CHECK(got == expected);
}

TEST_CASE("ring axioms hold exhaustively on small rings") {
  for (const auto& name : small_rings()) {
    const RingSpec s = parse_ring_spec(name);
    const auto el = enumerate_elements(s);
    const RingElement zero = zero_element(s);
    const RingElement one = one_element(s);
    bool ok = true;
    for (const auto& x : el) {
      ok = ok && x + zero == x && x * one == x && x + (-x) == zero;
      for (const auto& y : el) {
        ok = ok && x + y == y + x && x * y == y * x;
        if (s.cardinality() <= 32) {
          for (const auto& z : el) {
            ok = ok && (x + y) + z == x + (y + z) && (x * y) * z == x * (y * z) &&
                 x * (y + z) == x * y + x * z;
          }
        }
      }
    }
    CHECK_MESSAGE(ok, name);
  }
}

TEST_CASE("principal ideals are literal closures") {
  const RingSpec z4 = parse_ring_spec("Z4");
  CHECK(principal_ideal(z4, element_from_integer(z4, 2)).to_string() == "{(0),(2)}");
  const RingSpec z6 = parse_ring_spec("Z6");
  const ExplicitIdeal three = principal_ideal(z6, element_from_integer(z6, 3));
  // 3 in Z6 is (1,0) in Z2 x Z3, 0 is (0,0).
  CHECK(three.cardinality() == 2);
  CHECK(three.contains(element_from_integer(z6, 3)));
  CHECK(three.contains(zero_element(z6)));
  for (const auto& name : small_rings()) {
    const RingSpec s = parse_ring_spec(name);
    CHECK(principal_ideal(s, one_element(s)).cardinality() == s.cardinality());
  }
}

TEST_CASE("principal ideals agree with an independent integer closure") {
  for (const auto& name : {"Z4", "Z6", "Z12", "Z2xZ4", "Z3xZ9", "Z2xZ2xZ2", "Z36"}) {
    const RingSpec s = parse_ring_spec(name);
    oracle::Ring R;
    for (const auto& f : s.factors()) R.moduli.push_back(static_cast<int>(f.modulus()));
    for (const auto& x : enumerate_elements(s)) {
      const oracle::Set expect = oracle::ideal_generated(R, {static_cast<int>(x.index())});
      const ExplicitIdeal got = principal_ideal(s, x);
      oracle::Set got_set;
      for (const auto& m : got.members()) got_set.push_back(static_cast<int>(m.index()));
      CHECK_MESSAGE(got_set == expect, name << " <" << x << ">");
    }
  }
}

TEST_CASE("an idempotent generates an ideal coprime to its annihilator") {
  for (const auto& name : small_rings()) {
    const RingSpec s = parse_ring_spec(name);
    const ExplicitIdeal whole = principal_ideal(s, one_element(s));
    for (const auto& x : enumerate_elements(s)) {
      if (!(x * x == x)) continue;
      const ExplicitIdeal I = principal_ideal(s, x);
      const ExplicitIdeal ann = explicit_op(IdealOp::ann, I, I);
      CHECK_MESSAGE(explicit_op(IdealOp::sum, I, ann) == whole, name << " " << x);
    }
  }
}
