#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "dessin/error.hpp"
#include "dessin/perm.hpp"

using namespace dessin;

namespace {

Permutation random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<Point> p(n);
  std::iota(p.begin(), p.end(), Point{0});
  std::shuffle(p.begin(), p.end(), rng);
  return Permutation::from_images(std::move(p));
}

std::size_t parse_error_offset(std::string_view text, std::size_t n) {
  try {
    parse_cycles(text, n);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("expected a parse error for ", text);
  return 0;
}

}  // namespace

TEST_CASE("cycle notation round trip") {
  const Permutation p = parse_cycles("(1,2,3,4)(5,6,7,8)", 8);
  CHECK(to_cycle_string(p) == "(1,2,3,4)(5,6,7,8)");
  CHECK(to_cycle_string(parse_cycles("(3,1,2)", 3)) == "(1,2,3)");
  CHECK(to_cycle_string(parse_cycles(" ( 4 , 2 ) ( 1, 3 ) ", 4)) == "(1,3)(2,4)");
  CHECK(to_cycle_string(Permutation(5)) == "()");
  CHECK(parse_cycles("()", 3).is_identity());
  CHECK(parse_cycles("", 3).is_identity());
  CHECK(parse_cycles("(2)", 3).is_identity());

  std::mt19937 rng(1);
  for (int rep = 0; rep < 50; ++rep) {
    const Permutation r = random_perm(1 + rep % 13, rng);
    CHECK(parse_cycles(to_cycle_string(r), r.degree()) == r);
  }
}

TEST_CASE("cycle parse errors carry position and reason") {
  CHECK(parse_error_offset("(1,2,9)", 8) == 5);
  CHECK(parse_error_offset("(1,2)(2,3)", 8) == 6);
  CHECK(parse_error_offset("(1,1)", 8) == 3);
  CHECK(parse_error_offset("(1,2", 8) == 4);
  CHECK(parse_error_offset("(1,,2)", 8) == 3);
  CHECK(parse_error_offset("(1,2,)", 8) == 5);
  CHECK(parse_error_offset("1,2", 8) == 0);
  CHECK(parse_error_offset("(0,1)", 8) == 1);
  CHECK_THROWS_AS(parse_cycles("(1,x)", 8), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,2) junk", 8), ParseError);
}

TEST_CASE("composition is left to right") {
  // Left-to-right composition gives this face permutation for the genus-2 example.
  const Permutation s0 = parse_cycles("(1,2,3,4)(5,6,7,8)", 8);
  const Permutation s1 = parse_cycles("(1,5,2,6)(3,7,4,8)", 8);
  CHECK(to_cycle_string(inverse(compose(s0, s1))) == "(1,5,4,6)(2,8,3,7)");
  const Permutation a = parse_cycles("(1,2)", 3);
  const Permutation b = parse_cycles("(2,3)", 3);
  CHECK(compose(a, b)(0) == 2);  // 1 -> 2 -> 3
}

TEST_CASE("group laws on random permutations") {
  std::mt19937 rng(2);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 1 + rep % 40;
    const Permutation p = random_perm(n, rng), q = random_perm(n, rng), r = random_perm(n, rng);
    CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
    CHECK(compose(p, inverse(p)).is_identity());
    CHECK(compose(inverse(p), p).is_identity());
    CHECK(power(p, 0).is_identity());
    CHECK(power(p, 1) == p);
    CHECK(power(p, -1) == inverse(p));
    CHECK(power(p, 5) == compose(power(p, 2), power(p, 3)));
    const BigInt ord = order(p);
    CHECK(power(p, static_cast<std::int64_t>(ord)).is_identity());
    const CycleType t = cycle_type(p);
    CHECK(std::accumulate(t.begin(), t.end(), std::size_t{0}) == n);
    CHECK(std::is_sorted(t.begin(), t.end()));
    CHECK(p.fixed_point_count() == static_cast<std::size_t>(std::count(t.begin(), t.end(), 1)));
    CHECK(is_even(compose(p, q)) == (is_even(p) == is_even(q)));
    Permutation out(n);
    compose_into(p, q, out);
    CHECK(out == compose(p, q));
  }
}

TEST_CASE("order, parity and centralizers") {
  CHECK(order(parse_cycles("(1,2,3)(4,5)", 5)) == 6);
  CHECK(is_even(parse_cycles("(1,2,3)", 3)));
  CHECK_FALSE(is_even(parse_cycles("(1,2)", 3)));
  CHECK(lcm_of({4, 6, 10}) == 60);
  // |C(g)| = n! / |class|; class of type 2,2 in S4 has 3 elements.
  CHECK(centralizer_order({2, 2}) == 8);
  CHECK(centralizer_order({1, 1, 4}) == 8);
  CHECK(centralizer_order({1, 1, 1}) == 6);
  // Orders beyond 64 bits stay exact.
  std::vector<std::int64_t> images;
  std::int64_t next = 1;
  for (int len : {47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97}) {
    for (int k = 0; k < len; ++k) images.push_back(next + (k + 1) % len);
    next += len;
  }
  CHECK(order(Permutation::from_one_based(images)).str() == "176229459935520350869");
}

TEST_CASE("constructors validate") {
  CHECK_THROWS_AS(Permutation::from_images({0, 0}), Error);
  CHECK_THROWS_AS(Permutation::from_images({0, 2}), Error);
  const std::int64_t bad[] = {1, 3};
  CHECK_THROWS_AS(Permutation::from_one_based(bad), Error);
  CHECK_THROWS_AS(compose(Permutation(2), Permutation(3)), Error);
}

TEST_CASE("orbits") {
  const Permutation g[] = {parse_cycles("(1,2)", 5), parse_cycles("(4,5)", 5)};
  const auto o = orbits(g, 5);
  REQUIRE(o.size() == 3);
  CHECK(o[0] == std::vector<Point>{0, 1});
  CHECK(o[1] == std::vector<Point>{2});
  CHECK(o[2] == std::vector<Point>{3, 4});
}
