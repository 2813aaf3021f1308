#include <doctest.h>

#include <numeric>

#include "dessin/construct.hpp"
#include "dessin/dessin.hpp"
#include "dessin/error.hpp"
#include "dessin/group.hpp"
#include "dessin/zorient.hpp"
#include "oracles.hpp"

using namespace dessin;

TEST_CASE("from_pair validates") {
  CHECK_THROWS_AS(Dessin::from_pair(Permutation(2), Permutation(3)), Error);
  try {
    Dessin::from_pair(parse_cycles("(1,2)", 4), parse_cycles("(3,4)", 4));
    FAIL("expected NotTransitiveError");
  } catch (const NotTransitiveError& e) {
    CHECK(e.kind() == ErrorKind::NotTransitive);
    REQUIRE(e.orbits().size() == 2);
    CHECK(e.orbits()[0] == std::vector<std::size_t>{1, 2});
    CHECK(e.orbits()[1] == std::vector<std::size_t>{3, 4});
  }
  CHECK_THROWS_AS(Dessin::from_pair(Permutation(0), Permutation(0)), Error);
  CHECK_NOTHROW(Dessin::from_pair(Permutation(1), Permutation(1)));
}

TEST_CASE("genus-2 example: classical invariants") {
  const auto [d, twin] = genus_two_pair();
  const Passport p = passport(d);
  CHECK(p.white == CycleType{4, 4});
  CHECK(p.black == CycleType{4, 4});
  CHECK(p.face == CycleType{4, 4});
  CHECK(p.genus == 2);
  CHECK(p.type_triple == std::array<BigInt, 3>{4, 4, 4});
  CHECK(is_uniform(p));
  CHECK(to_cycle_string(d.sigma_infinity()) == "(1,5,4,6)(2,8,3,7)");
  CHECK(monofacial_edges(d) == std::vector<Point>{0, 2, 5, 7});
  CHECK(monofacial_edges(twin).empty());
  CHECK(passport(twin).genus == 2);
}

TEST_CASE("face rule matches an independent face labelling") {
  std::size_t checked = 0;
  enumerate_transitive_pairs(4, [&](const Dessin& d) {
    const auto face = oracle::face_index(d);
    std::vector<Point> expected;
    for (Point i = 0; i < d.degree(); ++i)
      if (face[i] == face[d.sigma1()(i)]) expected.push_back(i);
    CHECK(monofacial_edges(d) == expected);
    const auto fs = faces(d);
    CHECK(fs.size() == passport(d).face.size());
    std::size_t covered = 0;
    for (const auto& f : fs) {
      covered += f.size();
      CHECK(f.front() == *std::min_element(f.begin(), f.end()));
      for (std::size_t k = 0; k < f.size(); ++k) CHECK(d.sigma_infinity()(f[k]) == f[(k + 1) % f.size()]);
    }
    CHECK(covered == d.degree());
    ++checked;
  });
  CHECK(checked > 0);
}

TEST_CASE("twists cycle the passport and have period three") {
  enumerate_transitive_pairs(4, [](const Dessin& d) {
    const Passport p = passport(d);
    const Passport q = passport(twist(d));
    CHECK(q.white == p.black);
    CHECK(q.black == p.face);
    CHECK(q.face == p.white);
    CHECK(q.genus == p.genus);
    CHECK(twisted(d, 3) == d);
    CHECK(twisted(d, -1) == twisted(d, 2));
    CHECK(color_transpose(color_transpose(d)) == d);
    const Passport c = passport(color_transpose(d));
    CHECK(c.white == p.black);
    CHECK(c.black == p.white);
    CHECK(c.genus == p.genus);
  });
}

TEST_CASE("genus formula") {
  CHECK(genus_from_counts(2, 1, 1, 2) == 0);
  CHECK(genus_from_counts(8, 2, 2, 2) == 2);
  CHECK_THROWS_AS(genus_from_counts(3, 1, 1, 2), Error);
  enumerate_transitive_pairs(5, [](const Dessin& d) { CHECK(passport(d).genus >= 0); });
}

TEST_CASE("automorphism order against an exhaustive scan") {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    enumerate_transitive_pairs(n, [&](const Dessin& d) {
      const std::size_t expected = oracle::automorphisms_by_scan(d);
      CHECK(automorphism_order(d) == expected);
      CHECK(has_transitive_automorphisms(d) == (expected == d.degree()));
      CHECK(has_transitive_automorphisms(d) == is_regular(d));
      ++checked;
    });
  }
  CHECK(checked == 1 + 3 + 26 + 426);
  CHECK(automorphism_order(genus_two_pair().plain) == oracle::automorphisms_by_scan(genus_two_pair().plain));
  CHECK_THROWS_AS(automorphism_order(genus_two_pair().plain, 4), GuardExceeded);
}

TEST_CASE("covering maps") {
  const Dessin base = genus_two_pair().plain;
  const Dessin cover = genus_three_cover();
  std::vector<Point> proj(16);
  for (Point i = 0; i < 16; ++i) proj[i] = i % 8;
  CHECK(is_covering_map(cover, base, proj));
  proj[3] = 4;
  CHECK_FALSE(is_covering_map(cover, base, proj));
  std::vector<Point> short_proj(8, 0);
  CHECK_FALSE(is_covering_map(cover, base, short_proj));
}
