#include <doctest.h>

#include "dessin/construct.hpp"
#include "dessin/zorient.hpp"
#include "oracles.hpp"

using namespace dessin;

TEST_CASE("verdicts, witnesses and obstructions against exhaustive search") {
  for (std::size_t n = 1; n <= 4; ++n) {
    enumerate_transitive_pairs(n, [](const Dessin& d) {
      const OrientabilityReport r = z_orientable(d);
      CHECK(r.verdict == oracle::orientable_by_search(d));
      CHECK(r.verdict == is_z_orientable(d));
      if (r.verdict) {
        REQUIRE(r.witness.has_value());
        CHECK_FALSE(r.obstruction.has_value());
        CHECK(is_valid_witness(d, *r.witness));
        CHECK(r.witness->signs[0] == 1);
        CHECK(r.witness->positive().size() == d.degree() / 2);
      } else {
        REQUIRE(r.obstruction.has_value());
        CHECK_FALSE(r.witness.has_value());
        CHECK(is_valid_obstruction(d, *r.obstruction));
      }
    });
  }
}

TEST_CASE("validators reject bad certificates") {
  const Dessin d = degree2_dessin();
  CHECK(is_valid_witness(d, SignAssignment{{1, -1}}));
  CHECK_FALSE(is_valid_witness(d, SignAssignment{{1, 1}}));
  CHECK_FALSE(is_valid_witness(d, SignAssignment{{1}}));
  const Dessin plain = genus_two_pair().plain;
  CHECK_FALSE(is_valid_obstruction(plain, OddWalk{0, {{0, false}, {0, true}}}));
  CHECK_FALSE(is_valid_obstruction(plain, OddWalk{0, {{0, false}}}));
}

TEST_CASE("degree-2 dessin") {
  const Dessin d = degree2_dessin();
  const TotResult t = tot(d);
  CHECK(t.verdicts == std::array<bool, 3>{true, false, false});
  CHECK(t.tot == 1);
  const auto map = covering_to_degree2(d);
  REQUIRE(map.has_value());
  CHECK(*map == std::vector<std::uint8_t>{1, 2});
  CHECK(std::holds_alternative<Split>(sign_double_cover(d, 0)));
}

TEST_CASE("genus-2 pair") {
  const auto [d, twin] = genus_two_pair();
  CHECK_FALSE(is_z_orientable(d));
  CHECK(is_z_orientable(twin));
  CHECK(tot(d).verdicts == std::array<bool, 3>{false, true, false});
  const auto r = z_orientable(twin);
  REQUIRE(r.witness);
  CHECK(r.witness->positive() == std::vector<Point>{0, 1, 2, 3});
  CHECK(r.witness->negative() == std::vector<Point>{4, 5, 6, 7});
  CHECK_FALSE(covering_to_degree2(d).has_value());
}

TEST_CASE("sign double covers") {
  const Dessin d = genus_two_pair().plain;
  const auto cover = sign_double_cover(d, 0);
  REQUIRE(std::holds_alternative<Dessin>(cover));
  const Dessin& c = std::get<Dessin>(cover);
  CHECK(c.degree() == 16);
  CHECK(is_z_orientable(c));
  std::vector<Point> proj(16);
  for (Point i = 0; i < 16; ++i) proj[i] = i % 8;
  CHECK(is_covering_map(c, d, proj));
  // D' is already orientable, so doubling along it splits.
  CHECK(std::holds_alternative<Split>(sign_double_cover(d, 1)));
}

TEST_CASE("cover_to_max_tot on small dessins keeps coverings and never lowers tot") {
  enumerate_transitive_pairs(4, [](const Dessin& d) {
    const Dessin top = cover_to_max_tot(d);
    CHECK(top.degree() % d.degree() == 0);
    CHECK(tot(top).tot >= tot(d).tot);
    std::vector<Point> proj(top.degree());
    for (Point i = 0; i < top.degree(); ++i) proj[i] = i % d.degree();
    CHECK(is_covering_map(top, d, proj));
    const MSquaredClass cls = m_squared_class(d);
    for (int j = 0; j < 3; ++j)
      if (cls.has(sign_map_for_twist(j))) CHECK(is_z_orientable(twisted(top, j)));
  });
}
