#include <doctest.h>

#include <random>

#include "dessin/construct.hpp"
#include "dessin/error.hpp"
#include "dessin/group.hpp"
#include "dessin/zorient.hpp"
#include "oracles.hpp"

using namespace dessin;

namespace {

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

std::vector<Permutation> mathieu12() {
  return {parse_cycles("(1,2,3,4,5,6,7,8,9,10,11)", 12), parse_cycles("(3,7,11,8)(4,10,5,6)", 12),
          parse_cycles("(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)", 12)};
}

}  // namespace

TEST_CASE("orders of known groups") {
  for (unsigned n : {2u, 3u, 5u, 8u, 12u, 30u}) {
    std::vector<std::int64_t> cyc(n);
    for (unsigned i = 0; i < n; ++i) cyc[i] = (i + 1) % n + 1;
    const Permutation gens[] = {Permutation::from_one_based(cyc), parse_cycles("(1,2)", n)};
    const GroupHandle g = GroupHandle::build(gens);
    CHECK(g.order() == factorial(n));
    CHECK(g.exact());
  }
  const auto m12 = mathieu12();
  CHECK(GroupHandle::build(std::span(m12).first(2)).order() == 7920);
  CHECK(GroupHandle::build(m12).order() == 95040);

  // Alternating group A_9 from 3-cycles.
  const Permutation a9[] = {parse_cycles("(1,2,3)", 9), parse_cycles("(3,4,5,6,7,8,9)", 9)};
  CHECK(GroupHandle::build(a9).order() == factorial(9) / 2);
}

TEST_CASE("randomized phase alone finds the order with a fixed seed") {
  GroupOptions opts;
  opts.deterministic_limit = 0;
  const auto m12 = mathieu12();
  const GroupHandle g = GroupHandle::build(m12, opts);
  CHECK_FALSE(g.exact());
  CHECK(g.order() == 95040);
  CHECK(GroupHandle::build(m12, opts).order() == g.order());
}

TEST_CASE("orders and membership against closure") {
  std::mt19937 rng(11);
  for (std::size_t n = 1; n <= 4; ++n) {
    enumerate_transitive_pairs(n, [&](const Dessin& d) {
      const std::vector<Permutation> gens = {d.sigma0(), d.sigma1()};
      const auto elements = oracle::group_elements(gens);
      const GroupHandle g = GroupHandle::build(gens);
      CHECK(g.order() == elements.size());
      CHECK(g.base().front() == 0);
      std::vector<Point> p(n);
      std::iota(p.begin(), p.end(), Point{0});
      std::shuffle(p.begin(), p.end(), rng);
      CHECK(g.contains(Permutation::from_images(p)) == (elements.count(p) > 0));
      // Stabilizer generators generate the full point stabilizer.
      const auto stab = stabilizer_generators(d);
      std::size_t fixing = 0;
      for (const auto& e : elements) fixing += e[0] == 0;
      if (stab.empty()) {
        CHECK(fixing == 1);
      } else {
        const auto generated = oracle::group_elements(stab);
        CHECK(generated.size() == fixing);
        for (const auto& e : generated) CHECK(e[0] == 0);
      }
    });
  }
  const GroupHandle g = GroupHandle::build(mathieu12());
  CHECK_THROWS_AS(g.contains(Permutation(5)), Error);
}

TEST_CASE("build validates") {
  CHECK_THROWS_AS(GroupHandle::build(std::span<const Permutation>{}), Error);
  const Permutation mixed[] = {Permutation(3), Permutation(4)};
  CHECK_THROWS_AS(GroupHandle::build(mixed), Error);
  GroupOptions small;
  small.max_degree = 10;
  const auto m12 = mathieu12();
  CHECK_THROWS_AS(GroupHandle::build(m12, small), GuardExceeded);
}

TEST_CASE("sign maps and the M/M^2 class against a Cayley-graph oracle") {
  for (std::size_t n = 1; n <= 4; ++n) {
    enumerate_transitive_pairs(n, [](const Dessin& d) {
      const MSquaredClass cls = m_squared_class(d);
      std::size_t count = 0;
      for (const auto& m : kSignMaps) {
        const bool exists = oracle::sign_map_exists(d, m.on_sigma0, m.on_sigma1);
        CHECK(cls.has(m) == exists);
        count += exists;
      }
      const QuotientType expected =
          count == 0 ? QuotientType::Trivial : (count == 1 ? QuotientType::Z2 : QuotientType::Z2xZ2);
      CHECK(count != 2);
      CHECK(cls.quotient_type == expected);
      CHECK(classify_by_monodromy(d) == tot(d).verdicts);
    });
  }
}

TEST_CASE("genus-2 example group data") {
  const Dessin d = genus_two_pair().plain;
  const Permutation gens[] = {d.sigma0(), d.sigma1()};
  CHECK(GroupHandle::build(gens).order() == 32);
  const auto stab = stabilizer_generators(d);
  const std::vector<Permutation> expected = {parse_cycles("(2,4)(6,8)", 8), parse_cycles("(5,7)(6,8)", 8)};
  CHECK(oracle::group_elements(stab) == oracle::group_elements(expected));
  const MSquaredClass cls = m_squared_class(d);
  CHECK(cls.quotient_type == QuotientType::Z2xZ2);
  CHECK_FALSE(stabilizer_in_kernel(d, kSignMaps[0]));
  CHECK(stabilizer_in_kernel(d, kSignMaps[1]));
  CHECK_FALSE(stabilizer_in_kernel(d, kSignMaps[2]));
  const SignMapAnalysis a = analyze_sign_maps(d);
  CHECK(a.monodromy_order == 32);
  CHECK(classify_by_monodromy(a) == std::array<bool, 3>{false, true, false});
  CHECK_FALSE(is_regular(d));
}

TEST_CASE("stabilizer_in_kernel rejects a missing sign map") {
  const Dessin path = dihedral_path(5);
  const MSquaredClass cls = m_squared_class(path);
  CHECK(cls.quotient_type == QuotientType::Z2);
  CHECK(cls.has(kSignMaps[0]));
  CHECK_THROWS_AS(stabilizer_in_kernel(path, kSignMaps[1]), Error);
}

TEST_CASE("minimal regular cover") {
  const Dessin d = genus_two_pair().plain;
  const RegularCover rc = minimal_regular_cover(d);
  CHECK(rc.dessin.degree() == 32);
  CHECK(is_regular(rc.dessin));
  CHECK(has_transitive_automorphisms(rc.dessin));
  CHECK(is_covering_map(rc.dessin, d, rc.projection));
  CHECK(rc.projection[0] == 0);
  CHECK_THROWS_AS(minimal_regular_cover(d, 16), GuardExceeded);

  const Dessin path = dihedral_path(7);
  const RegularCover pc = minimal_regular_cover(path);
  CHECK(pc.dessin.degree() == 14);
  CHECK(passport(pc.dessin).type_triple == passport(path).type_triple);
}
