#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "dessin/kernels.hpp"

using dessin::kernels::Point;

namespace {

std::vector<Point> random_images(std::size_t n, std::mt19937& rng) {
  std::vector<Point> p(n);
  std::iota(p.begin(), p.end(), Point{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("AVX2 kernels agree with the scalar reference") {
  const auto* fast = dessin::kernels::avx2_table();
  if (fast == nullptr) {
    MESSAGE("AVX2 not available; only the scalar path is exercised");
    return;
  }
  const auto& ref = dessin::kernels::scalar_table();
  std::mt19937 rng(7);
  for (std::size_t n : {1u, 2u, 7u, 8u, 9u, 15u, 16u, 17u, 31u, 64u, 100u, 1000u, 4099u}) {
    CAPTURE(n);
    for (int rep = 0; rep < 5; ++rep) {
      const auto p = random_images(n, rng);
      const auto q = random_images(n, rng);
      std::vector<Point> a(n), b(n);
      ref.compose(p, q, a);
      fast->compose(p, q, b);
      CHECK(a == b);
      CHECK(ref.count_fixed(p) == fast->count_fixed(p));
      CHECK(ref.is_identity(p) == fast->is_identity(p));
    }
    std::vector<Point> id(n);
    std::iota(id.begin(), id.end(), Point{0});
    CHECK(fast->is_identity(id));
    CHECK(fast->count_fixed(id) == n);
    // A single moved pair near the end must be noticed.
    if (n >= 2) {
      std::swap(id[n - 1], id[n - 2]);
      CHECK_FALSE(fast->is_identity(id));
      CHECK(fast->count_fixed(id) == n - 2);
    }
  }
  for (auto [u, v] : {std::pair{3u, 5u}, {8u, 8u}, {30u, 30u}, {1u, 9u}, {17u, 13u}}) {
    const auto outer = random_images(u, rng);
    const auto inner = random_images(v, rng);
    std::vector<Point> a(u * v), b(u * v);
    ref.product_action(outer, inner, a);
    fast->product_action(outer, inner, b);
    CHECK(a == b);
  }
}

TEST_CASE("scalar product action layout") {
  const std::vector<Point> outer{1, 0};
  const std::vector<Point> inner{2, 0, 1};
  std::vector<Point> out(6);
  dessin::kernels::scalar_table().product_action(outer, inner, out);
  CHECK(out == std::vector<Point>{5, 3, 4, 2, 0, 1});
}
