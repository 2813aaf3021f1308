#pragma once

// Data-parallel inner loops over permutation image arrays.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2
// variant. The active table is chosen once at first use from the CPU
// feature bits; setting DESSIN_SIMD=scalar in the environment forces the
// reference path. Both variants must agree bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace dessin::kernels {

using Point = std::uint32_t;

struct KernelTable {
  std::string_view name;
  // out[i] = second[first[i]]; `out` must not alias `first`.
  void (*compose)(std::span<const Point> first, std::span<const Point> second, std::span<Point> out);
  std::size_t (*count_fixed)(std::span<const Point> images);
  bool (*is_identity)(std::span<const Point> images);
  // out[u * inner.size() + v] = outer[u] * inner.size() + inner[v]
  void (*product_action)(std::span<const Point> outer, std::span<const Point> inner, std::span<Point> out);
};

const KernelTable& scalar_table();
// Null when the build or the CPU lacks AVX2.
const KernelTable* avx2_table();
const KernelTable& active();

inline void compose(std::span<const Point> first, std::span<const Point> second, std::span<Point> out) {
  active().compose(first, second, out);
}
inline std::size_t count_fixed(std::span<const Point> images) { return active().count_fixed(images); }
inline bool is_identity(std::span<const Point> images) { return active().is_identity(images); }
inline void product_action(std::span<const Point> outer, std::span<const Point> inner, std::span<Point> out) {
  active().product_action(outer, inner, out);
}

}  // namespace dessin::kernels
