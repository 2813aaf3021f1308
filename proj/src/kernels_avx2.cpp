#include "dessin/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define DESSIN_HAVE_AVX2_KERNELS 1
#define DESSIN_TARGET_AVX2 __attribute__((target("avx2")))
#endif

namespace dessin::kernels {

#ifdef DESSIN_HAVE_AVX2_KERNELS
namespace {

DESSIN_TARGET_AVX2
void compose_avx2(std::span<const Point> first, std::span<const Point> second, std::span<Point> out) {
  const std::size_t n = first.size();
  const int* base = reinterpret_cast<const int*>(second.data());
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(first.data() + i));
    const __m256i v = _mm256_i32gather_epi32(base, idx, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), v);
  }
  for (; i < n; ++i) out[i] = second[first[i]];
}

DESSIN_TARGET_AVX2
std::size_t count_fixed_avx2(std::span<const Point> images) {
  const std::size_t n = images.size();
  __m256i iota = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i step = _mm256_set1_epi32(8);
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(images.data() + i));
    const int mask = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(v, iota)));
    count += static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(mask)));
    iota = _mm256_add_epi32(iota, step);
  }
  for (; i < n; ++i) count += images[i] == i;
  return count;
}

DESSIN_TARGET_AVX2
bool is_identity_avx2(std::span<const Point> images) {
  const std::size_t n = images.size();
  __m256i iota = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i step = _mm256_set1_epi32(8);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(images.data() + i));
    const __m256i diff = _mm256_xor_si256(v, iota);
    if (!_mm256_testz_si256(diff, diff)) return false;
    iota = _mm256_add_epi32(iota, step);
  }
  for (; i < n; ++i)
    if (images[i] != i) return false;
  return true;
}

DESSIN_TARGET_AVX2
void product_action_avx2(std::span<const Point> outer, std::span<const Point> inner, std::span<Point> out) {
  const std::size_t width = inner.size();
  for (std::size_t u = 0; u < outer.size(); ++u) {
    const Point offset = static_cast<Point>(outer[u] * width);
    const __m256i off = _mm256_set1_epi32(static_cast<int>(offset));
    Point* row = out.data() + u * width;
    std::size_t v = 0;
    for (; v + 8 <= width; v += 8) {
      const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(inner.data() + v));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + v), _mm256_add_epi32(x, off));
    }
    for (; v < width; ++v) row[v] = offset + inner[v];
  }
}

}  // namespace

const KernelTable* avx2_table() {
  static const KernelTable table{"avx2", compose_avx2, count_fixed_avx2, is_identity_avx2, product_action_avx2};
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &table : nullptr;
}

#else

const KernelTable* avx2_table() { return nullptr; }

#endif

}  // namespace dessin::kernels
