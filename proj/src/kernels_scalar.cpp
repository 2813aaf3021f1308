#include "dessin/kernels.hpp"

namespace dessin::kernels {
namespace {

void compose_scalar(std::span<const Point> first, std::span<const Point> second, std::span<Point> out) {
  const std::size_t n = first.size();
  for (std::size_t i = 0; i < n; ++i) out[i] = second[first[i]];
}

std::size_t count_fixed_scalar(std::span<const Point> images) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < images.size(); ++i) count += images[i] == i;
  return count;
}

bool is_identity_scalar(std::span<const Point> images) {
  for (std::size_t i = 0; i < images.size(); ++i)
    if (images[i] != i) return false;
  return true;
}

void product_action_scalar(std::span<const Point> outer, std::span<const Point> inner, std::span<Point> out) {
  const std::size_t width = inner.size();
  for (std::size_t u = 0; u < outer.size(); ++u) {
    const Point offset = static_cast<Point>(outer[u] * width);
    Point* row = out.data() + u * width;
    for (std::size_t v = 0; v < width; ++v) row[v] = offset + inner[v];
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{"scalar", compose_scalar, count_fixed_scalar, is_identity_scalar,
                                 product_action_scalar};
  return table;
}

}  // namespace dessin::kernels
