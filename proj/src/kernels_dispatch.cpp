#include <cstdlib>
#include <string_view>

#include "dessin/kernels.hpp"

namespace dessin::kernels {

const KernelTable& active() {
  static const KernelTable& chosen = [] () -> const KernelTable& {
    const char* forced = std::getenv("DESSIN_SIMD");
    if (forced != nullptr && std::string_view(forced) == "scalar") return scalar_table();
    if (const KernelTable* t = avx2_table()) return *t;
    return scalar_table();
  }();
  return chosen;
}

}  // namespace dessin::kernels
