#include <atomic>
#include <cstdlib>
#include <string_view>

#include "permgen/kernels.hpp"

namespace permgen::kernels {
namespace {

const KernelTable* choose() {
  if (const char* env = std::getenv("PERMGEN_SIMD"); env && std::string_view(env) == "scalar")
    return &scalar::table();
  if (const KernelTable* t = avx2::table()) return t;
  return &scalar::table();
}

std::atomic<const KernelTable*>& slot() {
  static std::atomic<const KernelTable*> current{choose()};
  return current;
}

}  // namespace

const KernelTable& active() { return *slot().load(std::memory_order_relaxed); }

void set_active(const KernelTable& table) { slot().store(&table, std::memory_order_relaxed); }

}  // namespace permgen::kernels
