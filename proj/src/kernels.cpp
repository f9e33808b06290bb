#include "noe/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace noe::kernels {

namespace {

const Ops& pick() {
  const char* force = std::getenv("NOE_KERNELS");
  if (force && std::strcmp(force, "scalar") == 0) return scalar_ops();
  if (const Ops* avx2 = avx2_ops(); avx2 && (!force || std::strcmp(force, "avx2") == 0))
    return *avx2;
  return scalar_ops();
}

}  // namespace

const Ops& active() {
  static const Ops& ops = pick();
  return ops;
}

}  // namespace noe::kernels
