#include "tfseg/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace tfseg::kernels {
namespace {

const Ops& select() {
    const char* force = std::getenv("TFSEG_SIMD");
    if (force != nullptr) {
        if (std::strcmp(force, "scalar") == 0) return scalar_ops();
        if (std::strcmp(force, "avx2") == 0 && avx2_ops() != nullptr) return *avx2_ops();
        return scalar_ops();
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_ops() != nullptr && __builtin_cpu_supports("avx2")) return *avx2_ops();
#endif
    return scalar_ops();
}

} // namespace

const Ops& ops() {
    static const Ops& table = select();
    return table;
}

} // namespace tfseg::kernels
