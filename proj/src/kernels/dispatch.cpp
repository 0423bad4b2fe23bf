#include <atomic>
#include <cstdlib>
#include <cstring>

#include "ipsim/kernels/kernels.hpp"

namespace ipsim::kernels {

bool avx2_supported() {
#if (defined(__x86_64__) || defined(__i386__)) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

std::atomic<Backend> g_backend{Backend::Auto};

const Ops* resolve() {
    Backend b = g_backend.load();
    if (b == Backend::Auto) {
        if (const char* env = std::getenv("IPSIM_KERNELS")) {
            if (std::strcmp(env, "scalar") == 0) b = Backend::Scalar;
            if (std::strcmp(env, "avx2") == 0) b = Backend::Avx2;
        }
    }
    if (b == Backend::Avx2 || (b == Backend::Auto && avx2_supported())) {
        if (avx2_supported()) return &avx2_ops();
    }
    return &scalar_ops();
}

}  // namespace

void set_backend(Backend b) { g_backend.store(b); }

const Ops& active() { return *resolve(); }

}  // namespace ipsim::kernels
