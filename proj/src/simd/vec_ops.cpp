#include "openworld/simd/vec_ops.hpp"

#include <atomic>
#include <cmath>

#include "openworld/error.hpp"

namespace openworld::simd {

namespace {

bool cpu_has_avx2() {
#if OPENWORLD_HAVE_AVX2 && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend default_backend() {
    return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend> g_backend{default_backend()};

const detail::Kernels& kernels_for(Backend b) {
#if OPENWORLD_HAVE_AVX2
    if (b == Backend::Avx2) return detail::avx2_kernels;
#else
    (void)b;
#endif
    return detail::scalar_kernels;
}

const detail::Kernels& active_kernels() {
    return kernels_for(g_backend.load(std::memory_order_relaxed));
}

}  // namespace

bool backend_supported(Backend b) {
    switch (b) {
        case Backend::Scalar: return true;
        case Backend::Avx2: return cpu_has_avx2();
    }
    return false;
}

Backend active_backend() {
    return g_backend.load(std::memory_order_relaxed);
}

void set_backend(Backend b) {
    if (!backend_supported(b)) {
        throw ConfigError("simd backend not supported on this host: " + backend_name(b));
    }
    g_backend.store(b, std::memory_order_relaxed);
}

std::string backend_name(Backend b) {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
    }
    return "unknown";
}

double dot(std::span<const float> a, std::span<const float> b) {
    std::size_t n = a.size() < b.size() ? a.size() : b.size();
    return active_kernels().dot(a.data(), b.data(), n);
}

double squared_norm(std::span<const float> a) {
    return active_kernels().squared_norm(a.data(), a.size());
}

double cosine(std::span<const float> a, std::span<const float> b) {
    const detail::Kernels& k = active_kernels();
    std::size_t n = a.size() < b.size() ? a.size() : b.size();
    double na = k.squared_norm(a.data(), a.size());
    double nb = k.squared_norm(b.data(), b.size());
    if (!(na > 0.0) || !(nb > 0.0)) return 0.0;
    return k.dot(a.data(), b.data(), n) / std::sqrt(na * nb);
}

void dot_many(std::span<const float> query, const float* rows, std::size_t n_rows,
              std::size_t dim, double* out) {
    const detail::Kernels& k = active_kernels();
    for (std::size_t r = 0; r < n_rows; ++r) {
        out[r] = k.dot(query.data(), rows + r * dim, dim);
    }
}

}  // namespace openworld::simd
