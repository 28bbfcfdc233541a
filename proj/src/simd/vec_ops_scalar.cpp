#include "openworld/simd/vec_ops.hpp"

namespace openworld::simd::detail {

namespace {

double dot_scalar(const float* a, const float* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += static_cast<double>(a[i]) * static_cast<double>(b[i]);
    }
    return acc;
}

double squared_norm_scalar(const float* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += static_cast<double>(a[i]) * static_cast<double>(a[i]);
    }
    return acc;
}

}  // namespace

const Kernels scalar_kernels{dot_scalar, squared_norm_scalar};

}  // namespace openworld::simd::detail
