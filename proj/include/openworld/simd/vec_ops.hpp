#pragma once

#include <cstddef>
#include <span>
#include <string>

// Embedding-vector arithmetic used by the relatedness and mapping scans.
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant; the active backend is selected at runtime from CPU capabilities
// and can be overridden (tests exercise both and check equivalence).
// Accumulation is in double regardless of backend.

namespace openworld::simd {

enum class Backend { Scalar, Avx2 };

bool backend_supported(Backend b);
Backend active_backend();
// Throws ConfigError if the backend is not supported on this CPU/build.
void set_backend(Backend b);
std::string backend_name(Backend b);

double dot(std::span<const float> a, std::span<const float> b);
double squared_norm(std::span<const float> a);
// 0.0 when either vector has zero norm.
double cosine(std::span<const float> a, std::span<const float> b);

// out[i] = dot(query, rows + i*dim) for i in [0, n_rows).
void dot_many(std::span<const float> query, const float* rows, std::size_t n_rows,
              std::size_t dim, double* out);

namespace detail {
struct Kernels {
    double (*dot)(const float*, const float*, std::size_t);
    double (*squared_norm)(const float*, std::size_t);
};
extern const Kernels scalar_kernels;
#if OPENWORLD_HAVE_AVX2
extern const Kernels avx2_kernels;
#endif
}  // namespace detail

}  // namespace openworld::simd
