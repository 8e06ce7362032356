#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace peftocr::kernels {

// Double-precision inner loops shared by the adapters, the model and the
// optimizer. Every entry has a scalar reference implementation plus SIMD
// variants (AVX2 on x86-64, NEON on aarch64) selected once at startup; the
// test suite checks the variants against the scalar reference on random
// inputs. All matrices are dense row-major.
struct Ops {
    const char* name;

    // c = a(m x k) * b(k x n); adds into c when accumulate is set.
    void (*gemm_nn)(size_t m, size_t k, size_t n, const double* a, const double* b,
                    double* c, bool accumulate);
    // c = a(m x k) * b(n x k)^T
    void (*gemm_nt)(size_t m, size_t k, size_t n, const double* a, const double* b,
                    double* c, bool accumulate);
    // c = a(k x m)^T * b(k x n)
    void (*gemm_tn)(size_t m, size_t k, size_t n, const double* a, const double* b,
                    double* c, bool accumulate);

    // y += alpha * x
    void (*axpy)(size_t n, double alpha, const double* x, double* y);
    double (*dot)(size_t n, const double* x, const double* y);
    // acc[j] += row[j]^2 (column-wise squared-norm accumulation)
    void (*sq_accum)(size_t n, const double* row, double* acc);
};

// The scalar reference table. Always available.
const Ops& scalar_ops();

// The table currently in use. Selected on first call: honors the
// PEFTOCR_KERNELS environment variable ("scalar", "avx2", "neon") and
// otherwise picks the best variant the CPU supports.
const Ops& active();

// Force a specific variant (throws config_error for unknown/unsupported
// names). "auto" restores runtime detection.
void select(std::string_view name);

// Names of the variants compiled into this binary and usable on this CPU.
std::vector<std::string> available();

}  // namespace peftocr::kernels
