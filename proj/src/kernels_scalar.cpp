#include "peftocr/kernels.hpp"

#include <cstring>

// Reference kernels. Written for clarity; the SIMD variants must agree with
// these on random inputs to the tolerances asserted in test_kernels.

namespace peftocr::kernels {
namespace {

void gemm_nn_scalar(size_t m, size_t k, size_t n, const double* a, const double* b,
                    double* c, bool accumulate) {
    if (!accumulate) {
        std::memset(c, 0, m * n * sizeof(double));
    }
    for (size_t i = 0; i < m; ++i) {
        double* crow = c + i * n;
        for (size_t p = 0; p < k; ++p) {
            const double av = a[i * k + p];
            const double* brow = b + p * n;
            for (size_t j = 0; j < n; ++j) {
                crow[j] += av * brow[j];
            }
        }
    }
}

void gemm_nt_scalar(size_t m, size_t k, size_t n, const double* a, const double* b,
                    double* c, bool accumulate) {
    for (size_t i = 0; i < m; ++i) {
        const double* arow = a + i * k;
        for (size_t j = 0; j < n; ++j) {
            const double* brow = b + j * k;
            double sum = 0.0;
            for (size_t p = 0; p < k; ++p) {
                sum += arow[p] * brow[p];
            }
            double* cij = c + i * n + j;
            *cij = accumulate ? *cij + sum : sum;
        }
    }
}

void gemm_tn_scalar(size_t m, size_t k, size_t n, const double* a, const double* b,
                    double* c, bool accumulate) {
    if (!accumulate) {
        std::memset(c, 0, m * n * sizeof(double));
    }
    for (size_t p = 0; p < k; ++p) {
        const double* arow = a + p * m;
        const double* brow = b + p * n;
        for (size_t i = 0; i < m; ++i) {
            const double av = arow[i];
            double* crow = c + i * n;
            for (size_t j = 0; j < n; ++j) {
                crow[j] += av * brow[j];
            }
        }
    }
}

void axpy_scalar(size_t n, double alpha, const double* x, double* y) {
    for (size_t i = 0; i < n; ++i) {
        y[i] += alpha * x[i];
    }
}

double dot_scalar(size_t n, const double* x, const double* y) {
    double sum = 0.0;
    for (size_t i = 0; i < n; ++i) {
        sum += x[i] * y[i];
    }
    return sum;
}

void sq_accum_scalar(size_t n, const double* row, double* acc) {
    for (size_t j = 0; j < n; ++j) {
        acc[j] += row[j] * row[j];
    }
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{
        "scalar",       gemm_nn_scalar, gemm_nt_scalar, gemm_tn_scalar,
        axpy_scalar,    dot_scalar,     sq_accum_scalar,
    };
    return ops;
}

}  // namespace peftocr::kernels
