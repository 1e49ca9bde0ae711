#include "qho/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qho::kern {

namespace serial {

void matmul(cplx* out, const cplx* a, const cplx* b, std::size_t m, std::size_t k, std::size_t n) {
    std::fill(out, out + m * n, cplx{});
    for (std::size_t i = 0; i < m; ++i) {
        cplx* out_row = out + i * n;
        for (std::size_t p = 0; p < k; ++p) {
            const cplx aip = a[i * k + p];
            if (aip == cplx{}) continue;
            const cplx* b_row = b + p * n;
            for (std::size_t j = 0; j < n; ++j) {
                out_row[j] += aip * b_row[j];
            }
        }
    }
}

void kron(cplx* out, const cplx* a, std::size_t ra, std::size_t ca, const cplx* b, std::size_t rb,
          std::size_t cb) {
    const std::size_t cols = ca * cb;
    for (std::size_t i1 = 0; i1 < ra; ++i1) {
        for (std::size_t i2 = 0; i2 < rb; ++i2) {
            cplx* out_row = out + (i1 * rb + i2) * cols;
            const cplx* a_row = a + i1 * ca;
            const cplx* b_row = b + i2 * cb;
            for (std::size_t j1 = 0; j1 < ca; ++j1) {
                const cplx av = a_row[j1];
                for (std::size_t j2 = 0; j2 < cb; ++j2) {
                    out_row[j1 * cb + j2] = av * b_row[j2];
                }
            }
        }
    }
}

void adjoint(cplx* out, const cplx* a, std::size_t r, std::size_t c) {
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            out[j * r + i] = std::conj(a[i * c + j]);
        }
    }
}

}  // namespace serial

void matmul(cplx* out, const cplx* a, const cplx* b, std::size_t m, std::size_t k, std::size_t n) {
#ifdef _OPENMP
    if (m * k * n >= parallel_cutoff && m > 1) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) {
            cplx* out_row = out + i * n;
            std::fill(out_row, out_row + n, cplx{});
            // k ascending per output element: same accumulation order as serial
            for (std::size_t p = 0; p < k; ++p) {
                const cplx aip = a[i * k + p];
                if (aip == cplx{}) continue;
                const cplx* b_row = b + p * n;
                for (std::size_t j = 0; j < n; ++j) {
                    out_row[j] += aip * b_row[j];
                }
            }
        }
        return;
    }
#endif
    serial::matmul(out, a, b, m, k, n);
}

void kron(cplx* out, const cplx* a, std::size_t ra, std::size_t ca, const cplx* b, std::size_t rb,
          std::size_t cb) {
#ifdef _OPENMP
    const std::size_t rows = ra * rb;
    if (rows * ca * cb >= parallel_cutoff && rows > 1) {
        const std::size_t cols = ca * cb;
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(rows); ++r) {
            const std::size_t i1 = static_cast<std::size_t>(r) / rb;
            const std::size_t i2 = static_cast<std::size_t>(r) % rb;
            cplx* out_row = out + r * cols;
            const cplx* a_row = a + i1 * ca;
            const cplx* b_row = b + i2 * cb;
            for (std::size_t j1 = 0; j1 < ca; ++j1) {
                const cplx av = a_row[j1];
                for (std::size_t j2 = 0; j2 < cb; ++j2) {
                    out_row[j1 * cb + j2] = av * b_row[j2];
                }
            }
        }
        return;
    }
#endif
    serial::kron(out, a, ra, ca, b, rb, cb);
}

void adjoint(cplx* out, const cplx* a, std::size_t r, std::size_t c) {
#ifdef _OPENMP
    if (r * c >= parallel_cutoff && c > 1) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(c); ++j) {
            for (std::size_t i = 0; i < r; ++i) {
                out[j * r + i] = std::conj(a[i * c + static_cast<std::size_t>(j)]);
            }
        }
        return;
    }
#endif
    serial::adjoint(out, a, r, c);
}

}  // namespace qho::kern
