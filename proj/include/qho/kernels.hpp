#ifndef QHO_KERNELS_HPP
#define QHO_KERNELS_HPP

#include <complex>
#include <cstddef>

// Dense row-major complex kernels. The default entry points run the OpenMP
// paths for large shapes and fall back to the serial code below the cutoff;
// kern::serial holds the plain-loop reference used by the tests and the
// benchmark. Both paths accumulate each output element in the same index
// order, so results are bitwise identical regardless of thread count.

namespace qho::kern {

using cplx = std::complex<double>;

// Work sizes (multiply-add counts) below this stay on the serial path.
inline constexpr std::size_t parallel_cutoff = 1u << 16;

namespace serial {

// out(m x n) = a(m x k) * b(k x n)
void matmul(cplx* out, const cplx* a, const cplx* b, std::size_t m, std::size_t k, std::size_t n);

// out = a(ra x ca) (x) b(rb x cb), composite row index i1*rb+i2
void kron(cplx* out, const cplx* a, std::size_t ra, std::size_t ca, const cplx* b, std::size_t rb,
          std::size_t cb);

// out(c x r) = conjugate transpose of a(r x c)
void adjoint(cplx* out, const cplx* a, std::size_t r, std::size_t c);

}  // namespace serial

void matmul(cplx* out, const cplx* a, const cplx* b, std::size_t m, std::size_t k, std::size_t n);
void kron(cplx* out, const cplx* a, std::size_t ra, std::size_t ca, const cplx* b, std::size_t rb,
          std::size_t cb);
void adjoint(cplx* out, const cplx* a, std::size_t r, std::size_t c);

}  // namespace qho::kern

#endif
