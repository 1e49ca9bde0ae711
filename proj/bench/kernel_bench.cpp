// Times the OpenMP kernel paths against the serial reference and verifies
// that both produce bitwise-identical results (each output element is
// accumulated in the same index order on either path).

#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>
#include <vector>

#include "qho/fock.hpp"
#include "qho/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using qho::kern::cplx;

double now_seconds() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

std::vector<cplx> random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& gen) {
    std::vector<cplx> m(rows * cols);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (auto& z : m) z = {dist(gen), dist(gen)};
    return m;
}

template <typename F>
double time_best_of(int repeats, F&& body) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const double t0 = now_seconds();
        body();
        best = std::min(best, now_seconds() - t0);
    }
    return best;
}

void bench_matmul(std::size_t n, std::mt19937_64& gen) {
    const auto a = random_matrix(n, n, gen);
    const auto b = random_matrix(n, n, gen);
    std::vector<cplx> serial_out(n * n), parallel_out(n * n);

    const double ts = time_best_of(3, [&] {
        qho::kern::serial::matmul(serial_out.data(), a.data(), b.data(), n, n, n);
    });
    const double tp = time_best_of(3, [&] {
        qho::kern::matmul(parallel_out.data(), a.data(), b.data(), n, n, n);
    });
    const bool identical =
        std::memcmp(serial_out.data(), parallel_out.data(), n * n * sizeof(cplx)) == 0;
    std::printf("matmul %4zux%-4zu  serial %8.2f ms  parallel %8.2f ms  speedup %5.2fx  %s\n", n,
                n, ts * 1e3, tp * 1e3, ts / tp, identical ? "bitwise equal" : "MISMATCH");
}

void bench_kron(std::size_t n, std::mt19937_64& gen) {
    const auto a = random_matrix(n, n, gen);
    const auto b = random_matrix(n, n, gen);
    std::vector<cplx> serial_out(n * n * n * n), parallel_out(n * n * n * n);

    const double ts = time_best_of(3, [&] {
        qho::kern::serial::kron(serial_out.data(), a.data(), n, n, b.data(), n, n);
    });
    const double tp = time_best_of(3, [&] {
        qho::kern::kron(parallel_out.data(), a.data(), n, n, b.data(), n, n);
    });
    const bool identical = std::memcmp(serial_out.data(), parallel_out.data(),
                                       serial_out.size() * sizeof(cplx)) == 0;
    std::printf("kron   %4zux%-4zu  serial %8.2f ms  parallel %8.2f ms  speedup %5.2fx  %s\n", n,
                n, ts * 1e3, tp * 1e3, ts / tp, identical ? "bitwise equal" : "MISMATCH");
}

void bench_comultiplication(std::size_t d, std::size_t cutoff) {
    const qho::FockSpace f = qho::fock_space(qho::SpaceObject::base(d), cutoff);
    const double t0 = now_seconds();
    const qho::Morphism comult = qho::comultiplication(f);
    const double elapsed = now_seconds() - t0;
    std::printf("comultiplication d=%zu N=%zu  (dim %zu -> %zu)  %8.2f ms\n", d, cutoff, f.dim(),
                comult.rows(), elapsed * 1e3);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both paths run serially\n\n");
#endif
    std::mt19937_64 gen(7);
    for (std::size_t n : {64, 128, 256, 512}) bench_matmul(n, gen);
    for (std::size_t n : {8, 16, 32}) bench_kron(n, gen);
    std::printf("\n");
    bench_comultiplication(3, 4);
    bench_comultiplication(4, 4);
    bench_comultiplication(2, 6);
    return 0;
}
