#include <chrono>
#include <iostream>
#include <random>

#include "tama/context.hpp"
#include "tama/matrix.hpp"

// Serial vs OpenMP product on the kind of matrices the operator slices
// produce: sparse-ish, entries in Q(zeta_L) with a kappa factor.
using namespace tama;

namespace {

Mat<Scalar> random_matrix(const ExactCtx& ctx, long n, std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, 9), kexp(0, 3), root(0, ctx.L - 1);
    Mat<Scalar> M(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            if (pick(rng) < 6) continue;  // keep it sparse
            Scalar e = ctx.root(root(rng));
            for (int t = kexp(rng); t > 0; --t) e *= ctx.kap[0];
            M.at(i, j) = e;
        }
    return M;
}

double time_ms(const Mat<Scalar>& A, const Mat<Scalar>& B, bool parallel,
               Mat<Scalar>& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = parallel ? mat_mul_parallel(A, B) : mat_mul_serial(A, B);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    long n = argc > 1 ? std::atol(argv[1]) : 96;
    int reps = argc > 2 ? std::atoi(argv[2]) : 3;
    ExactCtx ctx(4, 3);
    std::mt19937 rng(12345);
    Mat<Scalar> A = random_matrix(ctx, n, rng), B = random_matrix(ctx, n, rng);

    Mat<Scalar> Cs, Cp;
    double ser = 0, par = 0;
    for (int r = 0; r < reps; ++r) {
        ser += time_ms(A, B, false, Cs);
        par += time_ms(A, B, true, Cp);
    }
    if (!(Cs - Cp).is_zero()) {
        std::cerr << "kernel mismatch\n";
        return 1;
    }
    std::cout << "n=" << n << " reps=" << reps << "\n"
              << "serial:   " << ser / reps << " ms\n"
              << "parallel: " << par / reps << " ms\n"
              << "speedup:  " << ser / par << "x\n";
    return 0;
}
