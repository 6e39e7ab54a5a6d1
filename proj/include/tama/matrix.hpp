#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "tama/scalar.hpp"

namespace tama {

// coefficient-ring helpers, overloaded per entry type
inline bool kzero(const Scalar& x) { return x.is_zero(); }
inline bool kzero(const Cyclotomic& x) { return x.is_zero(); }
inline bool kzero(const std::complex<double>& x) { return std::abs(x) < 1e-9; }

inline Cyclotomic kinv(const Cyclotomic& x) { return x.inverse(); }
inline std::complex<double> kinv(const std::complex<double>& x) { return 1.0 / x; }
// kappa-polynomials only invert when constant
inline Scalar kinv(const Scalar& x) {
    if (!x.is_constant()) throw std::domain_error("inverse of a non-constant scalar");
    return Scalar(x.constant_part().inverse());
}

inline Cyclotomic kconj(const Cyclotomic& x) { return x.conj(); }
inline Scalar kconj(const Scalar& x) { return x.conj(); }
inline std::complex<double> kconj(const std::complex<double>& x) { return std::conj(x); }

// pivot preference: exact rings take the first nonzero, floats the largest
inline bool kbetter(const Cyclotomic&, const Cyclotomic&) { return false; }
inline bool kbetter(const Scalar&, const Scalar&) { return false; }
inline bool kbetter(const std::complex<double>& cand, const std::complex<double>& cur) {
    return std::abs(cand) > std::abs(cur);
}

extern bool use_parallel_kernels;  // flipped by CLI/bench; default on

template <class K>
struct Mat {
    long r = 0, c = 0;
    std::vector<K> a;

    Mat() = default;
    Mat(long r_, long c_) : r(r_), c(c_), a(r_ * c_) {}
    K& at(long i, long j) { return a[i * c + j]; }
    const K& at(long i, long j) const { return a[i * c + j]; }

    bool is_zero() const {
        for (const auto& x : a)
            if (!kzero(x)) return false;
        return true;
    }
};

template <class K>
Mat<K> mat_identity(long n, const K& one) {
    Mat<K> m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
}

// Serial reference product.
template <class K>
Mat<K> mat_mul_serial(const Mat<K>& A, const Mat<K>& B) {
    if (A.c != B.r) throw std::invalid_argument("matrix shape mismatch");
    Mat<K> C(A.r, B.c);
    for (long i = 0; i < A.r; ++i)
        for (long k = 0; k < A.c; ++k) {
            const K& aik = A.at(i, k);
            if (kzero(aik)) continue;
            for (long j = 0; j < B.c; ++j) {
                const K& bkj = B.at(k, j);
                if (kzero(bkj)) continue;
                C.at(i, j) += aik * bkj;
            }
        }
    return C;
}

// OpenMP product, row-parallel. Identical results to the serial kernel: each
// output row is accumulated by exactly one thread in the same k order.
template <class K>
Mat<K> mat_mul_parallel(const Mat<K>& A, const Mat<K>& B) {
    if (A.c != B.r) throw std::invalid_argument("matrix shape mismatch");
    Mat<K> C(A.r, B.c);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < A.r; ++i)
        for (long k = 0; k < A.c; ++k) {
            const K& aik = A.at(i, k);
            if (kzero(aik)) continue;
            for (long j = 0; j < B.c; ++j) {
                const K& bkj = B.at(k, j);
                if (kzero(bkj)) continue;
                C.at(i, j) += aik * bkj;
            }
        }
    return C;
}

template <class K>
Mat<K> operator*(const Mat<K>& A, const Mat<K>& B) {
    return use_parallel_kernels ? mat_mul_parallel(A, B) : mat_mul_serial(A, B);
}

template <class K>
Mat<K> operator+(const Mat<K>& A, const Mat<K>& B) {
    if (A.r != B.r || A.c != B.c) throw std::invalid_argument("matrix shape mismatch");
    Mat<K> C = A;
    for (size_t i = 0; i < C.a.size(); ++i) C.a[i] += B.a[i];
    return C;
}

template <class K>
Mat<K> operator-(const Mat<K>& A, const Mat<K>& B) {
    if (A.r != B.r || A.c != B.c) throw std::invalid_argument("matrix shape mismatch");
    Mat<K> C = A;
    for (size_t i = 0; i < C.a.size(); ++i) C.a[i] -= B.a[i];
    return C;
}

template <class K>
Mat<K> operator-(const Mat<K>& A) {
    Mat<K> C = A;
    for (auto& x : C.a) x = -x;
    return C;
}

template <class K>
Mat<K> operator*(const K& s, const Mat<K>& A) {
    Mat<K> C = A;
    for (auto& x : C.a) x = s * x;
    return C;
}

template <class K>
bool mat_eq(const Mat<K>& A, const Mat<K>& B) {
    return A.r == B.r && A.c == B.c && (A - B).is_zero();
}

template <class K>
Mat<K> mat_transpose(const Mat<K>& A) {
    Mat<K> C(A.c, A.r);
    for (long i = 0; i < A.r; ++i)
        for (long j = 0; j < A.c; ++j) C.at(j, i) = A.at(i, j);
    return C;
}

template <class K>
Mat<K> mat_conj_transpose(const Mat<K>& A) {
    Mat<K> C(A.c, A.r);
    for (long i = 0; i < A.r; ++i)
        for (long j = 0; j < A.c; ++j) C.at(j, i) = kconj(A.at(i, j));
    return C;
}

// In-place reduced row echelon form over a field. Returns pivot columns.
template <class K>
std::vector<long> rref(Mat<K>& M) {
    std::vector<long> pivots;
    long row = 0;
    for (long col = 0; col < M.c && row < M.r; ++col) {
        long p = -1;
        for (long i = row; i < M.r; ++i) {
            if (kzero(M.at(i, col))) continue;
            if (p < 0 || kbetter(M.at(i, col), M.at(p, col))) p = i;
        }
        if (p < 0) continue;
        if (p != row)
            for (long j = 0; j < M.c; ++j) std::swap(M.at(p, j), M.at(row, j));
        K inv = kinv(M.at(row, col));
        for (long j = col; j < M.c; ++j) M.at(row, j) = inv * M.at(row, j);
        for (long i = 0; i < M.r; ++i) {
            if (i == row || kzero(M.at(i, col))) continue;
            K f = M.at(i, col);
            for (long j = col; j < M.c; ++j) M.at(i, j) -= f * M.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class K>
long mat_rank(Mat<K> M) {
    return (long)rref(M).size();
}

// Basis of the right kernel, one column per basis vector.
template <class K>
Mat<K> kernel_basis(Mat<K> M, const K& one) {
    std::vector<long> piv = rref(M);
    std::vector<bool> is_piv(M.c, false);
    for (long p : piv) is_piv[p] = true;
    long nfree = M.c - (long)piv.size();
    Mat<K> Kmat(M.c, nfree);
    long fi = 0;
    for (long col = 0; col < M.c; ++col) {
        if (is_piv[col]) continue;
        Kmat.at(col, fi) = one;
        for (size_t rI = 0; rI < piv.size(); ++rI)
            Kmat.at(piv[rI], fi) = -M.at((long)rI, col);
        ++fi;
    }
    return Kmat;
}

// Solve M x = b (least restrictive: returns false when inconsistent).
template <class K>
bool mat_solve(Mat<K> M, Mat<K> b, Mat<K>& x) {
    if (M.r != b.r) throw std::invalid_argument("solve shape mismatch");
    Mat<K> aug(M.r, M.c + b.c);
    for (long i = 0; i < M.r; ++i) {
        for (long j = 0; j < M.c; ++j) aug.at(i, j) = M.at(i, j);
        for (long j = 0; j < b.c; ++j) aug.at(i, M.c + j) = b.at(i, j);
    }
    std::vector<long> piv = rref(aug);
    for (long p : piv)
        if (p >= M.c) return false;  // inconsistent
    x = Mat<K>(M.c, b.c);
    for (size_t rI = 0; rI < piv.size(); ++rI)
        for (long j = 0; j < b.c; ++j) x.at(piv[rI], j) = aug.at((long)rI, M.c + j);
    return true;
}

}  // namespace tama
