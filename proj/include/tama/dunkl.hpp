#pragma once

#include <algorithm>
#include <functional>

#include "tama/group_reps.hpp"
#include "tama/polynomial.hpp"

namespace tama {

// Polynomial with values in the 4-dimensional spinor module; component s is
// the coefficient of the s-th spinor basis vector.
template <class K>
using PolySpinor = std::array<Poly<K>, 4>;

// Per-parameter-pair bundle: group tables plus everything attached to each
// positive root.
template <class Ctx>
struct Session {
    using K = typename Ctx::K;

    struct RootData {
        PosRoot root;
        std::array<K, 4> vec;  // unit root vector
        Mat<K> refl;           // reflection on V
        K kap;                 // deformation parameter of the root's class
        CoverElement lift;     // chosen lift into the double cover
        Mat<K> spin;           // spinor factor of rho(lift)
    };

    Ctx ctx;
    GroupTables<Ctx> GT;
    std::vector<RootData> roots;
    K kappa_sum;  // sum of kap over all positive roots

    explicit Session(const Ctx& c) : ctx(c), GT(c) {
        for (const auto& r : positive_roots(ctx.m1, ctx.m2)) {
            RootData d;
            d.root = r;
            d.vec = root_vector(ctx, r);
            d.refl = reflection_matrix(ctx, r);
            d.kap = ctx.kap[kappa_index_of_root(r, ctx.m1, ctx.m2)];
            d.lift = r.first ? cover_s(ctx.m1, ctx.m2, r.p)
                             : cover_t(ctx.m1, ctx.m2, r.p);
            d.spin = spinor_matrix(ctx, clifford_lift(ctx, r));
            kappa_sum += d.kap;
            roots.push_back(std::move(d));
        }
    }
};

// Deformed directional derivative along x_j (j = 1..4). The difference
// quotient is an exact polynomial division; a nonzero remainder throws.
template <class Ctx>
Poly<typename Ctx::K> dunkl_apply(const Session<Ctx>& S, int j,
                                  const Poly<typename Ctx::K>& f) {
    auto out = pderiv(S.ctx, j, f);
    for (const auto& rd : S.roots) {
        if (kzero(rd.vec[j - 1])) continue;
        auto diff = f - substitute(f, rd.refl);
        if (diff.is_zero()) continue;
        out += divide_by_linear(diff, rd.vec).scaled(rd.kap * rd.vec[j - 1]);
    }
    return out;
}

// rho(g) on a polynomial spinor: substitution on the polynomial part,
// matrix action on the spinor part.
template <class Ctx>
PolySpinor<typename Ctx::K> act_group(const Session<Ctx>& S, const CoverElement& g,
                                      const PolySpinor<typename Ctx::K>& f) {
    using K = typename Ctx::K;
    Mat<K> Minv = S.GT.pi(cover_inv(g));
    Mat<K> Sp = S.GT.spin(g);
    PolySpinor<K> out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if (!kzero(Sp.at(r, c)))
                out[r] += substitute(f[c], Minv).scaled(Sp.at(r, c));
    return out;
}

// --- graded slices ---------------------------------------------------------
// Basis of the degree-d slice: monomials in lexicographically descending
// exponent order, four spinor components each (spinor index fastest).

inline std::vector<Expo> degree_monomials(int d) {
    std::vector<Expo> out;
    if (d < 0) return out;
    for (int e1 = d; e1 >= 0; --e1)
        for (int e2 = d - e1; e2 >= 0; --e2)
            for (int e3 = d - e1 - e2; e3 >= 0; --e3)
                out.push_back({e1, e2, e3, d - e1 - e2 - e3});
    return out;
}

inline long slice_dim(int d) {
    return d < 0 ? 0 : 4L * (d + 1) * (d + 2) * (d + 3) / 6;
}

struct DegreeBasis {
    int d;
    std::vector<Expo> mons;
    std::map<Expo, long> index;

    explicit DegreeBasis(int d_) : d(d_), mons(degree_monomials(d_)) {
        for (long i = 0; i < (long)mons.size(); ++i) index[mons[i]] = i;
    }
};

// Column vector of a homogeneous polynomial spinor in the slice basis.
template <class K>
void slice_decompose(const DegreeBasis& B, const PolySpinor<K>& f, Mat<K>& col,
                     long j) {
    for (int s = 0; s < 4; ++s)
        for (const auto& [e, c] : f[s].terms) {
            auto it = B.index.find(e);
            if (it == B.index.end())
                throw std::logic_error("inhomogeneous slice decomposition");
            col.at(4 * it->second + s, j) = c;
        }
}

// A degree-graded operator given by one matrix per source degree. blocks[d]
// maps the degree-d slice to the degree d+shift slice (a 0-row matrix when
// the target degree is negative).
template <class K>
struct SlicedOp {
    int shift = 0;
    int parity = 0;  // Clifford parity: 0 even, 1 odd
    int Dmax = -1;   // blocks[d] valid for 0 <= d <= Dmax
    std::vector<Mat<K>> blocks;

    bool is_zero() const {
        for (const auto& b : blocks)
            if (!b.is_zero()) return false;
        return true;
    }
};

template <class K>
SlicedOp<K> operator*(const SlicedOp<K>& A, const SlicedOp<K>& B) {
    SlicedOp<K> C;
    C.shift = A.shift + B.shift;
    C.parity = (A.parity + B.parity) % 2;
    C.Dmax = std::min<int>(B.Dmax, A.Dmax - B.shift);
    if (C.Dmax < 0) throw std::invalid_argument("operator windows do not overlap");
    for (int d = 0; d <= C.Dmax; ++d) {
        if (d + B.shift < 0)  // B lands in the zero space
            C.blocks.push_back(Mat<K>(slice_dim(d + C.shift), slice_dim(d)));
        else
            C.blocks.push_back(A.blocks[d + B.shift] * B.blocks[d]);
    }
    return C;
}

template <class K>
SlicedOp<K> operator+(const SlicedOp<K>& A, const SlicedOp<K>& B) {
    if (A.shift != B.shift) throw std::invalid_argument("adding different degree shifts");
    SlicedOp<K> C;
    C.shift = A.shift;
    C.parity = (A.parity == B.parity) ? A.parity : 0;
    C.Dmax = std::min(A.Dmax, B.Dmax);
    for (int d = 0; d <= C.Dmax; ++d) C.blocks.push_back(A.blocks[d] + B.blocks[d]);
    return C;
}

template <class K>
SlicedOp<K> operator-(const SlicedOp<K>& A) {
    SlicedOp<K> C = A;
    for (auto& b : C.blocks) b = -b;
    return C;
}

template <class K>
SlicedOp<K> operator-(const SlicedOp<K>& A, const SlicedOp<K>& B) {
    return A + (-B);
}

template <class K>
SlicedOp<K> operator*(const K& s, const SlicedOp<K>& A) {
    SlicedOp<K> C = A;
    for (auto& b : C.blocks) b = s * b;
    return C;
}

template <class K>
bool op_eq(const SlicedOp<K>& A, const SlicedOp<K>& B) {
    if (A.shift != B.shift) return false;
    int D = std::min(A.Dmax, B.Dmax);
    for (int d = 0; d <= D; ++d)
        if (!mat_eq(A.blocks[d], B.blocks[d])) return false;
    return true;
}

template <class K>
SlicedOp<K> commutator(const SlicedOp<K>& A, const SlicedOp<K>& B) {
    return A * B - B * A;
}

template <class K>
SlicedOp<K> anticommutator(const SlicedOp<K>& A, const SlicedOp<K>& B) {
    return A * B + B * A;
}

// Z_2-graded commutator with respect to the Clifford parity.
template <class K>
SlicedOp<K> graded_commutator(const SlicedOp<K>& A, const SlicedOp<K>& B) {
    return (A.parity && B.parity) ? anticommutator(A, B) : commutator(A, B);
}

// --- primitive operators ---------------------------------------------------

template <class Ctx>
SlicedOp<typename Ctx::K> op_identity(const Session<Ctx>& S, int Dmax) {
    using K = typename Ctx::K;
    SlicedOp<K> op;
    op.Dmax = Dmax;
    for (int d = 0; d <= Dmax; ++d)
        op.blocks.push_back(mat_identity<K>(slice_dim(d), S.ctx.one()));
    return op;
}

template <class Ctx>
SlicedOp<typename Ctx::K> op_scalar(const Session<Ctx>& S, const typename Ctx::K& c,
                                    int Dmax) {
    return c * op_identity(S, Dmax);
}

// multiplication by x_j
template <class Ctx>
SlicedOp<typename Ctx::K> op_x(const Session<Ctx>& S, int j, int Dmax) {
    using K = typename Ctx::K;
    SlicedOp<K> op;
    op.shift = 1;
    op.Dmax = Dmax;
    for (int d = 0; d <= Dmax; ++d) {
        DegreeBasis Bs(d), Bt(d + 1);
        Mat<K> M(slice_dim(d + 1), slice_dim(d));
        for (long m = 0; m < (long)Bs.mons.size(); ++m) {
            Expo e = Bs.mons[m];
            e[j - 1] += 1;
            long t = Bt.index.at(e);
            for (int s = 0; s < 4; ++s) M.at(4 * t + s, 4 * m + s) = S.ctx.one();
        }
        op.blocks.push_back(std::move(M));
    }
    return op;
}

// the deformed derivative along x_j
template <class Ctx>
SlicedOp<typename Ctx::K> op_dunkl(const Session<Ctx>& S, int j, int Dmax) {
    using K = typename Ctx::K;
    SlicedOp<K> op;
    op.shift = -1;
    op.Dmax = Dmax;
    for (int d = 0; d <= Dmax; ++d) {
        DegreeBasis Bs(d), Bt(d - 1);
        Mat<K> M(slice_dim(d - 1), slice_dim(d));
        for (long m = 0; m < (long)Bs.mons.size(); ++m) {
            auto img = dunkl_apply(S, j, Poly<K>::monomial(Bs.mons[m], S.ctx.one()));
            for (const auto& [e, c] : img.terms) {
                long t = Bt.index.at(e);
                for (int s = 0; s < 4; ++s) M.at(4 * t + s, 4 * m + s) = c;
            }
        }
        op.blocks.push_back(std::move(M));
    }
    return op;
}

// Clifford generator e_j acting on the spinor components
template <class Ctx>
SlicedOp<typename Ctx::K> op_e(const Session<Ctx>& S, int j, int Dmax) {
    using K = typename Ctx::K;
    CliffordElt<K> ej;
    ej.c[1u << (j - 1)] = S.ctx.one();
    Mat<K> E = spinor_matrix(S.ctx, ej);
    SlicedOp<K> op;
    op.parity = 1;
    op.Dmax = Dmax;
    for (int d = 0; d <= Dmax; ++d) {
        long nm = slice_dim(d) / 4;
        Mat<K> M(slice_dim(d), slice_dim(d));
        for (long m = 0; m < nm; ++m)
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) M.at(4 * m + r, 4 * m + c) = E.at(r, c);
        op.blocks.push_back(std::move(M));
    }
    return op;
}

// a general constant Clifford element acting on the spinor components
template <class Ctx>
SlicedOp<typename Ctx::K> op_clifford(const Session<Ctx>& S,
                                      const CliffordElt<typename Ctx::K>& x,
                                      int Dmax) {
    using K = typename Ctx::K;
    Mat<K> E = spinor_matrix(S.ctx, x);
    int par = -1;  // require homogeneous parity for a meaningful flag
    for (unsigned A = 0; A < 16; ++A) {
        if (kzero(x.c[A])) continue;
        int p = std::popcount(A) % 2;
        if (par < 0) par = p;
        else if (par != p) par = 0;
    }
    SlicedOp<K> op;
    op.parity = par < 0 ? 0 : par;
    op.Dmax = Dmax;
    for (int d = 0; d <= Dmax; ++d) {
        long nm = slice_dim(d) / 4;
        Mat<K> M(slice_dim(d), slice_dim(d));
        for (long m = 0; m < nm; ++m)
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) M.at(4 * m + r, 4 * m + c) = E.at(r, c);
        op.blocks.push_back(std::move(M));
    }
    return op;
}

// rho(g): substitution tensor spinor matrix
template <class Ctx>
SlicedOp<typename Ctx::K> op_group(const Session<Ctx>& S, const CoverElement& g,
                                   int Dmax) {
    using K = typename Ctx::K;
    Mat<K> Minv = S.GT.pi(cover_inv(g));
    Mat<K> Sp = S.GT.spin(g);
    SlicedOp<K> op;
    op.parity = g.clifford_parity();
    op.Dmax = Dmax;
    for (int d = 0; d <= Dmax; ++d) {
        DegreeBasis B(d);
        Mat<K> M(slice_dim(d), slice_dim(d));
        for (long m = 0; m < (long)B.mons.size(); ++m) {
            auto img = substitute(Poly<K>::monomial(B.mons[m], S.ctx.one()), Minv);
            for (const auto& [e, c] : img.terms) {
                long t = B.index.at(e);
                for (int r = 0; r < 4; ++r)
                    for (int col = 0; col < 4; ++col)
                        M.at(4 * t + r, 4 * m + col) += c * Sp.at(r, col);
            }
        }
        op.blocks.push_back(std::move(M));
    }
    return op;
}

// group action on the polynomial part only (identity on spinors); this is the
// reflection that enters the deformed commutation relation
template <class Ctx>
SlicedOp<typename Ctx::K> op_group_poly(const Session<Ctx>& S, const Mat<typename Ctx::K>& refl,
                                        int Dmax) {
    using K = typename Ctx::K;
    SlicedOp<K> op;
    op.Dmax = Dmax;
    for (int d = 0; d <= Dmax; ++d) {
        DegreeBasis B(d);
        Mat<K> M(slice_dim(d), slice_dim(d));
        for (long m = 0; m < (long)B.mons.size(); ++m) {
            auto img = substitute(Poly<K>::monomial(B.mons[m], S.ctx.one()), refl);
            for (const auto& [e, c] : img.terms) {
                long t = B.index.at(e);
                for (int s = 0; s < 4; ++s) M.at(4 * t + s, 4 * m + s) = c;
            }
        }
        op.blocks.push_back(std::move(M));
    }
    return op;
}

// --- the supersymmetric generators ----------------------------------------

// x-underline = sum_j x_j e_j (odd, shift +1)
template <class Ctx>
SlicedOp<typename Ctx::K> op_xvec(const Session<Ctx>& S, int Dmax) {
    auto acc = op_e(S, 1, Dmax + 1) * op_x(S, 1, Dmax);
    for (int j = 2; j <= 4; ++j) acc = acc + op_e(S, j, Dmax + 1) * op_x(S, j, Dmax);
    acc.parity = 1;
    return acc;
}

// D-underline = sum_j T_j e_j (odd, shift -1)
template <class Ctx>
SlicedOp<typename Ctx::K> op_dvec(const Session<Ctx>& S, int Dmax) {
    auto acc = op_e(S, 1, Dmax - 1) * op_dunkl(S, 1, Dmax);
    for (int j = 2; j <= 4; ++j)
        acc = acc + op_e(S, j, Dmax - 1) * op_dunkl(S, j, Dmax);
    acc.parity = 1;
    return acc;
}

// |x|^2, the deformed Laplacian, and the Euler operator
template <class Ctx>
SlicedOp<typename Ctx::K> op_normsq(const Session<Ctx>& S, int Dmax) {
    auto acc = op_x(S, 1, Dmax + 1) * op_x(S, 1, Dmax);
    for (int j = 2; j <= 4; ++j) acc = acc + op_x(S, j, Dmax + 1) * op_x(S, j, Dmax);
    return acc;
}

template <class Ctx>
SlicedOp<typename Ctx::K> op_laplacian(const Session<Ctx>& S, int Dmax) {
    auto acc = op_dunkl(S, 1, Dmax - 1) * op_dunkl(S, 1, Dmax);
    for (int j = 2; j <= 4; ++j)
        acc = acc + op_dunkl(S, j, Dmax - 1) * op_dunkl(S, j, Dmax);
    return acc;
}

template <class Ctx>
SlicedOp<typename Ctx::K> op_euler(const Session<Ctx>& S, int Dmax) {
    using K = typename Ctx::K;
    SlicedOp<K> acc;
    bool first = true;
    for (int j = 1; j <= 4; ++j) {
        auto xj1 = op_x(S, j, Dmax + 1);
        auto xj0 = op_x(S, j, Dmax - 1);
        auto tj0 = op_dunkl(S, j, Dmax);
        auto tj1 = op_dunkl(S, j, Dmax + 1);
        auto term = xj0 * tj0 + tj1 * xj1;
        acc = first ? term : acc + term;
        first = false;
    }
    return S.ctx.half() * acc;
}

}  // namespace tama
