#pragma once

#include <array>
#include <bit>

#include "tama/matrix.hpp"

namespace tama {

// Rank-4 Clifford algebra with e_j^2 = +1, basis e_A indexed by 4-bit masks
// (bit j-1 <-> e_j, factors in increasing index order). ExteriorElt shares the
// storage but multiplies by wedge.
template <class K>
struct CliffordElt {
    std::array<K, 16> c{};
};

template <class K>
struct ExteriorElt {
    std::array<K, 16> c{};
};

// sign of e_A * e_B before cancelling squares: count transpositions needed to
// merge B's factors into A
inline int merge_sign(unsigned A, unsigned B) {
    int swaps = 0;
    for (unsigned b = 0; b < 4; ++b) {
        if (!(B & (1u << b))) continue;
        // e_{b+1} moves left past the factors of A with index > b+1
        swaps += std::popcount(A >> (b + 1));
    }
    return (swaps % 2) ? -1 : 1;
}

template <class K>
CliffordElt<K> cl_mul(const CliffordElt<K>& x, const CliffordElt<K>& y) {
    CliffordElt<K> out;
    for (unsigned A = 0; A < 16; ++A) {
        if (kzero(x.c[A])) continue;
        for (unsigned B = 0; B < 16; ++B) {
            if (kzero(y.c[B])) continue;
            int s = merge_sign(A, B);
            K term = x.c[A] * y.c[B];
            out.c[A ^ B] += (s < 0) ? -term : term;
        }
    }
    return out;
}

template <class K>
ExteriorElt<K> wedge(const ExteriorElt<K>& x, const ExteriorElt<K>& y) {
    ExteriorElt<K> out;
    for (unsigned A = 0; A < 16; ++A) {
        if (kzero(x.c[A])) continue;
        for (unsigned B = 0; B < 16; ++B) {
            if (kzero(y.c[B])) continue;
            if (A & B) continue;  // repeated factor
            int s = merge_sign(A, B);
            K term = x.c[A] * y.c[B];
            out.c[A | B] += (s < 0) ? -term : term;
        }
    }
    return out;
}

// quantization: basis-wise x_A -> e_A, extended linearly
template <class K>
CliffordElt<K> gamma(const ExteriorElt<K>& v) {
    CliffordElt<K> out;
    out.c = v.c;
    return out;
}

template <class K>
ExteriorElt<K> ext_basis(unsigned mask, const K& one) {
    ExteriorElt<K> out;
    out.c[mask] = one;
    return out;
}

// x_j as a 1-vector (j = 1..4)
template <class K>
ExteriorElt<K> ext_x(int j, const K& one) {
    return ext_basis(1u << (j - 1), one);
}

template <class K>
ExteriorElt<K> ext_vector(const std::array<K, 4>& v) {
    ExteriorElt<K> out;
    for (int j = 0; j < 4; ++j) out.c[1u << j] = v[j];
    return out;
}

template <class K>
ExteriorElt<K> operator+(const ExteriorElt<K>& a, const ExteriorElt<K>& b) {
    ExteriorElt<K> out = a;
    for (int i = 0; i < 16; ++i) out.c[i] += b.c[i];
    return out;
}
template <class K>
ExteriorElt<K> operator-(const ExteriorElt<K>& a, const ExteriorElt<K>& b) {
    ExteriorElt<K> out = a;
    for (int i = 0; i < 16; ++i) out.c[i] -= b.c[i];
    return out;
}
template <class K>
ExteriorElt<K> operator*(const K& s, const ExteriorElt<K>& a) {
    ExteriorElt<K> out = a;
    for (auto& x : out.c) x = s * x;
    return out;
}
template <class K>
CliffordElt<K> operator+(const CliffordElt<K>& a, const CliffordElt<K>& b) {
    CliffordElt<K> out = a;
    for (int i = 0; i < 16; ++i) out.c[i] += b.c[i];
    return out;
}
template <class K>
CliffordElt<K> operator-(const CliffordElt<K>& a, const CliffordElt<K>& b) {
    CliffordElt<K> out = a;
    for (int i = 0; i < 16; ++i) out.c[i] -= b.c[i];
    return out;
}
template <class K>
CliffordElt<K> operator*(const K& s, const CliffordElt<K>& a) {
    CliffordElt<K> out = a;
    for (auto& x : out.c) x = s * x;
    return out;
}

// --- the spinor module ---------------------------------------------------
// Basis of S = wedge(thbar_1, thbar_2): index mask b, bit a-1 set when
// thbar_a present; order (1, thbar_1, thbar_2, thbar_1^thbar_2).
//
// thbar_a = (e_{2a-1} - i e_{2a})/2 multiplies (left wedge), th_a is the odd
// derivation with th_a(thbar_b) = delta_ab.

// action of th_a^{sig} on a spinor basis vector b: returns (target, coeff in
// {+1,-1,0})
inline std::pair<int, int> theta_action(int a, bool bar, int b) {
    int bit = 1 << (a - 1);
    if (bar ? (b & bit) != 0 : (b & bit) == 0) return {0, 0};
    // sign: odd operators pass the factors with smaller index
    int sign = 1;
    for (int i = 1; i < a; ++i)
        if (b & (1 << (i - 1))) sign = -sign;
    return {bar ? (b | bit) : (b & ~bit), sign};
}

// 4x4 matrix of the Clifford element acting on S, in the spinor basis order
// above; needs i from the context
template <class Ctx>
Mat<typename Ctx::K> spinor_matrix(const Ctx& ctx,
                                   const CliffordElt<typename Ctx::K>& x) {
    using K = typename Ctx::K;
    Mat<K> M(4, 4);
    // e_{2a-1} = th_a + thbar_a, e_{2a} = i(thbar_a - th_a)
    auto add_gen_action = [&](int j, std::array<K, 4>& vec) {
        // apply e_j to the spinor vector in place
        std::array<K, 4> out{};
        int a = (j + 1) / 2;  // 1..2
        bool second = (j % 2 == 0);
        for (int b = 0; b < 4; ++b) {
            if (kzero(vec[b])) continue;
            auto [t1, s1] = theta_action(a, false, b);  // th_a
            auto [t2, s2] = theta_action(a, true, b);   // thbar_a
            if (!second) {
                if (s1) out[t1] += (s1 < 0 ? -vec[b] : vec[b]);
                if (s2) out[t2] += (s2 < 0 ? -vec[b] : vec[b]);
            } else {
                K iv = ctx.iu() * vec[b];
                if (s2) out[t2] += (s2 < 0 ? -iv : iv);
                if (s1) out[t1] -= (s1 < 0 ? -iv : iv);
            }
        }
        vec = out;
    };
    for (int col = 0; col < 4; ++col) {
        for (unsigned A = 0; A < 16; ++A) {
            if (kzero(x.c[A])) continue;
            std::array<K, 4> vec{};
            vec[col] = ctx.one();
            // e_A = e_{j1} e_{j2} ... with j1 < j2 < ...; rightmost acts first
            for (int j = 4; j >= 1; --j)
                if (A & (1u << (j - 1))) add_gen_action(j, vec);
            for (int row = 0; row < 4; ++row) M.at(row, col) += x.c[A] * vec[row];
        }
    }
    return M;
}

}  // namespace tama
