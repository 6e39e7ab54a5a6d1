#include "tama/cover.hpp"

namespace {

using tama::CoverElement;

void check_params(const CoverElement& g, const CoverElement& h) {
    if (g.m1 != h.m1 || g.m2 != h.m2)
        throw std::invalid_argument("cover elements with different dihedral parameters");
}

// left-multiplication by single generators on a canonical word
void lz(CoverElement& w) { w.a ^= 1; }

void lr1(CoverElement& w) {
    if (++w.j == w.m1) {
        w.j = 0;
        w.a ^= 1;
    }
}

void lr2(CoverElement& w) {
    if (++w.k == w.m2) {
        w.k = 0;
        w.a ^= 1;
    }
}

void lf1(CoverElement& w) {
    // f1 z^a r1^j r2^k ... = z^a (r1^{-j} f1) r2^k ...; f1 commutes with r2,
    // and f1 f1^{d1} collapses
    if (w.j > 0) {
        w.j = w.m1 - w.j;
        w.a ^= 1;
    }
    w.d1 ^= 1;
}

void lf2(CoverElement& w) {
    if (w.k > 0) {
        w.k = w.m2 - w.k;
        w.a ^= 1;
    }
    if (w.d1 == 1) w.a ^= 1;  // f2 f1 = z f1 f2
    w.d2 ^= 1;
}

// left-multiply w by the canonical word of g
CoverElement leftmul(const CoverElement& g, CoverElement w) {
    if (g.d2) lf2(w);
    if (g.d1) lf1(w);
    for (int t = 0; t < g.k; ++t) lr2(w);
    for (int t = 0; t < g.j; ++t) lr1(w);
    if (g.a) lz(w);
    return w;
}

}  // namespace

namespace tama {

CoverElement cover_identity(int m1, int m2) { return {m1, m2, 0, 0, 0, 0, 0}; }
CoverElement cover_z(int m1, int m2) { return {m1, m2, 1, 0, 0, 0, 0}; }
CoverElement cover_r1(int m1, int m2) {
    CoverElement w = cover_identity(m1, m2);
    lr1(w);
    return w;
}
CoverElement cover_r2(int m1, int m2) {
    CoverElement w = cover_identity(m1, m2);
    lr2(w);
    return w;
}
CoverElement cover_f1(int m1, int m2) { return {m1, m2, 0, 0, 0, 1, 0}; }
CoverElement cover_f2(int m1, int m2) { return {m1, m2, 0, 0, 0, 0, 1}; }

CoverElement cover_mul(const CoverElement& g, const CoverElement& h) {
    check_params(g, h);
    return leftmul(g, h);
}

CoverElement cover_inv(const CoverElement& g) {
    // (z^a r1^j r2^k f1^{d1} f2^{d2})^{-1} = f2^{d2} f1^{d1} r2^{-k} r1^{-j} z^a
    CoverElement w = cover_identity(g.m1, g.m2);
    if (g.a) lz(w);
    for (int t = 0; t < g.j; ++t) {  // left-multiply by r1^{-1} = z r1^{m1-1}
        for (int s = 0; s < g.m1 - 1; ++s) lr1(w);
        lz(w);
    }
    for (int t = 0; t < g.k; ++t) {
        for (int s = 0; s < g.m2 - 1; ++s) lr2(w);
        lz(w);
    }
    if (g.d1) lf1(w);
    if (g.d2) lf2(w);
    return w;
}

// The lift realizing s_p (x) gamma(alpha_p) under the rotation convention
// r1 = z s_{m1} s_1 is s_p = r1^{m1-p} f1 (the sign-flipped form of the
// z r1^p f1 expression, see the reflection-lift tests).
CoverElement cover_s(int m1, int m2, int p) {
    CoverElement w = cover_f1(m1, m2);
    for (int t = 0; t < m1 - (p % m1); ++t) lr1(w);
    if (p % m1 == 0) lz(w);  // undo the z from the full turn r1^{m1} = z
    return w;
}

CoverElement cover_t(int m1, int m2, int q) {
    CoverElement w = cover_f2(m1, m2);
    for (int t = 0; t < m2 - (q % m2); ++t) lr2(w);
    if (q % m2 == 0) lz(w);
    return w;
}

std::vector<CoverElement> cover_enumerate(int m1, int m2) {
    std::vector<CoverElement> out;
    out.reserve(8 * m1 * m2);
    for (int a = 0; a < 2; ++a)
        for (int j = 0; j < m1; ++j)
            for (int k = 0; k < m2; ++k)
                for (int d1 = 0; d1 < 2; ++d1)
                    for (int d2 = 0; d2 < 2; ++d2)
                        out.push_back({m1, m2, a, j, k, d1, d2});
    return out;
}

std::pair<CoverElement, bool> longest_element(int m1, int m2) {
    // longest element of each dihedral factor as the alternating product of
    // the two simple reflections, m letters long
    CoverElement w = cover_identity(m1, m2);
    for (int t = 0; t < m1; ++t)
        w = cover_mul(t % 2 ? cover_s(m1, m2, 1) : cover_s(m1, m2, m1), w);
    for (int t = 0; t < m2; ++t)
        w = cover_mul(t % 2 ? cover_t(m1, m2, 1) : cover_t(m1, m2, m2), w);
    return {w, m1 % 2 == 0 && m2 % 2 == 0};
}

}  // namespace tama
