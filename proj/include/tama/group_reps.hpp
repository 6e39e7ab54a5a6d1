#pragma once

#include "tama/clifford.hpp"
#include "tama/context.hpp"
#include "tama/cover.hpp"

namespace tama {

// positive root indexed within its factor: alpha_p (first) or beta_q (second)
struct PosRoot {
    bool first;  // alpha vs beta
    int p;       // 1..m within the factor (paper's p resp. q)
};

// all m1 + m2 positive roots, alphas first
inline std::vector<PosRoot> positive_roots(int m1, int m2) {
    std::vector<PosRoot> out;
    for (int p = 1; p <= m1; ++p) out.push_back({true, p});
    for (int q = 1; q <= m2; ++q) out.push_back({false, q});
    return out;
}

// 0-based index into ctx.kap: odd-index alphas -> kappa1, even -> kappa2
// (collapsed when m odd); betas -> kappa3/kappa4
inline int kappa_index_of_root(const PosRoot& r, int m1, int m2) {
    if (r.first) return (m1 % 2 || r.p % 2) ? 0 : 1;
    return (m2 % 2 || r.p % 2) ? 2 : 3;
}

template <class Ctx>
std::array<typename Ctx::K, 4> root_vector(const Ctx& ctx, const PosRoot& r) {
    using K = typename Ctx::K;
    std::array<K, 4> v{ctx.zero(), ctx.zero(), ctx.zero(), ctx.zero()};
    if (r.first) {
        v[0] = ctx.sin1(r.p);
        v[1] = -ctx.cos1(r.p);
    } else {
        v[2] = ctx.sin2(r.p);
        v[3] = -ctx.cos2(r.p);
    }
    return v;
}

// reflection matrix of the root (orthogonal, order 2)
template <class Ctx>
Mat<typename Ctx::K> reflection_matrix(const Ctx& ctx, const PosRoot& r) {
    using K = typename Ctx::K;
    Mat<K> M = mat_identity<K>(4, ctx.one());
    int o = r.first ? 0 : 2;
    K c = r.first ? ctx.cos1(2 * r.p) : ctx.cos2(2 * r.p);
    K s = r.first ? ctx.sin1(2 * r.p) : ctx.sin2(2 * r.p);
    M.at(o, o) = c;
    M.at(o, o + 1) = s;
    M.at(o + 1, o) = s;
    M.at(o + 1, o + 1) = -c;
    return M;
}

// gamma(alpha_p) resp. gamma(beta_q) as a Clifford element
template <class Ctx>
CliffordElt<typename Ctx::K> clifford_lift(const Ctx& ctx, const PosRoot& r) {
    using K = typename Ctx::K;
    CliffordElt<K> out;
    if (r.first) {
        out.c[1] = ctx.sin1(r.p);   // e1
        out.c[2] = -ctx.cos1(r.p);  // e2
    } else {
        out.c[4] = ctx.sin2(r.p);   // e3
        out.c[8] = -ctx.cos2(r.p);  // e4
    }
    return out;
}

// pi and the spinor action for arbitrary cover elements, built from the
// generator matrices once
template <class Ctx>
struct GroupTables {
    using K = typename Ctx::K;
    int m1, m2;
    Mat<K> pi_r1, pi_r2, pi_f1, pi_f2;
    Mat<K> sp_r1, sp_r2, sp_f1, sp_f2;
    Mat<K> id4;

    explicit GroupTables(const Ctx& ctx) : m1(ctx.m1), m2(ctx.m2) {
        id4 = mat_identity<K>(4, ctx.one());
        PosRoot a1{true, 1}, am{true, m1}, b1{false, 1}, bm{false, m2};
        pi_f1 = reflection_matrix(ctx, am);
        pi_f2 = reflection_matrix(ctx, bm);
        pi_r1 = reflection_matrix(ctx, am) * reflection_matrix(ctx, a1);
        pi_r2 = reflection_matrix(ctx, bm) * reflection_matrix(ctx, b1);
        sp_f1 = spinor_matrix(ctx, clifford_lift(ctx, am));
        sp_f2 = spinor_matrix(ctx, clifford_lift(ctx, bm));
        // r1 = z s_{m1} s_1 and z acts by -1 on spinors
        sp_r1 = -(sp_f1 * spinor_matrix(ctx, clifford_lift(ctx, a1)));
        sp_r2 = -(sp_f2 * spinor_matrix(ctx, clifford_lift(ctx, b1)));
    }

    Mat<K> pi(const CoverElement& g) const {
        Mat<K> M = id4;
        for (int t = 0; t < g.j; ++t) M = M * pi_r1;
        for (int t = 0; t < g.k; ++t) M = M * pi_r2;
        if (g.d1) M = M * pi_f1;
        if (g.d2) M = M * pi_f2;
        return M;
    }

    // spinor factor of rho(g), including (-1)^a
    Mat<K> spin(const CoverElement& g) const {
        Mat<K> M = id4;
        if (g.a) M = -M;
        for (int t = 0; t < g.j; ++t) M = M * sp_r1;
        for (int t = 0; t < g.k; ++t) M = M * sp_r2;
        if (g.d1) M = M * sp_f1;
        if (g.d2) M = M * sp_f2;
        return M;
    }
};

// --- spin irreps of the double cover (exact) ------------------------------

struct SpinIrrep {
    int l1, l2;  // label
    int dim;     // 2 or 4
    Mat<Cyclotomic> r1, r2, f1, f2;

    Mat<Cyclotomic> rep(const CoverElement& g) const;
};

std::vector<SpinIrrep> spin_irreps(int m1, int m2);

}  // namespace tama
