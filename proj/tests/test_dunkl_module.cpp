#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tama/dunkl.hpp"

using namespace tama;

TEST_CASE("deformed derivative on coordinates") {
    // T_1(x_1) = 1 + 2 kappa_1 for both dihedral parameters equal to 2
    ExactCtx ctx(2, 2);
    Session<ExactCtx> S(ctx);
    auto x1 = Poly<Scalar>::var(1, ctx.one());
    auto img = dunkl_apply(S, 1, x1);
    Scalar expect = ctx.one() + ctx.from_rat(rat(2)) * ctx.kap[0];
    CHECK(img.terms.size() == 1);
    CHECK(img.terms.at(Expo{0, 0, 0, 0}) == expect);
    // T_1(x_3) = 0: the two factors act on orthogonal planes
    CHECK(dunkl_apply(S, 1, Poly<Scalar>::var(3, ctx.one())).is_zero());
    // undeformed part survives: T_3(x_3) = 1 + 2 kappa_3
    auto img3 = dunkl_apply(S, 3, Poly<Scalar>::var(3, ctx.one()));
    CHECK(img3.terms.at(Expo{0, 0, 0, 0}) == ctx.one() + ctx.from_rat(rat(2)) * ctx.kap[2]);
}

TEST_CASE("slice bookkeeping") {
    CHECK(slice_dim(0) == 4);
    CHECK(slice_dim(1) == 16);
    CHECK(slice_dim(2) == 40);
    CHECK(slice_dim(-1) == 0);
    CHECK(degree_monomials(3).size() == 20);
    // descending lex order
    auto m = degree_monomials(2);
    CHECK(m.front() == Expo{2, 0, 0, 0});
    CHECK(m.back() == Expo{0, 0, 0, 2});
}

TEST_CASE("deformed derivatives commute") {
    for (auto [m1, m2] : {std::pair{2, 2}, {3, 2}}) {
        ExactCtx ctx(m1, m2);
        Session<ExactCtx> S(ctx);
        const int D = 4;
        std::array<SlicedOp<Scalar>, 4> T{op_dunkl(S, 1, D), op_dunkl(S, 2, D),
                                          op_dunkl(S, 3, D), op_dunkl(S, 4, D)};
        for (int j = 0; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k)
                CHECK(commutator(T[j], T[k]).is_zero());
    }
}

TEST_CASE("deformed commutation relation with coordinates") {
    // [T_j, x_k] = delta_jk + sum_alpha 2 kappa_alpha alpha_j alpha_k s_alpha
    for (auto [m1, m2] : {std::pair{2, 2}, {3, 3}}) {
        ExactCtx ctx(m1, m2);
        Session<ExactCtx> S(ctx);
        const int D = 3;
        Scalar two = ctx.from_rat(rat(2));
        for (int j = 1; j <= 4; ++j)
            for (int k = 1; k <= 4; ++k) {
                auto lhs = op_dunkl(S, k, D + 1) * op_x(S, j, D) -
                           op_x(S, j, D - 1) * op_dunkl(S, k, D);
                auto rhs = (j == k) ? op_identity(S, D) : Scalar() * op_identity(S, D);
                for (const auto& rd : S.roots) {
                    Scalar c = two * rd.kap * rd.vec[j - 1] * rd.vec[k - 1];
                    if (c.is_zero()) continue;
                    rhs = rhs + c * op_group_poly(S, rd.refl, D);
                }
                CHECK(op_eq(lhs, rhs));
            }
    }
}

TEST_CASE("Euler operator is scalar on each slice") {
    for (auto [m1, m2] : {std::pair{2, 2}, {3, 2}, {4, 3}}) {
        ExactCtx ctx(m1, m2);
        Session<ExactCtx> S(ctx);
        const int D = 3;
        auto E = op_euler(S, D);
        for (int d = 0; d <= D; ++d) {
            Scalar ev = ctx.from_rat(rat(d + 2)) + S.kappa_sum;
            CHECK(mat_eq(E.blocks[d], ev * mat_identity<Scalar>(slice_dim(d), ctx.one())));
        }
    }
}

TEST_CASE("supersymmetry relations") {
    for (auto [m1, m2] : {std::pair{2, 2}, {3, 2}}) {
        ExactCtx ctx(m1, m2);
        Session<ExactCtx> S(ctx);
        const int D = 4;
        Scalar two = ctx.from_rat(rat(2));
        auto X = op_xvec(S, D);
        auto Dd = op_dvec(S, D);
        CHECK(op_eq(graded_commutator(X, X), two * op_normsq(S, D - 1)));
        CHECK(op_eq(graded_commutator(Dd, Dd), two * op_laplacian(S, D)));
        CHECK(op_eq(graded_commutator(Dd, X), two * op_euler(S, D - 1)));
        // sl(2) relations among the even part
        auto E = op_euler(S, D);
        auto R2 = op_normsq(S, D);
        auto L = op_laplacian(S, D);
        CHECK(op_eq(commutator(E, R2), two * op_normsq(S, D - 2)));
        CHECK(op_eq(commutator(E, L), -(two * op_laplacian(S, D - 1))));
        CHECK(op_eq(commutator(L, R2),
                    ctx.from_rat(rat(4)) * op_euler(S, D - 2)));
    }
}

TEST_CASE("group equivariance of the Dirac element") {
    // rho(g) graded-commutes with D-underline: even elements commute, odd
    // ones anticommute (Clifford conjugation flips the sign of vectors)
    ExactCtx ctx(3, 2);
    Session<ExactCtx> S(ctx);
    const int D = 3;
    auto Dd = op_dvec(S, D);
    for (const auto& g : cover_enumerate(3, 2)) {
        auto G = op_group(S, g, D);
        CHECK(graded_commutator(G, Dd).is_zero());
    }
}

TEST_CASE("materialized group action matches the direct one") {
    ExactCtx ctx(3, 3);
    Session<ExactCtx> S(ctx);
    std::mt19937 rng(41);
    for (int t = 0; t < 6; ++t) {
        CoverElement g{3, 3, (int)(rng() % 2), (int)(rng() % 3), (int)(rng() % 3),
                       (int)(rng() % 2), (int)(rng() % 2)};
        int d = 2;
        DegreeBasis B(d);
        auto G = op_group(S, g, d);
        // random homogeneous polynomial spinor
        PolySpinor<Scalar> f;
        Mat<Scalar> col(slice_dim(d), 1);
        for (long m = 0; m < (long)B.mons.size(); ++m)
            for (int s = 0; s < 4; ++s) {
                Scalar c = ctx.from_rat(rat((long)(rng() % 9) - 4));
                f[s] += Poly<Scalar>::monomial(B.mons[m], c);
                col.at(4 * m + s, 0) = c;
            }
        auto direct = act_group(S, g, f);
        Mat<Scalar> want(slice_dim(d), 1);
        slice_decompose(B, direct, want, 0);
        CHECK(mat_eq(G.blocks[d] * col, want));
    }
}

TEST_CASE("kernel of the Dirac element has the free dimension") {
    ExactCtx ctx(2, 2, {rat(1, 3), rat(1, 5), rat(1, 7), rat(1, 9)});
    Session<ExactCtx> S(ctx);
    auto Dd = op_dvec(S, 3);
    for (int d = 0; d <= 2; ++d) {
        auto ker = kernel_basis(Dd.blocks[d], ctx.one());
        CHECK(ker.c == 2 * (d + 1) * (d + 2));
    }
}
