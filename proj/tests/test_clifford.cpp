#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tama/group_reps.hpp"

using namespace tama;

namespace {

ExactCtx ctx22(2, 2);

CliffordElt<Scalar> cl_basis(unsigned mask, const Scalar& one) {
    CliffordElt<Scalar> x;
    x.c[mask] = one;
    return x;
}

CliffordElt<Scalar> cl_e(int j, const Scalar& one) { return cl_basis(1u << (j - 1), one); }

// independent sign oracle: multiply index words left to right, bubbling each
// new letter into sorted position with a sign per swap and cancelling squares
std::pair<int, unsigned> word_mul_oracle(unsigned A, unsigned B) {
    std::vector<int> word;
    for (int j = 1; j <= 4; ++j)
        if (A & (1u << (j - 1))) word.push_back(j);
    int sign = 1;
    for (int j = 1; j <= 4; ++j) {
        if (!(B & (1u << (j - 1)))) continue;
        int pos = (int)word.size();
        word.push_back(j);
        while (pos > 0 && word[pos - 1] > word[pos]) {
            std::swap(word[pos - 1], word[pos]);
            sign = -sign;
            --pos;
        }
        if (pos > 0 && word[pos - 1] == word[pos]) {
            word.erase(word.begin() + pos - 1, word.begin() + pos + 1);
        }
    }
    unsigned mask = 0;
    for (int j : word) mask |= 1u << (j - 1);
    return {sign, mask};
}

}  // namespace

TEST_CASE("clifford products against the word oracle") {
    auto one = ctx22.one();
    for (unsigned A = 0; A < 16; ++A) {
        for (unsigned B = 0; B < 16; ++B) {
            auto p = cl_mul(cl_basis(A, one), cl_basis(B, one));
            auto [sign, mask] = word_mul_oracle(A, B);
            for (unsigned C = 0; C < 16; ++C) {
                Scalar expect = (C == mask) ? (sign < 0 ? -one : one) : Scalar();
                CHECK(p.c[C] == expect);
            }
        }
    }
    // spec spot checks
    auto one1 = cl_mul(cl_e(1, one), cl_e(1, one));
    CHECK(one1.c[0] == one);
    auto p = cl_mul(cl_basis(0b0011, one), cl_basis(0b0101, one));
    CHECK(p.c[0b0110] == -one);  // e12 e13 = -e23
    auto q = cl_mul(cl_basis(0b1111, one), cl_basis(0b1111, one));
    CHECK(q.c[0] == one);
}

TEST_CASE("anticommutation relations") {
    auto one = ctx22.one();
    auto two = ctx22.from_rat(rat(2));
    for (int j = 1; j <= 4; ++j)
        for (int k = 1; k <= 4; ++k) {
            auto ac = cl_mul(cl_e(j, one), cl_e(k, one)) +
                      cl_mul(cl_e(k, one), cl_e(j, one));
            for (unsigned C = 0; C < 16; ++C)
                CHECK(ac.c[C] == ((C == 0 && j == k) ? two : Scalar()));
        }
}

TEST_CASE("wedge and quantization") {
    auto one = ctx22.one();
    auto x1 = ext_x(1, one), x2 = ext_x(2, one);
    CHECK(wedge(x1, x1).c == ExteriorElt<Scalar>{}.c);
    auto w12 = wedge(x1, x2);
    CHECK(w12.c[0b0011] == one);
    // gamma(x1 ^ x2) = e1 e2
    auto g = gamma(w12);
    auto e12 = cl_mul(cl_e(1, one), cl_e(2, one));
    for (unsigned C = 0; C < 16; ++C) CHECK(g.c[C] == e12.c[C]);

    // antisymmetrized formula as oracle on random decomposables
    std::mt19937 rng(23);
    auto rvec = [&] {
        std::array<Scalar, 4> v;
        for (auto& x : v)
            x = ctx22.from_rat(rat((long)(rng() % 7) - 3, 1 + rng() % 3)) *
                Scalar(cyc_make(ctx22.F, rng() % ctx22.L));
        return ext_vector(v);
    };
    auto half = ctx22.half();
    for (int t = 0; t < 10; ++t) {
        auto u = rvec(), v = rvec();
        auto lhs = gamma(wedge(u, v));
        auto rhs = half * (cl_mul(gamma(u), gamma(v)) - cl_mul(gamma(v), gamma(u)));
        for (unsigned C = 0; C < 16; ++C) CHECK(lhs.c[C] == rhs.c[C]);
    }
    // degree 3: gamma(u^v^w) = (1/6) sum_{perm} sign * product
    for (int t = 0; t < 5; ++t) {
        std::array<ExteriorElt<Scalar>, 3> vs{rvec(), rvec(), rvec()};
        auto lhs = gamma(wedge(wedge(vs[0], vs[1]), vs[2]));
        CliffordElt<Scalar> acc;
        int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                          {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
        for (int pi = 0; pi < 6; ++pi) {
            auto prod = cl_mul(cl_mul(gamma(vs[perm[pi][0]]), gamma(vs[perm[pi][1]])),
                               gamma(vs[perm[pi][2]]));
            acc = (pi < 3) ? acc + prod : acc - prod;
        }
        auto rhs = ctx22.from_rat(rat(1, 6)) * acc;
        for (unsigned C = 0; C < 16; ++C) CHECK(lhs.c[C] == rhs.c[C]);
    }
}

TEST_CASE("theta generators") {
    auto one = ctx22.one();
    auto i = ctx22.iu();
    auto half = ctx22.half();
    auto th = [&](int a, int sgn) {
        auto x = cl_e(2 * a - 1, one);
        auto y = cl_e(2 * a, one);
        return half * (x + (sgn > 0 ? i : -i) * y);
    };
    // Grassmann relations
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            for (int sa : {1, -1})
                for (int sb : {1, -1}) {
                    auto ac = cl_mul(th(a, sa), th(b, sb)) + cl_mul(th(b, sb), th(a, sa));
                    Scalar expect = (a == b && sa != sb) ? one : Scalar();
                    CHECK(ac.c[0] == expect);
                    for (unsigned C = 1; C < 16; ++C) CHECK(ac.c[C] == Scalar());
                }
}

TEST_CASE("spinor module") {
    auto one = ctx22.one();
    // theta-bar_1 sends 1 to thbar_1; theta_1 sends thbar_1^thbar_2 to thbar_2
    CHECK(theta_action(1, true, 0) == std::pair<int, int>{1, 1});
    CHECK(theta_action(1, false, 3) == std::pair<int, int>{2, 1});
    // module axiom on all basis pairs
    for (unsigned A = 0; A < 16; ++A)
        for (unsigned B = 0; B < 16; ++B) {
            auto lhs = spinor_matrix(ctx22, cl_mul(cl_basis(A, one), cl_basis(B, one)));
            auto rhs = spinor_matrix(ctx22, cl_basis(A, one)) *
                       spinor_matrix(ctx22, cl_basis(B, one));
            CHECK(mat_eq(lhs, rhs));
        }
}

TEST_CASE("gamma(alpha_p) on the vacuum") {
    for (auto [m1, m2] : {std::pair{2, 2}, {3, 3}, {4, 5}}) {
        ExactCtx ctx(m1, m2);
        for (int p = 1; p <= m1; ++p) {
            auto M = spinor_matrix(ctx, clifford_lift(ctx, PosRoot{true, p}));
            CHECK(M.at(0, 0) == Scalar());
            CHECK(M.at(1, 0) == -(ctx.iu() * ctx.zeta1(p)));
            CHECK(M.at(2, 0) == Scalar());
            CHECK(M.at(3, 0) == Scalar());
        }
    }
}

TEST_CASE("spinor module is U(1,1)") {
    for (auto [m1, m2] : {std::pair{2, 2}, {3, 3}, {4, 5}}) {
        ExactCtx ctx(m1, m2);
        GroupTables<ExactCtx> GT(ctx);
        // diagonal with the eigenvalue pattern of the proposition
        std::array<Scalar, 4> ev1{ctx.zeta1(1), ctx.zeta1(-1), ctx.zeta1(1),
                                  ctx.zeta1(-1)};
        std::array<Scalar, 4> ev2{ctx.zeta2(1), ctx.zeta2(1), ctx.zeta2(-1),
                                  ctx.zeta2(-1)};
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                CHECK(GT.sp_r1.at(r, c) == (r == c ? ev1[r] : Scalar()));
                CHECK(GT.sp_r2.at(r, c) == (r == c ? ev2[r] : Scalar()));
            }
        // the spinor factor is multiplicative over the cover
        std::mt19937 rng(9);
        for (int t = 0; t < 15; ++t) {
            CoverElement g{m1, m2, (int)(rng() % 2), (int)(rng() % m1),
                           (int)(rng() % m2), (int)(rng() % 2), (int)(rng() % 2)};
            CoverElement h{m1, m2, (int)(rng() % 2), (int)(rng() % m1),
                           (int)(rng() % m2), (int)(rng() % 2), (int)(rng() % 2)};
            CHECK(mat_eq(GT.spin(cover_mul(g, h)), GT.spin(g) * GT.spin(h)));
        }
    }
}
