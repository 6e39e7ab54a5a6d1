#include "tama/group_reps.hpp"

namespace tama {

Mat<Cyclotomic> SpinIrrep::rep(const CoverElement& g) const {
    const CycField* F = r1.at(0, 0).field();
    Mat<Cyclotomic> M = mat_identity<Cyclotomic>(dim, Cyclotomic(F, Rational(1)));
    if (g.a) M = -M;
    for (int t = 0; t < g.j; ++t) M = M * r1;
    for (int t = 0; t < g.k; ++t) M = M * r2;
    if (g.d1) M = M * f1;
    if (g.d2) M = M * f2;
    return M;
}

std::vector<SpinIrrep> spin_irreps(int m1, int m2) {
    const CycField* F = CycField::get(session_order(m1, m2));
    long L = F->L;
    auto z1 = [&](long e) { return cyc_make(F, e * (L / (2 * m1))); };
    auto z2 = [&](long e) { return cyc_make(F, e * (L / (2 * m2))); };
    auto one = Cyclotomic(F, Rational(1));
    auto mone = Cyclotomic(F, Rational(-1));

    std::vector<SpinIrrep> out;
    // four-dimensional family
    for (int l1 = 1; l1 < m1; l1 += 2) {
        for (int l2 = 1; l2 < m2; l2 += 2) {
            SpinIrrep U;
            U.l1 = l1;
            U.l2 = l2;
            U.dim = 4;
            U.f1 = Mat<Cyclotomic>(4, 4);
            U.f1.at(0, 1) = one;
            U.f1.at(1, 0) = one;
            U.f1.at(2, 3) = one;
            U.f1.at(3, 2) = one;
            U.f2 = Mat<Cyclotomic>(4, 4);
            U.f2.at(0, 2) = one;
            U.f2.at(1, 3) = mone;
            U.f2.at(2, 0) = one;
            U.f2.at(3, 1) = mone;
            U.r1 = Mat<Cyclotomic>(4, 4);
            U.r1.at(0, 0) = z1(l1);
            U.r1.at(1, 1) = z1(-l1);
            U.r1.at(2, 2) = z1(l1);
            U.r1.at(3, 3) = z1(-l1);
            U.r2 = Mat<Cyclotomic>(4, 4);
            U.r2.at(0, 0) = z2(l2);
            U.r2.at(1, 1) = z2(l2);
            U.r2.at(2, 2) = z2(-l2);
            U.r2.at(3, 3) = z2(-l2);
            out.push_back(std::move(U));
        }
    }
    // two-dimensional families
    if (m1 % 2 == 1) {
        for (int l2 = 1; l2 < 2 * m2; l2 += 2) {
            SpinIrrep U;
            U.l1 = m1;
            U.l2 = l2;
            U.dim = 2;
            U.f1 = Mat<Cyclotomic>(2, 2);
            U.f1.at(0, 0) = one;
            U.f1.at(1, 1) = mone;
            U.f2 = Mat<Cyclotomic>(2, 2);
            U.f2.at(0, 1) = one;
            U.f2.at(1, 0) = one;
            U.r1 = Mat<Cyclotomic>(2, 2);
            U.r1.at(0, 0) = mone;
            U.r1.at(1, 1) = mone;
            U.r2 = Mat<Cyclotomic>(2, 2);
            U.r2.at(0, 0) = z2(l2);
            U.r2.at(1, 1) = z2(-l2);
            out.push_back(std::move(U));
        }
    }
    if (m2 % 2 == 1) {
        for (int l1 = 1; l1 < 2 * m1; l1 += 2) {
            if (m1 % 2 == 1 && l1 == m1) continue;  // U(m1,m2) already listed
            SpinIrrep U;
            U.l1 = l1;
            U.l2 = m2;
            U.dim = 2;
            U.f1 = Mat<Cyclotomic>(2, 2);
            U.f1.at(0, 1) = one;
            U.f1.at(1, 0) = one;
            U.f2 = Mat<Cyclotomic>(2, 2);
            U.f2.at(0, 0) = one;
            U.f2.at(1, 1) = mone;
            U.r1 = Mat<Cyclotomic>(2, 2);
            U.r1.at(0, 0) = z1(l1);
            U.r1.at(1, 1) = z1(-l1);
            U.r2 = Mat<Cyclotomic>(2, 2);
            U.r2.at(0, 0) = mone;
            U.r2.at(1, 1) = mone;
            out.push_back(std::move(U));
        }
    }
    return out;
}

}  // namespace tama
