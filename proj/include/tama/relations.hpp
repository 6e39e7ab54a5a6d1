#pragma once

#include "tama/ops.hpp"

namespace tama {

namespace detail {

// run a family of instances, reporting the first failure
template <class F>
CheckOutcome all_of(F&& f) {
    return f();
}

}  // namespace detail

template <class Ctx>
std::vector<RelEntry> relation_suite(Ops<Ctx>& A, const std::string& which) {
    using K = typename Ctx::K;
    using Op = SlicedOp<K>;
    const int D = A.D;
    const int m1 = A.S.ctx.m1, m2 = A.S.ctx.m2;
    std::vector<RelEntry> out;
    auto want = [&](const std::string& s) { return which == "all" || which == s; };
    auto add = [&](std::string suite, std::string id, std::string anchor,
                   std::function<CheckOutcome()> fn) {
        out.push_back({std::move(id), std::move(anchor), std::move(suite), std::move(fn)});
    };
    auto acomm = [](const Op& X, const Op& Y) { return anticommutator(X, Y); };
    auto comm = [](const Op& X, const Op& Y) { return commutator(X, Y); };

    if (want("osp")) {
        add("osp", "osp-closure", "closure of the five-element superalgebra", [&A, D] {
            auto& X = A.xvec_;
            auto& Dd = A.dvec_;
            auto two = A.sc(2), four = A.sc(4);
            CheckOutcome r;
            r = first_diff(graded_commutator(X, X), two * A.normsq_, D);
            if (!r.pass) return r;
            r = first_diff(graded_commutator(Dd, Dd), two * A.lap_, D);
            if (!r.pass) return r;
            r = first_diff(graded_commutator(Dd, X), two * A.euler_, D);
            if (!r.pass) return r;
            Op Ew = op_euler(A.S, A.W);
            r = first_diff(commutator(Ew, A.normsq_), two * trim(A.normsq_, D), D);
            if (!r.pass) return r;
            r = first_diff(commutator(A.euler_, A.lap_), -(two * trim(A.lap_, D + 1)), D);
            if (!r.pass) return r;
            return first_diff(commutator(A.lap_, A.normsq_), four * trim(A.euler_, D), D);
        });
        add("osp", "projector-idempotent",
            "double application of the centraliser projection is itself", [&A, D] {
                for (unsigned mask = 0; mask < 16; ++mask) {
                    Op g = A.gam(ext_basis(mask, A.ctx().one()));
                    Op p = A.P(g);
                    auto r = first_diff(A.P(p), p, D);
                    if (!r.pass) return r;
                }
                return CheckOutcome{};
            });
        add("osp", "centraliser",
            "wedge-basis symmetries graded-commute with the superalgebra", [&A, D] {
                for (unsigned mask = 0; mask < 16; ++mask) {
                    Op O = trim(A.Oo(mask), A.W - 1);
                    for (const Op* X :
                         {&A.xvec_, &A.dvec_, &A.euler_, &A.normsq_, &A.lap_}) {
                        Op C = graded_commutator(O, *X);
                        auto r = first_nonzero(C, std::min(D, C.Dmax));
                        if (!r.pass) return r;
                    }
                }
                return CheckOutcome{};
            });
        add("osp", "cross-construction",
            "explicit symmetry formulas agree with the projection construction",
            [&A, D] {
                for (unsigned mask = 1; mask < 15; ++mask) {
                    auto r = first_diff(A.Oo(mask),
                                        A.O_P(ext_basis(mask, A.ctx().one())), D);
                    if (!r.pass) return r;
                }
                return CheckOutcome{};
            });
    }

    if (want("tamarel")) {
        add("tamarel", "group-equivariance",
            "conjugating a symmetry by the group twists its wedge label", [&A, D, m1, m2] {
                std::vector<CoverElement> gens{
                    {m1, m2, 1, 0, 0, 0, 0}, {m1, m2, 0, 1, 0, 0, 0},
                    {m1, m2, 0, 0, 1, 0, 0}, {m1, m2, 0, 0, 0, 1, 0},
                    {m1, m2, 0, 0, 0, 0, 1}};
                for (const auto& g : gens) {
                    Mat<K> pi = A.S.GT.pi(g);
                    Op R = A.rhoD(g);
                    for (unsigned mask = 0; mask < 16; ++mask) {
                        int k = std::popcount(mask);
                        K s = (k * g.clifford_parity()) % 2 ? -A.ctx().one() : A.ctx().one();
                        Op lhs = R * A.O(mask);
                        Op rhs = s * (A.from_ext(ext_map(pi, ext_basis(mask, A.ctx().one()))) * R);
                        auto r = first_diff(lhs, rhs, D);
                        if (!r.pass) return r;
                    }
                }
                return CheckOutcome{};
            });
        add("tamarel", "comm-2ind-2ind",
            "graded commutator of two 2-index symmetries", [&A, D, comm, acomm] {
                auto m = [](int a, int b) { return (1u << (a - 1)) | (1u << (b - 1)); };
                auto m3 = [&](int a, int b, int c) { return m(a, b) | (1u << (c - 1)); };
                auto O1 = [&](int a) { return A.O(1u << (a - 1)); };
                for (int a = 1; a <= 4; ++a)
                    for (int b = a + 1; b <= 4; ++b)
                        for (int p = 1; p <= 4; ++p)
                            for (int q = p + 1; q <= 4; ++q) {
                                auto Aop = [&](int u, int v) {
                                    // antisymmetric combination O_uv + [O_u, O_v]
                                    if (u == v) return A.sc(0) * A.idD();
                                    Op base = u < v ? A.O(m(u, v)) : -A.O(m(v, u));
                                    return base + comm(O1(u), O1(v));
                                };
                                auto O3s = [&](int u, int v, int w) {
                                    // signed 3-index symmetry, zero on repeats
                                    int idx[3] = {u, v, w};
                                    int sgn = 1;
                                    for (int i = 0; i < 3; ++i)
                                        for (int j = i + 1; j < 3; ++j) {
                                            if (idx[i] == idx[j]) sgn = 0;
                                            else if (idx[i] > idx[j]) {
                                                std::swap(idx[i], idx[j]);
                                                sgn = -sgn;
                                            }
                                        }
                                    if (!sgn) return A.sc(0) * A.idD();
                                    Op base = A.O(m3(idx[0], idx[1], idx[2]));
                                    return sgn > 0 ? base : -base;
                                };
                                auto dl = [&](int u, int v) { return u == v ? 1 : 0; };
                                Op lhs = comm(A.O(m(a, b)), A.O(m(p, q)));
                                Op rhs = A.sc(dl(b, p)) * Aop(a, q) -
                                         A.sc(dl(b, q)) * Aop(a, p) -
                                         A.sc(dl(a, p)) * Aop(b, q) +
                                         A.sc(dl(a, q)) * Aop(b, p) +
                                         acomm(O1(a), O3s(b, p, q)) -
                                         acomm(O1(b), O3s(a, p, q));
                                auto r = first_diff(lhs, rhs, D);
                                if (!r.pass) return r;
                            }
                return CheckOutcome{};
            });
        add("tamarel", "comm-2ind-3ind",
            "commutator of a 2-index with a 3-index symmetry sharing one slot",
            [&A, D, comm, acomm] {
                auto m = [](std::initializer_list<int> is) {
                    unsigned u = 0;
                    for (int i : is) u |= 1u << (i - 1);
                    return u;
                };
                auto O1 = [&](int a) { return A.O(1u << (a - 1)); };
                for (int a = 1; a <= 4; ++a)
                    for (int b = 1; b <= 4; ++b) {
                        if (b == a) continue;
                        // p < q the remaining pair
                        int p = 0, q = 0;
                        for (int j = 1; j <= 4; ++j)
                            if (j != a && j != b) (p ? q : p) = j;
                        // signs from sorting the wedge labels
                        auto Ow = [&](std::initializer_list<int> is) {
                            std::vector<int> v(is);
                            int sgn = 1;
                            for (size_t i = 0; i < v.size(); ++i)
                                for (size_t j = i + 1; j < v.size(); ++j)
                                    if (v[i] > v[j]) {
                                        std::swap(v[i], v[j]);
                                        sgn = -sgn;
                                    }
                            unsigned u = 0;
                            for (int i : v) u |= 1u << (i - 1);
                            Op base = A.O(u);
                            return sgn > 0 ? base : -base;
                        };
                        Op lhs = comm(Ow({a, b}), Ow({a, p, q}));
                        Op rhs = -(Ow({b, p, q}) + acomm(O1(b), Ow({p, q})) +
                                   comm(O1(a), Ow({a, b, p, q})));
                        auto r = first_diff(lhs, rhs, D);
                        if (!r.pass) return r;
                    }
                return CheckOutcome{};
            });
        add("tamarel", "comm-2ind-3ind-shared",
            "commutator of a 2-index with a 3-index symmetry sharing both slots",
            [&A, D, comm, acomm] {
                auto O1 = [&](int a) { return A.O(1u << (a - 1)); };
                auto Ow = [&](std::vector<int> v) {
                    int sgn = 1;
                    for (size_t i = 0; i < v.size(); ++i)
                        for (size_t j = i + 1; j < v.size(); ++j)
                            if (v[i] > v[j]) {
                                std::swap(v[i], v[j]);
                                sgn = -sgn;
                            }
                    unsigned u = 0;
                    for (int i : v) u |= 1u << (i - 1);
                    Op base = A.O(u);
                    return sgn > 0 ? base : -base;
                };
                for (int a = 1; a <= 4; ++a)
                    for (int b = 1; b <= 4; ++b) {
                        if (b == a) continue;
                        for (int q = 1; q <= 4; ++q) {
                            if (q == a || q == b) continue;
                            Op lhs = comm(Ow({a, b}), Ow({a, b, q}));
                            Op rhs = -(acomm(O1(a), Ow({a, q})) + acomm(O1(b), Ow({b, q})));
                            auto r = first_diff(lhs, rhs, D);
                            if (!r.pass) return r;
                        }
                    }
                return CheckOutcome{};
            });
        add("tamarel", "comm-3ind-3ind",
            "graded commutators of 3-index symmetries", [&A, D, acomm] {
                auto O1 = [&](int a) { return A.O(1u << (a - 1)); };
                auto Ow = [&](std::vector<int> v) {
                    int sgn = 1;
                    for (size_t i = 0; i < v.size(); ++i)
                        for (size_t j = i + 1; j < v.size(); ++j)
                            if (v[i] > v[j]) {
                                std::swap(v[i], v[j]);
                                sgn = -sgn;
                            }
                    unsigned u = 0;
                    for (int i : v) u |= 1u << (i - 1);
                    Op base = A.O(u);
                    return sgn > 0 ? base : -base;
                };
                for (int a = 1; a <= 4; ++a)
                    for (int b = a + 1; b <= 4; ++b) {
                        int p = 0, q = 0;
                        for (int j = 1; j <= 4; ++j)
                            if (j != a && j != b) (p ? q : p) = j;
                        for (int swap = 0; swap < 2; ++swap) {
                            int u = swap ? q : p, v = swap ? p : q;
                            Op lhs = acomm(Ow({a, b, u}), Ow({a, b, v}));
                            Op rhs = acomm(O1(u), O1(v)) + acomm(Ow({a, u}), Ow({a, v})) +
                                     acomm(Ow({b, u}), Ow({b, v}));
                            auto r = first_diff(lhs, rhs, D);
                            if (!r.pass) return r;
                        }
                    }
                // squares of 3-index symmetries
                for (int a = 1; a <= 4; ++a)
                    for (int b = a + 1; b <= 4; ++b)
                        for (int c = b + 1; c <= 4; ++c) {
                            Op oabc = Ow({a, b, c});
                            Op lhs = acomm(oabc, oabc);
                            Op sq = O1(a) * O1(a) + O1(b) * O1(b) + O1(c) * O1(c) +
                                    Ow({a, b}) * Ow({a, b}) + Ow({a, c}) * Ow({a, c}) +
                                    Ow({b, c}) * Ow({b, c}) - A.cst(1, 4);
                            auto r = first_diff(lhs, A.sc(2) * sq, D);
                            if (!r.pass) return r;
                        }
                return CheckOutcome{};
            });
        add("tamarel", "volume-in-generators",
            "volume symmetry written in lower symmetries, orthonormal labels",
            [&A, D, acomm] {
                auto Om = [&](std::vector<int> v) {
                    unsigned u = 0;
                    for (int i : v) u |= 1u << (i - 1);
                    return A.O(u);
                };
                Op rhs = acomm(Om({1, 2}), Om({3, 4})) - acomm(Om({1, 3}), Om({2, 4})) +
                         acomm(Om({1, 4}), Om({2, 3})) -
                         A.sc(2) * (Om({1, 2, 3}) * Om({4}) - Om({1, 2, 4}) * Om({3}) +
                                    Om({1, 3, 4}) * Om({2}) - Om({2, 3, 4}) * Om({1}));
                return first_diff(A.Z(), rhs, D);
            });
        add("tamarel", "volume-in-generators-iso",
            "volume symmetry written in lower symmetries, isotropic labels",
            [&A, D, acomm, comm] {
                Op rhs = acomm(A.Oi({{1, +1}, {1, -1}}), A.Oi({{2, +1}, {2, -1}})) -
                         acomm(A.Oi({{1, +1}, {2, +1}}), A.Oi({{1, -1}, {2, -1}})) +
                         acomm(A.Oi({{1, +1}, {2, -1}}), A.Oi({{1, -1}, {2, +1}})) +
                         comm(A.Oi({{2, -1}}), A.Oi({{1, +1}, {1, -1}, {2, +1}})) -
                         comm(A.Oi({{2, +1}}), A.Oi({{1, +1}, {1, -1}, {2, -1}})) +
                         comm(A.Oi({{1, -1}}), A.Oi({{1, +1}, {2, +1}, {2, -1}})) -
                         comm(A.Oi({{1, +1}}), A.Oi({{1, -1}, {2, +1}, {2, -1}}));
                return first_diff(A.sc(-4) * A.Z(), rhs, D);
            });
        add("tamarel", "volume-square", "square of the volume symmetry, orthonormal labels",
            [&A, D] {
                auto Om = [&](std::vector<int> v) {
                    unsigned u = 0;
                    for (int i : v) u |= 1u << (i - 1);
                    return A.O(u);
                };
                Op rhs = A.cst(3, 4);
                for (int j = 1; j <= 4; ++j) rhs = rhs - A.sc(2) * (Om({j}) * Om({j}));
                for (int j = 1; j <= 4; ++j)
                    for (int k = j + 1; k <= 4; ++k) rhs = rhs - Om({j, k}) * Om({j, k});
                return first_diff(A.Z() * A.Z(), rhs, D);
            });
        add("tamarel", "volume-square-iso", "square of the volume symmetry, isotropic labels",
            [&A, D, acomm] {
                auto q = A.sc(1, 4);
                Op o11 = A.Oi({{1, +1}, {1, -1}}), o22 = A.Oi({{2, +1}, {2, -1}});
                Op rhs = A.cst(3, 4) - acomm(A.Oi({{1, +1}}), A.Oi({{1, -1}})) -
                         acomm(A.Oi({{2, +1}}), A.Oi({{2, -1}})) + q * (o11 * o11) +
                         q * (o22 * o22) -
                         q * acomm(A.Oi({{1, +1}, {2, -1}}), A.Oi({{1, -1}, {2, +1}})) -
                         q * acomm(A.Oi({{1, +1}, {2, +1}}), A.Oi({{1, -1}, {2, -1}}));
                return first_diff(A.Z() * A.Z(), rhs, D);
            });
        add("tamarel", "volume-sign-rule",
            "volume symmetry commutes or anticommutes by wedge parity", [&A, D] {
                for (unsigned mask = 0; mask < 16; ++mask) {
                    K s = std::popcount(mask) % 2 ? -A.ctx().one() : A.ctx().one();
                    auto r = first_diff(A.Z() * A.O(mask), s * (A.O(mask) * A.Z()), D);
                    if (!r.pass) return r;
                }
                return CheckOutcome{};
            });
        if (m1 % 2 == 0 && m2 % 2 == 0)
            add("tamarel", "graded-centre",
                "central element when the longest group element is minus one",
                [&A, D, m1, m2] {
                    CoverElement w0{m1, m2, 0, m1 / 2, m2 / 2, 0, 0};
                    Op S = A.scasimir() * A.rhoD(w0);
                    // supercommutes: commutator with even elements, anticommutator
                    // with odd ones
                    std::vector<std::pair<Op, int>> gens;
                    for (unsigned mask = 0; mask < 16; ++mask)
                        if (std::popcount(mask) == 2 || std::popcount(mask) == 3)
                            gens.emplace_back(A.O(mask), std::popcount(mask) % 2);
                    for (auto g : {CoverElement{m1, m2, 0, 1, 0, 0, 0},
                                   CoverElement{m1, m2, 0, 0, 1, 0, 0},
                                   CoverElement{m1, m2, 0, 0, 0, 1, 0},
                                   CoverElement{m1, m2, 0, 0, 0, 0, 1}})
                        gens.emplace_back(A.rhoD(g), g.clifford_parity());
                    for (const auto& [X, odd] : gens) {
                        Op C = odd ? anticommutator(S, X) : commutator(S, X);
                        auto r = first_nonzero(C, D);
                        if (!r.pass) return r;
                    }
                    return CheckOutcome{};
                });
    }

    if (want("ladders")) {
        add("ladders", "cartan-abelian", "the five commuting elements pairwise commute",
            [&A, D, m1, m2] {
                std::vector<Op> t0{A.H(1), A.H(2), A.Z(),
                                   A.rhoD({m1, m2, 0, 1, 0, 0, 0}),
                                   A.rhoD({m1, m2, 0, 0, 1, 0, 0})};
                for (size_t i = 0; i < t0.size(); ++i)
                    for (size_t j = i + 1; j < t0.size(); ++j) {
                        auto r = first_nonzero(commutator(t0[i], t0[j]), D);
                        if (!r.pass) return r;
                    }
                return CheckOutcome{};
            });
        add("ladders", "conjugation-table",
            "group conjugation on the commuting elements and ladders", [&A, D, m1, m2] {
                auto check = [&](const Op& R, const Op& X, const Op& Ximg) {
                    return first_diff(R * X, Ximg * R, A.D);
                };
                Op H1 = A.H(1), H2 = A.H(2), Zc = A.Z();
                for (int p = 1; p <= m1; ++p) {
                    Op R = A.rhoD(cover_s(m1, m2, p));
                    CheckOutcome r;
                    r = check(R, H1, -H1);
                    if (!r.pass) return r;
                    r = check(R, H2, H2);
                    if (!r.pass) return r;
                    r = check(R, Zc, -Zc);
                    if (!r.pass) return r;
                    for (int s : {+1, -1}) {
                        r = check(R, A.Lodd(1, s), A.ctx().zeta1(2 * s * p) * A.Lodd(1, -s));
                        if (!r.pass) return r;
                        r = check(R, A.Lodd(2, s), A.Lodd(2, s));
                        if (!r.pass) return r;
                        for (int e : {+1, -1}) {
                            r = check(R, A.Leven(s, e),
                                      -(A.ctx().zeta1(2 * s * p) * A.Leven(-s, e)));
                            if (!r.pass) return r;
                        }
                    }
                }
                for (int q = 1; q <= m2; ++q) {
                    Op R = A.rhoD(cover_t(m1, m2, q));
                    CheckOutcome r;
                    r = check(R, H1, H1);
                    if (!r.pass) return r;
                    r = check(R, H2, -H2);
                    if (!r.pass) return r;
                    r = check(R, Zc, -Zc);
                    if (!r.pass) return r;
                    for (int s : {+1, -1}) {
                        r = check(R, A.Lodd(2, s), A.ctx().zeta2(2 * s * q) * A.Lodd(2, -s));
                        if (!r.pass) return r;
                        r = check(R, A.Lodd(1, s), A.Lodd(1, s));
                        if (!r.pass) return r;
                        for (int d : {+1, -1}) {
                            r = check(R, A.Leven(d, s),
                                      -(A.ctx().zeta2(2 * s * q) * A.Leven(d, -s)));
                            if (!r.pass) return r;
                        }
                    }
                }
                // the rotation generators scale the ladders
                Op R1 = A.rhoD({m1, m2, 0, 1, 0, 0, 0});
                Op R2 = A.rhoD({m1, m2, 0, 0, 1, 0, 0});
                for (int s : {+1, -1}) {
                    CheckOutcome r;
                    r = check(R1, A.Lodd(1, s), A.ctx().zeta1(2 * s) * A.Lodd(1, s));
                    if (!r.pass) return r;
                    r = check(R1, A.Lodd(2, s), A.Lodd(2, s));
                    if (!r.pass) return r;
                    r = check(R2, A.Lodd(2, s), A.ctx().zeta2(2 * s) * A.Lodd(2, s));
                    if (!r.pass) return r;
                    r = check(R2, A.Lodd(1, s), A.Lodd(1, s));
                    if (!r.pass) return r;
                    for (int e : {+1, -1}) {
                        r = check(R1, A.Leven(s, e), A.ctx().zeta1(2 * s) * A.Leven(s, e));
                        if (!r.pass) return r;
                        r = check(R2, A.Leven(e, s), A.ctx().zeta2(2 * s) * A.Leven(e, s));
                        if (!r.pass) return r;
                    }
                }
                return CheckOutcome{};
            });
        add("ladders", "products-1ind", "products of 1-index and 3-index symmetries",
            [&A, D] {
                for (int d : {+1, -1})
                    for (int e : {+1, -1}) {
                        Op o1 = A.Oi({{1, d}}), o2 = A.Oi({{2, e}});
                        auto r = first_diff(o1 * o2, -(o2 * o1), D);
                        if (!r.pass) return r;
                        for (int a : {1, 2}) {
                            int b = 3 - a;
                            Op oa = A.Oi({{a, -d}});
                            r = first_diff(A.T3(a, d) * oa, A.Oi({{a, d}}) * A.T3(a, -d), D);
                            if (!r.pass) return r;
                            Op ob = A.Oi({{b, e}});
                            r = first_diff(A.T3(a, d) * ob, ob * A.T3(a, d), D);
                            if (!r.pass) return r;
                        }
                    }
                return CheckOutcome{};
            });
        add("ladders", "cartan-2ind-comm",
            "commutators of the commuting elements with mixed 2-index symmetries",
            [&A, D, comm] {
                for (int d : {+1, -1})
                    for (int e : {+1, -1}) {
                        Op o12 = A.Oi({{1, d}, {2, e}});
                        Op o1 = A.Oi({{1, d}}), o2 = A.Oi({{2, e}});
                        Op lhs1 = comm(A.H(1), o12);
                        Op rhs1 = A.sc(d) * (o12 + A.sc(2) * (o1 * o2)) -
                                  o1 * A.Oi({{1, +1}, {1, -1}, {2, e}});
                        auto r = first_diff(lhs1, rhs1, D);
                        if (!r.pass) return r;
                        Op lhs2 = comm(A.H(2), o12);
                        Op rhs2 = A.sc(e) * (o12 + A.sc(2) * (o1 * o2)) +
                                  o2 * A.Oi({{1, d}, {2, +1}, {2, -1}});
                        r = first_diff(lhs2, rhs2, D);
                        if (!r.pass) return r;
                    }
                return CheckOutcome{};
            });
        add("ladders", "cartan-3ind-comm",
            "commutators of the commuting elements with 3-index symmetries",
            [&A, D, comm] {
                for (int a : {1, 2}) {
                    int b = 3 - a;
                    for (int e : {+1, -1}) {
                        Op T = A.T3(a, e);
                        Op lhs = comm(A.H(a), T);
                        Op rhs = A.sc(e) * T +
                                 A.sc(4) * (A.Oi({{a, e}}) *
                                            (A.sc(e) * A.H(b) + A.Z()));
                        auto r = first_diff(lhs, rhs, D);
                        if (!r.pass) return r;
                        r = first_nonzero(comm(A.H(b), T), D);
                        if (!r.pass) return r;
                    }
                }
                return CheckOutcome{};
            });
        add("ladders", "ladder-eigen", "ladders are joint eigenvectors of the torus",
            [&A, D, comm] {
                std::vector<std::pair<int, int>> roots{{1, 1},  {1, -1}, {-1, 1}, {-1, -1},
                                                       {1, 0},  {-1, 0}, {0, 1},  {0, -1}};
                for (auto [c1, c2] : roots) {
                    Op L = A.ladder(c1, c2);
                    auto r = first_diff(comm(A.H(1), L), A.sc(c1) * L, D);
                    if (!r.pass) return r;
                    r = first_diff(comm(A.H(2), L), A.sc(c2) * L, D);
                    if (!r.pass) return r;
                }
                return CheckOutcome{};
            });
        add("ladders", "ladder-alt-odd", "closed form of the odd ladders", [&A, D] {
            for (int a : {1, 2}) {
                int b = 3 - a;
                for (int d : {+1, -1}) {
                    Op rhs = A.T3(a, d) * (A.sc(2) * A.H(a) + A.cst(d)) +
                             A.sc(4) * (A.Oi({{a, d}}) * (A.sc(d) * A.H(b) + A.Z()));
                    auto r = first_diff(A.Lodd(a, d), rhs, D);
                    if (!r.pass) return r;
                }
            }
            return CheckOutcome{};
        });
        add("ladders", "ladder-alt-even", "closed form of the even ladders", [&A, D] {
            for (int d : {+1, -1})
                for (int e : {+1, -1}) {
                    Op h1d = A.sc(2) * A.H(1) + A.cst(d);
                    Op h2e = A.sc(2) * A.H(2) + A.cst(e);
                    Op rhs = A.Oi({{1, d}, {2, e}}) * h1d * h2e -
                             A.Oi({{1, d}}) * A.T3(2, e) * h2e +
                             A.T3(1, d) * A.Oi({{2, e}}) * h1d +
                             A.sc(2) * (A.Oi({{1, d}}) * A.Oi({{2, e}}) *
                                        (A.cst(e * d) - A.sc(2) * A.Z()));
                    auto r = first_diff(A.Leven(d, e), rhs, D);
                    if (!r.pass) return r;
                }
            return CheckOutcome{};
        });
        add("ladders", "product-2ind", "factorised products of mixed 2-index symmetries",
            [&A, D] {
                Op H1 = A.H(1), H2 = A.H(2), Zc = A.Z();
                for (int s : {+1, -1}) {
                    // same-sign pair
                    Op lhs = A.Oi({{1, s}, {2, s}}) * A.Oi({{1, -s}, {2, -s}});
                    Op hs = H1 + H2;
                    Op rhs = hs * hs - A.sc(2 * s) * hs - Zc * Zc + Zc + A.cst(3, 4) -
                             A.sc(2) * (A.Oi({{1, s}}) * A.Oi({{1, -s}}) +
                                        A.Oi({{2, s}}) * A.Oi({{2, -s}})) -
                             A.sc(s) * (A.Oi({{1, s}}) * A.Oi({{1, -s}, {2, +1}, {2, -1}}) +
                                        A.Oi({{2, s}}) * A.Oi({{1, +1}, {1, -1}, {2, -s}}));
                    auto r = first_diff(lhs, rhs, D);
                    if (!r.pass) return r;
                    // opposite-sign pair
                    lhs = A.Oi({{1, s}, {2, -s}}) * A.Oi({{1, -s}, {2, s}});
                    Op hd = H1 - H2;
                    rhs = hd * hd - A.sc(2 * s) * hd - Zc * Zc - Zc + A.cst(3, 4) -
                          A.sc(2) * (A.Oi({{1, s}}) * A.Oi({{1, -s}}) +
                                     A.Oi({{2, -s}}) * A.Oi({{2, s}})) +
                          A.sc(s) * (A.Oi({{1, s}}) * A.Oi({{1, -s}, {2, +1}, {2, -1}}) -
                                     A.Oi({{2, -s}}) * A.Oi({{1, +1}, {1, -1}, {2, s}}));
                    r = first_diff(lhs, rhs, D);
                    if (!r.pass) return r;
                }
                return CheckOutcome{};
            });
        add("ladders", "product-3ind", "products of opposite and mixed 3-index symmetries",
            [&A, D] {
                Op Zc = A.Z();
                for (int a : {1, 2}) {
                    int b = 3 - a;
                    Op Ha = A.H(a), Hb = A.H(b);
                    for (int s : {+1, -1}) {
                        Op zh = Zc - A.sc(s) * Hb;
                        Op hh = Ha - A.cst(s, 2);
                        Op rhs = A.sc(4) * (zh * zh - hh * hh +
                                            A.Oi({{a, s}}) * A.Oi({{a, -s}}));
                        auto r = first_diff(A.T3(a, s) * A.T3(a, -s), rhs, D);
                        if (!r.pass) return r;
                    }
                }
                for (int a : {1, 2}) {
                    int b = 3 - a;
                    Op Ha = A.H(a), Hb = A.H(b);
                    for (int d : {+1, -1})
                        for (int e : {+1, -1}) {
                            Op oa = A.Oi({{a, d}}), ob = A.Oi({{b, e}});
                            Op rhs = A.sc(4) * (A.Oi({{a, d}, {b, e}}) *
                                                (A.sc(e) * Ha - A.sc(d) * Hb + Zc -
                                                 A.cst(d * e, 2))) -
                                     A.sc(2 * e) * (oa * A.T3(b, e)) -
                                     A.sc(2 * d) * (A.T3(a, d) * ob) -
                                     A.sc(4 * d * e) * (oa * ob);
                            auto r = first_diff(A.T3(a, d) * A.T3(b, e), rhs, D);
                            if (!r.pass) return r;
                        }
                }
                return CheckOutcome{};
            });
        add("ladders", "comm-long-short",
            "commutators of mixed 2-index with 3-index symmetries", [&A, D, comm, acomm] {
                for (int d : {+1, -1})
                    for (int s : {+1, -1}) {
                        Op o12 = A.Oi({{1, d}, {2, s}});
                        auto r = first_diff(comm(o12, A.T3(1, d)),
                                            A.sc(2 * s) * acomm(A.Oi({{1, d}}), o12), D);
                        if (!r.pass) return r;
                        Op o12b = A.Oi({{1, s}, {2, d}});
                        r = first_diff(comm(o12b, A.T3(2, d)),
                                       A.sc(2 * s) * acomm(A.Oi({{2, d}}), o12b), D);
                        if (!r.pass) return r;
                    }
                return CheckOutcome{};
            });
        add("ladders", "product-3ind-ladder",
            "ordered products of 3-index symmetries with odd ladders", [&A, D] {
                Op Zc = A.Z();
                for (int a : {1, 2}) {
                    int b = 3 - a;
                    Op Ha = A.H(a), Hb = A.H(b);
                    for (int d : {+1, -1})
                        for (int e : {+1, -1}) {
                            Op oa = A.Oi({{a, d}}), ob = A.Oi({{b, e}});
                            Op h2be = A.sc(2) * Hb + A.cst(e);
                            Op core = A.Oi({{a, d}, {b, e}}) * h2be + ob * A.T3(a, d);
                            Op up = A.sc(e) * Ha - A.sc(d) * Hb + Zc - A.cst(d * e, 2);
                            Op lhs = A.T3(a, d) * A.Lodd(b, e);
                            Op rhs = A.sc(4) * (core * up) -
                                     A.sc(2 * e) *
                                         ((oa * A.T3(b, e) + A.sc(2 * d) * (oa * ob)) * h2be);
                            auto r = first_diff(lhs, rhs, D);
                            if (!r.pass) return r;
                            Op down =
                                A.sc(e) * Ha - A.sc(d) * Hb - Zc + A.cst(d * e, 2);
                            lhs = A.Lodd(b, e) * A.T3(a, d);
                            rhs = A.sc(4) * (core * down) -
                                  A.sc(2 * e) *
                                      ((oa * A.T3(b, e) - A.sc(2 * d) * (oa * ob)) * h2be) -
                                  A.sc(16 * e) * (oa * ob * (A.sc(d) * Hb + Zc));
                            r = first_diff(lhs, rhs, D);
                            if (!r.pass) return r;
                        }
                }
                return CheckOutcome{};
            });
        add("ladders", "opposite-odd-ladders", "factorised product of opposite odd ladders",
            [&A, D] {
                Op Zc = A.Z();
                for (int a : {1, 2}) {
                    int b = 3 - a;
                    for (int d : {+1, -1}) {
                        Op hh = A.H(a) - A.cst(d, 2);
                        Op zz = Zc - A.sc(d) * A.H(b);
                        Op rhs = A.sc(16) * ((hh * hh - A.Oi({{a, d}}) * A.Oi({{a, -d}})) *
                                             (zz * zz - hh * hh));
                        auto r = first_diff(A.Lodd(a, d) * A.Lodd(a, -d), rhs, D);
                        if (!r.pass) return r;
                    }
                }
                return CheckOutcome{};
            });
        add("ladders", "opposite-even-ladders",
            "factorised product of opposite even ladders", [&A, D] {
                Op Zc = A.Z();
                for (int d : {+1, -1})
                    for (int e : {+1, -1}) {
                        Op h1 = A.H(1) - A.cst(d, 2);
                        Op h2 = A.H(2) - A.cst(e, 2);
                        Op hz = A.sc(d) * A.H(1) + A.sc(e) * A.H(2) - A.idD();
                        Op zz = Zc - A.cst(d * e, 2);
                        Op rhs = A.sc(16) *
                                 ((h1 * h1 - A.Oi({{1, d}}) * A.Oi({{1, -d}})) *
                                  (h2 * h2 - A.Oi({{2, e}}) * A.Oi({{2, -e}})) *
                                  (hz * hz - zz * zz));
                        auto r = first_diff(A.Leven(d, e) * A.Leven(-d, -e), rhs, D);
                        if (!r.pass) return r;
                    }
                return CheckOutcome{};
            });
        add("ladders", "odd-times-odd-ladder",
            "product of odd ladders for the two factors is an even ladder", [&A, D] {
                Op Zc = A.Z();
                for (int a : {1, 2}) {
                    int b = 3 - a;
                    for (int d : {+1, -1})
                        for (int e : {+1, -1}) {
                            // the a=2 ladder label is the swapped wedge, hence the sign
                            Op lev = a == 1 ? A.Leven(d, e) : -A.Leven(e, d);
                            Op rhs = A.sc(4) * (lev * (Zc + A.sc(e) * A.H(a) -
                                                       A.sc(d) * A.H(b) - A.cst(d * e, 2)));
                            auto r = first_diff(A.Lodd(a, d) * A.Lodd(b, e), rhs, D);
                            if (!r.pass) return r;
                        }
                }
                return CheckOutcome{};
            });
        add("ladders", "acute-pairs-commute",
            "even and odd ladders at acute angles commute", [&A, D, comm] {
                for (int d : {+1, -1})
                    for (int e : {+1, -1})
                        for (int b : {1, 2})
                            for (int s : {+1, -1}) {
                                int dot = (b == 1 ? d : e) * s;
                                if (dot <= 0) continue;
                                auto r = first_nonzero(
                                    comm(A.Leven(d, e), A.Lodd(b, s)), D);
                                if (!r.pass) return r;
                            }
                return CheckOutcome{};
            });
    }

    if (want("star") && !ctx_symbolic(A.S.ctx)) {
        auto F = std::make_shared<FischerForm<Ctx>>(A.S, D);
        add("star", "pairing-hermitian", "the slice pairings are Hermitian", [F, D] {
            for (int d = 0; d <= D; ++d) {
                Mat<K> diff = F->gram[d] - mat_conj_transpose(F->gram[d]);
                for (long i = 0; i < diff.r; ++i)
                    for (long j = 0; j < diff.c; ++j)
                        if (!kzero(diff.at(i, j))) return CheckOutcome{false, d, i, j};
            }
            return CheckOutcome{};
        });
        add("star", "adjoint-clifford", "the Clifford generators are self-adjoint",
            [&A, F, D] {
                for (int j = 1; j <= 4; ++j) {
                    Op E = trim(op_e(A.S, j, D), D);
                    auto r = first_diff(adjoint_op(*F, E), E, D);
                    if (!r.pass) return r;
                }
                return CheckOutcome{};
            });
        add("star", "adjoint-supersymmetric",
            "multiplication and derivative sides are mutually adjoint", [&A, F, D] {
                auto r = first_diff(adjoint_op(*F, trim(A.xvec_, D)), trim(A.dvec_, D), D);
                if (!r.pass) return r;
                return first_diff(adjoint_op(*F, trim(A.euler_, D)), trim(A.euler_, D), D);
            });
        add("star", "adjoint-cartan", "the commuting elements are self-adjoint", [&A, F, D] {
            for (int a : {1, 2}) {
                auto r = first_diff(adjoint_op(*F, A.H(a)), A.H(a), D);
                if (!r.pass) return r;
            }
            return first_diff(adjoint_op(*F, A.Z()), A.Z(), D);
        });
        add("star", "adjoint-ladder", "adjoints swap opposite ladders with a sign",
            [&A, F, D] {
                std::vector<std::pair<int, int>> roots{{1, 1},  {1, -1}, {-1, 1}, {-1, -1},
                                                       {1, 0},  {-1, 0}, {0, 1},  {0, -1}};
                for (auto [c1, c2] : roots) {
                    int odd = (c1 && c2) ? 0 : 1;
                    K s = odd ? A.ctx().one() : -A.ctx().one();
                    auto r = first_diff(adjoint_op(*F, A.ladder(c1, c2)),
                                        s * A.ladder(-c1, -c2), D);
                    if (!r.pass) return r;
                }
                return CheckOutcome{};
            });
        add("star", "adjoint-wedge",
            "adjoint of a wedge symmetry is the symmetry of the reversed wedge",
            [&A, F, D] {
                for (unsigned mask = 0; mask < 16; ++mask) {
                    int k = std::popcount(mask);
                    K s = (k * (k - 1) / 2) % 2 ? -A.ctx().one() : A.ctx().one();
                    auto r = first_diff(adjoint_op(*F, A.O(mask)), s * A.O(mask), D);
                    if (!r.pass) return r;
                }
                return CheckOutcome{};
            });
        add("star", "adjoint-group", "group elements are adjoint to their inverses",
            [&A, F, D, m1, m2] {
                for (auto g : {CoverElement{m1, m2, 0, 1, 0, 0, 0},
                               CoverElement{m1, m2, 0, 0, 1, 0, 0},
                               cover_s(m1, m2, 1), cover_t(m1, m2, 1)}) {
                    auto r = first_diff(adjoint_op(*F, A.rhoD(g)), A.rhoD(cover_inv(g)), D);
                    if (!r.pass) return r;
                }
                return CheckOutcome{};
            });
    }

    return out;
}

}  // namespace tama
