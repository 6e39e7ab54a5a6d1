#pragma once

#include <algorithm>
#include <complex>
#include <sstream>

#include "tama/ops.hpp"

namespace tama {

// ---------------------------------------------------------------------------
// The character sums Q_a(j). Nonzero only at the arguments fixed by the
// factor's rotation subgroup; even in j and 2m-periodic.
// ---------------------------------------------------------------------------

inline Rational q_value(int a, long j, int m1, int m2,
                        const std::array<Rational, 4>& kv) {
    long m = a == 1 ? m1 : m2;
    int base = a == 1 ? 0 : 2;
    long r = ((j % (2 * m)) + 2 * m) % (2 * m);
    Rational k1 = kv[base];
    Rational k2 = (m % 2) ? kv[base] : kv[base + 1];
    if (r == 0) return (m % 2) ? Rational(Rational(m) * k1) : Rational(rat(m, 2) * (k2 + k1));
    if (m % 2 == 0 && r == m) return rat(m, 2) * (k2 - k1);
    return Rational(0);
}

template <class Ctx>
typename Ctx::K q_scalar(const Ctx& ctx, int a, long j) {
    long m = a == 1 ? ctx.m1 : ctx.m2;
    int base = a == 1 ? 0 : 2;
    long r = ((j % (2 * m)) + 2 * m) % (2 * m);
    auto k1 = ctx.kap[base], k2 = ctx.kap[base + 1];
    if (r == 0)
        return (m % 2) ? ctx.from_rat(Rational(m)) * k1
                       : ctx.from_rat(rat(m, 2)) * (k2 + k1);
    if (m % 2 == 0 && r == m) return ctx.from_rat(rat(m, 2)) * (k2 - k1);
    return ctx.zero();
}

// ---------------------------------------------------------------------------
// Rational weight labels and the chain quantities A(mu, alpha, K).
// ---------------------------------------------------------------------------

struct Weight5R {
    Rational lam1, lam2, Lam;
    long l1 = 1, l2 = 1;  // odd spinor labels, reduced mod 2m

    bool operator==(const Weight5R& o) const {
        return lam1 == o.lam1 && lam2 == o.lam2 && Lam == o.Lam && l1 == o.l1 &&
               l2 == o.l2;
    }
};

struct RootLabel {
    int a1 = 0, a2 = 0;  // coefficients of the two fundamental directions
    bool operator==(const RootLabel& o) const { return a1 == o.a1 && a2 == o.a2; }
};

// order used throughout for the four positive / negative directions
inline const std::array<RootLabel, 4> tama_pos_roots{{{1, 0}, {0, 1}, {1, 1}, {1, -1}}};
inline const std::array<RootLabel, 4> tama_neg_roots{{{-1, 0}, {0, -1}, {-1, -1}, {-1, 1}}};

inline long norm_spinor_label(long l, int m) {
    long M = 2 * m;
    return ((l % M) + M) % M;
}

inline Rational rsq(const Rational& x) { return x * x; }

inline Rational A_value(const Weight5R& mu, RootLabel al, long K, int m1, int m2,
                        const std::array<Rational, 4>& kv) {
    Rational Kh = rat(2 * K + 1, 2);
    if (al.a1 == 0 || al.a2 == 0) {
        int a = al.a1 ? 1 : 2;
        int d = al.a1 ? al.a1 : al.a2;
        Rational la = a == 1 ? mu.lam1 : mu.lam2;
        Rational lb = a == 1 ? mu.lam2 : mu.lam1;
        long l = a == 1 ? mu.l1 : mu.l2;
        Rational f1 = rsq(la + d * Kh) - rsq(q_value(a, l + d * (2 * K + 1), m1, m2, kv));
        Rational Ls = (K % 2) ? -mu.Lam : mu.Lam;
        Rational f2 = rsq(Ls + d * lb) - rsq(la + d * Kh);
        return f1 * f2;
    }
    int e1 = al.a1, e2 = al.a2;
    Rational f1 =
        rsq(mu.lam1 + e1 * Kh) - rsq(q_value(1, mu.l1 + e1 * (2 * K + 1), m1, m2, kv));
    Rational f2 =
        rsq(mu.lam2 + e2 * Kh) - rsq(q_value(2, mu.l2 + e2 * (2 * K + 1), m1, m2, kv));
    Rational f3 = rsq(e1 * mu.lam1 + e2 * mu.lam2 + 1 + 2 * K) - rsq(mu.Lam - rat(e1 * e2, 2));
    return f1 * f2 * f3;
}

// symbolic twin over kappa-polynomials (generic-weight sanity checks)
inline Scalar A_value_sym(const ExactCtx& ctx, const std::array<Scalar, 3>& lam,
                          long l1, long l2, RootLabel al, long K) {
    auto fr = [&](const Rational& r) { return ctx.from_rat(r); };
    auto sq = [](const Scalar& x) { return x * x; };
    Scalar Kh = fr(rat(2 * K + 1, 2));
    if (al.a1 == 0 || al.a2 == 0) {
        int a = al.a1 ? 1 : 2;
        int d = al.a1 ? al.a1 : al.a2;
        Scalar la = a == 1 ? lam[0] : lam[1];
        Scalar lb = a == 1 ? lam[1] : lam[0];
        long l = a == 1 ? l1 : l2;
        Scalar f1 = sq(la + fr(d) * Kh) - sq(q_scalar(ctx, a, l + d * (2 * K + 1)));
        Scalar Ls = (K % 2) ? -lam[2] : lam[2];
        return f1 * (sq(Ls + fr(d) * lb) - sq(la + fr(d) * Kh));
    }
    int e1 = al.a1, e2 = al.a2;
    Scalar f1 = sq(lam[0] + fr(e1) * Kh) - sq(q_scalar(ctx, 1, l1 + e1 * (2 * K + 1)));
    Scalar f2 = sq(lam[1] + fr(e2) * Kh) - sq(q_scalar(ctx, 2, l2 + e2 * (2 * K + 1)));
    Scalar f3 = sq(fr(e1) * lam[0] + fr(e2) * lam[1] + fr(1 + 2 * K)) -
                sq(lam[2] - fr(rat(e1 * e2, 2)));
    return f1 * f2 * f3;
}

// lattice action on weights
inline Weight5R act_root(const Weight5R& mu, RootLabel al, int m1, int m2) {
    Weight5R out = mu;
    out.lam1 += al.a1;
    out.lam2 += al.a2;
    if ((al.a1 + al.a2) % 2) out.Lam = -out.Lam;
    out.l1 = norm_spinor_label(mu.l1 + 2 * al.a1, m1);
    out.l2 = norm_spinor_label(mu.l2 + 2 * al.a2, m2);
    return out;
}

// action of the reflection-parity class (i, j) of the covered group
inline Weight5R act_class(const Weight5R& mu, int i, int j, int m1, int m2) {
    Weight5R out = mu;
    if (i) {
        out.lam1 = -out.lam1;
        out.l1 = norm_spinor_label(-mu.l1, m1);
    }
    if (j) {
        out.lam2 = -out.lam2;
        out.l2 = norm_spinor_label(-mu.l2, m2);
    }
    if ((i + j) % 2) out.Lam = -out.Lam;
    return out;
}

inline bool is_small(const std::array<Rational, 4>& kv, int m1, int m2) {
    for (int a : {1, 2}) {
        long m = a == 1 ? m1 : m2;
        for (long t = 0; t <= m; ++t) {
            Rational q = q_value(a, 2 * t, m1, m2, kv);
            if (q < 0) q = -q;
            if (!(q < rat(1, 2))) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Label solver: branch over the vanishing quadratic factors of the four
// A(mu, alpha, 0) products, then scan the downward chains for termination.
// ---------------------------------------------------------------------------

struct Label {
    Weight5R mu;
    std::array<long, 4> N{};  // descent lengths in tama_neg_roots order
    std::vector<Weight5R> orbit;
    bool realized = false;
};

struct ClassifyResult {
    std::vector<Label> labels;
    std::vector<std::pair<Weight5R, std::string>> notes;  // discarded candidates
};

namespace detail {

// linear condition c1*lam1 + c2*lam2 + cL*Lam = rhs
using LinEq = std::array<Rational, 4>;

// vanishing-factor options of A(mu, alpha, K) = 0 as linear conditions
inline std::vector<LinEq> factor_options(RootLabel al, long K, long l1, long l2,
                                         int m1, int m2,
                                         const std::array<Rational, 4>& kv) {
    std::vector<LinEq> out;
    Rational Kh = rat(2 * K + 1, 2);
    Rational sK = (K % 2) ? Rational(-1) : Rational(1);
    if (al.a1 == 0 || al.a2 == 0) {
        int a = al.a1 ? 1 : 2;
        int d = al.a1 ? al.a1 : al.a2;
        long l = a == 1 ? l1 : l2;
        Rational q = q_value(a, l + d * (2 * K + 1), m1, m2, kv);
        Rational ca1 = a == 1 ? 1 : 0, ca2 = a == 1 ? 0 : 1;
        for (int s : {1, -1}) {
            // lam_a + d(K+1/2) = s q
            out.push_back({ca1, ca2, Rational(0), Rational(s) * q - d * Kh});
            // (-1)^K Lam + d lam_b = s (lam_a + d(K+1/2))
            out.push_back({Rational(d) * ca2 - s * ca1, Rational(d) * ca1 - s * ca2, sK,
                           Rational(s) * d * Kh});
        }
    } else {
        int e1 = al.a1, e2 = al.a2;
        Rational q1 = q_value(1, l1 + e1 * (2 * K + 1), m1, m2, kv);
        Rational q2 = q_value(2, l2 + e2 * (2 * K + 1), m1, m2, kv);
        for (int s : {1, -1}) {
            out.push_back({Rational(1), Rational(0), Rational(0), Rational(s) * q1 - e1 * Kh});
            out.push_back({Rational(0), Rational(1), Rational(0), Rational(s) * q2 - e2 * Kh});
            // e1 lam1 + e2 lam2 + 1 + 2K = s (Lam - e1 e2 / 2)
            out.push_back({Rational(e1), Rational(e2), Rational(-s),
                           Rational(-1 - 2 * K) - Rational(s) * rat(e1 * e2, 2)});
        }
    }
    return out;
}

// gaussian elimination on a 3-unknown rational system.
// returns: 0 inconsistent, 1 unique (solution filled), 2 underdetermined
inline int solve3(std::vector<LinEq> eqs, std::array<Rational, 3>& sol) {
    long rows = (long)eqs.size();
    long rank = 0;
    for (int col = 0; col < 3 && rank < rows; ++col) {
        long p = -1;
        for (long i = rank; i < rows; ++i)
            if (eqs[i][col] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(eqs[p], eqs[rank]);
        Rational inv = 1 / eqs[rank][col];
        for (auto& x : eqs[rank]) x *= inv;
        for (long i = 0; i < rows; ++i) {
            if (i == rank || eqs[i][col] == 0) continue;
            Rational f = eqs[i][col];
            for (int j = 0; j < 4; ++j) eqs[i][j] -= f * eqs[rank][j];
        }
        ++rank;
    }
    for (long i = rank; i < rows; ++i)
        if (eqs[i][3] != 0) return 0;
    if (rank < 3) return 2;
    // back out: the eliminated matrix is a permuted identity on the pivots
    for (long i = 0; i < 3; ++i)
        for (int col = 0; col < 3; ++col)
            if (eqs[i][col] != 0) sol[col] = eqs[i][3];
    return 1;
}

}  // namespace detail

inline ClassifyResult classify_labels(int m1, int m2, const std::array<Rational, 4>& kv,
                                      long nmax = 64) {
    using detail::LinEq;
    ClassifyResult out;
    for (long l1 = 1; l1 < 2 * m1; l1 += 2)
        for (long l2 = 1; l2 < 2 * m2; l2 += 2) {
            std::vector<Weight5R> cands;
            auto consider = [&](const std::array<Rational, 3>& s) {
                // the selected highest weight is maximal in its reflection
                // orbit, so both H-eigenvalues are nonnegative
                if (s[0] < 0 || s[1] < 0) return;
                Weight5R mu{s[0], s[1], s[2], l1, l2};
                for (const auto& w : cands)
                    if (w == mu) return;
                for (RootLabel al : tama_pos_roots)
                    if (A_value(mu, al, 0, m1, m2, kv) != 0) return;
                // realizable labels also annihilate the base of the two
                // non-raising downward chains
                if (A_value(mu, {0, -1}, 0, m1, m2, kv) != 0) return;
                if (A_value(mu, {-1, -1}, 0, m1, m2, kv) != 0) return;
                cands.push_back(mu);
            };
            std::array<std::vector<LinEq>, 4> opts;
            for (int r = 0; r < 4; ++r)
                opts[r] = detail::factor_options(tama_pos_roots[r], 0, l1, l2, m1, m2, kv);
            for (const auto& e0 : opts[0])
                for (const auto& e1 : opts[1])
                    for (const auto& e2 : opts[2])
                        for (const auto& e3 : opts[3]) {
                            std::vector<LinEq> sys{e0, e1, e2, e3};
                            std::array<Rational, 3> sol;
                            int st = detail::solve3(sys, sol);
                            if (st == 1) {
                                consider(sol);
                            } else if (st == 2) {
                                // cut the free direction with a terminating
                                // downward-chain factor
                                for (RootLabel neg : tama_neg_roots)
                                    for (long K = 0; K <= nmax; ++K)
                                        for (const auto& ex : detail::factor_options(
                                                 neg, K, l1, l2, m1, m2, kv)) {
                                            auto sys2 = sys;
                                            sys2.push_back(ex);
                                            std::array<Rational, 3> s2;
                                            if (detail::solve3(sys2, s2) == 1) consider(s2);
                                        }
                            }
                        }
            for (const auto& mu : cands) {
                Label lab;
                lab.mu = mu;
                bool ok = true;
                for (int r = 0; r < 4 && ok; ++r) {
                    long N = -1;
                    for (long K = 0; K <= nmax; ++K)
                        if (A_value(mu, tama_neg_roots[r], K, m1, m2, kv) == 0) {
                            N = K;
                            break;
                        }
                    if (N < 0) {
                        out.notes.push_back({mu, "open chain"});
                        ok = false;
                    } else {
                        lab.N[r] = N;
                    }
                }
                // in the small-parameter regime the two chains that lower the
                // first H-eigenvalue have equal length for every realized
                // label; mixed-factor terminations that break this are not
                // attained by any module
                if (ok && is_small(kv, m1, m2) && lab.N[0] != lab.N[3]) {
                    out.notes.push_back({mu, "unequal descent chains"});
                    ok = false;
                }
                if (ok) out.labels.push_back(std::move(lab));
            }
        }

    // collapse W-orbit duplicates, keeping the representative that is maximal
    // in the highest-weight order
    auto hw_less = [](const Weight5R& x, const Weight5R& y) {
        if (x.lam1 != y.lam1) return x.lam1 < y.lam1;
        if (x.lam2 != y.lam2) return x.lam2 < y.lam2;
        if (x.Lam != y.Lam) return x.Lam < y.Lam;
        if (x.l1 != y.l1) return x.l1 > y.l1;
        return x.l2 > y.l2;
    };
    std::vector<Label> dedup;
    for (auto& lab : out.labels) {
        std::vector<Weight5R> orbit;
        for (int i : {0, 1})
            for (int j : {0, 1}) {
                Weight5R w = act_class(lab.mu, i, j, m1, m2);
                bool seen = false;
                for (const auto& o : orbit) seen = seen || o == w;
                if (!seen) orbit.push_back(w);
            }
        Weight5R repw = orbit[0];
        for (const auto& o : orbit)
            if (hw_less(repw, o)) repw = o;
        bool have = false;
        for (auto& d : dedup)
            if (d.mu == repw) have = true;
        if (have) continue;
        if (lab.mu == repw) {
            lab.orbit = orbit;
            dedup.push_back(lab);
        } else {
            // the representative occurs elsewhere in the scan; keep that copy
            bool found = false;
            for (auto& other : out.labels)
                if (other.mu == repw) {
                    if (!found) {
                        other.orbit = orbit;
                        dedup.push_back(other);
                    }
                    found = true;
                }
            if (!found) {  // mirror image never solved (should not happen)
                lab.orbit = orbit;
                dedup.push_back(lab);
            }
        }
    }
    out.labels = std::move(dedup);
    std::sort(out.labels.begin(), out.labels.end(), [&](const Label& a, const Label& b) {
        return hw_less(b.mu, a.mu);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Finite modules: a square matrix per generator, in module coordinates.
// ---------------------------------------------------------------------------

enum class OpTag {
    H1,
    H2,
    Zop,
    R1,
    R2,
    F1,
    F2,
    Lp1,  // ladder +w1
    Lm1,
    Lp2,
    Lm2,
    Lpp,  // +w1+w2
    Lpm,  // +w1-w2
    Lmp,
    Lmm
};

inline OpTag ladder_tag(RootLabel al) {
    if (al.a1 == 0) return al.a2 > 0 ? OpTag::Lp2 : OpTag::Lm2;
    if (al.a2 == 0) return al.a1 > 0 ? OpTag::Lp1 : OpTag::Lm1;
    if (al.a1 > 0) return al.a2 > 0 ? OpTag::Lpp : OpTag::Lpm;
    return al.a2 > 0 ? OpTag::Lmp : OpTag::Lmm;
}

template <class Ctx>
struct FiniteModule {
    using K = typename Ctx::K;
    const Ctx* ctx = nullptr;
    long dim = 0;
    int nmax_h = 0;  // degree bound feeding the eigenvalue candidate list
    std::map<OpTag, Mat<K>> op;
    std::string name;

    const Mat<K>& get(OpTag t) const { return op.at(t); }
};

template <class K>
Mat<K> restrict_to(const Mat<K>& X, const Mat<K>& B) {
    Mat<K> R;
    if (!mat_solve(B, X * B, R)) throw std::runtime_error("subspace is not invariant");
    return R;
}

// basis of the column space, as columns of the input
template <class K>
Mat<K> image_basis(const Mat<K>& P) {
    Mat<K> R = P;
    auto piv = rref(R);
    Mat<K> B(P.r, (long)piv.size());
    for (long k = 0; k < (long)piv.size(); ++k)
        for (long i = 0; i < P.r; ++i) B.at(i, k) = P.at(i, piv[k]);
    return B;
}

template <class K>
Mat<K> hstack(const Mat<K>& A, const Mat<K>& B) {
    Mat<K> C(A.r, A.c + B.c);
    for (long i = 0; i < A.r; ++i) {
        for (long j = 0; j < A.c; ++j) C.at(i, j) = A.at(i, j);
        for (long j = 0; j < B.c; ++j) C.at(i, A.c + j) = B.at(i, j);
    }
    return C;
}

// --- monogenic spaces ------------------------------------------------------

template <class Ctx>
struct MonogenicSpace {
    using K = typename Ctx::K;
    int d = 0;
    long dim = 0;
    Mat<K> basis;  // columns in the ambient degree-d slice
};

template <class Ctx>
MonogenicSpace<Ctx> monogenics(const Session<Ctx>& S, int d) {
    auto Dv = op_dvec(S, d);
    Mat<typename Ctx::K> B = kernel_basis(Dv.blocks[d], S.ctx.one());
    return {d, B.c, std::move(B)};
}

template <class Ctx>
FiniteModule<Ctx> monogenic_module(Ops<Ctx>& A, const MonogenicSpace<Ctx>& M) {
    if (A.D < M.d) throw std::invalid_argument("operator window below module degree");
    int m1 = A.ctx().m1, m2 = A.ctx().m2;
    FiniteModule<Ctx> F;
    F.ctx = &A.ctx();
    F.dim = M.dim;
    F.nmax_h = M.d;
    F.name = "monogenics(" + std::to_string(M.d) + ")";
    auto put = [&](OpTag t, const SlicedOp<typename Ctx::K>& X) {
        F.op[t] = restrict_to(X.blocks[M.d], M.basis);
    };
    put(OpTag::H1, A.H(1));
    put(OpTag::H2, A.H(2));
    put(OpTag::Zop, A.Z());
    put(OpTag::R1, A.rhoD({m1, m2, 0, 1, 0, 0, 0}));
    put(OpTag::R2, A.rhoD({m1, m2, 0, 0, 1, 0, 0}));
    put(OpTag::F1, A.rhoD({m1, m2, 0, 0, 0, 1, 0}));
    put(OpTag::F2, A.rhoD({m1, m2, 0, 0, 0, 0, 1}));
    for (RootLabel al : tama_pos_roots) {
        put(ladder_tag(al), A.ladder(al.a1, al.a2));
        put(ladder_tag({-al.a1, -al.a2}), A.ladder(-al.a1, -al.a2));
    }
    return F;
}

// ---------------------------------------------------------------------------
// Joint eigendecomposition for the commuting family (r1, r2, H1, H2, Z).
// ---------------------------------------------------------------------------

template <class K>
struct WeightLine {
    long l1 = 1, l2 = 1;
    Rational lam1, lam2;      // H-eigenvalues (always in the rational candidate list)
    Rational lam1_0, lam2_0;  // their kappa -> 0 parts
    bool z_known = false;
    K z{};
    bool z_rat = false;
    Rational z_q;
    std::string z_note;  // minimal polynomial when the Z-eigenvalue is not split
    long mult = 0;
    Mat<K> vecs;  // module-coordinate columns
    bool highest = false;
    std::array<long, 4> descent{-1, -1, -1, -1};  // tama_neg_roots order
};

template <class K>
struct WeightReport {
    long dim = 0;
    std::vector<WeightLine<K>> lines;
    int hw = -1;
    std::string error;
    long residual = 0;
};

// numeric embedding shared by the two channels
inline std::complex<double> value_cd(const Scalar& x) {
    return x.is_zero() ? 0.0 : cyc_cd(x.constant_part());
}
inline std::complex<double> value_cd(const std::complex<double>& x) { return x; }

// keep float chain vectors at unit scale so the zero test stays relative
inline void renormalize_column(Mat<Scalar>&) {}
inline void renormalize_column(Mat<Cyclotomic>&) {}
inline void renormalize_column(Mat<std::complex<double>>& v) {
    double m = 0;
    for (const auto& x : v.a) m = std::max(m, std::abs(x));
    if (m > 0)
        for (auto& x : v.a) x /= m;
}

inline bool value_rational(const Scalar& x, Rational& r) {
    if (x.is_zero()) {
        r = 0;
        return true;
    }
    if (!x.is_constant()) return false;
    Cyclotomic c = x.constant_part();
    if (!c.is_rational()) return false;
    r = c.rational_part();
    return true;
}
inline bool value_rational(const std::complex<double>&, Rational&) { return false; }

namespace detail {

// monic minimal polynomial of a square matrix, coefficients low to high
template <class K>
std::vector<K> matrix_minpoly(const Mat<K>& R, const K& one) {
    long n = R.r;
    std::vector<Mat<K>> pw{mat_identity<K>(n, one)};
    for (;;) {
        Mat<K> nxt = pw.back() * R;
        Mat<K> A(n * n, (long)pw.size()), b(n * n, 1), x;
        for (long k = 0; k < (long)pw.size(); ++k)
            for (long i = 0; i < n * n; ++i) A.at(i, k) = pw[k].a[i];
        for (long i = 0; i < n * n; ++i) b.at(i, 0) = nxt.a[i];
        if (mat_solve(A, b, x)) {
            std::vector<K> c;
            for (long i = 0; i < (long)pw.size(); ++i) c.push_back(-x.at(i, 0));
            c.push_back(one);
            return c;
        }
        pw.push_back(std::move(nxt));
    }
}

inline bool rational_sqrt(const Rational& x, Rational& r) {
    if (x < 0) return false;
    mpz_class num = x.get_num(), den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    r = Rational(sn) / Rational(sd);
    return true;
}

template <class K>
K poly_eval(const std::vector<K>& c, const K& x) {
    K acc{};
    for (long i = (long)c.size() - 1; i >= 0; --i) acc = acc * x + c[i];
    return acc;
}

// synthetic division by (X - r); assumes r is a root
template <class K>
std::vector<K> poly_deflate(const std::vector<K>& c, const K& r) {
    long n = (long)c.size() - 1;
    std::vector<K> q(n);
    K carry = c[n];
    for (long i = n - 1; i >= 0; --i) {
        q[i] = carry;
        carry = c[i] + r * carry;
    }
    return q;
}

// roots of a monic Scalar polynomial: quadratic formula plus a theory-guided
// candidate probe for higher degree; leftover factor reported in `note`
inline std::vector<Scalar> poly_roots(const ExactCtx& ctx, std::vector<Scalar> c,
                                      const std::vector<Rational>& probes,
                                      std::string& note) {
    std::vector<Scalar> roots;
    bool progress = true;
    while (c.size() > 1 && progress) {
        progress = false;
        if (c.size() == 2) {  // X + c0
            roots.push_back(-c[0]);
            c = {ctx.one()};
            break;
        }
        if (c.size() == 3) {  // X^2 + c1 X + c0
            Scalar disc = c[1] * c[1] - ctx.from_rat(Rational(4)) * c[0];
            Rational dr, sr;
            if (value_rational(disc, dr) && rational_sqrt(dr, sr)) {
                Scalar s = ctx.from_rat(sr), h = ctx.from_rat(rat(1, 2));
                roots.push_back(h * (-c[1] + s));
                roots.push_back(h * (-c[1] - s));
                c = {ctx.one()};
            }
            break;
        }
        for (const Rational& p : probes) {
            Scalar x = ctx.from_rat(p);
            if (poly_eval(c, x).is_zero()) {
                roots.push_back(x);
                c = poly_deflate(c, x);
                progress = true;
                break;
            }
        }
    }
    if (c.size() > 1) {
        std::ostringstream os;
        os << "unfactored:";
        for (const auto& x : c) os << " " << x.str();
        note = os.str();
    }
    return roots;
}

inline std::vector<std::complex<double>> poly_roots(const FloatCtx&,
                                                    std::vector<std::complex<double>> c,
                                                    const std::vector<Rational>&,
                                                    std::string&) {
    // Durand-Kerner on the monic polynomial
    long n = (long)c.size() - 1;
    std::vector<std::complex<double>> r(n);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> acc = 1.0;
    for (long i = 0; i < n; ++i) {
        acc *= seed;
        r[i] = acc;
    }
    for (int it = 0; it < 300; ++it) {
        double delta = 0;
        for (long i = 0; i < n; ++i) {
            std::complex<double> num = poly_eval(c, r[i]), den = 1.0;
            for (long j = 0; j < n; ++j)
                if (j != i) den *= r[i] - r[j];
            std::complex<double> step = num / den;
            r[i] -= step;
            delta = std::max(delta, std::abs(step));
        }
        if (delta < 1e-14) break;
    }
    return r;
}

}  // namespace detail

// eigenvalue candidates for H_a, with their kappa -> 0 parts
struct HCand {
    Rational val, val0;
};

inline std::vector<HCand> h_candidates(int a, int m1, int m2,
                                       const std::array<Rational, 4>& kv, int nmax) {
    long m = a == 1 ? m1 : m2;
    std::vector<Rational> qs;
    for (long t = 0; t <= m; ++t) {
        Rational q = q_value(a, 2 * t, m1, m2, kv);
        bool seen = false;
        for (const auto& x : qs) seen = seen || x == q;
        if (!seen) qs.push_back(q);
    }
    std::vector<HCand> out;
    for (int n = 0; n <= nmax; ++n)
        for (int s1 : {1, -1})
            for (const Rational& q : qs)
                for (int s2 : {1, -1}) {
                    Rational v = Rational(s1) * (rat(2 * n + 1, 2) + Rational(s2) * q);
                    bool seen = false;
                    for (const auto& c : out) seen = seen || c.val == v;
                    if (!seen) out.push_back({v, rat(s1 * (2 * n + 1), 2)});
                }
    return out;
}

template <class Ctx>
WeightReport<typename Ctx::K> weight_decompose(const FiniteModule<Ctx>& F,
                                               const std::array<Rational, 4>& kv,
                                               long nmax_descent = 64) {
    using K = typename Ctx::K;
    const Ctx& ctx = *F.ctx;
    int m1 = ctx.m1, m2 = ctx.m2;
    WeightReport<K> rep;
    rep.dim = F.dim;
    if (F.dim == 0) return rep;

    auto cand1 = h_candidates(1, m1, m2, kv, F.nmax_h);
    auto cand2 = h_candidates(2, m1, m2, kv, F.nmax_h);

    // Z-root probes: half-integer core with up to one Q contribution per factor
    std::vector<Rational> zprobes;
    {
        std::vector<Rational> q1s{Rational(0)}, q2s{Rational(0)};
        for (long t = 0; t <= m1; ++t) q1s.push_back(q_value(1, 2 * t, m1, m2, kv));
        for (long t = 0; t <= m2; ++t) q2s.push_back(q_value(2, 2 * t, m1, m2, kv));
        for (int h = 1; h <= 2 * F.nmax_h + 5; h += 2)
            for (int s : {1, -1})
                for (const auto& q1 : q1s)
                    for (int e1 : {1, -1})
                        for (const auto& q2 : q2s)
                            for (int e2 : {1, -1}) {
                                Rational v = Rational(s) *
                                             (rat(h, 2) + Rational(e1) * q1 + Rational(e2) * q2);
                                bool seen = false;
                                for (const auto& x : zprobes) seen = seen || x == v;
                                if (!seen) zprobes.push_back(v);
                            }
    }

    auto projector = [&](const Mat<K>& R, long order, auto chi_inv) {
        Mat<K> acc(R.r, R.r), Pw = mat_identity<K>(R.r, ctx.one());
        for (long p = 0; p < order; ++p) {
            acc = acc + chi_inv(p) * Pw;
            Pw = Pw * R;
        }
        return ctx.from_rat(rat(1, order)) * acc;
    };

    long covered = 0;
    for (long l1 = 1; l1 < 2 * m1; l1 += 2) {
        Mat<K> P1 = projector(F.get(OpTag::R1), 2 * m1,
                              [&](long p) { return ctx.zeta1(-l1 * p); });
        Mat<K> B1 = image_basis(P1);
        if (B1.c == 0) continue;
        Mat<K> R2r = restrict_to(F.get(OpTag::R2), B1);
        for (long l2 = 1; l2 < 2 * m2; l2 += 2) {
            Mat<K> P2 = projector(R2r, 2 * m2, [&](long p) { return ctx.zeta2(-l2 * p); });
            Mat<K> B2c = image_basis(P2);
            if (B2c.c == 0) continue;
            Mat<K> B12 = B1 * B2c;
            Mat<K> H1r = restrict_to(F.get(OpTag::H1), B12);
            long sector_covered = 0;
            for (const HCand& c1 : cand1) {
                Mat<K> Kr1 = kernel_basis(H1r - ctx.from_rat(c1.val) * mat_identity<K>(H1r.r, ctx.one()),
                                          ctx.one());
                if (Kr1.c == 0) continue;
                Mat<K> Bh1 = B12 * Kr1;
                Mat<K> H2r = restrict_to(F.get(OpTag::H2), Bh1);
                for (const HCand& c2 : cand2) {
                    Mat<K> Kr2 = kernel_basis(
                        H2r - ctx.from_rat(c2.val) * mat_identity<K>(H2r.r, ctx.one()),
                        ctx.one());
                    if (Kr2.c == 0) continue;
                    Mat<K> Bh2 = Bh1 * Kr2;
                    sector_covered += Bh2.c;
                    // stage 3: split the Z restriction
                    Mat<K> Zr = restrict_to(F.get(OpTag::Zop), Bh2);
                    auto emit = [&](bool known, const K& z, const std::string& znote,
                                    const Mat<K>& sub) {
                        WeightLine<K> L;
                        L.l1 = l1;
                        L.l2 = l2;
                        L.lam1 = c1.val;
                        L.lam2 = c2.val;
                        L.lam1_0 = c1.val0;
                        L.lam2_0 = c2.val0;
                        L.z_known = known;
                        L.z = z;
                        L.z_note = znote;
                        if (known) L.z_rat = value_rational(z, L.z_q);
                        L.vecs = sub;
                        L.mult = sub.c;
                        rep.lines.push_back(std::move(L));
                    };
                    bool scalarz = true;
                    K z0 = Zr.at(0, 0);
                    {
                        Mat<K> Dlt = Zr - z0 * mat_identity<K>(Zr.r, ctx.one());
                        scalarz = Dlt.is_zero();
                    }
                    if (scalarz) {
                        emit(true, z0, "", Bh2);
                        continue;
                    }
                    auto mp = detail::matrix_minpoly(Zr, ctx.one());
                    std::string note;
                    auto roots = detail::poly_roots(ctx, mp, zprobes, note);
                    long found = 0;
                    std::vector<Mat<K>> eig;
                    for (const K& r : roots) {
                        Mat<K> Kz = kernel_basis(
                            Zr - r * mat_identity<K>(Zr.r, ctx.one()), ctx.one());
                        if (Kz.c == 0) continue;
                        emit(true, r, "", Bh2 * Kz);
                        eig.push_back(Bh2 * Kz);
                        found += Kz.c;
                    }
                    if (found < Bh2.c) {
                        // record the unsplit remainder with its minimal polynomial
                        Mat<K> all = eig.empty() ? Mat<K>(F.dim, 0) : eig[0];
                        for (size_t i = 1; i < eig.size(); ++i) all = hstack(all, eig[i]);
                        Mat<K> probe = hstack(all, Bh2);
                        Mat<K> cp = probe;
                        auto piv = rref(cp);
                        Mat<K> rest(F.dim, (long)piv.size() - all.c);
                        long k = 0;
                        for (long pv : piv)
                            if (pv >= all.c) {
                                for (long i = 0; i < F.dim; ++i)
                                    rest.at(i, k) = probe.at(i, pv);
                                ++k;
                            }
                        if (note.empty()) {
                            std::ostringstream os;
                            os << "minimal polynomial:";
                            for (const auto& x : mp) os << " " << value_cd(x).real();
                            note = os.str();
                        }
                        emit(false, ctx.zero(), note, rest);
                    }
                }
            }
            if (sector_covered < B12.c) {
                rep.error = "eigenvalue candidates exhausted in sector (" +
                            std::to_string(l1) + "," + std::to_string(l2) + ")";
                rep.residual += B12.c - sector_covered;
            }
            covered += sector_covered;
        }
    }
    if (covered < F.dim && rep.error.empty()) {
        rep.error = "spinor-character sectors do not cover the module";
        rep.residual = F.dim - covered;
    }

    // highest-weight flags and descent lengths
    for (auto& L : rep.lines) {
        bool hw = true;
        for (RootLabel al : tama_pos_roots) {
            Mat<K> img = F.get(ladder_tag(al)) * L.vecs;
            hw = hw && img.is_zero();
        }
        L.highest = hw;
        if (!hw) continue;
        for (int r = 0; r < 4; ++r) {
            Mat<K> v(F.dim, 1);
            for (long i = 0; i < F.dim; ++i) v.at(i, 0) = L.vecs.at(i, 0);
            long k = 0;
            const Mat<K>& Lm = F.get(ladder_tag(tama_neg_roots[r]));
            while (k <= nmax_descent) {
                renormalize_column(v);
                Mat<K> w = Lm * v;
                if (w.is_zero()) break;
                v = std::move(w);
                ++k;
            }
            L.descent[r] = k;
        }
    }

    // canonical line order, then pick the highest weight by the kappa -> 0 rule
    std::sort(rep.lines.begin(), rep.lines.end(),
              [](const WeightLine<K>& a, const WeightLine<K>& b) {
                  if (a.l1 != b.l1) return a.l1 < b.l1;
                  if (a.l2 != b.l2) return a.l2 < b.l2;
                  if (a.lam1 != b.lam1) return a.lam1 < b.lam1;
                  if (a.lam2 != b.lam2) return a.lam2 < b.lam2;
                  auto za = value_cd(a.z), zb = value_cd(b.z);
                  if (std::abs(za.real() - zb.real()) > 1e-9) return za.real() < zb.real();
                  return za.imag() < zb.imag() - 1e-9;
              });
    auto zhalf = [](const Rational& q) {
        // nearest half-integer (kappa -> 0 part of a small perturbation)
        Rational t = 2 * q + rat(1, 2);
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
        return Rational(fl) / 2;
    };
    for (size_t i = 0; i < rep.lines.size(); ++i) {
        const auto& L = rep.lines[i];
        if (!L.highest) continue;
        if (rep.hw < 0) {
            rep.hw = (int)i;
            continue;
        }
        const auto& C = rep.lines[rep.hw];
        auto better = [&]() {
            if (L.lam1_0 != C.lam1_0) return L.lam1_0 > C.lam1_0;
            if (L.lam2_0 != C.lam2_0) return L.lam2_0 > C.lam2_0;
            if (L.z_rat && C.z_rat) {
                Rational a0 = zhalf(L.z_q), b0 = zhalf(C.z_q);
                if (a0 != b0) return a0 > b0;
                if (L.z_q != C.z_q) return L.z_q > C.z_q;
            } else if (L.z_rat != C.z_rat) {
                return L.z_rat;
            }
            if (L.l1 != C.l1) return L.l1 < C.l1;
            return L.l2 < C.l2;
        };
        if (better()) rep.hw = (int)i;
    }
    return rep;
}

// Lemma-level compatibility: ladders and group classes move weight spaces to
// the predicted weights. Returns an empty string on success.
template <class Ctx>
std::string ladder_weight_compat(const FiniteModule<Ctx>& F,
                                 const WeightReport<typename Ctx::K>& rep) {
    using K = typename Ctx::K;
    const Ctx& ctx = *F.ctx;
    int m1 = ctx.m1, m2 = ctx.m2;
    auto line_weight = [&](const WeightLine<K>& L) {
        Weight5R mu{L.lam1, L.lam2, Rational(0), L.l1, L.l2};
        return mu;
    };
    auto find_target = [&](const Weight5R& w, const K& zexp,
                           bool zknown) -> const WeightLine<K>* {
        for (const auto& L : rep.lines) {
            if (L.l1 != w.l1 || L.l2 != w.l2 || L.lam1 != w.lam1 || L.lam2 != w.lam2)
                continue;
            if (zknown && L.z_known && !kzero(L.z - zexp)) continue;
            return &L;
        }
        return nullptr;
    };
    auto contained = [&](const Mat<K>& img, const WeightLine<K>* T) {
        if (img.is_zero()) return true;
        if (!T) return false;
        Mat<K> x;
        return mat_solve(T->vecs, img, x);
    };
    for (const auto& L : rep.lines) {
        for (RootLabel al : tama_pos_roots)
            for (int s : {1, -1}) {
                RootLabel a{s * al.a1, s * al.a2};
                Weight5R tgt = act_root(line_weight(L), a, m1, m2);
                K zexp = ((a.a1 + a.a2) % 2) ? -L.z : L.z;
                Mat<K> img = F.get(ladder_tag(a)) * L.vecs;
                if (!contained(img, find_target(tgt, zexp, L.z_known)))
                    return "ladder image escapes the predicted weight space";
            }
        for (int i : {0, 1})
            for (int j : {0, 1}) {
                if (i == 0 && j == 0) continue;
                Weight5R tgt = act_class(line_weight(L), i, j, m1, m2);
                K zexp = ((i + j) % 2) ? -L.z : L.z;
                Mat<K> g = mat_identity<K>(F.dim, ctx.one());
                if (i) g = g * F.get(OpTag::F1);
                if (j) g = g * F.get(OpTag::F2);
                if (!contained(g * L.vecs, find_target(tgt, zexp, L.z_known)))
                    return "group image escapes the predicted weight space";
            }
    }
    return "";
}

// dimension of the smallest invariant subspace containing v0 under the tags
template <class Ctx>
long translate_span_dim(const FiniteModule<Ctx>& F, const Mat<typename Ctx::K>& v0,
                        const std::vector<OpTag>& gens) {
    using K = typename Ctx::K;
    Mat<K> cur = image_basis(v0);
    for (;;) {
        Mat<K> stack = cur;
        for (OpTag t : gens) stack = hstack(stack, F.get(t) * cur);
        Mat<K> nb = image_basis(stack);
        if (nb.c == cur.c) return cur.c;
        cur = std::move(nb);
    }
}

inline std::vector<OpTag> all_tags() {
    return {OpTag::H1,  OpTag::H2,  OpTag::Zop, OpTag::R1,  OpTag::R2,
            OpTag::F1,  OpTag::F2,  OpTag::Lp1, OpTag::Lm1, OpTag::Lp2,
            OpTag::Lm2, OpTag::Lpp, OpTag::Lpm, OpTag::Lmp, OpTag::Lmm};
}

inline std::vector<OpTag> triangular_tags() {  // the T-subalgebra generators
    return {OpTag::H1,  OpTag::H2,  OpTag::Zop, OpTag::Lp1, OpTag::Lm1,
            OpTag::Lp2, OpTag::Lm2, OpTag::Lpp, OpTag::Lpm, OpTag::Lmp,
            OpTag::Lmm};
}

// ---------------------------------------------------------------------------
// Triangle bases: (f2)^eps (f1)^delta (L2+)^j (L1-)^i applied to a highest
// weight vector.
// ---------------------------------------------------------------------------

template <class K>
struct TriangleBasis {
    int N = 0;
    long expected = 0;
    std::vector<std::array<int, 4>> index;  // (i, j, delta, eps)
    Mat<K> vectors;                         // module coordinates, one column each
    std::string error;
};

template <class Ctx>
TriangleBasis<typename Ctx::K> triangle_basis(const FiniteModule<Ctx>& F,
                                              const WeightReport<typename Ctx::K>& rep,
                                              int N) {
    using K = typename Ctx::K;
    const Ctx& ctx = *F.ctx;
    TriangleBasis<K> out;
    out.N = N;
    out.expected = 2L * (N + 1) * (N + 2);
    if (rep.hw < 0) {
        out.error = "no highest-weight vector available";
        return out;
    }
    const auto& hwl = rep.lines[rep.hw];
    Rational lam1 = hwl.lam1, lam2 = hwl.lam2;
    Mat<K> v(F.dim, 1);
    for (long i = 0; i < F.dim; ++i) v.at(i, 0) = hwl.vecs.at(i, 0);
    const Mat<K>&L1m = F.get(OpTag::Lm1), &L2p = F.get(OpTag::Lp2);
    const Mat<K>&G1 = F.get(OpTag::F1), &G2 = F.get(OpTag::F2);
    out.vectors = Mat<K>(F.dim, 0);
    Mat<K> vi = v;
    for (int i = 0; i <= N; ++i) {
        if (i > 0) vi = L1m * vi;
        renormalize_column(vi);
        Mat<K> w = vi;
        for (int j = 0; j <= i; ++j) {
            if (j > 0) w = L2p * w;
            renormalize_column(w);
            for (int delta : {0, 1})
                for (int eps : {0, 1}) {
                    Mat<K> u = w;
                    if (delta) u = G1 * u;
                    if (eps) u = G2 * u;
                    renormalize_column(u);
                    if (u.is_zero()) {
                        out.error = "vanishing basis vector at (i,j,delta,eps)=(" +
                                    std::to_string(i) + "," + std::to_string(j) + "," +
                                    std::to_string(delta) + "," + std::to_string(eps) + ")";
                        return out;
                    }
                    Rational h1 = (delta ? -1 : 1) * (lam1 - i);
                    Rational h2 = (eps ? -1 : 1) * (lam2 + j);
                    Mat<K> r1 = F.get(OpTag::H1) * u - ctx.from_rat(h1) * u;
                    Mat<K> r2 = F.get(OpTag::H2) * u - ctx.from_rat(h2) * u;
                    if (!r1.is_zero() || !r2.is_zero()) {
                        out.error = "eigenvalue mismatch at (i,j,delta,eps)=(" +
                                    std::to_string(i) + "," + std::to_string(j) + "," +
                                    std::to_string(delta) + "," + std::to_string(eps) + ")";
                        return out;
                    }
                    out.index.push_back({i, j, delta, eps});
                    out.vectors = hstack(out.vectors, u);
                }
        }
    }
    return out;
}

// exact-versus-float cross validation; empty string on agreement
template <class KE, class KF>
std::string compare_weight_reports(const WeightReport<KE>& e, const WeightReport<KF>& f,
                                   double tol = 1e-9) {
    if (e.dim != f.dim) return "dimension mismatch";
    if (e.lines.size() != f.lines.size()) return "weight-line count mismatch";
    if (!e.error.empty() || !f.error.empty()) return "decomposition error present";
    for (size_t i = 0; i < e.lines.size(); ++i) {
        const auto& a = e.lines[i];
        const auto& b = f.lines[i];
        std::string where = " at line " + std::to_string(i);
        if (a.l1 != b.l1 || a.l2 != b.l2) return "spinor label mismatch" + where;
        if (a.lam1 != b.lam1 || a.lam2 != b.lam2) return "eigenvalue mismatch" + where;
        if (a.mult != b.mult) return "multiplicity mismatch" + where;
        if (a.z_known != b.z_known) return "split status mismatch" + where;
        if (a.z_known && std::abs(value_cd(a.z) - value_cd(b.z)) > tol)
            return "central eigenvalue mismatch" + where;
        if (a.highest != b.highest) return "highest-weight flag mismatch" + where;
        if (a.descent != b.descent) return "descent mismatch" + where;
    }
    if ((e.hw < 0) != (f.hw < 0) || (e.hw >= 0 && e.hw != f.hw))
        return "highest-weight selection mismatch";
    return "";
}

// ---------------------------------------------------------------------------
// Orthogonality of distinct weight spaces under the sesquilinear pairing.
// `amb` carries the module basis into the ambient degree-d slice.
// ---------------------------------------------------------------------------

template <class Ctx>
bool weights_orthogonal(const FischerForm<Ctx>& FF, int d,
                        const Mat<typename Ctx::K>& amb,
                        const WeightReport<typename Ctx::K>& rep) {
    using K = typename Ctx::K;
    for (size_t i = 0; i < rep.lines.size(); ++i)
        for (size_t j = i + 1; j < rep.lines.size(); ++j) {
            Mat<K> vi = amb * rep.lines[i].vecs, vj = amb * rep.lines[j].vecs;
            if (!(mat_conj_transpose(vi) * (FF.gram[d] * vj)).is_zero()) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// The eight-dimensional degree-zero module: constants with values in a
// two-dimensional representation of the first dihedral factor, tensored with
// the spinor space. Internal basis order: (value component w) x (spinor
// mask), index 4*w + mask.
// ---------------------------------------------------------------------------

template <class K>
Mat<K> kron24(const Mat<K>& A, const Mat<K>& B) {
    Mat<K> C(A.r * B.r, A.c * B.c);
    for (long i = 0; i < A.r; ++i)
        for (long j = 0; j < A.c; ++j) {
            if (kzero(A.at(i, j))) continue;
            for (long p = 0; p < B.r; ++p)
                for (long q = 0; q < B.c; ++q)
                    C.at(i * B.r + p, j * B.c + q) = A.at(i, j) * B.at(p, q);
        }
    return C;
}

template <class Ctx>
struct OneHalfModel {
    using K = typename Ctx::K;
    FiniteModule<Ctx> mod;
    std::array<Mat<K>, 16> Om;  // wedge-mask symmetries
    Mat<K> o12[2][2];           // O(z_1^d ^ z_2^e), indexed [d<0][e<0]
};

template <class Ctx>
OneHalfModel<Ctx> onehalf_model(const Session<Ctx>& S, int u) {
    using K = typename Ctx::K;
    using Ext = ExteriorElt<K>;
    const Ctx& ctx = S.ctx;
    const K one = ctx.one(), zero = ctx.zero();
    Mat<K> tr1(2, 2), tf1(2, 2);
    tr1.at(0, 0) = ctx.zeta1(2 * u);
    tr1.at(1, 1) = ctx.zeta1(-2 * u);
    tf1.at(0, 1) = one;
    tf1.at(1, 0) = one;
    auto tau = [&](const CoverElement& g) {
        Mat<K> M = mat_identity<K>(2, one);
        for (int t = 0; t < g.j; ++t) M = M * tr1;
        if (g.d1) M = M * tf1;
        return M;
    };
    auto rho8 = [&](const CoverElement& g) { return kron24(tau(g), S.GT.spin(g)); };
    auto gam8 = [&](const Ext& v) {
        CliffordElt<K> c;
        c.c = v.c;
        return kron24(mat_identity<K>(2, one), spinor_matrix(ctx, c));
    };
    using Vec = std::array<K, 4>;
    auto xunit = [&](int j) {
        Vec v{zero, zero, zero, zero};
        v[j - 1] = one;
        return v;
    };
    auto zvv = [&](int a, int s) {
        Vec v{zero, zero, zero, zero};
        v[2 * a - 2] = one;
        v[2 * a - 1] = s > 0 ? ctx.iu() : -ctx.iu();
        return v;
    };
    auto bilin = [&](const Vec& x, const Vec& y) {
        K acc = zero;
        for (int j = 0; j < 4; ++j) acc += x[j] * y[j];
        return acc;
    };
    // one-index symmetries: the weighted reflection sums (the derivative part
    // of the Dunkl operators annihilates constants)
    auto O1 = [&](const Vec& x) {
        Mat<K> acc(8, 8);
        for (const auto& rd : S.roots) {
            K c = rd.kap * bilin(x, rd.vec);
            if (kzero(c)) continue;
            acc = acc + c * rho8(rd.lift);
        }
        return acc;
    };
    auto O2 = [&](const Vec& x, const Vec& y) {
        Ext ex = ext_vector(x), ey = ext_vector(y);
        return ctx.half() * gam8(wedge(ex, ey)) + O1(x) * gam8(ey) - O1(y) * gam8(ex);
    };
    auto O3 = [&](const Vec& x, const Vec& y, const Vec& z) {
        Ext ex = ext_vector(x), ey = ext_vector(y), ez = ext_vector(z);
        K mh = -ctx.half();
        return mh * gam8(wedge(wedge(ex, ey), ez)) + O2(x, y) * gam8(ez) -
               O2(x, z) * gam8(ey) + O2(y, z) * gam8(ex) - O1(x) * gam8(wedge(ey, ez)) +
               O1(y) * gam8(wedge(ex, ez)) - O1(z) * gam8(wedge(ex, ey));
    };
    OneHalfModel<Ctx> M;
    auto& Om = M.Om;
    for (unsigned mask = 0; mask < 15; ++mask) {
        std::array<int, 4> idx{};
        int k = 0;
        for (int j = 1; j <= 4; ++j)
            if (mask & (1u << (j - 1))) idx[k++] = j;
        switch (k) {
            case 0: Om[mask] = -ctx.half() * mat_identity<K>(8, one); break;
            case 1: Om[mask] = O1(xunit(idx[0])); break;
            case 2: Om[mask] = O2(xunit(idx[0]), xunit(idx[1])); break;
            default: Om[mask] = O3(xunit(idx[0]), xunit(idx[1]), xunit(idx[2])); break;
        }
    }
    auto acomm = [](const Mat<K>& X, const Mat<K>& Y) { return X * Y + Y * X; };
    // the volume symmetry is the sCasimir times the Clifford volume element;
    // on the bottom slice the sCasimir collapses to a plain-reflection sum
    // (the Clifford square of each root is scalar, so no spin factor remains)
    {
        Mat<K> grp = ctx.from_rat(rat(3, 2)) * mat_identity<K>(8, one);
        for (const auto& rd : S.roots)
            grp = grp + rd.kap * kron24(tau(rd.lift), mat_identity<K>(4, one));
        Ext vol;
        vol.c[15] = one;
        Om[15] = grp * gam8(vol);
    }
    auto from8 = [&](const Ext& v) {
        Mat<K> acc(8, 8);
        for (unsigned A = 0; A < 16; ++A) {
            if (kzero(v.c[A])) continue;
            acc = acc + v.c[A] * Om[A];
        }
        return acc;
    };
    auto iso = [&](std::initializer_list<std::pair<int, int>> factors) {
        Ext v;
        bool first = true;
        for (auto [a, s] : factors) {
            Ext f = ext_vector(zvv(a, s));
            v = first ? f : wedge(v, f);
            first = false;
        }
        return from8(v);
    };
    FiniteModule<Ctx>& F = M.mod;
    F.ctx = &ctx;
    F.dim = 8;
    F.nmax_h = 0;
    F.name = "degree-zero module, u=" + std::to_string(u);
    Mat<K> H1 = ctx.half() * iso({{1, +1}, {1, -1}});
    Mat<K> H2 = ctx.half() * iso({{2, +1}, {2, -1}});
    F.op[OpTag::H1] = H1;
    F.op[OpTag::H2] = H2;
    F.op[OpTag::Zop] = Om[15];
    int m1 = ctx.m1, m2 = ctx.m2;
    F.op[OpTag::R1] = rho8({m1, m2, 0, 1, 0, 0, 0});
    F.op[OpTag::R2] = rho8({m1, m2, 0, 0, 1, 0, 0});
    F.op[OpTag::F1] = rho8({m1, m2, 0, 0, 0, 1, 0});
    F.op[OpTag::F2] = rho8({m1, m2, 0, 0, 0, 0, 1});
    auto T3 = [&](int a, int d) {
        int b = 3 - a;
        return iso({{a, d}, {b, +1}, {b, -1}});
    };
    auto Lodd = [&](int b, int e) { return acomm(b == 1 ? H1 : H2, T3(b, e)); };
    auto Leven = [&](int d, int e) { return acomm(H1, acomm(H2, iso({{1, d}, {2, e}}))); };
    for (RootLabel al : tama_pos_roots)
        for (int s : {1, -1}) {
            RootLabel a{s * al.a1, s * al.a2};
            F.op[ladder_tag(a)] = (a.a1 && a.a2) ? Leven(a.a1, a.a2)
                                  : a.a1         ? Lodd(1, a.a1)
                                                 : Lodd(2, a.a2);
        }
    for (int d : {+1, -1})
        for (int e : {+1, -1}) M.o12[d < 0][e < 0] = iso({{1, d}, {2, e}});
    return M;
}

// paper-order basis: internal index of each listed basis vector
inline const std::array<int, 8> onehalf_basis_order{0, 5, 2, 7, 4, 1, 6, 3};

struct OneHalfReport {
    int u = 0;
    bool split = false;  // 2u == m1
    Rational q20, q1_2u, q22;
    bool ladders_zero = false;
    bool weights_ok = false;
    bool coef_ok = false;      // even-symmetry coefficients across the halves
    bool structure_ok = false; // predicted invariant subspaces
    std::string reducibility;  // irreducible | reducible | indeterminate
    bool irreducibility_confirmed = false;  // by translate spans
    bool iso_checked = false, iso_ok = false;
    std::string detail;  // first failed check
};

template <class Ctx>
OneHalfReport onehalf_analysis(const Session<Ctx>& S, int u,
                               const std::array<Rational, 4>& kv) {
    using K = typename Ctx::K;
    const Ctx& ctx = S.ctx;
    int m1 = ctx.m1, m2 = ctx.m2;
    OneHalfReport rep;
    rep.u = u;
    rep.split = (2 * u == m1);
    rep.q20 = q_value(2, 0, m1, m2, kv);
    rep.q1_2u = q_value(1, 2 * u, m1, m2, kv);
    rep.q22 = q_value(2, 2, m1, m2, kv);
    OneHalfModel<Ctx> M = onehalf_model(S, u);
    const FiniteModule<Ctx>& F = M.mod;
    auto fail = [&](const std::string& what) {
        if (rep.detail.empty()) rep.detail = what;
    };
    auto fr = [&](const Rational& r) { return ctx.from_rat(r); };

    rep.ladders_zero = true;
    for (RootLabel al : tama_pos_roots)
        for (int s : {1, -1})
            if (!F.get(ladder_tag({s * al.a1, s * al.a2})).is_zero())
                rep.ladders_zero = false;
    if (!rep.ladders_zero) fail("a ladder does not vanish on the degree-zero module");

    auto basis_col = [&](int paper_i) {  // 1-based index in the listed order
        Mat<K> v(8, 1);
        v.at(onehalf_basis_order[paper_i - 1], 0) = ctx.one();
        return v;
    };
    auto eig_ok = [&](OpTag t, const Mat<K>& v, const K& val) {
        return (F.get(t) * v - val * v).is_zero();
    };
    Rational lam1 = rat(1, 2), lam2 = rat(1, 2) + rep.q20;
    Rational Lam = -rat(1, 2) - lam1 - lam2;
    // sign patterns shared by both cases (paper basis order)
    const int s1[8] = {1, -1, 1, -1, 1, -1, 1, -1};
    const int s2[8] = {1, 1, -1, -1, 1, 1, -1, -1};
    const int sL[8] = {1, -1, -1, 1, 1, -1, -1, 1};

    if (!rep.split) {
        const long e1[8] = {2 * u + 1, -(2 * u + 1), 2 * u + 1,  -(2 * u + 1),
                            -(2 * u - 1), 2 * u - 1, -(2 * u - 1), 2 * u - 1};
        const long e2[8] = {1, 1, -1, -1, 1, 1, -1, -1};
        rep.weights_ok = true;
        for (int i = 1; i <= 8; ++i) {
            Mat<K> v = basis_col(i);
            bool ok = eig_ok(OpTag::H1, v, fr(s1[i - 1] * lam1)) &&
                      eig_ok(OpTag::H2, v, fr(s2[i - 1] * lam2)) &&
                      eig_ok(OpTag::Zop, v, fr(sL[i - 1] * Lam)) &&
                      eig_ok(OpTag::R1, v, ctx.zeta1(e1[i - 1])) &&
                      eig_ok(OpTag::R2, v, ctx.zeta2(e2[i - 1]));
            if (!ok) {
                rep.weights_ok = false;
                fail("weight table mismatch at basis vector " + std::to_string(i));
            }
        }
        // coefficients 2(1 + Q_2(0)) of the even symmetries across the halves
        K c = fr(2 * (1 + rep.q20));
        rep.coef_ok =
            (M.o12[1][1] * basis_col(1) - c * basis_col(8)).is_zero() &&
            (M.o12[0][1] * basis_col(2) + c * basis_col(7)).is_zero() &&
            (M.o12[1][0] * basis_col(3) - c * basis_col(6)).is_zero() &&
            (M.o12[0][0] * basis_col(4) + c * basis_col(5)).is_zero();
        if (!rep.coef_ok) fail("even-symmetry coefficient mismatch");
        // group decomposition into the two listed halves
        Mat<K> U1(8, 4), U2(8, 4);
        for (int j = 0; j < 4; ++j)
            for (long i = 0; i < 8; ++i) {
                U1.at(i, j) = basis_col(j + 1).at(i, 0);
                U2.at(i, j) = basis_col(j + 5).at(i, 0);
            }
        rep.structure_ok = true;
        for (OpTag t : {OpTag::R1, OpTag::R2, OpTag::F1, OpTag::F2}) {
            Mat<K> x;
            if (!mat_solve(U1, F.get(t) * U1, x)) rep.structure_ok = false;
            if (!mat_solve(U2, F.get(t) * U2, x)) rep.structure_ok = false;
        }
        if (!rep.structure_ok) fail("listed halves are not group-invariant");
        if (1 + rep.q20 != 0)
            rep.reducibility = "irreducible";
        else if (rep.q22 != 0)
            rep.reducibility = "irreducible";
        else
            rep.reducibility = "indeterminate";
    } else {
        Rational lamp = rat(1, 2) + rep.q1_2u, lamm = rat(1, 2) - rep.q1_2u;
        rep.weights_ok = true;
        Mat<K> Up(8, 4), Un(8, 4);
        for (int sgn : {1, -1}) {
            Rational l1v = sgn > 0 ? lamp : lamm;
            Rational Lv = -rat(1, 2) - l1v - lam2;
            for (int j = 1; j <= 4; ++j) {
                Mat<K> w = basis_col(j) + fr(Rational(sgn)) * basis_col(4 + j);
                bool ok = eig_ok(OpTag::H1, w, fr(s1[j - 1] * l1v)) &&
                          eig_ok(OpTag::H2, w, fr(s2[j - 1] * lam2)) &&
                          eig_ok(OpTag::Zop, w, fr(sL[j - 1] * Lv));
                if (!ok) {
                    rep.weights_ok = false;
                    fail("split weight mismatch at vector " + std::to_string(j) +
                         (sgn > 0 ? "+" : "-"));
                }
                Mat<K>& U = sgn > 0 ? Up : Un;
                for (long i = 0; i < 8; ++i) U.at(i, j - 1) = w.at(i, 0);
            }
        }
        rep.coef_ok = true;  // not part of the split statement
        // both summands invariant under the whole symmetry set
        rep.structure_ok = true;
        for (const Mat<K>* U : {&Up, &Un}) {
            Mat<K> x;
            for (unsigned A = 0; A < 16; ++A)
                if (!mat_solve(*U, M.Om[A] * (*U), x)) rep.structure_ok = false;
            for (OpTag t : {OpTag::R1, OpTag::R2, OpTag::F1, OpTag::F2})
                if (!mat_solve(*U, F.get(t) * (*U), x)) rep.structure_ok = false;
        }
        if (!rep.structure_ok) fail("split summands are not invariant");
        rep.reducibility = "reducible";
        // each summand irreducible: every basis vector generates the summand
        rep.irreducibility_confirmed = true;
        for (const Mat<K>* U : {&Up, &Un}) {
            // restricted generator matrices
            std::vector<Mat<K>> gens;
            for (unsigned A = 0; A < 16; ++A) gens.push_back(restrict_to(M.Om[A], *U));
            for (OpTag t : {OpTag::R1, OpTag::R2, OpTag::F1, OpTag::F2})
                gens.push_back(restrict_to(F.get(t), *U));
            for (int j = 0; j < 4; ++j) {
                Mat<K> v(4, 1);
                v.at(j, 0) = ctx.one();
                Mat<K> cur = v;
                for (;;) {
                    Mat<K> stack = cur;
                    for (const auto& g : gens) stack = hstack(stack, g * cur);
                    Mat<K> nb = image_basis(stack);
                    if (nb.c == cur.c) break;
                    cur = std::move(nb);
                }
                if (cur.c != 4) rep.irreducibility_confirmed = false;
            }
        }
        // module isomorphism between the summands when Q_1(2u) = 0.  The
        // intertwiner is solved over the symmetry operators; the reflection
        // generator of the first factor can only ever match up to the sign
        // character (its spin part lies in the Clifford image, which pins
        // any intertwiner on the symmetry side), so it is excluded here and
        // its sign behaviour is checked separately below.
        if (rep.q1_2u == 0) {
            rep.iso_checked = true;
            std::vector<Mat<K>> Ap, An;
            for (unsigned A = 0; A < 16; ++A) {
                Ap.push_back(restrict_to(M.Om[A], Up));
                An.push_back(restrict_to(M.Om[A], Un));
            }
            for (OpTag t : {OpTag::R1, OpTag::R2, OpTag::F2}) {
                Ap.push_back(restrict_to(F.get(t), Up));
                An.push_back(restrict_to(F.get(t), Un));
            }
            // T with An[g] T = T Ap[g] for all generators
            long ng = (long)Ap.size();
            Mat<K> sys(ng * 16, 16);
            for (long g = 0; g < ng; ++g)
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j)
                        for (int k = 0; k < 4; ++k) {
                            // row (g, i, j): sum_k An[g](i,k) T(k,j) - T(i,k) Ap[g](k,j)
                            sys.at(g * 16 + i * 4 + j, k * 4 + j) += An[g].at(i, k);
                            sys.at(g * 16 + i * 4 + j, i * 4 + k) -= Ap[g].at(k, j);
                        }
            Mat<K> ker = kernel_basis(sys, ctx.one());
            rep.iso_ok = false;
            Mat<K> T(4, 4);
            for (long c = 0; c < ker.c + 1 && !rep.iso_ok; ++c) {
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j) {
                        T.at(i, j) = ctx.zero();
                        if (c < ker.c)
                            T.at(i, j) = ker.at(i * 4 + j, c);
                        else  // last resort: sum of the kernel basis
                            for (long cc = 0; cc < ker.c; ++cc)
                                T.at(i, j) += ker.at(i * 4 + j, cc);
                    }
                if (mat_rank(T) == 4) rep.iso_ok = true;
            }
            if (!rep.iso_ok) {
                fail("no invertible intertwiner between the summands");
            } else {
                // the excluded reflection pairs the summands only up to sign
                Mat<K> f1p = restrict_to(F.get(OpTag::F1), Up);
                Mat<K> f1n = restrict_to(F.get(OpTag::F1), Un);
                if (!(f1n * T + T * f1p).is_zero())
                    fail("unexpected reflection behaviour on the intertwiner");
            }
        }
    }

    // irreducibility support in the non-split case: every basis vector
    // generates the whole module
    if (!rep.split && rep.reducibility == "irreducible") {
        rep.irreducibility_confirmed = true;
        std::vector<Mat<K>> gens;
        for (unsigned A = 0; A < 16; ++A) gens.push_back(M.Om[A]);
        for (OpTag t : {OpTag::R1, OpTag::R2, OpTag::F1, OpTag::F2})
            gens.push_back(F.get(t));
        for (int j = 1; j <= 8; ++j) {
            Mat<K> cur = basis_col(j);
            for (;;) {
                Mat<K> stack = cur;
                for (const auto& g : gens) stack = hstack(stack, g * cur);
                Mat<K> nb = image_basis(stack);
                if (nb.c == cur.c) break;
                cur = std::move(nb);
            }
            if (cur.c != 8) rep.irreducibility_confirmed = false;
        }
        if (!rep.irreducibility_confirmed) fail("a basis vector fails to generate");
    }
    return rep;
}

}  // namespace tama
