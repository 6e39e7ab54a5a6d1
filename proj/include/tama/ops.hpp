#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>

#include "tama/dunkl.hpp"

namespace tama {

template <class K>
SlicedOp<K> trim(const SlicedOp<K>& A, int D) {
    SlicedOp<K> C;
    C.shift = A.shift;
    C.parity = A.parity;
    C.Dmax = std::min(A.Dmax, D);
    if (C.Dmax < 0) throw std::invalid_argument("trim below the operator window");
    C.blocks.assign(A.blocks.begin(), A.blocks.begin() + C.Dmax + 1);
    return C;
}

// image of an exterior element under a linear map on V (columns = images)
template <class K>
ExteriorElt<K> ext_map(const Mat<K>& M, const ExteriorElt<K>& v) {
    ExteriorElt<K> out;
    for (unsigned A = 0; A < 16; ++A) {
        if (kzero(v.c[A])) continue;
        ExteriorElt<K> w;
        w.c[0] = v.c[A];
        for (int j = 1; j <= 4; ++j) {
            if (!(A & (1u << (j - 1)))) continue;
            std::array<K, 4> col{M.at(0, j - 1), M.at(1, j - 1), M.at(2, j - 1),
                                 M.at(3, j - 1)};
            w = wedge(w, ext_vector(col));
        }
        out = out + w;
    }
    return out;
}

// Cache of conserved-symmetry operators for one parameter pair. Generators
// are materialized once at window W = D + 2 (needed for the projector and the
// supersymmetric elements); identity checks multiply operators trimmed to the
// verification window D, where every factor is degree-preserving.
template <class Ctx>
class Ops {
  public:
    using K = typename Ctx::K;
    using Op = SlicedOp<K>;
    using Vec = std::array<K, 4>;
    using Ext = ExteriorElt<K>;

    const Session<Ctx>& S;
    int D;  // verification window
    int W;  // construction window

    Op id_, xvec_, dvec_, euler_, normsq_, lap_;
    std::array<Op, 4> xm_, tm_;

    Ops(const Session<Ctx>& s, int check_degree)
        : S(s), D(check_degree), W(check_degree + 2) {
        id_ = op_identity(S, W);
        for (int j = 1; j <= 4; ++j) {
            xm_[j - 1] = op_x(S, j, W);
            tm_[j - 1] = op_dunkl(S, j, W);
        }
        xvec_ = op_xvec(S, W - 1);
        dvec_ = op_dvec(S, W);
        euler_ = op_euler(S, W - 1);
        normsq_ = op_normsq(S, W - 2);
        lap_ = op_laplacian(S, W);
    }

    const Ctx& ctx() const { return S.ctx; }
    K sc(long n, long d = 1) const { return ctx().from_rat(Rational(n, d)); }
    K sgn(int s) const { return sc(s); }

    Vec xunit(int j) const {
        Vec v{ctx().zero(), ctx().zero(), ctx().zero(), ctx().zero()};
        v[j - 1] = ctx().one();
        return v;
    }
    // isotropic vectors z_a^{+} = x_{2a-1} + i x_{2a}, z_a^{-} its bar
    Vec zv(int a, int s) const {
        Vec v{ctx().zero(), ctx().zero(), ctx().zero(), ctx().zero()};
        v[2 * a - 2] = ctx().one();
        v[2 * a - 1] = s > 0 ? ctx().iu() : -ctx().iu();
        return v;
    }
    K bilin(const Vec& u, const Vec& v) const {
        K acc = ctx().zero();
        for (int j = 0; j < 4; ++j) acc += u[j] * v[j];
        return acc;
    }

    Op mult(const Vec& v) const { return combine(xm_, v); }
    Op dunk(const Vec& v) const { return combine(tm_, v); }

    Op gam(const Ext& v) const {
        CliffordElt<K> c;
        c.c = v.c;
        return op_clifford(S, c, W);
    }

    // group elements, cached
    const Op& rho(const CoverElement& g) {
        long key = ((long)g.a * 2 + g.d1) * 2 + g.d2;
        key = (key * (2 * g.m1) + g.j) * (2 * g.m2) + g.k;
        auto it = memo_rho_.find(key);
        if (it == memo_rho_.end())
            it = memo_rho_.emplace(key, op_group(S, g, W)).first;
        return it->second;
    }

    // the centraliser projection: X - 1/2 [[D, [[x, X]] ]]
    Op P(const Op& X) const {
        return X - sc(1, 2) * graded_commutator(dvec_, graded_commutator(xvec_, X));
    }

    Op O_P(const Ext& v) const { return sc(-1, 2) * P(gam(v)); }

    // one-index symmetry: the weighted sum of lifted reflections
    Op O1x(const Vec& x) {
        Op acc;
        bool first = true;
        for (const auto& rd : S.roots) {
            K c = rd.kap * bilin(x, rd.vec);
            if (kzero(c)) continue;
            Op t = c * rho(rd.lift);
            acc = first ? std::move(t) : acc + t;
            first = false;
        }
        if (first) acc = K() * id_;
        acc.parity = 1;
        return acc;
    }

    // two-index symmetry from the angular-momentum form
    Op O2x(const Vec& x, const Vec& y) {
        Op res = (mult(x) * dunk(y) - mult(y) * dunk(x)) +
                 sc(1, 2) * gam(wedge(ext_vector(x), ext_vector(y))) +
                 (O1x(x) * gam(ext_vector(y)) - O1x(y) * gam(ext_vector(x)));
        res.parity = 0;
        return res;
    }

    // three-index symmetry via the seven-term expansion
    Op O3x(const Vec& x, const Vec& y, const Vec& z) {
        Ext ex = ext_vector(x), ey = ext_vector(y), ez = ext_vector(z);
        Op res = sc(-1, 2) * gam(wedge(wedge(ex, ey), ez)) + O2x(x, y) * gam(ez) -
                 O2x(x, z) * gam(ey) + O2x(y, z) * gam(ex) - O1x(x) * gam(wedge(ey, ez)) +
                 O1x(y) * gam(wedge(ex, ez)) - O1x(z) * gam(wedge(ex, ey));
        res.parity = 1;
        return res;
    }

    // full-window symmetry attached to an orthonormal wedge-basis mask
    const Op& Oo(unsigned mask) {
        auto it = memo_orth_.find(mask);
        if (it != memo_orth_.end()) return it->second;
        std::array<int, 4> idx{};
        int k = 0;
        for (int j = 1; j <= 4; ++j)
            if (mask & (1u << (j - 1))) idx[k++] = j;
        Op op;
        switch (k) {
            case 0: op = sc(-1, 2) * id_; break;
            case 1: op = O1x(xunit(idx[0])); break;
            case 2: op = O2x(xunit(idx[0]), xunit(idx[1])); break;
            case 3: op = O3x(xunit(idx[0]), xunit(idx[1]), xunit(idx[2])); break;
            default: op = O_P(ext_basis(15u, ctx().one())); break;
        }
        return memo_orth_.emplace(mask, std::move(op)).first->second;
    }

    const Op& Zfull() { return Oo(15u); }

    // linear extension over the cached wedge-basis symmetries (trimmed to D)
    Op from_ext(const Ext& v) {
        Op acc;
        bool first = true;
        int par = -1;
        for (unsigned A = 0; A < 16; ++A) {
            if (kzero(v.c[A])) continue;
            Op t = v.c[A] * trim(Oo(A), D);
            acc = first ? std::move(t) : acc + t;
            first = false;
            int p = std::popcount(A) % 2;
            par = (par < 0 || par == p) ? p : -2;
        }
        if (first) acc = K() * trim(id_, D);
        acc.parity = par > 0 ? 1 : 0;
        return acc;
    }

    // --- check-window accessors (all trimmed to D) ------------------------

    Op O(unsigned mask) { return trim(Oo(mask), D); }
    Op idD() { return trim(id_, D); }
    Op cst(const Rational& r) { return ctx().from_rat(r) * trim(id_, D); }
    Op cst(long n, long d = 1) { return cst(Rational(n, d)); }
    Op rhoD(const CoverElement& g) { return trim(rho(g), D); }

    // isotropic symmetries O(z_{a1}^{s1} ^ ...), memoized
    Op Oi(std::initializer_list<std::pair<int, int>> factors) {
        long key = 1;
        Ext v;
        bool first = true;
        for (auto [a, s] : factors) {
            key = key * 8 + a * 2 + (s > 0 ? 1 : 0);
            Ext f = ext_vector(zv(a, s));
            v = first ? f : wedge(v, f);
            first = false;
        }
        auto it = memo_iso_.find(key);
        if (it == memo_iso_.end()) it = memo_iso_.emplace(key, from_ext(v)).first;
        return it->second;
    }

    Op H(int a) { return sc(1, 2) * Oi({{a, +1}, {a, -1}}); }
    Op Z() { return trim(Zfull(), D); }
    Op T3(int a, int d) {  // O_{abb}^{d +-}
        int b = 3 - a;
        return Oi({{a, d}, {b, +1}, {b, -1}});
    }

    // ladder operators, cached
    Op Lodd(int b, int e) {
        long key = 100 + b * 4 + (e > 0 ? 1 : 0);
        auto it = memo_lad_.find(key);
        if (it == memo_lad_.end())
            it = memo_lad_.emplace(key, anticommutator(H(b), T3(b, e))).first;
        return it->second;
    }
    Op Leven(int d, int e) {
        long key = 200 + (d > 0 ? 2 : 0) + (e > 0 ? 1 : 0);
        auto it = memo_lad_.find(key);
        if (it == memo_lad_.end())
            it = memo_lad_.emplace(
                     key, anticommutator(H(1), anticommutator(H(2), Oi({{1, d}, {2, e}}))))
                     .first;
        return it->second;
    }
    // ladder for the root c1*w1 + c2*w2 with c1, c2 in {-1, 0, +1}
    Op ladder(int c1, int c2) {
        if (c1 && c2) return Leven(c1, c2);
        return c1 ? Lodd(1, c1) : Lodd(2, c2);
    }

    Op scasimir() { return Z() * trim(gam(ext_basis(15u, ctx().one())), D); }

  private:
    Op combine(const std::array<Op, 4>& gen, const Vec& v) const {
        Op acc;
        bool first = true;
        for (int j = 0; j < 4; ++j) {
            if (kzero(v[j])) continue;
            Op t = v[j] * gen[j];
            acc = first ? std::move(t) : acc + t;
            first = false;
        }
        if (first) throw std::invalid_argument("zero vector");
        return acc;
    }

    std::map<unsigned, Op> memo_orth_;
    std::map<long, Op> memo_iso_, memo_rho_, memo_lad_;
};

// --- Fischer-type pairing and adjoints -------------------------------------
// <p, q> = (pbar(T) q)(0) on polynomials, tensored with the spinor form that
// makes every e_j self-adjoint (the monomial spinor basis is orthonormal).
// Multiplication by x_j and the deformed derivative T_j are mutually adjoint.
template <class Ctx>
struct FischerForm {
    using K = typename Ctx::K;
    int Dmax;
    std::vector<Mat<K>> gram;  // full slice gram per degree

    FischerForm(const Session<Ctx>& S, int Dmax_) : Dmax(Dmax_) {
        std::vector<std::vector<Expo>> mons(Dmax + 1);
        std::vector<std::map<Expo, long>> index(Dmax + 1);
        for (int d = 0; d <= Dmax; ++d) {
            mons[d] = degree_monomials(d);
            for (long i = 0; i < (long)mons[d].size(); ++i) index[d][mons[d][i]] = i;
        }
        std::vector<Mat<K>> gp(Dmax + 1);  // polynomial-part grams
        gp[0] = Mat<K>(1, 1);
        gp[0].at(0, 0) = S.ctx.one();
        for (int d = 1; d <= Dmax; ++d) {
            long n = (long)mons[d].size(), np = (long)mons[d - 1].size();
            // matrices of the four deformed derivatives on the degree-d slice
            std::array<Mat<K>, 4> T;
            for (int j = 1; j <= 4; ++j) {
                T[j - 1] = Mat<K>(np, n);
                for (long m = 0; m < n; ++m) {
                    auto img = dunkl_apply(S, j, Poly<K>::monomial(mons[d][m], S.ctx.one()));
                    for (const auto& [e, c] : img.terms)
                        T[j - 1].at(index[d - 1].at(e), m) = c;
                }
            }
            gp[d] = Mat<K>(n, n);
            for (long r = 0; r < n; ++r) {
                int j = 0;
                while (mons[d][r][j] == 0) ++j;
                Expo e = mons[d][r];
                e[j] -= 1;
                long rp = index[d - 1].at(e);
                for (long c = 0; c < n; ++c) {
                    K acc = S.ctx.zero();
                    for (long m = 0; m < np; ++m) {
                        if (kzero(T[j].at(m, c))) continue;
                        acc += gp[d - 1].at(rp, m) * T[j].at(m, c);
                    }
                    gp[d].at(r, c) = acc;
                }
            }
        }
        gram.resize(Dmax + 1);
        for (int d = 0; d <= Dmax; ++d) {
            long n = (long)mons[d].size();
            gram[d] = Mat<K>(4 * n, 4 * n);
            for (long r = 0; r < n; ++r)
                for (long c = 0; c < n; ++c)
                    for (int s = 0; s < 4; ++s)
                        gram[d].at(4 * r + s, 4 * c + s) = gp[d].at(r, c);
        }
    }
};

// solve G X = B insisting on an invertible G
template <class K>
Mat<K> gram_solve(const Mat<K>& G, const Mat<K>& B, int slice) {
    Mat<K> aug(G.r, G.c + B.c);
    for (long i = 0; i < G.r; ++i) {
        for (long j = 0; j < G.c; ++j) aug.at(i, j) = G.at(i, j);
        for (long j = 0; j < B.c; ++j) aug.at(i, G.c + j) = B.at(i, j);
    }
    auto piv = rref(aug);
    if ((long)piv.size() < G.c || piv.back() >= G.c)
        throw std::runtime_error("degenerate pairing at slice " + std::to_string(slice));
    Mat<K> X(G.c, B.c);
    for (long i = 0; i < G.c; ++i)
        for (long j = 0; j < B.c; ++j) X.at(i, j) = aug.at(i, G.c + j);
    return X;
}

template <class Ctx>
SlicedOp<typename Ctx::K> adjoint_op(const FischerForm<Ctx>& F,
                                     const SlicedOp<typename Ctx::K>& X) {
    using K = typename Ctx::K;
    int s = X.shift;
    SlicedOp<K> Y;
    Y.shift = -s;
    Y.parity = X.parity;
    Y.Dmax = std::min({F.Dmax, X.Dmax + s, F.Dmax + s});
    if (Y.Dmax < 0) throw std::invalid_argument("adjoint window does not overlap");
    for (int e = 0; e <= Y.Dmax; ++e) {
        if (e - s < 0) {
            Y.blocks.push_back(Mat<K>(slice_dim(e - s), slice_dim(e)));
            continue;
        }
        Mat<K> rhs = mat_conj_transpose(X.blocks[e - s]) * F.gram[e];
        Y.blocks.push_back(gram_solve(F.gram[e - s], rhs, e - s));
    }
    return Y;
}

// --- relation registry ------------------------------------------------------

struct CheckOutcome {
    bool pass = true;
    int block = -1;
    long row = -1, col = -1;
};

struct RelEntry {
    std::string id;
    std::string anchor;  // human-readable description of the identity
    std::string suite;   // osp | tamarel | ladders | star
    std::function<CheckOutcome()> run;
};

template <class K>
CheckOutcome first_diff(const SlicedOp<K>& L, const SlicedOp<K>& R, int D) {
    if (L.shift != R.shift) throw std::logic_error("shift mismatch in relation check");
    if (std::min(L.Dmax, R.Dmax) < D)
        throw std::logic_error("operator window too small for relation check");
    for (int d = 0; d <= D; ++d) {
        Mat<K> M = L.blocks[d] - R.blocks[d];
        for (long i = 0; i < M.r; ++i)
            for (long j = 0; j < M.c; ++j)
                if (!kzero(M.at(i, j))) return {false, d, i, j};
    }
    return {};
}

template <class K>
CheckOutcome first_nonzero(const SlicedOp<K>& L, int D) {
    if (L.Dmax < D) throw std::logic_error("operator window too small for relation check");
    for (int d = 0; d <= D; ++d)
        for (long i = 0; i < L.blocks[d].r; ++i)
            for (long j = 0; j < L.blocks[d].c; ++j)
                if (!kzero(L.blocks[d].at(i, j))) return {false, d, i, j};
    return {};
}

inline bool ctx_symbolic(const ExactCtx& c) { return c.symbolic; }
inline bool ctx_symbolic(const FloatCtx&) { return false; }

template <class Ctx>
std::vector<RelEntry> relation_suite(Ops<Ctx>& A, const std::string& which);

}  // namespace tama

#include "tama/relations.hpp"
