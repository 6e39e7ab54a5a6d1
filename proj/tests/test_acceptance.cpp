// End-to-end acceptance run: ten criteria, one verdict line each.
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "tama/relations.hpp"
#include "tama/rep.hpp"

using namespace tama;

namespace {

int failures = 0;

void verdict(int n, bool ok, const std::string& what, const std::string& note = "") {
    std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << " - " << what;
    if (!ok && !note.empty()) std::cout << " [" << note << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

const std::array<Rational, 4> kzero4{Rational(0), Rational(0), Rational(0), Rational(0)};
const std::array<Rational, 4> ksmall{rat(1, 10), rat(1, 14), rat(1, 22), rat(1, 26)};
const std::array<Rational, 4> ksmall2{rat(1, 12), rat(1, 16), rat(1, 20), rat(1, 28)};
const std::array<Rational, 4> kbig{rat(1, 3), rat(1, 5), rat(1, 7), rat(1, 11)};

// 1. every registered identity, symbolic parameters, degrees 0..3
void criterion1() {
    std::string note;
    bool ok = true;
    for (auto [m1, m2] : {std::pair{2, 2}, {3, 2}, {3, 3}, {4, 3}}) {
        ExactCtx ctx(m1, m2);
        Session<ExactCtx> S(ctx);
        Ops<ExactCtx> A(S, 3);
        for (auto& e : relation_suite(A, "all")) {
            CheckOutcome r = e.run();
            if (!r.pass && ok) {
                ok = false;
                std::ostringstream os;
                os << "(" << m1 << "," << m2 << ") " << e.suite << "/" << e.id
                   << " block " << r.block << " entry (" << r.row << "," << r.col << ")";
                note = os.str();
            }
        }
        std::cerr << "  registry (" << m1 << "," << m2 << ") done" << std::endl;
    }
    verdict(1, ok, "full relation registry, symbolic parameters, degrees 0..3", note);
}

// 2. spin irrep census for all 2 <= m1, m2 <= 6
void criterion2() {
    bool ok = true;
    std::string note;
    for (int m1 = 2; m1 <= 6 && ok; ++m1)
        for (int m2 = 2; m2 <= 6 && ok; ++m2) {
            auto irreps = spin_irreps(m1, m2);
            int n4 = 0, n2 = 0;
            for (const auto& U : irreps) (U.dim == 4 ? n4 : n2)++;
            int expect2 =
                (m1 % 2 ? m2 : 0) + (m2 % 2 ? m1 : 0) - (m1 % 2 && m2 % 2 ? 1 : 0);
            if (n4 != (m1 / 2) * (m2 / 2) || n2 != expect2) {
                ok = false;
                note = "count mismatch at (" + std::to_string(m1) + "," +
                       std::to_string(m2) + ")";
                break;
            }
            auto elements = cover_enumerate(m1, m2);
            std::mt19937 rng(17);
            auto random_elt = [&] {
                return CoverElement{m1, m2, (int)(rng() % 2), (int)(rng() % m1),
                                    (int)(rng() % m2), (int)(rng() % 2),
                                    (int)(rng() % 2)};
            };
            std::set<std::vector<std::string>> chars;
            for (const auto& U : irreps) {
                const CycField* Fld = U.r1.at(0, 0).field();
                auto mid = -mat_identity<Cyclotomic>(U.dim, Cyclotomic(Fld, rat(1)));
                if (!mat_eq(U.rep(cover_z(m1, m2)), mid)) { ok = false; note = "z != -1"; }
                for (int t = 0; t < 16; ++t) {
                    auto g = random_elt(), h = random_elt();
                    if (!mat_eq(U.rep(cover_mul(g, h)), U.rep(g) * U.rep(h))) {
                        ok = false;
                        note = "relation failure";
                    }
                }
                std::vector<std::string> chi;
                for (const auto& g : elements) {
                    Cyclotomic tr = Cyclotomic::zero(Fld);
                    auto M = U.rep(g);
                    for (int i = 0; i < U.dim; ++i) tr += M.at(i, i);
                    chi.push_back(tr.str());
                }
                chars.insert(chi);
            }
            if (chars.size() != irreps.size()) {
                ok = false;
                note = "characters not pairwise distinct";
            }
        }
    verdict(2, ok, "spin representation census, 2 <= m1,m2 <= 6", note);
}

// 3. spinor module rotation eigenvalues
void criterion3() {
    bool ok = true;
    std::string note;
    for (auto [m1, m2] : {std::pair{2, 2}, {3, 3}, {4, 5}}) {
        ExactCtx ctx(m1, m2);
        GroupTables<ExactCtx> GT(ctx);
        std::array<Scalar, 4> ev1{ctx.zeta1(1), ctx.zeta1(-1), ctx.zeta1(1),
                                  ctx.zeta1(-1)};
        std::array<Scalar, 4> ev2{ctx.zeta2(1), ctx.zeta2(1), ctx.zeta2(-1),
                                  ctx.zeta2(-1)};
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                if (GT.sp_r1.at(r, c) != (r == c ? ev1[r] : Scalar()) ||
                    GT.sp_r2.at(r, c) != (r == c ? ev2[r] : Scalar())) {
                    ok = false;
                    note = "(" + std::to_string(m1) + "," + std::to_string(m2) + ")";
                }
    }
    verdict(3, ok, "spinor-basis rotation eigenvalues at (2,2), (3,3), (4,5)", note);
}

const std::array<std::array<Rational, 4>, 5> k_samples{
    kzero4, ksmall, kbig,
    std::array<Rational, 4>{rat(-1, 4), rat(1, 6), rat(2, 7), rat(-1, 5)},
    std::array<Rational, 4>{rat(1, 2), rat(1, 3), rat(1, 4), rat(1, 5)}};

// 4. kernel dimensions of the Dirac operator
void criterion4() {
    bool ok = true;
    std::string note;
    for (const auto& kv : k_samples) {
        ExactCtx ctx(2, 2, kv);
        Session<ExactCtx> S(ctx);
        for (int d = 0; d <= 4; ++d) {
            auto M = monogenics(S, d);
            if (M.dim != 2L * (d + 1) * (d + 2)) {
                ok = false;
                note = "d=" + std::to_string(d) + " dim=" + std::to_string(M.dim);
            }
        }
    }
    verdict(4, ok, "dim ker(Dirac) on slice d equals 2(d+1)(d+2), d = 0..4", note);
}

// 5. the worked degree-zero module example
void criterion5() {
    bool ok = true;
    std::string note;
    auto check = [&](int m1, int u, const std::array<Rational, 4>& kv) {
        ExactCtx ctx(m1, 2, kv);
        Session<ExactCtx> S(ctx);
        auto rep = onehalf_analysis(S, u, kv);
        bool good = rep.detail.empty() && rep.ladders_zero && rep.weights_ok &&
                    rep.coef_ok && rep.structure_ok && !rep.reducibility.empty();
        if (rep.split != (2 * u == m1)) good = false;
        if (rep.split) {
            if (rep.reducibility != "reducible" || !rep.irreducibility_confirmed)
                good = false;
            if (rep.q1_2u == 0 && !(rep.iso_checked && rep.iso_ok)) good = false;
        } else if (1 + rep.q20 != 0 || rep.q22 != 0) {
            if (rep.reducibility != "irreducible" || !rep.irreducibility_confirmed)
                good = false;
        }
        if (!good && ok) {
            ok = false;
            note = "(" + std::to_string(m1) + ",u=" + std::to_string(u) + ") " +
                   rep.detail;
        }
    };
    const std::array<Rational, 4> keq{rat(1, 10), rat(1, 10), rat(1, 22), rat(1, 26)};
    for (auto [m1, u] : {std::pair{4, 1}, {5, 2}, {4, 2}}) {
        check(m1, u, ksmall);
        check(m1, u, keq);
    }
    verdict(5, ok, "degree-zero module example at (4,1), (5,2), (4,2), two kappa", note);
}

// 6. the degree-one weight diagram for the hexagonal pair
void criterion6() {
    bool ok = true;
    std::string note;
    std::array<Rational, 4> kv{rat(1, 4), rat(1, 4), rat(-3, 4), rat(-3, 4)};
    ExactCtx ctx(3, 3, kv);
    Session<ExactCtx> S(ctx);
    Ops<ExactCtx> A(S, 1);
    auto M = monogenics(S, 1);
    auto F = monogenic_module(A, M);
    auto rep = weight_decompose(F, kv);
    if (M.dim != 12 || !rep.error.empty()) {
        ok = false;
        note = rep.error.empty() ? "dim != 12" : rep.error;
    }
    // twelve simple weights: +-(x0 + 3/4), +-(y0 - 9/4) over the quarter
    // lattice {(1/2,3/2), (1/2,1/2), (3/2,1/2)}; at kappa -> 0 the plain
    // +-x0, +-y0 lattice
    std::multiset<std::pair<Rational, Rational>> got, got0, want, want0;
    int hw = 0, clusters_of_three = 0;
    for (const auto& w : rep.lines) {
        if (w.mult != 1) ok = false;
        got.insert({w.lam1, w.lam2});
        got0.insert({w.lam1_0, w.lam2_0});
        if (w.highest) {
            ++hw;
            long total = 0;
            for (long n : w.descent) total += n;
            if (total == 2) ++clusters_of_three;  // 1 + descents = 3 nodes
        }
    }
    for (auto [x0, y0] : {std::pair<Rational, Rational>{rat(1, 2), rat(3, 2)},
                          {rat(1, 2), rat(1, 2)},
                          {rat(3, 2), rat(1, 2)}})
        for (int sx : {1, -1})
            for (int sy : {1, -1}) {
                want.insert({sx * (x0 + rat(3, 4)), sy * (y0 - rat(9, 4))});
                want0.insert({sx * x0, sy * y0});
            }
    if (got != want) { ok = false; note = "weight configuration mismatch"; }
    if (got0 != want0) { ok = false; note = "kappa->0 lattice mismatch"; }
    if (hw != 4 || clusters_of_three != 4) {
        ok = false;
        note = "expected four 3-node clusters, got " + std::to_string(hw) +
               " highest weights / " + std::to_string(clusters_of_three) + " clusters";
    }
    verdict(6, ok, "degree-one weight diagram for m1 = m2 = 3, kappa = (1/4, -3/4)",
            note);
}

// 7. label solver against the closed forms, and monogenic highest weights
void criterion7() {
    bool ok = true;
    std::string note;
    auto set_note = [&](const std::string& s) {
        if (ok) note = s;
        ok = false;
    };
    // kappa = 0: lambda1 = N + 1/2, lambda2 = 1/2, chains (N, 0, 0, N)
    for (const auto& lab : classify_labels(2, 2, kzero4, 8).labels) {
        Rational N = lab.mu.lam1 - rat(1, 2);
        if (lab.mu.lam2 != rat(1, 2) || N.get_den() != 1 || N < 0 ||
            lab.mu.Lam != -rat(1, 2) - lab.mu.lam1 - lab.mu.lam2 ||
            lab.N[0] != N.get_num().get_si() || lab.N[1] != 0 || lab.N[2] != 0 ||
            lab.N[0] != lab.N[3])
            set_note("kappa = 0 closed form");
    }
    // two small-parameter points: triangle closed form
    for (const auto& kv : {ksmall, ksmall2}) {
        if (!is_small(kv, 2, 2)) set_note("sample not small");
        for (const auto& lab : classify_labels(2, 2, kv, 8).labels) {
            long N = lab.N[0];
            Rational d1 = lab.mu.lam1 - rat(2 * N + 1, 2);
            Rational q1 = q_value(1, lab.mu.l1 - 2 * N - 1, 2, 2, kv);
            Rational d2 = lab.mu.lam2 - rat(1, 2);
            Rational q2 = q_value(2, lab.mu.l2 - 1, 2, 2, kv);
            if (lab.N[1] != 0 || lab.N[2] != 0 || lab.N[0] != lab.N[3] ||
                (d1 != q1 && d1 != -q1) || (d2 != q2 && d2 != -q2) ||
                lab.mu.Lam != -rat(1, 2) - lab.mu.lam1 - lab.mu.lam2)
                set_note("small-parameter closed form");
        }
    }
    // monogenic highest weights are among the labels, descent lengths agree
    ExactCtx ctx(2, 2, ksmall);
    Session<ExactCtx> S(ctx);
    Ops<ExactCtx> A(S, 3);
    auto labels = classify_labels(2, 2, ksmall, 16);
    for (int d = 0; d <= 3; ++d) {
        auto M = monogenics(S, d);
        auto rep = weight_decompose(monogenic_module(A, M), ksmall);
        if (rep.hw < 0) {
            set_note("no highest weight at degree " + std::to_string(d));
            continue;
        }
        const auto& hw = rep.lines[rep.hw];
        bool found = false;
        for (const auto& lab : labels.labels) {
            for (const auto& w : lab.orbit)
                found = found || (w.l1 == hw.l1 && w.l2 == hw.l2 &&
                                  w.lam1 == hw.lam1 && w.lam2 == hw.lam2);
            if (lab.mu.lam1 == hw.lam1 && lab.mu.lam2 == hw.lam2 &&
                lab.N != hw.descent)
                set_note("descent mismatch at degree " + std::to_string(d));
        }
        if (!found) set_note("monogenic highest weight missing at degree " +
                             std::to_string(d));
    }
    verdict(7, ok, "label solver matches the closed forms and the monogenic modules",
            note);
}

// 8. triangle basis sizes and eigenvalue pattern
void criterion8() {
    bool ok = true;
    std::string note;
    ExactCtx ctx(2, 2, ksmall);
    Session<ExactCtx> S(ctx);
    for (int N = 1; N <= 3; ++N) {
        Ops<ExactCtx> A(S, N);
        auto M = monogenics(S, N);
        auto F = monogenic_module(A, M);
        auto rep = weight_decompose(F, ksmall);
        for (const auto& w : rep.lines)
            if (w.mult != 1 && ok) {
                ok = false;
                note = "weight multiplicity > 1 at N = " + std::to_string(N);
            }
        auto tb = triangle_basis(F, rep, N);
        if ((!tb.error.empty() || tb.vectors.c != tb.expected ||
             tb.expected != 2L * (N + 1) * (N + 2) ||
             mat_rank(tb.vectors) != tb.expected) &&
            ok) {
            ok = false;
            note = "N = " + std::to_string(N) + ": " +
                   (tb.error.empty() ? "rank/count mismatch" : tb.error);
        }
    }
    verdict(8, ok, "triangle basis: 2(N+1)(N+2) vectors, eigenvalue pattern, N = 1..3",
            note);
}

// 9. adjoints under the positive pairing, and weight-space orthogonality
void criterion9() {
    bool ok = true;
    std::string note;
    for (const auto& kv : {ksmall, kbig,
                           std::array<Rational, 4>{rat(-1, 5), rat(1, 6), rat(1, 9),
                                                   rat(-1, 7)}}) {
        ExactCtx ctx(2, 2, kv);
        Session<ExactCtx> S(ctx);
        Ops<ExactCtx> A(S, 3);
        for (auto& e : relation_suite(A, "star")) {
            CheckOutcome r = e.run();
            if (!r.pass && ok) {
                ok = false;
                note = e.id + " block " + std::to_string(r.block);
            }
        }
        FischerForm<ExactCtx> FF(S, 3);
        for (int d = 0; d <= 3; ++d) {
            auto M = monogenics(S, d);
            auto rep = weight_decompose(monogenic_module(A, M), kv);
            if (!weights_orthogonal(FF, d, M.basis, rep) && ok) {
                ok = false;
                note = "weight spaces not orthogonal at degree " + std::to_string(d);
            }
        }
    }
    verdict(9, ok, "star structure and weight-space orthogonality, three kappa points",
            note);
}

// 10. floating-point channel agreement on the computations of criteria 4-8
void criterion10() {
    bool ok = true;
    std::string note;
    auto set_note = [&](const std::string& s) {
        if (ok) note = s;
        ok = false;
    };
    // kernel dimensions (criterion 4)
    for (const auto& kv : k_samples) {
        FloatCtx fc(2, 2, kv);
        Session<FloatCtx> FS(fc);
        for (int d = 0; d <= 4; ++d)
            if (monogenics(FS, d).dim != 2L * (d + 1) * (d + 2))
                set_note("float kernel dimension, d = " + std::to_string(d));
    }
    // degree-zero module reports (criterion 5)
    for (auto [m1, u] : {std::pair{4, 1}, {5, 2}, {4, 2}}) {
        ExactCtx ec(m1, 2, ksmall);
        FloatCtx fc(m1, 2, ksmall);
        Session<ExactCtx> ES(ec);
        Session<FloatCtx> FS(fc);
        auto er = onehalf_analysis(ES, u, ksmall);
        auto fr = onehalf_analysis(FS, u, ksmall);
        if (er.ladders_zero != fr.ladders_zero || er.weights_ok != fr.weights_ok ||
            er.coef_ok != fr.coef_ok || er.structure_ok != fr.structure_ok ||
            er.reducibility != fr.reducibility || er.iso_ok != fr.iso_ok)
            set_note("degree-zero reports disagree at (" + std::to_string(m1) + "," +
                     std::to_string(u) + ")");
    }
    // weight decompositions (criteria 6 and 7) and triangle bases (criterion 8)
    auto both = [&](int m1, int m2, const std::array<Rational, 4>& kv, int d,
                    bool triangle) {
        ExactCtx ec(m1, m2, kv);
        FloatCtx fc(m1, m2, kv);
        Session<ExactCtx> ES(ec);
        Session<FloatCtx> FS(fc);
        Ops<ExactCtx> EA(ES, d);
        Ops<FloatCtx> FA(FS, d);
        auto EM = monogenics(ES, d);
        auto FM = monogenics(FS, d);
        if (EM.dim != FM.dim) {
            set_note("kernel dimension channel mismatch");
            return;
        }
        auto EF = monogenic_module(EA, EM);
        auto FF = monogenic_module(FA, FM);
        auto er = weight_decompose(EF, kv);
        auto fr = weight_decompose(FF, kv);
        std::string diff = compare_weight_reports(er, fr);
        if (!diff.empty()) set_note(diff);
        if (triangle) {
            auto et = triangle_basis(EF, er, d);
            auto ft = triangle_basis(FF, fr, d);
            if (!et.error.empty() || !ft.error.empty() || et.vectors.c != ft.vectors.c)
                set_note("triangle basis channel mismatch at N = " + std::to_string(d));
        }
    };
    both(3, 3, {rat(1, 4), rat(1, 4), rat(-3, 4), rat(-3, 4)}, 1, false);
    for (int d = 1; d <= 3; ++d) both(2, 2, ksmall, d, true);
    verdict(10, ok, "floating-point channel agrees with the exact channel (1e-9)",
            note);
}

}  // namespace

int main() {
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion1();  // the long one last
    std::cout << (failures ? "FAILED" : "OK") << " (" << (10 - failures)
              << "/10 criteria)" << std::endl;
    return failures ? 1 : 0;
}
