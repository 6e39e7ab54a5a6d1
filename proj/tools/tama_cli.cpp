#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tama/relations.hpp"
#include "tama/rep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace tama;
using nlohmann::json;

namespace {

struct Config {
    int m1 = 2, m2 = 2;
    std::string kappa = "sym";
    int degree = 0;
    int max_degree = 3;
    std::string suite = "all";
    std::string format = "json";
    long nmax = 64;
    bool decompose = false;
    bool small_check = false;
    int u = 1;
    std::string op_name = "Z";
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::array<Rational, 4> parse_kappa(const std::string& s) {
    std::array<Rational, 4> kv{};
    size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        size_t next = s.find(',', pos);
        if ((next == std::string::npos) != (i == 3))
            throw ConfigError("--kappa wants four comma-separated rationals");
        auto r = parse_rational(s.substr(pos, next - pos));
        if (!r) throw ConfigError("--kappa entries must be exact fractions like -3/4");
        kv[i] = *r;
        pos = next + 1;
    }
    return kv;
}

void apply_thread_env() {
    const char* w = std::getenv("TAMA_THREADS");
    if (!w) return;
    int n = std::atoi(w);
    if (n == 1) use_parallel_kernels = false;
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#endif
}

void echo_config(const Config& c) {
    std::cerr << "m1=" << c.m1 << " m2=" << c.m2 << " L=" << session_order(c.m1, c.m2)
              << " kappa=" << c.kappa << "\n";
}

json rat_json(const Rational& r) { return rat_str(r); }

json weight5_json(const Weight5R& mu) {
    return json{{"l", {mu.l1, mu.l2}},
                {"lambda", {rat_json(mu.lam1), rat_json(mu.lam2), rat_json(mu.Lam)}}};
}

json scalar_json(const Scalar& s) { return json::parse(s.json()); }

json mat_json(const Mat<Scalar>& M) {
    json rows = json::array();
    for (long i = 0; i < M.r; ++i) {
        json row = json::array();
        for (long j = 0; j < M.c; ++j) row.push_back(scalar_json(M.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json cyc_mat_json(const Mat<Cyclotomic>& M) {
    json rows = json::array();
    for (long i = 0; i < M.r; ++i) {
        json row = json::array();
        for (long j = 0; j < M.c; ++j) row.push_back(M.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

// --- subcommands -----------------------------------------------------------

int run_verify(const Config& c) {
    std::optional<ExactCtx> ctx;
    if (c.kappa == "sym")
        ctx.emplace(c.m1, c.m2);
    else
        ctx.emplace(c.m1, c.m2, parse_kappa(c.kappa));
    echo_config(c);
    Session<ExactCtx> S(*ctx);
    Ops<ExactCtx> A(S, c.max_degree);
    auto entries = relation_suite(A, c.suite);
    if (entries.empty()) throw ConfigError("unknown or empty suite: " + c.suite);
    bool all_pass = true;
    for (auto& e : entries) {
        CheckOutcome r = e.run();
        json line{{"id", e.id},
                  {"anchor", e.anchor},
                  {"suite", e.suite},
                  {"status", r.pass ? "pass" : "fail"}};
        if (!r.pass) {
            line["first_failure"] = {{"block", r.block}, {"row", r.row}, {"col", r.col}};
            all_pass = false;
        }
        emit(line);
    }
    return all_pass ? 0 : 1;
}

int run_monogenics(const Config& c) {
    if (c.kappa == "sym")
        throw ConfigError("monogenics needs numeric --kappa (exact kernel ranks)");
    auto kv = parse_kappa(c.kappa);
    echo_config(c);
    ExactCtx ctx(c.m1, c.m2, kv);
    Session<ExactCtx> S(ctx);
    auto M = monogenics(S, c.degree);
    long expected = 2L * (c.degree + 1) * (c.degree + 2);
    emit(json{{"type", "monogenics"},
              {"d", c.degree},
              {"dim", M.dim},
              {"expected", expected}});
    int rc = (M.dim == expected) ? 0 : 1;
    if (!c.decompose) return rc;

    Ops<ExactCtx> A(S, c.degree);
    auto F = monogenic_module(A, M);
    auto rep = weight_decompose(F, kv, c.nmax);
    if (!rep.error.empty()) {
        emit(json{{"type", "error"}, {"what", rep.error}});
        return 1;
    }
    for (const auto& w : rep.lines) {
        if (c.format == "tsv") {
            std::cout << w.l1 << "\t" << w.l2 << "\t" << rat_str(w.lam1) << "\t"
                      << rat_str(w.lam2) << "\t"
                      << (w.z_rat ? rat_str(w.z_q)
                                  : (w.z_known ? w.z.str() : w.z_note))
                      << "\t" << w.mult << "\t" << (w.highest ? 1 : 0) << "\n";
            continue;
        }
        json line{{"type", "weight"},
                  {"l", {w.l1, w.l2}},
                  {"lambda", {rat_json(w.lam1), rat_json(w.lam2)}},
                  {"lambda0", {rat_json(w.lam1_0), rat_json(w.lam2_0)}},
                  {"mult", w.mult},
                  {"highest", w.highest}};
        if (w.z_rat)
            line["z"] = rat_json(w.z_q);
        else if (w.z_known)
            line["z"] = w.z.str();
        else
            line["z_minpoly"] = w.z_note;
        if (w.highest) line["descent"] = w.descent;
        emit(line);
    }
    if (rep.residual != 0) {
        emit(json{{"type", "error"}, {"what", "unresolved residual"},
                  {"residual", rep.residual}});
        rc = 1;
    }
    return rc;
}

int run_classify(const Config& c) {
    if (c.kappa == "sym") throw ConfigError("classify needs numeric --kappa");
    auto kv = parse_kappa(c.kappa);
    echo_config(c);
    auto res = classify_labels(c.m1, c.m2, kv, c.nmax);
    int rc = 0;
    for (const auto& l : res.labels) {
        if (c.format == "tsv") {
            std::cout << l.mu.l1 << "\t" << l.mu.l2 << "\t" << rat_str(l.mu.lam1) << "\t"
                      << rat_str(l.mu.lam2) << "\t" << rat_str(l.mu.Lam) << "\t"
                      << l.N[0] << "\t" << l.N[1] << "\t" << l.N[2] << "\t" << l.N[3]
                      << "\n";
        } else {
            json line = weight5_json(l.mu);
            line["type"] = "label";
            line["N"] = l.N;
            line["orbit_size"] = l.orbit.size();
            line["status"] = l.realized ? "realized" : "candidate";
            emit(line);
        }
        if (c.small_check && is_small(kv, c.m1, c.m2)) {
            // closed-form triangle family: two binary sign choices
            long N = l.N[0];
            Rational d1 = l.mu.lam1 - rat(2 * N + 1, 2);
            Rational q1 = q_value(1, l.mu.l1 - 2 * N - 1, c.m1, c.m2, kv);
            Rational d2 = l.mu.lam2 - rat(1, 2);
            Rational q2 = q_value(2, l.mu.l2 - 1, c.m1, c.m2, kv);
            bool ok = l.N[1] == 0 && l.N[2] == 0 && l.N[0] == l.N[3] &&
                      (d1 == q1 || d1 == -q1) && (d2 == q2 || d2 == -q2) &&
                      l.mu.Lam == -rat(1, 2) - l.mu.lam1 - l.mu.lam2;
            if (!ok) {
                json bad = weight5_json(l.mu);
                bad["type"] = "small-check-failure";
                emit(bad);
                rc = 1;
            }
        }
    }
    for (const auto& [mu, why] : res.notes) {
        json line = weight5_json(mu);
        line["type"] = "discarded";
        line["why"] = why;
        emit(line);
    }
    return rc;
}

int run_spin_irreps(const Config& c) {
    echo_config(c);
    auto irr = spin_irreps(c.m1, c.m2);
    for (const auto& s : irr)
        emit(json{{"label", {s.l1, s.l2}},
                  {"dim", s.dim},
                  {"generators",
                   {{"r1", cyc_mat_json(s.r1)},
                    {"r2", cyc_mat_json(s.r2)},
                    {"f1", cyc_mat_json(s.f1)},
                    {"f2", cyc_mat_json(s.f2)}}}});
    long four = 0;
    for (const auto& s : irr) four += s.dim == 4;
    return four == (long)(c.m1 / 2) * (c.m2 / 2) ? 0 : 1;
}

int run_onehalf(const Config& c) {
    if (c.kappa == "sym") throw ConfigError("example-onehalf needs numeric --kappa");
    auto kv = parse_kappa(c.kappa);
    echo_config(c);
    ExactCtx ctx(c.m1, c.m2, kv);
    Session<ExactCtx> S(ctx);
    auto rep = onehalf_analysis(S, c.u, kv);
    json line{{"type", "degree-zero-module"},
              {"u", rep.u},
              {"split", rep.split},
              {"Q2(0)", rat_json(rep.q20)},
              {"Q1(2u)", rat_json(rep.q1_2u)},
              {"ladders_zero", rep.ladders_zero},
              {"weights_ok", rep.weights_ok},
              {"coefficients_ok", rep.coef_ok},
              {"structure_ok", rep.structure_ok},
              {"reducibility", rep.reducibility},
              {"irreducibility_confirmed", rep.irreducibility_confirmed}};
    if (rep.iso_checked) line["summand_iso"] = rep.iso_ok;
    if (!rep.detail.empty()) line["first_failure"] = rep.detail;
    emit(line);
    return rep.detail.empty() ? 0 : 1;
}

int run_dump(const Config& c) {
    std::optional<ExactCtx> ctx;
    if (c.kappa == "sym")
        ctx.emplace(c.m1, c.m2);
    else
        ctx.emplace(c.m1, c.m2, parse_kappa(c.kappa));
    echo_config(c);
    Session<ExactCtx> S(*ctx);
    Ops<ExactCtx> A(S, c.max_degree);
    SlicedOp<Scalar> op;
    const std::string& n = c.op_name;
    if (n == "H1")
        op = A.H(1);
    else if (n == "H2")
        op = A.H(2);
    else if (n == "Z")
        op = A.Z();
    else if (n == "E")
        op = trim(op_euler(S, c.max_degree), c.max_degree);
    else if (n == "x")
        op = trim(op_xvec(S, c.max_degree), c.max_degree);
    else if (n == "D")
        op = trim(op_dvec(S, c.max_degree + 1), c.max_degree);
    else if (n.size() > 1 && n[0] == 'O')
        op = A.O((unsigned)std::stoi(n.substr(1)));
    else if (n.size() == 3 && n[0] == 'L') {
        auto sgn = [](char ch) -> int {
            return ch == '+' ? 1 : ch == '-' ? -1 : 0;
        };
        if (n[1] == '1' || n[1] == '2')
            op = A.ladder(n[1] == '1' ? sgn(n[2]) : 0, n[1] == '2' ? sgn(n[2]) : 0);
        else
            op = A.ladder(sgn(n[1]), sgn(n[2]));
    } else
        throw ConfigError("unknown operator name: " + n);
    for (int d = 0; d <= std::min(c.max_degree, op.Dmax); ++d)
        emit(json{{"d", d},
                  {"shift", op.shift},
                  {"parity", op.parity},
                  {"matrix", mat_json(op.blocks[d])}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for Dunkl angular-momentum symmetry algebras"};
    app.require_subcommand(1);
    app.set_config("--config");
    Config c;

    auto common = [&](CLI::App* sub, bool kappa = true) {
        sub->set_config("--config");
        sub->add_option("--m1", c.m1, "first dihedral order (>= 2)")
            ->check(CLI::Range(2, 64));
        sub->add_option("--m2", c.m2, "second dihedral order (>= 2)")
            ->check(CLI::Range(2, 64));
        if (kappa)
            sub->add_option("--kappa", c.kappa,
                            "deformation parameters: sym or q1,q2,q3,q4");
        sub->add_option("--format", c.format, "json | tsv")
            ->check(CLI::IsMember({"json", "tsv"}));
    };

    auto* verify = app.add_subcommand("verify", "run the relation registry");
    common(verify);
    verify->add_option("--max-degree", c.max_degree)->check(CLI::Range(0, 8));
    verify->add_option("--suite", c.suite)
        ->check(CLI::IsMember({"osp", "tamarel", "ladders", "star", "all"}));

    auto* mono = app.add_subcommand("monogenics", "Dirac kernel slices and weights");
    common(mono);
    mono->add_option("--degree", c.degree)->check(CLI::Range(0, 8));
    mono->add_flag("--decompose", c.decompose, "joint weight decomposition");
    mono->add_option("--nmax", c.nmax);

    auto* cls = app.add_subcommand("classify", "finite highest-weight labels");
    common(cls);
    cls->add_option("--nmax", c.nmax, "descent-chain search bound");
    cls->add_flag("--small-check", c.small_check,
                  "verify the small-parameter closed form");

    auto* spin = app.add_subcommand("spin-irreps", "spin irreps of the double cover");
    common(spin, false);

    auto* oh = app.add_subcommand("example-onehalf",
                                  "degree-zero module on a 2-dim reflection irrep");
    common(oh);
    oh->add_option("--u", c.u, "rotation character exponent")->check(CLI::Range(1, 32));

    auto* dump = app.add_subcommand("dump-operator", "matrix blocks of one operator");
    common(dump);
    dump->add_option("--max-degree", c.max_degree)->check(CLI::Range(0, 8));
    dump->add_option("--op", c.op_name,
                     "H1 H2 Z E x D O<mask> L1+ L1- L2+ L2- L++ L+- L-+ L--");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    apply_thread_env();
    try {
        if (verify->parsed()) return run_verify(c);
        if (mono->parsed()) return run_monogenics(c);
        if (cls->parsed()) return run_classify(c);
        if (spin->parsed()) return run_spin_irreps(c);
        if (oh->parsed()) return run_onehalf(c);
        if (dump->parsed()) return run_dump(c);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
