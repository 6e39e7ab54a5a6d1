#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tama/ops.hpp"

using namespace tama;

TEST_CASE("full relation registry, symbolic parameters") {
    ExactCtx ctx(2, 2);
    Session<ExactCtx> S(ctx);
    Ops<ExactCtx> A(S, 2);
    for (auto& e : relation_suite(A, "all")) {
        INFO(e.suite, "/", e.id);
        auto r = e.run();
        INFO("block ", r.block, " entry (", r.row, ",", r.col, ")");
        CHECK(r.pass);
    }
}

TEST_CASE("relation registry at odd parameters") {
    ExactCtx ctx(3, 2);
    Session<ExactCtx> S(ctx);
    Ops<ExactCtx> A(S, 1);
    for (auto& e : relation_suite(A, "ladders")) {
        INFO(e.suite, "/", e.id);
        auto r = e.run();
        INFO("block ", r.block, " entry (", r.row, ",", r.col, ")");
        CHECK(r.pass);
    }
}

TEST_CASE("star suite at rational parameters") {
    ExactCtx ctx(2, 2, {rat(1, 3), rat(1, 5), rat(1, 7), rat(2, 9)});
    Session<ExactCtx> S(ctx);
    Ops<ExactCtx> A(S, 2);
    auto entries = relation_suite(A, "star");
    CHECK(entries.size() == 7);
    for (auto& e : entries) {
        INFO(e.suite, "/", e.id);
        auto r = e.run();
        INFO("block ", r.block, " entry (", r.row, ",", r.col, ")");
        CHECK(r.pass);
    }
}

TEST_CASE("float twin agrees on a sample symmetry") {
    std::array<Rational, 4> kv{rat(1, 3), rat(1, 5), rat(1, 7), rat(2, 9)};
    ExactCtx ec(3, 2, kv);
    FloatCtx fc(3, 2, kv);
    Session<ExactCtx> ES(ec);
    Session<FloatCtx> FS(fc);
    Ops<ExactCtx> EA(ES, 1);
    Ops<FloatCtx> FA(FS, 1);
    auto Le = EA.ladder(1, -1);
    auto Lf = FA.ladder(1, -1);
    for (int d = 0; d <= 1; ++d)
        for (long i = 0; i < Le.blocks[d].r; ++i)
            for (long j = 0; j < Le.blocks[d].c; ++j) {
                auto want = cyc_cd(Le.blocks[d].at(i, j).eval(kv));
                auto got = Lf.blocks[d].at(i, j);
                CHECK(std::abs(want - got) < 1e-9);
            }
}
