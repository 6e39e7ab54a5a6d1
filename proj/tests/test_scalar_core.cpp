#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tama/cyclotomic.hpp"
#include "tama/scalar.hpp"

using namespace tama;

TEST_CASE("roots of unity basics") {
    CHECK(cyc_make(4, 2) == Cyclotomic(CycField::get(4), rat(-1)));
    // zeta_3^2 = -1 - zeta_3 in the power basis (x^2 + x + 1)
    auto F3 = CycField::get(3);
    auto z32 = cyc_make(3, 2);
    CHECK(z32 == -(Cyclotomic(F3, rat(1)) + cyc_make(3, 1)));
    CHECK(z32.coeffs() == std::vector<Rational>{rat(-1), rat(-1)});
    CHECK(cyc_make(12, 12) == Cyclotomic(CycField::get(12), rat(1)));
    CHECK(cyc_make(12, -1) == cyc_make(12, 11));
}

TEST_CASE("imaginary unit") {
    auto F12 = CycField::get(12);
    auto i = cyc_i(F12);
    CHECK(i * i == Cyclotomic(F12, rat(-1)));
    CHECK(cyc_conj(i) == -i);
}

TEST_CASE("conjugation") {
    auto F8 = CycField::get(8);
    CHECK(cyc_conj(cyc_make(8, 1)) == cyc_make(8, 7));
    CHECK(cyc_conj(Cyclotomic(F8, rat(3, 2))) == Cyclotomic(F8, rat(3, 2)));
    std::mt19937 rng(7);
    auto rnd = [&](const CycField* F) {
        Cyclotomic a = Cyclotomic::zero(F);
        for (int t = 0; t < 3; ++t)
            a += Cyclotomic(F, rat((long)(rng() % 11) - 5, 1 + rng() % 4)) *
                 cyc_make(F, rng() % F->L);
        return a;
    };
    for (long L : {5L, 8L, 12L, 24L}) {
        auto F = CycField::get(L);
        for (int t = 0; t < 10; ++t) {
            auto a = rnd(F), b = rnd(F);
            CHECK(cyc_conj(a * b) == cyc_conj(a) * cyc_conj(b));
            CHECK(cyc_conj(cyc_conj(a)) == a);
        }
    }
}

TEST_CASE("inverse and unit products") {
    for (long L : {3L, 4L, 8L, 12L, 40L}) {
        auto F = CycField::get(L);
        for (long k = 0; k < L; ++k) {
            CHECK(cyc_make(F, k) * cyc_make(F, L - k) == Cyclotomic(F, rat(1)));
            CHECK(cyc_make(F, k).inverse() == cyc_make(F, L - k));
        }
    }
    auto F = CycField::get(12);
    auto a = cyc_make(F, 1) + Cyclotomic(F, rat(2)) - cyc_make(F, 5);
    CHECK(a * a.inverse() == Cyclotomic(F, rat(1)));
    CHECK_THROWS(Cyclotomic::zero(F).inverse());
}

TEST_CASE("order mismatch rejected") {
    CHECK_THROWS(cyc_make(3, 1) + cyc_make(4, 1));
    // null zero mixes with anything
    CHECK((Cyclotomic() + cyc_make(4, 1)) == cyc_make(4, 1));
    CHECK((Cyclotomic() * cyc_make(4, 1)).is_zero());
}

TEST_CASE("scalar ring basics") {
    auto F = CycField::get(4);
    auto k1 = Scalar::kappa(F, 1);
    auto one = Scalar::from_rat(F, rat(1));
    CHECK((k1 + one) * (k1 - one) == k1 * k1 - one);
    CHECK((Scalar::kappa(F, 2) * Scalar()).is_zero());
    auto i = Scalar(cyc_i(F));
    auto k3 = Scalar::kappa(F, 3);
    CHECK((i * k3) * (i * k3) == -(k3 * k3));
}

TEST_CASE("scalar eval homomorphism") {
    auto F = CycField::get(12);
    auto k1 = Scalar::kappa(F, 1), k2 = Scalar::kappa(F, 2), k4 = Scalar::kappa(F, 4);
    CHECK((k1 + k2).eval({rat(1, 2), rat(1, 3), rat(0), rat(0)}) ==
          Cyclotomic(F, rat(5, 6)));
    CHECK(Scalar(cyc_make(F, 4)).eval({rat(9), rat(1), rat(2), rat(3)}) ==
          cyc_make(F, 4));
    CHECK((k1 * k4).eval({rat(2), rat(0), rat(0), rat(3)}) == Cyclotomic(F, rat(6)));
    std::mt19937 rng(11);
    auto rnds = [&] {
        Scalar s;
        for (int t = 0; t < 3; ++t) {
            Scalar m = Scalar(cyc_make(F, rng() % 12) *
                              Cyclotomic(F, rat((long)(rng() % 9) - 4)));
            for (int i = 1; i <= 4; ++i)
                for (unsigned p = 0; p < rng() % 3; ++p) m *= Scalar::kappa(F, i);
            s += m;
        }
        return s;
    };
    std::array<Rational, 4> kv{rat(1, 2), rat(-2, 3), rat(5), rat(0)};
    for (int t = 0; t < 12; ++t) {
        auto a = rnds(), b = rnds(), c = rnds();
        CHECK((a * b).eval(kv) == a.eval(kv) * b.eval(kv));
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * (b * c) == (a * b) * c);
        CHECK(a * b == b * a);
        CHECK(((a - b).is_zero()) == (a == b));
    }
}

TEST_CASE("scalar json shape") {
    auto F = CycField::get(4);
    auto s = Scalar::kappa(F, 1) * Scalar(cyc_i(F));
    CHECK(s.json() ==
          "{\"terms\":[{\"kexp\":[1,0,0,0],\"coeffs\":[[\"0\",\"1\"],[\"1\",\"1\"]]}]}");
}
