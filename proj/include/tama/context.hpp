#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numeric>

#include "tama/scalar.hpp"

namespace tama {

inline long session_order(int m1, int m2) {
    long L = std::lcm(4L, std::lcm(2L * m1, 2L * m2));
    return L;
}

// Exact coefficient context: values are kappa-polynomials over Q(zeta_L).
// kappa entries are either the four indeterminates (symbolic mode) or
// constants (evaluated mode).
struct ExactCtx {
    using K = Scalar;
    int m1, m2;
    long L;
    const CycField* F;
    bool symbolic;
    std::array<K, 4> kap;

    ExactCtx(int m1_, int m2_) : m1(m1_), m2(m2_), L(session_order(m1_, m2_)) {
        F = CycField::get(L);
        symbolic = true;
        for (int i = 0; i < 4; ++i) kap[i] = Scalar::kappa(F, i + 1);
        collapse_odd();
    }
    ExactCtx(int m1_, int m2_, const std::array<Rational, 4>& kv)
        : m1(m1_), m2(m2_), L(session_order(m1_, m2_)) {
        F = CycField::get(L);
        symbolic = false;
        for (int i = 0; i < 4; ++i) kap[i] = Scalar::from_rat(F, kv[i]);
        collapse_odd();
    }

    K zero() const { return Scalar(); }
    K one() const { return from_rat(Rational(1)); }
    K iu() const { return Scalar(cyc_i(F)); }
    K from_rat(const Rational& r) const { return Scalar::from_rat(F, r); }
    K root(long k) const { return Scalar(cyc_make(F, k)); }  // zeta_L^k
    // zeta_a^p = e^{i p pi / m_a}
    K zeta1(long p) const { return root(p * (L / (2 * m1))); }
    K zeta2(long q) const { return root(q * (L / (2 * m2))); }
    K sin1(long p) const { return half() * iu().conj() * (zeta1(p) - zeta1(-p)); }
    K cos1(long p) const { return half() * (zeta1(p) + zeta1(-p)); }
    K sin2(long q) const { return half() * iu().conj() * (zeta2(q) - zeta2(-q)); }
    K cos2(long q) const { return half() * (zeta2(q) + zeta2(-q)); }
    K half() const { return from_rat(Rational(1, 2)); }
    K conj(const K& x) const { return x.conj(); }

  private:
    // single conjugacy class of reflections when m_a is odd
    void collapse_odd() {
        if (m1 % 2) kap[1] = kap[0];
        if (m2 % 2) kap[3] = kap[2];
    }
};

// Floating-point twin used by the verification oracle: roots of unity come
// from the transcendental functions, not from the exact tables.
struct FloatCtx {
    using K = std::complex<double>;
    int m1, m2;
    long L;
    std::array<K, 4> kap;

    FloatCtx(int m1_, int m2_, const std::array<Rational, 4>& kv)
        : m1(m1_), m2(m2_), L(session_order(m1_, m2_)) {
        for (int i = 0; i < 4; ++i) kap[i] = kv[i].get_d();
        if (m1 % 2) kap[1] = kap[0];
        if (m2 % 2) kap[3] = kap[2];
    }

    K zero() const { return 0.0; }
    K one() const { return 1.0; }
    K iu() const { return K(0.0, 1.0); }
    K from_rat(const Rational& r) const { return r.get_d(); }
    K root(long k) const {
        double t = 2.0 * M_PI * (double)k / (double)L;
        return K(std::cos(t), std::sin(t));
    }
    K zeta1(long p) const { return K(std::cos(M_PI * p / m1), std::sin(M_PI * p / m1)); }
    K zeta2(long q) const { return K(std::cos(M_PI * q / m2), std::sin(M_PI * q / m2)); }
    K sin1(long p) const { return std::sin(M_PI * p / m1); }
    K cos1(long p) const { return std::cos(M_PI * p / m1); }
    K sin2(long q) const { return std::sin(M_PI * q / m2); }
    K cos2(long q) const { return std::cos(M_PI * q / m2); }
    K half() const { return 0.5; }
    K conj(const K& x) const { return std::conj(x); }
};

}  // namespace tama
