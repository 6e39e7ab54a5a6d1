#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "tama/rational.hpp"

namespace tama {

// Q(zeta_L) in the power basis 1, zeta, ..., zeta^{phi(L)-1} reduced mod the
// L-th cyclotomic polynomial. One immutable table per order L, built on first
// use and shared.
struct CycField {
    long L = 0;
    long phi = 0;
    // cyclotomic polynomial coefficients, degree phi, monic (size phi+1)
    std::vector<Rational> poly;
    // pow_table[k] = zeta^k in the power basis, for 0 <= k < L
    std::vector<std::vector<Rational>> pow_table;

    static const CycField* get(long L);
};

class Cyclotomic {
  public:
    Cyclotomic() = default;  // null zero, compatible with any field
    Cyclotomic(const CycField* F, Rational r);
    static Cyclotomic zero(const CycField* F) { return Cyclotomic(F, Rational(0)); }

    const CycField* field() const { return F_; }
    bool is_zero() const;
    bool is_rational() const;
    Rational rational_part() const;  // coefficient of zeta^0
    const std::vector<Rational>& coeffs() const { return c_; }

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    bool operator==(const Cyclotomic& o) const { return (*this - o).is_zero(); }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    Cyclotomic conj() const;     // zeta -> zeta^{-1}
    Cyclotomic inverse() const;  // throws on zero
    std::string str() const;     // debugging aid

    static Cyclotomic from_coeffs(const CycField* F, std::vector<Rational> c);

  private:
    const CycField* F_ = nullptr;  // nullptr means the zero of any field
    std::vector<Rational> c_;      // size phi when F_ set

    static const CycField* join(const CycField* a, const CycField* b);
};

// zeta_L^k
Cyclotomic cyc_make(long L, long k);
Cyclotomic cyc_make(const CycField* F, long k);
inline Cyclotomic cyc_conj(const Cyclotomic& c) { return c.conj(); }
Cyclotomic cyc_rat(const CycField* F, const Rational& r);
// i = zeta_L^{L/4}; requires 4 | L
Cyclotomic cyc_i(const CycField* F);

long euler_phi(long n);

// numeric value, for cross-checks against the floating-point twin
inline std::complex<double> cyc_cd(const Cyclotomic& c) {
    if (c.is_zero()) return 0.0;
    std::complex<double> acc = 0.0;
    const auto& co = c.coeffs();
    long L = c.field()->L;
    for (size_t j = 0; j < co.size(); ++j) {
        if (co[j] == 0) continue;
        double t = 2.0 * M_PI * (double)j / (double)L;
        acc += co[j].get_d() * std::complex<double>(std::cos(t), std::sin(t));
    }
    return acc;
}

}  // namespace tama
