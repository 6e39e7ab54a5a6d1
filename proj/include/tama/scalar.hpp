#pragma once

#include <array>
#include <map>

#include "tama/cyclotomic.hpp"

namespace tama {

using KExp = std::array<int, 4>;

// Polynomial in the deformation parameters kappa_1..kappa_4 with coefficients
// in Q(zeta_L). Sparse, canonical (no zero terms stored).
class Scalar {
  public:
    Scalar() = default;  // zero, field-agnostic
    explicit Scalar(Cyclotomic c);

    static Scalar kappa(const CycField* F, int i);  // i in 1..4
    static Scalar from_rat(const CycField* F, const Rational& r);

    const CycField* field() const;
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Cyclotomic constant_part() const;

    const std::map<KExp, Cyclotomic>& terms() const { return terms_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    bool operator==(const Scalar& o) const { return (*this - o).is_zero(); }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Cyclotomic eval(const std::array<Rational, 4>& kv) const;
    Scalar conj() const;  // conjugate coefficients; kappa treated as real
    std::string str() const;
    std::string json() const;  // {"terms":[{"kexp":[..],"coeffs":[["n","d"],..]}]}

  private:
    std::map<KExp, Cyclotomic> terms_;
    void prune();
};

inline Scalar operator*(const Cyclotomic& c, const Scalar& s) { return Scalar(c) * s; }

}  // namespace tama
