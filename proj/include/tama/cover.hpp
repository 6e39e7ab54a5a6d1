#pragma once

#include <compare>
#include <stdexcept>
#include <vector>

namespace tama {

// Element of the positive double cover of D_{2m1} x D_{2m2}, stored as the
// canonical word z^a r1^j r2^k f1^{d1} f2^{d2}.
// Rewrite rules: r_i^{m_i} = z, f_i^2 = 1, f_i r_i = r_i^{-1} f_i with
// r_i^{-1} = z r_i^{m_i-1}, f2 f1 = z f1 f2, cross-factor pairs commute,
// z central with z^2 = 1.
struct CoverElement {
    int m1 = 2, m2 = 2;
    int a = 0, j = 0, k = 0, d1 = 0, d2 = 0;

    bool operator==(const CoverElement& o) const {
        return m1 == o.m1 && m2 == o.m2 && a == o.a && j == o.j && k == o.k &&
               d1 == o.d1 && d2 == o.d2;
    }
    auto operator<=>(const CoverElement& o) const = default;

    bool is_identity() const { return a == 0 && j == 0 && k == 0 && d1 == 0 && d2 == 0; }
    // parity class (i,j) of the decomposition into four cosets
    std::pair<int, int> parity_class() const { return {d1, d2}; }
    // Clifford grading of the lift (number of reflection letters mod 2)
    int clifford_parity() const { return (d1 + d2) % 2; }
};

CoverElement cover_identity(int m1, int m2);
CoverElement cover_mul(const CoverElement& g, const CoverElement& h);
CoverElement cover_inv(const CoverElement& g);
CoverElement cover_z(int m1, int m2);
CoverElement cover_r1(int m1, int m2);
CoverElement cover_r2(int m1, int m2);
CoverElement cover_f1(int m1, int m2);
CoverElement cover_f2(int m1, int m2);
// lifted reflections: s_p = z r1^p f1 (p = 1..m1), t_q = z r2^q f2 (q = 1..m2)
CoverElement cover_s(int m1, int m2, int p);
CoverElement cover_t(int m1, int m2, int q);

std::vector<CoverElement> cover_enumerate(int m1, int m2);

// A lift of the longest element of W; flag true iff pi(w0) = -identity,
// which happens exactly when both m1 and m2 are even.
std::pair<CoverElement, bool> longest_element(int m1, int m2);

}  // namespace tama
