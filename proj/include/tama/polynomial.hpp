#pragma once

#include <array>
#include <map>

#include "tama/matrix.hpp"

namespace tama {

using Expo = std::array<int, 4>;

template <class K>
class Poly {
  public:
    std::map<Expo, K> terms;

    Poly() = default;
    static Poly monomial(const Expo& e, K coeff) {
        Poly p;
        if (!kzero(coeff)) p.terms[e] = std::move(coeff);
        return p;
    }
    static Poly constant(K c) { return monomial({0, 0, 0, 0}, std::move(c)); }
    static Poly var(int j, K one) {  // x_j, j = 1..4
        Expo e{0, 0, 0, 0};
        e[j - 1] = 1;
        return monomial(e, std::move(one));
    }

    bool is_zero() const { return terms.empty(); }
    void prune() {
        for (auto it = terms.begin(); it != terms.end();)
            it = kzero(it->second) ? terms.erase(it) : std::next(it);
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [e, c] : o.terms) terms[e] += c;
        prune();
        return *this;
    }
    Poly operator+(const Poly& o) const {
        Poly p = *this;
        p += o;
        return p;
    }
    Poly operator-() const {
        Poly p = *this;
        for (auto& [e, c] : p.terms) c = -c;
        return p;
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly& operator-=(const Poly& o) { return *this += -o; }
    Poly operator*(const Poly& o) const {
        Poly p;
        for (const auto& [e1, c1] : terms)
            for (const auto& [e2, c2] : o.terms) {
                Expo e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]};
                p.terms[e] += c1 * c2;
            }
        p.prune();
        return p;
    }
    Poly scaled(const K& s) const {
        Poly p;
        for (const auto& [e, c] : terms) {
            K v = s * c;
            if (!kzero(v)) p.terms[e] = std::move(v);
        }
        return p;
    }

    int degree() const {  // max total degree, -1 for zero
        int d = -1;
        for (const auto& [e, c] : terms) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
        return d;
    }
    bool homogeneous(int d) const {
        for (const auto& [e, c] : terms)
            if (e[0] + e[1] + e[2] + e[3] != d) return false;
        return true;
    }
    Poly slice(int d) const {
        Poly p;
        for (const auto& [e, c] : terms)
            if (e[0] + e[1] + e[2] + e[3] == d) p.terms[e] = c;
        return p;
    }
};

// partial derivative d/dx_j, needs a rational embedding for the exponent
template <class Ctx>
Poly<typename Ctx::K> pderiv(const Ctx& ctx, int j, const Poly<typename Ctx::K>& f) {
    Poly<typename Ctx::K> out;
    for (const auto& [e, c] : f.terms) {
        if (e[j - 1] == 0) continue;
        Expo e2 = e;
        e2[j - 1] -= 1;
        out.terms[e2] += ctx.from_rat(Rational(e[j - 1])) * c;
    }
    out.prune();
    return out;
}

// substitute x_i -> sum_j M(i,j) x_j
template <class K>
Poly<K> substitute(const Poly<K>& f, const Mat<K>& M) {
    Poly<K> out;
    std::array<Poly<K>, 4> lin;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!kzero(M.at(i, j)))
                lin[i] += Poly<K>::var(j + 1, M.at(i, j));
    // powers built incrementally per monomial
    for (const auto& [e, c] : f.terms) {
        Poly<K> m = Poly<K>::constant(c);
        for (int i = 0; i < 4; ++i)
            for (int p = 0; p < e[i]; ++p) m = m * lin[i];
        out += m;
    }
    return out;
}

// exact division f / l where l = sum c_j x_j; remainder must vanish.
// Returns the quotient; throws logic_error on nonzero remainder (float
// contexts tolerate roundoff through kzero).
template <class K>
Poly<K> divide_by_linear(const Poly<K>& f, const std::array<K, 4>& l) {
    int piv = -1;
    for (int j = 0; j < 4; ++j)
        if (!kzero(l[j]) && (piv < 0 || kbetter(l[j], l[piv]))) piv = j;
    if (piv < 0) throw std::invalid_argument("division by zero linear form");
    K inv_c = kinv(l[piv]);

    Poly<K> rem = f, quot;
    // peel from the top x_piv degree down
    while (true) {
        int top = -1;
        for (const auto& [e, c] : rem.terms) top = std::max(top, e[piv]);
        if (top < 1) break;
        Poly<K> lead;  // terms with x_piv-degree == top, divided by x_piv once
        for (const auto& [e, c] : rem.terms) {
            if (e[piv] != top) continue;
            Expo e2 = e;
            e2[piv] -= 1;
            lead.terms[e2] = inv_c * c;
        }
        quot += lead;
        Poly<K> lpoly;
        for (int j = 0; j < 4; ++j)
            if (!kzero(l[j])) lpoly += Poly<K>::var(j + 1, l[j]);
        rem -= lead * lpoly;
    }
    if (!rem.is_zero()) throw std::logic_error("linear division left a remainder");
    return quot;
}

}  // namespace tama
