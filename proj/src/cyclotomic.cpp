#include "tama/cyclotomic.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace tama {

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Phi_n via x^n - 1 = prod_{d|n} Phi_d, by exact polynomial division.
std::vector<Rational> cyclo_poly(long n, std::map<long, std::vector<Rational>>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    // numerator x^n - 1
    std::vector<Rational> num(n + 1, Rational(0));
    num[0] = Rational(-1);
    num[n] = Rational(1);
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        std::vector<Rational> div = cyclo_poly(d, memo);
        // num /= div (exact, both monic)
        long nd = (long)num.size() - 1, dd = (long)div.size() - 1;
        std::vector<Rational> quot(nd - dd + 1, Rational(0));
        for (long i = nd - dd; i >= 0; --i) {
            Rational c = num[i + dd];
            quot[i] = c;
            if (c == 0) continue;
            for (long j = 0; j <= dd; ++j) num[i + j] -= c * div[j];
        }
        num = quot;
    }
    memo[n] = num;
    return num;
}

std::map<long, std::unique_ptr<CycField>>& field_registry() {
    static std::map<long, std::unique_ptr<CycField>> reg;
    return reg;
}
std::mutex& field_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

const CycField* CycField::get(long L) {
    if (L < 1) throw std::invalid_argument("cyclotomic order must be positive");
    std::lock_guard<std::mutex> lock(field_mutex());
    auto& reg = field_registry();
    auto it = reg.find(L);
    if (it != reg.end()) return it->second.get();

    auto F = std::make_unique<CycField>();
    F->L = L;
    F->phi = euler_phi(L);
    std::map<long, std::vector<Rational>> memo;
    F->poly = cyclo_poly(L, memo);

    F->pow_table.resize(L);
    for (long k = 0; k < L; ++k) {
        std::vector<Rational> row(F->phi, Rational(0));
        if (k < F->phi) {
            row[k] = Rational(1);
        } else {
            // zeta * previous row, reduced by the monic minimal polynomial
            const auto& prev = F->pow_table[k - 1];
            std::vector<Rational> shifted(F->phi + 1, Rational(0));
            for (long i = 0; i < F->phi; ++i) shifted[i + 1] = prev[i];
            Rational lead = shifted[F->phi];
            if (lead != 0)
                for (long i = 0; i < F->phi; ++i) shifted[i] -= lead * F->poly[i];
            shifted.resize(F->phi);
            row = std::move(shifted);
        }
        F->pow_table[k] = std::move(row);
    }
    const CycField* out = F.get();
    reg[L] = std::move(F);
    return out;
}

const CycField* Cyclotomic::join(const CycField* a, const CycField* b) {
    if (a && b && a != b)
        throw std::invalid_argument("cyclotomic order mismatch between operands");
    return a ? a : b;
}

Cyclotomic::Cyclotomic(const CycField* F, Rational r) : F_(F) {
    if (!F) throw std::invalid_argument("null cyclotomic field");
    c_.assign(F->phi, Rational(0));
    c_[0] = std::move(r);
}

Cyclotomic Cyclotomic::from_coeffs(const CycField* F, std::vector<Rational> c) {
    if (!F || (long)c.size() != F->phi)
        throw std::invalid_argument("bad coefficient vector");
    Cyclotomic out;
    out.F_ = F;
    out.c_ = std::move(c);
    return out;
}

bool Cyclotomic::is_zero() const {
    if (!F_) return true;
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    if (!F_) return true;
    for (long i = 1; i < F_->phi; ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_part() const { return F_ ? c_[0] : Rational(0); }

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    const CycField* F = join(F_, o.F_);
    if (!F) return Cyclotomic();
    Cyclotomic out = Cyclotomic::zero(F);
    for (long i = 0; i < F->phi; ++i)
        out.c_[i] = (F_ ? c_[i] : Rational(0)) + (o.F_ ? o.c_[i] : Rational(0));
    return out;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    const CycField* F = join(F_, o.F_);
    if (!F_ || !o.F_) return Cyclotomic();  // zero
    std::vector<Rational> conv(2 * F->phi - 1, Rational(0));
    for (long i = 0; i < F->phi; ++i) {
        if (c_[i] == 0) continue;
        for (long j = 0; j < F->phi; ++j) {
            if (o.c_[j] == 0) continue;
            conv[i + j] += c_[i] * o.c_[j];
        }
    }
    std::vector<Rational> acc(F->phi, Rational(0));
    for (long k = 0; k < (long)conv.size(); ++k) {
        if (conv[k] == 0) continue;
        const auto& row = F->pow_table[k % F->L];  // k < 2 phi - 1 <= 2L
        for (long i = 0; i < F->phi; ++i) acc[i] += conv[k] * row[i];
    }
    return from_coeffs(F, std::move(acc));
}

Cyclotomic Cyclotomic::conj() const {
    if (!F_) return Cyclotomic();
    std::vector<Rational> acc(F_->phi, Rational(0));
    for (long k = 0; k < F_->phi; ++k) {
        if (c_[k] == 0) continue;
        const auto& row = F_->pow_table[(F_->L - k) % F_->L];
        for (long i = 0; i < F_->phi; ++i) acc[i] += c_[k] * row[i];
    }
    return from_coeffs(F_, std::move(acc));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero cyclotomic");
    long n = F_->phi;
    // multiplication-by-(*this) matrix in the power basis; solve M y = e_0
    std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n + 1, Rational(0)));
    for (long j = 0; j < n; ++j) {
        Cyclotomic col = *this * cyc_make(F_, j);
        for (long i = 0; i < n; ++i) M[i][j] = col.c_[i];
    }
    M[0][n] = Rational(1);
    // Gaussian elimination
    long row = 0;
    std::vector<long> piv_col(n, -1);
    for (long col = 0; col < n && row < n; ++col) {
        long p = -1;
        for (long r = row; r < n; ++r)
            if (M[r][col] != 0) { p = r; break; }
        if (p < 0) continue;
        std::swap(M[p], M[row]);
        Rational inv = 1 / M[row][col];
        for (long j = col; j <= n; ++j) M[row][j] *= inv;
        for (long r = 0; r < n; ++r) {
            if (r == row || M[r][col] == 0) continue;
            Rational f = M[r][col];
            for (long j = col; j <= n; ++j) M[r][j] -= f * M[row][j];
        }
        piv_col[row] = col;
        ++row;
    }
    std::vector<Rational> y(n, Rational(0));
    for (long r = 0; r < row; ++r) y[piv_col[r]] = M[r][n];
    Cyclotomic out = from_coeffs(F_, std::move(y));
    if (!((*this * out) == Cyclotomic(F_, Rational(1))))
        throw std::logic_error("cyclotomic inverse solve failed");
    return out;
}

std::string Cyclotomic::str() const {
    if (!F_) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = 0; k < F_->phi; ++k) {
        if (c_[k] == 0) continue;
        if (!first) os << " + ";
        os << c_[k].get_str();
        if (k > 0) os << "*z" << F_->L << "^" << k;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Cyclotomic cyc_make(const CycField* F, long k) {
    long kk = ((k % F->L) + F->L) % F->L;
    return Cyclotomic::from_coeffs(F, F->pow_table[kk]);
}

Cyclotomic cyc_make(long L, long k) { return cyc_make(CycField::get(L), k); }

Cyclotomic cyc_rat(const CycField* F, const Rational& r) { return Cyclotomic(F, r); }

Cyclotomic cyc_i(const CycField* F) {
    if (F->L % 4 != 0) throw std::invalid_argument("order not divisible by 4");
    return cyc_make(F, F->L / 4);
}

}  // namespace tama
