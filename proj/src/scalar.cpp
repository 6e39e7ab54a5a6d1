#include "tama/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace tama {

Scalar::Scalar(Cyclotomic c) {
    if (!c.is_zero()) terms_[{0, 0, 0, 0}] = std::move(c);
}

Scalar Scalar::kappa(const CycField* F, int i) {
    if (i < 1 || i > 4) throw std::invalid_argument("kappa index out of range");
    Scalar s;
    KExp e{0, 0, 0, 0};
    e[i - 1] = 1;
    s.terms_[e] = Cyclotomic(F, Rational(1));
    return s;
}

Scalar Scalar::from_rat(const CycField* F, const Rational& r) {
    return Scalar(Cyclotomic(F, r));
}

const CycField* Scalar::field() const {
    return terms_.empty() ? nullptr : terms_.begin()->second.field();
}

bool Scalar::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == KExp{0, 0, 0, 0});
}

Cyclotomic Scalar::constant_part() const {
    auto it = terms_.find({0, 0, 0, 0});
    return it == terms_.end() ? Cyclotomic() : it->second;
}

void Scalar::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar out = *this;
    for (const auto& [e, c] : o.terms_) {
        auto it = out.terms_.find(e);
        if (it == out.terms_.end())
            out.terms_[e] = c;
        else
            it->second += c;
    }
    out.prune();
    return out;
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar out;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            KExp e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]};
            Cyclotomic p = c1 * c2;
            auto it = out.terms_.find(e);
            if (it == out.terms_.end())
                out.terms_[e] = std::move(p);
            else
                it->second += p;
        }
    }
    out.prune();
    return out;
}

Cyclotomic Scalar::eval(const std::array<Rational, 4>& kv) const {
    Cyclotomic acc;
    const CycField* F = field();
    if (!F) return acc;
    for (const auto& [e, c] : terms_) {
        Rational m(1);
        for (int i = 0; i < 4; ++i)
            for (int p = 0; p < e[i]; ++p) m *= kv[i];
        acc += c * Cyclotomic(F, m);
    }
    return acc;
}

Scalar Scalar::conj() const {
    Scalar out = *this;
    for (auto& [e, c] : out.terms_) c = c.conj();
    return out;
}

std::string Scalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")";
        for (int i = 0; i < 4; ++i)
            if (e[i]) os << "*k" << (i + 1) << "^" << e[i];
        first = false;
    }
    return os.str();
}

std::string Scalar::json() const {
    std::ostringstream os;
    os << "{\"terms\":[";
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << ",";
        first = false;
        os << "{\"kexp\":[" << e[0] << "," << e[1] << "," << e[2] << "," << e[3]
           << "],\"coeffs\":[";
        const auto& cs = c.coeffs();
        for (size_t i = 0; i < cs.size(); ++i) {
            if (i) os << ",";
            os << "[\"" << cs[i].get_num().get_str() << "\",\""
               << cs[i].get_den().get_str() << "\"]";
        }
        os << "]}";
    }
    os << "]}";
    return os.str();
}

}  // namespace tama
