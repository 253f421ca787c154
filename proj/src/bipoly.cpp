#include "modmat/bipoly.hpp"

#include <algorithm>
#include <sstream>

namespace modmat {

Rat BiPoly::constant_value() const {
    if (!is_constant()) fail("InvalidArgument", "BiPoly is not constant");
    return c_.empty() ? Rat(0) : c_.begin()->second;
}

int BiPoly::total_degree() const {
    int d = 0;
    for (const auto& [m, v] : c_) d = std::max(d, m.first + m.second);
    return d;
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [m, v] : r.c_) v = -v;
    return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [m, v] : b.c_) {
        auto [it, fresh] = r.c_.try_emplace(m, v);
        if (!fresh) {
            it->second += v;
            if (it->second == 0) r.c_.erase(it);
        }
    }
    return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ma, va] : a.c_)
        for (const auto& [mb, vb] : b.c_) {
            BiPoly::Monomial m{ma.first + mb.first, ma.second + mb.second};
            auto [it, fresh] = r.c_.try_emplace(m, va * vb);
            if (!fresh) {
                it->second += va * vb;
                if (it->second == 0) r.c_.erase(it);
            }
        }
    return r;
}

BiPoly BiPoly::exact_div(const BiPoly& d) const {
    if (d.is_zero()) fail("DivisionByZero", "BiPoly exact_div by zero");
    BiPoly rem = *this, q;
    const auto dlead = d.c_.rbegin(); // lex-largest monomial of divisor
    while (!rem.is_zero()) {
        const auto rlead = rem.c_.rbegin();
        int di = rlead->first.first - dlead->first.first;
        int dj = rlead->first.second - dlead->first.second;
        if (di < 0 || dj < 0) fail("InternalError", "BiPoly exact_div: not divisible");
        Rat c = rlead->second / dlead->second;
        BiPoly term = BiPoly::monomial(di, dj, c);
        q += term;
        rem -= term * d;
    }
    return q;
}

Rat BiPoly::content() const {
    if (c_.empty()) return Rat(0);
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [m, v] : c_) {
        Int num = v.get_num();
        mpz_abs(num.get_mpz_t(), num.get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
        Int den = v.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
        den_lcm = den_lcm / g * den;
    }
    Rat c(num_gcd, den_lcm);
    c.canonicalize();
    if (c_.rbegin()->second < 0) c = -c; // sign from lex-leading coefficient
    return c;
}

BiPoly BiPoly::primitive_part() const {
    if (c_.empty()) return *this;
    Rat c = content();
    BiPoly r = *this;
    for (auto& [m, v] : r.c_) v /= c;
    return r;
}

BiPoly::Monomial BiPoly::monomial_content() const {
    if (c_.empty()) return {0, 0};
    int mi = c_.begin()->first.first, mj = c_.begin()->first.second;
    for (const auto& [m, v] : c_) {
        mi = std::min(mi, m.first);
        mj = std::min(mj, m.second);
        if (mi == 0 && mj == 0) break;
    }
    return {mi, mj};
}

BiPoly BiPoly::divide_monomial(Monomial m) const {
    BiPoly r;
    for (const auto& [mm, v] : c_) r.c_[{mm.first - m.first, mm.second - m.second}] = v;
    return r;
}

std::string BiPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [m, v] = *it;
        if (!first) os << " + ";
        first = false;
        os << v.get_str();
        if (m.first) os << "*s^" << m.first;
        if (m.second) os << "*t^" << m.second;
    }
    return os.str();
}

BiPoly bipoly_det(std::vector<std::vector<BiPoly>> m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) fail("DimensionMismatch", "bipoly_det needs a square matrix");
    if (n == 0) return BiPoly(1);
    BiPoly prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return BiPoly(0);
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev);
        prev = m[k][k];
    }
    BiPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

BiRat::BiRat(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail("DivisionByZero", "BiRat with zero denominator");
    reduce();
}

void BiRat::reduce() {
    if (num_.is_zero()) {
        den_ = BiPoly(1);
        return;
    }
    // no polynomial gcd: only content normalization (den primitive, lead > 0)
    Rat c = den_.content();
    BiPoly newden = den_, newnum = num_;
    if (c != 1) {
        newden = den_.primitive_part();
        Rat inv = Rat(1) / c;
        BiPoly scaled;
        for (const auto& [m, v] : num_.terms()) scaled.set(m.first, m.second, v * inv);
        newnum = scaled;
    }
    num_ = std::move(newnum);
    den_ = std::move(newden);
}

bool BiRat::is_constant() const {
    if (num_.is_zero()) return true;
    // num/den constant iff num = c * den
    const auto& lead = den_.terms().begin();
    Rat c0 = num_.coeff(lead->first.first, lead->first.second) / lead->second;
    BiPoly scaled;
    for (const auto& [m, v] : den_.terms()) scaled.set(m.first, m.second, v * c0);
    return scaled == num_;
}

Rat BiRat::constant_value() const {
    if (num_.is_zero()) return Rat(0);
    if (!is_constant()) fail("InvalidArgument", "BiRat is not constant");
    const auto& lead = den_.terms().begin();
    return num_.coeff(lead->first.first, lead->first.second) / lead->second;
}

BiRat BiRat::operator-() const {
    BiRat r = *this;
    r.num_ = -r.num_;
    return r;
}

BiRat operator+(const BiRat& a, const BiRat& b) {
    return BiRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

BiRat operator-(const BiRat& a, const BiRat& b) {
    return BiRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

BiRat operator*(const BiRat& a, const BiRat& b) {
    return BiRat(a.num_ * b.num_, a.den_ * b.den_);
}

BiRat operator/(const BiRat& a, const BiRat& b) {
    if (b.is_zero()) fail("DivisionByZero", "BiRat division by zero");
    return BiRat(a.num_ * b.den_, a.den_ * b.num_);
}

BiRat BiRat::inverse() const {
    if (is_zero()) fail("DivisionByZero", "BiRat inverse of zero");
    return BiRat(den_, num_);
}

std::string BiRat::str() const {
    if (den_ == BiPoly(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace modmat
