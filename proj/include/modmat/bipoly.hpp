#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "modmat/errors.hpp"
#include "modmat/numtheory.hpp"

namespace modmat {

// Sparse polynomial in Q[s,t]; keys are exponent pairs (i,j) for s^i t^j.
class BiPoly {
public:
    using Monomial = std::pair<int, int>;

    BiPoly() = default;
    BiPoly(long v) { set(0, 0, Rat(v)); }
    BiPoly(const Rat& v) { set(0, 0, v); }

    static BiPoly var_s() { return monomial(1, 0, Rat(1)); }
    static BiPoly var_t() { return monomial(0, 1, Rat(1)); }
    static BiPoly monomial(int i, int j, const Rat& c) {
        BiPoly p;
        p.set(i, j, c);
        return p;
    }

    const std::map<Monomial, Rat>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const {
        return c_.empty() || (c_.size() == 1 && c_.begin()->first == Monomial{0, 0});
    }
    Rat constant_value() const;
    int total_degree() const;

    void set(int i, int j, const Rat& v) {
        if (v == 0)
            c_.erase({i, j});
        else
            c_[{i, j}] = v;
    }
    Rat coeff(int i, int j) const {
        auto it = c_.find({i, j});
        return it == c_.end() ? Rat(0) : it->second;
    }

    BiPoly operator-() const;
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly& operator+=(const BiPoly& b) { return *this = *this + b; }
    BiPoly& operator-=(const BiPoly& b) { return *this = *this - b; }
    BiPoly& operator*=(const BiPoly& b) { return *this = *this * b; }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    // Exact quotient under lex order on (i,j); throws if the division is
    // not exact. Used by the fraction-free determinant.
    BiPoly exact_div(const BiPoly& d) const;

    // Rational content (gcd of numerators over lcm of denominators), signed
    // by the lex-leading coefficient.
    Rat content() const;
    // Divide out content: integer coprime coefficients, positive lex lead.
    BiPoly primitive_part() const;
    // Largest monomial s^i t^j dividing every term.
    Monomial monomial_content() const;
    BiPoly divide_monomial(Monomial m) const;

    // Evaluate at generic field values (F needs +, *, ctor from long).
    template <class F>
    F eval(const F& s, const F& t) const {
        // powers cached up to max degree in each variable
        int ds = 0, dt = 0;
        for (const auto& [m, v] : c_) {
            ds = std::max(ds, m.first);
            dt = std::max(dt, m.second);
        }
        std::vector<F> ps(ds + 1, F(1)), pt(dt + 1, F(1));
        for (int i = 1; i <= ds; ++i) ps[i] = ps[i - 1] * s;
        for (int j = 1; j <= dt; ++j) pt[j] = pt[j - 1] * t;
        F acc(0);
        for (const auto& [m, v] : c_) acc = acc + scale(ps[m.first] * pt[m.second], v);
        return acc;
    }

    std::string str() const;

private:
    template <class F>
    static F scale(const F& x, const Rat& c) {
        return x * F(c);
    }
    std::map<Monomial, Rat> c_;
};

template <>
inline Rat BiPoly::scale<Rat>(const Rat& x, const Rat& c) {
    return x * c;
}

// Fraction-free (Bareiss) determinant of a square BiPoly matrix; divisions
// are exact polynomial divisions.
BiPoly bipoly_det(std::vector<std::vector<BiPoly>> m);

// Rational function in (s,t): num/den with den != 0, both content-reduced
// so the pair is unique up to nothing (den primitive, positive lex lead).
// Equality is decided by cross-multiplication; no polynomial gcd is taken.
class BiRat {
public:
    BiRat() : num_(), den_(1) {}
    BiRat(long v) : num_(v), den_(1) {}
    BiRat(const Rat& v) : num_(v), den_(1) {}
    BiRat(BiPoly num) : num_(std::move(num)), den_(1) { reduce(); }
    BiRat(BiPoly num, BiPoly den);

    static BiRat var_s() { return BiRat(BiPoly::var_s()); }
    static BiRat var_t() { return BiRat(BiPoly::var_t()); }

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const;
    Rat constant_value() const;

    BiRat operator-() const;
    friend BiRat operator+(const BiRat& a, const BiRat& b);
    friend BiRat operator-(const BiRat& a, const BiRat& b);
    friend BiRat operator*(const BiRat& a, const BiRat& b);
    friend BiRat operator/(const BiRat& a, const BiRat& b);
    BiRat& operator+=(const BiRat& b) { return *this = *this + b; }
    BiRat& operator-=(const BiRat& b) { return *this = *this - b; }
    BiRat& operator*=(const BiRat& b) { return *this = *this * b; }
    BiRat& operator/=(const BiRat& b) { return *this = *this / b; }

    friend bool operator==(const BiRat& a, const BiRat& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const BiRat& a, const BiRat& b) { return !(a == b); }

    BiRat inverse() const;

    template <class F>
    F eval(const F& s, const F& t) const {
        return num_.eval(s, t) / den_.eval(s, t);
    }

    std::string str() const;

private:
    void reduce();
    BiPoly num_, den_;
};

} // namespace modmat
