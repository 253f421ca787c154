#pragma once

#include <optional>
#include <vector>

#include "modmat/cyclotomic.hpp"

namespace modmat {

// Truncated power series in q with coefficients in Q(zeta_n), known modulo
// q^prec. All arithmetic truncates to the smaller precision of its inputs.
class QSeries {
public:
    QSeries() : order_(1), c_(1) {}
    QSeries(long order, int prec) : order_(order), c_(prec, Cyclotomic(0)) {}

    static QSeries constant(Cyclotomic v, int prec) {
        QSeries s(v.order(), prec);
        s.c_[0] = std::move(v);
        return s;
    }
    static QSeries monomial(long order, int power, Cyclotomic v, int prec);

    long order() const { return order_; }
    int prec() const { return (int)c_.size(); }

    const Cyclotomic& operator[](int k) const { return c_[k]; }
    void set(int k, Cyclotomic v);

    bool is_zero() const;
    // Smallest k with nonzero coefficient, or nullopt if zero to precision.
    std::optional<int> valuation() const;

    QSeries truncated(int prec) const;

    QSeries operator-() const;
    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    QSeries& operator+=(const QSeries& b) { return *this = *this + b; }
    QSeries& operator-=(const QSeries& b) { return *this = *this - b; }
    QSeries& operator*=(const QSeries& b) { return *this = *this * b; }

    friend QSeries operator*(const Cyclotomic& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const Cyclotomic& b) { return b * a; }

    friend bool operator==(const QSeries& a, const QSeries& b) { return (a - b).is_zero(); }

    // Multiplicative inverse; requires a unit constant term (DivisionByNonUnit).
    QSeries inverse() const;
    friend QSeries operator/(const QSeries& a, const QSeries& b) { return a * b.inverse(); }

    // Formal derivative d/dq.
    QSeries derivative() const;

    // exp of a series with zero constant term (ExpOfUnit otherwise).
    QSeries exp() const;

    QSeries pow(long e) const;

private:
    long order_;
    std::vector<Cyclotomic> c_;
};

std::string to_string(const QSeries& s);

} // namespace modmat
