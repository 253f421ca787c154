#include "modmat/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace modmat {

namespace {
long joint_order(long a, long b) {
    if (a == b) return a;
    if (a == 1) return b;
    if (b == 1) return a;
    fail("OrderMismatch", "q-series over different cyclotomic orders");
}
} // namespace

QSeries QSeries::monomial(long order, int power, Cyclotomic v, int prec) {
    QSeries s(order, prec);
    if (power < prec) s.c_[power] = std::move(v);
    return s;
}

void QSeries::set(int k, Cyclotomic v) {
    order_ = joint_order(order_, v.order());
    c_[k] = std::move(v);
}

bool QSeries::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

std::optional<int> QSeries::valuation() const {
    for (int k = 0; k < prec(); ++k)
        if (!c_[k].is_zero()) return k;
    return std::nullopt;
}

QSeries QSeries::truncated(int p) const {
    QSeries r(order_, std::min(p, prec()));
    for (int k = 0; k < r.prec(); ++k) r.c_[k] = c_[k];
    return r;
}

QSeries QSeries::operator-() const {
    QSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries r(joint_order(a.order_, b.order_), std::min(a.prec(), b.prec()));
    for (int k = 0; k < r.prec(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    QSeries r(joint_order(a.order_, b.order_), std::min(a.prec(), b.prec()));
    for (int k = 0; k < r.prec(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries r(joint_order(a.order_, b.order_), std::min(a.prec(), b.prec()));
    for (int i = 0; i < r.prec(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j < r.prec(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

QSeries operator*(const Cyclotomic& a, const QSeries& b) {
    QSeries r(joint_order(a.order(), b.order_), b.prec());
    if (a.is_zero()) return r;
    for (int k = 0; k < r.prec(); ++k) r.c_[k] = a * b.c_[k];
    return r;
}

QSeries QSeries::inverse() const {
    if (c_[0].is_zero())
        fail("DivisionByNonUnit", "q-series inverse needs a unit constant term");
    QSeries r(order_, prec());
    Cyclotomic inv0 = c_[0].inverse();
    r.c_[0] = inv0;
    for (int k = 1; k < prec(); ++k) {
        Cyclotomic acc(0);
        for (int j = 1; j <= k; ++j) {
            if (c_[j].is_zero()) continue;
            acc += c_[j] * r.c_[k - j];
        }
        r.c_[k] = -(inv0 * acc);
    }
    return r;
}

QSeries QSeries::derivative() const {
    QSeries r(order_, prec());
    for (int k = 1; k < prec(); ++k) r.c_[k - 1] = Cyclotomic(k) * c_[k];
    if (prec() > 0) r.c_[prec() - 1] = Cyclotomic(0);
    return r;
}

QSeries QSeries::exp() const {
    if (!c_[0].is_zero())
        fail("ExpOfUnit", "q-series exp needs zero constant term");
    // Promote the constant 1 into this series' coefficient field.
    const QSeries one = QSeries::constant(Cyclotomic(1), prec()) + QSeries(order_, prec());
    QSeries result = one;
    QSeries term = one;
    Rat factorial = 1;
    for (int k = 1; k < prec(); ++k) {
        term = term * *this;
        factorial *= k;
        if (term.is_zero()) break;
        result += Cyclotomic(Rat(1) / factorial) * term;
    }
    return result;
}

QSeries QSeries::pow(long e) const {
    QSeries acc = QSeries::constant(Cyclotomic(1), prec()) + QSeries(order_, prec());
    QSeries base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string to_string(const QSeries& s) {
    std::ostringstream os;
    os << "O(q^" << s.prec() << "):";
    for (int k = 0; k < s.prec(); ++k) {
        if (s[k].is_zero()) continue;
        os << " +q^" << k << "*" << to_string(s[k]);
    }
    return os.str();
}

} // namespace modmat
