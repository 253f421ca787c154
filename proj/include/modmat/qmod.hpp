#pragma once

#include <map>
#include <vector>

#include "modmat/qseries.hpp"

namespace modmat {

// Laurent series in the rescaled variable zh = 2*pi*i*z whose coefficients
// are q-series: sum_{e >= zmin} c[e] zh^e, known modulo zh^ztrunc.
class ZQSeries {
public:
    ZQSeries() : zmin_(0), ztrunc_(0) {}
    ZQSeries(long order, int qprec, int zmin, int ztrunc)
        : order_(order), qprec_(qprec), zmin_(zmin), ztrunc_(ztrunc),
          c_(std::max(0, ztrunc - zmin), QSeries(order, qprec)) {}

    long order() const { return order_; }
    int qprec() const { return qprec_; }
    int zmin() const { return zmin_; }
    int ztrunc() const { return ztrunc_; }

    const QSeries& coeff(int e) const;
    void set_coeff(int e, QSeries s);

    bool is_zero() const;

    ZQSeries operator-() const;
    friend ZQSeries operator+(const ZQSeries& a, const ZQSeries& b);
    friend ZQSeries operator-(const ZQSeries& a, const ZQSeries& b);
    friend ZQSeries operator*(const ZQSeries& a, const ZQSeries& b);
    ZQSeries& operator+=(const ZQSeries& b) { return *this = *this + b; }
    ZQSeries& operator-=(const ZQSeries& b) { return *this = *this - b; }

    friend ZQSeries operator*(const QSeries& a, const ZQSeries& b);

    // d/dzh
    ZQSeries z_derivative() const;
    // antiderivative with zero constant term; requires no zh^{-1} term
    ZQSeries z_integral() const;
    // multiply by zh^k
    ZQSeries z_shift(int k) const;
    // inverse for zmin = 0 and unit leading q-series
    ZQSeries inverse() const;
    // exp for series with z-valuation >= 1
    ZQSeries z_exp() const;

    ZQSeries truncated(int ztrunc) const;

private:
    long order_ = 1;
    int qprec_ = 1;
    int zmin_, ztrunc_;
    std::vector<QSeries> c_;
};

// sigma_a as displayed: (zeta^a+1)/(2(zeta^a-1)) - sum_{d>0} q^d
// sum_{k|d} (zeta^{ka} - zeta^{-ka}).  Independent of the log-derivative
// route below; the two are cross-checked in the tests.
QSeries sigma_series(long n, long a, int qprec);

// Normalized log-derivative of theta expanded at z = a/n (+ z), as a power
// series in zh (no pole since a/n is not a lattice point).
ZQSeries theta_logderiv(long n, long a, int zprec, int qprec);

// Regular part of the normalized log-derivative at z = 0: Lambda_0 - 1/zh
// (Bernoulli series plus the divisor sums).
ZQSeries theta_logderiv_principal(long n, int zprec, int qprec);

// r_a normalized: 1/zh + sigma_a + tau_a zh + upsilon_a zh^2 + nu_a zh^3 + ...
ZQSeries r_series(long n, long a, int zprec, int qprec);

struct LaurentData {
    long n = 0;
    long a = 0;
    QSeries sigma, tau, upsilon, nu;
};

inline constexpr int kDefaultQPrec = 25;
inline constexpr int kDefaultZPrec = 6;

LaurentData laurent_data(long n, long a, int qprec, int zprec = kDefaultZPrec);

// Normalized Weierstrass values at a/n: P = sigma^2 - 2 tau,
// P' = -2 sigma^3 + 6 sigma tau - 6 upsilon.
std::pair<QSeries, QSeries> wp_value(long n, long a, int qprec);

// Cache of Laurent data per index for one (n, qprec).
class LaurentTable {
public:
    LaurentTable(long n, int qprec) : n_(n), qprec_(qprec) {}
    const LaurentData& get(long a);
    QSeries sigma(long a); // sign-extended: sigma_{-a} = -sigma_a uses a mod n
    long n() const { return n_; }
    int qprec() const { return qprec_; }

private:
    long n_;
    int qprec_;
    std::map<long, LaurentData> cache_;
};

enum class IdentityKind { ST, RR, MAIN, BK, AK1, CUSPONLY };

struct IdentityReport {
    IdentityKind kind;
    long n = 0;
    std::vector<long> indices;
    int qprec = 0;
    int zorder_checked = -1; // for RR
    bool passed = false;
    std::string detail;
};

IdentityReport verify_identity(IdentityKind kind, long n, const std::vector<long>& indices,
                               int qprec);
// Same, but reusing a table across calls.
IdentityReport verify_identity(LaurentTable& table, IdentityKind kind,
                               const std::vector<long>& indices);

std::string identity_kind_name(IdentityKind kind);

} // namespace modmat
