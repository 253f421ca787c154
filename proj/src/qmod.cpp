#include "modmat/qmod.hpp"

#include <algorithm>
#include <sstream>

namespace modmat {

const QSeries& ZQSeries::coeff(int e) const {
    if (e < zmin_ || e >= ztrunc_) fail("LabelOutOfRange", "z-exponent outside stored range");
    return c_[e - zmin_];
}

void ZQSeries::set_coeff(int e, QSeries s) {
    if (e < zmin_ || e >= ztrunc_) fail("LabelOutOfRange", "z-exponent outside stored range");
    c_[e - zmin_] = std::move(s);
}

bool ZQSeries::is_zero() const {
    for (const auto& s : c_)
        if (!s.is_zero()) return false;
    return true;
}

ZQSeries ZQSeries::operator-() const {
    ZQSeries r = *this;
    for (auto& s : r.c_) s = -s;
    return r;
}

ZQSeries operator+(const ZQSeries& a, const ZQSeries& b) {
    int zmin = std::min(a.zmin_, b.zmin_);
    int ztrunc = std::min(a.ztrunc_, b.ztrunc_);
    ZQSeries r(std::max(a.order_, b.order_), std::min(a.qprec_, b.qprec_), zmin, ztrunc);
    for (int e = zmin; e < ztrunc; ++e) {
        QSeries acc(r.order_, r.qprec_);
        if (e >= a.zmin_ && e < a.ztrunc_) acc += a.coeff(e);
        if (e >= b.zmin_ && e < b.ztrunc_) acc += b.coeff(e);
        r.set_coeff(e, acc);
    }
    return r;
}

ZQSeries operator-(const ZQSeries& a, const ZQSeries& b) { return a + (-b); }

ZQSeries operator*(const ZQSeries& a, const ZQSeries& b) {
    int zmin = a.zmin_ + b.zmin_;
    int ztrunc = std::min(a.ztrunc_ + b.zmin_, b.ztrunc_ + a.zmin_);
    ZQSeries r(std::max(a.order_, b.order_), std::min(a.qprec_, b.qprec_), zmin, ztrunc);
    for (int i = a.zmin_; i < a.ztrunc_; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = b.zmin_; j < b.ztrunc_ && i + j < ztrunc; ++j) {
            if (b.coeff(j).is_zero()) continue;
            r.set_coeff(i + j, r.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return r;
}

ZQSeries operator*(const QSeries& a, const ZQSeries& b) {
    ZQSeries r = b;
    for (int e = b.zmin_; e < b.ztrunc_; ++e) r.set_coeff(e, a * b.coeff(e));
    return r;
}

ZQSeries ZQSeries::z_derivative() const {
    ZQSeries r(order_, qprec_, zmin_ - 1, ztrunc_ - 1);
    for (int e = zmin_; e < ztrunc_; ++e) {
        if (e == 0) continue;
        r.set_coeff(e - 1, Cyclotomic(e) * coeff(e));
    }
    return r;
}

ZQSeries ZQSeries::z_integral() const {
    if (zmin_ < 0)
        for (int e = zmin_; e < std::min(0, ztrunc_); ++e)
            if (e == -1 && !coeff(e).is_zero())
                fail("InvalidArgument", "cannot integrate a zh^{-1} term");
    ZQSeries r(order_, qprec_, std::max(zmin_ + 1, 1), ztrunc_ + 1);
    for (int e = zmin_; e < ztrunc_; ++e) {
        if (e == -1) continue;
        if (e + 1 < r.zmin_ || coeff(e).is_zero()) continue;
        r.set_coeff(e + 1, Cyclotomic(Rat(1, e + 1)) * coeff(e));
    }
    return r;
}

ZQSeries ZQSeries::z_shift(int k) const {
    ZQSeries r = *this;
    r.zmin_ += k;
    r.ztrunc_ += k;
    return r;
}

ZQSeries ZQSeries::inverse() const {
    if (zmin_ != 0 || ztrunc_ <= 0)
        fail("InvalidArgument", "ZQSeries inverse needs zmin = 0");
    QSeries lead_inv = coeff(0).inverse();
    ZQSeries r(order_, qprec_, 0, ztrunc_);
    r.set_coeff(0, lead_inv);
    for (int e = 1; e < ztrunc_; ++e) {
        QSeries acc(order_, qprec_);
        for (int j = 1; j <= e; ++j) acc += coeff(j) * r.coeff(e - j);
        r.set_coeff(e, -(lead_inv * acc));
    }
    return r;
}

ZQSeries ZQSeries::z_exp() const {
    for (int e = zmin_; e < std::min(1, ztrunc_); ++e)
        if (!coeff(e).is_zero()) fail("InvalidArgument", "z_exp needs z-valuation >= 1");
    ZQSeries result(order_, qprec_, 0, ztrunc_);
    result.set_coeff(0, QSeries::constant(Cyclotomic(1), qprec_) + QSeries(order_, qprec_));
    ZQSeries term = result;
    Rat factorial = 1;
    for (int k = 1; k < ztrunc_; ++k) {
        term = (term * *this).truncated(ztrunc_);
        factorial *= k;
        if (term.is_zero()) break;
        Cyclotomic inv_fact{Rat(1) / factorial};
        for (int e = std::max(term.zmin_, 0); e < ztrunc_; ++e)
            result.set_coeff(e, result.coeff(e) + inv_fact * term.coeff(e));
    }
    return result;
}

ZQSeries ZQSeries::truncated(int ztrunc) const {
    if (ztrunc >= ztrunc_) return *this;
    ZQSeries r(order_, qprec_, zmin_, ztrunc);
    for (int e = zmin_; e < ztrunc; ++e) r.set_coeff(e, coeff(e));
    return r;
}

QSeries sigma_series(long n, long a, int qprec) {
    a = mod_pos(a, n);
    if (a == 0) fail("IndexDivisibleByN", "sigma_a needs a != 0 mod n");
    Cyclotomic za = Cyclotomic::zeta(n, a);
    QSeries s(n, qprec);
    s.set(0, (za + Cyclotomic(1)) / (Cyclotomic(2) * (za - Cyclotomic(1))));
    for (int d = 1; d < qprec; ++d) {
        Cyclotomic acc = Cyclotomic::zero(n);
        for (long k : divisors(d))
            acc += Cyclotomic::zeta(n, k * a) - Cyclotomic::zeta(n, -k * a);
        s.set(d, -acc);
    }
    return s;
}

namespace {

// e^{m zh} as a z-polynomial with rational coefficients m^j / j!.
ZQSeries exp_mz(long n, int qprec, int zprec, long m) {
    ZQSeries r(n, qprec, 0, zprec);
    Rat mj = 1, factorial = 1;
    for (int j = 0; j < zprec; ++j) {
        if (j > 0) {
            mj *= m;
            factorial *= j;
        }
        r.set_coeff(j, QSeries::constant(Cyclotomic(mj / factorial), qprec) +
                           QSeries(n, qprec));
    }
    return r;
}

} // namespace

ZQSeries theta_logderiv(long n, long a, int zprec, int qprec) {
    a = mod_pos(a, n);
    if (a == 0) fail("IndexDivisibleByN", "theta_logderiv expansion point must avoid the lattice");
    // -1/2 - g/(1-g) with g = zeta^a e^{zh}  (the l = 0 term)
    QSeries za = QSeries::constant(Cyclotomic::zeta(n, a), qprec);
    ZQSeries g = za * exp_mz(n, qprec, zprec, 1);
    ZQSeries one(n, qprec, 0, zprec);
    one.set_coeff(0, QSeries::constant(Cyclotomic(1), qprec) + QSeries(n, qprec));
    ZQSeries t0 = g * (one - g).inverse();
    ZQSeries result = -t0;
    result.set_coeff(0, result.coeff(0) - (QSeries::constant(Cyclotomic(Rat(1, 2)), qprec) +
                                           QSeries(n, qprec)));
    // l >= 1 tail: sum over q^d of sum_{m|d} (zeta^{-am} e^{-m zh} - zeta^{am} e^{m zh})
    for (int d = 1; d < qprec; ++d) {
        for (long m : divisors(d)) {
            Cyclotomic zp = Cyclotomic::zeta(n, a * m);
            Cyclotomic zm = Cyclotomic::zeta(n, -a * m);
            // add q^d * (zm e^{-m zh} - zp e^{m zh}) coefficient-wise
            Rat mj = 1, factorial = 1;
            for (int j = 0; j < zprec; ++j) {
                if (j > 0) {
                    mj *= m;
                    factorial *= j;
                }
                Rat base = mj / factorial;
                Cyclotomic coeff = (j % 2 ? -Cyclotomic(base) : Cyclotomic(base)) * zm -
                                   Cyclotomic(base) * zp;
                if (coeff.is_zero()) continue;
                QSeries cur = result.coeff(j);
                cur.set(d, cur[d] + coeff);
                result.set_coeff(j, std::move(cur));
            }
        }
    }
    return result;
}

ZQSeries theta_logderiv_principal(long n, int zprec, int qprec) {
    ZQSeries result(n, qprec, 0, zprec);
    // Bernoulli part: sum_{k>=1} B_{2k} zh^{2k-1} / (2k)!
    std::vector<Rat> bern = bernoulli_upto(zprec + 1);
    std::vector<Rat> fact(zprec + 2);
    fact[0] = 1;
    for (int i = 1; i <= zprec + 1; ++i) fact[i] = fact[i - 1] * i;
    for (int k = 1; 2 * k - 1 < zprec; ++k) {
        Rat c = bern[2 * k] / fact[2 * k];
        QSeries s = QSeries::constant(Cyclotomic(c), qprec) + QSeries(n, qprec);
        result.set_coeff(2 * k - 1, s);
    }
    // tail: - sum_d q^d sum_{m|d} (e^{m zh} - e^{-m zh})
    for (int d = 1; d < qprec; ++d) {
        for (long m : divisors(d)) {
            Rat mj = 1, factorial = 1;
            for (int j = 0; j < zprec; ++j) {
                if (j > 0) {
                    mj *= m;
                    factorial *= j;
                }
                if (j % 2 == 0) continue; // e^{m zh} - e^{-m zh} kills even powers
                Rat base = mj / factorial * 2;
                QSeries cur = result.coeff(j);
                cur.set(d, cur[d] - Cyclotomic(base));
                result.set_coeff(j, std::move(cur));
            }
        }
    }
    return result;
}

ZQSeries r_series(long n, long a, int zprec, int qprec) {
    // d/dzh log r = Lambda_a - Lambda_0; the 1/zh poles cancel against the
    // explicit principal part, leaving hprime = Lambda_a - (Lambda_0 - 1/zh).
    ZQSeries hprime = theta_logderiv(n, a, zprec, qprec) -
                      theta_logderiv_principal(n, zprec, qprec);
    ZQSeries h = hprime.truncated(zprec - 1).z_integral();
    return h.z_exp().z_shift(-1);
}

LaurentData laurent_data(long n, long a, int qprec, int zprec) {
    if (zprec < 5)
        fail("InvalidArgument", "laurent_data needs zprec >= 5 to expose nu_a");
    ZQSeries r = r_series(n, a, zprec, qprec);
    LaurentData d;
    d.n = n;
    d.a = mod_pos(a, n);
    d.sigma = r.coeff(0);
    d.tau = r.coeff(1);
    d.upsilon = r.coeff(2);
    d.nu = r.coeff(3);
    return d;
}

std::pair<QSeries, QSeries> wp_value(long n, long a, int qprec) {
    LaurentData d = laurent_data(n, a, qprec);
    QSeries p = d.sigma * d.sigma - Cyclotomic(2) * d.tau;
    QSeries pp = Cyclotomic(-2) * (d.sigma * d.sigma * d.sigma) +
                 Cyclotomic(6) * (d.sigma * d.tau) - Cyclotomic(6) * d.upsilon;
    return {p, pp};
}

const LaurentData& LaurentTable::get(long a) {
    a = mod_pos(a, n_);
    if (a == 0) fail("IndexDivisibleByN", "Laurent data needs a != 0 mod n");
    auto it = cache_.find(a);
    if (it == cache_.end()) it = cache_.emplace(a, laurent_data(n_, a, qprec_)).first;
    return it->second;
}

QSeries LaurentTable::sigma(long a) { return get(a).sigma; }

std::string identity_kind_name(IdentityKind kind) {
    switch (kind) {
    case IdentityKind::ST: return "st";
    case IdentityKind::RR: return "rr";
    case IdentityKind::MAIN: return "main";
    case IdentityKind::BK: return "bk";
    case IdentityKind::AK1: return "ak1";
    case IdentityKind::CUSPONLY: return "cusponly";
    }
    return "?";
}

namespace {

void require_index(bool ok, const std::string& what) {
    if (!ok) fail("IndexConstraintViolated", what);
}

bool nonzero_mod(long x, long n) { return mod_pos(x, n) != 0; }

IdentityReport make_report(LaurentTable& t, IdentityKind kind, std::vector<long> idx) {
    IdentityReport rep;
    rep.kind = kind;
    rep.n = t.n();
    rep.indices = std::move(idx);
    rep.qprec = t.qprec();
    return rep;
}

} // namespace

IdentityReport verify_identity(LaurentTable& t, IdentityKind kind,
                               const std::vector<long>& indices) {
    const long n = t.n();
    IdentityReport rep = make_report(t, kind, indices);
    std::ostringstream detail;
    switch (kind) {
    case IdentityKind::ST: {
        require_index(indices.size() == 3, "st needs (a, b, c)");
        long a = indices[0], b = indices[1], c = indices[2];
        require_index(nonzero_mod(a, n) && nonzero_mod(b, n) && nonzero_mod(c, n),
                      "st indices must be nonzero");
        require_index(mod_pos(a + b + c, n) == 0, "st needs a+b+c = 0 mod n");
        const auto &da = t.get(a), &db = t.get(b), &dc = t.get(c);
        QSeries res = da.sigma * db.sigma + db.sigma * dc.sigma + dc.sigma * da.sigma +
                      da.tau + db.tau + dc.tau;
        rep.passed = res.is_zero();
        break;
    }
    case IdentityKind::MAIN: {
        require_index(indices.size() == 3, "main needs (a, b, k)");
        long a = indices[0], b = indices[1], k = indices[2];
        require_index(nonzero_mod(a, n) && nonzero_mod(b, n) && nonzero_mod(a - b, n),
                      "main needs distinct nonzero a, b");
        require_index(nonzero_mod(k - (a - b), n) && nonzero_mod(k, n) &&
                          nonzero_mod(k - a, n) && nonzero_mod(k + b, n),
                      "main needs k not in {a-b, 0, a, -b}");
        QSeries lhs = (t.sigma(k + b - a) - t.sigma(k) - t.sigma(b) + t.sigma(a)) *
                      (t.sigma(k + b) - t.sigma(k - a) - t.sigma(b) - t.sigma(a));
        const auto &da = t.get(a), &db = t.get(b);
        QSeries rhs = db.sigma * db.sigma - da.sigma * da.sigma + Cyclotomic(2) * da.tau -
                      Cyclotomic(2) * db.tau;
        rep.passed = (lhs - rhs).is_zero();
        break;
    }
    case IdentityKind::CUSPONLY: {
        require_index(indices.size() == 3, "cusponly needs (a, b, k)");
        long a = indices[0], b = indices[1], k = indices[2];
        require_index(nonzero_mod(a, n) && nonzero_mod(b, n) && nonzero_mod(a - b, n) &&
                          nonzero_mod(a + b, n),
                      "cusponly needs a != +-b, both nonzero");
        require_index(nonzero_mod(k - (a - b), n) && nonzero_mod(k, n) &&
                          nonzero_mod(k - a, n) && nonzero_mod(k + b, n),
                      "cusponly needs k not in {a-b, 0, a, -b}");
        QSeries lhs = (t.sigma(k + b - a) - t.sigma(k) - t.sigma(b) + t.sigma(a)) *
                      (t.sigma(k + b) - t.sigma(k - a) - t.sigma(b) - t.sigma(a));
        const auto &da = t.get(a), &db = t.get(b);
        QSeries pa = da.sigma * da.sigma - Cyclotomic(2) * da.tau;
        QSeries pb = db.sigma * db.sigma - Cyclotomic(2) * db.tau;
        rep.passed = (lhs - (pb - pa)).is_zero();
        break;
    }
    case IdentityKind::BK: {
        require_index(indices.size() == 1, "bk needs (k)");
        long k = indices[0];
        for (long bad : {-3L, -1L, 0L, 2L})
            require_index(nonzero_mod(k - bad, n), "bk needs k not in {-3,-1,0,2}");
        // cross-multiplied form of the two ratio expressions
        QSeries lhs = (t.sigma(4) - Cyclotomic(2) * t.sigma(3) + t.sigma(2)) *
                      (t.sigma(6) - t.sigma(3) - t.sigma(2) - t.sigma(1));
        QSeries rhs = (t.sigma(k + 1) - t.sigma(k) + t.sigma(2) - t.sigma(3)) *
                      (t.sigma(k + 3) - t.sigma(k - 2) - t.sigma(3) - t.sigma(2));
        rep.passed = (lhs - rhs).is_zero();
        break;
    }
    case IdentityKind::AK1: {
        require_index(indices.size() == 1, "ak1 needs (k)");
        long k = indices[0];
        for (long bad : {-3L, -2L, 0L, 1L})
            require_index(nonzero_mod(k - bad, n), "ak1 needs k not in {-3,-2,0,1}");
        QSeries lhs = (t.sigma(5) - Cyclotomic(2) * t.sigma(3) + t.sigma(1)) *
                      (t.sigma(6) - t.sigma(3) - t.sigma(2) - t.sigma(1));
        QSeries rhs = (t.sigma(k + 2) - t.sigma(k) + t.sigma(1) - t.sigma(3)) *
                      (t.sigma(k + 3) - t.sigma(k - 1) - t.sigma(3) - t.sigma(1));
        rep.passed = (lhs - rhs).is_zero();
        break;
    }
    case IdentityKind::RR: {
        require_index(indices.size() == 2, "rr needs (a, k)");
        long a = indices[0], k = indices[1];
        require_index(nonzero_mod(a, n) && nonzero_mod(k, n) && nonzero_mod(a + k, n),
                      "rr needs a, k, a+k nonzero");
        ZQSeries ra = r_series(n, mod_pos(a, n), kDefaultZPrec, t.qprec());
        ZQSeries rk = r_series(n, mod_pos(k, n), kDefaultZPrec, t.qprec());
        ZQSeries rak = r_series(n, mod_pos(a + k, n), kDefaultZPrec, t.qprec());
        QSeries s_sum = t.sigma(a) + t.sigma(k);
        ZQSeries residual = ra * rk + rak.z_derivative() - s_sum * rak;
        rep.zorder_checked = residual.ztrunc() - 1;
        rep.passed = residual.is_zero();
        break;
    }
    }
    detail << identity_kind_name(kind) << " residual zero to O(q^" << rep.qprec << ")";
    rep.detail = detail.str();
    return rep;
}

IdentityReport verify_identity(IdentityKind kind, long n, const std::vector<long>& indices,
                               int qprec) {
    LaurentTable t(n, qprec);
    return verify_identity(t, kind, indices);
}

} // namespace modmat
