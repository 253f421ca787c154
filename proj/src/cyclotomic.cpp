#include "modmat/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace modmat {

namespace {

UPoly upoly_trim(UPoly f) {
    while (f.size() > 1 && f.back() == 0) f.pop_back();
    return f;
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
    UPoly c(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return upoly_trim(c);
}

// Exact quotient a / b (remainder must vanish).
UPoly upoly_div_exact(UPoly a, const UPoly& b) {
    a = upoly_trim(a);
    if (a.size() < b.size()) {
        if (a.size() == 1 && a[0] == 0) return a;
        fail("InternalError", "non-exact univariate division");
    }
    UPoly q(a.size() - b.size() + 1);
    const Rat& lead = b.back();
    for (long i = (long)q.size() - 1; i >= 0; --i) {
        Rat coef = a[i + b.size() - 1] / lead;
        q[i] = coef;
        if (coef == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) a[i + j] -= coef * b[j];
    }
    for (const Rat& r : a)
        if (r != 0) fail("InternalError", "non-exact univariate division");
    return q;
}

// Division with remainder, both over Q.
void upoly_divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    r = upoly_trim(a);
    UPoly bb = upoly_trim(b);
    if (r.size() < bb.size()) {
        q = UPoly{Rat(0)};
        return;
    }
    q.assign(r.size() - bb.size() + 1, Rat(0));
    const Rat& lead = bb.back();
    for (long i = (long)q.size() - 1; i >= 0; --i) {
        Rat coef = r[i + bb.size() - 1] / lead;
        q[i] = coef;
        if (coef == 0) continue;
        for (size_t j = 0; j < bb.size(); ++j) r[i + j] -= coef * bb[j];
    }
    r = upoly_trim(r);
}

std::mutex g_ctx_mutex;
std::map<long, std::unique_ptr<CycloContext>> g_contexts;

} // namespace

UPoly cyclotomic_polynomial(long n) {
    if (n < 1) fail("InvalidArgument", "cyclotomic_polynomial needs n >= 1");
    if (n == 1) return UPoly{Rat(-1), Rat(1)};
    // (x^n - 1) divided by all proper Phi_d
    UPoly f(n + 1);
    f[0] = -1;
    f[n] = 1;
    for (long d : divisors(n)) {
        if (d == n) continue;
        f = upoly_div_exact(f, cyclotomic_polynomial(d));
    }
    return f;
}

const CycloContext* cyclo_context(long n) {
    std::lock_guard<std::mutex> lock(g_ctx_mutex);
    auto it = g_contexts.find(n);
    if (it != g_contexts.end()) return it->second.get();

    auto ctx = std::make_unique<CycloContext>();
    ctx->n = n;
    ctx->phi = cyclotomic_polynomial(n);
    ctx->deg = (long)ctx->phi.size() - 1;
    const long d = ctx->deg;

    // x^d mod Phi = -(lower part of Phi); then x^{d+j} = x * x^{d+j-1} reduced.
    std::vector<Rat> cur(d);
    for (long i = 0; i < d; ++i) cur[i] = -ctx->phi[i];
    ctx->redtab.push_back(cur);
    for (long j = 1; j <= d - 2; ++j) {
        std::vector<Rat> nxt(d);
        Rat top = cur[d - 1];
        for (long i = d - 1; i >= 1; --i) nxt[i] = cur[i - 1];
        nxt[0] = 0;
        if (top != 0)
            for (long i = 0; i < d; ++i) nxt[i] += top * ctx->redtab[0][i];
        ctx->redtab.push_back(nxt);
        cur = nxt;
    }

    // zeta^m for m = 0..n-1
    std::vector<Rat> z(d);
    z[0] = 1;
    ctx->zetapow.push_back(z);
    for (long m = 1; m < n; ++m) {
        std::vector<Rat> nxt(d);
        Rat top = z[d - 1];
        for (long i = d - 1; i >= 1; --i) nxt[i] = z[i - 1];
        nxt[0] = 0;
        if (top != 0)
            for (long i = 0; i < d; ++i) nxt[i] += top * ctx->redtab[0][i];
        z = nxt;
        ctx->zetapow.push_back(z);
    }

    const CycloContext* raw = ctx.get();
    g_contexts.emplace(n, std::move(ctx));
    return raw;
}

Cyclotomic Cyclotomic::zeta(long n, long k) {
    if (n < 1) fail("InvalidArgument", "zeta order must be positive");
    const CycloContext* ctx = cyclo_context(n);
    Cyclotomic z(*ctx);
    z.c_ = ctx->zetapow[mod_pos(k, n)];
    return z;
}

Cyclotomic Cyclotomic::from_coeffs(long n, std::vector<Rat> coeffs) {
    const CycloContext* ctx = cyclo_context(n);
    if ((long)coeffs.size() != ctx->deg)
        fail("InvalidArgument", "coefficient vector length must be phi(n)");
    Cyclotomic z(*ctx);
    z.c_ = std::move(coeffs);
    return z;
}

bool Cyclotomic::is_zero() const {
    for (const Rat& r : c_)
        if (r != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyclotomic::rational_value() const {
    if (!is_rational()) fail("InvalidArgument", "element is not rational");
    return c_[0];
}

void Cyclotomic::align(Cyclotomic& a, Cyclotomic& b) {
    if (a.ctx_ == b.ctx_) return;
    if (a.ctx_ == nullptr) {
        Rat v = a.c_[0];
        a = Cyclotomic(*b.ctx_);
        a.c_[0] = v;
        return;
    }
    if (b.ctx_ == nullptr) {
        Rat v = b.c_[0];
        b = Cyclotomic(*a.ctx_);
        b.c_[0] = v;
        return;
    }
    fail("OrderMismatch", "cannot mix cyclotomic orders " + std::to_string(a.ctx_->n) +
                              " and " + std::to_string(b.ctx_->n));
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (Rat& x : r.c_) x = -x;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    Cyclotomic rhs = o;
    align(*this, rhs);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    Cyclotomic rhs = o;
    align(*this, rhs);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    Cyclotomic rhs = o;
    align(*this, rhs);
    if (ctx_ == nullptr) {
        c_[0] *= rhs.c_[0];
        return *this;
    }
    const long d = ctx_->deg;
    std::vector<Rat> prod(2 * d - 1);
    for (long i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (long j = 0; j < d; ++j) {
            if (rhs.c_[j] == 0) continue;
            prod[i + j] += c_[i] * rhs.c_[j];
        }
    }
    std::vector<Rat> out(prod.begin(), prod.begin() + d);
    for (long k = d; k <= 2 * d - 2; ++k) {
        if (prod[k] == 0) continue;
        const std::vector<Rat>& row = ctx_->redtab[k - d];
        for (long i = 0; i < d; ++i) out[i] += prod[k] * row[i];
    }
    c_ = std::move(out);
    return *this;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) fail("DivisionByZero", "inverse of zero cyclotomic element");
    if (ctx_ == nullptr) {
        Cyclotomic r;
        r.c_[0] = Rat(1) / c_[0];
        return r;
    }
    // Extended Euclid in Q[x]: u*f + v*Phi = gcd = const.
    UPoly r0 = ctx_->phi;
    UPoly r1 = upoly_trim(UPoly(c_.begin(), c_.end()));
    UPoly s0{Rat(0)}, s1{Rat(1)}; // coefficients of f
    while (!(r1.size() == 1 && r1[0] == 0)) {
        UPoly q, r;
        upoly_divmod(r0, r1, q, r);
        // s = s0 - q * s1
        UPoly qs = upoly_mul(q, s1);
        UPoly s(std::max(s0.size(), qs.size()));
        for (size_t i = 0; i < s.size(); ++i) {
            Rat v = 0;
            if (i < s0.size()) v += s0[i];
            if (i < qs.size()) v -= qs[i];
            s[i] = v;
        }
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = upoly_trim(s);
    }
    // r0 = gcd (nonzero constant since Phi_n is irreducible over Q)
    if (r0.size() != 1 || r0[0] == 0)
        fail("InternalError", "cyclotomic inverse: gcd not a nonzero constant");
    Rat g = r0[0];
    Cyclotomic inv(*ctx_);
    for (size_t i = 0; i < s0.size() && i < (size_t)ctx_->deg; ++i) inv.c_[i] = s0[i] / g;
    return inv;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) {
    Cyclotomic rhs = o;
    align(*this, rhs);
    return *this *= rhs.inverse();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic x = a, y = b;
    Cyclotomic::align(x, y);
    return x.c_ == y.c_;
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic base = *this;
    Cyclotomic acc = ctx_ ? Cyclotomic::one(ctx_->n) : Cyclotomic(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Cyclotomic Cyclotomic::galois(long u) const {
    if (ctx_ == nullptr) return *this;
    const long n = ctx_->n;
    if (!is_unit_mod(u, n)) fail("NotAUnit", "galois exponent must be a unit mod n");
    Cyclotomic out(*ctx_);
    for (long j = 0; j < ctx_->deg; ++j) {
        if (c_[j] == 0) continue;
        const std::vector<Rat>& zp = ctx_->zetapow[mod_pos(u * j, n)];
        for (long i = 0; i < ctx_->deg; ++i) out.c_[i] += c_[j] * zp[i];
    }
    return out;
}

Cyclotomic Cyclotomic::in_order(long n) const {
    if (order() == n) return *this;
    if (ctx_ != nullptr) fail("OrderMismatch", "cannot re-embed nontrivial cyclotomic element");
    Cyclotomic z = Cyclotomic::zero(n);
    z.c_[0] = c_[0];
    return z;
}

std::complex<double> Cyclotomic::to_complex() const {
    if (ctx_ == nullptr) return {c_[0].get_d(), 0.0};
    std::complex<double> acc = 0.0;
    const double two_pi_over_n = 2.0 * 3.14159265358979323846 / (double)ctx_->n;
    for (long j = 0; j < ctx_->deg; ++j) {
        if (c_[j] == 0) continue;
        acc += c_[j].get_d() * std::polar(1.0, two_pi_over_n * (double)j);
    }
    return acc;
}

Int Cyclotomic::denominator_lcm() const {
    Int l = 1;
    for (const Rat& r : c_) {
        Int den = r.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        l = l / g * den;
    }
    return l;
}

std::string to_string(const Cyclotomic& z) {
    std::ostringstream os;
    os << "[";
    const auto& c = z.coeffs();
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << c[i].get_str();
    }
    os << "]@" << z.order();
    return os.str();
}

} // namespace modmat
