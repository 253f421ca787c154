#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "modmat/errors.hpp"
#include "modmat/numtheory.hpp"

namespace modmat {

// Univariate polynomial over Q, dense, index = power.
using UPoly = std::vector<Rat>;

// Phi_n, monic of degree phi(n), via Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d.
UPoly cyclotomic_polynomial(long n);

// Shared immutable data for one cyclotomic order: Phi_n, reduction rows for
// x^{deg+j} (j = 0..deg-2) and the full power table zeta^m (m = 0..n-1).
struct CycloContext {
    long n = 1;
    long deg = 1;
    UPoly phi;                              // size deg+1, monic
    std::vector<std::vector<Rat>> redtab;   // x^{deg+j} mod Phi_n
    std::vector<std::vector<Rat>> zetapow;  // zeta^m as coefficient vector
};

const CycloContext* cyclo_context(long n); // cached, thread-safe

// Element of Q(zeta_n), stored as a vector of phi(n) rationals modulo Phi_n.
// Representation is canonical: equality is coefficient-wise. Elements with a
// null context are plain rationals (order 1) and mix freely with any order.
class Cyclotomic {
public:
    Cyclotomic() : c_(1) {}
    Cyclotomic(long v) : c_(1) { c_[0] = v; }
    Cyclotomic(const Rat& v) : c_(1) { c_[0] = v; }

    static Cyclotomic zero(long n) { return Cyclotomic(*cyclo_context(n)); }
    static Cyclotomic one(long n) {
        Cyclotomic z(*cyclo_context(n));
        z.c_[0] = 1;
        return z;
    }
    // zeta_n^k
    static Cyclotomic zeta(long n, long k = 1);
    static Cyclotomic from_coeffs(long n, std::vector<Rat> coeffs);

    long order() const { return ctx_ ? ctx_->n : 1; }
    long degree() const { return ctx_ ? ctx_->deg : 1; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const; // lies in Q
    Rat rational_value() const; // requires is_rational()

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    Cyclotomic inverse() const; // throws DivisionByZero on zero
    Cyclotomic pow(long e) const;

    // Field automorphism zeta -> zeta^u, gcd(u, n) = 1.
    Cyclotomic galois(long u) const;

    // Promote a rational scalar into Q(zeta_n); identity if already there.
    Cyclotomic in_order(long n) const;

    // Numerical image under zeta_n -> exp(2*pi*i/n).
    std::complex<double> to_complex() const;

    // LCM of coefficient denominators (for clearing to integral coordinates).
    Int denominator_lcm() const;

private:
    explicit Cyclotomic(const CycloContext& ctx) : ctx_(&ctx), c_(ctx.deg) {}
    static void align(Cyclotomic& a, Cyclotomic& b);

    const CycloContext* ctx_ = nullptr; // null: rational scalar
    std::vector<Rat> c_;               // size degree()
};

std::string to_string(const Cyclotomic& z);

} // namespace modmat
