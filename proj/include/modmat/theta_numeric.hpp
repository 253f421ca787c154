#pragma once

#include <complex>

#include "modmat/errors.hpp"
#include "modmat/qseries.hpp"

namespace modmat {

using Cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Truncated triple-product evaluation of the Jacobi theta function
// theta(z, tau) = e^{pi i tau / 4} (2 sin pi z)
//                 prod (1 - q^l)(1 - q^l e^{2 pi i z})(1 - q^l e^{-2 pi i z}).
// Floating point; used only as a numerical oracle.
inline Cplx theta_numeric(Cplx z, Cplx tau, int terms) {
    if (terms < 1 || tau.imag() <= 0.0)
        fail("NonconvergentInput", "theta product needs Im(tau) > 0 and terms >= 1");
    const Cplx i(0.0, 1.0);
    Cplx q = std::exp(2.0 * kPi * i * tau);
    Cplx x = std::exp(2.0 * kPi * i * z);
    Cplx acc = std::exp(kPi * i * tau / 4.0) * 2.0 * std::sin(kPi * z);
    Cplx ql(1.0, 0.0);
    for (int l = 1; l <= terms; ++l) {
        ql *= q;
        acc *= (1.0 - ql) * (1.0 - ql * x) * (1.0 - ql / x);
    }
    return acc;
}

// (d/dz log theta)(z, tau) from the product form:
// pi cot(pi z) - 2 pi i sum_l [ q^l x / (1 - q^l x) - q^l / x / (1 - q^l / x) ].
inline Cplx theta_logderiv_numeric(Cplx z, Cplx tau, int terms) {
    if (terms < 1 || tau.imag() <= 0.0)
        fail("NonconvergentInput", "theta product needs Im(tau) > 0 and terms >= 1");
    const Cplx i(0.0, 1.0);
    Cplx q = std::exp(2.0 * kPi * i * tau);
    Cplx x = std::exp(2.0 * kPi * i * z);
    Cplx acc = kPi * std::cos(kPi * z) / std::sin(kPi * z);
    Cplx ql(1.0, 0.0);
    for (int l = 1; l <= terms; ++l) {
        ql *= q;
        acc += 2.0 * kPi * i * (-(ql * x) / (1.0 - ql * x) + (ql / x) / (1.0 - ql / x));
    }
    return acc;
}

// Weierstrass P from the second log-derivative of the theta product:
// P(z) = pi^2/sin^2(pi z) - pi^2/3
//        + (2 pi i)^2 sum_l [ q^l x/(1-q^l x)^2 + q^l x^{-1}/(1-q^l x^{-1})^2
//                             - 2 q^l/(1-q^l)^2 ].
inline Cplx wp_numeric(Cplx z, Cplx tau, int terms) {
    if (terms < 1 || tau.imag() <= 0.0)
        fail("NonconvergentInput", "needs Im(tau) > 0 and terms >= 1");
    const Cplx i(0.0, 1.0);
    Cplx q = std::exp(2.0 * kPi * i * tau);
    Cplx x = std::exp(2.0 * kPi * i * z);
    Cplx s = std::sin(kPi * z);
    Cplx acc = kPi * kPi / (s * s) - kPi * kPi / 3.0;
    const Cplx factor = -(2.0 * kPi) * (2.0 * kPi); // (2 pi i)^2
    Cplx ql(1.0, 0.0);
    for (int l = 1; l <= terms; ++l) {
        ql *= q;
        Cplx a = ql * x / ((1.0 - ql * x) * (1.0 - ql * x));
        Cplx b = (ql / x) / ((1.0 - ql / x) * (1.0 - ql / x));
        Cplx c = ql / ((1.0 - ql) * (1.0 - ql));
        acc += factor * (a + b - 2.0 * c);
    }
    return acc;
}

// d/dz of the above.
inline Cplx wp_prime_numeric(Cplx z, Cplx tau, int terms) {
    if (terms < 1 || tau.imag() <= 0.0)
        fail("NonconvergentInput", "needs Im(tau) > 0 and terms >= 1");
    const Cplx i(0.0, 1.0);
    Cplx q = std::exp(2.0 * kPi * i * tau);
    Cplx x = std::exp(2.0 * kPi * i * z);
    Cplx s = std::sin(kPi * z);
    Cplx acc = -2.0 * kPi * kPi * kPi * std::cos(kPi * z) / (s * s * s);
    const Cplx factor = -(2.0 * kPi) * (2.0 * kPi) * (2.0 * kPi * i); // (2 pi i)^3
    Cplx ql(1.0, 0.0);
    for (int l = 1; l <= terms; ++l) {
        ql *= q;
        Cplx d1 = 1.0 - ql * x, d2 = 1.0 - ql / x;
        Cplx a = ql * x * (1.0 + ql * x) / (d1 * d1 * d1);
        Cplx b = -(ql / x) * (1.0 + ql / x) / (d2 * d2 * d2);
        acc += factor * (a + b);
    }
    return acc;
}

// Evaluate a q-series numerically at q = e^{2 pi i tau}, zeta_n = e^{2 pi i / n}.
inline Cplx qseries_eval_numeric(const QSeries& s, Cplx tau) {
    const Cplx i(0.0, 1.0);
    Cplx q = std::exp(2.0 * kPi * i * tau);
    Cplx acc = 0.0, qk = 1.0;
    for (int k = 0; k < s.prec(); ++k) {
        if (!s[k].is_zero()) acc += s[k].to_complex() * qk;
        qk *= q;
    }
    return acc;
}

} // namespace modmat
