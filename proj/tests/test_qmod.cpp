#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modmat/qmod.hpp"
#include "modmat/theta_numeric.hpp"

using namespace modmat;

TEST_CASE("sigma series: displayed constant and q^1 terms") {
    for (long n : {7L, 10L}) {
        for (long a = 1; a < n; ++a) {
            QSeries s = sigma_series(n, a, 6);
            Cyclotomic za = Cyclotomic::zeta(n, a);
            CHECK(s[0] == (za + Cyclotomic(1)) / (Cyclotomic(2) * (za - Cyclotomic(1))));
            CHECK(s[1] == -(za - Cyclotomic::zeta(n, -a)));
        }
    }
    CHECK_THROWS_AS(sigma_series(7, 0, 5), Error);
    CHECK_THROWS_AS(sigma_series(7, 14, 5), Error);
}

TEST_CASE("two sigma routes agree: log-derivative z^0 vs divisor sum") {
    const int qprec = 12;
    for (long n = 7; n <= 14; ++n)
        for (long a = 1; a < n; ++a) {
            ZQSeries ld = theta_logderiv(n, a, 3, qprec);
            CHECK((ld.coeff(0) - sigma_series(n, a, qprec)).is_zero());
        }
}

TEST_CASE("theta_logderiv reflection: index n-a gives the z-negated series") {
    const int qprec = 8, zprec = 5;
    const long n = 9;
    for (long a = 1; a < n; ++a) {
        ZQSeries ld = theta_logderiv(n, a, zprec, qprec);
        ZQSeries refl = theta_logderiv(n, n - a, zprec, qprec);
        for (int j = 0; j < zprec; ++j) {
            QSeries expect = (j % 2 == 0) ? -refl.coeff(j) : refl.coeff(j);
            CHECK((ld.coeff(j) - expect).is_zero());
        }
    }
}

TEST_CASE("r_series residue is exactly 1 and sigma matches") {
    const int qprec = 10;
    for (long n : {7L, 10L, 11L}) {
        for (long a = 1; a < n; ++a) {
            ZQSeries r = r_series(n, a, kDefaultZPrec, qprec);
            CHECK(r.zmin() == -1);
            QSeries residue = r.coeff(-1);
            CHECK((residue - (QSeries::constant(Cyclotomic(1), qprec) + QSeries(n, qprec)))
                      .is_zero());
            CHECK((r.coeff(0) - sigma_series(n, a, qprec)).is_zero());
        }
    }
}

TEST_CASE("laurent data symmetries: sigma odd, tau even, upsilon odd") {
    const int qprec = 10;
    for (long n : {10L, 13L}) {
        LaurentTable t(n, qprec);
        for (long a = 1; a <= n / 2; ++a) {
            const auto& da = t.get(a);
            const auto& dna = t.get(n - a);
            CHECK((da.sigma + dna.sigma).is_zero());
            CHECK((da.tau - dna.tau).is_zero());
            CHECK((da.upsilon + dna.upsilon).is_zero());
        }
    }
}

TEST_CASE("wp values: evenness and p-st route") {
    const int qprec = 10;
    const long n = 10;
    for (long a = 1; a < n; ++a) {
        auto [p, pp] = wp_value(n, a, qprec);
        auto [p2, pp2] = wp_value(n, n - a, qprec);
        CHECK((p - p2).is_zero());
        CHECK((pp + pp2).is_zero());
    }
}

TEST_CASE("Prop st for all admissible triples, n <= 14") {
    const int qprec = 8;
    for (long n = 7; n <= 14; ++n) {
        LaurentTable t(n, qprec);
        for (long a = 1; a < n; ++a)
            for (long b = a; b < n; ++b) {
                long c = mod_pos(-(a + b), n);
                if (c == 0 || c < b) continue;
                auto rep = verify_identity(t, IdentityKind::ST, {a, b, c});
                CHECK(rep.passed);
            }
    }
    CHECK_THROWS_AS(verify_identity(IdentityKind::ST, 10, {1, 2, 3}, 6), Error);
}

TEST_CASE("Prop main: k-independence and the closed value, n = 11") {
    const long n = 11;
    LaurentTable t(n, 12);
    long a = 2, b = 3;
    for (long k : {4L, 5L, 6L}) {
        auto rep = verify_identity(t, IdentityKind::MAIN, {a, b, k});
        CHECK(rep.passed);
    }
    CHECK_THROWS_AS(verify_identity(t, IdentityKind::MAIN, {2, 3, 0}), Error);
    CHECK_THROWS_AS(verify_identity(t, IdentityKind::MAIN, {2, 3, 2}), Error);
}

TEST_CASE("Cors bk and ak1 cross-multiplied, n = 11") {
    const long n = 11;
    LaurentTable t(n, 12);
    for (long k = 0; k < n; ++k) {
        bool bk_ok = true, ak_ok = true;
        for (long bad : {-3L, -1L, 0L, 2L})
            if (mod_pos(k - bad, n) == 0) bk_ok = false;
        for (long bad : {-3L, -2L, 0L, 1L})
            if (mod_pos(k - bad, n) == 0) ak_ok = false;
        if (bk_ok) CHECK(verify_identity(t, IdentityKind::BK, {k}).passed);
        if (ak_ok) CHECK(verify_identity(t, IdentityKind::AK1, {k}).passed);
    }
}

TEST_CASE("Prop rr: product vs derivative relation, n = 10") {
    LaurentTable t(10, 10);
    auto rep = verify_identity(t, IdentityKind::RR, {1, 2});
    CHECK(rep.passed);
    CHECK(rep.zorder_checked >= 3);
    auto rep2 = verify_identity(t, IdentityKind::RR, {3, 4});
    CHECK(rep2.passed);
    CHECK_THROWS_AS(verify_identity(t, IdentityKind::RR, {5, 5}), Error); // a+k = 0
}

TEST_CASE("Cor cusponly product identity equals wp difference") {
    LaurentTable t(11, 12);
    CHECK(verify_identity(t, IdentityKind::CUSPONLY, {1, 3, 5}).passed);
    CHECK(verify_identity(t, IdentityKind::CUSPONLY, {2, 4, 6}).passed);
    CHECK_THROWS_AS(verify_identity(t, IdentityKind::CUSPONLY, {2, 4, 7}), Error); // k = -b
}

TEST_CASE("numerical oracle: theta transformation properties") {
    const Cplx i(0.0, 1.0);
    Cplx tau = 1.1 * i;
    Cplx z(0.3, 0.0);
    const int terms = 60;
    CHECK(std::abs(theta_numeric(-z, tau, terms) + theta_numeric(z, tau, terms)) < 1e-12);
    // The product formula is 1-antiperiodic (the sine factor flips sign);
    // every quotient used downstream is 1-periodic.
    CHECK(std::abs(theta_numeric(z + 1.0, tau, terms) + theta_numeric(z, tau, terms)) <
          1e-12);
    Cplx lhs = theta_numeric(z + tau, tau, terms);
    Cplx rhs = -std::exp(-2.0 * kPi * i * z - kPi * i * tau) * theta_numeric(z, tau, terms);
    CHECK(std::abs(lhs - rhs) < 1e-10);
}

TEST_CASE("numerical oracle: sigma series matches theta log-derivative") {
    const Cplx i(0.0, 1.0);
    Cplx tau = 1.1 * i;
    const int qprec = 30, terms = 60;
    for (long n : {10L, 13L}) {
        for (long a : {1L, 2L}) {
            QSeries sig = sigma_series(n, a, qprec);
            Cplx series_val = qseries_eval_numeric(sig, tau);
            Cplx direct = theta_logderiv_numeric(Cplx((double)a / (double)n, 0.0), tau, terms) /
                          (2.0 * kPi * i);
            CHECK(std::abs(series_val - direct) < 1e-9);
        }
    }
}

TEST_CASE("numerical oracle: wp series value matches direct theta-based wp") {
    const Cplx i(0.0, 1.0);
    Cplx tau = 1.1 * i;
    const int qprec = 30, terms = 60;
    for (long n : {10L, 13L}) {
        for (long a : {1L, 2L, 3L}) {
            auto [p, pp] = wp_value(n, a, qprec);
            Cplx series_p = qseries_eval_numeric(p, tau) * std::pow(2.0 * kPi * i, 2.0);
            Cplx series_pp = qseries_eval_numeric(pp, tau) * std::pow(2.0 * kPi * i, 3.0);
            Cplx z((double)a / (double)n, 0.0);
            CHECK(std::abs(series_p - wp_numeric(z, tau, terms)) < 1e-9);
            CHECK(std::abs(series_pp - wp_prime_numeric(z, tau, terms)) < 1e-9);
        }
    }
}

TEST_CASE("wp series evaluation at tau = 6i/5 against the numeric oracle") {
    const Cplx i(0.0, 1.0);
    Cplx tau = 1.2 * i;
    auto [p, pp] = wp_value(10, 1, 30);
    Cplx series_p = qseries_eval_numeric(p, tau) * std::pow(2.0 * kPi * i, 2.0);
    CHECK(std::abs(series_p - wp_numeric(Cplx(0.1, 0.0), tau, 60)) < 1e-9);
}
