#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modmat/chain.hpp"
#include "modmat/cusps.hpp"

using namespace modmat;

namespace {

ChainParams<BiRat> symbolic_params() { return {BiRat::var_s(), BiRat::var_t()}; }

Point3<BiRat> pt(BiRat a, BiRat b, BiRat c) { return {std::move(a), std::move(b), std::move(c)}; }

} // namespace

TEST_CASE("chain closed forms p_-4..p_5 as exact rational-function identities") {
    auto w = chain_extend(symbolic_params(), -4, 5);
    BiRat s = BiRat::var_s(), t = BiRat::var_t(), one(1), zero(0);

    CHECK(proj_equal(w.at(-1), pt(one, s, zero)));
    CHECK(proj_equal(w.at(-2), pt(one, zero, s / (s - one))));
    CHECK(proj_equal(w.at(-3), pt(zero, one, one)));
    CHECK(proj_equal(w.at(-4), pt(one, t, one)));
    CHECK(proj_equal(w.at(4), pt(one, s * t / (t - one), s / (t - one))));
    CHECK(proj_equal(w.at(5), pt(one, s * (t - one) / ((s - one) * (one + s - t)),
                                 s * s / ((s - one) * (one + s - t)))));
    for (int k = 0; k <= 3; ++k) {
        Point3<BiRat> frame{zero, zero, zero};
        frame[k == 3 ? 0 : k] = one;
        if (k == 3) frame = pt(one, one, one);
        CHECK(proj_equal(w.at(k), frame));
    }
}

TEST_CASE("window collinearity: every integer triple i+j+k=0 inside [-7,8]") {
    auto w = chain_extend(symbolic_params(), -7, 8);
    for (int i = w.kmin; i <= w.kmax; ++i)
        for (int j = i + 1; j <= w.kmax; ++j) {
            int k = -i - j;
            if (k <= j || k > w.kmax) continue;
            CHECK(det3_points(w.at(i), w.at(j), w.at(k)).is_zero());
        }
}

TEST_CASE("cubic vanishes on chain points -4..8 symbolically, and -7..8") {
    auto params = symbolic_params();
    auto w = chain_extend(params, -7, 8);
    auto f = cubic_through(params);
    for (int k = -7; k <= 8; ++k) CHECK(f.eval(w.at(k)).is_zero());
}

TEST_CASE("cubic coefficient spot checks") {
    // F(p_0) = F(1:0:0) = 0: no x1^3 monomial
    ChainParams<Rat> p{2, 5};
    auto f = cubic_through(p);
    CHECK(f.c[0] == 0);
    CHECK(f.eval(Point3<Rat>{1, 0, 0}) == 0);
    // coefficient of x1 x2 x3 at (s,t) = (2,5) is s^2 - s - t = -3
    CHECK(f.c[4] == -3);
    // F(p_4) = 0 at (2,5) by direct substitution
    auto w = chain_extend(p, -4, 5);
    CHECK(f.eval(w.at(4)) == 0);
    // partials at p_0 are (0, -s^2, st)
    auto g = f.gradient(Point3<Rat>{1, 0, 0});
    CHECK(g[0] == 0);
    CHECK(g[1] == -4);
    CHECK(g[2] == 10);
}

TEST_CASE("det_{-2,1,4} = s(s-t)/((s-1)(t-1)) on displayed representatives") {
    BiRat s = BiRat::var_s(), t = BiRat::var_t(), one(1), zero(0);
    auto d = det3_points(pt(one, zero, s / (s - one)), pt(zero, one, zero),
                         pt(one, s * t / (t - one), s / (t - one)));
    CHECK(d == s * (s - t) / ((s - one) * (t - one)));
}

TEST_CASE("9x9 interpolation minor matches the closed form up to sign") {
    auto minors = interpolation_minors();
    BiRat s = BiRat::var_s(), t = BiRat::var_t(), one(1);
    BiRat target = (s * s * s * s * s * s * s * s) * (one - t + s * t) /
                   ((s - one) * (s - one) * (s - one) * (s - one) * (one + s - t) *
                    (one + s - t) * (t - one));
    // Convention: rows k = -3..5 with the displayed representatives cleared
    // by (s-1), (t-1), (s-1)(1+s-t); columns in lex monomial order
    // x1^3 > x1^2 x2 > ... > x3^3. By Cramer the minor at a dropped column
    // is proportional to that cubic coefficient times a common factor, so
    // the x1^3, x2^3, x3^3 minors vanish, and the x2^2 x3 minor (index 7,
    // coefficient 1-s) equals the closed form times -1 under this row
    // orientation (as does index 8, since (-1)^7 (1-s) = (-1)^8 (s-1)).
    CHECK(minors[0].is_zero());
    CHECK(minors[6].is_zero());
    CHECK(minors[9].is_zero());
    REQUIRE_FALSE(minors[7].is_zero());
    BiRat ratio = minors[7] / target;
    REQUIRE(ratio.is_constant());
    CHECK(ratio.constant_value() == -1);
    CHECK(minors[8] == minors[7]);
    // the other nonzero minors follow the coefficients of F: e.g.
    // minor(x1^2 x2)/minor(x1 x2^2) = (-1)(-s^2) / ((-1) s) = -s
    CHECK(minors[1] == minors[3] * (BiRat(0) - s));
}

TEST_CASE("node locus: parametrizations compose to zero and samples") {
    // r = 3 -> (2/11, 150/121), frozen from direct substitution
    auto p3 = param_r<Rat>(Rat(3));
    CHECK(p3.s == Rat(2, 11));
    CHECK(p3.t == Rat(150, 121));
    CHECK(node_residual(p3) == 0);

    // (2,5) is off the locus
    CHECK(node_residual(ChainParams<Rat>{2, 5}) != 0);

    // t = 0 slice of the quartic: -9s + 3s^2 + 5s^3 + s^4
    for (long sv : {2L, 3L, 7L}) {
        Rat s(sv);
        CHECK(node_residual(ChainParams<Rat>{s, Rat(0)}) ==
              -9 * s + 3 * s * s + 5 * s * s * s + s * s * s * s);
    }

    // node_residual(param_r(r)) = 0 identically as a rational function in r
    BiRat r = BiRat::var_s();
    CHECK(node_residual(param_r<BiRat>(r)).is_zero());
    // same for the double cover in w
    BiRat w = BiRat::var_t();
    CHECK(node_residual(param_w<BiRat>(w)).is_zero());

    // w = 2 -> s = 21/121 by direct substitution (denominator 1+40+80)
    auto pw = param_w<Rat>(Rat(2));
    CHECK(pw.s == Rat(21, 121));
    CHECK(node_residual(pw) == 0);
    // even in w
    auto pwm = param_w<Rat>(Rat(-2));
    CHECK(pwm.s == pw.s);
    CHECK(pwm.t == pw.t);

    // r = 0 gives s = 1: excluded
    CHECK_THROWS_AS(param_r<Rat>(Rat(0)), Error);
}

TEST_CASE("singular point: gradient vanishes on the locus, w-form agrees") {
    for (long rv : {3L, 4L, 5L, 7L, 9L}) {
        auto p = param_r<Rat>(Rat(rv));
        REQUIRE(node_residual(p) == 0);
        auto sp = singular_point(p);
        auto f = cubic_through(p);
        CHECK(f.eval(sp) == 0);
        auto g = f.gradient(sp);
        CHECK(point_is_zero(g));
    }
    // p_0 is never singular: partials (0, -s^2, st)
    auto f25 = cubic_through(ChainParams<Rat>{2, 5});
    CHECK_FALSE(point_is_zero(f25.gradient(Point3<Rat>{1, 0, 0})));

    // displayed w-form of the singular point
    for (long wv : {2L, 3L, 5L}) {
        Rat w(wv);
        auto p = param_w<Rat>(w);
        auto sp = singular_point(p);
        Rat w2 = w * w;
        Rat den = 1 + 10 * w2 + 5 * w2 * w2;
        Point3<Rat> expect{1, 4 * w2 * (3 + w2) / den, (3 + w2) / (2 * (1 + w2))};
        CHECK(proj_equal(sp, expect));
    }
}

TEST_CASE("smooth-locus parametrization") {
    // v = 1 gives p_0
    CHECK(proj_equal(smooth_param<Rat>(Rat(1), Rat(2)), Point3<Rat>{1, 0, 0}));
    // v = (w-1)/(w+1) gives p_1 = (0:1:0) at w = 2
    CHECK(proj_equal(smooth_param<Rat>(Rat(1, 3), Rat(2)), Point3<Rat>{0, 1, 0}));
    // F(smooth_param(v,w)) = 0 as a rational identity in (v, w)
    BiRat v = BiRat::var_s(), w = BiRat::var_t();
    auto params = param_w<BiRat>(w);
    auto f = cubic_through(params);
    CHECK(f.eval(smooth_param<BiRat>(v, w)).is_zero());
}

TEST_CASE("periodicity residual: generic parameters are not periodic") {
    auto res = periodicity_residual(ChainParams<Rat>{2, 5}, 10);
    CHECK(res.size() == 8);
    bool any_nonzero = false;
    for (const Rat& x : res) any_nonzero |= (x != 0);
    CHECK(any_nonzero);
}

TEST_CASE("periodicity residual vanishes at the cusp parameters, n = 10") {
    // (s, t) from the frame identification of cusp_config(10, 1):
    // p_{n-1} = (1:s:0), p_{n-4} = (1:t:1); the chain is then 10-periodic
    auto cfg = cusp_config(10, 1);
    ChainParams<Cyclotomic> params{cfg.points[9][1], cfg.points[6][1]};
    auto res = periodicity_residual(params, 10);
    for (const Cyclotomic& x : res) CHECK(x.is_zero());
    // and the reconstructed window reproduces the configuration itself
    auto w = chain_extend(params, -4, 13);
    for (int k = 0; k < 10; ++k) CHECK(proj_equal(w.at(k), cfg.points[k]));
}

TEST_CASE("chord-tangent group law on the smooth cubic at (2,5)") {
    ChainParams<Rat> params{2, 5};
    auto f = cubic_through(params);
    auto w = chain_extend(params, -10, 11);
    const Point3<Rat> o = w.at(0);

    // neutral element: p + O = p
    for (int k : {-5, -1, 1, 4, 7}) {
        auto sum = chord_tangent_add(f, w.at(k), o, o);
        CHECK(proj_equal(sum, w.at(k)));
    }
    // subgroup structure: p_i + p_j = p_{i+j}
    for (auto [i, j] : std::vector<std::pair<int, int>>{
             {1, 1}, {2, 3}, {-4, 7}, {5, 6}, {-7, -3}, {4, 4}}) {
        auto sum = chord_tangent_add(f, w.at(i), w.at(j), o);
        CHECK(proj_equal(sum, w.at(i + j)));
    }
    // commutativity and associativity on sampled exact triples
    std::mt19937 rng(8128);
    std::uniform_int_distribution<int> pick(-9, 10);
    for (int iter = 0; iter < 20; ++iter) {
        auto p = w.at(pick(rng));
        auto q = w.at(pick(rng));
        auto r = w.at(pick(rng));
        CHECK(proj_equal(chord_tangent_add(f, p, q, o), chord_tangent_add(f, q, p, o)));
        auto left = chord_tangent_add(f, chord_tangent_add(f, p, q, o), r, o);
        auto right = chord_tangent_add(f, p, chord_tangent_add(f, q, r, o), o);
        CHECK(proj_equal(left, right));
    }
    // error paths
    CHECK_THROWS_AS(chord_tangent_add(f, Point3<Rat>{1, 1, 0}, o, o), Error);
    // non-flex neutral: p_1 is not an inflection point of this cubic
    CHECK_THROWS_AS(chord_tangent_add(f, o, o, w.at(1)), Error);
}
