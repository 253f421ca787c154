#pragma once

#include <map>
#include <vector>

#include "modmat/bipoly.hpp"
#include "modmat/geometry.hpp"

namespace modmat {

// Parameters (s,t) of the point chain. The non-degeneracy facts established
// alongside the closed forms: s, s-1, t-1, 1+s-t, 1-t+st, s-t all invertible.
template <class F>
struct ChainParams {
    F s, t;

    void validate() const {
        const F one(1);
        auto bad = [](const F& x) { return is_zero(x); };
        if (bad(s) || bad(s - one) || bad(t - one) || bad(one + s - t) ||
            bad(one - t + s * t) || bad(s - t))
            fail("ExcludedParameter", "chain parameters violate the non-degeneracy facts");
    }
};

// Plane cubic as its 10 coefficients, indexed by the degree-3 monomials in
// lex order: x1^3, x1^2x2, x1^2x3, x1x2^2, x1x2x3, x1x3^2, x2^3, x2^2x3,
// x2x3^2, x3^3.
inline constexpr int kCubicExponents[10][3] = {
    {3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
    {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}};

template <class F>
struct CubicForm {
    std::array<F, 10> c;

    // No F(int) constructions here so the coefficient type may be a ring
    // without integer embedding (q-series rows use this).
    F eval(const Point3<F>& p) const {
        F acc = c[0] - c[0]; // zero of the right shape
        for (int m = 0; m < 10; ++m) {
            if (is_zero(c[m])) continue;
            F term = c[m];
            for (int v = 0; v < 3; ++v)
                for (int e = 0; e < kCubicExponents[m][v]; ++e) term = term * p[v];
            acc += term;
        }
        return acc;
    }

    Point3<F> gradient(const Point3<F>& p) const {
        F zero = c[0] - c[0];
        Point3<F> g{zero, zero, zero};
        for (int m = 0; m < 10; ++m) {
            if (is_zero(c[m])) continue;
            for (int v = 0; v < 3; ++v) {
                int e = kCubicExponents[m][v];
                if (e == 0) continue;
                F base = c[m];
                for (int w = 0; w < 3; ++w) {
                    int pow = kCubicExponents[m][w] - (w == v ? 1 : 0);
                    for (int q = 0; q < pow; ++q) base = base * p[w];
                }
                F term = base;
                for (int rep = 1; rep < e; ++rep) term += base;
                g[v] += term;
            }
        }
        return g;
    }

    bool is_zero_form() const {
        for (const F& x : c)
            if (!is_zero(x)) return false;
        return true;
    }
};

// Monomial values of a point, in the order above (used by interpolation).
template <class F>
std::array<F, 10> cubic_monomials(const Point3<F>& p) {
    std::array<F, 10> row;
    for (int m = 0; m < 10; ++m) {
        F term(1);
        for (int v = 0; v < 3; ++v)
            for (int e = 0; e < kCubicExponents[m][v]; ++e) term = term * p[v];
        row[m] = term;
    }
    return row;
}

// Cleanup rule applied to every newly constructed chain point. For generic
// fields: scale the first nonzero coordinate to 1. For Q(s,t): keep the
// coordinates polynomial (clear denominators, strip content and common
// monomial factors) so the symbolic window stays small without gcds.
template <class F>
Point3<F> chain_cleanup(const Point3<F>& p) {
    return normalize_point(p);
}

inline Point3<BiRat> chain_cleanup(const Point3<BiRat>& p) {
    BiPoly n0 = p[0].num() * p[1].den() * p[2].den();
    BiPoly n1 = p[1].num() * p[0].den() * p[2].den();
    BiPoly n2 = p[2].num() * p[0].den() * p[1].den();
    // strip the largest common monomial s^i t^j
    constexpr int kInf = 1 << 20;
    auto mc0 = n0.is_zero() ? BiPoly::Monomial{kInf, kInf} : n0.monomial_content();
    auto mc1 = n1.is_zero() ? BiPoly::Monomial{kInf, kInf} : n1.monomial_content();
    auto mc2 = n2.is_zero() ? BiPoly::Monomial{kInf, kInf} : n2.monomial_content();
    BiPoly::Monomial mc{std::min({mc0.first, mc1.first, mc2.first}),
                        std::min({mc0.second, mc1.second, mc2.second})};
    if (mc.first > 0 || mc.second > 0) {
        n0 = n0.divide_monomial(mc);
        n1 = n1.divide_monomial(mc);
        n2 = n2.divide_monomial(mc);
    }
    // strip rational content common to the three coordinates
    auto gcd_rat = [](Rat a, Rat b) {
        if (a == 0) return b < 0 ? Rat(-b) : b;
        if (b == 0) return a < 0 ? Rat(-a) : a;
        Int gn, gl;
        mpz_gcd(gn.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
        mpz_lcm(gl.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
        Rat g(gn, gl);
        g.canonicalize();
        return g;
    };
    Rat c0 = n0.is_zero() ? Rat(0) : n0.content();
    Rat c1 = n1.is_zero() ? Rat(0) : n1.content();
    Rat c2 = n2.is_zero() ? Rat(0) : n2.content();
    Rat g = gcd_rat(gcd_rat(c0, c1), c2);
    if (g != 0 && g != 1) {
        Rat inv = Rat(1) / g;
        auto scale = [&](const BiPoly& q) {
            BiPoly out;
            for (const auto& [m, v] : q.terms()) out.set(m.first, m.second, v * inv);
            return out;
        };
        n0 = scale(n0);
        n1 = scale(n1);
        n2 = scale(n2);
    }
    return {BiRat(n0), BiRat(n1), BiRat(n2)};
}

// The chain window p_k for k in a contiguous range containing [-4, 5].
template <class F>
struct ChainWindow {
    ChainParams<F> params;
    int kmin = 0, kmax = 0;
    std::vector<Point3<F>> pts; // index k - kmin

    const Point3<F>& at(int k) const {
        if (k < kmin || k > kmax) fail("LabelOutOfRange", "chain window index");
        return pts[k - kmin];
    }
};

// Build the chain from the frame p_0..p_3 and the parameter points
// p_{-1} = (1:s:0), p_{-4} = (1:t:1); each further point is the meet of two
// lines through already known points whose index pairs sum correctly
// (downward (1, m-1) & (2, m-2), upward (-1, -m) & (-2, -(m-1))).
template <class F>
ChainWindow<F> chain_extend(const ChainParams<F>& params, int kmin, int kmax) {
    if (kmin > -4 || kmax < 5) fail("InvalidArgument", "chain window must contain [-4, 5]");
    params.validate();
    const F one(1), zero(0);
    std::map<int, Point3<F>> p;
    p[0] = {one, zero, zero};
    p[1] = {zero, one, zero};
    p[2] = {zero, zero, one};
    p[3] = {one, one, one};
    p[-1] = {one, params.s, zero};
    p[-4] = {one, params.t, one};

    auto meet = [&](int i1, int j1, int i2, int j2) {
        Point3<F> l1 = cross(p.at(i1), p.at(j1));
        Point3<F> l2 = cross(p.at(i2), p.at(j2));
        if (point_is_zero(l1) || point_is_zero(l2))
            fail("DegenerateIntersection", "chain line through coincident points");
        Point3<F> x = cross(l1, l2);
        if (point_is_zero(x))
            fail("DegenerateIntersection", "chain lines coincide");
        return chain_cleanup(x);
    };

    p[-3] = meet(1, 2, 0, 3);   // {-3,1,2}, {-3,0,3}
    p[-2] = meet(0, 2, -1, 3);  // {-2,0,2}, {-2,-1,3}
    p[4] = meet(-4, 0, -3, -1); // {-4,0,4}, {-3,-1,4}
    p[5] = meet(-3, -2, -4, -1);// {-3,-2,5}, {-4,-1,5}

    // p_target from the first two usable lines p_a v p_b with a + b = -target,
    // scanned in a fixed order. At n-periodic parameter values the leading
    // pairs may hit coincident points; the scan then moves on, so periodic
    // windows (the cusp chains) still extend.
    auto extend_to = [&](int target) {
        Point3<F> first_line{};
        bool have_first = false;
        int lo_have = p.begin()->first, hi_have = p.rbegin()->first;
        for (int a = (target < 0 ? 1 : -1);; target < 0 ? ++a : --a) {
            int b = -target - a;
            if (target < 0 && (a > hi_have || b < lo_have)) break;
            if (target > 0 && (a < lo_have || b > hi_have)) break;
            if (a == b || !p.count(a) || !p.count(b)) continue;
            Point3<F> line = cross(p.at(a), p.at(b));
            if (point_is_zero(line)) continue; // coincident points
            if (!have_first) {
                first_line = line;
                have_first = true;
                continue;
            }
            Point3<F> x = cross(first_line, line);
            if (point_is_zero(x)) continue; // same line twice
            p[target] = chain_cleanup(x);
            return;
        }
        fail("DegenerateIntersection",
             "no two usable lines for chain point " + std::to_string(target));
    };

    int lo = -4, hi = 5;
    while (lo > kmin || hi < kmax) {
        // the negative side is always one step ahead so the positive side
        // has its index pairs available
        extend_to(lo - 1);
        --lo;
        if (hi < kmax) {
            extend_to(hi + 1);
            ++hi;
        }
    }

    ChainWindow<F> w;
    w.params = params;
    w.kmin = kmin;
    w.kmax = kmax;
    for (int k = kmin; k <= kmax; ++k) w.pts.push_back(p.at(k));
    return w;
}

// The displayed cubic F_{s,t} through p_{-3},...,p_5.
template <class F>
CubicForm<F> cubic_through(const ChainParams<F>& params) {
    params.validate();
    const F& s = params.s;
    const F& t = params.t;
    const F one(1);
    CubicForm<F> f{{F(0), -(s * s), s * t, s, s * s - s - t, t * (one - s), F(0), one - s,
                    s - one, F(0)}};
    return f;
}

// Quartic of the node locus: -9s + 3s^2 + 5s^3 + s^4 + t + 10st - 11s^2t - t^2.
template <class F>
F node_residual(const ChainParams<F>& params) {
    const F& s = params.s;
    const F& t = params.t;
    F s2 = s * s;
    return F(-9) * s + F(3) * s2 + F(5) * s2 * s + s2 * s2 + t + F(10) * s * t -
           F(11) * s2 * t - t * t;
}

// The singular point of the nodal cubic, valid on the node locus.
template <class F>
Point3<F> singular_point(const ChainParams<F>& params) {
    const F& s = params.s;
    const F& t = params.t;
    F s2 = s * s;
    F d1 = F(4) - s + s2 - F(3) * t;
    F d2 = (s - F(1)) * d1;
    if (is_zero(d1) || is_zero(d2))
        fail("DenominatorVanishes", "singular point formula degenerates");
    F x2 = (F(3) * s + F(4) * s2 + s2 * s + t - F(8) * s * t) / d1;
    F x3 = (F(5) * s - F(6) * s2 + s2 * s - t + F(2) * s * t) / d2;
    return {F(1), x2, x3};
}

// Rational parametrization of the node locus.
template <class F>
ChainParams<F> param_r(const F& r) {
    F r2 = r * r;
    F den = F(5) * r2 - F(1);
    if (is_zero(den)) fail("PoleOfParametrization", "5r^2 - 1 vanishes");
    F s = (r2 - F(1)) / den;
    F t = F(8) * (r - F(3) * r2 + F(4) * r2 * r2) / (den * den);
    ChainParams<F> p{s, t};
    p.validate();
    return p;
}

// Double cover of the node locus picking the branches at the node.
template <class F>
ChainParams<F> param_w(const F& w) {
    F w2 = w * w;
    F den = F(1) + F(10) * w2 + F(5) * w2 * w2;
    if (is_zero(den)) fail("PoleOfParametrization", "1 + 10w^2 + 5w^4 vanishes");
    F s = (w2 - F(1)) * (F(3) + w2) / den;
    F t = F(32) * w2 * w2 * (F(1) + w2) * (F(3) + w2) / (den * den);
    ChainParams<F> p{s, t};
    p.validate();
    return p;
}

// Parametrization of the smooth locus of the nodal cubic at param_w(w);
// v = 1 gives p_0 and v = (w-1)/(w+1) gives p_1. Returned with denominators
// cleared (the affine x1 = 1 form degenerates exactly at p_1, where the
// second coordinate's denominator 1+v-w+vw vanishes).
template <class F>
Point3<F> smooth_param(const F& v, const F& w) {
    const F one(1), two(2), three(3), four(4);
    F w2 = w * w;
    F a = one + v - w + v * w;
    F b = -one - v - three * w + three * v * w - three * w2 - three * v * w2 - w2 * w +
          v * w2 * w;
    F c = one + F(10) * w2 + F(5) * w2 * w2;
    F d = -one + v + two * w + two * v * w - w2 + v * w2;
    F e = -one + v - two * w - two * v * w - w2 + v * w2;
    F g = -one - v - w + v * w;
    F n2 = four * (v - one) * (w - one) * w2 * (one + w) * (three + w2) * e;
    F n3 = (v - one) * (w - one) * (w - one) * (one + w) * (one + w) * g * (three + w2);
    F d3 = two * (one + w2) * d;
    // x = (1 : n2/(a b c) : n3/(d3 b)); clear and drop the shared factor b
    Point3<F> x{a * b * c * d3, n2 * d3, n3 * a * c};
    if (point_is_zero(x))
        fail("DenominatorVanishes", "smooth-locus parametrization degenerates");
    return chain_cleanup(x);
}

// Residuals of the n-periodicity conditions p_k = p_{k+n} for k = 0..3:
// per k the two 2x2 minors (columns 01 and 02) of the stacked 2x3 matrix.
template <class F>
std::vector<F> periodicity_residual(const ChainParams<F>& params, int n) {
    if (n < 10) fail("InvalidArgument", "periodicity check requires n >= 10");
    ChainWindow<F> w = chain_extend(params, -4, n + 3);
    std::vector<F> out;
    for (int k = 0; k <= 3; ++k) {
        const Point3<F>& a = w.at(k);
        const Point3<F>& b = w.at(k + n);
        out.push_back(a[0] * b[1] - a[1] * b[0]);
        out.push_back(a[0] * b[2] - a[2] * b[0]);
    }
    return out;
}

// Third intersection point of the line through p and q (tangent when p = q)
// with the cubic. The restriction of the cubic to the parametrized line is
// factored exactly, so 2-point intersections are handled by the quotient.
template <class F>
Point3<F> third_intersection(const CubicForm<F>& cubic, const Point3<F>& p,
                             const Point3<F>& q) {
    if (!is_zero(cubic.eval(p)) || !is_zero(cubic.eval(q)))
        fail("NotOnCurve", "third_intersection input not on the cubic");
    bool tangent = proj_equal(p, q);
    Point3<F> q2 = q;
    if (tangent) {
        // pick any second point on the tangent line at p
        Point3<F> grad = cubic.gradient(p);
        if (point_is_zero(grad)) fail("SingularInput", "tangent at a singular point");
        // a point on {grad . x = 0} independent of p: grad x e_i for suitable i
        for (int i = 0; i < 3; ++i) {
            Point3<F> e{F(0), F(0), F(0)};
            e[i] = F(1);
            Point3<F> cand = cross(grad, e);
            if (!point_is_zero(cand) && !proj_equal(cand, p)) {
                q2 = cand;
                break;
            }
        }
        if (proj_equal(q2, p)) fail("DegenerateIntersection", "could not span tangent line");
    }
    // Restrict: F(mu p + la q2) = c0 mu^3 + c1 mu^2 la + c2 mu la^2 + c3 la^3
    // with c0 = F(p) = 0; extract c1, c2 from two evaluations.
    auto fval = [&](long mu, long la) {
        Point3<F> x{F(mu) * p[0] + F(la) * q2[0], F(mu) * p[1] + F(la) * q2[1],
                    F(mu) * p[2] + F(la) * q2[2]};
        return cubic.eval(x);
    };
    const F two(2);
    F c3 = cubic.eval(q2);
    F f1 = fval(1, 1);  // c1 + c2 + c3
    F f2 = fval(1, -1); // -c1 + c2 - c3
    F c2 = (f1 + f2) / two;
    F c1 = (f1 - f2) / two - c3;
    if (tangent) {
        // q2 is off the curve but on the tangent, so c1 = grad(p).q2 = 0 and
        // la^2 divides the restriction: third root (mu : la) = (c3 : -c2).
        if (is_zero(c2) && is_zero(c3))
            fail("DegenerateIntersection", "line lies in the cubic");
        if (is_zero(c2)) return p; // triple contact: inflection point
        Point3<F> r{c3 * p[0] - c2 * q2[0], c3 * p[1] - c2 * q2[1], c3 * p[2] - c2 * q2[2]};
        return chain_cleanup(r);
    }
    // c0 = c3 = 0: restriction is mu la (c1 mu + c2 la); third root (c2 : -c1)
    // (c1 = 0 or c2 = 0 degenerate to tangency at p resp. q, handled by the
    // same formula).
    if (is_zero(c1) && is_zero(c2))
        fail("DegenerateIntersection", "line lies in the cubic");
    Point3<F> r{c2 * p[0] - c1 * q2[0], c2 * p[1] - c1 * q2[1], c2 * p[2] - c1 * q2[2]};
    return chain_cleanup(r);
}

// Chord-tangent addition with neutral flex o: p + q = third(third(p, q), o).
template <class F>
Point3<F> chord_tangent_add(const CubicForm<F>& cubic, const Point3<F>& p,
                            const Point3<F>& q, const Point3<F>& o) {
    for (const Point3<F>* x : {&p, &q, &o}) {
        if (!is_zero(cubic.eval(*x))) fail("NotOnCurve", "point not on the cubic");
        if (point_is_zero(cubic.gradient(*x))) fail("SingularInput", "point is singular");
    }
    // o must be a flex: the tangent at o meets the cubic only at o
    if (!proj_equal(third_intersection(cubic, o, o), o))
        fail("NonFlexNeutral", "neutral element is not an inflection point");
    Point3<F> r = third_intersection(cubic, p, q);
    return third_intersection(cubic, r, o);
}

// The ten 9x9 minors of the 9x10 interpolation matrix (rows: cubic-monomial
// values at the displayed representatives of p_{-3},...,p_5 over Q(s,t);
// columns in the lex monomial order above, one column dropped per minor).
std::array<BiRat, 10> interpolation_minors();

} // namespace modmat
