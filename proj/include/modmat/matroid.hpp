#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "modmat/cyclotomic.hpp"
#include "modmat/geometry.hpp"

namespace modmat {

using Triple = std::array<int, 3>; // sorted ascending

// Rank-3 matroid on {0..ground_size-1}, given by its non-bases.
class Matroid3 {
public:
    Matroid3(int ground_size, std::vector<Triple> nonbases);

    int ground_size() const { return m_; }
    const std::vector<Triple>& nonbases() const { return nb_; }
    bool is_nonbasis(int a, int b, int c) const;

private:
    int m_;
    std::vector<Triple> nb_; // sorted, deduplicated
};

// T_n: atoms Z/nZ, non-bases the 3-subsets {i,j,k} with i+j+k = 0 mod n.
Matroid3 tn_matroid(int n);

enum class SpecialMatroid { T5prime, T6prime };

// The auxiliary matroids of the small-n remarks. Atoms are shifted to
// 0-based labels (paper lists them 1-based).
Matroid3 special_matroid(SpecialMatroid which);

template <class F>
struct Configuration {
    std::vector<Point3<F>> points;
    int size() const { return (int)points.size(); }
};

struct RealizationReport {
    std::vector<Triple> failed_nonbases;  // nonzero determinant at a non-basis
    std::vector<Triple> degenerate_bases; // zero determinant at a basis
    bool is_realization = false;
};

// --- scaling helpers so determinant tests run on cleared coordinates ---

inline Point3<Rat> clear_denominators(const Point3<Rat>& p) {
    Int l = 1;
    for (const Rat& x : p) {
        Int den = x.get_den(), g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        l = l / g * den;
    }
    Rat f(l);
    return {p[0] * f, p[1] * f, p[2] * f};
}

inline Point3<Cyclotomic> clear_denominators(const Point3<Cyclotomic>& p) {
    Int l = 1;
    for (const Cyclotomic& x : p) {
        Int den = x.denominator_lcm(), g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        l = l / g * den;
    }
    Cyclotomic f{Rat(l)};
    return {p[0] * f, p[1] * f, p[2] * f};
}

template <class F>
Point3<F> clear_denominators(const Point3<F>& p) {
    return p;
}

template <class F>
F det3(const Configuration<F>& c, int a, int b, int k) {
    const int m = c.size();
    if (a < 0 || a >= m || b < 0 || b >= m || k < 0 || k >= m)
        fail("LabelOutOfRange", "det3 label outside configuration");
    if (a == b || a == k || b == k) fail("LabelOutOfRange", "det3 labels must be distinct");
    return det3_points(c.points[a], c.points[b], c.points[k]);
}

template <class F>
RealizationReport check_realization(const Configuration<F>& c, const Matroid3& mat) {
    if (c.size() != mat.ground_size())
        fail("SizeMismatch", "configuration size differs from matroid ground size");
    std::vector<Point3<F>> pts;
    pts.reserve(c.size());
    for (const auto& p : c.points) pts.push_back(clear_denominators(p));
    RealizationReport rep;
    const int m = c.size();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k) {
                bool zero = is_zero(det3_points(pts[i], pts[j], pts[k]));
                bool nb = mat.is_nonbasis(i, j, k);
                if (nb && !zero) rep.failed_nonbases.push_back({i, j, k});
                if (!nb && zero) rep.degenerate_bases.push_back({i, j, k});
            }
    rep.is_realization = rep.failed_nonbases.empty() && rep.degenerate_bases.empty();
    return rep;
}

// Unique projective transformation sending the four given points of c to the
// canonical frame (1:0:0),(0:1:0),(0:0:1),(1:1:1); applied to all points.
template <class F>
Matrix<F> frame_transform(const Configuration<F>& c, const std::array<int, 4>& js) {
    // Columns of M are the first three points scaled so their sum is the
    // fourth; the inverse of M is the required transformation.
    Matrix<F> m(3, 3);
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) m(i, j) = c.points[js[j]][i];
    Matrix<F> rhs(3, 1);
    for (int i = 0; i < 3; ++i) rhs(i, 0) = c.points[js[3]][i];
    auto lam = linear_solve(m, rhs);
    if (!lam.solvable) fail("DegenerateFrame", "frame points are projectively degenerate");
    for (int j = 0; j < 3; ++j) {
        if (is_zero(lam.solution(j, 0)))
            fail("DegenerateFrame", "fourth frame point lies on a side of the triangle");
        for (int i = 0; i < 3; ++i) m(i, j) *= lam.solution(j, 0);
    }
    auto inv = m.inverse();
    if (!inv) fail("DegenerateFrame", "frame matrix not invertible");
    return *inv;
}

template <class F>
Configuration<F> apply_transform(const Matrix<F>& t, const Configuration<F>& c) {
    Configuration<F> out;
    out.points.reserve(c.size());
    for (const auto& p : c.points) out.points.push_back(normalize_point(apply_matrix(t, p)));
    return out;
}

template <class F>
Configuration<F> normalize_frame(const Configuration<F>& c, const std::array<int, 4>& js) {
    return apply_transform(frame_transform(c, js), c);
}

template <class F>
Configuration<F> normalized(Configuration<F> c) {
    for (auto& p : c.points) p = normalize_point(p);
    return c;
}

// Families of section 3: the closed-form realizations for n = 5..9.
// The parameter t is ignored for n = 5, 6. Excluded rational parameters are
// rejected (detection is over the field presented only). Points are stored
// with the first nonzero coordinate scaled to 1.
template <class F>
Configuration<F> small_family(int n, const F& t) {
    auto excluded = [&](std::initializer_list<long> bad) {
        for (long b : bad)
            if (t == F(b)) fail("ExcludedParameter", "parameter t excluded for this family");
    };
    const F one(1), zero(0);
    Configuration<F> c;
    switch (n) {
    case 5:
        c.points = {{zero, one, one}, {one, zero, zero}, {zero, one, zero},
                    {zero, zero, one}, {one, one, one}};
        break;
    case 6:
        c.points = {{one, zero, zero}, {zero, one, zero}, {zero, one, one},
                    {zero, zero, one}, {one, one, one},  {one, one, zero}};
        break;
    case 7:
        excluded({0, 1});
        c.points = {{one, zero, zero}, {zero, one, zero},   {zero, zero, one},
                    {one, one, one},   {zero, one, one},    {one, zero, t},
                    {t - one, t, zero}};
        break;
    case 8:
        excluded({0, 1, -1});
        c.points = {{one, zero, zero}, {zero, one, zero}, {one, one, one},
                    {zero, zero, one}, {zero, t, -one},   {one, zero, one},
                    {one, t, t},       {one, t, zero}};
        break;
    case 9:
        excluded({0, 1});
        c.points = {{one, zero, zero}, {zero, one, zero}, {one, one, one},
                    {zero, zero, one}, {t, t, t - one},   {zero, t, t - one},
                    {one, zero, one},  {one, t, t},       {one, t, zero}};
        break;
    default:
        fail("InvalidArgument", "small_family requires 5 <= n <= 9");
    }
    return normalized(std::move(c));
}

// Realizations of T_5' and T_6' (duals of the tangent-line arrangements).
template <class F>
Configuration<F> special_family(SpecialMatroid which, const F& t) {
    const F one(1), zero(0);
    Configuration<F> c;
    if (which == SpecialMatroid::T5prime) {
        for (long b : {0L, 1L, -1L})
            if (t == F(b)) fail("ExcludedParameter", "parameter excluded for T5'");
        c.points = {{one, zero, zero},
                    {zero, one, zero},
                    {zero, zero, one},
                    {one, one, one},
                    {t + one, one, one - t * t},
                    {t + one, one, t + one},
                    {zero, one, t + one}};
        return normalized(std::move(c));
    }
    // T6': rational zeros of x+1, x, 2x+1, x-1 (the quadratics have none)
    const F minus_half = F(-1) / F(2);
    const F bad[] = {F(0), F(1), F(-1), minus_half};
    for (const F& b : bad)
        if (t == b) fail("ExcludedParameter", "parameter excluded for T6'");
    std::vector<Point3<F>> six = {{zero, zero, one},     {zero, one, zero}, {-one, one, one},
                                  {t, zero, one},        {-t, one, zero},   {-t - one, one, one}};
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            Point3<F> line = cross(six[i], six[j]);
            if (point_is_zero(line)) fail("ExcludedParameter", "coincident points in T6' family");
            c.points.push_back(normalize_point(line));
        }
    return c;
}

// The unique projective transformation with gamma . a = b as labeled
// configurations, or nullopt. Throws NoFrame when a has no four points in
// general position.
template <class F>
std::optional<Matrix<F>> projective_equivalence(const Configuration<F>& a,
                                                const Configuration<F>& b) {
    if (a.size() != b.size()) fail("SizeMismatch", "configurations of different sizes");
    const int m = a.size();
    std::array<int, 4> frame{-1, -1, -1, -1};
    for (int i = 0; i < m && frame[0] < 0; ++i)
        for (int j = i + 1; j < m && frame[0] < 0; ++j)
            for (int k = j + 1; k < m && frame[0] < 0; ++k) {
                if (is_zero(det3_points(a.points[i], a.points[j], a.points[k]))) continue;
                for (int l = k + 1; l < m; ++l) {
                    if (is_zero(det3_points(a.points[i], a.points[j], a.points[l])) ||
                        is_zero(det3_points(a.points[i], a.points[k], a.points[l])) ||
                        is_zero(det3_points(a.points[j], a.points[k], a.points[l])))
                        continue;
                    frame = {i, j, k, l};
                    break;
                }
            }
    if (frame[0] < 0) fail("NoFrame", "no four points of a are in general position");
    Matrix<F> ta = frame_transform(a, frame);
    Matrix<F> tb;
    try {
        tb = frame_transform(b, frame);
    } catch (const Error& e) {
        return std::nullopt; // same labels degenerate in b: not equivalent
    }
    auto tb_inv = tb.inverse();
    if (!tb_inv) return std::nullopt;
    Matrix<F> gamma = *tb_inv * ta;
    for (int i = 0; i < m; ++i)
        if (!proj_equal(apply_matrix(gamma, a.points[i]), b.points[i])) return std::nullopt;
    return gamma;
}

} // namespace modmat
