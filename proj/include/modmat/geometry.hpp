#pragma once

#include <array>

#include "modmat/field.hpp"
#include "modmat/matrix.hpp"

namespace modmat {

template <class F>
using Point3 = std::array<F, 3>;

template <class F>
Point3<F> cross(const Point3<F>& a, const Point3<F>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class F>
F det3_points(const Point3<F>& p, const Point3<F>& q, const Point3<F>& r) {
    return p[0] * (q[1] * r[2] - q[2] * r[1]) - p[1] * (q[0] * r[2] - q[2] * r[0]) +
           p[2] * (q[0] * r[1] - q[1] * r[0]);
}

template <class F>
bool point_is_zero(const Point3<F>& p) {
    return is_zero(p[0]) && is_zero(p[1]) && is_zero(p[2]);
}

// Deterministic representative: first nonzero coordinate scaled to 1.
template <class F>
Point3<F> normalize_point(const Point3<F>& p) {
    for (int i = 0; i < 3; ++i) {
        if (!is_zero(p[i])) {
            F inv = F(1) / p[i];
            return {p[0] * inv, p[1] * inv, p[2] * inv};
        }
    }
    fail("InvalidArgument", "cannot normalize the zero point");
}

template <class F>
bool proj_equal(const Point3<F>& p, const Point3<F>& q) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!is_zero(p[i] * q[j] - p[j] * q[i])) return false;
    // also reject pairs where one is zero and the other not
    return point_is_zero(p) == point_is_zero(q);
}

template <class F>
Point3<F> apply_matrix(const Matrix<F>& m, const Point3<F>& p) {
    Point3<F> r{F(0), F(0), F(0)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i] += m(i, j) * p[j];
    return r;
}

} // namespace modmat
