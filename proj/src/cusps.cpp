#include "modmat/cusps.hpp"

#include <algorithm>

namespace modmat {

namespace {

Cyclotomic zeta_pow(long n, long e) { return Cyclotomic::zeta(n, e); }

Cyclotomic one_minus(long n, long e) { return Cyclotomic(1) - zeta_pow(n, e); }

void require_unit(long a, long n) {
    if (!is_unit_mod(a, n)) fail("NotAUnit", "parameter must be a unit mod n");
}

} // namespace

Cyclotomic sigma_at_cusp(long n, long k, long c, long d) {
    CuspLabel{n, c, d}.validate();
    if (mod_pos(k, n) == 0) fail("ZeroIndex", "sigma_at_cusp needs k != 0 mod n");
    long kc = mod_pos(k * c, n);
    if (kc != 0) {
        // ({kc/n} - 1/2) as a rational scalar
        Rat v(kc, n);
        v -= Rat(1, 2);
        v.canonicalize();
        return Cyclotomic(v).in_order(n);
    }
    Cyclotomic zkd = zeta_pow(n, k * d);
    if ((zkd - Cyclotomic(1)).is_zero())
        fail("InternalError", "sigma_at_cusp pole: kd = 0 mod n with kc = 0 mod n");
    return (zkd + Cyclotomic(1)) / (Cyclotomic(2) * (zkd - Cyclotomic(1)));
}

CycloConfig cusp_config(long n, long a) {
    if (n < 10) fail("LevelTooSmall", "cusp configuration needs n >= 10");
    require_unit(a, n);
    // displayed denominators are units for n >= 10 with gcd(a, n) = 1;
    // checked anyway so a bad call cannot silently divide by zero
    if (one_minus(n, 5 * a).is_zero() || (Cyclotomic(1) + zeta_pow(n, 2 * a)).is_zero())
        fail("DegenerateLevel", "cusp row denominators vanish at this level");

    const Cyclotomic one(1), zero(0);
    CycloConfig cfg;
    cfg.points.reserve(n);
    for (long k = 0; k < n; ++k) {
        if (k == 1) {
            cfg.points.push_back({zero, one, zero});
        } else if (k == 2) {
            cfg.points.push_back({zero, zero, one});
        } else if (k == n - 3) {
            cfg.points.push_back({zero, one, one});
        } else {
            Cyclotomic x2 = one_minus(n, 2 * a) * (one + zeta_pow(n, 3 * a)) *
                            one_minus(n, a * k) * one_minus(n, a * (k + 2)) /
                            (one_minus(n, 5 * a) * one_minus(n, a * (k - 1)) *
                             one_minus(n, a * (k + 3)));
            Cyclotomic x3 = (one - zeta_pow(n, a) + zeta_pow(n, 2 * a)) *
                            one_minus(n, a * k) * one_minus(n, a * (k + 1)) /
                            ((one + zeta_pow(n, 2 * a)) * one_minus(n, a * (k - 2)) *
                             one_minus(n, a * (k + 3)));
            cfg.points.push_back({one, x2, x3});
        }
    }
    return cfg;
}

CycloConfig galois_config(const CycloConfig& c, long u) {
    CycloConfig out;
    out.points.reserve(c.size());
    for (const auto& p : c.points)
        out.points.push_back({p[0].galois(u), p[1].galois(u), p[2].galois(u)});
    return out;
}

CycloConfig boroczky_config(long n, long d) {
    if (n < 10 || n % 2 != 0)
        fail("DegenerateLevel", "Boeroeczky limit needs even n >= 10");
    require_unit(d, n);
    const Cyclotomic one(1), zero(0);
    CycloConfig cfg;
    cfg.points.reserve(n);
    for (long k = 0; k < n; ++k) {
        if (k == 1) {
            cfg.points.push_back({zero, one, zero});
        } else if (k == 2) {
            cfg.points.push_back({zero, zero, one});
        } else if (k == n - 3) {
            cfg.points.push_back({zero, one, one});
        } else if (k % 2 == 0) {
            Cyclotomic x3 = one_minus(n, 6 * d) * one_minus(n, k * d) /
                            (zeta_pow(n, 2 * d) * one_minus(n, 4 * d) *
                             one_minus(n, (k - 2) * d));
            cfg.points.push_back({one, zero, x3});
        } else {
            Cyclotomic x2 = one_minus(n, 2 * d) * one_minus(n, 6 * d) *
                            zeta_pow(n, (k - 3) * d) /
                            (one_minus(n, (k - 1) * d) * one_minus(n, (k + 3) * d));
            Cyclotomic x3 = one_minus(n, 6 * d) * one_minus(n, (k + 1) * d) /
                            (one_minus(n, 4 * d) * one_minus(n, (k + 3) * d));
            cfg.points.push_back({one, x2, x3});
        }
    }
    return cfg;
}

std::array<Cyclotomic, 6> boroczky_conic(long n, long d) {
    if (n < 10 || n % 2 != 0)
        fail("DegenerateLevel", "Boeroeczky conic needs even n >= 10");
    require_unit(d, n);
    Cyclotomic u = zeta_pow(n, 2 * d);
    Cyclotomic one(1);
    Cyclotomic p = one + u;          // 1 + zeta^{2d}
    Cyclotomic q = one + u + u * u;  // 1 + zeta^{2d} + zeta^{4d}
    // (x3 - x2) x3 u p^2 + x1^2 q^2 + x1 x2 u q - x1 x3 p^2 q
    return {q * q, u * q, Cyclotomic(0) - p * p * q, Cyclotomic(0), Cyclotomic(0) - u * p * p,
            u * p * p};
}

CycloConfig fourm_config(long n, long d) {
    if (n < 12 || n % 4 != 0) fail("DegenerateLevel", "this limit needs 4 | n, n >= 12");
    require_unit(d, n);
    const Cyclotomic one(1), zero(0);
    Cyclotomic inv4 = one_minus(n, 4 * d).inverse();
    CycloConfig cfg;
    cfg.points.reserve(n);
    for (long k = 0; k < n; ++k) {
        switch (k % 4) {
        case 0:
            cfg.points.push_back(
                {one, one_minus(n, -k * d), one_minus(n, -k * d) * inv4});
            break;
        case 1:
            cfg.points.push_back({zero, one, one_minus(n, (1 - k) * d) * inv4});
            break;
        case 2:
            cfg.points.push_back({zero, zero, one});
            break;
        default:
            cfg.points.push_back({one, one, one_minus(n, (k + 1) * d) * inv4});
            break;
        }
    }
    return cfg;
}

std::vector<CycloPoint> ceva_target_points(long n) {
    if (n % 3 != 0) fail("DegenerateLevel", "Ceva set needs 3 | n");
    const long m = n / 3;
    const Cyclotomic one(1), zero(0);
    std::vector<CycloPoint> pts;
    pts.reserve(3 * m);
    for (long l = 0; l < m; ++l) {
        Cyclotomic g = zeta_pow(n, 3 * l);
        pts.push_back({one, zero, -g});
        pts.push_back({zero, -g, one});
        pts.push_back({-g, one, zero});
    }
    return pts;
}

namespace {

CycloConfig ceva_limit_config(long n, long d) {
    const Cyclotomic one(1), zero(0);
    Cyclotomic beta = zeta_pow(n, 3 * d);
    Cyclotomic beta_inv = zeta_pow(n, -3 * d);
    CycloConfig cfg;
    cfg.points.reserve(n);
    for (long k = 0; k < n; ++k) {
        if (k == 1) {
            cfg.points.push_back({zero, one, zero});
        } else if (k == 2) {
            cfg.points.push_back({zero, zero, one});
        } else if (k == n - 3) {
            cfg.points.push_back({zero, one, one});
        } else if (k % 3 == 0) {
            // limit of the a_k = b_k ratio; the source text's display has a
            // typo here (zeta^{kd} for 1 - zeta^{kd}); this form specializes
            // correctly at k = 0, 3 and passes all collinearities
            Cyclotomic v = (one + beta) * one_minus(n, k * d) /
                           one_minus(n, (k + 3) * d);
            cfg.points.push_back({one, v, v});
        } else if (k % 3 == 1) {
            Cyclotomic x2 = (one + beta_inv) * one_minus(n, (k + 2) * d) /
                            one_minus(n, (k - 1) * d);
            cfg.points.push_back({one, x2, one + beta});
        } else {
            Cyclotomic x3 = (one + beta_inv) * one_minus(n, (k + 1) * d) /
                            one_minus(n, (k - 2) * d);
            cfg.points.push_back({one, one + beta_inv, x3});
        }
    }
    return cfg;
}

} // namespace

CevaReduction ceva_config(long n, long d) {
    if (n < 12 || n % 3 != 0) fail("DegenerateLevel", "Ceva limit needs 3 | n, n >= 12");
    require_unit(d, n);
    const long m = n / 3;

    CevaReduction red;
    red.config = ceva_limit_config(n, d);
    red.targets = ceva_target_points(n);

    // The three residue families are collinear; recover each family line.
    std::array<CycloPoint, 3> lines;
    for (int r = 0; r < 3; ++r) {
        CycloPoint line{Cyclotomic(0), Cyclotomic(0), Cyclotomic(0)};
        for (long k1 = r; k1 < n && point_is_zero(line); k1 += 3)
            for (long k2 = k1 + 3; k2 < n; k2 += 3) {
                line = cross(red.config.points[k1], red.config.points[k2]);
                if (!point_is_zero(line)) break;
            }
        if (point_is_zero(line)) fail("NoReduction", "family points all coincide");
        for (long k = r; k < n; k += 3) {
            const auto& p = red.config.points[k];
            Cyclotomic dot = line[0] * p[0] + line[1] * p[1] + line[2] * p[2];
            if (!dot.is_zero()) fail("NoReduction", "family points are not collinear");
        }
        lines[r] = line;
    }

    // Coordinate positions cut out by the three Ceva families:
    // (1:0:-g) on y2 = 0, (0:-g:1) on y1 = 0, (-g:1:0) on y3 = 0.
    const int target_pos[3] = {1, 0, 2}; // family A -> position 1, B -> 0, C -> 2

    auto try_candidate = [&](const std::array<int, 3>& fam_of_target, long l1,
                             long l2) -> bool {
        // rows of the unscaled transform: position target_pos[f_target] gets
        // the line of the assigned residue family
        Matrix<Cyclotomic> t(3, 3);
        std::array<int, 3> fam_at_pos{-1, -1, -1};
        for (int f = 0; f < 3; ++f) {
            int pos = target_pos[f];
            int fam = fam_of_target[f];
            fam_at_pos[pos] = fam;
            for (int j = 0; j < 3; ++j) t(pos, j) = lines[fam][j];
        }
        // scales from requiring rows 1 and 2 to land on chosen targets
        auto image = [&](const CycloPoint& p) { return apply_matrix(t, p); };
        auto target_for = [&](int fam, long l) -> const CycloPoint& {
            // family order inside targets: A, B, C per l
            int f = 0;
            for (int i = 0; i < 3; ++i)
                if (fam_of_target[i] == fam) f = i;
            return red.targets[3 * l + f];
        };
        CycloPoint u1 = image(red.config.points[1]);
        CycloPoint u2 = image(red.config.points[2]);
        const CycloPoint& t1 = target_for(1, l1); // row 1 is in residue family 1
        const CycloPoint& t2 = target_for(2, l2);
        auto zero_pos_of_family = [&](int fam) {
            for (int i = 0; i < 3; ++i)
                if (fam_of_target[i] == fam) return target_pos[i];
            return 0;
        };
        int z1 = zero_pos_of_family(1);
        int z2 = zero_pos_of_family(2);
        if (!u1[z1].is_zero() || !u2[z2].is_zero()) return false;
        std::array<int, 2> p1, p2;
        for (int i = 0, j = 0; i < 3; ++i)
            if (i != z1) p1[j++] = i;
        for (int i = 0, j = 0; i < 3; ++i)
            if (i != z2) p2[j++] = i;
        if (u1[p1[0]].is_zero() || u1[p1[1]].is_zero()) return false;
        std::array<Cyclotomic, 3> lam{Cyclotomic(0), Cyclotomic(0), Cyclotomic(0)};
        lam[p1[0]] = t1[p1[0]] * u1[p1[1]];
        lam[p1[1]] = t1[p1[1]] * u1[p1[0]];
        // third scale from row 2: z1 is one of p2; the other is already set
        int known = (p2[0] == z1) ? p2[1] : p2[0];
        int unknown = (p2[0] == z1) ? p2[0] : p2[1];
        if (u2[unknown].is_zero() || t2[known].is_zero() || lam[known].is_zero())
            return false;
        lam[unknown] = lam[known] * t2[unknown] * u2[known] / (t2[known] * u2[unknown]);
        if (lam[0].is_zero() || lam[1].is_zero() || lam[2].is_zero()) return false;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t(i, j) = lam[i] * t(i, j);
        if (is_zero(t.det())) return false;
        // verify the full configuration maps bijectively onto the target set
        std::vector<int> assignment(n, -1);
        std::vector<bool> used(red.targets.size(), false);
        for (long k = 0; k < n; ++k) {
            CycloPoint img = apply_matrix(t, red.config.points[k]);
            int found = -1;
            for (size_t j = 0; j < red.targets.size(); ++j) {
                if (used[j]) continue;
                if (proj_equal(img, red.targets[j])) {
                    found = (int)j;
                    break;
                }
            }
            if (found < 0) return false;
            used[found] = true;
            assignment[k] = found;
        }
        red.transform = t;
        red.target_of_label = assignment;
        return true;
    };

    const std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& perm : perms)
        for (long l1 = 0; l1 < m; ++l1)
            for (long l2 = 0; l2 < m; ++l2)
                if (try_candidate(perm, l1, l2)) return red;
    fail("NoReduction", "no linear reduction onto the Ceva set found");
}

} // namespace modmat
