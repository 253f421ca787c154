#pragma once

#include <utility>
#include <vector>

#include "modmat/cyclotomic.hpp"
#include "modmat/matroid.hpp"

namespace modmat {

using CycloConfig = Configuration<Cyclotomic>;
using CycloPoint = Point3<Cyclotomic>;

// Cusp of X_1(n) presented by the bottom row (c, d) of a matrix in SL2(Z).
struct CuspLabel {
    long n = 0;
    long c = 0;
    long d = 1;

    void validate() const {
        if (n < 1) fail("InvalidArgument", "cusp label needs a positive level");
        if (std::gcd(c, d) != 1) fail("InvalidArgument", "cusp label (c, d) must be coprime");
    }
};

// Normalized limit of sigma_k at the cusp given by (c, d):
// {kc/n} - 1/2 when kc/n is not integral, else (zeta^{kd}+1)/(2(zeta^{kd}-1)).
Cyclotomic sigma_at_cusp(long n, long k, long c, long d);

// The n-point cyclotomic configuration of the infinity-orbit cusp: rows by
// the closed product formula, with the fixed rows p_1 = (0:1:0),
// p_2 = (0:0:1), p_{n-3} = (0:1:1).  Requires n >= 10 and gcd(a, n) = 1.
CycloConfig cusp_config(long n, long a);

// Apply zeta -> zeta^u coordinate-wise.
CycloConfig galois_config(const CycloConfig& c, long u);

// Limit configurations at the deeper cusps (boundary points, not
// realizations): n = 2m with c = m (Boeroeczky shape), n = 3m (Ceva shape),
// n = 4m.  d must be a unit mod n.
CycloConfig boroczky_config(long n, long d);
CycloConfig fourm_config(long n, long d);

// The conic through the odd-index rows of boroczky_config (coefficients in
// the monomial order x1^2, x1x2, x1x3, x2^2, x2x3, x3^2).
std::array<Cyclotomic, 6> boroczky_conic(long n, long d);

// The 3m Ceva points (1:0:-zeta^{3l}), (0:-zeta^{3l}:1), (-zeta^{3l}:1:0).
std::vector<CycloPoint> ceva_target_points(long n);

struct CevaReduction {
    CycloConfig config;                          // the limit configuration
    Matrix<Cyclotomic> transform;                // maps config onto the Ceva set
    std::vector<int> target_of_label;            // label k -> index into targets
    std::vector<CycloPoint> targets;             // ceva_target_points(n)
};

// Limit configuration for n = 3m together with an explicit linear reduction
// onto the Ceva point set (NoReduction if the bounded search fails, which
// would contradict the identification).
CevaReduction ceva_config(long n, long d);

} // namespace modmat
