#include "modmat/chain.hpp"

namespace modmat {

std::array<BiRat, 10> interpolation_minors() {
    const BiPoly s = BiPoly::var_s(), t = BiPoly::var_t(), one(1);

    // Displayed representatives of p_{-3},...,p_5 with denominators cleared
    // per row; lambda is the clearing factor (row scales by lambda^3).
    struct Row {
        Point3<BiPoly> pt;
        BiPoly lambda;
    };
    std::vector<Row> rows = {
        {{BiPoly(0), one, one}, one},                                     // p_-3
        {{s - one, BiPoly(0), s}, s - one},                               // p_-2
        {{one, s, BiPoly(0)}, one},                                       // p_-1
        {{one, BiPoly(0), BiPoly(0)}, one},                               // p_0
        {{BiPoly(0), one, BiPoly(0)}, one},                               // p_1
        {{BiPoly(0), BiPoly(0), one}, one},                               // p_2
        {{one, one, one}, one},                                           // p_3
        {{t - one, s * t, s}, t - one},                                   // p_4
        {{(s - one) * (one + s - t), s * (t - one), s * s},
         (s - one) * (one + s - t)},                                      // p_5
    };

    std::vector<std::array<BiPoly, 10>> mono;
    BiPoly scale_all(1);
    for (const Row& r : rows) {
        mono.push_back(cubic_monomials(r.pt));
        scale_all *= r.lambda * r.lambda * r.lambda;
    }

    std::array<BiRat, 10> minors;
    for (int drop = 0; drop < 10; ++drop) {
        std::vector<std::vector<BiPoly>> m(9, std::vector<BiPoly>(9));
        for (int i = 0; i < 9; ++i) {
            int jj = 0;
            for (int j = 0; j < 10; ++j) {
                if (j == drop) continue;
                m[i][jj++] = mono[i][j];
            }
        }
        minors[drop] = BiRat(bipoly_det(m), scale_all);
    }
    return minors;
}

} // namespace modmat
