#pragma once

#include <string>
#include <vector>

#include "modmat/chain.hpp"
#include "modmat/cusps.hpp"
#include "modmat/qmod.hpp"

namespace modmat {

// The weight-one realization matrix: n projective rows of q-series over
// Q(zeta_n). Rows 0..3 are the constant canonical frame, row n-3 is (0,1,1),
// every other row k is (1, a_k, b_k).
struct PsiMatrix {
    long n = 0;
    int qprec = 0;
    std::vector<std::array<QSeries, 3>> rows;
};

PsiMatrix psi_matrix(long n, int qprec);

// The alternative expressions from the proofs:
// a_k = (s_5 - 2 s_3 + s_1) / (s_{k+2} - s_k + s_1 - s_3),
// b_k = (s_4 - 2 s_3 + s_2) / (s_{k+1} - s_k + s_2 - s_3).
// Returned cross-multiplication-ready as (numerator, denominator) pairs.
struct AkBkAlt {
    QSeries a_num, a_den, b_num, b_den;
};
AkBkAlt ak_bk_alt(long n, long k, int qprec);

struct CheckItem {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Report {
    std::string check;
    long n = 0;
    int qprec = 0;
    std::vector<CheckItem> items;

    bool passed() const {
        for (const auto& it : items)
            if (!it.passed) return false;
        return true;
    }
    void add(std::string name, bool ok, std::string detail = "") {
        items.push_back({std::move(name), ok, std::move(detail)});
    }
};

// Every non-basis triple must have zero determinant to truncation; sampled
// basis triples must have a nonzero leading coefficient.
Report collinearity_check(const PsiMatrix& m);

struct RecoveredST {
    QSeries s, t;
};

// s(tau) from row n-1 = (1 : s : 0), t(tau) from row n-4 = (1 : t : 1);
// the checked entries (third coordinates 0 resp. 1) throw FrameMismatch.
RecoveredST recover_st(const PsiMatrix& m);

// F_{s(tau), t(tau)} vanishes on every row.
Report cubic_vanishing_check(const PsiMatrix& m);

// Matrix rows 4, 5, n-2, n-4 against the closed-form chain points at the
// recovered (s, t), cross-multiplied.
Report chain_row_check(const PsiMatrix& m);

// Constant-term configuration equals cusp_config(n, 1) exactly.
Report cusp_constant_check(long n, int qprec);

struct PropAllSolution {
    std::vector<long> ks;   // labels with a_k, b_k columns, in order
    std::vector<Rat> a_coeffs;
    std::vector<Rat> b_coeffs;
    bool exact = false;
    int qprec = 0;
};

// sigma_i / (sigma_6 - sigma_3 - sigma_2 - sigma_1) as a rational linear
// combination of the a_k and b_k; NoSolutionAtPrecision when the exact
// system is inconsistent.
PropAllSolution prop_all_solve(long n, long i, int qprec);

} // namespace modmat
