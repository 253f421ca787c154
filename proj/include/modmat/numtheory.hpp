#pragma once

#include <gmpxx.h>

#include <numeric>
#include <string>
#include <vector>

namespace modmat {

using Int = mpz_class;
using Rat = mpq_class;

inline long gcd_long(long a, long b) { return std::gcd(a, b); }

inline bool is_unit_mod(long a, long n) { return std::gcd(((a % n) + n) % n, n) == 1; }

// Positive residue in [0, n).
inline long mod_pos(long a, long n) { return ((a % n) + n) % n; }

inline long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

inline int moebius(long n) {
    int mu = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

inline std::vector<long> divisors(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

inline std::vector<long> units_mod(long n) {
    std::vector<long> u;
    for (long a = 1; a < n; ++a)
        if (std::gcd(a, n) == 1) u.push_back(a);
    return u;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

// Bernoulli numbers B_0..B_m by the standard recurrence
// sum_{j=0}^{m} C(m+1,j) B_j = 0, B_0 = 1 (convention B_1 = -1/2).
inline std::vector<Rat> bernoulli_upto(int m) {
    std::vector<Rat> b(m + 1);
    b[0] = 1;
    for (int k = 1; k <= m; ++k) {
        Rat acc = 0;
        Int binom = 1; // C(k+1, 0)
        for (int j = 0; j < k; ++j) {
            acc += Rat(binom) * b[j];
            binom = binom * (k + 1 - j) / (j + 1);
        }
        // binom is now C(k+1, k) = k+1
        b[k] = -acc / Rat(binom);
    }
    return b;
}

} // namespace modmat
