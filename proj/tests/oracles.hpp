#pragma once

// Independent brute-force oracles used by the test suites.  Everything here
// deliberately avoids the library's own formulas: shapes come from exhaustive
// enumeration, counts from backtracking, integrals from quadrature.

#include "yg/bigint.hpp"
#include "yg/partition.hpp"
#include "yg/tableau.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

// Calls fn on every word in [k]^n.
template <typename Fn>
void for_each_word(int k, int n, Fn&& fn) {
    yg::Word w(static_cast<std::size_t>(n), 1);
    for (;;) {
        fn(w);
        int i = n - 1;
        while (i >= 0 && w[static_cast<std::size_t>(i)] == k) {
            w[static_cast<std::size_t>(i)] = 1;
            --i;
        }
        if (i < 0) return;
        ++w[static_cast<std::size_t>(i)];
    }
}

// Shape histogram of all k^n words under row-insertion RSK.
inline std::map<yg::Partition, yg::BigInt> exhaustive_shape_histogram(int k, int n) {
    std::map<yg::Partition, yg::BigInt> hist;
    for_each_word(k, n, [&](const yg::Word& w) { hist[yg::rsk_shape_row(w, k)] += 1; });
    return hist;
}

// Longest weakly increasing subsequence by enumerating all 2^n subsequences.
inline int lwis_bruteforce(const yg::Word& w) {
    const int n = static_cast<int>(w.size());
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int prev = 0, len = 0;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (mask & (1u << i)) {
                if (w[static_cast<std::size_t>(i)] < prev) ok = false;
                prev = w[static_cast<std::size_t>(i)];
                ++len;
            }
        }
        if (ok && len > best) best = len;
    }
    return best;
}

// Number of standard tableaux of a shape, by backtracking placement of 1..N.
long long count_standard_tableaux(const yg::Partition& shape);

// Number of semistandard tableaux of a shape with entries <= k.
long long count_semistandard_tableaux(const yg::Partition& shape, int k);

// Adaptive Simpson quadrature on [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-12, int depth = 24);

// Roots of a monic complex polynomial (coefficients low to high, leading 1
// implicit) by Durand-Kerner iteration.
std::vector<std::complex<double>> durand_kerner(std::vector<std::complex<double>> coeffs,
                                                int iters = 400);

// Characteristic polynomial coefficients of a dense complex matrix by the
// Faddeev-LeVerrier recurrence; returns c_0..c_{n-1} of
// det(xI - A) = x^n + c_{n-1} x^(n-1) + ... + c_0.
std::vector<std::complex<double>> char_poly(const std::vector<std::complex<double>>& a, int n);

// Dense multivariate polynomial with exact integer coefficients, enough to
// check what a difference operator does to low-degree monomials.
struct Poly {
    // exponent vector -> coefficient
    std::map<std::vector<int>, long long> terms;

    static Poly monomial(std::vector<int> exps, long long c = 1) {
        Poly p;
        if (c != 0) p.terms[std::move(exps)] = c;
        return p;
    }

    Poly shifted(const std::vector<long long>& offset) const; // p(x + offset)
    Poly& add_scaled(const Poly& other, long long scale);
    bool is_zero() const { return terms.empty(); }
};

} // namespace oracle
