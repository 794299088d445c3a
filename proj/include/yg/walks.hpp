#pragma once

#include "yg/bigint.hpp"
#include "yg/partition.hpp"

#include <utility>
#include <vector>

namespace yg {

using LatticePoint = std::vector<long long>;

/// Finite difference operator: a finite sum of shifted evaluations,
/// Dp(v) = sum_t coeff_t * p(v + offset_t).
struct DifferenceOperator {
    struct Term {
        long long coeff;
        LatticePoint offset;
    };
    std::vector<Term> terms;
};

/// The reflection operator for the k-candidate ballot problem: offsets
/// delta - sigma(delta) over all permutations sigma, with sign coefficients,
/// where delta = (k-1, ..., 1, 0).  Applied to the unrestricted path count m
/// it yields the ballot count f; it annihilates polynomials of degree below
/// k(k-1)/2.
DifferenceOperator reflection_operator(int k);

template <typename Fn>
auto apply_difference(const DifferenceOperator& op, Fn&& f, const LatticePoint& point)
    -> decltype(f(point)) {
    decltype(f(point)) acc{};
    LatticePoint shifted(point.size());
    for (const auto& term : op.terms) {
        for (std::size_t i = 0; i < point.size(); ++i) shifted[i] = point[i] + term.offset[i];
        acc += decltype(acc)(term.coeff) * f(shifted);
    }
    return acc;
}

/// Number of unrestricted lattice paths from the origin to `point` in N unit
/// steps: the multinomial N!/(c_1!...c_k!), or 0 off the simplex.
BigInt path_count_m(const LatticePoint& point, long long n_steps);

/// Ballot count by the reflection principle; equals f_hook(shape).
BigInt f_reflection(const Partition& shape, int k);

/// Local-limit Gaussian of the uniform k-step walk, normalized on the
/// rank-(k-1) sublattice of centered shapes:
///   q(v) = sqrt(k) * (k / (2 pi N))^((k-1)/2) * exp(-k |v|^2 / (2N)).
/// Summed over the lattice it tends to 1.
struct WalkGaussian {
    int k;
    long long n_steps;

    double density(const CenteredShape& point) const;
    double density_norm2(double norm2) const;
};

double gaussian_density_q(const CenteredShape& point, int k, long long n_steps);

/// Least-squares fit of the constant C in
///   k^{-N} n_lambda ~ C * Delta(lambda)^2 * exp(-k |lambda_hat|^2 / 2N)
/// over all lambda |- N, and the sup residual scaled by N^{k/2}.
struct ResidualReport {
    double fitted_c;
    double scaled_sup_residual;
};

ResidualReport corollary_residual(int k, long long n_letters, long long max_enum = 2'000'000);

} // namespace yg
