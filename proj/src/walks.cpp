#include "yg/walks.hpp"

#include "yg/errors.hpp"
#include "yg/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace yg {

DifferenceOperator reflection_operator(int k) {
    if (k < 1) throw input_error("reflection_operator: k must be positive");
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    DifferenceOperator op;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i) {
            for (std::size_t j = i + 1; j < perm.size(); ++j) {
                if (perm[i] > perm[j]) ++inversions;
            }
        }
        LatticePoint offset(static_cast<std::size_t>(k));
        for (int a = 0; a < k; ++a) {
            // delta_a - delta_{sigma(a)} with delta = (k-1, ..., 1, 0)
            offset[static_cast<std::size_t>(a)] =
                (k - 1 - a) - (k - 1 - perm[static_cast<std::size_t>(a)]);
        }
        op.terms.push_back({(inversions % 2 == 0) ? 1LL : -1LL, std::move(offset)});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return op;
}

BigInt path_count_m(const LatticePoint& point, long long n_steps) {
    long long sum = 0;
    for (long long c : point) {
        if (c < 0) return 0;
        sum += c;
    }
    if (sum != n_steps) return 0;
    BigInt den = 1;
    for (long long c : point) den *= factorial(static_cast<std::size_t>(c));
    return factorial(static_cast<std::size_t>(n_steps)) / den;
}

BigInt f_reflection(const Partition& shape, int k) {
    if (static_cast<int>(shape.num_parts()) > k)
        throw input_error("f_reflection: shape has more than k parts");
    const long long n = shape.sum();
    const DifferenceOperator op = reflection_operator(k);
    LatticePoint lambda(static_cast<std::size_t>(k));
    for (int a = 0; a < k; ++a) lambda[static_cast<std::size_t>(a)] = shape.part(static_cast<std::size_t>(a));
    return apply_difference(
        op, [n](const LatticePoint& p) { return path_count_m(p, n); }, lambda);
}

double WalkGaussian::density_norm2(double norm2) const {
    const double kk = static_cast<double>(k);
    const double nn = static_cast<double>(n_steps);
    const double pref =
        std::sqrt(kk) * std::pow(kk / (2.0 * 3.14159265358979323846 * nn), 0.5 * (kk - 1.0));
    return pref * std::exp(-kk * norm2 / (2.0 * nn));
}

double WalkGaussian::density(const CenteredShape& point) const {
    return density_norm2(point.norm2());
}

double gaussian_density_q(const CenteredShape& point, int k, long long n_steps) {
    return WalkGaussian{k, n_steps}.density(point);
}

ResidualReport corollary_residual(int k, long long n_letters, long long max_enum) {
    if (k < 1) throw input_error("corollary_residual: k must be positive");
    // Rough partition-count bound N^(k-1)/(k-1)! guards the enumeration.
    double bound = 1.0;
    for (int i = 1; i < k; ++i) bound *= static_cast<double>(n_letters) / i;
    if (bound > static_cast<double>(max_enum))
        throw resource_error("corollary_residual: enumeration budget exceeded");

    const ExactDist dist = exact_shape_distribution(k, n_letters);
    const long double kn = to_long_double(dist.total);

    long double sum_yg = 0.0L, sum_gg = 0.0L;
    std::vector<std::pair<long double, long double>> rows; // (y, g)
    rows.reserve(dist.weights.size());
    for (const auto& [shape, count] : dist.weights) {
        const long double y = to_long_double(count) / kn;
        long double delta = 1.0L;
        for (int a = 0; a < k; ++a) {
            for (int b = a + 1; b < k; ++b) {
                delta *= static_cast<long double>(shape.part(static_cast<std::size_t>(a)) -
                                                  shape.part(static_cast<std::size_t>(b)));
            }
        }
        const CenteredShape hat = center(shape, k, n_letters);
        const long double g = delta * delta *
                              std::exp(static_cast<long double>(-double(k)) *
                                       static_cast<long double>(hat.norm2()) /
                                       (2.0L * static_cast<long double>(n_letters)));
        rows.emplace_back(y, g);
        sum_yg += y * g;
        sum_gg += g * g;
    }
    const long double c = sum_gg > 0.0L ? sum_yg / sum_gg : 0.0L;
    long double sup = 0.0L;
    for (const auto& [y, g] : rows) {
        const long double r = y - c * g;
        sup = std::max(sup, r < 0 ? -r : r);
    }
    const long double scale = std::pow(static_cast<long double>(n_letters), 0.5L * k);
    return ResidualReport{static_cast<double>(c), static_cast<double>(scale * sup)};
}

} // namespace yg
