#include "yg/shapes.hpp"

#include <ostream>

namespace yg {

void ExactDist::write_csv(std::ostream& os) const {
    os << "shape,count\n";
    for (const auto& [shape, count] : weights) {
        os << shape.to_string(static_cast<std::size_t>(k)) << ',' << count.str() << '\n';
    }
}

BigInt f_hook(const Partition& shape) {
    const auto& parts = shape.parts();
    if (parts.empty()) return 1;
    const Partition conj = shape.conjugate();
    const long long n = shape.sum();
    BigInt hooks = 1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (int j = 0; j < parts[i]; ++j) {
            const long long arm = parts[i] - j - 1;
            const long long leg = conj.part(static_cast<std::size_t>(j)) - static_cast<long long>(i) - 1;
            hooks *= BigInt(arm + leg + 1);
        }
    }
    return factorial(static_cast<std::size_t>(n)) / hooks;
}

BigInt d_weyl(const Partition& shape, int k) {
    if (k < 1) throw input_error("d_weyl: k must be positive");
    if (static_cast<int>(shape.num_parts()) > k)
        throw input_error("d_weyl: shape has more than k parts");
    BigInt num = 1, den = 1;
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            num *= BigInt(shape.part(static_cast<std::size_t>(a)) -
                          shape.part(static_cast<std::size_t>(b)) + b - a);
            den *= BigInt(b - a);
        }
    }
    return num / den;
}

namespace {

void emit_partitions(long long remaining, int max_parts, int cap, std::vector<int>& acc,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (max_parts == 0) return;
    const int hi = remaining < cap ? static_cast<int>(remaining) : cap;
    // Descending first part gives decreasing lexicographic output order.
    const long long lo = (remaining + max_parts - 1) / max_parts;
    for (int p = hi; p >= lo; --p) {
        acc.push_back(p);
        emit_partitions(remaining - p, max_parts - 1, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(long long n, int max_parts) {
    if (n < 0) throw input_error("enumerate_partitions: n must be non-negative");
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    if (max_parts <= 0) return out;
    std::vector<int> acc;
    const int cap = n > 1000000000LL ? 1000000000 : static_cast<int>(n);
    emit_partitions(n, max_parts, cap, acc, out);
    return out;
}

ExactDist exact_shape_distribution(int k, long long n_letters) {
    if (k < 1) throw input_error("exact_shape_distribution: k must be positive");
    if (n_letters < 0) throw input_error("exact_shape_distribution: N must be non-negative");
    ExactDist dist;
    dist.k = k;
    dist.n_letters = n_letters;
    for (auto& shape : enumerate_partitions(n_letters, k)) {
        BigInt n_lambda = f_hook(shape) * d_weyl(shape, k);
        dist.total += n_lambda;
        dist.weights.emplace(std::move(shape), std::move(n_lambda));
    }
    return dist;
}

} // namespace yg
