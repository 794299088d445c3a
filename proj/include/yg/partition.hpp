#pragma once

#include "yg/errors.hpp"

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace yg {

/// Partition of an integer: weakly decreasing non-negative parts.  Trailing
/// zeros are accepted on input and stripped, so equality and ordering ignore
/// them.  An optional part-count bound can be enforced at construction.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts, std::optional<int> k_bound = std::nullopt)
        : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw input_error("partition parts must be non-negative");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw input_error("partition parts must be weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        if (k_bound && static_cast<int>(parts_.size()) > *k_bound)
            throw input_error("partition has more parts than the allowed bound");
    }

    const std::vector<int>& parts() const { return parts_; }
    std::size_t num_parts() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    long long sum() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0LL);
    }

    /// Conjugate (transposed) partition.
    Partition conjugate() const;

    /// Dot-separated rendering, zero-padded to `width` parts ("3.1.0").
    std::string to_string(std::size_t width = 0) const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Shape with the mean pulled out: stores k * lambda_a - N over denominator k,
/// so weight-lattice arithmetic stays exact.
struct CenteredShape {
    std::vector<long long> numerators; // weakly decreasing, sums to zero
    int denominator = 1;

    double value(std::size_t a) const {
        return static_cast<double>(numerators[a]) / denominator;
    }

    /// Sum of squared entries, |lambda_hat|^2.
    double norm2() const {
        double s = 0.0;
        for (long long n : numerators) {
            const double v = static_cast<double>(n) / denominator;
            s += v * v;
        }
        return s;
    }
};

/// lambda_hat: subtracts the mean N/k from each of the k parts.
CenteredShape center(const Partition& shape, int k, long long n_letters);

} // namespace yg
