#pragma once

#include "yg/bigint.hpp"
#include "yg/partition.hpp"

#include <iosfwd>
#include <map>
#include <vector>

namespace yg {

/// Exact distribution over shapes: weight(lambda) = number of words in [k]^N
/// with RSK shape lambda.  Total is k^N.
struct ExactDist {
    int k = 0;
    long long n_letters = 0;
    std::map<Partition, BigInt> weights;
    BigInt total = 0;

    /// CSV with header `shape,count`; shapes dot-separated and padded to k.
    void write_csv(std::ostream& os) const;
};

/// Number of standard tableaux of the given shape, by the hook-length formula.
BigInt f_hook(const Partition& shape);

/// Dimension of the irreducible gl(k) representation of the given shape, by
/// the Weyl formula prod_{a<b} (lambda_a - lambda_b + b - a)/(b - a).
/// Invariant under adding a constant to every part; errors if the shape has
/// more than k parts.
BigInt d_weyl(const Partition& shape, int k);

/// All partitions of n into at most max_parts parts, in decreasing
/// lexicographic order.
std::vector<Partition> enumerate_partitions(long long n, int max_parts);

/// The exact law of the RSK shape of a uniform word: lambda -> f * d.
ExactDist exact_shape_distribution(int k, long long n_letters);

} // namespace yg
