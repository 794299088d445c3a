#include "yg/partition.hpp"

#include <sstream>

namespace yg {

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (parts_.empty()) return Partition{};
    conj.resize(static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_) {
        for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(conj));
}

std::string Partition::to_string(std::size_t width) const {
    std::ostringstream os;
    const std::size_t n = parts_.size() > width ? parts_.size() : width;
    if (n == 0) return "0";
    for (std::size_t i = 0; i < n; ++i) {
        if (i) os << '.';
        os << part(i);
    }
    return os.str();
}

CenteredShape center(const Partition& shape, int k, long long n_letters) {
    if (k < 1) throw input_error("center: k must be positive");
    if (static_cast<int>(shape.num_parts()) > k)
        throw input_error("center: shape has more than k parts");
    if (shape.sum() != n_letters)
        throw input_error("center: parts do not sum to the word length");
    CenteredShape c;
    c.denominator = k;
    c.numerators.reserve(static_cast<std::size_t>(k));
    for (int a = 0; a < k; ++a) {
        c.numerators.push_back(static_cast<long long>(k) * shape.part(static_cast<std::size_t>(a)) -
                               n_letters);
    }
    return c;
}

} // namespace yg
