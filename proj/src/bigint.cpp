#include "yg/bigint.hpp"

#include <deque>
#include <mutex>

namespace yg {

// std::deque keeps references to existing elements valid across growth.
const BigInt& factorial(std::size_t n) {
    static std::mutex mu;
    static std::deque<BigInt> table{1};
    std::lock_guard<std::mutex> lock(mu);
    while (table.size() <= n) {
        table.push_back(table.back() * BigInt(table.size()));
    }
    return table[n];
}

} // namespace yg
