#include "pushfwd/primes.hpp"

namespace pushfwd {

// Trial division, no shared state; indices stay tiny in practice.
std::uint64_t nth_prime(std::size_t n) {
    std::vector<std::uint64_t> found;
    found.reserve(n + 1);
    for (std::uint64_t c = 2; found.size() <= n; c += (c == 2 ? 1 : 2)) {
        bool prime = true;
        for (std::uint64_t p : found) {
            if (p * p > c)
                break;
            if (c % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime)
            found.push_back(c);
    }
    return found[n];
}

}  // namespace pushfwd
