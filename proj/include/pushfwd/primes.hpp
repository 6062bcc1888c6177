// Deterministic prime sequences used for generic point assignments.
#pragma once

#include <cstdint>
#include <vector>

namespace pushfwd {

// n-th prime, 0-indexed: nth_prime(0) == 2.
std::uint64_t nth_prime(std::size_t n);

// Walks a prime sequence starting at a fixed index.  Two feeds with
// different start indices give the disjoint sequences used to
// cross-validate rank claims (2,3,5,7,... versus 11,13,...).
class PrimeFeed {
public:
    explicit PrimeFeed(std::size_t start_index = 0) : next_(start_index) {}
    std::uint64_t take() { return nth_prime(next_++); }

private:
    std::size_t next_;
};

inline constexpr std::size_t kPrimaryFeedStart = 0;    // 2, 3, 5, 7, ...
inline constexpr std::size_t kValidationFeedStart = 4; // 11, 13, 17, ...

}  // namespace pushfwd
