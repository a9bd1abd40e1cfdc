#pragma once

#include <cstdint>

namespace advshare {

// Caps on exhaustive work. Operations that would exceed them throw
// BudgetExceeded rather than approximate.
struct Limits {
    // Maximum number of codewords (p^dim, zero included) a scan may visit.
    std::uint64_t max_codewords = std::uint64_t{1} << 20;
    // Maximum Hilbert-space dimension p^m for dense states and unitaries.
    std::uint64_t max_dense_dimension = 4096;
};

// p^e, saturating at UINT64_MAX.
std::uint64_t checked_power(std::uint64_t base, std::uint64_t exponent);

}  // namespace advshare
