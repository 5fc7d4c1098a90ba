#pragma once

#include <cstdint>

namespace polar {

// Overflow-checked unsigned arithmetic.  Every Betti number and counting
// bound in this library is exact; on overflow these throw ScaleError
// rather than wrap.
std::uint64_t checked_add_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b);

// Exact binomial coefficient C(n, k); throws ScaleError if the value does
// not fit in 64 bits.
std::uint64_t binomial_u64(unsigned n, unsigned k);

}  // namespace polar
