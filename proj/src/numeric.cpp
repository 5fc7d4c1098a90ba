#include "polar/numeric.hpp"

#include <string>

#include "polar/errors.hpp"

namespace polar {

std::uint64_t checked_add_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw ScaleError("64-bit overflow in exact addition");
  return r;
}

std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw ScaleError("64-bit overflow in exact multiplication");
  return r;
}

std::uint64_t binomial_u64(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  // C(n, t) * (n - t) is divisible by t + 1, so each step stays exact.
  std::uint64_t c = 1;
  for (unsigned t = 0; t < k; ++t)
    c = checked_mul_u64(c, n - t) / (t + 1);
  return c;
}

}  // namespace polar
