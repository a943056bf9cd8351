#pragma once

#include <cstdint>
#include <string>

#include "bergepath/error.hpp"

namespace bergepath {

using Count = std::uint64_t;

inline Count checked_add(Count a, Count b) {
  Count out = 0;
  if (__builtin_add_overflow(a, b, &out))
    throw error(errc::arithmetic_overflow,
                std::to_string(a) + " + " + std::to_string(b) + " exceeds 64 bits");
  return out;
}

inline Count checked_mul(Count a, Count b) {
  Count out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw error(errc::arithmetic_overflow,
                std::to_string(a) + " * " + std::to_string(b) + " exceeds 64 bits");
  return out;
}

/// Exact binomial coefficient, C(n, k) = 0 for k > n.
///
/// The running product C(n, i) * (n - i) / (i + 1) is formed in 128 bits and
/// is always an exact division; only the final narrowing can overflow.
inline Count binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    acc = acc * (n - i) / (i + 1);
    if (acc > UINT64_MAX)
      throw error(errc::arithmetic_overflow,
                  "C(" + std::to_string(n) + ", " + std::to_string(k) + ") exceeds 64 bits");
  }
  return static_cast<Count>(acc);
}

/// Signed convenience for call sites that carry possibly-negative arguments
/// (e.g. C(q - 1, r - 1) with q = 0). Negative n or k yields 0.
inline Count binom_s(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) return 0;
  return binom(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
}

}  // namespace bergepath
