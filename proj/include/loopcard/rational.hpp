#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace loopcard {

// All cardinalities are exact. Integers are arbitrary precision (iterated
// loop functors square homotopy-group orders, so fixed width overflows fast)
// and rationals are kept in lowest terms with a positive denominator, which
// cpp_rational guarantees by construction.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rational_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt rational_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return rational_den(q) == 1; }

// "a" when integral, "a/b" otherwise.
inline std::string rational_to_string(const Rational& q) {
  if (is_integer(q)) return rational_num(q).str();
  return rational_num(q).str() + "/" + rational_den(q).str();
}

inline BigInt pow_big(const BigInt& base, std::uint64_t e) {
  BigInt acc = 1;
  BigInt b = base;
  while (e != 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

// binom(n, k) with binom(n, k) = 0 for k > n.
inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc *= BigInt(n - k + i);
    acc /= BigInt(i);  // exact at every step: acc is binom(n-k+i, i)
  }
  return acc;
}

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// True iff x = p^k for some k >= 0.
inline bool is_power_of(const BigInt& x, std::uint64_t p) {
  if (x < 1) return false;
  BigInt v = x;
  while (v % p == 0) v /= p;
  return v == 1;
}

}  // namespace loopcard
