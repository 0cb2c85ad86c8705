#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace flipeq {

// All counts are exact; arbitrary-precision signed integers throughout.
using ExactInt = boost::multiprecision::cpp_int;

// Arguments outside an operation's stated domain.
struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An internal exactness check failed: an odd value reached a halving, a
// fixed point did not converge, a census class came out inconsistent.
// Signals a transcription bug in a recurrence or equation, not bad input.
struct integrity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact division by two. Every halving in the recurrences and functional
// equations is provably exact; an odd value here means the surrounding
// summation limits were transcribed wrong.
inline ExactInt halve_exact(const ExactInt& v, const std::string& where) {
  if (v % 2 != 0) {
    throw integrity_error("odd value before halving in " + where + ": " + v.str());
  }
  return v / 2;
}

inline ExactInt pow2(int e) {
  if (e < 0) throw usage_error("pow2: negative exponent");
  return ExactInt(1) << e;
}

// C(n, k), exact, 0 outside 0 <= k <= n.
inline ExactInt binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  ExactInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) after this step
  }
  return r;
}

// True iff n == 2^r - 1 for some integer r >= 0 (n in 0, 1, 3, 7, 15, ...).
inline bool is_pow2_minus_1(long long n) {
  return n >= 0 && ((n + 1) & n) == 0;
}

}  // namespace flipeq
