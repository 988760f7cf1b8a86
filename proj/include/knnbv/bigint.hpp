/*
 * Copyright 2026 The knnbv Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

namespace knnbv {

// GMP-backed: exact engines move gigabytes of limbs at n = 10^5, where
// GMP's tuned kernels are several times faster than header-only bignums.
using BigInt = boost::multiprecision::mpz_int;
using BigRat = boost::multiprecision::mpq_rational;

inline BigInt pow2(unsigned e) { return BigInt(1) << e; }

// C(n, k) by the multiplicative recurrence; every intermediate product is
// divisible by the running k, so the division is exact.
inline BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt c = 1;
  for (long long j = 1; j <= k; ++j) {
    c *= (n - k + j);
    c /= j;
  }
  return c;
}

// Full Pascal triangle up to nmax; row[n][k] = C(n, k).
inline std::vector<std::vector<BigInt>> binomial_table(int nmax) {
  std::vector<std::vector<BigInt>> t(nmax + 1);
  for (int n = 0; n <= nmax; ++n) {
    t[n].resize(n + 1);
    t[n][0] = 1;
    for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    if (n > 0) t[n][n] = 1;
  }
  return t;
}

// num / 2^denom_log2 as a double, correct for operands far beyond double
// range (only the top 53 bits of num participate).
inline double ratio_to_double(const BigInt& num, int denom_log2) {
  if (num == 0) return 0.0;
  const bool neg = num < 0;
  const BigInt mag = neg ? BigInt(-num) : num;
  const long msb = static_cast<long>(boost::multiprecision::msb(mag));
  const long shift = msb > 52 ? msb - 52 : 0;
  const double top = static_cast<double>(static_cast<std::uint64_t>(mag >> shift));
  const double v = std::ldexp(top, static_cast<int>(shift - denom_log2));
  return neg ? -v : v;
}

inline double rat_to_double(const BigRat& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (num == 0) return 0.0;
  const bool neg = num < 0;
  const BigInt nmag = neg ? BigInt(-num) : num;
  // Scale both operands into double range keeping ~520 guard bits.
  const long nb = static_cast<long>(boost::multiprecision::msb(nmag));
  const long db = static_cast<long>(boost::multiprecision::msb(den));
  const long ns = nb > 520 ? nb - 520 : 0;
  const long ds = db > 520 ? db - 520 : 0;
  const double dn = static_cast<double>(BigInt(nmag >> ns));
  const double dd = static_cast<double>(BigInt(den >> ds));
  const double v = std::ldexp(dn / dd, static_cast<int>(ns - ds));
  return neg ? -v : v;
}

}  // namespace knnbv
