#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace permgrowth {

// Exact arithmetic backing the whole library.  Counts scale like n!, so
// everything that feeds a branch decision stays in mpz/mpq; doubles are
// for human-facing reports only.
using Count = mpz_class;
using Ratio = mpq_class;

Count factorial(unsigned long n);

// C(n, k); 0 when k > n.
Count binomial(unsigned long n, unsigned long k);

// Zigzag numbers E_0, E_1, ..., E_kmax (1, 1, 1, 2, 5, 16, 61, ...):
// counts of alternating permutations, e.g.f. tan(x) + sec(x).  Computed
// by the boustrophedon triangle, independent of the descent recursion so
// the two can cross-validate.
std::vector<Count> zigzag_table(unsigned long kmax);
Count euler_zigzag(unsigned long k);

// Natural log of a positive big integer: exact bit length plus a long
// double log of the leading mantissa.  Good to ~1e-15 relative.
long double log_count(const Count& v);

// (num/den)^(1/n) in double precision, >= 12 significant digits.
// num == 0 gives 0.  Report-only: never used for control flow.
double nth_root_float(const Count& num, const Count& den, unsigned long n);
double nth_root_float(const Ratio& x, unsigned long n);

// Canonicalized rational from integer parts (den > 0 enforced).
Ratio make_ratio(const Count& num, const Count& den);

// Parses "P/Q" or a bare integer "P" into a canonical Ratio.
Ratio parse_ratio(const std::string& text);

}  // namespace permgrowth
