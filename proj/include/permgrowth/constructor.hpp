#pragma once

#include <utility>
#include <vector>

#include "permgrowth/descent.hpp"
#include "permgrowth/numeric.hpp"
#include "permgrowth/word.hpp"

namespace permgrowth {

// Certified rational enclosure of 2/pi.  Targets inside the gap are
// treated as the upper endpoint; control flow never touches the
// irrational value itself.
const Ratio& two_over_pi_lower();  // 636619/1000000
const Ratio& two_over_pi_upper();  // 636620/1000000

enum class RunState { kZeros, kOneZeros };

// Per-n control diagnostics: exact sign of r_n - 1 (and r'_n - 1 for dual
// runs) plus double approximations.  Exact rationals are not retained;
// their numerators grow to thousands of digits.
struct RSample {
  int n = 0;
  int sign_low = 0;    // sign(r_n - 1), r_n = d_n M^n / n!
  double r_low = 0.0;
  int sign_high = 0;   // sign(r'_n - 1), r'_n = d_n M'^n / n!
  double r_high = 0.0;
};

struct ConstructorRun {
  Ratio target_low;          // L
  Ratio target_high;         // L' (== L for single-target runs)
  int threshold_k = 0;       // proof constant K (0 for endpoint runs)
  BinaryWord word;           // constructed prefix, length n_max
  std::vector<int> flips;    // n_alpha positions where the state changed
  std::vector<RSample> r_log;
  RunState state_final = RunState::kZeros;
  bool dual = false;

  double growth_at(int n) const;  // L * r_n^(1/n) from the logged sample
};

// Least K with M^k/k! <= 1 and (1/2)(E_k/k!) M'^k >= 1 for every k in
// [K, K+200], the two run-length conditions from the convergence proof
// (M = 1/L drives 0-runs, M' = 1/L_high drives 10-runs).  Also checks
// K+200 > M so the first condition is monotone beyond the window.
// Requires 0 < L and L_high below the 2/pi enclosure.
int compute_K(const Ratio& target, int scan_cap = 2000);
int compute_K_dual(const Ratio& target_low, const Ratio& target_high,
                   int scan_cap = 2000);

// Adaptive construction: starting from w_1 = 0 in state 0, append "0"
// (state 0) or "10" (state 10) and flip state when the most recently
// computed control ratio crosses 1 -- r < 1 exits state 0, r' > 1 exits
// state 10.  Comparisons are exact: d_n q^n vs n! p^n for a target p/q.
// L = 0 yields 0^n_max; L at the 2/pi enclosure yields the alternating
// word.  Equality r == 1 never flips.
ConstructorRun construct_word(const Ratio& target, int n_max);
ConstructorRun construct_word_dual(const Ratio& target_low,
                                   const Ratio& target_high, int n_max);

// Proof envelope (f(n), g(n)) with f = 1/[(n+K)^K n]^(1/n) and
// g = (M^(K+2))^(1/n); r_n^(1/n) stays between them.
std::pair<double, double> envelope(int n, int k_threshold, const Ratio& m_ratio);

}  // namespace permgrowth
