#pragma once

#include <vector>

#include "permgrowth/numeric.hpp"
#include "permgrowth/word.hpp"

namespace permgrowth {

// Incremental dynamic program for d_n(w), the number of permutations of
// [n] with descent word w[n-1].  Each d_m is the alternating sum
//
//   d_m = sum_{r=0..k} (-1)^(k-r) C(m, i_r) d_{i_r},   i_0 = 0, d_0 = 1,
//
// over the positions i_1 < ... < i_k of 1s in w[m-1], reusing the lower
// d values.  Letters are appended as the word grows; extend() computes
// the next d index.  All arithmetic exact.
class DescentCounter {
 public:
  // Appends letter w_{letters()+1}.
  void push_letter(int bit);

  // Computes d_{m} for the next index m = computed_to()+1; requires
  // letters() >= m-1.
  const Count& extend();

  int letters() const { return static_cast<int>(bits_.size()); }
  int computed_to() const { return static_cast<int>(d_.size()) - 1; }
  const Count& d(int m) const { return d_.at(m); }
  int letter(int i) const { return bits_.at(i - 1); }

 private:
  std::vector<Count> d_{Count(1)};       // d_[0] = 1
  std::vector<unsigned long> ones_;      // 1-positions among absorbed letters
  std::vector<std::uint8_t> bits_;       // the word, bits_[i-1] = w_i
  int absorbed_ = 0;
};

struct DescentSeries {
  WordSpec spec;
  std::vector<Count> counts;          // counts[n-1] = d_n, n = 1..n_max
  std::vector<double> growth_points;  // (d_n/n!)^(1/n)

  const Count& d(int n) const { return counts.at(n - 1); }
  double growth(int n) const { return growth_points.at(n - 1); }
};

// d_n for the infinite word described by spec.
Count count_descent(const WordSpec& spec, int n);

// Same DP on an explicit finite word; word.length() >= n-1 required
// (short words are rejected rather than zero-padded).
Count count_descent_word(const BinaryWord& word, int n);

// Oracle: enumerate all n! permutations and compare descent words.
// word.length() >= n-1; n <= brute_force_limit (resource error beyond).
inline constexpr int kBruteForceLimit = 11;
Count brute_force_descent(const BinaryWord& word, int n,
                          int limit = kBruteForceLimit);

DescentSeries descent_series(const WordSpec& spec, int n_max);
DescentSeries descent_series_word(const BinaryWord& word, int n_max);

// (d_n/n!)^(1/n); diagnostic only.
double growth_estimate(const WordSpec& spec, int n);

}  // namespace permgrowth
