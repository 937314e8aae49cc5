#pragma once

// Test-side oracles: single-pass enumerations of S_n histogrammed by
// descent word / peak set, plus word generators that stay out of the
// library surface.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "permgrowth/word.hpp"

namespace permgrowth::testing {

// hist[mask] = #permutations of [n] whose descent word has bit i-1 of
// mask at position i.
inline std::vector<std::uint64_t> descent_histogram(int n) {
  std::vector<std::uint64_t> hist(std::size_t(1) << (n - 1), 0);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    std::uint64_t mask = 0;
    for (int i = 0; i + 1 < n; ++i)
      if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(i) + 1])
        mask |= std::uint64_t(1) << i;
    ++hist[mask];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return hist;
}

inline std::uint64_t word_mask(const BinaryWord& w) {
  std::uint64_t mask = 0;
  for (std::size_t i = 1; i <= w.length(); ++i)
    if (w.bit(i)) mask |= std::uint64_t(1) << (i - 1);
  return mask;
}

inline BinaryWord mask_word(std::uint64_t mask, int len) {
  BinaryWord w;
  for (int i = 0; i < len; ++i) w.push_back((mask >> i) & 1);
  return w;
}

// Exact peak-set histogram of S_n.
inline std::map<std::vector<int>, std::uint64_t> peak_histogram(int n) {
  std::map<std::vector<int>, std::uint64_t> hist;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<int> peaks;
  do {
    peaks.clear();
    for (int i = 1; i + 1 < n; ++i)
      if (perm[static_cast<std::size_t>(i - 1)] < perm[static_cast<std::size_t>(i)] &&
          perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(i) + 1])
        peaks.push_back(i + 1);
    ++hist[peaks];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return hist;
}

// Chirping word: 1s exactly at the perfect squares.
inline BinaryWord squares_word(int len) {
  BinaryWord w;
  for (int i = 1, r = 1; i <= len; ++i) {
    if (i == r * r) {
      w.push_back(1);
      ++r;
    } else {
      w.push_back(0);
    }
  }
  return w;
}

inline WordSpec random_spec(std::mt19937& rng) {
  std::uniform_int_distribution<int> len_pre(0, 6), len_per(1, 6), bit(0, 1);
  BinaryWord pre, per;
  const int np = len_pre(rng), nq = len_per(rng);
  for (int i = 0; i < np; ++i) pre.push_back(bit(rng));
  for (int i = 0; i < nq; ++i) per.push_back(bit(rng));
  return WordSpec(pre, per);
}

}  // namespace permgrowth::testing
