#include "permgrowth/descent.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "permgrowth/errors.hpp"

namespace permgrowth {

void DescentCounter::push_letter(int bit) {
  if (bit != 0 && bit != 1)
    throw std::invalid_argument("DescentCounter: letters must be 0 or 1");
  bits_.push_back(static_cast<std::uint8_t>(bit));
}

const Count& DescentCounter::extend() {
  const int m = static_cast<int>(d_.size());
  if (letters() < m - 1)
    throw std::invalid_argument("DescentCounter: word too short for d_" + std::to_string(m));
  while (absorbed_ < m - 1) {
    ++absorbed_;
    if (bits_[absorbed_ - 1] == 1) ones_.push_back(static_cast<unsigned long>(absorbed_));
  }
  const std::size_t k = ones_.size();
  Count total = (k % 2 == 0) ? 1 : -1;  // r = 0 term: (-1)^k C(m,0) d_0
  Count term;
  for (std::size_t r = 1; r <= k; ++r) {
    const unsigned long ir = ones_[r - 1];
    mpz_bin_uiui(term.get_mpz_t(), static_cast<unsigned long>(m), ir);
    term *= d_[ir];
    if ((k - r) % 2 == 0)
      total += term;
    else
      total -= term;
  }
  if (sgn(total) <= 0)
    throw std::logic_error("DescentCounter: nonpositive count, inconsistent state");
  d_.push_back(std::move(total));
  return d_.back();
}

Count count_descent_word(const BinaryWord& word, int n) {
  if (n < 1) throw std::invalid_argument("count_descent: n must be >= 1");
  if (word.length() + 1 < static_cast<std::size_t>(n))
    throw std::invalid_argument("count_descent: word shorter than n-1 letters");
  DescentCounter dc;
  for (int i = 1; i <= n - 1; ++i) dc.push_letter(word.bit(static_cast<std::size_t>(i)));
  while (dc.computed_to() < n) dc.extend();
  return dc.d(n);
}

Count count_descent(const WordSpec& spec, int n) {
  if (n < 1) throw std::invalid_argument("count_descent: n must be >= 1");
  return count_descent_word(word_prefix(spec, static_cast<std::size_t>(n - 1)), n);
}

Count brute_force_descent(const BinaryWord& word, int n, int limit) {
  if (n < 1) throw std::invalid_argument("brute_force_descent: n must be >= 1");
  if (n > limit)
    throw resource_limit_error("brute_force_descent: n = " + std::to_string(n) +
                               " exceeds limit " + std::to_string(limit));
  if (word.length() + 1 < static_cast<std::size_t>(n))
    throw std::invalid_argument("brute_force_descent: word shorter than n-1 letters");
  std::vector<int> target(static_cast<std::size_t>(n - 1));
  for (int i = 1; i <= n - 1; ++i) target[i - 1] = word.bit(static_cast<std::size_t>(i));
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  unsigned long hits = 0;
  do {
    bool match = true;
    for (int i = 0; i < n - 1; ++i) {
      if ((perm[i] > perm[i + 1] ? 1 : 0) != target[i]) {
        match = false;
        break;
      }
    }
    if (match) ++hits;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Count(hits);
}

DescentSeries descent_series_word(const BinaryWord& word, int n_max) {
  if (n_max < 1) throw std::invalid_argument("descent_series: n_max must be >= 1");
  if (word.length() + 1 < static_cast<std::size_t>(n_max))
    throw std::invalid_argument("descent_series: word shorter than n_max-1 letters");
  DescentSeries out;
  out.spec = WordSpec(word, BinaryWord::from_string("0"));
  DescentCounter dc;
  for (int i = 1; i <= n_max - 1; ++i) dc.push_letter(word.bit(static_cast<std::size_t>(i)));
  Count fact = 1;
  for (int n = 1; n <= n_max; ++n) {
    dc.extend();
    fact *= n;
    out.counts.push_back(dc.d(n));
    out.growth_points.push_back(nth_root_float(dc.d(n), fact, static_cast<unsigned long>(n)));
  }
  return out;
}

DescentSeries descent_series(const WordSpec& spec, int n_max) {
  DescentSeries out =
      descent_series_word(word_prefix(spec, static_cast<std::size_t>(n_max > 0 ? n_max - 1 : 0)), n_max);
  out.spec = spec;
  return out;
}

double growth_estimate(const WordSpec& spec, int n) {
  if (n < 1) throw std::invalid_argument("growth_estimate: n must be >= 1");
  const Count d = count_descent(spec, n);
  return nth_root_float(d, factorial(static_cast<unsigned long>(n)),
                        static_cast<unsigned long>(n));
}

}  // namespace permgrowth
