#include "permgrowth/peak_growth.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "permgrowth/errors.hpp"

namespace permgrowth {

namespace {

double rate_of(long a, long b) {
  const double bb = static_cast<double>(b);
  const double num = -std::lgamma(bb + 6.0) - (static_cast<double>(a) - 1.0) * std::log(3.0) +
                     (bb + 2.0) * std::log(2.0) + std::log(bb + 1.0) + std::log(bb + 4.0);
  return std::exp(num / static_cast<double>(3 * (a - 1) + b + 5));
}

}  // namespace

double growth_rate_periodic(const PeriodicPeakFamily& fam) {
  if (fam.a < 2 || fam.b < 2)
    throw std::invalid_argument("growth_rate_periodic: requires a >= 2 and b >= 2");
  return rate_of(fam.a, fam.b);
}

double empirical_peak_growth(const PeriodicPeakFamily& fam, int n) {
  const Count p = count_peak_periodic(fam.a, fam.b, n);
  return nth_root_float(p, factorial(static_cast<unsigned long>(n)),
                        static_cast<unsigned long>(n));
}

PeakTargetSearch find_periodic_word(double target, double epsilon, long m_cap) {
  const double c = std::cbrt(1.0 / 3.0);
  if (!(epsilon > 0.0))
    throw std::invalid_argument("find_periodic_word: epsilon must be positive");
  if (!(target >= 0.0) || target > c + 1e-12)
    throw std::invalid_argument("find_periodic_word: target outside [0, 3^(-1/3)]");

  PeakTargetSearch out;
  out.target = target;
  out.epsilon = epsilon;
  if (target == 0.0) {
    out.gamma = std::numeric_limits<double>::infinity();
    out.word = parse_word_spec("[0]");
    out.achieved_rate = 0.0;
    return out;
  }
  out.gamma = std::log(c / target);
  if (c - target <= epsilon) {
    out.word = parse_word_spec("[001]");
    out.achieved_rate = c;
    return out;
  }

  // rate_of(a, .) decreases from rate_of(a, 2) to 0, so for each family
  // index m (= a) the two b values bracketing the target are found by
  // doubling plus bisection; the first m whose best bracket lands within
  // epsilon wins.
  for (long m = 2; m <= m_cap; ++m) {
    const long a = m;
    long best_b;
    if (rate_of(a, 2) <= target) {
      best_b = 2;
    } else {
      long lo = 2, hi = 4;
      while (rate_of(a, hi) > target) {
        lo = hi;
        hi *= 2;
      }
      while (hi - lo > 1) {
        const long mid = lo + (hi - lo) / 2;
        if (rate_of(a, mid) > target)
          lo = mid;
        else
          hi = mid;
      }
      best_b = std::abs(rate_of(a, hi) - target) <= std::abs(rate_of(a, lo) - target)
                   ? hi
                   : lo;
    }
    const double rate = rate_of(a, best_b);
    if (std::abs(rate - target) < epsilon) {
      out.m = m;
      out.family = PeriodicPeakFamily{a, best_b};
      out.word = periodic_peak_word(a, best_b);
      out.achieved_rate = rate;
      return out;
    }
  }
  throw resource_limit_error("find_periodic_word: no family within epsilon below m cap " +
                             std::to_string(m_cap));
}

}  // namespace permgrowth
