#pragma once

#include <optional>

#include "permgrowth/peaks.hpp"
#include "permgrowth/word.hpp"

namespace permgrowth {

struct PeriodicPeakFamily {
  long a = 2;
  long b = 2;
};

struct PeakTargetSearch {
  double target = 0.0;
  double epsilon = 0.0;
  double gamma = 0.0;  // ln(c/L), c = 3^(-1/3); +inf for L = 0
  long m = 0;          // search index of the first hit; 0 for endpoints
  std::optional<PeriodicPeakFamily> family;  // empty for endpoint words
  WordSpec word;
  double achieved_rate = 0.0;
};

inline constexpr double kPeakRateSup = 0.693361274350634;  // 3^(-1/3)

// Closed-form growth rate of (01(001)^a 0^b)^omega, evaluated in log
// space.  Per period of length 3(a-1)+(b+5) the count gains a factor
// 2^(b+2)(b+1)(b+4)/(b+5)! from the {2,b+4} block and (1/3)^(a-1) from
// the (010)^(a-1) chain, so
//
//   rate = exp([-ln((b+5)!) - (a-1) ln 3 + (b+2) ln 2
//               + ln(b+1) + ln(b+4)] / (3(a-1)+b+5)).
//
// Accurate to >= 10 significant digits.
double growth_rate_periodic(const PeriodicPeakFamily& fam);

// (count_peak_periodic(a,b,n)/n!)^(1/n); requires n >= 3a+1.
double empirical_peak_growth(const PeriodicPeakFamily& fam, int n);

// Finds a periodic word whose closed-form rate is within epsilon of L in
// [0, 3^(-1/3)].  Endpoints are special-cased (0^omega and (001)^omega);
// otherwise m = 2, 3, ... indexes families a = m with b solved by
// monotone bisection of the closed form, first hit returned.
PeakTargetSearch find_periodic_word(double target, double epsilon,
                                    long m_cap = 10'000'000);

}  // namespace permgrowth
