#include "permgrowth/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace permgrowth {

Count factorial(unsigned long n) {
  Count r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Count binomial(unsigned long n, unsigned long k) {
  if (k > n) return Count(0);
  Count r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::vector<Count> zigzag_table(unsigned long kmax) {
  std::vector<Count> e;
  e.reserve(kmax + 1);
  e.emplace_back(1);
  std::vector<Count> row{Count(1)};
  for (unsigned long n = 1; n <= kmax; ++n) {
    std::vector<Count> next(n + 1);
    next[0] = 0;
    for (unsigned long i = 1; i <= n; ++i) next[i] = next[i - 1] + row[n - i];
    e.push_back(next[n]);
    row = std::move(next);
  }
  return e;
}

Count euler_zigzag(unsigned long k) { return zigzag_table(k)[k]; }

long double log_count(const Count& v) {
  if (sgn(v) <= 0) throw std::invalid_argument("log_count: operand must be positive");
  signed long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  static const long double kLn2 = 0.69314718055994530941723L;
  return std::log(static_cast<long double>(mant)) +
         static_cast<long double>(exp2) * kLn2;
}

double nth_root_float(const Count& num, const Count& den, unsigned long n) {
  if (n == 0) throw std::invalid_argument("nth_root_float: n must be positive");
  if (sgn(num) < 0) throw std::invalid_argument("nth_root_float: negative operand");
  if (sgn(num) == 0) return 0.0;
  const long double l = log_count(num) - log_count(den);
  return static_cast<double>(std::exp(l / static_cast<long double>(n)));
}

double nth_root_float(const Ratio& x, unsigned long n) {
  return nth_root_float(Count(x.get_num()), Count(x.get_den()), n);
}

Ratio make_ratio(const Count& num, const Count& den) {
  if (sgn(den) <= 0) throw std::invalid_argument("make_ratio: denominator must be positive");
  Ratio r(num, den);
  r.canonicalize();
  return r;
}

Ratio parse_ratio(const std::string& text) {
  const auto slash = text.find('/');
  auto parse_int = [](const std::string& s) {
    if (s.empty()) throw std::invalid_argument("ratio: empty integer part");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("ratio: bare sign");
    for (std::size_t i = start; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw std::invalid_argument("ratio: expected digits, got '" + s + "'");
    return Count(s);
  };
  if (slash == std::string::npos) return make_ratio(parse_int(text), Count(1));
  const Count num = parse_int(text.substr(0, slash));
  const Count den = parse_int(text.substr(slash + 1));
  if (sgn(den) == 0) throw std::invalid_argument("ratio: zero denominator");
  return make_ratio(num, den);
}

}  // namespace permgrowth
