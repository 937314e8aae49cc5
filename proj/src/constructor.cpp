#include "permgrowth/constructor.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "permgrowth/errors.hpp"

namespace permgrowth {

const Ratio& two_over_pi_lower() {
  static const Ratio r(636619, 1000000);
  return r;
}

const Ratio& two_over_pi_upper() {
  static const Ratio r(636620, 1000000);  // canonicalized to 31831/50000
  return r;
}

namespace {

Ratio canonical(const Ratio& r) {
  Ratio c = r;
  c.canonicalize();
  return c;
}

// Exact power-and-factorial track for one control ratio
// r_n = d_n M^n / n! with M = q/p for a target L = p/q.  The sign of
// r_n - 1 is decided by comparing d_n q^n against n! p^n; p = 0 (target
// L = 0) makes the right side vanish, so the sign is constantly +1 and a
// 0-state never exits -- no special casing needed.
class ControlTrack {
 public:
  explicit ControlTrack(const Ratio& target)
      : p_(target.get_num()), q_(target.get_den()), pow_p_(p_), pow_q_(q_) {
    if (sgn(p_) > 0)
      log_m_ = log_count(q_) - log_count(p_);
    else
      log_m_ = std::numeric_limits<long double>::infinity();
  }

  // Advances the stored powers from n-1 to n.
  void step() {
    pow_p_ *= p_;
    pow_q_ *= q_;
  }

  int sign_at(const Count& d_n, const Count& fact_n) const {
    const int c = cmp(d_n * pow_q_, fact_n * pow_p_);
    return c > 0 ? 1 : (c < 0 ? -1 : 0);
  }

  double approx_at(const Count& d_n, const Count& fact_n, int n) const {
    if (std::isinf(static_cast<double>(log_m_)))
      return std::numeric_limits<double>::infinity();
    const long double l =
        log_count(d_n) - log_count(fact_n) + static_cast<long double>(n) * log_m_;
    return static_cast<double>(std::exp(l));
  }

  // Seed value r_1 = M.
  int seed_sign() const {
    if (sgn(p_) == 0) return 1;
    const int c = cmp(q_, p_);
    return c > 0 ? 1 : (c < 0 ? -1 : 0);
  }
  double seed_approx() const {
    if (sgn(p_) == 0) return std::numeric_limits<double>::infinity();
    return static_cast<double>(std::exp(log_m_));
  }

 private:
  Count p_, q_;
  Count pow_p_, pow_q_;  // p^n, q^n
  long double log_m_ = 0.0L;
};

// Least K such that M^k/k! <= 1 and (1/2)(E_k/k!)M'^k >= 1 for every k in
// [K, K+200].  The zigzag row is grown boustrophedon-style only as far as
// the scan actually reaches.
int scan_threshold(const Ratio& low, const Ratio& high, int cap) {
  constexpr int kWindow = 200;
  const Count pl = low.get_num(), ql = low.get_den();
  const Count ph = high.get_num(), qh = high.get_den();

  std::vector<Count> row{Count(1)};  // boustrophedon row, k = 0
  Count fact = 1;
  Count pow_pl = 1, pow_ql = 1, pow_ph = 1, pow_qh = 1;
  int run_start = 0;  // earliest k of the current all-good run; 0 = none
  for (int k = 1; k <= cap; ++k) {
    std::vector<Count> next(static_cast<std::size_t>(k) + 1);
    next[0] = 0;
    for (int i = 1; i <= k; ++i)
      next[static_cast<std::size_t>(i)] =
          next[static_cast<std::size_t>(i - 1)] + row[static_cast<std::size_t>(k - i)];
    const Count& e_k = next[static_cast<std::size_t>(k)];

    fact *= k;
    pow_pl *= pl;
    pow_ql *= ql;
    pow_ph *= ph;
    pow_qh *= qh;
    bool ok = cmp(pow_ql, fact * pow_pl) <= 0;              // M^k/k! <= 1
    if (ok) ok = cmp(e_k * pow_qh, 2 * fact * pow_ph) >= 0;  // (1/2)(E_k/k!)M'^k >= 1
    row = std::move(next);
    if (!ok) {
      run_start = 0;
      continue;
    }
    if (run_start == 0) run_start = k;
    if (k - run_start >= kWindow) {
      // Stability beyond the window: K+200 must exceed M so M^k/k! keeps
      // falling; the second condition grows by ~(2M'/pi) > 1 per step.
      if (cmp(Count(k) * pl, ql) <= 0) continue;
      return run_start;
    }
  }
  throw resource_limit_error("compute_K: no stable threshold found below scan cap " +
                             std::to_string(cap));
}

enum class TargetKind { kZero, kGeneric, kEndpoint };

TargetKind classify_target(const Ratio& target) {
  if (sgn(target) < 0) throw std::invalid_argument("target must be >= 0");
  if (cmp(target, two_over_pi_upper()) > 0)
    throw std::invalid_argument("target exceeds the 2/pi enclosure (636620/1000000)");
  if (sgn(target) == 0) return TargetKind::kZero;
  if (cmp(target, two_over_pi_lower()) >= 0) return TargetKind::kEndpoint;
  return TargetKind::kGeneric;
}

ConstructorRun alternating_run(const Ratio& low, const Ratio& high, int n_max) {
  ConstructorRun run;
  run.target_low = low;
  run.target_high = high;
  run.dual = !(low == high);
  run.state_final = RunState::kOneZeros;
  run.word.push_back(0);
  for (int i = 2; i <= n_max; ++i) run.word.push_back(i % 2 == 0 ? 1 : 0);
  return run;
}

// The main loop.  Flip conditions read the most recently computed control
// value (none exists on the very first iteration, so the starting state
// survives at least one append).  In state 10 letters arrive in pairs;
// the final pair is truncated to a lone '1' when only one slot remains,
// mirroring the odd-k (10)^{k/2} convention.
ConstructorRun run_algorithm(const Ratio& low, const Ratio& high, int n_max,
                             int threshold_k, RunState start_state) {
  ConstructorRun run;
  run.target_low = low;
  run.target_high = high;
  run.dual = !(low == high);
  run.threshold_k = threshold_k;

  ControlTrack track_low(low);
  ControlTrack track_high(high);

  DescentCounter dc;
  dc.push_letter(0);
  dc.extend();  // d_1 = 1
  run.word.push_back(0);
  run.r_log.push_back(RSample{1, track_low.seed_sign(), track_low.seed_approx(),
                              track_high.seed_sign(), track_high.seed_approx()});

  Count fact = 1;
  RunState state = start_state;
  bool have_computed_r = false;
  int sign_low = 0, sign_high = 0;
  int n = 2;

  auto advance = [&](int idx) {
    dc.extend();  // d_idx from w[idx-1]
    fact *= idx;
    track_low.step();
    track_high.step();
    sign_low = track_low.sign_at(dc.d(idx), fact);
    sign_high = track_high.sign_at(dc.d(idx), fact);
    run.r_log.push_back(RSample{idx, sign_low,
                                track_low.approx_at(dc.d(idx), fact, idx), sign_high,
                                track_high.approx_at(dc.d(idx), fact, idx)});
    have_computed_r = true;
  };

  while (n <= n_max) {
    if (have_computed_r) {
      if (state == RunState::kZeros && sign_low < 0) {
        state = RunState::kOneZeros;
        run.flips.push_back(n - 1);
      } else if (state == RunState::kOneZeros && sign_high > 0) {
        state = RunState::kZeros;
        run.flips.push_back(n - 1);
      }
    }
    if (state == RunState::kZeros) {
      run.word.push_back(0);
      dc.push_letter(0);
      advance(n);
      n += 1;
    } else {
      run.word.push_back(1);
      dc.push_letter(1);
      advance(n);
      if (n + 1 <= n_max) {
        run.word.push_back(0);
        dc.push_letter(0);
        advance(n + 1);
      }
      n += 2;
    }
  }
  run.state_final = state;
  return run;
}

}  // namespace

int compute_K_dual(const Ratio& target_low, const Ratio& target_high, int scan_cap) {
  const Ratio lo = canonical(target_low);
  const Ratio hi = canonical(target_high);
  if (sgn(lo) <= 0 || cmp(lo, two_over_pi_lower()) >= 0)
    throw std::invalid_argument("compute_K: target must lie strictly inside (0, 2/pi)");
  if (sgn(hi) <= 0 || cmp(hi, two_over_pi_lower()) >= 0)
    throw std::invalid_argument("compute_K: upper target must lie strictly inside (0, 2/pi)");
  if (cmp(lo, hi) > 0)
    throw std::invalid_argument("compute_K: lower target exceeds upper target");
  return scan_threshold(lo, hi, scan_cap);
}

int compute_K(const Ratio& target, int scan_cap) {
  return compute_K_dual(target, target, scan_cap);
}

ConstructorRun construct_word(const Ratio& target, int n_max) {
  if (n_max < 1) throw std::invalid_argument("construct_word: n_max must be >= 1");
  const Ratio t = canonical(target);
  switch (classify_target(t)) {
    case TargetKind::kZero:
      return run_algorithm(t, t, n_max, 0, RunState::kZeros);
    case TargetKind::kEndpoint:
      return alternating_run(t, t, n_max);
    case TargetKind::kGeneric:
      return run_algorithm(t, t, n_max, compute_K(t), RunState::kZeros);
  }
  throw std::logic_error("construct_word: unreachable");
}

ConstructorRun construct_word_dual(const Ratio& target_low, const Ratio& target_high,
                                   int n_max) {
  if (n_max < 1) throw std::invalid_argument("construct_word_dual: n_max must be >= 1");
  const Ratio lo = canonical(target_low);
  Ratio hi = canonical(target_high);
  if (cmp(lo, hi) > 0)
    throw std::invalid_argument("construct_word_dual: lower target exceeds upper target");
  const TargetKind lo_kind = classify_target(lo);
  const TargetKind hi_kind = classify_target(hi);
  if (lo == hi) {
    ConstructorRun run = construct_word(lo, n_max);
    run.target_high = hi;
    return run;
  }
  if (lo_kind == TargetKind::kEndpoint) return alternating_run(lo, hi, n_max);
  // An upper target inside the 2/pi enclosure is snapped to the rational
  // lower bound so the r' comparisons stay exact.  No desk-scale K exists
  // that close to 2/pi, and none when L = 0 disables the first condition;
  // those runs record K = 0.
  if (hi_kind == TargetKind::kEndpoint) hi = two_over_pi_lower();
  if (lo_kind == TargetKind::kZero) {
    // The 0-state exit condition (r < 1) never fires for L = 0, so a run
    // started there would be all zeros.  Start in state 10 instead:
    // alternate until r' crosses 1, then zeros forever.
    return run_algorithm(lo, hi, n_max, 0, RunState::kOneZeros);
  }
  const int k = hi_kind == TargetKind::kEndpoint ? 0 : compute_K_dual(lo, hi);
  return run_algorithm(lo, hi, n_max, k, RunState::kZeros);
}

std::pair<double, double> envelope(int n, int k_threshold, const Ratio& m_ratio) {
  if (n < 1 || k_threshold < 1)
    throw std::invalid_argument("envelope: n and K must be >= 1");
  const double nn = static_cast<double>(n);
  const double kk = static_cast<double>(k_threshold);
  const double f = std::exp(-(kk * std::log(nn + kk) + std::log(nn)) / nn);
  const long double log_m =
      log_count(Count(m_ratio.get_num())) - log_count(Count(m_ratio.get_den()));
  const double g = static_cast<double>(std::exp(
      (static_cast<long double>(k_threshold) + 2.0L) * log_m / static_cast<long double>(n)));
  return {f, g};
}

double ConstructorRun::growth_at(int n) const {
  if (n >= 1 && static_cast<std::size_t>(n) <= r_log.size()) {
    const RSample& s = r_log[static_cast<std::size_t>(n - 1)];
    if (s.n == n) {
      const double lo = target_low.get_d();
      if (lo > 0.0 && std::isfinite(s.r_low))
        return lo * std::exp(std::log(s.r_low) / static_cast<double>(n));
      const double hi = target_high.get_d();
      if (hi > 0.0 && std::isfinite(s.r_high))
        return hi * std::exp(std::log(s.r_high) / static_cast<double>(n));
    }
  }
  // Endpoint runs carry no usable control log; recount from the word.
  if (static_cast<std::size_t>(n) > word.length() + 1)
    throw std::invalid_argument("growth_at: n beyond the constructed word");
  const Count d = count_descent_word(word, n);
  return nth_root_float(d, factorial(static_cast<unsigned long>(n)),
                        static_cast<unsigned long>(n));
}

}  // namespace permgrowth
