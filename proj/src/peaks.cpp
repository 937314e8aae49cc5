#include "permgrowth/peaks.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "permgrowth/errors.hpp"

namespace permgrowth {

PeakSet::PeakSet(std::vector<int> positions) : positions_(std::move(positions)) {
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (positions_[i] < 2)
      throw std::invalid_argument("PeakSet: positions must be >= 2");
    if (i > 0 && positions_[i] <= positions_[i - 1])
      throw std::invalid_argument("PeakSet: positions must be strictly increasing");
  }
}

PeakSet PeakSet::parse_csv(const std::string& text) {
  std::vector<int> pos;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("peak set: invalid position '" + item + "'");
    }
    if (used != item.size())
      throw std::invalid_argument("peak set: invalid position '" + item + "'");
    pos.push_back(v);
  }
  std::sort(pos.begin(), pos.end());
  return PeakSet(std::move(pos));
}

PeakSet PeakSet::from_position_set(const PositionSet& s) {
  return PeakSet(s.positions());
}

int PeakSet::max() const {
  if (positions_.empty()) throw std::logic_error("PeakSet::max on empty set");
  return positions_.back();
}

std::string PeakSet::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(positions_[i]);
  }
  return s + "}";
}

bool is_admissible(const PeakSet& s, int n) {
  const auto& p = s.positions();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 2 || p[i] > n - 1) return false;
    if (i > 0 && p[i] - p[i - 1] < 2) return false;
  }
  return true;
}

AlternatingPartition maximal_alternating_partition(const PeakSet& s) {
  const auto& p = s.positions();
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i] - p[i - 1] < 2)
      throw std::invalid_argument("maximal_alternating_partition: set has adjacent elements");
  AlternatingPartition out;
  std::vector<int> cur;
  for (int x : p) {
    if (!cur.empty() && x - cur.back() != 2) {
      out.blocks.emplace_back(std::move(cur));
      cur.clear();
    }
    cur.push_back(x);
  }
  if (!cur.empty()) out.blocks.emplace_back(std::move(cur));
  return out;
}

namespace {

// Q as one exact fraction: n! * prod E_{2c+1} / prod (2c+1)! over chain
// sizes c; asserted integral.
Count q_from_chains(const std::vector<int>& chain_sizes, int n,
                    const std::vector<Count>& zig) {
  Count num = factorial(static_cast<unsigned long>(n));
  Count den = 1;
  for (int c : chain_sizes) {
    num *= zig[static_cast<std::size_t>(2 * c + 1)];
    den *= factorial(static_cast<unsigned long>(2 * c + 1));
  }
  if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0)
    throw std::logic_error("count_Q: product is not an integer");
  Count out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

std::vector<int> chain_sizes_of(const std::vector<int>& sorted) {
  std::vector<int> sizes;
  int cur = 0, last = -10;
  for (int x : sorted) {
    if (cur > 0 && x - last == 2) {
      ++cur;
    } else {
      if (cur > 0) sizes.push_back(cur);
      cur = 1;
    }
    last = x;
  }
  if (cur > 0) sizes.push_back(cur);
  return sizes;
}

// Number of non-adjacent subsets of the free-slot list, saturated well
// above any usable cap (the count is a product of Fibonacci numbers over
// runs of consecutive slots).
unsigned long long count_free_subsets(const std::vector<int>& slots) {
  constexpr unsigned long long kSat = 1ull << 62;
  auto sat_add = [](unsigned long long x, unsigned long long y) {
    return x >= kSat - y ? kSat : x + y;
  };
  unsigned long long incl = 0, excl = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const bool adjacent = i > 0 && slots[i] - slots[i - 1] == 1;
    const unsigned long long next_incl = adjacent ? excl : sat_add(incl, excl);
    excl = sat_add(incl, excl);
    incl = next_incl;
  }
  return sat_add(incl, excl);
}

// Enumerates admissible supersets T of S within {2,...,n-1}, invoking
// visit(T_sorted) for each; classic include/exclude backtracking over the
// free slots (positions non-adjacent to S), skipping adjacent picks.
// The cap is checked up front so oversize inputs fail before any
// big-integer work starts.
void for_each_superset(const PeakSet& s, int n, long cap,
                       const std::function<void(const std::vector<int>&)>& visit) {
  const auto& base = s.positions();
  std::vector<int> free_slots;
  for (int p = 2; p <= n - 1; ++p) {
    bool blocked = false;
    for (int x : base)
      if (std::abs(p - x) <= 1) {
        blocked = true;
        break;
      }
    if (!blocked) free_slots.push_back(p);
  }
  const unsigned long long total = count_free_subsets(free_slots);
  if (cap >= 0 && total > static_cast<unsigned long long>(cap))
    throw resource_limit_error("peak superset enumeration needs " +
                               (total >= (1ull << 62) ? std::string("more than 2^62")
                                                      : std::to_string(total)) +
                               " sets, beyond the cap of " + std::to_string(cap) +
                               "; raise the cap to proceed");
  std::vector<int> chosen;
  std::vector<int> merged;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == free_slots.size()) {
      merged.clear();
      merged.resize(base.size() + chosen.size());
      std::merge(base.begin(), base.end(), chosen.begin(), chosen.end(), merged.begin());
      visit(merged);
      return;
    }
    rec(i + 1);  // exclude
    if (chosen.empty() || free_slots[i] - chosen.back() >= 2) {
      chosen.push_back(free_slots[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

}  // namespace

Count count_Q(const PeakSet& s, int n) {
  const auto& p = s.positions();
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i] - p[i - 1] < 2)
      throw std::invalid_argument("count_Q: inadmissible set (adjacent elements)");
  if (!s.empty() && s.max() > n - 1)
    throw std::invalid_argument("count_Q: requires n >= max(S)+1");
  if (n < 1) throw std::invalid_argument("count_Q: n must be >= 1");
  const std::vector<Count> zig =
      zigzag_table(static_cast<unsigned long>(2 * static_cast<int>(p.size()) + 1));
  return q_from_chains(chain_sizes_of(p), n, zig);
}

std::vector<PeakSet> admissible_supersets(const PeakSet& s, int n, long cap) {
  if (!is_admissible(s, n))
    throw std::invalid_argument("admissible_supersets: S is not admissible for n");
  std::vector<PeakSet> out;
  for_each_superset(s, n, cap,
                    [&out](const std::vector<int>& t) { out.emplace_back(t); });
  return out;
}

Count count_peak_ie(const PeakSet& s, int n, long cap) {
  if (n < 1) throw std::invalid_argument("count_peak_ie: n must be >= 1");
  if (!is_admissible(s, n)) return Count(0);
  const std::vector<Count> zig = zigzag_table(static_cast<unsigned long>(n) + 3);
  Count total = 0;
  const std::size_t base_size = s.size();
  for_each_superset(s, n, cap, [&](const std::vector<int>& t) {
    const Count q = q_from_chains(chain_sizes_of(t), n, zig);
    if ((t.size() - base_size) % 2 == 0)
      total += q;
    else
      total -= q;
  });
  if (sgn(total) < 0) throw std::logic_error("count_peak_ie: negative total");
  return total;
}

std::optional<Count> count_peak_closed(const PeakSet& s, int n) {
  if (n < 4) throw std::invalid_argument("count_peak_closed: requires n >= 4");
  const auto& p = s.positions();
  Count out;
  if (p.size() == 1 && p[0] == 2) {
    mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(n - 2));
    return out * (n - 2);
  }
  if (p.size() == 2 && p[0] == 2 && p[1] == n - 1) {
    mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(n - 3));
    return out * (n - 4) * (n - 1);
  }
  return std::nullopt;
}

Count count_peak_split(const PeakSet& s, int n, long cap) {
  if (n < 1) throw std::invalid_argument("count_peak_split: n must be >= 1");
  if (!is_admissible(s, n)) return Count(0);
  const auto& p = s.positions();
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i + 1] - p[i] == 3) {
      const int m = p[i];
      std::vector<int> left(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      std::vector<int> right;
      for (std::size_t j = i + 1; j < p.size(); ++j) right.push_back(p[j] - (m + 1));
      return binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(m + 1)) *
             count_peak_split(PeakSet(std::move(left)), m + 1, cap) *
             count_peak_split(PeakSet(std::move(right)), n - (m + 1), cap);
    }
  }
  if (n >= 4) {
    if (auto closed = count_peak_closed(s, n)) return *closed;
  }
  return count_peak_ie(s, n, cap);
}

WordSpec periodic_peak_word(long a, long b) {
  if (a < 2 || b < 2)
    throw std::invalid_argument("periodic peak word: requires a >= 2 and b >= 2");
  std::string period = "01";
  for (long i = 0; i < a; ++i) period += "001";
  period.append(static_cast<std::size_t>(b), '0');
  return WordSpec(BinaryWord(), BinaryWord::from_string(period));
}

Count count_peak_periodic(long a, long b, int n, long cap) {
  if (a < 2 || b < 2)
    throw std::invalid_argument("count_peak_periodic: requires a >= 2 and b >= 2");
  if (n < 3 * a + 1)
    throw std::invalid_argument("count_peak_periodic: requires n >= 3a+1");

  const long block = 3 * a + b + 2;
  long q = (n - 3 * a) / block;
  long r = (n - 3 * a) % block;
  if (r == 0) {
    q -= 1;
    r = block;
  }

  auto chain_positions = [](long upto) {
    std::vector<int> s;
    for (long x = 2; x <= upto; x += 3) s.push_back(static_cast<int>(x));
    return s;
  };
  // P of the chain {2,5,...} cap [upto] inside S_sz; inclusion-exclusion
  // sees at most a couple of free slots here.
  auto chain_count = [&](long upto, long sz) {
    return count_peak_ie(PeakSet(chain_positions(upto)), static_cast<int>(sz), cap);
  };

  // (size, exact count) per split block.
  std::vector<std::pair<long, Count>> blocks;
  blocks.emplace_back(3 * a, chain_count(3 * a - 1, 3 * a));
  const Count w2_count = *count_peak_closed(
      PeakSet({2, static_cast<int>(b) + 4}), static_cast<int>(b) + 5);
  const Count w3_count = chain_count(3 * a - 4, 3 * a - 3);
  for (long i = 0; i < q; ++i) {
    blocks.emplace_back(b + 5, w2_count);
    blocks.emplace_back(3 * a - 3, w3_count);
  }

  // The residual of length r.  A gap-of-three split is only valid when the
  // right part has a peak at relative position 2, i.e. the residual word
  // carries at least 3 letters; shorter residuals merge into the block
  // before them (their trailing zeros can open one more admissible slot,
  // which the inclusion-exclusion accounts for).
  if (r == 1) {
    blocks.emplace_back(1, Count(1));
  } else if (r == 2) {
    auto& [last_size, last_count] = blocks.back();
    const long merged = last_size + 2;
    last_count = q == 0 ? chain_count(3 * a - 1, merged) : chain_count(3 * a - 4, merged);
    last_size = merged;
  } else if (r < b + 5) {
    // residual word 010 0^{r-3}: peak set {2}
    Count c;
    if (r == 3)
      c = 2;
    else
      c = *count_peak_closed(PeakSet({2}), static_cast<int>(r));
    blocks.emplace_back(r, std::move(c));
  } else if (r == b + 5) {
    blocks.emplace_back(b + 5, w2_count);
  } else {
    const long rp = r - (b + 5);
    if (rp == 1) {
      blocks.emplace_back(b + 5, w2_count);
      blocks.emplace_back(1, Count(1));
    } else if (rp == 2) {
      blocks.emplace_back(b + 7,
                          count_peak_ie(PeakSet({2, static_cast<int>(b) + 4}),
                                        static_cast<int>(b) + 7, cap));
    } else {
      blocks.emplace_back(b + 5, w2_count);
      blocks.emplace_back(rp, chain_count(rp - 1, rp));
    }
  }

  long total_size = 0;
  Count num = factorial(static_cast<unsigned long>(n));
  Count den = 1;
  for (const auto& [sz, c] : blocks) {
    total_size += sz;
    num *= c;
    den *= factorial(static_cast<unsigned long>(sz));
  }
  if (total_size != n)
    throw std::logic_error("count_peak_periodic: block sizes do not sum to n");
  if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0)
    throw std::logic_error("count_peak_periodic: non-integral block product");
  Count out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

Count brute_force_peak(const PeakSet& s, int n, int limit) {
  if (n < 1) throw std::invalid_argument("brute_force_peak: n must be >= 1");
  if (n > limit)
    throw resource_limit_error("brute_force_peak: n = " + std::to_string(n) +
                               " exceeds limit " + std::to_string(limit));
  const auto& target = s.positions();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  unsigned long hits = 0;
  std::vector<int> peaks;
  do {
    peaks.clear();
    for (int i = 1; i + 1 < n; ++i)
      if (perm[i - 1] < perm[i] && perm[i] > perm[i + 1]) peaks.push_back(i + 1);
    if (peaks.size() == target.size() &&
        std::equal(peaks.begin(), peaks.end(), target.begin()))
      ++hits;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Count(hits);
}

}  // namespace permgrowth
