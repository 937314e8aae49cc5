#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permgrowth/numeric.hpp"
#include "permgrowth/word.hpp"

namespace permgrowth {

// Candidate peak set: strictly increasing positions >= 2.  Adjacency and
// the range bound are properties of (S, n) checked by is_admissible, not
// construction invariants -- inadmissible sets flow through the counting
// APIs and simply count zero permutations.
class PeakSet {
 public:
  PeakSet() = default;
  explicit PeakSet(std::vector<int> positions);
  static PeakSet parse_csv(const std::string& text);  // "2,5,9"; "" = empty
  static PeakSet from_position_set(const PositionSet& s);

  const std::vector<int>& positions() const { return positions_; }
  bool empty() const { return positions_.empty(); }
  std::size_t size() const { return positions_.size(); }
  int max() const;
  std::string str() const;  // "{2,5,9}"

  bool operator==(const PeakSet&) const = default;
  bool operator<(const PeakSet& o) const { return positions_ < o.positions_; }

 private:
  std::vector<int> positions_;
};

// Partition of an admissible set into maximal chains {l, l+2, ..., l+2k}.
struct AlternatingPartition {
  std::vector<PeakSet> blocks;
};

inline constexpr long kDefaultSupersetCap = 1'000'000;

// True iff S ⊆ {2,...,n-1} with no two consecutive elements.
bool is_admissible(const PeakSet& s, int n);

AlternatingPartition maximal_alternating_partition(const PeakSet& s);

// |Q_S(n)|: permutations of [n] whose peak set contains S, via
// n! * prod over chains A of E_{2|A|+1}/(2|A|+1)!.  The product is taken
// as one exact fraction; the result is asserted integral.
Count count_Q(const PeakSet& s, int n);

// All admissible T with S ⊆ T ⊆ {2,...,n-1}, S itself included.
// Backtracking over free slots; throws resource_limit_error past cap.
std::vector<PeakSet> admissible_supersets(const PeakSet& s, int n,
                                          long cap = kDefaultSupersetCap);

// |P_S(n)| by inclusion-exclusion over admissible supersets; 0 for
// inadmissible S.
Count count_peak_ie(const PeakSet& s, int n, long cap = kDefaultSupersetCap);

// Closed forms: S = {2} -> 2^(n-2)(n-2); S = {2, n-1} -> 2^(n-3)(n-4)(n-1).
// nullopt when the pattern does not apply; n >= 4 required.
std::optional<Count> count_peak_closed(const PeakSet& s, int n);

// Recursive gap-of-three splitting; unsplittable blocks dispatch to the
// closed forms or inclusion-exclusion.  Equals count_peak_ie everywhere.
Count count_peak_split(const PeakSet& s, int n,
                       long cap = kDefaultSupersetCap);

// Exact p_n for the peak word (01(001)^a 0^b)^omega via the block
// product: a leading (010)^a block, q interleaved {2,b+4}-blocks and
// (010)^(a-1) chains, and a residual dispatched on r (see the .cpp for
// the small-residual merging).  Requires a, b >= 2 and n >= 3a+1.
Count count_peak_periodic(long a, long b, int n,
                          long cap = kDefaultSupersetCap);

// The word (01(001)^a 0^b)^omega itself.
WordSpec periodic_peak_word(long a, long b);

// Oracle: enumerate S_n and compare exact peak sets (n <= limit).
Count brute_force_peak(const PeakSet& s, int n, int limit = 11);

}  // namespace permgrowth
