#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace permgrowth {

// Finite {0,1} word, 1-indexed like the w_1 w_2 ... convention used
// throughout the library.
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::vector<std::uint8_t> bits);
  static BinaryWord from_string(std::string_view s);
  static BinaryWord zeros(std::size_t len);

  std::size_t length() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  int bit(std::size_t i) const;  // 1-indexed
  void push_back(int b);
  std::string str() const;

  bool operator==(const BinaryWord&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// Strictly increasing positions >= 1 (indicator-set view of a word).
class PositionSet {
 public:
  PositionSet() = default;
  explicit PositionSet(std::vector<int> positions);

  const std::vector<int>& positions() const { return positions_; }
  bool empty() const { return positions_.empty(); }
  std::size_t size() const { return positions_.size(); }
  int max() const;  // requires non-empty
  std::string str() const;

  bool operator==(const PositionSet&) const = default;

 private:
  std::vector<int> positions_;
};

// Eventually periodic infinite word: prefix then period repeated forever.
class WordSpec {
 public:
  WordSpec();  // 0^omega
  WordSpec(BinaryWord prefix, BinaryWord period);

  const BinaryWord& prefix() const { return prefix_; }
  const BinaryWord& period() const { return period_; }
  int letter(std::size_t i) const;  // 1-indexed
  std::string str() const;          // prefix[period]

  bool operator==(const WordSpec&) const = default;

 private:
  BinaryWord prefix_;
  BinaryWord period_;
};

// Grammar: PREFIX? '[' PERIOD ']' over {0,1}, or a bare PREFIX which
// denotes prefix followed by 0^omega.
WordSpec parse_word_spec(std::string_view text);

// First k letters of the infinite word.
BinaryWord word_prefix(const WordSpec& spec, std::size_t k);

// m-shift: w_{m+1} w_{m+2} ...; prefix shortened first, then the period
// rotated, keeping specs canonical.
WordSpec shift(const WordSpec& spec, std::size_t m);

// {i in [n-2] : w_i != w_{i+1}} for a word read as indicator of S ⊆ [n-1],
// n = length + 1.
PositionSet alternation_set(const BinaryWord& word);

BinaryWord set_to_word(const PositionSet& s, std::size_t len);
PositionSet word_to_set(const BinaryWord& word);

}  // namespace permgrowth
