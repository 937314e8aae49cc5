#include "permgrowth/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace permgrowth {

BinaryWord::BinaryWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_)
    if (b > 1) throw std::invalid_argument("BinaryWord: letters must be 0 or 1");
}

BinaryWord BinaryWord::from_string(std::string_view s) {
  std::vector<std::uint8_t> bits;
  bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1')
      throw std::invalid_argument(std::string("word: invalid character '") + c + "'");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BinaryWord(std::move(bits));
}

BinaryWord BinaryWord::zeros(std::size_t len) {
  return BinaryWord(std::vector<std::uint8_t>(len, 0));
}

int BinaryWord::bit(std::size_t i) const {
  if (i < 1 || i > bits_.size()) throw std::out_of_range("BinaryWord::bit");
  return bits_[i - 1];
}

void BinaryWord::push_back(int b) {
  if (b != 0 && b != 1) throw std::invalid_argument("BinaryWord: letters must be 0 or 1");
  bits_.push_back(static_cast<std::uint8_t>(b));
}

std::string BinaryWord::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

PositionSet::PositionSet(std::vector<int> positions) : positions_(std::move(positions)) {
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (positions_[i] < 1)
      throw std::invalid_argument("PositionSet: positions must be >= 1");
    if (i > 0 && positions_[i] <= positions_[i - 1])
      throw std::invalid_argument("PositionSet: positions must be strictly increasing");
  }
}

int PositionSet::max() const {
  if (positions_.empty()) throw std::logic_error("PositionSet::max on empty set");
  return positions_.back();
}

std::string PositionSet::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(positions_[i]);
  }
  return s + "}";
}

WordSpec::WordSpec() : period_(BinaryWord::from_string("0")) {}

WordSpec::WordSpec(BinaryWord prefix, BinaryWord period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
  if (period_.empty()) throw std::invalid_argument("WordSpec: period must be nonempty");
}

int WordSpec::letter(std::size_t i) const {
  if (i == 0) throw std::out_of_range("WordSpec::letter: 1-indexed");
  if (i <= prefix_.length()) return prefix_.bit(i);
  const std::size_t off = (i - prefix_.length() - 1) % period_.length();
  return period_.bit(off + 1);
}

std::string WordSpec::str() const {
  return prefix_.str() + "[" + period_.str() + "]";
}

WordSpec parse_word_spec(std::string_view text) {
  const auto open = text.find('[');
  if (open == std::string_view::npos) {
    if (text.find(']') != std::string_view::npos)
      throw std::invalid_argument("word spec: ']' without '['");
    return WordSpec(BinaryWord::from_string(text), BinaryWord::from_string("0"));
  }
  if (text.empty() || text.back() != ']')
    throw std::invalid_argument("word spec: missing closing ']'");
  const auto prefix = text.substr(0, open);
  const auto period = text.substr(open + 1, text.size() - open - 2);
  if (period.empty()) throw std::invalid_argument("word spec: empty period");
  if (period.find('[') != std::string_view::npos ||
      period.find(']') != std::string_view::npos)
    throw std::invalid_argument("word spec: nested brackets");
  return WordSpec(BinaryWord::from_string(prefix), BinaryWord::from_string(period));
}

BinaryWord word_prefix(const WordSpec& spec, std::size_t k) {
  BinaryWord w;
  for (std::size_t i = 1; i <= k; ++i) w.push_back(spec.letter(i));
  return w;
}

WordSpec shift(const WordSpec& spec, std::size_t m) {
  const std::size_t plen = spec.prefix().length();
  if (m <= plen) {
    BinaryWord pre;
    for (std::size_t i = m + 1; i <= plen; ++i) pre.push_back(spec.prefix().bit(i));
    return WordSpec(std::move(pre), spec.period());
  }
  const std::size_t rot = (m - plen) % spec.period().length();
  BinaryWord per;
  for (std::size_t i = 0; i < spec.period().length(); ++i)
    per.push_back(spec.period().bit((rot + i) % spec.period().length() + 1));
  return WordSpec(BinaryWord(), std::move(per));
}

PositionSet alternation_set(const BinaryWord& word) {
  if (word.length() < 1)
    throw std::invalid_argument("alternation_set: word must be nonempty");
  std::vector<int> pos;
  for (std::size_t i = 1; i + 1 <= word.length(); ++i)
    if (word.bit(i) != word.bit(i + 1)) pos.push_back(static_cast<int>(i));
  return PositionSet(std::move(pos));
}

BinaryWord set_to_word(const PositionSet& s, std::size_t len) {
  if (!s.empty() && static_cast<std::size_t>(s.max()) > len)
    throw std::invalid_argument("set_to_word: position exceeds word length");
  std::vector<std::uint8_t> bits(len, 0);
  for (int p : s.positions()) bits[static_cast<std::size_t>(p) - 1] = 1;
  return BinaryWord(std::move(bits));
}

PositionSet word_to_set(const BinaryWord& word) {
  std::vector<int> pos;
  for (std::size_t i = 1; i <= word.length(); ++i)
    if (word.bit(i) == 1) pos.push_back(static_cast<int>(i));
  return PositionSet(std::move(pos));
}

}  // namespace permgrowth
