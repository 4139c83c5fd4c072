#include "qforge/word.hpp"

#include <limits>

#include "qforge/error.hpp"

namespace qforge {

Word Word::prepend(Letter x) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() + 1);
  out.push_back(x);
  out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(std::move(out));
}

Word Word::append(Letter x) const {
  Word out = *this;
  out.letters_.push_back(x);
  return out;
}

Word Word::concat(const Word& other) const {
  Word out = *this;
  out.letters_.insert(out.letters_.end(), other.letters_.begin(), other.letters_.end());
  return out;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  return a.letters_ <=> b.letters_;
}

std::string Word::to_string(const std::vector<std::string>& names) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += '*';
    out += letters_[i] < names.size() ? names[letters_[i]] : "g" + std::to_string(letters_[i]);
  }
  return out;
}

std::uint64_t checked_power(std::size_t radix, std::size_t length) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max() / 4;
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (radix != 0 && p > kMax / radix) return std::numeric_limits<std::uint64_t>::max();
    p *= radix;
  }
  return p;
}

WordCoder::WordCoder(std::size_t radix, std::size_t max_length)
    : radix_(radix), max_length_(max_length) {
  std::uint64_t total = 0;
  for (std::size_t len = 0; len <= max_length; ++len) {
    std::uint64_t p = checked_power(radix, len);
    if (p == std::numeric_limits<std::uint64_t>::max() || total > (1ULL << 62))
      fail(ErrorCode::ResourceBound, "word space too large to index");
    powers_.push_back(p);
    offsets_.push_back(total);
    total += p;
  }
  offsets_.push_back(total);
}

std::uint64_t WordCoder::encode(const Word& w) const {
  std::uint64_t code = 0;
  for (Letter x : w.letters()) code = code * radix_ + x;
  return offsets_[w.length()] + code;
}

Word WordCoder::decode(std::uint64_t key) const {
  std::size_t len = 0;
  while (len + 1 < offsets_.size() && offsets_[len + 1] <= key) ++len;
  std::uint64_t code = key - offsets_[len];
  std::vector<Letter> letters(len);
  for (std::size_t i = len; i-- > 0;) {
    letters[i] = static_cast<Letter>(code % radix_);
    code /= radix_;
  }
  return Word(std::move(letters));
}

std::vector<Word> all_words(std::size_t radix, std::size_t length) {
  std::vector<Word> out;
  std::vector<Letter> cur(length, 0);
  if (radix == 0) {
    if (length == 0) out.emplace_back();
    return out;
  }
  while (true) {
    out.emplace_back(cur);
    std::size_t i = length;
    while (i > 0) {
      --i;
      if (++cur[i] < radix) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (length == 0) return out;
  }
}

}  // namespace qforge
