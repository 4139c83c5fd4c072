#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace qforge {

using Letter = std::uint16_t;

// Monomial of the free algebra: a sequence of 0-based generator indices.
// Ordered deglex: shorter words first, then lexicographic in generator order.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  Word prepend(Letter x) const;
  Word append(Letter x) const;
  Word concat(const Word& other) const;
  Word subword(std::size_t pos, std::size_t len) const;

  friend std::strong_ordering operator<=>(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) = default;

  // "x*y*x" style; empty word renders as "1".
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::vector<Letter> letters_;
};

// Bijection between words of length <= max_length over `radix` letters and an
// integer range, monotone for the deglex order.
class WordCoder {
 public:
  WordCoder(std::size_t radix, std::size_t max_length);

  std::uint64_t encode(const Word& w) const;
  Word decode(std::uint64_t key) const;

  std::size_t radix() const { return radix_; }
  std::size_t max_length() const { return max_length_; }
  // Number of words of exactly / at most the given length.
  std::uint64_t count(std::size_t length) const { return powers_.at(length); }
  std::uint64_t offset(std::size_t length) const { return offsets_.at(length); }

 private:
  std::size_t radix_;
  std::size_t max_length_;
  std::vector<std::uint64_t> powers_;
  std::vector<std::uint64_t> offsets_;
};

// All words of a given length in increasing order.
std::vector<Word> all_words(std::size_t radix, std::size_t length);

// radix^length, or nullopt-like sentinel UINT64_MAX on overflow.
std::uint64_t checked_power(std::size_t radix, std::size_t length);

}  // namespace qforge
