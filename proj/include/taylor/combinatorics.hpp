#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "taylor/scalar.hpp"

namespace taylor {

/// Binary word w = w_1 ... w_n indexing the coordinates of an iterated
/// tangent tower. Bit (i-1) of `bits()` stores w_i, so the integer value of a
/// word is also the offset of its coordinate in a dense tower.
class Word {
 public:
  static constexpr std::size_t max_length = 63;

  Word() = default;
  Word(std::size_t length, std::uint64_t bits);

  /// Parses a string of '0'/'1' characters, leftmost character is w_1.
  static Word parse(const std::string& text);
  static Word zeros(std::size_t length) { return Word(length, 0); }
  static Word ones(std::size_t length);

  std::size_t length() const noexcept { return length_; }
  std::uint64_t bits() const noexcept { return bits_; }
  /// w_i with 1-based position i.
  bool at(std::size_t position) const;

  /// Concatenation `*this` followed by `tail`.
  Word concat(const Word& tail) const;

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::size_t length_ = 0;
  std::uint64_t bits_ = 0;
};

/// Number of 1-bits.
std::size_t weight(const Word& w);

/// Product of the 1-based positions of the set bits (empty product is 1).
BigInt position_factorial(const Word& w);

/// All ordered pairs of disjoint words whose union is `w`, empty parts
/// included; lexicographic in the first component. 2^weight(w) entries.
std::vector<std::pair<Word, Word>> splits2(const Word& w);

/// Partitions of `w` (seen as a set of positions) into nonempty words.
std::vector<std::vector<Word>> unordered_word_partitions(const Word& w);
/// Ordered partitions of `w` into nonempty words.
std::vector<std::vector<Word>> ordered_word_partitions(const Word& w);

using Block = std::vector<int>;

/// All tuples of nonempty disjoint blocks covering `set` (any length >= 1);
/// the empty set yields the single empty tuple. Sorted by length, then
/// lexicographically.
std::vector<std::vector<Block>> ordered_partitions(const std::vector<int>& set);

/// Set partitions of `set` in restricted-growth order. Bell(|set|) entries.
std::vector<std::vector<Block>> unordered_partitions(const std::vector<int>& set);

/// Ordered tuples of positive integers summing to n, grouped by length then
/// lexicographic. Empty for n = 0.
std::vector<std::vector<std::size_t>> compositions(std::size_t n);

BigInt factorial(std::size_t n);

/// n! / prod(parts_i!). Throws DomainError when the parts do not sum to n.
BigInt multinomial(std::size_t n, const std::vector<std::size_t>& parts);

}  // namespace taylor
