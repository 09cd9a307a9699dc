#include "taylor/combinatorics.hpp"

#include <algorithm>
#include <bit>

namespace taylor {

Word::Word(std::size_t length, std::uint64_t bits) : length_(length), bits_(bits) {
  if (length > max_length) throw DomainError("word longer than 63 letters");
  if (length < 64 && (bits >> length) != 0) throw DomainError("word bits exceed its length");
}

Word Word::parse(const std::string& text) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= std::uint64_t{1} << i;
    } else if (text[i] != '0') {
      throw DomainError("word literal must contain only 0 and 1");
    }
  }
  return Word(text.size(), bits);
}

Word Word::ones(std::size_t length) {
  return Word(length, length == 0 ? 0 : (~std::uint64_t{0} >> (64 - length)));
}

bool Word::at(std::size_t position) const {
  if (position == 0 || position > length_) throw DomainError("word position out of range");
  return ((bits_ >> (position - 1)) & 1U) != 0;
}

Word Word::concat(const Word& tail) const {
  return Word(length_ + tail.length_, bits_ | (tail.bits_ << length_));
}

std::string Word::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if ((bits_ >> i) & 1U) s[i] = '1';
  }
  return s;
}

std::size_t weight(const Word& w) { return static_cast<std::size_t>(std::popcount(w.bits())); }

BigInt position_factorial(const Word& w) {
  BigInt product = 1;
  for (std::size_t i = 1; i <= w.length(); ++i) {
    if (w.at(i)) product *= static_cast<unsigned long>(i);
  }
  return product;
}

std::vector<std::pair<Word, Word>> splits2(const Word& w) {
  std::vector<std::pair<Word, Word>> out;
  out.reserve(std::size_t{1} << weight(w));
  // Walk all submasks of w.
  std::uint64_t sub = w.bits();
  while (true) {
    out.emplace_back(Word(w.length(), sub), Word(w.length(), w.bits() & ~sub));
    if (sub == 0) break;
    sub = (sub - 1) & w.bits();
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.first.to_string() < b.first.to_string();
  });
  return out;
}

namespace {

std::vector<int> positions_of(const Word& w) {
  std::vector<int> set;
  for (std::size_t i = 1; i <= w.length(); ++i) {
    if (w.at(i)) set.push_back(static_cast<int>(i));
  }
  return set;
}

Word word_of(const Block& block, std::size_t length) {
  std::uint64_t bits = 0;
  for (int p : block) bits |= std::uint64_t{1} << (p - 1);
  return Word(length, bits);
}

std::vector<std::vector<Word>> to_words(const std::vector<std::vector<Block>>& parts,
                                        std::size_t length) {
  std::vector<std::vector<Word>> out;
  out.reserve(parts.size());
  for (const auto& partition : parts) {
    std::vector<Word> words;
    words.reserve(partition.size());
    for (const auto& block : partition) words.push_back(word_of(block, length));
    out.push_back(std::move(words));
  }
  return out;
}

}  // namespace

std::vector<std::vector<Word>> unordered_word_partitions(const Word& w) {
  return to_words(unordered_partitions(positions_of(w)), w.length());
}

std::vector<std::vector<Word>> ordered_word_partitions(const Word& w) {
  return to_words(ordered_partitions(positions_of(w)), w.length());
}

std::vector<std::vector<Block>> unordered_partitions(const std::vector<int>& set) {
  std::vector<std::vector<Block>> out;
  const std::size_t n = set.size();
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
  std::vector<std::size_t> rgs(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);
  while (true) {
    const std::size_t blocks = prefix_max[n - 1] + 1;
    std::vector<Block> partition(blocks);
    for (std::size_t i = 0; i < n; ++i) partition[rgs[i]].push_back(set[i]);
    out.push_back(std::move(partition));

    std::size_t i = n - 1;
    while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return out;
}

std::vector<std::vector<Block>> ordered_partitions(const std::vector<int>& set) {
  std::vector<std::vector<Block>> out;
  for (auto& partition : unordered_partitions(set)) {
    // Blocks come out of the RGS sorted by minimum element; permuting them
    // yields every ordering exactly once.
    std::vector<std::size_t> order(partition.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    do {
      std::vector<Block> tuple;
      tuple.reserve(order.size());
      for (std::size_t i : order) tuple.push_back(partition[i]);
      out.push_back(std::move(tuple));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<std::vector<std::size_t>> compositions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) return out;
  // Each composition corresponds to a subset of the n-1 cut points.
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t cuts = 0; cuts < count; ++cuts) {
    std::vector<std::size_t> parts;
    std::size_t current = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if ((cuts >> i) & 1U) {
        parts.push_back(current);
        current = 1;
      } else {
        ++current;
      }
    }
    parts.push_back(current);
    out.push_back(std::move(parts));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

BigInt factorial(std::size_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt multinomial(std::size_t n, const std::vector<std::size_t>& parts) {
  std::size_t sum = 0;
  for (std::size_t p : parts) sum += p;
  if (sum != n) throw DomainError("multinomial: parts do not sum to n");
  BigInt result = factorial(n);
  for (std::size_t p : parts) result /= factorial(p);
  return result;
}

}  // namespace taylor
