#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace avoidance {

using Letter = int;

// A finite sequence over the alphabet {1, ..., alphabet_size}. The alphabet is
// carried explicitly: avoider counts depend on k, not on the letters used.
class Word {
 public:
  Word() = default;
  Word(std::vector<Letter> letters, int alphabet_size);

  // Digit string ("4216235256") or comma-separated integers ("1,10,2").
  // When alphabet_size is negative the alphabet is the largest letter present.
  static Word parse(std::string_view text, int alphabet_size = -1);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int alphabet_size() const noexcept { return alphabet_size_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter max_letter() const noexcept;

  Word reversed() const;
  // a -> k + 1 - a within this word's own alphabet.
  Word complemented() const;

  // Digit string when every letter fits in one digit, comma-separated otherwise.
  std::string to_string() const;
  std::string to_csv() const;

  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
  int alphabet_size_ = 0;
};

// A word over {1, ..., l} that uses every letter 1..l at least once.
class Pattern {
 public:
  explicit Pattern(std::vector<Letter> letters);
  static Pattern parse(std::string_view text);

  const Word& word() const noexcept { return word_; }
  std::span<const Letter> letters() const noexcept { return word_.letters(); }
  std::size_t length() const noexcept { return word_.size(); }
  int letter_count() const noexcept { return word_.alphabet_size(); }
  std::string to_string() const { return word_.to_string(); }

  // Canonical order: shorter first, then lexicographic.
  std::strong_ordering operator<=>(const Pattern& other) const;
  bool operator==(const Pattern& other) const = default;

 private:
  Word word_;
};

// A finite set of patterns held in canonical order without duplicates.
class PatternSet {
 public:
  PatternSet() = default;
  PatternSet(std::initializer_list<Pattern> patterns);
  explicit PatternSet(std::vector<Pattern> patterns);

  // Comma, slash, semicolon or whitespace separated; optional braces; "{}" or ""
  // is the empty set. Patterns with letters above 9 go in brackets: "[1,2,...,10]".
  static PatternSet parse(std::string_view text);

  std::span<const Pattern> patterns() const noexcept { return patterns_; }
  auto begin() const noexcept { return patterns_.begin(); }
  auto end() const noexcept { return patterns_.end(); }
  std::size_t size() const noexcept { return patterns_.size(); }
  bool empty() const noexcept { return patterns_.empty(); }
  bool is_subset_of(const PatternSet& other) const;

  // "112,221"; "{}" for the empty set.
  std::string to_string() const;

  std::strong_ordering operator<=>(const PatternSet& other) const;
  bool operator==(const PatternSet& other) const = default;

 private:
  std::vector<Pattern> patterns_;
};

bool contains(const Word& word, const Pattern& pattern);

// Occurrence test over a raw letter sequence. With anchor_last the occurrence
// must use the final letter; this is the incremental check used when a word
// avoiding the pattern is extended by one letter.
bool contains(std::span<const Letter> word, const Pattern& pattern, bool anchor_last = false);

bool avoids_all(const Word& word, const PatternSet& set);

Pattern reverse(const Pattern& pattern);
Pattern complement(const Pattern& pattern);
// {p, r(p), c(p), r(c(p))} deduplicated, canonical order.
std::vector<Pattern> symmetry_class(const Pattern& pattern);

PatternSet reverse(const PatternSet& set);
PatternSet complement(const PatternSet& set);

// <1>_l, l copies of the letter 1.
Pattern make_constant_pattern(int copies);
// v_{m,l}: m ones, a 2, then l ones. Requires m + l >= 1.
Pattern make_vml(int left_ones, int right_ones);

}  // namespace avoidance
