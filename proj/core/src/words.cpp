#include "avoidance/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "avoidance/errors.hpp"

namespace avoidance {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

std::vector<Letter> parse_letters(std::string_view text) {
  text = trim(text);
  std::vector<Letter> letters;
  if (text.empty()) return letters;
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '1' || ch > '9') {
        throw InvalidArgument("invalid letter '" + std::string(1, ch) + "' in \"" +
                              std::string(text) + "\"");
      }
      letters.push_back(ch - '0');
    }
    return letters;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    auto stop = text.find(',', start);
    if (stop == std::string_view::npos) stop = text.size();
    auto token = trim(text.substr(start, stop - start));
    Letter value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || value < 1) {
      throw InvalidArgument("invalid letter \"" + std::string(token) + "\" in \"" +
                            std::string(text) + "\"");
    }
    letters.push_back(value);
    start = stop + 1;
  }
  return letters;
}

}  // namespace

// ---------------------------------------------------------------------------
// Word
// ---------------------------------------------------------------------------

Word::Word(std::vector<Letter> letters, int alphabet_size)
    : letters_(std::move(letters)), alphabet_size_(alphabet_size) {
  if (alphabet_size_ < 0) throw InvalidArgument("alphabet size must be nonnegative");
  for (Letter a : letters_) {
    if (a < 1 || a > alphabet_size_) {
      throw InvalidArgument("letter " + std::to_string(a) + " outside alphabet [1.." +
                            std::to_string(alphabet_size_) + "]");
    }
  }
}

Word Word::parse(std::string_view text, int alphabet_size) {
  auto letters = parse_letters(text);
  if (alphabet_size < 0) {
    alphabet_size = letters.empty() ? 0 : *std::max_element(letters.begin(), letters.end());
  }
  return Word(std::move(letters), alphabet_size);
}

Letter Word::max_letter() const noexcept {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

Word Word::reversed() const {
  return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend()), alphabet_size_);
}

Word Word::complemented() const {
  std::vector<Letter> out(letters_.size());
  std::transform(letters_.begin(), letters_.end(), out.begin(),
                 [k = alphabet_size_](Letter a) { return k + 1 - a; });
  return Word(std::move(out), alphabet_size_);
}

std::string Word::to_string() const {
  if (max_letter() > 9) return to_csv();
  std::string out;
  out.reserve(letters_.size());
  for (Letter a : letters_) out.push_back(static_cast<char>('0' + a));
  return out;
}

std::string Word::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(letters_[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pattern
// ---------------------------------------------------------------------------

Pattern::Pattern(std::vector<Letter> letters) {
  if (letters.empty()) throw InvalidArgument("a pattern must be nonempty");
  Letter top = *std::max_element(letters.begin(), letters.end());
  std::vector<bool> seen(static_cast<std::size_t>(top) + 1, false);
  for (Letter a : letters) {
    if (a < 1) throw InvalidArgument("pattern letters must be positive");
    seen[a] = true;
  }
  for (Letter a = 1; a <= top; ++a) {
    if (!seen[a]) {
      throw InvalidArgument("pattern must use every letter 1.." + std::to_string(top) +
                            "; letter " + std::to_string(a) + " is missing");
    }
  }
  word_ = Word(std::move(letters), top);
}

Pattern Pattern::parse(std::string_view text) { return Pattern(parse_letters(text)); }

std::strong_ordering Pattern::operator<=>(const Pattern& other) const {
  if (auto c = length() <=> other.length(); c != 0) return c;
  auto a = letters();
  auto b = other.letters();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

// ---------------------------------------------------------------------------
// PatternSet
// ---------------------------------------------------------------------------

PatternSet::PatternSet(std::initializer_list<Pattern> patterns)
    : PatternSet(std::vector<Pattern>(patterns)) {}

PatternSet::PatternSet(std::vector<Pattern> patterns) : patterns_(std::move(patterns)) {
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
}

PatternSet PatternSet::parse(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw InvalidArgument("unbalanced braces in pattern set");
    text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<Pattern> patterns;
  std::size_t i = 0;
  auto is_separator = [](char ch) {
    return ch == ',' || ch == '/' || ch == ';' || std::isspace(static_cast<unsigned char>(ch));
  };
  while (i < text.size()) {
    if (is_separator(text[i])) {
      ++i;
      continue;
    }
    if (text[i] == '[') {
      auto close = text.find(']', i);
      if (close == std::string_view::npos) throw InvalidArgument("unbalanced '[' in pattern set");
      patterns.push_back(Pattern::parse(text.substr(i + 1, close - i - 1)));
      i = close + 1;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_separator(text[j])) ++j;
    patterns.push_back(Pattern::parse(text.substr(i, j - i)));
    i = j;
  }
  return PatternSet(std::move(patterns));
}

bool PatternSet::is_subset_of(const PatternSet& other) const {
  return std::includes(other.patterns_.begin(), other.patterns_.end(), patterns_.begin(),
                       patterns_.end());
}

std::string PatternSet::to_string() const {
  if (patterns_.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (i) out.push_back(',');
    if (patterns_[i].letter_count() > 9) {
      out += "[" + patterns_[i].word().to_csv() + "]";
    } else {
      out += patterns_[i].to_string();
    }
  }
  return out;
}

std::strong_ordering PatternSet::operator<=>(const PatternSet& other) const {
  return std::lexicographical_compare_three_way(patterns_.begin(), patterns_.end(),
                                                other.patterns_.begin(), other.patterns_.end());
}

// ---------------------------------------------------------------------------
// Containment
// ---------------------------------------------------------------------------

namespace {

// Depth-first search for an order-isomorphic subsequence. Pattern position t is
// matched left to right; value_of[a] holds the word letter bound to pattern
// letter a (0 when unbound). Bound values are strictly increasing in a, so a new
// binding only has to sit between its nearest bound neighbours.
class OccurrenceSearch {
 public:
  OccurrenceSearch(std::span<const Letter> word, const Pattern& pattern, bool anchor_last)
      : word_(word),
        pattern_(pattern.letters()),
        anchor_last_(anchor_last),
        value_of_(static_cast<std::size_t>(pattern.letter_count()) + 2, 0) {}

  bool run() {
    if (pattern_.size() > word_.size()) return false;
    return extend(0, 0);
  }

 private:
  bool admissible(Letter p, Letter v) const {
    if (value_of_[p] != 0) return value_of_[p] == v;
    for (Letter q = p - 1; q >= 1; --q) {
      if (value_of_[q] != 0) {
        if (value_of_[q] >= v) return false;
        break;
      }
    }
    for (Letter q = p + 1; q < static_cast<Letter>(value_of_.size()); ++q) {
      if (value_of_[q] != 0) {
        if (value_of_[q] <= v) return false;
        break;
      }
    }
    return true;
  }

  bool extend(std::size_t t, std::size_t from) {
    const std::size_t m = pattern_.size();
    const std::size_t n = word_.size();
    if (t == m) return true;
    std::size_t lo = from;
    const std::size_t hi = n - (m - t);  // leave room for the remaining positions
    if (anchor_last_ && t + 1 == m) lo = n - 1;
    const Letter p = pattern_[t];
    for (std::size_t i = lo; i <= hi && i < n; ++i) {
      const Letter v = word_[i];
      if (!admissible(p, v)) continue;
      const bool fresh = value_of_[p] == 0;
      value_of_[p] = v;
      const bool found = extend(t + 1, i + 1);
      if (fresh) value_of_[p] = 0;
      if (found) return true;
    }
    return false;
  }

  std::span<const Letter> word_;
  std::span<const Letter> pattern_;
  bool anchor_last_;
  std::vector<Letter> value_of_;
};

}  // namespace

bool contains(std::span<const Letter> word, const Pattern& pattern, bool anchor_last) {
  if (word.empty()) return false;
  return OccurrenceSearch(word, pattern, anchor_last).run();
}

bool contains(const Word& word, const Pattern& pattern) {
  return contains(word.letters(), pattern, false);
}

bool avoids_all(const Word& word, const PatternSet& set) {
  return std::none_of(set.begin(), set.end(),
                      [&](const Pattern& p) { return contains(word, p); });
}

// ---------------------------------------------------------------------------
// Symmetries and pattern families
// ---------------------------------------------------------------------------

Pattern reverse(const Pattern& pattern) {
  auto a = pattern.letters();
  return Pattern(std::vector<Letter>(a.rbegin(), a.rend()));
}

Pattern complement(const Pattern& pattern) {
  auto w = pattern.word().complemented();
  auto a = w.letters();
  return Pattern(std::vector<Letter>(a.begin(), a.end()));
}

std::vector<Pattern> symmetry_class(const Pattern& pattern) {
  std::set<Pattern> orbit{pattern, reverse(pattern), complement(pattern),
                          reverse(complement(pattern))};
  return {orbit.begin(), orbit.end()};
}

PatternSet reverse(const PatternSet& set) {
  std::vector<Pattern> out;
  for (const auto& p : set) out.push_back(reverse(p));
  return PatternSet(std::move(out));
}

PatternSet complement(const PatternSet& set) {
  std::vector<Pattern> out;
  for (const auto& p : set) out.push_back(complement(p));
  return PatternSet(std::move(out));
}

Pattern make_constant_pattern(int copies) {
  if (copies < 1) throw InvalidArgument("<1>_l needs l >= 1");
  return Pattern(std::vector<Letter>(static_cast<std::size_t>(copies), 1));
}

Pattern make_vml(int left_ones, int right_ones) {
  if (left_ones < 0 || right_ones < 0) throw InvalidArgument("v_{m,l} needs m, l >= 0");
  if (left_ones + right_ones == 0) {
    throw InvalidArgument("v_{0,0} would be the lone letter 2, which is not a pattern");
  }
  std::vector<Letter> letters(static_cast<std::size_t>(left_ones), 1);
  letters.push_back(2);
  letters.insert(letters.end(), static_cast<std::size_t>(right_ones), 1);
  return Pattern(std::move(letters));
}

}  // namespace avoidance
