#include "avoidance/bijections.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "avoidance/errors.hpp"

namespace avoidance {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  std::vector<bool> seen(values_.size() + 1, false);
  for (int v : values_) {
    if (v < 1 || v > static_cast<int>(values_.size()) || seen[v]) {
      throw InvalidArgument("not a permutation of 1.." + std::to_string(values_.size()));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> values(n);
  std::iota(values.begin(), values.end(), 1);
  return Permutation(std::move(values));
}

Permutation Permutation::parse(std::string_view text) {
  auto w = Word::parse(text);
  auto a = w.letters();
  return Permutation(std::vector<int>(a.begin(), a.end()));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(values_[i]);
  }
  return out;
}

namespace {

std::vector<bool> rl_minimum_flags(const Permutation& p) {
  // flags[v] is true when value v is a right-to-left minimum.
  std::vector<bool> flags(p.size() + 1, false);
  int smallest = static_cast<int>(p.size()) + 1;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] < smallest) {
      smallest = p[i];
      flags[p[i]] = true;
    }
  }
  return flags;
}

void require_avoids(const Word& w, const Pattern& pattern, const char* map) {
  if (contains(w, pattern)) {
    throw PreconditionViolation(std::string(map) + ": " + w.to_string() + " contains " +
                                pattern.to_string());
  }
}

// Positions of letters >= j; the subsequence there is the reduced word.
std::vector<std::size_t> reduced_positions(const std::vector<Letter>& letters, Letter j) {
  std::vector<std::size_t> at;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] >= j) at.push_back(i);
  }
  return at;
}

std::vector<Letter> gather(const std::vector<Letter>& letters,
                           const std::vector<std::size_t>& at) {
  std::vector<Letter> out;
  out.reserve(at.size());
  for (auto i : at) out.push_back(letters[i]);
  return out;
}

void scatter(std::vector<Letter>& letters, const std::vector<std::size_t>& at,
             const std::vector<Letter>& reduced) {
  for (std::size_t t = 0; t < at.size(); ++t) letters[at[t]] = reduced[t];
}

}  // namespace

std::vector<int> rl_minima(const Permutation& p) {
  std::vector<int> out;
  int smallest = static_cast<int>(p.size()) + 1;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] < smallest) {
      smallest = p[i];
      out.push_back(p[i]);
    }
  }
  return out;
}

std::size_t rl_nonminima_count(const Permutation& p) { return p.size() - rl_minima(p).size(); }

// ---------------------------------------------------------------------------
// rho
// ---------------------------------------------------------------------------

Word rho_121_to_112(const Word& w) {
  require_avoids(w, Pattern::parse("121"), "rho");
  auto a = w.letters();
  std::vector<Letter> letters(a.begin(), a.end());
  for (Letter j = 1; j <= w.alphabet_size(); ++j) {
    const auto at = reduced_positions(letters, j);
    const auto reduced = gather(letters, at);
    std::vector<Letter> kept;
    std::size_t excess = 0;
    bool seen = false;
    for (Letter x : reduced) {
      if (x == j && seen) {
        ++excess;
        continue;
      }
      seen = seen || x == j;
      kept.push_back(x);
    }
    kept.insert(kept.end(), excess, j);
    scatter(letters, at, kept);
  }
  return Word(std::move(letters), w.alphabet_size());
}

Word rho_112_to_121(const Word& w) {
  require_avoids(w, Pattern::parse("112"), "rho inverse");
  auto a = w.letters();
  std::vector<Letter> letters(a.begin(), a.end());
  for (Letter j = w.alphabet_size(); j >= 1; --j) {
    const auto at = reduced_positions(letters, j);
    const auto reduced = gather(letters, at);
    auto first = std::find(reduced.begin(), reduced.end(), j);
    if (first == reduced.end()) continue;
    std::vector<Letter> kept(reduced.begin(), first + 1);
    const auto copies = std::count(first + 1, reduced.end(), j);
    kept.insert(kept.end(), static_cast<std::size_t>(copies), j);
    std::copy_if(first + 1, reduced.end(), std::back_inserter(kept),
                 [j](Letter x) { return x != j; });
    scatter(letters, at, kept);
  }
  return Word(std::move(letters), w.alphabet_size());
}

Word rho_general(const Word& w, VmlShape from, VmlShape to) {
  const int total = from.m + from.l;
  if (from.m < 0 || from.l < 0 || to.m < 0 || to.l < 0 || total < 1) {
    throw InvalidArgument("rho_general needs m, l >= 0 and m + l >= 1");
  }
  if (to.m + to.l != total) {
    throw InvalidArgument("rho_general needs m + l = m' + l'");
  }
  require_avoids(w, make_vml(from.m, from.l), "rho_general");
  auto a = w.letters();
  std::vector<Letter> letters(a.begin(), a.end());
  for (Letter j = 1; j <= w.alphabet_size(); ++j) {
    const auto at = reduced_positions(letters, j);
    auto reduced = gather(letters, at);
    const int copies = static_cast<int>(std::count(reduced.begin(), reduced.end(), j));
    const int excess = std::max(0, copies - total + 1);
    if (excess == 0) continue;
    // Excess copies by ordinal among the j's: m..i when l = 0, m+1..i-l+1 otherwise.
    const int first_excess = from.l == 0 ? from.m : from.m + 1;
    std::vector<Letter> kept;
    int ordinal = 0;
    for (Letter x : reduced) {
      if (x == j) {
        ++ordinal;
        if (ordinal >= first_excess && ordinal < first_excess + excess) continue;
      }
      kept.push_back(x);
    }
    std::size_t insert_at = kept.size();
    if (to.l > 0) {
      insert_at = 0;
      for (int seen = 0; seen < to.m; ++insert_at) {
        if (kept[insert_at] == j) ++seen;
      }
    }
    kept.insert(kept.begin() + static_cast<std::ptrdiff_t>(insert_at),
                static_cast<std::size_t>(excess), j);
    scatter(letters, at, kept);
  }
  return Word(std::move(letters), w.alphabet_size());
}

// ---------------------------------------------------------------------------
// Algorithms 1 and 2, and the (pi, e) encoding of 221-avoiders
// ---------------------------------------------------------------------------

Word alg1_perm_to_word(const Permutation& p) {
  const auto is_min = rl_minimum_flags(p);
  std::vector<Letter> s(p.size() + 1, 1);
  Letter level = 1;
  for (std::size_t r = 1; r <= p.size(); ++r) {
    if (!is_min[r]) ++level;
    s[r] = level;
  }
  std::vector<Letter> sigma(p.size());
  for (std::size_t pos = 0; pos < p.size(); ++pos) sigma[pos] = s[p[pos]];
  return Word(std::move(sigma), level);
}

namespace {

Permutation stable_ranks(const Word& w) {
  std::vector<std::size_t> order(w.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return w[x] < w[y]; });
  std::vector<int> pi(w.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    pi[order[rank]] = static_cast<int>(rank) + 1;
  }
  return Permutation(std::move(pi));
}

std::vector<Letter> sorted_letters(const Word& w) {
  auto a = w.letters();
  std::vector<Letter> out(a.begin(), a.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Permutation alg2_word_to_perm(const Word& w) {
  require_avoids(w, Pattern::parse("221"), "alg2");
  if (!w.empty()) {
    std::vector<bool> used(static_cast<std::size_t>(w.alphabet_size()) + 1, false);
    for (Letter x : w.letters()) used[x] = true;
    for (Letter x = 1; x <= w.alphabet_size(); ++x) {
      if (!used[x]) {
        throw PreconditionViolation("alg2: " + w.to_string() + " does not use letter " +
                                    std::to_string(x));
      }
    }
  }
  return stable_ranks(w);
}

ExcessEncoding decompose_221(const Word& w) {
  require_avoids(w, Pattern::parse("221"), "decompose_221");
  ExcessEncoding out;
  out.alphabet = w.alphabet_size();
  out.perm = stable_ranks(w);
  const auto s = sorted_letters(w);
  const auto base = sorted_letters(alg1_perm_to_word(out.perm));
  out.excess.resize(s.size());
  for (std::size_t r = 0; r < s.size(); ++r) out.excess[r] = s[r] - base[r];
  return out;
}

Word compose_221(const ExcessEncoding& encoding) {
  const auto& p = encoding.perm;
  const int k = encoding.alphabet;
  const int j = static_cast<int>(rl_nonminima_count(p));
  if (encoding.excess.size() != p.size()) {
    throw PreconditionViolation("compose_221: excess sequence must have length " +
                                std::to_string(p.size()));
  }
  for (std::size_t r = 0; r < encoding.excess.size(); ++r) {
    const int e = encoding.excess[r];
    if (e < 0 || e > k - j - 1 || (r > 0 && e < encoding.excess[r - 1])) {
      throw PreconditionViolation("compose_221: excess must be nondecreasing in [0, " +
                                  std::to_string(k - j - 1) + "]");
    }
  }
  auto s = sorted_letters(alg1_perm_to_word(p));
  for (std::size_t r = 0; r < s.size(); ++r) s[r] += encoding.excess[r];
  std::vector<Letter> sigma(p.size());
  for (std::size_t pos = 0; pos < p.size(); ++pos) sigma[pos] = s[p[pos] - 1];
  return Word(std::move(sigma), k);
}

}  // namespace avoidance
