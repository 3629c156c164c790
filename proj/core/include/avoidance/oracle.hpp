#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "avoidance/numeric.hpp"
#include "avoidance/words.hpp"

namespace avoidance {

inline constexpr std::uint64_t kDefaultMaxCandidates = 100'000'000;

enum class SearchStrategy {
  pruned,  // depth-first over prefixes, abandoning any prefix that already contains a pattern
  naive,   // generate all k^n words and filter
};

struct OracleOptions {
  // Refuse any (n, k) with k^n above this many candidate words.
  std::uint64_t max_candidates = kDefaultMaxCandidates;
  // 0 means one worker per hardware thread.
  unsigned workers = 1;
  SearchStrategy strategy = SearchStrategy::pruned;
};

// Reads AVOIDANCE_LAB_MAX_CANDIDATES, falling back to the default ceiling.
std::uint64_t max_candidates_from_environment();

// Throws TooLarge when k^n exceeds the ceiling.
void check_candidate_budget(int n, int k, std::uint64_t max_candidates);

// The words of [k]^n avoiding every pattern in the set, in lexicographic order.
std::vector<Word> enumerate_avoiders(int n, int k, const PatternSet& set,
                                     const OracleOptions& options = {});

BigInt count_avoiders(int n, int k, const PatternSet& set, const OracleOptions& options = {});

// Exact counts f_T(n, k) on the full grid [0..n_max] x [0..k_max].
class CountTable {
 public:
  CountTable(PatternSet set, int n_max, int k_max, std::string provenance);

  const PatternSet& pattern_set() const noexcept { return set_; }
  int n_max() const noexcept { return n_max_; }
  int k_max() const noexcept { return k_max_; }
  const std::string& provenance() const noexcept { return provenance_; }

  const BigInt& at(int n, int k) const;
  void set(int n, int k, BigInt value);

  // Equal counts on every grid point; provenance is not compared.
  bool same_counts(const CountTable& other) const;
  bool operator==(const CountTable& other) const = default;

 private:
  std::size_t index(int n, int k) const;

  PatternSet set_;
  int n_max_;
  int k_max_;
  std::string provenance_;
  std::vector<BigInt> entries_;
};

inline const std::string kOracleProvenance = "oracle";
inline std::string claim_provenance(const std::string& id) { return "claim:" + id; }

CountTable build_table(const PatternSet& set, int n_max, int k_max,
                       const OracleOptions& options = {});

}  // namespace avoidance
