#include "avoidance/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <thread>

#include "avoidance/errors.hpp"

namespace avoidance {

std::uint64_t max_candidates_from_environment() {
  const char* raw = std::getenv("AVOIDANCE_LAB_MAX_CANDIDATES");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxCandidates;
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(raw, raw + std::strlen(raw), value);
  if (ec != std::errc{} || *ptr != '\0') {
    throw InvalidArgument(std::string("AVOIDANCE_LAB_MAX_CANDIDATES is not a count: ") + raw);
  }
  return value;
}

void check_candidate_budget(int n, int k, std::uint64_t max_candidates) {
  if (n < 0 || k < 0) throw InvalidArgument("n and k must be nonnegative");
  BigInt space;
  mpz_ui_pow_ui(space.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(n));
  if (space > BigInt(std::to_string(max_candidates))) {
    throw TooLarge("[" + std::to_string(k) + "]^" + std::to_string(n) + " has " +
                   to_decimal(space) + " candidate words, above the ceiling of " +
                   std::to_string(max_candidates));
  }
}

namespace {

unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Visits every avoider with a fixed first letter, in lexicographic order.
// Because containment is preserved by extension, a prefix that contains a
// pattern is abandoned, and only occurrences ending at the newest letter
// need checking.
template <typename Visit>
class PrunedSearch {
 public:
  PrunedSearch(int n, int k, const PatternSet& set, Visit& visit)
      : n_(n), k_(k), set_(set), buffer_(static_cast<std::size_t>(n)), visit_(visit) {}

  void run_from(Letter first) { place(0, first, first); }

 private:
  void place(int depth, Letter from, Letter to) {
    for (Letter a = from; a <= to; ++a) {
      buffer_[depth] = a;
      std::span<const Letter> prefix(buffer_.data(), static_cast<std::size_t>(depth) + 1);
      bool blocked = false;
      for (const auto& p : set_) {
        if (contains(prefix, p, /*anchor_last=*/true)) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      if (depth + 1 == n_) {
        visit_(std::span<const Letter>(buffer_));
      } else {
        place(depth + 1, 1, k_);
      }
    }
  }

  int n_;
  int k_;
  const PatternSet& set_;
  std::vector<Letter> buffer_;
  Visit& visit_;
};

// Odometer over all of [k]^n with a full containment test per word.
template <typename Visit>
void naive_search(int n, int k, Letter first, const PatternSet& set, Visit& visit) {
  std::vector<Letter> word(static_cast<std::size_t>(n), 1);
  word[0] = first;
  while (true) {
    bool avoids = true;
    for (const auto& p : set) {
      if (contains(std::span<const Letter>(word), p)) {
        avoids = false;
        break;
      }
    }
    if (avoids) visit(std::span<const Letter>(word));
    int pos = n - 1;
    while (pos >= 1 && word[pos] == k) word[pos--] = 1;
    if (pos < 1) break;
    ++word[pos];
  }
}

template <typename Visit>
void search_first_letter(int n, int k, Letter first, const PatternSet& set,
                         SearchStrategy strategy, Visit& visit) {
  if (strategy == SearchStrategy::naive) {
    naive_search(n, k, first, set, visit);
  } else {
    PrunedSearch<Visit>(n, k, set, visit).run_from(first);
  }
}

// Runs `job(first_letter)` for every first letter 1..k across the workers.
// Results are stored per first letter by the job itself, so the caller can
// combine them in a fixed order regardless of scheduling.
template <typename Job>
void for_each_first_letter(int k, unsigned workers, Job job) {
  workers = std::min<unsigned>(resolve_workers(workers), static_cast<unsigned>(k));
  if (workers <= 1) {
    for (Letter a = 1; a <= k; ++a) job(a);
    return;
  }
  std::atomic<int> next{1};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int a = next.fetch_add(1); a <= k; a = next.fetch_add(1)) job(a);
    });
  }
}

}  // namespace

std::vector<Word> enumerate_avoiders(int n, int k, const PatternSet& set,
                                     const OracleOptions& options) {
  check_candidate_budget(n, k, options.max_candidates);
  if (n == 0) {
    // The empty word avoids every nonempty pattern.
    return {Word({}, k)};
  }
  if (k == 0) return {};
  std::vector<std::vector<Word>> per_letter(static_cast<std::size_t>(k));
  for_each_first_letter(k, options.workers, [&](Letter first) {
    auto& out = per_letter[first - 1];
    auto visit = [&](std::span<const Letter> w) {
      out.emplace_back(std::vector<Letter>(w.begin(), w.end()), k);
    };
    search_first_letter(n, k, first, set, options.strategy, visit);
  });
  std::vector<Word> all;
  for (auto& chunk : per_letter) std::move(chunk.begin(), chunk.end(), std::back_inserter(all));
  return all;
}

BigInt count_avoiders(int n, int k, const PatternSet& set, const OracleOptions& options) {
  check_candidate_budget(n, k, options.max_candidates);
  if (n == 0) return 1;
  if (k == 0) return 0;
  // k^n is within the ceiling, so per-letter counts fit in 64 bits.
  std::vector<std::uint64_t> per_letter(static_cast<std::size_t>(k), 0);
  for_each_first_letter(k, options.workers, [&](Letter first) {
    std::uint64_t count = 0;
    auto visit = [&](std::span<const Letter>) { ++count; };
    search_first_letter(n, k, first, set, options.strategy, visit);
    per_letter[first - 1] = count;
  });
  BigInt total = 0;
  for (auto c : per_letter) total += BigInt(std::to_string(c));
  return total;
}

// ---------------------------------------------------------------------------
// CountTable
// ---------------------------------------------------------------------------

CountTable::CountTable(PatternSet set, int n_max, int k_max, std::string provenance)
    : set_(std::move(set)), n_max_(n_max), k_max_(k_max), provenance_(std::move(provenance)) {
  if (n_max < 0 || k_max < 0) throw InvalidArgument("grid bounds must be nonnegative");
  entries_.assign(static_cast<std::size_t>(n_max + 1) * static_cast<std::size_t>(k_max + 1),
                  BigInt(0));
}

std::size_t CountTable::index(int n, int k) const {
  if (n < 0 || n > n_max_ || k < 0 || k > k_max_) {
    throw InvalidArgument("grid point (" + std::to_string(n) + "," + std::to_string(k) +
                          ") outside table");
  }
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(k_max_ + 1) +
         static_cast<std::size_t>(k);
}

const BigInt& CountTable::at(int n, int k) const { return entries_[index(n, k)]; }

void CountTable::set(int n, int k, BigInt value) { entries_[index(n, k)] = std::move(value); }

bool CountTable::same_counts(const CountTable& other) const {
  return n_max_ == other.n_max_ && k_max_ == other.k_max_ && entries_ == other.entries_;
}

CountTable build_table(const PatternSet& set, int n_max, int k_max, const OracleOptions& options) {
  CountTable table(set, n_max, k_max, kOracleProvenance);
  check_candidate_budget(n_max, k_max, options.max_candidates);
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= k_max; ++k) table.set(n, k, count_avoiders(n, k, set, options));
  }
  return table;
}

}  // namespace avoidance
