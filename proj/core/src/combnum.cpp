#include "avoidance/combnum.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <vector>

namespace avoidance {

BigInt factorial(long n) {
  if (n < 0) return 0;
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt binomial(long n, long r) {
  if (n < 0 || r < 0 || r > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

BigInt multiset_count(long letters, long length) {
  if (letters < 0 || length < 0) return 0;
  if (length == 0) return 1;
  return binomial(letters + length - 1, length);
}

BigInt falling_factorial(long k, long i) {
  if (i < 0) return 0;
  BigInt out = 1;
  for (long t = 0; t < i; ++t) out *= BigInt(k - t);
  return out;
}

BigInt catalan(long n) {
  if (n < 0) return 0;
  return binomial(2 * n, n) / BigInt(n + 1);
}

BigInt central_binomial(long t) { return binomial(2 * t, t); }

namespace {

std::mutex stirling_mutex;
std::vector<std::vector<BigInt>> stirling_rows{{BigInt(1)}};

std::mutex partition_mutex;
// max_block -> rows M(n, .) for n = 0, 1, ...
std::map<long, std::vector<std::vector<BigInt>>> partition_tables;

}  // namespace

BigInt stirling1_unsigned(long n, long j) {
  if (n < 0 || j < 0 || j > n) return 0;
  std::lock_guard lock(stirling_mutex);
  while (static_cast<long>(stirling_rows.size()) <= n) {
    const long m = static_cast<long>(stirling_rows.size());  // building row m
    const auto& prev = stirling_rows.back();
    std::vector<BigInt> row(static_cast<std::size_t>(m) + 1);
    for (long t = 0; t <= m; ++t) {
      BigInt value = 0;
      if (t >= 1 && t - 1 <= m - 1) value += prev[t - 1];
      if (t <= m - 1) value += BigInt(m - 1) * prev[t];
      row[t] = value;
    }
    stirling_rows.push_back(std::move(row));
  }
  return stirling_rows[n][j];
}

BigInt bessel_first(long r, long s) {
  if (s < 0 || s > r) return 0;
  BigInt denominator = factorial(r - s) * factorial(s);
  mpz_mul_2exp(denominator.get_mpz_t(), denominator.get_mpz_t(), static_cast<unsigned long>(s));
  return factorial(r + s) / denominator;
}

BigInt bounded_partitions(long n, long i, long max_block) {
  if (n < 0 || i < 0 || max_block < 0 || i > n) return 0;
  std::lock_guard lock(partition_mutex);
  auto& rows = partition_tables[max_block];
  if (rows.empty()) rows.push_back({BigInt(1)});  // M(0, 0) = 1
  while (static_cast<long>(rows.size()) <= n) {
    // The block holding the first element has size s and picks its other
    // s - 1 members from the remaining m - 1 elements.
    const long m = static_cast<long>(rows.size());
    std::vector<BigInt> row(static_cast<std::size_t>(m) + 1, BigInt(0));
    for (long blocks = 1; blocks <= m; ++blocks) {
      BigInt value = 0;
      for (long s = 1; s <= std::min(max_block, m); ++s) {
        const auto& rest = rows[m - s];
        if (blocks - 1 < static_cast<long>(rest.size())) {
          value += binomial(m - 1, s - 1) * rest[blocks - 1];
        }
      }
      row[blocks] = value;
    }
    rows.push_back(std::move(row));
  }
  return rows[n][i];
}

BigInt a_coeff(long k, long j) {
  if (j < 0 || j > k) return 0;
  BigInt sum = 0;
  for (long m = j; m <= k; ++m) sum += catalan(m) * central_binomial(k - m);
  return sum;
}

}  // namespace avoidance
